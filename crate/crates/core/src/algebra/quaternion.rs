use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{fmt_scalar, int, Scalar, Vec3};

/// Quaternion `w + x i + y j + z k` with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Scalar,
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

impl Quaternion {
    pub fn new(w: Scalar, x: Scalar, y: Scalar, z: Scalar) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(int(w), int(x), int(y), int(z))
    }

    pub fn real(w: Scalar) -> Self {
        Self::new(w, Scalar::zero(), Scalar::zero(), Scalar::zero())
    }

    /// Pure quaternion with vector part `v`.
    pub fn pure(v: &Vec3) -> Self {
        Self::new(Scalar::zero(), v[0].clone(), v[1].clone(), v[2].clone())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn vector(&self) -> Vec3 {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn components(&self) -> [Scalar; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `h * conj(h)`, a non-negative scalar.
    pub fn norm(&self) -> Scalar {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// Four-dimensional Euclidean inner product; equals the scalar part of `a * conj(b)`.
    pub fn inner(&self, other: &Self) -> Scalar {
        &self.w * &other.w + &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(s * &self.w, s * &self.x, s * &self.y, s * &self.z)
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&n.recip()))
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl Zero for Quaternion {
    fn zero() -> Self {
        Self::real(Scalar::zero())
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.is_real()
    }
}

impl One for Quaternion {
    fn one() -> Self {
        Self::real(Scalar::one())
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a, b) = (self, o);
        Quaternion::new(
            &a.w * &b.w - &a.x * &b.x - &a.y * &b.y - &a.z * &b.z,
            &a.w * &b.x + &a.x * &b.w + &a.y * &b.z - &a.z * &b.y,
            &a.w * &b.y - &a.x * &b.z + &a.y * &b.w + &a.z * &b.x,
            &a.w * &b.z + &a.x * &b.y - &a.y * &b.x + &a.z * &b.w,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

forward_owned_ops!(Quaternion);

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (c, unit) in [(&self.w, ""), (&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if c.is_zero() {
                continue;
            }
            let s = fmt_scalar(c);
            terms.push(match (s.as_str(), unit) {
                ("1", u) if !u.is_empty() => u.to_string(),
                ("-1", u) if !u.is_empty() => format!("-{u}"),
                _ => format!("{s}{unit}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ratio;

    #[test]
    fn unit_products() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&k * &j, -&i);
        assert_eq!(&j * &k, i);
        assert_eq!(&(&i * &j) * &k, -Quaternion::one());
        assert_eq!(&i * &i, -Quaternion::one());
    }

    #[test]
    fn inverse_and_norm() {
        let h = Quaternion::new(ratio(1, 2), int(1), int(-2), int(3));
        let inv = h.inverse().unwrap();
        assert_eq!(&h * &inv, Quaternion::one());
        assert_eq!(h.norm(), ratio(57, 4));
        assert!(Quaternion::zero().inverse().is_none());
    }

    #[test]
    fn display() {
        let h = Quaternion::new(int(1), int(0), ratio(-1, 2), int(2));
        assert_eq!(h.to_string(), "1 - 1/2j + 2k");
    }
}
