use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::quaternion::Quaternion;
use super::scalar::{dot, Scalar, Vec3};
use crate::error::{Error, Result};

/// Dual quaternion `p + ε q` with `ε² = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualQuaternion {
    pub primal: Quaternion,
    pub dual: Quaternion,
}

/// Dual number `a + ε b`; only ever the value of a norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DualNumber {
    pub re: Scalar,
    pub eps: Scalar,
}

impl DualQuaternion {
    pub fn new(primal: Quaternion, dual: Quaternion) -> Self {
        Self { primal, dual }
    }

    pub fn from_primal(primal: Quaternion) -> Self {
        Self::new(primal, Quaternion::zero())
    }

    pub fn real(s: Scalar) -> Self {
        Self::from_primal(Quaternion::real(s))
    }

    /// From the eight components `[p0, p1, p2, p3, q0, q1, q2, q3]`.
    pub fn from_components(c: [Scalar; 8]) -> Self {
        let [p0, p1, p2, p3, q0, q1, q2, q3] = c;
        Self::new(Quaternion::new(p0, p1, p2, p3), Quaternion::new(q0, q1, q2, q3))
    }

    pub fn components(&self) -> [Scalar; 8] {
        let [p0, p1, p2, p3] = self.primal.components();
        let [q0, q1, q2, q3] = self.dual.components();
        [p0, p1, p2, p3, q0, q1, q2, q3]
    }

    /// Pure translation by `v`: `1 - ε v / 2`.
    pub fn translation(v: &Vec3) -> Self {
        let half = Scalar::new(1.into(), 2.into());
        Self::new(Quaternion::one(), -Quaternion::pure(v).scale(&half))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.primal.conj(), self.dual.conj())
    }

    pub(crate) fn norm(&self) -> DualNumber {
        DualNumber { re: self.primal.norm(), eps: Scalar::from_integer(2.into()) * self.primal.inner(&self.dual) }
    }

    /// True when `h * conj(h)` has no ε part.
    pub fn has_real_norm(&self) -> bool {
        self.primal.inner(&self.dual).is_zero()
    }

    /// Real norm `p * conj(p)`, provided the ε part of the norm vanishes.
    pub fn real_norm(&self) -> Option<Scalar> {
        self.has_real_norm().then(|| self.primal.norm())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.primal.scale(s), self.dual.scale(s))
    }

    pub fn is_real(&self) -> bool {
        self.primal.is_real() && self.dual.is_zero()
    }

    /// `N(h)^{-1} conj(h)` with `(a + ε b)^{-1} = a^{-1} - ε b a^{-2}`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.re.is_zero() {
            return Err(Error::NotInvertible);
        }
        let a_inv = n.re.recip();
        let b_term = -(&n.eps * &a_inv * &a_inv);
        let c = self.conj();
        Ok(Self::new(c.primal.scale(&a_inv), &c.dual.scale(&a_inv) + &c.primal.scale(&b_term)))
    }

    /// Rigid displacement of `z` under `h`: `(p z p̄ + p q̄ - q p̄) / N(p)`.
    pub fn act_on_point(&self, z: &Vec3) -> Result<Vec3> {
        let n = self.real_norm().ok_or(Error::DegenerateActor)?;
        if n.is_zero() {
            return Err(Error::DegenerateActor);
        }
        let p = &self.primal;
        let q = &self.dual;
        let zq = Quaternion::pure(z);
        let img = &(&(p * &zq) * &p.conj()) + &(&(p * &q.conj()) - &(q * &p.conj()));
        let inv = n.recip();
        Ok([&img.x * &inv, &img.y * &inv, &img.z * &inv])
    }

    /// `T h T^{-1}` for the translation `T` by `v`.
    pub fn translated(&self, v: &Vec3) -> Self {
        let t = Self::translation(v);
        let t_inv = Self::translation(&[-&v[0], -&v[1], -&v[2]]);
        &(&t * self) * &t_inv
    }

    /// Scalar part of the dual component vanishes and primal/dual are orthogonal.
    pub(crate) fn rotation_defect(&self) -> Option<&'static str> {
        if !self.dual.w.is_zero() {
            return Some("h + conj(h) has a dual part");
        }
        if !dot(&self.primal.vector(), &self.dual.vector()).is_zero() {
            return Some("h * conj(h) has a dual part");
        }
        if self.primal.is_real() {
            return Some("primal vector part is zero");
        }
        None
    }
}

impl Zero for DualQuaternion {
    fn zero() -> Self {
        Self::new(Quaternion::zero(), Quaternion::zero())
    }
    fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }
}

impl One for DualQuaternion {
    fn one() -> Self {
        Self::from_primal(Quaternion::one())
    }
}

impl<'a> Add<&'a DualQuaternion> for &'a DualQuaternion {
    type Output = DualQuaternion;
    fn add(self, o: &DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(&self.primal + &o.primal, &self.dual + &o.dual)
    }
}

impl<'a> Sub<&'a DualQuaternion> for &'a DualQuaternion {
    type Output = DualQuaternion;
    fn sub(self, o: &DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(&self.primal - &o.primal, &self.dual - &o.dual)
    }
}

impl<'a> Mul<&'a DualQuaternion> for &'a DualQuaternion {
    type Output = DualQuaternion;
    fn mul(self, o: &DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(&self.primal * &o.primal, &(&self.primal * &o.dual) + &(&self.dual * &o.primal))
    }
}

impl Neg for &DualQuaternion {
    type Output = DualQuaternion;
    fn neg(self) -> DualQuaternion {
        DualQuaternion::new(-&self.primal, -&self.dual)
    }
}

forward_owned_ops!(DualQuaternion);

impl From<Quaternion> for DualQuaternion {
    fn from(p: Quaternion) -> Self {
        Self::from_primal(p)
    }
}

impl fmt::Display for DualQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dual.is_zero() {
            write!(f, "{}", self.primal)
        } else {
            write!(f, "{} + ε({})", self.primal, self.dual)
        }
    }
}

impl fmt::Debug for DualQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, ratio, vec3i};

    fn dq(p: Quaternion, q: Quaternion) -> DualQuaternion {
        DualQuaternion::new(p, q)
    }

    // Component-wise product over the 8-dimensional basis, written out
    // independently of the quaternion routine.
    fn brute_mul(a: &DualQuaternion, b: &DualQuaternion) -> DualQuaternion {
        // table[u][v] = (sign, index) of e_u * e_v for e = [1, i, j, k]
        let table: [[(i64, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let ac = a.components();
        let bc = b.components();
        let mut out: Vec<Scalar> = vec![Scalar::zero(); 8];
        for u in 0..8 {
            for v in 0..8 {
                if u >= 4 && v >= 4 {
                    continue;
                }
                let (s, idx) = table[u % 4][v % 4];
                let slot = idx + if u >= 4 || v >= 4 { 4 } else { 0 };
                out[slot] += int(s) * &ac[u] * &bc[v];
            }
        }
        DualQuaternion::from_components(out.try_into().unwrap())
    }

    #[test]
    fn dual_product_matches_brute_force() {
        let a = dq(Quaternion::j(), Quaternion::k());
        let b = dq(-Quaternion::j(), -Quaternion::k());
        assert_eq!(&a * &b, DualQuaternion::one());
        assert_eq!(brute_mul(&a, &b), DualQuaternion::one());
        let c = DualQuaternion::from_components([
            int(1),
            ratio(1, 2),
            int(-3),
            int(2),
            int(0),
            int(5),
            ratio(-2, 3),
            int(1),
        ]);
        let d =
            DualQuaternion::from_components([int(-2), int(1), int(4), ratio(1, 7), int(3), int(0), int(-1), int(2)]);
        assert_eq!(&c * &d, brute_mul(&c, &d));
    }

    #[test]
    fn inverse_examples() {
        let k = DualQuaternion::from_primal(Quaternion::k());
        assert_eq!(k.inverse().unwrap(), -&k);
        assert_eq!(DualQuaternion::real(int(2)).inverse().unwrap(), DualQuaternion::real(ratio(1, 2)));
        let h = DualQuaternion::from_primal(&(-Quaternion::k()) - &Quaternion::j().scale(&ratio(1, 2)));
        let expected = DualQuaternion::from_primal(Quaternion::new(int(0), int(0), ratio(2, 5), ratio(4, 5)));
        assert_eq!(h.inverse().unwrap(), expected);
        assert_eq!(&h * &expected, DualQuaternion::one());
        assert_eq!(DualQuaternion::zero().inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn inverse_with_dual_norm_part() {
        let h = DualQuaternion::from_components([int(1), int(2), int(0), int(1), int(3), int(-1), int(2), int(0)]);
        let inv = h.inverse().unwrap();
        assert_eq!(&h * &inv, DualQuaternion::one());
        assert_eq!(&inv * &h, DualQuaternion::one());
    }

    #[test]
    fn action_examples() {
        let id = DualQuaternion::one();
        assert_eq!(id.act_on_point(&vec3i(1, 2, 3)).unwrap(), vec3i(1, 2, 3));
        let i = DualQuaternion::from_primal(Quaternion::i());
        assert_eq!(i.act_on_point(&vec3i(0, 1, 0)).unwrap(), vec3i(0, -1, 0));
        let c = vec3i(3, -1, 4);
        let t = DualQuaternion::translation(&c);
        assert_eq!(t.act_on_point(&vec3i(0, 0, 0)).unwrap(), c);
    }

    #[test]
    fn action_rejects_degenerate() {
        let bad = dq(Quaternion::one(), Quaternion::one());
        assert_eq!(bad.act_on_point(&vec3i(0, 0, 0)), Err(Error::DegenerateActor));
        let zero_primal = dq(Quaternion::zero(), Quaternion::i());
        assert_eq!(zero_primal.act_on_point(&vec3i(0, 0, 0)), Err(Error::DegenerateActor));
    }
}
