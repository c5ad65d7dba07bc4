use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{DualQuaternion, Quaternion, Scalar};

/// Coefficient ring of a polynomial: an associative algebra over the
/// rationals with a conjugation.
pub trait Coeff: Clone + PartialEq + Zero + One + fmt::Display + fmt::Debug {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn conj(&self) -> Self;
    /// Two-sided inverse, if one exists.
    fn try_inverse(&self) -> Option<Self>;
    fn from_scalar(s: Scalar) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
}

macro_rules! ref_arith {
    () => {
        fn add_ref(&self, o: &Self) -> Self {
            self + o
        }
        fn sub_ref(&self, o: &Self) -> Self {
            self - o
        }
        fn mul_ref(&self, o: &Self) -> Self {
            self * o
        }
        fn neg_ref(&self) -> Self {
            -self
        }
    };
}

impl Coeff for Scalar {
    ref_arith!();
    fn conj(&self) -> Self {
        self.clone()
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
}

impl Coeff for Quaternion {
    ref_arith!();
    fn conj(&self) -> Self {
        Quaternion::conj(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
    fn from_scalar(s: Scalar) -> Self {
        Quaternion::real(s)
    }
    fn scale(&self, s: &Scalar) -> Self {
        Quaternion::scale(self, s)
    }
}

impl Coeff for DualQuaternion {
    ref_arith!();
    fn conj(&self) -> Self {
        DualQuaternion::conj(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn from_scalar(s: Scalar) -> Self {
        DualQuaternion::real(s)
    }
    fn scale(&self, s: &Scalar) -> Self {
        DualQuaternion::scale(self, s)
    }
}

/// Polynomial `Σ c_i t^i`; the coefficient list never ends in a zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type RealPoly = Poly<Scalar>;
pub type QuatPoly = Poly<Quaternion>;
pub type DualQuatPoly = Poly<DualQuaternion>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// Linear polynomial `t - h`.
    pub fn linear(h: &T) -> Self {
        Self::new(vec![h.neg_ref(), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lcoeff(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient-wise conjugate; satisfies `conj(AB) = conj(B) conj(A)`.
    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(Coeff::conj).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// `c · self`.
    pub fn mul_left(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| c.mul_ref(a)).collect())
    }

    /// `self · c`.
    pub fn mul_right(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// `self · t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Right evaluation `Σ c_i h^i`, powers of `h` multiplied on the right.
    ///
    /// For non-commuting coefficients this is not a ring homomorphism:
    /// `(AB)(h)` generally differs from `A(h) B(h)`. It does satisfy
    /// `(AB)(h) = 0` whenever `B(h) = 0`.
    pub fn eval(&self, h: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(h).add_ref(c);
        }
        acc
    }

    /// Value at infinity in the sense of the leading coefficient.
    pub fn eval_at_infinity(&self) -> T {
        self.lcoeff()
    }

    pub fn map<U: Coeff, F: Fn(&T) -> U>(&self, f: F) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// `self · lcoeff(self)^{-1}`, if the leading coefficient is invertible.
    pub fn make_monic_right(&self) -> Option<Self> {
        let inv = self.lcoeff().try_inverse()?;
        Some(self.mul_right(&inv))
    }

    /// `lcoeff(self)^{-1} · self`.
    pub fn make_monic_left(&self) -> Option<Self> {
        let inv = self.lcoeff().try_inverse()?;
        Some(self.mul_left(&inv))
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a, T: Coeff> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).add_ref(&o.coeff(i))).collect())
    }
}

impl<'a, T: Coeff> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).sub_ref(&o.coeff(i))).collect())
    }
}

impl<'a, T: Coeff> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(Coeff::neg_ref).collect())
    }
}

macro_rules! forward_poly_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl<T: Coeff> $trait for Poly<T>
        {
            type Output = Poly<T>;
            fn $method(self, o: Poly<T>) -> Poly<T> {
                (&self).$method(&o)
            }
        }
        impl<T: Coeff> $trait<&Poly<T>> for Poly<T>
        {
            type Output = Poly<T>;
            fn $method(self, o: &Poly<T>) -> Poly<T> {
                (&self).$method(o)
            }
        }
    )*};
}

forward_poly_ops!(Add add, Sub sub, Mul mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl RealPoly {
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| crate::algebra::int(v)).collect())
    }

    pub fn to_quat(&self) -> QuatPoly {
        self.map(|c| Quaternion::real(c.clone()))
    }

    pub fn to_dual_quat(&self) -> DualQuatPoly {
        self.map(|c| DualQuaternion::real(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Scalar::from_integer(i.into())).collect())
    }

    /// Monic associate; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        self.make_monic_right().unwrap_or_else(Self::zero)
    }
}

impl QuatPoly {
    /// Component polynomials `[w, x, y, z]` with `P = w + x i + y j + z k`.
    pub fn components(&self) -> [RealPoly; 4] {
        [self.map(|q| q.w.clone()), self.map(|q| q.x.clone()), self.map(|q| q.y.clone()), self.map(|q| q.z.clone())]
    }

    pub fn from_components(c: &[RealPoly; 4]) -> Self {
        let n = c.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        Self::new((0..n).map(|i| Quaternion::new(c[0].coeff(i), c[1].coeff(i), c[2].coeff(i), c[3].coeff(i))).collect())
    }

    /// Real part of the polynomial, if every coefficient is real.
    pub fn as_real(&self) -> Option<RealPoly> {
        self.coeffs.iter().all(Quaternion::is_real).then(|| self.map(|q| q.w.clone()))
    }

    /// `P conj(P)`, always real.
    pub fn norm_poly(&self) -> RealPoly {
        (self * &self.conj()).map(|q| q.w.clone())
    }

    pub fn to_dual(&self) -> DualQuatPoly {
        self.map(|q| DualQuaternion::from_primal(q.clone()))
    }
}

impl DualQuatPoly {
    pub fn from_parts(primal: &QuatPoly, dual: &QuatPoly) -> Self {
        let n = primal.coeffs().len().max(dual.coeffs().len());
        Self::new((0..n).map(|i| DualQuaternion::new(primal.coeff(i), dual.coeff(i))).collect())
    }

    pub fn primal(&self) -> QuatPoly {
        self.map(|h| h.primal.clone())
    }

    pub fn dual(&self) -> QuatPoly {
        self.map(|h| h.dual.clone())
    }
}

fn fmt_terms(terms: Vec<(String, usize)>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    let parts: Vec<String> = terms
        .into_iter()
        .map(|(c, k)| {
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                c
            } else if c == "1" {
                var
            } else if c == "-1" {
                format!("-{var}")
            } else if c.contains(' ') {
                format!("({c}){var}")
            } else {
                format!("{c}{var}")
            }
        })
        .collect();
    write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.to_string(), k))
            .collect();
        fmt_terms(terms, f)
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
