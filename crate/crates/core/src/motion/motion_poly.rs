use std::fmt;

use num_traits::Zero;

use super::curve::RationalCurve;
use crate::algebra::scalar::{int, Vec3};
use crate::algebra::{DualQuaternion, Quaternion, Scalar};
use crate::error::{Error, Result};
use crate::polynomials::{count_real_roots, mrpf, real_gcd, DualQuatPoly, QuatPoly, RealPoly};

/// Polynomial `C = P + εQ` over the dual quaternions satisfying the Study
/// condition `P conj(Q) + Q conj(P) = 0`, with invertible leading
/// coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct MotionPolynomial {
    value: DualQuatPoly,
}

impl MotionPolynomial {
    pub fn new(value: DualQuatPoly) -> Result<Self> {
        let p = value.primal();
        let q = value.dual();
        if p.is_zero() {
            return Err(Error::NotMotionPolynomial("primal part is zero".into()));
        }
        if value.lcoeff().primal.is_zero() {
            return Err(Error::NotMotionPolynomial("leading coefficient not invertible".into()));
        }
        if !(&(&p * &q.conj()) + &(&q * &p.conj())).is_zero() {
            return Err(Error::NotMotionPolynomial(format!("{value} violates the Study condition")));
        }
        Ok(Self { value })
    }

    pub fn from_parts(p: &QuatPoly, q: &QuatPoly) -> Result<Self> {
        Self::new(DualQuatPoly::from_parts(p, q))
    }

    /// Product of linear rotation factors `(t - h_1)···(t - h_n)`.
    pub fn from_linear_factors(hs: &[DualQuaternion]) -> Result<Self> {
        let prod = hs.iter().fold(DualQuatPoly::one(), |acc, h| &acc * &DualQuatPoly::linear(h));
        Self::new(prod)
    }

    pub fn value(&self) -> &DualQuatPoly {
        &self.value
    }

    pub fn primal(&self) -> QuatPoly {
        self.value.primal()
    }

    pub fn dual(&self) -> QuatPoly {
        self.value.dual()
    }

    pub fn degree(&self) -> usize {
        self.value.degree()
    }

    pub fn is_monic(&self) -> bool {
        self.value.is_monic()
    }

    /// The real norm polynomial `C conj(C) = P conj(P)`.
    pub fn norm_poly(&self) -> RealPoly {
        self.primal().norm_poly()
    }

    pub fn is_bounded(&self) -> bool {
        count_real_roots(&self.norm_poly()).map(|n| n == 0).unwrap_or(false)
    }

    /// `gcd(mrpf(P), Q conj(Q)) = 1`.
    pub fn is_tame(&self) -> bool {
        let g = real_gcd(&mrpf(&self.primal()), &self.dual().norm_poly());
        g.degree() == 0
    }

    /// `mrpf(P) = 1`.
    pub fn is_generic(&self) -> bool {
        mrpf(&self.primal()).degree() == 0
    }

    /// Homogeneous trajectory of the origin, `P conj(P) + 2 P conj(Q)`.
    pub fn trajectory_poly(&self) -> QuatPoly {
        let p = self.primal();
        let q = self.dual();
        &p * &p.conj() + (&p * &q.conj()).scale(&int(2))
    }

    /// Homogeneous trajectory of the point `z`:
    /// `P conj(P) + P z conj(P) + P conj(Q) - Q conj(P)`.
    pub fn trajectory_poly_of(&self, z: &Vec3) -> QuatPoly {
        let p = self.primal();
        let q = self.dual();
        let zp = QuatPoly::constant(Quaternion::pure(z));
        let pc = p.conj();
        &(&p * &pc) + &(&(&(&p * &zp) * &pc) + &(&(&p * &q.conj()) - &(&q * &pc)))
    }

    /// Reduced trajectory of the origin.
    pub fn trajectory(&self) -> Result<RationalCurve> {
        RationalCurve::from_quat(&self.trajectory_poly())
    }

    /// Displacement at a finite parameter.
    pub fn eval_at(&self, t: &Scalar) -> DualQuaternion {
        self.value.eval(&DualQuaternion::real(t.clone()))
    }

    /// Displacement at `t = ∞`, the leading coefficient.
    pub fn at_infinity(&self) -> DualQuaternion {
        self.value.lcoeff()
    }
}

impl fmt::Display for MotionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for MotionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
