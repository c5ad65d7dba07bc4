use std::fmt;

use num_traits::Zero;

use super::dual_quaternion::DualQuaternion;
use super::line::PlueckerLine;
use super::quaternion::Quaternion;
use super::scalar::{cross, int, Scalar, Vec3};
use crate::error::{Error, Result};
use crate::polynomials::RealPoly;

/// Dual quaternion `h` for which `t - h` parameterizes a rotation about a
/// fixed axis: `h + conj(h)` and `h conj(h)` are real and the primal vector
/// part is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RotationQuaternion(DualQuaternion);

impl RotationQuaternion {
    pub fn new(value: DualQuaternion) -> Result<Self> {
        match value.rotation_defect() {
            None => Ok(Self(value)),
            Some(why) => Err(Error::NotRotation(format!("{value}: {why}"))),
        }
    }

    /// Rotation with scalar part `s`, vector part `v`, about the line through
    /// `center` parallel to `v`.
    pub fn about(s: Scalar, v: &Vec3, center: &Vec3) -> Result<Self> {
        let primal = Quaternion::new(s, v[0].clone(), v[1].clone(), v[2].clone());
        Self::new(DualQuaternion::new(primal, Quaternion::pure(&cross(v, center))))
    }

    pub fn value(&self) -> &DualQuaternion {
        &self.0
    }

    pub fn into_inner(self) -> DualQuaternion {
        self.0
    }

    pub fn conj(&self) -> Self {
        Self(self.0.conj())
    }

    /// `h + conj(h)`.
    pub fn trace(&self) -> Scalar {
        int(2) * &self.0.primal.w
    }

    /// `h conj(h)`.
    pub fn norm(&self) -> Scalar {
        self.0.primal.norm()
    }

    /// `(t - h)(t - conj(h)) = t² - (h + h̄) t + h h̄`.
    pub fn minpol(&self) -> RealPoly {
        RealPoly::new(vec![self.norm(), -self.trace(), int(1)])
    }

    /// Rotation axis read from `h - conj(h) = l1 i + l2 j + l3 k - ε(l4 i + l5 j + l6 k)`.
    pub fn axis(&self) -> PlueckerLine {
        let d = self.0.primal.vector();
        let q = self.0.dual.vector();
        PlueckerLine::new(d, [-&q[0], -&q[1], -&q[2]]).expect("rotation quaternion has a valid axis")
    }

    pub fn translated(&self, v: &Vec3) -> Self {
        Self(self.0.translated(v))
    }

    pub fn scaled(&self, s: &Scalar) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::NotRotation("zero scale".into()));
        }
        Self::new(self.0.scale(s))
    }
}

/// `minpol` for an arbitrary dual quaternion, with the reality checks.
pub fn minpol(h: &DualQuaternion) -> Result<RealPoly> {
    if !h.dual.w.is_zero() || !h.has_real_norm() {
        return Err(Error::NotRotation(format!("{h}: trace or norm not real")));
    }
    Ok(RealPoly::new(vec![h.primal.norm(), -int(2) * &h.primal.w, int(1)]))
}

/// `axis` for an arbitrary dual quaternion.
pub fn axis(h: &DualQuaternion) -> Result<PlueckerLine> {
    Ok(RotationQuaternion::new(h.clone())?.axis())
}

impl fmt::Display for RotationQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for RotationQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<DualQuaternion> for RotationQuaternion {
    type Error = Error;
    fn try_from(v: DualQuaternion) -> Result<Self> {
        Self::new(v)
    }
}
