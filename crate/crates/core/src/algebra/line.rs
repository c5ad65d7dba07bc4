use std::fmt;

use num_traits::Zero;

use super::dual_quaternion::DualQuaternion;
use super::quaternion::Quaternion;
use super::scalar::{cross, dot, fmt_vec3, is_zero3, scale3, Scalar, Vec3};
use crate::error::{Error, Result};

/// Line in Plücker coordinates, stored in canonical form: the first nonzero
/// direction coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlueckerLine {
    direction: Vec3,
    moment: Vec3,
}

impl PlueckerLine {
    pub fn new(direction: Vec3, moment: Vec3) -> Result<Self> {
        if is_zero3(&direction) {
            return Err(Error::NotRotation("zero line direction".into()));
        }
        if !dot(&direction, &moment).is_zero() {
            return Err(Error::NotRotation("direction and moment not orthogonal".into()));
        }
        let lead = direction.iter().find(|c| !c.is_zero()).unwrap().recip();
        Ok(Self { direction: scale3(&lead, &direction), moment: scale3(&lead, &moment) })
    }

    /// Line through `point` with direction `direction`.
    pub fn through(point: &Vec3, direction: &Vec3) -> Result<Self> {
        Self::new(direction.clone(), cross(point, direction))
    }

    pub fn direction(&self) -> &Vec3 {
        &self.direction
    }

    pub fn moment(&self) -> &Vec3 {
        &self.moment
    }

    /// `[l1..l6]`.
    pub fn coordinates(&self) -> [Scalar; 6] {
        let [a, b, c] = self.direction.clone();
        let [d, e, f] = self.moment.clone();
        [a, b, c, d, e, f]
    }

    pub fn contains(&self, point: &Vec3) -> bool {
        cross(point, &self.direction) == self.moment
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        is_zero3(&cross(&self.direction, &other.direction))
    }

    /// Reciprocal product `d1·m2 + d2·m1`; zero iff the lines are coplanar.
    pub fn reciprocal_product(&self, other: &Self) -> Scalar {
        dot(&self.direction, &other.moment) + dot(&other.direction, &self.moment)
    }

    /// Non-parallel lines meeting in a finite point.
    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_parallel(other) && self.reciprocal_product(other).is_zero()
    }

    /// Point on the line closest to the origin.
    pub fn foot(&self) -> Vec3 {
        let n = dot(&self.direction, &self.direction);
        scale3(&n.recip(), &cross(&self.direction, &self.moment))
    }

    /// Common point of two intersecting lines.
    pub fn intersection(&self, other: &Self) -> Option<Vec3> {
        if !self.intersects(other) {
            return None;
        }
        let p1 = self.foot();
        let n = cross(&self.direction, &other.direction);
        let rhs = super::scalar::sub3(&other.moment, &cross(&p1, &other.direction));
        let tau = dot(&rhs, &n) / dot(&n, &n);
        let p = super::scalar::add3(&p1, &scale3(&tau, &self.direction));
        debug_assert!(other.contains(&p));
        Some(p)
    }

    /// The pure dual quaternion `d - ε m`; the vector part of `h - conj(h)` up to scale.
    pub fn as_dual_quaternion(&self) -> DualQuaternion {
        DualQuaternion::new(Quaternion::pure(&self.direction), -Quaternion::pure(&self.moment))
    }

    /// Image of the line under a displacement `g` with real nonzero norm.
    pub fn displaced(&self, g: &DualQuaternion) -> Result<Self> {
        let n = g.real_norm().ok_or(Error::DegenerateActor)?;
        if n.is_zero() {
            return Err(Error::DegenerateActor);
        }
        let img = &(g * &self.as_dual_quaternion()) * &g.conj();
        Self::new(img.primal.vector(), scale3(&(-n.recip()), &img.dual.vector()))
    }
}

impl fmt::Display for PlueckerLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", fmt_vec3(&self.direction), fmt_vec3(&self.moment))
    }
}
