use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::scalar::{add3, fmt_vec3, sub3, Scalar, Vec3};
use crate::algebra::Quaternion;
use crate::error::{Error, Result};
use crate::polynomials::{count_real_roots, real_gcd, real_quo, QuatPoly, RealPoly};

/// Rational space curve `X = (x1, x2, x3) / x0` in reduced form.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalCurve {
    x: [RealPoly; 4],
    degree: usize,
    circularity: usize,
}

impl RationalCurve {
    /// Reduces the homogeneous coordinates and checks boundedness.
    pub fn load(x0: RealPoly, x1: RealPoly, x2: RealPoly, x3: RealPoly) -> Result<Self> {
        if x0.is_zero() {
            return Err(Error::InvalidCurve("x0 is the zero polynomial".into()));
        }
        let g = [&x1, &x2, &x3].iter().fold(x0.clone(), |acc, p| real_gcd(&acc, p));
        let x = [&x0, &x1, &x2, &x3].map(|p| real_quo(p, &g).expect("gcd is nonzero"));
        if count_real_roots(&x[0])? > 0 {
            return Err(Error::Unbounded("x0 has a real root".into()));
        }
        let degree = x[0].degree();
        if x[1..].iter().any(|p| !p.is_zero() && p.degree() > degree) {
            return Err(Error::Unbounded("deg x0 is smaller than a coordinate degree".into()));
        }
        let sq = x[1..].iter().fold(RealPoly::zero(), |acc, p| &acc + &(p * p));
        let circularity = real_gcd(&x[0], &sq).degree() / 2;
        Ok(Self { x, degree, circularity })
    }

    /// Curve with homogeneous coordinates `x0 + x1 i + x2 j + x3 k`.
    pub fn from_quat(x: &QuatPoly) -> Result<Self> {
        let [a, b, c, d] = x.components();
        Self::load(a, b, c, d)
    }

    pub fn components(&self) -> &[RealPoly; 4] {
        &self.x
    }

    pub fn to_quat(&self) -> QuatPoly {
        QuatPoly::from_components(&self.x)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn circularity(&self) -> usize {
        self.circularity
    }

    /// `x(∞) = 1`: `x0` monic of degree `d` and every `x_i` of smaller degree.
    pub fn is_normalized(&self) -> bool {
        self.x[0].is_monic() && self.x[1..].iter().all(|p| p.is_zero() || p.degree() < self.degree)
    }

    /// Affine point at a finite parameter.
    pub fn point_at(&self, t: &Scalar) -> Vec3 {
        let w = self.x[0].eval(t);
        [1, 2, 3].map(|i| self.x[i].eval(t) / &w)
    }

    /// Limit point as `t → ∞`.
    pub fn point_at_infinity(&self) -> Vec3 {
        let lc = self.x[0].lcoeff();
        [1, 2, 3].map(|i| self.x[i].coeff(self.degree) / &lc)
    }

    /// Equality of the traced curves as parameterized point sets: the reduced
    /// coordinates agree up to a constant factor.
    pub fn same_curve(&self, other: &Self) -> bool {
        let (a, b) = (self.x[0].lcoeff(), other.x[0].lcoeff());
        (0..4).all(|i| self.x[i].scale(&b) == other.x[i].scale(&a))
    }

    /// Coordinates in the frame `frame`, scaled homogeneously by its scale.
    pub fn transformed(&self, frame: &FrameTransform) -> Self {
        let x0 = &self.x[0];
        let y = [1, 2, 3].map(|i| &self.x[i] + &x0.scale(&frame.translation[i - 1]));
        let s = &frame.scale;
        Self {
            x: [x0.scale(s), y[0].scale(s), y[1].scale(s), y[2].scale(s)],
            degree: self.degree,
            circularity: self.circularity,
        }
    }

    /// Translates and rescales so that `x(∞) = 1`.
    pub fn normalize(&self) -> (Self, FrameTransform) {
        let lc = self.x[0].lcoeff();
        let translation = [1, 2, 3].map(|i| -self.x[i].coeff(self.degree) / &lc);
        let frame = FrameTransform { translation, scale: lc.recip() };
        (self.transformed(&frame), frame)
    }
}

impl fmt::Display for RationalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_quat())
    }
}

impl fmt::Debug for RationalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalCurve(d={}, c={}, {})", self.degree, self.circularity, self)
    }
}

/// Change of coordinates `y = p + translation` for points, together with a
/// homogeneous factor applied to curve coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrameTransform {
    pub translation: Vec3,
    pub scale: Scalar,
}

impl FrameTransform {
    pub fn identity() -> Self {
        Self { translation: [Scalar::zero(), Scalar::zero(), Scalar::zero()], scale: Scalar::one() }
    }

    pub fn apply_point(&self, p: &Vec3) -> Vec3 {
        add3(p, &self.translation)
    }

    pub fn unapply_point(&self, p: &Vec3) -> Vec3 {
        sub3(p, &self.translation)
    }

    /// Inverse transform.
    pub fn inverse(&self) -> Self {
        Self { translation: self.translation.clone().map(|v| -v), scale: self.scale.recip() }
    }

    /// `self` followed by a further translation `v`.
    pub fn then_translate(&self, v: &Vec3) -> Self {
        Self { translation: add3(&self.translation, v), scale: self.scale.clone() }
    }

    pub fn translation_quaternion(&self) -> Quaternion {
        Quaternion::pure(&self.translation)
    }
}

impl fmt::Display for FrameTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "translate {} scale {}", fmt_vec3(&self.translation), self.scale)
    }
}
