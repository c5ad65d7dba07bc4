//! Rational curves, motion polynomials, minimal motions and factorization.

mod curve;
mod factor;
mod minmot;
mod motion_poly;
mod picker;

pub use curve::{FrameTransform, RationalCurve};
pub use factor::{czero, czero_poly, gfactor, tfactor, Factorization};
pub use minmot::minmot;
pub use motion_poly::MotionPolynomial;
pub use picker::{ZeroPicker, MAX_CANDIDATES};
