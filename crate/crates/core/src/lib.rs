//! Exact synthesis of revolute-joint scissor linkages that draw bounded
//! rational space curves.
//!
//! The pipeline runs entirely over the rationals: a curve is reduced and
//! normalized, its minimal motion polynomial is computed and factored into
//! linear rotation factors (possibly after multiplication by a quaternion
//! cofactor), and a chain of Bennett flips assembles the linkage. Every
//! result is re-verified exactly.

macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl std::ops::Add<&$t> for $t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                &self + o
            }
        }
        impl std::ops::Add<$t> for &$t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                self + &o
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl std::ops::Sub<&$t> for $t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                &self - o
            }
        }
        impl std::ops::Sub<$t> for &$t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                self - &o
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl std::ops::Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                &self * o
            }
        }
        impl std::ops::Mul<$t> for &$t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                self * &o
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

pub mod algebra;
pub mod error;
pub mod fixtures;
pub mod linkage;
pub mod motion;
pub mod pipeline;
pub mod polynomials;
pub mod verify;

pub use algebra::{DualQuaternion, PlueckerLine, Quaternion, RotationQuaternion, Scalar, Vec3};
pub use error::{Error, Result};
