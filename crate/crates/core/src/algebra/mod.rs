//! Rationals, quaternions, dual quaternions and line geometry.

pub mod dual_quaternion;
pub mod line;
pub mod quaternion;
pub mod rotation;
pub mod scalar;

pub use dual_quaternion::DualQuaternion;
pub use line::PlueckerLine;
pub use quaternion::Quaternion;
pub use rotation::{axis, minpol, RotationQuaternion};
pub use scalar::{int, parse_scalar, ratio, Scalar, Vec3};
