//! Dense polynomials in a central indeterminate `t` over rationals,
//! quaternions and dual quaternions.
//!
//! Coefficients are stored in ascending powers. Because `t` commutes with
//! every coefficient, multiplication is the usual convolution with the
//! coefficient products kept in order.

mod poly;
mod quadratic;
mod real;
mod skew;

pub use poly::{Coeff, DualQuatPoly, Poly, QuatPoly, RealPoly};
pub use quadratic::{quad_zero, rational_sphere_point, rational_sphere_point_with_bound, DEFAULT_HEIGHT_BOUND};
pub use real::{count_real_roots, quad_factors, real_gcd, real_quo, squarefree_decomposition};
pub use skew::{lgcd, lqr, mrpf, rqr, rquo};
