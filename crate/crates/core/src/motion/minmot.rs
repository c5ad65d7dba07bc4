use super::curve::RationalCurve;
use super::motion_poly::MotionPolynomial;
use crate::algebra::scalar::ratio;
use crate::error::{Error, Result};
use crate::polynomials::{lgcd, real_gcd, real_quo, rquo, QuatPoly, RealPoly};

/// Motion polynomial of least degree whose origin trajectory is the given
/// normalized curve. The result is monic of degree `d - c`.
///
/// With `g = gcd(x0, x1² + x2² + x3²)`, `w = x0/g` and
/// `D = x1 i + x2 j + x3 k`, the primal part is `w·lgcd(D, g)` and the dual
/// part is half the conjugate of the right cofactor of `D`. The homogeneous
/// trajectory of the result is `w·x`.
pub fn minmot(x: &RationalCurve) -> Result<MotionPolynomial> {
    if !x.is_normalized() {
        return Err(Error::InvalidCurve("curve is not normalized".into()));
    }
    let [x0, x1, x2, x3] = x.components();
    let sq = [x1, x2, x3].iter().fold(RealPoly::zero(), |acc, p| &acc + &(*p * *p));
    let g = real_gcd(x0, &sq);
    let w = real_quo(x0, &g)?;
    let d = QuatPoly::from_components(&[RealPoly::zero(), x1.clone(), x2.clone(), x3.clone()]);
    let p_prime = lgcd(&d, &g.to_quat())?;
    let q_prime = rquo(&d, &p_prime)?;
    let p = &w.to_quat() * &p_prime;
    let q = q_prime.conj().scale(&ratio(1, 2));
    MotionPolynomial::from_parts(&p, &q)
}
