use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};

use super::poly::RealPoly;
use crate::algebra::scalar::{dot, int, is_zero3, sqrt_exact, Scalar, Vec3};
use crate::algebra::Quaternion;
use crate::error::{Error, Result};

/// Default bound on numerators and denominators in sphere-point searches.
pub const DEFAULT_HEIGHT_BOUND: u64 = 10_000;

/// The quaternion zero of an irreducible monic quadratic `t² + bt + c`
/// whose vector part points along `v`: `(-b + λ v)/2` with
/// `λ² = (4c - b²)/|v|²`.
pub fn quad_zero(f: &RealPoly, v: &Vec3) -> Result<Quaternion> {
    if f.degree() != 2 || !f.is_monic() {
        return Err(Error::NotIrreducible);
    }
    let (b, c) = (f.coeff(1), f.coeff(0));
    let disc = int(4) * &c - &b * &b;
    if !disc.is_positive() {
        return Err(Error::NotIrreducible);
    }
    if is_zero3(v) {
        return Err(Error::NoRationalZeroInDirection);
    }
    let lambda = sqrt_exact(&(disc / dot(v, v))).ok_or(Error::NoRationalZeroInDirection)?;
    let half = Scalar::new(1.into(), 2.into());
    let s = &lambda * &half;
    Ok(Quaternion::new(-b * &half, &s * &v[0], &s * &v[1], &s * &v[2]))
}

fn is_three_square_obstructed(mut n: BigInt) -> bool {
    let four = BigInt::from(4);
    while !n.is_zero() && (&n % &four).is_zero() {
        n /= &four;
    }
    (&n % BigInt::from(8)) == BigInt::from(7)
}

/// Rational vector `s` with `s·s = r`, searched with the default height bound.
pub fn rational_sphere_point(r: &Scalar) -> Result<Vec3> {
    rational_sphere_point_with_bound(r, DEFAULT_HEIGHT_BOUND)
}

/// Rational vector `s` with `s·s = r`. Writing `r = p/q` in lowest terms, a
/// solution `(a, b, c)/q` comes from a representation `a² + b² + c² = pq`.
/// Components are returned in ascending order.
pub fn rational_sphere_point_with_bound(r: &Scalar, bound: u64) -> Result<Vec3> {
    if !r.is_positive() {
        return Err(Error::NotRepresentable(crate::algebra::scalar::fmt_scalar(r)));
    }
    let n = r.numer() * r.denom();
    if is_three_square_obstructed(n.clone()) {
        return Err(Error::NotRepresentable(crate::algebra::scalar::fmt_scalar(r)));
    }
    let exhausted = || Error::SearchExhausted(format!("no point of height <= {bound} on sphere of squared radius {r}"));
    let q = r.denom().to_u64().filter(|&q| q <= bound).ok_or_else(exhausted)?;
    let n = n.to_u64().ok_or_else(exhausted)?;
    let top = n.sqrt();
    if top > bound {
        return Err(exhausted());
    }
    for a in (0..=top).rev() {
        let rest = n - a * a;
        let mut b = rest.sqrt().min(a);
        loop {
            let c2 = rest - b * b;
            let c = c2.sqrt();
            if c * c == c2 && c <= b {
                let den = Scalar::from_integer(BigInt::from(q));
                let mk = |x: u64| Scalar::from_integer(BigInt::from(x)) / &den;
                return Ok([mk(c), mk(b), mk(a)]);
            }
            if c > b || b == 0 {
                break;
            }
            b -= 1;
        }
    }
    Err(exhausted())
}
