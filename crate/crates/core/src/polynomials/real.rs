use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::RealPoly;
use super::skew::rqr;
use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// Division with remainder by any nonzero real polynomial.
pub(crate) fn div_rem(f: &RealPoly, g: &RealPoly) -> Result<(RealPoly, RealPoly)> {
    if g.is_zero() {
        return Err(Error::DivisionByZeroPoly);
    }
    let lc = g.lcoeff();
    let (q, r) = rqr(f, &g.monic())?;
    Ok((q.scale(&lc.recip()), r))
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn real_gcd(f: &RealPoly, g: &RealPoly) -> RealPoly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = div_rem(&a, &b).expect("divisor is nonzero");
        a = b;
        b = r;
    }
    a.monic()
}

/// Quotient of polynomial division.
pub fn real_quo(f: &RealPoly, g: &RealPoly) -> Result<RealPoly> {
    Ok(div_rem(f, g)?.0)
}

fn sign_at_infinity(p: &RealPoly, negative: bool) -> i32 {
    let s = if p.lcoeff().is_positive() { 1 } else { -1 };
    if negative && p.degree() % 2 == 1 {
        -s
    } else {
        s
    }
}

/// Number of distinct real roots, by Sturm's theorem.
pub fn count_real_roots(f: &RealPoly) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = real_gcd(f, &f.derivative());
    let s = real_quo(f, &g)?;
    let mut seq = vec![s.clone(), s.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let (_, r) = div_rem(&seq[n - 2], &seq[n - 1])?;
        seq.push(-r);
    }
    seq.pop();
    let variations = |negative: bool| {
        let signs: Vec<i32> = seq.iter().map(|p| sign_at_infinity(p, negative)).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    Ok(variations(true) - variations(false))
}

/// Yun's squarefree decomposition of a nonzero polynomial: pairs
/// `(a_i, i)` of monic squarefree coprime factors with `monic(F) = Π a_i^i`.
pub fn squarefree_decomposition(f: &RealPoly) -> Result<Vec<(RealPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monic();
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = real_gcd(&f, &df);
    let mut b = real_quo(&f, &a0)?;
    let mut c = real_quo(&df, &a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() > 0 {
        let a = real_gcd(&b, &d);
        b = real_quo(&b, &a)?;
        c = real_quo(&d, &a)?;
        d = &c - &b.derivative();
        if a.degree() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Splits a monic polynomial without real roots into monic irreducible
/// real quadratics, multiplicities repeated, ordered by constant term and
/// then linear coefficient.
pub fn quad_factors(f: &RealPoly) -> Result<Vec<RealPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if count_real_roots(f)? > 0 {
        return Err(Error::HasRealRoot);
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        for q in split_squarefree(&part)? {
            out.extend(std::iter::repeat_n(q, mult));
        }
    }
    out.sort_by_key(|p| (p.coeff(0), p.coeff(1)));
    Ok(out)
}

fn split_squarefree(f: &RealPoly) -> Result<Vec<RealPoly>> {
    let mut rest = primitive_integer(f);
    let mut out = Vec::new();
    while rest.len() > 3 {
        match find_quadratic_factor(&rest)? {
            Some(g) => {
                let gp = to_poly(&g);
                let (q, r) = div_rem(&to_poly(&rest), &gp)?;
                debug_assert!(r.is_zero());
                out.push(gp.monic());
                rest = primitive_integer(&q);
            }
            None => return Err(Error::IrreducibleFactorNotQuadraticOverRationals(to_poly(&rest).monic().to_string())),
        }
    }
    if rest.len() == 3 {
        out.push(to_poly(&rest).monic());
    }
    Ok(out)
}

/// Integer coefficient vector with content 1 and positive leading term.
fn primitive_integer(f: &RealPoly) -> Vec<BigInt> {
    let den = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * Scalar::from_integer(den.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
    ints.iter().map(|c| c / &content * sign).collect()
}

fn to_poly(c: &[BigInt]) -> RealPoly {
    RealPoly::new(c.iter().map(|v| Scalar::from_integer(v.clone())).collect())
}

fn eval_int(c: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * &x + a)
}

const MAX_TRIAL_VALUE: u64 = 1 << 50;
const MAX_CANDIDATES: usize = 20_000_000;

fn positive_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Kronecker search for a primitive integer quadratic factor with negative
/// discriminant. Such a factor is positive on the reals, so its values at
/// integers are positive divisors of the values of `f`.
fn find_quadratic_factor(f: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    let lead = f.last().unwrap().clone();
    let mut points: Vec<(i64, u64, Vec<u64>)> = Vec::new();
    let mut checks: Vec<(i64, BigInt)> = Vec::new();
    for x in [0i64, 1, -1, 2, -2, 3, -3, 4, -4] {
        let v = eval_int(f, x);
        match v.to_u64().filter(|&v| v <= MAX_TRIAL_VALUE) {
            Some(v) if v > 0 => points.push((x, v, Vec::new())),
            _ => checks.push((x, v)),
        }
    }
    if points.len() < 3 {
        return Err(Error::FactorizationTooLarge(to_poly(f).to_string()));
    }
    for p in points.iter_mut() {
        p.2 = positive_divisors(p.1);
    }
    points.sort_by_key(|p| p.2.len());
    let chosen: Vec<_> = points.drain(..3).collect();
    checks.extend(points.into_iter().map(|(x, v, _)| (x, BigInt::from(v))));
    let work: usize = chosen.iter().map(|p| p.2.len()).product();
    if work > MAX_CANDIDATES {
        return Err(Error::FactorizationTooLarge(to_poly(f).to_string()));
    }
    let xs: Vec<Scalar> = chosen.iter().map(|p| Scalar::from_integer(p.0.into())).collect();
    for d0 in &chosen[0].2 {
        for d1 in &chosen[1].2 {
            for d2 in &chosen[2].2 {
                let ys = [*d0, *d1, *d2].map(|d| Scalar::from_integer(d.into()));
                let Some(g) = interpolate_quadratic(&xs, &ys) else {
                    continue;
                };
                if !g[2].is_positive() || !(&lead % &g[2]).is_zero() {
                    continue;
                }
                if &g[1] * &g[1] - BigInt::from(4) * &g[0] * &g[2] >= BigInt::zero() {
                    continue;
                }
                let ok = checks.iter().all(|(x, v)| {
                    let gx = eval_int(&g, *x);
                    gx.is_positive() && (v % &gx).is_zero()
                });
                if !ok {
                    continue;
                }
                let (_, r) = div_rem(&to_poly(f), &to_poly(&g))?;
                if r.is_zero() {
                    return Ok(Some(g.to_vec()));
                }
            }
        }
    }
    Ok(None)
}

/// Integer quadratic through three points, if the interpolant has integer
/// coefficients and degree exactly two.
fn interpolate_quadratic(xs: &[Scalar], ys: &[Scalar; 3]) -> Option<[BigInt; 3]> {
    let mut c = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
    for i in 0..3 {
        let (a, b) = ((i + 1) % 3, (i + 2) % 3);
        let denom = (&xs[i] - &xs[a]) * (&xs[i] - &xs[b]);
        let w = &ys[i] / denom;
        c[2] += &w;
        c[1] -= &w * (&xs[a] + &xs[b]);
        c[0] += &w * &xs[a] * &xs[b];
    }
    if c[2].is_zero() || !c.iter().all(Scalar::is_integer) {
        return None;
    }
    Some(c.map(|v| v.to_integer()))
}
