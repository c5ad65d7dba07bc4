use super::poly::{Coeff, Poly, QuatPoly, RealPoly};
use super::real::real_gcd;
use crate::error::{Error, Result};

/// Right division by a monic polynomial: `F = G·Q + R` with `deg R < deg G`.
pub fn rqr<T: Coeff>(f: &Poly<T>, g: &Poly<T>) -> Result<(Poly<T>, Poly<T>)> {
    divide(f, g, |g, c, k| g.mul_right(c).shift(k))
}

/// Left division by a monic polynomial: `F = Q·G + R` with `deg R < deg G`.
pub fn lqr<T: Coeff>(f: &Poly<T>, g: &Poly<T>) -> Result<(Poly<T>, Poly<T>)> {
    divide(f, g, |g, c, k| g.mul_left(c).shift(k))
}

fn divide<T: Coeff>(
    f: &Poly<T>,
    g: &Poly<T>,
    times: impl Fn(&Poly<T>, &T, usize) -> Poly<T>,
) -> Result<(Poly<T>, Poly<T>)> {
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = g.degree();
    let mut q = Poly::zero();
    let mut r = f.clone();
    while !r.is_zero() && r.degree() >= n {
        let c = r.lcoeff();
        let k = r.degree() - n;
        q = &q + &Poly::monomial(c.clone(), k);
        r = &r - &times(g, &c, k);
    }
    Ok((q, r))
}

/// Quotient of an exact right division `F = G·Q`, `G` monic.
pub fn rquo<T: Coeff>(f: &Poly<T>, g: &Poly<T>) -> Result<Poly<T>> {
    let (q, r) = rqr(f, g)?;
    if !r.is_zero() {
        return Err(Error::FactorizationMismatch(format!("{g} does not left-divide {f}")));
    }
    Ok(q)
}

/// Monic left gcd: the monic `L` of largest degree with `F = L·X`, `G = L·Y`.
pub fn lgcd<T: Coeff>(f: &Poly<T>, g: &Poly<T>) -> Result<Poly<T>> {
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    loop {
        let (_, r) = rqr(&a, &b)?;
        if r.is_zero() {
            return Ok(b);
        }
        a = b;
        b = r.make_monic_right().ok_or(Error::NonInvertibleRemainderLead)?;
    }
}

/// Maximal real polynomial factor of a quaternion polynomial, made monic.
pub fn mrpf(p: &QuatPoly) -> RealPoly {
    p.components().iter().fold(RealPoly::zero(), |acc, c| real_gcd(&acc, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Quaternion};
    use num_traits::One;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    fn real(c: &[i64]) -> QuatPoly {
        RealPoly::from_ints(c).to_quat()
    }

    fn viviani_d() -> QuatPoly {
        // -4t² i + 2t(1 - t²) j + 2t(1 + t²) k
        QuatPoly::new(vec![q(0, 0, 0, 0), q(0, 0, 2, 2), q(0, -4, 0, 0), q(0, 0, -2, 2)])
    }

    #[test]
    fn rqr_examples() {
        let k = Quaternion::k();
        let (quo, rem) = rqr(&real(&[1, 0, 1]), &QuatPoly::linear(&k)).unwrap();
        assert_eq!(quo, QuatPoly::linear(&-&k));
        assert!(rem.is_zero());

        let f = QuatPoly::new(vec![Quaternion::i(), q(0, 0, -1, -1), Quaternion::one()]);
        let (quo, rem) = rqr(&f, &QuatPoly::linear(&Quaternion::j())).unwrap();
        assert_eq!(quo, QuatPoly::linear(&k));
        assert!(rem.is_zero());

        let (quo, rem) = rqr(&f, &f).unwrap();
        assert_eq!(quo, QuatPoly::one());
        assert!(rem.is_zero());
    }

    #[test]
    fn lqr_examples() {
        let (k, j) = (Quaternion::k(), Quaternion::j());
        let (quo, rem) = lqr(&real(&[1, 0, 1]), &QuatPoly::linear(&k)).unwrap();
        assert_eq!(quo, QuatPoly::linear(&-&k));
        assert!(rem.is_zero());

        let f = &QuatPoly::linear(&k) * &QuatPoly::linear(&j);
        let (quo, rem) = lqr(&f, &QuatPoly::linear(&j)).unwrap();
        assert_eq!(quo, QuatPoly::linear(&k));
        assert!(rem.is_zero());
    }

    #[test]
    fn division_requires_monic() {
        let g = QuatPoly::new(vec![Quaternion::one(), Quaternion::k()]);
        assert_eq!(rqr(&real(&[1, 0, 1]), &g), Err(Error::NotMonic));
        assert_eq!(lqr(&real(&[1, 0, 1]), &g), Err(Error::NotMonic));
    }

    #[test]
    fn lgcd_examples() {
        let g = real(&[1, 0, 2, 0, 1]);
        let expected = QuatPoly::new(vec![-Quaternion::i(), q(0, 0, -1, -1), Quaternion::one()]);
        assert_eq!(lgcd(&viviani_d(), &g).unwrap(), expected);

        let f = real(&[1, 0, 1]);
        assert_eq!(lgcd(&f, &f).unwrap(), f);

        let lin = QuatPoly::linear(&Quaternion::k());
        assert_eq!(lgcd(&lin, &f).unwrap(), lin);
    }

    #[test]
    fn mrpf_examples() {
        assert_eq!(mrpf(&real(&[1, 0, 1])), RealPoly::from_ints(&[1, 0, 1]));
        let p = QuatPoly::new(vec![-Quaternion::i(), q(0, 0, -1, -1), Quaternion::one()]);
        assert_eq!(mrpf(&p), RealPoly::one());
        let p = &real(&[1, 0, 1]) * &QuatPoly::linear(&Quaternion::k());
        assert_eq!(mrpf(&p), RealPoly::from_ints(&[1, 0, 1]));
        assert_eq!(mrpf(&p.scale(&int(3))), RealPoly::from_ints(&[1, 0, 1]));
    }
}
