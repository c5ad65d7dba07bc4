use std::fmt;

use super::motion_poly::MotionPolynomial;
use super::picker::ZeroPicker;
use crate::algebra::{DualQuaternion, Quaternion, RotationQuaternion};
use crate::error::{Error, Result};
use crate::polynomials::{lqr, mrpf, quad_factors, rqr, rquo, Coeff, DualQuatPoly, Poly, QuatPoly, RealPoly};

/// Linear rotation factors `t - h_i` and a quaternion cofactor `H` with
/// `(t - h_1)···(t - h_n) = C·H`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub factors: Vec<RotationQuaternion>,
    pub cofactor: QuatPoly,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn values(&self) -> Vec<DualQuaternion> {
        self.factors.iter().map(|h| h.value().clone()).collect()
    }

    /// `(t - h_1)···(t - h_n)`.
    pub fn product(&self) -> DualQuatPoly {
        self.factors.iter().fold(DualQuatPoly::one(), |acc, h| &acc * &DualQuatPoly::linear(h.value()))
    }

    /// Checks the product identity against `C`.
    pub fn verify(&self, c: &MotionPolynomial) -> Result<()> {
        let ch = c.value() * &self.cofactor.to_dual();
        if self.product() != ch {
            return Err(Error::FactorizationMismatch(format!("product of factors differs from C·H = {ch}")));
        }
        Ok(())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in &self.factors {
            write!(f, "(t - ({h}))")?;
        }
        write!(f, " = C·({})", self.cofactor)
    }
}

fn embed<T: Coeff>(m: &RealPoly) -> Poly<T> {
    m.map(|s| T::from_scalar(s.clone()))
}

/// Common right zero `-a⁻¹b` of a polynomial and a real quadratic, read from
/// the linear remainder `at + b` of the division.
pub fn czero_poly<T: Coeff>(c: &Poly<T>, m: &RealPoly) -> Result<T> {
    if m.degree() != 2 {
        return Err(Error::NotIrreducible);
    }
    let (_, r) = rqr(c, &embed::<T>(&m.monic()))?;
    let a = r.coeff(1);
    let inv = a.try_inverse().ok_or(Error::NonInvertibleRemainderLead)?;
    Ok(inv.mul_ref(&r.coeff(0)).neg_ref())
}

/// Common zero of a motion polynomial and an irreducible quadratic factor of
/// its norm polynomial.
pub fn czero(c: &MotionPolynomial, m: &RealPoly) -> Result<DualQuaternion> {
    czero_poly(c.value(), m)
}

fn check_monic_bounded(c: &MotionPolynomial) -> Result<()> {
    if !c.is_monic() {
        return Err(Error::NotMonic);
    }
    if !c.is_bounded() {
        return Err(Error::HasRealRoot);
    }
    Ok(())
}

/// Factorization of a generic motion polynomial. `order[i]` is the minimal
/// polynomial of the `i`-th factor from the left; by default the quadratic
/// factors of the norm polynomial in ascending order.
pub fn gfactor(c: &MotionPolynomial, order: Option<&[RealPoly]>) -> Result<Factorization> {
    check_monic_bounded(c)?;
    if !c.is_generic() {
        return Err(Error::NotGeneric);
    }
    let quads = quad_factors(&c.norm_poly())?;
    let order: Vec<RealPoly> = match order {
        None => quads,
        Some(o) => {
            let given: Vec<RealPoly> = o.iter().map(RealPoly::monic).collect();
            let mut sorted = given.clone();
            let mut expected = quads;
            let key = |p: &RealPoly| (p.coeff(0), p.coeff(1));
            sorted.sort_by_key(key);
            expected.sort_by_key(key);
            if sorted != expected {
                return Err(Error::FactorizationMismatch("order is not a permutation of the quadratic factors".into()));
            }
            given
        }
    };
    let mut cur = c.value().clone();
    let mut hs = Vec::with_capacity(order.len());
    for m in order.iter().rev() {
        let h = czero_poly(&cur, m)?;
        let (q, r) = lqr(&cur, &DualQuatPoly::linear(&h))?;
        if !r.is_zero() {
            return Err(Error::FactorizationMismatch(format!("t - ({h}) is not a right factor")));
        }
        hs.push(RotationQuaternion::new(h)?);
        cur = q;
    }
    hs.reverse();
    let out = Factorization { factors: hs, cofactor: QuatPoly::one() };
    out.verify(c)?;
    Ok(out)
}

/// Factorization of `C·H` for a tame motion polynomial `C`, with
/// `deg H = deg mrpf(P)/2`. Zeros of each quadratic factor of `mrpf(P)`
/// are drawn from `picker`; a candidate is discarded when the reduced
/// polynomial fails to be a tame motion polynomial of smaller defect.
pub fn tfactor(c: &MotionPolynomial, picker: &ZeroPicker) -> Result<Factorization> {
    let out = tfactor_rec(c, picker)?;
    out.verify(c)?;
    if 2 * out.cofactor.degree() != mrpf(&c.primal()).degree() {
        return Err(Error::FactorizationMismatch("cofactor has unexpected degree".into()));
    }
    Ok(out)
}

fn tfactor_rec(c: &MotionPolynomial, picker: &ZeroPicker) -> Result<Factorization> {
    check_monic_bounded(c)?;
    if !c.is_tame() {
        return Err(Error::NotTame);
    }
    let defect = mrpf(&c.primal());
    if defect.degree() == 0 {
        return gfactor(c, None);
    }
    let f = quad_factors(&defect)?.remove(0);
    let mut last = String::from("no candidate zeros");
    for h in picker.candidates(&f) {
        match tame_step(c, &f, &h, defect.degree(), picker) {
            Ok(out) => return Ok(out),
            Err(e) => last = format!("zero {h} of {f}: {e}"),
        }
    }
    Err(Error::ZeroPickExhausted(last))
}

fn tame_step(
    c: &MotionPolynomial,
    f: &RealPoly,
    h: &Quaternion,
    defect: usize,
    picker: &ZeroPicker,
) -> Result<Factorization> {
    let (p, q) = (c.primal(), c.dual());
    let l = QuatPoly::linear(h);
    let e = (&q * &l).conj();
    let h_new = czero_poly(&e, f)?.conj();
    let l_new = QuatPoly::linear(&h_new);
    let p_over_f = rquo(&p, &f.to_quat())?;
    let p_next = &(&l_new.conj() * &p_over_f) * &l;
    let q_next = rquo(&e.conj(), &l_new)?;
    let c_next = MotionPolynomial::from_parts(&p_next, &q_next)?;
    if !c_next.is_tame() {
        return Err(Error::NotTame);
    }
    if mrpf(&p_next).degree() + 2 != defect {
        return Err(Error::FactorizationMismatch("defect did not drop by two".into()));
    }
    let rest = tfactor_rec(&c_next, picker)?;
    let mut factors = vec![RotationQuaternion::new(DualQuaternion::from_primal(h_new))?];
    factors.extend(rest.factors);
    Ok(Factorization { factors, cofactor: &l * &rest.cofactor })
}
