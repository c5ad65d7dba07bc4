use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::scalar::{dot, int, ratio, scale3, sub3, vec3i, Scalar, Vec3};
use crate::algebra::Quaternion;
use crate::polynomials::{quad_zero, rational_sphere_point, RealPoly};

/// Strategy for choosing quaternion zeros of an irreducible quadratic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroPicker {
    /// Try the listed directions first, then `k`, `i`, `j`, then reflections
    /// of a rational sphere point along small integer directions.
    Directions(Vec<Vec3>),
    /// Reflections of a rational sphere point along random small directions
    /// drawn from a seeded generator.
    Seeded(u64),
}

impl Default for ZeroPicker {
    fn default() -> Self {
        ZeroPicker::Directions(Vec::new())
    }
}

/// Upper bound on candidate zeros tried per quadratic factor.
pub const MAX_CANDIDATES: usize = 48;

fn default_directions() -> Vec<Vec3> {
    vec![vec3i(0, 0, 1), vec3i(1, 0, 0), vec3i(0, 1, 0)]
}

fn small_directions() -> Vec<Vec3> {
    let mut out = Vec::new();
    for x in -2i64..=2 {
        for y in -2i64..=2 {
            for z in -2i64..=2 {
                if (x, y, z) != (0, 0, 0) {
                    out.push(vec3i(x, y, z));
                }
            }
        }
    }
    out.sort_by_key(|v| v.iter().map(|c| c.numer().magnitude().clone()).sum::<num_bigint::BigUint>());
    out
}

/// Reflection of `s` in the plane orthogonal to `u`; preserves `|s|`.
fn reflect(s: &Vec3, u: &Vec3) -> Vec3 {
    let f = int(2) * dot(s, u) / dot(u, u);
    sub3(s, &scale3(&f, u))
}

impl ZeroPicker {
    /// Candidate zeros of the irreducible monic quadratic `t² + bt + c`, in
    /// order, without repetitions.
    pub fn candidates(&self, f: &RealPoly) -> Vec<Quaternion> {
        let mut out: Vec<Quaternion> = Vec::new();
        let push = |h: Quaternion, out: &mut Vec<Quaternion>| {
            if !out.contains(&h) && out.len() < MAX_CANDIDATES {
                out.push(h);
            }
        };
        let (b, c) = (f.coeff(1), f.coeff(0));
        let disc = int(4) * &c - &b * &b;
        let half = ratio(1, 2);
        let from_vector = |s: &Vec3| Quaternion::new(-&b * &half, &s[0] * &half, &s[1] * &half, &s[2] * &half);
        let sphere = rational_sphere_point(&disc).ok();
        match self {
            ZeroPicker::Directions(first) => {
                for v in first.iter().chain(default_directions().iter()) {
                    if let Ok(h) = quad_zero(f, v) {
                        push(h, &mut out);
                    }
                }
                if let Some(s0) = sphere {
                    push(from_vector(&s0), &mut out);
                    for u in small_directions() {
                        push(from_vector(&reflect(&s0, &u)), &mut out);
                    }
                }
            }
            ZeroPicker::Seeded(seed) => {
                if let Some(s0) = sphere {
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    for _ in 0..4 * MAX_CANDIDATES {
                        let u: Vec3 = [0, 1, 2].map(|_| Scalar::from_integer(rng.gen_range(-6i64..=6).into()));
                        if u.iter().all(|c| c == &int(0)) {
                            continue;
                        }
                        push(from_vector(&reflect(&s0, &u)), &mut out);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn default_order_starts_with_k() {
        let f = RealPoly::from_ints(&[1, 0, 1]);
        let c = ZeroPicker::default().candidates(&f);
        assert_eq!(&c[..3], &[Quaternion::k(), Quaternion::i(), Quaternion::j()]);
        for h in &c {
            assert!(f.to_quat().eval(h).is_zero());
        }
    }

    #[test]
    fn seeded_is_reproducible_and_valid() {
        let f = RealPoly::from_ints(&[2, -2, 1]);
        let a = ZeroPicker::Seeded(7).candidates(&f);
        let b = ZeroPicker::Seeded(7).candidates(&f);
        assert_eq!(a, b);
        assert!(a.len() > 5);
        for h in &a {
            assert!(f.to_quat().eval(h).is_zero());
        }
    }

    #[test]
    fn explicit_directions_come_first() {
        let f = RealPoly::from_ints(&[1, 0, 1]);
        let c = ZeroPicker::Directions(vec![vec3i(0, 3, 4)]).candidates(&f);
        assert_eq!(c[0], Quaternion::new(int(0), int(0), ratio(3, 5), ratio(4, 5)));
    }
}
