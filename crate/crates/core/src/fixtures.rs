//! Reference curves with known minimal motions and linkages.

use crate::algebra::scalar::ratio;
use crate::algebra::{DualQuaternion, Quaternion, RotationQuaternion};
use crate::linkage::Mode;
use crate::motion::RationalCurve;
use crate::polynomials::RealPoly;

/// A named curve together with the synthesis settings used for it.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub curve: RationalCurve,
    pub mode: Mode,
    pub m0: Option<RotationQuaternion>,
}

fn p(c: &[i64]) -> RealPoly {
    RealPoly::from_ints(c)
}

fn curve(x: [&[i64]; 4]) -> RationalCurve {
    RationalCurve::load(p(x[0]), p(x[1]), p(x[2]), p(x[3])).expect("fixture curves are valid")
}

fn rot(primal: Quaternion, dual: Quaternion) -> RotationQuaternion {
    RotationQuaternion::new(DualQuaternion::new(primal, dual)).expect("fixture joints are rotations")
}

fn q(w: i64, x: i64, y: i64, z: i64, den: i64) -> Quaternion {
    Quaternion::from_ints(w, x, y, z).scale(&ratio(1, den))
}

/// `x = (t² + 1) - 2a i - 2b t j`.
pub fn ellipse(a: i64, b: i64) -> RationalCurve {
    curve([&[1, 0, 1], &[-2 * a], &[0, -2 * b], &[]])
}

/// The unit-radius circle `(t² + 1) - 2i - 2t j`.
pub fn circle() -> RationalCurve {
    ellipse(1, 1)
}

/// The segment `(t² + 1) - 2i`, traversed back and forth.
pub fn segment() -> RationalCurve {
    curve([&[1, 0, 1], &[-2], &[], &[]])
}

/// Viviani's curve on the unit sphere about `(-1, 0, 0)`.
pub fn viviani() -> RationalCurve {
    curve([&[1, 0, 2, 0, 1], &[0, 0, -4], &[0, 2, 0, -2], &[0, 2, 0, 2]])
}

/// Limaçon of Pascal with parameters `a`, `b`:
/// `x0 = (1 + t²)²`, `x1 = 2t((a - b) - (a + b)t²)`, `x2 = 2(b + (2a + b)t²)`.
pub fn limacon(a: i64, b: i64) -> RationalCurve {
    curve([&[1, 0, 2, 0, 1], &[0, 2 * (a - b), 0, -2 * (a + b)], &[2 * b, 0, 2 * (2 * a + b)], &[]])
}

/// The limaçon with `a = b = 1`.
pub fn cardioid() -> RationalCurve {
    limacon(1, 1)
}

/// `m0 = -a k - b εj`, seeding the planar ellipse linkage.
pub fn ellipse_m0(a: i64, b: i64) -> RotationQuaternion {
    rot(q(0, 0, 0, -a, 1), q(0, 0, -b, 0, 1))
}

/// `m0 = ½ j` for the spherical Viviani linkage.
pub fn viviani_m0() -> RotationQuaternion {
    rot(q(0, 0, 1, 0, 2), q(0, 0, 0, 0, 1))
}

/// `m0 = 2k + ¾ εj` for the straight-line linkage.
pub fn segment_m0() -> RotationQuaternion {
    rot(q(0, 0, 0, 2, 1), q(0, 0, 3, 0, 4))
}

/// `m0 = 2k` for the planar limaçon linkages.
pub fn limacon_m0() -> RotationQuaternion {
    rot(q(0, 0, 0, 2, 1), q(0, 0, 0, 0, 1))
}

/// The reference suite: ellipse, circle, segment, Viviani, limaçon and cardioid.
pub fn all() -> Vec<Fixture> {
    vec![
        Fixture { name: "ellipse", curve: ellipse(2, 1), mode: Mode::Planar, m0: Some(ellipse_m0(2, 1)) },
        Fixture { name: "circle", curve: circle(), mode: Mode::Planar, m0: None },
        Fixture { name: "segment", curve: segment(), mode: Mode::Generic, m0: Some(segment_m0()) },
        Fixture { name: "viviani", curve: viviani(), mode: Mode::Spherical, m0: Some(viviani_m0()) },
        Fixture { name: "limacon", curve: limacon(2, 1), mode: Mode::Planar, m0: Some(limacon_m0()) },
        Fixture { name: "cardioid", curve: cardioid(), mode: Mode::Planar, m0: Some(limacon_m0()) },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_and_circularities() {
        let dc: Vec<_> = all().iter().map(|f| (f.name, f.curve.degree(), f.curve.circularity())).collect();
        assert_eq!(
            dc,
            vec![
                ("ellipse", 2, 0),
                ("circle", 2, 1),
                ("segment", 2, 0),
                ("viviani", 4, 2),
                ("limacon", 4, 2),
                ("cardioid", 4, 2),
            ]
        );
        assert!(all().iter().all(|f| f.curve.is_normalized()));
    }
}
