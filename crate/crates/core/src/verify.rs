//! Exact kinematic replay of synthesized linkages and the checks built on it.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::scalar::{fmt_scalar, fmt_vec3, int, ratio, Vec3};
use crate::algebra::{DualQuaternion, PlueckerLine, RotationQuaternion, Scalar};
use crate::error::{Error, Result};
use crate::linkage::{chain_product, Linkage};
use crate::motion::{MotionPolynomial, RationalCurve};
use crate::polynomials::DualQuatPoly;

/// A parameter value on the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Finite(Scalar),
    Infinity,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Finite(t) => f.write_str(&fmt_scalar(t)),
            Param::Infinity => f.write_str("inf"),
        }
    }
}

impl From<Scalar> for Param {
    fn from(t: Scalar) -> Self {
        Param::Finite(t)
    }
}

/// Pose of every joint axis and the drawn point at one parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KinematicSample {
    pub t: Param,
    pub joint_poses: Vec<(String, PlueckerLine)>,
    /// Drawn point in input coordinates.
    pub drawn: Vec3,
}

/// `{0, ±1, ±2, ±1/2, ±3, 5/7}`.
pub fn default_samples() -> Vec<Scalar> {
    let mut out = vec![int(0)];
    for s in [int(1), int(2), ratio(1, 2), int(3)] {
        out.push(s.clone());
        out.push(-s);
    }
    out.push(ratio(5, 7));
    out
}

fn eval(p: &DualQuatPoly, t: &Param) -> DualQuaternion {
    match t {
        Param::Finite(t) => p.eval(&DualQuaternion::real(t.clone())),
        Param::Infinity => p.eval_at_infinity(),
    }
}

fn lin(h: &RotationQuaternion) -> DualQuatPoly {
    DualQuatPoly::linear(h.value())
}

/// Pose of link `B_j` relative to the base link `A_0`, up to a real factor:
/// `conj(t - m_0)(t - k_1)···(t - k_j)`.
fn b_pose(l: &Linkage, j: usize) -> DualQuatPoly {
    &lin(&l.m[0].conj()) * &chain_product(&l.k[..j])
}

fn displaced(axis: &PlueckerLine, g: &DualQuaternion) -> PlueckerLine {
    axis.displaced(g).expect("link poses of a bounded linkage have nonzero norm")
}

fn drawn_by(l: &Linkage, g: &DualQuaternion) -> Vec3 {
    let z = g.act_on_point(&l.drawn_point).expect("link poses of a bounded linkage have nonzero norm");
    l.frame.unapply_point(&z)
}

/// Replays the linkage at `t`: `h_j` and `m_j` ride on `A_{j-1}` and `A_j`,
/// whose poses are partial products of the `h` chain; `k_j` rides on
/// `B_{j-1}`; the drawn point rides on `A_n`.
pub fn configuration_at(l: &Linkage, t: &Param) -> KinematicSample {
    let mut poses = Vec::new();
    for j in l.joints() {
        let idx: usize = j.label[1..].parse().expect("joint labels end in an index");
        let g = match &j.label[..1] {
            "h" => chain_product(&l.h[..idx - 1]),
            "m" => chain_product(&l.h[..idx]),
            _ => b_pose(l, idx - 1),
        };
        poses.push((j.label.clone(), displaced(&j.axis, &eval(&g, t))));
    }
    KinematicSample { t: t.clone(), joint_poses: poses, drawn: drawn_by(l, &eval(&l.product(), t)) }
}

/// Pose of `axis(h_j)` obtained by rotating it about `h_{j-1}`, then
/// `h_{j-2}`, down to `h_1`, one joint at a time.
pub fn successive_pose(l: &Linkage, j: usize, t: &Param) -> PlueckerLine {
    (0..j - 1).rev().fold(l.h[j - 1].axis(), |axis, i| displaced(&axis, &eval(&lin(&l.h[i]), t)))
}

/// Outcome of a successful trajectory check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrajectoryReport {
    pub points: Vec<(Scalar, Vec3)>,
    pub symbolic: bool,
}

/// Checks that the drawn point follows `x` at every sample along both sides
/// of the ladder, and that the homogeneous trajectory of the chain product
/// is `H conj(H)` times the trajectory of the motion, which in turn is the
/// curve itself.
pub fn check_trajectory(l: &Linkage, x: &RationalCurve, samples: &[Scalar]) -> Result<TrajectoryReport> {
    let other_route = if l.is_single_joint() { l.product() } else { &b_pose(l, l.n) * &lin(&l.m[l.n]) };
    let mut points = Vec::new();
    for t in samples {
        let expected = x.point_at(t);
        let p = Param::Finite(t.clone());
        for route in [l.product(), other_route.clone()] {
            let got = drawn_by(l, &eval(&route, &p));
            if got != expected {
                return Err(Error::Mismatch { t: fmt_scalar(t), linkage: fmt_vec3(&got), curve: fmt_vec3(&expected) });
            }
        }
        points.push((t.clone(), expected));
    }

    let symbolic_failure =
        |what: &str| Error::Mismatch { t: "symbolic".into(), linkage: what.into(), curve: x.to_string() };
    let product =
        MotionPolynomial::new(l.product()).map_err(|_| symbolic_failure("chain product is not a motion polynomial"))?;
    let motion = MotionPolynomial::new(l.motion.clone())
        .map_err(|_| symbolic_failure("stored motion is not a motion polynomial"))?;
    let traj_product = product.trajectory_poly_of(&l.drawn_point);
    let traj_motion = motion.trajectory_poly_of(&l.drawn_point);
    let norm_h = l.cofactor.primal().norm_poly().to_quat();
    if traj_product != &norm_h * &traj_motion {
        return Err(symbolic_failure("chain trajectory differs from H conj(H) times the motion trajectory"));
    }
    let reduced =
        RationalCurve::from_quat(&traj_motion).map_err(|_| symbolic_failure("motion trajectory is degenerate"))?;
    if !reduced.same_curve(&x.transformed(&l.frame)) {
        return Err(symbolic_failure(&format!("motion draws {reduced}")));
    }
    Ok(TrajectoryReport { points, symbolic: true })
}

/// Outcome of a successful loop-closure check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub cells: usize,
    pub samples: Vec<Scalar>,
}

pub const CLOSURE_SEED: u64 = 0x5eed;

/// Checks every cell identity `(t - m_{i-1})(t - h_i) = (t - k_i)(t - m_i)`
/// exactly and at five seeded random rational parameters.
pub fn check_loop_closure(l: &Linkage) -> Result<ClosureReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(CLOSURE_SEED);
    let samples: Vec<Scalar> = (0..5).map(|_| ratio(rng.gen_range(-50..=50), rng.gen_range(1..=13))).collect();
    let cells = if l.is_single_joint() { 0 } else { l.n };
    for i in 1..=cells {
        let (lhs, rhs) = l.cell_sides(i);
        if lhs != rhs {
            return Err(Error::ClosureViolation { cell: i });
        }
        for t in &samples {
            let p = Param::Finite(t.clone());
            if eval(&lhs, &p) != eval(&rhs, &p) {
                return Err(Error::ClosureViolation { cell: i });
            }
        }
    }
    Ok(ClosureReport { cells, samples })
}

/// Runs both checks.
pub fn verify_linkage(l: &Linkage, x: &RationalCurve, samples: &[Scalar]) -> Result<TrajectoryReport> {
    check_loop_closure(l)?;
    check_trajectory(l, x, samples)
}
