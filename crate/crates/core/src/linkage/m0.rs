use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::flip::bflip;
use super::fourbar::{fourbar_check, FourBarKind, FourBarReport};
use crate::algebra::scalar::{cross, int, is_zero3, ratio, vec3i, Scalar, Vec3};
use crate::algebra::RotationQuaternion;
use crate::error::{Error, Result};

/// Geometric family of the synthesized linkage.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Generic,
    Planar,
    Spherical,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Generic => "generic",
            Mode::Planar => "planar",
            Mode::Spherical => "spherical",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(Mode::Generic),
            "planar" => Ok(Mode::Planar),
            "spherical" => Ok(Mode::Spherical),
            _ => Err(Error::Parse { at: "mode".into(), msg: format!("unknown mode '{s}'") }),
        }
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum M0Mode {
    Generic,
    Spherical,
    Planar,
    UserSupplied(RotationQuaternion),
}

impl From<Mode> for M0Mode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Generic => M0Mode::Generic,
            Mode::Planar => M0Mode::Planar,
            Mode::Spherical => M0Mode::Spherical,
        }
    }
}

/// Joints produced by running the flip recursion from `m0` along `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub k: Vec<RotationQuaternion>,
    pub m: Vec<RotationQuaternion>,
    pub cells: Vec<FourBarReport>,
}

/// Runs `(k_i, m_i) = bflip(m_{i-1}, h_i)` for `i = 1..n`, rejecting any cell
/// without exactly one degree of freedom. Failures carry the 1-based cell.
pub fn build_ladder(
    h: &[RotationQuaternion],
    m0: &RotationQuaternion,
    require_bennett: bool,
) -> std::result::Result<Ladder, (usize, String)> {
    let mut ladder = Ladder { k: Vec::new(), m: vec![m0.clone()], cells: Vec::new() };
    for (i, hi) in h.iter().enumerate() {
        let prev = ladder.m.last().expect("ladder starts with m0");
        let report = fourbar_check(prev, hi);
        if !report.one_dof {
            let why = if report.reasons.equal_minpols {
                format!("minpol({prev}) equals minpol({hi})")
            } else {
                format!("vector parts of {prev} and {hi} are dependent")
            };
            return Err((i + 1, why));
        }
        if require_bennett && report.kind != FourBarKind::Bennett {
            return Err((i + 1, format!("cell is {} rather than Bennett", report.kind)));
        }
        let (k, m) = bflip(prev, hi).map_err(|e| (i + 1, e.to_string()))?;
        ladder.k.push(k);
        ladder.m.push(m);
        ladder.cells.push(report);
    }
    Ok(ladder)
}

/// The point shared by all axes, if any.
pub fn common_point(h: &[RotationQuaternion]) -> Option<Vec3> {
    let axes: Vec<_> = h.iter().map(|x| x.axis()).collect();
    let first = axes.first()?;
    let p = axes.iter().skip(1).find_map(|a| first.intersection(a)).unwrap_or_else(|| first.foot());
    axes.iter().all(|a| a.contains(&p)).then_some(p)
}

/// The direction shared by all axes, if they are parallel.
pub fn common_direction(h: &[RotationQuaternion]) -> Option<Vec3> {
    let axes: Vec<_> = h.iter().map(|x| x.axis()).collect();
    let d = axes.first()?.direction().clone();
    axes.iter().all(|a| is_zero3(&cross(&d, a.direction()))).then_some(d)
}

fn directions() -> Vec<Vec3> {
    [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 0),
        (0, 1, 1),
        (1, 0, 1),
        (1, -1, 0),
        (0, 1, -1),
        (-1, 0, 1),
        (1, 1, 1),
        (1, 2, 3),
        (2, -1, 1),
        (3, 1, -2),
    ]
    .iter()
    .map(|&(x, y, z)| vec3i(x, y, z))
    .collect()
}

fn centres() -> Vec<Vec3> {
    [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1), (-1, 2, 3)]
        .iter()
        .map(|&(x, y, z)| vec3i(x, y, z))
        .collect()
}

const RANDOM_ATTEMPTS: usize = 2000;

/// Seed joint `m0` for the flip recursion along `h`.
///
/// Candidates `p0 + s·v + ε s·(v × c)` are drawn from a fixed low-height
/// enumeration, then from a seeded random stream, and the first one whose
/// ladder passes the mobility checks is returned. Spherical mode keeps the
/// axis through the origin, planar mode keeps it parallel to the common
/// direction, and generic mode demands Bennett cells throughout.
pub fn choose_m0(h: &[RotationQuaternion], mode: &M0Mode, seed: u64) -> Result<RotationQuaternion> {
    if h.is_empty() {
        return Err(Error::SearchExhausted("no factors".into()));
    }
    let (dirs, cents, require_bennett) = match mode {
        M0Mode::UserSupplied(m0) => {
            return build_ladder(h, m0, false)
                .map(|_| m0.clone())
                .map_err(|(cell, reason)| Error::UserM0Invalid { cell, reason });
        }
        M0Mode::Generic => (directions(), centres(), true),
        M0Mode::Spherical => {
            let c = common_point(h).ok_or_else(|| Error::ModeNotApplicable("axes do not share a point".into()))?;
            if !is_zero3(&c) {
                return Err(Error::ModeNotApplicable("common point of the axes is not the origin".into()));
            }
            (directions(), vec![vec3i(0, 0, 0)], false)
        }
        M0Mode::Planar => {
            let d = common_direction(h).ok_or_else(|| Error::ModeNotApplicable("axes are not parallel".into()))?;
            (vec![d], centres(), false)
        }
    };
    let accept = |m0: &RotationQuaternion| build_ladder(h, m0, require_bennett).is_ok();

    let scalars = [int(0), int(1), int(-1)];
    let scales = [int(2), ratio(1, 2), int(3), ratio(1, 3), ratio(3, 2)];
    for p0 in &scalars {
        for s in &scales {
            for v in &dirs {
                for c in &cents {
                    let v = [&v[0] * s, &v[1] * s, &v[2] * s];
                    if let Ok(m0) = RotationQuaternion::about(p0.clone(), &v, c) {
                        if accept(&m0) {
                            return Ok(m0);
                        }
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small = |rng: &mut ChaCha8Rng| -> Scalar { ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)) };
    for _ in 0..RANDOM_ATTEMPTS {
        let p0 = small(&mut rng);
        let v = match mode {
            M0Mode::Planar => {
                let s = small(&mut rng);
                dirs[0].clone().map(|x| x * &s)
            }
            _ => [small(&mut rng), small(&mut rng), small(&mut rng)],
        };
        let c = match mode {
            M0Mode::Spherical => vec3i(0, 0, 0),
            _ => [small(&mut rng), small(&mut rng), small(&mut rng)],
        };
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        if let Ok(m0) = RotationQuaternion::about(p0, &v, &c) {
            if accept(&m0) {
                return Ok(m0);
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no admissible m0 for {} factors in {} mode",
        h.len(),
        match mode {
            M0Mode::Generic => "generic",
            M0Mode::Planar => "planar",
            M0Mode::Spherical => "spherical",
            M0Mode::UserSupplied(_) => "user",
        }
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{DualQuaternion, Quaternion};

    fn rq(w: i64, x: i64, y: i64, z: i64, den: i64) -> RotationQuaternion {
        RotationQuaternion::new(Quaternion::from_ints(w, x, y, z).scale(&ratio(1, den)).into()).unwrap()
    }

    fn viviani() -> Vec<RotationQuaternion> {
        vec![rq(0, 0, 0, 1, 1), rq(0, 0, 1, 0, 1)]
    }

    #[test]
    fn user_supplied_viviani() {
        let half_j = rq(0, 0, 1, 0, 2);
        assert_eq!(choose_m0(&viviani(), &M0Mode::UserSupplied(half_j.clone()), 0).unwrap(), half_j);
        let err = choose_m0(&viviani(), &M0Mode::UserSupplied(rq(0, 0, 1, 0, 1)), 0).unwrap_err();
        assert!(matches!(err, Error::UserM0Invalid { cell: 1, .. }));
    }

    #[test]
    fn user_supplied_cardioid_is_planar() {
        let h = [
            RotationQuaternion::new(DualQuaternion::new(
                Quaternion::k(),
                Quaternion::from_ints(0, -3, 0, 0).scale(&ratio(1, 2)),
            ))
            .unwrap(),
            RotationQuaternion::new(DualQuaternion::new(
                Quaternion::k(),
                Quaternion::from_ints(0, -1, 0, 0).scale(&ratio(1, 2)),
            ))
            .unwrap(),
        ];
        let ladder = build_ladder(&h, &rq(0, 0, 0, 2, 1), false).unwrap();
        assert!(ladder.cells.iter().all(|c| c.kind == FourBarKind::PlanarAntiparallelogram));
    }

    #[test]
    fn automatic_modes() {
        let m0 = choose_m0(&viviani(), &M0Mode::Spherical, 0).unwrap();
        assert!(m0.value().dual.is_zero());
        let ladder = build_ladder(&viviani(), &m0, false).unwrap();
        assert!(ladder.cells.iter().all(|c| c.kind == FourBarKind::Spherical));

        let m0 = choose_m0(&viviani(), &M0Mode::Generic, 0).unwrap();
        let ladder = build_ladder(&viviani(), &m0, true).unwrap();
        assert!(ladder.cells.iter().all(|c| c.kind == FourBarKind::Bennett));

        assert!(matches!(choose_m0(&viviani(), &M0Mode::Planar, 0), Err(Error::ModeNotApplicable(_))));
    }

    #[test]
    fn minpol_chain() {
        let ladder = build_ladder(&viviani(), &rq(0, 0, 1, 0, 2), false).unwrap();
        assert!(ladder.m.iter().all(|m| m.minpol() == ladder.m[0].minpol()));
    }
}
