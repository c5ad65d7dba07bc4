use std::fmt;

use num_traits::Zero;

use crate::algebra::scalar::{cross, is_zero3, Scalar};
use crate::algebra::RotationQuaternion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FourBarKind {
    Bennett,
    PlanarAntiparallelogram,
    Spherical,
    Degenerate,
}

impl FourBarKind {
    pub fn name(self) -> &'static str {
        match self {
            FourBarKind::Bennett => "bennett",
            FourBarKind::PlanarAntiparallelogram => "planar-antiparallelogram",
            FourBarKind::Spherical => "spherical",
            FourBarKind::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for FourBarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FourBarFlags {
    pub vector_parts_dependent: bool,
    pub equal_minpols: bool,
    pub axes_intersecting: bool,
    pub axes_parallel: bool,
}

/// Mobility and type of the four-bar spanned by the factor pair `(h1, h2)`
/// and its Bennett flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourBarReport {
    pub kind: FourBarKind,
    pub one_dof: bool,
    pub reasons: FourBarFlags,
    /// Irreducible components of the configuration curve: one for Bennett
    /// linkages, two for planar and spherical four-bars.
    pub components: usize,
}

fn vector_part(h: &RotationQuaternion) -> [Scalar; 6] {
    let v = h.value();
    [v.primal.x.clone(), v.primal.y.clone(), v.primal.z.clone(), v.dual.x.clone(), v.dual.y.clone(), v.dual.z.clone()]
}

fn dependent(a: &[Scalar; 6], b: &[Scalar; 6]) -> bool {
    (0..6).all(|i| (i + 1..6).all(|j| (&a[i] * &b[j] - &a[j] * &b[i]).is_zero()))
}

pub fn fourbar_check(h1: &RotationQuaternion, h2: &RotationQuaternion) -> FourBarReport {
    let (l1, l2) = (h1.axis(), h2.axis());
    let reasons = FourBarFlags {
        vector_parts_dependent: dependent(&vector_part(h1), &vector_part(h2)),
        equal_minpols: h1.minpol() == h2.minpol(),
        axes_parallel: is_zero3(&cross(l1.direction(), l2.direction())),
        axes_intersecting: l1.intersects(&l2),
    };
    let one_dof = !reasons.vector_parts_dependent && !reasons.equal_minpols;
    let (kind, components) = if !one_dof {
        (FourBarKind::Degenerate, 0)
    } else if reasons.axes_parallel {
        (FourBarKind::PlanarAntiparallelogram, 2)
    } else if reasons.axes_intersecting {
        (FourBarKind::Spherical, 2)
    } else {
        (FourBarKind::Bennett, 1)
    };
    FourBarReport { kind, one_dof, reasons, components }
}
