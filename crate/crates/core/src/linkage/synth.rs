use std::fmt;

use super::fourbar::FourBarReport;
use super::m0::{build_ladder, Mode};
use crate::algebra::scalar::{int, Vec3};
use crate::algebra::{DualQuaternion, PlueckerLine, RotationQuaternion};
use crate::error::{Error, Result};
use crate::motion::{Factorization, FrameTransform, MotionPolynomial};
use crate::polynomials::DualQuatPoly;

/// Linear factors of `C·H` together with the data needed to read the drawn
/// curve back in the input coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorChain {
    pub factors: Vec<RotationQuaternion>,
    pub motion: DualQuatPoly,
    pub cofactor: DualQuatPoly,
    /// Maps input coordinates `p` to linkage coordinates `p + translation`.
    pub frame: FrameTransform,
    /// Point of the moving link that traces the curve, in linkage coordinates.
    pub drawn_point: Vec3,
}

impl FactorChain {
    pub fn new(c: &MotionPolynomial, f: &Factorization, frame: FrameTransform) -> Self {
        Self {
            factors: f.factors.clone(),
            motion: c.value().clone(),
            cofactor: f.cofactor.to_dual(),
            frame,
            drawn_point: [int(0), int(0), int(0)],
        }
    }

    /// `(t - h_1)···(t - h_n)`.
    pub fn product(&self) -> DualQuatPoly {
        chain_product(self.factors.iter())
    }

    pub fn verify(&self) -> Result<()> {
        if self.product() != &self.motion * &self.cofactor {
            return Err(Error::FactorizationMismatch("product of factors differs from C·H".into()));
        }
        Ok(())
    }

    /// The same chain expressed in coordinates moved by `v`.
    pub fn translated(&self, v: &Vec3) -> Self {
        let t = DualQuaternion::translation(v);
        let ti = DualQuaternion::translation(&v.clone().map(|x| -x));
        let conj = |p: &DualQuatPoly| p.map(|c| &(&t * c) * &ti);
        Self {
            factors: self.factors.iter().map(|h| h.translated(v)).collect(),
            motion: conj(&self.motion),
            cofactor: conj(&self.cofactor),
            frame: self.frame.then_translate(v),
            drawn_point: [0, 1, 2].map(|i| &self.drawn_point[i] + &v[i]),
        }
    }
}

pub fn chain_product<'a>(hs: impl IntoIterator<Item = &'a RotationQuaternion>) -> DualQuatPoly {
    hs.into_iter().fold(DualQuatPoly::one(), |acc, h| &acc * &DualQuatPoly::linear(h.value()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Joint {
    pub label: String,
    pub value: RotationQuaternion,
    pub axis: PlueckerLine,
    pub links: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub label: String,
    pub joints: Vec<String>,
}

/// Scissor linkage: the chain `A_0 … A_n` through the joints `h_i`, the
/// chain `B_0 … B_n` through the joints `k_i`, and rungs `m_i` joining
/// `A_i` and `B_i`. A single factor yields one revolute joint between `A_0`
/// and `A_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linkage {
    pub n: usize,
    pub mode: Mode,
    pub h: Vec<RotationQuaternion>,
    pub k: Vec<RotationQuaternion>,
    pub m: Vec<RotationQuaternion>,
    pub cells: Vec<FourBarReport>,
    pub frame: FrameTransform,
    pub drawn_point: Vec3,
    pub motion: DualQuatPoly,
    pub cofactor: DualQuatPoly,
}

fn a(i: usize) -> String {
    format!("A{i}")
}

fn b(i: usize) -> String {
    format!("B{i}")
}

impl Linkage {
    pub fn is_single_joint(&self) -> bool {
        self.m.is_empty()
    }

    pub fn joints(&self) -> Vec<Joint> {
        let joint = |label: String, value: &RotationQuaternion, x: String, y: String| Joint {
            label,
            axis: value.axis(),
            value: value.clone(),
            links: [x, y],
        };
        if self.is_single_joint() {
            return self.h.iter().enumerate().map(|(i, h)| joint(format!("h{}", i + 1), h, a(i), a(i + 1))).collect();
        }
        let mut out = vec![joint("m0".into(), &self.m[0], a(0), b(0))];
        for i in 1..=self.n {
            out.push(joint(format!("h{i}"), &self.h[i - 1], a(i - 1), a(i)));
            out.push(joint(format!("k{i}"), &self.k[i - 1], b(i - 1), b(i)));
            out.push(joint(format!("m{i}"), &self.m[i], a(i), b(i)));
        }
        out
    }

    pub fn links(&self) -> Vec<Link> {
        let joints = self.joints();
        let mut labels: Vec<String> = (0..=self.n).map(a).collect();
        if !self.is_single_joint() {
            labels.extend((0..=self.n).map(b));
        }
        labels
            .into_iter()
            .map(|label| Link {
                joints: joints.iter().filter(|j| j.links.contains(&label)).map(|j| j.label.clone()).collect(),
                label,
            })
            .collect()
    }

    pub fn link_count(&self) -> usize {
        self.links().len()
    }

    pub fn joint_count(&self) -> usize {
        self.joints().len()
    }

    /// `(t - h_1)···(t - h_n)`.
    pub fn product(&self) -> DualQuatPoly {
        chain_product(&self.h)
    }

    /// The cell identity `(t - m_{i-1})(t - h_i) = (t - k_i)(t - m_i)` for
    /// `i = 1..n`, as pairs of polynomials.
    pub fn cell_sides(&self, i: usize) -> (DualQuatPoly, DualQuatPoly) {
        let lin = |h: &RotationQuaternion| DualQuatPoly::linear(h.value());
        (&lin(&self.m[i - 1]) * &lin(&self.h[i - 1]), &lin(&self.k[i - 1]) * &lin(&self.m[i]))
    }
}

impl fmt::Display for Linkage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} linkage, {} links, {} joints", self.mode, self.link_count(), self.joint_count())?;
        for j in self.joints() {
            writeln!(f, "  {} = {}  [{} - {}]", j.label, j.value, j.links[0], j.links[1])?;
        }
        Ok(())
    }
}

/// Assembles the scissor linkage for `chain` seeded with `m0`, checking the
/// factor product and every cell identity exactly.
pub fn synthesize(chain: &FactorChain, m0: Option<&RotationQuaternion>, mode: Mode) -> Result<Linkage> {
    chain.verify()?;
    let h = chain.factors.clone();
    let (k, m, cells) = if h.len() == 1 {
        (Vec::new(), Vec::new(), Vec::new())
    } else {
        let m0 = m0.ok_or_else(|| Error::SearchExhausted("no m0 supplied".into()))?;
        let ladder = build_ladder(&h, m0, false).map_err(|(cell, reason)| Error::UserM0Invalid { cell, reason })?;
        (ladder.k, ladder.m, ladder.cells)
    };
    let linkage = Linkage {
        n: h.len(),
        mode,
        h,
        k,
        m,
        cells,
        frame: chain.frame.clone(),
        drawn_point: chain.drawn_point.clone(),
        motion: chain.motion.clone(),
        cofactor: chain.cofactor.clone(),
    };
    for i in 1..=linkage.m.len().saturating_sub(1) {
        let (lhs, rhs) = linkage.cell_sides(i);
        if lhs != rhs {
            return Err(Error::ClosureViolation { cell: i });
        }
    }
    Ok(linkage)
}

/// Upper bounds `(3d - 4c + 2, 9d/2 - 6c + 1)` on links and joints for a
/// bounded curve of degree `d` and circularity `c`.
pub fn count_bounds(d: i64, c: i64) -> Result<(i64, i64)> {
    if d % 2 != 0 || c < 0 || 2 * c > d {
        return Err(Error::InvalidDegreeParity { d, c });
    }
    Ok((3 * d - 4 * c + 2, 9 * d / 2 - 6 * c + 1))
}
