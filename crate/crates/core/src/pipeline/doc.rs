use serde::{Deserialize, Serialize};

use crate::algebra::scalar::fmt_scalar;
use crate::algebra::{parse_scalar, DualQuaternion, RotationQuaternion, Scalar, Vec3};
use crate::error::{Error, Result};
use crate::linkage::{fourbar_check, Linkage, Mode};
use crate::motion::{FrameTransform, RationalCurve};
use crate::polynomials::{DualQuatPoly, RealPoly};

/// Input document: homogeneous coordinates as ascending coefficient lists of
/// rational strings, plus optional synthesis settings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub x0: Vec<String>,
    pub x1: Vec<String>,
    pub x2: Vec<String>,
    pub x3: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m0: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub directions: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { at: format!("line {} column {}", e.line(), e.column()), msg: e.to_string() }
}

pub(crate) fn scalar_at(s: &str, at: impl Fn() -> String) -> Result<Scalar> {
    parse_scalar(s).ok_or_else(|| Error::Parse { at: at(), msg: format!("'{s}' is not a rational number") })
}

fn scalars<const N: usize>(v: &[String], at: &str) -> Result<[Scalar; N]> {
    if v.len() != N {
        return Err(Error::Parse { at: at.into(), msg: format!("expected {N} entries, found {}", v.len()) });
    }
    let parsed: Vec<Scalar> =
        v.iter().enumerate().map(|(i, s)| scalar_at(s, || format!("{at}[{i}]"))).collect::<Result<_>>()?;
    Ok(parsed.try_into().expect("length checked"))
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(fmt_scalar).collect()
}

pub(crate) fn rotation_from(v: &[String], at: &str) -> Result<RotationQuaternion> {
    let c: [Scalar; 8] = scalars(v, at)?;
    RotationQuaternion::new(DualQuaternion::from_components(c))
        .map_err(|e| Error::Parse { at: at.into(), msg: e.to_string() })
}

impl CurveSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(json_error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("curve specs serialize")
    }

    pub fn from_curve(x: &RationalCurve) -> Self {
        let [x0, x1, x2, x3] = x.components().clone().map(|p| strings(p.coeffs()));
        Self { x0, x1, x2, x3, ..Self::default() }
    }

    pub fn polynomials(&self) -> Result<[RealPoly; 4]> {
        let parse = |v: &[String], name: &str| -> Result<RealPoly> {
            let c = v
                .iter()
                .enumerate()
                .map(|(i, s)| scalar_at(s, || format!("{name}[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(RealPoly::new(c))
        };
        Ok([parse(&self.x0, "x0")?, parse(&self.x1, "x1")?, parse(&self.x2, "x2")?, parse(&self.x3, "x3")?])
    }

    pub fn parsed_mode(&self) -> Result<Option<Mode>> {
        self.mode.as_deref().map(str::parse).transpose()
    }

    pub fn parsed_m0(&self) -> Result<Option<RotationQuaternion>> {
        self.m0.as_deref().map(|v| rotation_from(v, "m0")).transpose()
    }

    pub fn parsed_directions(&self) -> Result<Vec<Vec3>> {
        self.directions
            .iter()
            .flatten()
            .enumerate()
            .map(|(i, d)| scalars::<3>(d, &format!("directions[{i}]")))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub links: i64,
    pub joints: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub d: usize,
    pub c: usize,
    pub n: usize,
    pub mode: String,
    pub links: usize,
    pub joints: usize,
    pub bounds: Bounds,
    pub deg_c: usize,
    pub deg_h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointDoc {
    pub label: String,
    pub quaternion: Vec<String>,
    pub pluecker: Vec<String>,
    pub links: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDoc {
    pub label: String,
    pub joints: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameDoc {
    pub translation: Vec<String>,
    pub scale: String,
}

/// Output document describing a synthesized linkage. All numbers are exact
/// rationals written as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageDoc {
    pub metadata: Metadata,
    pub joints: Vec<JointDoc>,
    pub links: Vec<LinkDoc>,
    pub drawn_point: Vec<String>,
    pub frame: FrameDoc,
    /// Coefficients of the motion polynomial in linkage coordinates, ascending.
    pub motion: Vec<Vec<String>>,
    /// Coefficients of the cofactor in linkage coordinates, ascending.
    pub cofactor: Vec<Vec<String>>,
}

fn poly_strings(p: &DualQuatPoly) -> Vec<Vec<String>> {
    p.coeffs().iter().map(|c| strings(&c.components())).collect()
}

fn poly_from(v: &[Vec<String>], at: &str) -> Result<DualQuatPoly> {
    let coeffs = v
        .iter()
        .enumerate()
        .map(|(i, c)| scalars::<8>(c, &format!("{at}[{i}]")).map(DualQuaternion::from_components))
        .collect::<Result<Vec<_>>>()?;
    Ok(DualQuatPoly::new(coeffs))
}

impl LinkageDoc {
    pub fn new(l: &Linkage, x: &RationalCurve, bounds: (i64, i64)) -> Self {
        let joints = l
            .joints()
            .into_iter()
            .map(|j| JointDoc {
                quaternion: strings(&j.value.value().components()),
                pluecker: strings(&j.axis.coordinates()),
                label: j.label,
                links: j.links,
            })
            .collect();
        let links = l.links().into_iter().map(|k| LinkDoc { label: k.label, joints: k.joints }).collect();
        Self {
            metadata: Metadata {
                d: x.degree(),
                c: x.circularity(),
                n: l.n,
                mode: l.mode.to_string(),
                links: l.link_count(),
                joints: l.joint_count(),
                bounds: Bounds { links: bounds.0, joints: bounds.1 },
                deg_c: l.motion.degree(),
                deg_h: l.cofactor.degree(),
            },
            joints,
            links,
            drawn_point: strings(&l.drawn_point),
            frame: FrameDoc { translation: strings(&l.frame.translation), scale: fmt_scalar(&l.frame.scale) },
            motion: poly_strings(&l.motion),
            cofactor: poly_strings(&l.cofactor),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(json_error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("linkage documents serialize")
    }

    /// Rebuilds the linkage, checking that the recorded axes and link graph
    /// agree with the joint quaternions.
    pub fn to_linkage(&self) -> Result<Linkage> {
        let mode: Mode = self.metadata.mode.parse()?;
        let n = self.metadata.n;
        let find = |label: String| -> Result<RotationQuaternion> {
            let j = self
                .joints
                .iter()
                .find(|j| j.label == label)
                .ok_or_else(|| Error::Parse { at: "joints".into(), msg: format!("missing joint {label}") })?;
            rotation_from(&j.quaternion, &format!("joints.{label}.quaternion"))
        };
        let h = (1..=n).map(|i| find(format!("h{i}"))).collect::<Result<Vec<_>>>()?;
        let single = self.joints.len() == 1 && n == 1;
        let (k, m) = if single {
            (Vec::new(), Vec::new())
        } else {
            (
                (1..=n).map(|i| find(format!("k{i}"))).collect::<Result<Vec<_>>>()?,
                (0..=n).map(|i| find(format!("m{i}"))).collect::<Result<Vec<_>>>()?,
            )
        };
        let cells = (0..k.len()).map(|i| fourbar_check(&m[i], &h[i])).collect();
        let translation: [Scalar; 3] = scalars(&self.frame.translation, "frame.translation")?;
        let scale = scalar_at(&self.frame.scale, || "frame.scale".into())?;
        let l = Linkage {
            n,
            mode,
            h,
            k,
            m,
            cells,
            frame: FrameTransform { translation, scale },
            drawn_point: scalars(&self.drawn_point, "drawn_point")?,
            motion: poly_from(&self.motion, "motion")?,
            cofactor: poly_from(&self.cofactor, "cofactor")?,
        };
        for (doc, j) in self.joints.iter().zip(l.joints()) {
            let axis: [Scalar; 6] = scalars(&doc.pluecker, &format!("joints.{}.pluecker", doc.label))?;
            if doc.label != j.label || doc.links != j.links || axis != j.axis.coordinates() {
                return Err(Error::Parse {
                    at: format!("joints.{}", doc.label),
                    msg: "joint does not match the scissor topology".into(),
                });
            }
        }
        let links = l.links();
        if self.joints.len() != l.joint_count()
            || self.links.len() != links.len()
            || self.links.iter().zip(&links).any(|(d, k)| d.label != k.label || d.joints != k.joints)
        {
            return Err(Error::Parse { at: "links".into(), msg: "link graph does not match the joints".into() });
        }
        Ok(l)
    }
}
