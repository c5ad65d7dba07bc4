//! End-to-end synthesis: curve specification in, verified linkage, trace and
//! report out.

mod doc;
mod trace;

use std::fmt;

use num_traits::Zero;

use crate::algebra::scalar::{cross, dot, is_zero3, vec3i, Vec3};
use crate::algebra::{RotationQuaternion, Scalar};
use crate::error::Error;
use crate::linkage::{
    choose_m0, common_direction, common_point, count_bounds, synthesize, FactorChain, Linkage, M0Mode, Mode,
};
use crate::motion::{minmot, tfactor, Factorization, FrameTransform, MotionPolynomial, RationalCurve, ZeroPicker};
use crate::verify::{default_samples, verify_linkage, Param};

pub use doc::{Bounds, CurveSpec, FrameDoc, JointDoc, LinkDoc, LinkageDoc, Metadata};
pub use trace::{emit_report, emit_trace, TRACE_HEADER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Parse,
    CurveLoad,
    Normalize,
    Minmot,
    Tfactor,
    ChooseM0,
    Synthesize,
    Verify,
    Emit,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Parse => "parse",
            Stage::CurveLoad => "curve_load",
            Stage::Normalize => "normalize",
            Stage::Minmot => "minmot",
            Stage::Tfactor => "tfactor",
            Stage::ChooseM0 => "choose_m0",
            Stage::Synthesize => "synthesize",
            Stage::Verify => "verify",
            Stage::Emit => "emit",
        }
    }

    /// 2 for curve problems, 3 for factorization, 4 for linkage assembly,
    /// 5 for verification, 1 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            Stage::Parse | Stage::CurveLoad | Stage::Normalize => 2,
            Stage::Minmot | Stage::Tfactor => 3,
            Stage::ChooseM0 | Stage::Synthesize => 4,
            Stage::Verify => 5,
            Stage::Emit => 1,
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An error tagged with the stage that raised it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineError {
    pub stage: Stage,
    pub error: Error,
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        self.stage.exit_code()
    }
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at stage {}: {}", self.error.kind(), self.stage, self.error)
    }
}

impl std::error::Error for PipelineError {}

trait AtStage<T> {
    fn at(self, stage: Stage) -> Result<T, PipelineError>;
}

impl<T> AtStage<T> for crate::error::Result<T> {
    fn at(self, stage: Stage) -> Result<T, PipelineError> {
        self.map_err(|error| PipelineError { stage, error })
    }
}

/// Command-line overrides; each takes precedence over the curve document.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub mode: Option<Mode>,
    pub m0: Option<RotationQuaternion>,
    pub seed: Option<u64>,
    pub samples: Option<Vec<Scalar>>,
}

/// Result of the stages up to and including factorization.
#[derive(Clone, Debug)]
pub struct Factored {
    pub curve: RationalCurve,
    pub normalized: RationalCurve,
    pub frame: FrameTransform,
    pub motion: MotionPolynomial,
    pub factorization: Factorization,
    pub mode: Mode,
    pub m0: Option<RotationQuaternion>,
    pub seed: u64,
    pub samples: Vec<Scalar>,
}

/// Everything produced by a successful run.
#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub factored: Factored,
    pub linkage: Linkage,
    pub doc: LinkageDoc,
    pub trace: String,
    pub report: String,
}

/// Normal of the plane containing a normalized curve, spanned by the
/// coefficient vectors of `(x1, x2, x3)`. A curve on a line gets the first
/// of `k`, `i`, `j` orthogonal to it.
fn plane_normal(x: &RationalCurve) -> Option<Vec3> {
    let [_, x1, x2, x3] = x.components();
    let vs: Vec<Vec3> =
        (0..=x.degree()).map(|i| [x1.coeff(i), x2.coeff(i), x3.coeff(i)]).filter(|v| !is_zero3(v)).collect();
    let first = vs.first()?;
    let normal = vs.iter().map(|v| cross(first, v)).find(|n| !is_zero3(n));
    match normal {
        Some(n) => vs.iter().all(|v| dot(&n, v).is_zero()).then_some(n),
        None => [vec3i(0, 0, 1), vec3i(1, 0, 0), vec3i(0, 1, 0)].into_iter().find(|u| dot(u, first).is_zero()),
    }
}

/// Finite samples followed by the point at infinity; empty stays empty.
pub fn trace_samples(samples: &[Scalar]) -> Vec<Param> {
    let inf = (!samples.is_empty()).then_some(Param::Infinity);
    samples.iter().cloned().map(Param::Finite).chain(inf).collect()
}

/// Parses, loads, normalizes, and factors the minimal motion of the curve.
pub fn factor_curve(spec: &CurveSpec, opts: &Options) -> Result<Factored, PipelineError> {
    let polys = spec.polynomials().at(Stage::Parse)?;
    let mode = match opts.mode {
        Some(m) => m,
        None => spec.parsed_mode().at(Stage::Parse)?.unwrap_or_default(),
    };
    let m0 = match &opts.m0 {
        Some(m) => Some(m.clone()),
        None => spec.parsed_m0().at(Stage::Parse)?,
    };
    let mut directions = spec.parsed_directions().at(Stage::Parse)?;
    let seed = opts.seed.or(spec.seed).unwrap_or(0);
    let samples = opts.samples.clone().unwrap_or_else(default_samples);

    let [x0, x1, x2, x3] = polys;
    let curve = RationalCurve::load(x0, x1, x2, x3).at(Stage::CurveLoad)?;

    let (normalized, frame) = curve.normalize();
    if mode == Mode::Planar {
        let n = plane_normal(&normalized)
            .ok_or_else(|| Error::ModeNotApplicable("curve is not planar".into()))
            .at(Stage::Normalize)?;
        directions.insert(0, n);
    }

    let motion = minmot(&normalized).at(Stage::Minmot)?;
    let factorization = tfactor(&motion, &ZeroPicker::Directions(directions)).at(Stage::Tfactor)?;
    Ok(Factored { curve, normalized, frame, motion, factorization, mode, m0, seed, samples })
}

/// Moves the factor chain into the coordinates required by the mode.
pub fn mode_chain(f: &Factored) -> crate::error::Result<FactorChain> {
    let chain = FactorChain::new(&f.motion, &f.factorization, f.frame.clone());
    match f.mode {
        Mode::Generic => Ok(chain),
        Mode::Spherical => {
            let c = common_point(&chain.factors)
                .ok_or_else(|| Error::ModeNotApplicable("joint axes do not share a point".into()))?;
            Ok(chain.translated(&c.map(|x| -x)))
        }
        Mode::Planar => {
            common_direction(&chain.factors)
                .ok_or_else(|| Error::ModeNotApplicable("joint axes are not parallel".into()))?;
            Ok(chain)
        }
    }
}

/// Runs every stage. Nothing is returned unless all checks pass.
pub fn run_pipeline(spec: &CurveSpec, opts: &Options) -> Result<PipelineOutput, PipelineError> {
    let factored = factor_curve(spec, opts)?;
    let chain = mode_chain(&factored).at(Stage::ChooseM0)?;
    let m0 = if chain.factors.len() == 1 {
        None
    } else {
        let how = match &factored.m0 {
            Some(m) => M0Mode::UserSupplied(m.clone()),
            None => factored.mode.into(),
        };
        Some(choose_m0(&chain.factors, &how, factored.seed).at(Stage::ChooseM0)?)
    };
    let linkage = synthesize(&chain, m0.as_ref(), factored.mode).at(Stage::Synthesize)?;

    let x = &factored.curve;
    verify_linkage(&linkage, x, &factored.samples).at(Stage::Verify)?;
    let bounds = count_bounds(x.degree() as i64, x.circularity() as i64).at(Stage::Verify)?;
    if linkage.link_count() as i64 > bounds.0 || linkage.joint_count() as i64 > bounds.1 {
        return Err(PipelineError {
            stage: Stage::Verify,
            error: Error::Mismatch {
                t: "counts".into(),
                linkage: format!("{} links, {} joints", linkage.link_count(), linkage.joint_count()),
                curve: format!("bounds {} links, {} joints", bounds.0, bounds.1),
            },
        });
    }

    let doc = LinkageDoc::new(&linkage, x, bounds);
    let trace = emit_trace(&linkage, &trace_samples(&factored.samples));
    let report = emit_report(&linkage, x, &factored.factorization);
    Ok(PipelineOutput { factored, linkage, doc, trace, report })
}

/// Verifies a stored linkage document against a curve specification.
pub fn check_document(doc: &LinkageDoc, spec: &CurveSpec, samples: &[Scalar]) -> Result<Linkage, PipelineError> {
    let l = doc.to_linkage().at(Stage::Parse)?;
    let [x0, x1, x2, x3] = spec.polynomials().at(Stage::Parse)?;
    let x = RationalCurve::load(x0, x1, x2, x3).at(Stage::CurveLoad)?;
    verify_linkage(&l, &x, samples).at(Stage::Verify)?;
    Ok(l)
}
