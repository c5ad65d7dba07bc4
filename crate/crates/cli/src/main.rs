use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use linkdraw::algebra::{parse_scalar, DualQuaternion, RotationQuaternion, Scalar};
use linkdraw::linkage::{count_bounds, Mode};
use linkdraw::pipeline::{
    check_document, factor_curve, run_pipeline, CurveSpec, LinkageDoc, Options, PipelineError, Stage,
};
use linkdraw::verify::default_samples;
use linkdraw::Error;

/// Synthesize revolute-joint linkages that draw bounded rational space curves.
#[derive(Parser)]
#[command(name = "linkdraw", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and write linkage.json, trace.csv and report.txt.
    Synth {
        spec: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Directory for the output files.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Print the minimal motion and its factorization.
    Factor {
        spec: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a linkage document against a curve specification.
    Check {
        linkage: PathBuf,
        spec: PathBuf,
        /// Comma-separated rational parameters.
        #[arg(long)]
        samples: Option<String>,
    },
    /// Print the link and joint bounds for degree d and circularity c.
    Bounds {
        #[arg(allow_hyphen_values = true)]
        d: i64,
        #[arg(allow_hyphen_values = true)]
        c: i64,
    },
}

#[derive(Args)]
struct Common {
    /// generic, planar or spherical.
    #[arg(long)]
    mode: Option<String>,
    /// Eight comma-separated rationals p0,p1,p2,p3,q0,q1,q2,q3.
    #[arg(long, allow_hyphen_values = true)]
    m0: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated rational parameters.
    #[arg(long, allow_hyphen_values = true)]
    samples: Option<String>,
}

fn parse_err(at: &str, msg: impl Into<String>) -> PipelineError {
    PipelineError { stage: Stage::Parse, error: Error::Parse { at: at.into(), msg: msg.into() } }
}

fn scalars(s: &str, at: &str) -> Result<Vec<Scalar>, PipelineError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(str::trim)
        .enumerate()
        .map(|(i, x)| {
            parse_scalar(x).ok_or_else(|| parse_err(&format!("{at}[{i}]"), format!("'{x}' is not a rational number")))
        })
        .collect()
}

fn options(common: &Common) -> Result<Options, PipelineError> {
    let mode = common
        .mode
        .as_deref()
        .map(str::parse::<Mode>)
        .transpose()
        .map_err(|error| PipelineError { stage: Stage::Parse, error })?;
    let m0 = match &common.m0 {
        None => None,
        Some(s) => {
            let c: [Scalar; 8] = scalars(s, "--m0")?
                .try_into()
                .map_err(|v: Vec<Scalar>| parse_err("--m0", format!("expected 8 entries, found {}", v.len())))?;
            let h = RotationQuaternion::new(DualQuaternion::from_components(c))
                .map_err(|e| parse_err("--m0", e.to_string()))?;
            Some(h)
        }
    };
    let samples = common.samples.as_deref().map(|s| scalars(s, "--samples")).transpose()?;
    Ok(Options { mode, m0, seed: common.seed, samples })
}

fn read(path: &Path) -> Result<String, PipelineError> {
    fs::read_to_string(path)
        .map_err(|e| PipelineError { stage: Stage::Parse, error: Error::Io(format!("{}: {e}", path.display())) })
}

fn read_spec(path: &Path) -> Result<CurveSpec, PipelineError> {
    CurveSpec::from_json(&read(path)?).map_err(|error| PipelineError { stage: Stage::Parse, error })
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<(), PipelineError> {
    let emit = |e: std::io::Error| PipelineError {
        stage: Stage::Emit,
        error: Error::Io(format!("{}: {e}", dir.join(name).display())),
    };
    fs::create_dir_all(dir).map_err(emit)?;
    fs::write(dir.join(name), contents).map_err(emit)
}

fn run(cli: Cli) -> Result<(), PipelineError> {
    match cli.command {
        Command::Synth { spec, common, out_dir } => {
            let out = run_pipeline(&read_spec(&spec)?, &options(&common)?)?;
            write(&out_dir, "linkage.json", &(out.doc.to_json() + "\n"))?;
            write(&out_dir, "trace.csv", &out.trace)?;
            write(&out_dir, "report.txt", &out.report)?;
            print!("{}", out.report);
        }
        Command::Factor { spec, common } => {
            let f = factor_curve(&read_spec(&spec)?, &options(&common)?)?;
            println!("degree d = {}, circularity c = {}", f.curve.degree(), f.curve.circularity());
            println!("frame: {}", f.frame);
            println!("C = {}", f.motion);
            println!("H = {}", f.factorization.cofactor);
            for (i, h) in f.factorization.factors.iter().enumerate() {
                println!("h{} = {h}", i + 1);
            }
        }
        Command::Check { linkage, spec, samples } => {
            let doc = LinkageDoc::from_json(&read(&linkage)?)
                .map_err(|error| PipelineError { stage: Stage::Parse, error })?;
            let samples = match samples {
                Some(s) => scalars(&s, "--samples")?,
                None => default_samples(),
            };
            let l = check_document(&doc, &read_spec(&spec)?, &samples)?;
            println!("ok: {} links, {} joints, {} samples", l.link_count(), l.joint_count(), samples.len());
        }
        Command::Bounds { d, c } => {
            let (links, joints) = count_bounds(d, c).map_err(|error| PipelineError { stage: Stage::Parse, error })?;
            println!("links {links}");
            println!("joints {joints}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
