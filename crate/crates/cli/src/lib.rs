//! Command-line front end for `nefcone`: reads isogeny models as JSON, runs
//! one pipeline stage per subcommand and prints a JSON report (or an SVG
//! for `render`).
//!
//! Exit codes: 0 on success, 1 when a fundamental-domain check comes back
//! false, 2 on bad input.

pub mod json;
pub mod svg;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use nefcone::abelian::{
    ample_cone, bauer_rational_polyhedral, endo_real_decomposition, picard_number, real_mult_fundamental_domain,
    surface_nef_data, AbelianVarietyModel, RealMultDomain, SurfaceRays,
};
use nefcone::polyhedral::{PolyhedralCone, RayClass};
use nefcone::reduction::{minkowski_reduce, verify_fundamental_domain, GroupAction2D, IntegralForm, Mat2};
use nefcone::scalars::parse_rational;
use nefcone::Rational;
use num_bigint::BigInt;
use serde::Serialize;

pub use svg::render_svg;

use json::{
    int_rows, AmpleConeReport, BauerReport, BlockEntry, DecomposeReport, FactorEntry, FundDomainReport, JsonInt,
    JsonMatrix, JsonSurfaceRays, PicardReport, ReduceReport, SurfaceReport, VerifyReport,
};

#[derive(Debug, Parser)]
#[command(name = "nefcone", version, about = "Nef cones and fundamental domains of abelian varieties")]
pub struct Cli {
    /// Write the artifact here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Real endomorphism algebra of a model as matrix blocks.
    Decompose(ModelArgs),
    /// Picard number of a model.
    Picard(ModelArgs),
    /// Ample cone of a model as a sum of Hermitian cones.
    Amplecone(ModelArgs),
    /// Whether the nef cone of a model is rational polyhedral.
    Bauer(ModelArgs),
    /// Nef cone of a surface with intersection form diag(a, -b).
    Surface {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Minkowski-reduce a positive-definite binary form g11,g12,g22.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Fundamental domain for real multiplication by Z[sqrt d].
    Funddomain {
        #[command(flatten)]
        domain: DomainArgs,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Check a candidate fundamental domain for <g> on a x1^2 - b x2^2 > 0.
    Verify {
        /// Rays of Pi, e.g. "1,0;3,2".
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        /// Generator rows, e.g. "3,4;2,3".
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// SVG of the translates of the real-multiplication domain.
    Render {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value_t = 3)]
        k_range: u32,
    },
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Path to a model JSON file.
    #[arg(long)]
    pub model: PathBuf,
}

#[derive(Debug, Args)]
pub struct DomainArgs {
    #[arg(long)]
    pub d: u64,
    /// Starting ray R inside the cone.
    #[arg(long, allow_hyphen_values = true, default_value = "1,0")]
    pub ray: String,
    /// Use the fundamental unit itself when it is totally positive.
    #[arg(long)]
    pub use_unit: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, default_value_t = 12)]
    pub max_word: u32,
}

/// Bad input: exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] nefcone::Error),
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub artifact: String,
    pub exit_code: i32,
}

impl Outcome {
    fn success(artifact: String) -> Self {
        Self { artifact, exit_code: 0 }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn load_model(path: &Path) -> Result<AbelianVarietyModel, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(|t| parse_rational(t.trim()).map_err(CliError::from)).collect()
}

fn parse_int_list(s: &str) -> Result<Vec<BigInt>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<BigInt>().map_err(|_| CliError::Input(format!("not an integer: {t:?}"))))
        .collect()
}

fn parse_rows(s: &str) -> Result<Vec<Vec<Rational>>, CliError> {
    s.split(';').map(parse_list).collect()
}

fn parse_mat2(s: &str) -> Result<Mat2, CliError> {
    let rows = parse_rows(s)?;
    match rows.as_slice() {
        [r0, r1] if r0.len() == 2 && r1.len() == 2 => {
            Ok([[r0[0].clone(), r0[1].clone()], [r1[0].clone(), r1[1].clone()]])
        }
        _ => Err(CliError::Input(format!("expected a 2x2 matrix \"a,b;c,d\", got {s:?}"))),
    }
}

fn parse_ray(s: &str) -> Result<RayClass, CliError> {
    Ok(RayClass::new(&parse_list(s)?)?)
}

fn cone_rows(c: &PolyhedralCone) -> Vec<Vec<JsonInt>> {
    int_rows(c.rays().iter().map(RayClass::coords))
}

fn domain(args: &DomainArgs) -> Result<RealMultDomain, CliError> {
    Ok(real_mult_fundamental_domain(args.d, &parse_ray(&args.ray)?, args.use_unit)?)
}

/// Runs one subcommand and returns its artifact; input errors are `Err`.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let outcome = match &cli.command {
        Command::Decompose(m) => {
            let decomp = endo_real_decomposition(&load_model(&m.model)?);
            let blocks = decomp
                .blocks
                .iter()
                .map(|b| BlockEntry {
                    kind: b.kind.symbol().to_string(),
                    size: b.size,
                    origin: b.origin.clone(),
                    hermitian_dim: b.hermitian_dim(),
                })
                .collect();
            Outcome::success(to_json(&DecomposeReport { algebra: decomp.to_string(), blocks }))
        }
        Command::Picard(m) => {
            let model = load_model(&m.model)?;
            let block_dims = endo_real_decomposition(&model).blocks.iter().map(|b| b.hermitian_dim()).collect();
            Outcome::success(to_json(&PicardReport { picard_number: picard_number(&model), block_dims }))
        }
        Command::Amplecone(m) => {
            let cone = ample_cone(&load_model(&m.model)?);
            Outcome::success(to_json(&AmpleConeReport {
                cone: cone.to_string(),
                dimension: cone.dimension(),
                orthant: cone.is_orthant(),
            }))
        }
        Command::Bauer(m) => {
            let model = load_model(&m.model)?;
            let factors = model
                .factors()
                .iter()
                .map(|f| FactorEntry { id: f.id.clone(), n: f.n, picard_number: f.own_picard_number() })
                .collect();
            Outcome::success(to_json(&BauerReport { rational_polyhedral: bauer_rational_polyhedral(&model), factors }))
        }
        Command::Surface { a, b } => {
            let data = surface_nef_data(&parse_rational(a)?, &parse_rational(b)?)?;
            let rays = match &data.rays {
                SurfaceRays::Rational(rays) => JsonSurfaceRays::Rational(int_rows(rays.iter().map(RayClass::coords))),
                symbolic @ SurfaceRays::Symbolic { .. } => JsonSurfaceRays::Symbolic(symbolic.to_string()),
            };
            Outcome::success(to_json(&SurfaceReport { rational_polyhedral: data.rational_polyhedral, rays }))
        }
        Command::Reduce { form } => {
            let g = match parse_int_list(form)?.as_slice() {
                [a, b, c] => IntegralForm::new(a.clone(), b.clone(), c.clone())?,
                _ => return Err(CliError::Input(format!("expected g11,g12,g22, got {form:?}"))),
            };
            let (red, u) = minkowski_reduce(&g)?;
            Outcome::success(to_json(&ReduceReport {
                gred: [red.g11().into(), red.g12().into(), red.g22().into()],
                u: int_rows(u.entries().iter().map(|r| r.as_slice())),
            }))
        }
        Command::Funddomain { domain: args, check } => {
            let dom = domain(args)?;
            let report = verify_fundamental_domain(&dom.pi, &dom.action, check.samples, check.max_word, check.seed)?;
            let exit_code = if report.ok() { 0 } else { 1 };
            let artifact = to_json(&FundDomainReport {
                d: dom.d,
                unit: dom.unit.value().to_string(),
                pi: cone_rows(&dom.pi),
                g: JsonMatrix::from_mat2(dom.action.generator()),
                report,
            });
            Outcome { artifact, exit_code }
        }
        Command::Verify { pi, g, a, b, check } => {
            let rays = parse_rows(pi)?.iter().map(|r| RayClass::new(r)).collect::<Result<Vec<_>, _>>()?;
            let pi = PolyhedralCone::new(rays)?;
            let action = GroupAction2D::new(parse_rational(a)?, parse_rational(b)?, parse_mat2(g)?)?;
            let report = verify_fundamental_domain(&pi, &action, check.samples, check.max_word, check.seed)?;
            let exit_code = if report.ok() { 0 } else { 1 };
            let artifact =
                to_json(&VerifyReport { pi: cone_rows(&pi), g: JsonMatrix::from_mat2(action.generator()), report });
            Outcome { artifact, exit_code }
        }
        Command::Render { domain: args, k_range } => {
            let dom = domain(args)?;
            Outcome::success(render_svg(&dom.pi, &dom.action, *k_range)?)
        }
    };
    Ok(outcome)
}

/// Parses `args`, runs, and writes the artifact. Returns the process exit
/// code; diagnostics go to standard error as one line.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &outcome.artifact),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(outcome.artifact.as_bytes())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return 2;
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
