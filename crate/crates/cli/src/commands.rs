use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use koszul::checks::{self, Verdict};
use koszul::complexes::Reading;
use koszul::exactla::{rat_to_i64, Field, FieldSpec, GaussianRationals, Mat, PrimeField, Rationals};
use koszul::families::{expected_matrices, poincare_series, FamilyKind, FamilySpec};
use koszul::homalg::{Budget, GradedAlgebra, RationalSeries};

use crate::file::{parse_presentation, FamilyLine, ParseError, PresentationFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] koszul::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(koszul::Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "koszul",
    version,
    about = "Exact Koszul, Gorenstein and Hochschild checks for N-homogeneous algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Highest internal degree computed (default 8, or 7 with four generators)
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Coefficient field: Q, Qi or Fp:<prime>
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest matrix, in dense cells, any step may build
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Add wall-clock timing to the report
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Clone, Args)]
struct Source {
    /// Presentation file
    file: Option<PathBuf>,
    /// Family kind instead of a file, e.g. yang-mills
    #[arg(long)]
    family: Option<FamilyKind>,
    #[arg(long)]
    s: Option<usize>,
    /// Family parameter key=value (metric, eps, zeta, alpha, B), repeatable
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graded dimensions of A
    Dims(Source),
    /// Dimensions of the dual components
    Dual(Source),
    /// Graded dimensions against a Poincaré series
    Hilbert {
        #[command(flatten)]
        source: Source,
        /// Series numerator coefficients, comma separated (default: the family's series)
        #[arg(long, allow_hyphen_values = true)]
        numerator: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        denominator: Option<String>,
    },
    /// Acyclicity of the Koszul complex in positive degrees
    Koszul(Source),
    /// The Gorenstein property of global dimension D
    Gorenstein {
        #[command(flatten)]
        source: Source,
        #[arg(long = "D")]
        global_dim: Option<usize>,
    },
    /// Hochschild homology and its Euler-Poincaré identities
    Hochschild(Source),
    /// Hochschild homology against cohomology under an internal shift
    Duality(Source),
    /// Centrality of a quadratic element
    Center {
        #[command(flatten)]
        source: Source,
        /// Work in the dual algebra
        #[arg(long)]
        dual: bool,
        /// +1 for central, -1 for sign-central
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i32,
        /// metric (raised on A, lowered on the dual) or identity
        #[arg(long, default_value = "metric")]
        form: String,
    },
    /// Frobenius pairings and the Nakayama automorphism of the dual
    Frobenius {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        top: Option<usize>,
    },
    /// Whether a target algebra is a quotient of the source
    Quotient {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long)]
        target_family: Option<FamilyKind>,
        #[arg(long)]
        target_s: Option<usize>,
        #[arg(long = "target-param", value_name = "KEY=VALUE")]
        target_params: Vec<String>,
        /// Images of the source generators, comma separated (default: identity)
        #[arg(long)]
        map: Option<String>,
    },
    /// Generic differentials against the known structure matrices
    Matrices(Source),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dims(_) => "dims",
            Command::Dual(_) => "dual",
            Command::Hilbert { .. } => "hilbert",
            Command::Koszul(_) => "koszul",
            Command::Gorenstein { .. } => "gorenstein",
            Command::Hochschild(_) => "hochschild",
            Command::Duality(_) => "duality",
            Command::Center { .. } => "center",
            Command::Frobenius { .. } => "frobenius",
            Command::Quotient { .. } => "quotient",
            Command::Matrices(_) => "matrices",
        }
    }

    fn source(&self) -> &Source {
        match self {
            Command::Dims(s)
            | Command::Dual(s)
            | Command::Koszul(s)
            | Command::Hochschild(s)
            | Command::Duality(s)
            | Command::Matrices(s) => s,
            Command::Hilbert { source, .. }
            | Command::Gorenstein { source, .. }
            | Command::Center { source, .. }
            | Command::Frobenius { source, .. }
            | Command::Quotient { source, .. } => source,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub algebra: String,
    pub command: String,
    pub cap: usize,
    pub field: String,
    pub dims: Vec<usize>,
    pub dual_dims: Vec<usize>,
    pub verdicts: Vec<Verdict>,
    pub tables: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn load(source: &Source, what: &str) -> Result<PresentationFile, CliError> {
    match (&source.file, source.family) {
        (Some(_), Some(_)) => Err(CliError::Usage(format!(
            "give either a {what} file or --family, not both"
        ))),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            parse_presentation(&text).map_err(|e| CliError::Parse {
                path: path.display().to_string(),
                source: e,
            })
        }
        (None, Some(kind)) => family_file(kind, source.s, &source.params),
        (None, None) => Err(CliError::Usage(format!("no {what}: give a file or --family"))),
    }
}

fn family_file(kind: FamilyKind, s: Option<usize>, params: &[String]) -> Result<PresentationFile, CliError> {
    let mut kv = Vec::new();
    if let Some(s) = s {
        kv.push(("s".to_string(), s.to_string()));
    }
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected key=value, got {p:?}")))?;
        kv.push((k.to_string(), v.to_string()));
    }
    Ok(PresentationFile::from_family(
        FamilyLine::new(kind, kv).map_err(CliError::Usage)?,
    ))
}

fn int_list(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad integer {x:?}")))
        })
        .collect()
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

struct Context<'a> {
    cli: &'a Cli,
    file: &'a PresentationFile,
    target: Option<PresentationFile>,
    cap: usize,
    budget: Budget,
}

fn execute<F: Field>(field: F, ctx: &Context<'_>) -> Result<Report, CliError> {
    let cap = ctx.cap;
    let pres = ctx.file.to_presentation(&field)?;
    let spec = ctx.file.family_spec();
    let mut a = GradedAlgebra::with_budget(pres.clone(), ctx.budget);
    let dims = a.graded_dims(cap)?;
    let dual_dims = (0..=cap)
        .map(|n| Ok(a.dual_component(n)?.dim()))
        .collect::<koszul::Result<Vec<_>>>()?;
    let mut verdicts = Vec::new();
    let mut tables = BTreeMap::new();
    match &ctx.cli.command {
        Command::Dims(_) | Command::Dual(_) => {}
        Command::Hilbert {
            numerator, denominator, ..
        } => {
            let series = match (numerator, denominator) {
                (None, None) => spec
                    .as_ref()
                    .map(poincare_series)
                    .transpose()?
                    .flatten()
                    .ok_or_else(|| CliError::Usage("no known series: give --numerator and --denominator".into()))?,
                (n, d) => RationalSeries::new(
                    int_list(n.as_deref().unwrap_or("1"))?,
                    int_list(d.as_deref().unwrap_or("1"))?,
                )?,
            };
            let (v, cmp) = checks::hilbert(&mut a, &series, cap)?;
            let expected = cmp
                .expected
                .iter()
                .map(|r| {
                    rat_to_i64(r).ok_or_else(|| CliError::Usage(format!("series coefficient {r} is not an integer")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            tables.insert("series".into(), json!({ "expected": expected, "actual": cmp.actual }));
            verdicts.push(v);
        }
        Command::Koszul(_) => {
            let (v, t) = checks::koszulity(&mut a, cap)?;
            tables.insert("koszul".into(), to_value(&t));
            verdicts.push(v);
        }
        Command::Gorenstein { global_dim, .. } => {
            let d = match global_dim {
                Some(d) => *d,
                None => {
                    let big_n = pres.degree();
                    (0..)
                        .take_while(|&k| {
                            let nu = koszul::complexes::koszul_nu(big_n, k);
                            nu <= cap && dual_dims[nu] > 0
                        })
                        .count()
                        .saturating_sub(1)
                }
            };
            let (v, t) = checks::gorenstein(&mut a, d, cap)?;
            tables.insert("l_complex".into(), to_value(&t));
            verdicts.push(v);
        }
        Command::Hochschild(_) => {
            let (v, t) = checks::euler_poincare(&mut a, cap)?;
            tables.insert("hochschild".into(), to_value(&t));
            verdicts.push(v);
        }
        Command::Duality(_) => {
            let (v, t) = checks::poincare_duality(&mut a, cap)?;
            tables.insert("duality".into(), to_value(&t));
            verdicts.push(v);
        }
        Command::Center { dual, sign, form, .. } => {
            let g = a.generators();
            let one = |i: usize, j: usize| if i == j { field.one() } else { field.zero() };
            let coefficients: Vec<Vec<F::Elem>> = match form.as_str() {
                "identity" => (0..g).map(|i| (0..g).map(|j| one(i, j)).collect()).collect(),
                "metric" => {
                    let lower = spec
                        .as_ref()
                        .filter(|s| s.kind.uses_metric())
                        .map(FamilySpec::metric_lower)
                        .ok_or_else(|| CliError::Usage("--form metric needs a family with a metric".into()))?;
                    let rows = lower
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(|c| field.from_coeff(c))
                                .collect::<koszul::Result<Vec<_>>>()
                        })
                        .collect::<koszul::Result<Vec<_>>>()?;
                    let m = Mat::from_dense(field.clone(), g, &rows)?;
                    if *dual {
                        m.to_dense()
                    } else {
                        m.inverse()?.to_dense()
                    }
                }
                other => return Err(CliError::Usage(format!("unknown form {other:?}"))),
            };
            let mut dual_algebra;
            let target = if *dual {
                dual_algebra = GradedAlgebra::with_budget(pres.dual(), ctx.budget);
                &mut dual_algebra
            } else {
                &mut a
            };
            let c = checks::quadratic_element(target, &coefficients)?;
            let label = format!("{form} form{}", if *dual { " in the dual" } else { "" });
            verdicts.push(checks::centrality(target, label, &c, *sign, cap)?);
        }
        Command::Frobenius { top, .. } => {
            let top = match top {
                Some(t) => *t,
                None => dual_dims
                    .iter()
                    .rposition(|&d| d > 0)
                    .filter(|&t| t < cap)
                    .ok_or_else(|| CliError::Usage("dual not finite below the cap: give --top".into()))?,
            };
            let mut d = GradedAlgebra::with_budget(pres.dual(), ctx.budget);
            let (v, r) = checks::frobenius(&mut d, top)?;
            tables.insert("frobenius".into(), to_value(&r));
            verdicts.push(v);
        }
        Command::Quotient { map, .. } => {
            let tfile = ctx.target.as_ref().expect("loaded with the source");
            let mut t = GradedAlgebra::with_budget(tfile.to_presentation(&field)?, ctx.budget);
            let gen_map: Vec<usize> = match map {
                Some(m) => int_list(m)?
                    .into_iter()
                    .map(|x| usize::try_from(x).map_err(|_| CliError::Usage(format!("bad generator {x}"))))
                    .collect::<Result<_, _>>()?,
                None => (0..pres.generators()).collect(),
            };
            verdicts.push(checks::quotient_map(&pres, &mut t, &gen_map)?);
        }
        Command::Matrices(_) => {
            let spec = spec.ok_or_else(|| CliError::Usage("matrices needs a family".into()))?;
            if spec.kind == FamilyKind::YangMills {
                verdicts.push(checks::ym_small_complex_check(&mut a, &spec, cap)?);
                verdicts.push(checks::ym_resolution_check(&mut a, &spec, cap, Reading::Corrected)?);
            } else {
                expected_matrices(&field, &spec)?;
                verdicts.push(checks::expected_matrix_check(&mut a, &spec, cap)?);
            }
        }
    }
    Ok(Report {
        algebra: pres.name().to_string(),
        command: ctx.cli.command.name().to_string(),
        cap,
        field: field.spec().to_string(),
        dims,
        dual_dims,
        verdicts,
        tables,
        timing: None,
    })
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let file = load(cli.command.source(), "presentation")?;
    let target = match &cli.command {
        Command::Quotient {
            target,
            target_family,
            target_s,
            target_params,
            ..
        } => {
            let src = Source {
                file: target.clone(),
                family: *target_family,
                s: *target_s,
                params: target_params.clone(),
            };
            Some(load(&src, "target")?)
        }
        _ => None,
    };
    let default_cap = if file.generator_count() <= 3 { 8 } else { 7 };
    let default_field = match (
        file.default_field(),
        target.as_ref().map(PresentationFile::default_field),
    ) {
        (FieldSpec::Rationals, Some(t)) => t,
        (f, _) => f,
    };
    let ctx = Context {
        cli,
        file: &file,
        target,
        cap: cli.cap.unwrap_or(default_cap),
        budget: cli
            .budget
            .map_or_else(Budget::default, |max_cells| Budget { max_cells }),
    };
    match cli.field.unwrap_or(default_field) {
        FieldSpec::Rationals => execute(Rationals, &ctx),
        FieldSpec::GaussianRationals => execute(GaussianRationals, &ctx),
        FieldSpec::PrimeField { modulus } => execute(PrimeField::new(modulus)?, &ctx),
    }
}

/// Parses `argv` (program name first), runs the command and renders the
/// report. Exit codes: 0 all verdicts pass, 1 a verdict fails, 2 bad input,
/// 3 budget exceeded.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let start = Instant::now();
    let mut report = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    if cli.timing {
        report.timing = Some(Timing {
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
    let code = if report.passed() { 0 } else { 1 };
    let mut text = serde_json::to_string_pretty(&to_value(&report)).expect("report serializes");
    text.push('\n');
    let failed: Vec<&str> = report
        .verdicts
        .iter()
        .filter(|v| !v.passed())
        .map(|v| v.name.as_str())
        .collect();
    let stderr = if failed.is_empty() {
        String::new()
    } else {
        format!("not passed: {}\n", failed.join(", "))
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr,
            },
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {}: {e}\n", path.display()),
            },
        },
        None => Outcome {
            code,
            stdout: text,
            stderr,
        },
    }
}
