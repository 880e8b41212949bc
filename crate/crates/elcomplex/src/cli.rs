//! Command-line front end: `verify` runs the check battery at one parameter
//! pair, `reconstruct` evaluates the two-term representation formula at a
//! point, and `sweep` walks a parameter grid. Reports stream as
//! newline-delimited JSON or CSV rows.
//!
//! Exit codes: 0 all checks passed, 1 at least one failed, 2 ellipticity
//! violation, 3 pole outside the domain, 64 malformed configuration.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{AlgebraParams, ElComplex};
use crate::calculus::TestFunction;
use crate::error::{Error, Result};
use crate::quadrature::{QuadratureSpec, StarDomain};
use crate::verify::{self, CheckKind, Scenario, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_ELLIPTICITY: i32 = 2;
pub const EXIT_POLE_OUTSIDE: i32 = 3;
pub const EXIT_BAD_CONFIG: i32 = 64;

/// Node counts accepted on the command line.
pub const NODE_RANGE: (usize, usize) = (8, 1 << 20);

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "elcx",
    version,
    about = "Elliptic complex algebras: verify Cauchy/Cauchy-Pompeiu integral formulas numerically"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Run the verification battery (winding, vanishing-limit, schmidt,
    /// green-gauss, cauchy, cauchy-pompeiu) at one (alpha, beta)
    Verify(VerifyArgs),
    /// Reconstruct f(zeta) via the two-term representation formula and
    /// report the error against direct evaluation
    Reconstruct(ReconstructArgs),
    /// Run selected checks over a parameter grid
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Evaluation point / pole as 're,im'
    #[arg(long, default_value = "0.2,0.1", allow_hyphen_values = true)]
    zeta: String,

    /// Domain descriptor: 'disk:<radius>' (Euclidean disk at the origin) or
    /// 'ellipse:<radius>' (tilde-norm disk for the run's parameters)
    #[arg(long, default_value = "disk:1")]
    domain: String,

    /// Angular / contour node count
    #[arg(long = "n-theta", default_value_t = 512)]
    n_theta: usize,

    /// Radial node count
    #[arg(long = "n-r", default_value_t = 64)]
    n_r: usize,

    /// Output format (default: json for verify/reconstruct, csv for sweep)
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,

    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    beta: f64,
    /// Test function as JSON (e.g. '{"kind":"tilde_power","n":3}');
    /// replaces the built-in battery of the function-driven checks
    #[arg(long)]
    function: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct ReconstructArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    beta: f64,
    /// Test function as JSON; defaults to the identity map f(z) = z
    #[arg(long)]
    function: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Parameter grid as semicolon-separated pairs, e.g. '0.5,0;1,0;2,0'
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    /// Comma-separated subset of checks (default: all): winding,
    /// vanishing_limit, schmidt, green_gauss, cauchy, cauchy_pompeiu
    #[arg(long)]
    checks: Option<String>,
    /// Test function as JSON for the function-driven checks
    #[arg(long)]
    function: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

/// Which subcommand a validated configuration drives.
#[derive(Debug, Clone, PartialEq)]
pub enum CommandKind {
    Verify,
    Reconstruct,
    Sweep {
        grid: Vec<(f64, f64)>,
        checks: Vec<CheckKind>,
    },
}

/// Domain descriptor before parameters are known (an ellipse domain needs
/// the grid point's parameters in a sweep).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainSpec {
    Disk { radius: f64 },
    Ellipse { radius: f64 },
}

impl DomainSpec {
    pub fn to_domain(self, p: &AlgebraParams) -> StarDomain {
        match self {
            DomainSpec::Disk { radius } => StarDomain::disk(ElComplex::ZERO, radius),
            DomainSpec::Ellipse { radius } => {
                StarDomain::alg_ellipse_disk(ElComplex::ZERO, radius, p)
            }
        }
    }
}

/// A fully parsed and validated run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub alpha: f64,
    pub beta: f64,
    pub function: Option<TestFunction>,
    pub zeta: ElComplex,
    pub domain: DomainSpec,
    pub n_theta: usize,
    pub n_r: usize,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

fn parse_zeta(s: &str) -> Result<ElComplex> {
    let bad = || Error::InvalidConfig {
        what: format!("zeta must be 're,im', got '{s}'"),
    };
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    if !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(ElComplex::new(re, im))
}

fn parse_domain(s: &str) -> Result<DomainSpec> {
    let bad = || Error::InvalidConfig {
        what: format!("domain must be 'disk:<radius>' or 'ellipse:<radius>', got '{s}'"),
    };
    let (kind, radius) = s.split_once(':').ok_or_else(bad)?;
    let radius: f64 = radius.trim().parse().map_err(|_| bad())?;
    if radius <= 0.0 || !radius.is_finite() {
        return Err(bad());
    }
    match kind.trim() {
        "disk" => Ok(DomainSpec::Disk { radius }),
        "ellipse" => Ok(DomainSpec::Ellipse { radius }),
        _ => Err(bad()),
    }
}

fn parse_function(s: &str) -> Result<TestFunction> {
    serde_json::from_str(s).map_err(|e| Error::InvalidConfig {
        what: format!("bad function descriptor: {e}"),
    })
}

fn parse_grid(s: &str) -> Result<Vec<(f64, f64)>> {
    let bad = |part: &str| Error::InvalidConfig {
        what: format!("grid entries must be 'alpha,beta', got '{part}'"),
    };
    let mut grid = Vec::new();
    for part in s.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (a, b) = part.split_once(',').ok_or_else(|| bad(part))?;
        let a: f64 = a.trim().parse().map_err(|_| bad(part))?;
        let b: f64 = b.trim().parse().map_err(|_| bad(part))?;
        grid.push((a, b));
    }
    if grid.is_empty() {
        return Err(Error::InvalidConfig {
            what: "grid is empty".into(),
        });
    }
    Ok(grid)
}

fn parse_checks(s: Option<&str>) -> Result<Vec<CheckKind>> {
    match s {
        None => Ok(CheckKind::ALL.to_vec()),
        Some(s) => {
            let mut checks = Vec::new();
            for part in s.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                checks.push(part.parse()?);
            }
            if checks.is_empty() {
                return Err(Error::InvalidConfig {
                    what: "empty check list".into(),
                });
            }
            Ok(checks)
        }
    }
}

fn validate_nodes(n_theta: usize, n_r: usize) -> Result<()> {
    let (lo, hi) = NODE_RANGE;
    for (name, n) in [("n-theta", n_theta), ("n-r", n_r)] {
        if n < lo || n > hi {
            return Err(Error::InvalidConfig {
                what: format!("{name} = {n} outside [{lo}, {hi}]"),
            });
        }
    }
    Ok(())
}

fn build_config(cli: Cli) -> Result<RunConfig> {
    let (command, alpha, beta, function, common) = match cli.command {
        CliCommand::Verify(a) => (CommandKind::Verify, a.alpha, a.beta, a.function, a.common),
        CliCommand::Reconstruct(a) => (
            CommandKind::Reconstruct,
            a.alpha,
            a.beta,
            a.function,
            a.common,
        ),
        CliCommand::Sweep(a) => {
            let grid = parse_grid(&a.grid)?;
            let checks = parse_checks(a.checks.as_deref())?;
            (
                CommandKind::Sweep { grid, checks },
                f64::NAN,
                f64::NAN,
                a.function,
                a.common,
            )
        }
    };
    validate_nodes(common.n_theta, common.n_r)?;
    let function = function.as_deref().map(parse_function).transpose()?;
    let output_format = common.format.unwrap_or(match command {
        CommandKind::Sweep { .. } => OutputFormat::Csv,
        _ => OutputFormat::Json,
    });
    Ok(RunConfig {
        command,
        alpha,
        beta,
        function,
        zeta: parse_zeta(&common.zeta)?,
        domain: parse_domain(&common.domain)?,
        n_theta: common.n_theta,
        n_r: common.n_r,
        output_format,
        output_path: common.out,
    })
}

fn write_reports_json(w: &mut dyn Write, reports: &[VerificationReport]) -> io::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut *w, r)?;
        writeln!(w)?;
    }
    Ok(())
}

fn write_reports_csv(w: &mut dyn Write, reports: &[VerificationReport]) -> io::Result<()> {
    writeln!(w, "alpha,beta,check,abs_error,passed")?;
    for r in reports {
        writeln!(
            w,
            "{},{},{},{:e},{}",
            r.alpha, r.beta, r.check, r.abs_error, r.passed
        )?;
    }
    Ok(())
}

fn emit(cfg: &RunConfig, reports: &[VerificationReport]) -> Result<()> {
    let io_err = |e: io::Error| Error::InvalidConfig {
        what: format!("cannot write output: {e}"),
    };
    let mut sink: BufWriter<Box<dyn Write>> = match &cfg.output_path {
        Some(path) => BufWriter::new(Box::new(File::create(path).map_err(io_err)?)),
        None => BufWriter::new(Box::new(io::stdout())),
    };
    match cfg.output_format {
        OutputFormat::Json => write_reports_json(&mut sink, reports).map_err(io_err)?,
        OutputFormat::Csv => write_reports_csv(&mut sink, reports).map_err(io_err)?,
    }
    sink.flush().map_err(io_err)
}

/// Builds the scenario shared by the battery checks. A kernel test function
/// whose pole touches the closed domain is rejected up front: the smooth
/// checks evaluate it on the closure.
fn scenario_for(cfg: &RunConfig, p: &AlgebraParams) -> Result<Scenario> {
    let domain = cfg.domain.to_domain(p);
    if let Some(TestFunction::Kernel { pole }) = &cfg.function {
        let (dist, radius) = match cfg.domain {
            DomainSpec::Disk { radius } => (pole.norm_euclid(), radius),
            DomainSpec::Ellipse { radius } => (pole.tilde().norm(p), radius),
        };
        if dist <= radius * (1.0 + 1e-9) {
            return Err(Error::InvalidConfig {
                what: "kernel pole must lie strictly outside the domain".into(),
            });
        }
    }
    Ok(Scenario {
        domain,
        zeta: cfg.zeta,
        function: cfg.function.clone(),
    })
}

/// Executes a validated configuration and returns (reports, exit code).
pub fn execute(cfg: &RunConfig) -> Result<(Vec<VerificationReport>, i32)> {
    let spec = QuadratureSpec::new(cfg.n_theta, cfg.n_r)?;
    let reports = match &cfg.command {
        CommandKind::Verify => {
            let p = AlgebraParams::new(cfg.alpha, cfg.beta)?;
            let scenario = scenario_for(cfg, &p)?;
            let mut reports = Vec::new();
            for kind in CheckKind::ALL {
                reports.extend(verify::run_check(kind, &p, &scenario, spec)?);
            }
            reports
        }
        CommandKind::Reconstruct => {
            let p = AlgebraParams::new(cfg.alpha, cfg.beta)?;
            let scenario = scenario_for(cfg, &p)?;
            let f = scenario
                .function
                .clone()
                .unwrap_or_else(TestFunction::identity);
            let mut report = verify::cauchy_pompeiu(&f, &scenario.domain, scenario.zeta, &p, spec)?;
            report.check = format!("reconstruct[{}]", f.label());
            vec![report]
        }
        CommandKind::Sweep { grid, checks } => {
            // the scenario is rebuilt per grid point so an ellipse domain
            // follows the point's parameters
            let mut reports = Vec::new();
            for &(alpha, beta) in grid {
                match AlgebraParams::new(alpha, beta) {
                    Ok(p) => {
                        let point_cfg = RunConfig {
                            alpha,
                            beta,
                            command: CommandKind::Verify,
                            ..cfg.clone()
                        };
                        let scenario = scenario_for(&point_cfg, &p)?;
                        for &kind in checks {
                            reports.extend(verify::run_check(kind, &p, &scenario, spec)?);
                        }
                    }
                    Err(Error::EllipticityViolation { .. }) => {
                        reports.extend(verify::sweep(
                            &[(alpha, beta)],
                            checks,
                            &Scenario::default(),
                            spec,
                        )?);
                    }
                    Err(e) => return Err(e),
                }
            }
            reports
        }
    };
    let code = if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Ok((reports, code))
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::EllipticityViolation { .. } => EXIT_ELLIPTICITY,
        Error::PoleOutsideDomain => EXIT_POLE_OUTSIDE,
        _ => EXIT_BAD_CONFIG,
    }
}

/// Parses arguments, runs the command, writes the report stream, and returns
/// the process exit code.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_BAD_CONFIG,
            };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match build_config(cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_BAD_CONFIG;
        }
    };
    match execute(&cfg).and_then(|(reports, code)| emit(&cfg, &reports).map(|()| code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
