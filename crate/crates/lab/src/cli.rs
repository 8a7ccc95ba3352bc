//! `sharpnorm` command line.
//!
//! Exit codes: 0 when everything checked passes, 1 when a check fails or the
//! numerics refuse the input, 2 for usage and parse errors.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use sharpnorm_core::extremal::{certify_lower_bound, gamma_schedule};
use sharpnorm_core::hilbert::{hilbert_fft, hilbert_pv, Boundary, PiecewiseLinearExtension, SampledSignal};
use sharpnorm_core::{compute_sharp_constant, OperatorParams};

use crate::format::fmt17;
use crate::manifest::{CheckKind, CheckSummary, LocationSummary, RunManifest};
use crate::signal_io::{read_signal, write_extension, write_signal, write_table, CsvError};
use crate::suites::{self, Context, Suite, SuiteOutcome, DEFAULT_RADII};
use crate::tolerances::{Tolerances, ENV_VAR};

pub const SWEEP_HEADER: [&str; 4] = ["p", "B_p", "norm", "t0"];
pub const EXTREMAL_HEADER: [&str; 6] = ["gamma", "A", "B", "ratio", "lower", "upper"];
pub const BP_HEADER: [&str; 4] = ["B_p", "norm", "t0", "bracket_width"];
pub const CERTIFY_HEADER: [&str; 8] =
    ["suite", "check", "kind", "worst_violation", "tolerance", "samples", "pass", "location"];
pub const DEFAULT_MANIFEST: &str = "sharpnorm-manifest.json";

#[derive(Debug, Parser)]
#[command(
    name = "sharpnorm",
    version,
    about = "Sharp L^p norms of aI + bH and numerical certificates for them",
    after_help = "Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.\n\
                  Tolerance overrides: the file named by SHARPNORM_TOLERANCES (key=value lines), \
                  then --set flags."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sharp constant B_p, the norm B_p^(1/p), the maximizing angle and its bracket.
    ///
    /// CSV columns: B_p,norm,t0,bracket_width
    Bp(BpArgs),
    /// Tabulates B_p at geometrically spaced exponents.
    ///
    /// CSV columns: p,B_p,norm,t0
    Sweep(SweepArgs),
    /// Runs check suites, prints a pass/fail table and writes a run manifest.
    ///
    /// CSV columns: suite,check,kind,worst_violation,tolerance,samples,pass,location
    Certify(CertifyArgs),
    /// Conjugate function of a sampled signal.
    ///
    /// Input and output CSV columns: x,value
    Hilbert(HilbertArgs),
    /// Mass pairs and norm ratios of the extremal family over a gamma schedule.
    ///
    /// CSV columns: gamma,A,B,ratio,lower,upper
    Extremal(ExtremalArgs),
    /// Harmonic extension of a sampled signal to horizontal lines in the upper half-plane.
    ///
    /// CSV columns: x,y,u,v
    Extend(ExtendArgs),
    /// Reruns a certify manifest and compares every reported number bitwise.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OperatorArgs {
    /// Coefficient of the identity.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Coefficient of the Hilbert transform.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Exponent, greater than 1.
    #[arg(long)]
    pub p: f64,
}

impl OperatorArgs {
    fn params(&self) -> Result<OperatorParams, Failure> {
        OperatorParams::new(self.a, self.b, self.p).map_err(Failure::from)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    JsonLines,
}

#[derive(Debug, Args)]
pub struct BpArgs {
    #[command(flatten)]
    pub operator: OperatorArgs,
    /// Bracket width for the angle refinement.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long)]
    pub p_min: f64,
    #[arg(long)]
    pub p_max: f64,
    #[arg(long, default_value_t = 50)]
    pub steps: usize,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output CSV; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Inequality5,
    Subharmonic,
    Extremal,
    Boundary,
    NormBound,
    All,
}

impl Which {
    fn suites(self) -> Vec<Suite> {
        match self {
            Which::Inequality5 => vec![Suite::Inequality5],
            Which::Subharmonic => vec![Suite::Subharmonic],
            Which::Extremal => vec![Suite::Extremal],
            Which::Boundary => vec![Suite::Boundary],
            Which::NormBound => vec![Suite::NormBound],
            Which::All => Suite::ALL.to_vec(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Which::All => "all",
            other => other.suites()[0].name(),
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        <Which as ValueEnum>::from_str(name, false).ok()
    }
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub operator: OperatorArgs,
    #[arg(long, value_enum, default_value_t = Which::All)]
    pub which: Which,
    /// Seed for the randomized grids.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Manifest path.
    #[arg(long, default_value = DEFAULT_MANIFEST)]
    pub out: PathBuf,
    /// Circle radii for the boundary suite.
    #[arg(long = "R-list", value_delimiter = ',', default_values_t = DEFAULT_RADII.to_vec())]
    pub r_list: Vec<f64>,
    /// Tolerance override `key=value`; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fft,
    Pv,
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    /// Input CSV with columns x,value.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Fft)]
    pub method: Method,
    /// Treat the window as one period instead of requiring decay at the edges.
    #[arg(long)]
    pub periodic: bool,
    /// Output CSV; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[command(flatten)]
    pub operator: OperatorArgs,
    /// Schedule gamma_k = pi/(2p) (1 - 2^-k) for k in k_min..=k_max.
    #[arg(long, default_value_t = 3)]
    pub k_min: i32,
    #[arg(long, default_value_t = 12)]
    pub k_max: i32,
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExtendArgs {
    /// Input CSV with columns x,value.
    pub input: PathBuf,
    /// Heights of the horizontal lines.
    #[arg(long = "y-list", value_delimiter = ',', default_values_t = vec![0.1, 1.0, 10.0])]
    pub y_list: Vec<f64>,
    /// Use every n-th grid node as an abscissa.
    #[arg(long, default_value_t = 1)]
    pub stride: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable input, invalid parameters: exit 2.
    Usage(anyhow::Error),
    /// The numerics ran and something failed or was refused: exit 1.
    Check(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 1,
        }
    }
}

impl From<sharpnorm_core::Error> for Failure {
    fn from(e: sharpnorm_core::Error) -> Self {
        use sharpnorm_core::Error as E;
        match e {
            E::Domain(_) | E::Empty(_) => Failure::Usage(e.into()),
            _ => Failure::Check(e.into()),
        }
    }
}

impl From<CsvError> for Failure {
    fn from(e: CsvError) -> Self {
        Failure::Usage(e.into())
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Usage(e.into())
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            match &f {
                Failure::Usage(e) | Failure::Check(e) => eprintln!("error: {e:#}"),
            }
            ExitCode::from(f.code())
        }
    }
}

/// Runs a parsed command and returns its exit code.
pub fn run(command: Command) -> Result<u8, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Bp(args) => cmd_bp(&args, &mut out),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Certify(args) => cmd_certify(&args, &mut out),
        Command::Hilbert(args) => cmd_hilbert(&args),
        Command::Extremal(args) => cmd_extremal(&args),
        Command::Extend(args) => cmd_extend(&args),
        Command::Replay(args) => cmd_replay(&args, &mut out),
    }
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(io_failure)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn json_number(x: f64) -> String {
    if x.is_finite() {
        fmt17(x)
    } else {
        "null".into()
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn json_line(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("{}:{v}", json_string(k))).collect();
    format!("{{{}}}", body.join(","))
}

/// Tolerances from built-ins, the override file and `--set` flags, in that order.
pub fn load_tolerances(set: &[String]) -> Result<Tolerances, Failure> {
    let mut t = Tolerances::from_env().map_err(|e| usage(anyhow!("{ENV_VAR}: {e}")))?;
    for s in set {
        t.apply_assignment(s).map_err(usage)?;
    }
    Ok(t)
}

fn cmd_bp(args: &BpArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let params = args.operator.params()?;
    let tol = match args.tol {
        Some(t) => t,
        None => load_tolerances(&[])?.get("sharp_constant"),
    };
    let sharp = compute_sharp_constant(&params, tol)?;
    let values = [sharp.value, sharp.norm, sharp.t0, sharp.bracket_width];
    match args.format {
        Format::Table => {
            for (name, v) in BP_HEADER.iter().zip(values) {
                writeln!(out, "{name:<14}{}", fmt17(v)).map_err(io_failure)?;
            }
        }
        Format::Csv => {
            write_table(&mut *out, &BP_HEADER, &[values.to_vec()])?;
        }
        Format::JsonLines => {
            let fields: Vec<(&str, String)> = BP_HEADER.iter().copied().zip(values.map(json_number)).collect();
            writeln!(out, "{}", json_line(&fields)).map_err(io_failure)?;
        }
    }
    Ok(0)
}

/// `steps` exponents geometrically spaced on `[p_min, p_max]`.
pub fn geometric_exponents(p_min: f64, p_max: f64, steps: usize) -> Vec<f64> {
    let ratio = (p_max / p_min).ln() / (steps - 1) as f64;
    (0..steps)
        .map(|k| match k {
            0 => p_min,
            k if k == steps - 1 => p_max,
            k => p_min * (ratio * k as f64).exp(),
        })
        .collect()
}

fn cmd_sweep(args: &SweepArgs) -> Result<u8, Failure> {
    if !(args.p_min > 1.0 && args.p_max > args.p_min && args.p_max.is_finite()) {
        return Err(usage(anyhow!("need 1 < p_min < p_max")));
    }
    if args.steps < 2 {
        return Err(usage(anyhow!("need at least 2 steps")));
    }
    let tol = match args.tol {
        Some(t) => t,
        None => load_tolerances(&[])?.get("sharp_constant"),
    };
    let mut rows = Vec::with_capacity(args.steps);
    for p in geometric_exponents(args.p_min, args.p_max, args.steps) {
        let params = OperatorParams::new(args.a, args.b, p)?;
        let sharp = compute_sharp_constant(&params, tol)?;
        rows.push(vec![p, sharp.value, sharp.norm, sharp.t0]);
    }
    let mut w = output(&args.out)?;
    write_table(&mut w, &SWEEP_HEADER, &rows)?;
    w.flush().map_err(io_failure)?;
    Ok(0)
}

/// Runs the suites concurrently and returns their outcomes in the order given.
pub fn run_suites(ctx: &Context, selected: &[Suite]) -> Result<Vec<SuiteOutcome>, Failure> {
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected.iter().map(|&s| scope.spawn(move || suites::run(s, ctx))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    results.into_iter().map(|r| r.map_err(Failure::from)).collect()
}

/// Exit code for a list of summaries: diagnostics never fail a run.
pub fn exit_code(results: &[CheckSummary]) -> u8 {
    if results.iter().all(|r| r.kind == CheckKind::Diagnostic || r.pass) {
        0
    } else {
        1
    }
}

fn certify_parameters(args: &CertifyArgs) -> BTreeMap<String, String> {
    let o = &args.operator;
    let radii: Vec<String> = args.r_list.iter().map(|r| format!("{r:?}")).collect();
    BTreeMap::from([
        ("a".to_string(), format!("{:?}", o.a)),
        ("b".to_string(), format!("{:?}", o.b)),
        ("p".to_string(), format!("{:?}", o.p)),
        ("which".to_string(), args.which.name().to_string()),
        ("R-list".to_string(), radii.join(",")),
    ])
}

fn certify_results(
    params: OperatorParams,
    which: Which,
    tolerances: Tolerances,
    seed: u64,
    radii: Vec<f64>,
) -> Result<Vec<CheckSummary>, Failure> {
    let ctx = Context::new(params, tolerances, seed, radii)?;
    let outcomes = run_suites(&ctx, &which.suites())?;
    Ok(outcomes.iter().flat_map(SuiteOutcome::summaries).collect())
}

fn location_text(loc: &Option<LocationSummary>) -> String {
    match loc {
        Some(LocationSummary::Point([x, y])) => format!("z={} {}", fmt17(*x), fmt17(*y)),
        Some(LocationSummary::Angle(t)) => format!("t={}", fmt17(*t)),
        Some(LocationSummary::Parameter(s)) => format!("s={}", fmt17(*s)),
        None => String::new(),
    }
}

fn kind_text(kind: CheckKind) -> &'static str {
    match kind {
        CheckKind::Check => "check",
        CheckKind::Diagnostic => "diagnostic",
    }
}

pub fn print_summaries(out: &mut dyn Write, results: &[CheckSummary], format: Format) -> Result<(), Failure> {
    let worst = |r: &CheckSummary| r.worst_violation.map_or("nan".to_string(), fmt17);
    match format {
        Format::Table => {
            for r in results {
                let verdict = match (r.pass, r.kind) {
                    (true, _) => "PASS",
                    (false, CheckKind::Check) => "FAIL",
                    (false, CheckKind::Diagnostic) => "MISS",
                };
                writeln!(
                    out,
                    "{verdict}  {:<12} {:<28} worst {:>24}  tol {:<9.1e} n {}",
                    r.suite,
                    r.check,
                    worst(r),
                    r.tolerance,
                    r.samples
                )
                .map_err(io_failure)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(CERTIFY_HEADER).map_err(usage)?;
            for r in results {
                w.write_record([
                    r.suite.clone(),
                    r.check.clone(),
                    kind_text(r.kind).to_string(),
                    worst(r),
                    fmt17(r.tolerance),
                    r.samples.to_string(),
                    r.pass.to_string(),
                    location_text(&r.location),
                ])
                .map_err(usage)?;
            }
            w.flush().map_err(io_failure)?;
        }
        Format::JsonLines => {
            for r in results {
                let fields = [
                    ("suite", json_string(&r.suite)),
                    ("check", json_string(&r.check)),
                    ("kind", json_string(kind_text(r.kind))),
                    ("worst_violation", r.worst_violation.map_or("null".into(), json_number)),
                    ("tolerance", json_number(r.tolerance)),
                    ("samples", r.samples.to_string()),
                    ("pass", r.pass.to_string()),
                    ("location", json_string(&location_text(&r.location))),
                ];
                writeln!(out, "{}", json_line(&fields)).map_err(io_failure)?;
            }
        }
    }
    Ok(())
}

fn cmd_certify(args: &CertifyArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let params = args.operator.params()?;
    let tolerances = load_tolerances(&args.set)?;
    let results = certify_results(params, args.which, tolerances.clone(), args.seed, args.r_list.clone())?;
    let manifest = RunManifest {
        command: "certify".into(),
        parameters: certify_parameters(args),
        tolerances: tolerances.entries().clone(),
        seed: args.seed,
        timestamp: chrono::Utc::now().to_rfc3339(),
        results,
    };
    manifest.write(&args.out).map_err(Failure::Usage)?;
    print_summaries(out, &manifest.results, args.format)?;
    Ok(exit_code(&manifest.results))
}

fn parse_parameter<T: std::str::FromStr>(params: &BTreeMap<String, String>, key: &str) -> Result<T, Failure> {
    params
        .get(key)
        .ok_or_else(|| usage(anyhow!("manifest lacks parameter `{key}`")))?
        .parse()
        .map_err(|_| usage(anyhow!("manifest parameter `{key}` does not parse")))
}

fn cmd_replay(args: &ReplayArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let manifest = RunManifest::read(&args.manifest).map_err(Failure::Usage)?;
    if manifest.command != "certify" {
        return Err(usage(anyhow!("cannot replay command `{}`", manifest.command)));
    }
    let p = &manifest.parameters;
    let params = OperatorParams::new(parse_parameter(p, "a")?, parse_parameter(p, "b")?, parse_parameter(p, "p")?)?;
    let which_name: String = parse_parameter(p, "which")?;
    let which = Which::from_name(&which_name).ok_or_else(|| usage(anyhow!("unknown suite `{which_name}`")))?;
    let radii = p
        .get("R-list")
        .ok_or_else(|| usage(anyhow!("manifest lacks parameter `R-list`")))?
        .split(',')
        .map(|s| s.parse::<f64>().map_err(|_| usage(anyhow!("bad radius `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut tolerances = Tolerances::default();
    for (k, &v) in &manifest.tolerances {
        tolerances.set(k, v).map_err(usage)?;
    }
    let results = certify_results(params, which, tolerances, manifest.seed, radii)?;
    let mismatches: Vec<&CheckSummary> = results
        .iter()
        .zip(&manifest.results)
        .filter(|(new, old)| !same_bits(new, old))
        .map(|(new, _)| new)
        .collect();
    if results.len() != manifest.results.len() {
        writeln!(out, "replay produced {} results, manifest has {}", results.len(), manifest.results.len())
            .map_err(io_failure)?;
        return Ok(1);
    }
    for m in &mismatches {
        writeln!(out, "differs: {} {}", m.suite, m.check).map_err(io_failure)?;
    }
    writeln!(out, "replayed {} results, {} differ", results.len(), mismatches.len()).map_err(io_failure)?;
    Ok(if mismatches.is_empty() { 0 } else { 1 })
}

fn same_bits(a: &CheckSummary, b: &CheckSummary) -> bool {
    let bits = |x: Option<f64>| x.map(f64::to_bits);
    let loc_bits = |l: &Option<LocationSummary>| match l {
        Some(LocationSummary::Point([x, y])) => vec![0, x.to_bits(), y.to_bits()],
        Some(LocationSummary::Angle(t)) => vec![1, t.to_bits()],
        Some(LocationSummary::Parameter(s)) => vec![2, s.to_bits()],
        None => vec![3],
    };
    a.suite == b.suite
        && a.check == b.check
        && a.kind == b.kind
        && bits(a.worst_violation) == bits(b.worst_violation)
        && loc_bits(&a.location) == loc_bits(&b.location)
        && a.samples == b.samples
        && a.tolerance.to_bits() == b.tolerance.to_bits()
        && a.pass == b.pass
}

fn read_input(path: &Path) -> Result<SampledSignal, Failure> {
    let file = File::open(path).map_err(|e| usage(anyhow!("{}: {e}", path.display())))?;
    Ok(read_signal(io::BufReader::new(file))?)
}

fn cmd_hilbert(args: &HilbertArgs) -> Result<u8, Failure> {
    let signal = read_input(&args.input)?;
    let boundary = if args.periodic { Boundary::Periodic } else { Boundary::Decaying };
    let transformed = match args.method {
        Method::Fft => hilbert_fft(&signal, boundary)?,
        Method::Pv => {
            if args.periodic {
                return Err(usage(anyhow!("--periodic applies to the fft method only")));
            }
            let values = (0..signal.len()).map(|j| hilbert_pv(&signal, signal.x(j))).collect::<Result<Vec<_>, _>>()?;
            signal.with_values(values)?
        }
    };
    let mut w = output(&args.out)?;
    write_signal(&mut w, &transformed)?;
    w.flush().map_err(io_failure)?;
    Ok(0)
}

fn cmd_extremal(args: &ExtremalArgs) -> Result<u8, Failure> {
    let params = args.operator.params()?;
    if params.p() == 2.0 {
        return Err(usage(anyhow!("the extremal family is defined for p != 2")));
    }
    if args.k_min > args.k_max {
        return Err(usage(anyhow!("need k_min <= k_max")));
    }
    let tolerances = load_tolerances(&args.set)?;
    let sharp = compute_sharp_constant(&params, tolerances.get("sharp_constant"))?;
    let schedule = gamma_schedule(params.p(), args.k_min..=args.k_max);
    let cert = certify_lower_bound(&params, &sharp, &schedule, suites::lower_bound_options(&tolerances))?;
    let rows: Vec<Vec<f64>> =
        cert.rows.iter().map(|r| vec![r.gamma, r.masses.a, r.masses.b, r.ratio, r.lower, r.upper]).collect();
    let mut w = output(&args.out)?;
    write_table(&mut w, &EXTREMAL_HEADER, &rows)?;
    w.flush().map_err(io_failure)?;
    Ok(0)
}

fn cmd_extend(args: &ExtendArgs) -> Result<u8, Failure> {
    if args.stride == 0 {
        return Err(usage(anyhow!("stride must be positive")));
    }
    if args.y_list.iter().any(|&y| !(y > 0.0 && y.is_finite())) {
        return Err(usage(anyhow!("heights must be positive")));
    }
    let signal = read_input(&args.input)?;
    let ext = PiecewiseLinearExtension::new(&signal);
    let mut points = Vec::new();
    for &y in &args.y_list {
        for j in (0..signal.len()).step_by(args.stride) {
            points.push(ext.eval(Complex64::new(signal.x(j), y))?);
        }
    }
    let mut w = output(&args.out)?;
    write_extension(&mut w, &points)?;
    w.flush().map_err(io_failure)?;
    Ok(0)
}
