//! Command-line front end: compute exact counts, verify backends against
//! each other and the brute-force oracle, print generating-function
//! identity checks, and evaluate asymptotic constants.
//!
//! Exit codes: 0 success, 2 invalid configuration, 3 failed internal
//! assertion (integrality violation or verification mismatch).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use commlie::asymptotics;
use commlie::identities;
use commlie::report::{BackendTag, CountReport, Family, Kind, Meta, QSpec, RunOutput};
use commlie::verify::verify_family;
use commlie::{counts, Error, QRat};

#[derive(Parser)]
#[command(
    name = "commlie",
    version,
    about = "Exact counts of commuting pairs in the Lie algebras of GL(n,q), GU(n,q), and Sp(2n,q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute exact pair counts (integers, or q-polynomials with --symbolic)
    Count(CountArgs),
    /// Compare the two formula backends and the brute-force oracle
    Verify(VerifyArgs),
    /// Expand a generating-function identity and print lhs, rhs, difference
    Series(SeriesArgs),
    /// Limit constants with certified bounds, plus a convergence table
    Asym(AsymArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gl,
    U,
    Sp,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gl => Family::Gl,
            FamilyArg::U => Family::U,
            FamilyArg::Sp => Family::Sp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Pairs,
    Nilpairs,
    Order,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Pairs => Kind::Pairs,
            KindArg::Nilpairs => Kind::NilpotentPairs,
            KindArg::Order => Kind::GroupOrder,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum BackendArg {
    ClassSum,
    GenFn,
    /// Exhaustive enumeration (numeric prime-power q at desk scale only)
    Oracle,
}

impl From<BackendArg> for BackendTag {
    fn from(b: BackendArg) -> BackendTag {
        match b {
            BackendArg::ClassSum => BackendTag::ClassSum,
            BackendArg::GenFn => BackendTag::GenFn,
            BackendArg::Oracle => BackendTag::Oracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

/// `2` for a single n, or an inclusive range `0..4`.
#[derive(Clone)]
struct NRange {
    lo: u32,
    hi: u32,
}

impl std::str::FromStr for NRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if let Some((a, b)) = s.split_once("..") {
            let lo = a.parse().map_err(|e| format!("bad range start: {e}"))?;
            let hi = b.parse().map_err(|e| format!("bad range end: {e}"))?;
            if lo > hi {
                return Err("empty n range".into());
            }
            Ok(NRange { lo, hi })
        } else {
            let n = s.parse().map_err(|e| format!("bad n: {e}"))?;
            Ok(NRange { lo: n, hi: n })
        }
    }
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Single value `2` or inclusive range `0..4`
    #[arg(long)]
    n: NRange,
    /// Prime power q (the counting formulas accept any integer >= 2)
    #[arg(long, conflicts_with = "symbolic")]
    q: Option<BigInt>,
    /// Keep q as an indeterminate and print canonical q-polynomials
    #[arg(long)]
    symbolic: bool,
    #[arg(long, value_enum, default_value = "gen-fn")]
    backend: BackendArg,
    /// Override the enumeration size guard (oracle backend)
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    q: BigInt,
    #[arg(long, default_value = "3")]
    max_n: u32,
    /// Override the enumeration size guard
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value = "pairs")]
    kind: KindArg,
    #[arg(long, conflicts_with = "symbolic")]
    q: Option<BigInt>,
    #[arg(long)]
    symbolic: bool,
    /// Truncation order (<= 20 numeric, <= 12 symbolic)
    #[arg(long, default_value = "8")]
    order: u32,
}

#[derive(Args)]
struct AsymArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    q: BigInt,
    /// Target accuracy for the limit constant, e.g. 1e-12
    #[arg(long, default_value = "1e-12")]
    eps: String,
    #[arg(long, default_value = "8")]
    max_n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::EvenQ { .. }
        | Error::SymbolicUnsupported { .. }
        | Error::OracleRange { .. }
        | Error::SizeGuard { .. }
        | Error::NotPrime(_) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("COMMLIE_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Series(args) => cmd_series(args),
        Command::Asym(args) => cmd_asym(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn qspec_of(q: Option<BigInt>, symbolic: bool) -> Result<QSpec, Error> {
    match (q, symbolic) {
        (Some(q), false) => {
            if q < BigInt::from(2) {
                return Err(Error::Inconsistent("q must be at least 2".into()));
            }
            Ok(QSpec::Numeric(q))
        }
        (None, true) => Ok(QSpec::Symbolic),
        _ => Err(Error::Inconsistent(
            "exactly one of --q and --symbolic is required".into(),
        )),
    }
}

fn command_echo(parts: &[String]) -> String {
    parts.join(" ")
}

fn cmd_count(args: CountArgs) -> Result<ExitCode, Error> {
    let family: Family = args.family.into();
    let kind: Kind = args.kind.into();
    let backend: BackendTag = args.backend.into();
    let q = match qspec_of(args.q, args.symbolic) {
        Ok(q) => q,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(2));
        }
    };
    if args.backend == BackendArg::Oracle && matches!(args.kind, KindArg::Order) {
        eprintln!("error: the oracle backend counts pairs and nilpairs only");
        return Ok(ExitCode::from(2));
    }
    if args.symbolic && args.backend != BackendArg::GenFn {
        eprintln!("error: symbolic mode is available for the gen-fn backend only");
        return Ok(ExitCode::from(2));
    }
    let mut results: Vec<CountReport> = Vec::new();
    for n in args.n.lo..=args.n.hi {
        if args.backend == BackendArg::Oracle {
            let QSpec::Numeric(ref qv) = q else {
                eprintln!("error: the oracle backend needs a numeric q");
                return Ok(ExitCode::from(2));
            };
            let Some(space) = commlie::verify::oracle_space(family, qv, n)? else {
                eprintln!("error: q = {qv} is outside the oracle's reach (p or p^2)");
                return Ok(ExitCode::from(2));
            };
            results.push(space.count_report(kind, args.force)?);
        } else {
            results.push(counts::count(family, kind, n, &q, backend)?);
        }
    }
    let echo = command_echo(&[
        "count".into(),
        format!("--family {family}"),
        format!("--kind {kind}"),
        format!("--n {}..{}", args.n.lo, args.n.hi),
        format!("--q {q}"),
        format!("--backend {backend}"),
    ]);
    let run = RunOutput {
        meta: Meta::new(echo),
        results,
    };
    match args.format {
        FormatArg::Text => {
            if run.results.len() == 1 {
                println!("{}", run.results[0].value);
            } else {
                for r in &run.results {
                    println!("n={} {}", r.n, r.value);
                }
            }
        }
        FormatArg::Json => print!("{}", run.to_json()),
        FormatArg::Csv => print!("{}", run.to_csv()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let family: Family = args.family.into();
    let report = verify_family(family, &args.q, args.max_n, args.force, None)?;
    match args.format {
        FormatArg::Text => {
            for row in &report.rows {
                println!(
                    "[{}] {}: {} = {} vs {} = {}",
                    if row.ok { "ok" } else { "FAIL" },
                    row.stratum,
                    row.lhs_label,
                    row.lhs,
                    row.rhs_label,
                    row.rhs
                );
            }
            let failures = report.failures().count();
            println!(
                "{} checks, {} failed",
                report.rows.len(),
                failures
            );
        }
        FormatArg::Json => {
            let doc = serde_json::json!({
                "meta": Meta::new(format!(
                    "verify --family {family} --q {} --max-n {}",
                    args.q, args.max_n
                )),
                "checks": report.rows.iter().map(|r| serde_json::json!({
                    "stratum": r.stratum,
                    "lhs_label": r.lhs_label,
                    "lhs": r.lhs,
                    "rhs_label": r.rhs_label,
                    "rhs": r.rhs,
                    "ok": r.ok,
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
        }
        FormatArg::Csv => {
            println!("stratum,lhs_label,lhs,rhs_label,rhs,ok");
            for r in &report.rows {
                println!(
                    "{},{},{},{},{},{}",
                    r.stratum, r.lhs_label, r.lhs, r.rhs_label, r.rhs, r.ok
                );
            }
        }
    }
    if report.all_ok() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(3))
    }
}

fn cmd_series(args: SeriesArgs) -> Result<ExitCode, Error> {
    let family: Family = args.family.into();
    let kind: Kind = args.kind.into();
    if matches!(kind, Kind::GroupOrder) {
        eprintln!("error: series identities exist for pairs and nilpairs only");
        return Ok(ExitCode::from(2));
    }
    let limit = if args.symbolic { 12 } else { 20 };
    if args.order > limit {
        eprintln!("error: order {} exceeds the limit of {limit}", args.order);
        return Ok(ExitCode::from(2));
    }
    let q = match qspec_of(args.q, args.symbolic) {
        Ok(q) => q,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(2));
        }
    };
    println!("# {family} {kind}: count_n/|group order| vs expanded product");
    let mut all_zero = true;
    match &q {
        QSpec::Numeric(qv) => {
            let rows = identities::series_identity_numeric(family, kind, qv, args.order)?;
            for row in rows {
                all_zero &= row.is_zero_diff();
                println!("n={} lhs={} rhs={} diff={}", row.n, row.lhs, row.rhs, row.diff);
            }
        }
        QSpec::Symbolic => {
            let rows = identities::series_identity_symbolic(family, kind, args.order)?;
            for row in rows {
                all_zero &= row.is_zero_diff();
                println!("n={} lhs={} rhs={} diff={}", row.n, row.lhs, row.rhs, row.diff);
            }
        }
    }
    if all_zero {
        println!("difference identically zero");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("NONZERO DIFFERENCE");
        Ok(ExitCode::from(3))
    }
}

/// Parses decimal or scientific notation ("0.5", "1e-12") exactly.
fn parse_eps(s: &str) -> Option<QRat> {
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    let value: BigInt = digits.parse().ok()?;
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let rat = if scale >= 0 {
        QRat::from(value * ten.pow(scale as u32))
    } else {
        QRat::new(value, ten.pow((-scale) as u32))
    };
    Some(rat)
}

fn cmd_asym(args: AsymArgs) -> Result<ExitCode, Error> {
    let family: Family = args.family.into();
    let Some(eps) = parse_eps(&args.eps) else {
        eprintln!("error: cannot parse --eps {}", args.eps);
        return Ok(ExitCode::from(2));
    };
    // surfaces EvenQ for sp with even q (exit 2)
    let (limit, rows) = asymptotics::convergence_report(family, &args.q, args.max_n, &eps)?;
    let digits = 15;
    match args.format {
        FormatArg::Text => {
            println!(
                "constant = {} (certified within {}, {} factors)",
                asymptotics::decimal_string(&limit.value, digits),
                asymptotics::decimal_string(&limit.bound, digits),
                limit.terms
            );
            println!("n ratio distance");
            for row in &rows {
                println!(
                    "{} {} {}",
                    row.n,
                    asymptotics::decimal_string(&row.ratio, digits),
                    asymptotics::decimal_string(&row.distance, digits)
                );
            }
        }
        FormatArg::Json => {
            let doc = serde_json::json!({
                "meta": Meta::new(format!(
                    "asym --family {family} --q {} --eps {} --max-n {}",
                    args.q, args.eps, args.max_n
                )),
                "constant": asymptotics::decimal_string(&limit.value, digits),
                "bound": asymptotics::decimal_string(&limit.bound, digits),
                "terms": limit.terms,
                "rows": rows.iter().map(|r| serde_json::json!({
                    "n": r.n,
                    "ratio": format!("{}/{}", r.ratio.numer(), r.ratio.denom()),
                    "decimal": asymptotics::decimal_string(&r.ratio, digits),
                    "distance": asymptotics::decimal_string(&r.distance, digits),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
        }
        FormatArg::Csv => {
            println!("n,ratio,decimal,distance");
            for r in &rows {
                println!(
                    "{},{}/{},{},{}",
                    r.n,
                    r.ratio.numer(),
                    r.ratio.denom(),
                    asymptotics::decimal_string(&r.ratio, digits),
                    asymptotics::decimal_string(&r.distance, digits)
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
