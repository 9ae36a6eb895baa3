use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use num_rational::BigRational;

use heckesym::model::ModelPoint;
use heckesym::report::{all_ok, emit_report, Document, Format};
use heckesym::suites::{run_suite, Grid, Mode, Suite};
use heckesym::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Markdown,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exact,
    Numeric,
}

/// Run verification suites for the Hecke algebra and its tensor model.
#[derive(Debug, Parser)]
#[command(name = "heckesym", version)]
struct Args {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,

    /// Local dimensions: `k`, `a..b` (inclusive) or `a,b,c`.
    #[arg(long, default_value = "2..3")]
    d: String,

    /// Orders, same syntax as --d.
    #[arg(long, default_value = "1..5")]
    n: String,

    /// Generic point q0 as "p/r". Defaults to mu^2 when --mu is rational, else 4.
    #[arg(long)]
    q: Option<String>,

    /// mu0 as "p/r" or the literal "e^{i pi/m}".
    #[arg(long)]
    mu: Option<String>,

    /// A trace parameter to classify.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,

    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,

    /// Tolerance for floating point checks.
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,

    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,

    /// Allow d > 4 and n > 6.
    #[arg(long)]
    force: bool,

    /// Include per-check wall times in the metadata.
    #[arg(long)]
    timings: bool,
}

fn parse_range(flag: &str, s: &str) -> Result<Vec<usize>, Error> {
    let bad = || Error::Parse(format!("--{} `{}`: expected k, a..b or a,b,c", flag, s));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

fn parse_rational(flag: &str, s: &str) -> Result<BigRational, Error> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("--{} `{}`: expected a rational p/r", flag, s)))
}

fn build_grid(args: &Args) -> Result<(Grid, BTreeMap<String, String>), Error> {
    let mu = args.mu.as_deref().map(str::parse::<ModelPoint>).transpose()?;
    let q = match (&args.q, &mu) {
        (Some(q), Some(ModelPoint::Rational(m))) => {
            let q = parse_rational("q", q)?;
            if q != m * m {
                return Err(Error::InvalidGrid(format!("--q {} is not the square of --mu {}", q, m)));
            }
            q
        }
        (Some(q), _) => parse_rational("q", q)?,
        (None, Some(ModelPoint::Rational(m))) => m * m,
        (None, _) => BigRational::from_integer(4.into()),
    };
    let grid = Grid {
        d: parse_range("d", &args.d)?,
        n: parse_range("n", &args.n)?,
        q,
        mu,
        lambda: args.lambda.as_deref().map(|l| parse_rational("lambda", l)).transpose()?,
        mode: match args.mode {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Numeric => Mode::Numeric,
        },
        tolerance: args.tolerance,
        force: args.force,
    };
    grid.validate()?;

    let mut flags = BTreeMap::new();
    flags.insert("suite".to_string(), args.suite.clone());
    flags.insert("d".to_string(), format!("{:?}", grid.d));
    flags.insert("n".to_string(), format!("{:?}", grid.n));
    flags.insert("q".to_string(), grid.q.to_string());
    if let Some(m) = &grid.mu {
        flags.insert("mu".to_string(), m.to_string());
    }
    if let Some(l) = &grid.lambda {
        flags.insert("lambda".to_string(), l.to_string());
    }
    flags.insert("mode".to_string(), grid.mode.to_string());
    flags.insert("tolerance".to_string(), format!("{:e}", grid.tolerance));
    flags.insert("force".to_string(), grid.force.to_string());
    Ok((grid, flags))
}

fn usage(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("heckesym: {}", e);
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let suite: Suite = match args.suite.parse() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let (grid, flags) = match build_grid(&args) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return usage("--jobs must be at least 1");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            return usage(e);
        }
    }

    let results = match run_suite(suite, &grid) {
        Ok(r) => r,
        Err(e @ (Error::InvalidGrid(_) | Error::UnknownSuite(_) | Error::InvalidArgument(_))) => return usage(e),
        Err(e) => {
            eprintln!("heckesym: {}", e);
            return ExitCode::from(1);
        }
    };
    let ok = all_ok(&results);
    let doc = Document::new(results, flags, args.timings);
    let text = emit_report(
        &doc,
        match args.format {
            FormatArg::Json => Format::Json,
            FormatArg::Markdown => Format::Markdown,
        },
    );
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("heckesym: cannot write {}: {}", path.display(), e);
                return ExitCode::from(2);
            }
        }
        None => print!("{}", text),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
