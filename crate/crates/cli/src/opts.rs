use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Exact-arithmetic workbench for least common multiples of q-arithmetic
/// progressions u_n = r*[n]_q + u0.
#[derive(Debug, Parser)]
#[command(name = "qlcm", version, about)]
pub struct Cli {
    /// Output format for reports and tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report to this path instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for sweeps (overrides QLCM_JOBS; reports do not
    /// depend on it).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Stop a sweep at the first failing check.
    #[arg(long, global = true)]
    pub fail_fast: bool,

    /// Largest index n to inspect.
    #[arg(long, global = true)]
    pub n_max: Option<u32>,

    /// Base q: a single value, or an inclusive range "a..b" for sweeps.
    #[arg(long, global = true)]
    pub q: Option<String>,

    /// Step r: a single value, or an inclusive range "a..b" for sweeps.
    #[arg(long, global = true)]
    pub r: Option<String>,

    /// Offset u0: a single value, or an inclusive range "a..b" for sweeps.
    #[arg(long, global = true)]
    pub u0: Option<String>,

    /// Print full decimal lcm values in tables instead of bit lengths only.
    #[arg(long, global = true)]
    pub full_values: bool,

    /// Seed for sub-sampled sweeps (used together with --sample).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Keep at most this many grid points, chosen pseudo-randomly from
    /// --seed; default is exhaustive enumeration.
    #[arg(long, global = true)]
    pub sample: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a single q-calculus primitive exactly.
    Eval {
        #[command(subcommand)]
        op: EvalOp,
    },
    /// Run check suites over a parameter grid; exit 0 only if every check
    /// passes.
    Verify {
        /// Suites to run (comma separated); default is all of:
        /// identities, unimodality, monotonicity, step-ratio, chain,
        /// ell-bounds, theorem1, bounds.
        #[arg(long = "suite", value_delimiter = ',')]
        suites: Vec<String>,
    },
    /// Per-n bound table for a single progression.
    Table,
    /// Reproduce the three classic instances: 2^n - 1, 2^n + 1 and
    /// 3^n + 1.
    Examples,
}

#[derive(Debug, Subcommand)]
pub enum EvalOp {
    /// [n]_q = (q^n - 1)/(q - 1), with [n]_1 = n.
    Qint {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// [n]_q! = [n]_q [n-1]_q ... [1]_q.
    Qfact {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// [n]_q! / ([k]_q! [n-k]_q!).
    Qbinom {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
}

/// Inclusive "a..b" range, or a single value "a".
pub fn parse_range(text: &str, name: &str) -> Result<(i64, i64), String> {
    let parse_end = |part: &str| {
        part.trim()
            .parse::<i64>()
            .map_err(|_| format!("--{name}: cannot parse integer from {part:?}"))
    };
    if let Some((low, high)) = text.split_once("..") {
        let low = parse_end(low)?;
        let high = parse_end(high)?;
        if high < low {
            return Err(format!("--{name}: empty range {low}..{high}"));
        }
        Ok((low, high))
    } else {
        let value = parse_end(text)?;
        Ok((value, value))
    }
}

/// A single integer where ranges are not meaningful.
pub fn parse_single(text: &str, name: &str) -> Result<i64, String> {
    let (low, high) = parse_range(text, name)?;
    if low != high {
        return Err(format!("--{name}: needs a single value here, got a range"));
    }
    Ok(low)
}

/// Precedence: --jobs flag, then QLCM_JOBS, then 1.
pub fn resolve_jobs(flag: Option<usize>) -> Result<usize, String> {
    if let Some(jobs) = flag {
        if jobs < 1 {
            return Err("--jobs must be at least 1".into());
        }
        return Ok(jobs);
    }
    match std::env::var("QLCM_JOBS") {
        Ok(raw) => raw
            .parse::<usize>()
            .ok()
            .filter(|jobs| *jobs >= 1)
            .ok_or_else(|| format!("QLCM_JOBS must be a positive integer, got {raw:?}")),
        Err(_) => Ok(1),
    }
}
