//! `sylvester` - exact restricted partition counts from the command line.
//!
//! Exit codes: 0 success, 1 verification failure or weight disagreement,
//! 2 usage error.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use sylvester_core::report::{
    quasipoly_text, to_f64, weights_text, EvalRecord, QuasipolyRecord, WeightsRecord,
};
use sylvester_core::verify::{self, Report, VerifyConfig};
use sylvester_core::waves::weights_recursive_with;
use sylvester_core::{
    quasipolynomial, weights_bruteforce, GeneratorSet, ScalarCounter, SylvesterExpansion,
};

#[derive(Parser)]
#[command(
    name = "sylvester",
    version,
    about = "Restricted partition counts via Sylvester waves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Method {
    #[default]
    Recursive,
    Bruteforce,
    Both,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Counter {
    /// Scalar partitions from the dynamic-programming table
    #[default]
    Oracle,
    /// Scalar partitions from Sylvester waves on the smaller set
    Waves,
}

impl From<Counter> for ScalarCounter {
    fn from(c: Counter) -> Self {
        match c {
            Counter::Oracle => ScalarCounter::Oracle,
            Counter::Waves => ScalarCounter::Waves,
        }
    }
}

/// A single `s` or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SRange {
    start: u64,
    end: u64,
}

impl SRange {
    fn is_single(&self) -> bool {
        self.start == self.end
    }
}

impl FromStr for SRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("expected a nonnegative integer, got {t:?}"))
        };
        match s.split_once("..") {
            None => {
                let v = parse(s)?;
                Ok(Self { start: v, end: v })
            }
            Some((a, b)) => {
                let (start, end) = (parse(a)?, parse(b)?);
                if start > end {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(Self { start, end })
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate W(s, d) for one s or an inclusive range a..b
    Eval {
        /// Comma-separated generators; repeats allowed
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<u64>,
        #[arg(long)]
        s: SRange,
        /// Include the per-wave breakdown
        #[arg(long)]
        waves: bool,
        /// Append decimal approximations next to exact values
        #[arg(long)]
        float: bool,
        #[arg(long, value_enum, default_value_t)]
        recursion: Counter,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the integer weights A_0..A_lmax of wave j
    Weights {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<u64>,
        #[arg(long)]
        j: u64,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
        /// Accept j that divides none of the parts
        #[arg(long)]
        allow_trivial: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the closed form: one polynomial per residue class modulo lcm(d)
    Quasipoly {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check every identity against the brute-force oracles
    Verify {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 6)]
        max_d: u64,
        #[arg(long, default_value_t = 100)]
        max_s: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of extra seeded random sets
        #[arg(long, default_value_t = 0)]
        random_sets: usize,
        #[arg(long, default_value_t = 5)]
        random_max_m: usize,
        #[arg(long, default_value_t = 12)]
        random_max_d: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Drop the alternating sign in the recursive weights (negative control)
        #[arg(long, hide = true)]
        mutate_sign: bool,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

type CmdResult = Result<String, Failure>;

fn generators(parts: Vec<u64>) -> Result<GeneratorSet, Failure> {
    GeneratorSet::new(parts).map_err(|e| Failure::Usage(format!("invalid --parts: {e}")))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn cmd_eval(
    parts: Vec<u64>,
    range: SRange,
    waves: bool,
    float: bool,
    counter: Counter,
    format: Format,
) -> CmdResult {
    let d = generators(parts)?;
    let expansion = SylvesterExpansion::with_counter(&d, counter.into());
    let records = (range.start..=range.end)
        .map(|s| expansion.decompose(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Check(format!("internal consistency failure: {e}")))?;

    if let Format::Json = format {
        let records: Vec<EvalRecord> = records.iter().map(|r| EvalRecord::new(r, float)).collect();
        return Ok(if range.is_single() {
            json(&records[0])
        } else {
            json(&records)
        });
    }
    if range.is_single() && !waves {
        return Ok(records[0].total.to_string());
    }
    let mut out = String::from("s\ttotal");
    if waves {
        for (j, _) in &records[0].terms {
            write!(out, "\tW_{j}").unwrap();
        }
    }
    for r in &records {
        write!(out, "\n{}\t{}", r.s, r.total).unwrap();
        if waves {
            for (_, v) in &r.terms {
                if float {
                    write!(out, "\t{v} ({:.6})", to_f64(v)).unwrap();
                } else {
                    write!(out, "\t{v}").unwrap();
                }
            }
        }
    }
    Ok(out)
}

fn cmd_weights(
    parts: Vec<u64>,
    j: u64,
    method: Method,
    allow_trivial: bool,
    format: Format,
) -> CmdResult {
    let d = generators(parts)?;
    if j < 2 {
        return Err(Failure::Usage(format!(
            "invalid --j {j}: must be at least 2"
        )));
    }
    if !d.has_multiple_of(j) && !allow_trivial {
        return Err(Failure::Usage(format!(
            "invalid --j {j}: divides none of the parts {d} (pass --allow-trivial to force)"
        )));
    }
    let recursive = || weights_recursive_with(j, &d, ScalarCounter::Oracle);
    let (w, agree, name) = match method {
        Method::Recursive => (recursive(), None, "recursive"),
        Method::Bruteforce => (weights_bruteforce(j, &d), None, "bruteforce"),
        Method::Both => {
            let rec = recursive().map_err(|e| Failure::Usage(e.to_string()))?;
            let brute = weights_bruteforce(j, &d).map_err(|e| Failure::Usage(e.to_string()))?;
            let agree = rec == brute;
            (Ok(rec), Some(agree), "both")
        }
    };
    let w = w.map_err(|e| Failure::Usage(e.to_string()))?;
    let out = match format {
        Format::Json => json(&WeightsRecord::new(d.parts(), name, &w, agree)),
        Format::Text => {
            let mut line = format!("l_max={}\n{}", w.l_max, weights_text(&w));
            match agree {
                Some(true) => line.push_str(" AGREE"),
                Some(false) => line.push_str(" DISAGREE"),
                None => {}
            }
            line
        }
    };
    if agree == Some(false) {
        return Err(Failure::Check(out));
    }
    Ok(out)
}

fn cmd_quasipoly(parts: Vec<u64>, format: Format) -> CmdResult {
    let q = quasipolynomial(&generators(parts)?);
    Ok(match format {
        Format::Text => quasipoly_text(&q),
        Format::Json => json(&QuasipolyRecord::new(&q)),
    })
}

#[derive(Serialize)]
struct VerifyRecord {
    status: &'static str,
    checks: u64,
    sets: usize,
    counterexample: Option<String>,
}

fn cmd_verify(cfg: VerifyConfig, format: Format) -> CmdResult {
    let sets = verify::corpus(&cfg);
    let mut report = verify::verify_circulators(cfg.max_circulator_j);
    // Collected in input order, so the first failure reported is deterministic.
    let per_set: Vec<Report> = sets
        .par_iter()
        .map(|d| verify::verify_set(&cfg, d))
        .collect();
    for r in per_set {
        report.merge(r);
    }
    let record = VerifyRecord {
        status: if report.passed() { "pass" } else { "fail" },
        checks: report.checks,
        sets: sets.len(),
        counterexample: report.failure.as_ref().map(ToString::to_string),
    };
    let out = match format {
        Format::Json => json(&record),
        Format::Text => match &report.failure {
            None => format!("PASS ({} checks)", report.checks),
            Some(cx) => format!("FAIL: {cx}"),
        },
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Eval {
            parts,
            s,
            waves,
            float,
            recursion,
            format,
        } => cmd_eval(parts, s, waves, float, recursion, format),
        Command::Weights {
            parts,
            j,
            method,
            allow_trivial,
            format,
        } => cmd_weights(parts, j, method, allow_trivial, format),
        Command::Quasipoly { parts, format } => cmd_quasipoly(parts, format),
        Command::Verify {
            max_m,
            max_d,
            max_s,
            seed,
            random_sets,
            random_max_m,
            random_max_d,
            format,
            mutate_sign,
        } => {
            let cfg = VerifyConfig {
                max_m,
                max_d,
                max_s,
                seed,
                random_sets,
                random_max_m,
                random_max_d,
                negative_control: mutate_sign,
                ..VerifyConfig::default()
            };
            cmd_verify(cfg, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            println!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_syntax() {
        assert_eq!("4".parse(), Ok(SRange { start: 4, end: 4 }));
        assert_eq!("0..5".parse(), Ok(SRange { start: 0, end: 5 }));
        assert!("5..0".parse::<SRange>().is_err());
        assert!("-1".parse::<SRange>().is_err());
        assert!("a..3".parse::<SRange>().is_err());
    }
}
