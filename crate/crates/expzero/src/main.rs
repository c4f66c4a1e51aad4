//! Command-line interface: parses expressions, dispatches library
//! operations, and emits one JSON output document per invocation.
//!
//! Exit codes: 0 success, 1 input error, 2 resource-cap error, 3 internal
//! invariant violation (a caught panic).

use clap::{Parser, Subcommand};
use expzero::decomp::{decompose, refine};
use expzero::frontend::doc::{
    algebraic_number, ball_doc, decomposition_doc, zeros_doc, Diagnostics, Flags, OutputDocument,
    ResultPayload, UncertifiedRejection, SCHEMA,
};
use expzero::frontend::{parse_many, print};
use expzero::numeric::expeval::{certify_nonzero, eval_ball, root_ball};
use expzero::zerofinder::{algebraic_zeros, candidate_set, common_zeros, is_zero_at, ZeroReport};
use expzero::{Config, Error, ExpPoly, FieldElement, Result};
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Parser)]
#[command(
    name = "expzero",
    version,
    about = "Exponential polynomials over the algebraic numbers: normal forms, \
             decompositions, and zero enumeration conditional on Schanuel's conjecture"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Numeric cross-check precision cap in bits.
    #[arg(long, global = true, default_value_t = 256)]
    precision: u32,

    /// Reject inputs whose height exceeds this bound.
    #[arg(long, global = true, default_value_t = 16)]
    max_height: u32,

    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Indented JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Suppress the timestamp so identical runs are byte-identical.
    #[arg(long, global = true)]
    reproducible: bool,

    /// Skip numeric cross-checks of symbolic results.
    #[arg(long, global = true)]
    no_numeric_check: bool,

    /// Read the expression(s) from a file, one per line, instead of arguments.
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and print the canonical normal form.
    Normalize { expr: Option<String> },
    /// Nesting height of the expression.
    Height { expr: Option<String> },
    /// Tower depth of a constant expression.
    Depth { expr: Option<String> },
    /// Brick decomposition: bricks, L, and the p* polynomial.
    Decompose { expr: Option<String> },
    /// Decomposition refined to linearly independent bricks.
    Refine { expr: Option<String> },
    /// All algebraic zeros, with collapse witnesses.
    Zeros { expr: Option<String> },
    /// Decide whether the expression vanishes at an algebraic point.
    Iszero {
        expr: Option<String>,
        point: Option<String>,
    },
    /// Common algebraic zeros of two expressions.
    CommonZeros {
        p: Option<String>,
        q: Option<String>,
    },
    /// Evaluate at an algebraic point, symbolically and as a ball.
    Eval {
        expr: Option<String>,
        point: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Normalize { .. } => "normalize",
            Command::Height { .. } => "height",
            Command::Depth { .. } => "depth",
            Command::Decompose { .. } => "decompose",
            Command::Refine { .. } => "refine",
            Command::Zeros { .. } => "zeros",
            Command::Iszero { .. } => "iszero",
            Command::CommonZeros { .. } => "common-zeros",
            Command::Eval { .. } => "eval",
        }
    }

    fn positionals(&self) -> Vec<&String> {
        fn pair<'a>(a: &'a Option<String>, b: &'a Option<String>) -> Vec<&'a String> {
            a.iter().chain(b.iter()).collect()
        }
        match self {
            Command::Normalize { expr }
            | Command::Height { expr }
            | Command::Depth { expr }
            | Command::Decompose { expr }
            | Command::Refine { expr }
            | Command::Zeros { expr } => expr.iter().collect(),
            Command::Iszero { expr, point } | Command::Eval { expr, point } => pair(expr, point),
            Command::CommonZeros { p, q } => pair(p, q),
        }
    }

    fn arity(&self) -> usize {
        match self {
            Command::Iszero { .. } | Command::CommonZeros { .. } | Command::Eval { .. } => 2,
            _ => 1,
        }
    }
}

fn usage(message: impl Into<String>) -> Error {
    Error::Syntax {
        position: 0,
        message: message.into(),
    }
}

/// Resolve the input expressions from arguments or `--file`.
fn gather_inputs(cli: &Cli) -> Result<Vec<String>> {
    let need = cli.command.arity();
    let pos = cli.command.positionals();
    if let Some(path) = &cli.file {
        if !pos.is_empty() {
            return Err(usage("give expressions either as arguments or via --file, not both"));
        }
        let content = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        let lines: Vec<String> = content
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect();
        if lines.len() != need {
            return Err(usage(format!(
                "{} needs {need} expression(s); {} has {}",
                cli.command.name(),
                path.display(),
                lines.len()
            )));
        }
        Ok(lines)
    } else {
        if pos.len() != need {
            return Err(usage(format!(
                "{} needs {need} expression argument(s), found {}",
                cli.command.name(),
                pos.len()
            )));
        }
        Ok(pos.into_iter().cloned().collect())
    }
}

/// The algebraic point named by a height-zero constant expression.
fn constant_point(p: &ExpPoly) -> Result<FieldElement> {
    if p.height() != 0 {
        return Err(Error::NotConstant);
    }
    if !p.is_constant() {
        return Err(Error::NotConstant);
    }
    Ok(p.poly_part().coeff(0))
}

/// Cross-check every reported zero by ball evaluation at the standard
/// precision ladder; disagreement is an internal invariant violation.
fn check_zeros_numerically(polys: &[&ExpPoly], report: &ZeroReport, cfg: &Config) -> Result<()> {
    for zero in &report.zeros {
        for bits in [64u32, 128, 256] {
            let ball = root_ball(zero, bits, cfg.precision_cap)?;
            for p in polys {
                let v = eval_ball(p, &ball, bits);
                assert!(
                    v.contains_zero(),
                    "symbolic zero fails numeric containment at {bits} bits"
                );
            }
        }
    }
    Ok(())
}

/// Certify each discarded candidate as a nonzero; report the holdouts.
fn certify_rejections(
    p: &ExpPoly,
    report: &ZeroReport,
    cfg: &Config,
    max_bits: u32,
) -> Result<Vec<UncertifiedRejection>> {
    let mut out = Vec::new();
    'cand: for cand in candidate_set(p, cfg)? {
        for z in &report.zeros {
            if cand.eq_root(z, cfg)? {
                continue 'cand;
            }
        }
        if !certify_nonzero(p, &cand, max_bits) {
            out.push(UncertifiedRejection {
                candidate: algebraic_number(&cand, cfg),
                note: format!("ball evaluation could not exclude zero within {max_bits} bits"),
            });
        }
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<OutputDocument> {
    let cfg = Config {
        precision: cli.precision,
        ..Config::default()
    };
    let texts = gather_inputs(cli)?;
    let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
    let ps = parse_many(&refs, &cfg)?;
    for p in &ps {
        let h = p.height();
        if h > cli.max_height {
            return Err(Error::HeightCap {
                height: h,
                cap: cli.max_height,
            });
        }
    }

    let mut flags = Flags {
        assumes_schanuel: false,
        complete_for_all_common_zeros: false,
    };
    let mut rejections = Vec::new();
    let result = match &cli.command {
        Command::Normalize { .. } => ResultPayload::Normalize {
            printed: print(&ps[0]),
            height: ps[0].height(),
        },
        Command::Height { .. } => ResultPayload::Height {
            height: ps[0].height(),
        },
        Command::Depth { .. } => ResultPayload::Depth {
            depth: ps[0].depth()?,
        },
        Command::Decompose { .. } => {
            ResultPayload::Decompose(decomposition_doc(&decompose(&ps[0]), false))
        }
        Command::Refine { .. } => {
            let refined = refine(&decompose(&ps[0]));
            ResultPayload::Decompose(decomposition_doc(refined.as_decomposition(), true))
        }
        Command::Zeros { .. } => {
            let report = algebraic_zeros(&ps[0], &cfg)?;
            if !cli.no_numeric_check {
                check_zeros_numerically(&[&ps[0]], &report, &cfg)?;
                rejections = certify_rejections(&ps[0], &report, &cfg, cli.precision)?;
            }
            flags.assumes_schanuel = report.assumes_schanuel;
            flags.complete_for_all_common_zeros = report.complete_for_all_common_zeros;
            ResultPayload::Zeros(zeros_doc(&report, &cfg))
        }
        Command::CommonZeros { .. } => {
            let report = common_zeros(&ps[0], &ps[1], &cfg)?;
            if !cli.no_numeric_check {
                check_zeros_numerically(&[&ps[0], &ps[1]], &report, &cfg)?;
            }
            flags.assumes_schanuel = report.assumes_schanuel;
            flags.complete_for_all_common_zeros = report.complete_for_all_common_zeros;
            ResultPayload::Zeros(zeros_doc(&report, &cfg))
        }
        Command::Iszero { .. } => {
            let beta = constant_point(&ps[1])?;
            flags.assumes_schanuel = true;
            ResultPayload::IsZero {
                point: print(&ps[1]),
                is_zero: is_zero_at(&ps[0], &beta),
            }
        }
        Command::Eval { .. } => {
            let beta = constant_point(&ps[1])?;
            let value = ps[0].eval_at(&beta);
            let ball = eval_ball(&ps[0], &beta.to_ball(cli.precision), cli.precision);
            ResultPayload::Eval {
                point: print(&ps[1]),
                value: print(&value),
                ball: ball_doc(&ball, cli.precision),
            }
        }
    };

    let timestamp = if cli.reproducible {
        None
    } else {
        Some(
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        )
    };
    Ok(OutputDocument {
        schema: SCHEMA,
        command: cli.command.name().to_string(),
        inputs: ps.iter().map(print).collect(),
        result,
        flags,
        diagnostics: Diagnostics {
            precision_bits: cli.precision,
            numeric_check: !cli.no_numeric_check,
            uncertified_rejections: rejections,
            timestamp,
        },
    })
}

fn panic_text(e: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = e.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = e.downcast_ref::<String>() {
        s.clone()
    } else {
        "unknown panic".to_string()
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success, usage errors
            // on stderr; map the latter onto the input-error exit code.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };

    std::panic::set_hook(Box::new(|_| {}));
    let outcome = catch_unwind(AssertUnwindSafe(|| run(&cli)));
    let code = match outcome {
        Ok(Ok(doc)) => {
            let rendered = if cli.pretty {
                serde_json::to_string_pretty(&doc)
            } else {
                serde_json::to_string(&doc)
            }
            .expect("document serializes");
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{rendered}");
            let _ = out.flush();
            0
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
        Err(panic) => {
            eprintln!("internal error: {}", panic_text(panic));
            3
        }
    };
    std::process::exit(code);
}
