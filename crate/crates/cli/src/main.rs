//! `dedekind`: exact symbols, Dedekind sums, words and verification suites.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dedekind_core::higher_order::{s_star, StarCusp};
use dedekind_core::symbols_classical::s_sl2z;
use dedekind_core::symbols_congruence::{s_cusp0, s_gamma0};
use dedekind_core::symbols_moonshine::s_plus;
use dedekind_core::verify::{criterion, Check, Config, Suite};
use dedekind_core::words::{all_presets, preset_by_key, solve_word, GroupPreset, DEFAULT_BUDGET};
use dedekind_core::{dedekind_sum, Rat, ScaledMat};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dedekind", version, about = "Modular Dedekind symbols in exact arithmetic")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dedekind sum s(h, k).
    Sum {
        #[arg(allow_hyphen_values = true)]
        h: i64,
        k: i64,
    },
    /// First-order symbol S of a matrix.
    Symbol {
        #[arg(long, value_enum)]
        group: SymbolGroup,
        /// Level N for gamma0 and plus.
        #[arg(long)]
        level: Option<u64>,
        #[arg(long, value_enum, default_value = "inf")]
        cusp: CuspArg,
        /// "a,b,c,d" or "a,b,c,d;e".
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Higher-order symbol S* modulo 1, via the word solver.
    Star {
        /// Preset key: gamma0-11 or gamma0-37plus.
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "inf")]
        cusp: CuspArg,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        /// Node budget for the word search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Word in the generators of a preset.
    Word {
        /// Preset key: sl2z, gamma0-11 or gamma0-37plus.
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Run acceptance checks and print a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Override the numerical tolerance.
        #[arg(long)]
        tol: Option<f64>,
        /// Multiply every sample count, e.g. 0.1 for a quick run.
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
    },
    /// List the built-in group presets.
    Presets,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymbolGroup {
    Sl2z,
    Gamma0,
    Plus,
}

#[derive(Clone, Copy, ValueEnum)]
enum CuspArg {
    Inf,
    #[value(name = "0")]
    Zero,
}

impl From<CuspArg> for StarCusp {
    fn from(c: CuspArg) -> Self {
        match c {
            CuspArg::Inf => StarCusp::Infinity,
            CuspArg::Zero => StarCusp::Zero,
        }
    }
}

enum Failure {
    Domain(String),
    Verify(Vec<Check>),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verify(failed)) => {
            eprintln!("{} check(s) failed:", failed.len());
            for c in failed {
                eprintln!("  criterion {}: {} :: {}", c.criterion, c.name, c.detail);
            }
            ExitCode::from(2)
        }
    }
}

fn parse_matrix(s: &str) -> Result<ScaledMat, Failure> {
    s.parse().map_err(|e| Failure::Domain(format!("--matrix {s:?}: {e}")))
}

fn preset(key: &str) -> Result<&'static GroupPreset, Failure> {
    preset_by_key(key).ok_or_else(|| {
        let keys: Vec<_> = all_presets().iter().map(|p| p.key).collect();
        Failure::Domain(format!("unknown group {key:?}; expected one of {}", keys.join(", ")))
    })
}

fn emit(json: bool, text: String, value: Value) {
    if json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Sum { h, k } => {
            let v = dedekind_sum(*h, *k)?;
            emit(cli.json, format!("s({h},{k}) = {v}"), json!({ "value": v.to_string() }));
        }
        Command::Symbol { group, level, cusp, matrix } => {
            let m = parse_matrix(matrix)?;
            let level = || level.ok_or_else(|| Failure::Domain("--level is required for this group".into()));
            let v: Rat = match (group, cusp) {
                (SymbolGroup::Sl2z, CuspArg::Inf) => s_sl2z(&m)?,
                (SymbolGroup::Gamma0, CuspArg::Inf) => s_gamma0(level()?, &m)?,
                (SymbolGroup::Gamma0, CuspArg::Zero) => s_cusp0(level()?, &m)?,
                (SymbolGroup::Plus, CuspArg::Inf) => s_plus(level()?, &m)?,
                (_, CuspArg::Zero) => return Err(Failure::Domain("--cusp 0 needs --group gamma0".into())),
            };
            emit(cli.json, v.to_string(), json!({ "value": v.to_string() }));
        }
        Command::Star { group, cusp, matrix, budget } => {
            let p = preset(group)?;
            let m = parse_matrix(matrix)?;
            let w = solve_word(p, &m, *budget)?;
            let v = s_star(p, (*cusp).into(), &w)?;
            let value = json!({ "value": v.q.to_string(), "x_b": v.n, "modulus": 1, "word": w.render(p) });
            emit(cli.json, format!("{v} (mod 1)"), value);
        }
        Command::Word { group, matrix, budget } => {
            let p = preset(group)?;
            let m = parse_matrix(matrix)?;
            let w = solve_word(p, &m, *budget)?;
            let text = if w.is_empty() { "1".to_string() } else { w.render(p) };
            emit(cli.json, text.clone(), json!({ "word": text }));
        }
        Command::Verify { suite, seed, tol, scale } => {
            let suite = Suite::parse(suite)
                .ok_or_else(|| Failure::Domain(format!("unknown suite {suite:?}; expected exact, words, numerics or all")))?;
            if scale.is_nan() || *scale <= 0.0 {
                return Err(Failure::Domain(format!("--scale must be positive, got {scale}")));
            }
            let cfg = Config { seed: *seed, tol: *tol, scale: *scale };
            let checks = run_parallel(suite, &cfg);
            let report: Vec<Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "criterion": c.criterion,
                        "check": c.name,
                        "max_residual": c.max_residual,
                        "pass": c.pass,
                        "detail": c.detail,
                    })
                })
                .collect();
            let pass = checks.iter().all(|c| c.pass);
            let out = json!({ "seed": seed, "suite": format!("{suite:?}").to_lowercase(), "pass": pass, "checks": report });
            println!("{}", serde_json::to_string_pretty(&out)?);
            if !pass {
                return Err(Failure::Verify(checks.into_iter().filter(|c| !c.pass).collect()));
            }
        }
        Command::Presets => {
            let list: Vec<Value> = all_presets()
                .iter()
                .map(|p| {
                    let gens: Vec<Value> = p
                        .generators
                        .iter()
                        .map(|g| json!({ "name": g.name, "matrix": g.matrix.to_string(), "symbol": g.s_value.to_string() }))
                        .collect();
                    json!({ "key": p.key, "group": p.kind.label(), "generators": gens })
                })
                .collect();
            if cli.json {
                println!("{}", Value::Array(list));
            } else {
                for p in all_presets() {
                    println!("{} ({})", p.key, p.kind.label());
                    for g in &p.generators {
                        println!("  {:<5} {:<22} S = {}", g.name, g.matrix.to_string(), g.s_value);
                    }
                }
            }
        }
    }
    Ok(())
}

/// One thread per criterion; results come back in criterion order.
fn run_parallel(suite: Suite, cfg: &Config) -> Vec<Check> {
    std::thread::scope(|s| {
        let handles: Vec<_> = suite.criteria().into_iter().map(|k| s.spawn(move || criterion(k, cfg))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("criterion thread panicked")).collect()
    })
}
