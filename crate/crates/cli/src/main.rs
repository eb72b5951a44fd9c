mod commands;
mod problem;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hypertheta::{EngineConfig, GlobalOrder, LengthMode};
use rayon::prelude::*;
use serde_json::{json, Value};

use problem::{Overrides, Problem, Task};

const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "hypertheta", version, about = "Theta pairings on isolated hypersurface singularities")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every task of a problem file, one JSON result per line.
    Run(RunArgs),
    /// Check the built-in regression table and a seeded property run.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        rounds: usize,
        #[arg(long, hide = true)]
        corrupt_table: bool,
    },
}

#[derive(Args)]
struct RunArgs {
    problem: PathBuf,
    /// Coefficient field, overriding the file: `Q` or `Fp:<prime>`.
    #[arg(long)]
    field: Option<String>,
    #[arg(long, default_value = "grevlex")]
    order: GlobalOrder,
    #[arg(long, default_value = "local")]
    mode: LengthMode,
    /// Syzygy steps allowed before giving up on an MCM approximation.
    #[arg(long)]
    max_steps: Option<usize>,
    /// Accepted for reproducibility records; `run` itself is deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Re-check factorizations and determinants exactly.
    #[arg(long)]
    verify: bool,
    /// Run tasks concurrently (output order is preserved).
    #[arg(long)]
    parallel: bool,
    /// Report wall-clock times; otherwise `timingMs` is 0 so output is byte-stable.
    #[arg(long)]
    timing: bool,
}

fn envelope(task: &Task, result: Result<Value, hypertheta::Error>, ms: u128) -> (bool, Value) {
    let (ok, payload) = match result {
        Ok(v) => (true, v),
        Err(e) => (false, json!({"error": commands::error_kind(&e), "message": e.to_string()})),
    };
    let env = json!({
        "task": task.spec,
        "status": if ok { "ok" } else { "error" },
        "payload": payload,
        "timingMs": ms,
        "engineVersion": ENGINE_VERSION,
    });
    (ok, env)
}

fn run_one(p: &Problem, task: &Task, timing: bool) -> (bool, Value) {
    let start = Instant::now();
    let result = commands::execute(p, task);
    let ms = if timing { start.elapsed().as_millis() } else { 0 };
    envelope(task, result, ms)
}

fn thread_cap() -> Option<usize> {
    std::env::var("THETA_KERNEL_THREADS").ok()?.parse().ok().filter(|&n| n > 0)
}

fn run(args: RunArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.problem) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.problem.display());
            return ExitCode::from(2);
        }
    };
    let over = Overrides {
        field: args.field,
        config: EngineConfig { order: args.order, mode: args.mode, max_steps: args.max_steps, verify: args.verify },
    };
    let p = match problem::parse_text(&text, &over) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {}: {e}", args.problem.display());
            return ExitCode::from(2);
        }
    };
    let results: Vec<(bool, Value)> = if args.parallel {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = thread_cap() {
            builder = builder.num_threads(n);
        }
        let pool = builder.build().expect("thread pool");
        pool.install(|| p.tasks.par_iter().map(|t| run_one(&p, t, args.timing)).collect())
    } else {
        p.tasks.iter().map(|t| run_one(&p, t, args.timing)).collect()
    };
    let mut all_ok = true;
    for (ok, env) in results {
        all_ok &= ok;
        println!("{}", serde_json::to_string(&env).expect("envelope serializes"));
    }
    if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Cmd::Run(args) => run(args),
        Cmd::Selftest { seed, rounds, corrupt_table } => {
            if selftest::run(seed, rounds, corrupt_table) == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
    }
}
