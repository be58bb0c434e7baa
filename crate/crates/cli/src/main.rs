use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use vague_core::expr::{check_expr, parse_expr};
use vague_core::lawsuite::{run_suite, FaultyMax, Standard, SuiteConfig};
use vague_core::logic::render_tables;
use vague_core::neutrix::oracle::DEFAULT_SAMPLES;
use vague_core::sorites::{run_scenario, scenario_from_json};

const OK: u8 = 0;
const FAILURE: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "vague", version, about = "External numbers, many-valued logics and Sorites scenarios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic on external numbers.
    Numbers {
        #[command(subcommand)]
        action: NumbersCommand,
    },
    /// Print the strong Kleene truth tables.
    Tables,
    /// Run the randomized algebraic law suite.
    Laws {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random instances per law.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Soritical scenarios.
    Sorites {
        #[command(subcommand)]
        action: SoritesCommand,
    },
}

#[derive(Subcommand)]
enum NumbersCommand {
    /// Evaluate an expression such as `(2 + osl) * (3 + osl)`.
    Eval {
        expr: String,
        /// Cross-check the result against sampled members.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SoritesCommand {
    /// Run a scenario described by a JSON file.
    Run {
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    Nmax,
}

fn numbers_eval(expr: &str, check: bool, samples: usize, seed: u64, format: Format) -> u8 {
    let e = match parse_expr(expr) {
        Ok(e) => e,
        Err(err) => {
            eprintln!("error: {err}");
            return USAGE;
        }
    };
    let value = e.eval();
    let oracle = check.then(|| check_expr(&e, samples, &mut ChaCha8Rng::seed_from_u64(seed)));
    match format {
        Format::Text => {
            println!("value: {value}");
            println!("class: {}", value.classify());
            if let Some(o) = &oracle {
                match &o.escape {
                    None => println!("oracle: ok ({} samples, seed {seed})", o.samples),
                    Some(x) => println!("oracle: MISMATCH sample {x} is outside {value} (seed {seed})"),
                }
            }
        }
        Format::Json => {
            let mut doc = json!({
                "tool": "vague",
                "version": env!("CARGO_PKG_VERSION"),
                "expr": expr,
                "value": value.to_string(),
                "class": value.classify().to_string(),
            });
            if let Some(o) = &oracle {
                doc["oracle"] = json!({
                    "seed": seed,
                    "samples": o.samples,
                    "passed": o.passed(),
                    "escape": o.escape.as_ref().map(|x| x.to_string()),
                });
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    match oracle {
        Some(o) if !o.passed() => FAILURE,
        _ => OK,
    }
}

fn laws(seed: u64, n: u64, format: Format, fault: Option<Fault>) -> u8 {
    let config = SuiteConfig {
        seed,
        instances: n as usize,
        ..SuiteConfig::default()
    };
    let report = match fault {
        Some(Fault::Nmax) => run_suite(&FaultyMax, &config),
        None => run_suite(&Standard, &config),
    };
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("json")),
    }
    if report.all_passed() {
        OK
    } else {
        FAILURE
    }
}

fn sorites_run(config: &PathBuf, format: Format, output: Option<&PathBuf>) -> u8 {
    let text = match std::fs::read_to_string(config) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", config.display());
            return USAGE;
        }
    };
    let scenario = match scenario_from_json(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: config {}: {e}", config.display());
            return USAGE;
        }
    };
    let report = run_scenario(&scenario);
    let rendered = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return USAGE;
            }
        }
        None => print!("{rendered}"),
    }
    OK
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Numbers {
            action:
                NumbersCommand::Eval {
                    expr,
                    check,
                    samples,
                    seed,
                    format,
                },
        } => numbers_eval(&expr, check, samples, seed, format),
        Command::Tables => {
            print!("{}", render_tables());
            OK
        }
        Command::Laws {
            seed,
            n,
            format,
            inject_fault,
        } => laws(seed, n, format, inject_fault),
        Command::Sorites {
            action: SoritesCommand::Run { config, format, output },
        } => sorites_run(&config, format, output.as_ref()),
    };
    ExitCode::from(code)
}
