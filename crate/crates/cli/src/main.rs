use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use linminmax::demo;
use linminmax::io::Instance;
use linminmax::{Budget, Error, GenericSampler};

mod check;
mod gen;
mod report;
mod verify;

use report::{Outcome, Report};

#[derive(Parser, Debug)]
#[command(name = "linminmax", version, about = "Exact linear and matrix min-max checks with certificates")]
struct Cli {
    /// Seed for generic coefficients and instance generation.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Random evaluations per randomized step.
    #[arg(long, global = true, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Coefficients are drawn from [-bound, bound].
    #[arg(long = "coeff-bound", global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    coeff_bound: u64,
    /// Largest number of generators whose subsets may be enumerated.
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..64))]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a random instance as JSON.
    Gen {
        #[arg(value_enum)]
        kind: gen::Kind,
        /// Parameters as key=value, e.g. n=3 m=3 r=5.
        params: Vec<String>,
        /// Output file (stdout when absent).
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Run a min-max equality on an instance file and emit certificates.
    Check {
        #[arg(value_enum)]
        theorem: check::Theorem,
        file: PathBuf,
        /// Blow-up order for matrix-dilworth (default max(1, n-1)).
        #[arg(long)]
        order: Option<usize>,
    },
    /// Reproduce a worked example.
    Demo {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(demo::DEMO_NAMES))]
        name: String,
        /// Print the instance as JSON instead of running it.
        #[arg(long)]
        emit_instance: bool,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: u64,
    pub budget: Budget,
}

impl RunConfig {
    pub fn sampler(&self) -> GenericSampler {
        GenericSampler::new(self.seed, self.coeff_bound, self.trials)
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "seed": self.seed,
            "trials": self.trials,
            "coeff_bound": self.coeff_bound,
            "budget": self.budget.max_generators,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        seed: cli.seed,
        trials: cli.trials as usize,
        coeff_bound: cli.coeff_bound,
        budget: Budget::new(cli.budget as usize),
    };
    let outcome = match cli.command {
        Command::Gen { kind, params, out } => match gen::run(kind, &params, config.seed) {
            Ok(doc) => {
                let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n";
                let written = match &out {
                    Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
                    None => {
                        report::out(&text);
                        Ok(())
                    }
                };
                return match written {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(msg) => {
                        eprintln!("error: {msg}");
                        ExitCode::from(1)
                    }
                };
            }
            Err(err) => Outcome::Failed(err),
        },
        Command::Check { theorem, file, order } => match std::fs::read_to_string(&file) {
            Ok(text) => check::run(theorem, &text, order, &config),
            Err(e) => Outcome::Failed(Error::Parse(format!("{}: {e}", file.display()))),
        },
        Command::Demo { name, emit_instance: true } => {
            let doc = linminmax::io::instance_json(&demo_instance(&name));
            report::out(&(serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n"));
            return ExitCode::SUCCESS;
        }
        Command::Demo { name, .. } => {
            let mut s = config.sampler();
            match demo::run_demo(&name, &mut s, config.budget) {
                Ok(rep) => Outcome::Done(Report::from_demo(&rep)),
                Err(err) => Outcome::Failed(err),
            }
        }
    };
    outcome.emit(cli.output, &config)
}

fn demo_instance(name: &str) -> Instance {
    match name {
        "linorder-f4" => Instance::Relation {
            r: demo::linorder_f4(),
            e: None,
            f: None,
        },
        "menger-f7" => {
            let (r, e, f) = demo::menger_f7();
            Instance::Relation {
                r,
                e: Some(e),
                f: Some(f),
            }
        }
        _ => Instance::MatrixSpace {
            v: demo::skew_symmetric_space(3),
            e: None,
            f: None,
        },
    }
}
