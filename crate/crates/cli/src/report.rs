use std::io::Write;
use std::process::ExitCode;

use linminmax::demo::DemoReport;
use linminmax::Error;
use serde_json::{json, Map, Value};

use crate::{Format, RunConfig};

pub const EXIT_PROVED: u8 = 0;
pub const EXIT_VIOLATED: u8 = 1;
pub const EXIT_BOUNDS: u8 = 2;
pub const EXIT_PARSE: u8 = 3;

#[derive(Debug)]
pub struct Report {
    pub name: String,
    pub value: Option<usize>,
    pub proved: bool,
    pub facts: Vec<(String, Value)>,
    pub certificate: Value,
    pub checks: Vec<(String, bool)>,
}

impl Report {
    pub fn new(name: &str) -> Self {
        Report {
            name: name.into(),
            value: None,
            proved: false,
            facts: Vec::new(),
            certificate: Value::Null,
            checks: Vec::new(),
        }
    }

    pub fn fact(&mut self, key: &str, value: impl Into<Value>) {
        self.facts.push((key.into(), value.into()));
    }

    pub fn check(&mut self, key: &str, ok: bool) {
        self.checks.push((key.into(), ok));
    }

    pub fn from_demo(d: &DemoReport) -> Self {
        let mut r = Report::new(&format!("demo {}", d.name));
        for (k, v) in &d.facts {
            r.fact(k, v.clone());
        }
        for (k, ok) in &d.checks {
            r.check(k, *ok);
        }
        r.proved = true;
        r
    }

    fn code(&self) -> u8 {
        if self.checks.iter().any(|(_, ok)| !ok) {
            EXIT_VIOLATED
        } else if self.proved {
            EXIT_PROVED
        } else {
            EXIT_BOUNDS
        }
    }

    fn status(&self) -> &'static str {
        match self.code() {
            EXIT_PROVED => "proved",
            EXIT_BOUNDS => "bounds_only",
            _ => "invariant_violated",
        }
    }

    fn json(&self, config: &RunConfig) -> Value {
        let facts: Map<String, Value> = self.facts.iter().cloned().collect();
        let checks: Map<String, Value> = self.checks.iter().map(|(k, ok)| (k.clone(), Value::Bool(*ok))).collect();
        json!({
            "name": self.name,
            "status": self.status(),
            "value": self.value,
            "facts": facts,
            "checks": checks,
            "certificate": self.certificate,
            "config": config.json(),
        })
    }

    fn text(&self, config: &RunConfig) -> String {
        let mut out = format!("{}\n", self.name);
        if let Some(v) = self.value {
            out.push_str(&format!("  value: {v}\n"));
        }
        out.push_str(&format!("  status: {}\n", self.status()));
        for (k, v) in &self.facts {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("  {k}: {shown}\n"));
        }
        for (k, ok) in &self.checks {
            out.push_str(&format!("  [{}] {k}\n", if *ok { "ok" } else { "FAIL" }));
        }
        out.push_str(&format!(
            "  seed {} trials {} coeff-bound {} budget {}\n",
            config.seed, config.trials, config.coeff_bound, config.budget.max_generators
        ));
        out
    }
}

/// Exit status for a library error.
pub fn error_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_)
        | Error::Dimension(_)
        | Error::InvalidArgument(_)
        | Error::InvalidPoset(_)
        | Error::NotLinorder(_)
        | Error::NotNilpotentAlgebra(_)
        | Error::NotAcyclic
        | Error::Cyclic
        | Error::Singular => EXIT_PARSE,
        Error::LowerBound { .. } | Error::Inconclusive { .. } | Error::Budget { .. } => EXIT_BOUNDS,
        Error::Invariant(_) | Error::NotNilpotent => EXIT_VIOLATED,
    }
}

/// Write to stdout; a closed pipe is not an error worth reporting.
pub fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

pub enum Outcome {
    Done(Report),
    Failed(Error),
}

impl Outcome {
    pub fn emit(self, format: Format, config: &RunConfig) -> ExitCode {
        match self {
            Outcome::Done(rep) => {
                match format {
                    Format::Json => out(&format!("{}\n", serde_json::to_string_pretty(&rep.json(config)).expect("serializable"))),
                    Format::Text => out(&rep.text(config)),
                }
                ExitCode::from(rep.code())
            }
            Outcome::Failed(err) => {
                let code = error_code(&err);
                match format {
                    Format::Json => out(&format!(
                        "{}\n",
                        serde_json::to_string_pretty(&json!({
                            "status": match code { EXIT_BOUNDS => "bounds_only", EXIT_PARSE => "input_error", _ => "invariant_violated" },
                            "error": err.to_string(),
                            "config": config.json(),
                        }))
                        .expect("serializable")
                    )),
                    Format::Text => eprintln!("error: {err}"),
                }
                ExitCode::from(code)
            }
        }
    }
}
