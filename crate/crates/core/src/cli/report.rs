use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use super::{CliError, EXIT_PASS, EXIT_VIOLATIONS};
use crate::algebra::CheckReport;
use crate::verify::ResidualReport;

/// What a subcommand produced, before wrapping into a [`Report`].
#[derive(Debug, Clone)]
pub struct Outcome {
    pub passed: bool,
    pub config: Value,
    pub result: Value,
    pub text: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// The machine-readable run report. Apart from `timing`, identical inputs
/// give identical JSON.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: Value,
    pub result: Value,
    pub passed: bool,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing: Timing,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(command: &'static str, outcome: Result<Outcome, CliError>, elapsed: Duration) -> Self {
        let timing = Timing {
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
        };
        let base = |config, result, passed, exit_code, error, text| Report {
            tool: "paralg",
            version: env!("CARGO_PKG_VERSION"),
            command,
            config,
            result,
            passed,
            exit_code,
            error,
            timing: timing.clone(),
            text,
        };
        match outcome {
            Ok(o) => {
                let code = if o.passed { EXIT_PASS } else { EXIT_VIOLATIONS };
                base(o.config, o.result, o.passed, code, None, o.text)
            }
            Err(e) => base(Value::Null, Value::Null, false, e.code, Some(e.message), String::new()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON report with the timing fields removed.
    pub fn stable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(m) = &mut v {
            m.remove("timing");
        }
        serde_json::to_string_pretty(&v).expect("report serializes")
    }
}

pub(super) fn check_line(r: &CheckReport) -> String {
    let axiom = serde_json::to_value(r.axiom).expect("axiom serializes");
    let name = axiom.as_str().unwrap_or("?");
    if r.passed {
        let notes = if r.notes.is_empty() {
            String::new()
        } else {
            format!(" ({})", r.notes.join("; "))
        };
        format!("{name}: PASS{notes}\n")
    } else {
        let mut s = format!("{name}: FAIL, {} violation(s)\n", r.total_violations);
        for v in r.violations.iter().take(5) {
            s += &format!("  {:?} {}\n", v.elements, v.detail);
        }
        s
    }
}

pub(super) fn residual_text(r: &ResidualReport) -> String {
    let mut s = String::new();
    for rel in &r.relations {
        s += &format!(
            "{:<14} {:>5} instances  max rel residual {:.3e}  {}\n",
            rel.name,
            rel.instances,
            rel.max_relative_residual,
            if rel.passed { "PASS" } else { "FAIL" }
        );
        if !rel.passed {
            if let Some(w) = &rel.worst {
                s += &format!(
                    "    worst at {:?}: residual {:.3e} (scale {:.3e}) at element {:?}\n",
                    w.assignment, w.residual, w.scale, w.location
                );
            }
        }
    }
    s += &format!(
        "{} instances, max relative residual {:.3e}, tol {:e}: {}\n",
        r.instances,
        r.max_relative_residual,
        r.tol,
        if r.passed { "PASS" } else { "FAIL" }
    );
    s
}
