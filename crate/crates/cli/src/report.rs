use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use cpitch_core::{ClassificationTrace, Outcome, Witness};

/// One command result. Serializes to a single JSON line with a fixed set of
/// top-level fields; command-specific extras go under `detail`.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub position: Value,
    pub outcome: Option<String>,
    #[serde(rename = "oL")]
    pub o_l: Option<String>,
    #[serde(rename = "oR")]
    pub o_r: Option<String>,
    pub trace: Option<Vec<String>>,
    pub witness: Option<WitnessJson>,
    pub states: Option<usize>,
    pub millis: f64,
    pub detail: Value,
    /// Human-readable rendering, printed when `--json` is off.
    #[serde(skip)]
    pub text: String,
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub x: String,
    pub g: String,
    pub h: String,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            x: w.x.to_string(),
            g: w.g_outcome.to_string(),
            h: w.h_outcome.to_string(),
        }
    }
}

impl Report {
    pub fn new(command: &'static str, position: impl Into<Value>) -> Self {
        Report {
            command,
            position: position.into(),
            detail: Value::Null,
            ..Report::default()
        }
    }

    pub fn set_outcome(&mut self, o: Outcome) {
        self.outcome = Some(o.to_string());
        self.o_l = Some(o.left_starts().to_string());
        self.o_r = Some(o.right_starts().to_string());
    }

    pub fn set_trace(&mut self, trace: &ClassificationTrace) {
        self.trace = Some(trace.rules().iter().map(ToString::to_string).collect());
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.text, "{}", s.as_ref());
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `N (oL=L, oR=R)`.
pub fn outcome_with_pair(o: Outcome) -> String {
    format!("{o} (oL={}, oR={})", o.left_starts(), o.right_starts())
}
