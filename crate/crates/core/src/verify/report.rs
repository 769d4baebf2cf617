use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exterior::ExteriorElement;
use crate::ring::Polynomial;

/// Maximum number of terms rendered in a failure witness.
pub const WITNESS_TERMS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A nonzero difference that refutes an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Where the difference was found, e.g. a basis wedge or a generator name.
    pub location: String,
    /// At most [`WITNESS_TERMS`] leading terms.
    pub rendering: String,
    pub term_count: usize,
}

impl Witness {
    pub fn from_difference(location: impl Into<String>, diff: &Polynomial) -> Self {
        Self { location: location.into(), rendering: diff.truncated_display(WITNESS_TERMS), term_count: diff.len() }
    }

    /// Non-polynomial failures such as a wrong count or a missing generator.
    pub fn message(location: impl Into<String>, text: impl Into<String>) -> Self {
        Self { location: location.into(), rendering: text.into(), term_count: 0 }
    }
}

/// Outcome of one suite on one parameter record.
///
/// A failing report always carries a witness; a passing one never does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Informational diagnostics that do not affect the verdict.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn pass(suite: &str, params: Params) -> Self {
        Self { suite: suite.into(), params: params.0, verdict: Verdict::Pass, witness: None, notes: Vec::new() }
    }

    pub fn fail(suite: &str, params: Params, witness: Witness) -> Self {
        Self { suite: suite.into(), params: params.0, verdict: Verdict::Fail, witness: Some(witness), notes: Vec::new() }
    }

    pub fn from_outcome(suite: &str, params: Params, outcome: Option<Witness>) -> Self {
        match outcome {
            None => Self::pass(suite, params),
            Some(w) => Self::fail(suite, params, w),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn params_text(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect::<Vec<_>>().join(" ")
    }

    /// One line; with `detail`, failure witnesses and notes follow on indented lines.
    pub fn to_text(&self, detail: bool) -> String {
        let tag = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        let params = self.params_text();
        let mut out = if params.is_empty() { format!("{tag} {}", self.suite) } else { format!("{tag} {} {params}", self.suite) };
        if detail {
            if let Some(w) = &self.witness {
                out.push_str(&format!("\n    at {}: {}", w.location, w.rendering));
            }
            for n in &self.notes {
                out.push_str(&format!("\n    note: {n}"));
            }
        }
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(true))
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Builder for a report's parameter record.
#[derive(Clone, Debug, Default)]
pub struct Params(BTreeMap<String, Value>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.into(), value.into());
        self
    }
}

/// First nonzero coefficient of `lhs - rhs`, located by basis wedge.
pub(crate) fn element_difference(context: &str, lhs: &ExteriorElement, rhs: &ExteriorElement) -> Option<Witness> {
    let diff = lhs.try_sub(rhs).expect("compared elements have the same shape");
    diff.first_nonzero().map(|(k, c)| Witness::from_difference(format!("{context}, coefficient of {k}"), c))
}

pub(crate) fn poly_difference(context: &str, lhs: &Polynomial, rhs: &Polynomial) -> Option<Witness> {
    let diff = lhs - rhs;
    (!diff.is_zero()).then(|| Witness::from_difference(context, &diff))
}

/// Serializes reports as a JSON array.
pub fn reports_to_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Reports in the order suite name, then parameters.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| {
        a.suite.cmp(&b.suite).then_with(|| {
            let key = |r: &CheckReport| serde_json::to_string(&r.params).unwrap_or_default();
            key(a).cmp(&key(b))
        })
    });
}
