//! The work behind each subcommand, separated from argument parsing so that
//! tests can drive it directly.

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use unproj_core::ring::{Grading, SubstitutionDocument};
use unproj_core::verify::{audit_homogeneity, reports_to_json, run_suite, sort_reports, Suite};
use unproj_core::{ideal_generators, specs, CheckReport};

use crate::error::{CliError, Result};
use crate::export::ExportBundle;

/// Environment variable selecting the report verbosity of `verify`.
pub const VERBOSITY_VAR: &str = "UNPROJ_VERBOSITY";

/// All generators of `I_Y` with the ambient grading.
pub fn generate(n: usize) -> Result<ExportBundle> {
    let set = ideal_generators(n)?;
    let grading = set.grading.clone();
    Ok(ExportBundle::from_relations(&set, Some(grading)))
}

/// Reads a substitution document from a file, or by name from the shipped set.
pub fn load_spec(arg: &str) -> Result<SubstitutionDocument> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(doc) = specs::shipped(arg) {
            return Ok(doc?);
        }
    }
    let text = fs::read_to_string(path).map_err(|e| CliError::io(arg, e))?;
    Ok(SubstitutionDocument::from_json(&text)?)
}

/// A specialized generator set and the homogeneity warnings found for it.
#[derive(Debug)]
pub struct Substitution {
    pub bundle: ExportBundle,
    pub warnings: Vec<String>,
}

/// Applies the document to every generator of `I_Y` and audits homogeneity
/// under the declared grading, or weight 1 on every target variable when the
/// document declares none.
pub fn substitute(doc: &SubstitutionDocument) -> Result<Substitution> {
    let (spec, declared) = doc.build()?;
    let audit_grading = declared.clone().unwrap_or_else(|| Grading::uniform(spec.target(), 1));
    let set = ideal_generators(doc.n)?.specialize(&spec, audit_grading.clone())?;
    let warnings = match audit_homogeneity(&set, &audit_grading) {
        Ok(_) => Vec::new(),
        Err(w) => vec![format!("{} is not homogeneous: {}", w.location, w.rendering)],
    };
    let bundle = ExportBundle::from_relations(&set, declared).with_provenance(doc.label.clone());
    Ok(Substitution { bundle, warnings })
}

/// Runs the selected suites, one rayon task per suite, and returns the
/// reports sorted by suite and parameters.
pub fn verify(n_max: usize, seed: u64, suite: Option<Suite>) -> Result<Vec<CheckReport>> {
    if n_max < 2 {
        return Err(CliError::Usage(format!("--n-max must be at least 2, got {n_max}")));
    }
    let suites: Vec<Suite> = match suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let mut reports: Vec<CheckReport> = suites.par_iter().flat_map_iter(|&s| run_suite(s, n_max, seed)).collect();
    sort_reports(&mut reports);
    Ok(reports)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verbosity {
    /// Failures and the summary line.
    Quiet,
    /// One line per report; failures with their witness.
    Normal,
    /// Every report with witnesses and notes.
    Detail,
}

impl Verbosity {
    /// Reads [`VERBOSITY_VAR`]: `quiet`/`0`, `normal`/`1` or `detail`/`2`.
    pub fn from_env() -> Result<Self> {
        match std::env::var(VERBOSITY_VAR) {
            Err(_) => Ok(Verbosity::Normal),
            Ok(v) => match v.as_str() {
                "" | "1" | "normal" => Ok(Verbosity::Normal),
                "0" | "quiet" => Ok(Verbosity::Quiet),
                "2" | "detail" => Ok(Verbosity::Detail),
                other => Err(CliError::Usage(format!("{VERBOSITY_VAR}={other} is not quiet, normal or detail"))),
            },
        }
    }
}

pub fn render_reports_text(reports: &[CheckReport], verbosity: Verbosity) -> String {
    let mut out = String::new();
    for r in reports {
        let line = match verbosity {
            Verbosity::Quiet if r.passed() => continue,
            Verbosity::Detail => r.to_text(true),
            _ => r.to_text(!r.passed()),
        };
        out.push_str(&line);
        out.push('\n');
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    out.push_str(&format!("{passed}/{} checks passed\n", reports.len()));
    out
}

pub fn render_reports_json(reports: &[CheckReport]) -> String {
    let mut out = reports_to_json(reports);
    out.push('\n');
    out
}

/// Writes to `path`, or to standard output when `path` is `None` or `-`.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text).map_err(|e| CliError::io(p.display().to_string(), e)),
        _ => {
            use std::io::Write;
            match std::io::stdout().write_all(text.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::io("<stdout>", e)),
                _ => Ok(()),
            }
        }
    }
}
