//! Rendering of generator sets as plain text, JSON and CAS scripts.
//!
//! The plain and JSON forms parse back into an [`ExportBundle`], and
//! rendering a parsed bundle reproduces the input byte for byte. The two
//! script dialects are write-only: a Macaulay2 script and a Singular script,
//! each declaring the ring, its degrees and the ideal `IY`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use unproj_core::ring::parse_polynomial;
use unproj_core::{Grading, Polynomial, QuadraticStatus, RelationSet, VariableTable};

use crate::error::{CliError, Result};

/// Header line written for `n >= 4`, where no quadratic generator is known.
pub const OPEN_MARKER: &str = "quadratic: OPEN (not computed)";
const COMPUTED_MARKER: &str = "quadratic: computed";
const TITLE: &str = "type II_1 unprojection generators";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    /// Macaulay2 script.
    M2,
    /// Singular script.
    Singular,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Plain => "plain",
            Format::Json => "json",
            Format::M2 => "m2-dialect",
            Format::Singular => "sgr-dialect",
        }
    }

    pub fn is_script(self) -> bool {
        matches!(self, Format::M2 | Format::Singular)
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            "m2" | "m2-dialect" | "cas-script-A" => Ok(Format::M2),
            "singular" | "sgr-dialect" | "cas-script-B" => Ok(Format::Singular),
            other => Err(CliError::Usage(format!(
                "unknown format `{other}` (expected plain, json, m2-dialect or sgr-dialect)"
            ))),
        }
    }
}

/// A script dialect for `export-cas`; rejects `plain` and `json`.
pub fn parse_dialect(s: &str) -> Result<Format> {
    match s.parse::<Format>() {
        Ok(f) if f.is_script() => Ok(f),
        _ => Err(CliError::Usage(format!(
            "unknown dialect `{s}` (expected m2-dialect, cas-script-A, sgr-dialect or cas-script-B)"
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadraticMarker {
    Computed,
    Open,
}

impl QuadraticMarker {
    fn line(self) -> &'static str {
        match self {
            QuadraticMarker::Computed => COMPUTED_MARKER,
            QuadraticMarker::Open => OPEN_MARKER,
        }
    }

    fn from_line(s: &str) -> Option<Self> {
        match s {
            COMPUTED_MARKER => Some(QuadraticMarker::Computed),
            OPEN_MARKER => Some(QuadraticMarker::Open),
            _ => None,
        }
    }
}

/// A named generator list over one variable table, ready to be rendered.
#[derive(Clone, Debug)]
pub struct ExportBundle {
    pub n: usize,
    pub table: Arc<VariableTable>,
    pub generators: Vec<(String, Polynomial)>,
    pub grading: Option<Grading>,
    pub quadratic: QuadraticMarker,
    /// Free-form origin of a specialized set, e.g. a substitution label.
    pub provenance: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct BundleJson {
    n: usize,
    variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<u32>>,
    quadratic: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
    generators: Vec<GeneratorJson>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    name: String,
    polynomial: String,
}

impl ExportBundle {
    pub fn from_relations(set: &RelationSet, grading: Option<Grading>) -> Self {
        let quadratic = match set.quadratic {
            QuadraticStatus::Open => QuadraticMarker::Open,
            _ => QuadraticMarker::Computed,
        };
        Self {
            n: set.n,
            table: set.table().clone(),
            generators: set.generators(),
            grading,
            quadratic,
            provenance: None,
        }
    }

    pub fn with_provenance(mut self, label: Option<String>) -> Self {
        self.provenance = label;
        self
    }

    pub fn names(&self) -> Vec<&str> {
        self.generators.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.render_plain(),
            Format::Json => self.render_json(),
            Format::M2 => self.render_m2(),
            Format::Singular => self.render_singular(),
        }
    }

    /// Parses the output of [`render`](Self::render) for `plain` or `json`.
    pub fn parse(text: &str, format: Format) -> Result<Self> {
        match format {
            Format::Plain => Self::parse_plain(text),
            Format::Json => Self::parse_json(text),
            other => Err(CliError::Usage(format!("{other} output cannot be parsed back"))),
        }
    }

    fn header_lines(&self) -> Vec<String> {
        let mut out = vec![format!("n: {}", self.n), format!("variables: {}", self.table.names().join(", "))];
        if let Some(g) = &self.grading {
            out.push(format!("degrees: {}", join(g.weights())));
        }
        if let Some(p) = &self.provenance {
            out.push(format!("provenance: {p}"));
        }
        out.push(self.quadratic.line().to_string());
        out.push(format!("generators: {}", self.generators.len()));
        out
    }

    fn render_plain(&self) -> String {
        let mut out = format!("# {TITLE}\n");
        for line in self.header_lines() {
            out.push_str(&line);
            out.push('\n');
        }
        out.push('\n');
        for (name, g) in &self.generators {
            out.push_str(&format!("{name} = {g}\n"));
        }
        out
    }

    fn parse_plain(text: &str) -> Result<Self> {
        let bad = |line: usize, msg: &str| CliError::Bundle { line: line + 1, msg: msg.to_string() };
        let mut lines = text.lines().enumerate();
        let mut header = Vec::new();
        for (i, line) in lines.by_ref() {
            if line.is_empty() {
                break;
            }
            if line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once(": ").ok_or_else(|| bad(i, "expected `key: value`"))?;
            header.push((i, key, value));
        }
        let field = |key: &str| header.iter().find(|(_, k, _)| *k == key).map(|(i, _, v)| (*i, *v));
        let (i, n) = field("n").ok_or_else(|| bad(0, "missing `n`"))?;
        let n = n.parse().map_err(|_| bad(i, "`n` is not an integer"))?;
        let (_, vars) = field("variables").ok_or_else(|| bad(0, "missing `variables`"))?;
        let table = Arc::new(VariableTable::new(vars.split(", "))?);
        let grading = match field("degrees") {
            Some((i, d)) => {
                let w = d.split(", ").map(str::parse).collect::<std::result::Result<Vec<u32>, _>>();
                Some(Grading::new(&table, w.map_err(|_| bad(i, "degrees must be integers"))?)?)
            }
            None => None,
        };
        let quadratic = field("quadratic")
            .and_then(|(_, v)| QuadraticMarker::from_line(&format!("quadratic: {v}")))
            .ok_or_else(|| bad(0, "missing or unknown `quadratic` line"))?;
        let provenance = field("provenance").map(|(_, p)| p.to_string());
        let mut generators = Vec::new();
        for (i, line) in lines {
            let (name, poly) = line.split_once(" = ").ok_or_else(|| bad(i, "expected `name = polynomial`"))?;
            generators.push((name.to_string(), parse_polynomial(&table, poly)?));
        }
        if let Some((i, count)) = field("generators") {
            if count.parse::<usize>().ok() != Some(generators.len()) {
                return Err(bad(i, "generator count does not match the listing"));
            }
        }
        Ok(Self { n, table, generators, grading, quadratic, provenance })
    }

    fn render_json(&self) -> String {
        let doc = BundleJson {
            n: self.n,
            variables: self.table.names().to_vec(),
            degrees: self.grading.as_ref().map(|g| g.weights().to_vec()),
            quadratic: self.quadratic.line().trim_start_matches("quadratic: ").to_string(),
            provenance: self.provenance.clone(),
            generators: self
                .generators
                .iter()
                .map(|(name, g)| GeneratorJson { name: name.clone(), polynomial: g.to_string() })
                .collect(),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("bundle serializes");
        out.push('\n');
        out
    }

    fn parse_json(text: &str) -> Result<Self> {
        let doc: BundleJson = serde_json::from_str(text)?;
        let table = Arc::new(VariableTable::new(doc.variables)?);
        let grading = doc.degrees.map(|w| Grading::new(&table, w)).transpose()?;
        let quadratic = QuadraticMarker::from_line(&format!("quadratic: {}", doc.quadratic))
            .ok_or_else(|| CliError::Bundle { line: 0, msg: format!("unknown quadratic state `{}`", doc.quadratic) })?;
        let generators = doc
            .generators
            .into_iter()
            .map(|g| Ok((g.name, parse_polynomial(&table, &g.polynomial)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n: doc.n, table, generators, grading, quadratic, provenance: doc.provenance })
    }

    /// Variable indices in declaration order. Ambient tables are declared as
    /// `A.., B.., y.., x.., z, s0, s1`; other tables keep their own order.
    fn declaration_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.table.len()).collect();
        if self.table.ambient_n().is_some() {
            let class = |name: &str| match name {
                "s0" => 5,
                "s1" => 6,
                "z" => 4,
                _ => match name.as_bytes()[0] {
                    b'A' => 0,
                    b'B' => 1,
                    b'y' => 2,
                    _ => 3,
                },
            };
            order.sort_by_key(|&i| class(self.table.name(i)));
        }
        order
    }

    fn script_comments(&self) -> Vec<String> {
        let mut out = vec![format!("{TITLE}, n = {}", self.n)];
        if let Some(p) = &self.provenance {
            out.push(format!("provenance: {p}"));
        }
        if self.quadratic == QuadraticMarker::Open {
            out.push(OPEN_MARKER.to_string());
        }
        out
    }

    fn render_m2(&self) -> String {
        let order = self.declaration_order();
        let mut out: String = self.script_comments().iter().map(|c| format!("-- {c}\n")).collect();
        let vars = order.iter().map(|&i| self.table.name(i)).collect::<Vec<_>>().join(",");
        out.push_str("kk = QQ\n");
        match &self.grading {
            Some(g) => {
                let w: Vec<u32> = order.iter().map(|&i| g.weight_of(i)).collect();
                out.push_str(&format!("S = kk [{vars}, Degrees => {{{}}}]\n", run_length(&w)));
            }
            None => out.push_str(&format!("S = kk [{vars}]\n")),
        }
        for (name, g) in &self.generators {
            out.push_str(&format!("{name} = {g};\n"));
        }
        out.push_str(&format!("IY = ideal ({});\n", self.names().join(",")));
        if self.grading.is_some() {
            out.push_str("isHomogeneous IY\n");
        }
        out
    }

    fn render_singular(&self) -> String {
        let order = self.declaration_order();
        let mut out: String = self.script_comments().iter().map(|c| format!("// {c}\n")).collect();
        let vars = order.iter().map(|&i| self.table.name(i)).collect::<Vec<_>>().join(",");
        // wp needs positive weights; otherwise the degrees are only recorded
        let weights = self.grading.as_ref().map(|g| order.iter().map(|&i| g.weight_of(i)).collect::<Vec<_>>());
        let ordering = match &weights {
            Some(w) if w.iter().all(|&d| d > 0) => format!("wp({})", w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
            Some(w) => {
                out.push_str(&format!("// degrees: {}\n", w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")));
                "dp".to_string()
            }
            None => "dp".to_string(),
        };
        out.push_str(&format!("ring S = 0, ({vars}), {ordering};\n"));
        for (name, g) in &self.generators {
            out.push_str(&format!("poly {name} = {g};\n"));
        }
        out.push_str(&format!("ideal IY = {};\n", self.names().join(",")));
        out
    }
}

fn join(w: &[u32]) -> String {
    w.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")
}

/// Macaulay2 degree list with runs written as `count:value`.
fn run_length(w: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let j = (i..w.len()).find(|&j| w[j] != w[i]).unwrap_or(w.len());
        parts.push(if j - i == 1 { w[i].to_string() } else { format!("{}:{}", j - i, w[i]) });
        i = j;
    }
    parts.join(", ")
}
