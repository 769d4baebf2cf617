use super::report::{CheckReport, Params, Witness};
use crate::error::Result;
use crate::ring::{weighted_degree, Grading, Homogeneity, SubstitutionDocument};
use crate::unprojection::{ideal_generators, RelationSet};

pub const GRADING: &str = "grading";

/// Degrees of the generators in the ambient grading:
/// `deg f = 5`, `deg l_i = 3n - 3`, `deg l_(n+i) = 3n - 4`, `deg q = 6n - 10`.
pub fn expected_degree(n: usize, name: &str) -> Option<u64> {
    let n = n as u64;
    let index = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<u64>().ok());
    if name == "q" {
        return Some(6 * n - 10);
    }
    if index("f").is_some() {
        return Some(5);
    }
    index("l").map(|i| if i <= n { 3 * n - 3 } else { 3 * n - 4 })
}

/// Checks that every generator is homogeneous, returning `(name, degree)`;
/// zero generators are listed with degree `None`. The witness names the
/// first generator with two terms of different degree.
pub fn audit_homogeneity(set: &RelationSet, grading: &Grading) -> std::result::Result<Vec<(String, Option<u64>)>, Witness> {
    let mut out = Vec::new();
    for (name, g) in set.generators() {
        if g.is_zero() {
            out.push((name, None));
            continue;
        }
        match weighted_degree(&g, grading).map_err(|e| Witness::message(&name, e.to_string()))? {
            Homogeneity::Homogeneous(d) => out.push((name, Some(d))),
            Homogeneity::Inhomogeneous { first, second } => {
                return Err(Witness::message(
                    name,
                    format!("term {} has degree {}, term {} has degree {}", first.0, first.1, second.0, second.1),
                ))
            }
        }
    }
    Ok(out)
}

fn degree_note(degrees: &[(String, Option<u64>)]) -> String {
    let parts: Vec<String> = degrees
        .iter()
        .map(|(n, d)| match d {
            Some(d) => format!("{n}:{d}"),
            None => format!("{n}:zero"),
        })
        .collect();
    format!("degrees {}", parts.join(" "))
}

/// Homogeneity of `I_Y` in the ambient grading with the expected degrees.
pub fn check_grading(n: usize) -> Result<CheckReport> {
    let set = ideal_generators(n)?;
    let params = Params::new().with("n", n);
    let degrees = match audit_homogeneity(&set, &set.grading) {
        Ok(d) => d,
        Err(w) => return Ok(CheckReport::fail(GRADING, params, w)),
    };
    let wrong = degrees.iter().find(|(name, d)| *d != expected_degree(n, name));
    let report = match wrong {
        Some((name, d)) => CheckReport::fail(
            GRADING,
            params,
            Witness::message(name, format!("degree {d:?}, expected {:?}", expected_degree(n, name))),
        ),
        None => CheckReport::pass(GRADING, params),
    };
    Ok(report.with_note(degree_note(&degrees)))
}

/// Homogeneity of the specialized generators under the document's grading,
/// or the all-ones grading of the target when it declares none.
pub fn check_spec_grading(name: &str, doc: &SubstitutionDocument) -> Result<CheckReport> {
    let (spec, grading) = doc.build()?;
    let grading = grading.unwrap_or_else(|| Grading::uniform(spec.target(), 1));
    let set = ideal_generators(doc.n)?.specialize(&spec, grading.clone())?;
    let params = Params::new().with("spec", name);
    Ok(match audit_homogeneity(&set, &grading) {
        Ok(d) => CheckReport::pass(GRADING, params).with_note(degree_note(&d)),
        Err(w) => CheckReport::fail(GRADING, params, w),
    })
}
