use std::collections::BTreeMap;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::grading::Grading;
use super::monomial::Monomial;
use super::parse::parse_polynomial;
use super::poly::{Coeff, Polynomial};
use super::table::{make_ambient_ring, VariableTable};
use crate::error::{Error, Result};

/// A ring map from a source table to a target table.
///
/// Variables without an explicit image are carried through by name when the
/// target has a variable of the same name; otherwise they are unbound, and
/// substituting into a polynomial that uses them fails.
#[derive(Clone, Debug)]
pub struct SubstitutionSpec {
    source: Arc<VariableTable>,
    target: Arc<VariableTable>,
    images: Vec<Option<Polynomial>>,
}

impl SubstitutionSpec {
    pub fn new(
        source: &Arc<VariableTable>,
        target: &Arc<VariableTable>,
        assign: impl IntoIterator<Item = (usize, Polynomial)>,
    ) -> Result<Self> {
        let mut images: Vec<Option<Polynomial>> = source
            .names()
            .iter()
            .map(|name| target.position(name).map(|j| Polynomial::var(target, j)))
            .collect();
        for (idx, image) in assign {
            if idx >= source.len() {
                return Err(Error::Shape(format!("source variable index {idx} out of range")));
            }
            images[idx] = Some(image.with_table(target)?);
        }
        Ok(Self { source: source.clone(), target: target.clone(), images })
    }

    /// Same-table substitution from `(name, image)` pairs.
    pub fn from_named(
        source: &Arc<VariableTable>,
        target: &Arc<VariableTable>,
        assign: impl IntoIterator<Item = (String, Polynomial)>,
    ) -> Result<Self> {
        let assign = assign
            .into_iter()
            .map(|(name, p)| source.position(&name).map(|i| (i, p)).ok_or(Error::UnknownVariable(name)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, assign)
    }

    pub fn identity(table: &Arc<VariableTable>) -> Self {
        Self::new(table, table, []).expect("identity substitution")
    }

    pub fn source(&self) -> &Arc<VariableTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VariableTable> {
        &self.target
    }

    pub fn image(&self, idx: usize) -> Option<&Polynomial> {
        self.images[idx].as_ref()
    }
}

/// Applies a ring map term by term, caching powers of variable images.
pub fn substitute(p: &Polynomial, spec: &SubstitutionSpec) -> Result<Polynomial> {
    if **p.table() != *spec.source {
        return Err(Error::IncompatibleRing);
    }
    for idx in p.variables() {
        if spec.images[idx].is_none() {
            return Err(Error::UnboundVariable(spec.source.name(idx).to_string()));
        }
    }
    let target = &spec.target;
    let mut powers: FxHashMap<(usize, u16), Polynomial> = FxHashMap::default();
    let mut acc: FxHashMap<Monomial, Coeff> = FxHashMap::default();
    for (m, c) in p.terms() {
        let mut image = Polynomial::constant(target, c.clone());
        for (idx, e) in m.support() {
            let factor = powers
                .entry((idx, e))
                .or_insert_with(|| spec.images[idx].as_ref().expect("checked above").pow(u32::from(e)));
            image = image.mul_ref(factor);
            if image.is_zero() {
                break;
            }
        }
        for (tm, tc) in image.terms() {
            match acc.get_mut(tm) {
                Some(slot) => *slot += tc,
                None => {
                    acc.insert(tm.clone(), tc.clone());
                }
            }
        }
    }
    Ok(Polynomial::from_terms(target, acc))
}

/// JSON form of a substitution: `{"n": 3, "assign": {"x2": "0", ...}}`.
///
/// `target` lists the variables of the target ring (default: the ambient
/// ring of `n`), `degrees` declares a grading of the target used for
/// homogeneity audits, and `label` is a free-form provenance string.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SubstitutionDocument {
    pub n: usize,
    #[serde(default)]
    pub assign: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<BTreeMap<String, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl SubstitutionDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))
    }

    /// Resolves names and parses every image in the target table. Without
    /// declared degrees, an omitted target keeps the ambient grading.
    pub fn build(&self) -> Result<(SubstitutionSpec, Option<Grading>)> {
        let source = make_ambient_ring(self.n)?;
        let target = match &self.target {
            None => source.clone(),
            Some(names) => Arc::new(VariableTable::new(names.iter().cloned())?),
        };
        let mut assign = Vec::with_capacity(self.assign.len());
        for (name, text) in &self.assign {
            let idx = source.position(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            assign.push((idx, parse_polynomial(&target, text)?));
        }
        let spec = SubstitutionSpec::new(&source, &target, assign)?;
        let grading = match (&self.degrees, &self.target) {
            (Some(d), _) => Some(Grading::from_named(&target, d)?),
            (None, None) => Some(Grading::ambient(&target)?),
            (None, Some(_)) => None,
        };
        Ok((spec, grading))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_leaves_polynomial_unchanged() {
        let t = make_ambient_ring(3).unwrap();
        let p = parse_polynomial(&t, "x1*A1p12*y2 - 3/4*z*B2p33^2 + s0").unwrap();
        assert_eq!(substitute(&p, &SubstitutionSpec::identity(&t)).unwrap(), p);
    }

    #[test]
    fn unbound_variable_is_reported() {
        let src = make_ambient_ring(2).unwrap();
        let target = Arc::new(VariableTable::new(["x1", "s0"]).unwrap());
        let spec = SubstitutionSpec::from_named(&src, &target, []).unwrap();
        let ok = parse_polynomial(&src, "x1*s0").unwrap();
        assert_eq!(substitute(&ok, &spec).unwrap().to_string(), "x1*s0");
        let bad = parse_polynomial(&src, "x1*y2").unwrap();
        assert_eq!(substitute(&bad, &spec), Err(Error::UnboundVariable("y2".into())));
    }

    #[test]
    fn simultaneous_swap() {
        let t = make_ambient_ring(2).unwrap();
        let spec = SubstitutionSpec::from_named(
            &t,
            &t,
            [
                ("x1".to_string(), parse_polynomial(&t, "x2").unwrap()),
                ("x2".to_string(), parse_polynomial(&t, "x1").unwrap()),
            ],
        )
        .unwrap();
        let p = parse_polynomial(&t, "x1^2 - 2*x2").unwrap();
        assert_eq!(substitute(&p, &spec).unwrap(), parse_polynomial(&t, "x2^2 - 2*x1").unwrap());
    }

    #[test]
    fn document_round_trip_and_errors() {
        let doc = SubstitutionDocument::from_json(r#"{"n": 2, "assign": {"z": "5", "x2": "0"}}"#).unwrap();
        let (spec, grading) = doc.build().unwrap();
        assert!(grading.is_some());
        let t = spec.source().clone();
        let p = parse_polynomial(&t, "z*x1 + x2*y2").unwrap();
        assert_eq!(substitute(&p, &spec).unwrap().to_string(), "5*x1");

        let bad = SubstitutionDocument::from_json(r#"{"n": 2, "assign": {"w": "1"}}"#).unwrap();
        assert!(matches!(bad.build(), Err(Error::UnknownVariable(_))));
        assert!(SubstitutionDocument::from_json(r#"{"n": 2, "oops": 1}"#).is_err());
    }
}
