use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::observable::{ObservableProduct, PauliSymbol, Sign};
use crate::error::{Error, Result};

/// One value constraint: the product of the terms' values must equal `required`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintLine {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub label: String,
    pub terms: Vec<ObservableProduct>,
    pub required: Sign,
}

impl ConstraintLine {
    fn parse(label: &str, terms: &[&str], required: Sign) -> Self {
        Self {
            label: label.to_string(),
            terms: terms.iter().map(|t| t.parse().expect("builtin observable")).collect(),
            required,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintSet {
    pub name: String,
    pub lines: Vec<ConstraintLine>,
    /// Every distinct observable, in order of first appearance.
    pub observables: Vec<ObservableProduct>,
}

#[derive(Deserialize)]
struct ConstraintSetDoc {
    name: String,
    lines: Vec<ConstraintLine>,
}

impl<'de> Deserialize<'de> for ConstraintSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = ConstraintSetDoc::deserialize(deserializer)?;
        Ok(ConstraintSet::new(doc.name, doc.lines))
    }
}

pub const BUILTIN_NAMES: [&str; 3] = ["pm", "ghz", "bell_ghz"];

impl ConstraintSet {
    pub fn new(name: impl Into<String>, lines: Vec<ConstraintLine>) -> Self {
        let mut observables: Vec<ObservableProduct> = Vec::new();
        for term in lines.iter().flat_map(|l| &l.terms) {
            if !observables.contains(term) {
                observables.push(term.clone());
            }
        }
        Self { name: name.into(), lines, observables }
    }

    /// Number of systems referenced by the set.
    pub fn system_count(&self) -> usize {
        self.observables.iter().map(ObservableProduct::max_system).max().unwrap_or(0)
    }

    /// Every single-system symbol occurring in any factor, sorted.
    pub fn elementary_symbols(&self) -> Vec<PauliSymbol> {
        let set: BTreeSet<PauliSymbol> = self.observables.iter().flat_map(|o| o.factors().iter().copied()).collect();
        set.into_iter().collect()
    }

    pub fn observable_index(&self, obs: &ObservableProduct) -> Option<usize> {
        self.observables.iter().position(|o| o == obs)
    }

    /// Copy with line `index` removed.
    pub fn without_line(&self, index: usize) -> Self {
        let mut lines = self.lines.clone();
        lines.remove(index);
        Self::new(self.name.clone(), lines)
    }

    /// Copy with the required sign of line `index` negated.
    pub fn with_flipped_line(&self, index: usize) -> Self {
        let mut lines = self.lines.clone();
        lines[index].required = lines[index].required.flip();
        Self::new(self.name.clone(), lines)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("constraint sets serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("constraint set JSON: {e}")))
    }
}

/// The Peres-Mermin square, the GHZ system, or Mermin's Bell-GHZ relations.
pub fn builtin_constraints(name: &str) -> Result<ConstraintSet> {
    use Sign::{Minus, Plus};
    let lines = match name {
        "pm" => vec![
            ConstraintLine::parse("a", &["x1*x2", "x1", "x2"], Plus),
            ConstraintLine::parse("b", &["y1*y2", "y1", "y2"], Plus),
            ConstraintLine::parse("c", &["x1*y2", "x1", "y2"], Plus),
            ConstraintLine::parse("d", &["y1*x2", "y1", "x2"], Plus),
            ConstraintLine::parse("e", &["x1*y2", "y1*x2", "z1*z2"], Plus),
            ConstraintLine::parse("f", &["x1*x2", "y1*y2", "z1*z2"], Minus),
        ],
        "ghz" => vec![
            ConstraintLine::parse("a", &["x1*y2*y3", "x1", "y2", "y3"], Plus),
            ConstraintLine::parse("b", &["y1*x2*y3", "y1", "x2", "y3"], Plus),
            ConstraintLine::parse("c", &["y1*y2*x3", "y1", "y2", "x3"], Plus),
            ConstraintLine::parse("d", &["x1*x2*x3", "x1", "x2", "x3"], Plus),
            ConstraintLine::parse("e", &["x1*x2*x3", "x1*y2*y3", "y1*x2*y3", "y1*y2*x3"], Minus),
        ],
        "bell_ghz" | "bell-ghz" => vec![
            ConstraintLine::parse("a", &["x1", "y2", "y3"], Plus),
            ConstraintLine::parse("b", &["y1", "x2", "y3"], Plus),
            ConstraintLine::parse("c", &["y1", "y2", "x3"], Plus),
            ConstraintLine::parse("d", &["x1", "x2", "x3"], Minus),
        ],
        other => return Err(Error::UnknownConstraintSet(other.to_string())),
    };
    let canonical = if name == "bell-ghz" { "bell_ghz" } else { name };
    Ok(ConstraintSet::new(canonical, lines))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let pm = builtin_constraints("pm").unwrap();
        assert_eq!(pm.lines.len(), 6);
        assert_eq!(pm.observables.len(), 9);
        assert_eq!(pm.lines[5].required, Sign::Minus);
        assert_eq!(pm.system_count(), 2);

        let ghz = builtin_constraints("ghz").unwrap();
        assert_eq!(ghz.lines.len(), 5);
        assert_eq!(ghz.observables.len(), 10);
        assert_eq!(ghz.lines.last().unwrap().required, Sign::Minus);

        let bg = builtin_constraints("bell_ghz").unwrap();
        assert_eq!(bg.lines.len(), 4);
        assert_eq!(bg.observables.len(), 6);
        assert!(bg.observables.iter().all(ObservableProduct::is_elementary));
        assert_eq!(bg.lines.last().unwrap().required, Sign::Minus);

        assert_eq!(builtin_constraints("ks117"), Err(Error::UnknownConstraintSet("ks117".into())));
    }

    #[test]
    fn json_round_trip() {
        let pm = builtin_constraints("pm").unwrap();
        let json = pm.to_json();
        assert!(json.contains("\"x1*y2\""));
        assert!(json.contains("\"required\": -1"));
        assert_eq!(ConstraintSet::from_json(&json).unwrap(), pm);
        let minimal = r#"{"name":"toy","lines":[{"terms":["x1","x2"],"required":-1}]}"#;
        let toy = ConstraintSet::from_json(minimal).unwrap();
        assert_eq!(toy.observables.len(), 2);
        assert!(ConstraintSet::from_json(r#"{"name":"bad","lines":[{"terms":["q1"],"required":1}]}"#).is_err());
    }
}
