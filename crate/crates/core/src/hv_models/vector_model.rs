use std::collections::BTreeMap;

use serde::Serialize;

use super::constraints::ConstraintSet;
use super::observable::{ObservableProduct, PauliSymbol, Sign};
use crate::error::{Error, Result};
use crate::multi_system::TensorMultivector;
use crate::scalar::Scalar;

/// Vector values of the elementary symbols: `[σ^s_axis] = ±generator`, where
/// the generator is `e_axis`, `f_axis` or `g_axis` for system 1, 2, 3. One
/// table serves every line, so values cannot depend on context.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VectorAssignment {
    signs: BTreeMap<PauliSymbol, Sign>,
}

impl VectorAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every elementary symbol of `cs` mapped to its positive generator.
    pub fn all_positive(cs: &ConstraintSet) -> Self {
        Self { signs: cs.elementary_symbols().into_iter().map(|s| (s, Sign::Plus)).collect() }
    }

    /// Symbols of `cs` in sorted order; bit `k` of `bits` negates symbol `k`.
    pub fn from_bits(cs: &ConstraintSet, bits: u64) -> Self {
        Self {
            signs: cs
                .elementary_symbols()
                .into_iter()
                .enumerate()
                .map(|(k, s)| (s, Sign::from_bit(bits >> k & 1 == 1)))
                .collect(),
        }
    }

    pub fn set(&mut self, symbol: PauliSymbol, sign: Sign) -> &mut Self {
        self.signs.insert(symbol, sign);
        self
    }

    pub fn get(&self, symbol: PauliSymbol) -> Result<Sign> {
        self.signs.get(&symbol).copied().ok_or_else(|| Error::Unassigned(symbol.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (PauliSymbol, Sign)> + '_ {
        self.signs.iter().map(|(k, v)| (*k, *v))
    }

    /// Value of a product observable by the product assumption: the factor
    /// values multiplied in written (ascending-system) order.
    pub fn value_of<S: Scalar>(&self, obs: &ObservableProduct, systems: usize) -> Result<TensorMultivector<S>> {
        let mut acc = TensorMultivector::one(systems)?;
        for &factor in obs.factors() {
            let sign = self.get(factor)?;
            let g = TensorMultivector::signed_generator(sign.value(), factor.system(), factor.axis().index(), systems)?;
            acc = acc.product(&g)?;
        }
        Ok(acc)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineValue<S: Scalar> {
    pub label: String,
    /// The line's word multiplied in the commuting algebra.
    pub product: TensorMultivector<S>,
    /// `product` with the systems' trivectors identified (`e123 = f123 = g123`).
    pub value: TensorMultivector<S>,
    pub required: Sign,
    /// Whether `value` equals the required scalar.
    pub holds: bool,
    /// Negated generators that occur an odd number of times in the line's
    /// word. Words with an odd count fall outside the even-flip side
    /// condition attached to the trivector identities.
    pub odd_flips: usize,
}

impl<S: Scalar> LineValue<S> {
    pub fn in_model(&self) -> bool {
        self.odd_flips.is_multiple_of(2)
    }
}

/// Expands each line's observables into generator words, substitutes the
/// values from `va` and multiplies in the commuting N-system algebra. Lines
/// such as `[x1y2][y1x2][z1z2]` multiply to a product of trivectors, so the
/// value is read modulo the identification of the systems' right-handed
/// trivectors; lines without such a product are unaffected.
pub fn evaluate_vector_model<S: Scalar>(cs: &ConstraintSet, va: &VectorAssignment) -> Result<Vec<LineValue<S>>> {
    if cs.name == "bell_ghz" {
        // Single-particle terms give vector-valued lines; that system is
        // handled by identifying bases in a single copy instead.
        return Err(Error::Unsupported(cs.name.clone()));
    }
    let systems = cs.system_count();
    cs.lines
        .iter()
        .map(|line| {
            let mut value = TensorMultivector::one(systems)?;
            let mut occurrences: BTreeMap<PauliSymbol, usize> = BTreeMap::new();
            for term in &line.terms {
                value = value.product(&va.value_of(term, systems)?)?;
                for &f in term.factors() {
                    *occurrences.entry(f).or_default() += 1;
                }
            }
            let odd_flips = occurrences
                .iter()
                .filter(|(s, n)| *n % 2 == 1 && va.get(**s).map(|v| v == Sign::Minus).unwrap_or(false))
                .count();
            let target = TensorMultivector::scalar(systems, S::from_i64(line.required.value().into()))?;
            let product = value;
            let value = product.identify_trivectors(1);
            Ok(LineValue {
                label: line.label.clone(),
                holds: value.equals(&target, crate::scalar::DEFAULT_TOLERANCE),
                product,
                value,
                required: line.required,
                odd_flips,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub line: String,
    pub position: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub observable: String,
    pub occurrences: Vec<Occurrence>,
    /// The single value shared by every occurrence, if they agree.
    pub value: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonContextualityAudit {
    pub entries: Vec<AuditEntry>,
    pub single_valued: bool,
}

/// Evaluates each occurrence of each observable separately and checks that
/// all occurrences carry the same value.
pub fn non_contextuality_audit(cs: &ConstraintSet, va: &VectorAssignment) -> Result<NonContextualityAudit> {
    let systems = cs.system_count();
    let mut entries = Vec::with_capacity(cs.observables.len());
    for obs in &cs.observables {
        let mut occurrences = Vec::new();
        let mut values: Vec<TensorMultivector<crate::scalar::Rational>> = Vec::new();
        for (li, line) in cs.lines.iter().enumerate() {
            for (pos, term) in line.terms.iter().enumerate() {
                if term == obs {
                    let v = va.value_of(term, systems)?;
                    let label = if line.label.is_empty() { li.to_string() } else { line.label.clone() };
                    occurrences.push(Occurrence { line: label, position: pos, value: v.to_string() });
                    values.push(v);
                }
            }
        }
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        entries.push(AuditEntry {
            observable: obs.to_string(),
            value: agree.then(|| values.first().map(ToString::to_string)).flatten(),
            occurrences,
        });
    }
    let single_valued = entries.iter().all(|e| e.value.is_some());
    Ok(NonContextualityAudit { entries, single_valued })
}
