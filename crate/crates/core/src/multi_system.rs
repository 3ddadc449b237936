//! N ≤ 3 commuting copies of Cl(3,0).
//!
//! System 1 uses the basis letters `e`, system 2 `f`, system 3 `g`. The
//! product is the plain (ungraded) tensor product: blades multiply slot by
//! slot with no sign between slots, so generators of different systems
//! commute. Identifications between systems are not expressible here; see
//! [`crate::identity_model`].

use std::fmt;
use std::ops::{Add, Mul, Neg};

use crate::error::{Error, Result};
use crate::ga::{render_terms, BladeMask, Multivector};
use crate::scalar::Scalar;

pub const MAX_SYSTEMS: usize = 3;
const LETTERS: [char; MAX_SYSTEMS] = ['e', 'f', 'g'];

pub fn system_letter(system: usize) -> Option<char> {
    LETTERS.get(system.checked_sub(1)?).copied()
}

/// Element of the N-system algebra. Cell index packs one 3-bit blade mask per
/// system: system `k` occupies bits `3(k-1)..3k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorMultivector<S: Scalar> {
    systems: usize,
    coeffs: Vec<S>,
}

fn check_count(n: usize) -> Result<()> {
    if (1..=MAX_SYSTEMS).contains(&n) {
        Ok(())
    } else {
        Err(Error::SystemCount(n))
    }
}

fn slot_mask(cell: usize, system: usize) -> u8 {
    ((cell >> (3 * (system - 1))) & 7) as u8
}

impl<S: Scalar> TensorMultivector<S> {
    pub fn zero(systems: usize) -> Result<Self> {
        check_count(systems)?;
        Ok(Self { systems, coeffs: vec![S::zero(); 1 << (3 * systems)] })
    }

    pub fn scalar(systems: usize, value: S) -> Result<Self> {
        let mut t = Self::zero(systems)?;
        t.coeffs[0] = value;
        Ok(t)
    }

    pub fn one(systems: usize) -> Result<Self> {
        Self::scalar(systems, S::one())
    }

    /// Places `m` in slot `system`, identity elsewhere.
    pub fn embed(system: usize, m: &Multivector<S>, systems: usize) -> Result<Self> {
        check_count(systems)?;
        if !(1..=systems).contains(&system) {
            return Err(Error::SystemOutOfRange { index: system, count: systems });
        }
        let mut t = Self::zero(systems)?;
        for (mask, c) in m.coeffs().iter().enumerate() {
            t.coeffs[mask << (3 * (system - 1))] = c.clone();
        }
        Ok(t)
    }

    /// The generator with the given axis in the given system, e.g. `(2, 1)` is `f1`.
    pub fn generator(system: usize, axis: usize, systems: usize) -> Result<Self> {
        Self::embed(system, &Multivector::basis_vector(axis)?, systems)
    }

    /// `sign · generator(system, axis)`.
    pub fn signed_generator(sign: i8, system: usize, axis: usize, systems: usize) -> Result<Self> {
        let g = Self::generator(system, axis, systems)?;
        Ok(if sign < 0 { -g } else { g })
    }

    pub fn systems(&self) -> usize {
        self.systems
    }

    pub fn scalar_part(&self) -> S {
        self.coeffs[0].clone()
    }

    /// Coefficient of the cell whose slot `k` holds `masks[k]`.
    pub fn coeff(&self, masks: &[BladeMask]) -> Result<&S> {
        if masks.len() != self.systems {
            return Err(Error::SystemCountMismatch(masks.len(), self.systems));
        }
        let cell = masks.iter().enumerate().fold(0, |acc, (k, m)| acc | (m.bits() << (3 * k)));
        Ok(&self.coeffs[cell])
    }

    /// `Some(c)` when every non-scalar cell vanishes.
    pub fn as_scalar(&self) -> Option<S> {
        self.coeffs[1..].iter().all(Scalar::is_zero).then(|| self.coeffs[0].clone())
    }

    pub fn equals(&self, other: &Self, tol: f64) -> bool {
        self.systems == other.systems && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.close_to(b, tol))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn product(&self, rhs: &Self) -> Result<Self> {
        if self.systems != rhs.systems {
            return Err(Error::SystemCountMismatch(self.systems, rhs.systems));
        }
        let mut out = Self::zero(self.systems)?;
        let rhs_cells: Vec<(usize, &S)> = rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs_cells {
                let mut sign = 1i8;
                for k in 1..=self.systems {
                    let (s, _) = BladeMask::new(slot_mask(i, k) as usize)
                        .expect("3-bit mask")
                        .product(BladeMask::new(slot_mask(j, k) as usize).expect("3-bit mask"));
                    sign *= s;
                }
                // Slotwise XOR of packed masks is the XOR of the packed index.
                let cell = i ^ j;
                let term = a.clone() * b.clone();
                out.coeffs[cell] =
                    if sign > 0 { out.coeffs[cell].clone() + term } else { out.coeffs[cell].clone() - term };
            }
        }
        Ok(out)
    }

    /// Image in the quotient where each later system's pseudoscalar equals
    /// `handedness · e123`. Pseudoscalars are central, so this identification
    /// keeps cross-system commutation intact. The canonical form has grade at
    /// most 1 in every slot but the first; blades of grade 2 or 3 are split as
    /// `B = ±B′·I` and the `I` is moved into slot 1.
    pub fn identify_trivectors(&self, handedness: i8) -> Self {
        let mut out = Self { systems: self.systems, coeffs: vec![S::zero(); self.coeffs.len()] };
        let pseudo = BladeMask::PSEUDOSCALAR;
        for (cell, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut sign = 1i8;
            let mut first = BladeMask::from_bits(slot_mask(cell, 1));
            let mut target = cell & !7;
            for k in 2..=self.systems {
                let m = BladeMask::from_bits(slot_mask(cell, k));
                if m.grade() < 2 {
                    continue;
                }
                let rest = BladeMask::from_bits(m.bits() as u8 ^ 7);
                let (s_split, _) = rest.product(pseudo);
                let (s_move, moved) = first.product(pseudo);
                sign *= s_split * s_move * handedness.signum();
                first = moved;
                target = (target & !(7 << (3 * (k - 1)))) | (rest.bits() << (3 * (k - 1)));
            }
            target |= first.bits();
            let slot = &mut out.coeffs[target];
            *slot = if sign > 0 { slot.clone() + c.clone() } else { slot.clone() - c.clone() };
        }
        out
    }

    /// Left-to-right product of a word of factors.
    pub fn word<'a, I>(systems: usize, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        factors.into_iter().try_fold(Self::one(systems)?, |acc, f| acc.product(f))
    }
}

impl<S: Scalar> Mul for &TensorMultivector<S> {
    type Output = TensorMultivector<S>;

    /// Panics on mismatched system counts; use [`TensorMultivector::product`]
    /// for a checked product.
    fn mul(self, rhs: Self) -> TensorMultivector<S> {
        self.product(rhs).expect("matching system counts")
    }
}

impl<S: Scalar> Add for &TensorMultivector<S> {
    type Output = TensorMultivector<S>;
    fn add(self, rhs: Self) -> TensorMultivector<S> {
        assert_eq!(self.systems, rhs.systems, "matching system counts");
        TensorMultivector {
            systems: self.systems,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<S: Scalar> Neg for &TensorMultivector<S> {
    type Output = TensorMultivector<S>;
    fn neg(self) -> TensorMultivector<S> {
        TensorMultivector { systems: self.systems, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<S: Scalar> Neg for TensorMultivector<S> {
    type Output = TensorMultivector<S>;
    fn neg(self) -> TensorMultivector<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for TensorMultivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cells: Vec<(usize, Vec<BladeMask>)> = (0..self.coeffs.len())
            .filter(|&c| !self.coeffs[c].is_zero())
            .map(|c| {
                let masks =
                    (1..=self.systems).map(|k| BladeMask::new(slot_mask(c, k) as usize).expect("3-bit mask")).collect();
                (c, masks)
            })
            .collect();
        let order = |m: &BladeMask| BladeMask::DISPLAY_ORDER.iter().position(|x| x == m).unwrap_or(0);
        cells.sort_by_key(|(_, masks)| {
            let total: usize = masks.iter().map(|m| m.grade()).sum();
            (total, masks.iter().map(order).collect::<Vec<_>>())
        });
        let terms: Vec<(S, String)> = cells
            .into_iter()
            .map(|(c, masks)| {
                let names: Vec<String> = masks
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| m.bits() != 0)
                    .map(|(k, m)| m.name_with(LETTERS[k]))
                    .collect();
                let name = if names.is_empty() { "1".to_string() } else { names.join("·") };
                (self.coeffs[c].clone(), name)
            })
            .collect();
        f.write_str(&render_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    type T = TensorMultivector<Rational>;

    fn gen(system: usize, axis: usize, n: usize) -> T {
        T::generator(system, axis, n).unwrap()
    }

    #[test]
    fn embedding() {
        let f1 = T::embed(2, &Multivector::basis_vector(1).unwrap(), 2).unwrap();
        assert_eq!(f1.to_string(), "f1");
        assert_eq!(T::embed(1, &Multivector::one(), 3).unwrap(), T::one(3).unwrap());
        assert_eq!(
            T::embed(3, &Multivector::basis_vector(2).unwrap(), 2),
            Err(Error::SystemOutOfRange { index: 3, count: 2 })
        );
        assert_eq!(T::zero(4), Err(Error::SystemCount(4)));
    }

    #[test]
    fn products() {
        let e1 = gen(1, 1, 2);
        let e2 = gen(1, 2, 2);
        let f1 = gen(2, 1, 2);
        assert_eq!(&e1 * &f1, &f1 * &e1);
        assert_eq!(&e1 * &e2, -(&e2 * &e1));
        assert_eq!((&e1 * &f1).to_string(), "e1·f1");
        let mismatch = gen(1, 1, 3);
        assert_eq!(e1.product(&mismatch), Err(Error::SystemCountMismatch(2, 3)));
    }

    #[test]
    fn trivector_words() {
        let word = |axes_e: [usize; 3], axes_f: [usize; 3]| {
            let fs: Vec<T> = axes_e.iter().map(|&a| gen(1, a, 2)).chain(axes_f.iter().map(|&a| gen(2, a, 2))).collect();
            T::word(2, &fs).unwrap()
        };
        // Without identifications the words stay trivector products.
        assert_eq!(word([1, 2, 3], [2, 1, 3]).to_string(), "−e123·f123");
        assert_eq!(word([1, 2, 3], [2, 1, 3]).identify_trivectors(1).as_scalar(), Some(rat(1)));
        assert_eq!(word([1, 2, 3], [1, 2, 3]).identify_trivectors(1).as_scalar(), Some(rat(-1)));
        assert_eq!(word([1, 2, 3], [1, 2, 3]).identify_trivectors(-1).as_scalar(), Some(rat(1)));
    }

    #[test]
    fn trivector_identification_is_a_homomorphism() {
        let blades: Vec<T> = (0..64)
            .map(|cell| {
                let m1 = Multivector::blade(BladeMask::new(cell & 7).unwrap(), rat(1));
                let m2 = Multivector::blade(BladeMask::new(cell >> 3).unwrap(), rat(1));
                &T::embed(1, &m1, 2).unwrap() * &T::embed(2, &m2, 2).unwrap()
            })
            .collect();
        for h in [1, -1] {
            for a in &blades {
                for b in &blades {
                    let lhs = (a * b).identify_trivectors(h);
                    let rhs = (&a.identify_trivectors(h) * &b.identify_trivectors(h)).identify_trivectors(h);
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let f12 = &gen(2, 1, 2) * &gen(2, 2, 2);
        assert_eq!(f12.identify_trivectors(1).to_string(), "e123·f3");
    }

    #[test]
    fn scalar_parts() {
        assert_eq!(gen(1, 1, 1).scalar_part(), rat(0));
        assert_eq!(T::one(2).unwrap().scalar_part(), rat(1));
        assert_eq!(T::one(2).unwrap().to_string(), "1");
        let mixed = &T::one(2).unwrap() + &(&gen(1, 3, 2) * &gen(2, 2, 2));
        assert_eq!(mixed.to_string(), "1 + e3·f2");
    }
}
