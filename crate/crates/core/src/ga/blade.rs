use std::fmt;

use crate::error::{Error, Result};

/// A basis blade of Cl(3,0), encoded as a bitmask: bit `i` set iff `e_{i+1}`
/// is a factor. Factors are always kept in ascending axis order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BladeMask(u8);

impl BladeMask {
    pub const SCALAR: BladeMask = BladeMask(0);
    pub const PSEUDOSCALAR: BladeMask = BladeMask(7);

    /// All eight blades in display order: by grade, then lexicographically.
    pub const DISPLAY_ORDER: [BladeMask; 8] = [
        BladeMask(0),
        BladeMask(1),
        BladeMask(2),
        BladeMask(4),
        BladeMask(3),
        BladeMask(5),
        BladeMask(6),
        BladeMask(7),
    ];

    pub fn new(mask: usize) -> Result<Self> {
        if mask > 7 {
            return Err(Error::BladeOutOfRange(mask));
        }
        Ok(BladeMask(mask as u8))
    }

    /// The blade `e_axis` for axis 1..=3.
    pub fn vector(axis: usize) -> Result<Self> {
        if !(1..=3).contains(&axis) {
            return Err(Error::AxisOutOfRange(axis));
        }
        Ok(BladeMask(1 << (axis - 1)))
    }

    pub(crate) const fn from_bits(bits: u8) -> Self {
        BladeMask(bits & 7)
    }

    pub fn bits(self) -> usize {
        self.0 as usize
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Ascending list of axes (1-based) making up the blade.
    pub fn axes(self) -> impl Iterator<Item = usize> {
        (0..3).filter(move |i| self.0 & (1 << i) != 0).map(|i| i + 1)
    }

    /// `blade(self) * blade(other) = sign * blade(self ^ other)`.
    pub fn product(self, other: BladeMask) -> (i8, BladeMask) {
        (reorder_sign(self.0, other.0), BladeMask(self.0 ^ other.0))
    }

    /// Name with an arbitrary basis letter, e.g. `f12`. The scalar blade is `1`.
    pub fn name_with(self, letter: char) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut s = String::with_capacity(4);
        s.push(letter);
        for axis in self.axes() {
            s.push(char::from(b'0' + axis as u8));
        }
        s
    }
}

impl fmt::Display for BladeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name_with('e'))
    }
}

/// Sign of moving the factors of `b` past those of `a` into ascending order.
/// Each factor of `a` must pass every lower-indexed factor of `b`; the metric
/// is Euclidean so repeated factors contribute `+1`.
pub(crate) fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force reference: sort the concatenated factor list with adjacent
    /// swaps, cancelling equal neighbours.
    fn bubble_sign(a: u8, b: u8) -> i8 {
        let mut factors: Vec<u8> = (0..3).filter(|i| a & (1 << i) != 0).collect();
        factors.extend((0..3).filter(|i| b & (1 << i) != 0));
        let mut sign = 1i8;
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < factors.len() {
                if factors[i] > factors[i + 1] {
                    factors.swap(i, i + 1);
                    sign = -sign;
                    changed = true;
                } else if factors[i] == factors[i + 1] {
                    factors.drain(i..i + 2);
                    changed = true;
                    continue;
                }
                i += 1;
            }
            if !changed {
                return sign;
            }
        }
    }

    #[test]
    fn sign_matches_bubble_sort() {
        for a in 0..8u8 {
            for b in 0..8u8 {
                assert_eq!(reorder_sign(a, b), bubble_sign(a, b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn names_and_grades() {
        assert_eq!(BladeMask::new(0).unwrap().to_string(), "1");
        assert_eq!(BladeMask::new(5).unwrap().to_string(), "e13");
        assert_eq!(BladeMask::PSEUDOSCALAR.to_string(), "e123");
        assert_eq!(BladeMask::new(6).unwrap().grade(), 2);
        assert_eq!(BladeMask::new(3).unwrap().name_with('g'), "g12");
        assert!(BladeMask::new(8).is_err());
        assert!(BladeMask::vector(0).is_err());
    }
}
