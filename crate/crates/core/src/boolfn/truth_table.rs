use std::fmt;

use crate::bits;
use crate::{Error, Result};

/// Largest table-form variable count. 2^16 table entries keep every
/// exhaustive operation desk-scale; bounds for larger n are evaluated
/// symbolically in [`crate::bounds`].
pub const MAX_VARS: u32 = 16;

/// A single-output Boolean function on `n` variables stored as a packed
/// vector of `2^n` bits, where bit `a` is `f(a)`.
///
/// Variable `x_i` (1-based) corresponds to bit `i - 1` of the assignment
/// index, so `x1` is the least significant bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    words: Vec<u64>,
}

impl TruthTable {
    /// The constant-0 function on `n` variables.
    ///
    /// # Panics
    /// Panics if `n` is outside `1..=16`.
    pub fn zeros(n: u32) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&n),
            "variable count {n} out of range"
        );
        TruthTable {
            n,
            words: vec![0; bits::words_for(1u64 << n)],
        }
    }

    /// The constant-1 function on `n` variables.
    pub fn ones(n: u32) -> Self {
        let mut t = Self::zeros(n);
        for w in t.words.iter_mut() {
            *w = !0;
        }
        let last = t.words.len() - 1;
        t.words[last] &= bits::tail_mask(1 << n);
        t
    }

    /// Builds a table by evaluating `f` on every assignment index.
    pub fn from_fn(n: u32, f: impl Fn(u32) -> bool) -> Self {
        let mut t = Self::zeros(n);
        for a in 0..1u32 << n {
            t.set(a, f(a));
        }
        t
    }

    /// Builds a table from its packed words; the padding bits above `2^n`
    /// must be zero.
    pub fn from_words(n: u32, words: Vec<u64>) -> Result<Self> {
        if !(1..=MAX_VARS).contains(&n) {
            return Err(Error::VarCount {
                n,
                min: 1,
                max: MAX_VARS,
            });
        }
        let len = 1u64 << n;
        if words.len() != bits::words_for(len) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {} words for n={n}", bits::words_for(len)),
            });
        }
        if *words.last().unwrap() & !bits::tail_mask(len) != 0 {
            return Err(Error::Parse {
                line: 0,
                msg: "table value exceeds 2^n bits".into(),
            });
        }
        Ok(TruthTable { n, words })
    }

    /// Projection of input variable `x_i` (1-based) as a function.
    pub fn variable(n: u32, i: u32) -> Self {
        assert!((1..=n).contains(&i), "variable index {i} out of range");
        Self::from_fn(n, |a| (a >> (i - 1)) & 1 == 1)
    }

    /// A uniformly random table.
    pub fn random(n: u32, rng: &mut impl rand::Rng) -> Self {
        let mut t = Self::zeros(n);
        for w in t.words.iter_mut() {
            *w = rng.random();
        }
        let last = t.words.len() - 1;
        t.words[last] &= bits::tail_mask(1 << n);
        t
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    /// Number of table entries, `2^n`.
    pub fn entry_count(&self) -> u64 {
        1u64 << self.n
    }

    /// `f(a)`.
    pub fn get(&self, a: u32) -> bool {
        debug_assert!((a as u64) < self.entry_count());
        bits::get(&self.words, a as u64)
    }

    pub fn set(&mut self, a: u32, value: bool) {
        debug_assert!((a as u64) < self.entry_count());
        bits::set(&mut self.words, a as u64, value);
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Number of assignments mapped to 1.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// `Some(value)` if the function is constant.
    pub fn constant_value(&self) -> Option<bool> {
        if self.weight() == 0 {
            Some(false)
        } else if self.weight() == self.entry_count() {
            Some(true)
        } else {
            None
        }
    }

    pub fn xor(&self, other: &TruthTable) -> TruthTable {
        assert_eq!(self.n, other.n, "variable counts differ");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        TruthTable { n: self.n, words }
    }

    /// Parses the `tt` payload of a function file: a hex numeral (optional
    /// `0x` prefix) whose bit `a` is `f(a)`.
    pub fn parse_hex(n: u32, text: &str) -> Result<Self> {
        if !(1..=MAX_VARS).contains(&n) {
            return Err(Error::VarCount {
                n,
                min: 1,
                max: MAX_VARS,
            });
        }
        let digits = text.strip_prefix("0x").or(text.strip_prefix("0X")).unwrap_or(text);
        if digits.is_empty() {
            return Err(Error::parse(0, "empty truth-table value"));
        }
        let len = 1u64 << n;
        let mut t = Self::zeros(n);
        // Least significant hex digit last: walk from the right.
        for (pos, c) in digits.chars().rev().enumerate() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| Error::parse(0, format!("invalid hex digit '{c}'")))?
                as u64;
            if v != 0 {
                let bit = pos as u64 * 4;
                if bit + 63 - v.leading_zeros() as u64 >= len {
                    return Err(Error::parse(0, format!("table value exceeds {len} bits")));
                }
                t.words[(bit >> 6) as usize] |= v << (bit & 63);
            }
        }
        Ok(t)
    }

    /// Hex form of the table, zero-padded to `2^n / 4` digits (at least one).
    pub fn to_hex(&self) -> String {
        let digits = ((self.entry_count() + 3) / 4).max(1);
        let mut out = String::with_capacity(digits as usize + 2);
        out.push_str("0x");
        for d in (0..digits).rev() {
            let bit = d * 4;
            let nib = (self.words[(bit >> 6) as usize] >> (bit & 63)) & 0xF;
            out.push(char::from_digit(nib as u32, 16).unwrap());
        }
        out
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.n, self.to_hex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_round_trip() {
        let t = TruthTable::parse_hex(3, "0x51").unwrap();
        assert!(t.get(0) && t.get(4) && t.get(6));
        assert_eq!(t.weight(), 3);
        assert_eq!(t.to_hex(), "0x51");

        let and2 = TruthTable::parse_hex(2, "8").unwrap();
        assert_eq!(and2.to_hex(), "0x8");
        assert!(and2.get(3));
        assert_eq!(and2.weight(), 1);
    }

    #[test]
    fn hex_rejects_oversized_values() {
        assert!(TruthTable::parse_hex(2, "0x1f").is_err());
        assert!(TruthTable::parse_hex(1, "4").is_err());
        // Leading zeros are harmless.
        assert!(TruthTable::parse_hex(2, "0x0f").is_ok());
    }

    #[test]
    fn constants_and_weight() {
        assert_eq!(TruthTable::zeros(4).constant_value(), Some(false));
        assert_eq!(TruthTable::ones(4).constant_value(), Some(true));
        assert_eq!(TruthTable::ones(4).weight(), 16);
        assert_eq!(TruthTable::variable(3, 2).constant_value(), None);
    }

    #[test]
    fn variable_projection_uses_lsb_encoding() {
        let x1 = TruthTable::variable(2, 1);
        assert!(!x1.get(0) && x1.get(1) && !x1.get(2) && x1.get(3));
        let x2 = TruthTable::variable(2, 2);
        assert!(!x2.get(0) && !x2.get(1) && x2.get(2) && x2.get(3));
    }

    #[test]
    fn large_tables_pack_into_words() {
        let t = TruthTable::from_fn(10, |a| a % 3 == 0);
        assert_eq!(t.words().len(), 16);
        assert_eq!(t.weight(), (0..1024).filter(|a| a % 3 == 0).count() as u64);
    }
}
