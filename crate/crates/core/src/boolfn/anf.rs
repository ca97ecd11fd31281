use std::fmt;

use super::truth_table::TruthTable;
use crate::bits;

/// Cofactor selector: substitute 0, substitute 1, or take the Boolean
/// derivative (the XOR of the two substitutions).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    Zero,
    One,
    Derivative,
}

/// Algebraic normal form: the XOR of a set of AND-monomials.
///
/// Each monomial is an n-bit mask where bit `i - 1` set means `x_i` appears
/// in the conjunction; the empty mask is the constant term 1. Duplicate
/// masks cancel under XOR, so the set representation is canonical: two
/// functions are equal iff their monomial sets are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Anf {
    n: u32,
    /// Strictly increasing monomial masks, every mask `< 2^n`.
    monomials: Vec<u32>,
}

impl Anf {
    /// The constant-0 function (empty monomial set).
    pub fn zero(n: u32) -> Self {
        assert!((1..=super::truth_table::MAX_VARS).contains(&n));
        Anf {
            n,
            monomials: Vec::new(),
        }
    }

    /// The constant-1 function.
    pub fn one(n: u32) -> Self {
        let mut a = Self::zero(n);
        a.monomials.push(0);
        a
    }

    /// The single variable `x_i` (1-based).
    pub fn variable(n: u32, i: u32) -> Self {
        assert!((1..=n).contains(&i));
        let mut a = Self::zero(n);
        a.monomials.push(1 << (i - 1));
        a
    }

    /// Builds an ANF from monomial masks with XOR semantics: a mask present
    /// an even number of times cancels out.
    pub fn from_monomials(n: u32, masks: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = masks.into_iter().collect();
        assert!(v.iter().all(|&m| (m as u64) < 1u64 << n), "mask exceeds 2^n");
        v.sort_unstable();
        let mut out = Vec::with_capacity(v.len());
        let mut i = 0;
        while i < v.len() {
            let mut run = 1;
            while i + run < v.len() && v[i + run] == v[i] {
                run += 1;
            }
            if run % 2 == 1 {
                out.push(v[i]);
            }
            i += run;
        }
        Anf {
            n,
            monomials: out,
        }
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    /// Monomial masks in increasing order.
    pub fn monomials(&self) -> &[u32] {
        &self.monomials
    }

    pub fn term_count(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// `Some(value)` if the function is a constant.
    pub fn constant_value(&self) -> Option<bool> {
        match self.monomials.as_slice() {
            [] => Some(false),
            [0] => Some(true),
            _ => None,
        }
    }

    pub fn has_constant_term(&self) -> bool {
        self.monomials.first() == Some(&0)
    }

    /// True if `x_i` appears in some monomial.
    pub fn mentions(&self, i: u32) -> bool {
        let bit = 1u32 << (i - 1);
        self.monomials.iter().any(|m| m & bit != 0)
    }

    /// Union of all monomial masks: the set of variables the form mentions.
    pub fn support_mask(&self) -> u32 {
        self.monomials.iter().fold(0, |acc, m| acc | m)
    }

    /// Evaluates the form at an assignment index (bit `i-1` = value of `x_i`).
    pub fn evaluate(&self, assignment: u32) -> bool {
        debug_assert!((assignment as u64) < 1u64 << self.n);
        self.monomials
            .iter()
            .filter(|&&m| m & assignment == m)
            .count()
            % 2
            == 1
    }

    /// Largest monomial size; 0 for constants (including the zero function).
    pub fn degree(&self) -> u32 {
        self.monomials
            .iter()
            .map(|m| m.count_ones())
            .max()
            .unwrap_or(0)
    }

    /// XOR (GF(2) sum) of two forms on the same variable set.
    pub fn xor(&self, other: &Anf) -> Anf {
        assert_eq!(self.n, other.n, "variable counts differ");
        let mut out = Vec::with_capacity(self.monomials.len() + other.monomials.len());
        let (mut i, mut j) = (0, 0);
        while i < self.monomials.len() && j < other.monomials.len() {
            match self.monomials[i].cmp(&other.monomials[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.monomials[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.monomials[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.monomials[i..]);
        out.extend_from_slice(&other.monomials[j..]);
        Anf {
            n: self.n,
            monomials: out,
        }
    }

    /// Multiplies by `x_i`. The form must not already mention `x_i`
    /// (multiplication by an idempotent variable would otherwise merge
    /// monomials).
    pub fn multiply_by_variable(&self, i: u32) -> Anf {
        assert!((1..=self.n).contains(&i));
        debug_assert!(!self.mentions(i), "form already mentions x{i}");
        let bit = 1u32 << (i - 1);
        Anf {
            n: self.n,
            monomials: self.monomials.iter().map(|m| m | bit).collect(),
        }
    }

    /// Cofactor with respect to `x_i`.
    ///
    /// The result stays in the same variable index space with `x_i` absent
    /// from every monomial, which keeps recomposition and circuit line
    /// mapping trivial.
    pub fn cofactor(&self, i: u32, polarity: Polarity) -> Anf {
        assert!((1..=self.n).contains(&i), "variable index {i} out of range");
        let bit = 1u32 << (i - 1);
        let without: Vec<u32> = self
            .monomials
            .iter()
            .copied()
            .filter(|m| m & bit == 0)
            .collect();
        // Monomials containing x_i stay distinct (and sorted) once the bit
        // is cleared, so this is already a valid monomial set.
        let derivative = || -> Vec<u32> {
            self.monomials
                .iter()
                .filter(|&&m| m & bit != 0)
                .map(|m| m & !bit)
                .collect()
        };
        let monomials = match polarity {
            Polarity::Zero => without,
            Polarity::Derivative => derivative(),
            Polarity::One => {
                let sub0 = Anf {
                    n: self.n,
                    monomials: without,
                };
                let der = Anf {
                    n: self.n,
                    monomials: derivative(),
                };
                return sub0.xor(&der);
            }
        };
        Anf {
            n: self.n,
            monomials,
        }
    }

    /// Converts a truth table to its ANF (positive-polarity Reed-Muller
    /// coefficients) via the packed Mobius transform.
    pub fn from_table(tt: &TruthTable) -> Anf {
        let n = tt.var_count();
        let mut words = tt.words().to_vec();
        bits::mobius_in_place(&mut words, n);
        let mut monomials = Vec::new();
        for (wi, &w) in words.iter().enumerate() {
            let mut rest = w;
            while rest != 0 {
                let b = rest.trailing_zeros();
                monomials.push((wi as u32) * 64 + b);
                rest &= rest - 1;
            }
        }
        Anf { n, monomials }
    }

    /// Converts the ANF back to a truth table (the transform is an
    /// involution, so this is the same butterfly).
    pub fn to_table(&self) -> TruthTable {
        let mut words = vec![0u64; bits::words_for(1u64 << self.n)];
        for &m in &self.monomials {
            bits::set(&mut words, m as u64, true);
        }
        bits::mobius_in_place(&mut words, self.n);
        TruthTable::from_words(self.n, words).expect("mask invariant guarantees valid words")
    }
}

impl fmt::Debug for Anf {
    // Debug shows the expression form, which is what you want in test
    // failures.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Anf(n={}, {})", self.n, self)
    }
}

impl fmt::Display for Anf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_anf(self))
    }
}
