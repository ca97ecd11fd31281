//! Boolean function algebra: truth tables, ANF, cofactors and the three
//! single-variable decompositions (Shannon, positive Davio, negative Davio).

mod anf;
mod text;
mod truth_table;

pub use anf::{Anf, Polarity};
pub use text::{
    format_anf, format_function_file, parse_anf, parse_function_file, FunctionForm,
};
pub use truth_table::{TruthTable, MAX_VARS};

/// Which expansion was applied at a pivot variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompVariant {
    /// `f = (1 + x_i) f0 + x_i f1` with `f0 = f|x_i=0`, `f1 = f|x_i=1`.
    Shannon,
    /// `f = f0 + x_i f2` with `f2` the Boolean derivative.
    PositiveDavio,
    /// `f = f1 + (1 + x_i) f2`.
    NegativeDavio,
}

/// The two sub-functions produced by expanding on one variable. Neither
/// part mentions the pivot.
#[derive(Clone, Debug)]
pub struct DecompositionParts {
    pub variant: DecompVariant,
    pub pivot: u32,
    pub part0: Anf,
    pub part1: Anf,
}

impl DecompositionParts {
    /// Rebuilds the original function from the parts by the variant's
    /// expansion identity.
    pub fn recompose(&self) -> Anf {
        let i = self.pivot;
        match self.variant {
            DecompVariant::Shannon => {
                // f0 + x_i f0 + x_i f1
                self.part0
                    .xor(&self.part0.multiply_by_variable(i))
                    .xor(&self.part1.multiply_by_variable(i))
            }
            DecompVariant::PositiveDavio => self.part0.xor(&self.part1.multiply_by_variable(i)),
            DecompVariant::NegativeDavio => {
                // f1 + f2 + x_i f2
                self.part0
                    .xor(&self.part1)
                    .xor(&self.part1.multiply_by_variable(i))
            }
        }
    }
}

/// Expands `f` on pivot `x_i` with the chosen variant.
pub fn decompose(f: &Anf, i: u32, variant: DecompVariant) -> DecompositionParts {
    let (part0, part1) = match variant {
        DecompVariant::Shannon => (
            f.cofactor(i, Polarity::Zero),
            f.cofactor(i, Polarity::One),
        ),
        DecompVariant::PositiveDavio => (
            f.cofactor(i, Polarity::Zero),
            f.cofactor(i, Polarity::Derivative),
        ),
        DecompVariant::NegativeDavio => (
            f.cofactor(i, Polarity::One),
            f.cofactor(i, Polarity::Derivative),
        ),
    };
    DecompositionParts {
        variant,
        pivot: i,
        part0,
        part1,
    }
}

/// Polynomial division of `f` by `x_i`: returns `(quotient, remainder)`
/// with `f = x_i * quotient + remainder` and neither side mentioning `x_i`.
/// These are exactly the positive-Davio parts.
pub fn divide_by_variable(f: &Anf, i: u32) -> (Anf, Anf) {
    let parts = decompose(f, i, DecompVariant::PositiveDavio);
    (parts.part1, parts.part0)
}
