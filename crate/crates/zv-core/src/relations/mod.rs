//! The relation suite: every identity among finite multiple zeta values that
//! this crate checks, instantiated as formal linear combinations with exact
//! rational coefficients and evaluated against per-prime tables.

mod enumerate;
mod evaluate;
mod generate;
mod oracles;

pub use enumerate::{enumerate_params, ParamBounds};
pub use evaluate::{evaluate, evaluate_residues, PrimeTables};
pub use generate::{generate, sum_formula_coefficient};
pub use oracles::{
    explore_even, restricted_sum_direct, restricted_sum_from_table, verify_binomial_lemma,
    BinomialLemmaCheck, EvenSample, EvenScan,
};

use std::fmt;

use crate::index::Index;
use crate::modfield::Rational;

/// The relation families the suite knows how to instantiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    /// Sum over all permutations of an index vanishes (both variants).
    SymSum,
    /// A repeated index `{k}^r` vanishes (both variants).
    RepZero,
    /// Star value of the Hoffman dual is the negated star value.
    Duality,
    /// `(-1)^r z(k)` equals the sum of z over all refinements of k.
    PhiDual,
    /// The sum formula: fixed weight/depth, one component at least 2.
    SumFormula,
    /// `z({1}^a, 2, {1}^b)` as an explicit multiple of `Z(a+b+2)`.
    Hook,
    /// `z({1}^a, 2, {1}^c, 2, {1}^b)` as an explicit multiple of `Z`.
    DoubleHook,
    /// Reversing an index rescales by `(-1)^weight` (both variants).
    Reversal,
    /// The alternating star/non-star convolution over prefix splits is 0.
    Antipode,
    /// Ohno-type shifted sums agree with dual-transformed shifted sums.
    Oyama,
    /// The restricted sum equals a sum of duals over weak 3-compositions.
    RestrictedOhno,
    /// The restricted sum formula `S = (N/2) Z(k)`.
    Main,
    /// `S = (-1)^r S*` for the restricted sums.
    MainStar,
}

impl RelationKind {
    /// Every kind, in the canonical report order.
    pub const ALL: [RelationKind; 13] = [
        RelationKind::SymSum,
        RelationKind::RepZero,
        RelationKind::Duality,
        RelationKind::PhiDual,
        RelationKind::SumFormula,
        RelationKind::Hook,
        RelationKind::DoubleHook,
        RelationKind::Reversal,
        RelationKind::Antipode,
        RelationKind::Oyama,
        RelationKind::RestrictedOhno,
        RelationKind::Main,
        RelationKind::MainStar,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RelationKind::SymSum => "SYM_SUM",
            RelationKind::RepZero => "REP_ZERO",
            RelationKind::Duality => "DUALITY",
            RelationKind::PhiDual => "PHI_DUAL",
            RelationKind::SumFormula => "SUM_FORMULA",
            RelationKind::Hook => "HOOK",
            RelationKind::DoubleHook => "DOUBLE_HOOK",
            RelationKind::Reversal => "REVERSAL",
            RelationKind::Antipode => "ANTIPODE",
            RelationKind::Oyama => "OYAMA",
            RelationKind::RestrictedOhno => "RESTRICTED_OHNO",
            RelationKind::Main => "MAIN",
            RelationKind::MainStar => "MAIN_STAR",
        }
    }

    /// Case-insensitive parse; `-` and `_` are interchangeable.
    pub fn parse(s: &str) -> Option<RelationKind> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        RelationKind::ALL.into_iter().find(|k| k.name() == norm)
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which closed form the sum-formula coefficient uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumFormulaForm {
    /// `(-1)^(i-1) (C(k-1, i-1) + (-1)^r C(k-1, r-i))`.
    Binomial,
    /// `[k-1; i-1] - [k-1; r-i]` in signed binomials.
    Signed,
}

impl fmt::Display for SumFormulaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumFormulaForm::Binomial => "binomial",
            SumFormulaForm::Signed => "signed",
        })
    }
}

/// Fully instantiated parameters for one relation. Positions `i`, `j` are
/// 1-based; `k` is a weight and `r` a depth throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationParams {
    SymSum {
        index: Index,
        star: bool,
    },
    RepZero {
        part: u32,
        reps: u32,
        star: bool,
    },
    Duality {
        index: Index,
    },
    PhiDual {
        index: Index,
    },
    SumFormula {
        k: u32,
        r: u32,
        i: u32,
        form: SumFormulaForm,
        star: bool,
    },
    Hook {
        a: u32,
        b: u32,
    },
    DoubleHook {
        a: u32,
        b: u32,
        c: i32,
    },
    Reversal {
        index: Index,
        star: bool,
    },
    Antipode {
        index: Index,
    },
    Oyama {
        index: Index,
        shift: u32,
    },
    RestrictedOhno {
        k: u32,
        r: u32,
        i: u32,
        j: u32,
    },
    Main {
        k: u32,
        r: u32,
        i: u32,
        j: u32,
    },
    MainStar {
        k: u32,
        r: u32,
        i: u32,
        j: u32,
    },
}

impl RelationParams {
    pub fn kind(&self) -> RelationKind {
        match self {
            RelationParams::SymSum { .. } => RelationKind::SymSum,
            RelationParams::RepZero { .. } => RelationKind::RepZero,
            RelationParams::Duality { .. } => RelationKind::Duality,
            RelationParams::PhiDual { .. } => RelationKind::PhiDual,
            RelationParams::SumFormula { .. } => RelationKind::SumFormula,
            RelationParams::Hook { .. } => RelationKind::Hook,
            RelationParams::DoubleHook { .. } => RelationKind::DoubleHook,
            RelationParams::Reversal { .. } => RelationKind::Reversal,
            RelationParams::Antipode { .. } => RelationKind::Antipode,
            RelationParams::Oyama { .. } => RelationKind::Oyama,
            RelationParams::RestrictedOhno { .. } => RelationKind::RestrictedOhno,
            RelationParams::Main { .. } => RelationKind::Main,
            RelationParams::MainStar { .. } => RelationKind::MainStar,
        }
    }

    /// Canonical parameter string used in reports: `name=value` pairs joined
    /// by `;`, in a fixed field order per kind.
    pub fn label(&self) -> String {
        match self {
            RelationParams::SymSum { index, star } => format!("index={index};star={star}"),
            RelationParams::RepZero { part, reps, star } => {
                format!("k={part};r={reps};star={star}")
            }
            RelationParams::Duality { index } => format!("index={index}"),
            RelationParams::PhiDual { index } => format!("index={index}"),
            RelationParams::SumFormula {
                k,
                r,
                i,
                form,
                star,
            } => {
                format!("k={k};r={r};i={i};form={form};star={star}")
            }
            RelationParams::Hook { a, b } => format!("a={a};b={b}"),
            RelationParams::DoubleHook { a, b, c } => format!("a={a};b={b};c={c}"),
            RelationParams::Reversal { index, star } => format!("index={index};star={star}"),
            RelationParams::Antipode { index } => format!("index={index}"),
            RelationParams::Oyama { index, shift } => format!("index={index};m={shift}"),
            RelationParams::RestrictedOhno { k, r, i, j }
            | RelationParams::Main { k, r, i, j }
            | RelationParams::MainStar { k, r, i, j } => format!("k={k};r={r};i={i};j={j}"),
        }
    }
}

/// One zeta term `coeff * z(index)` (or `z*` when `star` is set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaTerm {
    pub coeff: Rational,
    pub star: bool,
    pub index: Index,
}

/// One term `coeff * Z(weight)` on the Bernoulli side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZTerm {
    pub coeff: Rational,
    pub weight: u32,
}

/// One bilinear term `coeff * z*(star_index) * z(index)`; either side may be
/// the empty index, which evaluates to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTerm {
    pub coeff: Rational,
    pub star_index: Index,
    pub index: Index,
}

/// A formal identity `sum of lhs terms + sum of products = sum of rhs terms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub params: RelationParams,
    pub lhs: Vec<ZetaTerm>,
    pub rhs: Vec<ZTerm>,
    pub products: Vec<ProductTerm>,
}

impl RelationInstance {
    pub fn kind(&self) -> RelationKind {
        self.params.kind()
    }

    /// The largest weight appearing anywhere in the instance: lhs indices,
    /// rhs Z-weights, and combined product weights.
    pub fn max_weight(&self) -> u32 {
        let lhs = self.lhs.iter().map(|t| t.index.weight()).max().unwrap_or(0);
        let rhs = self.rhs.iter().map(|t| t.weight).max().unwrap_or(0);
        let prod = self
            .products
            .iter()
            .map(|t| t.star_index.weight() + t.index.weight())
            .max()
            .unwrap_or(0);
        lhs.max(rhs).max(prod)
    }

    /// Smallest prime at which the identity is asserted per-prime.
    pub fn min_prime(&self) -> u64 {
        self.max_weight() as u64 + 2
    }

    /// True when the instance has no Bernoulli-side terms, so it can be
    /// evaluated at primes where `Z` is undefined (the boundary scan).
    pub fn is_z_free(&self) -> bool {
        self.rhs.is_empty()
    }
}

/// Outcome of evaluating one relation instance at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub kind: RelationKind,
    pub params: String,
    pub prime: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
    pub elapsed_us: u64,
}
