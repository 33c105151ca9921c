//! Finite multiple zeta values mod p: exact index combinatorics, prime-field
//! arithmetic with Bernoulli tables, a dynamic-programming engine for
//! truncated multiple harmonic sums, and a suite that instantiates and
//! checks the classical relations among these values over ranges of primes.

pub mod error;
pub mod index;
pub mod mhs;
pub mod modfield;
pub mod relations;

pub use error::{Error, Result};
pub use index::{
    binomial, compositions, indices_of_weight, n_coefficient, signed_binom, DerivedParams, Index,
    PartConstraint, RefineDirection, RestrictionSpec,
};
pub use mhs::{mhs, mhs_table, ZetaPair, ZetaTable};
pub use modfield::{
    bernoulli_table, is_prime, rational_residue, z_value, BernoulliTable, Fp, Rational, Residue,
};
pub use relations::{
    enumerate_params, evaluate, evaluate_residues, explore_even, generate, restricted_sum_direct,
    restricted_sum_from_table, sum_formula_coefficient, verify_binomial_lemma, BinomialLemmaCheck,
    CheckResult, EvenSample, EvenScan, ParamBounds, PrimeTables, ProductTerm, RelationInstance,
    RelationKind, RelationParams, SumFormulaForm, ZTerm, ZetaTerm,
};
