//! Expanding relation parameters into fully explicit instances.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::index::{
    compositions, signed_binom, weak_compositions, DerivedParams, Index, RestrictionSpec,
};
use crate::modfield::Rational;

use super::{ProductTerm, RelationInstance, RelationParams, SumFormulaForm, ZTerm, ZetaTerm};

fn term(coeff: i128, star: bool, index: Index) -> ZetaTerm {
    ZetaTerm {
        coeff: Rational::integer(coeff),
        star,
        index,
    }
}

/// `(-1)^r` as an exact integer.
fn parity_sign(r: u32) -> i128 {
    if r.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The sum-formula coefficient for weight `k`, depth `r`, raised position
/// `i`, in either closed form. The two forms agree as exact integers for
/// all `1 <= i <= r <= k - 1`.
pub fn sum_formula_coefficient(k: u32, r: u32, i: u32, form: SumFormulaForm) -> Result<i128> {
    if !(1 <= i && i <= r && r <= k.saturating_sub(1)) {
        return Err(Error::domain(format!(
            "sum formula needs 1 <= i <= r <= k-1, got k={k} r={r} i={i}"
        )));
    }
    let (k, r, i) = (k as i64, r as i64, i as i64);
    match form {
        SumFormulaForm::Binomial => {
            let lead = if (i - 1) % 2 == 0 { 1 } else { -1 };
            let inner = crate::index::binomial(k - 1, i - 1)?
                .checked_add(
                    parity_sign(r as u32)
                        .checked_mul(crate::index::binomial(k - 1, r - i)?)
                        .ok_or(Error::Overflow)?,
                )
                .ok_or(Error::Overflow)?;
            Ok(lead * inner)
        }
        SumFormulaForm::Signed => Ok(signed_binom(k - 1, i - 1)? - signed_binom(k - 1, r - i)?),
    }
}

/// The composition set `I_{k,r,i,j}`: `k_i >= 3` when `i == j`, else
/// `k_i, k_j >= 2`, in lexicographic order.
pub(crate) fn restricted_compositions(k: u32, r: u32, i: u32, j: u32) -> Result<Vec<Index>> {
    DerivedParams::new(k, r, i, j)?;
    let spec = if i == j {
        RestrictionSpec::single(r, i)?
    } else {
        RestrictionSpec::pair(r, i, j)?
    };
    compositions(k, &spec)
}

/// Adds a shift vector to an index componentwise.
fn shifted(index: &Index, shift: &[u32]) -> Index {
    let parts = index
        .parts()
        .iter()
        .zip(shift)
        .map(|(&p, &e)| p + e)
        .collect();
    Index::new(parts).expect("parts stay positive")
}

/// The index `({1}^a, mid..., {1}^b)`.
fn padded(a: u32, mid: &[u32], b: u32) -> Index {
    let mut parts = vec![1u32; a as usize];
    parts.extend_from_slice(mid);
    parts.extend(std::iter::repeat_n(1, b as usize));
    Index::new(parts).expect("parts are positive")
}

/// Expands parameters into a fully explicit instance. Domain violations
/// (parity conditions, position bounds, empty indices) are errors.
pub fn generate(params: &RelationParams) -> Result<RelationInstance> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut products = Vec::new();

    match params {
        RelationParams::SymSum { index, star } => {
            if index.is_empty() {
                return Err(Error::EmptyIndex);
            }
            // The full symmetric group, repeated-part multisets included, so
            // terms may repeat.
            let r = index.depth();
            for perm in index.parts().iter().copied().permutations(r) {
                lhs.push(term(1, *star, Index::new(perm)?));
            }
        }

        RelationParams::RepZero { part, reps, star } => {
            if *part < 1 || *reps < 1 {
                return Err(Error::domain("repetition needs k >= 1 and r >= 1"));
            }
            lhs.push(term(1, *star, Index::repeated(*part, *reps as usize)?));
        }

        RelationParams::Duality { index } => {
            // z*(dual) + z*(k) = 0
            lhs.push(term(1, true, index.hoffman_dual()?));
            lhs.push(term(1, true, index.clone()));
        }

        RelationParams::PhiDual { index } => {
            // (-1)^r z(k) - sum over finer l of z(l) = 0
            if index.is_empty() {
                return Err(Error::EmptyIndex);
            }
            lhs.push(term(
                parity_sign(index.depth() as u32),
                false,
                index.clone(),
            ));
            for l in index.refinements(crate::index::RefineDirection::Finer)? {
                lhs.push(term(-1, false, l));
            }
        }

        RelationParams::SumFormula {
            k,
            r,
            i,
            form,
            star,
        } => {
            let coeff = sum_formula_coefficient(*k, *r, *i, *form)?;
            for c in compositions(*k, &RestrictionSpec::sum_formula(*r, *i)?)? {
                lhs.push(term(1, *star, c));
            }
            let coeff = if *star {
                parity_sign(*r) * coeff
            } else {
                coeff
            };
            rhs.push(ZTerm {
                coeff: Rational::integer(coeff),
                weight: *k,
            });
        }

        RelationParams::Hook { a, b } => {
            if (a + b) % 2 == 0 {
                return Err(Error::domain(format!(
                    "hook needs a+b odd, got a={a} b={b}"
                )));
            }
            let n = a + b + 2;
            lhs.push(term(1, false, padded(*a, &[2], *b)));
            rhs.push(ZTerm {
                coeff: Rational::integer(-signed_binom(n as i64, *a as i64 + 1)?),
                weight: n,
            });
        }

        RelationParams::DoubleHook { a, b, c } => {
            if *c < -1 {
                return Err(Error::domain(format!("double hook needs c >= -1, got {c}")));
            }
            let total = *a as i64 + *b as i64 + *c as i64;
            if total.rem_euclid(2) == 0 {
                return Err(Error::domain(format!(
                    "double hook needs a+b+c odd, got a={a} b={b} c={c}"
                )));
            }
            let n = (total + 4) as u32;
            let index = if *c == -1 {
                padded(*a, &[3], *b)
            } else {
                let mut mid = vec![2u32];
                mid.extend(std::iter::repeat_n(1, *c as usize));
                mid.push(2);
                padded(*a, &mid, *b)
            };
            lhs.push(term(1, false, index));
            let num =
                signed_binom(n as i64, *a as i64 + 1)? - signed_binom(n as i64, *b as i64 + 1)?;
            rhs.push(ZTerm {
                coeff: Rational::half(num),
                weight: n,
            });
        }

        RelationParams::Reversal { index, star } => {
            // z(reversed) - (-1)^weight z(k) = 0, in either variant
            lhs.push(term(1, *star, index.reverse()));
            lhs.push(term(-parity_sign(index.weight()), *star, index.clone()));
        }

        RelationParams::Antipode { index } => {
            if index.is_empty() {
                return Err(Error::EmptyIndex);
            }
            let parts = index.parts();
            for s in 0..=parts.len() {
                let star_index = Index::new(parts[..s].iter().rev().copied().collect())?;
                let plain_index = Index::new(parts[s..].to_vec())?;
                products.push(ProductTerm {
                    coeff: Rational::integer(parity_sign(s as u32)),
                    star_index,
                    index: plain_index,
                });
            }
        }

        RelationParams::Oyama { index, shift } => {
            if index.is_empty() {
                return Err(Error::EmptyIndex);
            }
            let r = index.depth() as u32;
            for e in weak_compositions(*shift, r) {
                lhs.push(term(1, false, shifted(index, &e)));
            }
            let dual = index.hoffman_dual()?;
            let r_dual = dual.depth() as u32;
            for e in weak_compositions(*shift, r_dual) {
                lhs.push(term(-1, false, shifted(&dual, &e).hoffman_dual()?));
            }
        }

        RelationParams::RestrictedOhno { k, r, i, j } => {
            let d = DerivedParams::new(*k, *r, *i, *j)?;
            let seed = Index::new(vec![d.i, d.i_prime, d.i_dprime])?;
            for e in weak_compositions(d.k_prime, 3) {
                lhs.push(term(1, false, shifted(&seed, &e).hoffman_dual()?));
            }
            for c in restricted_compositions(*k, *r, *i, *j)? {
                lhs.push(term(-1, false, c));
            }
        }

        RelationParams::Main { k, r, i, j } => {
            let n = crate::index::n_coefficient(*k, *r, *i, *j)?;
            for c in restricted_compositions(*k, *r, *i, *j)? {
                lhs.push(term(1, false, c));
            }
            rhs.push(ZTerm {
                coeff: Rational::half(n),
                weight: *k,
            });
        }

        RelationParams::MainStar { k, r, i, j } => {
            if *k % 2 == 0 {
                return Err(Error::domain(format!("k must be odd, got {k}")));
            }
            // S - (-1)^r S* = 0
            let comps = restricted_compositions(*k, *r, *i, *j)?;
            for c in &comps {
                lhs.push(term(1, false, c.clone()));
            }
            for c in comps {
                lhs.push(term(-parity_sign(*r), true, c));
            }
        }
    }

    Ok(RelationInstance {
        params: params.clone(),
        lhs,
        rhs,
        products,
    })
}
