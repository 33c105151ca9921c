//! Independent computation paths: the definitional restricted sum (no
//! closed form involved), the exact integer binomial lemma, and the
//! non-asserting even-weight exploration.

use crate::error::{Error, Result};
use crate::index::{signed_binom, weak_compositions, DerivedParams};
use crate::mhs::{mhs, ZetaTable};
use crate::modfield::{Fp, Residue};

use super::evaluate::PrimeTables;
use super::generate::{restricted_compositions, sum_formula_coefficient};
use super::SumFormulaForm;

/// The definitional restricted sum: the sum of `z` over all compositions in
/// `I_{k,r,i,j}`, each evaluated by its own harmonic-sum DP. No theorem is
/// involved, which makes this the oracle for the closed-form checks.
///
/// Accepts both parities of `k` (the even-weight exploration needs even k).
/// Requires `p >= k + 2`.
pub fn restricted_sum_direct(k: u32, r: u32, i: u32, j: u32, p: u64) -> Result<Residue> {
    let comps = restricted_compositions(k, r, i, j)?;
    let fp = Fp::new(p)?;
    if p < k as u64 + 2 {
        return Err(Error::BoundaryPrime {
            weight: k,
            p,
            min: k as u64 + 2,
        });
    }
    let mut acc = 0u64;
    for c in &comps {
        acc = fp.add(acc, mhs(c, p, false)?.value);
    }
    Ok(fp.residue(acc))
}

/// The same sum read out of a prebuilt table (used by sweeps, where the DP
/// cost is amortized across instances).
pub fn restricted_sum_from_table(
    k: u32,
    r: u32,
    i: u32,
    j: u32,
    table: &ZetaTable,
) -> Result<Residue> {
    let comps = restricted_compositions(k, r, i, j)?;
    let fp = table.fp();
    let mut acc = 0u64;
    for c in &comps {
        acc = fp.add(acc, table.value(c, false)?.value);
    }
    Ok(fp.residue(acc))
}

/// Exact integer check of the closed forms for the signed binomial sums
/// `sum over weak 3-compositions (e1,e2,e3) of k' of [k; x + e1]` for
/// `x = i` and `x = i''`, plus the agreement of the two sum-formula
/// coefficient forms at `(k, r, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialLemmaCheck {
    /// (direct enumeration, closed form) for the `i` side.
    pub i_side: (i128, i128),
    /// (direct enumeration, closed form) for the `i''` side.
    pub i_dprime_side: (i128, i128),
    /// Closed-form difference; equals the restricted-sum coefficient `N`.
    pub combined: i128,
    /// The two sum-formula coefficient forms agree at `(k, r, i)`.
    pub forms_agree: bool,
    pub pass: bool,
}

pub fn verify_binomial_lemma(k: u32, r: u32, i: u32, j: u32) -> Result<BinomialLemmaCheck> {
    if k.is_multiple_of(2) {
        return Err(Error::domain(format!("k must be odd, got {k}")));
    }
    let d = DerivedParams::new(k, r, i, j)?;
    let kk = k as i64;
    let kp = d.k_prime as i64;

    let direct = |x: i64| -> Result<i128> {
        let mut acc: i128 = 0;
        for e in weak_compositions(d.k_prime, 3) {
            acc = acc
                .checked_add(signed_binom(kk, x + e[0] as i64)?)
                .ok_or(Error::Overflow)?;
        }
        Ok(acc)
    };
    let closed = |x: i64| -> Result<i128> {
        let linear =
            (kp + x + 1) as i128 * (signed_binom(kk - 1, kp + x)? - signed_binom(kk - 1, x - 1)?);
        let quad = kk as i128 * (signed_binom(kk - 2, kp + x - 1)? - signed_binom(kk - 2, x - 2)?);
        Ok(linear + quad)
    };

    let i_side = (direct(d.i as i64)?, closed(d.i as i64)?);
    let i_dprime_side = (direct(d.i_dprime as i64)?, closed(d.i_dprime as i64)?);
    let combined = i_side.1 - i_dprime_side.1;

    let forms_agree = sum_formula_coefficient(k, r, i, SumFormulaForm::Binomial)?
        == sum_formula_coefficient(k, r, i, SumFormulaForm::Signed)?;

    let pass = i_side.0 == i_side.1 && i_dprime_side.0 == i_dprime_side.1 && forms_agree;
    Ok(BinomialLemmaCheck {
        i_side,
        i_dprime_side,
        combined,
        forms_agree,
        pass,
    })
}

/// One nonzero restricted sum found at even weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSample {
    pub k: u32,
    pub r: u32,
    pub i: u32,
    pub j: u32,
    pub prime: u64,
    pub value: u64,
}

/// Result of the even-weight exploration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenScan {
    /// Nonzero restricted sums, ordered by (k, r, i, j, prime).
    pub samples: Vec<EvenSample>,
    /// Number of (k, r, i, j, prime) tuples scanned.
    pub scanned: u64,
    /// Whether `Z(k)` vanished at every scanned pair, as it must for even k.
    pub z_all_zero: bool,
}

/// Scans every even weight `4 <= k <= weight_max`, every restricted tuple
/// `(r, i, j)`, and every prime in `primes` with `p >= k + 2`, recording the
/// restricted sums that do not vanish. Purely observational: nothing here is
/// asserted as a theorem.
pub fn explore_even(weight_max: u32, primes: &[u64]) -> Result<EvenScan> {
    let mut samples = Vec::new();
    let mut scanned = 0u64;
    let mut z_all_zero = true;

    let tuples: Vec<(u32, u32, u32, u32)> = (4..=weight_max)
        .step_by(2)
        .flat_map(|k| {
            (1..=k - 2)
                .flat_map(move |r| (1..=r).flat_map(move |i| (i..=r).map(move |j| (k, r, i, j))))
        })
        .collect();

    for &p in primes {
        if weight_max as u64 + 2 > p && tuples.iter().all(|&(k, ..)| p < k as u64 + 2) {
            continue;
        }
        let tables = PrimeTables::build(p, weight_max)?;
        for &(k, r, i, j) in &tuples {
            if p < k as u64 + 2 {
                continue;
            }
            scanned += 1;
            if !tables.z_value(k)?.is_zero() {
                z_all_zero = false;
            }
            let s = restricted_sum_from_table(k, r, i, j, tables.zeta())?;
            if !s.is_zero() {
                samples.push(EvenSample {
                    k,
                    r,
                    i,
                    j,
                    prime: p,
                    value: s.value,
                });
            }
        }
    }
    samples.sort_by_key(|s| (s.k, s.r, s.i, s.j, s.prime));
    Ok(EvenScan {
        samples,
        scanned,
        z_all_zero,
    })
}
