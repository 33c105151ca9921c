//! Truncated multiple harmonic sums mod p.
//!
//! `mhs` evaluates one index by a right-to-left dynamic program over the
//! summation variable (cost O(depth * p); tuples are never enumerated).
//! `mhs_table` amortizes that DP across every index of weight <= W by
//! sharing suffix states, for a total cost of O(2^W * p) per prime.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::index::Index;
use crate::modfield::{Fp, Residue};

/// Tables of m^{-e} for m in 1..p and e up to a fixed bound, built from one
/// batch inversion followed by repeated multiplication.
pub(crate) struct InversePowers {
    rows: Vec<Vec<u64>>,
}

impl InversePowers {
    pub(crate) fn new(fp: Fp, max_exp: u32) -> Result<Self> {
        let p = fp.modulus() as usize;
        let inv = fp.batch_inv(&(1..p as u64).collect::<Vec<_>>())?;
        let mut rows = Vec::with_capacity(max_exp as usize + 1);
        rows.push(vec![1u64; p]);
        for e in 1..=max_exp as usize {
            let mut row = vec![0u64; p];
            for m in 1..p {
                row[m] = fp.mul(rows[e - 1][m], inv[m - 1]);
            }
            rows.push(row);
        }
        Ok(Self { rows })
    }

    pub(crate) fn row(&self, exp: u32) -> &[u64] {
        &self.rows[exp as usize]
    }
}

/// Extends a suffix cumulative array by one more (leftward) part.
///
/// `cum[m]` holds the sum over admissible chains starting strictly (or
/// weakly, for the star variant) below `m+1`; the new head contributes
/// `m^{-part}` times the chain sum below it.
fn extend(fp: &Fp, cum: &[u64], inv_pow: &[u64], star: bool) -> Vec<u64> {
    let p = cum.len();
    let mut out = vec![0u64; p];
    let mut acc = 0u64;
    for m in 1..p {
        let below = if star { cum[m] } else { cum[m - 1] };
        acc = fp.add(acc, fp.mul(inv_pow[m], below));
        out[m] = acc;
    }
    out
}

/// The multiple harmonic sum for one index at one prime:
/// strict descending chains `p > m_1 > ... > m_r >= 1`, or weak chains
/// (`>=` throughout) when `star` is set.
pub fn mhs(index: &Index, p: u64, star: bool) -> Result<Residue> {
    if index.is_empty() {
        return Err(Error::EmptyIndex);
    }
    let fp = Fp::new(p)?;
    let max_part = index.parts().iter().copied().max().unwrap_or(0);
    let ip = InversePowers::new(fp, max_part)?;
    let mut cum = vec![1u64; p as usize];
    for &part in index.parts().iter().rev() {
        cum = extend(&fp, &cum, ip.row(part), star);
    }
    Ok(fp.residue(cum[p as usize - 1]))
}

/// Strict and star values for one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZetaPair {
    pub strict: u64,
    pub star: u64,
}

/// Per-prime table holding both harmonic-sum variants for every nonempty
/// index of weight up to `weight_max` — `2^W - 1` entries of each kind.
///
/// Iteration follows the graded index order (weight, then lexicographic),
/// so any serialization of the table is reproducible.
#[derive(Debug, Clone)]
pub struct ZetaTable {
    fp: Fp,
    weight_max: u32,
    entries: BTreeMap<Index, ZetaPair>,
}

impl ZetaTable {
    pub fn prime(&self) -> u64 {
        self.fp.modulus()
    }

    pub(crate) fn fp(&self) -> Fp {
        self.fp
    }

    pub fn weight_max(&self) -> u32 {
        self.weight_max
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: &Index, star: bool) -> Option<Residue> {
        self.entries
            .get(index)
            .map(|pair| self.fp.residue(if star { pair.star } else { pair.strict }))
    }

    /// Like `get`, but fails loudly on lookups beyond the coverage bound.
    pub fn value(&self, index: &Index, star: bool) -> Result<Residue> {
        self.get(index, star).ok_or(Error::Coverage {
            needed: index.weight(),
            available: self.weight_max,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &ZetaPair)> {
        self.entries.iter()
    }
}

/// Builds the full table for one prime by depth-first extension of suffix
/// DP states: every index `(head, suffix...)` reuses the cumulative arrays
/// of its suffix.
pub fn mhs_table(weight_max: u32, p: u64) -> Result<ZetaTable> {
    if weight_max < 1 {
        return Err(Error::domain("weight_max must be at least 1"));
    }
    let fp = Fp::new(p)?;
    let ip = InversePowers::new(fp, weight_max)?;
    let mut entries = BTreeMap::new();
    let base = vec![1u64; p as usize];
    grow(&fp, &ip, weight_max, &[], &base, &base, &mut entries);
    Ok(ZetaTable {
        fp,
        weight_max,
        entries,
    })
}

fn grow(
    fp: &Fp,
    ip: &InversePowers,
    budget: u32,
    suffix: &[u32],
    strict_cum: &[u64],
    star_cum: &[u64],
    entries: &mut BTreeMap<Index, ZetaPair>,
) {
    let last = strict_cum.len() - 1;
    for head in 1..=budget {
        let strict = extend(fp, strict_cum, ip.row(head), false);
        let star = extend(fp, star_cum, ip.row(head), true);
        let mut parts = Vec::with_capacity(suffix.len() + 1);
        parts.push(head);
        parts.extend_from_slice(suffix);
        let pair = ZetaPair {
            strict: strict[last],
            star: star[last],
        };
        grow(fp, ip, budget - head, &parts, &strict, &star, entries);
        entries.insert(Index::new(parts).expect("parts are positive"), pair);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{indices_of_weight, RefineDirection};
    use crate::modfield::is_prime;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    /// Direct chain enumeration; the independent oracle for the DP.
    fn naive_mhs(parts: &[u32], p: u64, star: bool) -> u64 {
        let fp = Fp::new(p).unwrap();
        fn rec(fp: &Fp, parts: &[u32], upper: u64, star: bool) -> u64 {
            let Some((&k, rest)) = parts.split_first() else {
                return 1;
            };
            let mut acc = 0u64;
            for m in 1..=upper {
                let term = fp.inv(fp.pow(m, k as u64)).unwrap();
                let next_upper = if star { m } else { m - 1 };
                acc = fp.add(acc, fp.mul(term, rec(fp, rest, next_upper, star)));
            }
            acc
        }
        rec(&fp, parts, p - 1, star)
    }

    #[test]
    fn mhs_examples() {
        assert_eq!(mhs(&idx(&[1]), 5, false).unwrap().value, 0); // 1+3+2+4 = 10
        assert_eq!(mhs(&idx(&[2, 1]), 7, false).unwrap().value, 3);
        assert_eq!(mhs(&idx(&[2, 1]), 7, true).unwrap().value, 3);
        assert_eq!(mhs(&idx(&[1, 2]), 7, true).unwrap().value, 4);
        assert!(matches!(
            mhs(&Index::empty(), 7, false),
            Err(Error::EmptyIndex)
        ));
        assert!(matches!(
            mhs(&idx(&[1]), 6, false),
            Err(Error::InvalidModulus(6))
        ));
    }

    #[test]
    fn dp_matches_naive_enumeration() {
        let primes: Vec<u64> = (3..=31).filter(|&p| is_prime(p)).collect();
        for w in 1..=5u32 {
            for index in indices_of_weight(w) {
                for &p in &primes {
                    for star in [false, true] {
                        let fast = mhs(&index, p, star).unwrap().value;
                        let slow = naive_mhs(index.parts(), p, star);
                        assert_eq!(fast, slow, "index {index}, p={p}, star={star}");
                    }
                }
            }
        }
    }

    #[test]
    fn table_matches_mhs() {
        for p in [5u64, 7, 11, 13] {
            let table = mhs_table(4, p).unwrap();
            assert_eq!(table.len(), (1 << 4) - 1);
            for w in 1..=4u32 {
                for index in indices_of_weight(w) {
                    for star in [false, true] {
                        assert_eq!(
                            table.get(&index, star).unwrap().value,
                            mhs(&index, p, star).unwrap().value,
                            "index {index}, p={p}, star={star}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn table_examples() {
        let t = mhs_table(1, 5).unwrap();
        assert_eq!(t.get(&idx(&[1]), false).unwrap().value, 0);
        assert_eq!(t.get(&idx(&[1]), true).unwrap().value, 0);

        let t = mhs_table(2, 7).unwrap();
        assert_eq!(t.get(&idx(&[2]), false).unwrap().value, 0);
        assert_eq!(t.get(&idx(&[1, 1]), false).unwrap().value, 0);
    }

    #[test]
    fn coverage_fails_loudly() {
        let t = mhs_table(3, 7).unwrap();
        assert!(t.get(&idx(&[4]), false).is_none());
        assert!(matches!(
            t.value(&idx(&[2, 2]), false),
            Err(Error::Coverage {
                needed: 4,
                available: 3
            })
        ));
    }

    #[test]
    fn star_decomposes_over_coarsenings() {
        let primes: Vec<u64> = (7..=101).filter(|&p| is_prime(p)).collect();
        for &p in &primes {
            let table = mhs_table(8, p).unwrap();
            let fp = Fp::new(p).unwrap();
            for w in 1..=8u32 {
                for index in indices_of_weight(w) {
                    let mut acc = 0u64;
                    for l in index.refinements(RefineDirection::Coarser).unwrap() {
                        acc = fp.add(acc, table.get(&l, false).unwrap().value);
                    }
                    assert_eq!(
                        acc,
                        table.get(&index, true).unwrap().value,
                        "star expansion failed at {index}, p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn depth_one_star_agrees() {
        for p in [3u64, 5, 7, 31, 97] {
            for k in 1..=8u32 {
                let index = idx(&[k]);
                assert_eq!(
                    mhs(&index, p, false).unwrap(),
                    mhs(&index, p, true).unwrap()
                );
            }
        }
    }

    #[test]
    fn repeated_indices_vanish() {
        // ({k}^r) = 0 once p >= k*r + 2; the bound is sharp — see the
        // boundary cases below.
        for k in 1..=5u32 {
            for r in 1..=10usize {
                let w = k * r as u32;
                if w > 10 {
                    continue;
                }
                let index = Index::repeated(k, r).unwrap();
                for p in (w as u64 + 2)..=61 {
                    if !is_prime(p) {
                        continue;
                    }
                    assert_eq!(
                        mhs(&index, p, false).unwrap().value,
                        0,
                        "strict ({k})^{r} at p={p}"
                    );
                    assert_eq!(
                        mhs(&index, p, true).unwrap().value,
                        0,
                        "star ({k})^{r} at p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn repeated_indices_at_boundary_primes() {
        // At p = weight + 1 the sums need not vanish: these frozen values
        // come from the naive enumeration.
        assert_eq!(mhs(&idx(&[1, 1, 1, 1]), 5, false).unwrap().value, 4);
        assert_eq!(mhs(&idx(&[2, 2]), 5, false).unwrap().value, 3);
    }
}
