//! Indices — finite sequences of positive integers — and their combinatorics:
//! Hoffman duality, the refinement order, composition enumeration, signed
//! binomial coefficients, and the restricted-sum coefficient `N`.
//!
//! Everything in this module is exact integer arithmetic; nothing depends on
//! a prime.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A (possibly empty) sequence of positive integers.
///
/// The *weight* is the sum of the parts and the *depth* their count. The
/// empty index (weight 0, depth 0) is representable because convolution-style
/// identities need it as a boundary value, but most operations reject it.
///
/// `Ord` is graded: indices compare by weight first, then lexicographically
/// on parts, so sorted collections iterate in a reproducible order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Index {
    parts: Vec<u32>,
}

impl Index {
    /// Builds an index, rejecting zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The index `{part}^times` (the part repeated `times` times).
    pub fn repeated(part: u32, times: usize) -> Result<Self> {
        Self::new(vec![part; times])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The same parts in reverse order.
    pub fn reverse(&self) -> Index {
        let mut parts = self.parts.clone();
        parts.reverse();
        Index { parts }
    }

    /// The Hoffman dual: write every part as a sum of ones, then swap the
    /// roles of plus signs and commas. An involution that exchanges depth
    /// `r` and `weight - r + 1`.
    pub fn hoffman_dual(&self) -> Result<Index> {
        if self.is_empty() {
            return Err(Error::EmptyIndex);
        }
        let w = self.weight();
        // comma[t] = true when the separator after the t-th one is a comma.
        let mut comma = vec![false; w as usize + 1];
        let mut acc = 0u32;
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            comma[acc as usize] = true;
        }
        // In the dual the commas sit exactly where the pluses were.
        let mut parts = Vec::new();
        let mut last = 0u32;
        for t in 1..w {
            if !comma[t as usize] {
                parts.push(t - last);
                last = t;
            }
        }
        parts.push(w - last);
        Ok(Index { parts })
    }

    /// All indices finer (split more) or coarser (merged more) than `self`
    /// in the refinement order, including `self`, sorted.
    ///
    /// `Finer` has `2^(weight-depth)` elements, `Coarser` has `2^(depth-1)`.
    pub fn refinements(&self, direction: RefineDirection) -> Result<Vec<Index>> {
        if self.is_empty() {
            return Err(Error::EmptyIndex);
        }
        let mut out = Vec::new();
        match direction {
            RefineDirection::Finer => {
                let mut cur = Vec::new();
                split_parts(&self.parts, &mut cur, &mut out);
            }
            RefineDirection::Coarser => {
                let gaps = self.parts.len() - 1;
                for mask in 0u64..(1u64 << gaps) {
                    let mut parts = vec![self.parts[0]];
                    for (g, &p) in self.parts[1..].iter().enumerate() {
                        if mask >> g & 1 == 1 {
                            *parts.last_mut().unwrap() += p;
                        } else {
                            parts.push(p);
                        }
                    }
                    out.push(Index { parts });
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

/// Splits every part into all compositions and concatenates the choices.
fn split_parts(parts: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Index>) {
    match parts.split_first() {
        None => out.push(Index { parts: cur.clone() }),
        Some((&head, rest)) => {
            for split in indices_of_weight(head) {
                let len = cur.len();
                cur.extend_from_slice(split.parts());
                split_parts(rest, cur, out);
                cur.truncate(len);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefineDirection {
    Finer,
    Coarser,
}

impl Ord for Index {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Index {
    /// Comma-separated decimal parts with no spaces; the empty index renders
    /// as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, p) in self.parts.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Index {
    type Err = Error;

    /// Parses the `"k1,k2,...,kr"` text form. Rejects empty components,
    /// non-digits, and zero parts. The empty string is the empty index.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Index::empty());
        }
        let mut parts = Vec::new();
        for comp in s.split(',') {
            if comp.is_empty() || !comp.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::IndexParse(comp.to_string()));
            }
            let v: u32 = comp
                .parse()
                .map_err(|_| Error::IndexParse(comp.to_string()))?;
            parts.push(v);
        }
        Index::new(parts)
    }
}

/// Every composition of `weight` into any number of positive parts, in
/// lexicographic order on part tuples (so `(1,1,1) < (1,2) < (2,1) < (3)`).
pub fn indices_of_weight(weight: u32) -> Vec<Index> {
    let mut out = Vec::new();
    if weight == 0 {
        return out;
    }
    let mut cur = Vec::new();
    fn rec(remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Index>) {
        if remaining == 0 {
            out.push(Index { parts: cur.clone() });
            return;
        }
        for head in 1..=remaining {
            cur.push(head);
            rec(remaining - head, cur, out);
            cur.pop();
        }
    }
    rec(weight, &mut cur, &mut out);
    out
}

/// Lower-bound constraint on specific components of a composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartConstraint {
    /// `k_i >= 2` — the sum-formula restriction.
    SumFormula { i: u32 },
    /// `k_i >= 3`.
    Single { i: u32 },
    /// `k_i >= 2` and `k_j >= 2`, `i < j`.
    Pair { i: u32, j: u32 },
}

/// A target depth together with an optional component constraint.
/// Positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RestrictionSpec {
    depth: u32,
    constraint: Option<PartConstraint>,
}

impl RestrictionSpec {
    pub fn unrestricted(depth: u32) -> Result<Self> {
        Self::build(depth, None)
    }

    pub fn sum_formula(depth: u32, i: u32) -> Result<Self> {
        Self::build(depth, Some(PartConstraint::SumFormula { i }))
    }

    pub fn single(depth: u32, i: u32) -> Result<Self> {
        Self::build(depth, Some(PartConstraint::Single { i }))
    }

    /// Positions are normalized so `i < j`; `i == j` is rejected.
    pub fn pair(depth: u32, i: u32, j: u32) -> Result<Self> {
        if i == j {
            return Err(Error::domain("pair constraint needs distinct positions"));
        }
        let (i, j) = (i.min(j), i.max(j));
        Self::build(depth, Some(PartConstraint::Pair { i, j }))
    }

    fn build(depth: u32, constraint: Option<PartConstraint>) -> Result<Self> {
        if depth < 1 {
            return Err(Error::domain("depth must be at least 1"));
        }
        let in_range = |pos: u32| 1 <= pos && pos <= depth;
        let ok = match constraint {
            None => true,
            Some(PartConstraint::SumFormula { i }) | Some(PartConstraint::Single { i }) => {
                in_range(i)
            }
            Some(PartConstraint::Pair { i, j }) => in_range(i) && in_range(j),
        };
        if !ok {
            return Err(Error::domain("constraint position out of 1..=depth"));
        }
        Ok(Self { depth, constraint })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn constraint(&self) -> Option<PartConstraint> {
        self.constraint
    }

    /// Per-position minimum part values (1-based positions flattened out).
    fn minima(&self) -> Vec<u32> {
        let mut mins = vec![1u32; self.depth as usize];
        match self.constraint {
            None => {}
            Some(PartConstraint::SumFormula { i }) => mins[i as usize - 1] = 2,
            Some(PartConstraint::Single { i }) => mins[i as usize - 1] = 3,
            Some(PartConstraint::Pair { i, j }) => {
                mins[i as usize - 1] = 2;
                mins[j as usize - 1] = 2;
            }
        }
        mins
    }
}

/// All compositions of `weight` into exactly `spec.depth()` positive parts
/// meeting the constraint, in lexicographic order on part tuples. Returns an
/// empty list (not an error) when the constraint is unsatisfiable.
pub fn compositions(weight: u32, spec: &RestrictionSpec) -> Result<Vec<Index>> {
    if weight < 1 {
        return Err(Error::domain("weight must be at least 1"));
    }
    let minima = spec.minima();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(minima.len());
    fill(weight, &minima, &mut cur, &mut out);
    Ok(out)
}

fn fill(remaining: u32, minima: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Index>) {
    let Some((&min, rest)) = minima.split_first() else {
        if remaining == 0 {
            out.push(Index { parts: cur.clone() });
        }
        return;
    };
    let tail_min: u32 = rest.iter().sum();
    if remaining < min + tail_min {
        return;
    }
    for v in min..=remaining - tail_min {
        cur.push(v);
        fill(remaining - v, rest, cur, out);
        cur.pop();
    }
}

/// All weak compositions of `total` into exactly `parts` nonnegative parts,
/// in lexicographic order.
pub(crate) fn weak_compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    let spec = RestrictionSpec::unrestricted(parts).expect("parts >= 1");
    compositions(total + parts, &spec)
        .expect("weight >= 1")
        .into_iter()
        .map(|c| c.parts().iter().map(|&p| p - 1).collect())
        .collect()
}

/// Exact binomial coefficient with the zero-outside-support convention:
/// `C(a, b) = 0` unless `0 <= b <= a`. Requires `a >= 0`.
pub fn binomial(a: i64, b: i64) -> Result<i128> {
    if a < 0 {
        return Err(Error::NegativeBinomial(a));
    }
    if b < 0 || b > a {
        return Ok(0);
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for t in 0..b {
        acc = acc.checked_mul((a - t) as i128).ok_or(Error::Overflow)? / (t + 1) as i128;
    }
    Ok(acc)
}

/// The signed binomial `[a; b] = (-1)^b C(a, b)`, zero whenever `b` falls
/// outside `0..=a`.
pub fn signed_binom(a: i64, b: i64) -> Result<i128> {
    let c = binomial(a, b)?;
    Ok(if b.rem_euclid(2) == 0 { c } else { -c })
}

/// The reparameterization `(i, i', i'', k')` of `(k, r, i, j)` with
/// `i' = j - i + 1`, `i'' = r - j + 1`, `k' = k - r - 2`, so that
/// `i + i' + i'' + k' = k`. Requires `1 <= i <= j <= r <= k - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedParams {
    pub i: u32,
    pub i_prime: u32,
    pub i_dprime: u32,
    pub k_prime: u32,
}

impl DerivedParams {
    pub fn new(k: u32, r: u32, i: u32, j: u32) -> Result<Self> {
        if !(1 <= i && i <= j && j <= r && r + 2 <= k) {
            return Err(Error::domain(format!(
                "need 1 <= i <= j <= r <= k-2, got k={k} r={r} i={i} j={j}"
            )));
        }
        Ok(Self {
            i,
            i_prime: j - i + 1,
            i_dprime: r - j + 1,
            k_prime: k - r - 2,
        })
    }
}

/// The exact integer `N` in the restricted sum identity `S = (N/2) Z(k)`:
///
/// ```text
/// N = (k'+i+1)  ([k-1; k'+i ] - [k-1; i -1])
///   - (k'+i''+1)([k-1; k'+i''] - [k-1; i''-1])
///   + k ([k-2; k'+i-1] - [k-2; i-2] - [k-2; k'+i''-1] + [k-2; i''-2])
/// ```
///
/// Requires `k` odd and `1 <= i <= j <= r <= k - 2`. Antisymmetric under
/// `(i, j) -> (r+1-j, r+1-i)`.
pub fn n_coefficient(k: u32, r: u32, i: u32, j: u32) -> Result<i128> {
    if k.is_multiple_of(2) {
        return Err(Error::domain(format!("k must be odd, got {k}")));
    }
    let d = DerivedParams::new(k, r, i, j)?;
    let (kk, kp, di, dq) = (k as i64, d.k_prime as i64, d.i as i64, d.i_dprime as i64);

    let side = |x: i64| -> Result<i128> {
        let linear = mul(
            (kp + x + 1) as i128,
            sub(signed_binom(kk - 1, kp + x)?, signed_binom(kk - 1, x - 1)?)?,
        )?;
        Ok(linear)
    };
    let first = sub(side(di)?, side(dq)?)?;
    let inner = sub(
        sub(
            signed_binom(kk - 2, kp + di - 1)?,
            signed_binom(kk - 2, di - 2)?,
        )?,
        sub(
            signed_binom(kk - 2, kp + dq - 1)?,
            signed_binom(kk - 2, dq - 2)?,
        )?,
    )?;
    add(first, mul(kk as i128, inner)?)
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}
