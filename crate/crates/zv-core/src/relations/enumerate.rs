//! Deterministic enumeration of legal parameter tuples for each relation
//! kind within weight/depth bounds.

use crate::index::{indices_of_weight, Index};

use super::{RelationKind, RelationParams, SumFormulaForm};

/// Bounds for parameter enumeration.
///
/// `depth_max` caps the depth of index-valued parameters (and the depth `r`
/// of composition-sum kinds); `shift_max` caps the Ohno-type shift `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamBounds {
    pub weight_max: u32,
    pub depth_max: u32,
    pub shift_max: u32,
}

impl ParamBounds {
    /// Unconstrained depth, shift up to 4.
    pub fn new(weight_max: u32) -> Self {
        Self {
            weight_max,
            depth_max: weight_max,
            shift_max: 4,
        }
    }

    pub fn with_depth_max(mut self, depth_max: u32) -> Self {
        self.depth_max = depth_max;
        self
    }

    pub fn with_shift_max(mut self, shift_max: u32) -> Self {
        self.shift_max = shift_max;
        self
    }
}

/// Every nonempty index of weight <= `weight_max` and depth <= `depth_max`,
/// in graded lexicographic order.
fn indices_up_to(weight_max: u32, depth_max: u32) -> Vec<Index> {
    let mut out = Vec::new();
    for w in 1..=weight_max {
        out.extend(
            indices_of_weight(w)
                .into_iter()
                .filter(|k| k.depth() as u32 <= depth_max),
        );
    }
    out
}

/// Partitions of each weight <= `weight_max` into at most `depth_max` parts,
/// as non-increasing indices (one canonical index per multiset), largest
/// first part first.
fn partitions_up_to(weight_max: u32, depth_max: u32) -> Vec<Index> {
    fn rec(remaining: u32, max_part: u32, slots: u32, cur: &mut Vec<u32>, out: &mut Vec<Index>) {
        if remaining == 0 {
            out.push(Index::new(cur.clone()).expect("parts are positive"));
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            cur.push(part);
            rec(remaining - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for w in 1..=weight_max {
        rec(w, w, depth_max, &mut cur, &mut out);
    }
    out
}

/// All `(k, r, i, j)` with `1 <= i <= j <= r <= min(k-2, depth_max)` for a
/// fixed weight, in (r, i, j) lexicographic order.
fn restricted_tuples(k: u32, depth_max: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    if k < 3 {
        return out;
    }
    for r in 1..=(k - 2).min(depth_max) {
        for i in 1..=r {
            for j in i..=r {
                out.push((k, r, i, j));
            }
        }
    }
    out
}

/// Deterministic, duplicate-free enumeration of every legal parameter tuple
/// for `kind` within the bounds.
pub fn enumerate_params(kind: RelationKind, bounds: &ParamBounds) -> Vec<RelationParams> {
    let w = bounds.weight_max;
    let d = bounds.depth_max;
    let mut out = Vec::new();
    match kind {
        RelationKind::SymSum => {
            for index in partitions_up_to(w, d) {
                for star in [false, true] {
                    out.push(RelationParams::SymSum {
                        index: index.clone(),
                        star,
                    });
                }
            }
        }
        RelationKind::RepZero => {
            for part in 1..=w {
                for reps in 1..=w / part {
                    for star in [false, true] {
                        out.push(RelationParams::RepZero { part, reps, star });
                    }
                }
            }
        }
        RelationKind::Duality => {
            for index in indices_up_to(w, d) {
                out.push(RelationParams::Duality { index });
            }
        }
        RelationKind::PhiDual => {
            for index in indices_up_to(w, d) {
                out.push(RelationParams::PhiDual { index });
            }
        }
        RelationKind::SumFormula => {
            for k in 2..=w {
                for r in 1..=(k - 1).min(d) {
                    for i in 1..=r {
                        for form in [SumFormulaForm::Binomial, SumFormulaForm::Signed] {
                            for star in [false, true] {
                                out.push(RelationParams::SumFormula {
                                    k,
                                    r,
                                    i,
                                    form,
                                    star,
                                });
                            }
                        }
                    }
                }
            }
        }
        RelationKind::Hook => {
            // a + b odd and a + b + 2 <= weight_max
            for n in 3..=w {
                for a in 0..=n - 2 {
                    let b = n - 2 - a;
                    if (a + b) % 2 == 1 {
                        out.push(RelationParams::Hook { a, b });
                    }
                }
            }
        }
        RelationKind::DoubleHook => {
            // c >= -1, a + b + c odd, a + b + c + 4 <= weight_max
            for n in 3..=w {
                let total = n as i64 - 4;
                if total.rem_euclid(2) == 0 {
                    continue;
                }
                for a in 0..=(total + 1).max(0) as u32 {
                    for b in 0..=((total + 1) as u32 - a) {
                        let c = total - a as i64 - b as i64;
                        if c >= -1 {
                            out.push(RelationParams::DoubleHook { a, b, c: c as i32 });
                        }
                    }
                }
            }
        }
        RelationKind::Reversal => {
            for index in indices_up_to(w, d) {
                for star in [false, true] {
                    out.push(RelationParams::Reversal {
                        index: index.clone(),
                        star,
                    });
                }
            }
        }
        RelationKind::Antipode => {
            for index in indices_up_to(w, d) {
                out.push(RelationParams::Antipode { index });
            }
        }
        RelationKind::Oyama => {
            for index in indices_up_to(w, d) {
                for shift in 0..=bounds.shift_max {
                    out.push(RelationParams::Oyama {
                        index: index.clone(),
                        shift,
                    });
                }
            }
        }
        RelationKind::RestrictedOhno => {
            for k in 3..=w {
                for (k, r, i, j) in restricted_tuples(k, d) {
                    out.push(RelationParams::RestrictedOhno { k, r, i, j });
                }
            }
        }
        RelationKind::Main => {
            for k in (3..=w).step_by(2) {
                for (k, r, i, j) in restricted_tuples(k, d) {
                    out.push(RelationParams::Main { k, r, i, j });
                }
            }
        }
        RelationKind::MainStar => {
            for k in (3..=w).step_by(2) {
                for (k, r, i, j) in restricted_tuples(k, d) {
                    out.push(RelationParams::MainStar { k, r, i, j });
                }
            }
        }
    }
    out
}
