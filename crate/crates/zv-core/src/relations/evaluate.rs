//! Reducing relation instances against per-prime tables.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::mhs::{mhs_table, ZetaTable};
use crate::modfield::{BernoulliTable, Fp, Residue};

use super::{CheckResult, RelationInstance};

/// Immutable per-prime evaluation context: the zeta table plus Bernoulli
/// values up to `p - 3`. For `p = 3` the Bernoulli table cannot exist, so
/// only Z-free instances are evaluable there.
#[derive(Debug, Clone)]
pub struct PrimeTables {
    zeta: ZetaTable,
    bernoulli: Option<BernoulliTable>,
}

impl PrimeTables {
    pub fn build(p: u64, weight_max: u32) -> Result<Self> {
        let zeta = mhs_table(weight_max, p)?;
        let bernoulli = if p >= 5 {
            Some(BernoulliTable::new(p, (p - 3) as u32)?)
        } else {
            None
        };
        Ok(Self { zeta, bernoulli })
    }

    pub fn prime(&self) -> u64 {
        self.zeta.prime()
    }

    pub fn weight_max(&self) -> u32 {
        self.zeta.weight_max()
    }

    pub fn zeta(&self) -> &ZetaTable {
        &self.zeta
    }

    pub(crate) fn fp(&self) -> Fp {
        self.zeta.fp()
    }

    pub fn z_value(&self, k: u32) -> Result<Residue> {
        let bernoulli = self.bernoulli.as_ref().ok_or(Error::BoundaryPrime {
            weight: k,
            p: self.prime(),
            min: k as u64 + 2,
        })?;
        bernoulli.z_value(k)
    }
}

/// Evaluates an instance with the boundary-prime guard: the table's prime
/// must be at least the instance weight plus 2. A boundary prime is a
/// domain error, never a failed check.
pub fn evaluate(instance: &RelationInstance, tables: &PrimeTables) -> Result<CheckResult> {
    let p = tables.prime();
    if p < instance.min_prime() {
        return Err(Error::BoundaryPrime {
            weight: instance.max_weight(),
            p,
            min: instance.min_prime(),
        });
    }
    evaluate_residues(instance, tables)
}

/// Evaluates without the boundary guard (used by the non-asserting boundary
/// scan). Still errors on coverage gaps and on Z terms the prime cannot
/// support.
pub fn evaluate_residues(instance: &RelationInstance, tables: &PrimeTables) -> Result<CheckResult> {
    let start = Instant::now();
    let fp = tables.fp();

    let mut lhs = 0u64;
    for t in &instance.lhs {
        let value = tables.zeta().value(&t.index, t.star)?;
        lhs = fp.add(lhs, fp.mul(t.coeff.to_residue(&fp)?, value.value));
    }
    for t in &instance.products {
        let star_value = if t.star_index.is_empty() {
            1
        } else {
            tables.zeta().value(&t.star_index, true)?.value
        };
        let plain_value = if t.index.is_empty() {
            1
        } else {
            tables.zeta().value(&t.index, false)?.value
        };
        let product = fp.mul(star_value, plain_value);
        lhs = fp.add(lhs, fp.mul(t.coeff.to_residue(&fp)?, product));
    }

    let mut rhs = 0u64;
    for t in &instance.rhs {
        let z = tables.z_value(t.weight)?;
        rhs = fp.add(rhs, fp.mul(t.coeff.to_residue(&fp)?, z.value));
    }

    Ok(CheckResult {
        kind: instance.kind(),
        params: instance.params.label(),
        prime: tables.prime(),
        lhs,
        rhs,
        pass: lhs == rhs,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}
