//! Sweep configuration and parsing helpers.

use anyhow::{bail, ensure, Result};
use zv_core::RelationKind;

/// Everything a verification sweep needs. `jobs` controls execution only;
/// it never affects report contents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub kinds: Vec<RelationKind>,
    pub weight_max: u32,
    pub depth_max: u32,
    pub shift_max: u32,
    pub prime_lo: u64,
    pub prime_hi: u64,
    pub jobs: usize,
    pub stable: bool,
    pub boundary_scan: bool,
    pub even_explore: bool,
}

impl Default for SweepConfig {
    /// The default sweep: every kind, weight up to 9 (depth up to 5, shifts
    /// up to 4), primes 5..199.
    fn default() -> Self {
        Self {
            kinds: RelationKind::ALL.to_vec(),
            weight_max: 9,
            depth_max: 5,
            shift_max: 4,
            prime_lo: 5,
            prime_hi: 199,
            jobs: 1,
            stable: false,
            boundary_scan: false,
            even_explore: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        ensure!(
            !self.kinds.is_empty(),
            "at least one relation kind required"
        );
        ensure!(self.weight_max >= 3, "weight_max must be at least 3");
        ensure!(self.depth_max >= 1, "depth_max must be at least 1");
        ensure!(
            2 <= self.prime_lo && self.prime_lo <= self.prime_hi && self.prime_hi <= 1 << 31,
            "prime range must satisfy 2 <= lo <= hi <= 2^31"
        );
        ensure!(self.jobs >= 1, "worker count must be at least 1");
        Ok(())
    }

    /// Kinds deduplicated and sorted into the canonical report order.
    pub fn normalized_kinds(&self) -> Vec<RelationKind> {
        let mut kinds: Vec<RelationKind> = RelationKind::ALL
            .into_iter()
            .filter(|k| self.kinds.contains(k))
            .collect();
        kinds.dedup();
        kinds
    }
}

/// Parses `--kinds` values: kind names (case-insensitive, `-`/`_`
/// interchangeable) or `all`.
pub fn parse_kinds(specs: &[String]) -> Result<Vec<RelationKind>> {
    let mut kinds = Vec::new();
    for spec in specs {
        if spec.trim().eq_ignore_ascii_case("all") {
            kinds.extend(RelationKind::ALL);
            continue;
        }
        match RelationKind::parse(spec) {
            Some(kind) => kinds.push(kind),
            None => bail!("unknown relation kind {spec:?}"),
        }
    }
    Ok(kinds)
}

/// Parses an inclusive prime range `LO..HI`.
pub fn parse_prime_range(s: &str) -> Result<(u64, u64)> {
    let Some((lo, hi)) = s.split_once("..") else {
        bail!("prime range must look like LO..HI, got {s:?}");
    };
    let lo: u64 = lo.trim().parse()?;
    let hi: u64 = hi.trim().parse()?;
    ensure!(
        2 <= lo && lo <= hi && hi <= 1 << 31,
        "prime range must satisfy 2 <= lo <= hi <= 2^31"
    );
    Ok((lo, hi))
}
