//! Prime enumeration for sweep ranges.

use anyhow::{ensure, Result};

/// All primes in the inclusive range `[lo, hi]`, by a segmented sieve of
/// Eratosthenes. Bounds: `2 <= lo <= hi <= 2^31`.
pub fn primes_in_range(lo: u64, hi: u64) -> Result<Vec<u64>> {
    ensure!(
        2 <= lo && lo <= hi && hi <= 1 << 31,
        "prime range must satisfy 2 <= lo <= hi <= 2^31"
    );
    let root = (hi as f64).sqrt() as u64 + 1;
    let base = simple_sieve(root);

    const SEGMENT: u64 = 1 << 20;
    let mut out = Vec::new();
    let mut start = lo;
    while start <= hi {
        let end = hi.min(start + SEGMENT - 1);
        let mut composite = vec![false; (end - start + 1) as usize];
        for &p in &base {
            if p * p > end {
                break;
            }
            // first multiple of p in the segment, but never p itself
            let mut m = start.div_ceil(p) * p;
            m = m.max(p * p);
            while m <= end {
                composite[(m - start) as usize] = true;
                m += p;
            }
        }
        for v in start..=end {
            if !composite[(v - start) as usize] {
                out.push(v);
            }
        }
        start = end + 1;
    }
    Ok(out)
}

fn simple_sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for v in 2..=n {
        if composite[v] {
            continue;
        }
        primes.push(v as u64);
        let mut m = v * v;
        while m <= n {
            composite[m] = true;
            m += v;
        }
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(primes_in_range(5, 20).unwrap(), vec![5, 7, 11, 13, 17, 19]);
        assert_eq!(primes_in_range(14, 16).unwrap(), Vec::<u64>::new());
        assert_eq!(primes_in_range(2, 2).unwrap(), vec![2]);
        assert!(primes_in_range(1, 5).is_err());
        assert!(primes_in_range(7, 5).is_err());
    }

    #[test]
    fn matches_trial_division_up_to_ten_thousand() {
        let trial: Vec<u64> = (2..=10_000u64)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        assert_eq!(primes_in_range(2, 10_000).unwrap(), trial);
    }

    #[test]
    fn segmented_ranges_agree_with_full_sieve() {
        let full = primes_in_range(2, 5_000).unwrap();
        let window: Vec<u64> = full
            .iter()
            .copied()
            .filter(|&p| (1_234..=4_321).contains(&p))
            .collect();
        assert_eq!(primes_in_range(1_234, 4_321).unwrap(), window);
    }
}
