//! Prime-field arithmetic: inversion (single and batched), Bernoulli numbers
//! mod p, the value `Z(k) = B_{p-k}/k`, and exact-rational reduction.
//!
//! Moduli are odd primes below 2^31, so a product of two reduced values fits
//! in a `u64` without widening.

use std::fmt;

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin with bases 2, 7, 61 (exact for all n below
/// 4_759_123_141, which covers the 2^31 modulus bound).
pub fn is_prime(n: u64) -> bool {
    for q in [2u64, 3, 5, 7, 11, 13] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    if n < 17 {
        return false; // 0, 1 and the small composites fall through above
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        if a % n == 0 {
            continue;
        }
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % modulus as u128) as u64;
        }
        base = (base as u128 * base as u128 % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// A value in `F_p` together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl Residue {
    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Residue> {
        let fp = Fp::new(self.modulus)?;
        Ok(fp.residue(fp.inv(self.value)?))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Arithmetic context for one odd prime p < 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn residue(&self, value: u64) -> Residue {
        Residue {
            value: value % self.p,
            modulus: self.p,
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        a * b % self.p
    }

    pub fn pow(&self, base: u64, exp: u64) -> u64 {
        pow_mod(base, exp, self.p)
    }

    /// Inverse by Fermat's little theorem; errors on zero.
    pub fn inv(&self, x: u64) -> Result<u64> {
        let x = x % self.p;
        if x == 0 {
            return Err(Error::NotInvertible {
                value: x,
                modulus: self.p,
            });
        }
        Ok(self.pow(x, self.p - 2))
    }

    /// Batch inversion: one exponentiation plus 3(n-1) multiplications.
    /// Inverses come back in input order; any zero input is an error.
    pub fn batch_inv(&self, xs: &[u64]) -> Result<Vec<u64>> {
        if xs.is_empty() {
            return Ok(Vec::new());
        }
        let mut prefix = Vec::with_capacity(xs.len());
        let mut acc = 1u64;
        for &x in xs {
            let x = x % self.p;
            if x == 0 {
                return Err(Error::NotInvertible {
                    value: 0,
                    modulus: self.p,
                });
            }
            acc = self.mul(acc, x);
            prefix.push(acc);
        }
        let mut inv_running = self.inv(acc)?;
        let mut out = vec![0u64; xs.len()];
        for t in (1..xs.len()).rev() {
            out[t] = self.mul(inv_running, prefix[t - 1]);
            inv_running = self.mul(inv_running, xs[t] % self.p);
        }
        out[0] = inv_running;
        Ok(out)
    }

    /// Reduces a (possibly negative) integer into `[0, p)`.
    pub fn reduce_i128(&self, n: i128) -> u64 {
        let p = self.p as i128;
        ((n % p + p) % p) as u64
    }

    /// Reduces the exact rational `num/den`; errors when p divides den.
    pub fn rational(&self, num: i128, den: i128) -> Result<u64> {
        if den == 0 {
            return Err(Error::domain("zero denominator"));
        }
        let d = self.reduce_i128(den);
        Ok(self.mul(self.reduce_i128(num), self.inv(d)?))
    }
}

/// Reduce the exact rational `num/den` in `F_p`. Errors when `p | den`,
/// signalling a coefficient that is not evaluable at this prime.
pub fn rational_residue(num: i128, den: i128, p: u64) -> Result<Residue> {
    let fp = Fp::new(p)?;
    Ok(fp.residue(fp.rational(num, den)?))
}

/// An exact rational coefficient, kept reduced with a positive denominator.
/// Every relation the suite generates stays within denominators {1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("zero denominator"));
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd_i128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        Ok(Self {
            num: sign * num / g,
            den: den.abs() / g,
        })
    }

    pub fn integer(num: i128) -> Self {
        Self { num, den: 1 }
    }

    /// `num/2`, reduced.
    pub fn half(num: i128) -> Self {
        Self::new(num, 2).expect("nonzero denominator")
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_residue(&self, fp: &Fp) -> Result<u64> {
        fp.rational(self.num, self.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd_i128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b.max(1);
    }
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Bernoulli numbers `B_0..B_{n_max}` reduced mod p, computed by the
/// recurrence `sum_{j=0}^{m} C(m+1, j) B_j = 0` in `F_p` (so `B_1 = -1/2`).
///
/// Requires `p >= 5` prime and `n_max <= p - 3`: in that range no Bernoulli
/// denominator is divisible by p (von Staudt-Clausen), so the residues are
/// the reductions of the exact rationals.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    fp: Fp,
    values: Vec<u64>,
}

impl BernoulliTable {
    pub fn new(p: u64, n_max: u32) -> Result<Self> {
        let fp = Fp::new(p)?;
        if p < 5 || n_max as u64 + 3 > p {
            return Err(Error::BernoulliRange { p, n_max });
        }
        let n = n_max as usize;

        // Factorials up to n+1 < p, inverse factorials from one inversion.
        let mut fact = vec![1u64; n + 2];
        for t in 1..=n + 1 {
            fact[t] = fp.mul(fact[t - 1], t as u64);
        }
        let mut ifact = vec![1u64; n + 2];
        ifact[n + 1] = fp.inv(fact[n + 1])?;
        for t in (0..=n).rev() {
            ifact[t] = fp.mul(ifact[t + 1], t as u64 + 1);
        }
        let binom = |a: usize, b: usize| fp.mul(fact[a], fp.mul(ifact[b], ifact[a - b]));

        let mut values = vec![0u64; n + 1];
        values[0] = 1;
        for m in 1..=n {
            let mut acc = 0u64;
            for (j, &bj) in values.iter().enumerate().take(m) {
                acc = fp.add(acc, fp.mul(binom(m + 1, j), bj));
            }
            values[m] = fp.mul(fp.neg(acc), fp.inv(m as u64 + 1)?);
        }
        Ok(Self { fp, values })
    }

    pub fn modulus(&self) -> u64 {
        self.fp.p
    }

    pub fn n_max(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    pub fn get(&self, n: u32) -> Option<Residue> {
        self.values.get(n as usize).map(|&v| self.fp.residue(v))
    }

    /// `Z(k) = B_{p-k}/k`. Requires `k >= 2` and `p >= k + 2`; vanishes for
    /// even k because `p - k` is then odd and at least 3.
    pub fn z_value(&self, k: u32) -> Result<Residue> {
        let p = self.fp.p;
        if k < 2 {
            return Err(Error::domain(format!("z-value needs k >= 2, got {k}")));
        }
        if p < k as u64 + 2 {
            return Err(Error::BoundaryPrime {
                weight: k,
                p,
                min: k as u64 + 2,
            });
        }
        if k.is_multiple_of(2) {
            return Ok(self.fp.residue(0));
        }
        let n = (p - k as u64) as u32;
        let b = self.get(n).ok_or(Error::Coverage {
            needed: n,
            available: self.n_max(),
        })?;
        Ok(self
            .fp
            .residue(self.fp.mul(b.value, self.fp.inv(k as u64)?)))
    }
}

/// Convenience constructor matching the table type.
pub fn bernoulli_table(p: u64, n_max: u32) -> Result<BernoulliTable> {
    BernoulliTable::new(p, n_max)
}

/// `Z(k)` at a single prime, building the Bernoulli prefix it needs.
pub fn z_value(k: u32, p: u64) -> Result<Residue> {
    let fp = Fp::new(p)?;
    if k < 2 {
        return Err(Error::domain(format!("z-value needs k >= 2, got {k}")));
    }
    if p < k as u64 + 2 {
        return Err(Error::BoundaryPrime {
            weight: k,
            p,
            min: k as u64 + 2,
        });
    }
    if k.is_multiple_of(2) {
        return Ok(fp.residue(0));
    }
    BernoulliTable::new(p, (p - k as u64) as u32)?.z_value(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97
            ]
        );
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(2_147_483_649));
    }

    #[test]
    fn fp_validation() {
        assert!(Fp::new(7).is_ok());
        assert!(matches!(Fp::new(2), Err(Error::InvalidModulus(2))));
        assert!(matches!(Fp::new(9), Err(Error::InvalidModulus(9))));
        assert!(matches!(Fp::new(1 << 31), Err(Error::InvalidModulus(_))));
    }

    #[test]
    fn inverse_examples() {
        let fp = Fp::new(7).unwrap();
        assert_eq!(fp.inv(3).unwrap(), 5); // 3*5 = 15 = 1 (mod 7)
        assert_eq!(fp.inv(1).unwrap(), 1);
        assert!(matches!(fp.inv(0), Err(Error::NotInvertible { .. })));
        assert!(matches!(fp.inv(14), Err(Error::NotInvertible { .. })));
    }

    #[test]
    fn batch_inverse_examples() {
        let fp = Fp::new(7).unwrap();
        assert_eq!(
            fp.batch_inv(&[1, 2, 3, 4, 5, 6]).unwrap(),
            vec![1, 4, 5, 2, 3, 6]
        );
        assert_eq!(fp.batch_inv(&[]).unwrap(), Vec::<u64>::new());
        assert!(fp.batch_inv(&[3, 7, 5]).is_err());
    }

    #[test]
    fn batch_inverse_matches_single() {
        // Deterministic pseudo-random inputs, compared element-wise.
        for p in [5u64, 13, 101, 997, 99991] {
            let fp = Fp::new(p).unwrap();
            let xs: Vec<u64> = (1..200u64)
                .map(|t| (t * t * 2654435761) % (p - 1) + 1)
                .collect();
            let batch = fp.batch_inv(&xs).unwrap();
            for (x, inv) in xs.iter().zip(&batch) {
                assert_eq!(*inv, fp.inv(*x).unwrap());
                assert_eq!(fp.mul(x % p, *inv), 1);
            }
        }
    }

    #[test]
    fn bernoulli_examples() {
        let b7 = BernoulliTable::new(7, 4).unwrap();
        assert_eq!(b7.get(0).unwrap().value, 1);
        assert_eq!(b7.get(2).unwrap().value, 6); // B_2 = 1/6, 6^-1 = 6 (mod 7)
        let b11 = BernoulliTable::new(11, 8).unwrap();
        assert_eq!(b11.get(3).unwrap().value, 0);
        assert_eq!(b11.get(1).unwrap().value, 5); // B_1 = -1/2 = 5 (mod 11)
    }

    #[test]
    fn bernoulli_range_checks() {
        assert!(matches!(
            BernoulliTable::new(7, 5),
            Err(Error::BernoulliRange { .. })
        ));
        assert!(matches!(
            BernoulliTable::new(3, 0),
            Err(Error::BernoulliRange { .. })
        ));
        assert!(matches!(
            BernoulliTable::new(9, 2),
            Err(Error::InvalidModulus(9))
        ));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        let table = BernoulliTable::new(101, 98).unwrap();
        for n in (3..=97u32).step_by(2) {
            assert_eq!(table.get(n).unwrap().value, 0, "B_{n} mod 101");
        }
    }

    #[test]
    fn z_value_examples() {
        assert_eq!(z_value(3, 7).unwrap().value, 1); // -1/90 mod 7
        assert_eq!(z_value(4, 11).unwrap().value, 0); // B_7 = 0
        assert_eq!(z_value(5, 7).unwrap().value, 4); // 1/30 mod 7
        assert!(matches!(z_value(5, 5), Err(Error::BoundaryPrime { .. })));
    }

    #[test]
    fn z_value_even_vanishes() {
        for k in (2..=20u32).step_by(2) {
            for p in (k as u64 + 2)..=199 {
                if is_prime(p) {
                    assert_eq!(z_value(k, p).unwrap().value, 0, "Z({k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn rational_reduction() {
        assert_eq!(rational_residue(-10, 2, 7).unwrap().value, 2);
        assert_eq!(rational_residue(1, 1, 13).unwrap().value, 1);
        assert_eq!(rational_residue(15, 2, 7).unwrap().value, 4);
        assert!(matches!(
            rational_residue(3, 7, 7),
            Err(Error::NotInvertible { .. })
        ));
        assert!(matches!(rational_residue(3, 0, 7), Err(Error::Domain(_))));
    }

    #[test]
    fn rational_type() {
        assert_eq!(Rational::half(-10), Rational::integer(-5));
        assert_eq!(Rational::half(5).to_string(), "5/2");
        assert_eq!(Rational::new(6, -4).unwrap().to_string(), "-3/2");
        assert!(Rational::new(1, 0).is_err());
    }
}
