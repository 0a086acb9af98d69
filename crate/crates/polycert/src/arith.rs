//! Integer kernels: primality testing, budgeted factorization, p-adic
//! valuations, smallest prime divisors, and exact fraction comparison.
//!
//! Factorization runs trial division by primes below 10^6 and then
//! Pollard rho (Brent cycling) on whatever composite cofactors remain,
//! until a caller-supplied time budget expires. Incomplete results are
//! reported honestly via the cofactor field; callers treat them as
//! inconclusive rather than wrong.

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("zero has no factorization")]
    ZeroArgument,
    #[error("|n| <= 1 has no prime divisor")]
    NoPrimeDivisor,
    #[error("modulus is not prime")]
    NotPrime,
    #[error("factoring budget exceeded")]
    BudgetExceeded,
}

/// Default per-integer factoring budget, in milliseconds.
pub const DEFAULT_BUDGET_MS: u64 = 2000;

/// Default seed for all randomized search (Pollard rho restarts, probable
/// prime rounds); overridable for reproducible runs.
pub const DEFAULT_SEED: u64 = 0x706f_6c79_6365_7274;

/// Time budget and randomness seed applied to each factored integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorPolicy {
    pub budget_ms: u64,
    pub seed: u64,
}

impl Default for FactorPolicy {
    fn default() -> Self {
        FactorPolicy { budget_ms: DEFAULT_BUDGET_MS, seed: DEFAULT_SEED }
    }
}

impl FactorPolicy {
    pub fn with_budget_ms(budget_ms: u64) -> Self {
        FactorPolicy { budget_ms, ..Default::default() }
    }
}

/// p-adic valuation value; `Infinite` only arises from the valuation of 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Valuation::Finite(0)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Primality classification; `ProbablePrime` marks results above the
/// deterministic Miller-Rabin range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Composite,
    Prime,
    ProbablePrime,
}

/// Prime factorization of a positive integer, possibly truncated by the
/// budget. `prime^exponent` entries are sorted by prime; the cofactor, when
/// present, is the unfactored composite remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: BigInt,
    factors: Vec<(BigInt, u32)>,
    cofactor: Option<BigInt>,
}

impl Factorization {
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    pub fn complete(&self) -> bool {
        self.cofactor.is_none()
    }

    pub fn cofactor(&self) -> Option<&BigInt> {
        self.cofactor.as_ref()
    }

    /// Number of distinct primes found.
    pub fn distinct(&self) -> usize {
        self.factors.len()
    }

    /// Product of all listed prime powers and the cofactor; equals `value`.
    pub fn reassemble(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        if let Some(c) = &self.cofactor {
            acc *= c;
        }
        acc
    }
}

const SIEVE_LIMIT: usize = 1_000_000;

fn sieve_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut composite = vec![false; SIEVE_LIMIT];
        let mut primes = Vec::with_capacity(78_498);
        for n in 2..SIEVE_LIMIT {
            if !composite[n] {
                primes.push(n as u32);
                let mut m = n * n;
                while m < SIEVE_LIMIT {
                    composite[m] = true;
                    m += n;
                }
            }
        }
        primes
    })
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Bases making Miller-Rabin deterministic for n < 3,317,044,064,679,887,385,961,981.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mr_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn mr_round_big(n: &BigUint, a: &BigUint, d: &BigUint, s: u64) -> bool {
    let n_minus_1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u32), n);
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

fn deterministic_mr_threshold() -> &'static BigUint {
    static T: OnceLock<BigUint> = OnceLock::new();
    T.get_or_init(|| "3317044064679887385961981".parse().expect("threshold literal"))
}

fn primality_big(n: &BigUint) -> Primality {
    if let Some(v) = n.to_u64() {
        return if mr_u64(v) { Primality::Prime } else { Primality::Composite };
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return Primality::Composite;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n > 2 is odd here");
    let d = &n_minus_1 >> s;
    if n <= deterministic_mr_threshold() {
        for &a in &MR_BASES {
            if !mr_round_big(n, &BigUint::from(a), &d, s) {
                return Primality::Composite;
            }
        }
        return Primality::Prime;
    }
    // Above the deterministic range: 40 pseudo-random rounds, error < 4^-40.
    // The generator is seeded from the value so results are reproducible.
    let mut seed = DEFAULT_SEED;
    for b in n.to_bytes_le() {
        seed = seed.wrapping_mul(0x100000001b3).wrapping_add(b as u64);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let low = BigUint::from(2u32);
    let high = &n_minus_1 - 1u32;
    for _ in 0..40 {
        let a = rng.gen_biguint_range(&low, &high);
        if !mr_round_big(n, &a, &d, s) {
            return Primality::Composite;
        }
    }
    Primality::ProbablePrime
}

/// Primality classification of `|n|`; deterministic below 3.3e24, probable
/// above it.
pub fn primality(n: &BigInt) -> Primality {
    primality_big(n.magnitude())
}

/// True when `|n|` is (probably) prime. Deterministic for all inputs below
/// 3.3e24.
pub fn is_prime(n: &BigInt) -> bool {
    primality(n) != Primality::Composite
}

struct Budget {
    deadline: Instant,
}

impl Budget {
    fn start(policy: &FactorPolicy) -> Self {
        Budget { deadline: Instant::now() + Duration::from_millis(policy.budget_ms) }
    }

    fn expired(&self) -> bool {
        Instant::now() >= self.deadline
    }
}

/// One Pollard rho (Brent) run on a u64-sized composite; returns a
/// nontrivial factor or None on cycle failure.
fn rho_brent_u64(n: u64, c: u64, budget: &Budget) -> Option<u64> {
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = 0u64;
    let mut ys = 0u64;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = mulmod_u64(y, y, n).wrapping_add(c) % n;
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = mulmod_u64(y, y, n).wrapping_add(c) % n;
                q = mulmod_u64(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
            if budget.expired() {
                return None;
            }
        }
        r <<= 1;
    }
    if g == n {
        // backtrack one step at a time
        loop {
            ys = mulmod_u64(ys, ys, n).wrapping_add(c) % n;
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    if g == n {
        None
    } else {
        Some(g)
    }
}

/// Pollard rho (Brent) on a big composite; same contract as the u64 path.
fn rho_brent_big(n: &BigUint, c: &BigUint, budget: &Budget) -> Option<BigUint> {
    let step = |v: &BigUint| (v * v + c) % n;
    let mut y = BigUint::from(2u32);
    let mut r: u64 = 1;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = BigUint::zero();
    let mut ys = BigUint::zero();
    const BATCH: u64 = 64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = step(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += BATCH;
            if budget.expired() {
                return None;
            }
        }
        r <<= 1;
    }
    if g == *n {
        loop {
            ys = step(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
            if budget.expired() {
                return None;
            }
        }
    }
    if g == *n {
        None
    } else {
        Some(g)
    }
}

/// Detects `c = root^k` for prime exponents k; higher powers reduce
/// recursively.
fn perfect_power(c: &BigUint) -> Option<(BigUint, u32)> {
    let bits = c.bits();
    for k in [2u32, 3, 5, 7, 11, 13] {
        // the root would land below the trial-division range
        if bits < 20 * k as u64 {
            break;
        }
        let root = c.nth_root(k);
        if root.pow(k) == *c {
            return Some((root, k));
        }
    }
    None
}

/// Splits one composite (no prime factors below the sieve limit) into two
/// nontrivial parts, retrying rho with fresh random parameters until the
/// budget expires.
fn split_composite(n: &BigUint, rng: &mut ChaCha8Rng, budget: &Budget) -> Option<BigUint> {
    loop {
        if budget.expired() {
            return None;
        }
        if let Some(v) = n.to_u64() {
            let c = rng.gen_range(1..v.saturating_sub(2).max(2));
            if let Some(f) = rho_brent_u64(v, c, budget) {
                return Some(BigUint::from(f));
            }
        } else {
            let c = rng.gen_biguint_below(n).max(BigUint::one());
            if let Some(f) = rho_brent_big(n, &c, budget) {
                return Some(f);
            }
        }
    }
}

/// Trial division by the sieve primes, staged: the loop runs in native
/// u128 arithmetic once the cofactor fits, stops at the sqrt cutoff, and
/// pauses at increasing prime bounds to primality-test the cofactor so
/// that large prime cofactors never pay for the full sieve sweep.
fn trial_divide(mut remaining: BigUint, factors: &mut Vec<(BigUint, u32)>) -> BigUint {
    const STAGES: [u32; 4] = [1_000, 10_000, 100_000, 1_000_000];
    let primes = sieve_primes();
    let mut idx = 0usize;
    for stage in STAGES {
        if remaining.is_one() {
            return remaining;
        }
        if let Some(mut small) = remaining.to_u128() {
            // native path for everything that fits
            while idx < primes.len() && primes[idx] < stage {
                let p = primes[idx] as u128;
                if p * p > small {
                    break;
                }
                let mut e = 0u32;
                while small % p == 0 {
                    small /= p;
                    e += 1;
                }
                if e > 0 {
                    factors.push((BigUint::from(primes[idx]), e));
                }
                idx += 1;
            }
            if idx < primes.len() {
                let p = primes[idx] as u128;
                if p * p > small {
                    if small > 1 {
                        factors.push((BigUint::from(small), 1));
                    }
                    return BigUint::one();
                }
            }
            remaining = BigUint::from(small);
        } else {
            while idx < primes.len() && primes[idx] < stage {
                let pb = BigUint::from(primes[idx]);
                let mut e = 0u32;
                loop {
                    let (q, r) = remaining.div_rem(&pb);
                    if r.is_zero() {
                        remaining = q;
                        e += 1;
                    } else {
                        break;
                    }
                }
                if e > 0 {
                    factors.push((pb, e));
                }
                idx += 1;
            }
        }
        // a (probable) prime cofactor needs no further sieving here; the
        // caller's rho stage re-checks primality anyway
        if !remaining.is_one() && primality_big(&remaining) != Primality::Composite {
            factors.push((remaining, 1));
            return BigUint::one();
        }
    }
    remaining
}

/// Factors `|n|` under the policy's time budget.
pub fn factorize(n: &BigInt, policy: &FactorPolicy) -> Result<Factorization, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroArgument);
    }
    let value = n.abs();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let budget = Budget::start(policy);
    let remaining = trial_divide(value.magnitude().clone(), &mut factors);

    let mut cofactor: Option<BigUint> = None;
    if !remaining.is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
        let mut pending: Vec<(BigUint, u32)> = vec![(remaining, 1)];
        while let Some((c, mult)) = pending.pop() {
            match primality_big(&c) {
                Primality::Prime | Primality::ProbablePrime => {
                    factors.push((c, mult));
                }
                Primality::Composite => {
                    // perfect powers are common here (squares of shifted
                    // values); reducing them keeps rho off large inputs
                    if let Some((root, k)) = perfect_power(&c) {
                        pending.push((root, mult * k));
                        continue;
                    }
                    match split_composite(&c, &mut rng, &budget) {
                        Some(f) => {
                            let other = &c / &f;
                            pending.push((f, mult));
                            pending.push((other, mult));
                        }
                        None => {
                            // budget exhausted: fold everything unfactored together
                            let mut rest = c.pow(mult);
                            for (other, m) in pending.drain(..) {
                                rest *= other.pow(m);
                            }
                            cofactor = Some(rest);
                        }
                    }
                }
            }
        }
    }

    factors.sort_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(BigInt, u32)> = Vec::with_capacity(factors.len());
    for (p, e) in factors {
        let p = BigInt::from_biguint(Sign::Plus, p);
        match merged.last_mut() {
            Some((q, me)) if *q == p => *me += e,
            _ => merged.push((p, e)),
        }
    }
    Ok(Factorization {
        value,
        factors: merged,
        cofactor: cofactor.map(|c| BigInt::from_biguint(Sign::Plus, c)),
    })
}

/// Least prime dividing `|n|`, for `|n| >= 2`.
pub fn smallest_prime_factor(n: &BigInt, policy: &FactorPolicy) -> Result<BigInt, ArithError> {
    let v = n.magnitude();
    if v <= &BigUint::one() {
        return Err(ArithError::NoPrimeDivisor);
    }
    if primality_big(v) != Primality::Composite {
        return Ok(BigInt::from_biguint(Sign::Plus, v.clone()));
    }
    if let Some(small) = v.to_u128() {
        for &p in sieve_primes() {
            let p = p as u128;
            if small % p == 0 {
                return Ok(BigInt::from(p));
            }
            if p * p > small {
                // unreachable for a composite, kept as a safeguard
                return Ok(BigInt::from_biguint(Sign::Plus, v.clone()));
            }
        }
    } else {
        for &p in sieve_primes() {
            if (v % BigUint::from(p)).is_zero() {
                return Ok(BigInt::from(p));
            }
        }
    }
    // all prime factors exceed the sieve; a full factorization is required
    let fac = factorize(n, policy)?;
    if !fac.complete() {
        return Err(ArithError::BudgetExceeded);
    }
    Ok(fac.factors()[0].0.clone())
}

/// Exact p-adic valuation of `n`; infinite for `n = 0`.
pub fn vp(n: &BigInt, p: &BigInt) -> Result<Valuation, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime);
    }
    Ok(vp_unchecked(n, p))
}

/// Valuation without re-verifying primality of `p`; for callers that already
/// hold `p` from a factorization.
pub(crate) fn vp_unchecked(n: &BigInt, p: &BigInt) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let p = p.magnitude();
    let mut m = n.magnitude().clone();
    let mut e = 0u64;
    loop {
        let (q, r) = m.div_rem(p);
        if r.is_zero() {
            m = q;
            e += 1;
        } else {
            return Valuation::Finite(e);
        }
    }
}

/// Exact comparison `a/b < c/d` by cross-multiplication; true whenever the
/// valuation `c` is infinite. Both denominators must be positive.
pub fn frac_lt(a: u64, b: u64, c: Valuation, d: u64) -> bool {
    debug_assert!(b > 0 && d > 0);
    match c {
        Valuation::Infinite => true,
        Valuation::Finite(c) => (a as u128) * (d as u128) < (c as u128) * (b as u128),
    }
}

/// Exact comparison `a/b <= c/d`; true whenever `c` is infinite.
pub fn frac_le(a: u64, b: u64, c: Valuation, d: u64) -> bool {
    debug_assert!(b > 0 && d > 0);
    match c {
        Valuation::Infinite => true,
        Valuation::Finite(c) => (a as u128) * (d as u128) <= (c as u128) * (b as u128),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn is_prime_examples() {
        assert!(is_prime(&bi(13691)));
        assert!(!is_prime(&bi(4)));
        assert!(is_prime(&bi(117541)));
        assert!(!is_prime(&bi(1)));
        assert!(is_prime(&bi(2)));
    }

    #[test]
    fn is_prime_agrees_with_trial_division_to_a_million() {
        let mut is_comp = vec![false; SIEVE_LIMIT];
        for n in 2..SIEVE_LIMIT {
            if !is_comp[n] {
                let mut m = n * n;
                while m < SIEVE_LIMIT {
                    is_comp[m] = true;
                    m += n;
                }
            }
        }
        for n in 2..SIEVE_LIMIT as u64 {
            assert_eq!(mr_u64(n), !is_comp[n as usize], "disagreement at {n}");
        }
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&bi(9797), &FactorPolicy::default()).unwrap();
        assert!(f.complete());
        assert_eq!(f.factors(), &[(bi(97), 1), (bi(101), 1)]);

        let f = factorize(&bi(14406), &FactorPolicy::default()).unwrap();
        assert!(f.complete());
        assert_eq!(f.factors(), &[(bi(2), 1), (bi(3), 1), (bi(7), 4)]);

        let f = factorize(&bi(1), &FactorPolicy::default()).unwrap();
        assert!(f.complete());
        assert!(f.factors().is_empty());

        assert_eq!(factorize(&bi(0), &FactorPolicy::default()), Err(ArithError::ZeroArgument));
    }

    #[test]
    fn factorize_normalizes_sign() {
        let f = factorize(&bi(-12), &FactorPolicy::default()).unwrap();
        assert_eq!(f.value(), &bi(12));
        assert_eq!(f.factors(), &[(bi(2), 2), (bi(3), 1)]);
    }

    #[test]
    fn factorize_reassembles_random_values() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n: u64 = rng.gen_range(2..=1_000_000_000_000_000_000);
            let f = factorize(&BigInt::from(n), &FactorPolicy::default()).unwrap();
            assert_eq!(f.reassemble(), BigInt::from(n));
            assert!(f.complete(), "budget should suffice for {n}");
            for (p, _) in f.factors() {
                assert!(is_prime(p));
            }
        }
    }

    #[test]
    fn factorize_large_semiprime_with_rho() {
        // both factors exceed the trial-division sieve
        let p = bi(1_000_003);
        let q = bi(1_000_033);
        let f = factorize(&(&p * &q), &FactorPolicy::default()).unwrap();
        assert!(f.complete());
        assert_eq!(f.factors(), &[(p, 1), (q, 1)]);
    }

    #[test]
    fn incomplete_factorization_reports_cofactor() {
        // RSA-100, far beyond any 1 ms budget
        let n: BigInt =
            "15226050279225333605356183781326374297180681149613806886579084945801229632589528976540003506920061394255142800"
                .parse::<BigInt>()
                .unwrap()
                * 97i32;
        let f = factorize(&n, &FactorPolicy { budget_ms: 1, seed: 1 }).unwrap();
        assert_eq!(f.reassemble(), n.abs());
        if !f.complete() {
            let c = f.cofactor().unwrap();
            assert!(c > &BigInt::one());
        }
    }

    #[test]
    fn smallest_prime_factor_examples() {
        let policy = FactorPolicy::default();
        assert_eq!(smallest_prime_factor(&(bi(-4051) * bi(10111)), &policy).unwrap(), bi(4051));
        assert_eq!(smallest_prime_factor(&bi(128), &policy).unwrap(), bi(2));
        let sq = bi(117541) * bi(117541);
        assert_eq!(smallest_prime_factor(&sq, &policy).unwrap(), bi(117541));
        assert_eq!(smallest_prime_factor(&bi(1), &policy), Err(ArithError::NoPrimeDivisor));
        assert_eq!(smallest_prime_factor(&bi(0), &policy), Err(ArithError::NoPrimeDivisor));
    }

    #[test]
    fn smallest_prime_factor_divides_and_is_minimal() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let policy = FactorPolicy::default();
        for _ in 0..200 {
            let n: u64 = rng.gen_range(2..=10_000_000);
            let p = smallest_prime_factor(&BigInt::from(n), &policy).unwrap();
            let pv = p.to_u64().unwrap();
            assert_eq!(n % pv, 0);
            for d in 2..pv {
                assert_ne!(n % d, 0);
            }
        }
    }

    #[test]
    fn vp_examples() {
        assert_eq!(vp(&bi(48), &bi(2)).unwrap(), Valuation::Finite(4));
        assert_eq!(vp(&(bi(11).pow(3) * bi(54)), &bi(11)).unwrap(), Valuation::Finite(3));
        assert_eq!(vp(&bi(0), &bi(7)).unwrap(), Valuation::Infinite);
        assert_eq!(vp(&bi(10), &bi(4)), Err(ArithError::NotPrime));
    }

    #[test]
    fn vp_is_the_exact_valuation() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let p = [2i64, 3, 5, 7, 11, 13][rng.gen_range(0..6)];
            let e = rng.gen_range(0..8u32);
            let rest: i64 = loop {
                let r = rng.gen_range(1..10_000i64);
                if r % p != 0 {
                    break r;
                }
            };
            let n = bi(p).pow(e) * bi(rest);
            assert_eq!(vp(&n, &bi(p)).unwrap(), Valuation::Finite(e as u64));
        }
    }

    #[test]
    fn frac_comparisons() {
        assert!(frac_lt(1, 2, Valuation::Finite(1), 1));
        assert!(frac_lt(1, 2, Valuation::Infinite, 1));
        assert!(!frac_lt(2, 3, Valuation::Finite(2), 3));
        assert!(frac_le(2, 3, Valuation::Finite(2), 3));
        assert!(!frac_le(3, 2, Valuation::Finite(1), 1));
    }

    #[test]
    fn primality_classes() {
        assert_eq!(primality(&bi(97)), Primality::Prime);
        assert_eq!(primality(&bi(98)), Primality::Composite);
        // beyond u64 but inside the deterministic Miller-Rabin range
        let p21: BigInt = "1000000000000000000117".parse().unwrap();
        assert_eq!(primality(&p21), Primality::Prime);
        assert_eq!(primality(&(p21 + 2)), Primality::Composite);
        // a prime above 3.3e24 is only ever probable
        let big: BigInt = "1000000000000000000000000000057".parse().unwrap();
        assert_eq!(primality(&big), Primality::ProbablePrime);
    }
}
