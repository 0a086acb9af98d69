//! Checkers for the valuation criteria: four shifted-argument theorems
//! (T1-T4, applied to `f(m + z)` at an integer witness `m`) and three direct
//! lemma forms (L3-L5, applied to a polynomial's own coefficients, gated by
//! a coefficient-dominance root-exclusion test).
//!
//! Every successful check yields a [`Certificate`] that an independent
//! verifier can replay using integer arithmetic only. Checks never guess:
//! a definite hypothesis violation reports `HypothesisFailed`, while budget
//! exhaustion or an unverifiable root-location premise reports
//! `Inconclusive`.

use crate::arith::{self, FactorPolicy, Primality, Valuation};
use crate::newton::DegreeBound;
use crate::poly::{PolyError, Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("the zero polynomial has no factorization bound")]
    ZeroPolynomial,
    #[error("constant term or leading coefficient is zero")]
    ZeroEndCoefficient,
    #[error("criteria require degree at least one")]
    DegreeTooLow,
    #[error("witness is a root of the polynomial")]
    WitnessIsRoot,
    #[error(transparent)]
    Arith(#[from] arith::ArithError),
}

impl From<PolyError> for CriteriaError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::ZeroPolynomial => CriteriaError::ZeroPolynomial,
            PolyError::DegreeTooLow => CriteriaError::DegreeTooLow,
            PolyError::ZeroConstantTerm => CriteriaError::ZeroEndCoefficient,
        }
    }
}

/// Which criterion a certificate records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    L3,
    L4,
    L5,
    /// Irreducibility forced by the factor-degree floor alone.
    Np,
}

impl TheoremId {
    pub fn tag(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::L3 => "L3",
            TheoremId::L4 => "L4",
            TheoremId::L5 => "L5",
            TheoremId::Np => "NP",
        }
    }

    pub fn from_tag(tag: &str) -> Option<TheoremId> {
        Some(match tag {
            "T1" => TheoremId::T1,
            "T2" => TheoremId::T2,
            "T3" => TheoremId::T3,
            "T4" => TheoremId::T4,
            "L3" => TheoremId::L3,
            "L4" => TheoremId::L4,
            "L5" => TheoremId::L5,
            "NP" => TheoremId::Np,
            _ => return None,
        })
    }

    /// Selection order among certificates with equal bounds: fewer side
    /// conditions first.
    pub fn preference_rank(self) -> u8 {
        match self {
            TheoremId::T1 => 0,
            TheoremId::T2 => 1,
            TheoremId::T3 => 2,
            TheoremId::T4 => 3,
            TheoremId::L4 => 4,
            TheoremId::L5 => 5,
            TheoremId::L3 => 6,
            TheoremId::Np => 7,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Whether every prime named in a certificate passed a deterministic
/// primality test, or only a probabilistic one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeCertainty {
    Deterministic,
    Probable,
}

/// One prime power from the factored quantity, with the witness index `j`
/// for the criteria that use one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertPrime {
    pub p: BigInt,
    pub k: u32,
    pub j: Option<u32>,
}

/// Self-contained record of a successful criterion application. Every field
/// is re-derivable from `content * poly` (reversed when flagged) and the
/// stored witnesses; the verifier replays all conditions exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub theorem: TheoremId,
    /// Primitive part the conditions were checked on.
    pub poly: Polynomial,
    /// Positive content extracted from the analyzed polynomial.
    pub content: BigInt,
    /// Shift witness; absent for the direct lemmas and NP.
    pub m: Option<BigInt>,
    /// Conditions apply to the coefficient reversal of `poly`.
    pub reversed: bool,
    /// Sign of the factored quantity.
    pub sign: i8,
    pub primes: Vec<CertPrime>,
    /// Cofactor `d` for the single-prime criteria.
    pub d: Option<BigInt>,
    /// Smallest prime divisor of the relevant constant term.
    pub q: Option<BigInt>,
    /// Factor-degree floor in force, where one is part of the hypothesis.
    pub delta: Option<DegreeBound>,
    /// Claimed maximum number of irreducible factors; 1 means irreducible.
    pub bound: u32,
    pub prime_certainty: PrimeCertainty,
}

/// Result of one criterion application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionOutcome {
    Certified(Box<Certificate>),
    /// A hypothesis of the criterion definitely fails; the string names the
    /// first violated condition.
    HypothesisFailed(String),
    /// The check could not be completed (factoring budget, unverifiable
    /// root location); the criterion may still hold.
    Inconclusive(String),
}

impl CriterionOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CriterionOutcome::Certified(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, CriterionOutcome::Certified(_))
    }
}

fn certainty_of(primes: &[&BigInt]) -> PrimeCertainty {
    for p in primes {
        if arith::primality(p) == Primality::ProbablePrime {
            return PrimeCertainty::Probable;
        }
    }
    PrimeCertainty::Deterministic
}

fn sign_of(n: &BigInt) -> i8 {
    if n.is_negative() {
        -1
    } else {
        1
    }
}

/// Normalizes to the primitive part and validates the end coefficients.
fn prepare(f: &Polynomial) -> Result<(BigInt, Polynomial), CriteriaError> {
    if f.is_zero() {
        return Err(CriteriaError::ZeroPolynomial);
    }
    if f.degree() < 1 {
        return Err(CriteriaError::DegreeTooLow);
    }
    if f.coeffs()[0].is_zero() {
        return Err(CriteriaError::ZeroEndCoefficient);
    }
    let (content, prim) = f.primitive_part()?;
    Ok((content, prim))
}

/// `m >= h_f + 2`, compared exactly.
fn witness_large_enough(m: &BigInt, h: &Rational) -> bool {
    Rational::from(m.clone()) >= &h.clone() + &Rational::from(2)
}

/// Smallest index `j` in `1..=n` satisfying the per-prime conditions of the
/// T1 family. `from_top` selects the leading-coefficient variant, which
/// reads the shifted values as `s_{n-j}`.
fn find_smallest_j(s: &[BigInt], p: &BigInt, k: u32, from_top: bool) -> Option<usize> {
    let n = s.len() - 1;
    let at = |t: usize| if from_top { &s[n - t] } else { &s[t] };
    'next_j: for j in 1..=n {
        if arith::vp_unchecked(at(j), p) != Valuation::Finite(0) {
            continue;
        }
        if (k as u64).gcd(&(j as u64)) != 1 {
            continue;
        }
        for t in 1..j {
            if !arith::frac_lt(k as u64, j as u64, arith::vp_unchecked(at(t), p), (j - t) as u64) {
                continue 'next_j;
            }
        }
        return Some(j);
    }
    None
}

/// Shared j-search driver for T1/T2/L4: finds the smallest valid index for
/// every prime or names the prime that admits none.
fn assign_indices(
    s: &[BigInt],
    factors: &[(BigInt, u32)],
    from_top: bool,
) -> Result<Vec<CertPrime>, String> {
    let mut out = Vec::with_capacity(factors.len());
    for (p, k) in factors {
        match find_smallest_j(s, p, *k, from_top) {
            Some(j) => out.push(CertPrime { p: p.clone(), k: *k, j: Some(j as u32) }),
            None => return Err(format!("no_valid_j(p={p})")),
        }
    }
    Ok(out)
}

/// Constant-term criterion at a shift witness: factors `f(m)` completely and
/// requires, for each prime, an index with unit valuation and the slope
/// conditions; the bound is the number of distinct primes.
pub fn check_theorem1(
    f: &Polynomial,
    m: &BigInt,
    policy: &FactorPolicy,
) -> Result<CriterionOutcome, CriteriaError> {
    let (content, fp) = prepare(f)?;
    let fm = fp.evaluate(m);
    if fm.is_zero() {
        return Err(CriteriaError::WitnessIsRoot);
    }
    let h = fp.height()?;
    if !witness_large_enough(m, &h) {
        return Ok(CriterionOutcome::HypothesisFailed("m_too_small".into()));
    }
    if fm.abs().is_one() {
        return Ok(CriterionOutcome::HypothesisFailed("unit_value".into()));
    }
    let fac = arith::factorize(&fm, policy)?;
    if !fac.complete() {
        return Ok(CriterionOutcome::Inconclusive("incomplete_factorization".into()));
    }
    let shift = fp.taylor_shift(m)?;
    let primes = match assign_indices(shift.values(), fac.factors(), false) {
        Ok(ps) => ps,
        Err(detail) => return Ok(CriterionOutcome::HypothesisFailed(detail)),
    };
    let certainty = certainty_of(&fac.factors().iter().map(|(p, _)| p).collect::<Vec<_>>());
    let bound = primes.len() as u32;
    Ok(CriterionOutcome::Certified(Box::new(Certificate {
        theorem: TheoremId::T1,
        poly: fp,
        content,
        m: Some(m.clone()),
        reversed: false,
        sign: sign_of(&fm),
        primes,
        d: None,
        q: None,
        delta: None,
        bound,
        prime_certainty: certainty,
    })))
}

/// Applies the `|s_0/q| <= |s_n|` side condition shared by the
/// leading-coefficient criteria. Returns the certified `q` or an outcome.
fn q_condition(
    s0: &BigInt,
    sn_abs: &BigInt,
    policy: &FactorPolicy,
) -> Result<Result<BigInt, CriterionOutcome>, CriteriaError> {
    if s0.abs().is_one() {
        return Ok(Err(CriterionOutcome::HypothesisFailed("no_q".into())));
    }
    let q = match arith::smallest_prime_factor(s0, policy) {
        Ok(q) => q,
        Err(arith::ArithError::BudgetExceeded) => {
            return Ok(Err(CriterionOutcome::Inconclusive("q_budget_exceeded".into())))
        }
        Err(e) => return Err(e.into()),
    };
    if &(s0.abs() / &q) > sn_abs {
        return Ok(Err(CriterionOutcome::HypothesisFailed("q_bound".into())));
    }
    Ok(Ok(q))
}

/// Leading-term criterion at a shift witness: factors `s_n(m) = a_n`,
/// checks `|s_0(m)/q| <= |s_n(m)|`, and searches indices against the top
/// shifted coefficients.
pub fn check_theorem2(
    f: &Polynomial,
    m: &BigInt,
    policy: &FactorPolicy,
) -> Result<CriterionOutcome, CriteriaError> {
    let (content, fp) = prepare(f)?;
    let s0 = fp.evaluate(m);
    if s0.is_zero() {
        return Err(CriteriaError::WitnessIsRoot);
    }
    let h = fp.height()?;
    if !witness_large_enough(m, &h) {
        return Ok(CriterionOutcome::HypothesisFailed("m_too_small".into()));
    }
    let an = fp.leading().clone();
    if an.abs().is_one() {
        return Ok(CriterionOutcome::HypothesisFailed("unit_leading_coefficient".into()));
    }
    let fac = arith::factorize(&an, policy)?;
    if !fac.complete() {
        return Ok(CriterionOutcome::Inconclusive("incomplete_factorization".into()));
    }
    let q = match q_condition(&s0, &an.abs(), policy)? {
        Ok(q) => q,
        Err(outcome) => return Ok(outcome),
    };
    let shift = fp.taylor_shift(m)?;
    let primes = match assign_indices(shift.values(), fac.factors(), true) {
        Ok(ps) => ps,
        Err(detail) => return Ok(CriterionOutcome::HypothesisFailed(detail)),
    };
    let certainty = certainty_of(
        &fac.factors().iter().map(|(p, _)| p).chain(std::iter::once(&q)).collect::<Vec<_>>(),
    );
    let bound = primes.len() as u32;
    Ok(CriterionOutcome::Certified(Box::new(Certificate {
        theorem: TheoremId::T2,
        poly: fp,
        content,
        m: Some(m.clone()),
        reversed: false,
        sign: sign_of(&an),
        primes,
        d: None,
        q: Some(q),
        delta: None,
        bound,
        prime_certainty: certainty,
    })))
}

/// `(m - 1 - h_f)^delta >= d`, compared exactly; requires a nonnegative base.
fn gap_power_at_least(m: &BigInt, h: &Rational, delta: usize, d: &BigInt) -> Option<bool> {
    let base = &Rational::from(m - 1) - h;
    if base.is_negative() {
        return None;
    }
    Some(base.pow(delta as u32) >= Rational::from(d.clone()))
}

/// Bound `min_{0<=i<=n} (i + v_p(s_i))` over a coefficient sequence.
fn min_index_plus_valuation(s: &[BigInt], p: &BigInt) -> u64 {
    let mut best = u64::MAX;
    for (i, si) in s.iter().enumerate() {
        if let Valuation::Finite(v) = arith::vp_unchecked(si, p) {
            best = best.min(i as u64 + v);
        }
    }
    best
}

/// Bound `min_{1<=i<=n} min(k, i + v_p(s_{n-i}))`.
fn min_top_valuation(s: &[BigInt], p: &BigInt, k: u32) -> u64 {
    let n = s.len() - 1;
    let mut best = k as u64;
    for i in 1..=n {
        if let Valuation::Finite(v) = arith::vp_unchecked(&s[n - i], p) {
            best = best.min(i as u64 + v);
        }
    }
    best
}

/// Constant-term prime-power criterion: writes `f(m) = sign * p^k * d`,
/// requires `(m - 1 - h_f)^delta >= d`, and bounds the factor count by
/// `min_i (i + v_p(s_i(m)))`. Every prime of `f(m)` is tried as `p`; the
/// smallest resulting bound wins.
pub fn check_theorem3(
    f: &Polynomial,
    m: &BigInt,
    delta: &DegreeBound,
    policy: &FactorPolicy,
) -> Result<CriterionOutcome, CriteriaError> {
    let (content, fp) = prepare(f)?;
    let h = fp.height()?;
    let fm = fp.evaluate(m);
    if fm.is_zero() {
        return Err(CriteriaError::WitnessIsRoot);
    }
    if fm.abs().is_one() {
        return Ok(CriterionOutcome::HypothesisFailed("unit_value".into()));
    }
    let fac = arith::factorize(&fm, policy)?;
    if !fac.complete() {
        return Ok(CriterionOutcome::Inconclusive("incomplete_factorization".into()));
    }
    let shift = fp.taylor_shift(m)?;
    let fm_abs = fm.abs();
    let mut best: Option<(u64, BigInt, u32, BigInt)> = None;
    for (p, k) in fac.factors() {
        let d = &fm_abs / p.pow(*k);
        match gap_power_at_least(m, &h, delta.bound, &d) {
            None => return Ok(CriterionOutcome::HypothesisFailed("m_too_small".into())),
            Some(false) => continue,
            Some(true) => {}
        }
        let bound = min_index_plus_valuation(shift.values(), p);
        if best.as_ref().is_none_or(|(b, ..)| bound < *b) {
            best = Some((bound, p.clone(), *k, d));
        }
    }
    let Some((bound, p, k, d)) = best else {
        return Ok(CriterionOutcome::HypothesisFailed("d_too_large".into()));
    };
    let certainty = certainty_of(&[&p]);
    Ok(CriterionOutcome::Certified(Box::new(Certificate {
        theorem: TheoremId::T3,
        poly: fp,
        content,
        m: Some(m.clone()),
        reversed: false,
        sign: sign_of(&fm),
        primes: vec![CertPrime { p, k, j: None }],
        d: Some(d),
        q: None,
        delta: Some(delta.clone()),
        bound: bound as u32,
        prime_certainty: certainty,
    })))
}

/// Leading-term prime-power criterion: writes `s_n(m) = a_n = sign * p^k * d`
/// with the same gap condition, plus `|s_0(m)/q| <= |s_n(m)|`; the bound is
/// `min_i min(k, i + v_p(s_{n-i}(m)))`.
pub fn check_theorem4(
    f: &Polynomial,
    m: &BigInt,
    delta: &DegreeBound,
    policy: &FactorPolicy,
) -> Result<CriterionOutcome, CriteriaError> {
    let (content, fp) = prepare(f)?;
    let h = fp.height()?;
    let s0 = fp.evaluate(m);
    if s0.is_zero() {
        return Err(CriteriaError::WitnessIsRoot);
    }
    let an = fp.leading().clone();
    if an.abs().is_one() {
        return Ok(CriterionOutcome::HypothesisFailed("unit_leading_coefficient".into()));
    }
    let fac = arith::factorize(&an, policy)?;
    if !fac.complete() {
        return Ok(CriterionOutcome::Inconclusive("incomplete_factorization".into()));
    }
    let q = match q_condition(&s0, &an.abs(), policy)? {
        Ok(q) => q,
        Err(outcome) => return Ok(outcome),
    };
    let shift = fp.taylor_shift(m)?;
    let an_abs = an.abs();
    let mut best: Option<(u64, BigInt, u32, BigInt)> = None;
    for (p, k) in fac.factors() {
        let d = &an_abs / p.pow(*k);
        match gap_power_at_least(m, &h, delta.bound, &d) {
            None => return Ok(CriterionOutcome::HypothesisFailed("m_too_small".into())),
            Some(false) => continue,
            Some(true) => {}
        }
        let bound = min_top_valuation(shift.values(), p, *k);
        if best.as_ref().is_none_or(|(b, ..)| bound < *b) {
            best = Some((bound, p.clone(), *k, d));
        }
    }
    let Some((bound, p, k, d)) = best else {
        return Ok(CriterionOutcome::HypothesisFailed("d_too_large".into()));
    };
    let certainty = certainty_of(&[&p, &q]);
    Ok(CriterionOutcome::Certified(Box::new(Certificate {
        theorem: TheoremId::T4,
        poly: fp,
        content,
        m: Some(m.clone()),
        reversed: false,
        sign: sign_of(&an),
        primes: vec![CertPrime { p, k, j: None }],
        d: Some(d),
        q: Some(q),
        delta: Some(delta.clone()),
        bound: bound as u32,
        prime_certainty: certainty,
    })))
}

/// Sufficient zero-exclusion test: `sum_{i>=1} |s_i| rho^i < |s_0|` forces
/// every complex zero outside `|z| <= rho`. A false result says nothing
/// about the zeros.
pub fn root_exclusion(g: &Polynomial, rho: &Rational) -> Result<bool, CriteriaError> {
    if g.is_zero() {
        return Err(CriteriaError::ZeroPolynomial);
    }
    if g.coeffs()[0].is_zero() {
        return Err(CriteriaError::ZeroEndCoefficient);
    }
    let n = g.degree();
    let num = rho.num();
    let den = rho.den();
    // sum |s_i| num^i den^(n-i) < |s_0| den^n, all integers
    let mut lhs = BigInt::zero();
    for (i, c) in g.coeffs().iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        lhs += c.abs() * num.pow(i as u32) * den.pow((n - i) as u32);
    }
    Ok(lhs < g.coeffs()[0].abs() * den.pow(n as u32))
}

const ROOT_DENOMINATOR: u64 = 10_000;

/// Smallest rational with denominator 10^4 whose `delta`-th power reaches
/// `d`; an exact upper bound for the real root within 10^-4.
pub fn nth_root_upper(d: &BigInt, delta: usize) -> Rational {
    assert!(d.is_positive() && delta >= 1);
    let den = BigInt::from(ROOT_DENOMINATOR);
    let target = d * den.pow(delta as u32);
    let mut lo = BigInt::one(); // lo^delta < target is maintained once true
    let mut hi = (d + 1) * &den;
    if lo.pow(delta as u32) >= target {
        hi = lo.clone();
    }
    while &lo + 1 < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if mid.pow(delta as u32) >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Rational::new(hi, den)
}

/// Direct constant-term criterion on a polynomial's own coefficients:
/// `s_0 = sign * p^k * d`, zeros excluded from `|z| <= d^(1/delta)` by the
/// dominance test, bound `min_i (i + v_p(s_i))`.
pub fn check_lemma3_direct(
    g: &Polynomial,
    delta: &DegreeBound,
    policy: &FactorPolicy,
) -> Result<CriterionOutcome, CriteriaError> {
    let (content, gp) = prepare(g)?;
    let s0 = gp.coeffs()[0].clone();
    if s0.abs().is_one() {
        return Ok(CriterionOutcome::HypothesisFailed("unit_constant_term".into()));
    }
    let fac = arith::factorize(&s0, policy)?;
    if !fac.complete() {
        return Ok(CriterionOutcome::Inconclusive("incomplete_factorization".into()));
    }
    let s0_abs = s0.abs();
    let mut best: Option<(u64, BigInt, u32, BigInt)> = None;
    for (p, k) in fac.factors() {
        let d = &s0_abs / p.pow(*k);
        let rho = nth_root_upper(&d, delta.bound);
        if !root_exclusion(&gp, &rho)? {
            continue;
        }
        let bound = min_index_plus_valuation(gp.coeffs(), p);
        if best.as_ref().is_none_or(|(b, ..)| bound < *b) {
            best = Some((bound, p.clone(), *k, d));
        }
    }
    let Some((bound, p, k, d)) = best else {
        return Ok(CriterionOutcome::Inconclusive("root_location_unverified".into()));
    };
    let certainty = certainty_of(&[&p]);
    Ok(CriterionOutcome::Certified(Box::new(Certificate {
        theorem: TheoremId::L3,
        poly: gp,
        content,
        m: None,
        reversed: false,
        sign: sign_of(&s0),
        primes: vec![CertPrime { p, k, j: None }],
        d: Some(d),
        q: None,
        delta: Some(delta.clone()),
        bound: bound as u32,
        prime_certainty: certainty,
    })))
}

/// Direct leading-term criterion: zeros excluded from the closed unit disc,
/// `s_n` factored into `r` primes, the `q` condition, and per-prime index
/// search; bound `r`.
pub fn check_lemma4_direct(
    g: &Polynomial,
    policy: &FactorPolicy,
) -> Result<CriterionOutcome, CriteriaError> {
    let (content, gp) = prepare(g)?;
    let sn = gp.leading().clone();
    if sn.abs().is_one() {
        return Ok(CriterionOutcome::HypothesisFailed("unit_leading_coefficient".into()));
    }
    let s0 = gp.coeffs()[0].clone();
    if s0.abs().is_one() {
        return Ok(CriterionOutcome::HypothesisFailed("no_q".into()));
    }
    let fac = arith::factorize(&sn, policy)?;
    if !fac.complete() {
        return Ok(CriterionOutcome::Inconclusive("incomplete_factorization".into()));
    }
    let q = match q_condition(&s0, &sn.abs(), policy)? {
        Ok(q) => q,
        Err(outcome) => return Ok(outcome),
    };
    if !root_exclusion(&gp, &Rational::one())? {
        return Ok(CriterionOutcome::Inconclusive("root_location_unverified".into()));
    }
    let primes = match assign_indices(gp.coeffs(), fac.factors(), true) {
        Ok(ps) => ps,
        Err(detail) => return Ok(CriterionOutcome::HypothesisFailed(detail)),
    };
    let certainty = certainty_of(
        &fac.factors().iter().map(|(p, _)| p).chain(std::iter::once(&q)).collect::<Vec<_>>(),
    );
    let bound = primes.len() as u32;
    Ok(CriterionOutcome::Certified(Box::new(Certificate {
        theorem: TheoremId::L4,
        poly: gp,
        content,
        m: None,
        reversed: false,
        sign: sign_of(&sn),
        primes,
        d: None,
        q: Some(q),
        delta: None,
        bound,
        prime_certainty: certainty,
    })))
}

/// Direct leading-term prime-power criterion: `s_n = sign * p^k * d`, zeros
/// excluded from `|z| <= d^(1/delta)`, the `q` condition, bound
/// `min_i min(k, i + v_p(s_{n-i}))`.
pub fn check_lemma5_direct(
    g: &Polynomial,
    delta: &DegreeBound,
    policy: &FactorPolicy,
) -> Result<CriterionOutcome, CriteriaError> {
    let (content, gp) = prepare(g)?;
    let sn = gp.leading().clone();
    if sn.abs().is_one() {
        return Ok(CriterionOutcome::HypothesisFailed("unit_leading_coefficient".into()));
    }
    let s0 = gp.coeffs()[0].clone();
    if s0.abs().is_one() {
        return Ok(CriterionOutcome::HypothesisFailed("no_q".into()));
    }
    let fac = arith::factorize(&sn, policy)?;
    if !fac.complete() {
        return Ok(CriterionOutcome::Inconclusive("incomplete_factorization".into()));
    }
    let q = match q_condition(&s0, &sn.abs(), policy)? {
        Ok(q) => q,
        Err(outcome) => return Ok(outcome),
    };
    let sn_abs = sn.abs();
    let mut best: Option<(u64, BigInt, u32, BigInt)> = None;
    for (p, k) in fac.factors() {
        let d = &sn_abs / p.pow(*k);
        let rho = nth_root_upper(&d, delta.bound);
        if !root_exclusion(&gp, &rho)? {
            continue;
        }
        let bound = min_top_valuation(gp.coeffs(), p, *k);
        if best.as_ref().is_none_or(|(b, ..)| bound < *b) {
            best = Some((bound, p.clone(), *k, d));
        }
    }
    let Some((bound, p, k, d)) = best else {
        return Ok(CriterionOutcome::Inconclusive("root_location_unverified".into()));
    };
    let certainty = certainty_of(&[&p, &q]);
    Ok(CriterionOutcome::Certified(Box::new(Certificate {
        theorem: TheoremId::L5,
        poly: gp,
        content,
        m: None,
        reversed: false,
        sign: sign_of(&sn),
        primes: vec![CertPrime { p, k, j: None }],
        d: Some(d),
        q: Some(q),
        delta: Some(delta.clone()),
        bound: bound as u32,
        prime_certainty: certainty,
    })))
}
