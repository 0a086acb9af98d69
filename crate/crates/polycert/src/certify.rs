//! Orchestration: witness search over shift arguments, certificate
//! selection, JSON serialization, and independent certificate verification.
//!
//! [`analyze`] drives every enabled checker and reports the best certificate
//! found; [`verify_certificate`] replays a certificate's conditions from the
//! polynomial and the stored witnesses alone, sharing no state with the
//! search path beyond the arithmetic kernels.

use crate::arith::{self, FactorPolicy, Valuation, DEFAULT_BUDGET_MS, DEFAULT_SEED};
use crate::criteria::{
    self, CertPrime, Certificate, CriteriaError, CriterionOutcome, PrimeCertainty, TheoremId,
};
use crate::newton::{self, DegreeBound, DeltaSource, DeltaWitness};
use crate::poly::{Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("the zero polynomial cannot be analyzed")]
    ZeroPolynomial,
    #[error("analysis requires degree at least one")]
    DegreeTooLow,
    #[error("constant term or leading coefficient is zero")]
    ZeroEndCoefficient,
    #[error("empty witness range: m_max below the smallest admissible m")]
    EmptyRange,
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
}

/// Which criteria the search runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriteriaMask {
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
    pub t4: bool,
    pub l3: bool,
    pub l4: bool,
    pub l5: bool,
}

impl Default for CriteriaMask {
    fn default() -> Self {
        CriteriaMask::all()
    }
}

impl CriteriaMask {
    pub fn all() -> Self {
        CriteriaMask { t1: true, t2: true, t3: true, t4: true, l3: true, l4: true, l5: true }
    }

    pub fn none() -> Self {
        CriteriaMask { t1: false, t2: false, t3: false, t4: false, l3: false, l4: false, l5: false }
    }

    /// Parses a comma-separated list like `t1,t2,l5`.
    pub fn parse(list: &str) -> Result<Self, String> {
        let mut mask = CriteriaMask::none();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match name.to_ascii_lowercase().as_str() {
                "t1" => mask.t1 = true,
                "t2" => mask.t2 = true,
                "t3" => mask.t3 = true,
                "t4" => mask.t4 = true,
                "l3" => mask.l3 = true,
                "l4" => mask.l4 = true,
                "l5" => mask.l5 = true,
                other => return Err(format!("unknown criterion `{other}`")),
            }
        }
        Ok(mask)
    }
}

/// Search configuration for [`analyze`].
#[derive(Debug, Clone)]
pub struct AnalyzeConfig {
    pub m_min: Option<BigInt>,
    /// Upper end of the witness scan; defaults to `ceil(h_f) + 1000`.
    pub m_max: Option<BigInt>,
    /// Factoring budget per integer, in milliseconds.
    pub factor_budget_ms: u64,
    pub criteria: CriteriaMask,
    pub seed: u64,
}

impl Default for AnalyzeConfig {
    fn default() -> Self {
        AnalyzeConfig {
            m_min: None,
            m_max: None,
            factor_budget_ms: DEFAULT_BUDGET_MS,
            criteria: CriteriaMask::all(),
            seed: DEFAULT_SEED,
        }
    }
}

impl AnalyzeConfig {
    fn policy(&self) -> FactorPolicy {
        FactorPolicy { budget_ms: self.factor_budget_ms, seed: self.seed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Irreducible,
    AtMost(u32),
    Unknown,
}

/// The shift arguments the scan visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriedRange {
    pub from: BigInt,
    pub to: BigInt,
    pub count: u64,
}

#[derive(Debug, Clone, Default)]
pub struct PhaseTimings {
    pub delta_ms: u64,
    pub direct_ms: u64,
    pub scan_ms: u64,
}

/// Everything [`analyze`] learned about one polynomial.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    /// The polynomial as given, content included.
    pub poly: Polynomial,
    pub content: BigInt,
    /// Factor-degree floor established for the primitive part.
    pub delta: DegreeBound,
    /// Certificate with the smallest bound, by the deterministic preference
    /// order; absent when nothing certified.
    pub best: Option<Certificate>,
    pub all_certificates: Vec<Certificate>,
    pub tried_m: Option<TriedRange>,
    pub verdict: Verdict,
    pub timings: PhaseTimings,
}

/// Deterministic selection key: smaller bound, then fewer side conditions,
/// then the unreversed variant, then the smaller witness.
fn preference_key(c: &Certificate) -> (u32, u8, u8, BigInt) {
    (
        c.bound,
        c.theorem.preference_rank(),
        c.reversed as u8,
        c.m.clone().unwrap_or_else(BigInt::zero),
    )
}

fn select_best(certs: &[Certificate]) -> Option<Certificate> {
    certs.iter().min_by_key(|c| preference_key(c)).cloned()
}

fn verdict_of(best: &Option<Certificate>) -> Verdict {
    match best {
        Some(c) if c.bound == 1 => Verdict::Irreducible,
        Some(c) => Verdict::AtMost(c.bound),
        None => Verdict::Unknown,
    }
}

/// Rebinds a checker certificate to the analyzed polynomial: the stored
/// polynomial is always the unreversed primitive part and the content is
/// the one extracted from the input.
fn adopt(mut cert: Certificate, fp: &Polynomial, content: &BigInt, reversed: bool) -> Certificate {
    cert.poly = fp.clone();
    cert.content = content.clone();
    cert.reversed = reversed;
    cert
}

/// Runs the enabled criteria: the degree-floor shortcut, the direct lemmas
/// on the primitive part and its reversal, and the shift-witness scan.
/// Stops as soon as irreducibility (bound 1) is certified.
pub fn analyze(f: &Polynomial, config: &AnalyzeConfig) -> Result<AnalysisReport, CertifyError> {
    if f.is_zero() {
        return Err(CertifyError::ZeroPolynomial);
    }
    if f.degree() < 1 {
        return Err(CertifyError::DegreeTooLow);
    }
    if f.coeffs()[0].is_zero() {
        return Err(CertifyError::ZeroEndCoefficient);
    }
    let (content, fp) = f.primitive_part().expect("nonzero");
    let policy = config.policy();

    let t_delta = Instant::now();
    let delta = newton::best_delta(&fp, &policy);
    let mut timings = PhaseTimings { delta_ms: t_delta.elapsed().as_millis() as u64, ..Default::default() };

    let mut certs: Vec<Certificate> = Vec::new();

    // A two-way split needs degree at least 2*delta, so a strictly smaller
    // degree is irreducible outright.
    if newton::irreducible_by_degree(&fp, &delta) {
        let cert = Certificate {
            theorem: TheoremId::Np,
            poly: fp.clone(),
            content: content.clone(),
            m: None,
            reversed: false,
            sign: 1,
            primes: Vec::new(),
            d: None,
            q: None,
            delta: Some(delta.clone()),
            bound: 1,
            prime_certainty: PrimeCertainty::Deterministic,
        };
        certs.push(cert);
        let best = select_best(&certs);
        let verdict = verdict_of(&best);
        return Ok(AnalysisReport {
            poly: f.clone(),
            content,
            delta,
            best,
            all_certificates: certs,
            tried_m: None,
            verdict,
            timings,
        });
    }

    let mut done = false;

    // direct lemmas, on the polynomial and on its coefficient reversal
    let t_direct = Instant::now();
    if config.criteria.l3 || config.criteria.l4 || config.criteria.l5 {
        let rev = fp.reverse().expect("a_0 != 0");
        let delta_rev = newton::best_delta(&rev, &policy);
        for (g, reversed, dlt) in [(&fp, false, &delta), (&rev, true, &delta_rev)] {
            if config.criteria.l4 {
                if let CriterionOutcome::Certified(c) = criteria::check_lemma4_direct(g, &policy)? {
                    certs.push(adopt(*c, &fp, &content, reversed));
                }
            }
            if config.criteria.l5 {
                if let CriterionOutcome::Certified(c) = criteria::check_lemma5_direct(g, dlt, &policy)? {
                    certs.push(adopt(*c, &fp, &content, reversed));
                }
            }
            if config.criteria.l3 {
                if let CriterionOutcome::Certified(c) = criteria::check_lemma3_direct(g, dlt, &policy)? {
                    certs.push(adopt(*c, &fp, &content, reversed));
                }
            }
            if certs.iter().any(|c| c.bound == 1) {
                done = true;
                break;
            }
        }
    }
    timings.direct_ms = t_direct.elapsed().as_millis() as u64;

    // shift-witness scan
    let mut tried: Option<TriedRange> = None;
    let scan_enabled =
        config.criteria.t1 || config.criteria.t2 || config.criteria.t3 || config.criteria.t4;
    if scan_enabled && !done {
        let t_scan = Instant::now();
        let h = fp.height().expect("degree >= 1");
        let floor: BigInt = h.ceil() + 2;
        let start = match &config.m_min {
            Some(lo) => floor.max(lo.clone()),
            None => floor,
        };
        let end = match &config.m_max {
            Some(hi) => hi.clone(),
            None => h.ceil() + 1000,
        };
        if start > end {
            return Err(CertifyError::EmptyRange);
        }
        let mut m = start.clone();
        let mut count = 0u64;
        'scan: while m <= end {
            count += 1;
            let dbg_t = Instant::now();
            type Step = (bool, u8);
            let steps: [Step; 4] = [
                (config.criteria.t1, 1),
                (config.criteria.t2, 2),
                (config.criteria.t3, 3),
                (config.criteria.t4, 4),
            ];
            for (enabled, which) in steps {
                if !enabled {
                    continue;
                }
                let outcome = match which {
                    1 => criteria::check_theorem1(&fp, &m, &policy)?,
                    2 => criteria::check_theorem2(&fp, &m, &policy)?,
                    3 => criteria::check_theorem3(&fp, &m, &delta, &policy)?,
                    _ => criteria::check_theorem4(&fp, &m, &delta, &policy)?,
                };
                if let CriterionOutcome::Certified(c) = outcome {
                    let bound = c.bound;
                    certs.push(adopt(*c, &fp, &content, false));
                    if bound == 1 {
                        tried = Some(TriedRange { from: start.clone(), to: m.clone(), count });
                        break 'scan;
                    }
                }
            }
            if dbg_t.elapsed().as_millis() > 100 {
                eprintln!("slow witness m={m}: {:?}", dbg_t.elapsed());
            }
            m += 1;
        }
        if tried.is_none() {
            tried = Some(TriedRange { from: start, to: end, count });
        }
        timings.scan_ms = t_scan.elapsed().as_millis() as u64;
    }

    let best = select_best(&certs);
    let verdict = verdict_of(&best);
    Ok(AnalysisReport {
        poly: f.clone(),
        content,
        delta,
        best,
        all_certificates: certs,
        tried_m: tried,
        verdict,
        timings,
    })
}

/// Outcome of replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Pass,
    Fail { condition: String },
}

impl Verification {
    pub fn passed(&self) -> bool {
        matches!(self, Verification::Pass)
    }
}

fn fail(condition: &str) -> Verification {
    Verification::Fail { condition: condition.into() }
}

struct Shape {
    has_m: bool,
    has_d: bool,
    has_q: bool,
    has_delta: bool,
    per_prime_j: bool,
    single_prime: bool,
    may_reverse: bool,
}

fn shape_of(theorem: TheoremId) -> Shape {
    use TheoremId::*;
    match theorem {
        T1 => Shape { has_m: true, has_d: false, has_q: false, has_delta: false, per_prime_j: true, single_prime: false, may_reverse: false },
        T2 => Shape { has_m: true, has_d: false, has_q: true, has_delta: false, per_prime_j: true, single_prime: false, may_reverse: false },
        T3 => Shape { has_m: true, has_d: true, has_q: false, has_delta: true, per_prime_j: false, single_prime: true, may_reverse: false },
        T4 => Shape { has_m: true, has_d: true, has_q: true, has_delta: true, per_prime_j: false, single_prime: true, may_reverse: false },
        L3 => Shape { has_m: false, has_d: true, has_q: false, has_delta: true, per_prime_j: false, single_prime: true, may_reverse: true },
        L4 => Shape { has_m: false, has_d: false, has_q: true, has_delta: false, per_prime_j: true, single_prime: false, may_reverse: true },
        L5 => Shape { has_m: false, has_d: true, has_q: true, has_delta: true, per_prime_j: false, single_prime: true, may_reverse: true },
        Np => Shape { has_m: false, has_d: false, has_q: false, has_delta: true, per_prime_j: false, single_prime: false, may_reverse: false },
    }
}

fn check_shape(cert: &Certificate) -> Result<(), CertifyError> {
    let mal = |msg: &str| Err(CertifyError::Malformed(msg.into()));
    if cert.sign != 1 && cert.sign != -1 {
        return mal("sign must be +1 or -1");
    }
    if cert.bound < 1 {
        return mal("bound must be at least 1");
    }
    if cert.poly.is_zero() || cert.poly.degree() < 1 {
        return mal("certificate polynomial must be nonconstant");
    }
    if cert.poly.coeffs()[0].is_zero() {
        return mal("certificate polynomial must have nonzero constant term");
    }
    if !cert.content.is_positive() {
        return mal("content must be positive");
    }
    if cert.poly.content().expect("nonzero") != BigInt::one() {
        return mal("certificate polynomial must be primitive");
    }
    let shape = shape_of(cert.theorem);
    if cert.m.is_some() != shape.has_m {
        return mal("witness m present/absent mismatch for theorem");
    }
    if cert.d.is_some() != shape.has_d {
        return mal("cofactor d present/absent mismatch for theorem");
    }
    if cert.q.is_some() != shape.has_q {
        return mal("q present/absent mismatch for theorem");
    }
    if cert.delta.is_some() != shape.has_delta {
        return mal("delta present/absent mismatch for theorem");
    }
    if cert.reversed && !shape.may_reverse {
        return mal("reversal flag is only valid for the direct lemmas");
    }
    if cert.theorem == TheoremId::Np {
        if !cert.primes.is_empty() {
            return mal("degree-floor certificates carry no primes");
        }
        if cert.sign != 1 {
            return mal("degree-floor certificates have no factored quantity; sign must be +1");
        }
    } else {
        if cert.primes.is_empty() {
            return mal("certificate needs at least one prime");
        }
        if shape.single_prime && cert.primes.len() != 1 {
            return mal("theorem uses exactly one prime");
        }
        for cp in &cert.primes {
            if cp.j.is_some() != shape.per_prime_j {
                return mal("per-prime index present/absent mismatch for theorem");
            }
        }
    }
    Ok(())
}

fn recomputed_certainty(cert: &Certificate) -> PrimeCertainty {
    let mut probable = false;
    for cp in &cert.primes {
        if arith::primality(&cp.p) == arith::Primality::ProbablePrime {
            probable = true;
        }
    }
    if let Some(q) = &cert.q {
        if arith::primality(q) == arith::Primality::ProbablePrime {
            probable = true;
        }
    }
    if probable {
        PrimeCertainty::Probable
    } else {
        PrimeCertainty::Deterministic
    }
}

fn check_prime_list(cert: &Certificate) -> Option<Verification> {
    let mut last: Option<&BigInt> = None;
    for cp in &cert.primes {
        if cp.k == 0 {
            return Some(fail("exponent_zero"));
        }
        if !arith::is_prime(&cp.p) {
            return Some(fail("not_prime"));
        }
        if let Some(prev) = last {
            if prev >= &cp.p {
                return Some(fail("prime_order"));
            }
        }
        last = Some(&cp.p);
    }
    None
}

fn prime_product(primes: &[CertPrime]) -> BigInt {
    primes.iter().fold(BigInt::one(), |acc, cp| acc * cp.p.pow(cp.k))
}

/// Replays the per-prime index conditions for the T1-family criteria.
fn check_indices(s: &[BigInt], primes: &[CertPrime], from_top: bool) -> Option<Verification> {
    let n = s.len() - 1;
    for cp in primes {
        let j = cp.j.expect("shape-checked") as usize;
        if j < 1 || j > n {
            return Some(fail("j_range"));
        }
        let at = |t: usize| if from_top { &s[n - t] } else { &s[t] };
        if arith::vp_unchecked(at(j), &cp.p) != Valuation::Finite(0) {
            return Some(fail("valuation_nonzero"));
        }
        if (cp.k as u64).gcd(&(j as u64)) != 1 {
            return Some(fail("gcd_condition"));
        }
        for t in 1..j {
            if !arith::frac_lt(cp.k as u64, j as u64, arith::vp_unchecked(at(t), &cp.p), (j - t) as u64) {
                return Some(fail("slope_condition"));
            }
        }
        // the emitter records the smallest admissible index
        for smaller in 1..j {
            let v_ok = arith::vp_unchecked(at(smaller), &cp.p) == Valuation::Finite(0);
            let gcd_ok = (cp.k as u64).gcd(&(smaller as u64)) == 1;
            let slopes_ok = (1..smaller).all(|t| {
                arith::frac_lt(cp.k as u64, smaller as u64, arith::vp_unchecked(at(t), &cp.p), (smaller - t) as u64)
            });
            if v_ok && gcd_ok && slopes_ok {
                return Some(fail("j_not_minimal"));
            }
        }
    }
    None
}

fn check_delta_witness(delta: &DegreeBound, g: &Polynomial) -> Option<Verification> {
    match (&delta.witness, delta.source) {
        (Some(w), DeltaSource::Theorem5) => match newton::theorem5_bound(g, &w.prime, w.j) {
            Ok(db) => {
                let wit = db.witness.expect("theorem5 bounds carry witnesses");
                if db.bound != delta.bound || wit.d1 != w.d1 || wit.d2 != w.d2 {
                    Some(fail("delta_witness"))
                } else {
                    None
                }
            }
            Err(_) => Some(fail("delta_witness")),
        },
        (None, DeltaSource::Trivial) if delta.bound == 1 => None,
        _ => Some(fail("delta_witness")),
    }
}

fn min_index_plus_valuation(s: &[BigInt], p: &BigInt) -> u64 {
    let mut best = u64::MAX;
    for (i, si) in s.iter().enumerate() {
        if let Valuation::Finite(v) = arith::vp_unchecked(si, p) {
            best = best.min(i as u64 + v);
        }
    }
    best
}

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

fn sign_matches(sign: i8, value: &BigInt) -> bool {
    (sign == -1) == value.is_negative()
}

/// `m >= h + 2`, exactly.
fn m_bound_ok(m: &BigInt, h: &Rational) -> bool {
    Rational::from(m.clone()) >= &h.clone() + &Rational::from(2)
}

/// `(m - 1 - h)^delta >= d` with a nonnegative base, exactly.
fn gap_ok(m: &BigInt, h: &Rational, delta: usize, d: &BigInt) -> bool {
    let base = &Rational::from(m - 1) - h;
    !base.is_negative() && base.pow(delta as u32) >= Rational::from(d.clone())
}

fn check_q(q: &BigInt, s0: &BigInt, sn_abs: &BigInt, policy: &FactorPolicy) -> Result<Option<Verification>, CertifyError> {
    if !arith::is_prime(q) {
        return Ok(Some(fail("q_not_prime")));
    }
    let true_q = arith::smallest_prime_factor(s0, policy).map_err(CriteriaError::from)?;
    if &true_q != q {
        return Ok(Some(fail("q_mismatch")));
    }
    if &(s0.abs() / q) > sn_abs {
        return Ok(Some(fail("q_bound")));
    }
    Ok(None)
}

/// Re-derives every arithmetic condition of the certificate's theorem from
/// `f` and the stored witnesses; passes only if all hold.
pub fn verify_certificate(f: &Polynomial, cert: &Certificate) -> Result<Verification, CertifyError> {
    check_shape(cert)?;
    let policy = FactorPolicy::default();

    // certificate must bind to this polynomial
    if f.is_zero() {
        return Err(CertifyError::ZeroPolynomial);
    }
    let (content, fp) = f.primitive_part().expect("nonzero");
    if content != cert.content || fp != cert.poly {
        return Ok(fail("poly_mismatch"));
    }

    if let Some(v) = check_prime_list(cert) {
        return Ok(v);
    }
    if recomputed_certainty(cert) != cert.prime_certainty {
        return Ok(fail("prime_certainty"));
    }

    // the polynomial the conditions apply to
    let g = if cert.reversed {
        match cert.poly.reverse() {
            Ok(g) => g,
            Err(_) => return Err(CertifyError::Malformed("reversal requires nonzero constant term".into())),
        }
    } else {
        cert.poly.clone()
    };

    match cert.theorem {
        TheoremId::T1 => {
            let m = cert.m.as_ref().expect("shape-checked");
            let fm = cert.poly.evaluate(m);
            if fm.is_zero() {
                return Ok(fail("witness_is_root"));
            }
            let h = cert.poly.height().map_err(CriteriaError::from)?;
            if !m_bound_ok(m, &h) {
                return Ok(fail("m_bound"));
            }
            if !sign_matches(cert.sign, &fm) {
                return Ok(fail("sign_mismatch"));
            }
            if prime_product(&cert.primes) != fm.abs() {
                return Ok(fail("product_mismatch"));
            }
            let s = cert.poly.taylor_shift(m).map_err(CriteriaError::from)?;
            if let Some(v) = check_indices(s.values(), &cert.primes, false) {
                return Ok(v);
            }
            if cert.bound as usize != cert.primes.len() {
                return Ok(fail("bound_mismatch"));
            }
        }
        TheoremId::T2 => {
            let m = cert.m.as_ref().expect("shape-checked");
            let s0 = cert.poly.evaluate(m);
            if s0.is_zero() {
                return Ok(fail("witness_is_root"));
            }
            let h = cert.poly.height().map_err(CriteriaError::from)?;
            if !m_bound_ok(m, &h) {
                return Ok(fail("m_bound"));
            }
            let an = cert.poly.leading();
            if !sign_matches(cert.sign, an) {
                return Ok(fail("sign_mismatch"));
            }
            if prime_product(&cert.primes) != an.abs() {
                return Ok(fail("product_mismatch"));
            }
            let q = cert.q.as_ref().expect("shape-checked");
            if let Some(v) = check_q(q, &s0, &an.abs(), &policy)? {
                return Ok(v);
            }
            let s = cert.poly.taylor_shift(m).map_err(CriteriaError::from)?;
            if let Some(v) = check_indices(s.values(), &cert.primes, true) {
                return Ok(v);
            }
            if cert.bound as usize != cert.primes.len() {
                return Ok(fail("bound_mismatch"));
            }
        }
        TheoremId::T3 => {
            let m = cert.m.as_ref().expect("shape-checked");
            let fm = cert.poly.evaluate(m);
            if fm.is_zero() {
                return Ok(fail("witness_is_root"));
            }
            if !sign_matches(cert.sign, &fm) {
                return Ok(fail("sign_mismatch"));
            }
            let cp = &cert.primes[0];
            let d = cert.d.as_ref().expect("shape-checked");
            if !d.is_positive() {
                return Ok(fail("d_range"));
            }
            if (d % &cp.p).is_zero() {
                return Ok(fail("d_divisible"));
            }
            if cp.p.pow(cp.k) * d != fm.abs() {
                return Ok(fail("product_mismatch"));
            }
            let delta = cert.delta.as_ref().expect("shape-checked");
            if let Some(v) = check_delta_witness(delta, &g) {
                return Ok(v);
            }
            let h = cert.poly.height().map_err(CriteriaError::from)?;
            if !gap_ok(m, &h, delta.bound, d) {
                return Ok(fail("d_bound"));
            }
            let s = cert.poly.taylor_shift(m).map_err(CriteriaError::from)?;
            if cert.bound as u64 != min_index_plus_valuation(s.values(), &cp.p) {
                return Ok(fail("bound_mismatch"));
            }
        }
        TheoremId::T4 => {
            let m = cert.m.as_ref().expect("shape-checked");
            let s0 = cert.poly.evaluate(m);
            if s0.is_zero() {
                return Ok(fail("witness_is_root"));
            }
            let an = cert.poly.leading();
            if !sign_matches(cert.sign, an) {
                return Ok(fail("sign_mismatch"));
            }
            let cp = &cert.primes[0];
            let d = cert.d.as_ref().expect("shape-checked");
            if !d.is_positive() {
                return Ok(fail("d_range"));
            }
            if (d % &cp.p).is_zero() {
                return Ok(fail("d_divisible"));
            }
            if cp.p.pow(cp.k) * d != an.abs() {
                return Ok(fail("product_mismatch"));
            }
            let q = cert.q.as_ref().expect("shape-checked");
            if let Some(v) = check_q(q, &s0, &an.abs(), &policy)? {
                return Ok(v);
            }
            let delta = cert.delta.as_ref().expect("shape-checked");
            if let Some(v) = check_delta_witness(delta, &g) {
                return Ok(v);
            }
            let h = cert.poly.height().map_err(CriteriaError::from)?;
            if !gap_ok(m, &h, delta.bound, d) {
                return Ok(fail("d_bound"));
            }
            let s = cert.poly.taylor_shift(m).map_err(CriteriaError::from)?;
            if cert.bound as u64 != min_top_valuation(s.values(), &cp.p, cp.k) {
                return Ok(fail("bound_mismatch"));
            }
        }
        TheoremId::L3 => {
            let s0 = &g.coeffs()[0];
            if !sign_matches(cert.sign, s0) {
                return Ok(fail("sign_mismatch"));
            }
            let cp = &cert.primes[0];
            let d = cert.d.as_ref().expect("shape-checked");
            if !d.is_positive() {
                return Ok(fail("d_range"));
            }
            if (d % &cp.p).is_zero() {
                return Ok(fail("d_divisible"));
            }
            if cp.p.pow(cp.k) * d != s0.abs() {
                return Ok(fail("product_mismatch"));
            }
            let delta = cert.delta.as_ref().expect("shape-checked");
            if let Some(v) = check_delta_witness(delta, &g) {
                return Ok(v);
            }
            let rho = criteria::nth_root_upper(d, delta.bound);
            if !criteria::root_exclusion(&g, &rho).map_err(CertifyError::Criteria)? {
                return Ok(fail("root_exclusion"));
            }
            if cert.bound as u64 != min_index_plus_valuation(g.coeffs(), &cp.p) {
                return Ok(fail("bound_mismatch"));
            }
        }
        TheoremId::L4 => {
            let sn = g.leading();
            if !sign_matches(cert.sign, sn) {
                return Ok(fail("sign_mismatch"));
            }
            if prime_product(&cert.primes) != sn.abs() {
                return Ok(fail("product_mismatch"));
            }
            let q = cert.q.as_ref().expect("shape-checked");
            if let Some(v) = check_q(q, &g.coeffs()[0], &sn.abs(), &policy)? {
                return Ok(v);
            }
            if !criteria::root_exclusion(&g, &Rational::one()).map_err(CertifyError::Criteria)? {
                return Ok(fail("root_exclusion"));
            }
            if let Some(v) = check_indices(g.coeffs(), &cert.primes, true) {
                return Ok(v);
            }
            if cert.bound as usize != cert.primes.len() {
                return Ok(fail("bound_mismatch"));
            }
        }
        TheoremId::L5 => {
            let sn = g.leading();
            if !sign_matches(cert.sign, sn) {
                return Ok(fail("sign_mismatch"));
            }
            let cp = &cert.primes[0];
            let d = cert.d.as_ref().expect("shape-checked");
            if !d.is_positive() {
                return Ok(fail("d_range"));
            }
            if (d % &cp.p).is_zero() {
                return Ok(fail("d_divisible"));
            }
            if cp.p.pow(cp.k) * d != sn.abs() {
                return Ok(fail("product_mismatch"));
            }
            let q = cert.q.as_ref().expect("shape-checked");
            if let Some(v) = check_q(q, &g.coeffs()[0], &sn.abs(), &policy)? {
                return Ok(v);
            }
            let delta = cert.delta.as_ref().expect("shape-checked");
            if let Some(v) = check_delta_witness(delta, &g) {
                return Ok(v);
            }
            let rho = criteria::nth_root_upper(d, delta.bound);
            if !criteria::root_exclusion(&g, &rho).map_err(CertifyError::Criteria)? {
                return Ok(fail("root_exclusion"));
            }
            if cert.bound as u64 != min_top_valuation(g.coeffs(), &cp.p, cp.k) {
                return Ok(fail("bound_mismatch"));
            }
        }
        TheoremId::Np => {
            let delta = cert.delta.as_ref().expect("shape-checked");
            if let Some(v) = check_delta_witness(delta, &g) {
                return Ok(v);
            }
            if g.degree() >= 2 * delta.bound {
                return Ok(fail("degree_bound"));
            }
            if cert.bound != 1 {
                return Ok(fail("bound_mismatch"));
            }
        }
    }
    Ok(Verification::Pass)
}

// ---------------------------------------------------------------------------
// JSON wire format
// ---------------------------------------------------------------------------

pub const CERT_SCHEMA: &str = "polycert-1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PrimeWire {
    p: String,
    k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DeltaWire {
    bound: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d2: Option<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertWire {
    schema: String,
    theorem: String,
    poly: Vec<String>,
    content: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<String>,
    reversed: bool,
    sign: i8,
    primes: Vec<PrimeWire>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<DeltaWire>,
    bound: u32,
    prime_certainty: String,
}

fn parse_bigint(s: &str, what: &str) -> Result<BigInt, CertifyError> {
    s.parse().map_err(|_| CertifyError::Malformed(format!("{what}: bad integer `{s}`")))
}

fn delta_to_wire(d: &DegreeBound) -> DeltaWire {
    DeltaWire {
        bound: d.bound as u64,
        p: d.witness.as_ref().map(|w| w.prime.to_string()),
        j: d.witness.as_ref().map(|w| w.j as u64),
        d1: d.witness.as_ref().map(|w| w.d1),
        d2: d.witness.as_ref().and_then(|w| w.d2),
    }
}

fn delta_from_wire(w: &DeltaWire) -> Result<DegreeBound, CertifyError> {
    let witness = match (&w.p, w.j, w.d1) {
        (Some(p), Some(j), Some(d1)) => Some(DeltaWitness {
            prime: parse_bigint(p, "delta.p")?,
            j: j as usize,
            d1,
            d2: w.d2,
        }),
        (None, None, None) => None,
        _ => return Err(CertifyError::Malformed("partial delta witness".into())),
    };
    let source = if witness.is_some() { DeltaSource::Theorem5 } else { DeltaSource::Trivial };
    Ok(DegreeBound { bound: w.bound as usize, witness, source })
}

fn cert_to_wire(cert: &Certificate) -> CertWire {
    CertWire {
        schema: CERT_SCHEMA.into(),
        theorem: cert.theorem.tag().into(),
        poly: cert.poly.coeffs().iter().map(BigInt::to_string).collect(),
        content: cert.content.to_string(),
        m: cert.m.as_ref().map(BigInt::to_string),
        reversed: cert.reversed,
        sign: cert.sign,
        primes: cert
            .primes
            .iter()
            .map(|cp| PrimeWire { p: cp.p.to_string(), k: cp.k, j: cp.j })
            .collect(),
        d: cert.d.as_ref().map(BigInt::to_string),
        q: cert.q.as_ref().map(BigInt::to_string),
        delta: cert.delta.as_ref().map(delta_to_wire),
        bound: cert.bound,
        prime_certainty: match cert.prime_certainty {
            PrimeCertainty::Deterministic => "deterministic".into(),
            PrimeCertainty::Probable => "probable".into(),
        },
    }
}

fn cert_from_wire(w: &CertWire) -> Result<Certificate, CertifyError> {
    if w.schema != CERT_SCHEMA {
        return Err(CertifyError::Malformed(format!("unknown schema `{}`", w.schema)));
    }
    let theorem = TheoremId::from_tag(&w.theorem)
        .ok_or_else(|| CertifyError::Malformed(format!("unknown theorem tag `{}`", w.theorem)))?;
    let coeffs = w
        .poly
        .iter()
        .map(|s| parse_bigint(s, "poly"))
        .collect::<Result<Vec<_>, _>>()?;
    let poly = Polynomial::new(coeffs);
    let prime_certainty = match w.prime_certainty.as_str() {
        "deterministic" => PrimeCertainty::Deterministic,
        "probable" => PrimeCertainty::Probable,
        other => return Err(CertifyError::Malformed(format!("unknown certainty `{other}`"))),
    };
    Ok(Certificate {
        theorem,
        poly,
        content: parse_bigint(&w.content, "content")?,
        m: w.m.as_deref().map(|s| parse_bigint(s, "m")).transpose()?,
        reversed: w.reversed,
        sign: w.sign,
        primes: w
            .primes
            .iter()
            .map(|pw| Ok(CertPrime { p: parse_bigint(&pw.p, "primes.p")?, k: pw.k, j: pw.j }))
            .collect::<Result<Vec<_>, CertifyError>>()?,
        d: w.d.as_deref().map(|s| parse_bigint(s, "d")).transpose()?,
        q: w.q.as_deref().map(|s| parse_bigint(s, "q")).transpose()?,
        delta: w.delta.as_ref().map(delta_from_wire).transpose()?,
        bound: w.bound,
        prime_certainty,
    })
}

/// Serializes a certificate to the stable JSON schema (all integers as
/// decimal strings).
pub fn certificate_to_json(cert: &Certificate) -> String {
    serde_json::to_string_pretty(&cert_to_wire(cert)).expect("wire struct serializes")
}

pub fn certificate_from_json(text: &str) -> Result<Certificate, CertifyError> {
    let wire: CertWire =
        serde_json::from_str(text).map_err(|e| CertifyError::Malformed(e.to_string()))?;
    cert_from_wire(&wire)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VerdictWire {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RangeWire {
    from: String,
    to: String,
    count: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TimingWire {
    delta_ms: u64,
    direct_ms: u64,
    scan_ms: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportWire {
    poly: Vec<String>,
    content: String,
    delta: DeltaWire,
    verdict: VerdictWire,
    #[serde(skip_serializing_if = "Option::is_none")]
    best: Option<CertWire>,
    all_certificates: Vec<CertWire>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tried_m: Option<RangeWire>,
    timing_ms: TimingWire,
}

pub fn report_to_json(report: &AnalysisReport) -> String {
    let wire = ReportWire {
        poly: report.poly.coeffs().iter().map(BigInt::to_string).collect(),
        content: report.content.to_string(),
        delta: delta_to_wire(&report.delta),
        verdict: match &report.verdict {
            Verdict::Irreducible => VerdictWire { kind: "irreducible".into(), bound: None },
            Verdict::AtMost(b) => VerdictWire { kind: "at_most".into(), bound: Some(*b) },
            Verdict::Unknown => VerdictWire { kind: "unknown".into(), bound: None },
        },
        best: report.best.as_ref().map(cert_to_wire),
        all_certificates: report.all_certificates.iter().map(cert_to_wire).collect(),
        tried_m: report.tried_m.as_ref().map(|r| RangeWire {
            from: r.from.to_string(),
            to: r.to.to_string(),
            count: r.count,
        }),
        timing_ms: TimingWire {
            delta_ms: report.timings.delta_ms,
            direct_ms: report.timings.direct_ms,
            scan_ms: report.timings.scan_ms,
        },
    };
    serde_json::to_string_pretty(&wire).expect("wire struct serializes")
}

pub fn report_from_json(text: &str) -> Result<AnalysisReport, CertifyError> {
    let wire: ReportWire =
        serde_json::from_str(text).map_err(|e| CertifyError::Malformed(e.to_string()))?;
    let verdict = match wire.verdict.kind.as_str() {
        "irreducible" => Verdict::Irreducible,
        "unknown" => Verdict::Unknown,
        "at_most" => Verdict::AtMost(
            wire.verdict.bound.ok_or_else(|| CertifyError::Malformed("at_most without bound".into()))?,
        ),
        other => return Err(CertifyError::Malformed(format!("unknown verdict `{other}`"))),
    };
    Ok(AnalysisReport {
        poly: Polynomial::new(
            wire.poly.iter().map(|s| parse_bigint(s, "poly")).collect::<Result<Vec<_>, _>>()?,
        ),
        content: parse_bigint(&wire.content, "content")?,
        delta: delta_from_wire(&wire.delta)?,
        best: wire.best.as_ref().map(cert_from_wire).transpose()?,
        all_certificates: wire
            .all_certificates
            .iter()
            .map(cert_from_wire)
            .collect::<Result<Vec<_>, _>>()?,
        tried_m: wire
            .tried_m
            .map(|r| {
                Ok::<_, CertifyError>(TriedRange {
                    from: parse_bigint(&r.from, "tried_m.from")?,
                    to: parse_bigint(&r.to, "tried_m.to")?,
                    count: r.count,
                })
            })
            .transpose()?,
        verdict,
        timings: PhaseTimings {
            delta_ms: wire.timing_ms.delta_ms,
            direct_ms: wire.timing_ms.direct_ms,
            scan_ms: wire.timing_ms.scan_ms,
        },
    })
}
