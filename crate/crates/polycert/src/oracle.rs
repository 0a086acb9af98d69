//! Ground-truth factorization of small integer polynomials by the Kronecker
//! method: evaluate at a few small integers, enumerate divisor combinations
//! of the values, interpolate candidate factors and test by exact division.
//!
//! This module exists to cross-check the certifying criteria in tests and
//! through the CLI; nothing in the certifying path calls into it.

use crate::arith::{self, FactorPolicy};
use crate::poly::Polynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("input exceeds the oracle's degree or coefficient limits")]
    ScaleExceeded,
    #[error("divisor search space exceeds the oracle budget")]
    BudgetExceeded,
}

/// Scale limits for the oracle; it is a desk-scale tool by design.
#[derive(Debug, Clone)]
pub struct OracleLimits {
    pub max_degree: usize,
    pub coeff_cap: BigInt,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_degree: 8, coeff_cap: BigInt::from(10u8).pow(18) }
    }
}

/// Divisor-combination cap per Kronecker level. Sized so a full level
/// enumerates in well under a second with the congruence prescreen.
const COMBO_CAP: u64 = 4_000_000;

/// Complete factorization over the integers: `unit * content * product of
/// factors` reassembles the input. Factors are primitive, irreducible, have
/// positive leading coefficients, and are sorted by degree then
/// lexicographically by coefficients. Repeated factors appear repeatedly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleFactorization {
    pub unit: i8,
    pub content: BigInt,
    pub factors: Vec<Polynomial>,
}

impl OracleFactorization {
    /// Number of irreducible factors, counted with multiplicity.
    pub fn count(&self) -> usize {
        self.factors.len()
    }

    pub fn reassemble(&self) -> Polynomial {
        let mut acc = Polynomial::new(vec![&self.content * self.unit]);
        for f in &self.factors {
            acc = acc.mul(f);
        }
        acc
    }
}

/// Exact division in `Z[z]`: `Some(q)` with `f = g * q` when `g` divides
/// `f` with integer quotient, `None` otherwise.
fn divide_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if g.is_zero() || f.is_zero() || f.degree() < g.degree() {
        return None;
    }
    let glead = g.leading();
    let gn = g.degree();
    let mut rem: Vec<BigInt> = f.coeffs().to_vec();
    let mut quot = vec![BigInt::zero(); f.degree() - gn + 1];
    for i in (0..quot.len()).rev() {
        let lead = rem[i + gn].clone();
        if lead.is_zero() {
            continue;
        }
        if !(&lead % glead).is_zero() {
            return None;
        }
        let c = lead / glead;
        for (t, gc) in g.coeffs().iter().enumerate() {
            let sub = gc * &c;
            rem[i + t] -= sub;
        }
        quot[i] = c;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(Polynomial::new(quot))
    } else {
        None
    }
}

/// All positive divisors of `|n|`, from its prime factorization.
fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>, OracleError> {
    let fac = arith::factorize(n, &FactorPolicy::default()).map_err(|_| OracleError::BudgetExceeded)?;
    if !fac.complete() {
        return Err(OracleError::BudgetExceeded);
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in fac.factors() {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut power = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &power);
                power *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Strips every factor `z` (zero constant terms) off `f`.
fn strip_powers_of_z(f: &mut Polynomial, factors: &mut Vec<Polynomial>) {
    while !f.is_zero() && f.degree() >= 1 && f.coeffs()[0].is_zero() {
        let reduced = Polynomial::new(f.coeffs()[1..].to_vec());
        factors.push(Polynomial::from_i64(&[0, 1]));
        *f = reduced;
    }
}

/// Strips all rational roots `p/q` (with `q z - p` primitive) by direct
/// candidate testing; restarts the candidate scan after each hit so
/// multiplicities are captured.
fn strip_rational_roots(f: &mut Polynomial, factors: &mut Vec<Polynomial>) -> Result<(), OracleError> {
    'restart: loop {
        if f.degree() < 1 {
            return Ok(());
        }
        let ps = positive_divisors(&f.coeffs()[0])?;
        let qs = positive_divisors(f.leading())?;
        for q in &qs {
            for p in &ps {
                if !num_integer::gcd(p.clone(), q.clone()).is_one() {
                    continue;
                }
                for p_signed in [p.clone(), -p] {
                    // candidate root p/q, candidate factor q*z - p
                    let cand = Polynomial::new(vec![-&p_signed, q.clone()]);
                    if let Some(rest) = divide_exact(f, &cand) {
                        factors.push(cand);
                        *f = rest;
                        continue 'restart;
                    }
                }
            }
        }
        return Ok(());
    }
}

/// Evaluation points 0, 1, -1, 2, -2, ... skipping roots of `f` (none
/// remain once linear factors are stripped, but the guard is kept).
fn kronecker_points(f: &Polynomial, count: usize) -> Vec<BigInt> {
    let mut pts = Vec::with_capacity(count);
    let mut k = 0i64;
    while pts.len() < count {
        for x in [BigInt::from(k), BigInt::from(-k)] {
            if pts.len() == count {
                break;
            }
            if x.is_zero() && k != 0 {
                continue;
            }
            if pts.contains(&x) {
                continue;
            }
            if !f.evaluate(&x).is_zero() {
                pts.push(x);
            }
        }
        k += 1;
    }
    pts
}

/// Integer form of the Lagrange basis for a fixed point set: candidate
/// values `y` interpolate to `(sum_t y_t * numer[t]) / denom`, so a
/// candidate is an integer polynomial iff every coefficient of the sum is
/// divisible by `denom`.
struct LagrangeBasis {
    numer: Vec<Vec<BigInt>>,
    denom: BigInt,
}

impl LagrangeBasis {
    fn new(xs: &[BigInt]) -> Self {
        let n = xs.len();
        let mut numers: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut denoms: Vec<BigInt> = Vec::with_capacity(n);
        for i in 0..n {
            // prod_{u != i} (z - x_u) and prod_{u != i} (x_i - x_u)
            let mut poly = vec![BigInt::one()];
            let mut denom = BigInt::one();
            for (u, xu) in xs.iter().enumerate() {
                if u == i {
                    continue;
                }
                let mut next = vec![BigInt::zero(); poly.len() + 1];
                for (t, c) in poly.iter().enumerate() {
                    next[t + 1] += c;
                    next[t] -= c * xu;
                }
                poly = next;
                denom *= &xs[i] - xu;
            }
            numers.push(poly);
            denoms.push(denom);
        }
        let mut lcm = BigInt::one();
        for d in &denoms {
            lcm = lcm.lcm(&d.abs());
        }
        for (numer, denom) in numers.iter_mut().zip(&denoms) {
            let scale = &lcm / denom; // carries the denominator's sign
            for c in numer.iter_mut() {
                *c *= &scale;
            }
        }
        LagrangeBasis { numer: numers, denom: lcm }
    }

    fn coefficient(&self, ys: &[BigInt], t: usize) -> BigInt {
        let mut acc = BigInt::zero();
        for (y, numer) in ys.iter().zip(&self.numer) {
            acc += y * &numer[t];
        }
        acc
    }
}

/// Divisor choices for one evaluation point, with residues modulo the small
/// point gaps for cheap congruence pruning.
struct DivisorAxis {
    divisors: Vec<BigInt>,
    signed: bool,
    /// residues[r][i] = divisors[i] mod (r + 2)
    residues: Vec<Vec<u8>>,
}

impl DivisorAxis {
    fn options(&self) -> usize {
        self.divisors.len() * if self.signed { 2 } else { 1 }
    }

    fn value(&self, option: usize) -> BigInt {
        if self.signed {
            let base = self.divisors[option / 2].clone();
            if option.is_multiple_of(2) {
                base
            } else {
                -base
            }
        } else {
            self.divisors[option].clone()
        }
    }

    /// residue of the chosen signed value modulo `modulus` (>= 2)
    fn residue(&self, option: usize, modulus: u8) -> u8 {
        let (idx, neg) =
            if self.signed { (option / 2, option % 2 == 1) } else { (option, false) };
        let r = self.residues[(modulus - 2) as usize][idx];
        if neg && r != 0 {
            modulus - r
        } else {
            r
        }
    }
}

/// Searches for an irreducible factor of exact degree `dd` by divisor
/// combination; factors of smaller degree must already be exhausted.
///
/// The free global sign is anchored at the point with the most divisors,
/// which halves the largest axis. Candidates are screened by pairwise
/// congruences `g(a) = g(b) mod (a - b)` and by requiring the interpolated
/// leading coefficient to be an integer dividing the input's, before the
/// full interpolation and trial division run.
fn find_factor_of_degree(f: &Polynomial, dd: usize) -> Result<Option<Polynomial>, OracleError> {
    let xs = kronecker_points(f, dd + 1);
    let values: Vec<BigInt> = xs.iter().map(|x| f.evaluate(x)).collect();
    let divisor_lists: Vec<Vec<BigInt>> =
        values.iter().map(positive_divisors).collect::<Result<_, _>>()?;
    let anchor = divisor_lists
        .iter()
        .enumerate()
        .max_by_key(|(_, d)| d.len())
        .map(|(i, _)| i)
        .unwrap_or(0);

    let max_gap = xs
        .iter()
        .flat_map(|a| xs.iter().map(move |b| (a - b).abs()))
        .max()
        .and_then(|g| u8::try_from(g).ok())
        .unwrap_or(2)
        .max(2);
    let axes: Vec<DivisorAxis> = divisor_lists
        .into_iter()
        .enumerate()
        .map(|(i, divisors)| {
            let residues = (2..=max_gap)
                .map(|md| {
                    divisors
                        .iter()
                        .map(|d| u8::try_from(d % BigInt::from(md)).expect("residue below modulus"))
                        .collect()
                })
                .collect();
            DivisorAxis { divisors, signed: i != anchor, residues }
        })
        .collect();

    let mut total: u64 = 1;
    for axis in &axes {
        total = total.saturating_mul(axis.options() as u64);
        if total > COMBO_CAP {
            return Err(OracleError::BudgetExceeded);
        }
    }

    // congruence pairs: (s, t, |x_s - x_t|) with gap >= 2
    let mut pairs: Vec<(usize, usize, u8)> = Vec::new();
    for s in 0..xs.len() {
        for t in (s + 1)..xs.len() {
            let gap = (&xs[s] - &xs[t]).abs();
            if let Ok(g) = u8::try_from(gap) {
                if g >= 2 {
                    pairs.push((s, t, g));
                }
            }
        }
    }

    fn advance(counters: &mut [usize], axes: &[DivisorAxis]) -> bool {
        let mut i = 0;
        loop {
            if i == counters.len() {
                return false;
            }
            counters[i] += 1;
            if counters[i] < axes[i].options() {
                return true;
            }
            counters[i] = 0;
            i += 1;
        }
    }

    let basis = LagrangeBasis::new(&xs);
    let lead_f = f.leading();
    let mut counters = vec![0usize; axes.len()];
    let mut ys = vec![BigInt::zero(); axes.len()];
    loop {
        let congruent = pairs
            .iter()
            .all(|&(s, t, gap)| axes[s].residue(counters[s], gap) == axes[t].residue(counters[t], gap));
        if congruent {
            for (i, axis) in axes.iter().enumerate() {
                ys[i] = axis.value(counters[i]);
            }
            // leading coefficient screen: integer, nonzero, divides lc(f)
            let lead_num = basis.coefficient(&ys, dd);
            let lead_ok = !lead_num.is_zero()
                && (&lead_num % &basis.denom).is_zero()
                && (lead_f % (&lead_num / &basis.denom)).is_zero();
            if lead_ok {
                let mut coeffs = Vec::with_capacity(dd + 1);
                let mut integral = true;
                for t in 0..=dd {
                    let num = basis.coefficient(&ys, t);
                    if (&num % &basis.denom).is_zero() {
                        coeffs.push(num / &basis.denom);
                    } else {
                        integral = false;
                        break;
                    }
                }
                if integral {
                    let cand = Polynomial::new(coeffs);
                    if !cand.is_zero() && cand.degree() == dd {
                        let cand = if cand.leading().is_negative() {
                            cand.scaled(&BigInt::from(-1))
                        } else {
                            cand
                        };
                        if divide_exact(f, &cand).is_some() {
                            return Ok(Some(cand));
                        }
                    }
                }
            }
        }
        if !advance(&mut counters, &axes) {
            return Ok(None);
        }
    }
}

/// Factors `f` into content, unit and irreducible primitive factors.
pub fn oracle_factor(f: &Polynomial, limits: &OracleLimits) -> Result<OracleFactorization, OracleError> {
    if f.is_zero() {
        return Err(OracleError::ZeroPolynomial);
    }
    if f.degree() > limits.max_degree {
        return Err(OracleError::ScaleExceeded);
    }
    if f.coeffs().iter().any(|c| c.abs() > limits.coeff_cap) {
        return Err(OracleError::ScaleExceeded);
    }
    let (content, prim) = f.primitive_part().expect("nonzero");
    let (unit, mut cur) = if prim.leading().is_negative() {
        (-1i8, prim.scaled(&BigInt::from(-1)))
    } else {
        (1i8, prim)
    };
    let mut factors: Vec<Polynomial> = Vec::new();
    strip_powers_of_z(&mut cur, &mut factors);
    strip_rational_roots(&mut cur, &mut factors)?;
    let mut dd = 2;
    while !cur.is_zero() && cur.degree() >= 2 * dd {
        match find_factor_of_degree(&cur, dd)? {
            Some(g) => {
                cur = divide_exact(&cur, &g).expect("declared divisor divides");
                factors.push(g);
            }
            None => dd += 1,
        }
    }
    if !cur.is_zero() && cur.degree() >= 1 {
        factors.push(cur);
    }
    factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(OracleFactorization { unit, content, factors })
}

/// Number of irreducible factors of `f`, counted with multiplicity.
pub fn oracle_count(f: &Polynomial, limits: &OracleLimits) -> Result<usize, OracleError> {
    Ok(oracle_factor(f, limits)?.count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64(cs)
    }

    fn factor(cs: &[i64]) -> OracleFactorization {
        oracle_factor(&p(cs), &OracleLimits::default()).unwrap()
    }

    #[test]
    fn factors_the_three_quadratics() {
        let f = factor(&[64, 0, 56, 0, 14, 0, 1]);
        assert_eq!(f.unit, 1);
        assert_eq!(f.content, BigInt::one());
        assert_eq!(f.factors, vec![p(&[2, 0, 1]), p(&[4, 0, 1]), p(&[8, 0, 1])]);
    }

    #[test]
    fn factors_f4_with_unit() {
        let f = factor(&[2, -2, 2, -375, 100, -100, 100, -18750]);
        assert_eq!(f.count(), 2);
        assert_eq!(f.reassemble(), p(&[2, -2, 2, -375, 100, -100, 100, -18750]));
        // (2 - 2z + 2z^2 - 375z^3)(1 + 50z^4) up to unit normalization
        assert_eq!(f.factors, vec![p(&[-2, 2, -2, 375]), p(&[1, 0, 0, 0, 50])]);
        assert_eq!(f.unit, -1);
    }

    #[test]
    fn factors_difference_of_squares() {
        let f = factor(&[-1, 0, 1]);
        assert_eq!(f.factors, vec![p(&[-1, 1]), p(&[1, 1])]);
    }

    #[test]
    fn counts_squares_with_multiplicity() {
        assert_eq!(oracle_count(&p(&[9, -36, 54, -2094, 4125, -2058, 117649]), &OracleLimits::default()).unwrap(), 2);
        assert_eq!(oracle_count(&p(&[20449, -3146, 121, 13442, -1034, 0, 2209]), &OracleLimits::default()).unwrap(), 2);
        assert_eq!(oracle_count(&p(&[1, 1, 1]), &OracleLimits::default()).unwrap(), 1);
    }

    #[test]
    fn quartic_fixture_factors() {
        let f = factor(&[-2, -4, 3, -2, 2]);
        assert_eq!(f.count(), 2);
        assert_eq!(f.factors, vec![p(&[-1, -2, 2]), p(&[2, 0, 1])]);
    }

    #[test]
    fn strips_z_powers_and_content() {
        let f = factor(&[0, 0, 12, 12]); // 12 z^2 (1 + z)
        assert_eq!(f.content, BigInt::from(12));
        assert_eq!(f.factors, vec![p(&[0, 1]), p(&[0, 1]), p(&[1, 1])]);
    }

    #[test]
    fn rejects_oversized_inputs() {
        let f = p(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 1]); // degree 9
        assert_eq!(oracle_factor(&f, &OracleLimits::default()), Err(OracleError::ScaleExceeded));
    }

    #[test]
    fn idempotent_on_emitted_factors() {
        let f = factor(&[2, -2, 2, -375, 100, -100, 100, -18750]);
        for g in &f.factors {
            let again = oracle_factor(g, &OracleLimits::default()).unwrap();
            assert_eq!(again.factors, vec![g.clone()]);
            assert_eq!(again.content, BigInt::one());
        }
    }

    #[test]
    fn reassembles_random_products() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let limits = OracleLimits::default();
        let mut done = 0;
        while done < 100 {
            let parts: Vec<Polynomial> = (0..rng.gen_range(2..=3))
                .map(|_| loop {
                    let deg = rng.gen_range(1..=3usize);
                    let mut cs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-10..=10)).collect();
                    if cs[0] == 0 {
                        cs[0] = 1;
                    }
                    if cs[deg] == 0 {
                        cs[deg] = 1;
                    }
                    let cand = Polynomial::from_i64(&cs);
                    let fac = oracle_factor(&cand, &limits).unwrap();
                    if fac.count() == 1 && fac.content.is_one() {
                        break fac.factors[0].clone();
                    }
                })
                .collect();
            let product = parts.iter().fold(Polynomial::new(vec![BigInt::one()]), |a, b| a.mul(b));
            if product.degree() > 8 {
                continue;
            }
            let fac = oracle_factor(&product, &limits).unwrap();
            assert_eq!(fac.count(), parts.len(), "wrong count for {product}");
            let mut expected = parts.clone();
            expected.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
            assert_eq!(fac.factors, expected);
            assert_eq!(fac.reassemble(), product);
            done += 1;
        }
    }
}
