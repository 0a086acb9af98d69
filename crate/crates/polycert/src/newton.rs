//! Newton polygons with respect to a prime, lattice-point counts on hull
//! edges, and the resulting lower bound on irreducible factor degrees.

use crate::arith::{self, FactorPolicy, Valuation};
use crate::poly::{Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NewtonError {
    #[error("constant term or leading coefficient is zero")]
    ZeroEndCoefficient,
    #[error("modulus is not prime")]
    NotPrime,
    #[error("hull needs at least two points, including x=0 and x=n")]
    InsufficientPoints,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("hypothesis fails: {condition} at index {index}")]
    HypothesisFailed { condition: &'static str, index: usize },
}

/// One finite valuation point `(i, v_p(a_i))`; indices with `a_i = 0` are
/// omitted from polygon data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ValuationPoint {
    pub x: usize,
    pub y: u64,
}

/// An edge of the lower hull, with its horizontal width, exact slope and
/// the number of lattice points it carries (endpoints included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: ValuationPoint,
    pub to: ValuationPoint,
    pub width: usize,
    pub slope: Rational,
    pub lattice_count: u64,
}

/// Lower convex hull of the valuation points of a polynomial with respect
/// to one prime. `points` keeps the full point set for rendering and for
/// the on-or-above-hull property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub prime: BigInt,
    pub points: Vec<ValuationPoint>,
    pub vertices: Vec<ValuationPoint>,
    pub edges: Vec<Edge>,
}

/// A proven lower bound on the degree of every irreducible factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBound {
    pub bound: usize,
    pub witness: Option<DeltaWitness>,
    pub source: DeltaSource,
}

/// The `(p, j, d1, d2)` data that re-derives a polygon-based degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaWitness {
    pub prime: BigInt,
    pub j: usize,
    pub d1: u64,
    pub d2: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaSource {
    Theorem5,
    Trivial,
}

impl DegreeBound {
    /// The bound every nonzero polynomial satisfies: factors have degree >= 1.
    pub fn trivial() -> Self {
        DegreeBound { bound: 1, witness: None, source: DeltaSource::Trivial }
    }
}

/// The finite points `(i, v_p(a_i))` for all nonzero coefficients.
pub fn valuation_points(f: &Polynomial, prime: &BigInt) -> Result<Vec<ValuationPoint>, NewtonError> {
    if f.is_zero() || f.coeffs()[0].is_zero() {
        return Err(NewtonError::ZeroEndCoefficient);
    }
    if !arith::is_prime(prime) {
        return Err(NewtonError::NotPrime);
    }
    Ok(f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| {
            let v = match arith::vp_unchecked(a, prime) {
                Valuation::Finite(v) => v,
                Valuation::Infinite => unreachable!("nonzero coefficient"),
            };
            ValuationPoint { x: i, y: v }
        })
        .collect())
}

fn cross(o: ValuationPoint, a: ValuationPoint, b: ValuationPoint) -> i128 {
    let (ox, oy) = (o.x as i128, o.y as i128);
    let (ax, ay) = (a.x as i128, a.y as i128);
    let (bx, by) = (b.x as i128, b.y as i128);
    (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)
}

/// Monotone-chain lower hull. Input points must be sorted by x (as
/// [`valuation_points`] produces them) and span the full degree range.
/// Collinear interior points are not vertices.
pub fn lower_hull(prime: &BigInt, points: &[ValuationPoint]) -> Result<NewtonPolygon, NewtonError> {
    if points.len() < 2 {
        return Err(NewtonError::InsufficientPoints);
    }
    let mut vertices: Vec<ValuationPoint> = Vec::new();
    for &pt in points {
        while vertices.len() >= 2 && cross(vertices[vertices.len() - 2], vertices[vertices.len() - 1], pt) <= 0 {
            vertices.pop();
        }
        vertices.push(pt);
    }
    let edges = vertices
        .windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            Edge {
                from: a,
                to: b,
                width: b.x - a.x,
                slope: Rational::new(
                    BigInt::from(b.y as i128 - a.y as i128),
                    BigInt::from((b.x - a.x) as u64),
                ),
                lattice_count: lattice_count(a, b).expect("hull vertices are distinct"),
            }
        })
        .collect();
    Ok(NewtonPolygon { prime: prime.clone(), points: points.to_vec(), vertices, edges })
}

/// Valuation points plus lower hull in one step.
pub fn newton_polygon(f: &Polynomial, prime: &BigInt) -> Result<NewtonPolygon, NewtonError> {
    let pts = valuation_points(f, prime)?;
    lower_hull(prime, &pts)
}

/// Number of lattice points on the closed segment AB: `1 + gcd(|dx|, |dy|)`.
pub fn lattice_count(a: ValuationPoint, b: ValuationPoint) -> Result<u64, NewtonError> {
    if a == b {
        return Err(NewtonError::DegenerateSegment);
    }
    let dx = (a.x as i128 - b.x as i128).unsigned_abs() as u64;
    let dy = a.y.abs_diff(b.y);
    Ok(1 + dx.gcd(&dy))
}

fn coeff_valuation(f: &Polynomial, i: usize, prime: &BigInt) -> Valuation {
    arith::vp_unchecked(&f.coeff(i), prime)
}

/// Degree bound from one `(prime, j)` hypothesis: checks that `v_p(a_j) = 0`,
/// that the segment from `(0, v_p(a_0))` to `(j, 0)` lies on or below all
/// earlier points, and (for `j < n`) that the segment up to `(n, v_p(a_n))`
/// lies on or below all later points; the bound is `min(j/d1, (n-j)/d2)`
/// (or `n/d1` when `j = n`) with `d1 = gcd(v_p(a_0), j)` and
/// `d2 = gcd(v_p(a_n), n-j)`.
pub fn theorem5_bound(f: &Polynomial, prime: &BigInt, j: usize) -> Result<DegreeBound, NewtonError> {
    if f.is_zero() || f.coeffs()[0].is_zero() {
        return Err(NewtonError::ZeroEndCoefficient);
    }
    if !arith::is_prime(prime) {
        return Err(NewtonError::NotPrime);
    }
    let n = f.degree();
    if j < 1 || j > n {
        return Err(NewtonError::HypothesisFailed { condition: "j_out_of_range", index: j });
    }
    if !coeff_valuation(f, j, prime).is_zero() {
        return Err(NewtonError::HypothesisFailed { condition: "valuation_nonzero", index: j });
    }
    let v0 = coeff_valuation(f, 0, prime).finite().expect("a_0 != 0");
    for i in 0..j {
        // v_p(a_0)/j <= v_p(a_i)/(j-i), cross-multiplied; v_p(0) passes
        if !arith::frac_le(v0, j as u64, coeff_valuation(f, i, prime), (j - i) as u64) {
            return Err(NewtonError::HypothesisFailed { condition: "lower_slope", index: i });
        }
    }
    let d1 = v0.gcd(&(j as u64));
    let bound;
    let d2;
    if j < n {
        let vn = coeff_valuation(f, n, prime).finite().expect("a_n != 0");
        for i in (j + 1)..n {
            if !arith::frac_le(vn, (n - j) as u64, coeff_valuation(f, i, prime), (i - j) as u64) {
                return Err(NewtonError::HypothesisFailed { condition: "upper_slope", index: i });
            }
        }
        let g2 = vn.gcd(&((n - j) as u64));
        d2 = Some(g2);
        bound = (j as u64 / d1).min((n - j) as u64 / g2) as usize;
    } else {
        d2 = None;
        bound = (n as u64 / d1) as usize;
    }
    Ok(DegreeBound {
        bound,
        witness: Some(DeltaWitness { prime: prime.clone(), j, d1, d2 }),
        source: DeltaSource::Theorem5,
    })
}

/// Best degree bound over every prime dividing `a_0 * a_n` (as recovered
/// within the factoring budget) and every index `j`. Falls back to the
/// trivial bound 1. Ties keep the smallest prime, then the smallest `j`.
pub fn best_delta(f: &Polynomial, policy: &FactorPolicy) -> DegreeBound {
    let mut best = DegreeBound::trivial();
    if f.is_zero() || f.coeffs()[0].is_zero() || f.degree() == 0 {
        return best;
    }
    let n = f.degree();
    let mut primes: Vec<BigInt> = Vec::new();
    for end in [&f.coeffs()[0], f.leading()] {
        if let Ok(fac) = arith::factorize(end, policy) {
            for (p, _) in fac.factors() {
                if !primes.contains(p) {
                    primes.push(p.clone());
                }
            }
        }
    }
    primes.sort();
    for p in &primes {
        for j in 1..=n {
            if let Ok(db) = theorem5_bound(f, p, j) {
                if db.bound > best.bound {
                    best = db;
                }
            }
        }
    }
    best
}

/// Degree-floor irreducibility test: a split into two nonconstant factors
/// needs degree at least `2 * delta`, so `deg f < 2 * delta` forces
/// irreducibility. Equality does not: squares of degree-`delta`
/// irreducibles attain it.
pub fn irreducible_by_degree(f: &Polynomial, delta: &DegreeBound) -> bool {
    !f.is_zero() && f.degree() < 2 * delta.bound
}
