//! Dense polynomials over arbitrary-precision integers.
//!
//! Everything here is exact: coefficients are [`BigInt`]s, the height is an
//! exact [`Rational`], and Taylor shifts are computed by repeated synthetic
//! division. No floating point enters any code path.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires degree at least one")]
    DegreeTooLow,
    #[error("constant term is zero")]
    ZeroConstantTerm,
}

/// Exact rational number with positive denominator, kept in lowest terms.
///
/// Comparisons cross-multiply, so they are exact for any magnitude.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds `num/den`, normalizing the sign into the numerator and reducing.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational denominator must be nonzero");
        let (mut num, mut den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Rational { num, den }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational { num: n.into(), den: BigInt::one() }
    }

    pub fn zero() -> Self {
        Rational::from_int(0)
    }

    pub fn one() -> Self {
        Rational::from_int(1)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn abs(&self) -> Rational {
        Rational { num: self.num.abs(), den: self.den.clone() }
    }

    /// Smallest integer `>=` the value.
    pub fn ceil(&self) -> BigInt {
        let (q, r) = self.num.div_rem(&self.den);
        if r.is_positive() {
            q + 1
        } else {
            q
        }
    }

    pub fn pow(&self, e: u32) -> Rational {
        Rational { num: self.num.pow(e), den: self.den.pow(e) }
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross-multiplication preserves order
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational::new(&self.num * &rhs.den - &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.num.is_zero(), "division by zero rational");
        Rational::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Dense integer polynomial; index `i` holds the coefficient of `z^i`.
///
/// Canonical form strips trailing zeros, so the leading coefficient of a
/// nonzero polynomial is never zero and the zero polynomial is the empty
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial. Panics on the zero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of the zero polynomial")
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Horner evaluation at an integer argument.
    pub fn evaluate(&self, m: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * m + c;
        }
        acc
    }

    /// Greatest common divisor of the absolute coefficients.
    pub fn content(&self) -> Result<BigInt, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    /// Splits into `(content, primitive)` with `content * primitive == self`.
    ///
    /// The content is positive; the primitive part keeps the original signs.
    pub fn primitive_part(&self) -> Result<(BigInt, Polynomial), PolyError> {
        let c = self.content()?;
        if c.is_one() {
            return Ok((c, self.clone()));
        }
        let prim = Polynomial { coeffs: self.coeffs.iter().map(|a| a / &c).collect() };
        Ok((c, prim))
    }

    /// Height `max_{i<n} |a_i| / |a_n|` as an exact rational.
    pub fn height(&self) -> Result<Rational, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.degree() < 1 {
            return Err(PolyError::DegreeTooLow);
        }
        let an = self.leading().abs();
        let top = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(Signed::abs)
            .max()
            .expect("degree >= 1 has lower coefficients");
        Ok(Rational::new(top, an))
    }

    /// Largest absolute value among the non-leading coefficients.
    pub fn max_lower_abs(&self) -> Result<BigInt, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.degree() < 1 {
            return Err(PolyError::DegreeTooLow);
        }
        Ok(self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(Signed::abs)
            .max()
            .expect("degree >= 1 has lower coefficients"))
    }

    /// Coefficients of `f(m + z)`, i.e. the values `s_i(m) = f^(i)(m)/i!`,
    /// by `n` rounds of synthetic division. Exact in `O(n^2)` big-int ops.
    pub fn taylor_shift(&self, m: &BigInt) -> Result<ShiftedCoefficients, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let n = self.degree();
        let mut s = self.coeffs.clone();
        for i in 0..n {
            for j in (i..n).rev() {
                let add = m * &s[j + 1];
                s[j] += add;
            }
        }
        Ok(ShiftedCoefficients { base: self.clone(), m: m.clone(), s })
    }

    /// Coefficient reversal `z^n f(1/z)`; requires a nonzero constant term
    /// so the degree is preserved.
    pub fn reverse(&self) -> Result<Polynomial, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.coeffs[0].is_zero() {
            return Err(PolyError::ZeroConstantTerm);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Polynomial { coeffs })
    }

    /// Schoolbook product; sufficient for the factorization oracle and tests.
    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// The polynomial scaled by an integer constant.
    pub fn scaled(&self, c: &BigInt) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form, e.g. `64+56z^2+14z^4+z^6`; `0` for the zero
    /// polynomial. Round-trips through the CLI grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// The coefficient sequence of `f(m + z)` together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedCoefficients {
    base: Polynomial,
    m: BigInt,
    s: Vec<BigInt>,
}

impl ShiftedCoefficients {
    pub fn base(&self) -> &Polynomial {
        &self.base
    }

    pub fn witness(&self) -> &BigInt {
        &self.m
    }

    /// All values `s_0(m), ..., s_n(m)`; always `degree + 1` entries and
    /// `s_n(m) = a_n`.
    pub fn values(&self) -> &[BigInt] {
        &self.s
    }

    pub fn value(&self, i: usize) -> &BigInt {
        &self.s[i]
    }

    pub fn degree(&self) -> usize {
        self.s.len() - 1
    }

    /// The shifted polynomial `g(z) = f(m + z)` itself.
    pub fn as_polynomial(&self) -> Polynomial {
        Polynomial::new(self.s.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64(cs)
    }

    #[test]
    fn content_examples() {
        assert_eq!(p(&[2, 4]).content().unwrap(), BigInt::from(2));
        assert_eq!(p(&[64, 0, 56, 0, 14, 0, 1]).content().unwrap(), BigInt::from(1));
        assert_eq!(p(&[-6]).content().unwrap(), BigInt::from(6));
        assert_eq!(Polynomial::zero().content(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn primitive_part_examples() {
        let (c, prim) = p(&[2, 4]).primitive_part().unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(prim, p(&[1, 2]));

        let (c, prim) = p(&[0, 0, 3]).primitive_part().unwrap();
        assert_eq!(c, BigInt::from(3));
        assert_eq!(prim, p(&[0, 0, 1]));

        let f = p(&[3, 1, 7]);
        let (c, prim) = f.primitive_part().unwrap();
        assert_eq!(c, BigInt::from(1));
        assert_eq!(prim, f);
    }

    #[test]
    fn height_examples() {
        assert_eq!(p(&[-2, -4, 3, -2, 2]).height().unwrap(), Rational::from(2));
        assert_eq!(
            p(&[4, -16, 32, 4, -56, 72, 81]).height().unwrap(),
            Rational::new(BigInt::from(72), BigInt::from(81))
        );
        assert_eq!(p(&[0, 0, 0, 0, 0, 0, 1]).height().unwrap(), Rational::zero());
        assert_eq!(p(&[5]).height(), Err(PolyError::DegreeTooLow));
    }

    #[test]
    fn evaluate_examples() {
        let f = p(&[64, 0, 56, 0, 14, 0, 1]);
        let expect = BigInt::from(13691i64) * BigInt::from(13693i64) * BigInt::from(13697i64);
        assert_eq!(f.evaluate(&BigInt::from(117)), expect);
        assert_eq!(f.evaluate(&BigInt::zero()), BigInt::from(64));
        let g = p(&[81, 0, 1782, 0, 9797]);
        assert_eq!(g.evaluate(&BigInt::from(8)), BigInt::from(6217i64 * 6473i64));
    }

    #[test]
    fn taylor_shift_examples() {
        let s = p(&[1, 0, 1]).taylor_shift(&BigInt::one()).unwrap();
        assert_eq!(s.values(), &[BigInt::from(2), BigInt::from(2), BigInt::from(1)]);

        let s = p(&[81, 0, 1782, 0, 9797]).taylor_shift(&BigInt::from(8)).unwrap();
        assert_eq!(s.value(3), &BigInt::from(32 * 97 * 101));
        assert_eq!(s.value(4), &BigInt::from(9797));

        let s = p(&[-2, -4, 3, -2, 2]).taylor_shift(&BigInt::from(14)).unwrap();
        assert_eq!(s.value(0), &BigInt::from(11i64.pow(3) * 54));
    }

    #[test]
    fn taylor_shift_at_zero_is_identity() {
        let f = p(&[-7, 0, 5, 3]);
        let s = f.taylor_shift(&BigInt::zero()).unwrap();
        assert_eq!(s.values(), f.coeffs());
    }

    #[test]
    fn reverse_examples() {
        let f = p(&[-3, 3, 343, 0, -126, 126, 14406]);
        let r = f.reverse().unwrap();
        assert_eq!(r, p(&[14406, 126, -126, 0, 343, 3, -3]));
        assert_eq!(r.reverse().unwrap(), f);

        let pal = p(&[1, 2, 1]);
        assert_eq!(pal.reverse().unwrap(), pal);

        assert_eq!(p(&[0, 1]).reverse(), Err(PolyError::ZeroConstantTerm));
    }

    #[test]
    fn shift_identity_on_random_inputs() {
        // sum_i s_i(m) x^i == f(m + x), 100 deterministic pseudo-random triples
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let deg = rng.gen_range(1..=8);
            let coeffs: Vec<i64> =
                (0..=deg).map(|i| if i == deg { rng.gen_range(1..=1000) } else { rng.gen_range(-1000..=1000) }).collect();
            let f = p(&coeffs);
            let m = BigInt::from(rng.gen_range(-1000i64..=1000));
            let x = BigInt::from(rng.gen_range(-1000i64..=1000));
            let s = f.taylor_shift(&m).unwrap();
            let lhs = s.as_polynomial().evaluate(&x);
            assert_eq!(lhs, f.evaluate(&(&m + &x)));
        }
    }

    #[test]
    fn height_is_the_exact_max() {
        let f = p(&[-9, 14, 3, -6]);
        let h = f.height().unwrap();
        let an = f.leading().abs();
        let n = f.degree();
        let mut attained = false;
        for i in 0..n {
            let lhs = f.coeff(i).abs() * h.den();
            let rhs = h.num() * &an;
            assert!(lhs <= rhs);
            if lhs == rhs {
                attained = true;
            }
        }
        assert!(attained);
    }

    #[test]
    fn rational_ordering_and_ceil() {
        let a = Rational::new(BigInt::from(1782), BigInt::from(9797));
        assert!(a < Rational::one());
        assert!(Rational::from(2) < Rational::new(BigInt::from(7), BigInt::from(3)));
        assert_eq!(a.ceil(), BigInt::one());
        assert_eq!(Rational::from(-3).ceil(), BigInt::from(-3));
        assert_eq!(Rational::new(BigInt::from(-7), BigInt::from(2)).ceil(), BigInt::from(-3));
        assert_eq!((&Rational::from(2) + &Rational::new(BigInt::one(), BigInt::from(2))).ceil(), BigInt::from(3));
    }

    #[test]
    fn display_round_trip_forms() {
        assert_eq!(p(&[64, 0, 56, 0, 14, 0, 1]).to_string(), "64+56z^2+14z^4+z^6");
        assert_eq!(p(&[-3, 3, 343, 0, -126, 126, 14406]).to_string(), "-3+3z+343z^2-126z^4+126z^5+14406z^6");
        assert_eq!(p(&[0, 1]).to_string(), "z");
        assert_eq!(p(&[0, -1]).to_string(), "-z");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
