//! Shared fixtures for the integration suites.
#![allow(dead_code)] // each test binary uses its own subset

use num_bigint::BigInt;
use polycert::Polynomial;

pub fn poly(cs: &[i64]) -> Polynomial {
    Polynomial::from_i64(cs)
}

pub fn bi(n: i64) -> BigInt {
    BigInt::from(n)
}

/// 64 + 56z^2 + 14z^4 + z^6 = (2+z^2)(4+z^2)(8+z^2)
pub fn sextic_three_primes() -> Polynomial {
    poly(&[64, 0, 56, 0, 14, 0, 1])
}

/// 81 + 1782z^2 + 9797z^4 = (9+97z^2)(9+101z^2)
pub fn quartic_leading() -> Polynomial {
    poly(&[81, 0, 1782, 0, 9797])
}

/// -2 - 4z + 3z^2 - 2z^3 + 2z^4 = (2+z^2)(-1-2z+2z^2)
pub fn quartic_constant() -> Polynomial {
    poly(&[-2, -4, 3, -2, 2])
}

/// 9 - 36z + 54z^2 - 2094z^3 + 4125z^4 - 2058z^5 + 117649z^6, a perfect
/// square of a cubic
pub fn sextic_square() -> Polynomial {
    poly(&[9, -36, 54, -2094, 4125, -2058, 117649])
}

pub fn fixture_f1() -> Polynomial {
    poly(&[1287, 0, 3168, -3528, 1936, -4312, 2401])
}

pub fn fixture_f2() -> Polynomial {
    poly(&[4, 0, 120, 0, 899])
}

pub fn fixture_f3() -> Polynomial {
    poly(&[4, -16, 32, 4, -56, 72, 81])
}

pub fn fixture_f4() -> Polynomial {
    poly(&[2, -2, 2, -375, 100, -100, 100, -18750])
}

/// -3 + 3z + 343z^2 - 126z^4 + 126z^5 + 14406z^6; its reversal satisfies
/// the direct constant-term lemma
pub fn sextic_direct_reversal() -> Polynomial {
    poly(&[-3, 3, 343, 0, -126, 126, 14406])
}

/// 20449 - 3146z + 121z^2 + 13442z^3 - 1034z^4 + 2209z^6, the square of an
/// irreducible cubic; satisfies the direct leading-term lemma
pub fn sextic_direct_leading() -> Polynomial {
    poly(&[20449, -3146, 121, 13442, -1034, 0, 2209])
}

/// 128 + 120z^2 - 113z^4 - 105z^6; the dominance test cannot verify its
/// root locations (a factor has zeros exactly on the unit circle)
pub fn sextic_dominance_fails() -> Polynomial {
    poly(&[128, 0, 120, 0, -113, 0, -105])
}
