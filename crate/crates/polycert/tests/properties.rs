//! Property tests for the numeric kernels.

mod common;

use common::{bi, poly};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use polycert::arith::{factorize, is_prime, vp, FactorPolicy, Valuation};
use polycert::newton::{lower_hull, ValuationPoint};
use polycert::poly::Polynomial;
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(-1000i64..=1000, 1..=9)
        .prop_filter_map("nonzero polynomial", |cs| {
            let p = Polynomial::from_i64(&cs);
            if p.is_zero() {
                None
            } else {
                Some(p)
            }
        })
}

proptest! {
    #[test]
    fn primitive_part_splits_content(f in small_poly()) {
        let (content, prim) = f.primitive_part().unwrap();
        prop_assert!(content.is_positive());
        prop_assert_eq!(prim.content().unwrap(), BigInt::one());
        prop_assert_eq!(prim.scaled(&content), f);
    }

    #[test]
    fn taylor_shift_matches_evaluation(f in small_poly(), m in -100i64..=100, x in -100i64..=100) {
        let shift = f.taylor_shift(&bi(m)).unwrap();
        prop_assert_eq!(shift.values().len(), f.degree() + 1);
        prop_assert_eq!(shift.values().last().unwrap(), f.leading());
        let lhs = shift.as_polynomial().evaluate(&bi(x));
        prop_assert_eq!(lhs, f.evaluate(&bi(m + x)));
    }

    #[test]
    fn reversal_is_an_involution(f in small_poly()) {
        prop_assume!(!f.coeffs()[0].is_zero());
        let r = f.reverse().unwrap();
        prop_assert_eq!(r.reverse().unwrap(), f.clone());
        prop_assert_eq!(r.degree(), f.degree());
    }

    #[test]
    fn factorization_reassembles(n in 2u64..=u64::MAX) {
        let f = factorize(&BigInt::from(n), &FactorPolicy::default()).unwrap();
        prop_assert_eq!(f.reassemble(), BigInt::from(n));
        if f.complete() {
            for (p, _) in f.factors() {
                prop_assert!(is_prime(p));
            }
            let mut sorted = f.factors().to_vec();
            sorted.sort_by(|a, b| a.0.cmp(&b.0));
            prop_assert_eq!(sorted.as_slice(), f.factors());
        }
    }

    #[test]
    fn valuation_is_exact(base in 1i64..=100_000, e in 0u32..6, pi in 0usize..5) {
        let p = [2i64, 3, 5, 7, 11][pi];
        prop_assume!(base % p != 0);
        let n = bi(p).pow(e) * bi(base);
        let v = vp(&n, &bi(p)).unwrap();
        prop_assert_eq!(v, Valuation::Finite(e as u64));
        // p^v divides, p^(v+1) does not
        prop_assert!((&n % bi(p).pow(e)).is_zero());
        prop_assert!(!(&n % bi(p).pow(e + 1)).is_zero());
    }

    #[test]
    fn hulls_are_lower_convex_supports(ys in proptest::collection::vec(0u64..40, 2..=14)) {
        let pts: Vec<ValuationPoint> =
            ys.iter().enumerate().map(|(x, &y)| ValuationPoint { x, y }).collect();
        let np = lower_hull(&bi(2), &pts).unwrap();
        for w in np.edges.windows(2) {
            prop_assert!(w[0].slope < w[1].slope);
        }
        for q in &pts {
            for e in &np.edges {
                if q.x >= e.from.x && q.x <= e.to.x {
                    let lhs = (q.y as i128 - e.from.y as i128) * e.width as i128;
                    let rhs = (e.to.y as i128 - e.from.y as i128) * (q.x - e.from.x) as i128;
                    prop_assert!(lhs >= rhs);
                }
            }
        }
        prop_assert_eq!(np.vertices.first().unwrap().x, 0);
        prop_assert_eq!(np.vertices.last().unwrap().x, pts.len() - 1);
    }
}

#[test]
fn oracle_cross_validates_constructed_products() {
    // products of verified irreducibles are recovered exactly
    use polycert::oracle::{oracle_factor, OracleLimits};
    let g = poly(&[2, 0, 1]);
    let h = poly(&[-1, -2, 2]);
    let fgh = g.mul(&h).mul(&g);
    let fac = oracle_factor(&fgh, &OracleLimits::default()).unwrap();
    assert_eq!(fac.count(), 3);
    assert_eq!(fac.factors, vec![h.clone(), g.clone(), g.clone()]);
}
