//! Round-trip property: the canonical printer and the parser agree.

use polycert::Polynomial;
use polycert_cli::parse::parse_poly;
use proptest::prelude::*;

proptest! {
    #[test]
    fn parse_inverts_print(cs in proptest::collection::vec(-10_000i64..=10_000, 1..=10)) {
        let p = Polynomial::from_i64(&cs);
        let printed = p.to_string();
        let back = parse_poly(&printed).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn parse_accepts_spaced_variants(a in 0i64..=50, b in 0i64..=50, c in 1i64..=50) {
        let text = format!(" {a} - {b} z + {c} * z^2 ");
        let compact = format!("{a}-{b}z+{c}*z^2");
        prop_assert_eq!(parse_poly(&text).unwrap(), parse_poly(&compact).unwrap());
        let with_x = format!("{a}-{b}x+{c}x^2");
        prop_assert_eq!(parse_poly(&with_x).unwrap(), parse_poly(&compact).unwrap());
    }
}
