use lforge::algebra::{rat, InverseRoot, LaurentPoly, TruncatedSeries};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

const NAMES: [&str; 3] = ["x", "y", "z"];

fn arb_poly(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        ((-3i32..=3, -3i32..=3, -2i32..=2), (-5i64..=5, 1i64..=4)),
        0..=max_terms,
    )
    .prop_map(|terms| {
        LaurentPoly::from_terms(
            &NAMES,
            terms
                .into_iter()
                .map(|((a, b, c), (n, d))| (vec![a, b, c], rat(n, d))),
        )
        .unwrap()
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_undoes_multiplication(a in arb_poly(5), b in arb_poly(4)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn multiplication_is_associative(a in arb_poly(4), b in arb_poly(4), c in arb_poly(4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(4), b in arb_poly(4), c in arb_poly(4)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn addition_commutes_and_subtraction_inverts(a in arb_poly(5), b in arb_poly(5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn render_parse_round_trip(a in arb_poly(6)) {
        let text = a.render();
        let back = LaurentPoly::parse(&text).unwrap();
        prop_assert_eq!(back.render(), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn json_round_trip(a in arb_poly(6)) {
        let v = serde_json::to_string(&a).unwrap();
        let back: LaurentPoly = serde_json::from_str(&v).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn unit_roots_give_binomials(k in 1usize..=12, n in 0u32..=8) {
        let roots = vec![InverseRoot::in_t(LaurentPoly::one(), 1); k];
        let s = TruncatedSeries::from_inverse_roots(&roots, Some(n), None);
        let got = s.coefficient(n, 0).as_constant().unwrap();
        let expected = binomial(n as u64 + k as u64 - 1, k as u64 - 1);
        prop_assert_eq!(got.to_integer(), BigInt::from(expected));
        prop_assert_eq!(s.coefficient(0, 0).as_constant().unwrap().to_i64(), Some(1));
    }

    #[test]
    fn series_product_matches_root_union(split in 0usize..=4) {
        let all: Vec<InverseRoot> = ["x", "y^-1", "2*z", "x*y", "-1/3"]
            .iter()
            .map(|s| InverseRoot::in_t(LaurentPoly::parse(s).unwrap(), 1))
            .collect();
        let (left, right) = all.split_at(split);
        let whole = TruncatedSeries::from_inverse_roots(&all, Some(5), None);
        let prod = TruncatedSeries::from_inverse_roots(left, Some(5), None)
            .mul(&TruncatedSeries::from_inverse_roots(right, Some(5), None));
        prop_assert!(whole.eq_truncated(&prod));
    }
}
