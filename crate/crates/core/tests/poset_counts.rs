mod common;

use common::*;
use pasm::hooklength::{excited_diagrams, naruse_count};
use pasm::rational::{int, ratio};
use pasm::skewposet::{
    count_linear_extensions, descent_distribution, enumerate_filters, interpolate_integer_samples,
    order_polynomial, order_polynomial_brute, order_polynomial_by_descents, SkewPoset,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_extensions_agree(spec in arb_spec(4, 4)) {
        let poset = spec.poset();
        let e = count_linear_extensions(&poset);
        prop_assert_eq!(e, linear_extensions_by_ideals(&poset));
        prop_assert_eq!(e, naruse_count(spec.nu(), spec.lambda()).unwrap());
        prop_assert_eq!(descent_distribution(&poset).unwrap().iter().sum::<u128>(), e);
    }

    #[test]
    fn order_polynomial_three_ways(spec in arb_spec(3, 4), t in 1i64..5) {
        let poset = spec.poset();
        let oracle = order_polynomial_by_multichains(&poset, t);
        prop_assert_eq!(order_polynomial_brute(&poset, t).unwrap(), oracle);
        prop_assert_eq!(order_polynomial_by_descents(&poset, t).unwrap(), oracle);
    }

    #[test]
    fn order_polynomial_interpolates(spec in arb_spec(3, 3)) {
        let poset = spec.poset();
        let poly = order_polynomial(&poset).unwrap();
        let d = poset.len();
        prop_assert_eq!(poly.degree().unwrap_or(0), d);
        let factorial: i64 = (1..=d as i64).product();
        prop_assert_eq!(poly.leading_coefficient(), ratio(count_linear_extensions(&poset) as i64, factorial));
        for t in 1..=d as i64 + 3 {
            prop_assert_eq!(poly.eval_int(t), int(order_polynomial_by_multichains(&poset, t) as i64));
        }
    }

    #[test]
    fn filters_are_complements_of_ideals(spec in arb_spec(4, 4)) {
        let poset = spec.poset();
        let filters = enumerate_filters(&poset);
        prop_assert_eq!(filters.len(), order_ideals(&poset).len());
        for f in &filters {
            for &(a, b) in poset.covers() {
                let (ca, cb) = (poset.elements()[a], poset.elements()[b]);
                prop_assert!(!f.contains(&ca) || f.contains(&cb));
            }
        }
    }

    #[test]
    fn excited_diagrams_stay_inside(spec in arb_spec(4, 4)) {
        for d in excited_diagrams(spec.nu(), spec.lambda()).unwrap() {
            prop_assert_eq!(d.cells.len(), spec.lambda().size());
            prop_assert!(d.cells.iter().all(|&(i, j)| j <= spec.nu().part(i)));
        }
    }
}

#[test]
fn naruse_on_every_shape_up_to_seven() {
    for (nu, lam) in shape_pairs(7) {
        let poset = pasm::skewposet::build_poset(&pasm::SkewShape::minimal(nu.clone(), lam.clone()).unwrap());
        assert_eq!(naruse_count(&nu, &lam).unwrap(), linear_extensions_by_ideals(&poset), "{nu}/{lam}");
    }
}

#[test]
fn interpolation_recovers_samples() {
    let samples: Vec<(i64, u128)> = (0..5).map(|t| (t, (t * t * t + 2) as u128)).collect();
    let poly = interpolate_integer_samples(&samples).unwrap();
    assert_eq!(poly.to_string(), "t^3 + 2");
    assert!(interpolate_integer_samples(&[(1, 1), (1, 2)]).is_err());
}

#[test]
fn poset_json_round_trip() {
    let spec = pasm::PasmPolytopeSpec::minimal(p(&[4, 2, 2]), p(&[3, 1])).unwrap();
    let poset = spec.poset();
    let text = serde_json::to_string(&poset).unwrap();
    let back: SkewPoset = serde_json::from_str(&text).unwrap();
    assert_eq!(back.covers(), poset.covers());
    assert_eq!(back.lower_covers(3), poset.lower_covers(3));
}
