mod common;

use common::*;
use num_traits::Zero;
use pasm::matrices::{build_m_mu, corner_sums, inverse_corner_sums, is_pasm, CornerSumMatrix};
use pasm::rational::ratio;
use pasm::shapes::{border_strip, cells, enumerate_between, SkewShape};
use pasm::{Partition, RationalMatrix};
use proptest::prelude::*;

fn is_edge_connected(cells: &pasm::CellSet) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen = std::collections::BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((i, j)) = stack.pop() {
        for c in [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))] {
            if cells.contains(&c) && seen.insert(c) {
                stack.push(c);
            }
        }
    }
    seen.len() == cells.len()
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(nu in arb_partition(6, 6)) {
        prop_assert_eq!(nu.conjugate().conjugate(), nu.clone());
        prop_assert_eq!(nu.conjugate().size(), nu.size());
    }

    #[test]
    fn between_lists_each_intermediate_once(spec in arb_spec(4, 4)) {
        let all = enumerate_between(spec.lambda(), spec.nu()).unwrap();
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
        for mu in &all {
            prop_assert!(pasm::shapes::contains(spec.lambda(), mu) && pasm::shapes::contains(mu, spec.nu()));
        }
        let filters = order_ideals(&spec.poset()).len();
        prop_assert_eq!(all.len(), filters);
    }

    #[test]
    fn border_strip_is_a_ribbon_hugging_nu(nu in arb_partition(5, 5), extra_m in 0..2usize, extra_n in 0..2usize) {
        let (m, n) = (nu.len() + 1 + extra_m, nu.part(1) + 1 + extra_n);
        let strip = border_strip(&nu, m, n).unwrap();
        prop_assert_eq!(strip.len(), nu.len() + nu.part(1) + 1);
        prop_assert!(is_edge_connected(&strip));
        for &(i, j) in &strip {
            prop_assert!(j > nu.part(i), "cell inside nu");
            prop_assert!(!(strip.contains(&(i + 1, j)) && strip.contains(&(i, j + 1)) && strip.contains(&(i + 1, j + 1))));
            // One step south-east of the strip lies outside the diagram of nu
            // and one step north-west inside it (or off the board).
            let nw_inside = i == 1 || j == 1 || j - 1 <= nu.part(i - 1);
            prop_assert!(nw_inside);
        }
        for i in 1..=nu.len() + 1 {
            prop_assert!(strip.contains(&(i, nu.part(i) + 1)));
        }
    }

    #[test]
    fn skew_cells_count(spec in arb_spec(5, 5)) {
        prop_assert_eq!(cells(spec.shape()).len(), spec.nu().size() - spec.lambda().size());
    }

    #[test]
    fn m_mu_matches_corner_sum_description(mu in arb_partition(4, 4), extra_m in 0..2usize, extra_n in 0..2usize) {
        let (m, n) = (mu.len() + 1 + extra_m, mu.part(1) + 1 + extra_n);
        let built = build_m_mu(&mu, m, n).unwrap();
        prop_assert_eq!(&built, &m_mu_from_corner_sums(&mu, m, n));
        prop_assert!(is_pasm(&built));
    }

    #[test]
    fn corner_sums_invert(rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 1..5)) {
        let x = RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| ratio(v, 3)).collect()).collect()).unwrap();
        let c = corner_sums(&x);
        prop_assert_eq!(&c.0, &corner_sums_direct(&x));
        prop_assert_eq!(inverse_corner_sums(&c), x.clone());
        let back = corner_sums(&inverse_corner_sums(&CornerSumMatrix(x.clone())));
        prop_assert_eq!(back.0, x);
    }
}

#[test]
fn skew_shape_json_round_trip() {
    let shape = SkewShape::new(p(&[4, 2, 2]), p(&[3, 1]), 4, 5).unwrap();
    let text = serde_json::to_string(&shape).unwrap();
    assert_eq!(text, r#"{"nu":[4,2,2],"lambda":[3,1],"m":4,"n":5}"#);
    let back: SkewShape = serde_json::from_str(&text).unwrap();
    assert_eq!(back, shape);
}

#[test]
fn partition_census() {
    let counts: Vec<usize> = (0..=8).map(|k| partitions_of(k).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    assert!(Partition::empty().is_empty() && RationalMatrix::zeros(2, 2).entries().iter().all(Zero::is_zero));
}
