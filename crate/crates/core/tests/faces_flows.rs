mod common;

use common::*;
use pasm::facelattice::{
    basic_sum_labeling, face_labeling, region_count, union_sum_labeling, vertex_union_labeling,
};
use pasm::flowpoly::{
    certify_flow_equivalence, embed_hatted_hasse, flow_graph, is_flow, order_point_to_flow, truncated_dual,
};
use pasm::polytope::{dimension, vertices};
use pasm::skewposet::{enumerate_filters, PosetPoint};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn face_labeling_is_the_vertex_union(spec in arb_spec(4, 4)) {
        let face = face_labeling(&spec);
        prop_assert_eq!(&face, &vertex_union_labeling(&spec));
        prop_assert_eq!(region_count(&face), spec.shape().size());
    }

    #[test]
    fn unions_only_grow(spec in arb_spec(3, 3), cut in 1usize..6) {
        let verts = vertices(&spec);
        let cut = cut.min(verts.len());
        let small = union_sum_labeling(&verts[..cut]).unwrap();
        let all = union_sum_labeling(&verts).unwrap();
        for (e, l) in small.iter() {
            let big = all.get(e).unwrap();
            prop_assert!((!l.zero || big.zero) && (!l.one || big.one));
        }
        let basic = basic_sum_labeling(&verts[0]).unwrap();
        prop_assert!(basic.iter().all(|(_, l)| !l.is_both()));
    }

    #[test]
    fn random_order_points_give_flows(spec in arb_spec(3, 4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let poset = spec.poset();
        let g = flow_graph(&poset).unwrap();
        let f = random_order_point(&poset, &mut rng, 11);
        let fl = order_point_to_flow(&f, &g).unwrap();
        prop_assert!(is_flow(&fl, &g).unwrap());
    }
}

#[test]
fn dimension_three_ways_up_to_six() {
    for spec in minimal_specs(6, 6) {
        let d = spec.shape().size();
        assert_eq!(dimension(&spec), d);
        assert_eq!(region_count(&face_labeling(&spec)), d);
    }
}

#[test]
fn dual_edges_match_hatted_covers() {
    for spec in minimal_specs(6, 6) {
        let poset = spec.poset();
        let h = embed_hatted_hasse(&poset).unwrap();
        let g = truncated_dual(&h).unwrap();
        let covers = if poset.is_empty() {
            1
        } else {
            poset.covers().len() + poset.minimal_elements().len() + poset.maximal_elements().len()
        };
        assert_eq!(g.edges().len(), covers);
        assert_eq!(g.vertex_count(), h.bounded_face_count());
        assert_eq!(g.topological_order().first(), Some(&g.source()));
    }
}

#[test]
fn filter_images_are_path_flows() {
    let spec = pasm::PasmPolytopeSpec::minimal(p(&[4, 2, 2]), p(&[3, 1])).unwrap();
    let poset = spec.poset();
    let g = flow_graph(&poset).unwrap();
    let mut images = std::collections::BTreeSet::new();
    for filter in enumerate_filters(&poset) {
        let fl = order_point_to_flow(&PosetPoint::indicator(&poset, &filter), &g).unwrap();
        assert!(is_flow(&fl, &g).unwrap());
        let support: Vec<usize> = fl.values.iter().filter(|(_, v)| **v != pasm::rational::int(0)).map(|(e, _)| *e).collect();
        // A unit path from source to sink crosses one edge out of the source.
        assert_eq!(support.iter().filter(|&&e| g.edges()[e].from == g.source()).count(), 1);
        images.insert(support);
    }
    assert_eq!(images.len(), 10);
}

#[test]
fn flow_certificates_on_small_shapes() {
    for spec in minimal_specs(5, 5) {
        let cert = certify_flow_equivalence(&spec.poset(), 2).unwrap();
        assert!(cert.passed(), "{:?}: {:?}", spec, cert);
    }
}
