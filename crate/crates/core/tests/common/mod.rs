//! Shape generators and oracles shared by the integration tests. The oracles
//! here recompute quantities by routes that do not go through the library's
//! own algorithms.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::Zero;
use pasm::polytope::PasmPolytopeSpec;
use pasm::rational::{int, ratio, Rational};
use pasm::{IntMatrix, Partition, PosetPoint, RationalMatrix, SkewPoset};
use proptest::prelude::*;
use rand::Rng;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Partitions of exactly `k`, parts in decreasing order.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_up_to(k: usize) -> Vec<Partition> {
    (0..=k).flat_map(partitions_of).collect()
}

/// Every pair `lambda ⊆ nu` with `|nu| <= max_nu`.
pub fn shape_pairs(max_nu: usize) -> Vec<(Partition, Partition)> {
    let all = partitions_up_to(max_nu);
    let mut out = Vec::new();
    for nu in &all {
        for lam in &all {
            if pasm::shapes::contains(lam, nu) {
                out.push((nu.clone(), lam.clone()));
            }
        }
    }
    out
}

/// Minimal-box specs with `|nu| <= max_nu` and `|nu/lambda| <= max_skew`.
pub fn minimal_specs(max_nu: usize, max_skew: usize) -> Vec<PasmPolytopeSpec> {
    shape_pairs(max_nu)
        .into_iter()
        .filter(|(nu, lam)| nu.size() - lam.size() <= max_skew)
        .map(|(nu, lam)| PasmPolytopeSpec::minimal(nu, lam).unwrap())
        .collect()
}

pub fn arb_partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A skew shape in a box at most one row and column larger than minimal.
pub fn arb_spec(max_len: usize, max_part: usize) -> impl Strategy<Value = PasmPolytopeSpec> {
    (arb_partition(max_len, max_part), any::<u64>(), 0..=1usize, 0..=1usize).prop_map(|(nu, seed, dm, dn)| {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let mut lam: Vec<usize> = (1..=nu.len()).map(|i| rng.gen_range(0..=nu.part(i))).collect();
        for k in 1..lam.len() {
            lam[k] = lam[k].min(lam[k - 1]);
        }
        let lam = Partition::new(lam).unwrap();
        PasmPolytopeSpec::new(nu.clone(), lam, nu.len() + 1 + dm, nu.part(1) + 1 + dn).unwrap()
    })
}

/// Elements of the poset as bit positions; `below[k]` is the mask of lower
/// covers of `k`.
fn cover_masks(poset: &SkewPoset) -> Vec<u64> {
    let mut below = vec![0u64; poset.len()];
    for &(a, b) in poset.covers() {
        below[b] |= 1 << a;
    }
    below
}

/// Every order ideal, as a bitmask, by closing under lower covers.
pub fn order_ideals(poset: &SkewPoset) -> Vec<u64> {
    let below = cover_masks(poset);
    let n = poset.len();
    assert!(n <= 20, "oracle is exponential");
    (0u64..1 << n).filter(|&s| (0..n).all(|k| s & (1 << k) == 0 || below[k] & !s == 0)).collect()
}

/// Linear extensions as maximal chains in the lattice of order ideals.
pub fn linear_extensions_by_ideals(poset: &SkewPoset) -> u128 {
    let below = cover_masks(poset);
    let n = poset.len();
    let mut ways: BTreeMap<u64, u128> = BTreeMap::new();
    ways.insert(0, 1);
    let mut ideals = order_ideals(poset);
    ideals.sort_by_key(|s| s.count_ones());
    for s in ideals {
        let w = ways.get(&s).copied().unwrap_or(0);
        for (k, &under) in below.iter().enumerate() {
            if s & (1 << k) == 0 && under & !s == 0 {
                *ways.entry(s | 1 << k).or_insert(0) += w;
            }
        }
    }
    ways.get(&((1u64 << n) - 1)).copied().unwrap_or(0)
}

/// `Omega(P, t)` as the number of multichains `I_1 ⊆ ... ⊆ I_{t-1}` of order
/// ideals.
pub fn order_polynomial_by_multichains(poset: &SkewPoset, t: i64) -> u128 {
    if t <= 0 {
        return 0;
    }
    let ideals = order_ideals(poset);
    let mut counts: Vec<u128> = vec![1; ideals.len()];
    for _ in 1..t - 1 {
        counts = ideals
            .iter()
            .map(|&top| ideals.iter().zip(&counts).filter(|(&s, _)| s & !top == 0).map(|(_, &c)| c).sum())
            .collect();
    }
    if t == 1 {
        return 1;
    }
    counts.iter().sum()
}

/// `M^mu` from its corner sums `c_ij = [j > mu_i]` by finite differences.
pub fn m_mu_from_corner_sums(mu: &Partition, m: usize, n: usize) -> IntMatrix {
    let c = |i: usize, j: usize| -> i64 { (i > 0 && j > 0 && j > mu.part(i)) as i64 };
    let rows = (1..=m).map(|i| (1..=n).map(|j| c(i, j) - c(i - 1, j) - c(i, j - 1) + c(i - 1, j - 1)).collect()).collect();
    IntMatrix::from_rows(rows).unwrap()
}

/// Northwest corner sums by direct summation.
pub fn corner_sums_direct(x: &RationalMatrix) -> RationalMatrix {
    let mut c = RationalMatrix::zeros(x.rows(), x.cols());
    for i in 1..=x.rows() {
        for j in 1..=x.cols() {
            let mut s = Rational::zero();
            for a in 1..=i {
                for b in 1..=j {
                    s += x.get(a, b);
                }
            }
            c.set(i, j, s);
        }
    }
    c
}

/// A random point of the order polytope with values of denominator `den`,
/// made monotone by taking running maxima along lower covers.
pub fn random_order_point(poset: &SkewPoset, rng: &mut impl Rng, den: i64) -> PosetPoint {
    let mut values: Vec<Rational> = Vec::with_capacity(poset.len());
    for k in 0..poset.len() {
        let mut v = ratio(rng.gen_range(0..=den), den);
        for &l in poset.lower_covers(k) {
            if values[l] > v {
                v = values[l].clone();
            }
        }
        values.push(v);
    }
    PosetPoint::from_ordered(poset, values).unwrap()
}

/// A random convex combination of the vertices.
pub fn random_convex_combination(verts: &[IntMatrix], rng: &mut impl Rng) -> RationalMatrix {
    let mut weights: Vec<i64> = verts.iter().map(|_| rng.gen_range(0..5)).collect();
    if weights.iter().all(|&w| w == 0) {
        weights[0] = 1;
    }
    let total: i64 = weights.iter().sum();
    let mut x = RationalMatrix::zeros(verts[0].rows(), verts[0].cols());
    for (v, &w) in verts.iter().zip(&weights) {
        x = &x + &v.to_rational().map(|e| e * ratio(w, total));
    }
    x
}

/// `prod_{1 <= i < j <= n} (2t + i + j - 1) / (i + j - 1)`.
pub fn staircase_product(n: i64, t: i64) -> Rational {
    let mut out = int(1);
    for i in 1..=n {
        for j in i + 1..=n {
            out *= ratio(2 * t + i + j - 1, i + j - 1);
        }
    }
    out
}
