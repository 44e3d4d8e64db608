//! The corner-sum map `psi` between `PASM(nu/lambda, m, n)` and the order
//! polytope of the skew poset, its inverse, and the map `phi` into the
//! alternating sign matrix polytope with a cut-off corner.

use std::collections::BTreeSet;
use std::ops::Add;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrices::{corner_sums_generic, CornerSumMatrix, IntMatrix, Matrix, RationalMatrix};
use crate::polytope::{
    affine_rank, dilate_lattice_matrices, int_satisfies_dilated, satisfies_inequalities, vertices, PasmPolytopeSpec,
};
use crate::rational::{format_rational, int, Rational};
use crate::shapes::enumerate_between;
use crate::skewposet::{enumerate_filters, in_order_polytope, order_polynomial_value, PosetPoint, SkewPoset};

fn restrict<T: Clone>(c: &Matrix<T>, poset: &SkewPoset) -> Vec<T> {
    poset.elements().iter().map(|&(i, j)| c.get(i, j).clone()).collect()
}

/// Corner sums of `x` read off on the cells of `nu/lambda`, without checking
/// membership.
fn psi_values<T: Clone + Zero + std::ops::Sub<Output = T>>(x: &Matrix<T>, poset: &SkewPoset) -> Vec<T> {
    restrict(&corner_sums_generic(x), poset)
}

/// Extends values on `nu/lambda` to a full corner-sum matrix (0 on `lambda`,
/// `top` east of `nu`) and takes finite differences. Affine in `values`.
fn extend_and_invert(values: &[Rational], spec: &PasmPolytopeSpec, poset: &SkewPoset, top: &Rational) -> RationalMatrix {
    let (m, n) = (spec.rows(), spec.cols());
    let mut c = RationalMatrix::zeros(m, n);
    for i in 1..=m {
        for j in 1..=n {
            let v = if j <= spec.lambda().part(i) {
                Rational::zero()
            } else if j > spec.nu().part(i) {
                top.clone()
            } else {
                let k = poset.index_of((i, j)).expect("cell of nu/lambda");
                values[k].clone()
            };
            c.set(i, j, v);
        }
    }
    crate::matrices::inverse_corner_sums(&CornerSumMatrix(c))
}

/// `psi(X)`: the corner sums of `X` restricted to `nu/lambda`.
///
/// Fails with [`Error::OutsidePolytope`] when `X` violates the inequality
/// system.
pub fn psi(x: &RationalMatrix, spec: &PasmPolytopeSpec) -> Result<PosetPoint> {
    if !satisfies_inequalities(x, spec)? {
        return Err(Error::OutsidePolytope);
    }
    let poset = spec.poset();
    PosetPoint::from_ordered(&poset, psi_values(x, &poset))
}

/// `psi^{-1}(g)`: extends `g` by 0 on `lambda` and 1 east of `nu`, then
/// inverts the corner sums.
pub fn psi_inverse(g: &PosetPoint, spec: &PasmPolytopeSpec) -> Result<RationalMatrix> {
    let poset = spec.poset();
    if !in_order_polytope(&poset, g)? {
        return Err(Error::NotMonotone);
    }
    Ok(extend_and_invert(&g.ordered(&poset)?, spec, &poset, &Rational::one()))
}

/// `phi(M)`: adds 1 at `(i, n - i + 2)` for `2 <= i <= n`.
pub fn phi<T: Clone + One + Add<Output = T>>(x: &Matrix<T>) -> Result<Matrix<T>> {
    let (m, n) = (x.rows(), x.cols());
    if m != n {
        return Err(Error::NotSquare { m, n });
    }
    let mut out = x.clone();
    for i in 2..=n {
        let j = n - i + 2;
        out.set(i, j, x.get(i, j).clone() + T::one());
    }
    Ok(out)
}

/// Outcome of [`certify_integral_equivalence`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub affine_unimodular: bool,
    pub vertex_bijection: bool,
    #[serde(serialize_with = "dilate_triples")]
    pub dilate_counts: Vec<DilateComparison>,
    pub counterexample: Option<String>,
}

/// Lattice points of `t * PASM` against order-preserving maps into `{0..t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DilateComparison {
    pub t: i64,
    pub pasm: u128,
    pub order: u128,
}

fn dilate_triples<S: Serializer>(v: &[DilateComparison], s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<(i64, String, String)> = v.iter().map(|d| (d.t, d.pasm.to_string(), d.order.to_string())).collect();
    if v.iter().all(|d| d.pasm <= u64::MAX as u128 && d.order <= u64::MAX as u128) {
        let small: Vec<(i64, u64, u64)> = v.iter().map(|d| (d.t, d.pasm as u64, d.order as u64)).collect();
        return small.serialize(s);
    }
    rows.serialize(s)
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.affine_unimodular
            && self.vertex_bijection
            && self.counterexample.is_none()
            && self.dilate_counts.iter().all(|d| d.pasm == d.order)
    }
}

fn is_unit_lower_triangular(m: usize, n: usize) -> bool {
    // Column k of the operator is the corner-sum image of the k-th unit matrix.
    let size = m * n;
    for k in 0..size {
        let mut e = IntMatrix::zeros(m, n);
        e.set(k / n + 1, k % n + 1, 1);
        let image = corner_sums_generic(&e);
        for (r, &v) in image.entries().iter().enumerate() {
            let ok = match r.cmp(&k) {
                std::cmp::Ordering::Less => v == 0,
                std::cmp::Ordering::Equal => v == 1,
                std::cmp::Ordering::Greater => v == 0 || v == 1,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn check_affine(spec: &PasmPolytopeSpec, poset: &SkewPoset) -> std::result::Result<(), String> {
    let (m, n) = (spec.rows(), spec.cols());
    if !is_unit_lower_triangular(m, n) {
        return Err("corner-sum operator is not unit lower triangular".into());
    }
    let d = poset.len();
    let origin = vec![Rational::zero(); d];
    let base = extend_and_invert(&origin, spec, poset, &Rational::one());
    if base.to_integer().is_none() {
        return Err(format!("psi^-1(0) is not integral:\n{base}"));
    }
    if psi_values(&base, poset) != origin {
        return Err("psi(psi^-1(0)) != 0".into());
    }
    for k in 0..d {
        let mut e = origin.clone();
        e[k] = Rational::one();
        let image = extend_and_invert(&e, spec, poset, &Rational::one());
        let column = &image - &base;
        if column.to_integer().is_none() {
            return Err(format!("linear part of psi^-1 is not integral at {:?}", poset.elements()[k]));
        }
        if psi_values(&image, poset) != e {
            return Err(format!("psi(psi^-1(e)) != e at {:?}", poset.elements()[k]));
        }
    }
    let rank = affine_rank(&vertices(spec));
    if rank != d {
        return Err(format!("vertex affine rank {rank} differs from |nu/lambda| = {d}"));
    }
    Ok(())
}

fn check_vertices(spec: &PasmPolytopeSpec, poset: &SkewPoset) -> std::result::Result<(), String> {
    let mus = enumerate_between(spec.lambda(), spec.nu()).expect("spec guarantees lambda ⊆ nu");
    let filters: BTreeSet<Vec<Rational>> = enumerate_filters(poset)
        .iter()
        .map(|f| PosetPoint::indicator(poset, f).ordered(poset).expect("indicator covers every element"))
        .collect();
    let mut images = BTreeSet::new();
    for (mu, v) in mus.iter().zip(vertices(spec)) {
        let image: Vec<Rational> = psi_values(&v.to_rational(), poset);
        let back = extend_and_invert(&image, spec, poset, &Rational::one());
        if back != v.to_rational() {
            return Err(format!("psi^-1(psi(M^{mu})) != M^{mu}"));
        }
        if !filters.contains(&image) {
            return Err(format!("psi(M^{mu}) is not a filter indicator"));
        }
        images.insert(image);
    }
    if images.len() != mus.len() || images.len() != filters.len() {
        return Err(format!("{} vertices, {} distinct images, {} filters", mus.len(), images.len(), filters.len()));
    }
    Ok(())
}

fn compare_dilate(
    spec: &PasmPolytopeSpec,
    poset: &SkewPoset,
    t: i64,
) -> Result<(DilateComparison, Option<String>)> {
    let points = dilate_lattice_matrices(spec, t)?;
    let order = order_polynomial_value(poset, t + 1)?;
    let mut seen = BTreeSet::new();
    let mut problem = None;
    for x in &points {
        debug_assert!(int_satisfies_dilated(x, spec, t)?);
        let g = psi_values(x, poset);
        let monotone = poset.covers().iter().all(|&(a, b)| g[a] <= g[b]);
        if !monotone || g.iter().any(|&v| v < 0 || v > t) {
            problem.get_or_insert_with(|| format!("t = {t}: psi image {g:?} is not order preserving into [0, {t}]"));
        }
        if !seen.insert(g.clone()) {
            problem.get_or_insert_with(|| format!("t = {t}: psi is not injective at {g:?}"));
        }
        let back = extend_and_invert(&g.iter().map(|&v| int(v)).collect::<Vec<_>>(), spec, poset, &int(t));
        if back != x.to_rational() {
            problem.get_or_insert_with(|| format!("t = {t}: psi^-1 does not invert psi at {g:?}"));
        }
    }
    let cmp = DilateComparison { t, pasm: points.len() as u128, order };
    if cmp.pasm != cmp.order {
        problem.get_or_insert_with(|| format!("t = {t}: {} lattice points against {} order maps", cmp.pasm, cmp.order));
    }
    Ok((cmp, problem))
}

/// Checks that `psi` is an integral equivalence: an affine bijection with
/// integral unimodular linear part on the affine hulls, mapping vertices onto
/// filter indicators and lattice points of each dilate `t <= t_max` onto
/// order-preserving maps into `{0, ..., t}`.
pub fn certify_integral_equivalence(spec: &PasmPolytopeSpec, t_max: i64) -> Result<CertificationReport> {
    if t_max < 0 {
        return Err(Error::NonPositiveT);
    }
    let poset = spec.poset();
    let mut counterexample = None;
    let affine = check_affine(spec, &poset).map_err(|e| counterexample.get_or_insert(e).clone()).is_ok();
    let bijection = check_vertices(spec, &poset).map_err(|e| counterexample.get_or_insert(e).clone()).is_ok();
    let mut dilate_counts = Vec::new();
    for t in 1..=t_max {
        let (cmp, problem) = compare_dilate(spec, &poset, t)?;
        if let Some(p) = problem {
            counterexample.get_or_insert(p);
        }
        dilate_counts.push(cmp);
    }
    Ok(CertificationReport { affine_unimodular: affine, vertex_bijection: bijection, dilate_counts, counterexample })
}

/// `psi` applied to a rational point, formatted for display.
pub fn format_point(point: &PosetPoint) -> String {
    let parts: Vec<String> =
        point.values().iter().map(|((i, j), v)| format!("({i},{j}) -> {}", format_rational(v))).collect();
    parts.join(", ")
}
