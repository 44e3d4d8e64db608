//! The poset `P(nu/lambda)` on the cells of a skew shape, its order polytope,
//! linear extensions and order polynomial.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};
use crate::shapes::{cells, Cell, SkewShape};

/// Cells ordered componentwise; elements are stored row-major, which is a
/// natural labeling (every cover goes from a smaller to a larger index).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PosetJson")]
pub struct SkewPoset {
    elements: Vec<Cell>,
    covers: Vec<(usize, usize)>,
    #[serde(skip)]
    lower: Vec<Vec<usize>>,
    #[serde(skip)]
    upper: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct PosetJson {
    elements: Vec<Cell>,
    covers: Vec<(usize, usize)>,
}

impl TryFrom<PosetJson> for SkewPoset {
    type Error = String;

    fn try_from(raw: PosetJson) -> std::result::Result<Self, String> {
        let poset = SkewPoset::from_cells(raw.elements.clone());
        let mut covers = raw.covers;
        covers.sort();
        if poset.elements != raw.elements || poset.covers != covers {
            return Err("elements must be distinct cells in row-major order with adjacent-cell covers".into());
        }
        Ok(poset)
    }
}

pub fn build_poset(shape: &SkewShape) -> SkewPoset {
    SkewPoset::from_cells(cells(shape).into_iter().collect())
}

impl SkewPoset {
    /// Poset on an arbitrary cell list with the componentwise order; covers are
    /// the horizontally or vertically adjacent pairs.
    pub(crate) fn from_cells(mut elements: Vec<Cell>) -> Self {
        elements.sort();
        elements.dedup();
        let index: HashMap<Cell, usize> = elements.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut covers = Vec::new();
        for (a, &(i, j)) in elements.iter().enumerate() {
            for next in [(i, j + 1), (i + 1, j)] {
                if let Some(&b) = index.get(&next) {
                    covers.push((a, b));
                }
            }
        }
        covers.sort();
        let mut lower = vec![Vec::new(); elements.len()];
        let mut upper = vec![Vec::new(); elements.len()];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }
        SkewPoset { elements, covers, lower, upper }
    }

    pub fn elements(&self) -> &[Cell] {
        &self.elements
    }

    /// Cover relations as `(smaller, larger)` index pairs.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.elements.binary_search(&cell).ok()
    }

    pub fn lower_covers(&self, k: usize) -> &[usize] {
        &self.lower[k]
    }

    pub fn upper_covers(&self, k: usize) -> &[usize] {
        &self.upper[k]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.lower[k].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.upper[k].is_empty()).collect()
    }

    /// `a <= b` in the componentwise order of cells.
    pub fn le(&self, a: usize, b: usize) -> bool {
        let (x, y) = (self.elements[a], self.elements[b]);
        x.0 <= y.0 && x.1 <= y.1
    }
}

/// A real-valued labeling of the poset elements.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PosetPoint {
    #[serde(with = "point_serde")]
    values: BTreeMap<Cell, Rational>,
}

impl PosetPoint {
    pub fn new(values: BTreeMap<Cell, Rational>) -> Self {
        PosetPoint { values }
    }

    /// Values listed in the poset's element order.
    pub fn from_ordered(poset: &SkewPoset, values: Vec<Rational>) -> Result<Self> {
        if values.len() != poset.len() {
            return Err(Error::DimensionMismatch {
                expected: poset.len().to_string(),
                found: values.len().to_string(),
            });
        }
        Ok(PosetPoint { values: poset.elements.iter().copied().zip(values).collect() })
    }

    /// The 0/1 indicator of a set of elements.
    pub fn indicator(poset: &SkewPoset, members: &BTreeSet<Cell>) -> Self {
        let values =
            poset.elements.iter().map(|c| (*c, if members.contains(c) { Rational::one() } else { Rational::zero() }));
        PosetPoint { values: values.collect() }
    }

    pub fn get(&self, cell: Cell) -> Option<&Rational> {
        self.values.get(&cell)
    }

    pub fn values(&self) -> &BTreeMap<Cell, Rational> {
        &self.values
    }

    pub fn ordered(&self, poset: &SkewPoset) -> Result<Vec<Rational>> {
        poset.elements.iter().map(|&c| self.values.get(&c).cloned().ok_or(Error::MissingValue(c))).collect()
    }
}

mod point_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        cell: Cell,
        #[serde(with = "crate::rational::serde_rational")]
        value: Rational,
    }

    pub fn serialize<S: Serializer>(v: &BTreeMap<Cell, Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = v.iter().map(|(c, r)| Entry { cell: *c, value: r.clone() }).collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Cell, Rational>, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        Ok(entries.into_iter().map(|e| (e.cell, e.value)).collect())
    }
}

/// Values in `[0, 1]` and weakly increasing along every cover.
pub fn in_order_polytope(poset: &SkewPoset, f: &PosetPoint) -> Result<bool> {
    let values = f.ordered(poset)?;
    if !values.iter().all(crate::rational::unit_interval) {
        return Ok(false);
    }
    Ok(poset.covers.iter().all(|&(a, b)| values[a] <= values[b]))
}

/// Number of linear extensions, by backtracking over which element is placed
/// next.
pub fn count_linear_extensions(poset: &SkewPoset) -> u128 {
    fn place(poset: &SkewPoset, placed: &mut [bool], waiting: &mut [usize], remaining: usize) -> u128 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for k in 0..poset.len() {
            if placed[k] || waiting[k] > 0 {
                continue;
            }
            placed[k] = true;
            for &u in &poset.upper[k] {
                waiting[u] -= 1;
            }
            total += place(poset, placed, waiting, remaining - 1);
            for &u in &poset.upper[k] {
                waiting[u] += 1;
            }
            placed[k] = false;
        }
        total
    }
    let mut placed = vec![false; poset.len()];
    let mut waiting: Vec<usize> = poset.lower.iter().map(Vec::len).collect();
    place(poset, &mut placed, &mut waiting, poset.len())
}

/// Posets up to this size are evaluated by direct map enumeration in
/// [`order_polynomial_value`].
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 10;

/// `Omega(P, t)`: the number of order-preserving maps `P -> {1, ..., t}`.
pub fn order_polynomial_value(poset: &SkewPoset, t: i64) -> Result<u128> {
    order_polynomial_value_with(poset, t, DEFAULT_BRUTE_FORCE_LIMIT)
}

/// As [`order_polynomial_value`], enumerating maps directly when the poset has
/// at most `brute_force_limit` elements and summing over linear extensions by
/// descent number otherwise.
pub fn order_polynomial_value_with(poset: &SkewPoset, t: i64, brute_force_limit: usize) -> Result<u128> {
    if t <= 0 {
        return Err(Error::NonPositiveT);
    }
    if poset.len() <= brute_force_limit {
        order_polynomial_brute(poset, t)
    } else {
        order_polynomial_by_descents(poset, t)
    }
}

/// Counts order-preserving maps into `{1, ..., t}` one by one.
pub fn order_polynomial_brute(poset: &SkewPoset, t: i64) -> Result<u128> {
    if t <= 0 {
        return Err(Error::NonPositiveT);
    }
    fn assign(poset: &SkewPoset, k: usize, t: i64, values: &mut [i64]) -> u128 {
        if k == poset.len() {
            return 1;
        }
        let floor = poset.lower[k].iter().map(|&l| values[l]).max().unwrap_or(1);
        let mut total = 0;
        for v in floor..=t {
            values[k] = v;
            total += assign(poset, k + 1, t, values);
        }
        total
    }
    let mut values = vec![0; poset.len()];
    Ok(assign(poset, 0, t, &mut values))
}

/// Number of linear extensions having each possible number of descents with
/// respect to the row-major labeling; index `d` holds the count with `d`
/// descents.
pub fn descent_distribution(poset: &SkewPoset) -> Result<Vec<u128>> {
    let size = poset.len();
    if size > 63 {
        return Err(Error::InstanceTooLarge(format!("{size} elements exceeds the 63-element bitmask limit")));
    }
    fn go(
        poset: &SkewPoset,
        placed: u64,
        last: usize,
        memo: &mut HashMap<(u64, usize), Vec<u128>>,
    ) -> Vec<u128> {
        let size = poset.len();
        if placed.count_ones() as usize == size {
            return vec![1];
        }
        if let Some(hit) = memo.get(&(placed, last)) {
            return hit.clone();
        }
        let mut dist = vec![0u128; size];
        for k in 0..size {
            if placed & (1 << k) != 0 || poset.lower[k].iter().any(|&l| placed & (1 << l) == 0) {
                continue;
            }
            let shift = usize::from(placed != 0 && k < last);
            for (d, c) in go(poset, placed | (1 << k), k, memo).into_iter().enumerate() {
                if c > 0 {
                    dist[d + shift] += c;
                }
            }
        }
        memo.insert((placed, last), dist.clone());
        dist
    }
    if size == 0 {
        return Ok(vec![1]);
    }
    let mut memo = HashMap::new();
    let mut dist = go(poset, 0, 0, &mut memo);
    while dist.len() > 1 && dist.last() == Some(&0) {
        dist.pop();
    }
    Ok(dist)
}

/// `Omega(P, t) = sum_d w_d * C(t - 1 - d + |P|, |P|)` where `w_d` counts
/// linear extensions with `d` descents.
pub fn order_polynomial_by_descents(poset: &SkewPoset, t: i64) -> Result<u128> {
    if t <= 0 {
        return Err(Error::NonPositiveT);
    }
    let p = poset.len() as i64;
    let mut total = 0u128;
    for (d, w) in descent_distribution(poset)?.into_iter().enumerate() {
        let top = t - 1 - d as i64 + p;
        total += w * binomial(top, p);
    }
    Ok(total)
}

fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Calls `visit` with every order-preserving map into `{0, ..., t}`, listed in
/// the element order.
pub fn for_each_order_preserving_map(poset: &SkewPoset, t: i64, visit: &mut dyn FnMut(&[i64])) {
    fn assign(poset: &SkewPoset, k: usize, t: i64, values: &mut [i64], visit: &mut dyn FnMut(&[i64])) {
        if k == poset.len() {
            visit(values);
            return;
        }
        let floor = poset.lower[k].iter().map(|&l| values[l]).max().unwrap_or(0);
        for v in floor..=t {
            values[k] = v;
            assign(poset, k + 1, t, values, visit);
        }
    }
    if t < 0 {
        return;
    }
    let mut values = vec![0; poset.len()];
    assign(poset, 0, t, &mut values, visit);
}

/// All order filters (up-closed subsets), each once, sorted.
pub fn enumerate_filters(poset: &SkewPoset) -> Vec<BTreeSet<Cell>> {
    fn go(poset: &SkewPoset, k: usize, chosen: &mut Vec<bool>, out: &mut Vec<BTreeSet<Cell>>) {
        if k == 0 {
            let filter = chosen.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| poset.elements[i]).collect();
            out.push(filter);
            return;
        }
        let idx = k - 1;
        go(poset, idx, chosen, out);
        if poset.upper[idx].iter().all(|&u| chosen[u]) {
            chosen[idx] = true;
            go(poset, idx, chosen, out);
            chosen[idx] = false;
        }
    }
    let mut out = Vec::new();
    let mut chosen = vec![false; poset.len()];
    go(poset, poset.len(), &mut chosen, &mut out);
    out.sort();
    out
}

/// A polynomial in one variable with exact rational coefficients, constant
/// term first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&crate::rational::int(x))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let coef = format_rational(&mag);
            match d {
                0 => write!(f, "{coef}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{coef}*")?,
            }
            match d {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.iter().map(format_rational).collect::<Vec<_>>().serialize(s)
    }
}

/// The unique polynomial of degree below `points.len()` through the given
/// points, by Newton divided differences.
pub fn interpolate_polynomial(points: &[(Rational, Rational)]) -> Result<UniPoly> {
    if points.is_empty() {
        return Err(Error::EmptyInput("interpolation needs at least one point"));
    }
    let mut seen = BTreeSet::new();
    for (x, _) in points {
        if !seen.insert(x.clone()) {
            return Err(Error::DuplicateAbscissa(format_rational(x)));
        }
    }
    let xs: Vec<Rational> = points.iter().map(|p| p.0.clone()).collect();
    let mut table: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
    let count = xs.len();
    for level in 1..count {
        for k in (level..count).rev() {
            table[k] = (&table[k] - &table[k - 1]) / (&xs[k] - &xs[k - level]);
        }
    }
    // Horner expansion of the Newton form into monomial coefficients.
    let mut coeffs = vec![Rational::zero(); count];
    for k in (0..count).rev() {
        let mut next = vec![Rational::zero(); count];
        for d in 0..count {
            if coeffs[d].is_zero() {
                continue;
            }
            if d + 1 < count {
                next[d + 1] += &coeffs[d];
            }
            next[d] -= &coeffs[d] * &xs[k];
        }
        next[0] += &table[k];
        coeffs = next;
    }
    Ok(UniPoly::new(coeffs))
}

/// Interpolation through integer sample points.
pub fn interpolate_integer_samples(samples: &[(i64, u128)]) -> Result<UniPoly> {
    let points: Vec<(Rational, Rational)> = samples
        .iter()
        .map(|&(t, v)| (crate::rational::int(t), Rational::from_integer(BigInt::from(v))))
        .collect();
    interpolate_polynomial(&points)
}

/// The order polynomial `Omega(P, t)` recovered from its values at
/// `t = 1, ..., |P| + 1`.
pub fn order_polynomial(poset: &SkewPoset) -> Result<UniPoly> {
    let samples =
        (1..=poset.len() as i64 + 1).map(|t| Ok((t, order_polynomial_value(poset, t)?))).collect::<Result<Vec<_>>>()?;
    interpolate_integer_samples(&samples)
}
