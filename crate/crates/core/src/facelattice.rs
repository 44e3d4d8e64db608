//! The grid graph of an `m x n` matrix, sum-labelings of its edges and the
//! face of `PASM(m, n)` spanned by the vertices `M^mu`, `lambda ⊆ mu ⊆ nu`.
//!
//! Grid vertices are `(i, j)` with `1 <= i <= m + 1` and `1 <= j <= n + 1`.
//! The horizontal edge `(i, j)-(i, j+1)` carries the row partial sum
//! `sum_{j' <= j} M_{ij'}` and the vertical edge `(i, j)-(i+1, j)` the column
//! partial sum `sum_{i' <= i} M_{i'j}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrices::{is_pasm, IntMatrix};
use crate::polytope::{vertices, PasmPolytopeSpec};
use crate::shapes::{enumerate_between, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// `(i, j)-(i, j+1)`.
    H,
    /// `(i, j)-(i+1, j)`.
    V,
}

/// A grid edge named by its northwest endpoint and direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub row: usize,
    pub col: usize,
    pub dir: Direction,
}

impl Edge {
    pub fn h(row: usize, col: usize) -> Self {
        Edge { row, col, dir: Direction::H }
    }

    pub fn v(row: usize, col: usize) -> Self {
        Edge { row, col, dir: Direction::V }
    }

    pub fn endpoints(&self) -> ((usize, usize), (usize, usize)) {
        let a = (self.row, self.col);
        match self.dir {
            Direction::H => (a, (self.row, self.col + 1)),
            Direction::V => (a, (self.row + 1, self.col)),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.dir {
            Direction::H => "H",
            Direction::V => "V",
        };
        write!(f, "{},{},{d}", self.row, self.col)
    }
}

impl std::str::FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedMatrix(format!("bad edge key {s:?}"));
        let mut parts = s.split(',');
        let row = parts.next().and_then(|p| p.trim().parse().ok()).ok_or_else(bad)?;
        let col = parts.next().and_then(|p| p.trim().parse().ok()).ok_or_else(bad)?;
        let dir = match parts.next().map(str::trim) {
            Some("H") => Direction::H,
            Some("V") => Direction::V,
            _ => return Err(bad()),
        };
        if parts.next().is_some() || row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(Edge { row, col, dir })
    }
}

pub type EdgeSet = BTreeSet<Edge>;

/// The grid graph `Gamma_(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridGraph {
    pub m: usize,
    pub n: usize,
}

impl GridGraph {
    pub fn new(m: usize, n: usize) -> Self {
        GridGraph { m, n }
    }

    /// All `2mn` edges, horizontal ones first within each `(row, col)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(2 * self.m * self.n);
        for row in 1..=self.m {
            for col in 1..=self.n {
                out.push(Edge::h(row, col));
                out.push(Edge::v(row, col));
            }
        }
        out
    }

    pub fn contains(&self, e: &Edge) -> bool {
        (1..=self.m).contains(&e.row) && (1..=self.n).contains(&e.col)
    }
}

/// A nonempty subset of `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabelSet {
    pub zero: bool,
    pub one: bool,
}

impl LabelSet {
    pub const ZERO: LabelSet = LabelSet { zero: true, one: false };
    pub const ONE: LabelSet = LabelSet { zero: false, one: true };
    pub const BOTH: LabelSet = LabelSet { zero: true, one: true };

    pub fn union(self, other: LabelSet) -> LabelSet {
        LabelSet { zero: self.zero || other.zero, one: self.one || other.one }
    }

    pub fn is_both(&self) -> bool {
        self.zero && self.one
    }

    fn values(&self) -> Vec<u8> {
        let mut v = Vec::new();
        if self.zero {
            v.push(0);
        }
        if self.one {
            v.push(1);
        }
        v
    }
}

/// A label set on every edge of a grid graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumLabeling {
    grid: GridGraph,
    labels: BTreeMap<Edge, LabelSet>,
}

impl SumLabeling {
    pub fn grid(&self) -> GridGraph {
        self.grid
    }

    pub fn get(&self, e: &Edge) -> Option<LabelSet> {
        self.labels.get(e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Edge, &LabelSet)> {
        self.labels.iter()
    }

    /// Edges labeled `{0, 1}`.
    pub fn both_edges(&self) -> EdgeSet {
        self.labels.iter().filter(|(_, l)| l.is_both()).map(|(e, _)| *e).collect()
    }

    /// Graphviz rendering on the grid: `{0,1}` edges bold, `{1}` edges solid,
    /// `{0}` edges dotted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph sum_labeling {\n  node [shape=point];\n");
        for i in 1..=self.grid.m + 1 {
            for j in 1..=self.grid.n + 1 {
                let _ = writeln!(out, "  v{i}_{j} [pos=\"{j},{}!\"];", self.grid.m + 1 - i);
            }
        }
        for (e, l) in &self.labels {
            let ((a, b), (c, d)) = e.endpoints();
            let style = if l.is_both() {
                "style=bold, color=blue, label=\"0,1\""
            } else if l.one {
                "style=solid, color=red, label=\"1\""
            } else {
                "style=dotted, color=gray"
            };
            let _ = writeln!(out, "  v{a}_{b} -- v{c}_{d} [{style}];");
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for SumLabeling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, Vec<u8>> = self.labels.iter().map(|(e, l)| (e.to_string(), l.values())).collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SumLabeling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, Vec<u8>>::deserialize(d)?;
        let mut labels = BTreeMap::new();
        for (key, values) in raw {
            let edge: Edge = key.parse().map_err(D::Error::custom)?;
            if values.is_empty() || values.iter().any(|&v| v > 1) {
                return Err(D::Error::custom(format!("label of {key} must be a nonempty subset of {{0,1}}")));
            }
            labels.insert(edge, LabelSet { zero: values.contains(&0), one: values.contains(&1) });
        }
        let m = labels.keys().map(|e| e.row).max().unwrap_or(0);
        let n = labels.keys().map(|e| e.col).max().unwrap_or(0);
        let grid = GridGraph::new(m, n);
        if labels.len() != grid.edges().len() {
            return Err(D::Error::custom("labeling must cover every grid edge"));
        }
        Ok(SumLabeling { grid, labels })
    }
}

/// The edges outlining `mu` in `Gamma_(m, n)`: horizontals `(i, j)-(i, j+1)`
/// for `mu_i + 1 <= j <= mu_{i-1}` (with `mu_0 = n`) and verticals
/// `(i, mu_i + 1)-(i+1, mu_i + 1)`, for `1 <= i <= m`.
pub fn outline_edges(mu: &Partition, m: usize, n: usize) -> Result<EdgeSet> {
    if !mu.fits_ambient(m, n) {
        return Err(Error::OutOfAmbient { parts: mu.parts().to_vec(), m, n });
    }
    let mut out = EdgeSet::new();
    for i in 1..=m {
        let above = if i == 1 { n } else { mu.part(i - 1) };
        for j in mu.part(i) + 1..=above {
            out.insert(Edge::h(i, j));
        }
        out.insert(Edge::v(i, mu.part(i) + 1));
    }
    Ok(out)
}

/// The singleton labeling by row and column partial sums.
pub fn basic_sum_labeling(x: &IntMatrix) -> Result<SumLabeling> {
    if !is_pasm(x) {
        return Err(Error::NotPasm);
    }
    let grid = GridGraph::new(x.rows(), x.cols());
    let single = |s: i64| if s == 0 { LabelSet::ZERO } else { LabelSet::ONE };
    let mut labels = BTreeMap::new();
    for i in 1..=grid.m {
        let mut s = 0;
        for j in 1..=grid.n {
            s += x.get(i, j);
            labels.insert(Edge::h(i, j), single(s));
        }
    }
    for j in 1..=grid.n {
        let mut s = 0;
        for i in 1..=grid.m {
            s += x.get(i, j);
            labels.insert(Edge::v(i, j), single(s));
        }
    }
    Ok(SumLabeling { grid, labels })
}

/// Edgewise union of basic labelings.
pub fn union_sum_labeling(matrices: &[IntMatrix]) -> Result<SumLabeling> {
    let (first, rest) = matrices.split_first().ok_or(Error::EmptyInput("matrix list"))?;
    let mut acc = basic_sum_labeling(first)?;
    for x in rest {
        if !x.same_shape(first) {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}", first.rows(), first.cols()),
                found: format!("{}x{}", x.rows(), x.cols()),
            });
        }
        let next = basic_sum_labeling(x)?;
        for (e, l) in acc.labels.iter_mut() {
            *l = l.union(next.labels[e]);
        }
    }
    Ok(acc)
}

/// The labeling with `{0, 1}` on the union of the outlines `E_mu` minus
/// `E_lambda ∩ E_nu`, `{1}` on `E_lambda ∩ E_nu` and `{0}` elsewhere.
pub fn face_labeling(spec: &PasmPolytopeSpec) -> SumLabeling {
    let (m, n) = (spec.rows(), spec.cols());
    let outline = |mu: &Partition| outline_edges(mu, m, n).expect("mu ⊆ nu fits the ambient box");
    let fixed: EdgeSet = outline(spec.lambda()).intersection(&outline(spec.nu())).copied().collect();
    let mut union = EdgeSet::new();
    for mu in enumerate_between(spec.lambda(), spec.nu()).expect("spec guarantees lambda ⊆ nu") {
        union.extend(outline(&mu));
    }
    let grid = GridGraph::new(m, n);
    let labels = grid
        .edges()
        .into_iter()
        .map(|e| {
            let l = if fixed.contains(&e) {
                LabelSet::ONE
            } else if union.contains(&e) {
                LabelSet::BOTH
            } else {
                LabelSet::ZERO
            };
            (e, l)
        })
        .collect();
    SumLabeling { grid, labels }
}

/// The union labeling of the vertices, for comparison with [`face_labeling`].
pub fn vertex_union_labeling(spec: &PasmPolytopeSpec) -> SumLabeling {
    union_sum_labeling(&vertices(spec)).expect("vertices are PASMs of one shape")
}

/// Bounded regions of the plane graph formed by the `{0, 1}` edges:
/// `E - V + C` over its connected components.
pub fn region_count(labeling: &SumLabeling) -> usize {
    let edges = labeling.both_edges();
    let mut vertex_ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in &edges {
        let (a, b) = e.endpoints();
        for v in [a, b] {
            let next = vertex_ids.len();
            vertex_ids.entry(v).or_insert(next);
        }
    }
    let mut parent: Vec<usize> = (0..vertex_ids.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = vertex_ids.len();
    for e in &edges {
        let (a, b) = e.endpoints();
        let (ra, rb) = (find(&mut parent, vertex_ids[&a]), find(&mut parent, vertex_ids[&b]));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    edges.len() + components - vertex_ids.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::build_m_mu;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn set(h: &[(usize, usize)], v: &[(usize, usize)]) -> EdgeSet {
        h.iter().map(|&(i, j)| Edge::h(i, j)).chain(v.iter().map(|&(i, j)| Edge::v(i, j))).collect()
    }

    #[test]
    fn outlines_of_the_example() {
        let lam = outline_edges(&p(&[3, 1]), 4, 5).unwrap();
        assert_eq!(lam, set(&[(1, 4), (1, 5), (2, 2), (2, 3), (3, 1)], &[(1, 4), (2, 2), (3, 1), (4, 1)]));
        let nu = outline_edges(&p(&[4, 2, 2]), 4, 5).unwrap();
        assert_eq!(nu, set(&[(1, 5), (2, 3), (2, 4), (4, 1), (4, 2)], &[(1, 5), (2, 3), (3, 3), (4, 1)]));
        let both: EdgeSet = lam.intersection(&nu).copied().collect();
        assert_eq!(both, set(&[(1, 5), (2, 3)], &[(4, 1)]));
        assert!(outline_edges(&p(&[5]), 4, 5).is_err());
    }

    #[test]
    fn basic_labelings() {
        let zero = basic_sum_labeling(&IntMatrix::zeros(1, 1)).unwrap();
        assert_eq!(zero.get(&Edge::h(1, 1)), Some(LabelSet::ZERO));
        assert_eq!(zero.get(&Edge::v(1, 1)), Some(LabelSet::ZERO));

        let empty = basic_sum_labeling(&build_m_mu(&Partition::empty(), 2, 2).unwrap()).unwrap();
        let ones: EdgeSet = empty.iter().filter(|(_, l)| l.one).map(|(e, _)| *e).collect();
        assert_eq!(ones, set(&[(1, 1), (1, 2)], &[(1, 1), (2, 1)]));
        assert!(basic_sum_labeling(&IntMatrix::from_rows(vec![vec![-1]]).unwrap()).is_err());
    }

    #[test]
    fn union_of_two_by_two() {
        let a = build_m_mu(&Partition::empty(), 2, 2).unwrap();
        let b = build_m_mu(&p(&[1]), 2, 2).unwrap();
        let u = union_sum_labeling(&[a.clone(), b]).unwrap();
        assert_eq!(u.both_edges(), set(&[(1, 1), (2, 1)], &[(1, 1), (1, 2)]));
        assert_eq!(u.get(&Edge::h(1, 2)), Some(LabelSet::ONE));
        assert_eq!(u.get(&Edge::v(2, 1)), Some(LabelSet::ONE));
        assert_eq!(u.get(&Edge::v(2, 2)), Some(LabelSet::ZERO));
        assert_eq!(region_count(&u), 1);
        assert_eq!(union_sum_labeling(std::slice::from_ref(&a)).unwrap(), basic_sum_labeling(&a).unwrap());
        assert!(union_sum_labeling(&[a, IntMatrix::zeros(3, 3)]).is_err());
        assert!(union_sum_labeling(&[]).is_err());
    }

    #[test]
    fn face_labeling_matches_union() {
        for (nu, lam, m, n) in [(p(&[4, 2, 2]), p(&[3, 1]), 4, 5), (p(&[2, 1]), Partition::empty(), 3, 3)] {
            let spec = PasmPolytopeSpec::new(nu, lam, m, n).unwrap();
            assert_eq!(face_labeling(&spec), vertex_union_labeling(&spec));
        }
        let spec = PasmPolytopeSpec::new(p(&[4, 2, 2]), p(&[3, 1]), 4, 5).unwrap();
        assert_eq!(region_count(&face_labeling(&spec)), 4);
        let full = PasmPolytopeSpec::new(p(&[2, 1]), Partition::empty(), 3, 3).unwrap();
        assert_eq!(region_count(&face_labeling(&full)), 3);
        let point = PasmPolytopeSpec::minimal(p(&[2, 1]), p(&[2, 1])).unwrap();
        assert!(face_labeling(&point).both_edges().is_empty());
        assert_eq!(region_count(&face_labeling(&point)), 0);
    }

    #[test]
    fn json_round_trip() {
        let spec = PasmPolytopeSpec::minimal(p(&[1]), Partition::empty()).unwrap();
        let l = face_labeling(&spec);
        let text = serde_json::to_string(&l).unwrap();
        assert!(text.contains(r#""1,1,H":[0,1]"#));
        assert!(text.contains(r#""1,2,H":[1]"#));
        let back: SumLabeling = serde_json::from_str(&text).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<SumLabeling>(r#"{"1,1,H":[]}"#).is_err());
        assert!(l.to_dot().starts_with("graph sum_labeling"));
    }
}
