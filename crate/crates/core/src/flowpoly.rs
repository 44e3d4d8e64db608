//! The planar Hasse diagram of `P-hat = P ∪ {0-hat, 1-hat}` for a skew poset,
//! its truncated dual `G_P` and the flow polytope of `G_P`.
//!
//! Cell `(i, j)` is drawn at `x = j - i`, `y = i + j`, with `0-hat` below
//! every element, `1-hat` above, and two extra arcs joining them far to the
//! left and right. Faces come from the cyclic order of edges at each vertex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, Rational};
use crate::skewposet::{
    enumerate_filters, for_each_order_preserving_map, in_order_polytope, order_polynomial_value, PosetPoint, SkewPoset,
};

/// A vertex of `P-hat`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HatVertex {
    Bottom,
    Element(usize),
    Top,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HasseEdgeKind {
    Cover,
    LeftArc,
    RightArc,
}

/// An edge of the embedded diagram, from `lower` to `upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HasseEdge {
    pub lower: HatVertex,
    pub upper: HatVertex,
    pub kind: HasseEdgeKind,
}

/// The embedded Hasse diagram of `P-hat` with its faces.
///
/// Dart `2e` runs along edge `e` upward, dart `2e + 1` downward. Each face is
/// the cycle of darts having it on their left.
#[derive(Debug, Clone)]
pub struct PlanarHasse {
    poset: SkewPoset,
    edges: Vec<HasseEdge>,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    dart_face: Vec<usize>,
    left_arc: usize,
    right_arc: usize,
}

impl PlanarHasse {
    pub fn poset(&self) -> &SkewPoset {
        &self.poset
    }

    pub fn vertex_count(&self) -> usize {
        self.poset.len() + 2
    }

    pub fn edges(&self) -> &[HasseEdge] {
        &self.edges
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// The face left of dart `left_arc` (upward), which is unbounded.
    pub fn outer_face(&self) -> usize {
        self.dart_face[2 * self.left_arc]
    }

    pub fn bounded_face_count(&self) -> usize {
        self.faces.len() - 1
    }

    /// `(x, y)` drawing coordinates of a vertex.
    pub fn coordinates(&self, v: HatVertex) -> (i64, i64) {
        let elems = self.poset.elements();
        let ys = elems.iter().map(|&(i, j)| (i + j) as i64);
        match v {
            HatVertex::Bottom => (0, ys.min().unwrap_or(0) - 1),
            HatVertex::Top => (0, ys.max().unwrap_or(0) + 1),
            HatVertex::Element(k) => {
                let (i, j) = elems[k];
                (j as i64 - i as i64, (i + j) as i64)
            }
        }
    }

    /// Darts leaving `v` in counter-clockwise order.
    pub fn rotation(&self, v: HatVertex) -> &[usize] {
        &self.rotation[self.vertex_id(v)]
    }

    fn vertex_id(&self, v: HatVertex) -> usize {
        match v {
            HatVertex::Bottom => 0,
            HatVertex::Element(k) => k + 1,
            HatVertex::Top => self.poset.len() + 1,
        }
    }
}

/// Angular sort key of the dart leaving `from` along `edge`, increasing
/// counter-clockwise from due east.
fn angle_key(poset: &SkewPoset, from: HatVertex, edge: &HasseEdge) -> (u8, i64) {
    let other = if edge.lower == from { edge.upper } else { edge.lower };
    let x = |v: HatVertex| match v {
        HatVertex::Element(k) => {
            let (i, j) = poset.elements()[k];
            j as i64 - i as i64
        }
        _ => 0,
    };
    match (from, edge.kind) {
        (_, HasseEdgeKind::RightArc) => (0, 0),
        (HatVertex::Bottom, HasseEdgeKind::LeftArc) => (2, 0),
        (HatVertex::Top, HasseEdgeKind::LeftArc) => (1, 0),
        (HatVertex::Bottom, _) => (1, -x(other)),
        (HatVertex::Top, _) => (2, x(other)),
        (HatVertex::Element(_), _) => {
            let dx = x(other) - x(from);
            match other {
                HatVertex::Top => (1, 0),
                HatVertex::Bottom => (4, 0),
                _ if edge.lower == from => {
                    if dx > 0 {
                        (0, 0)
                    } else {
                        (2, 0)
                    }
                }
                _ => {
                    if dx < 0 {
                        (3, 0)
                    } else {
                        (5, 0)
                    }
                }
            }
        }
    }
}

/// Embeds `P-hat` and its two boundary arcs, and extracts the faces.
///
/// Fails with [`Error::NotPlanar`] if the face count violates Euler's formula.
pub fn embed_hatted_hasse(poset: &SkewPoset) -> Result<PlanarHasse> {
    let p = poset.len();
    let mut edges = Vec::new();
    for &(a, b) in poset.covers() {
        edges.push(HasseEdge { lower: HatVertex::Element(a), upper: HatVertex::Element(b), kind: HasseEdgeKind::Cover });
    }
    for k in poset.minimal_elements() {
        edges.push(HasseEdge { lower: HatVertex::Bottom, upper: HatVertex::Element(k), kind: HasseEdgeKind::Cover });
    }
    for k in poset.maximal_elements() {
        edges.push(HasseEdge { lower: HatVertex::Element(k), upper: HatVertex::Top, kind: HasseEdgeKind::Cover });
    }
    if p == 0 {
        edges.push(HasseEdge { lower: HatVertex::Bottom, upper: HatVertex::Top, kind: HasseEdgeKind::Cover });
    }
    let left_arc = edges.len();
    edges.push(HasseEdge { lower: HatVertex::Bottom, upper: HatVertex::Top, kind: HasseEdgeKind::LeftArc });
    let right_arc = edges.len();
    edges.push(HasseEdge { lower: HatVertex::Bottom, upper: HatVertex::Top, kind: HasseEdgeKind::RightArc });

    let id = |v: HatVertex| match v {
        HatVertex::Bottom => 0,
        HatVertex::Element(k) => k + 1,
        HatVertex::Top => p + 1,
    };
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); p + 2];
    for (e, edge) in edges.iter().enumerate() {
        rotation[id(edge.lower)].push(2 * e);
        rotation[id(edge.upper)].push(2 * e + 1);
    }
    let vertex_of = |v: usize| match v {
        0 => HatVertex::Bottom,
        v if v == p + 1 => HatVertex::Top,
        v => HatVertex::Element(v - 1),
    };
    for (v, darts) in rotation.iter_mut().enumerate() {
        darts.sort_by_key(|&d| angle_key(poset, vertex_of(v), &edges[d / 2]));
    }

    // The face left of dart u -> v continues along the dart leaving v just
    // clockwise of v -> u.
    let mut position = vec![0; 2 * edges.len()];
    for darts in &rotation {
        for (k, &d) in darts.iter().enumerate() {
            position[d] = k;
        }
    }
    let head = |d: usize| if d.is_multiple_of(2) { edges[d / 2].upper } else { edges[d / 2].lower };
    let next = |d: usize| {
        let around = &rotation[id(head(d))];
        let twin = d ^ 1;
        around[(position[twin] + around.len() - 1) % around.len()]
    };
    let mut dart_face = vec![usize::MAX; 2 * edges.len()];
    let mut faces = Vec::new();
    for start in 0..2 * edges.len() {
        if dart_face[start] != usize::MAX {
            continue;
        }
        let mut cycle = Vec::new();
        let mut d = start;
        while dart_face[d] == usize::MAX {
            dart_face[d] = faces.len();
            cycle.push(d);
            d = next(d);
        }
        faces.push(cycle);
    }
    let (v, e, f) = ((p + 2) as i64, edges.len() as i64, faces.len() as i64);
    if v - e + f != 2 {
        return Err(Error::NotPlanar(format!("V - E + F = {v} - {e} + {f}")));
    }
    Ok(PlanarHasse { poset: poset.clone(), edges, rotation, faces, dart_face, left_arc, right_arc })
}

/// A dual edge, crossing the Hasse cover `lower < upper` of `P-hat`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FlowEdge {
    pub from: usize,
    pub to: usize,
    pub lower: HatVertex,
    pub upper: HatVertex,
}

/// The truncated dual of the embedded diagram, oriented so that the larger
/// element of each crossed cover lies on the left.
#[derive(Debug, Clone)]
pub struct FlowGraph {
    poset: SkewPoset,
    vertex_count: usize,
    edges: Vec<FlowEdge>,
    source: usize,
    sink: usize,
    order: Vec<usize>,
}

impl FlowGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[FlowEdge] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn poset(&self) -> &SkewPoset {
        &self.poset
    }

    /// Vertices in a topological order, source first and sink last.
    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    fn vertex_label(&self, v: HatVertex) -> String {
        match v {
            HatVertex::Bottom => "0".into(),
            HatVertex::Top => "1".into(),
            HatVertex::Element(k) => {
                let (i, j) = self.poset.elements()[k];
                format!("({i},{j})")
            }
        }
    }

    /// Graphviz rendering; each edge names the cover it crosses.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph flow_graph {\n  rankdir=LR;\n");
        for v in 0..self.vertex_count {
            let role = if v == self.source {
                ", shape=doublecircle, xlabel=\"source\""
            } else if v == self.sink {
                ", shape=doublecircle, xlabel=\"sink\""
            } else {
                ""
            };
            let _ = writeln!(out, "  f{v} [label=\"{v}\"{role}];");
        }
        for (k, e) in self.edges.iter().enumerate() {
            let _ = writeln!(
                out,
                "  f{} -> f{} [label=\"e{k}: {} < {}\"];",
                e.from,
                e.to,
                self.vertex_label(e.lower),
                self.vertex_label(e.upper)
            );
        }
        out.push_str("}\n");
        out
    }
}

/// One dual vertex per bounded face and one dual edge per cover of `P-hat`
/// separating two bounded faces. The source is the face along the left arc
/// and the sink the face along the right arc; both roles and acyclicity are
/// checked.
pub fn truncated_dual(h: &PlanarHasse) -> Result<FlowGraph> {
    let outer = h.outer_face();
    let mut renumber = BTreeMap::new();
    for f in 0..h.faces.len() {
        if f != outer {
            let next = renumber.len();
            renumber.insert(f, next);
        }
    }
    let mut edges = Vec::new();
    for (e, edge) in h.edges.iter().enumerate() {
        if edge.kind != HasseEdgeKind::Cover {
            continue;
        }
        let (left, right) = (h.dart_face[2 * e], h.dart_face[2 * e + 1]);
        if left == outer || right == outer {
            continue;
        }
        edges.push(FlowEdge { from: renumber[&left], to: renumber[&right], lower: edge.lower, upper: edge.upper });
    }
    let source = *renumber
        .get(&h.dart_face[2 * h.left_arc + 1])
        .ok_or_else(|| Error::NotPlanar("left arc borders the outer face twice".into()))?;
    let sink = *renumber
        .get(&h.dart_face[2 * h.right_arc])
        .ok_or_else(|| Error::NotPlanar("right arc borders the outer face twice".into()))?;
    let count = renumber.len();
    let order = topological_order(count, &edges)
        .ok_or_else(|| Error::NotPlanar("oriented dual has a directed cycle".into()))?;
    let has_in = |v: usize| edges.iter().any(|e| e.to == v);
    let has_out = |v: usize| edges.iter().any(|e| e.from == v);
    if has_in(source) || has_out(sink) || order.first() != Some(&source) || order.last() != Some(&sink) {
        return Err(Error::NotPlanar("source and sink are not the unique terminals of the dual".into()));
    }
    Ok(FlowGraph { poset: h.poset.clone(), vertex_count: count, edges, source, sink, order })
}

/// Kahn's algorithm; `None` on a cycle. Ties go to the smallest vertex, and
/// every vertex other than the first must be reachable.
fn topological_order(count: usize, edges: &[FlowEdge]) -> Option<Vec<usize>> {
    let mut indegree = vec![0usize; count];
    for e in edges {
        indegree[e.to] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..count).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::with_capacity(count);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for e in edges.iter().filter(|e| e.from == v) {
            indegree[e.to] -= 1;
            if indegree[e.to] == 0 {
                ready.insert(e.to);
            }
        }
    }
    (order.len() == count).then_some(order)
}

/// Builds `G_P` for a skew poset.
pub fn flow_graph(poset: &SkewPoset) -> Result<FlowGraph> {
    truncated_dual(&embed_hatted_hasse(poset)?)
}

/// Nonnegative edge values of `G_P`, indexed by edge position.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Flow {
    pub values: BTreeMap<usize, Rational>,
}

impl Flow {
    pub fn get(&self, edge: usize) -> Option<&Rational> {
        self.values.get(&edge)
    }
}

impl Serialize for Flow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> =
            self.values.iter().map(|(e, v)| (e.to_string(), format_rational(v))).collect();
        map.serialize(s)
    }
}

impl fmt::Display for Flow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (e, v)) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "e{e}={}", format_rational(v))?;
        }
        Ok(())
    }
}

fn hat_value<T: Clone>(v: HatVertex, values: &[T], bottom: &T, top: &T) -> T {
    match v {
        HatVertex::Bottom => bottom.clone(),
        HatVertex::Top => top.clone(),
        HatVertex::Element(k) => values[k].clone(),
    }
}

/// Sends `f` in the order polytope to the flow `f(q) - f(p)` on the edge
/// crossing the cover `p < q`, with `f(0-hat) = 0` and `f(1-hat) = 1`.
pub fn order_point_to_flow(f: &PosetPoint, g: &FlowGraph) -> Result<Flow> {
    if !in_order_polytope(&g.poset, f)? {
        return Err(Error::NotMonotone);
    }
    let values = f.ordered(&g.poset)?;
    let (zero, one) = (Rational::zero(), Rational::one());
    let flow = g
        .edges
        .iter()
        .enumerate()
        .map(|(k, e)| (k, hat_value(e.upper, &values, &zero, &one) - hat_value(e.lower, &values, &zero, &one)))
        .collect();
    Ok(Flow { values: flow })
}

/// The integer version for lattice points of the `t`-th dilate.
fn lattice_flow(values: &[i64], t: i64, g: &FlowGraph) -> Vec<i64> {
    g.edges.iter().map(|e| hat_value(e.upper, values, &0, &t) - hat_value(e.lower, values, &0, &t)).collect()
}

/// Nonnegativity, conservation at internal vertices, and net outflow `size`
/// at the source and inflow `size` at the sink.
pub fn is_flow_of_size(fl: &Flow, g: &FlowGraph, size: &Rational) -> Result<bool> {
    let mut net = vec![Rational::zero(); g.vertex_count];
    for (k, e) in g.edges.iter().enumerate() {
        let v = fl.get(k).ok_or(Error::MissingEdgeValue(k))?;
        if v < &Rational::zero() {
            return Ok(false);
        }
        net[e.from] -= v;
        net[e.to] += v;
    }
    Ok(net.iter().enumerate().all(|(v, x)| {
        if v == g.source {
            *x == -size.clone()
        } else if v == g.sink {
            x == size
        } else {
            x.is_zero()
        }
    }))
}

/// A flow of size one.
pub fn is_flow(fl: &Flow, g: &FlowGraph) -> Result<bool> {
    is_flow_of_size(fl, g, &Rational::one())
}

/// Integer flows of size `t` on `G_P`, counted by routing the inflow of each
/// vertex over its outgoing edges in topological order.
pub fn count_integer_flows(g: &FlowGraph, t: i64) -> Result<u128> {
    if t < 0 {
        return Err(Error::NonPositiveT);
    }
    let out_edges: Vec<Vec<usize>> =
        (0..g.vertex_count).map(|v| (0..g.edges.len()).filter(|&k| g.edges[k].from == v).collect()).collect();
    let mut inflow = vec![0i64; g.vertex_count];
    inflow[g.source] = t;

    fn split(
        g: &FlowGraph,
        out_edges: &[Vec<usize>],
        inflow: &mut [i64],
        step: usize,
        slot: usize,
        remaining: i64,
    ) -> u128 {
        if step == g.order.len() {
            return 1;
        }
        let v = g.order[step];
        if v == g.sink {
            return split(g, out_edges, inflow, step + 1, 0, 0);
        }
        let outs = &out_edges[v];
        let remaining = if slot == 0 { inflow[v] } else { remaining };
        if outs.is_empty() {
            return if remaining == 0 { split(g, out_edges, inflow, step + 1, 0, 0) } else { 0 };
        }
        let target = g.edges[outs[slot]].to;
        if slot + 1 == outs.len() {
            inflow[target] += remaining;
            let c = split(g, out_edges, inflow, step + 1, 0, 0);
            inflow[target] -= remaining;
            return c;
        }
        let mut total = 0;
        for amount in 0..=remaining {
            inflow[target] += amount;
            total += split(g, out_edges, inflow, step, slot + 1, remaining - amount);
            inflow[target] -= amount;
        }
        total
    }
    Ok(split(g, &out_edges, &mut inflow, 0, 0, t))
}

/// Outcome of [`certify_flow_equivalence`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowCertificate {
    pub filter_images_valid: bool,
    /// `(t, order-preserving maps into {0..t}, integer flows of size t)`.
    pub dilate_counts: Vec<(i64, u64, u64)>,
    pub injective: bool,
    pub counterexample: Option<String>,
}

impl FlowCertificate {
    pub fn passed(&self) -> bool {
        self.filter_images_valid
            && self.injective
            && self.counterexample.is_none()
            && self.dilate_counts.iter().all(|&(_, a, b)| a == b)
    }
}

/// Checks that filter indicators go to 0/1 flows of size one, and that for
/// each `t <= t_max` the lattice points of `t O(P)` map injectively to valid
/// integer flows of size `t`, as many as the independent flow count.
pub fn certify_flow_equivalence(poset: &SkewPoset, t_max: i64) -> Result<FlowCertificate> {
    let g = flow_graph(poset)?;
    let mut counterexample = None;
    let mut filter_images_valid = true;
    for filter in enumerate_filters(poset) {
        let fl = order_point_to_flow(&PosetPoint::indicator(poset, &filter), &g)?;
        let zero_one = fl.values.values().all(|v| v.is_zero() || v.is_one());
        if !zero_one || !is_flow(&fl, &g)? {
            filter_images_valid = false;
            counterexample.get_or_insert_with(|| format!("filter {filter:?} maps to {fl}"));
        }
    }
    let mut injective = true;
    let mut dilate_counts = Vec::new();
    for t in 1..=t_max {
        let mut images = BTreeSet::new();
        let mut maps = 0u64;
        let mut bad = None;
        for_each_order_preserving_map(poset, t, &mut |values| {
            maps += 1;
            let flow = lattice_flow(values, t, &g);
            let as_flow = Flow { values: flow.iter().enumerate().map(|(k, &v)| (k, int(v))).collect() };
            if !is_flow_of_size(&as_flow, &g, &int(t)).expect("every edge has a value") {
                bad.get_or_insert_with(|| format!("t = {t}: {values:?} maps to invalid flow {as_flow}"));
            }
            images.insert(flow);
        });
        if images.len() as u64 != maps {
            injective = false;
        }
        if let Some(b) = bad {
            counterexample.get_or_insert(b);
        }
        let flows = count_integer_flows(&g, t)?;
        let order = order_polynomial_value(poset, t + 1)?;
        if order != u128::from(maps) {
            counterexample.get_or_insert_with(|| format!("t = {t}: enumerated {maps} maps, order polynomial {order}"));
        }
        dilate_counts.push((t, maps, flows as u64));
    }
    if !injective {
        counterexample.get_or_insert_with(|| "flow map is not injective".into());
    }
    Ok(FlowCertificate { filter_images_valid, dilate_counts, injective, counterexample })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::shapes::{Partition, SkewShape};
    use crate::skewposet::build_poset;

    fn poset(nu: &[usize], lambda: &[usize]) -> SkewPoset {
        let shape =
            SkewShape::minimal(Partition::new(nu.to_vec()).unwrap(), Partition::new(lambda.to_vec()).unwrap()).unwrap();
        build_poset(&shape)
    }

    #[test]
    fn single_element() {
        let p = poset(&[1], &[]);
        let h = embed_hatted_hasse(&p).unwrap();
        assert_eq!((h.vertex_count(), h.edges().len(), h.face_count()), (3, 4, 3));
        let g = truncated_dual(&h).unwrap();
        assert_eq!((g.vertex_count(), g.edges().len()), (2, 2));
        assert!(g.edges().iter().all(|e| e.from == g.source() && e.to == g.sink()));
        let f = PosetPoint::from_ordered(&p, vec![ratio(1, 3)]).unwrap();
        let fl = order_point_to_flow(&f, &g).unwrap();
        let mut vals: Vec<Rational> = fl.values.values().cloned().collect();
        vals.sort();
        assert_eq!(vals, vec![ratio(1, 3), ratio(2, 3)]);
        assert!(is_flow(&fl, &g).unwrap());
        let half = Flow { values: [(0, ratio(1, 2)), (1, ratio(1, 2))].into_iter().collect() };
        assert!(is_flow(&half, &g).unwrap());
        let heavy = Flow { values: [(0, ratio(1, 1)), (1, ratio(1, 5))].into_iter().collect() };
        assert!(!is_flow(&heavy, &g).unwrap());
        let partial = Flow { values: [(0, ratio(1, 1))].into_iter().collect() };
        assert!(matches!(is_flow(&partial, &g), Err(Error::MissingEdgeValue(1))));
    }

    #[test]
    fn empty_poset() {
        let p = poset(&[1], &[1]);
        let h = embed_hatted_hasse(&p).unwrap();
        assert_eq!((h.vertex_count(), h.edges().len(), h.bounded_face_count()), (2, 3, 2));
        let g = truncated_dual(&h).unwrap();
        assert_eq!((g.vertex_count(), g.edges().len()), (2, 1));
        assert_eq!(count_integer_flows(&g, 3).unwrap(), 1);
    }

    #[test]
    fn figure_two_shape() {
        let p = poset(&[4, 2, 2], &[3, 1]);
        let h = embed_hatted_hasse(&p).unwrap();
        let hat_covers = p.covers().len() + p.minimal_elements().len() + p.maximal_elements().len();
        assert_eq!((h.vertex_count(), h.edges().len(), hat_covers), (6, 9, 7));
        // Euler: F = 2 - V + E, one of them unbounded.
        assert_eq!(h.bounded_face_count(), 4);
        let g = truncated_dual(&h).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges().len(), hat_covers);

        let f = PosetPoint::from_ordered(&p, vec![ratio(7, 10), ratio(4, 10), ratio(2, 10), ratio(7, 10)]).unwrap();
        let fl = order_point_to_flow(&f, &g).unwrap();
        assert!(is_flow(&fl, &g).unwrap());
        let cert = certify_flow_equivalence(&p, 2).unwrap();
        assert!(cert.passed(), "{cert:?}");
        assert_eq!(cert.dilate_counts, vec![(1, 10, 10), (2, 42, 42)]);
        assert!(g.to_dot().contains("->"));
    }

    #[test]
    fn chains_and_antichains() {
        for (nu, lam) in [(&[3][..], &[][..]), (&[1, 1, 1][..], &[][..]), (&[2, 1][..], &[1][..]), (&[3, 2, 1][..], &[][..])] {
            let p = poset(nu, lam);
            let cert = certify_flow_equivalence(&p, 2).unwrap();
            assert!(cert.passed(), "{nu:?}/{lam:?}: {cert:?}");
        }
    }

    #[test]
    fn rejects_non_monotone_points() {
        let p = poset(&[2], &[]);
        let g = flow_graph(&p).unwrap();
        let f = PosetPoint::from_ordered(&p, vec![ratio(1, 1), ratio(0, 1)]).unwrap();
        assert!(matches!(order_point_to_flow(&f, &g), Err(Error::NotMonotone)));
    }

    #[test]
    fn flow_json() {
        let fl = Flow { values: [(0, ratio(3, 10)), (1, ratio(7, 10))].into_iter().collect() };
        assert_eq!(serde_json::to_string(&fl).unwrap(), r#"{"0":"3/10","1":"7/10"}"#);
    }
}
