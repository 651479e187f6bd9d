//! Signed graphs: generalized rectangles `G x P_n` for every integer `n`,
//! their conjugates, adjunctions and empty-path contractions.
//!
//! Every vertex carries a `(row, col)` label. Rows are `1..=m` (base vertex
//! plus one). Plain columns run `1..=n`; for `n < 0` the anti columns run
//! `n+1..=0` left to right, flanked by empty vertices in columns `n` and `1`.
//! The bridge `G x P_0` has empty vertices in columns `0` and `1`.
//!
//! Edge labels carry the formal-weight index: a hedge between columns `j`
//! and `j+1` of row `i` is `(i, j)`, and a vedge in column `j` coming from
//! base edge `k` is `(k+1, j)`. Hedges touching an empty vertex carry no
//! label and have constant weight one.

mod base;

pub use base::BaseGraph;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Plain,
    Anti,
    Empty,
}

impl VertexKind {
    pub fn weight(self) -> i8 {
        match self {
            VertexKind::Plain => 1,
            VertexKind::Anti => -1,
            VertexKind::Empty => 0,
        }
    }

    pub fn conjugate(self) -> Self {
        match self {
            VertexKind::Plain => VertexKind::Anti,
            VertexKind::Anti => VertexKind::Plain,
            VertexKind::Empty => VertexKind::Empty,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Hedge,
    Vedge,
    AntiVedge,
}

impl EdgeKind {
    pub fn weight(self) -> i8 {
        match self {
            EdgeKind::Hedge | EdgeKind::Vedge => 1,
            EdgeKind::AntiVedge => -1,
        }
    }

    pub fn conjugate(self) -> Self {
        match self {
            EdgeKind::Hedge => EdgeKind::Hedge,
            EdgeKind::Vedge => EdgeKind::AntiVedge,
            EdgeKind::AntiVedge => EdgeKind::Vedge,
        }
    }

    pub fn is_vertical(self) -> bool {
        !matches!(self, EdgeKind::Hedge)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub kind: VertexKind,
    pub row: i64,
    pub col: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
    /// Formal-weight index; `None` for boundary hedges.
    pub label: Option<(i64, i64)>,
}

impl Edge {
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

/// Which base graph a signed graph was built over, its total length, and
/// the boundary vertices used by adjunction (indexed by base vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub base: BaseGraph,
    pub length: i64,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SignedGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    frame: Option<Frame>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KindCounts {
    pub plain: usize,
    pub anti: usize,
    pub empty: usize,
    pub labeled_hedges: usize,
    pub boundary_hedges: usize,
    pub vedges: usize,
    pub anti_vedges: usize,
}

impl KindCounts {
    pub fn hedges(&self) -> usize {
        self.labeled_hedges + self.boundary_hedges
    }
}

impl SignedGraph {
    /// A graph with no vertices; its only matching is empty, of weight one.
    pub fn empty() -> Self {
        SignedGraph {
            vertices: Vec::new(),
            edges: Vec::new(),
            frame: None,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn frame(&self) -> Option<&Frame> {
        self.frame.as_ref()
    }

    pub fn vertex_at(&self, row: i64, col: i64) -> Option<usize> {
        self.vertices.iter().position(|v| v.row == row && v.col == col)
    }

    /// Incident edge ids of every vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for (id, e) in self.edges.iter().enumerate() {
            inc[e.u].push(id);
            inc[e.v].push(id);
        }
        inc
    }

    pub fn degree(&self, w: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(w)).count()
    }

    pub fn counts(&self) -> KindCounts {
        let mut c = KindCounts::default();
        for v in &self.vertices {
            match v.kind {
                VertexKind::Plain => c.plain += 1,
                VertexKind::Anti => c.anti += 1,
                VertexKind::Empty => c.empty += 1,
            }
        }
        for e in &self.edges {
            match (e.kind, e.label) {
                (EdgeKind::Hedge, Some(_)) => c.labeled_hedges += 1,
                (EdgeKind::Hedge, None) => c.boundary_hedges += 1,
                (EdgeKind::Vedge, _) => c.vedges += 1,
                (EdgeKind::AntiVedge, _) => c.anti_vedges += 1,
            }
        }
        c
    }

    fn push_vertex(&mut self, kind: VertexKind, row: i64, col: i64) -> usize {
        self.vertices.push(Vertex { kind, row, col });
        self.vertices.len() - 1
    }

    fn push_edge(&mut self, u: usize, v: usize, kind: EdgeKind, label: Option<(i64, i64)>) {
        debug_assert!(u != v && u < self.vertices.len() && v < self.vertices.len());
        self.edges.push(Edge { u, v, kind, label });
    }

    /// Canonical description used for labeled-isomorphism comparison.
    #[allow(clippy::type_complexity)]
    fn canonical(&self) -> (Vec<(VertexKind, i64, i64)>, Vec<(EdgeKind, Option<(i64, i64)>, [(i64, i64); 2])>) {
        let mut vs: Vec<_> = self.vertices.iter().map(|v| (v.kind, v.row, v.col)).collect();
        vs.sort();
        let pos = |id: usize| (self.vertices[id].row, self.vertices[id].col);
        let mut es: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (pos(e.u), pos(e.v));
                (e.kind, e.label, [a.min(b), a.max(b)])
            })
            .collect();
        es.sort();
        (vs, es)
    }

    /// Equality up to renumbering of vertex and edge ids, comparing labels.
    pub fn labeled_eq(&self, other: &SignedGraph) -> bool {
        self.canonical() == other.canonical()
    }

    /// JSON document listing vertices `(id, kind, row, col)` and edges `(u, v, kind, label)`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct V<'a> {
            id: usize,
            #[serde(flatten)]
            v: &'a Vertex,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            length: Option<i64>,
            vertices: Vec<V<'a>>,
            edges: &'a [Edge],
        }
        let doc = Doc {
            length: self.frame.as_ref().map(|f| f.length),
            vertices: self.vertices.iter().enumerate().map(|(id, v)| V { id, v }).collect(),
            edges: &self.edges,
        };
        serde_json::to_value(doc).expect("graph document serializes")
    }

    /// Graphviz rendering: shape encodes the vertex kind, style the edge kind.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph signed {\n  node [fontsize=10];\n");
        for (id, v) in self.vertices.iter().enumerate() {
            let shape = match v.kind {
                VertexKind::Plain => "circle",
                VertexKind::Anti => "box",
                VertexKind::Empty => "point",
            };
            let _ = writeln!(
                out,
                "  {id} [label=\"{},{}\", shape={shape}, pos=\"{},{}!\"];",
                v.row, v.col, v.col, -v.row
            );
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::Hedge => "solid",
                EdgeKind::Vedge => "bold",
                EdgeKind::AntiVedge => "dashed",
            };
            let _ = writeln!(out, "  {} -- {} [style={style}];", e.u, e.v);
        }
        out.push_str("}\n");
        out
    }
}

/// Builds `G x P_n` for any integer `n`.
pub fn build_rectangle(g: &BaseGraph, n: i64) -> SignedGraph {
    let m = g.m();
    let mut h = SignedGraph::empty();
    let rows = || (0..m).map(|v| v as i64 + 1);
    let (left, right);
    if n > 0 {
        let mut prev: Option<Vec<usize>> = None;
        let mut first = Vec::new();
        for col in 1..=n {
            let ids: Vec<usize> = rows().map(|r| h.push_vertex(VertexKind::Plain, r, col)).collect();
            for (k, &(a, b)) in g.edges().iter().enumerate() {
                h.push_edge(ids[a], ids[b], EdgeKind::Vedge, Some((k as i64 + 1, col)));
            }
            if let Some(p) = &prev {
                for v in 0..m {
                    h.push_edge(p[v], ids[v], EdgeKind::Hedge, Some((v as i64 + 1, col - 1)));
                }
            } else {
                first = ids.clone();
            }
            prev = Some(ids);
        }
        left = first;
        right = prev.unwrap_or_default();
    } else if n == 0 {
        left = rows().map(|r| h.push_vertex(VertexKind::Empty, r, 0)).collect::<Vec<_>>();
        right = rows().map(|r| h.push_vertex(VertexKind::Empty, r, 1)).collect::<Vec<_>>();
        for v in 0..m {
            h.push_edge(left[v], right[v], EdgeKind::Hedge, None);
        }
    } else {
        left = rows().map(|r| h.push_vertex(VertexKind::Empty, r, n)).collect::<Vec<_>>();
        let mut prev = left.clone();
        let mut first_anti = true;
        for col in (n + 1)..=0 {
            let ids: Vec<usize> = rows().map(|r| h.push_vertex(VertexKind::Anti, r, col)).collect();
            for (k, &(a, b)) in g.edges().iter().enumerate() {
                h.push_edge(ids[a], ids[b], EdgeKind::AntiVedge, Some((k as i64 + 1, col)));
            }
            for v in 0..m {
                let label = (!first_anti).then_some((v as i64 + 1, col - 1));
                h.push_edge(prev[v], ids[v], EdgeKind::Hedge, label);
            }
            first_anti = false;
            prev = ids;
        }
        right = rows().map(|r| h.push_vertex(VertexKind::Empty, r, 1)).collect::<Vec<_>>();
        for v in 0..m {
            h.push_edge(prev[v], right[v], EdgeKind::Hedge, None);
        }
    }
    h.frame = Some(Frame {
        base: g.clone(),
        length: n,
        left,
        right,
    });
    h
}

/// Swaps plain and anti vertices and vedges; hedges and empty vertices stay.
pub fn conjugate(h: &SignedGraph) -> SignedGraph {
    SignedGraph {
        vertices: h
            .vertices
            .iter()
            .map(|v| Vertex {
                kind: v.kind.conjugate(),
                ..*v
            })
            .collect(),
        edges: h
            .edges
            .iter()
            .map(|e| Edge {
                kind: e.kind.conjugate(),
                ..*e
            })
            .collect(),
        frame: h.frame.clone(),
    }
}

fn boundary_kind(h: &SignedGraph, ids: &[usize]) -> Result<VertexKind> {
    let kind = h.vertices[ids[0]].kind;
    if ids.iter().any(|&i| h.vertices[i].kind != kind) {
        return Err(Error::Shape("mixed boundary column".into()));
    }
    if kind == VertexKind::Anti {
        return Err(Error::Shape("adjunction is defined on rectangles, not on conjugated graphs".into()));
    }
    Ok(kind)
}

/// Adjunction `(G x P_{n1})(G x P_{n2})`.
///
/// Every case joins the right boundary of `h1` to the left boundary of `h2`
/// with one hedge per base vertex: plain to plain when both sides are
/// positive, plain to empty (giving the path hedge-empty-hedge to the anti
/// vertex) when the signs differ, and empty to empty when both are negative.
///
/// Labels of the second factor are shifted when both factors are positive,
/// and those of the first when both are negative, so that adjoining two
/// positive (or two negative) rectangles reproduces the labels of the
/// longer rectangle.
pub fn adjoin(h1: &SignedGraph, h2: &SignedGraph) -> Result<SignedGraph> {
    let (f1, f2) = match (&h1.frame, &h2.frame) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Shape("adjunction needs graphs built as G x P_n".into())),
    };
    if f1.base != f2.base {
        return Err(Error::Shape("adjunction over different base graphs".into()));
    }
    let k1 = boundary_kind(h1, &f1.right)?;
    let k2 = boundary_kind(h2, &f2.left)?;
    let both_positive = k1 == VertexKind::Plain && k2 == VertexKind::Plain && f1.length > 0 && f2.length > 0;
    let both_negative = k1 == VertexKind::Empty && k2 == VertexKind::Empty && f1.length < 0 && f2.length < 0;
    let shift1 = if both_negative { f2.length } else { 0 };
    let shift2 = if both_positive { f1.length } else { 0 };

    let offset = h1.vertices.len();
    let mut out = SignedGraph::empty();
    out.vertices.extend(h1.vertices.iter().map(|v| Vertex { col: v.col + shift1, ..*v }));
    out.vertices.extend(h2.vertices.iter().map(|v| Vertex { col: v.col + shift2, ..*v }));
    let shift_label = |l: Option<(i64, i64)>, s: i64| l.map(|(r, c)| (r, c + s));
    out.edges.extend(h1.edges.iter().map(|e| Edge {
        label: shift_label(e.label, shift1),
        ..*e
    }));
    out.edges.extend(h2.edges.iter().map(|e| Edge {
        u: e.u + offset,
        v: e.v + offset,
        label: shift_label(e.label, shift2),
        ..*e
    }));
    for (&a, &b) in f1.right.iter().zip(&f2.left) {
        let label = (k1 == VertexKind::Plain && k2 == VertexKind::Plain).then(|| {
            let v = out.vertices[a];
            (v.row, v.col)
        });
        out.push_edge(a, b + offset, EdgeKind::Hedge, label);
    }
    out.frame = Some(Frame {
        base: f1.base.clone(),
        length: f1.length + f2.length,
        left: f1.left.clone(),
        right: f2.right.iter().map(|&r| r + offset).collect(),
    });
    Ok(out)
}

/// Left-associated adjunction of `G x P_{n}` for every `n` in `ns`.
pub fn adjoin_all(g: &BaseGraph, ns: &[i64]) -> Result<SignedGraph> {
    let (&first, rest) = ns
        .split_first()
        .ok_or_else(|| Error::Precondition("adjunction of an empty list".into()))?;
    rest.iter()
        .try_fold(build_rectangle(g, first), |acc, &n| adjoin(&acc, &build_rectangle(g, n)))
}

/// Replaces a path `a -hedge- e1 -hedge- e2 -hedge- b` through two empty
/// vertices of degree two by a single hedge `a - b`.
pub fn contract_empty_path(h: &SignedGraph, a: usize, b: usize) -> Result<SignedGraph> {
    let n = h.vertices.len();
    if a >= n || b >= n || a == b {
        return Err(Error::Precondition(format!("bad endpoints {a}, {b}")));
    }
    let inc = h.incidence();
    let is_inner = |w: usize| h.vertices[w].kind == VertexKind::Empty && inc[w].len() == 2;
    let hedge = |e: usize| h.edges[e].kind == EdgeKind::Hedge;
    let mut found = None;
    'search: for &ea in inc[a].iter().filter(|&&e| hedge(e)) {
        let e1 = h.edges[ea].other(a);
        if !is_inner(e1) {
            continue;
        }
        for &em in inc[e1].iter().filter(|&&e| e != ea && hedge(e)) {
            let e2 = h.edges[em].other(e1);
            if e2 == a || !is_inner(e2) {
                continue;
            }
            for &eb in inc[e2].iter().filter(|&&e| e != em && hedge(e)) {
                if h.edges[eb].other(e2) == b {
                    found = Some(([e1, e2], [ea, em, eb]));
                    break 'search;
                }
            }
        }
    }
    let (dead_v, dead_e) = found.ok_or_else(|| {
        Error::Precondition(format!("no hedge-empty-hedge-empty-hedge path joins {a} and {b}"))
    })?;

    let mut remap = vec![usize::MAX; n];
    let mut out = SignedGraph::empty();
    for (id, v) in h.vertices.iter().enumerate() {
        if !dead_v.contains(&id) {
            remap[id] = out.vertices.len();
            out.vertices.push(*v);
        }
    }
    for (id, e) in h.edges.iter().enumerate() {
        if !dead_e.contains(&id) {
            out.edges.push(Edge {
                u: remap[e.u],
                v: remap[e.v],
                ..*e
            });
        }
    }
    let (va, vb) = (h.vertices[a], h.vertices[b]);
    let label = (va.kind != VertexKind::Empty
        && vb.kind != VertexKind::Empty
        && va.row == vb.row
        && (va.col - vb.col).abs() == 1)
        .then(|| (va.row, va.col.min(vb.col)));
    out.push_edge(remap[a], remap[b], EdgeKind::Hedge, label);
    out.frame = h.frame.as_ref().and_then(|f| {
        let map = |ids: &[usize]| -> Option<Vec<usize>> {
            ids.iter().map(|&i| (remap[i] != usize::MAX).then_some(remap[i])).collect()
        };
        Some(Frame {
            base: f.base.clone(),
            length: f.length,
            left: map(&f.left)?,
            right: map(&f.right)?,
        })
    });
    Ok(out)
}

/// Vertex pairs joined by a contractible empty path, as produced by
/// adjoining two negative rectangles.
pub fn contractible_pairs(h: &SignedGraph) -> Vec<(usize, usize)> {
    let inc = h.incidence();
    let mut pairs = BTreeSet::new();
    for (e1, v) in h.vertices.iter().enumerate() {
        if v.kind != VertexKind::Empty || inc[e1].len() != 2 {
            continue;
        }
        for &ed in &inc[e1] {
            let e2 = h.edges[ed].other(e1);
            if h.vertices[e2].kind != VertexKind::Empty || inc[e2].len() != 2 || e2 < e1 {
                continue;
            }
            let outer = |w: usize, skip: usize| inc[w].iter().find(|&&e| e != skip).map(|&e| h.edges[e].other(w));
            if let (Some(a), Some(b)) = (outer(e1, ed), outer(e2, ed)) {
                if a != e2 && b != e1 {
                    pairs.insert((a, b));
                }
            }
        }
    }
    pairs.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize) -> BaseGraph {
        BaseGraph::path(m).unwrap()
    }

    #[test]
    fn positive_rectangle_counts() {
        let c = build_rectangle(&p(2), 3).counts();
        assert_eq!((c.plain, c.anti, c.empty), (6, 0, 0));
        assert_eq!((c.hedges(), c.vedges, c.anti_vedges), (4, 3, 0));
    }

    #[test]
    fn negative_rectangle_counts() {
        let c = build_rectangle(&p(2), -3).counts();
        assert_eq!((c.plain, c.anti, c.empty), (0, 6, 4));
        assert_eq!((c.labeled_hedges, c.boundary_hedges, c.anti_vedges), (4, 4, 3));
    }

    #[test]
    fn bridge_counts() {
        let c = build_rectangle(&p(2), 0).counts();
        assert_eq!((c.plain, c.anti, c.empty), (0, 0, 4));
        assert_eq!((c.hedges(), c.vedges + c.anti_vedges), (2, 0));
    }

    #[test]
    fn empty_vertices_have_degree_one() {
        for n in [-4, -1, 0] {
            let h = build_rectangle(&p(3), n);
            for (id, v) in h.vertices().iter().enumerate() {
                if v.kind == VertexKind::Empty {
                    assert_eq!(h.degree(id), 1);
                }
            }
        }
    }

    #[test]
    fn negative_labels_follow_weight_indexing() {
        let h = build_rectangle(&p(2), -5);
        let mut hedge_labels: Vec<_> = h.edges().iter().filter_map(|e| e.label.filter(|_| e.kind == EdgeKind::Hedge)).collect();
        hedge_labels.sort();
        let want: Vec<_> = [1, 2].iter().flat_map(|&r| [-4, -3, -2, -1].map(|c| (r, c))).collect();
        assert_eq!(hedge_labels, want);
        let cols: BTreeSet<_> = h.vertices().iter().filter(|v| v.kind == VertexKind::Anti).map(|v| v.col).collect();
        assert_eq!(cols, (-4..=0).collect());
    }

    #[test]
    fn conjugate_of_positive() {
        let h = conjugate(&build_rectangle(&p(2), 2));
        let c = h.counts();
        assert_eq!((c.plain, c.anti, c.empty, c.hedges(), c.anti_vedges), (0, 4, 0, 2, 2));
    }

    #[test]
    fn conjugate_is_involution() {
        for n in -3..=3 {
            let h = build_rectangle(&BaseGraph::cycle(3).unwrap(), n);
            assert_eq!(conjugate(&conjugate(&h)), h);
            assert_eq!(conjugate(&h).counts().empty, h.counts().empty);
        }
        let bridge = build_rectangle(&p(2), 0);
        assert_eq!(conjugate(&bridge), bridge);
    }

    #[test]
    fn adjoin_positive_positive_is_longer_rectangle() {
        let h = adjoin(&build_rectangle(&p(2), 1), &build_rectangle(&p(2), 2)).unwrap();
        assert!(h.labeled_eq(&build_rectangle(&p(2), 3)));
    }

    #[test]
    fn adjoin_opposite_signs() {
        let h = adjoin(&build_rectangle(&p(2), 2), &build_rectangle(&p(2), -3)).unwrap();
        let c = h.counts();
        assert_eq!((c.plain, c.anti, c.empty), (4, 6, 4));
        assert_eq!(h.frame().unwrap().length, -1);
    }

    #[test]
    fn adjoin_negative_negative() {
        let h = adjoin(&build_rectangle(&p(2), -1), &build_rectangle(&p(2), -1)).unwrap();
        let c = h.counts();
        assert_eq!((c.anti, c.empty), (4, 8));
        let inner = h.vertices().iter().enumerate().filter(|(id, v)| v.kind == VertexKind::Empty && h.degree(*id) == 2).count();
        assert_eq!(inner, 4);
    }

    #[test]
    fn adjoin_rejects_mismatch() {
        let a = build_rectangle(&p(2), 1);
        let b = build_rectangle(&p(3), 1);
        assert!(matches!(adjoin(&a, &b), Err(Error::Shape(_))));
        assert!(matches!(adjoin(&conjugate(&a), &a), Err(Error::Shape(_))));
    }

    #[test]
    fn contraction_recovers_longer_negative_rectangle() {
        let g = p(1);
        let h = adjoin(&build_rectangle(&g, -1), &build_rectangle(&g, -1)).unwrap();
        let pairs = contractible_pairs(&h);
        assert_eq!(pairs.len(), 1);
        let (a, b) = pairs[0];
        let c = contract_empty_path(&h, a, b).unwrap();
        assert!(c.labeled_eq(&build_rectangle(&g, -2)));
        assert_eq!(c.counts().labeled_hedges, 1);
    }

    #[test]
    fn contraction_requires_path() {
        let h = build_rectangle(&p(1), -2);
        assert!(matches!(contract_empty_path(&h, 1, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn json_and_dot() {
        let h = build_rectangle(&p(1), -1);
        let j = h.to_json();
        assert_eq!(j["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(j["edges"][0]["kind"], "hedge");
        assert_eq!(j["vertices"][1]["kind"], "anti");
        let dot = h.to_dot();
        assert!(dot.contains("shape=box") && dot.contains("shape=point"));
    }
}
