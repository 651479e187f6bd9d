//! Brute-force matching enumeration: the ground truth every faster route is
//! checked against.
//!
//! A matching is a set of pairwise disjoint edges together with the vertices
//! it leaves uncovered. Its scalar weight is the product of the kind weights
//! of its edges and uncovered vertices, so any matching that leaves an empty
//! vertex uncovered has weight zero.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{Monomial, MultiPoly, VarKey};
use crate::signed_graph::{build_rectangle, BaseGraph, EdgeKind, SignedGraph, VertexKind};

/// Largest edge count the exhaustive routines accept.
pub const ORACLE_EDGE_LIMIT: usize = 48;

/// Largest edge count accepted when only perfect matchings are enumerated.
pub const PERFECT_EDGE_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<usize>,
    uncovered: Vec<usize>,
}

impl Matching {
    /// Builds a matching from edge ids, checking disjointness.
    pub fn new(h: &SignedGraph, mut edges: Vec<usize>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut covered = vec![false; h.vertices().len()];
        for &e in &edges {
            let edge = h
                .edges()
                .get(e)
                .ok_or_else(|| Error::Precondition(format!("no edge {e}")))?;
            for w in [edge.u, edge.v] {
                if std::mem::replace(&mut covered[w], true) {
                    return Err(Error::Precondition(format!("edges share vertex {w}")));
                }
            }
        }
        let uncovered = (0..covered.len()).filter(|&w| !covered[w]).collect();
        Ok(Matching { edges, uncovered })
    }

    fn from_parts(mut edges: Vec<usize>, mut uncovered: Vec<usize>) -> Self {
        edges.sort_unstable();
        uncovered.sort_unstable();
        Matching { edges, uncovered }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn uncovered(&self) -> &[usize] {
        &self.uncovered
    }
}

/// Numbers of matchings of weight `+1` and `-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub positive: BigInt,
    pub negative: BigInt,
}

impl Census {
    pub fn new(positive: i64, negative: i64) -> Self {
        Census {
            positive: positive.into(),
            negative: negative.into(),
        }
    }

    /// Signed total, `positive - negative`.
    pub fn signed(&self) -> BigInt {
        &self.positive - &self.negative
    }

    /// Unsigned total, `positive + negative`.
    pub fn unsigned(&self) -> BigInt {
        &self.positive + &self.negative
    }
}

fn guard(h: &SignedGraph, limit: usize, name: &'static str) -> Result<()> {
    let actual = h.edges().len();
    if actual > limit {
        return Err(Error::SizeGuard { guard: name, limit, actual });
    }
    Ok(())
}

/// Every matching of `h`, including the empty one and those of weight zero,
/// in lexicographic order of their sorted edge-id lists.
pub fn enumerate_matchings(h: &SignedGraph) -> Result<Matchings<'_>> {
    guard(h, ORACLE_EDGE_LIMIT, "oracle_edges")?;
    Ok(Matchings {
        h,
        chosen: Vec::new(),
        covered: vec![false; h.vertices().len()],
        started: false,
        cursor: 0,
    })
}

pub struct Matchings<'a> {
    h: &'a SignedGraph,
    chosen: Vec<usize>,
    covered: Vec<bool>,
    started: bool,
    cursor: usize,
}

impl Matchings<'_> {
    fn current(&self) -> Matching {
        let uncovered = (0..self.covered.len()).filter(|&w| !self.covered[w]).collect();
        Matching::from_parts(self.chosen.clone(), uncovered)
    }
}

impl Iterator for Matchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        let edges = self.h.edges();
        loop {
            let found = (self.cursor..edges.len()).find(|&e| !self.covered[edges[e].u] && !self.covered[edges[e].v]);
            if let Some(e) = found {
                self.chosen.push(e);
                self.covered[edges[e].u] = true;
                self.covered[edges[e].v] = true;
                self.cursor = e + 1;
                return Some(self.current());
            }
            let last = self.chosen.pop()?;
            self.covered[edges[last].u] = false;
            self.covered[edges[last].v] = false;
            self.cursor = last + 1;
        }
    }
}

/// Product of kind weights over chosen edges and uncovered vertices.
pub fn scalar_weight(h: &SignedGraph, mu: &Matching) -> i8 {
    let e: i8 = mu.edges.iter().map(|&e| h.edges()[e].kind.weight()).product();
    let v: i8 = mu.uncovered.iter().map(|&w| h.vertices()[w].kind.weight()).product();
    e * v
}

/// Visits every matching of nonzero weight (or only the perfect ones),
/// deciding vertices in id order.
fn for_each_nonzero(h: &SignedGraph, perfect_only: bool, visit: &mut dyn FnMut(&[usize], &[usize])) {
    struct Walk<'a> {
        h: &'a SignedGraph,
        inc: Vec<Vec<usize>>,
        covered: Vec<bool>,
        edges: Vec<usize>,
        uncovered: Vec<usize>,
        perfect_only: bool,
    }
    impl Walk<'_> {
        fn go(&mut self, start: usize, visit: &mut dyn FnMut(&[usize], &[usize])) {
            let n = self.covered.len();
            let Some(v) = (start..n).find(|&w| !self.covered[w]) else {
                visit(&self.edges, &self.uncovered);
                return;
            };
            if !self.perfect_only && self.h.vertices()[v].kind != VertexKind::Empty {
                self.covered[v] = true;
                self.uncovered.push(v);
                self.go(v + 1, visit);
                self.uncovered.pop();
                self.covered[v] = false;
            }
            for i in 0..self.inc[v].len() {
                let e = self.inc[v][i];
                let u = self.h.edges()[e].other(v);
                if self.covered[u] {
                    continue;
                }
                self.covered[v] = true;
                self.covered[u] = true;
                self.edges.push(e);
                self.go(v + 1, visit);
                self.edges.pop();
                self.covered[u] = false;
                self.covered[v] = false;
            }
        }
    }
    let mut walk = Walk {
        h,
        inc: h.incidence(),
        covered: vec![false; h.vertices().len()],
        edges: Vec::new(),
        uncovered: Vec::new(),
        perfect_only,
    };
    walk.go(0, visit);
}

fn sign_of(h: &SignedGraph, edges: &[usize], uncovered: &[usize]) -> i8 {
    let e: i8 = edges.iter().map(|&e| h.edges()[e].kind.weight()).product();
    let v: i8 = uncovered.iter().map(|&w| h.vertices()[w].kind.weight()).product();
    e * v
}

/// Signed census of the nonzero-weight matchings.
pub fn signed_census(h: &SignedGraph) -> Result<Census> {
    guard(h, ORACLE_EDGE_LIMIT, "oracle_edges")?;
    let (mut pos, mut neg) = (0u64, 0u64);
    for_each_nonzero(h, false, &mut |e, u| match sign_of(h, e, u) {
        1 => pos += 1,
        -1 => neg += 1,
        _ => {}
    });
    Ok(Census {
        positive: pos.into(),
        negative: neg.into(),
    })
}

/// `M(H)`: the sum of the weights of all matchings.
pub fn signed_count(h: &SignedGraph) -> Result<BigInt> {
    Ok(signed_census(h)?.signed())
}

/// Signed number of perfect matchings, `f(1, 1, 0)` for a rectangle.
pub fn perfect_signed_count(h: &SignedGraph) -> Result<BigInt> {
    guard(h, PERFECT_EDGE_LIMIT, "perfect_edges")?;
    let mut total = 0i64;
    for_each_nonzero(h, true, &mut |e, u| total += sign_of(h, e, u) as i64);
    Ok(total.into())
}

/// Every nonzero-weight matching, in the walk's order.
pub fn nonzero_matchings(h: &SignedGraph) -> Result<Vec<Matching>> {
    guard(h, ORACLE_EDGE_LIMIT, "oracle_edges")?;
    let mut out = Vec::new();
    for_each_nonzero(h, false, &mut |e, u| out.push(Matching::from_parts(e.to_vec(), u.to_vec())));
    Ok(out)
}

fn sgn(col: i64) -> i64 {
    if col > 0 {
        1
    } else {
        -1
    }
}

/// `prod x_{i,j}^{-1}` over the labeled hedges with `j <= 0`.
fn hedge_denominator(h: &SignedGraph) -> Monomial {
    let exps = h.edges().iter().filter_map(|e| match (e.kind, e.label) {
        (EdgeKind::Hedge, Some((i, j))) if j <= 0 => Some((VarKey::x_at(i, j), -1)),
        _ => None,
    });
    Monomial::from_exponents(exps).expect("x variables admit negative exponents")
}

fn formal_numerator(h: &SignedGraph, edges: &[usize], uncovered: &[usize]) -> Result<(i64, Monomial)> {
    let mut sign = 1i64;
    let mut exps = Vec::with_capacity(edges.len() + uncovered.len());
    for &e in edges {
        let edge = h.edges()[e];
        match (edge.kind, edge.label) {
            (EdgeKind::Hedge, Some((i, j))) => exps.push((VarKey::x_at(i, j), 1)),
            (EdgeKind::Hedge, None) => {}
            (_, Some((i, j))) => {
                sign *= sgn(j);
                exps.push((VarKey::y_at(i, j), 1));
            }
            (_, None) => return Err(Error::Precondition(format!("unlabeled vertical edge {e}"))),
        }
    }
    for &w in uncovered {
        let v = h.vertices()[w];
        if v.kind == VertexKind::Empty {
            return Err(Error::ZeroWeight(format!("empty vertex {w} at ({},{}) is uncovered", v.row, v.col)));
        }
        sign *= sgn(v.col);
        exps.push((VarKey::z_at(v.row, v.col), 1));
    }
    Ok((sign, Monomial::from_exponents(exps)?))
}

/// Formal weight of one matching: hedges give `x_{i,j}`, vedges
/// `sgn(j) y_{i,j}`, uncovered vertices `sgn(j) z_{i,j}`, all divided by
/// `x_{i,j}` for every hedge of the graph with `j <= 0`.
pub fn matching_weight_formal(h: &SignedGraph, mu: &Matching) -> Result<MultiPoly> {
    let (sign, num) = formal_numerator(h, &mu.edges, &mu.uncovered)?;
    Ok(MultiPoly::term(sign.into(), num.mul(&hedge_denominator(h))))
}

/// Sum of formal weights over the nonzero matchings of `h`.
pub fn graph_matching_poly(h: &SignedGraph) -> Result<MultiPoly> {
    guard(h, ORACLE_EDGE_LIMIT, "oracle_edges")?;
    let den = hedge_denominator(h);
    let mut acc = MultiPoly::zero();
    let mut err = None;
    for_each_nonzero(h, false, &mut |e, u| match formal_numerator(h, e, u) {
        Ok((sign, num)) => acc.add_term(num.mul(&den), sign.into()),
        Err(x) => {
            err.get_or_insert(x);
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

/// The matching polynomial `f_n` of the grid `G(m, n)` in indexed variables.
pub fn matching_poly_formal(m: usize, n: i64) -> Result<MultiPoly> {
    graph_matching_poly(&build_rectangle(&BaseGraph::path(m)?, n))
}

/// `f_n` of `G x P_n` with every variable collapsed to the uniform `x`, `y`, `z`.
pub fn matching_poly_scalar(g: &BaseGraph, n: i64) -> Result<MultiPoly> {
    Ok(graph_matching_poly(&build_rectangle(g, n))?.collapse_indices())
}

/// Sum of `scalar_weight` over the full edge-driven enumeration. Slower than
/// [`signed_count`] but shares none of its walk.
pub fn signed_count_by_stream(h: &SignedGraph) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for mu in enumerate_matchings(h)? {
        total += scalar_weight(h, &mu) as i64;
    }
    Ok(total)
}
