//! Subset-indexed transfer matrix for `G x P_n`, n >= 0.
//!
//! Row `A` is the set of base vertices already covered by hedges arriving
//! from the previous column, column `B` the set sending a hedge on to the
//! next one. A hedge is weighted `x` when emitted, so `T[A][B]` carries
//! `x^{|B|}` times the matching polynomial of `G[V \ (A u B)]` in `y` and `z`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{char_poly, Matrix, MultiPoly, Rational, RationalFunction, UniPoly, VarKey};
use crate::recurrence::Recurrence;
use crate::signed_graph::BaseGraph;

/// Largest base graph accepted by [`build_transfer`].
pub const TRANSFER_VERTEX_LIMIT: usize = 20;

/// Largest base graph accepted by [`genfunc`].
pub const GENFUNC_VERTEX_LIMIT: usize = 6;

/// A point `(x, y, z)` at which to specialize the uniform variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point {
    pub fn new(x: i64, y: i64, z: i64) -> Self {
        Point {
            x: Rational::from_integer(x.into()),
            y: Rational::from_integer(y.into()),
            z: Rational::from_integer(z.into()),
        }
    }

    pub fn ones() -> Self {
        Point::new(1, 1, 1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransferMatrix {
    m: usize,
    entries: Matrix<MultiPoly>,
}

impl TransferMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &Matrix<MultiPoly> {
        &self.entries
    }

    pub fn get(&self, a: usize, b: usize) -> &MultiPoly {
        self.entries.get(a, b)
    }

    pub fn specialize(&self, p: &Point) -> Result<Matrix<Rational>> {
        self.entries.try_map(|e| e.eval_uniform(&p.x, &p.y, &p.z))
    }
}

fn guard(g: &BaseGraph, limit: usize, name: &'static str) -> Result<()> {
    if g.m() > limit {
        return Err(Error::SizeGuard {
            guard: name,
            limit,
            actual: g.m(),
        });
    }
    Ok(())
}

/// Matching polynomial of `G[S]` for every subset `S`, by peeling off the
/// lowest vertex: it is either uncovered (`z`) or matched to a neighbour (`y`).
fn subset_polys<R: crate::exactmath::Ring>(g: &BaseGraph, y: &R, z: &R) -> Vec<R> {
    let m = g.m();
    let mut nbr = vec![0usize; m];
    for &(u, v) in g.edges() {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    let mut p = vec![R::zero(); 1 << m];
    p[0] = R::one();
    for s in 1..(1usize << m) {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let mut acc = z.mul(&p[rest]);
        let mut cand = nbr[v] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            acc = acc.add(&y.mul(&p[rest & !(1 << u)]));
        }
        p[s] = acc;
    }
    p
}

fn assemble<R: crate::exactmath::Ring>(g: &BaseGraph, x: &R, y: &R, z: &R) -> Matrix<R> {
    let m = g.m();
    let full = (1usize << m) - 1;
    let p = subset_polys(g, y, z);
    let xpow: Vec<R> = (0..=m)
        .scan(R::one(), |acc, _| {
            let cur = acc.clone();
            *acc = acc.mul(x);
            Some(cur)
        })
        .collect();
    let mut t = Matrix::zeros(1 << m, 1 << m);
    for a in 0..=full {
        for b in 0..=full {
            if a & b == 0 {
                let free = full & !(a | b);
                t.set(a, b, xpow[b.count_ones() as usize].mul(&p[free]));
            }
        }
    }
    t
}

pub fn build_transfer(g: &BaseGraph) -> Result<TransferMatrix> {
    guard(g, TRANSFER_VERTEX_LIMIT, "transfer_vertices")?;
    let entries = assemble(
        g,
        &MultiPoly::var(VarKey::X),
        &MultiPoly::var(VarKey::Y),
        &MultiPoly::var(VarKey::Z),
    );
    Ok(TransferMatrix { m: g.m(), entries })
}

/// The transfer matrix already specialized at `p`, built without symbolic
/// intermediates.
pub fn transfer_at(g: &BaseGraph, p: &Point) -> Result<Matrix<Rational>> {
    guard(g, TRANSFER_VERTEX_LIMIT, "transfer_vertices")?;
    Ok(assemble(g, &p.x, &p.y, &p.z))
}

/// `f_n(p) = (T^n)[0][0]` for `n >= 0`.
pub fn count_at(g: &BaseGraph, n: i64, p: &Point) -> Result<Rational> {
    let n = u64::try_from(n).map_err(|_| Error::Domain(format!("transfer counts need n >= 0, got {n}")))?;
    Ok(transfer_at(g, p)?.pow(n)?.get(0, 0).clone())
}

/// `M(G x P_n)` for `n >= 0`.
pub fn count_fast(g: &BaseGraph, n: i64) -> Result<BigInt> {
    let n = u64::try_from(n).map_err(|_| Error::Domain(format!("transfer counts need n >= 0, got {n}")))?;
    guard(g, TRANSFER_VERTEX_LIMIT, "transfer_vertices")?;
    let one = BigInt::one();
    Ok(assemble(g, &one, &one, &one).pow(n)?.get(0, 0).clone())
}

/// `[f_0, ..., f_{count-1}]` in the uniform variables.
pub fn series_scalar(g: &BaseGraph, count: usize) -> Result<Vec<MultiPoly>> {
    let t = build_transfer(g)?;
    let mut row = vec![MultiPoly::zero(); t.entries.rows()];
    row[0] = MultiPoly::one();
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        out.push(row[0].clone());
        if k + 1 < count {
            row = t.entries.vec_mul(&row)?;
        }
    }
    Ok(out)
}

/// `det(I - tM)` as a polynomial in `t`: the reversed characteristic polynomial.
fn det_one_minus_t(m: &Matrix<MultiPoly>) -> Result<UniPoly> {
    Ok(char_poly(m)?.reversed(m.rows() + 1))
}

/// `F(t) = sum_n f_n t^n`, as the `(0,0)` cofactor of `I - tT` over its
/// determinant. Neither side is reduced.
pub fn genfunc(g: &BaseGraph) -> Result<RationalFunction> {
    guard(g, GENFUNC_VERTEX_LIMIT, "genfunc_vertices")?;
    let t = build_transfer(g)?;
    let denom = det_one_minus_t(&t.entries)?;
    let numer = det_one_minus_t(&t.entries.minor(0, 0))?;
    RationalFunction::new(numer, denom)
}

/// Cayley–Hamilton recurrence `a_n = c_1 a_{n-1} + ... + c_k a_{n-k}` from the
/// characteristic polynomial of `T` specialized at `p`.
///
/// When `T` is singular the trailing zero coefficients are stripped and the
/// recurrence only holds from `n = 2^m` on.
pub fn recurrence_from_charpoly(t: &TransferMatrix, p: &Point) -> Result<Recurrence> {
    let coeffs = t.specialize(p)?.char_poly_coeffs()?;
    let k = coeffs.len() - 1;
    Recurrence::new((1..=k).map(|i| -&coeffs[k - i]).collect())
}

/// The same recurrence with polynomial coefficients `[c_1, ..., c_k]`.
pub fn recurrence_symbolic(t: &TransferMatrix) -> Result<Vec<MultiPoly>> {
    let chi = char_poly(&t.entries)?;
    let k = t.entries.rows();
    let mut c: Vec<MultiPoly> = (1..=k).map(|i| -&chi.coeff(k - i)).collect();
    while c.last().is_some_and(MultiPoly::is_zero) {
        c.pop();
    }
    Ok(c)
}

/// Values `f_lo(p), ..., f_hi(p)` by iterating the row vector.
pub fn counts_at(g: &BaseGraph, lo: i64, hi: i64, p: &Point) -> Result<Vec<Rational>> {
    if lo < 0 {
        return Err(Error::Domain(format!("transfer counts need n >= 0, got {lo}")));
    }
    let t = transfer_at(g, p)?;
    let mut row = vec![Rational::zero(); t.rows()];
    row[0] = Rational::one();
    let mut out = Vec::new();
    for n in 0..=hi {
        if n >= lo {
            out.push(row[0].clone());
        }
        if n < hi {
            row = t.vec_mul(&row)?;
        }
    }
    Ok(out)
}
