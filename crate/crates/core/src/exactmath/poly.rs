//! Sparse multivariate Laurent polynomials with big-integer coefficients.
//!
//! Variables are [`VarKey`]s: the hedge, vedge and vertex weights `x`, `y`,
//! `z` (either uniform or indexed by a grid position) and the series
//! variable `t`. Only `x`-kind variables may carry negative exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::number::{is_unit, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    X,
    Y,
    Z,
    T,
}

impl VarKind {
    fn letter(self) -> char {
        match self {
            VarKind::X => 'x',
            VarKind::Y => 'y',
            VarKind::Z => 'z',
            VarKind::T => 't',
        }
    }
}

/// A formal variable: `x`, `y`, `z`, `t`, or an indexed `x_{i,j}`, `y_{i,j}`, `z_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarKey {
    kind: VarKind,
    index: Option<(i64, i64)>,
}

impl VarKey {
    pub const X: VarKey = VarKey::uniform(VarKind::X);
    pub const Y: VarKey = VarKey::uniform(VarKind::Y);
    pub const Z: VarKey = VarKey::uniform(VarKind::Z);
    pub const T: VarKey = VarKey::uniform(VarKind::T);

    pub const fn uniform(kind: VarKind) -> Self {
        VarKey { kind, index: None }
    }

    /// Indexed variable. `t` never carries indices.
    pub fn indexed(kind: VarKind, row: i64, col: i64) -> Result<Self> {
        if kind == VarKind::T {
            return Err(Error::Precondition("t cannot be indexed".into()));
        }
        Ok(VarKey {
            kind,
            index: Some((row, col)),
        })
    }

    pub fn x_at(row: i64, col: i64) -> Self {
        VarKey {
            kind: VarKind::X,
            index: Some((row, col)),
        }
    }

    pub fn y_at(row: i64, col: i64) -> Self {
        VarKey {
            kind: VarKind::Y,
            index: Some((row, col)),
        }
    }

    pub fn z_at(row: i64, col: i64) -> Self {
        VarKey {
            kind: VarKind::Z,
            index: Some((row, col)),
        }
    }

    pub fn kind(&self) -> VarKind {
        self.kind
    }

    pub fn index(&self) -> Option<(i64, i64)> {
        self.index
    }

    pub fn is_indexed(&self) -> bool {
        self.index.is_some()
    }

    /// The same kind with the index dropped.
    pub fn collapsed(&self) -> VarKey {
        VarKey::uniform(self.kind)
    }

    pub fn allows_negative_exponent(&self) -> bool {
        self.kind == VarKind::X
    }
}

impl fmt::Display for VarKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            None => write!(f, "{}", self.kind.letter()),
            Some((i, j)) => write!(f, "{}_{{{},{}}}", self.kind.letter(), i, j),
        }
    }
}

/// Product of variables raised to integer powers. Zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<VarKey, i32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(key: VarKey) -> Self {
        Monomial(BTreeMap::from([(key, 1)]))
    }

    /// `key^exp`; negative exponents are only accepted on `x`-kind keys.
    pub fn power(key: VarKey, exp: i32) -> Result<Self> {
        Self::from_exponents([(key, exp)])
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (VarKey, i32)>) -> Result<Self> {
        let mut m = Monomial::one();
        for (key, e) in exps {
            if e < 0 && !key.allows_negative_exponent() {
                return Err(Error::Precondition(format!(
                    "negative exponent {e} on non-Laurent variable {key}"
                )));
            }
            m.bump(key, e);
        }
        Ok(m)
    }

    fn bump(&mut self, key: VarKey, e: i32) {
        if e == 0 {
            return;
        }
        let slot = self.0.entry(key).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.0.remove(&key);
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, key: &VarKey) -> i32 {
        self.0.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarKey, &i32)> {
        self.0.iter()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.values().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&k, &e) in &other.0 {
            out.bump(k, e);
        }
        out
    }

    /// Multiplicative inverse, if it stays inside the Laurent ring.
    pub fn inverse(&self) -> Result<Monomial> {
        Monomial::from_exponents(self.0.iter().map(|(&k, &e)| (k, -e)))
    }

    fn has_negative_exponent(&self) -> bool {
        self.0.values().any(|&e| e < 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{k}")?;
            } else {
                write!(f, "{k}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse Laurent polynomial over the integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn from_i64(c: i64) -> Self {
        MultiPoly::constant(BigInt::from(c))
    }

    pub fn var(key: VarKey) -> Self {
        MultiPoly::term(BigInt::one(), Monomial::var(key))
    }

    pub fn term(coeff: BigInt, mono: Monomial) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(mono, coeff);
        p
    }

    /// `key^exp` with coefficient one.
    pub fn var_pow(key: VarKey, exp: i32) -> Result<Self> {
        Ok(MultiPoly::term(BigInt::one(), Monomial::power(key, exp)?))
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// `Some` when the polynomial is a single term.
    pub fn as_single_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(Monomial::has_negative_exponent)
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.mul(mono), v.clone())).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse of a unit (a signed monomial with coefficient ±1).
    pub fn unit_inverse(&self) -> Result<MultiPoly> {
        match self.as_single_term() {
            Some((m, c)) if is_unit(c) => Ok(MultiPoly::term(c.clone(), m.inverse()?)),
            _ => Err(Error::Precondition(format!("{self} is not a unit"))),
        }
    }

    /// Replaces variables by polynomials, expanding the result.
    ///
    /// Variables absent from `map` are left in place. A variable that occurs
    /// with a negative exponent must be mapped to a signed monomial.
    pub fn substitute(&self, map: &BTreeMap<VarKey, MultiPoly>) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut acc = MultiPoly::constant(coeff.clone());
            for (key, &e) in mono.iter() {
                let factor = match map.get(key) {
                    None => MultiPoly::var_pow(*key, e)?,
                    Some(image) if e >= 0 => image.pow(e as u32),
                    Some(image) => {
                        let inv = image.unit_inverse().map_err(|_| {
                            Error::Substitution(format!(
                                "{key} occurs with exponent {e} but its image {image} is not a signed monomial"
                            ))
                        })?;
                        inv.pow(e.unsigned_abs())
                    }
                };
                acc = &acc * &factor;
            }
            out += &acc;
        }
        Ok(out)
    }

    /// Collapses every indexed variable onto its uniform counterpart.
    pub fn collapse_indices(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut m = Monomial::one();
            for (k, &e) in mono.iter() {
                m.bump(k.collapsed(), e);
            }
            out.add_term(m, coeff.clone());
        }
        out
    }

    /// Exact evaluation. `value` is asked for every variable that occurs.
    pub fn eval_with<F>(&self, mut value: F) -> Result<Rational>
    where
        F: FnMut(&VarKey) -> Option<Rational>,
    {
        let mut total = Rational::zero();
        for (mono, coeff) in &self.terms {
            let mut term = Rational::from_integer(coeff.clone());
            for (key, &e) in mono.iter() {
                let v = value(key)
                    .ok_or_else(|| Error::Precondition(format!("no value given for {key}")))?;
                if e < 0 && v.is_zero() {
                    return Err(Error::Domain(format!("{key} = 0 in a negative power")));
                }
                term *= num_traits::pow::Pow::pow(&v, e);
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluates with every `x`-kind variable set to `x`, and so on.
    pub fn eval_uniform(&self, x: &Rational, y: &Rational, z: &Rational) -> Result<Rational> {
        self.eval_with(|k| match k.kind() {
            VarKind::X => Some(x.clone()),
            VarKind::Y => Some(y.clone()),
            VarKind::Z => Some(z.clone()),
            VarKind::T => None,
        })
    }

    /// Largest total degree among the terms, `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn min_exponent(&self, key: &VarKey) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(key)).min()
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::from_i64(c)
    }
}

impl From<VarKey> for MultiPoly {
    fn from(k: VarKey) -> Self {
        MultiPoly::var(k)
    }
}

impl<'a> AddAssign<&'a MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &'a MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    /// Terms by descending total degree, then by monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            b.0.total_degree()
                .cmp(&a.0.total_degree())
                .then_with(|| a.0.cmp(b.0))
        });
        for (idx, (mono, coeff)) in terms.into_iter().enumerate() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
