//! Univariate polynomials in `t` over [`MultiPoly`], and rational functions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::number::Rational;
use super::poly::{MultiPoly, VarKey};
use crate::error::{Error, Result};

/// Dense polynomial `c0 + c1 t + c2 t^2 + ...`, never carrying trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<MultiPoly>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<MultiPoly>) -> Self {
        while coeffs.last().is_some_and(MultiPoly::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| MultiPoly::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn constant(c: MultiPoly) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(MultiPoly::one())
    }

    /// `c * t^k`
    pub fn monomial(c: MultiPoly, k: usize) -> Self {
        let mut coeffs = vec![MultiPoly::zero(); k];
        coeffs.push(c);
        UniPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![MultiPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &MultiPoly) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Coefficients reversed with respect to `len` slots: `t^(len-1) p(1/t)`.
    pub fn reversed(&self, len: usize) -> UniPoly {
        assert!(self.coeffs.len() <= len, "reversal length below degree");
        UniPoly::new((0..len).map(|k| self.coeff(len - 1 - k)).collect())
    }

    /// Applies a coefficient-wise variable substitution.
    pub fn substitute(&self, map: &BTreeMap<VarKey, MultiPoly>) -> Result<UniPoly> {
        Ok(UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.substitute(map))
                .collect::<Result<_>>()?,
        ))
    }

    /// Division with remainder by a polynomial whose leading coefficient is
    /// a unit (±1 times a monomial).
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead_inv = divisor.coeffs[dd].unit_inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![MultiPoly::zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = &rem[rem.len() - 1] * &lead_inv;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let v = &rem[k + i] - &(&q * d);
                rem[k + i] = v;
            }
            quot[k] = q;
            while rem.last().is_some_and(MultiPoly::is_zero) {
                rem.pop();
            }
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn eval_t(&self, t: &Rational, coeff_value: &dyn Fn(&MultiPoly) -> Result<Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + coeff_value(c)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // single terms carry their own sign; sums are parenthesized
            let negative = c.as_single_term().is_some_and(|(_, a)| a.is_negative());
            let c = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let body = if c.num_terms() > 1 { format!("({c})") } else { c.to_string() };
            match (k, c.is_one()) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{body}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{body}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// `numer / denom` with polynomial numerator and nonzero denominator in `t`.
///
/// No canonical form is maintained; equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numer: UniPoly,
    denom: UniPoly,
}

impl RationalFunction {
    pub fn new(numer: UniPoly, denom: UniPoly) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        Ok(RationalFunction { numer, denom })
    }

    pub fn numer(&self) -> &UniPoly {
        &self.numer
    }

    pub fn denom(&self) -> &UniPoly {
        &self.denom
    }

    /// `a.numer * b.denom == b.numer * a.denom`
    pub fn ratfun_equal(&self, other: &RationalFunction) -> bool {
        self.numer.mul(&other.denom) == other.numer.mul(&self.denom)
    }

    pub fn mul_poly(&self, p: &UniPoly) -> RationalFunction {
        RationalFunction {
            numer: self.numer.mul(p),
            denom: self.denom.clone(),
        }
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    /// Substitutes variables in every coefficient of numerator and denominator.
    pub fn substitute_coeffs(&self, map: &BTreeMap<VarKey, MultiPoly>) -> Result<RationalFunction> {
        RationalFunction::new(self.numer.substitute(map)?, self.denom.substitute(map)?)
    }

    /// First `count` Taylor coefficients around `t = 0`.
    ///
    /// The constant term of the denominator must be a unit: ±1 times a
    /// monomial in the `x` variables.
    pub fn series_coeffs(&self, count: usize) -> Result<Vec<MultiPoly>> {
        let d0 = self.denom.coeff(0);
        if d0.is_zero() {
            return Err(Error::NotAPowerSeries("denominator vanishes at t = 0".into()));
        }
        let d0_inv = d0.unit_inverse().map_err(|_| {
            Error::NotAPowerSeries(format!("constant term {d0} of the denominator is not invertible"))
        })?;
        let mut out: Vec<MultiPoly> = Vec::with_capacity(count);
        for n in 0..count {
            let mut acc = self.numer.coeff(n);
            for k in 1..=n.min(self.denom.coeffs.len().saturating_sub(1)) {
                let dk = &self.denom.coeffs[k];
                if !dk.is_zero() {
                    acc = &acc - &(dk * &out[n - k]);
                }
            }
            out.push(&acc * &d0_inv);
        }
        Ok(out)
    }

    /// Exact value at a point `t` with coefficients evaluated by `coeff_value`.
    pub fn eval(&self, t: &Rational, coeff_value: &dyn Fn(&MultiPoly) -> Result<Rational>) -> Result<Rational> {
        let d = self.denom.eval_t(t, coeff_value)?;
        if d.is_zero() {
            return Err(Error::Domain("denominator vanishes at the evaluation point".into()));
        }
        Ok(self.numer.eval_t(t, coeff_value)? / d)
    }

    /// Convenience evaluation at uniform `(x, y, z)` and `t`.
    pub fn eval_uniform(&self, x: &Rational, y: &Rational, z: &Rational, t: &Rational) -> Result<Rational> {
        self.eval(t, &|c: &MultiPoly| c.eval_uniform(x, y, z))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == UniPoly::one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "[{}] / [{}]", self.numer, self.denom)
        }
    }
}

/// Free-function form of [`RationalFunction::ratfun_equal`].
pub fn ratfun_equal(a: &RationalFunction, b: &RationalFunction) -> bool {
    a.ratfun_equal(b)
}
