//! Constant-coefficient linear recurrences: discovery from a prefix and
//! exact extension in both directions.

use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactmath::{format_rational, parse_rational, Rational};

/// `a_n = c_1 a_{n-1} + ... + c_k a_{n-k}` with `c_k != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<Rational>,
}

impl Recurrence {
    /// Strips trailing zero coefficients. An all-zero list describes an
    /// eventually-zero sequence and is refused.
    pub fn new(mut coeffs: Vec<Rational>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::Degenerate("recurrence has no nonzero coefficient".into()));
        }
        Ok(Recurrence { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Recurrence::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Next term after `prev`, whose last entry is `a_{n-1}`.
    fn step_forward(&self, prev: &[Rational]) -> Rational {
        let k = self.order();
        let tail = &prev[prev.len() - k..];
        self.coeffs
            .iter()
            .zip(tail.iter().rev())
            .fold(Rational::zero(), |acc, (c, a)| acc + c * a)
    }

    /// `a_{n-k}` from `a_{n-k+1}, ..., a_n` (in that order).
    fn step_backward(&self, next: &[Rational]) -> Rational {
        let k = self.order();
        let an = &next[k - 1];
        let mut acc = an.clone();
        for i in 1..k {
            acc -= &self.coeffs[i - 1] * &next[k - 1 - i];
        }
        acc / &self.coeffs[k - 1]
    }

    /// True if every term from index `order` on obeys the recurrence.
    pub fn annihilates(&self, values: &[Rational]) -> bool {
        let k = self.order();
        (k..values.len()).all(|n| self.step_forward(&values[..n]) == values[n])
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|c| Value::String(format_rational(c))).collect())
    }
}

/// Finite window `a_lo, ..., a_hi` of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqWindow {
    lo: i64,
    values: Vec<Rational>,
}

impl SeqWindow {
    pub fn new(lo: i64, values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InsufficientData("empty window".into()));
        }
        Ok(SeqWindow { lo, values })
    }

    pub fn from_ints(lo: i64, values: &[i64]) -> Result<Self> {
        SeqWindow::new(lo, values.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.values.len() as i64 - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, n: i64) -> Option<&Rational> {
        usize::try_from(n - self.lo).ok().and_then(|i| self.values.get(i))
    }

    /// The sub-window `lo2..=hi2`.
    pub fn slice(&self, lo2: i64, hi2: i64) -> Result<SeqWindow> {
        if lo2 < self.lo || hi2 > self.hi() || lo2 > hi2 {
            return Err(Error::Precondition(format!(
                "slice {lo2}..{hi2} outside {}..{}",
                self.lo,
                self.hi()
            )));
        }
        let a = (lo2 - self.lo) as usize;
        let b = (hi2 - self.lo) as usize;
        SeqWindow::new(lo2, self.values[a..=b].to_vec())
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "lo": self.lo,
            "hi": self.hi(),
            "values": self.values.iter().map(format_rational).collect::<Vec<_>>(),
        })
    }
}

/// Shortest recurrence consistent with every supplied term
/// (Berlekamp–Massey over the rationals).
///
/// Fails if the prefix is too short to pin the recurrence down (fewer than
/// twice its order), or if the shortest generator only starts after a
/// transient, in which case no reversible recurrence explains the data.
pub fn minimal_recurrence(values: &[Rational]) -> Result<Recurrence> {
    if values.iter().all(Zero::is_zero) {
        return Err(Error::Degenerate("sequence is identically zero".into()));
    }
    // Connection polynomial conn(x) = 1 + C_1 x + ... + C_L x^L.
    let mut conn = vec![Rational::one()];
    let mut prev = vec![Rational::one()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut prev_disc = Rational::one();
    for n in 0..values.len() {
        let disc = (1..=len).fold(values[n].clone(), |acc, i| acc + &conn[i] * &values[n - i]);
        if disc.is_zero() {
            shift += 1;
            continue;
        }
        let factor = &disc / &prev_disc;
        let old = conn.clone();
        if conn.len() < prev.len() + shift {
            conn.resize(prev.len() + shift, Rational::zero());
        }
        for (i, b) in prev.iter().enumerate() {
            conn[i + shift] -= &factor * b;
        }
        if 2 * len <= n {
            len = n + 1 - len;
            prev = old;
            prev_disc = disc;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    if 2 * len > values.len() {
        return Err(Error::InsufficientData(format!(
            "{} terms cannot determine a recurrence of order {len}",
            values.len()
        )));
    }
    conn.resize(len + 1, Rational::zero());
    if conn[len].is_zero() {
        return Err(Error::NotReversible(format!(
            "shortest generator of order {len} has a vanishing trailing coefficient"
        )));
    }
    let rec = Recurrence::new(conn[1..].iter().map(|c| -c).collect())?;
    if !rec.annihilates(values) {
        return Err(Error::Inconsistent("recurrence does not reproduce the supplied terms".into()));
    }
    Ok(rec)
}

/// Any recurrence of exactly order `k` (trailing coefficient possibly zero)
/// that reproduces `values`, found by solving the linear system directly.
pub fn fit_recurrence_of_order(values: &[Rational], k: usize) -> Result<Vec<Rational>> {
    if k == 0 {
        return if values.iter().all(Zero::is_zero) {
            Ok(Vec::new())
        } else {
            Err(Error::Inconsistent("order 0 fits only the zero sequence".into()))
        };
    }
    // Rows: a_{n-1} .. a_{n-k} | a_n for n = k..len.
    let mut rows: Vec<Vec<Rational>> = (k..values.len())
        .map(|n| {
            let mut r: Vec<Rational> = (1..=k).map(|i| values[n - i].clone()).collect();
            r.push(values[n].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (v, p) in rows[i].iter_mut().zip(&pivot) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[k].is_zero()) {
        return Err(Error::Inconsistent(format!("no recurrence of order {k} fits")));
    }
    let mut sol = vec![Rational::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][k].clone();
    }
    Ok(sol)
}

pub fn extend_forward(rec: &Recurrence, w: &SeqWindow, hi2: i64) -> Result<SeqWindow> {
    let k = rec.order();
    if w.values.len() < k {
        return Err(Error::InsufficientData(format!(
            "window of {} terms for a recurrence of order {k}",
            w.values.len()
        )));
    }
    if hi2 < w.hi() {
        return Err(Error::Precondition(format!("target {hi2} is below the window end {}", w.hi())));
    }
    let mut values = w.values.clone();
    for _ in w.hi()..hi2 {
        let next = rec.step_forward(&values);
        values.push(next);
    }
    SeqWindow::new(w.lo, values)
}

/// Solves the recurrence for its smallest-index term.
pub fn extend_backward(rec: &Recurrence, w: &SeqWindow, lo2: i64) -> Result<SeqWindow> {
    let k = rec.order();
    if w.values.len() < k {
        return Err(Error::InsufficientData(format!(
            "window of {} terms for a recurrence of order {k}",
            w.values.len()
        )));
    }
    if lo2 > w.lo {
        return Err(Error::Precondition(format!("target {lo2} is above the window start {}", w.lo)));
    }
    let mut rev: Vec<Rational> = w.values.iter().rev().cloned().collect();
    for _ in lo2..w.lo {
        let window: Vec<Rational> = rev[rev.len() - k..].iter().rev().cloned().collect();
        rev.push(rec.step_backward(&window));
    }
    rev.reverse();
    SeqWindow::new(lo2, rev)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integrality {
    pub integral: bool,
    /// Largest index holding a non-integer.
    pub offending: Option<i64>,
}

pub fn is_integral(w: &SeqWindow) -> Integrality {
    let offending = (w.lo..=w.hi()).rev().find(|&n| !w.get(n).is_some_and(Rational::is_integer));
    Integrality {
        integral: offending.is_none(),
        offending,
    }
}

/// Parses a JSON array of decimal strings (`"p"` or `"p/q"`) or integers.
pub fn parse_sequence(text: &str) -> Result<Vec<Rational>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let Value::Array(items) = v else {
        return Err(Error::Parse("expected a JSON array".into()));
    };
    items
        .iter()
        .map(|item| match item {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or_default().into())),
            other => Err(Error::Parse(format!("not an exact number: {other}"))),
        })
        .collect()
}
