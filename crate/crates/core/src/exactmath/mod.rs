//! Exact arithmetic: big integers and rationals, sparse Laurent polynomials,
//! polynomials and rational functions in `t`, and characteristic polynomials.

pub mod matrix;
pub mod number;
pub mod poly;
pub mod ring;
pub mod upoly;

pub use matrix::{char_poly, Matrix};
pub use number::{format_rational, parse_rational, Rational};
pub use poly::{Monomial, MultiPoly, VarKey, VarKind};
pub use ring::Ring;
pub use upoly::{ratfun_equal, RationalFunction, UniPoly};

pub use num_bigint::BigInt;

use std::collections::BTreeMap;

/// The substitution `(y, z) -> (-y, -z)` on the uniform variables.
pub fn negate_y_z() -> BTreeMap<VarKey, MultiPoly> {
    BTreeMap::from([
        (VarKey::Y, -MultiPoly::var(VarKey::Y)),
        (VarKey::Z, -MultiPoly::var(VarKey::Z)),
    ])
}

/// Free-function form of [`MultiPoly::substitute`].
pub fn poly_substitute(p: &MultiPoly, map: &BTreeMap<VarKey, MultiPoly>) -> crate::Result<MultiPoly> {
    p.substitute(map)
}
