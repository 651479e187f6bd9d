use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::number::Rational;
use super::poly::MultiPoly;

/// Commutative ring with identity, as needed by the matrix routines.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

macro_rules! num_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn zero() -> Self {
                <$t as Zero>::zero()
            }
            fn one() -> Self {
                <$t as One>::one()
            }
            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
            fn neg(&self) -> Self {
                -self
            }
        }
    };
}

num_ring!(BigInt);
num_ring!(Rational);

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}
