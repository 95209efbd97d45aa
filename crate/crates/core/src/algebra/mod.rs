//! Exact arithmetic: rationals, sparse polynomials, rational functions,
//! linear solving and real-root isolation.

/// Owned-operand forwarding for binary operators implemented on references.
macro_rules! forward_owned_ops {
    ($t:ty, $($tr:ident $f:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $f(self, rhs: &'a $t) -> $t { (&self).$f(rhs) }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t { self.$f(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned_ops;

mod binomial;
mod gcd;
mod linsolve;
mod multipoly;
mod ratfunc;
mod roots;
mod unipoly;

use num_bigint::BigInt;
use thiserror::Error;

pub use binomial::{binomial, binomial_poly};
pub use gcd::gcd;
pub use linsolve::{residuals, solve_linear_system, solve_linear_system_ordered, PivotOrder};
pub use multipoly::{Monomial, MultiPoly};
pub use ratfunc::{substitute_poly, RatFunc};
pub use roots::{isolate_real_roots, max_integer_where_nonpositive, refine_root, sturm_root_count, sturm_sequence};
pub use unipoly::UniPoly;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("linear system is singular")]
    SingularSystem,
    #[error("matrix and right-hand side shapes disagree")]
    ShapeMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("expression still contains unbound variables")]
    UnboundVariable,
    #[error("polynomial must have a positive leading coefficient")]
    NonPositiveLeading,
    #[error("no integer at or above {from} makes the polynomial non-positive")]
    NoSuchInteger { from: BigInt },
}

/// Shorthand for the rational n/d.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Shorthand for the integer n as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
