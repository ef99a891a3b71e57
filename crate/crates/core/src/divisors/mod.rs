//! Piecewise integer-affine functions, Cartier divisors and their Weil
//! divisors. Tropical polynomials are maxima of affine forms.

mod function;
mod weil;

pub use function::{interpolate_linear, CartierDivisor, PLFunction, PiecewiseFunction, TropicalPolynomial};
pub use weil::{
  divisor_chain, divisors_equal, evaluate, graph_fan, is_bounded_on, linearize_on, weil_divisor,
  weil_divisor_unreduced, Linearization,
};
