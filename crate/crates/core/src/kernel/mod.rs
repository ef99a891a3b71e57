//! Exact arithmetic and integer lattice algebra.
//!
//! Scalars are arbitrary precision rationals, lattice vectors are arbitrary
//! precision integers. The lattice `Λ` of the theory is always `Z^n`.

mod lattice;
pub(crate) mod linalg;
mod matrix;
mod normal_form;

pub use lattice::{integer_kernel, lattice_index, quotient_generator, subspace_lattice, LatticeBasis};
pub use matrix::IntMatrix;
pub use normal_form::{hermite_normal_form, smith_normal_form, solve_integer};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;
pub type IntVector = Vec<Integer>;
pub type RatVector = Vec<Rational>;

/// Integer from a machine integer.
pub fn int(v: i64) -> Integer {
  Integer::from(v)
}

/// Rational from a machine integer.
pub fn rat(v: i64) -> Rational {
  Rational::from_integer(Integer::from(v))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
  Rational::new(Integer::from(p), Integer::from(q))
}

pub fn int_vec(v: &[i64]) -> IntVector {
  v.iter().map(|&x| int(x)).collect()
}

pub fn rat_vec(v: &[i64]) -> RatVector {
  v.iter().map(|&x| rat(x)).collect()
}

pub fn to_rational(v: &[Integer]) -> RatVector {
  v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Returns `Some` if every entry is an integer.
pub fn to_integer(v: &[Rational]) -> Option<IntVector> {
  v.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
}

pub fn gcd_of(v: &[Integer]) -> Integer {
  v.iter().fold(Integer::zero(), |g, x| g.gcd(x))
}

/// `v / gcd(v)`: a positive multiple of `v` with coprime coordinates.
pub fn primitive_part(v: &[Integer]) -> Result<IntVector> {
  let g = gcd_of(v);
  if g.is_zero() {
    return Err(Error::ZeroVector);
  }
  Ok(v.iter().map(|x| x / &g).collect())
}

/// The smallest positive rational multiple of `v` with integer entries, which
/// is then primitive. Returns the vector together with the scale factor used.
pub fn clear_denominators(v: &[Rational]) -> (IntVector, Rational) {
  let lcm = v.iter().fold(Integer::one(), |l, x| l.lcm(x.denom()));
  let scaled: IntVector = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
  let g = gcd_of(&scaled);
  if g.is_zero() {
    return (scaled, Rational::one());
  }
  let out = scaled.iter().map(|x| x / &g).collect();
  (out, Rational::new(lcm, g))
}

pub fn dot_int(a: &[Integer], b: &[Integer]) -> Integer {
  a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_mixed(a: &[Integer], b: &[Rational]) -> Rational {
  a.iter().zip(b).map(|(x, y)| y * x).sum()
}

pub fn dot_rat(a: &[Rational], b: &[Rational]) -> Rational {
  a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vector(v: &[Integer]) -> bool {
  v.iter().all(Zero::is_zero)
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
  if q.is_integer() {
    q.numer().to_string()
  } else {
    format!("{}/{}", q.numer(), q.denom())
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn primitive_part_examples() {
    assert_eq!(primitive_part(&int_vec(&[4, -6, 2])).unwrap(), int_vec(&[2, -3, 1]));
    assert_eq!(primitive_part(&int_vec(&[1, 0])).unwrap(), int_vec(&[1, 0]));
    assert_eq!(primitive_part(&int_vec(&[0, -5, 0])).unwrap(), int_vec(&[0, -1, 0]));
    assert_eq!(primitive_part(&int_vec(&[0, 0])), Err(Error::ZeroVector));
  }

  #[test]
  fn clearing_denominators_is_primitive() {
    let (v, s) = clear_denominators(&[frac(1, 2), frac(-3, 4), rat(0)]);
    assert_eq!(v, int_vec(&[2, -3, 0]));
    assert_eq!(s, rat(4));
  }
}
