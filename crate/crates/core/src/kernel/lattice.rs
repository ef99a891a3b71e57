use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{hermite_normal_form, linalg, IntMatrix, IntVector, Integer, RatVector, Rational};
use crate::error::{Error, Result};

/// A sublattice of `Z^n` given by a basis in row Hermite normal form, so that
/// equal lattices have equal bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeBasis {
  ambient_dim: usize,
  basis: Vec<IntVector>,
}

impl LatticeBasis {
  /// The lattice generated over `Z` by `generators`.
  pub fn from_generators(ambient_dim: usize, generators: &[IntVector]) -> Self {
    let m = IntMatrix::from_rows(generators, ambient_dim);
    let (h, _) = hermite_normal_form(&m);
    let basis = h.row_vectors().into_iter().filter(|r| !super::is_zero_vector(r)).collect();
    LatticeBasis { ambient_dim, basis }
  }

  pub fn full(ambient_dim: usize) -> Self {
    LatticeBasis { ambient_dim, basis: IntMatrix::identity(ambient_dim).row_vectors() }
  }

  pub fn zero(ambient_dim: usize) -> Self {
    LatticeBasis { ambient_dim, basis: Vec::new() }
  }

  pub fn ambient_dim(&self) -> usize {
    self.ambient_dim
  }

  pub fn rank(&self) -> usize {
    self.basis.len()
  }

  pub fn basis(&self) -> &[IntVector] {
    &self.basis
  }

  pub fn as_matrix(&self) -> IntMatrix {
    IntMatrix::from_rows(&self.basis, self.ambient_dim)
  }

  /// Rational coordinates of `v` in this basis, if `v` lies in the span.
  pub fn coordinates(&self, v: &[Rational]) -> Option<RatVector> {
    let rows: Vec<RatVector> = self.basis.iter().map(|b| super::to_rational(b)).collect();
    linalg::solve_row_combination(&rows, v)
  }

  /// Whether `v` lies in the rational span of the lattice.
  pub fn span_contains(&self, v: &[Rational]) -> bool {
    let mut rows: Vec<RatVector> = self.basis.iter().map(|b| super::to_rational(b)).collect();
    rows.push(v.to_vec());
    linalg::rank(&rows) == self.rank()
  }

  pub fn span_contains_int(&self, v: &[Integer]) -> bool {
    self.span_contains(&super::to_rational(v))
  }

  /// Whether `v` is a lattice point.
  pub fn contains(&self, v: &[Integer]) -> bool {
    match self.coordinates(&super::to_rational(v)) {
      Some(c) => c.iter().all(|x| x.is_integer()),
      None => false,
    }
  }

  /// Whether `other` is a sublattice of `self`.
  pub fn contains_lattice(&self, other: &LatticeBasis) -> bool {
    other.basis.iter().all(|b| self.contains(b))
  }
}

impl fmt::Display for LatticeBasis {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let rows: Vec<String> = self
      .basis
      .iter()
      .map(|r| format!("({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
      .collect();
    write!(f, "<{}>", rows.join(", "))
  }
}

/// `Z`-basis of `{x ∈ Z^n : A x = 0}` for `A` given by integer rows.
pub fn integer_kernel(rows: &[IntVector], n: usize) -> Vec<IntVector> {
  // U·Aᵀ = H; the rows of U matching zero rows of H span the kernel.
  let at = IntMatrix::from_rows(rows, n).transpose();
  let (h, u) = hermite_normal_form(&at);
  (0..n).filter(|&i| super::is_zero_vector(h.row(i))).map(|i| u.row(i).to_vec()).collect()
}

/// Basis of `(rational span of spanning) ∩ Z^n`.
pub fn subspace_lattice(spanning: &[RatVector], ambient_dim: usize) -> LatticeBasis {
  let ints: Vec<IntVector> =
    spanning.iter().map(|v| super::clear_denominators(v).0).filter(|v| !super::is_zero_vector(v)).collect();
  let equations = integer_kernel(&ints, ambient_dim);
  let kernel = integer_kernel(&equations, ambient_dim);
  LatticeBasis::from_generators(ambient_dim, &kernel)
}

/// An element `u` of `sup` such that `sub ∪ {u}` generates `sup`. The sign of
/// `u` is arbitrary.
pub fn quotient_generator(sub: &LatticeBasis, sup: &LatticeBasis) -> Result<IntVector> {
  if sup.rank() != sub.rank() + 1 {
    return Err(Error::RankMismatch(format!(
      "quotient of a rank {} lattice by a rank {} lattice is not of rank one",
      sup.rank(),
      sub.rank()
    )));
  }
  let r = sub.rank();
  // Coordinates of the sub basis with respect to the super basis.
  let mut coords = Vec::with_capacity(r);
  for b in sub.basis() {
    let c = sup.coordinates(&super::to_rational(b)).ok_or(Error::NotInLattice)?;
    coords.push(super::to_integer(&c).ok_or(Error::NotInLattice)?);
  }
  let b = IntMatrix::from_rows(&coords, r + 1);
  // U·Bᵀ = [H; 0]. The quotient is torsion-free iff H is unimodular, and then
  // the last column of U⁻¹ completes B to a unimodular matrix.
  let (h, u) = hermite_normal_form(&b.transpose());
  if (0..r).any(|i| !h[(i, i)].is_one()) {
    return Err(Error::Torsion);
  }
  let uinv = u.unimodular_inverse().ok_or_else(|| Error::Internal("transform is not unimodular".into()))?;
  let c = uinv.column(r);
  let mut out = vec![Integer::zero(); sup.ambient_dim()];
  for (ci, bi) in c.iter().zip(sup.basis()) {
    for (o, x) in out.iter_mut().zip(bi) {
      *o += ci * x;
    }
  }
  Ok(out)
}

/// Index `[target : f(source)]` for a linear map `f` given by its matrix.
pub fn lattice_index(map: &IntMatrix, source: &LatticeBasis, target: &LatticeBasis) -> Result<Integer> {
  if source.rank() != target.rank() {
    return Err(Error::RankMismatch(format!(
      "source rank {} differs from target rank {}",
      source.rank(),
      target.rank()
    )));
  }
  let r = source.rank();
  let mut coords = Vec::with_capacity(r);
  for b in source.basis() {
    let image = super::to_rational(&map.mul_vec(b));
    let c = target.coordinates(&image).ok_or(Error::NotInLattice)?;
    coords.push(c);
  }
  let det = linalg::determinant(&coords);
  if det.is_zero() {
    return Err(Error::NotInjective);
  }
  if !det.is_integer() {
    return Err(Error::NotInLattice);
  }
  Ok(det.to_integer().abs())
}
