//! Integer linear maps between cycles: push-forward of cycles and pull-back
//! of rational functions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::cycles::{cycles_equal, Cycle, WeightedComplex};
use crate::divisors::{weil_divisor, CartierDivisor};
use crate::error::{Error, Result};
use crate::kernel::{lattice_index, IntMatrix, Integer};
use crate::polyhedra::{hyperplanes_of, AffineForm, Cell};

/// `x ↦ M x` for an integer matrix `M` (target × source).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLinearMap {
  matrix: IntMatrix,
}

impl IntegerLinearMap {
  pub fn new(matrix: IntMatrix) -> Self {
    IntegerLinearMap { matrix }
  }

  pub fn identity(n: usize) -> Self {
    IntegerLinearMap { matrix: IntMatrix::identity(n) }
  }

  /// `(x_1, ..., x_n) ↦ (x_1, ..., x_m)`.
  pub fn projection(n: usize, m: usize) -> Self {
    let mut matrix = IntMatrix::zeros(m, n);
    for i in 0..m {
      matrix[(i, i)] = Integer::from(1);
    }
    IntegerLinearMap { matrix }
  }

  pub fn matrix(&self) -> &IntMatrix {
    &self.matrix
  }

  pub fn source_dim(&self) -> usize {
    self.matrix.cols()
  }

  pub fn target_dim(&self) -> usize {
    self.matrix.rows()
  }

  /// `g ∘ self`.
  pub fn then(&self, g: &IntegerLinearMap) -> Result<IntegerLinearMap> {
    if g.source_dim() != self.target_dim() {
      return Err(Error::DimensionMismatch(format!("R^{} does not map into R^{}", self.target_dim(), g.source_dim())));
    }
    Ok(IntegerLinearMap { matrix: &g.matrix * &self.matrix })
  }

  /// Pull-back of a rational function: `φ ∘ f`.
  pub fn pull_back(&self, phi: &CartierDivisor) -> Result<CartierDivisor> {
    if phi.representative.ambient_dim() != self.target_dim() {
      return Err(Error::DimensionMismatch("function does not live on the target".into()));
    }
    Ok(CartierDivisor::new(phi.representative.pull_back(&self.matrix)?))
  }

  /// `f_* E`, with weights `Σ ω(σ) |Λ'_{σ'} / f(Λ_σ)|` over the cells
  /// mapping onto `σ'`.
  pub fn push_forward(&self, e: &Cycle) -> Result<Cycle> {
    if e.ambient_dim() != self.source_dim() {
      return Err(Error::DimensionMismatch(format!(
        "cycle in R^{} for a map from R^{}",
        e.ambient_dim(),
        self.source_dim()
      )));
    }
    let k = e.dim();
    let m = &self.matrix;
    let e = e.reduced();
    let injective = |c: &Cell| c.image_rank(m) == k;
    let images: Vec<Cell> =
      e.cells().iter().filter(|(c, _)| injective(c)).map(|(c, _)| c.image(m)).collect::<Result<_>>()?;
    let pulled: Vec<AffineForm> = hyperplanes_of(images.iter())
      .iter()
      .map(|h| h.pull_back(m))
      .filter(|h| !h.linear.iter().all(|x| x.is_zero()))
      .collect();
    let refined = e.complex().refine(&pulled);
    let mut acc: BTreeMap<Cell, Integer> = BTreeMap::new();
    for (c, w) in refined.cells() {
      if !injective(c) {
        continue;
      }
      let image = c.image(m)?;
      let index = lattice_index(m, c.direction_lattice(), image.direction_lattice())?;
      *acc.entry(image).or_insert_with(Integer::zero) += w * index;
    }
    let cells: Vec<(Cell, Integer)> = acc.into_iter().filter(|(_, w)| !w.is_zero()).collect();
    let out = WeightedComplex::new(self.target_dim(), k, cells);
    debug_assert!(out.len() > 60 || out.validate().is_empty(), "push-forward cells do not form a complex");
    Ok(Cycle::from_balanced(out))
  }
}

impl fmt::Display for IntegerLinearMap {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}", self.matrix)
  }
}

/// An integer linear map with `f(|source|) ⊆ |target|`.
#[derive(Clone, Debug)]
pub struct Morphism {
  map: IntegerLinearMap,
  source: Cycle,
  target: Cycle,
}

impl Morphism {
  pub fn new(map: IntegerLinearMap, source: Cycle, target: Cycle) -> Result<Morphism> {
    if map.source_dim() != source.ambient_dim() || map.target_dim() != target.ambient_dim() {
      return Err(Error::DimensionMismatch(format!(
        "map R^{} -> R^{} between cycles in R^{} and R^{}",
        map.source_dim(),
        map.target_dim(),
        source.ambient_dim(),
        target.ambient_dim()
      )));
    }
    if !maps_into(&map, &source, &target) {
      return Err(Error::NotAMorphism);
    }
    Ok(Morphism { map, source, target })
  }

  pub fn map(&self) -> &IntegerLinearMap {
    &self.map
  }

  pub fn source(&self) -> &Cycle {
    &self.source
  }

  pub fn target(&self) -> &Cycle {
    &self.target
  }

  /// Push-forward of a cycle supported on the source.
  pub fn push_forward(&self, e: &Cycle) -> Result<Cycle> {
    if !self.source.support_contains(e) {
      return Err(Error::HypothesisViolated("cycle is not supported on the source".into()));
    }
    self.map.push_forward(e)
  }

  pub fn pull_back(&self, phi: &CartierDivisor) -> Result<CartierDivisor> {
    self.map.pull_back(phi)
  }

  /// `g ∘ self`.
  pub fn compose(&self, g: &Morphism) -> Result<Morphism> {
    Morphism::new(self.map.then(&g.map)?, self.source.clone(), g.target.clone())
  }
}

/// Whether `f(|source|) ⊆ |target|`. The source is cut along the pulled back
/// hyperplanes of the target; the image of each piece then lies in a single
/// stratum of the target arrangement, so one point per piece decides.
fn maps_into(f: &IntegerLinearMap, source: &Cycle, target: &Cycle) -> bool {
  let target = target.reduced();
  let pulled: Vec<AffineForm> = target.complex().hyperplanes().iter().map(|h| h.pull_back(f.matrix())).collect();
  let pieces = source.reduced().complex().refine(&pulled);
  pieces
    .cells()
    .iter()
    .all(|(c, _)| target.complex().support_contains_point(&f.matrix().mul_rat_vec(c.interior_point())))
}

pub fn push_forward(f: &Morphism, e: &Cycle) -> Result<Cycle> {
  f.push_forward(e)
}

pub fn pull_back(f: &Morphism, phi: &CartierDivisor) -> Result<CartierDivisor> {
  f.pull_back(phi)
}

/// Both sides of `φ · f_* E = f_*(f^* φ · E)`.
pub fn projection_formula_sides(f: &Morphism, e: &Cycle, phi: &CartierDivisor) -> Result<(Cycle, Cycle)> {
  let lhs = weil_divisor(phi, &f.push_forward(e)?)?;
  let rhs = f.map().push_forward(&weil_divisor(&f.pull_back(phi)?, e)?)?;
  Ok((lhs, rhs))
}

pub fn check_projection_formula(f: &Morphism, e: &Cycle, phi: &CartierDivisor) -> Result<bool> {
  let (lhs, rhs) = projection_formula_sides(f, e, phi)?;
  Ok(cycles_equal(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::cycles::{is_balanced, standard_skeleton};
  use crate::divisors::PLFunction;
  use crate::kernel::{int, int_vec, rat_vec};

  fn three_rays() -> Cycle {
    let rays = [[1, 0], [0, 1], [-1, -1]].iter().map(|r| Cell::cone(2, &[int_vec(r)]).unwrap()).collect();
    Cycle::new(WeightedComplex::unit_weights(2, 1, rays)).unwrap()
  }

  fn halves(w_neg: i64, w_pos: i64) -> Cycle {
    let neg = Cell::cone(1, &[int_vec(&[-1])]).unwrap();
    let pos = Cell::cone(1, &[int_vec(&[1])]).unwrap();
    Cycle::from_balanced(WeightedComplex::new(1, 1, vec![(neg, int(w_neg)), (pos, int(w_pos))]))
  }

  #[test]
  fn three_ray_fan_pushed_to_the_line() {
    let x = three_rays();
    let f1 = IntegerLinearMap::new(IntMatrix::from_i64(&[&[1, 1]]));
    let p1 = f1.push_forward(&x).unwrap();
    assert_eq!(p1.complex().weight_of(&Cell::cone(1, &[int_vec(&[1])]).unwrap()), int(2));
    assert_eq!(p1.complex().weight_of(&Cell::cone(1, &[int_vec(&[-1])]).unwrap()), int(2));
    let f2 = IntegerLinearMap::new(IntMatrix::from_i64(&[&[1, 0]]));
    let p2 = f2.push_forward(&x).unwrap();
    assert!(cycles_equal(&p2, &halves(1, 1)));
    assert!(cycles_equal(&p1, &halves(2, 2)));
  }

  #[test]
  fn identity_and_projection() {
    let l = standard_skeleton(3, 2).unwrap();
    assert!(cycles_equal(&IntegerLinearMap::identity(3).push_forward(&l).unwrap(), &l));
    let diag = Cycle::new(WeightedComplex::unit_weights(
      2,
      1,
      vec![Cell::affine_subspace(&rat_vec(&[0, 0]), &[int_vec(&[1, 1])])],
    ))
    .unwrap();
    let pi = IntegerLinearMap::projection(2, 1);
    assert!(cycles_equal(&pi.push_forward(&diag).unwrap(), &Cycle::whole_space(1)));
  }

  #[test]
  fn push_forward_of_a_plane_is_balanced() {
    let l = standard_skeleton(3, 2).unwrap();
    let f = IntegerLinearMap::new(IntMatrix::from_i64(&[&[1, 2, 0], &[0, 1, 3]]));
    let p = f.push_forward(&l).unwrap();
    assert!(p.complex().validate().is_empty());
    assert!(is_balanced(p.complex()).is_balanced());
  }

  #[test]
  fn morphism_containment() {
    let f1 = IntegerLinearMap::new(IntMatrix::from_i64(&[&[1, 1]]));
    assert!(Morphism::new(f1.clone(), three_rays(), Cycle::whole_space(1)).is_ok());
    let origin = Cycle::point(&rat_vec(&[0]), int(1));
    assert!(matches!(Morphism::new(f1, three_rays(), origin), Err(Error::NotAMorphism)));
  }

  #[test]
  fn projection_formula_examples() {
    let phi: CartierDivisor =
      PLFunction::max_of(vec![AffineForm::from_i64(&[1], 0), AffineForm::from_i64(&[0], 0)]).unwrap().into();
    let f1 = Morphism::new(IntegerLinearMap::new(IntMatrix::from_i64(&[&[1, 1]])), three_rays(), Cycle::whole_space(1))
      .unwrap();
    let (lhs, rhs) = projection_formula_sides(&f1, &three_rays(), &phi).unwrap();
    assert_eq!(lhs.total_weight(), int(2));
    assert!(cycles_equal(&lhs, &rhs));
    let diag = Cycle::new(WeightedComplex::unit_weights(
      2,
      1,
      vec![Cell::affine_subspace(&rat_vec(&[0, 0]), &[int_vec(&[1, 1])])],
    ))
    .unwrap();
    let pi = Morphism::new(IntegerLinearMap::projection(2, 1), diag.clone(), Cycle::whole_space(1)).unwrap();
    let (lhs, rhs) = projection_formula_sides(&pi, &diag, &phi).unwrap();
    assert!(cycles_equal(&lhs, &Cycle::point(&rat_vec(&[0]), int(1))));
    assert!(cycles_equal(&lhs, &rhs));
  }
}
