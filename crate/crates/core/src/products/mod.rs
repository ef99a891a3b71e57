//! The intersection product on `R^n`, degrees and Bézout's theorem.
//!
//! `C · D` is `π_*(ψ_1 ⋯ ψ_n · (C × D))` where `ψ_i = max{0, x_i − y_i}` on
//! `R^n × R^n` cut out the diagonal and `π` forgets the second factor.

use std::fmt;

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::cycles::{cartesian_product, cycles_equal, standard_skeleton, Cycle, WeightedComplex};
use crate::divisors::{divisor_chain, is_bounded_on, weil_divisor, CartierDivisor, PLFunction};
use crate::error::{Error, Result};
use crate::kernel::{IntVector, Integer, LatticeBasis, RatVector, Rational};
use crate::morphisms::IntegerLinearMap;
use crate::polyhedra::{AffineForm, Cell};

/// The functions `ψ_i = max{0, x_i − y_i}` on `R^{2n}`.
#[derive(Clone, Debug)]
pub struct DiagonalDivisors {
  pub n: usize,
  pub divisors: Vec<CartierDivisor>,
}

impl DiagonalDivisors {
  pub fn new(n: usize) -> Self {
    Self::with_orientation(n, false)
  }

  /// `max{0, y_i − x_i}` instead when `flipped`; the two choices differ by
  /// globally linear functions.
  pub fn with_orientation(n: usize, flipped: bool) -> Self {
    let divisors = (0..n)
      .map(|i| {
        let mut l = vec![Integer::zero(); 2 * n];
        let s = if flipped { -1 } else { 1 };
        l[i] = Integer::from(s);
        l[n + i] = Integer::from(-s);
        let terms = vec![AffineForm::zero(2 * n), AffineForm::new(l, Rational::zero())];
        CartierDivisor::new(PLFunction::max_of(terms).expect("two terms"))
      })
      .collect();
    DiagonalDivisors { n, divisors }
  }
}

fn product_via(c: &Cycle, d: &Cycle, psi: &DiagonalDivisors) -> Result<Cycle> {
  let n = c.ambient_dim();
  if d.ambient_dim() != n {
    return Err(Error::DimensionMismatch(format!("cycles in R^{n} and R^{}", d.ambient_dim())));
  }
  if c.dim() + d.dim() < n || c.is_zero() || d.is_zero() {
    return Ok(Cycle::empty(n, (c.dim() + d.dim()).saturating_sub(n)));
  }
  let cd = cartesian_product(c, d);
  let cut = divisor_chain(&psi.divisors, &cd)?;
  IntegerLinearMap::projection(2 * n, n).push_forward(&cut)
}

/// `C · D`. When `dim C + dim D < n` the empty cycle of dimension zero is
/// returned.
pub fn stable_intersect(c: &Cycle, d: &Cycle) -> Result<Cycle> {
  product_via(c, d, &DiagonalDivisors::new(c.ambient_dim()))
}

/// Same product computed with the divisors `max{0, y_i − x_i}`.
pub fn stable_intersect_flipped(c: &Cycle, d: &Cycle) -> Result<Cycle> {
  product_via(c, d, &DiagonalDivisors::with_orientation(c.ambient_dim(), true))
}

/// `{(x, x)} ⊂ R^{2n}` with weight one.
pub fn explicit_diagonal(n: usize) -> Cycle {
  let dirs: Vec<IntVector> = (0..n)
    .map(|i| {
      let mut v = vec![Integer::zero(); 2 * n];
      v[i] = Integer::from(1);
      v[n + i] = Integer::from(1);
      v
    })
    .collect();
  let cell = Cell::affine_subspace(&vec![Rational::zero(); 2 * n], &dirs);
  Cycle::new(WeightedComplex::unit_weights(2 * n, n, vec![cell])).expect("a linear space is balanced")
}

/// `ψ_1 ⋯ ψ_n · [R^{2n}]`, checked against the explicit diagonal.
pub fn diagonal_cycle(n: usize) -> Result<Cycle> {
  let psi = DiagonalDivisors::new(n);
  let delta = divisor_chain(&psi.divisors, &Cycle::whole_space(2 * n))?;
  if !cycles_equal(&delta, &explicit_diagonal(n)) {
    return Err(Error::Internal("diagonal divisors do not cut out the diagonal".into()));
  }
  Ok(delta)
}

/// A zero-dimensional cycle as a list of weighted points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroCycle {
  pub points: Vec<(RatVector, Integer)>,
}

impl ZeroCycle {
  pub fn from_cycle(c: &Cycle) -> Result<ZeroCycle> {
    if c.dim() != 0 && !c.is_zero() {
      return Err(Error::DimensionMismatch(format!("cycle of dimension {}", c.dim())));
    }
    let points = c.reduced().cells().iter().map(|(p, w)| (p.interior_point().to_vec(), w.clone())).collect();
    Ok(ZeroCycle { points })
  }

  pub fn degree(&self) -> Integer {
    self.points.iter().map(|(_, w)| w.clone()).sum()
  }
}

/// `deg(C · L^n_{n−k})`; the sum of weights for points.
pub fn degree(c: &Cycle) -> Result<Integer> {
  if c.is_zero() {
    return Ok(Integer::zero());
  }
  let (n, k) = (c.ambient_dim(), c.dim());
  if k == 0 {
    return Ok(c.total_weight());
  }
  let l = standard_skeleton(n, n - k)?;
  Ok(stable_intersect(c, &l)?.total_weight())
}

/// Every facet is a polytope plus a cone of `L^n_k`, i.e. its recession cone
/// lies in such a cone.
///
/// The test runs on the refinement along `x_i = 0` and `x_i = x_j`, whose
/// chambers subdivide every cone of `L^n_k`. Refining does not change the
/// cycle, and a facet passes if and only if all of its pieces do, because the
/// recession cone of a piece is the recession cone of the facet cut by a
/// chamber.
pub fn is_pn_generic(c: &Cycle) -> bool {
  let (n, k) = (c.ambient_dim(), c.dim());
  if c.is_zero() || k == 0 {
    return true;
  }
  let Ok(l) = standard_skeleton(n, k) else { return false };
  let mut cuts = Vec::new();
  for i in 0..n {
    cuts.push(AffineForm::coordinate(n, i));
    for j in i + 1..n {
      cuts.push(AffineForm::coordinate(n, i).sub(&AffineForm::coordinate(n, j)));
    }
  }
  let refined = c.reduced().refine(&cuts);
  refined.cells().iter().all(|(cell, _)| {
    let rec = cell.recession_cone();
    l.cells().iter().any(|(cone, _)| cone.contains_cell(&rec))
  })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BezoutStatus {
  Pass,
  Fail,
  NotApplicable,
}

impl fmt::Display for BezoutStatus {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str(match self {
      BezoutStatus::Pass => "PASS",
      BezoutStatus::Fail => "FAIL",
      BezoutStatus::NotApplicable => "NOT-APPLICABLE",
    })
  }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutReport {
  pub degree_c: Integer,
  pub degree_d: Integer,
  pub degree_product: Integer,
  pub status: BezoutStatus,
}

/// Compares `deg(C · D)` with `deg C · deg D` for complementary dimensions.
pub fn bezout_check(c: &Cycle, d: &Cycle) -> Result<BezoutReport> {
  let n = c.ambient_dim();
  if c.dim() + d.dim() != n {
    return Err(Error::DimensionMismatch(format!("dimensions {} and {} in R^{n}", c.dim(), d.dim())));
  }
  let degree_c = degree(c)?;
  let degree_d = degree(d)?;
  let degree_product = stable_intersect(c, d)?.total_weight();
  let status = if !is_pn_generic(c) || !is_pn_generic(d) {
    BezoutStatus::NotApplicable
  } else if degree_product == &degree_c * &degree_d {
    BezoutStatus::Pass
  } else {
    BezoutStatus::Fail
  };
  Ok(BezoutReport { degree_c, degree_d, degree_product, status })
}

/// `deg(φ · C) = 0` for a bounded function on a curve.
pub fn degree_zero_check(phi: &PLFunction, c: &Cycle) -> Result<bool> {
  if c.dim() != 1 {
    return Err(Error::HypothesisViolated(format!("expected a curve, got dimension {}", c.dim())));
  }
  if !is_bounded_on(phi, c)? {
    return Err(Error::HypothesisViolated("function is not bounded on the curve".into()));
  }
  Ok(degree(&weil_divisor(&CartierDivisor::new(phi.clone()), c)?)?.is_zero())
}

/// `deg(C · D) = deg(C(v_1) · D(v_2))`.
pub fn translation_invariance_check(c: &Cycle, d: &Cycle, v1: &[Rational], v2: &[Rational]) -> Result<bool> {
  let a = stable_intersect(c, d)?;
  let b = stable_intersect(&c.translate(v1), &d.translate(v2))?;
  Ok(degree(&a)? == degree(&b)?)
}

/// Intersection multiplicities summed over the points where the supports of
/// two cycles of complementary dimension meet, or `None` if some pair of
/// facets does not meet transversally in relative interiors.
pub fn transverse_degree(c: &Cycle, d: &Cycle) -> Option<Integer> {
  let n = c.ambient_dim();
  let mut total = Integer::zero();
  for (s, ws) in c.reduced().cells() {
    for (t, wt) in d.reduced().cells() {
      let Some(x) = s.intersect(t) else { continue };
      let p = x.interior_point();
      if x.dim() != 0 || !s.relative_interior_contains(p) || !t.relative_interior_contains(p) {
        return None;
      }
      let mut gens = s.direction_lattice().basis().to_vec();
      gens.extend(t.direction_lattice().basis().iter().cloned());
      let sum = LatticeBasis::from_generators(n, &gens);
      if sum.rank() != n {
        return None;
      }
      total += ws * wt * sum.as_matrix().determinant().abs();
    }
  }
  Some(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisplacementReport {
  pub shift: RatVector,
  pub attempts: usize,
  pub transverse_degree: Integer,
  pub product_degree: Integer,
}

impl DisplacementReport {
  pub fn agrees(&self) -> bool {
    self.transverse_degree == self.product_degree
  }
}

/// Moves `C` by a random integer vector with coordinates in `±[10, 100]`
/// until it meets `D` transversally (at most five tries), then compares the
/// naive intersection count with the degree of `C · D`.
pub fn random_displacement_check(c: &Cycle, d: &Cycle, rng: &mut impl Rng) -> Result<DisplacementReport> {
  let n = c.ambient_dim();
  if c.dim() + d.dim() != n {
    return Err(Error::DimensionMismatch(format!("dimensions {} and {} in R^{n}", c.dim(), d.dim())));
  }
  let product_degree = degree(&stable_intersect(c, d)?)?;
  for attempts in 1..=5 {
    let shift: RatVector = (0..n)
      .map(|_| {
        let m: i64 = rng.gen_range(10..=100);
        Rational::from_integer(Integer::from(if rng.gen_bool(0.5) { m } else { -m }))
      })
      .collect();
    if let Some(t) = transverse_degree(&c.translate(&shift), d) {
      return Ok(DisplacementReport { shift, attempts, transverse_degree: t, product_degree });
    }
  }
  Err(Error::HypothesisViolated("no transversal displacement found in five attempts".into()))
}
