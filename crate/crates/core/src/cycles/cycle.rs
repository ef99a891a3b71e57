use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{is_balanced, BalanceReport, WeightedComplex};
use crate::error::{Error, Result};
use crate::kernel::{Integer, Rational};
use crate::polyhedra::{AffineForm, Cell};

/// A balanced weighted complex. Two cycles are equal when they agree after a
/// common refinement with zero cells dropped; see [`cycles_equal`].
#[derive(Clone, Debug)]
pub struct Cycle {
  complex: WeightedComplex,
}

impl Cycle {
  /// Validates the complex and checks the balancing condition.
  pub fn new(complex: WeightedComplex) -> Result<Cycle> {
    if let Some(v) = complex.validate().into_iter().next() {
      return Err(Error::InvalidComplex(v.to_string()));
    }
    match is_balanced(&complex) {
      BalanceReport::Balanced => Ok(Cycle { complex }),
      BalanceReport::Unbalanced { ridge, sum } => {
        let s: Vec<String> = sum.iter().map(|x| x.to_string()).collect();
        Err(Error::Unbalanced(format!("at {ridge} the weighted normal sum is ({})", s.join(", "))))
      }
    }
  }

  /// Wraps a complex known to be valid and balanced by construction.
  pub(crate) fn from_balanced(complex: WeightedComplex) -> Cycle {
    debug_assert!(is_balanced(&complex).is_balanced(), "constructed complex is unbalanced");
    Cycle { complex }
  }

  pub fn empty(ambient_dim: usize, dim: usize) -> Cycle {
    Cycle { complex: WeightedComplex::empty(ambient_dim, dim) }
  }

  /// The fundamental class `[R^n]`.
  pub fn whole_space(n: usize) -> Cycle {
    Cycle { complex: WeightedComplex::unit_weights(n, n, vec![Cell::whole_space(n)]) }
  }

  /// A single point of weight `w`.
  pub fn point(p: &[Rational], w: Integer) -> Cycle {
    Cycle { complex: WeightedComplex::new(p.len(), 0, vec![(Cell::point(p), w)]) }
  }

  pub fn complex(&self) -> &WeightedComplex {
    &self.complex
  }

  pub fn into_complex(self) -> WeightedComplex {
    self.complex
  }

  pub fn ambient_dim(&self) -> usize {
    self.complex.ambient_dim()
  }

  pub fn dim(&self) -> usize {
    self.complex.dim()
  }

  pub fn cells(&self) -> &[(Cell, Integer)] {
    self.complex.cells()
  }

  /// True for the zero cycle.
  pub fn is_zero(&self) -> bool {
    self.complex.is_empty()
  }

  pub fn reduced(&self) -> Cycle {
    Cycle { complex: self.complex.nonzero_part() }
  }

  pub fn negate(&self) -> Cycle {
    Cycle { complex: self.complex.map_weights(|w| -w) }
  }

  pub fn scale(&self, m: &Integer) -> Cycle {
    Cycle { complex: self.complex.map_weights(|w| w * m).nonzero_part() }
  }

  /// Sum of the weights; meaningful for zero-dimensional cycles.
  pub fn total_weight(&self) -> Integer {
    self.cells().iter().map(|(_, w)| w.clone()).sum()
  }

  pub fn translate(&self, v: &[Rational]) -> Cycle {
    let cells = self.cells().iter().map(|(c, w)| (c.translate(v), w.clone())).collect();
    Cycle { complex: WeightedComplex::new(self.ambient_dim(), self.dim(), cells) }
  }

  /// Cuts by the given hyperplanes. The result represents the same cycle.
  pub fn refine(&self, hyperplanes: &[AffineForm]) -> Cycle {
    Cycle { complex: self.complex.refine(hyperplanes) }
  }

  pub fn add(&self, other: &Cycle) -> Result<Cycle> {
    add(self, other)
  }

  pub fn cartesian_product(&self, other: &Cycle) -> Cycle {
    cartesian_product(self, other)
  }

  /// Whether the support of `other` lies inside the support of `self`.
  pub fn support_contains(&self, other: &Cycle) -> bool {
    if other.is_zero() {
      return true;
    }
    let me = self.reduced();
    let pieces = other.reduced().complex.refine(&me.complex.hyperplanes());
    pieces.cells().iter().all(|(c, _)| me.complex.support_contains_point(c.interior_point()))
  }
}

impl PartialEq for Cycle {
  fn eq(&self, other: &Cycle) -> bool {
    cycles_equal(self, other)
  }
}

impl fmt::Display for Cycle {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    writeln!(f, "cycle of dimension {} in R^{}", self.dim(), self.ambient_dim())?;
    for (c, w) in self.cells() {
      writeln!(f, "  [{w}] {c}")?;
    }
    Ok(())
  }
}

/// Both complexes refined by the union of all their defining hyperplanes.
/// Cells of the two results either coincide or meet in a common proper face.
pub fn common_refinement(a: &WeightedComplex, b: &WeightedComplex) -> (WeightedComplex, WeightedComplex) {
  let mut h = a.hyperplanes();
  h.extend(b.hyperplanes());
  h.sort();
  h.dedup();
  (a.refine(&h), b.refine(&h))
}

fn merge(n: usize, k: usize, parts: impl IntoIterator<Item = (Cell, Integer)>) -> WeightedComplex {
  let mut acc: BTreeMap<Cell, Integer> = BTreeMap::new();
  for (c, w) in parts {
    *acc.entry(c).or_insert_with(Integer::zero) += w;
  }
  WeightedComplex::new(n, k, acc.into_iter().filter(|(_, w)| !w.is_zero()).collect())
}

pub fn add(a: &Cycle, b: &Cycle) -> Result<Cycle> {
  if a.ambient_dim() != b.ambient_dim() {
    return Err(Error::DimensionMismatch(format!("R^{} and R^{}", a.ambient_dim(), b.ambient_dim())));
  }
  if a.is_zero() {
    return Ok(b.reduced());
  }
  if b.is_zero() {
    return Ok(a.reduced());
  }
  if a.dim() != b.dim() {
    return Err(Error::DimensionMismatch(format!("cycles of dimension {} and {}", a.dim(), b.dim())));
  }
  let (n, k) = (a.ambient_dim(), a.dim());
  let (ra, rb) = (a.reduced(), b.reduced());
  let same_cells = ra.cells().len() == rb.cells().len() && ra.cells().iter().zip(rb.cells()).all(|(x, y)| x.0 == y.0);
  let complex = if same_cells {
    merge(n, k, ra.cells().iter().chain(rb.cells()).cloned())
  } else {
    let (x, y) = common_refinement(ra.complex(), rb.complex());
    merge(n, k, x.cells().iter().chain(y.cells()).cloned())
  };
  Ok(Cycle { complex })
}

/// Equality as cycles: the difference vanishes after common refinement.
pub fn cycles_equal(a: &Cycle, b: &Cycle) -> bool {
  if a.ambient_dim() != b.ambient_dim() {
    return false;
  }
  let (ra, rb) = (a.reduced(), b.reduced());
  if ra.cells() == rb.cells() {
    return true;
  }
  if ra.is_zero() != rb.is_zero() || ra.dim() != rb.dim() {
    return false;
  }
  match add(&ra, &rb.negate()) {
    Ok(d) => d.is_zero(),
    Err(_) => false,
  }
}

pub fn cartesian_product(a: &Cycle, b: &Cycle) -> Cycle {
  let (n, k) = (a.ambient_dim() + b.ambient_dim(), a.dim() + b.dim());
  let mut cells = Vec::new();
  for (c, w) in a.reduced().cells() {
    for (d, v) in b.reduced().cells() {
      cells.push((c.product(d), w * v));
    }
  }
  Cycle { complex: WeightedComplex::new(n, k, cells) }
}

/// `L^n_k`: the cones spanned by `k` of the vectors `-e_0, ..., -e_n` where
/// `e_0 = -(e_1 + ... + e_n)`, all with weight one.
pub fn standard_skeleton(n: usize, k: usize) -> Result<Cycle> {
  if k > n {
    return Err(Error::DimensionMismatch(format!("L^{n}_{k} needs k <= n")));
  }
  let generator = |i: usize| -> Vec<Integer> {
    if i == 0 {
      vec![Integer::one(); n]
    } else {
      let mut v = vec![Integer::zero(); n];
      v[i - 1] = -Integer::one();
      v
    }
  };
  let mut cells = Vec::new();
  for subset in subsets(n + 1, k) {
    let rays: Vec<Vec<Integer>> = subset.iter().map(|&i| generator(i)).collect();
    cells.push(Cell::cone(n, &rays)?);
  }
  Ok(Cycle { complex: WeightedComplex::unit_weights(n, k, cells) })
}

/// All `k`-element subsets of `0..m` in lexicographic order.
pub(crate) fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
  let mut out = Vec::new();
  let mut cur = Vec::with_capacity(k);
  fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
      out.push(cur.clone());
      return;
    }
    for i in start..m {
      if m - i < k - cur.len() {
        break;
      }
      cur.push(i);
      go(i + 1, m, k, cur, out);
      cur.pop();
    }
  }
  go(0, m, k, &mut cur, &mut out);
  out
}
