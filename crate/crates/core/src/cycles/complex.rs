use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::kernel::{Integer, Rational};
use crate::polyhedra::{hyperplanes_of, split_all, AffineForm, Cell};

/// Maximal cells of a pure dimensional polyhedral complex with integer
/// weights. Lower dimensional cells are derived on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedComplex {
  ambient_dim: usize,
  dim: usize,
  cells: Vec<(Cell, Integer)>,
}

/// A reason why a cell collection is not a pure dimensional polyhedral complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
  AmbientMismatch { cell: Cell },
  WrongDimension { cell: Cell, expected: usize },
  DuplicateCell { cell: Cell },
  NotFaceToFace { first: Cell, second: Cell, intersection: Cell },
}

impl fmt::Display for Violation {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match self {
      Violation::AmbientMismatch { cell } => write!(f, "cell {cell} lives in R^{}", cell.ambient_dim()),
      Violation::WrongDimension { cell, expected } => {
        write!(f, "cell {cell} has dimension {} instead of {expected}", cell.dim())
      }
      Violation::DuplicateCell { cell } => write!(f, "cell {cell} is listed twice"),
      Violation::NotFaceToFace { first, second, intersection } => {
        write!(f, "{first} and {second} meet in {intersection}, which is not a face of both")
      }
    }
  }
}

impl WeightedComplex {
  pub fn new(ambient_dim: usize, dim: usize, mut cells: Vec<(Cell, Integer)>) -> Self {
    cells.sort_by(|a, b| a.0.cmp(&b.0));
    WeightedComplex { ambient_dim, dim, cells }
  }

  /// All weights equal to one.
  pub fn unit_weights(ambient_dim: usize, dim: usize, cells: Vec<Cell>) -> Self {
    Self::new(ambient_dim, dim, cells.into_iter().map(|c| (c, Integer::from(1))).collect())
  }

  pub fn empty(ambient_dim: usize, dim: usize) -> Self {
    WeightedComplex { ambient_dim, dim, cells: Vec::new() }
  }

  pub fn ambient_dim(&self) -> usize {
    self.ambient_dim
  }

  pub fn dim(&self) -> usize {
    self.dim
  }

  pub fn cells(&self) -> &[(Cell, Integer)] {
    &self.cells
  }

  pub fn len(&self) -> usize {
    self.cells.len()
  }

  /// No cell carries a nonzero weight.
  pub fn is_empty(&self) -> bool {
    self.cells.iter().all(|(_, w)| w.is_zero())
  }

  pub fn weight_of(&self, cell: &Cell) -> Integer {
    match self.cells.binary_search_by(|(c, _)| c.cmp(cell)) {
      Ok(i) => self.cells[i].1.clone(),
      Err(_) => Integer::zero(),
    }
  }

  /// Drops the cells of weight zero.
  pub fn nonzero_part(&self) -> Self {
    let cells = self.cells.iter().filter(|(_, w)| !w.is_zero()).cloned().collect();
    WeightedComplex { ambient_dim: self.ambient_dim, dim: self.dim, cells }
  }

  pub fn map_weights(&self, f: impl Fn(&Integer) -> Integer) -> Self {
    let cells = self.cells.iter().map(|(c, w)| (c.clone(), f(w))).collect();
    WeightedComplex { ambient_dim: self.ambient_dim, dim: self.dim, cells }
  }

  /// Canonical hyperplanes of all defining forms of all cells.
  pub fn hyperplanes(&self) -> Vec<AffineForm> {
    hyperplanes_of(self.cells.iter().map(|(c, _)| c))
  }

  /// Cuts every cell by the given hyperplanes; pieces inherit weights.
  pub fn refine(&self, hyperplanes: &[AffineForm]) -> Self {
    let cells =
      self.cells.iter().flat_map(|(c, w)| split_all(c, hyperplanes).into_iter().map(move |p| (p, w.clone()))).collect();
    Self::new(self.ambient_dim, self.dim, cells)
  }

  /// Codimension one faces of the cells of nonzero weight, each with the
  /// indices of the cells containing it.
  pub fn ridges(&self) -> BTreeMap<Cell, Vec<usize>> {
    let mut out: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
    for (i, (c, w)) in self.cells.iter().enumerate() {
      if w.is_zero() {
        continue;
      }
      for f in c.faces_of_codim_one() {
        out.entry(f.clone()).or_default().push(i);
      }
    }
    out
  }

  /// Whether `p` lies in the support of the nonzero part.
  pub fn support_contains_point(&self, p: &[Rational]) -> bool {
    self.cells.iter().any(|(c, w)| !w.is_zero() && c.contains_point(p))
  }

  /// Pure dimension, matching ambient spaces, no duplicates, and pairwise
  /// intersections that are faces of both cells.
  pub fn validate(&self) -> Vec<Violation> {
    let mut out = Vec::new();
    for (c, _) in &self.cells {
      if c.ambient_dim() != self.ambient_dim {
        out.push(Violation::AmbientMismatch { cell: c.clone() });
      } else if c.dim() != self.dim {
        out.push(Violation::WrongDimension { cell: c.clone(), expected: self.dim });
      }
    }
    if !out.is_empty() {
      return out;
    }
    for w in self.cells.windows(2) {
      if w[0].0 == w[1].0 {
        out.push(Violation::DuplicateCell { cell: w[0].0.clone() });
      }
    }
    for i in 0..self.cells.len() {
      for j in i + 1..self.cells.len() {
        let (a, b) = (&self.cells[i].0, &self.cells[j].0);
        if a == b {
          continue;
        }
        if let Some(x) = a.intersect(b) {
          if !a.has_face(&x) || !b.has_face(&x) {
            out.push(Violation::NotFaceToFace { first: a.clone(), second: b.clone(), intersection: x });
          }
        }
      }
    }
    out
  }

  /// The fan of tangent cones at a relative interior point of `tau` of all
  /// cells containing `tau`, with inherited weights.
  pub fn star_fan(&self, tau: &Cell) -> WeightedComplex {
    let p = tau.interior_point();
    let cells =
      self.cells.iter().filter(|(c, _)| c.contains_point(p)).map(|(c, w)| (c.tangent_cone(p), w.clone())).collect();
    Self::new(self.ambient_dim, self.dim, cells)
  }
}

/// Structured diagnostics for a cell collection; empty when valid.
pub fn validate_complex(c: &WeightedComplex) -> Vec<Violation> {
  c.validate()
}

pub fn nonzero_part(c: &WeightedComplex) -> WeightedComplex {
  c.nonzero_part()
}

pub fn star_fan(c: &WeightedComplex, tau: &Cell) -> WeightedComplex {
  c.star_fan(tau)
}
