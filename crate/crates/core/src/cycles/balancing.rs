use num_traits::{Signed, Zero};

use super::WeightedComplex;
use crate::error::{Error, Result};
use crate::kernel::{quotient_generator, IntVector, Integer};
use crate::polyhedra::Cell;

/// A representative `v_{σ/τ}` of the primitive normal vector of a facet over
/// one of its codimension one faces.
#[derive(Clone, Debug)]
pub struct NormalVector<'a> {
  pub facet: &'a Cell,
  pub ridge: &'a Cell,
  pub representative: IntVector,
}

/// The normal vector of `facet` over `ridge`, pointing into the facet.
pub fn normal_vector<'a>(facet: &'a Cell, ridge: &'a Cell) -> Result<NormalVector<'a>> {
  if facet.faces_of_codim_one().binary_search(ridge).is_err() {
    return Err(Error::NotAFace);
  }
  let mut u = quotient_generator(ridge.direction_lattice(), facet.direction_lattice())?;
  let f = facet.supporting_inequality(ridge).ok_or(Error::NotAFace)?;
  let s = f.eval_linear(&u);
  debug_assert!(!s.is_zero());
  if s.is_negative() {
    u.iter_mut().for_each(|x| *x = -&*x);
  }
  Ok(NormalVector { facet, ridge, representative: u })
}

/// A ridge together with the weighted normal vectors of its adjacent facets
/// (`(cell index, ω(σ), v_{σ/τ})`).
pub(crate) struct RidgeStar {
  pub ridge: Cell,
  pub facets: Vec<(usize, Integer, IntVector)>,
}

impl RidgeStar {
  pub fn weighted_sum(&self, n: usize) -> IntVector {
    let mut s = vec![Integer::zero(); n];
    for (_, w, v) in &self.facets {
      for (a, b) in s.iter_mut().zip(v) {
        *a += w * b;
      }
    }
    s
  }
}

pub(crate) fn ridge_stars(c: &WeightedComplex) -> Result<Vec<RidgeStar>> {
  let mut out = Vec::new();
  for (ridge, adj) in c.ridges() {
    let mut facets = Vec::with_capacity(adj.len());
    for i in adj {
      let (cell, w) = &c.cells()[i];
      let v = normal_vector(cell, &ridge)?.representative;
      facets.push((i, w.clone(), v));
    }
    out.push(RidgeStar { ridge, facets });
  }
  Ok(out)
}

/// Outcome of a balancing check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceReport {
  Balanced,
  /// First ridge where `Σ ω(σ) v_{σ/τ} ∉ V_τ`, with that sum.
  Unbalanced {
    ridge: Cell,
    sum: IntVector,
  },
}

impl BalanceReport {
  pub fn is_balanced(&self) -> bool {
    matches!(self, BalanceReport::Balanced)
  }
}

pub fn is_balanced(c: &WeightedComplex) -> BalanceReport {
  let n = c.ambient_dim();
  let stars = match ridge_stars(c) {
    Ok(s) => s,
    Err(e) => panic!("ridge structure of a complex: {e}"),
  };
  for star in stars {
    let s = star.weighted_sum(n);
    if !star.ridge.direction_lattice().span_contains_int(&s) {
      return BalanceReport::Unbalanced { ridge: star.ridge, sum: s };
    }
  }
  BalanceReport::Balanced
}
