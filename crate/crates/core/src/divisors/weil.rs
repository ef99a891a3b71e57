use num_traits::Zero;

use super::{CartierDivisor, PLFunction};
use crate::cycles::{ridge_stars, Cycle, WeightedComplex};
use crate::error::{Error, Result};
use crate::kernel::{solve_integer, IntMatrix, Integer, Rational};
use crate::polyhedra::{split_all, AffineForm, Cell};

/// A refinement of a cycle on which a function is affine, with the affine
/// form on each cell aligned with `cycle.cells()`.
#[derive(Clone, Debug)]
pub struct Linearization {
  pub cycle: Cycle,
  pub forms: Vec<AffineForm>,
}

fn linearize_cell(f: &PLFunction, cell: &Cell) -> Result<Vec<(Cell, AffineForm)>> {
  match f {
    PLFunction::Polynomial(p) => {
      let terms = p.terms();
      if terms.len() == 1 {
        return Ok(vec![(cell.clone(), terms[0].clone())]);
      }
      let mut out: Vec<(Cell, AffineForm)> = Vec::new();
      for (i, t) in terms.iter().enumerate() {
        let Some(region) = p.region(i) else { continue };
        if let Some(piece) = cell.intersect(&region) {
          if piece.dim() == cell.dim() && !out.iter().any(|(c, _)| c == &piece) {
            out.push((piece, t.clone()));
          }
        }
      }
      Ok(out)
    }
    PLFunction::Piecewise(p) => split_all(cell, p.hyperplanes())
      .into_iter()
      .map(|piece| {
        let form = p.form_at(piece.interior_point()).ok_or(Error::FunctionUndefined)?.clone();
        Ok((piece, form))
      })
      .collect(),
    PLFunction::Sum(parts) => {
      let n = cell.ambient_dim();
      let mut acc = vec![(cell.clone(), AffineForm::zero(n))];
      for (m, g) in parts {
        let mut next = Vec::new();
        for (c, h) in &acc {
          for (piece, form) in linearize_cell(g, c)? {
            next.push((piece, h.add(&form.scale(m))));
          }
        }
        acc = next;
      }
      Ok(acc)
    }
  }
}

/// Refines `c` so that `f` is affine on every cell.
pub fn linearize_on(f: &PLFunction, c: &Cycle) -> Result<Linearization> {
  if f.ambient_dim() != c.ambient_dim() {
    return Err(Error::DimensionMismatch(format!(
      "function on R^{} and cycle in R^{}",
      f.ambient_dim(),
      c.ambient_dim()
    )));
  }
  let mut parts: Vec<(Cell, Integer, AffineForm)> = Vec::new();
  for (cell, w) in c.reduced().cells() {
    for (piece, form) in linearize_cell(f, cell)? {
      parts.push((piece, w.clone(), form));
    }
  }
  parts.sort_by(|a, b| a.0.cmp(&b.0));
  let forms = parts.iter().map(|p| p.2.clone()).collect();
  let cells = parts.into_iter().map(|(c, w, _)| (c, w)).collect();
  let cycle = Cycle::from_balanced(WeightedComplex::new(c.ambient_dim(), c.dim(), cells));
  Ok(Linearization { cycle, forms })
}

/// Weights `ω_φ(τ)` on all codimension one cells of the linearization,
/// including those of weight zero.
pub fn weil_divisor_unreduced(phi: &CartierDivisor, c: &Cycle) -> Result<WeightedComplex> {
  if c.dim() == 0 {
    return Err(Error::DimensionMismatch("divisor of a zero-dimensional cycle".into()));
  }
  let n = c.ambient_dim();
  let lin = linearize_on(&phi.representative, c)?;
  let complex = lin.cycle.complex();
  let mut cells = Vec::new();
  for star in ridge_stars(complex)? {
    let s = star.weighted_sum(n);
    let phi_tau = &lin.forms[star.facets[0].0];
    let mut w = -phi_tau.eval_linear(&s);
    for (i, omega, v) in &star.facets {
      w += omega * lin.forms[*i].eval_linear(v);
    }
    #[cfg(debug_assertions)]
    if let Some(b) = star.ridge.direction_lattice().basis().first() {
      // Shifting a normal vector by an element of the ridge lattice must not
      // change the weight.
      let (i, omega, v) = &star.facets[0];
      let shifted: Vec<Integer> = v.iter().zip(b).map(|(x, y)| x + y).collect();
      let mut s2 = s.clone();
      for (a, y) in s2.iter_mut().zip(b) {
        *a += omega * y;
      }
      let mut w2 = -phi_tau.eval_linear(&s2) + omega * lin.forms[*i].eval_linear(&shifted);
      for (j, om, u) in &star.facets[1..] {
        w2 += om * lin.forms[*j].eval_linear(u);
      }
      debug_assert_eq!(w, w2, "divisor weight depends on the normal vector representative");
    }
    cells.push((star.ridge, w));
  }
  Ok(WeightedComplex::new(n, c.dim() - 1, cells))
}

/// `φ · C`.
pub fn weil_divisor(phi: &CartierDivisor, c: &Cycle) -> Result<Cycle> {
  Ok(Cycle::from_balanced(weil_divisor_unreduced(phi, c)?.nonzero_part()))
}

fn lift(f: &AffineForm, extra: i64) -> AffineForm {
  let mut l = f.linear.clone();
  l.push(Integer::from(extra));
  AffineForm::new(l, f.constant.clone())
}

/// The graph of `φ` over `C` in `R^{n+1}`, made balanced by cells in the
/// direction `-e_{n+1}` over the codimension one cells.
pub fn graph_fan(phi: &CartierDivisor, c: &Cycle) -> Result<Cycle> {
  let n = c.ambient_dim();
  let lin = linearize_on(&phi.representative, c)?;
  let mut cells = Vec::new();
  for ((cell, w), form) in lin.cycle.cells().iter().zip(&lin.forms) {
    let ineqs: Vec<AffineForm> = cell.inequalities().iter().map(|f| lift(f, 0)).collect();
    let mut eqs: Vec<AffineForm> = cell.equalities().iter().map(|f| lift(f, 0)).collect();
    eqs.push(lift(form, -1));
    cells.push((Cell::new(n + 1, &ineqs, &eqs)?, w.clone()));
  }
  if c.dim() > 0 {
    let div = weil_divisor_unreduced(phi, c)?;
    for (tau, w) in div.cells() {
      if w.is_zero() {
        continue;
      }
      let form = lin
        .cycle
        .cells()
        .iter()
        .zip(&lin.forms)
        .find(|((cell, _), _)| cell.has_face(tau))
        .map(|(_, f)| f)
        .ok_or_else(|| Error::Internal("ridge without adjacent cell".into()))?;
      let mut ineqs: Vec<AffineForm> = tau.inequalities().iter().map(|f| lift(f, 0)).collect();
      ineqs.push(lift(form, -1));
      let eqs: Vec<AffineForm> = tau.equalities().iter().map(|f| lift(f, 0)).collect();
      cells.push((Cell::new(n + 1, &ineqs, &eqs)?, w.clone()));
    }
  }
  Ok(Cycle::from_balanced(WeightedComplex::new(n + 1, c.dim(), cells)))
}

/// `φ_1 · (φ_2 · ( ... φ_r · C))`.
pub fn divisor_chain(phis: &[CartierDivisor], c: &Cycle) -> Result<Cycle> {
  if phis.len() > c.dim() {
    return Err(Error::TooManyDivisors { divisors: phis.len(), dim: c.dim() });
  }
  let mut cur = c.reduced();
  for phi in phis.iter().rev() {
    cur = weil_divisor(phi, &cur)?;
  }
  Ok(cur)
}

/// Whether the linear part of `φ` vanishes on the recession cone of every
/// cell of a linearization.
pub fn is_bounded_on(f: &PLFunction, c: &Cycle) -> Result<bool> {
  let lin = linearize_on(f, c)?;
  for ((cell, _), form) in lin.cycle.cells().iter().zip(&lin.forms) {
    let rec = cell.recession_cone();
    let l = AffineForm::new(form.linear.clone(), Rational::zero());
    if rec.maximum(&l) != Some(Rational::zero()) || rec.minimum(&l) != Some(Rational::zero()) {
      return Ok(false);
    }
  }
  Ok(true)
}

/// Whether `a − b` agrees on `|C|` with a single integer-affine function.
pub fn divisors_equal(a: &CartierDivisor, b: &CartierDivisor, c: &Cycle) -> Result<bool> {
  let d = a.representative.minus(&b.representative);
  let lin = linearize_on(&d, c)?;
  let n = c.ambient_dim();
  let cells = lin.cycle.cells();
  if cells.is_empty() {
    return Ok(true);
  }
  // Unknown integer ℓ; the constant is eliminated against the first cell.
  let mut rows: Vec<Vec<Integer>> = Vec::new();
  let mut rhs: Vec<Rational> = Vec::new();
  let p0 = cells[0].0.interior_point();
  let v0 = lin.forms[0].eval(p0);
  for ((cell, _), form) in cells.iter().zip(&lin.forms) {
    for b in cell.direction_lattice().basis() {
      rows.push(b.clone());
      rhs.push(Rational::from_integer(form.eval_linear(b)));
    }
    let p = cell.interior_point();
    let diff: Vec<Rational> = p.iter().zip(p0).map(|(x, y)| x - y).collect();
    let (row, scale) = crate::kernel::clear_denominators(&diff);
    if row.iter().all(|x| x.is_zero()) {
      if form.eval(p) != v0 {
        return Ok(false);
      }
      continue;
    }
    rows.push(row);
    rhs.push((form.eval(p) - &v0) * scale);
  }
  let m = IntMatrix::from_rows(&rows, n);
  Ok(solve_integer(&m, &rhs).is_some())
}

/// Evaluates `f` at `x`.
pub fn evaluate(f: &PLFunction, x: &[Rational]) -> Result<Rational> {
  f.eval(x)
}
