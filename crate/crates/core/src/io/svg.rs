use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::cycles::Cycle;
use crate::error::{Error, Result};
use crate::kernel::{dot_mixed, Rational};
use crate::polyhedra::{AffineForm, Cell};

/// Axis-parallel viewing window `[x0, x1] × [y0, y1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundingBox {
  pub x0: Rational,
  pub y0: Rational,
  pub x1: Rational,
  pub y1: Rational,
}

impl Default for BoundingBox {
  fn default() -> Self {
    let r = |v: i64| Rational::from_integer(v.into());
    BoundingBox { x0: r(-5), y0: r(-5), x1: r(5), y1: r(5) }
  }
}

impl BoundingBox {
  fn cell(&self) -> Cell {
    let f = |l: [i64; 2], c: &Rational| AffineForm::new(crate::kernel::int_vec(&l), c.clone());
    let ineqs =
      [f([1, 0], &-self.x0.clone()), f([-1, 0], &self.x1), f([0, 1], &-self.y0.clone()), f([0, -1], &self.y1)];
    Cell::new(2, &ineqs, &[]).expect("nonempty box")
  }
}

const SIZE: f64 = 400.0;

/// The segment `cell ∩ box` as two endpoints, if it has positive length.
fn clip(cell: &Cell, bbox: &Cell) -> Option<[Vec<Rational>; 2]> {
  let piece = cell.intersect(bbox)?;
  if piece.dim() != 1 {
    return None;
  }
  let d = &piece.direction_lattice().basis()[0];
  let p = piece.interior_point();
  let along = AffineForm::new(d.clone(), Rational::from_integer(0.into()));
  let dd = Rational::from_integer(d.iter().map(|x| x * x).sum());
  let at = |t: Rational| -> Vec<Rational> {
    let s = (t - dot_mixed(d, p)) / &dd;
    p.iter().zip(d).map(|(x, y)| x + &s * Rational::from_integer(y.clone())).collect()
  };
  Some([at(piece.minimum(&along)?), at(piece.maximum(&along)?)])
}

/// Draws a curve in the plane. Coordinates in the output are decimal
/// approximations; the cycle itself is not changed.
pub fn render_svg(c: &Cycle, bbox: &BoundingBox) -> Result<String> {
  if c.ambient_dim() != 2 || (c.dim() != 1 && !c.is_zero()) {
    return Err(Error::DimensionMismatch(format!(
      "can only draw curves in R^2, got dimension {} in R^{}",
      c.dim(),
      c.ambient_dim()
    )));
  }
  if bbox.x0 >= bbox.x1 || bbox.y0 >= bbox.y1 {
    return Err(Error::Parse("empty bounding box".into()));
  }
  let f = |q: &Rational| q.to_f64().unwrap_or(0.0);
  let (x0, y0, x1, y1) = (f(&bbox.x0), f(&bbox.y0), f(&bbox.x1), f(&bbox.y1));
  let sx = |x: f64| (x - x0) / (x1 - x0) * SIZE;
  let sy = |y: f64| (y1 - y) / (y1 - y0) * SIZE;
  let mut out = String::new();
  writeln!(
    out,
    r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
  )
  .unwrap();
  writeln!(out, r#"  <rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white" stroke="gray"/>"#).unwrap();
  let boxcell = bbox.cell();
  for (cell, w) in c.reduced().cells() {
    let Some([a, b]) = clip(cell, &boxcell) else { continue };
    let (ax, ay, bx, by) = (sx(f(&a[0])), sy(f(&a[1])), sx(f(&b[0])), sy(f(&b[1])));
    writeln!(out, r#"  <line x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}" stroke="black" stroke-width="2"/>"#)
      .unwrap();
    let (mx, my) = ((ax + bx) / 2.0, (ay + by) / 2.0);
    writeln!(out, r#"  <text x="{mx:.3}" y="{my:.3}" font-size="12" fill="blue">{w}</text>"#).unwrap();
  }
  out.push_str("</svg>\n");
  Ok(out)
}
