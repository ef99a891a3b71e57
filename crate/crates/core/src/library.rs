//! Named example objects. The names accepted by [`lookup`] are stable.

use crate::cycles::{standard_skeleton, Cycle, WeightedComplex};
use crate::divisors::{
  interpolate_linear, weil_divisor, CartierDivisor, PLFunction, PiecewiseFunction, TropicalPolynomial,
};
use crate::error::{Error, Result};
use crate::io::Document;
use crate::kernel::{int, int_vec, IntMatrix, IntVector, Integer, Rational};
use crate::morphisms::IntegerLinearMap;
use crate::polyhedra::{AffineForm, Cell};

fn ray_cycle(n: usize, rays: &[(&[i64], i64)]) -> Cycle {
  let cells = rays.iter().map(|(r, w)| (Cell::cone(n, &[int_vec(r)]).expect("nonzero ray"), int(*w))).collect();
  Cycle::new(WeightedComplex::new(n, 1, cells)).expect("balanced fan")
}

/// `L^n_k`.
pub fn lnk(n: usize, k: usize) -> Result<Cycle> {
  standard_skeleton(n, k)
}

/// `max{x_1, ..., x_n, 0}`.
pub fn hyperplane_function(n: usize) -> PLFunction {
  PLFunction::Polynomial(TropicalPolynomial::linear_hyperplane(n))
}

/// The surface `L^3_2`.
pub fn rigid_surface() -> Cycle {
  standard_skeleton(3, 2).expect("2 <= 3")
}

/// The line through `e_1 + e_2` in `R^3`, weight one.
pub fn rigid_curve() -> Cycle {
  let line = Cell::affine_subspace(&crate::kernel::rat_vec(&[0, 0, 0]), &[int_vec(&[1, 1, 0])]);
  Cycle::new(WeightedComplex::unit_weights(3, 1, vec![line])).expect("a line is balanced")
}

/// Generators `-e_0, ..., -e_3` of `L^3_2` followed by `-e_R` and `-e_{-R}`
/// where `e_R = e_1 + e_2`.
fn rigid_generators() -> Vec<IntVector> {
  [[1, 1, 1], [-1, 0, 0], [0, -1, 0], [0, 0, -1], [-1, -1, 0], [1, 1, 0]].iter().map(|g| int_vec(g)).collect()
}

/// The function on `L^3_2` that is linear on the cones of its refinement by
/// the line through `e_1 + e_2`, with value 1 on `-e_0`, −1 on `-e_R` and 0 on
/// the other generators. Its divisor is [`rigid_curve`].
pub fn rigid_function() -> PLFunction {
  const R: usize = 4;
  const MINUS_R: usize = 5;
  let gens = rigid_generators();
  let values = [1, 0, 0, 0, -1, 0];
  let cones: [[usize; 2]; 8] = [[1, R], [R, 2], [0, MINUS_R], [MINUS_R, 3], [0, 1], [0, 2], [1, 3], [2, 3]];
  let pieces = cones
    .iter()
    .map(|[a, b]| {
      let rays = vec![gens[*a].clone(), gens[*b].clone()];
      let cell = Cell::cone(3, &rays).expect("independent rays");
      let form = interpolate_linear(3, &rays, &[int(values[*a]), int(values[*b])]).expect("unimodular cone");
      (cell, form)
    })
    .collect();
  PLFunction::Piecewise(PiecewiseFunction::new(3, pieces).expect("continuous by construction"))
}

/// The rays `(1,0)`, `(0,1)`, `(-1,-1)` with weight one.
pub fn pushforward_fan() -> Cycle {
  ray_cycle(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[-1, -1], 1)])
}

/// `(x, y) ↦ x + y`.
pub fn map_f1() -> IntegerLinearMap {
  IntegerLinearMap::new(IntMatrix::from_i64(&[&[1, 1]]))
}

/// `(x, y) ↦ x`.
pub fn map_f2() -> IntegerLinearMap {
  IntegerLinearMap::new(IntMatrix::from_i64(&[&[1, 0]]))
}

/// `max{-(i² + ij + j²) + i x + j y : i, j ≥ 0, i + j ≤ 2}`.
pub fn conic_function() -> PLFunction {
  let mut terms = Vec::new();
  for i in 0..=2i64 {
    for j in 0..=(2 - i) {
      terms.push(AffineForm::from_i64(&[i, j], -(i * i + i * j + j * j)));
    }
  }
  PLFunction::max_of(terms).expect("nonempty")
}

/// The plane conic cut out by [`conic_function`].
pub fn conic() -> Cycle {
  weil_divisor(&conic_function().into(), &Cycle::whole_space(2)).expect("divisor on the plane")
}

/// `max{x, y, 2x + y, x + 2y, x + y + 1}`, whose divisor is a curve with a
/// bounded quadrilateral.
pub fn quad_function() -> PLFunction {
  let terms = vec![
    AffineForm::from_i64(&[1, 0], 0),
    AffineForm::from_i64(&[0, 1], 0),
    AffineForm::from_i64(&[2, 1], 0),
    AffineForm::from_i64(&[1, 2], 0),
    AffineForm::from_i64(&[1, 1], 1),
  ];
  PLFunction::max_of(terms).expect("nonempty")
}

/// The square with vertices `(±1, ±1)` and a ray leaving each vertex.
pub fn quad_curve() -> Cycle {
  weil_divisor(&quad_function().into(), &Cycle::whole_space(2)).expect("divisor on the plane")
}

/// `max{-1, x_1} − max{0, x_1 − 1}`: `x_1` clipped to `[-1, 1]`.
pub fn clip_function(n: usize) -> PLFunction {
  let x = AffineForm::coordinate(n, 0);
  let lower = PLFunction::max_of(vec![AffineForm::constant(n, Rational::from_integer((-1).into())), x.clone()]);
  let upper =
    PLFunction::max_of(vec![AffineForm::zero(n), x.sub(&AffineForm::constant(n, Rational::from_integer(1.into())))]);
  lower.expect("nonempty").minus(&upper.expect("nonempty"))
}

/// `max{0, x} − 2 max{0, x − 1} + max{0, x − 2}` on `R^1`.
pub fn tent_function() -> PLFunction {
  let hinge = |c: i64| {
    PLFunction::max_of(vec![AffineForm::from_i64(&[0], 0), AffineForm::from_i64(&[1], -c)]).expect("two terms")
  };
  PLFunction::Sum(vec![(int(1), hinge(0)), (int(-2), hinge(1)), (int(1), hinge(2))])
}

/// `[R^n]`.
pub fn whole_space(n: usize) -> Cycle {
  Cycle::whole_space(n)
}

/// Cycles in `R^1` and `R^2` used by the product tests.
pub fn plane_cycles() -> Vec<(String, Cycle)> {
  let shifted = standard_skeleton(2, 1)
    .expect("L^2_1")
    .translate(&[Rational::new(1.into(), 2.into()), Rational::from_integer((-3).into())]);
  vec![
    ("Lnk:2:1".into(), standard_skeleton(2, 1).expect("L^2_1")),
    ("Lnk:2:1+(1/2,-3)".into(), shifted),
    ("conic".into(), conic()),
    ("quad-curve".into(), quad_curve()),
    ("pushfwd-fan".into(), pushforward_fan()),
    ("whole:2".into(), Cycle::whole_space(2)),
    ("point:2".into(), Cycle::point(&[Rational::from_integer(2.into()), Rational::from_integer((-1).into())], int(3))),
  ]
}

pub fn line_cycles() -> Vec<(String, Cycle)> {
  let half = Rational::new(1.into(), 2.into());
  vec![
    ("whole:1".into(), Cycle::whole_space(1)),
    ("Lnk:1:0".into(), standard_skeleton(1, 0).expect("L^1_0")),
    ("point:1".into(), Cycle::point(&[half], int(-2))),
    (
      "tent-divisor".into(),
      weil_divisor(&tent_function().into(), &Cycle::whole_space(1)).expect("divisor on the line"),
    ),
    ("double-line".into(), Cycle::whole_space(1).scale(&Integer::from(2))),
  ]
}

fn parse_usize(s: &str, name: &str) -> Result<usize> {
  s.parse().map_err(|_| Error::Parse(format!("bad number {s:?} in {name:?}")))
}

/// Resolves a built-in name: `Lnk:<n>:<k>`, `hyperplane:<n>`, `whole:<n>`,
/// `rigid-surface`, `rigid-function`, `rigid-curve`, `pushfwd-fan`,
/// `map-f1`, `map-f2`, `conic`, `conic-function`, `quad-curve`,
/// `quad-function`, `clip-function:<n>`, `tent-function`, `diagonal:<n>`.
pub fn lookup(name: &str) -> Result<Document> {
  let parts: Vec<&str> = name.split(':').collect();
  Ok(match parts.as_slice() {
    ["Lnk", n, k] => Document::Cycle(lnk(parse_usize(n, name)?, parse_usize(k, name)?)?),
    ["hyperplane", n] => Document::Function(hyperplane_function(parse_usize(n, name)?)),
    ["whole", n] => Document::Cycle(whole_space(parse_usize(n, name)?)),
    ["clip-function", n] => Document::Function(clip_function(parse_usize(n, name)?)),
    ["diagonal", n] => Document::Cycle(crate::products::explicit_diagonal(parse_usize(n, name)?)),
    ["rigid-surface"] => Document::Cycle(rigid_surface()),
    ["rigid-function"] => Document::Function(rigid_function()),
    ["rigid-curve"] => Document::Cycle(rigid_curve()),
    ["pushfwd-fan"] => Document::Cycle(pushforward_fan()),
    ["map-f1"] => Document::Map(map_f1()),
    ["map-f2"] => Document::Map(map_f2()),
    ["conic"] => Document::Cycle(conic()),
    ["conic-function"] => Document::Function(conic_function()),
    ["quad-curve"] => Document::Cycle(quad_curve()),
    ["quad-function"] => Document::Function(quad_function()),
    ["tent-function"] => Document::Function(tent_function()),
    _ => return Err(Error::Parse(format!("unknown built-in {name:?}"))),
  })
}

/// Every fixed name accepted by [`lookup`], with sample parameters.
pub const NAMES: &[&str] = &[
  "Lnk:2:1",
  "hyperplane:2",
  "whole:2",
  "clip-function:2",
  "diagonal:1",
  "rigid-surface",
  "rigid-function",
  "rigid-curve",
  "pushfwd-fan",
  "map-f1",
  "map-f2",
  "conic",
  "conic-function",
  "quad-curve",
  "quad-function",
  "tent-function",
];

/// Convenience for tests: the divisor given by a library function.
pub fn divisor(f: PLFunction) -> CartierDivisor {
  CartierDivisor::new(f)
}
