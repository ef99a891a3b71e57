mod common;

use common::balanced;
use proptest::prelude::*;
use tropical_core::cycles::{add, cycles_equal, Cycle};
use tropical_core::divisors::{divisor_chain, divisors_equal, weil_divisor, CartierDivisor, PLFunction};
use tropical_core::kernel::{rat_vec, IntMatrix};
use tropical_core::library;
use tropical_core::morphisms::IntegerLinearMap;
use tropical_core::polyhedra::AffineForm;
use tropical_core::products::{degree, stable_intersect};

fn form(n: usize) -> impl Strategy<Value = AffineForm> {
  (proptest::collection::vec(-2i64..=2, n), -3i64..=3).prop_map(|(l, c)| AffineForm::from_i64(&l, c))
}

fn polynomial(n: usize) -> impl Strategy<Value = PLFunction> {
  proptest::collection::vec(form(n), 2..=4).prop_map(|t| PLFunction::max_of(t).unwrap())
}

fn plane_curve() -> impl Strategy<Value = Cycle> {
  polynomial(2).prop_map(|f| weil_divisor(&CartierDivisor::new(f), &Cycle::whole_space(2)).unwrap())
}

fn ok(r: Result<(), String>) -> Result<(), TestCaseError> {
  r.map_err(TestCaseError::fail)
}

proptest! {
  #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

  #[test]
  fn divisors_are_balanced(f in polynomial(2), g in polynomial(2)) {
    let c = weil_divisor(&CartierDivisor::new(f.clone()), &Cycle::whole_space(2)).unwrap();
    ok(balanced(&c, "φ·R^2"))?;
    let d = weil_divisor(&CartierDivisor::new(g), &c).unwrap();
    ok(balanced(&d, "ψ·φ·R^2"))?;
    prop_assert_eq!(d.dim(), 0);
  }

  #[test]
  fn affine_functions_do_not_change_divisors(f in polynomial(2), a in form(2)) {
    let c = library::conic();
    let phi = CartierDivisor::new(f.clone());
    let shifted = CartierDivisor::new(f.plus(&PLFunction::affine(a.clone())));
    prop_assert!(divisors_equal(&phi, &shifted, &c).unwrap());
    prop_assert!(cycles_equal(&weil_divisor(&phi, &c).unwrap(), &weil_divisor(&shifted, &c).unwrap()));
    prop_assert!(weil_divisor(&CartierDivisor::new(PLFunction::affine(a)), &c).unwrap().is_zero());
  }

  #[test]
  fn divisors_commute(f in polynomial(2), g in polynomial(2)) {
    let (f, g) = (CartierDivisor::new(f), CartierDivisor::new(g));
    let r2 = Cycle::whole_space(2);
    let fg = divisor_chain(&[f.clone(), g.clone()], &r2).unwrap();
    let gf = divisor_chain(&[g, f], &r2).unwrap();
    prop_assert!(cycles_equal(&fg, &gf));
  }

  #[test]
  fn divisors_are_additive(f in polynomial(2), g in polynomial(2)) {
    let c = library::quad_curve();
    let sum = weil_divisor(&CartierDivisor::new(f.plus(&g)), &c).unwrap();
    let parts = add(&weil_divisor(&CartierDivisor::new(f), &c).unwrap(), &weil_divisor(&CartierDivisor::new(g), &c).unwrap()).unwrap();
    prop_assert!(cycles_equal(&sum, &parts));
  }

  #[test]
  fn refinement_does_not_change_divisors(f in polynomial(2), cuts in proptest::collection::vec(form(2), 1..=3)) {
    let c = library::conic();
    let phi = CartierDivisor::new(f);
    let fine = weil_divisor(&phi, &c.refine(&cuts)).unwrap();
    prop_assert!(cycles_equal(&weil_divisor(&phi, &c).unwrap(), &fine));
  }

  #[test]
  fn push_forward_is_balanced_and_linear(c in plane_curve(), d in plane_curve(), m in proptest::collection::vec(-2i64..=2, 2)) {
    let f = IntegerLinearMap::new(IntMatrix::from_i64(&[&m]));
    let fc = f.push_forward(&c).unwrap();
    ok(balanced(&fc, "f_*C"))?;
    let sum = f.push_forward(&add(&c, &d).unwrap()).unwrap();
    prop_assert!(cycles_equal(&sum, &add(&fc, &f.push_forward(&d).unwrap()).unwrap()));
  }

  #[test]
  fn intersection_is_symmetric_and_translation_invariant(c in plane_curve(), d in plane_curve(), v in proptest::collection::vec(-5i64..=5, 2)) {
    let cd = stable_intersect(&c, &d).unwrap();
    ok(balanced(&cd, "C·D"))?;
    prop_assert!(cycles_equal(&cd, &stable_intersect(&d, &c).unwrap()));
    let moved = stable_intersect(&c.translate(&rat_vec(&v)), &d).unwrap();
    prop_assert_eq!(degree(&moved).unwrap(), degree(&cd).unwrap());
  }

  #[test]
  fn push_forward_is_functorial(c in plane_curve(), f in proptest::collection::vec(-2i64..=2, 4), g in proptest::collection::vec(-2i64..=2, 2)) {
    let f = IntegerLinearMap::new(IntMatrix::from_i64(&[&f[..2], &f[2..]]));
    let g = IntegerLinearMap::new(IntMatrix::from_i64(&[&g]));
    let stepwise = g.push_forward(&f.push_forward(&c).unwrap()).unwrap();
    prop_assert!(cycles_equal(&f.then(&g).unwrap().push_forward(&c).unwrap(), &stepwise));
  }
}
