//! One PASS/FAIL line per acceptance criterion, written to stdout past the
//! test harness capture. The test fails if any criterion fails.

mod common;

use std::io::Write;

use common::{balanced, ensure, IndexInstance};
use rand::rngs::StdRng;
use rand::SeedableRng;
use tropical_core::cycles::{add, cycles_equal, standard_skeleton, Cycle};
use tropical_core::divisors::{divisor_chain, weil_divisor, weil_divisor_unreduced, CartierDivisor, PLFunction};
use tropical_core::kernel::{frac, int, int_vec, lattice_index, rat_vec, IntMatrix, LatticeBasis};
use tropical_core::library::{self, divisor};
use tropical_core::morphisms::{check_projection_formula, projection_formula_sides, IntegerLinearMap, Morphism};
use tropical_core::polyhedra::{AffineForm, Cell};
use tropical_core::products::{
  bezout_check, degree, degree_zero_check, diagonal_cycle, explicit_diagonal, stable_intersect, BezoutStatus,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn e<E: std::fmt::Display>(what: &str) -> impl FnOnce(E) -> String + '_ {
  move |err| format!("{what}: {err}")
}

fn hyperplane_chains() -> Check {
  for n in 1..=3 {
    let h = divisor(library::hyperplane_function(n));
    for k in 1..=n {
      let phis = vec![h.clone(); k];
      let got = divisor_chain(&phis, &Cycle::whole_space(n)).map_err(e("chain"))?;
      balanced(&got, "h^k·R^n")?;
      let want = standard_skeleton(n, n - k).map_err(e("skeleton"))?;
      ensure(cycles_equal(&got, &want), || format!("h^{k}·R^{n} differs from L^{n}_{}", n - k))?;
      ensure(got.reduced().cells().iter().all(|(_, w)| *w == int(1)), || {
        format!("h^{k}·R^{n} has a weight other than 1")
      })?;
    }
  }
  Ok(())
}

fn rigid_curve() -> Check {
  let phi = divisor(library::rigid_function());
  let s = library::rigid_surface();
  let raw = weil_divisor_unreduced(&phi, &s).map_err(e("φ·S"))?;
  let ray = |v: &[i64]| Cell::cone(3, &[int_vec(v)]).unwrap();
  for (g, w) in [([1, 1, 0], 1), ([-1, -1, 0], 1), ([1, 1, 1], 0), ([-1, 0, 0], 0), ([0, -1, 0], 0), ([0, 0, -1], 0)] {
    ensure(raw.weight_of(&ray(&g)) == int(w), || {
      format!("weight of ray {g:?} is {}, expected {w}", raw.weight_of(&ray(&g)))
    })?;
  }
  let r = weil_divisor(&phi, &s).map_err(e("φ·S"))?;
  balanced(&r, "φ·S")?;
  ensure(cycles_equal(&r, &library::rigid_curve()), || "φ·S is not the line through ±(1,1,0)".into())?;
  let pt = divisor_chain(&[phi.clone(), phi], &s).map_err(e("φ·φ·S"))?;
  ensure(cycles_equal(&pt, &Cycle::point(&rat_vec(&[0, 0, 0]), int(-1))), || format!("φ·φ·S = {pt}"))
}

fn push_forward() -> Check {
  let fan = library::pushforward_fan();
  let half = |d: i64| Cell::cone(1, &[int_vec(&[d])]).unwrap();
  for (f, w) in [(library::map_f1(), 2), (library::map_f2(), 1)] {
    let img = f.push_forward(&fan).map_err(e("push-forward"))?;
    balanced(&img, "push-forward")?;
    let want =
      Cycle::new(tropical_core::cycles::WeightedComplex::new(1, 1, vec![(half(1), int(w)), (half(-1), int(w))]))
        .unwrap();
    ensure(cycles_equal(&img, &want), || format!("image is {img}, expected weights ({w},{w})"))?;
  }
  Ok(())
}

fn library_cycles() -> Vec<(String, Cycle)> {
  let mut all = library::line_cycles();
  all.extend(library::plane_cycles());
  all
}

fn whole_space_is_unit() -> Check {
  let all = library_cycles();
  ensure(all.len() >= 5, || "library too small".into())?;
  for (name, c) in all {
    let r = Cycle::whole_space(c.ambient_dim());
    let p = stable_intersect(&r, &c).map_err(e(&name))?;
    balanced(&p, &name)?;
    ensure(cycles_equal(&p, &c), || format!("R^n·{name} differs from {name}"))?;
  }
  Ok(())
}

fn ring_axioms() -> Check {
  let plane = library::plane_cycles();
  let line = library::line_cycles();
  let get = |set: &[(String, Cycle)], name: &str| set.iter().find(|(n, _)| n == name).unwrap().1.clone();
  let mut pairs = Vec::new();
  for set in [&plane, &line] {
    for (i, (a, c)) in set.iter().enumerate() {
      for (b, d) in &set[i..] {
        pairs.push((format!("{a}, {b}"), c.clone(), d.clone()));
      }
    }
  }
  let mut commuted = 0;
  for (name, c, d) in &pairs {
    let cd = stable_intersect(c, d).map_err(e(name))?;
    let dc = stable_intersect(d, c).map_err(e(name))?;
    balanced(&cd, name)?;
    ensure(cycles_equal(&cd, &dc), || format!("C·D ≠ D·C for {name}"))?;
    commuted += 1;
  }
  ensure(commuted >= 10, || "too few pairs".into())?;

  let sums = [
    (get(&plane, "conic"), get(&plane, "Lnk:2:1"), get(&plane, "quad-curve")),
    (get(&plane, "Lnk:2:1"), get(&plane, "Lnk:2:1+(1/2,-3)"), get(&plane, "conic")),
    (get(&plane, "pushfwd-fan"), get(&plane, "conic"), get(&plane, "Lnk:2:1+(1/2,-3)")),
    (get(&plane, "whole:2"), get(&plane, "whole:2"), get(&plane, "pushfwd-fan")),
    (get(&plane, "point:2"), Cycle::point(&rat_vec(&[0, 0]), int(1)), get(&plane, "whole:2")),
    (get(&plane, "conic"), get(&plane, "quad-curve").negate(), get(&plane, "conic")),
    (get(&line, "point:1"), get(&line, "tent-divisor"), get(&line, "whole:1")),
    (get(&line, "whole:1"), get(&line, "double-line"), get(&line, "tent-divisor")),
    (get(&line, "whole:1"), get(&line, "double-line"), get(&line, "whole:1")),
    (get(&line, "Lnk:1:0"), get(&line, "point:1"), get(&line, "double-line")),
  ];
  for (i, (a, b, c)) in sums.iter().enumerate() {
    let ab = add(a, b).map_err(e("sum"))?;
    let left = stable_intersect(&ab, c).map_err(e("(A+B)·C"))?;
    let right =
      add(&stable_intersect(a, c).map_err(e("A·C"))?, &stable_intersect(b, c).map_err(e("B·C"))?).map_err(e("sum"))?;
    ensure(cycles_equal(&left, &right), || format!("distributivity fails on triple {i}"))?;
  }

  let shift = |c: &Cycle, v: &[i64]| c.translate(&rat_vec(v));
  let l3 = standard_skeleton(3, 2).unwrap();
  let triples = [
    (get(&plane, "conic"), get(&plane, "whole:2"), get(&plane, "Lnk:2:1")),
    (get(&plane, "whole:2"), get(&plane, "quad-curve"), get(&plane, "point:2")),
    (get(&plane, "Lnk:2:1+(1/2,-3)"), get(&plane, "conic"), get(&plane, "whole:2")),
    (get(&line, "tent-divisor"), get(&line, "double-line"), get(&line, "whole:1")),
    (l3.clone(), shift(&l3, &[1, -2, 0]), shift(&l3, &[0, 3, -1])),
  ];
  for (i, (a, b, c)) in triples.iter().enumerate() {
    let left = stable_intersect(&stable_intersect(a, b).map_err(e("A·B"))?, c).map_err(e("(A·B)·C"))?;
    let right = stable_intersect(a, &stable_intersect(b, c).map_err(e("B·C"))?).map_err(e("A·(B·C)"))?;
    balanced(&left, "(A·B)·C")?;
    ensure(cycles_equal(&left, &right), || format!("associativity fails on triple {i}"))?;
  }
  Ok(())
}

fn bezout() -> Check {
  let line = standard_skeleton(2, 1).unwrap();
  let conic = library::conic();
  for (name, a, b, want) in
    [("line·line", &line, &line, 1), ("conic·line", &conic, &line, 2), ("conic·conic", &conic, &conic, 4)]
  {
    let r = bezout_check(a, b).map_err(e(name))?;
    ensure(r.degree_product == int(want) && r.status == BezoutStatus::Pass, || {
      format!("{name}: {} {} {} {}", r.degree_c, r.degree_d, r.degree_product, r.status)
    })?;
  }
  Ok(())
}

fn degree_zero() -> Check {
  let pull = |f: IntegerLinearMap, phi: PLFunction| f.pull_back(&CartierDivisor::new(phi)).map(|d| d.representative);
  let plane_functions = [
    ("clip", library::clip_function(2)),
    ("clip∘(x+y)", pull(library::map_f1(), library::clip_function(1)).map_err(e("pull-back"))?),
    ("tent∘x", pull(library::map_f2(), library::tent_function()).map_err(e("pull-back"))?),
  ];
  let plane_curves =
    [("quad-curve", library::quad_curve()), ("Lnk:2:1", standard_skeleton(2, 1).unwrap()), ("conic", library::conic())];
  let mut count = 0;
  for (fname, f) in &plane_functions {
    for (cname, c) in &plane_curves {
      ensure(degree_zero_check(f, c).map_err(e(&format!("{fname} on {cname}")))?, || {
        format!("deg({fname}·{cname}) ≠ 0")
      })?;
      count += 1;
    }
  }
  for (fname, f) in [("clip", library::clip_function(1)), ("tent", library::tent_function())] {
    ensure(degree_zero_check(&f, &Cycle::whole_space(1)).map_err(e(fname))?, || format!("deg({fname}·R) ≠ 0"))?;
    count += 1;
  }
  ensure(count >= 6, || "too few cases".into())
}

fn projection_formula() -> Check {
  let m = |rows: &[&[i64]]| IntegerLinearMap::new(IntMatrix::from_i64(rows));
  let cases: Vec<(&str, IntegerLinearMap, Cycle, Cycle, PLFunction)> = vec![
    (
      "x+y on fan",
      library::map_f1(),
      library::pushforward_fan(),
      Cycle::whole_space(1),
      library::hyperplane_function(1),
    ),
    ("x on fan", library::map_f2(), library::pushforward_fan(), Cycle::whole_space(1), library::tent_function()),
    (
      "x on conic",
      IntegerLinearMap::projection(2, 1),
      library::conic(),
      Cycle::whole_space(1),
      library::hyperplane_function(1),
    ),
    (
      "identity",
      IntegerLinearMap::identity(2),
      library::conic(),
      Cycle::whole_space(2),
      library::hyperplane_function(2),
    ),
    ("diagonal embedding", m(&[&[1], &[1]]), Cycle::whole_space(1), Cycle::whole_space(2), library::conic_function()),
    (
      "forget x_3",
      IntegerLinearMap::projection(3, 2),
      standard_skeleton(3, 2).unwrap(),
      Cycle::whole_space(2),
      library::hyperplane_function(2),
    ),
    (
      "shear into the line",
      m(&[&[2, 1], &[1, 1]]),
      library::quad_curve(),
      Cycle::whole_space(2),
      library::hyperplane_function(2),
    ),
  ];
  let mut non_injective = false;
  for (name, f, e_cycle, target, phi) in cases {
    non_injective |= f.source_dim() > f.target_dim();
    let f = Morphism::new(f, e_cycle.clone(), target).map_err(e(name))?;
    let phi = CartierDivisor::new(phi);
    let (left, right) = projection_formula_sides(&f, &e_cycle, &phi).map_err(e(name))?;
    balanced(&left, name)?;
    balanced(&right, name)?;
    ensure(check_projection_formula(&f, &e_cycle, &phi).map_err(e(name))?, || format!("{name}: {left} ≠ {right}"))?;
  }
  ensure(non_injective, || "no non-injective map".into())
}

fn properties() -> Check {
  let n2 = Cycle::whole_space(2);
  let affine = PLFunction::affine(AffineForm::from_i64(&[3, -2], 5));
  ensure(weil_divisor(&affine.clone().into(), &n2).map_err(e("affine"))?.is_zero(), || {
    "affine divisor on R^2 is not empty".into()
  })?;
  ensure(weil_divisor(&affine.into(), &library::conic()).map_err(e("affine"))?.is_zero(), || {
    "affine divisor on the conic is not empty".into()
  })?;

  let polys = [
    library::hyperplane_function(2),
    library::conic_function(),
    library::quad_function(),
    library::clip_function(2),
    PLFunction::max_of(vec![AffineForm::from_i64(&[1, -1], 0), AffineForm::from_i64(&[0, 0], 2)]).unwrap(),
  ];
  let mut pairs = 0;
  for (i, f) in polys.iter().enumerate() {
    for g in &polys[i + 1..] {
      let (f, g) = (CartierDivisor::new(f.clone()), CartierDivisor::new(g.clone()));
      let fg = divisor_chain(&[f.clone(), g.clone()], &n2).map_err(e("φψR^2"))?;
      let gf = divisor_chain(&[g, f], &n2).map_err(e("ψφR^2"))?;
      ensure(cycles_equal(&fg, &gf), || format!("φψ ≠ ψφ on pair {pairs}"))?;
      pairs += 1;
    }
  }
  ensure(pairs >= 10, || "too few pairs".into())?;

  let cuts = |forms: &[(&[i64], i64)]| forms.iter().map(|(l, c)| AffineForm::from_i64(l, *c)).collect::<Vec<_>>();
  let refinements: Vec<(PLFunction, Cycle, Vec<AffineForm>)> = vec![
    (library::hyperplane_function(2), n2.clone(), cuts(&[(&[1, 1], -1), (&[1, -2], 3)])),
    (library::conic_function(), n2.clone(), cuts(&[(&[0, 1], 0), (&[1, 0], 2)])),
    (library::hyperplane_function(2), library::conic(), cuts(&[(&[1, 0], 0), (&[0, 1], 1)])),
    (library::rigid_function(), library::rigid_surface(), cuts(&[(&[1, -1, 0], 0), (&[0, 0, 1], 1)])),
    (library::tent_function(), Cycle::whole_space(1), cuts(&[(&[2], -1), (&[1], 5)])),
    (library::hyperplane_function(3), standard_skeleton(3, 2).unwrap(), cuts(&[(&[1, 2, 3], 1)])),
  ];
  for (i, (f, c, hs)) in refinements.into_iter().enumerate() {
    let phi = CartierDivisor::new(f);
    let coarse = weil_divisor(&phi, &c).map_err(e("divisor"))?;
    let fine = weil_divisor(&phi, &c.refine(&hs)).map_err(e("divisor"))?;
    balanced(&fine, "refined divisor")?;
    ensure(cycles_equal(&coarse, &fine), || format!("refinement changes the divisor in case {i}"))?;
  }

  let mut rng = StdRng::seed_from_u64(2024);
  for i in 0..200 {
    let inst = IndexInstance::random(&mut rng);
    let src = LatticeBasis::full(inst.rank());
    let got = lattice_index(&inst.map(), &src, &inst.target()).map_err(e("lattice_index"))?;
    let want = inst.brute_force_index();
    ensure(got == int(want as i64), || format!("instance {i}: lattice_index {got}, brute force {want}"))?;
  }
  Ok(())
}

fn diagonal() -> Check {
  for n in 1..=3 {
    let d = diagonal_cycle(n).map_err(e("diagonal"))?;
    balanced(&d, "diagonal")?;
    ensure(cycles_equal(&d, &explicit_diagonal(n)), || format!("diagonal of R^{n} differs"))?;
    ensure(d.reduced().cells().iter().all(|(_, w)| *w == int(1)), || format!("diagonal of R^{n} has a weight ≠ 1"))?;
  }
  let x = explicit_diagonal(2);
  ensure(degree(&x).map_err(e("degree"))? == int(1), || "diagonal of R^2 has degree ≠ 1".into())?;
  ensure(x.complex().support_contains_point(&[frac(1, 3), frac(-2, 1), frac(1, 3), frac(-2, 1)]), || {
    "diagonal misses (p, p)".into()
  })
}

#[test]
fn acceptance() {
  let criteria: [Criterion; 10] = [
    ("hyperplane self-intersection", hyperplane_chains),
    ("rigid curve", rigid_curve),
    ("push-forward weights", push_forward),
    ("R^n is the unit", whole_space_is_unit),
    ("commutativity, distributivity, associativity", ring_axioms),
    ("Bezout in the plane", bezout),
    ("bounded functions have degree-zero divisors", degree_zero),
    ("projection formula", projection_formula),
    ("property suites", properties),
    ("diagonal", diagonal),
  ];
  let mut failed = Vec::new();
  let mut out = std::io::stdout().lock();
  for (i, (name, check)) in criteria.iter().enumerate() {
    let start = std::time::Instant::now();
    let line = match check() {
      Ok(()) => format!("criterion {:>2} PASS  {name} ({:.2?})", i + 1, start.elapsed()),
      Err(msg) => {
        failed.push(i + 1);
        format!("criterion {:>2} FAIL  {name}: {msg}", i + 1)
      }
    };
    writeln!(out, "{line}").unwrap();
  }
  assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
