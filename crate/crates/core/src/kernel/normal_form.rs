use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, IntVector, Integer, Rational};

/// Row Hermite normal form `H = U·M` with `U` unimodular.
///
/// Pivots are positive, strictly move right, entries above a pivot lie in
/// `[0, pivot)`, and zero rows are at the bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
  let mut h = m.clone();
  let mut u = IntMatrix::identity(m.rows());
  let mut r = 0;
  for c in 0..m.cols() {
    if r == m.rows() {
      break;
    }
    for i in r + 1..m.rows() {
      if h[(i, c)].is_zero() {
        continue;
      }
      let a = h[(r, c)].clone();
      let b = h[(i, c)].clone();
      let e = a.extended_gcd(&b);
      let (x, y) = (e.x, e.y);
      let z = -(&b / &e.gcd);
      let w = &a / &e.gcd;
      h.combine_rows(r, i, [&x, &y, &z, &w]);
      u.combine_rows(r, i, [&x, &y, &z, &w]);
    }
    if h[(r, c)].is_zero() {
      continue;
    }
    if h[(r, c)].is_negative() {
      h.negate_row(r);
      u.negate_row(r);
    }
    let p = h[(r, c)].clone();
    for i in 0..r {
      let q = h[(i, c)].div_floor(&p);
      if !q.is_zero() {
        h.add_row_multiple(i, r, &-&q);
        u.add_row_multiple(i, r, &-&q);
      }
    }
    r += 1;
  }
  (h, u)
}

/// Smith normal form `S = U·M·V` with `U`, `V` unimodular, `S` diagonal with
/// nonnegative entries `d_1 | d_2 | …`.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
  let (rows, cols) = (m.rows(), m.cols());
  let mut s = m.clone();
  let mut u = IntMatrix::identity(rows);
  let mut v = IntMatrix::identity(cols);
  for t in 0..rows.min(cols) {
    loop {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      let mut best: Option<(usize, usize)> = None;
      for i in t..rows {
        for j in t..cols {
          if !s[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
            best = Some((i, j));
          }
        }
      }
      let Some((bi, bj)) = best else {
        return (s, u, v);
      };
      s.swap_rows(t, bi);
      u.swap_rows(t, bi);
      s.swap_cols(t, bj);
      v.swap_cols(t, bj);

      let p = s[(t, t)].clone();
      let mut clean = true;
      for i in t + 1..rows {
        let q = s[(i, t)].div_floor(&p);
        if !q.is_zero() {
          s.add_row_multiple(i, t, &-&q);
          u.add_row_multiple(i, t, &-&q);
        }
        clean &= s[(i, t)].is_zero();
      }
      for j in t + 1..cols {
        let q = s[(t, j)].div_floor(&p);
        if !q.is_zero() {
          s.add_col_multiple(j, t, &-&q);
          v.add_col_multiple(j, t, &-&q);
        }
        clean &= s[(t, j)].is_zero();
      }
      if !clean {
        continue;
      }
      // Enforce divisibility: fold an offending row into the pivot row.
      let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&p)));
      match offending {
        Some(i) => {
          s.add_row_multiple(t, i, &Integer::one());
          u.add_row_multiple(t, i, &Integer::one());
        }
        None => break,
      }
    }
    if s[(t, t)].is_negative() {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  (s, u, v)
}

/// An integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[Rational]) -> Option<IntVector> {
  assert_eq!(a.rows(), b.len());
  let (s, u, v) = smith_normal_form(a);
  let ub: Vec<Rational> = u.mul_rat_vec(b);
  let mut y = vec![Integer::zero(); a.cols()];
  for i in 0..a.rows() {
    let d = if i < a.cols() { s[(i, i)].clone() } else { Integer::zero() };
    if d.is_zero() {
      if !ub[i].is_zero() {
        return None;
      }
    } else {
      let q = &ub[i] / Rational::from_integer(d);
      if !q.is_integer() {
        return None;
      }
      y[i] = q.to_integer();
    }
  }
  Some(v.mul_vec(&y))
}
