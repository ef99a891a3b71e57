//! Exact two-phase simplex over the rationals with Bland's rule.
//!
//! Problems have free variables and constraints `a·y + c ≥ 0`.

use num_traits::{One, Signed, Zero};

use crate::kernel::Rational;

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum LpResult {
  Infeasible,
  Unbounded,
  Optimal { point: Vec<Rational>, value: Rational },
}

/// One constraint `linear·y + constant ≥ 0`.
#[derive(Clone, Debug)]
pub(crate) struct Constraint {
  pub linear: Vec<Rational>,
  pub constant: Rational,
}

/// Maximizes `objective·y` over `{y ∈ Q^d : all constraints hold}`.
pub(crate) fn maximize(d: usize, constraints: &[Constraint], objective: &[Rational]) -> LpResult {
  debug_assert_eq!(objective.len(), d);
  if d == 0 {
    return if constraints.iter().all(|c| !c.constant.is_negative()) {
      LpResult::Optimal { point: Vec::new(), value: Rational::zero() }
    } else {
      LpResult::Infeasible
    };
  }
  // Columns: y⁺ (d), y⁻ (d), one surplus per constraint, then artificials.
  let m = constraints.len();
  let n_struct = 2 * d + m;
  let mut artificial_rows = Vec::new();
  let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
  let mut basis = Vec::with_capacity(m);
  for (i, c) in constraints.iter().enumerate() {
    // a·y − s = −c, written with a nonnegative right hand side.
    let mut row = vec![Rational::zero(); n_struct + 1];
    let flip = !c.constant.is_negative();
    let sign = if flip { -Rational::one() } else { Rational::one() };
    for j in 0..d {
      row[j] = &c.linear[j] * &sign;
      row[d + j] = -&row[j];
    }
    row[2 * d + i] = -&sign;
    row[n_struct] = -&c.constant * &sign;
    if flip {
      basis.push(2 * d + i);
    } else {
      artificial_rows.push(i);
      basis.push(usize::MAX);
    }
    rows.push(row);
  }
  let n_art = artificial_rows.len();
  let width = n_struct + n_art;
  for row in rows.iter_mut() {
    let rhs = row.pop().expect("rhs");
    row.resize(width, Rational::zero());
    row.push(rhs);
  }
  for (k, &i) in artificial_rows.iter().enumerate() {
    rows[i][n_struct + k] = Rational::one();
    basis[i] = n_struct + k;
  }
  let mut tab = Tableau { rows, basis, width };

  if n_art > 0 {
    let mut cost = vec![Rational::zero(); width];
    for c in cost.iter_mut().skip(n_struct) {
      *c = -Rational::one();
    }
    match tab.optimize(&cost, width) {
      Phase::Optimal(v) if v.is_negative() => return LpResult::Infeasible,
      Phase::Optimal(_) => {}
      Phase::Unbounded => unreachable!("phase one is bounded"),
    }
    tab.expel_artificials(n_struct);
    tab.drop_columns(n_struct);
  }

  let mut cost = vec![Rational::zero(); tab.width];
  for j in 0..d {
    cost[j] = objective[j].clone();
    cost[d + j] = -objective[j].clone();
  }
  match tab.optimize(&cost, tab.width) {
    Phase::Unbounded => LpResult::Unbounded,
    Phase::Optimal(value) => {
      let mut values = vec![Rational::zero(); tab.width];
      for (row, &b) in tab.rows.iter().zip(&tab.basis) {
        values[b] = row[tab.width].clone();
      }
      let point = (0..d).map(|j| &values[j] - &values[d + j]).collect();
      LpResult::Optimal { point, value }
    }
  }
}

enum Phase {
  Optimal(Rational),
  Unbounded,
}

struct Tableau {
  rows: Vec<Vec<Rational>>,
  basis: Vec<usize>,
  width: usize,
}

impl Tableau {
  /// Maximizes `cost·x` over columns `< active`, starting from the current
  /// feasible basis.
  fn optimize(&mut self, cost: &[Rational], active: usize) -> Phase {
    let w = self.width;
    // Reduced costs r_j = c_j − c_B·column_j and the negated objective value.
    let mut red: Vec<Rational> = cost.to_vec();
    red.push(Rational::zero());
    for (row, &b) in self.rows.iter().zip(&self.basis) {
      let cb = &cost[b];
      if cb.is_zero() {
        continue;
      }
      for j in 0..=w {
        if !row[j].is_zero() {
          red[j] -= cb * &row[j];
        }
      }
    }
    loop {
      let Some(enter) = (0..active).find(|&j| red[j].is_positive()) else {
        return Phase::Optimal(-red[w].clone());
      };
      let mut leave: Option<(usize, Rational)> = None;
      for (i, row) in self.rows.iter().enumerate() {
        if !row[enter].is_positive() {
          continue;
        }
        let ratio = &row[w] / &row[enter];
        let better = match &leave {
          None => true,
          Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
        };
        if better {
          leave = Some((i, ratio));
        }
      }
      let Some((r, _)) = leave else {
        return Phase::Unbounded;
      };
      self.pivot(r, enter);
      let f = red[enter].clone();
      for j in 0..=w {
        if !self.rows[r][j].is_zero() {
          red[j] -= &f * &self.rows[r][j];
        }
      }
    }
  }

  fn pivot(&mut self, r: usize, c: usize) {
    let w = self.width;
    let inv = self.rows[r][c].recip();
    for x in self.rows[r].iter_mut() {
      if !x.is_zero() {
        *x *= &inv;
      }
    }
    let pivot_row = self.rows[r].clone();
    for (i, row) in self.rows.iter_mut().enumerate() {
      if i == r || row[c].is_zero() {
        continue;
      }
      let f = row[c].clone();
      for j in 0..=w {
        if !pivot_row[j].is_zero() {
          row[j] -= &f * &pivot_row[j];
        }
      }
    }
    self.basis[r] = c;
  }

  /// Pivots basic artificial variables (all at value zero) out of the basis,
  /// deleting rows that turn out to be redundant.
  fn expel_artificials(&mut self, first_artificial: usize) {
    let mut i = 0;
    while i < self.rows.len() {
      if self.basis[i] < first_artificial {
        i += 1;
        continue;
      }
      match (0..first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
        Some(j) => {
          self.pivot(i, j);
          i += 1;
        }
        None => {
          self.rows.remove(i);
          self.basis.remove(i);
        }
      }
    }
  }

  fn drop_columns(&mut self, keep: usize) {
    for row in self.rows.iter_mut() {
      let rhs = row.pop().expect("rhs");
      row.truncate(keep);
      row.push(rhs);
    }
    self.width = keep;
  }
}
