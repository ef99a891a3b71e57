//! Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::Rational;

/// Reduced row echelon form. Returns the reduced rows (zero rows removed) and
/// their pivot columns.
pub(crate) fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
  let mut m: Vec<Vec<Rational>> = rows.to_vec();
  let cols = m.first().map_or(0, |r| r.len());
  let mut pivots = Vec::new();
  let mut r = 0;
  for c in 0..cols {
    if r == m.len() {
      break;
    }
    let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
      continue;
    };
    m.swap(r, p);
    let inv = m[r][c].recip();
    for x in m[r].iter_mut() {
      *x *= &inv;
    }
    for i in 0..m.len() {
      if i != r && !m[i][c].is_zero() {
        let f = m[i][c].clone();
        for j in c..cols {
          let d = &m[r][j] * &f;
          m[i][j] -= d;
        }
      }
    }
    pivots.push(c);
    r += 1;
  }
  m.truncate(r);
  (m, pivots)
}

pub(crate) fn rank(rows: &[Vec<Rational>]) -> usize {
  rref(rows).1.len()
}

pub(crate) fn determinant(rows: &[Vec<Rational>]) -> Rational {
  let n = rows.len();
  let mut m = rows.to_vec();
  let mut det = Rational::one();
  for c in 0..n {
    let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
      return Rational::zero();
    };
    if p != c {
      m.swap(p, c);
      det = -det;
    }
    det *= &m[c][c];
    for i in c + 1..n {
      if !m[i][c].is_zero() {
        let f = &m[i][c] / &m[c][c];
        for j in c..n {
          let d = &m[c][j] * &f;
          m[i][j] -= d;
        }
      }
    }
  }
  det
}

pub(crate) fn inverse(rows: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
  let n = rows.len();
  let aug: Vec<Vec<Rational>> = rows
    .iter()
    .enumerate()
    .map(|(i, r)| {
      let mut row = r.clone();
      row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
      row
    })
    .collect();
  let (red, pivots) = rref(&aug);
  if pivots.len() < n || pivots[n - 1] >= n {
    return None;
  }
  Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Some solution `x` of `x · A = b` where `A` is given by its rows, i.e. the
/// coordinates of `b` in the row space of `A`.
pub(crate) fn solve_row_combination(rows: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
  let k = rows.len();
  let n = b.len();
  // Columns of the system are the given rows; augment with b.
  let system: Vec<Vec<Rational>> = (0..n)
    .map(|j| {
      let mut r: Vec<Rational> = rows.iter().map(|row| row[j].clone()).collect();
      r.push(b[j].clone());
      r
    })
    .collect();
  let (red, pivots) = rref(&system);
  if pivots.last() == Some(&k) {
    return None;
  }
  let mut x = vec![Rational::zero(); k];
  for (row, &p) in red.iter().zip(&pivots) {
    x[p] = row[k].clone();
  }
  Some(x)
}

/// A basis of `{x : A x = 0}` for `A` given by rows with `cols` columns.
pub(crate) fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
  let (red, pivots) = rref(rows);
  let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
  free
    .iter()
    .map(|&f| {
      let mut v = vec![Rational::zero(); cols];
      v[f] = Rational::one();
      for (row, &p) in red.iter().zip(&pivots) {
        v[p] = -row[f].clone();
      }
      v
    })
    .collect()
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::kernel::{frac, rat, rat_vec};

  #[test]
  fn determinant_and_inverse() {
    let m = vec![rat_vec(&[2, 1]), rat_vec(&[1, 1])];
    assert_eq!(determinant(&m), rat(1));
    let inv = inverse(&m).unwrap();
    assert_eq!(inv, vec![rat_vec(&[1, -1]), rat_vec(&[-1, 2])]);
    assert!(inverse(&[rat_vec(&[1, 2]), rat_vec(&[2, 4])]).is_none());
  }

  #[test]
  fn row_combination() {
    let rows = vec![rat_vec(&[1, 1, 0]), rat_vec(&[0, 1, 1])];
    let x = solve_row_combination(&rows, &rat_vec(&[2, 5, 3])).unwrap();
    assert_eq!(x, rat_vec(&[2, 3]));
    assert!(solve_row_combination(&rows, &rat_vec(&[1, 0, 0])).is_none());
    let y = solve_row_combination(&[rat_vec(&[2, 2])], &[rat(1), rat(1)]).unwrap();
    assert_eq!(y, vec![frac(1, 2)]);
  }

  #[test]
  fn nullspace_dimension() {
    let ns = nullspace(&[rat_vec(&[1, 1, 1])], 3);
    assert_eq!(ns.len(), 2);
    for v in ns {
      assert!(crate::kernel::dot_rat(&v, &rat_vec(&[1, 1, 1])).is_zero());
    }
  }
}
