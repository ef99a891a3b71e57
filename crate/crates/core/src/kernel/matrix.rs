use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use super::{IntVector, Integer, Rational};
use crate::kernel::linalg;

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
  rows: usize,
  cols: usize,
  data: Vec<Integer>,
}

impl IntMatrix {
  pub fn zeros(rows: usize, cols: usize) -> Self {
    IntMatrix { rows, cols, data: vec![Integer::zero(); rows * cols] }
  }

  pub fn identity(n: usize) -> Self {
    let mut m = Self::zeros(n, n);
    for i in 0..n {
      m[(i, i)] = Integer::one();
    }
    m
  }

  /// Builds a matrix from rows of equal length. `cols` is needed for the
  /// zero-row case.
  pub fn from_rows(rows: &[IntVector], cols: usize) -> Self {
    let mut data = Vec::with_capacity(rows.len() * cols);
    for r in rows {
      assert_eq!(r.len(), cols, "ragged matrix");
      data.extend(r.iter().cloned());
    }
    IntMatrix { rows: rows.len(), cols, data }
  }

  pub fn from_i64(rows: &[&[i64]]) -> Self {
    let cols = rows.first().map_or(0, |r| r.len());
    let rows: Vec<IntVector> = rows.iter().map(|r| super::int_vec(r)).collect();
    Self::from_rows(&rows, cols)
  }

  pub fn rows(&self) -> usize {
    self.rows
  }

  pub fn cols(&self) -> usize {
    self.cols
  }

  pub fn row(&self, i: usize) -> &[Integer] {
    &self.data[i * self.cols..(i + 1) * self.cols]
  }

  pub fn row_vectors(&self) -> Vec<IntVector> {
    (0..self.rows).map(|i| self.row(i).to_vec()).collect()
  }

  pub fn column(&self, j: usize) -> IntVector {
    (0..self.rows).map(|i| self[(i, j)].clone()).collect()
  }

  pub fn transpose(&self) -> Self {
    let mut t = Self::zeros(self.cols, self.rows);
    for i in 0..self.rows {
      for j in 0..self.cols {
        t[(j, i)] = self[(i, j)].clone();
      }
    }
    t
  }

  pub fn mul_vec(&self, v: &[Integer]) -> IntVector {
    assert_eq!(v.len(), self.cols);
    (0..self.rows).map(|i| super::dot_int(self.row(i), v)).collect()
  }

  pub fn mul_rat_vec(&self, v: &[Rational]) -> Vec<Rational> {
    assert_eq!(v.len(), self.cols);
    (0..self.rows).map(|i| super::dot_mixed(self.row(i), v)).collect()
  }

  /// Row vector times matrix.
  pub fn vec_mul(&self, v: &[Integer]) -> IntVector {
    assert_eq!(v.len(), self.rows);
    (0..self.cols).map(|j| (0..self.rows).map(|i| &v[i] * &self[(i, j)]).sum()).collect()
  }

  pub fn rank(&self) -> usize {
    linalg::rank(&self.to_rational_rows())
  }

  pub fn determinant(&self) -> Integer {
    assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
    linalg::determinant(&self.to_rational_rows()).to_integer()
  }

  /// Inverse of a unimodular matrix.
  pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
    let inv = linalg::inverse(&self.to_rational_rows())?;
    let rows: Option<Vec<IntVector>> = inv.iter().map(|r| super::to_integer(r)).collect();
    Some(IntMatrix::from_rows(&rows?, self.cols))
  }

  pub(crate) fn to_rational_rows(&self) -> Vec<Vec<Rational>> {
    (0..self.rows).map(|i| super::to_rational(self.row(i))).collect()
  }

  pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
    if a != b {
      for j in 0..self.cols {
        self.data.swap(a * self.cols + j, b * self.cols + j);
      }
    }
  }

  pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
    if a != b {
      for i in 0..self.rows {
        self.data.swap(i * self.cols + a, i * self.cols + b);
      }
    }
  }

  /// row[target] += factor * row[source]
  pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Integer) {
    if factor.is_zero() {
      return;
    }
    for j in 0..self.cols {
      let delta = &self[(source, j)] * factor;
      self[(target, j)] += delta;
    }
  }

  pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &Integer) {
    if factor.is_zero() {
      return;
    }
    for i in 0..self.rows {
      let delta = &self[(i, source)] * factor;
      self[(i, target)] += delta;
    }
  }

  pub(crate) fn negate_row(&mut self, i: usize) {
    for j in 0..self.cols {
      let v = -&self[(i, j)];
      self[(i, j)] = v;
    }
  }

  /// Replaces rows `a`, `b` by `(x·a + y·b, z·a + w·b)`.
  pub(crate) fn combine_rows(&mut self, a: usize, b: usize, coeffs: [&Integer; 4]) {
    let [x, y, z, w] = coeffs;
    for j in 0..self.cols {
      let ra = self[(a, j)].clone();
      let rb = self[(b, j)].clone();
      self[(a, j)] = x * &ra + y * &rb;
      self[(b, j)] = z * &ra + w * &rb;
    }
  }
}

impl Index<(usize, usize)> for IntMatrix {
  type Output = Integer;
  fn index(&self, (i, j): (usize, usize)) -> &Integer {
    &self.data[i * self.cols + j]
  }
}

impl IndexMut<(usize, usize)> for IntMatrix {
  fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Integer {
    &mut self.data[i * self.cols + j]
  }
}

impl Mul for &IntMatrix {
  type Output = IntMatrix;
  fn mul(self, rhs: &IntMatrix) -> IntMatrix {
    assert_eq!(self.cols, rhs.rows, "incompatible matrix product");
    let mut out = IntMatrix::zeros(self.rows, rhs.cols);
    for i in 0..self.rows {
      for k in 0..self.cols {
        let a = &self[(i, k)];
        if a.is_zero() {
          continue;
        }
        for j in 0..rhs.cols {
          let delta = a * &rhs[(k, j)];
          out[(i, j)] += delta;
        }
      }
    }
    out
  }
}

impl fmt::Display for IntMatrix {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[")?;
    for i in 0..self.rows {
      if i > 0 {
        write!(f, ", ")?;
      }
      let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
      write!(f, "[{}]", row.join(", "))?;
    }
    write!(f, "]")
  }
}
