//! Brute-force oracles shared by the integration tests. None of them call
//! into the library routine they check.
#![allow(dead_code)]

use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use rand::Rng;
use tropical_core::cycles::{is_balanced, Cycle};
use tropical_core::kernel::{IntMatrix, IntVector, Integer, LatticeBasis, Rational};
use tropical_core::polyhedra::AffineForm;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
  if cond {
    Ok(())
  } else {
    Err(msg())
  }
}

pub fn balanced(c: &Cycle, what: &str) -> Result<(), String> {
  ensure(is_balanced(c.complex()).is_balanced(), || format!("{what} is not balanced"))
}

/// A target lattice `L = span_Z(B)` in `Z^n`, a source `Z^r` and the map
/// `x ↦ B K x`, so that the image of the source sits inside `L`.
pub struct IndexInstance {
  pub n: usize,
  pub basis: Vec<IntVector>,
  pub k: Vec<Vec<i64>>,
}

impl IndexInstance {
  pub fn random(rng: &mut impl Rng) -> IndexInstance {
    loop {
      let r = rng.gen_range(1..=2);
      let n = rng.gen_range(r..=4);
      let basis: Vec<IntVector> =
        (0..r).map(|_| (0..n).map(|_| Integer::from(rng.gen_range(-3..=3))).collect()).collect();
      let k: Vec<Vec<i64>> = (0..r).map(|_| (0..r).map(|_| rng.gen_range(-4..=4)).collect()).collect();
      let inst = IndexInstance { n, basis, k };
      if inst.rank_of_basis() == r && det_small(&inst.k) != 0 {
        return inst;
      }
    }
  }

  fn rank_of_basis(&self) -> usize {
    LatticeBasis::from_generators(self.n, &self.basis).rank()
  }

  pub fn rank(&self) -> usize {
    self.k.len()
  }

  /// The columns of `B K`, written as an `n × r` matrix.
  pub fn map(&self) -> IntMatrix {
    let r = self.rank();
    let rows: Vec<Vec<i64>> = (0..self.n)
      .map(|i| (0..r).map(|j| (0..r).map(|l| i64::try_from(&self.basis[l][i]).unwrap() * self.k[l][j]).sum()).collect())
      .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    IntMatrix::from_i64(&refs)
  }

  pub fn target(&self) -> LatticeBasis {
    LatticeBasis::from_generators(self.n, &self.basis)
  }

  /// Lattice points of `L` in the half-open parallelepiped spanned by the
  /// image generators, counted in the coordinates given by `B`.
  pub fn brute_force_index(&self) -> u64 {
    let r = self.rank();
    let cols: Vec<Vec<i64>> = (0..r).map(|j| (0..r).map(|l| self.k[l][j]).collect()).collect();
    let lo: Vec<i64> = (0..r).map(|l| cols.iter().map(|c| c[l].min(0)).sum()).collect();
    let hi: Vec<i64> = (0..r).map(|l| cols.iter().map(|c| c[l].max(0)).sum()).collect();
    let det = det_small(&self.k);
    let mut count = 0;
    let mut y = lo.clone();
    loop {
      // y = K t with t = K^{-1} y = adj(K) y / det; want 0 ≤ t < 1.
      let inside = (0..r).all(|j| {
        let num = adj_row(&self.k, j).iter().zip(&y).map(|(a, b)| a * b).sum::<i64>();
        let (num, den) = if det < 0 { (-num, -det) } else { (num, det) };
        0 <= num && num < den
      });
      if inside {
        count += 1;
      }
      let mut i = 0;
      loop {
        if i == r {
          return count;
        }
        y[i] += 1;
        if y[i] <= hi[i] {
          break;
        }
        y[i] = lo[i];
        i += 1;
      }
    }
  }
}

fn det_small(k: &[Vec<i64>]) -> i64 {
  match k.len() {
    1 => k[0][0],
    2 => k[0][0] * k[1][1] - k[0][1] * k[1][0],
    _ => unreachable!(),
  }
}

/// Row `j` of the adjugate of a 1×1 or 2×2 matrix.
fn adj_row(k: &[Vec<i64>], j: usize) -> Vec<i64> {
  match (k.len(), j) {
    (1, _) => vec![1],
    (2, 0) => vec![k[1][1], -k[0][1]],
    (2, 1) => vec![-k[1][0], k[0][0]],
    _ => unreachable!(),
  }
}

/// Weight of the plane tropical curve `max_i (a_i · x + c_i)` at a point on
/// one of its edges: the lattice length of the segment spanned by the
/// exponents of the terms attaining the maximum there.
pub fn edge_weight_oracle(terms: &[AffineForm], p: &[Rational]) -> Option<Integer> {
  let vals: Vec<Rational> = terms.iter().map(|t| t.eval(p)).collect();
  let top = vals.iter().max()?.clone();
  let active: Vec<&IntVector> = terms.iter().zip(&vals).filter(|(_, v)| **v == top).map(|(t, _)| &t.linear).collect();
  let mut best = Integer::zero();
  for a in &active {
    for b in &active {
      let g = a.iter().zip(b.iter()).fold(Integer::zero(), |g, (x, y)| g.gcd(&(x - y)));
      if g > best {
        best = g;
      }
    }
  }
  (!best.is_zero()).then_some(best.abs())
}
