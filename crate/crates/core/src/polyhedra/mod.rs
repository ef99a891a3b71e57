//! Rational polyhedra in H-representation.

mod affine;
mod cell;
pub(crate) mod lp;

pub use affine::{AffineForm, HalfspaceArrangement};
pub use cell::Cell;

/// Splits every cell by every hyperplane of the arrangement. Pieces of lower
/// dimension than their parent are dropped; the output is sorted and free of
/// duplicates.
pub fn refine_by_arrangement(cells: &[Cell], arr: &HalfspaceArrangement) -> Vec<Cell> {
  let hyperplanes = arr.hyperplanes();
  let mut out: Vec<Cell> = cells.iter().flat_map(|c| split_all(c, &hyperplanes)).collect();
  out.sort();
  out.dedup();
  out
}

/// Splits one cell by all given hyperplanes.
pub fn split_all(cell: &Cell, hyperplanes: &[AffineForm]) -> Vec<Cell> {
  let mut pieces = vec![cell.clone()];
  for h in hyperplanes {
    pieces = pieces.iter().flat_map(|p| p.split(h)).collect();
  }
  pieces
}

/// The canonical hyperplanes of all defining forms of the given cells.
pub fn hyperplanes_of<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> Vec<AffineForm> {
  let forms = cells.into_iter().flat_map(|c| c.defining_forms().cloned()).collect();
  HalfspaceArrangement::new(forms).hyperplanes()
}
