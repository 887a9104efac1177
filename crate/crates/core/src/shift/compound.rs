use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{FieldElement, FieldMatrix};

/// How rows of the compound matrix are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CompoundStrategy {
    /// One elimination per `k x k` minor.
    PerEntry,
    /// Laplace expansion along the last row, reusing the minors of every
    /// smaller face of the complex.
    #[default]
    Laplace,
}

/// Coordinates of `f_S` against the `e_T` basis restricted to `columns`:
/// entry `T` is the minor of `A` on rows `S` and columns `T`.
pub fn compound_row(a: &FieldMatrix, s: Face, columns: &[Face]) -> Result<Vec<FieldElement>> {
    columns
        .iter()
        .map(|&t| {
            if t.len() != s.len() {
                return Err(Error::CardinalityMismatch { left: s.len(), right: t.len() });
            }
            a.minor(s, t)
        })
        .collect()
}

/// Precomputed expansion structure of a complex: for each face `T` of size
/// `j`, the positions of `T ∖ t_c` among the faces of size `j - 1` together
/// with the cofactor parity of column `c`.
#[derive(Clone, Debug)]
pub(crate) struct MinorTable {
    children: Vec<Vec<Vec<(usize, u32, bool)>>>,
}

impl MinorTable {
    pub(crate) fn new(k: &SimplicialComplex, max_size: usize) -> Self {
        let mut children = vec![Vec::new()];
        for size in 1..=max_size.min(k.max_face_size()) {
            let level = k
                .faces_of_size(size)
                .iter()
                .map(|&t| {
                    t.vertices()
                        .enumerate()
                        .map(|(c, v)| {
                            let idx = k.index_of(t.without(v)).expect("downward closed");
                            (idx, v, c % 2 == 1)
                        })
                        .collect()
                })
                .collect();
            children.push(level);
        }
        MinorTable { children }
    }

    /// Minors of `A` on rows `S` against every face of size `|S|`.
    pub(crate) fn row(&self, a: &FieldMatrix, s: Face) -> Vec<FieldElement> {
        let f = a.field();
        let mut prev = vec![FieldElement::ONE];
        for (j, r) in s.vertices().enumerate() {
            let size = j + 1;
            let Some(level) = self.children.get(size) else {
                return Vec::new();
            };
            let row = r as usize - 1;
            // sign (-1)^{(size-1)+c}
            let base_odd = j % 2 == 1;
            prev = level
                .iter()
                .map(|kids| {
                    let mut acc = FieldElement::ZERO;
                    for &(idx, v, odd) in kids {
                        let term = f.mul(a.get(row, v as usize - 1), prev[idx]);
                        acc = if odd != base_odd { f.sub(acc, term) } else { f.add(acc, term) };
                    }
                    acc
                })
                .collect();
        }
        prev
    }
}
