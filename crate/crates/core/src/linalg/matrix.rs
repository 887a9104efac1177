use std::fmt;

use super::field::{FieldElement, PrimeField};
use crate::complex::Face;
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl FieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix { field, rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Entries are reduced modulo `p`. Rows must all have the same length.
    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| field.elem(v)).collect();
        Ok(FieldMatrix { field, rows: rows.len(), cols, data })
    }

    pub fn from_elements(field: PrimeField, rows: usize, cols: usize, data: Vec<FieldElement>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        FieldMatrix { field, rows, cols, data }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn to_u64_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|x| x.value()).collect()).collect()
    }

    pub fn mul(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = self.field;
        let mut out = FieldMatrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = f.mul_add(out.data[idx], a, rhs.get(k, j));
                }
            }
        }
        Ok(out)
    }

    /// Stacks `blocks` vertically; all must share a column count.
    pub fn vstack(field: PrimeField, cols: usize, blocks: &[FieldMatrix]) -> Result<FieldMatrix> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch("vstack column count".into()));
            }
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Ok(FieldMatrix { field, rows, cols, data })
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce()
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Result<FieldElement> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        Ok(determinant_in_place(self.field, self.rows, self.data.clone()))
    }

    pub fn is_nonsingular(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Determinant of the submatrix on `rows` and `cols` (1-based labels).
    pub fn minor(&self, rows: Face, cols: Face) -> Result<FieldElement> {
        if rows.len() != cols.len() {
            return Err(Error::CardinalityMismatch { left: rows.len(), right: cols.len() });
        }
        let out_of_range = |f: Face, bound: usize| f.max().is_some_and(|m| m as usize > bound);
        if out_of_range(rows, self.rows) || out_of_range(cols, self.cols) {
            return Err(Error::DimensionMismatch("minor index out of range".into()));
        }
        let k = rows.len();
        let mut data = Vec::with_capacity(k * k);
        for r in rows.vertices() {
            for c in cols.vertices() {
                data.push(self.get(r as usize - 1, c as usize - 1));
            }
        }
        Ok(determinant_in_place(self.field, k, data))
    }

    /// Reduces to row echelon form in place and returns the rank.
    fn row_reduce(&mut self) -> usize {
        let f = self.field;
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, rank * self.cols + j);
                }
            }
            let inv = f.inv(self.get(rank, c)).unwrap();
            for r in rank + 1..self.rows {
                let factor = f.mul(self.get(r, c), inv);
                if factor.is_zero() {
                    continue;
                }
                let factor = f.neg(factor);
                for j in c..self.cols {
                    let v = f.mul_add(self.get(r, j), factor, self.get(rank, j));
                    self.set(r, j, v);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

fn determinant_in_place(f: PrimeField, n: usize, mut m: Vec<FieldElement>) -> FieldElement {
    let mut det = FieldElement::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r * n + c].is_zero()) else {
            return FieldElement::ZERO;
        };
        if p != c {
            for j in 0..n {
                m.swap(p * n + j, c * n + j);
            }
            det = f.neg(det);
        }
        let pivot = m[c * n + c];
        det = f.mul(det, pivot);
        let inv = f.inv(pivot).unwrap();
        for r in c + 1..n {
            let factor = f.mul(m[r * n + c], inv);
            if factor.is_zero() {
                continue;
            }
            let factor = f.neg(factor);
            for j in c + 1..n {
                m[r * n + j] = f.mul_add(m[r * n + j], factor, m[c * n + j]);
            }
        }
    }
    det
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} mod {}", self.rows, self.cols, self.field.modulus())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[u32]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn identity_minors() {
        let f = PrimeField::default();
        let id = FieldMatrix::identity(f, 3);
        assert_eq!(id.minor(face(&[1, 3]), face(&[1, 3])).unwrap(), FieldElement::ONE);
        assert_eq!(id.minor(face(&[1, 2]), face(&[1, 3])).unwrap(), FieldElement::ZERO);
        assert_eq!(id.minor(Face::EMPTY, Face::EMPTY).unwrap(), FieldElement::ONE);
        assert!(id.minor(face(&[1]), face(&[1, 2])).is_err());
        assert!(id.minor(face(&[4]), face(&[1])).is_err());
    }

    #[test]
    fn two_by_two_determinant() {
        let f = PrimeField::default();
        let (a, b, c, d) = (7u64, 11, 13, 2);
        let m = FieldMatrix::from_rows(f, &[vec![a, b], vec![c, d]]).unwrap();
        let expected = f.from_i64(a as i64 * d as i64 - b as i64 * c as i64);
        assert_eq!(m.minor(face(&[1, 2]), face(&[1, 2])).unwrap(), expected);
        assert_eq!(m.determinant().unwrap(), expected);
    }

    #[test]
    fn rank_and_product() {
        let f = PrimeField::new(7).unwrap();
        let m = FieldMatrix::from_rows(f, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert!(!m.is_nonsingular());
        let id = FieldMatrix::identity(f, 3);
        assert_eq!(m.mul(&id).unwrap(), m);
        assert!(m.mul(&FieldMatrix::identity(f, 2)).is_err());
        assert_eq!(m.determinant().unwrap(), FieldElement::ZERO);
    }
}
