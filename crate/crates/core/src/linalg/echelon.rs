use super::field::{FieldElement, PrimeField};
use crate::error::{Error, Result};

/// Incrementally built reduced row echelon basis.
///
/// Every stored row has a leading 1 in its pivot column and zeros in the pivot
/// columns of all other rows.
#[derive(Clone, Debug)]
pub struct RowEchelonAccumulator {
    field: PrimeField,
    width: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<FieldElement>>,
}

impl RowEchelonAccumulator {
    pub fn new(field: PrimeField, width: usize) -> Self {
        RowEchelonAccumulator { field, width, pivots: Vec::new(), basis: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Adds `v` if it lies outside the current span. Returns whether it did.
    pub fn insert_row(&mut self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.width {
            return Err(Error::DimensionMismatch(format!(
                "row of width {} into accumulator of width {}",
                v.len(),
                self.width
            )));
        }
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            let c = f.neg(c);
            for (x, &b) in w.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = f.mul_add(*x, c, b);
                }
            }
        }
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = f.inv(w[pc]).unwrap();
        for x in &mut w {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.basis {
            let c = row[pc];
            if c.is_zero() {
                continue;
            }
            let c = f.neg(c);
            for (x, &b) in row.iter_mut().zip(&w) {
                if !b.is_zero() {
                    *x = f.mul_add(*x, c, b);
                }
            }
        }
        self.basis.push(w);
        self.pivots.push(pc);
        Ok(true)
    }

    /// `true` iff `v` is in the span, without modifying the accumulator.
    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        let mut probe = self.clone();
        Ok(!probe.insert_row(v)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(f: PrimeField, width: usize, hot: &[usize]) -> Vec<FieldElement> {
        (0..width).map(|i| if hot.contains(&i) { f.elem(1) } else { FieldElement::ZERO }).collect()
    }

    #[test]
    fn zero_row_is_dependent() {
        let f = PrimeField::default();
        let mut acc = RowEchelonAccumulator::new(f, 3);
        assert!(!acc.insert_row(&e(f, 3, &[])).unwrap());
        assert_eq!(acc.rank(), 0);
    }

    #[test]
    fn span_is_idempotent() {
        let f = PrimeField::default();
        let mut acc = RowEchelonAccumulator::new(f, 3);
        assert!(acc.insert_row(&e(f, 3, &[0])).unwrap());
        assert!(!acc.insert_row(&e(f, 3, &[0])).unwrap());
        assert!(acc.insert_row(&e(f, 3, &[1])).unwrap());
        assert!(!acc.insert_row(&e(f, 3, &[0, 1])).unwrap());
        assert_eq!(acc.rank(), 2);
        assert!(acc.insert_row(&e(f, 3, &[0, 1, 2])).unwrap());
    }

    #[test]
    fn width_mismatch() {
        let f = PrimeField::default();
        let mut acc = RowEchelonAccumulator::new(f, 3);
        assert!(acc.insert_row(&e(f, 2, &[0])).is_err());
    }
}
