use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use super::matrix::FieldMatrix;
use crate::complex::MAX_VERTICES;
use crate::error::{Error, Result};

/// How the transition matrix of a shift is produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MatrixSpec {
    /// Independent uniform residues from a seeded generator.
    Generic { seed: u64 },
    /// Block diagonal: a random `upper x upper` block followed by a random
    /// `lower x lower` block, zeros elsewhere.
    BlockGeneric { upper: usize, lower: usize, seed: u64 },
    /// A given square matrix (entries are reduced modulo the prime).
    Explicit { entries: Vec<Vec<u64>> },
}

impl MatrixSpec {
    pub fn seed(&self) -> Option<u64> {
        match self {
            MatrixSpec::Generic { seed } | MatrixSpec::BlockGeneric { seed, .. } => Some(*seed),
            MatrixSpec::Explicit { .. } => None,
        }
    }

    /// The same spec with a different seed (explicit specs are returned unchanged).
    pub fn reseeded(&self, seed: u64) -> MatrixSpec {
        match self {
            MatrixSpec::Generic { .. } => MatrixSpec::Generic { seed },
            MatrixSpec::BlockGeneric { upper, lower, .. } => {
                MatrixSpec::BlockGeneric { upper: *upper, lower: *lower, seed }
            }
            MatrixSpec::Explicit { .. } => self.clone(),
        }
    }
}

/// Builds the `n x n` matrix described by `spec`, guaranteed nonsingular.
///
/// Random variants redraw from the same stream until the draw is nonsingular,
/// so a given `(spec, n, p)` always yields the same matrix.
pub fn realize(spec: &MatrixSpec, n: usize, field: PrimeField) -> Result<FieldMatrix> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    match spec {
        MatrixSpec::Generic { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            loop {
                let data = (0..n * n).map(|_| field.elem(rng.gen_range(0..field.modulus()))).collect();
                let m = FieldMatrix::from_elements(field, n, n, data);
                if m.is_nonsingular() {
                    return Ok(m);
                }
            }
        }
        MatrixSpec::BlockGeneric { upper, lower, seed } => {
            if upper + lower != n {
                return Err(Error::DimensionMismatch(format!(
                    "block sizes {upper}+{lower} do not sum to {n}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            loop {
                let mut m = FieldMatrix::zeros(field, n, n);
                for (lo, size) in [(0, *upper), (*upper, *lower)] {
                    for r in lo..lo + size {
                        for c in lo..lo + size {
                            m.set(r, c, field.elem(rng.gen_range(0..field.modulus())));
                        }
                    }
                }
                if m.is_nonsingular() {
                    return Ok(m);
                }
            }
        }
        MatrixSpec::Explicit { entries } => {
            if entries.len() != n || entries.iter().any(|r| r.len() != n) {
                return Err(Error::DimensionMismatch(format!("explicit matrix must be {n}x{n}")));
            }
            let m = FieldMatrix::from_rows(field, entries)?;
            if !m.is_nonsingular() {
                return Err(Error::SingularMatrix);
            }
            Ok(m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Face;
    use crate::linalg::FieldElement;

    #[test]
    fn explicit_identity() {
        let f = PrimeField::default();
        let spec = MatrixSpec::Explicit { entries: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]] };
        assert_eq!(realize(&spec, 3, f).unwrap(), FieldMatrix::identity(f, 3));
    }

    #[test]
    fn explicit_errors() {
        let f = PrimeField::default();
        let singular = MatrixSpec::Explicit { entries: vec![vec![1, 2], vec![2, 4]] };
        assert_eq!(realize(&singular, 2, f), Err(Error::SingularMatrix));
        let wrong = MatrixSpec::Explicit { entries: vec![vec![1]] };
        assert!(matches!(realize(&wrong, 2, f), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn generic_is_deterministic() {
        let f = PrimeField::default();
        let a = realize(&MatrixSpec::Generic { seed: 7 }, 5, f).unwrap();
        let b = realize(&MatrixSpec::Generic { seed: 7 }, 5, f).unwrap();
        let c = realize(&MatrixSpec::Generic { seed: 8 }, 5, f).unwrap();
        assert!(a.is_nonsingular());
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn block_generic_structure() {
        let f = PrimeField::default();
        let m = realize(&MatrixSpec::BlockGeneric { upper: 3, lower: 3, seed: 1 }, 6, f).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                let same_block = (r < 3) == (c < 3);
                assert_eq!(m.get(r, c).is_zero(), !same_block, "entry ({r},{c})");
            }
        }
        // rows split 1+1 against columns split 2+0 cannot meet a full block
        let minor = m
            .minor(Face::new([1, 4]).unwrap(), Face::new([1, 2]).unwrap())
            .unwrap();
        assert_eq!(minor, FieldElement::ZERO);
        assert!(realize(&MatrixSpec::BlockGeneric { upper: 2, lower: 3, seed: 1 }, 6, f).is_err());
    }
}
