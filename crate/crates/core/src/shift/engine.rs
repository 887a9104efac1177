use serde::Serialize;

use super::compound::{compound_row, CompoundStrategy, MinorTable};
use crate::complex::{Face, KSubsets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{realize, FieldMatrix, MatrixSpec, PrimeField, RowEchelonAccumulator};
use crate::par::ExecMode;

/// Seed used by [`shift`].
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Knobs for [`exterior_shift_with`].
#[derive(Clone, Copy, Debug)]
pub struct ShiftOptions {
    pub field: PrimeField,
    /// Reseeds allowed when a generic draw produces an invalid result.
    pub max_retries: usize,
    pub strategy: CompoundStrategy,
    pub exec: ExecMode,
}

impl Default for ShiftOptions {
    fn default() -> Self {
        ShiftOptions {
            field: PrimeField::default(),
            max_retries: 3,
            strategy: CompoundStrategy::default(),
            exec: ExecMode::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub is_shifted: bool,
    pub f_vector_preserved: bool,
}

#[derive(Clone, Debug)]
pub struct ShiftResult {
    pub shifted: SimplicialComplex,
    pub spec_used: MatrixSpec,
    pub seed_used: Option<u64>,
    pub validated: Validation,
    pub retries: usize,
}

/// A reusable generic shifting configuration.
#[derive(Clone, Copy, Debug)]
pub struct Shifter {
    pub seed: u64,
    pub options: ShiftOptions,
}

impl Default for Shifter {
    fn default() -> Self {
        Shifter { seed: DEFAULT_SEED, options: ShiftOptions::default() }
    }
}

impl Shifter {
    pub fn new(seed: u64, exec: ExecMode) -> Self {
        Shifter { seed, options: ShiftOptions { exec, ..ShiftOptions::default() } }
    }

    /// Generic `Δ(K)`.
    pub fn shift(&self, k: &SimplicialComplex) -> Result<SimplicialComplex> {
        Ok(exterior_shift_with(k, &MatrixSpec::Generic { seed: self.seed }, &self.options)?.shifted)
    }
}

/// `Δ(K)` with the default generic matrix.
pub fn shift(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    Ok(exterior_shift(k, &MatrixSpec::Generic { seed: DEFAULT_SEED })?.shifted)
}

/// `Δ(K)` with a generic matrix drawn from `seed`.
pub fn shift_seeded(k: &SimplicialComplex, seed: u64, exec: ExecMode) -> Result<SimplicialComplex> {
    let opts = ShiftOptions { exec, ..ShiftOptions::default() };
    Ok(exterior_shift_with(k, &MatrixSpec::Generic { seed }, &opts)?.shifted)
}

pub fn exterior_shift(k: &SimplicialComplex, spec: &MatrixSpec) -> Result<ShiftResult> {
    exterior_shift_with(k, spec, &ShiftOptions::default())
}

/// Computes `Δ_A(K)` for the matrix described by `spec`.
///
/// Generic results are validated (shifted, same f-vector); a failed
/// validation reseeds up to `max_retries` times before giving up. Other specs
/// are returned as computed, with the validation flags reporting what holds.
pub fn exterior_shift_with(k: &SimplicialComplex, spec: &MatrixSpec, opts: &ShiftOptions) -> Result<ShiftResult> {
    if k.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let mut current = spec.clone();
    let mut retries = 0;
    loop {
        let a = realize(&current, k.n(), opts.field)?;
        let shifted = shift_with_matrix(k, &a, opts.strategy, opts.exec);
        let validated = Validation {
            is_shifted: shifted.is_shifted(),
            f_vector_preserved: shifted.f_vector() == k.f_vector(),
        };
        let ok = validated.is_shifted && validated.f_vector_preserved;
        if ok || !matches!(current, MatrixSpec::Generic { .. }) {
            return Ok(ShiftResult { shifted, seed_used: current.seed(), spec_used: current, validated, retries });
        }
        if retries == opts.max_retries {
            return Err(Error::ValidationFailed { retries });
        }
        retries += 1;
        current = spec.reseeded(spec.seed().unwrap_or(0).wrapping_add(retries as u64));
    }
}

/// `Δ_A(K)`: for each size, the lex-greedy rows `S` whose compound row
/// (restricted to the faces of `K` of that size) is independent of all
/// lex-earlier rows. No validation is performed.
pub fn shift_with_matrix(
    k: &SimplicialComplex,
    a: &FieldMatrix,
    strategy: CompoundStrategy,
    exec: ExecMode,
) -> SimplicialComplex {
    assert_eq!(a.rows(), k.n(), "transition matrix must be n x n");
    if k.is_empty() {
        return SimplicialComplex::empty(k.n());
    }
    let top = k.max_face_size();
    let table = match strategy {
        CompoundStrategy::Laplace => Some(MinorTable::new(k, top)),
        CompoundStrategy::PerEntry => None,
    };
    let levels = exec.map_range(top + 1, |size| shift_level(k, a, size, table.as_ref(), exec));
    SimplicialComplex::from_closed_set(k.n(), levels.into_iter().flatten())
}

fn shift_level(
    k: &SimplicialComplex,
    a: &FieldMatrix,
    size: usize,
    table: Option<&MinorTable>,
    exec: ExecMode,
) -> Vec<Face> {
    let columns = k.faces_of_size(size);
    let target = columns.len();
    let mut acc = RowEchelonAccumulator::new(a.field(), target);
    let mut kept = Vec::with_capacity(target);
    let mut candidates = KSubsets::new(k.n(), size);
    let chunk = (2 * target).max(32);
    while acc.rank() < target {
        let batch: Vec<Face> = candidates.by_ref().take(chunk).collect();
        if batch.is_empty() {
            break;
        }
        let rows = exec.map(&batch, |&s| match table {
            Some(t) => t.row(a, s),
            None => compound_row(a, s, columns).expect("equal sizes"),
        });
        for (s, row) in batch.into_iter().zip(rows) {
            if acc.insert_row(&row).expect("row width matches") {
                kept.push(s);
                if acc.rank() == target {
                    break;
                }
            }
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_is_fixed() {
        let k = SimplicialComplex::from_lists(3, &[&[1, 2, 3]]);
        let r = exterior_shift(&k, &MatrixSpec::Generic { seed: 1 }).unwrap();
        assert_eq!(r.shifted, k);
        assert!(r.validated.is_shifted && r.validated.f_vector_preserved);
        assert_eq!(r.retries, 0);
        assert_eq!(r.seed_used, Some(1));
    }

    #[test]
    fn two_disjoint_edges() {
        let k = SimplicialComplex::from_lists(4, &[&[1, 2], &[3, 4]]);
        let expected = SimplicialComplex::from_lists(4, &[&[1, 2], &[1, 3], &[4]]);
        assert_eq!(shift(&k).unwrap(), expected);
    }

    #[test]
    fn strategies_and_modes_agree() {
        let k = SimplicialComplex::from_lists(7, &[&[1, 2, 3], &[3, 4, 5], &[5, 6, 7], &[1, 7], &[2, 6]]);
        let a = realize(&MatrixSpec::Generic { seed: 42 }, 7, PrimeField::default()).unwrap();
        let reference = shift_with_matrix(&k, &a, CompoundStrategy::PerEntry, ExecMode::Sequential);
        for strategy in [CompoundStrategy::PerEntry, CompoundStrategy::Laplace] {
            for exec in [ExecMode::Sequential, ExecMode::Parallel] {
                assert_eq!(shift_with_matrix(&k, &a, strategy, exec), reference);
            }
        }
    }

    #[test]
    fn identity_matrix_returns_input() {
        // with A = I the compound matrix is a coordinate projection, so Δ_I(K) = K
        let k = SimplicialComplex::from_lists(4, &[&[2, 3], &[3, 4], &[1]]);
        let spec = MatrixSpec::Explicit {
            entries: (0..4).map(|i| (0..4).map(|j| u64::from(i == j)).collect()).collect(),
        };
        let r = exterior_shift(&k, &spec).unwrap();
        assert_eq!(r.shifted, k);
        assert!(!r.validated.is_shifted);
        assert!(r.validated.f_vector_preserved);
    }

    #[test]
    fn empty_and_void_inputs() {
        assert_eq!(
            exterior_shift(&SimplicialComplex::empty(3), &MatrixSpec::Generic { seed: 0 }).unwrap_err(),
            Error::EmptyComplex
        );
        let void = SimplicialComplex::void(3);
        assert_eq!(shift(&void).unwrap(), void);
        let void0 = SimplicialComplex::void(0);
        assert_eq!(shift(&void0).unwrap(), void0);
    }

    #[test]
    fn singular_explicit_is_an_error() {
        let k = SimplicialComplex::from_lists(2, &[&[1, 2]]);
        let spec = MatrixSpec::Explicit { entries: vec![vec![1, 1], vec![1, 1]] };
        assert_eq!(exterior_shift(&k, &spec).unwrap_err(), Error::SingularMatrix);
    }
}
