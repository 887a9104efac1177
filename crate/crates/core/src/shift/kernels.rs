//! Kernel and image dimensions of stacked interior products `f_R⌊`.
//!
//! Nothing here goes through the greedy shifting loop or through minors: each
//! `f_R⌊` is assembled as a product of degree-1 boundary matrices, so these
//! numbers serve as an independent check on [`super::exterior_shift`].

use crate::complex::{Face, KSubsets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::boundary_matrix;
use crate::linalg::{FieldElement, FieldMatrix, RowEchelonAccumulator};
use crate::par::ExecMode;

/// Which degree-1 elements play the role of `f_i`, and which `R` are used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    /// `f_i = Σ_j α_ij e_j`, `R ⊆ [n]`.
    Full,
    /// `f⁰_i = Σ_{j ∈ K_0} α_ij e_j`, `R ⊆ [|K_0|]`.
    Restricted,
}

/// `dim ∩_{R} Ker(f_R⌊ : ⋀^{|S|+i} K → ⋀^{i} K)` over the `|S|`-sets
/// `R <_L S` (`strict`) or `R ≤_L S`.
pub fn kernel_intersection_dim(
    k: &SimplicialComplex,
    a: &FieldMatrix,
    s: Face,
    strict: bool,
    extra_degree: usize,
) -> Result<usize> {
    kernel_dim(k, a, s, strict, extra_degree, Family::Full, ExecMode::default())
}

/// As [`kernel_intersection_dim`], but with the restricted combinations
/// `f⁰_i` and `R ⊆ [|K_0|]`.
pub fn kernel_intersection_dim_restricted(
    k: &SimplicialComplex,
    a: &FieldMatrix,
    s: Face,
    strict: bool,
    extra_degree: usize,
) -> Result<usize> {
    kernel_dim(k, a, s, strict, extra_degree, Family::Restricted, ExecMode::default())
}

fn kernel_dim(
    k: &SimplicialComplex,
    a: &FieldMatrix,
    s: Face,
    strict: bool,
    extra_degree: usize,
    family: Family,
    exec: ExecMode,
) -> Result<usize> {
    let n = k.n();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch("transition matrix must be n x n".into()));
    }
    if s.max().is_some_and(|m| m as usize > n) {
        return Err(Error::VertexOutOfRange { label: s.max().unwrap() as u64, n });
    }
    let field = a.field();
    let size = s.len();
    let degree = size + extra_degree;
    let domain = k.faces_of_size(degree).len();
    if domain == 0 {
        return Ok(0);
    }
    let verts = k.vertex_set();
    let row_range = match family {
        Family::Full => n,
        Family::Restricted => verts.len(),
    };
    let coefficients = |r: u32| -> Vec<FieldElement> {
        (1..=n as u32)
            .map(|j| match family {
                Family::Restricted if !verts.contains(j) => FieldElement::ZERO,
                _ => a.get(r as usize - 1, j as usize - 1),
            })
            .collect()
    };
    // boundary[r-1][d-1] = matrix of f_r⌊ on ⋀^d K
    let boundary: Vec<Vec<FieldMatrix>> = exec.map_range(row_range, |r| {
        let g = coefficients(r as u32 + 1);
        (1..=degree).map(|d| boundary_matrix(field, k, &g, d)).collect()
    });
    let rs: Vec<Face> = KSubsets::new(row_range, size)
        .filter(|&r| if strict { r.lex_cmp(s).is_lt() } else { r.lex_cmp(s).is_le() })
        .collect();
    // f_R⌊ = f_{r1}⌊ ∘ f_{r2}⌊ ∘ ... ∘ f_{rs}⌊, the last factor acting first
    let blocks = exec.map(&rs, |&r| {
        let mut m = FieldMatrix::identity(field, domain);
        for (pos, v) in r.vertices().enumerate().collect::<Vec<_>>().into_iter().rev() {
            let d = extra_degree + pos + 1;
            m = boundary[v as usize - 1][d - 1].mul(&m).expect("chained degrees");
        }
        m
    });
    let mut acc = RowEchelonAccumulator::new(field, domain);
    'outer: for block in &blocks {
        for i in 0..block.rows() {
            acc.insert_row(block.row(i))?;
            if acc.rank() == domain {
                break 'outer;
            }
        }
    }
    Ok(domain - acc.rank())
}

/// Closed form for `dim ⊕_{R <_L S} f_R⌊(⋀^{1+s} H)` when `H` is the complete
/// complex on `[h]`.
pub fn image_dim_complete(h: usize, n: usize, s: Face) -> usize {
    let size = s.len();
    debug_assert!(h <= n);
    if size >= h {
        return 0;
    }
    let below = |r: Face| r.lex_cmp(s).is_lt();
    let rows = KSubsets::new(h, size).filter(|&r| below(r)).count();
    let overlap: usize = KSubsets::new(h, size + 1)
        .filter(|t| below(t.init(size).unwrap()))
        .map(|t| t.vertices().filter(|&v| below(t.without(v))).count())
        .filter(|&sum| sum > 1)
        .map(|sum| sum - 1)
        .sum();
    rows * (h - size) - overlap
}

/// Direct rank of the stacked map on the complete complex `2^[h]` inside
/// `[n]`, for comparison with [`image_dim_complete`].
pub fn image_dim_direct(h: usize, a: &FieldMatrix, s: Face) -> Result<usize> {
    let n = a.rows();
    let hcx = SimplicialComplex::simplex(n, h);
    let domain = hcx.faces_of_size(s.len() + 1).len();
    Ok(domain - kernel_intersection_dim(&hcx, a, s, true, 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{realize, MatrixSpec, PrimeField};

    fn f(v: &[u32]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    fn generic(n: usize, seed: u64) -> FieldMatrix {
        realize(&MatrixSpec::Generic { seed }, n, PrimeField::default()).unwrap()
    }

    #[test]
    fn lex_first_face_has_no_constraints() {
        let k = SimplicialComplex::from_lists(5, &[&[1, 2, 3], &[3, 4], &[4, 5], &[2, 5]]);
        let a = generic(5, 1);
        for i in 0..=1 {
            let d = kernel_intersection_dim(&k, &a, f(&[1, 2]), true, i).unwrap();
            assert_eq!(d, k.faces_of_size(2 + i).len());
        }
    }

    #[test]
    fn image_dim_degenerate_cases() {
        assert_eq!(image_dim_complete(3, 5, f(&[1, 2, 3])), 0);
        assert_eq!(image_dim_complete(3, 5, f(&[1, 2, 4, 5])), 0);
        assert_eq!(image_dim_complete(4, 5, f(&[1, 2])), 0);
    }

    #[test]
    fn image_dim_small_instance() {
        // h=3, n=4, S={1,3}: only R={1,2} precedes S, so the image is
        // f_{12}⌊ applied to the single 3-face, of rank 1
        let a = generic(4, 5);
        assert_eq!(image_dim_complete(3, 4, f(&[1, 3])), 1);
        assert_eq!(image_dim_direct(3, &a, f(&[1, 3])).unwrap(), 1);
    }

    #[test]
    fn restricted_family_on_subset_support() {
        // vertices {2,4,5} inside [6]
        let k = SimplicialComplex::from_lists(6, &[&[2, 4], &[4, 5], &[2, 5]]);
        let a = generic(6, 9);
        for s in [f(&[1, 3]), f(&[2, 3]), f(&[1, 2])] {
            let full = kernel_intersection_dim(&k, &a, s, true, 0).unwrap();
            let restricted = kernel_intersection_dim_restricted(&k, &a, s, true, 0).unwrap();
            assert_eq!(full, restricted, "S={s}");
        }
    }
}
