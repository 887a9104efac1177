use serde::Serialize;

use super::chain::boundary_matrix;
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{FieldElement, PrimeField};

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ..., β̃_dim` (index 0 holds `β̃_{-1}`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    /// `β̃_i`; zero outside the stored range.
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1).ok().and_then(|i| self.0.get(i).copied()).unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Reduced Betti numbers from ranks of the simplicial boundary over `F_p`.
pub fn betti_direct(k: &SimplicialComplex) -> Result<BettiVector> {
    betti_direct_in(PrimeField::default(), k)
}

pub fn betti_direct_in(field: PrimeField, k: &SimplicialComplex) -> Result<BettiVector> {
    if k.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let top = k.max_face_size();
    let ones = vec![FieldElement::ONE; k.n()];
    // rank of ∂ : C_size -> C_{size-1}, for size = 1..=top
    let mut ranks = vec![0usize; top + 2];
    for (size, rank) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        *rank = boundary_matrix(field, k, &ones, size).rank();
    }
    let betti = (0..=top)
        .map(|size| k.faces_of_size(size).len() - ranks[size] - ranks[size + 1])
        .collect();
    Ok(BettiVector(betti))
}

/// Reduced Betti numbers of a shifted complex: `β̃_i = |{S ∈ Δ_i : S ∪ {1} ∉ Δ}|`.
pub fn betti_from_shifted(delta: &SimplicialComplex) -> Result<BettiVector> {
    if !delta.is_shifted() {
        return Err(Error::NotShifted);
    }
    if delta.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let one = Face::singleton(1);
    let betti = (0..=delta.max_face_size())
        .map(|size| {
            delta
                .faces_of_size(size)
                .iter()
                .filter(|&&s| !delta.contains(s | one))
                .count()
        })
        .collect();
    Ok(BettiVector(betti))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_disjoint_edges() {
        let k = SimplicialComplex::from_lists(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(betti_direct(&k).unwrap().0, vec![0, 1, 0]);
    }

    #[test]
    fn k33_and_octahedron() {
        let mut edges = Vec::new();
        for a in 1..=3u32 {
            for b in 4..=6u32 {
                edges.push(Face::new([a, b]).unwrap());
            }
        }
        let k33 = SimplicialComplex::from_facets(6, edges).unwrap();
        assert_eq!(betti_direct(&k33).unwrap().get(1), 4);
        let oct = SimplicialComplex::from_facets(
            6,
            (1..=6u32)
                .flat_map(|a| (a + 1..=6).map(move |b| (a, b)))
                .filter(|&(a, b)| b != a + 3)
                .map(|(a, b)| Face::new([a, b]).unwrap()),
        )
        .unwrap();
        assert_eq!(oct.f_vector().0, vec![1, 6, 12]);
        assert_eq!(betti_direct(&oct).unwrap().get(1), 7);
    }

    #[test]
    fn shifted_formula() {
        let star = SimplicialComplex::from_lists(4, &[&[1, 2], &[1, 3], &[4]]);
        assert_eq!(betti_from_shifted(&star).unwrap().0, vec![0, 1, 0]);
        let simplex = SimplicialComplex::simplex(4, 4);
        assert!(betti_from_shifted(&simplex).unwrap().0.iter().all(|&b| b == 0));
        let void = SimplicialComplex::void(0);
        assert_eq!(betti_from_shifted(&void).unwrap().0, vec![1]);
        assert_eq!(betti_direct(&void).unwrap().0, vec![1]);
        let path = SimplicialComplex::from_lists(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(betti_from_shifted(&path), Err(Error::NotShifted));
    }

    #[test]
    fn sphere() {
        // boundary of the tetrahedron
        let k = SimplicialComplex::from_lists(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(betti_direct(&k).unwrap().0, vec![0, 0, 0, 1]);
    }
}
