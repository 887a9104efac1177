use serde::Serialize;

use super::checks::delta;
use super::construct::{antistar_unchecked, link_unchecked};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{FieldElement, FieldMatrix};
use crate::par::ExecMode;
use crate::shift::{shift_with_matrix, CompoundStrategy, Shifter};

/// `true` iff `S ∪ {v} ∖ {j} ∈ K` for every `j ∈ S ∈ K`.
pub fn is_near_cone(k: &SimplicialComplex, v: u32) -> bool {
    k.faces().all(|s| s.contains(v) || s.vertices().all(|j| k.contains(s.without(j).with(v))))
}

/// Apex sequence `v_1, …, v_i` with `K(j) = ast(v_j, K(j−1))` and `K(j−1)` a
/// near cone with respect to `v_j`. `chain[0]` is `K` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearConeCertificate {
    pub apexes: Vec<u32>,
    pub chain: Vec<SimplicialComplex>,
    /// The level at which no vertex qualified, if the chain stopped before
    /// running out of vertices.
    pub blocked_at: Option<usize>,
}

impl NearConeCertificate {
    pub fn len(&self) -> usize {
        self.apexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.apexes.is_empty()
    }
}

/// `K` is not a near cone with respect to any of its vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NearConeRefusal {
    pub level: usize,
}

/// Greedily extends the apex sequence, taking the smallest qualifying vertex
/// at each level, until the remaining complex has no vertices or no vertex
/// qualifies.
pub fn near_cone_analyze(k: &SimplicialComplex) -> std::result::Result<NearConeCertificate, NearConeRefusal> {
    let mut cert = NearConeCertificate { apexes: Vec::new(), chain: vec![k.clone()], blocked_at: None };
    loop {
        let current = cert.chain.last().unwrap();
        let verts = current.vertex_set();
        if verts.is_empty() {
            break;
        }
        match verts.vertices().find(|&v| is_near_cone(current, v)) {
            Some(v) => {
                let next = antistar_unchecked(Face::singleton(v), current);
                cert.apexes.push(v);
                cert.chain.push(next);
            }
            None => {
                cert.blocked_at = Some(cert.apexes.len());
                break;
            }
        }
    }
    if cert.apexes.is_empty() && cert.blocked_at.is_some() {
        return Err(NearConeRefusal { level: 0 });
    }
    Ok(cert)
}

/// `{j ∪ (T + j) : T ∈ Δ(lk(v, C))}`, the faces of `Δ(C)` that are forced to
/// have minimum `j` by the decomposition.
fn coned_link(shifter: &Shifter, c: &SimplicialComplex, v: u32, j: u32) -> Result<Vec<Face>> {
    let lk = link_unchecked(Face::singleton(v), c);
    let dl = delta(shifter, &lk)?;
    Ok(dl.faces().map(|t| t.shifted_up(j).with(j)).collect())
}

fn faces_with_min(c: &SimplicialComplex, j: u32) -> Vec<Face> {
    let mut out: Vec<Face> = c.faces().filter(|&f| f.min() == Some(j)).collect();
    out.sort_unstable();
    out
}

/// Checks that the faces of `Δ(K)` through 1 are exactly `1 * (Δ(lk(v, K)) + 1)`
/// for a near cone `K` with respect to `v`.
pub fn near_cone_decomposition_check(shifter: &Shifter, k: &SimplicialComplex, v: u32) -> Result<bool> {
    if !k.vertex_set().contains(v) || !is_near_cone(k, v) {
        return Err(Error::NotNearCone(v));
    }
    let dk = shifter.shift(k)?;
    let mut expected = coned_link(shifter, k, v, 1)?;
    expected.sort_unstable();
    Ok(faces_with_min(&dk, 1) == expected)
}

/// Checks the iterated decomposition along a certificate: for each level
/// `j`, the faces of `Δ(K)` with minimum `j` are `j * (Δ(lk(v_j, K(j−1))) + j)`.
pub fn certificate_decomposition_check(
    shifter: &Shifter,
    k: &SimplicialComplex,
    cert: &NearConeCertificate,
) -> Result<bool> {
    let dk = shifter.shift(k)?;
    for (idx, &v) in cert.apexes.iter().enumerate() {
        let level = &cert.chain[idx];
        if !is_near_cone(level, v) {
            return Err(Error::NotNearCone(v));
        }
        let j = idx as u32 + 1;
        let mut expected = coned_link(shifter, level, v, j)?;
        expected.sort_unstable();
        if faces_with_min(&dk, j) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The decomposition for the basis `f_i` given by the rows of `x`, which need
/// not be generic. `K` must be a near cone with respect to 1 and `f_1` must
/// have no zero coefficient. `Y` is `f_2, …, f_n` reduced modulo `f_1` to kill
/// their `e_1` part, and must be independent. Checks that the faces of
/// `Δ_X(K)` through 1 are `1 * (Δ_Y(lk(1, K)) + 1)`.
///
/// Dropping the `e_1` coordinate instead of reducing by `f_1` is wrong as soon
/// as some `f_i` with `i > 1` has a nonzero `e_1` coefficient.
pub fn explicit_basis_decomposition_check(k: &SimplicialComplex, x: &FieldMatrix, exec: ExecMode) -> Result<bool> {
    let n = k.n();
    if x.rows() != n || x.cols() != n {
        return Err(Error::DimensionMismatch(format!("basis is {}x{}, complex has n = {n}", x.rows(), x.cols())));
    }
    if !k.vertex_set().contains(1) || !is_near_cone(k, 1) {
        return Err(Error::NotNearCone(1));
    }
    if let Some(c) = x.row(0).iter().position(|a| a.is_zero()) {
        return Err(Error::ZeroCoefficient(c as u32 + 1));
    }
    let field = x.field();
    let lead = field.inv(x.get(0, 0)).unwrap();
    let data: Vec<FieldElement> = (1..n)
        .flat_map(|r| {
            let c = field.mul(x.get(r, 0), lead);
            (1..n).map(move |j| field.sub(x.get(r, j), field.mul(c, x.get(0, j))))
        })
        .collect();
    let y = FieldMatrix::from_elements(field, n - 1, n - 1, data);
    if !y.is_nonsingular() {
        return Err(Error::SingularMatrix);
    }
    let lk = link_unchecked(Face::singleton(1), k);
    let lk = SimplicialComplex::from_closed_set(n - 1, lk.faces().map(|f| f.shifted_down(1)));
    let dy = shift_with_matrix(&lk, &y, CompoundStrategy::Laplace, exec);
    let dx = shift_with_matrix(k, x, CompoundStrategy::Laplace, exec);
    let mut expected: Vec<Face> = dy.faces().map(|t| t.shifted_up(1).with(1)).collect();
    expected.sort_unstable();
    Ok(faces_with_min(&dx, 1) == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::cone;

    #[test]
    fn two_edges_refused() {
        let b = SimplicialComplex::from_lists(4, &[&[1, 2], &[3, 4]]);
        assert!((1..=4).all(|v| !is_near_cone(&b, v)));
        assert_eq!(near_cone_analyze(&b), Err(NearConeRefusal { level: 0 }));
    }

    #[test]
    fn cone_certificate_starts_at_apex() {
        let b = SimplicialComplex::from_lists(4, &[&[1, 2], &[3, 4]]);
        let c = cone(&b).unwrap();
        let cert = near_cone_analyze(&c).unwrap();
        assert_eq!(cert.apexes[0], 1);
        assert_eq!(cert.blocked_at, Some(1));
        assert_eq!(cert.chain[1], b.shifted_up(1).unwrap());
        assert!(near_cone_decomposition_check(&Shifter::default(), &c, 1).unwrap());
        assert!(certificate_decomposition_check(&Shifter::default(), &c, &cert).unwrap());
    }

    #[test]
    fn shifted_complex_has_full_certificate() {
        let k = SimplicialComplex::from_lists(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[1, 5]]);
        assert!(k.is_shifted());
        let cert = near_cone_analyze(&k).unwrap();
        assert_eq!(cert.apexes, vec![1, 2, 3, 4, 5]);
        assert_eq!(cert.blocked_at, None);
        assert!(certificate_decomposition_check(&Shifter::default(), &k, &cert).unwrap());
    }

    #[test]
    fn precondition_enforced() {
        let b = SimplicialComplex::from_lists(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(near_cone_decomposition_check(&Shifter::default(), &b, 1), Err(Error::NotNearCone(1)));
    }

    #[test]
    fn explicit_basis_on_a_cone() {
        let field = crate::linalg::PrimeField::new(101).unwrap();
        let k = cone(&SimplicialComplex::from_lists(3, &[&[1, 2], &[3]])).unwrap();
        let rows = vec![vec![3, 5, 7, 2], vec![0, 1, 0, 4], vec![1, 0, 1, 0], vec![0, 0, 0, 6]];
        let x = FieldMatrix::from_rows(field, &rows).unwrap();
        assert_eq!(explicit_basis_decomposition_check(&k, &x, ExecMode::Sequential), Ok(true));
        let mut zero = rows.clone();
        zero[0][2] = 0;
        let z = FieldMatrix::from_rows(field, &zero).unwrap();
        assert_eq!(explicit_basis_decomposition_check(&k, &z, ExecMode::Sequential), Err(Error::ZeroCoefficient(3)));
        let mut singular = rows;
        singular[3] = vec![6, 10, 14, 4];
        let s = FieldMatrix::from_rows(field, &singular).unwrap();
        assert_eq!(explicit_basis_decomposition_check(&k, &s, ExecMode::Sequential), Err(Error::SingularMatrix));
    }

    #[test]
    fn dropping_the_first_coordinate_is_not_enough() {
        let field = crate::linalg::PrimeField::new(101).unwrap();
        let k = SimplicialComplex::from_lists(4, &[&[1, 2, 3], &[1, 3, 4]]);
        let rows = vec![vec![97, 28, 22, 14], vec![0, 2, 0, 3], vec![3, 1, 0, 2], vec![0, 0, 3, 0]];
        let x = FieldMatrix::from_rows(field, &rows).unwrap();
        assert_eq!(explicit_basis_decomposition_check(&k, &x, ExecMode::Sequential), Ok(true));
        let dropped: Vec<Vec<u64>> = rows[1..].iter().map(|r| r[1..].to_vec()).collect();
        let y = FieldMatrix::from_rows(field, &dropped).unwrap();
        let lk = SimplicialComplex::from_lists(3, &[&[1, 2], &[2, 3]]);
        let dy = shift_with_matrix(&lk, &y, CompoundStrategy::Laplace, ExecMode::Sequential);
        let dx = shift_with_matrix(&k, &x, CompoundStrategy::Laplace, ExecMode::Sequential);
        assert_eq!(dy.facets(), vec![Face::new([1, 3]).unwrap(), Face::new([2, 3]).unwrap()]);
        assert_eq!(dx.facets(), vec![Face::new([1, 2, 3]).unwrap(), Face::new([1, 3, 4]).unwrap()]);
    }
}
