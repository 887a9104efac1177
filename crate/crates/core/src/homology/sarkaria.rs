use super::chain::{boundary_matrix, wedge_basis, ChainVector};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{FieldElement, FieldMatrix, PrimeField};
use crate::operators::is_near_cone;

const APEX: u32 = 1;

/// The chain isomorphisms `(⋀K, e_1⌊) --U--> (⋀K, e⌊) --D--> (⋀K, f⌊)` of a
/// near cone with apex 1, where `e = Σ e_i` and `f = Σ α_i e_i` over `K_0`.
///
/// `u[k]` and `d[k]` act on `⋀^k K` in the lex-ordered face basis.
#[derive(Clone, Debug)]
pub struct SarkariaMaps {
    field: PrimeField,
    alphas: Vec<FieldElement>,
    pub u: Vec<FieldMatrix>,
    pub d: Vec<FieldMatrix>,
}

/// `U(e_S)`: `e_S` if `1 ∈ S`, else `e_S - Σ_{i∈S} (-1)^{sgn(i,S)} e_{1∪S∖i}`,
/// where `sgn(i,S) = |{t ∈ S : t < i}|`.
pub fn sarkaria_u(field: PrimeField, s: Face) -> ChainVector {
    let mut out = ChainVector::basis(field, s);
    if s.contains(APEX) {
        return out;
    }
    for i in s.vertices() {
        let odd = s.count_below(i) % 2 == 1;
        // -(-1)^{sgn}
        let c = field.sign(!odd);
        out.add_term(s.without(i).with(APEX), c);
    }
    out
}

/// `D(e_S) = (Π_{i∈S} α_i)^{-1} e_S`, with `alphas` indexed by `vertex - 1`.
pub fn sarkaria_d(field: PrimeField, alphas: &[FieldElement], s: Face) -> Result<ChainVector> {
    let mut prod = FieldElement::ONE;
    for v in s.vertices() {
        let a = alphas.get(v as usize - 1).copied().unwrap_or(FieldElement::ZERO);
        if a.is_zero() {
            return Err(Error::ZeroCoefficient(v));
        }
        prod = field.mul(prod, a);
    }
    Ok(ChainVector::basis(field, s).scaled(field.inv(prod).unwrap()))
}

/// Extends a basis map linearly.
fn apply_linear<F>(field: PrimeField, x: &ChainVector, map: F) -> Result<ChainVector>
where
    F: Fn(Face) -> Result<ChainVector>,
{
    let mut out = ChainVector::zero(field);
    for (s, c) in x.terms() {
        out = out.plus(&map(s)?.scaled(c));
    }
    Ok(out)
}

/// Builds `U` and `D` degree by degree. `K` must be a near cone with respect
/// to vertex 1, and `α_i ≠ 0` for every vertex of `K`.
pub fn sarkaria_maps(field: PrimeField, k: &SimplicialComplex, alphas: &[FieldElement]) -> Result<SarkariaMaps> {
    if !k.contains(Face::singleton(APEX)) || !is_near_cone(k, APEX) {
        return Err(Error::NotNearCone(APEX));
    }
    for v in k.vertex_set().vertices() {
        if alphas.get(v as usize - 1).is_none_or(|a| a.is_zero()) {
            return Err(Error::ZeroCoefficient(v));
        }
    }
    let mut u = Vec::new();
    let mut d = Vec::new();
    for size in 0..=k.max_face_size() {
        let faces = k.faces_of_size(size);
        let mut um = FieldMatrix::zeros(field, faces.len(), faces.len());
        let mut dm = FieldMatrix::zeros(field, faces.len(), faces.len());
        for (j, &s) in faces.iter().enumerate() {
            let col = sarkaria_u(field, s)
                .coordinates(faces)
                .expect("near cone contains every swapped face");
            for (i, c) in col.into_iter().enumerate() {
                um.set(i, j, c);
            }
            let dc = sarkaria_d(field, alphas, s)?.coefficient(s);
            dm.set(j, j, dc);
        }
        u.push(um);
        d.push(dm);
    }
    Ok(SarkariaMaps { field, alphas: alphas.to_vec(), u, d })
}

impl SarkariaMaps {
    /// `U ∘ (e_1⌊) = (e⌊) ∘ U` and `D ∘ (e⌊) = (f⌊) ∘ D` in every degree.
    pub fn chain_map_identities_hold(&self, k: &SimplicialComplex) -> bool {
        let field = self.field;
        let n = k.n();
        let verts = k.vertex_set();
        let apex: Vec<FieldElement> =
            (1..=n as u32).map(|v| if v == APEX { FieldElement::ONE } else { FieldElement::ZERO }).collect();
        let e: Vec<FieldElement> =
            (1..=n as u32).map(|v| if verts.contains(v) { FieldElement::ONE } else { FieldElement::ZERO }).collect();
        let f: Vec<FieldElement> = (1..=n as u32)
            .map(|v| if verts.contains(v) { self.alphas[v as usize - 1] } else { FieldElement::ZERO })
            .collect();
        (1..=k.max_face_size()).all(|size| {
            let ev = boundary_matrix(field, k, &apex, size);
            let ee = boundary_matrix(field, k, &e, size);
            let ef = boundary_matrix(field, k, &f, size);
            let u_ok = self.u[size - 1].mul(&ev).unwrap() == ee.mul(&self.u[size]).unwrap();
            let d_ok = self.d[size - 1].mul(&ee).unwrap() == ef.mul(&self.d[size]).unwrap();
            u_ok && d_ok
        })
    }

    /// `U` and `D` are invertible in every degree.
    pub fn invertible(&self) -> bool {
        self.u.iter().chain(&self.d).all(FieldMatrix::is_nonsingular)
    }

    /// `U(e_S∧e_T) = U(e_S)∧U(e_T)` and likewise for `D`, for all disjoint
    /// `S, T` with `S ∪ T ∈ K`.
    pub fn grading_preserved(&self, k: &SimplicialComplex) -> bool {
        let field = self.field;
        let u = |s: Face| Ok(sarkaria_u(field, s));
        let d = |s: Face| sarkaria_d(field, &self.alphas, s);
        k.faces().all(|whole| {
            whole.subsets().all(|s| {
                let t = whole - s;
                let (sign, _) = wedge_basis(s, t).unwrap();
                let st = ChainVector::basis(field, whole).scaled(field.sign(sign.is_negative()));
                let u_ok = apply_linear(field, &st, u).unwrap() == u(s).unwrap().wedge(&u(t).unwrap());
                let d_ok = apply_linear(field, &st, d).unwrap() == d(s).unwrap().wedge(&d(t).unwrap());
                u_ok && d_ok
            })
        })
    }
}
