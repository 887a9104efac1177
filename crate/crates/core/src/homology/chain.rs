use std::collections::BTreeMap;

use crate::complex::{Face, SimplicialComplex};
use crate::linalg::{FieldElement, FieldMatrix, PrimeField};

/// Sign of a signed basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }
}

/// `|{(s, t) in S x T : t < s}|`, the number of transpositions needed to sort
/// the concatenation `S T`.
pub fn crossings(s: Face, t: Face) -> usize {
    t.vertices().map(|v| s.count_above(v)).sum()
}

/// Left interior product of basis elements, `e_T ⌊ e_S`.
///
/// Zero unless `T ⊆ S`; otherwise `± e_{S∖T}` with sign `(-1)^a`,
/// `a = |{(s,t) ∈ S×T : s ∉ T, t < s}|`.
pub fn interior_product(t: Face, s: Face) -> Option<(Sign, Face)> {
    if !t.is_subset(s) {
        return None;
    }
    let rest = s - t;
    Some((Sign::from_parity(crossings(rest, t) % 2 == 1), rest))
}

/// Wedge product of basis elements, `e_S ∧ e_T`.
pub fn wedge_basis(s: Face, t: Face) -> Option<(Sign, Face)> {
    if !s.is_disjoint(t) {
        return None;
    }
    Some((Sign::from_parity(crossings(s, t) % 2 == 1), s | t))
}

/// A sparse element of the exterior algebra `⋀V`, written in the `e_S` basis.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainVector {
    field: PrimeField,
    terms: BTreeMap<Face, FieldElement>,
}

impl ChainVector {
    pub fn zero(field: PrimeField) -> Self {
        ChainVector { field, terms: BTreeMap::new() }
    }

    pub fn basis(field: PrimeField, face: Face) -> Self {
        let mut v = Self::zero(field);
        v.add_term(face, FieldElement::ONE);
        v
    }

    /// A degree-1 element `Σ g_i e_i` from coefficients indexed by `vertex - 1`.
    pub fn linear(field: PrimeField, coefficients: &[FieldElement]) -> Self {
        let mut v = Self::zero(field);
        for (i, &c) in coefficients.iter().enumerate() {
            v.add_term(Face::singleton(i as u32 + 1), c);
        }
        v
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn add_term(&mut self, face: Face, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry(face).or_insert(FieldElement::ZERO);
        *entry = f.add(*entry, c);
        if entry.is_zero() {
            self.terms.remove(&face);
        }
    }

    pub fn add_signed(&mut self, sign: Sign, face: Face, c: FieldElement) {
        let c = if sign.is_negative() { self.field.neg(c) } else { c };
        self.add_term(face, c);
    }

    pub fn coefficient(&self, face: Face) -> FieldElement {
        self.terms.get(&face).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Face, FieldElement)> + '_ {
        self.terms.iter().map(|(&f, &c)| (f, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common cardinality of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|f| f.len());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// `true` iff every term is a face of `k`.
    pub fn supported_in(&self, k: &SimplicialComplex) -> bool {
        self.terms.keys().all(|&f| k.contains(f))
    }

    pub fn plus(&self, other: &ChainVector) -> ChainVector {
        let mut out = self.clone();
        for (f, c) in other.terms() {
            out.add_term(f, c);
        }
        out
    }

    pub fn scaled(&self, c: FieldElement) -> ChainVector {
        let mut out = Self::zero(self.field);
        for (f, x) in self.terms() {
            out.add_term(f, self.field.mul(x, c));
        }
        out
    }

    pub fn wedge(&self, other: &ChainVector) -> ChainVector {
        let f = self.field;
        let mut out = Self::zero(f);
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                if let Some((sign, u)) = wedge_basis(s, t) {
                    out.add_signed(sign, u, f.mul(a, b));
                }
            }
        }
        out
    }

    /// `g ⌊ self`.
    pub fn interior_by(&self, g: &ChainVector) -> ChainVector {
        let f = self.field;
        let mut out = Self::zero(f);
        for (t, a) in g.terms() {
            for (s, b) in self.terms() {
                if let Some((sign, u)) = interior_product(t, s) {
                    out.add_signed(sign, u, f.mul(a, b));
                }
            }
        }
        out
    }

    /// Coordinates against `faces`, or `None` if the support is not contained in them.
    pub fn coordinates(&self, faces: &[Face]) -> Option<Vec<FieldElement>> {
        let mut out = vec![FieldElement::ZERO; faces.len()];
        for (face, c) in self.terms() {
            let idx = faces.binary_search(&face).ok()?;
            out[idx] = c;
        }
        Some(out)
    }
}

/// Matrix of `g⌊ : ⋀^k K → ⋀^{k-1} K` in the `e_S` bases (faces in lex order).
///
/// `g` holds the coefficients of a degree-1 element indexed by `vertex - 1`;
/// missing trailing coefficients are zero. Columns are indexed by the
/// `k`-faces of `K`, rows by the `(k-1)`-faces.
pub fn boundary_matrix(
    field: PrimeField,
    k: &SimplicialComplex,
    g: &[FieldElement],
    degree: usize,
) -> FieldMatrix {
    assert!(degree >= 1, "boundary degree must be positive");
    let cols = k.faces_of_size(degree);
    let rows = k.faces_of_size(degree - 1);
    let mut m = FieldMatrix::zeros(field, rows.len(), cols.len());
    for (j, &s) in cols.iter().enumerate() {
        for v in s.vertices() {
            let c = g.get(v as usize - 1).copied().unwrap_or(FieldElement::ZERO);
            if c.is_zero() {
                continue;
            }
            let (sign, rest) = interior_product(Face::singleton(v), s).unwrap();
            let i = k.index_of(rest).expect("complex is downward closed");
            let c = if sign.is_negative() { field.neg(c) } else { c };
            m.set(i, j, c);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn interior_product_signs() {
        assert_eq!(interior_product(f(&[2]), f(&[1, 2, 3])), Some((Sign::Minus, f(&[1, 3]))));
        assert_eq!(interior_product(f(&[1]), f(&[1, 2, 3])), Some((Sign::Plus, f(&[2, 3]))));
        assert_eq!(interior_product(f(&[4]), f(&[1, 2])), None);
        assert_eq!(interior_product(Face::EMPTY, f(&[1, 2])), Some((Sign::Plus, f(&[1, 2]))));
    }

    #[test]
    fn interior_is_adjoint_of_wedge() {
        // <h, g⌊x> = <h ∧ g, x> on basis elements
        let field = PrimeField::default();
        let all: Vec<Face> = Face::initial(5).subsets().collect();
        for &s in &all {
            for &t in &all {
                let lhs = ChainVector::basis(field, s).interior_by(&ChainVector::basis(field, t));
                for &h in &all {
                    let rhs = ChainVector::basis(field, h).wedge(&ChainVector::basis(field, t));
                    assert_eq!(lhs.coefficient(h), rhs.coefficient(s), "h={h} t={t} s={s}");
                }
            }
        }
    }

    #[test]
    fn edge_boundary_column() {
        let field = PrimeField::default();
        let k = SimplicialComplex::from_lists(2, &[&[1, 2]]);
        let ones = vec![FieldElement::ONE; 2];
        let m = boundary_matrix(field, &k, &ones, 2);
        // e_1⌊e_12 = -e_2, e_2⌊e_12 = +e_1
        assert_eq!(m.get(0, 0), FieldElement::ONE);
        assert_eq!(m.get(1, 0), field.from_i64(-1));
        let m1 = boundary_matrix(field, &k, &[field.elem(3), field.elem(5)], 1);
        assert_eq!(m1.row(0), &[field.elem(3), field.elem(5)]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let field = PrimeField::default();
        let k = SimplicialComplex::from_lists(5, &[&[1, 2, 3, 4], &[2, 5], &[3, 4, 5]]);
        let g: Vec<FieldElement> = (1..=5u64).map(|i| field.elem(i * i + 3)).collect();
        for d in 2..=4 {
            let a = boundary_matrix(field, &k, &g, d - 1);
            let b = boundary_matrix(field, &k, &g, d);
            assert!(a.mul(&b).unwrap().is_zero(), "degree {d}");
        }
    }
}
