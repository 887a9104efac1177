//! Both sides of the additive interval formulas, computed with the engine,
//! and the lexicographic order on complexes.

use serde::Serialize;

use super::construct::{intersection, join, union};
use crate::complex::{interval, Face, SimplicialComplex};
use crate::error::Result;
use crate::shift::Shifter;

/// `Δ(K)`, with the empty complex mapping to itself.
pub(crate) fn delta(shifter: &Shifter, k: &SimplicialComplex) -> Result<SimplicialComplex> {
    if k.is_empty() {
        Ok(k.clone())
    } else {
        shifter.shift(k)
    }
}

fn count_in(c: &SimplicialComplex, faces: &[Face]) -> usize {
    faces.iter().filter(|&&f| c.contains(f)).count()
}

/// Both sides of `|I_A^{d+2} ∩ Δ(K∪L)| = |I_A^{d+2} ∩ Δ(K)| + |I_A^{d+2} ∩ Δ(L)|`
/// with `d = dim(K∩L)`, on the common labeling of `K` and `L`.
pub fn union_interval_check(k: &SimplicialComplex, l: &SimplicialComplex, a: Face) -> Result<(usize, usize)> {
    union_interval_check_with(&Shifter::default(), k, l, a)
}

pub fn union_interval_check_with(
    shifter: &Shifter,
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    a: Face,
) -> Result<(usize, usize)> {
    Ok(union_interval_counts_with(shifter, k, l, &[a])?[0])
}

/// [`union_interval_check_with`] for many prefixes `A`, shifting each
/// complex only once.
pub fn union_interval_counts_with(
    shifter: &Shifter,
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    prefixes: &[Face],
) -> Result<Vec<(usize, usize)>> {
    let n = k.n().max(l.n());
    let (k, l) = (k.with_ambient(n)?, l.with_ambient(n)?);
    let d = intersection(&k, &l).dim().max(-1);
    let dkl = delta(shifter, &union(&k, &l))?;
    let (dk, dl) = (delta(shifter, &k)?, delta(shifter, &l)?);
    prefixes
        .iter()
        .map(|&a| {
            let block = interval(a, (d + 2) as usize, n)?;
            Ok((count_in(&dkl, &block), count_in(&dk, &block) + count_in(&dl, &block)))
        })
        .collect()
}

/// Number of top-size faces of `Δ(K)` avoiding `[i]`.
fn top_avoiding(dk: &SimplicialComplex, i: usize) -> usize {
    let avoid = Face::initial(i);
    dk.faces_of_size(dk.max_face_size()).iter().filter(|f| f.is_disjoint(avoid)).count()
}

/// Both sides of the top-dimensional join formula: faces of `Δ(K*L)` of
/// size `dim(K*L)+1` avoiding `[i]`, versus the product of the same counts
/// for `Δ(K)` and `Δ(L)`.
pub fn join_top_count_check(k: &SimplicialComplex, l: &SimplicialComplex, i: usize) -> Result<(usize, usize)> {
    join_top_count_check_with(&Shifter::default(), k, l, i)
}

pub fn join_top_count_check_with(
    shifter: &Shifter,
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    i: usize,
) -> Result<(usize, usize)> {
    let kl = join(k, l)?;
    let lhs = top_avoiding(&delta(shifter, &kl)?, i);
    let rhs = top_avoiding(&delta(shifter, k)?, i) * top_avoiding(&delta(shifter, l)?, i);
    Ok((lhs, rhs))
}

/// Outcome of comparing two complexes under `≤_L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LexOrder {
    /// Each is `≤_L` the other: they agree in every dimension `r ≥ 1`.
    Equal,
    Less,
    Greater,
    Incomparable,
}

/// Compares under `K ≤_L L` iff for every `r ≥ 1` the lex-first `r`-face of
/// `K △ L`, when there is one, lies in `K`.
pub fn lex_compare(k: &SimplicialComplex, l: &SimplicialComplex) -> LexOrder {
    let top = k.max_face_size().max(l.max_face_size());
    let (mut k_first, mut l_first) = (false, false);
    for size in 2..=top {
        let (a, b) = (k.faces_of_size(size), l.faces_of_size(size));
        let first = a
            .iter()
            .filter(|f| b.binary_search(f).is_err())
            .chain(b.iter().filter(|f| a.binary_search(f).is_err()))
            .min_by(|x, y| x.lex_cmp(**y));
        if let Some(&f) = first {
            if k.contains(f) {
                k_first = true;
            } else {
                l_first = true;
            }
        }
    }
    match (k_first, l_first) {
        (false, false) => LexOrder::Equal,
        (true, false) => LexOrder::Less,
        (false, true) => LexOrder::Greater,
        (true, true) => LexOrder::Incomparable,
    }
}

impl LexOrder {
    /// `true` for `Equal` and `Less`.
    pub fn is_le(self) -> bool {
        matches!(self, LexOrder::Equal | LexOrder::Less)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn triangles_sharing_an_edge() {
        let k = SimplicialComplex::from_lists(4, &[&[1, 2, 3]]);
        let l = SimplicialComplex::from_lists(4, &[&[1, 2, 4]]);
        assert_eq!(union_interval_check(&k, &l, Face::EMPTY).unwrap(), (2, 2));
    }

    #[test]
    fn disjoint_vertex_counts_add() {
        let k = SimplicialComplex::from_lists(5, &[&[1, 2]]);
        let l = SimplicialComplex::from_lists(5, &[&[3, 4], &[4, 5]]);
        assert_eq!(union_interval_check(&k, &l, Face::EMPTY).unwrap(), (5, 5));
    }

    #[test]
    fn k33_top_counts() {
        let p = SimplicialComplex::points(3);
        assert_eq!(join_top_count_check(&p, &p, 1).unwrap(), (4, 4));
        assert_eq!(join_top_count_check(&p, &p, 6).unwrap(), (0, 0));
    }

    #[test]
    fn lex_order_on_complexes() {
        let k = SimplicialComplex::from_lists(4, &[&[1, 2], &[1, 3]]);
        let l = SimplicialComplex::from_lists(4, &[&[1, 2], &[2, 3]]);
        assert_eq!(lex_compare(&k, &l), LexOrder::Less);
        assert_eq!(lex_compare(&l, &k), LexOrder::Greater);
        assert_eq!(lex_compare(&k, &k), LexOrder::Equal);
        let a = SimplicialComplex::from_lists(5, &[&[1, 2, 5], &[1, 4]]);
        let b = SimplicialComplex::from_lists(5, &[&[1, 3, 4], &[1, 2]]);
        assert_eq!(lex_compare(&a, &b), LexOrder::Incomparable);
        assert!(a.contains(f(&[1, 2, 5])) && LexOrder::Less.is_le());
    }
}
