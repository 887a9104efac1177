//! Shifting of unions without linear algebra, via the gap test
//! `S ∈ Δ ⇔ s_k − s_{k−1} ≤ D(S)` where `D(S) = |I¹_{init_{k−1}(S)} ∩ Δ|`.

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// `D(S) = |I¹_{init_{|S|−1}(S)}(n) ∩ Δ|` for a shifted `Δ`.
pub fn d_value(delta: &SimplicialComplex, s: Face, n: usize) -> Result<usize> {
    if !delta.is_shifted() {
        return Err(Error::NotShifted);
    }
    if s.is_empty() {
        return Err(Error::EmptyFace);
    }
    Ok(prefix_d(delta, s.without(s.max().unwrap()), n))
}

/// Number of `t ≤ n` above `max(A)` with `A ∪ {t} ∈ Δ`.
fn prefix_d(delta: &SimplicialComplex, a: Face, n: usize) -> usize {
    let top = a.max().unwrap_or(0);
    delta
        .faces_of_size(a.len() + 1)
        .iter()
        .filter(|&&f| {
            let m = f.max().unwrap();
            m as usize <= n && f.without(m) == a && m > top
        })
        .count()
}

/// `D_{<[d+1]>}(A ∪ t)`: the simplex `[d+1]` contributes the vertices above
/// `max(A)` it still has room for.
fn simplex_d(d: isize, a: Face) -> usize {
    let size = (d + 1) as u32;
    if a.is_subset(Face::initial(size as usize)) {
        (size - a.max().unwrap_or(0)) as usize
    } else {
        0
    }
}

/// Builds the shifted complex on `[n]` whose members are decided by the gap
/// test with `D(A ∪ t) = d_total(A)`.
fn gap_complex(n: usize, has_empty: bool, d_total: impl Fn(Face) -> usize) -> SimplicialComplex {
    if !has_empty {
        return SimplicialComplex::empty(n);
    }
    let mut faces = vec![Face::EMPTY];
    let mut frontier = vec![Face::EMPTY];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            let lo = a.max().unwrap_or(0) + 1;
            let hi = (a.max().unwrap_or(0) as usize + d_total(a)).min(n) as u32;
            next.extend((lo..=hi).map(|t| a.with(t)));
        }
        faces.extend_from_slice(&next);
        frontier = next;
    }
    SimplicialComplex::from_closed_set(n, faces)
}

fn require_shifted(cs: &[&SimplicialComplex]) -> Result<()> {
    if cs.iter().all(|c| c.is_shifted()) {
        Ok(())
    } else {
        Err(Error::NotShifted)
    }
}

/// `Δ(K ∪̇ L)` from `Δ(K)` and `Δ(L)` alone, on ambient `[n]`.
pub fn disjoint_union_shift(dk: &SimplicialComplex, dl: &SimplicialComplex, n: usize) -> Result<SimplicialComplex> {
    require_shifted(&[dk, dl])?;
    Ok(gap_complex(n, !(dk.is_empty() && dl.is_empty()), |a| prefix_d(dk, a, n) + prefix_d(dl, a, n)))
}

/// `Δ(K ∪_σ L)` for any gluing of `K` and `L` along a `d`-simplex `σ`, from
/// `Δ(K)`, `Δ(L)` and `d` alone. `d = −1` is the disjoint union.
pub fn clique_sum_shift(dk: &SimplicialComplex, dl: &SimplicialComplex, d: isize, n: usize) -> Result<SimplicialComplex> {
    require_shifted(&[dk, dl])?;
    if d < -1 || d > dk.dim() || d > dl.dim() {
        return Err(Error::SimplexTooLarge { d });
    }
    Ok(gap_complex(n, true, |a| {
        prefix_d(dk, a, n) + prefix_d(dl, a, n) - simplex_d(d, a)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn d_values() {
        let edge = SimplicialComplex::from_lists(4, &[&[1, 2]]);
        assert_eq!(d_value(&edge, f(&[1, 3]), 4), Ok(1));
        assert_eq!(d_value(&edge, f(&[1, 2]), 4), Ok(1));
        let tri = SimplicialComplex::simplex(3, 3);
        assert_eq!(d_value(&tri, f(&[2, 3]), 3), Ok(1));
        assert_eq!(d_value(&tri, f(&[1]), 3), Ok(3));
        let path = SimplicialComplex::from_lists(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(d_value(&path, f(&[1]), 3), Err(Error::NotShifted));
        assert_eq!(d_value(&tri, Face::EMPTY, 3), Err(Error::EmptyFace));
    }

    #[test]
    fn two_edges() {
        let edge = SimplicialComplex::from_lists(2, &[&[1, 2]]);
        let out = disjoint_union_shift(&edge, &edge, 4).unwrap();
        assert_eq!(out, SimplicialComplex::from_lists(4, &[&[1, 2], &[1, 3], &[4]]));
        assert_eq!(disjoint_union_shift(&edge, &SimplicialComplex::empty(0), 2).unwrap(), edge);
    }

    #[test]
    fn triangles_on_an_edge() {
        let tri = SimplicialComplex::simplex(3, 3);
        let out = clique_sum_shift(&tri, &tri, 1, 4).unwrap();
        assert_eq!(out, SimplicialComplex::from_lists(4, &[&[1, 2, 3], &[1, 2, 4]]));
        assert_eq!(clique_sum_shift(&tri, &tri, 3, 4), Err(Error::SimplexTooLarge { d: 3 }));
    }

    #[test]
    fn clique_sum_degenerations() {
        let k = SimplicialComplex::from_lists(4, &[&[1, 2, 3], &[1, 4]]);
        let tri = SimplicialComplex::simplex(3, 3);
        assert_eq!(clique_sum_shift(&k, &tri, 2, 4).unwrap(), k);
        let edge = SimplicialComplex::from_lists(2, &[&[1, 2]]);
        assert_eq!(clique_sum_shift(&edge, &edge, -1, 4), disjoint_union_shift(&edge, &edge, 4));
    }
}
