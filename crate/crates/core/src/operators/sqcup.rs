//! The recursive description `K ⊔ L` of `Δ(K ∪̇ L)` for shifted `K`, `L`:
//! faces through vertex 1 come from the links of 1, the rest from the
//! antistars of 1.

use std::collections::HashMap;

use super::construct::{antistar_unchecked, link_unchecked};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// `K ⊔ L` for shifted `K`, `L`, evaluated with memoization.
pub fn shifted_union_recursive(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    if !k.is_shifted() || !l.is_shifted() {
        return Err(Error::NotShifted);
    }
    let mut memo = HashMap::new();
    let out = sqcup(k, l, &mut memo);
    out.with_ambient((k.n() + l.n()).max(out.num_vertices()))
}

type Memo = HashMap<(SimplicialComplex, SimplicialComplex), SimplicialComplex>;

fn sqcup(k: &SimplicialComplex, l: &SimplicialComplex, memo: &mut Memo) -> SimplicialComplex {
    let (kv, lv) = (k.num_vertices(), l.num_vertices());
    if l.is_empty() || (lv == 0 && !k.is_empty()) {
        return k.clone();
    }
    if k.is_empty() || kv == 0 {
        return l.clone();
    }
    let key = (k.clone(), l.clone());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let apex = Face::singleton(1);
    let down = |c: SimplicialComplex| {
        let n = c.n();
        SimplicialComplex::from_closed_set(n, c.faces().map(|f| f.shifted_down(1)))
    };
    let x = sqcup(&down(link_unchecked(apex, k)), &down(link_unchecked(apex, l)), memo);
    let y = sqcup(&down(antistar_unchecked(apex, k)), &down(antistar_unchecked(apex, l)), memo);

    let n = kv + lv;
    let mut faces: Vec<Face> = vec![Face::EMPTY];
    faces.extend((1..=n as u32).map(Face::singleton));
    faces.extend(x.faces().filter(|f| !f.is_empty()).map(|f| f.shifted_up(1).with(1)));
    faces.extend(y.faces().filter(|f| f.len() >= 2).map(|f| f.shifted_up(1)));
    let out = SimplicialComplex::from_closed_set(n, faces);
    memo.insert(key, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::disjoint_union_shift;

    #[test]
    fn base_cases() {
        let k = SimplicialComplex::from_lists(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(shifted_union_recursive(&k, &SimplicialComplex::empty(0)).unwrap(), k);
        assert_eq!(shifted_union_recursive(&SimplicialComplex::void(0), &k).unwrap(), k);
        let p = SimplicialComplex::points(1);
        assert_eq!(shifted_union_recursive(&p, &p).unwrap(), SimplicialComplex::points(2));
    }

    #[test]
    fn agrees_with_gap_test() {
        let edge = SimplicialComplex::from_lists(2, &[&[1, 2]]);
        let tri = SimplicialComplex::simplex(3, 3);
        let star = SimplicialComplex::from_lists(4, &[&[1, 2, 3], &[1, 4]]);
        for (a, b) in [(&edge, &edge), (&tri, &edge), (&star, &tri), (&star, &star)] {
            let n = a.n() + b.n();
            assert_eq!(shifted_union_recursive(a, b).unwrap(), disjoint_union_shift(a, b, n).unwrap());
        }
    }

    #[test]
    fn rejects_unshifted() {
        let path = SimplicialComplex::from_lists(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(shifted_union_recursive(&path, &path), Err(Error::NotShifted));
    }
}
