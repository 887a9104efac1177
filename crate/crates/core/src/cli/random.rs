//! Seeded instance generators and exhaustive enumeration of small complexes.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{dominates, Face, KSubsets, SimplicialComplex};
use crate::operators::cone;

/// Independent stream for instance `index` of a run seeded with `seed`.
pub fn instance_seed(seed: u64, index: usize) -> u64 {
    // splitmix64 finalizer
    let mut z = seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(instance_seed(seed, index))
}

fn random_face<R: Rng>(rng: &mut R, ground: &[u32], size: usize) -> Face {
    Face::new(ground.choose_multiple(rng, size.min(ground.len())).copied()).expect("labels in range")
}

/// Closure of `1..=n` random facets of size `1..=max_size` on `[n]`.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, max_size: usize) -> SimplicialComplex {
    let ground: Vec<u32> = (1..=n as u32).collect();
    let count = rng.gen_range(1..=n.max(1));
    let facets: Vec<Face> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(n).max(1));
            random_face(rng, &ground, size)
        })
        .collect();
    SimplicialComplex::from_facets(n, facets).expect("facets in range")
}

/// A random complex on `[n]` whose vertices are exactly `[n]`.
pub fn random_spanning_complex<R: Rng>(rng: &mut R, n: usize, max_size: usize) -> SimplicialComplex {
    let k = random_complex(rng, n, max_size);
    let missing = Face::initial(n) - k.vertex_set();
    let facets = k.facets().into_iter().chain(missing.vertices().map(Face::singleton));
    SimplicialComplex::from_facets(n, facets).expect("facets in range")
}

/// Shifted closure of a few random generators on `[n]`.
pub fn random_shifted<R: Rng>(rng: &mut R, n: usize, max_size: usize) -> SimplicialComplex {
    let ground: Vec<u32> = (1..=n as u32).collect();
    let count = rng.gen_range(1..=3);
    let mut facets = HashSet::new();
    for _ in 0..count {
        let size = rng.gen_range(1..=max_size.min(n).max(1));
        let g = random_face(rng, &ground, size);
        let top = g.max().unwrap() as usize;
        facets.extend(KSubsets::new(top, size).filter(|&t| dominates(t, g).unwrap()));
    }
    let k = SimplicialComplex::from_facets(n, facets).expect("facets in range");
    debug_assert!(k.is_shifted());
    k
}

/// A near cone with respect to vertex 1 on `[n]`: the cone over a random
/// complex on `2..=n`, plus some faces of that complex's missing faces
/// (sets not in it whose boundary is).
pub fn random_near_cone<R: Rng>(rng: &mut R, n: usize, max_size: usize) -> SimplicialComplex {
    let base = random_complex(rng, n.saturating_sub(1), max_size.saturating_sub(1).max(1));
    let coned = cone(&base).expect("fits");
    let mut faces: Vec<Face> = coned.faces().collect();
    for size in 2..=max_size.min(n.saturating_sub(1)) {
        for s in KSubsets::of(Face::range(2, n as u32), size) {
            let below = s.shifted_down(1);
            if !base.contains(below) && below.boundary().all(|b| base.contains(b)) && rng.gen_bool(0.5) {
                faces.push(s);
            }
        }
    }
    let k = SimplicialComplex::from_facets(n, faces).expect("fits");
    debug_assert!(crate::operators::is_near_cone(&k, 1));
    k
}

/// A uniformly random bijection of `[n]`, as `map[v - 1]`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<u32> {
    let mut map: Vec<u32> = (1..=n as u32).collect();
    map.shuffle(rng);
    map
}

/// Every complex (downward closed, containing `∅`) on ambient `[n]`, `n ≤ 5`.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!(n <= 5, "exhaustive enumeration is limited to 5 vertices");
    let mut order: Vec<Face> = (1u64..1 << n).map(Face::from_bits).collect();
    order.sort_unstable();
    let mut out = Vec::new();
    let mut chosen = HashSet::from([Face::EMPTY]);
    extend_downsets(n, &order, 0, &mut chosen, &mut out);
    out
}

/// Decides each face in (size, lex) order; a face may be taken only when its
/// whole boundary already is.
fn extend_downsets(
    n: usize,
    order: &[Face],
    next: usize,
    chosen: &mut HashSet<Face>,
    out: &mut Vec<SimplicialComplex>,
) {
    let Some(&face) = order.get(next) else {
        out.push(SimplicialComplex::from_facets(n, chosen.iter().copied()).unwrap());
        return;
    };
    extend_downsets(n, order, next + 1, chosen, out);
    if face.boundary().all(|b| chosen.contains(&b)) {
        chosen.insert(face);
        extend_downsets(n, order, next + 1, chosen, out);
        chosen.remove(&face);
    }
}

/// One representative per isomorphism class of complexes whose vertex set is
/// exactly `[m]`, for every `m ≤ max_vertices` (`≤ 5`); includes `{∅}`.
pub fn complex_classes(max_vertices: usize) -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    for m in 0..=max_vertices {
        let perms = permutations(m);
        let mut seen = HashSet::new();
        for k in all_complexes(m) {
            if k.num_vertices() != m {
                continue;
            }
            let canon = perms
                .iter()
                .map(|p| {
                    let mut faces: Vec<u64> = k.faces().map(|f| f.map_vertices(p).bits()).collect();
                    faces.sort_unstable();
                    faces
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push(k);
            }
        }
    }
    out
}

fn permutations(m: usize) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, m as u32);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_small_complexes() {
        // downsets of the Boolean lattice containing ∅: one less than the
        // number of antichains
        assert_eq!(all_complexes(2).len(), 5);
        assert_eq!(all_complexes(3).len(), 19);
        assert_eq!(all_complexes(4).len(), 167);
        assert_eq!(all_complexes(5).len(), 7580);
        // classes with exactly m vertices: 1, 1, 2, 5, 20
        assert_eq!(complex_classes(4).len(), 29);
    }

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = instance_rng(3, 0);
        for n in 1..=9 {
            let k = random_complex(&mut rng, n, 4);
            assert!(k.is_downward_closed() && k.n() == n);
            assert_eq!(random_spanning_complex(&mut rng, n, 3).num_vertices(), n);
            assert!(random_shifted(&mut rng, n, 4).is_shifted());
            assert!(crate::operators::is_near_cone(&random_near_cone(&mut rng, n, 4), 1));
        }
        let mut p = random_permutation(&mut rng, 6);
        p.sort_unstable();
        assert_eq!(p, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn instance_streams_differ() {
        assert_ne!(instance_seed(1, 0), instance_seed(1, 1));
        assert_eq!(instance_seed(1, 7), instance_seed(1, 7));
    }
}
