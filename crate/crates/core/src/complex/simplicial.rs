use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use super::face::{dominates, Face, KSubsets, MAX_VERTICES};
use crate::error::{Error, Result};

/// Face counts `f_{-1}, f_0, ..., f_dim` (index 0 holds `f_{-1}`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `f_i`, with `i = -1` for the empty face.
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1).ok().and_then(|i| self.0.get(i).copied()).unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// A downward-closed family of faces on the ambient vertex set `[n]`.
///
/// Faces are grouped by cardinality and kept in lex order inside each group.
/// Equality and hashing look only at the faces, not at `n`.
#[derive(Clone)]
pub struct SimplicialComplex {
    n: usize,
    levels: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    /// Downward closure of `facets` on `[n]`.
    pub fn from_facets<I: IntoIterator<Item = Face>>(n: usize, facets: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let bound = Face::initial(n);
        let mut faces = HashSet::new();
        for facet in facets {
            if !facet.is_subset(bound) {
                let bad = (facet - bound).max().unwrap();
                return Err(Error::VertexOutOfRange { label: bad as u64, n });
            }
            if faces.contains(&facet) {
                continue;
            }
            for sub in facet.subsets() {
                faces.insert(sub);
            }
        }
        Ok(Self::from_closed_set(n, faces))
    }

    /// Convenience constructor from vertex lists; panics on bad labels.
    pub fn from_lists(n: usize, facets: &[&[u32]]) -> Self {
        let facets = facets.iter().map(|f| Face::new(f.iter().copied()).expect("vertex label"));
        Self::from_facets(n, facets).expect("facets must lie in [n]")
    }

    /// The complete complex `2^[m]` on ambient `[n]`.
    pub fn simplex(n: usize, m: usize) -> Self {
        Self::from_facets(n, [Face::initial(m)]).expect("simplex fits")
    }

    /// `m` isolated points on ambient `[m]`.
    pub fn points(m: usize) -> Self {
        Self::from_facets(m, (1..=m as u32).map(Face::singleton)).expect("points fit")
    }

    /// The complex with no faces at all.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n, levels: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, levels: vec![vec![Face::EMPTY]] }
    }

    /// Builds from a set already known to be downward closed.
    pub(crate) fn from_closed_set<I: IntoIterator<Item = Face>>(n: usize, faces: I) -> Self {
        let mut levels: Vec<Vec<Face>> = Vec::new();
        for f in faces {
            let k = f.len();
            if levels.len() <= k {
                levels.resize_with(k + 1, Vec::new);
            }
            levels[k].push(f);
        }
        for level in &mut levels {
            level.sort_unstable();
            level.dedup();
        }
        SimplicialComplex { n, levels }
    }

    /// Ambient vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Same faces, different ambient vertex count.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if let Some(max) = self.vertex_set().max() {
            if max as usize > n {
                return Err(Error::VertexOutOfRange { label: max as u64, n });
            }
        }
        Ok(SimplicialComplex { n, levels: self.levels.clone() })
    }

    /// `true` when the complex has no faces (not even ∅).
    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.levels
            .get(face.len())
            .is_some_and(|level| level.binary_search(&face).is_ok())
    }

    /// Faces with exactly `k` vertices, in lex order.
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        self.levels.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Position of `face` within `faces_of_size(face.len())`.
    pub fn index_of(&self, face: Face) -> Option<usize> {
        self.levels.get(face.len())?.binary_search(&face).ok()
    }

    /// All faces ordered by (cardinality, lex).
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.levels.iter().flatten().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Largest face cardinality, i.e. `dim + 1`; zero for `{∅}` and the empty complex.
    pub fn max_face_size(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// `dim = max |F| - 1`; `-1` for `{∅}`, `-2` for the empty complex.
    pub fn dim(&self) -> isize {
        self.levels.len() as isize - 2
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.levels.iter().map(Vec::len).collect())
    }

    /// The vertices actually used, `K_0`, as a face.
    pub fn vertex_set(&self) -> Face {
        self.faces_of_size(1).iter().fold(Face::EMPTY, |acc, &f| acc | f)
    }

    pub fn num_vertices(&self) -> usize {
        self.faces_of_size(1).len()
    }

    /// Inclusion-maximal faces, ordered by (cardinality, lex).
    pub fn facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for (k, level) in self.levels.iter().enumerate() {
            let above = self.levels.get(k + 1);
            for &f in level {
                let covered = above.is_some_and(|up| up.iter().any(|&g| f.is_subset(g)));
                if !covered {
                    out.push(f);
                }
            }
        }
        out
    }

    /// Applies a vertex bijection given as `map[v - 1]`, landing on ambient `[n]`.
    pub fn relabel(&self, map: &[u32], n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for v in self.vertex_set().vertices() {
            let image = *map.get(v as usize - 1).ok_or(Error::VertexOutOfRange { label: v as u64, n })?;
            if image == 0 || image as usize > n {
                return Err(Error::VertexOutOfRange { label: image as u64, n });
            }
        }
        Ok(Self::from_closed_set(n, self.faces().map(|f| f.map_vertices(map))))
    }

    /// Adds `offset` to every vertex label; ambient grows by `offset`.
    pub fn shifted_up(&self, offset: u32) -> Result<Self> {
        let n = self.n + offset as usize;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Self::from_closed_set(n, self.faces().map(|f| f.shifted_up(offset))))
    }

    /// Relabels the used vertices onto `1..=|K_0|` preserving their order.
    pub fn compacted(&self) -> Self {
        let verts = self.vertex_set();
        let mut map = vec![0u32; MAX_VERTICES];
        for (i, v) in verts.vertices().enumerate() {
            map[v as usize - 1] = i as u32 + 1;
        }
        Self::from_closed_set(verts.len(), self.faces().map(|f| f.map_vertices(&map)))
    }

    /// Closed under replacing a face by any face it dominates.
    pub fn is_shifted(&self) -> bool {
        // domination is generated by single-step moves v -> v-1 (when v-1 is free),
        // so checking those moves suffices
        self.faces().all(|f| {
            f.vertices().all(|v| v == 1 || f.contains(v - 1) || self.contains(f.without(v).with(v - 1)))
        })
    }

    /// Brute-force shiftedness check straight from the definition.
    pub fn is_shifted_by_definition(&self) -> bool {
        self.levels.iter().enumerate().all(|(k, level)| {
            level.iter().all(|&s| {
                KSubsets::new(self.n.max(s.max().unwrap_or(0) as usize), k)
                    .filter(|&t| dominates(t, s).unwrap())
                    .all(|t| self.contains(t))
            })
        })
    }

    /// Checks downward closure exhaustively.
    pub fn is_downward_closed(&self) -> bool {
        self.faces().all(|f| f.boundary().all(|g| self.contains(g)))
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels
    }
}

impl Eq for SimplicialComplex {}

impl Hash for SimplicialComplex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.levels.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=[", self.n)?;
        for (i, face) in self.facets().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{face}")?;
        }
        f.write_str("])")
    }
}

/// `true` iff `is_shifted`; free-function form.
pub fn is_shifted(k: &SimplicialComplex) -> bool {
    k.is_shifted()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn closure_of_two_edges() {
        let k = SimplicialComplex::from_lists(4, &[&[1, 2], &[3, 4]]);
        let faces: Vec<Face> = k.faces().collect();
        assert_eq!(
            faces,
            vec![Face::EMPTY, f(&[1]), f(&[2]), f(&[3]), f(&[4]), f(&[1, 2]), f(&[3, 4])]
        );
        assert_eq!(k.f_vector().0, vec![1, 4, 2]);
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn closure_of_a_simplex() {
        let k = SimplicialComplex::from_lists(3, &[&[1, 2, 3]]);
        assert_eq!(k.f_vector().0, vec![1, 3, 3, 1]);
        assert_eq!(k.facets(), vec![f(&[1, 2, 3])]);
    }

    #[test]
    fn empty_and_void() {
        let e = SimplicialComplex::from_facets(2, []).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.num_faces(), 0);
        assert_eq!(e.dim(), -2);
        let v = SimplicialComplex::from_facets(2, [Face::EMPTY]).unwrap();
        assert_eq!(v, SimplicialComplex::void(2));
        assert_eq!(v.f_vector().0, vec![1]);
        assert_ne!(e, v);
    }

    #[test]
    fn out_of_range_label() {
        let err = SimplicialComplex::from_facets(3, [f(&[1, 4])]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { label: 4, n: 3 });
        assert!(SimplicialComplex::from_facets(65, []).is_err());
    }

    #[test]
    fn shifted_examples() {
        let star = SimplicialComplex::from_lists(4, &[&[1, 2], &[1, 3]]);
        assert!(star.is_shifted());
        let path = SimplicialComplex::from_lists(3, &[&[1, 2], &[2, 3]]);
        assert!(!path.is_shifted());
        assert!(!path.is_shifted_by_definition());
        assert!(SimplicialComplex::simplex(5, 5).is_shifted());
        // shifted complex using vertex 3 but not vertex 2 is impossible
        let gap = SimplicialComplex::from_lists(3, &[&[1], &[3]]);
        assert!(!gap.is_shifted());
    }

    #[test]
    fn facets_and_relabel() {
        let k = SimplicialComplex::from_lists(5, &[&[1, 2, 3], &[3, 4], &[5]]);
        assert_eq!(k.facets(), vec![f(&[5]), f(&[3, 4]), f(&[1, 2, 3])]);
        let map = [5, 4, 3, 2, 1];
        let r = k.relabel(&map, 5).unwrap();
        assert_eq!(r.facets(), vec![f(&[1]), f(&[2, 3]), f(&[3, 4, 5])]);
        let c = SimplicialComplex::from_lists(9, &[&[3, 7], &[9]]).compacted();
        assert_eq!(c.facets(), vec![f(&[3]), f(&[1, 2])]);
        assert_eq!(c.n(), 3);
    }
}
