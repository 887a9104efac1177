use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex label.
pub const MAX_VERTICES: usize = 64;

/// A finite set of vertices drawn from `1..=64`, stored as a bit set.
///
/// Bit `v - 1` is set iff vertex `v` belongs to the face. The derived order is
/// the one used for every face family in the crate: by cardinality first, then
/// lexicographically (the face whose smallest differing vertex it owns comes
/// first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a face from vertex labels; duplicates collapse.
    pub fn new<I: IntoIterator<Item = u32>>(vertices: I) -> Result<Face> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v as usize > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { label: v as u64, n: MAX_VERTICES });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Face(bits))
    }

    /// `{1, ..., k}`.
    pub fn initial(k: usize) -> Face {
        assert!(k <= MAX_VERTICES);
        if k == 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << k) - 1)
        }
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: u32, hi: u32) -> Face {
        if lo > hi || hi == 0 {
            return Face::EMPTY;
        }
        let lo = lo.max(1);
        Face(Face::initial(hi as usize).0 & !Face::initial(lo as usize - 1).0)
    }

    pub fn singleton(v: u32) -> Face {
        debug_assert!(v >= 1 && v as usize <= MAX_VERTICES);
        Face(1 << (v - 1))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        v >= 1 && v as usize <= MAX_VERTICES && self.0 & (1 << (v - 1)) != 0
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.vertices().collect()
    }

    pub fn with(self, v: u32) -> Face {
        self | Face::singleton(v)
    }

    pub fn without(self, v: u32) -> Face {
        Face(self.0 & !Face::singleton(v).0)
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    /// Number of elements of `self` strictly below `v`.
    pub fn count_below(self, v: u32) -> usize {
        (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize
    }

    /// Number of elements of `self` strictly above `v`.
    pub fn count_above(self, v: u32) -> usize {
        if v >= 64 {
            0
        } else {
            (self.0 >> v).count_ones() as usize
        }
    }

    /// Adds `offset` to every label. Panics if a label leaves `1..=64`.
    pub fn shifted_up(self, offset: u32) -> Face {
        if offset == 0 || self.is_empty() {
            return self;
        }
        assert!(self.max().unwrap() + offset <= 64, "relabeling overflows 64 vertices");
        Face(self.0 << offset)
    }

    /// Subtracts `offset` from every label. Panics if a label drops below 1.
    pub fn shifted_down(self, offset: u32) -> Face {
        if offset == 0 || self.is_empty() {
            return self;
        }
        assert!(self.min().unwrap() > offset, "relabeling underflows vertex 1");
        Face(self.0 >> offset)
    }

    /// Applies a vertex map given as `map[v - 1]`.
    pub fn map_vertices(self, map: &[u32]) -> Face {
        let mut bits = 0u64;
        for v in self.vertices() {
            bits |= 1 << (map[v as usize - 1] - 1);
        }
        Face(bits)
    }

    /// Lexicographic comparison of two faces of equal size: `Less` when the
    /// minimum of the symmetric difference lies in `self`.
    pub fn lex_cmp(self, other: Face) -> Ordering {
        other.0.reverse_bits().cmp(&self.0.reverse_bits())
    }

    /// The `j` smallest vertices.
    pub fn init(self, j: usize) -> Result<Face> {
        if j > self.len() {
            return Err(Error::PrefixTooLong { j, size: self.len() });
        }
        let mut bits = self.0;
        let mut out = 0u64;
        for _ in 0..j {
            let low = bits & bits.wrapping_neg();
            out |= low;
            bits ^= low;
        }
        Ok(Face(out))
    }

    /// All subsets, in no particular order.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut sub = Some(full);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(Face(cur))
        })
    }

    /// Subsets obtained by deleting exactly one vertex.
    pub fn boundary(self) -> impl Iterator<Item = Face> {
        self.vertices().map(move |v| self.without(v))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::BitOr for Face {
    type Output = Face;
    fn bitor(self, rhs: Face) -> Face {
        Face(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for Face {
    type Output = Face;
    fn bitand(self, rhs: Face) -> Face {
        Face(self.0 & rhs.0)
    }
}

impl std::ops::Sub for Face {
    type Output = Face;
    fn sub(self, rhs: Face) -> Face {
        Face(self.0 & !rhs.0)
    }
}

impl std::ops::BitXor for Face {
    type Output = Face;
    fn bitxor(self, rhs: Face) -> Face {
        Face(self.0 ^ rhs.0)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl From<Face> for Vec<u32> {
    fn from(face: Face) -> Self {
        face.to_vec()
    }
}

impl TryFrom<Vec<u32>> for Face {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Face::new(v)
    }
}

/// Iterator over the vertices of a face in increasing order.
#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// `true` iff `s <_L t`.
pub fn lex_less(s: Face, t: Face) -> Result<bool> {
    check_same_size(s, t)?;
    Ok(s.lex_cmp(t) == Ordering::Less)
}

/// `true` iff the i-th smallest element of `s` is at most that of `t`, for all i.
pub fn dominates(s: Face, t: Face) -> Result<bool> {
    check_same_size(s, t)?;
    Ok(s.vertices().zip(t.vertices()).all(|(a, b)| a <= b))
}

fn check_same_size(s: Face, t: Face) -> Result<()> {
    if s.len() != t.len() {
        return Err(Error::CardinalityMismatch { left: s.len(), right: t.len() });
    }
    Ok(())
}

/// The `j` lexicographically least elements of `s`.
pub fn init(s: Face, j: usize) -> Result<Face> {
    s.init(j)
}

/// `I_S^i(n)`: the `|S| + i`-subsets of `[n]` whose `|S|` least elements are
/// `S`, in lex order. Empty when no such set fits in `[n]`.
pub fn interval(s: Face, i: usize, n: usize) -> Result<Vec<Face>> {
    if i == 0 {
        return Err(Error::NonPositiveStep);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let start = s.max().unwrap_or(0);
    if s.max().is_some_and(|m| m as usize > n) {
        return Ok(Vec::new());
    }
    let free = Face::range(start + 1, n as u32);
    Ok(KSubsets::of(free, i).map(|u| s | u).collect())
}

/// Lex-ordered enumeration of the `k`-subsets of a ground set.
#[derive(Clone, Debug)]
pub struct KSubsets {
    ground: Vec<u32>,
    idx: Vec<usize>,
    done: bool,
}

impl KSubsets {
    /// `k`-subsets of `[n]`.
    pub fn new(n: usize, k: usize) -> KSubsets {
        KSubsets::of(Face::initial(n.min(MAX_VERTICES)), k)
    }

    /// `k`-subsets of the vertices of `ground`.
    pub fn of(ground: Face, k: usize) -> KSubsets {
        let ground = ground.to_vec();
        let done = k > ground.len();
        KSubsets { ground, idx: (0..k).collect(), done }
    }
}

impl Iterator for KSubsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        if self.done {
            return None;
        }
        let mut bits = 0u64;
        for &i in &self.idx {
            bits |= 1 << (self.ground[i] - 1);
        }
        let m = self.ground.len();
        let k = self.idx.len();
        // advance to the next index combination
        let mut pos = k;
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            if self.idx[pos] < m - k + pos {
                self.idx[pos] += 1;
                for q in pos + 1..k {
                    self.idx[q] = self.idx[q - 1] + 1;
                }
                break;
            }
        }
        Some(Face(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn lex_examples() {
        assert!(lex_less(f(&[1, 4]), f(&[2, 3])).unwrap());
        assert!(!lex_less(f(&[2, 3]), f(&[2, 3])).unwrap());
        assert!(!lex_less(f(&[1, 3]), f(&[1, 2])).unwrap());
        assert!(lex_less(f(&[1]), f(&[1, 2])).is_err());
    }

    #[test]
    fn domination_examples() {
        assert!(dominates(f(&[1, 3]), f(&[2, 3])).unwrap());
        assert!(!dominates(f(&[1, 4]), f(&[2, 3])).unwrap());
        assert!(dominates(f(&[2, 5]), f(&[2, 5])).unwrap());
        assert!(dominates(f(&[2]), f(&[2, 5])).is_err());
    }

    #[test]
    fn init_and_interval() {
        assert_eq!(init(f(&[2, 4, 7]), 2).unwrap(), f(&[2, 4]));
        assert!(init(f(&[2]), 2).is_err());
        assert_eq!(
            interval(f(&[1]), 1, 4).unwrap(),
            vec![f(&[1, 2]), f(&[1, 3]), f(&[1, 4])]
        );
        assert_eq!(interval(f(&[2]), 2, 4).unwrap(), vec![f(&[2, 3, 4])]);
        assert!(interval(f(&[3]), 2, 4).unwrap().is_empty());
        assert_eq!(interval(f(&[1]), 0, 4), Err(Error::NonPositiveStep));
    }

    #[test]
    fn k_subsets_are_lex_ordered() {
        let all: Vec<Face> = KSubsets::new(5, 3).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], f(&[1, 2, 3]));
        assert_eq!(all[9], f(&[3, 4, 5]));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(KSubsets::new(3, 0).collect::<Vec<_>>(), vec![Face::EMPTY]);
        assert_eq!(KSubsets::new(2, 3).count(), 0);
    }

    #[test]
    fn bit_helpers() {
        let s = f(&[2, 5, 9]);
        assert_eq!(s.min(), Some(2));
        assert_eq!(s.max(), Some(9));
        assert_eq!(s.count_below(6), 2);
        assert_eq!(s.count_above(2), 2);
        assert_eq!(s.shifted_up(3), f(&[5, 8, 12]));
        assert_eq!(s.shifted_down(1), f(&[1, 4, 8]));
        assert_eq!(s.subsets().count(), 8);
        assert_eq!(Face::range(3, 5), f(&[3, 4, 5]));
        assert_eq!(Face::initial(64).len(), 64);
        assert_eq!(s.to_string(), "{2,5,9}");
    }
}
