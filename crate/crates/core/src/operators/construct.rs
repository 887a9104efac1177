use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// A construction for [`combine`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    DisjointUnion,
    Union,
    Join,
    Cone,
    Suspension,
    Link(Face),
    Antistar(Face),
}

impl Construction {
    pub fn arity(&self) -> usize {
        match self {
            Construction::DisjointUnion | Construction::Union | Construction::Join => 2,
            _ => 1,
        }
    }
}

/// Applies `kind` to `k` (and `l` for binary constructions).
///
/// Disjoint union and join place the second operand's vertices above the
/// first's ambient range; the cone apex is vertex 1 with `K` moved up by one.
pub fn combine(kind: &Construction, k: &SimplicialComplex, l: Option<&SimplicialComplex>) -> Result<SimplicialComplex> {
    let second = || l.ok_or_else(|| Error::Usage("construction needs a second operand".into()));
    match kind {
        Construction::DisjointUnion => disjoint_union(k, second()?),
        Construction::Union => Ok(union(k, second()?)),
        Construction::Join => join(k, second()?),
        Construction::Cone => cone(k),
        Construction::Suspension => suspension(k),
        Construction::Link(s) => link(*s, k),
        Construction::Antistar(s) => antistar(*s, k),
    }
}

/// `K ∪̇ L` with `L` relabeled to `n_K + 1 ..= n_K + n_L`.
pub fn disjoint_union(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    let moved = l.shifted_up(k.n() as u32)?;
    Ok(union(&k.with_ambient(moved.n())?, &moved))
}

/// Union of two complexes given on a common labeling; errors if their vertex
/// supports meet.
pub fn disjoint_union_same_labels(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    if !k.vertex_set().is_disjoint(l.vertex_set()) {
        return Err(Error::OverlappingSupports);
    }
    Ok(union(k, l))
}

/// Face-wise union on a common labeling.
pub fn union(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    SimplicialComplex::from_closed_set(k.n().max(l.n()), k.faces().chain(l.faces()))
}

/// Face-wise intersection on a common labeling.
pub fn intersection(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    SimplicialComplex::from_closed_set(k.n().max(l.n()), k.faces().filter(|&f| l.contains(f)))
}

/// `K * L = {S ∪ T}` with `L` relabeled above `K`.
pub fn join(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    let moved = l.shifted_up(k.n() as u32)?;
    join_same_labels(&k.with_ambient(moved.n())?, &moved)
}

/// `K * L` on a common labeling; supports must be disjoint.
pub fn join_same_labels(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    if !k.vertex_set().is_disjoint(l.vertex_set()) {
        return Err(Error::OverlappingSupports);
    }
    let faces: Vec<Face> = k.faces().flat_map(|s| l.faces().map(move |t| s | t)).collect();
    Ok(SimplicialComplex::from_closed_set(k.n().max(l.n()), faces))
}

/// `1 * K`: a new apex 1 with `K` moved up by one.
pub fn cone(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    join(&SimplicialComplex::points(1), k)
}

/// `Σ K = K * {two points}`, the points taking labels `n + 1`, `n + 2`.
pub fn suspension(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    join(k, &SimplicialComplex::points(2))
}

/// `lk(S, K) = {T ∈ K : T ∩ S = ∅, T ∪ S ∈ K}`.
pub fn link(s: Face, k: &SimplicialComplex) -> Result<SimplicialComplex> {
    if !k.contains(s) {
        return Err(Error::FaceNotInComplex(s));
    }
    Ok(link_unchecked(s, k))
}

/// `ast(S, K) = {T ∈ K : T ∩ S = ∅}`.
pub fn antistar(s: Face, k: &SimplicialComplex) -> Result<SimplicialComplex> {
    if !k.contains(s) {
        return Err(Error::FaceNotInComplex(s));
    }
    Ok(antistar_unchecked(s, k))
}

pub(crate) fn link_unchecked(s: Face, k: &SimplicialComplex) -> SimplicialComplex {
    SimplicialComplex::from_closed_set(k.n(), k.faces().filter(|&t| t.is_disjoint(s) && k.contains(t | s)))
}

pub(crate) fn antistar_unchecked(s: Face, k: &SimplicialComplex) -> SimplicialComplex {
    SimplicialComplex::from_closed_set(k.n(), k.faces().filter(|&t| t.is_disjoint(s)))
}
