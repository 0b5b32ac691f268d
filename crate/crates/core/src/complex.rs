//! Simplicial complexes over `{1, ..., n}` and the dictionary between a
//! complex and the supports of the minimal generators of its Stanley-Reisner
//! ideal (its minimal nonfaces).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{maximal_members, VertexSet};

/// A simplicial complex given by its facets.
///
/// `n` is the ambient label bound; `vertices` is the actual vertex set of the
/// complex. For complexes built with [`SimplicialComplex::from_facets`] the
/// two coincide (every vertex of `{1..n}` must appear in a facet), but links
/// and cores live on a proper subset of `{1..n}` and keep their original
/// labels.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    vertices: VertexSet,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex on `{1..n}` from a list of faces; non-maximal input
    /// faces are absorbed. Every vertex must occur in some face unless
    /// `fill_singletons` is set, in which case missing vertices become
    /// singleton facets.
    pub fn from_facets<I>(n: usize, facets: I, fill_singletons: bool) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let full = VertexSet::full(n);
        let mut sets = Vec::new();
        for f in facets {
            if f.is_empty() {
                return Err(Error::EmptyFacet);
            }
            if !f.is_subset_of(full) {
                let v = f.difference(full).min().unwrap();
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            sets.push(f);
        }
        let covered = sets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        if covered != full {
            if fill_singletons {
                for v in full.difference(covered).iter() {
                    sets.push(VertexSet::singleton(v));
                }
            } else {
                let v = full.difference(covered).min().unwrap();
                return Err(Error::UncoveredVertex { vertex: v });
            }
        }
        Ok(SimplicialComplex {
            n,
            vertices: full,
            facets: maximal_members(sets),
        })
    }

    /// The full simplex on `{1..n}` (the zero ideal).
    pub fn full_simplex(n: usize) -> Self {
        let full = VertexSet::full(n);
        SimplicialComplex {
            n,
            vertices: full,
            facets: if n == 0 { vec![VertexSet::EMPTY] } else { vec![full] },
        }
    }

    /// The empty complex (no faces at all); only meaningful as the n = 0
    /// degenerate value.
    pub fn empty() -> Self {
        SimplicialComplex {
            n: 0,
            vertices: VertexSet::EMPTY,
            facets: Vec::new(),
        }
    }

    /// Internal constructor for complexes on a vertex subset (links, cores).
    /// `facets` must already be a nonempty antichain within `vertices`.
    pub(crate) fn on_subset(n: usize, vertices: VertexSet, facets: Vec<VertexSet>) -> Self {
        debug_assert!(!facets.is_empty());
        debug_assert!(facets.iter().all(|f| f.is_subset_of(vertices)));
        SimplicialComplex {
            n,
            vertices,
            facets: maximal_members(facets),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Dimension: one less than the largest facet size; -1 for the complex
    /// `{∅}` and for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_face(&self, face: VertexSet) -> bool {
        !self.facets.is_empty() && self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces, including the empty face (unless the complex is empty).
    pub fn faces(&self) -> Vec<VertexSet> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        self.vertices
            .subsets()
            .filter(|s| self.is_face(*s))
            .collect()
    }

    /// Faces of dimension `k` (cardinality `k + 1`).
    pub fn faces_of_dim(&self, k: isize) -> Vec<VertexSet> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        self.vertices
            .subsets()
            .filter(|s| s.len() == size && self.is_face(*s))
            .collect()
    }

    /// Number of faces of each dimension, from -1 up to `dim`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim() + 2) as usize];
        for f in self.faces() {
            counts[f.len()] += 1;
        }
        counts
    }

    /// The inclusion-minimal nonfaces within the complex's vertex set; these
    /// are the supports of the minimal generators of the Stanley-Reisner
    /// ideal. All members have size >= 2 because every vertex is a face.
    pub fn minimal_nonfaces(&self) -> SupportFamily {
        let mut members = Vec::new();
        for s in self.vertices.subsets() {
            if s.len() < 2 || self.is_face(s) {
                continue;
            }
            // minimal: every proper subset one vertex smaller is a face
            if s.iter().all(|v| self.is_face(s.without(v))) {
                members.push(s);
            }
        }
        SupportFamily {
            n: self.n,
            members,
        }
    }

    /// `lk(F) = {G : G ∪ F ∈ Δ, G ∩ F = ∅}`, carried with original labels.
    pub fn link(&self, face: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(face) {
            return Err(Error::NotAFace(face));
        }
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(**f))
            .map(|f| f.difference(face))
            .collect();
        let vertices = facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        Ok(SimplicialComplex::on_subset(self.n, vertices, facets))
    }

    /// `star(F) = {G : G ∪ F ∈ Δ}`, a subcomplex of Δ.
    pub fn star(&self, face: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(face) {
            return Err(Error::NotAFace(face));
        }
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(**f))
            .copied()
            .collect();
        let vertices = facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        Ok(SimplicialComplex::on_subset(self.n, vertices, facets))
    }

    /// Vertices whose star is a proper subcomplex, i.e. the complement of the
    /// intersection of all facets.
    pub fn core_vertices(&self) -> VertexSet {
        let common = self
            .facets
            .iter()
            .fold(self.vertices, |a, f| a.intersection(*f));
        self.vertices.difference(common)
    }

    /// `(core vertices, core Δ)`; the core is the restriction of Δ to the
    /// vertices that are not cone points.
    pub fn core(&self) -> (VertexSet, SimplicialComplex) {
        let core_v = self.core_vertices();
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| f.intersection(core_v))
            .collect();
        (core_v, SimplicialComplex::on_subset(self.n, core_v, facets))
    }

    /// Join of two complexes on disjoint vertex sets: faces are unions.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let overlap = self.vertices.intersection(other.vertices);
        if !overlap.is_empty() {
            return Err(Error::OverlappingJoin(overlap));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.union(*g));
            }
        }
        Ok(SimplicialComplex::on_subset(
            self.n.max(other.n),
            self.vertices.union(other.vertices),
            facets,
        ))
    }

    /// True iff all facets have the same cardinality.
    pub fn is_pure(&self) -> bool {
        match self.facets.split_first() {
            None => true,
            Some((first, rest)) => rest.iter().all(|f| f.len() == first.len()),
        }
    }
}

/// An antichain of >= 2-element subsets of `{1..n}`: the supports of the
/// minimal generators of a square-free monomial ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SupportFamily {
    n: usize,
    members: Vec<VertexSet>,
}

impl SupportFamily {
    /// Validates membership sizes, range and the antichain condition. The
    /// empty family (zero ideal) is allowed.
    pub fn new<I>(n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let full = VertexSet::full(n);
        let mut sets: Vec<VertexSet> = Vec::new();
        for s in members {
            if s.len() < 2 {
                return Err(Error::SingletonMember(s));
            }
            if !s.is_subset_of(full) {
                let v = s.difference(full).min().unwrap();
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            sets.push(s);
        }
        sets.sort_unstable();
        sets.dedup();
        for a in &sets {
            for b in &sets {
                if a.is_proper_subset_of(*b) {
                    return Err(Error::NotAntichain {
                        inner: *a,
                        outer: *b,
                    });
                }
            }
        }
        Ok(SupportFamily { n, members: sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        self.contains(VertexSet::singleton(i).with(j))
    }

    /// Members of size >= 3.
    pub fn big_members(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().copied().filter(|s| s.len() >= 3)
    }

    /// Members of size exactly 2.
    pub fn edges(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().copied().filter(|s| s.len() == 2)
    }

    /// Union of all member supports.
    pub fn support(&self) -> VertexSet {
        self.members
            .iter()
            .fold(VertexSet::EMPTY, |a, s| a.union(*s))
    }

    /// Whether the members cover the whole of `{1..n}`.
    pub fn covers(&self) -> bool {
        self.support() == VertexSet::full(self.n)
    }

    /// The complex `Δ = {F : no member is contained in F}`, by facets.
    /// Fails only if the family is invalid; singletons are faces by
    /// construction, so every vertex is covered.
    pub fn complex(&self) -> SimplicialComplex {
        let full = VertexSet::full(self.n);
        let mut memo: HashMap<VertexSet, Vec<VertexSet>> = HashMap::new();
        let facets = maximal_avoiding(full, &self.members, &mut memo);
        SimplicialComplex {
            n: self.n,
            vertices: full,
            facets: maximal_members(facets),
        }
    }
}

/// Maximal subsets of `universe` containing no member of `blockers`.
fn maximal_avoiding(
    universe: VertexSet,
    blockers: &[VertexSet],
    memo: &mut HashMap<VertexSet, Vec<VertexSet>>,
) -> Vec<VertexSet> {
    if let Some(hit) = memo.get(&universe) {
        return hit.clone();
    }
    let result = match blockers.iter().find(|s| s.is_subset_of(universe)) {
        None => vec![universe],
        Some(s) => {
            let mut out = Vec::new();
            for v in s.iter() {
                out.extend(maximal_avoiding(universe.without(v), blockers, memo));
            }
            maximal_members(out)
        }
    };
    memo.insert(universe, result.clone());
    result
}

/// Facet-level restriction used by `red`: removes the faces of `gamma` that
/// contain a member of `blockers`, returning the result by facets.
pub(crate) fn restrict_facets(gamma: &SimplicialComplex, blockers: &[VertexSet]) -> SimplicialComplex {
    let mut memo: HashMap<VertexSet, Vec<VertexSet>> = HashMap::new();
    let mut out = Vec::new();
    for f in gamma.facets() {
        out.extend(maximal_avoiding(*f, blockers, &mut memo));
    }
    SimplicialComplex::on_subset(gamma.n(), gamma.vertices(), out)
}
