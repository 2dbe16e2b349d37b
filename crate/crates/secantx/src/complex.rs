//! Simplicial complexes stored as facet antichains.
//!
//! Every complex lives on vertices 0..n and is nondegenerate: each vertex appears
//! in some facet. Inputs violating nondegeneracy are rejected, not repaired.
//! Operations that can lose vertices (star, link) return the surviving complex
//! together with the original labels and the dropped vertex set.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::{k_subsets, VertexSet};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// A face of a host complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Face(pub VertexSet);

/// Result of an operation whose output lives on a subset of the original vertices.
#[derive(Clone, Debug)]
pub struct MappedComplex {
    pub complex: SimplicialComplex,
    /// original vertex ids; position k holds the original id of new vertex k
    pub vertices: Vec<usize>,
    /// original vertices that belong to no face of the result
    pub dropped: VertexSet,
}

impl MappedComplex {
    /// Facets expressed in the original labels.
    pub fn original_facets(&self) -> Vec<VertexSet> {
        let within = VertexSet::from_vertices(self.vertices.iter().copied());
        self.complex
            .facets()
            .iter()
            .map(|f| f.decompress_from(within))
            .collect()
    }
}

/// Drop duplicates and faces contained in other faces; sort by bit pattern.
pub(crate) fn antichain(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable();
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for (i, &s) in sets.iter().enumerate() {
        let dominated = sets
            .iter()
            .enumerate()
            .any(|(j, &t)| j != i && s.is_subset_of(t) && s != t);
        if !dominated {
            out.push(s);
        }
    }
    out
}

impl SimplicialComplex {
    /// Build a complex from generating faces. The faces are reduced to an
    /// antichain; every vertex 0..n must be covered.
    pub fn from_facets(n: usize, faces: Vec<VertexSet>) -> Result<Self> {
        if n == 0 || n > VertexSet::MAX_VERTICES {
            return Err(Error::Invalid(format!(
                "complex needs 1 <= n <= 64 vertices, got {}",
                n
            )));
        }
        let full = VertexSet::full(n);
        let mut covered = VertexSet::empty();
        for f in &faces {
            if !f.is_subset_of(full) {
                return Err(Error::VertexOutOfRange(f.max_vertex().unwrap_or(0), n));
            }
            covered = covered.union(*f);
        }
        if covered != full {
            let missing = full.difference(covered);
            return Err(Error::Invalid(format!(
                "nondegeneracy violated: vertices {} lie in no facet",
                missing
            )));
        }
        Ok(SimplicialComplex {
            n,
            facets: antichain(faces),
        })
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex::from_facets(n, vec![VertexSet::full(n)]).unwrap()
    }

    /// The clique complex of a graph: facets are the maximal cliques.
    pub fn clique_complex(g: &Graph) -> Self {
        assert!(g.n() >= 1, "clique complex needs at least one vertex");
        SimplicialComplex {
            n: g.n(),
            facets: maximal_cliques(g, g.vertices()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|&c| f.is_subset_of(c))
    }

    /// dim = size of the largest facet minus one.
    pub fn dimension(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().expect("nondegenerate complex has facets") - 1
    }

    /// codim = (n - 1) - dim.
    pub fn codimension(&self) -> usize {
        (self.n - 1) - self.dimension()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == VertexSet::full(self.n)
    }

    /// Does `self` contain `other` as a subcomplex (same vertex universe)?
    pub fn contains_complex(&self, other: &SimplicialComplex) -> bool {
        self.n == other.n && other.facets.iter().all(|&f| self.is_face(f))
    }

    /// Induced subcomplex on `w`, relabeled by increasing original id.
    pub fn induced(&self, w: VertexSet) -> Result<SimplicialComplex> {
        if w.is_empty() {
            return Err(Error::EmptyInducedSet);
        }
        if !w.is_subset_of(VertexSet::full(self.n)) {
            return Err(Error::VertexOutOfRange(w.max_vertex().unwrap(), self.n));
        }
        let facets = antichain(
            self.facets
                .iter()
                .map(|f| f.intersection(w).compress_into(w))
                .collect(),
        );
        Ok(SimplicialComplex { n: w.len(), facets })
    }

    /// Restriction of the facet list to `w` in the original labels (no relabeling).
    pub fn induced_facets(&self, w: VertexSet) -> Vec<VertexSet> {
        antichain(self.facets.iter().map(|f| f.intersection(w)).collect())
    }

    pub fn delete_vertex(&self, v: usize) -> Result<SimplicialComplex> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if self.n == 1 {
            return Err(Error::EmptyInducedSet);
        }
        self.induced(VertexSet::full(self.n).without(v))
    }

    /// st(F) = { G : G ∪ F is a face }; the facets are the facets containing F.
    pub fn star(&self, f: Face) -> Result<MappedComplex> {
        if !self.is_face(f.0) {
            return Err(Error::NotAFace(f.0));
        }
        let kept: Vec<VertexSet> = self
            .facets
            .iter()
            .copied()
            .filter(|c| f.0.is_subset_of(*c))
            .collect();
        self.wrap_mapped(kept)
    }

    /// link(F) = { G ⊆ V∖F : G ∪ F is a face }. Vertices appearing in no face of
    /// the link are dropped and reported.
    pub fn link(&self, f: Face) -> Result<MappedComplex> {
        if !self.is_face(f.0) {
            return Err(Error::NotAFace(f.0));
        }
        let faces: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|c| f.0.is_subset_of(**c))
            .map(|c| c.difference(f.0))
            .collect();
        self.wrap_mapped(antichain(faces))
    }

    fn wrap_mapped(&self, facets: Vec<VertexSet>) -> Result<MappedComplex> {
        let mut present = VertexSet::empty();
        for f in &facets {
            present = present.union(*f);
        }
        if present.is_empty() {
            // the empty-face complex has no vertices; represent it on one dummy
            // vertex is wrong, so report it as an error instead
            return Err(Error::Invalid(
                "operation produced the empty complex".to_string(),
            ));
        }
        let relabeled = antichain(
            facets
                .iter()
                .map(|f| f.compress_into(present))
                .collect(),
        );
        Ok(MappedComplex {
            complex: SimplicialComplex {
                n: present.len(),
                facets: relabeled,
            },
            vertices: present.vertices(),
            dropped: VertexSet::full(self.n).difference(present),
        })
    }

    /// Contract a face to a single new vertex, labeled min(F), then relabel.
    pub fn face_contraction(&self, f: Face) -> Result<SimplicialComplex> {
        if !self.is_face(f.0) {
            return Err(Error::NotAFace(f.0));
        }
        if f.0.is_empty() {
            return Ok(self.clone());
        }
        let v = f.0.min_vertex().unwrap();
        let keep = VertexSet::full(self.n).difference(f.0).with(v);
        let images: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|&c| {
                if c.is_disjoint(f.0) {
                    c
                } else {
                    c.difference(f.0).with(v)
                }
            })
            .map(|c| c.compress_into(keep))
            .collect();
        Ok(SimplicialComplex {
            n: keep.len(),
            facets: antichain(images),
        })
    }

    /// Embedded join: faces are unions of a face of each complex (same universe).
    pub fn embedded_join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.n != other.n {
            return Err(Error::Invalid(format!(
                "join needs one ambient vertex universe, got n = {} and {}",
                self.n, other.n
            )));
        }
        Ok(SimplicialComplex {
            n: self.n,
            facets: join_facets(&self.facets, &other.facets),
        })
    }

    /// Disjoint union; vertices of `other` shift up by self.n.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let n = self.n + other.n;
        assert!(n <= VertexSet::MAX_VERTICES);
        let mut facets = self.facets.clone();
        facets.extend(other.facets.iter().map(|f| f.shifted(self.n)));
        SimplicialComplex {
            n,
            facets: antichain(facets),
        }
    }

    /// All inclusion-minimal non-faces, ascending by size then lexicographically
    /// by vertex list.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        self.minimal_nonfaces_up_to(self.n)
    }

    /// Minimal non-faces of size at most `cap`; the caller asserts nothing is
    /// missed above the cap (e.g. a known-linear ideal).
    pub fn minimal_nonfaces_up_to(&self, cap: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for size in 1..=cap.min(self.n) {
            for w in k_subsets(self.n, size) {
                if self.is_face(w) {
                    continue;
                }
                if w.iter().all(|v| self.is_face(w.without(v))) {
                    out.push(w);
                }
            }
        }
        out.sort_by_key(|w| (w.len(), w.vertices()));
        out
    }

    /// Vertices contained in every facet.
    pub fn universal_vertices(&self) -> VertexSet {
        let mut acc = VertexSet::full(self.n);
        for f in &self.facets {
            acc = acc.intersection(*f);
        }
        acc
    }

    /// Every face, grouped by number of vertices (index = size).
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let mut seen: std::collections::HashSet<u64> = std::collections::HashSet::new();
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); self.dimension() + 2];
        for f in &self.facets {
            for s in f.subsets() {
                if seen.insert(s.bits()) {
                    by_size[s.len()].push(s);
                }
            }
        }
        for bucket in &mut by_size {
            bucket.sort_unstable();
        }
        by_size
    }

    /// Every face as a flat list (includes the empty face).
    pub fn all_faces(&self) -> Vec<VertexSet> {
        self.faces_by_size().into_iter().flatten().collect()
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Complex(n={}, facets={:?})", self.n, self.facets)
    }
}

/// Maximal unions A ∪ B over facet lists.
pub(crate) fn join_facets(a: &[VertexSet], b: &[VertexSet]) -> Vec<VertexSet> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x.union(y));
        }
    }
    antichain(out)
}

/// Maximal cliques of `g` inside `within`, via Bron-Kerbosch with pivoting.
pub fn maximal_cliques(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::empty(), within, VertexSet::empty(), &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&v| g.neighbors(v).intersection(p).len())
        .unwrap();
    let mut cand = p.difference(g.neighbors(pivot));
    while let Some(v) = cand.min_vertex() {
        cand = cand.without(v);
        bron_kerbosch(
            g,
            r.with(v),
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            out,
        );
        p = p.without(v);
        x = x.with(v);
    }
}
