//! q-secant complexes and Stanley-Reisner generator enumeration.
//!
//! Two independent constructions are kept side by side as mutual oracles: the
//! facet antichain built by iterated embedded joins, and the coverability oracle
//! that declares W a face of σ_qΔ(G) exactly when G[W] is a union of at most q
//! cliques. The generator enumerator runs on the oracle and classifies each
//! minimal generator by the family that produces it.

use crate::coloring;
use crate::complex::{join_facets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// σ_qΔ together with its base complex.
#[derive(Clone, Debug)]
pub struct SecantComplex {
    base: SimplicialComplex,
    q: usize,
    complex: SimplicialComplex,
}

impl SecantComplex {
    pub fn new(base: SimplicialComplex, q: usize) -> Result<Self> {
        let complex = secant(&base, q)?;
        Ok(SecantComplex { base, q, complex })
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn facets(&self) -> &[VertexSet] {
        self.complex.facets()
    }
}

/// σ_qΔ by iterated embedded join, with antichain reduction after every step.
pub fn secant(base: &SimplicialComplex, q: usize) -> Result<SimplicialComplex> {
    if q == 0 {
        return Err(Error::Invalid("secant complexes need q >= 1".to_string()));
    }
    let mut facets = base.facets().to_vec();
    for _ in 1..q {
        facets = join_facets(&facets, base.facets());
    }
    Ok(SimplicialComplex::from_facets(base.n(), facets).expect("secant of a complex is a complex"))
}

/// σ_qΔ(G) directly from a graph.
pub fn secant_of_graph(g: &Graph, q: usize) -> Result<SimplicialComplex> {
    secant(&SimplicialComplex::clique_complex(g), q)
}

/// Is `w` a face of σ_qΔ(G)? True iff G[w] has clique cover number at most q.
pub fn clique_secant_face_oracle(g: &Graph, q: usize, w: VertexSet) -> bool {
    assert!(q >= 1);
    coloring::clique_cover_at_most(&g.induced(w), q)
}

const FACE_TABLE_DP_MAX: usize = 16;
const FACE_TABLE_MAX: usize = 20;

/// Face indicator of σ_qΔ(G) over all 2^n subsets, indexed by bit pattern.
///
/// For n up to 16 this runs the subset-union dynamic program in O(q 3^n); for a
/// few vertices more it falls back to one cover test per subset.
pub fn secant_face_table(g: &Graph, q: usize) -> Result<Vec<bool>> {
    assert!(q >= 1);
    let n = g.n();
    if n > FACE_TABLE_MAX {
        return Err(Error::Infeasible {
            what: "secant face table",
            n,
            max: FACE_TABLE_MAX,
        });
    }
    let size = 1usize << n;
    if n > FACE_TABLE_DP_MAX {
        let mut table = vec![false; size];
        for bits in 0..size {
            table[bits] = clique_secant_face_oracle(g, q, VertexSet::from_bits(bits as u64));
        }
        return Ok(table);
    }

    // clique indicator: W is a clique iff W minus its least vertex is a clique
    // inside the least vertex's neighborhood
    let mut clique = vec![false; size];
    clique[0] = true;
    for bits in 1..size {
        let v = bits.trailing_zeros() as usize;
        let rest = bits & (bits - 1);
        clique[bits] = clique[rest] && VertexSet::from_bits(rest as u64).is_subset_of(g.neighbors(v));
    }
    let mut cover = clique.clone(); // q = 1
    for _ in 1..q {
        let mut next = vec![false; size];
        next[0] = true;
        for bits in 1..size {
            if cover[bits] {
                next[bits] = true;
                continue;
            }
            // the least vertex must land in some clique part
            let v = bits.trailing_zeros() as usize;
            let rest = bits & !(1 << v);
            let mut sub = rest;
            let mut found = false;
            loop {
                let part = sub | (1 << v);
                if clique[part] && cover[bits & !part] {
                    found = true;
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            next[bits] = found;
        }
        cover = next;
    }
    Ok(cover)
}

/// How a minimal generator of I(σ_qΔ(G)) arises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// G[W] is the edgeless graph on q+1 vertices.
    EmptySubgraph,
    /// G[W] is cover-critical: more than q cliques needed, any deletion needs at most q.
    Fq1,
}

impl GeneratorKind {
    pub fn tag(&self) -> &'static str {
        match self {
            GeneratorKind::EmptySubgraph => "empty",
            GeneratorKind::Fq1 => "Fq1",
        }
    }
}

/// A minimal generator with its witness subgraph.
#[derive(Clone, Debug)]
pub struct SecantGenerator {
    pub vertices: VertexSet,
    pub kind: GeneratorKind,
    pub witness: Graph,
}

/// Minimal non-faces of σ_qΔ(G), each classified by its witness family.
pub fn secant_minimal_generators(g: &Graph, q: usize) -> Result<Vec<SecantGenerator>> {
    let table = secant_face_table(g, q)?;
    let mut out = Vec::new();
    for bits in 1..table.len() {
        if table[bits] {
            continue;
        }
        let w = VertexSet::from_bits(bits as u64);
        if !w.iter().all(|v| table[w.without(v).bits() as usize]) {
            continue;
        }
        let witness = g.induced(w);
        let kind = if w.len() == q + 1 {
            debug_assert_eq!(witness.edge_count(), 0);
            GeneratorKind::EmptySubgraph
        } else {
            GeneratorKind::Fq1
        };
        out.push(SecantGenerator {
            vertices: w,
            kind,
            witness,
        });
    }
    out.sort_by_key(|gen| (gen.vertices.len(), gen.vertices.vertices()));
    Ok(out)
}

/// Are all minimal generators of I(σ_qΔ(G)) of degree q+1?
pub fn generators_all_linear(g: &Graph, q: usize) -> Result<bool> {
    let table = secant_face_table(g, q)?;
    for bits in 1..table.len() {
        let w = VertexSet::from_bits(bits as u64);
        if w.len() <= q + 1 || table[bits] {
            continue;
        }
        if w.iter().all(|v| table[w.without(v).bits() as usize]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal generators of I(σ_kΔ) for a plain complex, with the conventions
/// σ_0 = maximal homogeneous ideal and σ_{-1} = unit ideal encoded as k = -1, 0.
fn ideal_generators(base: &SimplicialComplex, k: isize) -> Result<Vec<VertexSet>> {
    match k {
        -1 => Ok(vec![VertexSet::empty()]),
        0 => Ok((0..base.n()).map(VertexSet::singleton).collect()),
        _ => Ok(secant(base, k as usize)?.minimal_nonfaces()),
    }
}

/// Lemma on disjoint unions: I(σ_q(Δ1 ⊔ Δ2)) = Σ_j I(σ_{q-j-1}Δ1) · I(σ_jΔ2).
/// Checks equality of the two squarefree monomial ideals.
pub fn disjoint_union_ideal_check(
    d1: &SimplicialComplex,
    d2: &SimplicialComplex,
    q: usize,
) -> Result<bool> {
    assert!(q >= 1);
    let union = d1.disjoint_union(d2);
    let lhs = secant(&union, q)?.minimal_nonfaces();

    let mut rhs: Vec<VertexSet> = Vec::new();
    for j in -1..=(q as isize) {
        let a = ideal_generators(d1, q as isize - j - 1)?;
        let b = ideal_generators(d2, j)?;
        for &x in &a {
            for &y in &b {
                rhs.push(x.union(y.shifted(d1.n())));
            }
        }
    }
    rhs = antichain_divisors(rhs);

    // monomial ideal equality: each generator of one side is divisible by a
    // generator of the other
    let contains = |gens: &[VertexSet], m: VertexSet| gens.iter().any(|g| g.is_subset_of(m));
    Ok(lhs.iter().all(|&m| contains(&rhs, m)) && rhs.iter().all(|&m| contains(&lhs, m)))
}

/// Keep only divisibility-minimal squarefree monomials.
fn antichain_divisors(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by_key(|s| s.len());
    let mut out: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|t| t.is_subset_of(s)) {
            out.push(s);
        }
    }
    out
}
