//! Counting induced subgraphs by size and number of connected components, and
//! the combinatorial Betti/projective-dimension formulas built on those counts.

use crate::coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;
use rayon::prelude::*;
use std::collections::BTreeMap;

pub const CENSUS_MAX_VERTICES: usize = 22;

/// counts[(n, s)] = number of induced subgraphs with n vertices and s+1 components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCensus {
    n: usize,
    counts: BTreeMap<(usize, usize), u64>,
}

impl ComponentCensus {
    pub fn graph_vertices(&self) -> usize {
        self.n
    }

    /// |H^s_n(G)|.
    pub fn count(&self, n: usize, s: usize) -> u64 {
        self.counts.get(&(n, s)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.counts.iter().map(|(&(n, s), &c)| (n, s, c))
    }
}

/// Component census over every nonempty induced subgraph.
pub fn component_census(g: &Graph) -> Result<ComponentCensus> {
    let n = g.n();
    if n > CENSUS_MAX_VERTICES {
        return Err(Error::Infeasible {
            what: "component census",
            n,
            max: CENSUS_MAX_VERTICES,
        });
    }
    let total = 1u64 << n;
    let chunk = 1u64 << n.saturating_sub(6).min(16);
    let partials: Vec<BTreeMap<(usize, usize), u64>> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|block| {
            let mut local: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            let lo = block * chunk;
            let hi = (lo + chunk).min(total);
            for bits in lo..hi {
                if bits == 0 {
                    continue;
                }
                let w = VertexSet::from_bits(bits);
                let comps = g.component_count_within(w);
                *local.entry((w.len(), comps - 1)).or_insert(0) += 1;
            }
            local
        })
        .collect();
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for p in partials {
        for (k, v) in p {
            *counts.entry(k).or_insert(0) += v;
        }
    }
    debug_assert!(counts.keys().all(|&(m, s)| s + 1 <= m && m <= n));
    Ok(ComponentCensus { n, counts })
}

/// β_{p,q}(σ_qΔ(G)) by the component-count formula
/// Σ_{s=q}^{p+q-1} C(s, q) |H^s_{p+q}(G)|. The caller is responsible for the
/// N_{q+1,p-1} hypothesis.
pub fn betti_by_census(census: &ComponentCensus, q: usize, p: usize) -> u64 {
    assert!(q >= 1 && p >= 1);
    let n = p + q;
    let mut acc: u64 = 0;
    for s in q..=(n - 1) {
        let c = census.count(n, s);
        if c > 0 {
            acc = acc
                .checked_add(binom_u64(s, q).checked_mul(c).expect("census product fits u64"))
                .expect("census sum fits u64");
        }
    }
    acc
}

fn binom_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits u64")
}

/// Is σ_qΔ(G) the full simplex? Exactly when V(G) is a union of q cliques.
pub fn secant_is_simplex(g: &Graph, q: usize) -> bool {
    coloring::clique_cover_at_most(g, q)
}

/// pd S(σ_qΔ(G)) for q-secant chordal G:
/// max { |V(H)| - q : H induced with at least q+1 components }.
pub fn pd_by_census(g: &Graph, q: usize) -> Result<usize> {
    assert!(q >= 1);
    if secant_is_simplex(g, q) {
        return Err(Error::PdUndefined);
    }
    let census = component_census(g)?;
    pd_from_census(&census, q).ok_or(Error::PdUndefined)
}

pub fn pd_from_census(census: &ComponentCensus, q: usize) -> Option<usize> {
    census
        .entries()
        .filter(|&(_, s, c)| c > 0 && s >= q)
        .map(|(m, _, _)| m - q)
        .max()
}

/// Does pd survive contracting e? True iff some induced subgraph realizing the
/// maximum avoids both endpoints of e; cross-checked against pd of the
/// contracted graph in the verification suites.
pub fn pd_contraction_preserved(g: &Graph, q: usize, e: (usize, usize)) -> Result<bool> {
    if !g.has_edge(e.0, e.1) {
        return Err(Error::NotAnEdge(e.0, e.1));
    }
    let p = pd_by_census(g, q)?;
    let target = p + q;
    let avoid = g.vertices().without(e.0).without(e.1);
    for bits in 0u64..(1 << g.n()) {
        let w = VertexSet::from_bits(bits);
        if w.len() != target || !w.is_subset_of(avoid) {
            continue;
        }
        if g.component_count_within(w) >= q + 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_of_empty_triangle() {
        let census = component_census(&Graph::empty_graph(3).unwrap()).unwrap();
        assert_eq!(census.count(3, 2), 1);
        assert_eq!(census.count(2, 1), 3);
        assert_eq!(census.count(1, 0), 3);
        assert_eq!(census.count(2, 0), 0);
    }

    #[test]
    fn sunlet_census_row() {
        // independent route to the j = 2 row of the σ2 table of the 4-sunlet
        let census = component_census(&Graph::sunlet4()).unwrap();
        let row: Vec<u64> = (1..=4).map(|p| betti_by_census(&census, 2, p)).collect();
        assert_eq!(row, vec![20, 45, 36, 10]);
    }

    #[test]
    fn pd_census_cases() {
        let sunlet = Graph::sunlet4();
        assert_eq!(pd_by_census(&sunlet, 2).unwrap(), 4);
        // contract the pendant edge (0,4): pd drops to 3
        let contracted = sunlet.contract_edge(0, 4).unwrap();
        assert_eq!(pd_by_census(&contracted, 2).unwrap(), 3);
        // contract a cycle edge: pd stays 4
        let contracted = sunlet.contract_edge(0, 1).unwrap();
        assert_eq!(pd_by_census(&contracted, 2).unwrap(), 4);
        for n in 5..=9 {
            for q in 1..=2 {
                if n >= 2 * q + 1 {
                    assert_eq!(
                        pd_by_census(&Graph::path(n).unwrap(), q).unwrap(),
                        n - 2 * q
                    );
                }
            }
        }
        // simplex case errors
        assert!(matches!(
            pd_by_census(&Graph::path(4).unwrap(), 2),
            Err(Error::PdUndefined)
        ));
    }

    #[test]
    fn contraction_preservation_cases() {
        let sunlet = Graph::sunlet4();
        assert!(pd_contraction_preserved(&sunlet, 2, (0, 1)).unwrap());
        assert!(!pd_contraction_preserved(&sunlet, 2, (0, 4)).unwrap());
        // agreement with direct recomputation
        for e in sunlet.edges() {
            let preserved = pd_contraction_preserved(&sunlet, 2, e).unwrap();
            let before = pd_by_census(&sunlet, 2).unwrap();
            let after = pd_by_census(&sunlet.contract_edge(e.0, e.1).unwrap(), 2).unwrap();
            assert_eq!(preserved, before == after, "edge {:?}", e);
        }
        // P4 at q = 1, middle edge: pd drops from 2 to 1
        let p4 = Graph::path(4).unwrap();
        assert!(!pd_contraction_preserved(&p4, 1, (1, 2)).unwrap());
        assert_eq!(pd_by_census(&p4, 1).unwrap(), 2);
        assert_eq!(
            pd_by_census(&p4.contract_edge(1, 2).unwrap(), 1).unwrap(),
            1
        );
    }
}
