//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs on k+1 vertices are produced by attaching a new vertex to each
//! representative on k vertices in all 2^k ways and deduplicating canonical forms.
//! Every isomorphism class arises this way because deleting any vertex of a
//! representative lands back in the previous layer.

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;
use rayon::prelude::*;
use std::collections::HashSet;

pub const MAX_ENUMERATION_VERTICES: usize = 9;

/// One representative per isomorphism class of graphs on exactly n vertices,
/// in canonical-form order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Infeasible {
            what: "graph enumeration",
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut forms: Vec<Vec<u8>> = vec![canon::canonical_form(&Graph::new(1))];
    for k in 2..=n {
        let parents: Vec<Graph> = forms
            .iter()
            .map(|f| canon::graph_from_bytes(f).expect("stored forms decode"))
            .collect();
        let sets: Vec<HashSet<Vec<u8>>> = parents
            .par_chunks(64.max(parents.len() / 256 + 1))
            .map(|chunk| {
                let mut local: HashSet<Vec<u8>> = HashSet::new();
                for g in chunk {
                    for mask in 0u64..(1 << (k - 1)) {
                        let ext = extend(g, VertexSet::from_bits(mask));
                        local.insert(canon::canonical_form(&ext));
                    }
                }
                local
            })
            .collect();
        let mut merged: HashSet<Vec<u8>> = HashSet::new();
        for s in sets {
            merged.extend(s);
        }
        forms = merged.into_iter().collect();
        forms.sort();
    }
    Ok(forms
        .iter()
        .map(|f| canon::graph_from_bytes(f).expect("stored forms decode"))
        .collect())
}

/// All graphs with 1..=n vertices, one per isomorphism class.
pub fn enumerate_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_graphs(k)?);
    }
    Ok(out)
}

fn extend(g: &Graph, neighborhood: VertexSet) -> Graph {
    let k = g.n();
    let mut h = Graph::new(k + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v).unwrap();
    }
    for v in neighborhood.iter() {
        h.add_edge(v, k).unwrap();
    }
    h
}

/// One representative per isomorphism class of forests on exactly n vertices.
/// Extensions attach the new vertex to at most one old vertex, which reaches
/// every forest since forests always have a vertex of degree at most one.
pub fn enumerate_forests(n: usize) -> Result<Vec<Graph>> {
    const MAX: usize = 12;
    if n == 0 || n > MAX {
        return Err(Error::Infeasible {
            what: "forest enumeration",
            n,
            max: MAX,
        });
    }
    let mut forms: Vec<Vec<u8>> = vec![canon::canonical_form(&Graph::new(1))];
    for k in 2..=n {
        let mut merged: HashSet<Vec<u8>> = HashSet::new();
        for f in &forms {
            let g = canon::graph_from_bytes(f).expect("stored forms decode");
            merged.insert(canon::canonical_form(&extend(&g, VertexSet::empty())));
            for v in 0..(k - 1) {
                merged.insert(canon::canonical_form(&extend(&g, VertexSet::singleton(v))));
            }
        }
        forms = merged.into_iter().collect();
        forms.sort();
    }
    Ok(forms
        .iter()
        .map(|f| canon::graph_from_bytes(f).expect("stored forms decode"))
        .collect())
}

pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_forests(n)?
        .into_iter()
        .filter(|g| g.is_tree())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_graphs(i + 1).unwrap().len(), e, "n = {}", i + 1);
        }
        assert!(enumerate_graphs(10).is_err());
    }

    #[test]
    fn graph_count_n8() {
        assert_eq!(enumerate_graphs(8).unwrap().len(), 12346);
    }

    #[test]
    fn emitted_graphs_are_pairwise_nonisomorphic() {
        let graphs = enumerate_graphs(5).unwrap();
        let forms: std::collections::HashSet<Vec<u8>> =
            graphs.iter().map(canon::canonical_form).collect();
        assert_eq!(forms.len(), graphs.len());
        // deterministic order
        let again = enumerate_graphs(5).unwrap();
        for (a, b) in graphs.iter().zip(again.iter()) {
            assert_eq!(a.edges(), b.edges());
        }
    }

    #[test]
    fn forest_and_tree_counts() {
        let forests = [1usize, 2, 3, 6, 10, 20, 37, 76, 153, 329];
        for (i, &e) in forests.iter().enumerate() {
            assert_eq!(enumerate_forests(i + 1).unwrap().len(), e, "n = {}", i + 1);
        }
        let trees = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &e) in trees.iter().enumerate() {
            assert_eq!(enumerate_trees(i + 1).unwrap().len(), e, "n = {}", i + 1);
        }
        assert!(enumerate_forests(1).unwrap()[0].is_forest());
    }
}
