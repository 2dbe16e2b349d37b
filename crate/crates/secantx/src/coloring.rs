//! Exact chromatic number by branch and bound, and the clique cover number of a graph
//! as the chromatic number of its complement.

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Exact chromatic number. Zero for the graph with no vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let lb = max_clique_size(g);
    let ub = greedy_coloring_bound(g);
    for k in lb..ub {
        if colorable_with(g, k) {
            return k;
        }
    }
    ub
}

/// Can the graph be properly colored with at most k colors?
pub fn colorable_with(g: &Graph, k: usize) -> bool {
    if g.n() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    // order vertices by decreasing degree for earlier conflicts
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; g.n()];
    color_rec(g, &order, 0, k, 0, &mut colors)
}

fn color_rec(
    g: &Graph,
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    // new colors are introduced in increasing order, which kills color symmetry
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_rec(g, order, idx + 1, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// Size of a largest clique.
pub fn max_clique_size(g: &Graph) -> usize {
    let mut best = 0;
    clique_rec(g, VertexSet::empty(), g.vertices(), &mut best);
    best
}

fn clique_rec(g: &Graph, current: VertexSet, mut cands: VertexSet, best: &mut usize) {
    if current.len() + cands.len() <= *best {
        return;
    }
    if cands.is_empty() {
        *best = (*best).max(current.len());
        return;
    }
    while let Some(v) = cands.min_vertex() {
        if current.len() + cands.len() <= *best {
            return;
        }
        cands = cands.without(v);
        clique_rec(g, current.with(v), cands.intersection(g.neighbors(v)), best);
    }
}

fn greedy_coloring_bound(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; g.n()];
    let mut used = 0;
    for &v in &order {
        let mut c = 0;
        while g.neighbors(v).iter().any(|u| colors[u] == c) {
            c += 1;
        }
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Minimum number of cliques of `g` whose union is the whole vertex set.
pub fn clique_cover_number(g: &Graph) -> usize {
    chromatic_number(&g.complement())
}

/// Is the vertex set of `g` a union of at most q cliques?
pub fn clique_cover_at_most(g: &Graph, q: usize) -> bool {
    if g.n() == 0 {
        return true;
    }
    colorable_with(&g.complement(), q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_number_examples() {
        for q in 1..=4 {
            let empty = Graph::empty_graph(q + 1).unwrap();
            assert_eq!(clique_cover_number(&empty), q + 1);
        }
        for n in 1..=6 {
            assert_eq!(clique_cover_number(&Graph::complete(n).unwrap()), 1);
        }
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(clique_cover_number(&c5), 3);
        // oracle: brute-force search for covers by at most 3 cliques
        assert!(brute_cover_at_most(&c5, 3));
        assert!(!brute_cover_at_most(&c5, 2));
    }

    // assign each vertex to one of k groups and check every group is a clique
    fn brute_cover_at_most(g: &Graph, k: usize) -> bool {
        fn rec(g: &Graph, v: usize, k: usize, groups: &mut Vec<Vec<usize>>) -> bool {
            if v == g.n() {
                return true;
            }
            for gi in 0..k {
                if groups[gi].iter().all(|&u| g.has_edge(u, v)) {
                    groups[gi].push(v);
                    if rec(g, v + 1, k, groups) {
                        return true;
                    }
                    groups[gi].pop();
                }
            }
            false
        }
        rec(g, 0, k, &mut vec![Vec::new(); k])
    }

    #[test]
    fn cover_matches_brute_chromatic_of_complement() {
        // both directions of the identity, on every graph with up to 6 vertices
        // plus random graphs on 7 and 8
        use rand::{Rng, SeedableRng};
        let mut graphs: Vec<Graph> = Vec::new();
        for n in 1..=6 {
            graphs.extend(crate::enumerate::enumerate_graphs(n).unwrap());
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..120 {
            let n = rng.gen_range(7..=8);
            let mut g = Graph::new(n);
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            graphs.push(g);
        }
        for g in &graphs {
            let cover = clique_cover_number(g);
            assert_eq!(cover, brute_chromatic(&g.complement()), "{:?}", g);
            assert_eq!(chromatic_number(g), brute_chromatic(g), "{:?}", g);
        }
    }

    // enumerate all k^n color assignments in base-k counting order
    fn brute_chromatic(g: &Graph) -> usize {
        if g.n() == 0 {
            return 0;
        }
        let edges = g.edges();
        for k in 1..=g.n() {
            let mut assignment = vec![0usize; g.n()];
            'scan: loop {
                if edges.iter().all(|&(u, v)| assignment[u] != assignment[v]) {
                    return k;
                }
                let mut i = 0;
                loop {
                    if i == g.n() {
                        break 'scan;
                    }
                    assignment[i] += 1;
                    if assignment[i] < k {
                        break;
                    }
                    assignment[i] = 0;
                    i += 1;
                }
            }
        }
        g.n()
    }

    #[test]
    fn max_clique_cases() {
        assert_eq!(max_clique_size(&Graph::complete(5).unwrap()), 5);
        assert_eq!(max_clique_size(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(max_clique_size(&Graph::empty_graph(4).unwrap()), 1);
    }
}
