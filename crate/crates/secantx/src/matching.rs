//! Matchings, bipartitions, and vertex covers.
//!
//! Bipartite matching numbers go through Hopcroft-Karp augmenting paths; general
//! graphs fall back to a memoized exhaustive search, which is exact at desk scale.

use crate::graph::Graph;
use crate::vset::VertexSet;
use std::collections::HashMap;

/// A set of pairwise vertex-disjoint edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(g: &Graph, edges: Vec<(usize, usize)>) -> crate::Result<Self> {
        let mut seen = VertexSet::empty();
        for &(u, v) in &edges {
            if !g.has_edge(u, v) {
                return Err(crate::Error::NotAnEdge(u, v));
            }
            if seen.contains(u) || seen.contains(v) {
                return Err(crate::Error::Invalid(format!(
                    "edges share vertex in matching at ({}, {})",
                    u, v
                )));
            }
            seen = seen.with(u).with(v);
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered by the matching.
    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::empty();
        for &(u, v) in &self.edges {
            s = s.with(u).with(v);
        }
        s
    }
}

/// A proper 2-coloring (U, W) with each component's least vertex in U, if one exists.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut side = vec![2u8; g.n()];
    let mut u = VertexSet::empty();
    let mut w = VertexSet::empty();
    for comp in g.components() {
        let start = comp.min_vertex().unwrap();
        side[start] = 0;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for x in g.neighbors(v).iter() {
                if side[x] == 2 {
                    side[x] = 1 - side[v];
                    queue.push(x);
                } else if side[x] == side[v] {
                    return None;
                }
            }
        }
    }
    for v in 0..g.n() {
        if side[v] == 0 {
            u = u.with(v);
        } else {
            w = w.with(v);
        }
    }
    Some((u, w))
}

/// Exact matching number.
pub fn matching_number(g: &Graph) -> usize {
    match bipartition(g) {
        Some((u, _)) => hopcroft_karp(g, u),
        None => general_matching(g, g.vertices(), &mut HashMap::new()),
    }
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n() % 2 == 0 && matching_number(g) * 2 == g.n()
}

/// A maximum matching, as explicit edges.
pub fn maximum_matching(g: &Graph) -> Matching {
    let target = matching_number(g);
    let mut edges = Vec::new();
    // peel greedily: an edge belongs to some maximum matching iff forcing it
    // keeps the matching number of the rest at target - 1
    let mut remaining = g.vertices();
    let mut need = target;
    while need > 0 {
        let mut picked = None;
        'search: for u in remaining.iter() {
            for v in g.neighbors(u).intersection(remaining).iter() {
                let rest = remaining.without(u).without(v);
                if matching_number(&g.induced(rest)) == need - 1 {
                    picked = Some((u, v));
                    break 'search;
                }
            }
        }
        let (u, v) = picked.expect("maximum matching peel always succeeds");
        edges.push((u, v));
        remaining = remaining.without(u).without(v);
        need -= 1;
    }
    Matching::new(g, edges).unwrap()
}

fn general_matching(g: &Graph, alive: VertexSet, memo: &mut HashMap<u64, usize>) -> usize {
    // find the least vertex with a neighbor
    let mut v = None;
    for x in alive.iter() {
        if !g.neighbors(x).intersection(alive).is_empty() {
            v = Some(x);
            break;
        }
    }
    let v = match v {
        Some(v) => v,
        None => return 0,
    };
    let key = alive.bits();
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    // either v stays unmatched or it is matched to one of its neighbors
    let mut best = general_matching(g, alive.without(v), memo);
    for u in g.neighbors(v).intersection(alive).iter() {
        best = best.max(1 + general_matching(g, alive.without(v).without(u), memo));
    }
    memo.insert(key, best);
    best
}

fn hopcroft_karp(g: &Graph, left: VertexSet) -> usize {
    let left_verts: Vec<usize> = left.iter().collect();
    let right: Vec<usize> = g.vertices().difference(left).iter().collect();
    let rindex: HashMap<usize, usize> = right.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> = left_verts
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|u| rindex[&u]).collect())
        .collect();
    let nl = left_verts.len();
    let nr = right.len();
    let mut match_l = vec![usize::MAX; nl];
    let mut match_r = vec![usize::MAX; nr];
    loop {
        // BFS layering from free left vertices
        let mut dist = vec![usize::MAX; nl];
        let mut queue: std::collections::VecDeque<usize> = (0..nl)
            .filter(|&i| match_l[i] == usize::MAX)
            .inspect(|&i| dist[i] = 0)
            .collect();
        let mut reachable_free = false;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                let k = match_r[j];
                if k == usize::MAX {
                    reachable_free = true;
                } else if dist[k] == usize::MAX {
                    dist[k] = dist[i] + 1;
                    queue.push_back(k);
                }
            }
        }
        if !reachable_free {
            break;
        }
        fn dfs(
            i: usize,
            adj: &[Vec<usize>],
            dist: &mut [usize],
            match_l: &mut [usize],
            match_r: &mut [usize],
        ) -> bool {
            let d = std::mem::replace(&mut dist[i], usize::MAX);
            for &j in &adj[i] {
                let k = match_r[j];
                if k == usize::MAX || (dist[k] == d + 1 && dfs(k, adj, dist, match_l, match_r)) {
                    match_l[i] = j;
                    match_r[j] = i;
                    return true;
                }
            }
            false
        }
        let mut advanced = false;
        for i in 0..nl {
            if match_l[i] == usize::MAX && dist[i] == 0 {
                advanced |= dfs(i, &adj, &mut dist, &mut match_l, &mut match_r);
            }
        }
        if !advanced {
            break;
        }
    }
    match_l.iter().filter(|&&j| j != usize::MAX).count()
}

/// Size of a minimum vertex cover by exhaustive search (small n only).
pub fn min_vertex_cover_size(g: &Graph) -> usize {
    let edges = g.edges();
    if edges.is_empty() {
        return 0;
    }
    for k in 1..=g.n() {
        if crate::vset::k_subsets(g.n(), k)
            .any(|s| edges.iter().all(|&(u, v)| s.contains(u) || s.contains(v)))
        {
            return k;
        }
    }
    g.n()
}
