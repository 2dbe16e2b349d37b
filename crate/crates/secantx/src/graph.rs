use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Simple undirected graph on vertices 0..n, adjacency stored as one bitset row per vertex.
///
/// Invariants: adjacency is symmetric and has no self-loops; only bits below `n` are set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on n vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= VertexSet::MAX_VERTICES);
        Graph {
            n,
            adj: vec![VertexSet::empty(); n],
        }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(Error::Invalid(format!("self-loop at vertex {}", u)));
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Induced subgraph on `w`, vertices relabeled by increasing original id.
    pub fn induced(&self, w: VertexSet) -> Graph {
        debug_assert!(w.is_subset_of(self.vertices()));
        let verts = w.vertices();
        let mut g = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            g.adj[i] = self.adj[v].intersection(w).compress_into(w);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            g.adj[v] = full.difference(self.adj[v]).without(v);
        }
        g
    }

    /// Connected components, as vertex sets sorted by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected components of the induced subgraph on `w` (original labels).
    pub fn components_within(&self, w: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = w;
        while let Some(v) = rest.min_vertex() {
            let comp = self.reach(v, w);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    /// Number of connected components of the induced subgraph on `w`.
    pub fn component_count_within(&self, w: VertexSet) -> usize {
        let mut count = 0;
        let mut rest = w;
        while let Some(v) = rest.min_vertex() {
            rest = rest.difference(self.reach(v, w));
            count += 1;
        }
        count
    }

    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier.iter() {
                next = next.union(self.adj[v].intersection(within));
            }
            frontier = next.difference(comp);
            comp = comp.union(next);
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count_within(self.vertices()) == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn is_path_graph(&self) -> bool {
        self.is_tree() && (0..self.n).all(|v| self.degree(v) <= 2)
    }

    pub fn is_clique(&self, w: VertexSet) -> bool {
        w.iter().all(|v| w.without(v).is_subset_of(self.adj[v]))
    }

    /// Chordality via repeated simplicial-vertex elimination.
    pub fn is_chordal(&self) -> bool {
        let mut alive = self.vertices();
        while !alive.is_empty() {
            let mut found = None;
            for v in alive.iter() {
                if self.is_clique(self.adj[v].intersection(alive)) {
                    found = Some(v);
                    break;
                }
            }
            match found {
                Some(v) => alive = alive.without(v),
                None => return false,
            }
        }
        true
    }

    /// Merge the endpoints of edge (u, v) into one vertex labeled min(u, v);
    /// remaining vertices keep their relative order.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let keep = self.vertices().without(hi);
        let mut g = Graph::new(self.n - 1);
        for (i, a) in keep.iter().enumerate() {
            let row = if a == lo {
                self.adj[lo].union(self.adj[hi]).without(lo).without(hi)
            } else if self.adj[a].contains(hi) {
                self.adj[a].without(hi).with(lo)
            } else {
                self.adj[a]
            };
            g.adj[i] = row.intersection(keep).compress_into(keep);
        }
        Ok(g)
    }

    /// True iff some set of `len` vertices induces a cycle.
    pub fn has_induced_cycle(&self, len: usize) -> bool {
        self.find_induced_cycle(len).is_some()
    }

    /// An induced cycle on exactly `len` vertices, if one exists.
    pub fn find_induced_cycle(&self, len: usize) -> Option<VertexSet> {
        assert!(len >= 3);
        if len > self.n {
            return None;
        }
        for start in 0..self.n {
            // `start` is the least vertex on the sought cycle
            let allowed = self.vertices().difference(VertexSet::full(start + 1));
            let mut path = vec![start];
            if let Some(c) = self.cycle_dfs(start, allowed, &mut path, VertexSet::singleton(start), len) {
                return Some(c);
            }
        }
        None
    }

    fn cycle_dfs(
        &self,
        start: usize,
        allowed: VertexSet,
        path: &mut Vec<usize>,
        used: VertexSet,
        len: usize,
    ) -> Option<VertexSet> {
        let last = *path.last().unwrap();
        if path.len() == len {
            return if self.adj[last].contains(start) {
                Some(used)
            } else {
                None
            };
        }
        let final_pos = path.len() == len - 1;
        for u in self.adj[last].intersection(allowed).difference(used).iter() {
            let touched = self.adj[u].intersection(used);
            let ok = if final_pos {
                touched == VertexSet::singleton(last).with(start)
            } else {
                touched == VertexSet::singleton(last)
            };
            if ok {
                path.push(u);
                if let Some(c) = self.cycle_dfs(start, allowed, path, used.with(u), len) {
                    return Some(c);
                }
                path.pop();
            }
        }
        None
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= VertexSet::MAX_VERTICES);
        let mut g = Graph::new(n);
        for v in 0..self.n {
            g.adj[v] = self.adj[v];
        }
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v].shifted(self.n);
        }
        g
    }

    /// Insert one fresh vertex in the middle of every edge.
    pub fn subdivide_all_edges(&self) -> Graph {
        let edges = self.edges();
        let n = self.n + edges.len();
        assert!(n <= VertexSet::MAX_VERTICES);
        let mut g = Graph::new(n);
        for (k, &(u, v)) in edges.iter().enumerate() {
            let w = self.n + k;
            g.add_edge(u, w).unwrap();
            g.add_edge(w, v).unwrap();
        }
        g
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 || n > VertexSet::MAX_VERTICES {
            return Err(Error::Invalid(format!("complete graph needs 1 <= n <= 64, got {}", n)));
        }
        let full = VertexSet::full(n);
        let mut g = Graph::new(n);
        for v in 0..n {
            g.adj[v] = full.without(v);
        }
        Ok(g)
    }

    pub fn empty_graph(n: usize) -> Result<Graph> {
        if n == 0 || n > VertexSet::MAX_VERTICES {
            return Err(Error::Invalid(format!("empty graph needs 1 <= n <= 64, got {}", n)));
        }
        Ok(Graph::new(n))
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 || n > VertexSet::MAX_VERTICES {
            return Err(Error::Invalid(format!("path needs 1 <= n <= 64, got {}", n)));
        }
        let mut g = Graph::new(n);
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1)?;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 || n > VertexSet::MAX_VERTICES {
            return Err(Error::Invalid(format!("cycle needs 3 <= n <= 64, got {}", n)));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// The 4-sunlet: a 4-cycle 0-1-2-3 with pendant vertices 4,5,6,7 attached to 0,1,2,3.
    pub fn sunlet4() -> Graph {
        let mut g = Graph::cycle(4).unwrap().disjoint_union(&Graph::new(4));
        for v in 0..4 {
            g.add_edge(v, v + 4).unwrap();
        }
        g
    }

    /// Star with `legs` legs of `len` edges each, centered at vertex 0.
    pub fn spider(legs: usize, len: usize) -> Result<Graph> {
        let n = 1 + legs * len;
        if len == 0 || n > VertexSet::MAX_VERTICES {
            return Err(Error::Invalid(format!(
                "spider with {} legs of length {} out of range",
                legs, len
            )));
        }
        let mut g = Graph::new(n);
        for l in 0..legs {
            let mut prev = 0;
            for k in 0..len {
                let v = 1 + l * len + k;
                g.add_edge(prev, v)?;
                prev = v;
            }
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
