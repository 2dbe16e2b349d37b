//! Canonical labeling by minimum adjacency encoding.
//!
//! Vertices are first partitioned by iterated neighborhood refinement; the canonical
//! position sequence is forced to follow the refined color ranks, and the remaining
//! freedom is resolved by branch-and-bound search for the lexicographically least
//! adjacency code. Equal byte strings iff isomorphic.

use crate::graph::Graph;
use crate::vset::VertexSet;
use std::cmp::Ordering;

/// Canonical byte string: first byte is n, then the upper-triangle adjacency bits of
/// the canonical labeling, row by row (bit (i, j) with i < j appears at position
/// j(j-1)/2 + i), packed most-significant-bit first.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let (n, rows) = canonical_rows(g);
    pack_rows(n, &rows)
}

/// Relabel `g` into its canonical form.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (n, rows) = canonical_rows(g);
    graph_from_rows(n, &rows)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Decode the output of `canonical_form` (or any graph packed in that layout).
pub fn graph_from_bytes(bytes: &[u8]) -> Option<Graph> {
    let n = *bytes.first()? as usize;
    let nbits = n * (n - 1) / 2;
    if bytes.len() != 1 + nbits.div_ceil(8) {
        return None;
    }
    let mut g = Graph::new(n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + t / 8];
            if byte >> (7 - t % 8) & 1 == 1 {
                g.add_edge(i, j).ok()?;
            }
            t += 1;
        }
    }
    Some(g)
}

/// Row encoding of the canonical adjacency: rows[k] holds the adjacency bits of
/// canonical vertex k to canonical vertices 0..k, with bit t stored at 63 - t so that
/// integer order equals lexicographic order on the bit sequence.
fn canonical_rows(g: &Graph) -> (usize, Vec<u64>) {
    let n = g.n();
    if n <= 1 {
        return (n, vec![0; n]);
    }
    let colors = refined_colors(g);
    let mut req: Vec<u32> = colors.clone();
    req.sort_unstable();
    let mut search = Search {
        g,
        n,
        colors: &colors,
        req: &req,
        chosen: Vec::with_capacity(n),
        used: VertexSet::empty(),
        rows: vec![0u64; n],
        best: None,
    };
    search.run(0, Ordering::Equal);
    (n, search.best.expect("search always finds a labeling"))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    colors: &'a [u32],
    req: &'a [u32],
    chosen: Vec<usize>,
    used: VertexSet,
    rows: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    // `state` is Less when the current prefix is already strictly below the best.
    fn run(&mut self, k: usize, state: Ordering) {
        if k == self.n {
            if state == Ordering::Less || self.best.is_none() {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        let want = self.req[k];
        let mut cands: Vec<(u64, usize)> = Vec::new();
        for v in 0..self.n {
            if self.used.contains(v) || self.colors[v] != want {
                continue;
            }
            let mut row = 0u64;
            for (t, &c) in self.chosen.iter().enumerate() {
                if self.g.neighbors(v).contains(c) {
                    row |= 1 << (63 - t);
                }
            }
            cands.push((row, v));
        }
        cands.sort_unstable();
        let mut state = state;
        for (row, v) in cands {
            let state_here = match (&self.best, state) {
                (None, _) => Ordering::Equal,
                (Some(_), Ordering::Less) => Ordering::Less,
                (Some(best), _) => match row.cmp(&best[k]) {
                    Ordering::Greater => break, // candidates are sorted, the rest are worse
                    other => other,
                },
            };
            self.chosen.push(v);
            self.used = self.used.with(v);
            self.rows[k] = row;
            self.run(k + 1, state_here);
            self.chosen.pop();
            self.used = self.used.without(v);
            // any replacement of `best` inside the recursion went through this
            // prefix, so from here on the prefix ties the best code exactly
            state = Ordering::Equal;
        }
    }
}

/// Stable vertex coloring under iterated (color, sorted neighbor colors) signatures.
/// The color ranks depend only on the isomorphism type.
fn refined_colors(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut colors: Vec<u32> = rank_by(&(0..n).map(|v| vec![g.degree(v) as u32]).collect::<Vec<_>>());
    loop {
        let sigs: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut s: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                s.sort_unstable();
                s.insert(0, colors[v]);
                s
            })
            .collect();
        let next = rank_by(&sigs);
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

fn rank_by(sigs: &[Vec<u32>]) -> Vec<u32> {
    let mut sorted: Vec<&Vec<u32>> = sigs.iter().collect();
    sorted.sort();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(&s).unwrap() as u32)
        .collect()
}

fn pack_rows(n: usize, rows: &[u64]) -> Vec<u8> {
    let nbits = n * (n - 1) / 2;
    let mut bytes = vec![0u8; 1 + nbits.div_ceil(8)];
    bytes[0] = n as u8;
    let mut t = 0;
    for (k, &row) in rows.iter().enumerate() {
        for s in 0..k {
            if row >> (63 - s) & 1 == 1 {
                bytes[1 + t / 8] |= 1 << (7 - t % 8);
            }
            t += 1;
        }
    }
    bytes
}

fn graph_from_rows(n: usize, rows: &[u64]) -> Graph {
    let mut g = Graph::new(n);
    for (k, &row) in rows.iter().enumerate() {
        for t in 0..k {
            if row >> (63 - t) & 1 == 1 {
                g.add_edge(k, t).unwrap();
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn permuted(g: &Graph, perm: &[usize]) -> Graph {
        let mut h = Graph::new(g.n());
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]).unwrap();
        }
        h
    }

    #[test]
    fn relabelings_agree() {
        let c4 = Graph::cycle(4).unwrap();
        let perms = [[1, 2, 3, 0], [3, 1, 0, 2], [2, 0, 3, 1]];
        let base = canonical_form(&c4);
        for p in perms {
            assert_eq!(canonical_form(&permuted(&c4, &p)), base);
        }
    }

    #[test]
    fn distinguishes_c5_p5() {
        assert_ne!(
            canonical_form(&Graph::cycle(5).unwrap()),
            canonical_form(&Graph::path(5).unwrap())
        );
    }

    #[test]
    fn four_vertex_classes_count() {
        // brute force over all 2^6 labeled graphs, dedup by explicit permutation orbits
        let verts = 4usize;
        let pairs: Vec<(usize, usize)> = (0..verts)
            .flat_map(|i| ((i + 1)..verts).map(move |j| (i, j)))
            .collect();
        let perms = all_perms(verts);
        let mut reps: Vec<u64> = Vec::new();
        for mask in 0u64..(1 << pairs.len()) {
            let canon_mask = perms
                .iter()
                .map(|p| {
                    let mut m = 0u64;
                    for (b, &(i, j)) in pairs.iter().enumerate() {
                        if mask >> b & 1 == 1 {
                            let (pi, pj) = (p[i].min(p[j]), p[i].max(p[j]));
                            let nb = pairs.iter().position(|&e| e == (pi, pj)).unwrap();
                            m |= 1 << nb;
                        }
                    }
                    m
                })
                .min()
                .unwrap();
            if !reps.contains(&canon_mask) {
                reps.push(canon_mask);
            }
        }
        assert_eq!(reps.len(), 11);

        // the canonical form agrees: 11 distinct strings
        let mut forms: Vec<Vec<u8>> = Vec::new();
        for mask in 0u64..(1 << pairs.len()) {
            let mut g = Graph::new(verts);
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.add_edge(i, j).unwrap();
                }
            }
            let f = canonical_form(&g);
            if !forms.contains(&f) {
                forms.push(f);
            }
        }
        assert_eq!(forms.len(), 11);
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![0]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..n {
                let mut q: Vec<usize> = p.iter().map(|&x| if x >= pos { x + 1 } else { x }).collect();
                q.push(pos);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn permutation_invariance_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=8);
            let mut g = Graph::new(n);
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = rng.gen_range(0..=i);
                perm.swap(i, j);
            }
            assert_eq!(canonical_form(&g), canonical_form(&permuted(&g, &perm)));
        }
    }

    #[test]
    fn roundtrip_decode() {
        let g = Graph::sunlet4();
        let f = canonical_form(&g);
        let h = graph_from_bytes(&f).unwrap();
        assert!(are_isomorphic(&g, &h));
        assert_eq!(canonical_form(&h), f);
    }
}
