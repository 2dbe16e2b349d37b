//! Reduced simplicial homology of small complexes.
//!
//! Chain groups are assembled from the explicit face lists of a facet antichain
//! and ranks of the boundary maps are computed exactly over the chosen field.
//! The augmented complex is used throughout, so H~_{-1} appears at index 0 of the
//! returned dimension vector and is zero for every nonempty complex.

use crate::complex::SimplicialComplex;
use crate::field::FieldSpec;
use crate::linalg::{self, SparseCol};
use crate::vset::VertexSet;
use std::collections::HashMap;

/// Dimensions of H~_{-1}, H~_0, H~_1, ... of the complex.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: &FieldSpec) -> Vec<usize> {
    homology_of_facets(c.facets(), field)
}

/// Same computation from a raw facet antichain (labels need not be contiguous).
pub fn homology_of_facets(facets: &[VertexSet], field: &FieldSpec) -> Vec<usize> {
    assert!(!facets.is_empty(), "homology needs a nonempty complex");
    let dim = facets.iter().map(|f| f.len()).max().unwrap() - 1;

    // a cone is contractible: some vertex lies in every facet
    let mut apex = facets[0];
    for f in facets {
        apex = apex.intersection(*f);
    }
    if !apex.is_empty() {
        return vec![0; dim + 2];
    }

    // collect faces by size (size = k+1 for dimension k)
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); dim + 2];
    {
        let mut seen: std::collections::HashSet<u64> = std::collections::HashSet::new();
        for f in facets {
            for s in f.subsets() {
                if seen.insert(s.bits()) {
                    by_size[s.len()].push(s.bits());
                }
            }
        }
    }
    for bucket in &mut by_size {
        bucket.sort_unstable();
    }
    let index: Vec<HashMap<u64, usize>> = by_size
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, &s)| (s, i)).collect())
        .collect();

    // boundary ranks: boundary_ranks[k] = rank of ∂_k : C_k -> C_{k-1}, with
    // C_{-1} spanned by the empty face
    let mut boundary_ranks = vec![0usize; dim + 2];
    // ∂_0 maps vertices to the empty face: rank 1 when any vertex exists
    boundary_ranks[0] = usize::from(!by_size[1].is_empty());
    for k in 1..=dim {
        let srows = &by_size[k]; // (k-1)-faces have k vertices
        let scols = &by_size[k + 1];
        if scols.is_empty() || srows.is_empty() {
            boundary_ranks[k] = 0;
            continue;
        }
        let cols: Vec<SparseCol> = scols
            .iter()
            .map(|&bits| {
                let face = VertexSet::from_bits(bits);
                let mut col: SparseCol = Vec::with_capacity(face.len());
                for (pos, v) in face.iter().enumerate() {
                    let sub = face.without(v).bits();
                    let r = index[k][&sub];
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    col.push((r, sign));
                }
                col.sort_unstable();
                col
            })
            .collect();
        debug_assert!(boundary_squares_to_zero(&by_size[k + 1], &index[k], k));
        boundary_ranks[k] = linalg::rank(&cols, srows.len(), field);
    }

    // dim H~_k = f_k - rank ∂_k - rank ∂_{k+1}; index shift: out[k+1] = H~_k
    let mut out = vec![0usize; dim + 2];
    // H~_{-1}: f_{-1} = 1, minus rank ∂_0
    out[0] = 1 - boundary_ranks[0];
    for k in 0..=dim {
        let faces_k = by_size[k + 1].len();
        let rank_in = boundary_ranks[k];
        let rank_out = if k + 1 <= dim { boundary_ranks[k + 1] } else { 0 };
        out[k + 1] = faces_k - rank_in - rank_out;
    }
    debug_assert_eq!(out[0], 0, "nondegenerate complexes have trivial H~_(-1)");
    out
}

#[cfg(debug_assertions)]
fn boundary_squares_to_zero(faces: &[u64], _index: &HashMap<u64, usize>, _k: usize) -> bool {
    // ∂∂ = 0 follows when each (k-2)-subface of a k-face is reached twice with
    // opposite signs; verify the sign pattern on every face
    for &bits in faces {
        let face = VertexSet::from_bits(bits);
        let verts = face.vertices();
        let mut coeffs: HashMap<u64, i64> = HashMap::new();
        for (i, &v) in verts.iter().enumerate() {
            let s1 = if i % 2 == 0 { 1i64 } else { -1 };
            let f1 = face.without(v);
            for (j, u) in f1.iter().enumerate() {
                let s2 = if j % 2 == 0 { 1i64 } else { -1 };
                *coeffs.entry(f1.without(u).bits()).or_insert(0) += s1 * s2;
            }
        }
        if coeffs.values().any(|&c| c != 0) {
            return false;
        }
    }
    true
}

#[cfg(not(debug_assertions))]
fn boundary_squares_to_zero(_faces: &[u64], _index: &HashMap<u64, usize>, _k: usize) -> bool {
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::vset::VertexSet as VS;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn simplex_is_acyclic() {
        let s = SimplicialComplex::simplex(5);
        assert!(reduced_homology_dims(&s, &q()).iter().all(|&d| d == 0));
    }

    #[test]
    fn two_points() {
        let c = SimplicialComplex::from_facets(2, vec![VS::singleton(0), VS::singleton(1)]).unwrap();
        let dims = reduced_homology_dims(&c, &q());
        assert_eq!(dims, vec![0, 1]);
        let three = SimplicialComplex::clique_complex(&Graph::empty_graph(3).unwrap());
        assert_eq!(reduced_homology_dims(&three, &q()), vec![0, 2]);
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        // C3 as a hollow complex: 3 vertices, 3 edges; its solid clique complex is acyclic
        let hollow = SimplicialComplex::from_facets(
            3,
            vec![
                VS::from_vertices([0, 1]),
                VS::from_vertices([1, 2]),
                VS::from_vertices([0, 2]),
            ],
        )
        .unwrap();
        assert_eq!(reduced_homology_dims(&hollow, &q()), vec![0, 0, 1]);
        let solid = SimplicialComplex::clique_complex(&Graph::cycle(3).unwrap());
        assert!(reduced_homology_dims(&solid, &q()).iter().all(|&d| d == 0));
        let long_cycle = SimplicialComplex::clique_complex(&Graph::cycle(6).unwrap());
        assert_eq!(reduced_homology_dims(&long_cycle, &q()), vec![0, 0, 1]);
    }

    #[test]
    fn hollow_tetrahedron_is_a_sphere() {
        let faces: Vec<VS> = crate::vset::k_subsets(4, 3).collect();
        let c = SimplicialComplex::from_facets(4, faces).unwrap();
        assert_eq!(reduced_homology_dims(&c, &q()), vec![0, 0, 0, 1]);
    }

    #[test]
    fn projective_plane_depends_on_the_field() {
        // minimal 6-vertex triangulation of the real projective plane
        let tris = [
            [0, 1, 4],
            [0, 1, 5],
            [0, 2, 3],
            [0, 2, 5],
            [0, 3, 4],
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [2, 4, 5],
            [3, 4, 5],
        ];
        let faces: Vec<VS> = tris.iter().map(|t| VS::from_vertices(t.iter().copied())).collect();
        let c = SimplicialComplex::from_facets(6, faces).unwrap();
        // Euler characteristic sanity: 6 - 15 + 10 = 1
        let fb = c.faces_by_size();
        assert_eq!((fb[1].len(), fb[2].len(), fb[3].len()), (6, 15, 10));
        assert_eq!(
            reduced_homology_dims(&c, &FieldSpec::Rationals),
            vec![0, 0, 0, 0]
        );
        assert_eq!(
            reduced_homology_dims(&c, &FieldSpec::PrimeField(2)),
            vec![0, 0, 1, 1]
        );
        assert_eq!(
            reduced_homology_dims(&c, &FieldSpec::PrimeField(3)),
            vec![0, 0, 0, 0]
        );
    }
}
