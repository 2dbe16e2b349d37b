//! Randomized invariants over graphs and complexes.

use proptest::prelude::*;
use secantx::canon;
use secantx::complex::SimplicialComplex;
use secantx::graph::Graph;
use secantx::secant;
use secantx::vset::VertexSet;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n.saturating_sub(1)) / 2;
        (Just(n), proptest::bits::u64::masked((1u64 << bits) - 1)).prop_map(|(n, mask)| {
            let mut g = Graph::new(n);
            let mut t = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask >> t & 1 == 1 {
                        g.add_edge(i, j).unwrap();
                    }
                    t += 1;
                }
            }
            g
        })
    })
}

fn complex_on(n: usize) -> impl Strategy<Value = SimplicialComplex> {
    let full = (1u64 << n) - 1;
    proptest::collection::vec(0..=full, 1..=(n + 2)).prop_map(move |raw| {
        let mut facets: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        facets.extend(raw.into_iter().map(VertexSet::from_bits));
        SimplicialComplex::from_facets(n, facets).unwrap()
    })
}

fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(complex_on)
}

fn arb_complex_pair(max_n: usize) -> impl Strategy<Value = (SimplicialComplex, SimplicialComplex)> {
    (1..=max_n).prop_flat_map(|n| (complex_on(n), complex_on(n)))
}

fn arb_complex_triple(
    max_n: usize,
) -> impl Strategy<Value = (SimplicialComplex, SimplicialComplex, SimplicialComplex)> {
    (1..=max_n).prop_flat_map(|n| (complex_on(n), complex_on(n), complex_on(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_permutation_invariant(g in arb_graph(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let mut h = Graph::new(g.n());
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]).unwrap();
        }
        prop_assert_eq!(canon::canonical_form(&g), canon::canonical_form(&h));
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(8)) {
        prop_assert_eq!(g.complement().complement().edges(), g.edges());
    }

    #[test]
    fn induced_subgraph_composes(g in arb_graph(8), w1 in any::<u64>(), w2 in any::<u64>()) {
        let all = g.vertices();
        let w1 = VertexSet::from_bits(w1).intersection(all);
        let w2 = VertexSet::from_bits(w2).intersection(w1);
        prop_assume!(!w2.is_empty());
        let inner = g.induced(w1);
        let w2_rel = w2.compress_into(w1);
        prop_assert_eq!(inner.induced(w2_rel).edges(), g.induced(w2).edges());
    }

    #[test]
    fn join_is_commutative_and_matches_face_products(
        (a, b) in arb_complex_pair(5),
    ) {
        let ab = a.embedded_join(&b).unwrap();
        let ba = b.embedded_join(&a).unwrap();
        prop_assert_eq!(&ab, &ba);
        // face set is exactly the set of pairwise unions
        let mut expect: Vec<VertexSet> = a
            .all_faces()
            .iter()
            .flat_map(|&x| b.all_faces().iter().map(move |&y| x.union(y)).collect::<Vec<_>>())
            .collect();
        expect.sort_unstable();
        expect.dedup();
        let mut got = ab.all_faces();
        got.sort_unstable();
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn join_is_associative((a, b, c) in arb_complex_triple(4)) {
        let left = a.embedded_join(&b).unwrap().embedded_join(&c).unwrap();
        let right = a.embedded_join(&b.embedded_join(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn facets_stay_an_antichain(c in arb_complex(6), w in any::<u64>()) {
        let check = |x: &SimplicialComplex| {
            for (i, f) in x.facets().iter().enumerate() {
                for (j, g) in x.facets().iter().enumerate() {
                    if i != j {
                        assert!(!f.is_subset_of(*g), "facet antichain violated");
                    }
                }
            }
        };
        check(&c);
        let w = VertexSet::from_bits(w).intersection(VertexSet::full(c.n()));
        if !w.is_empty() {
            check(&c.induced(w).unwrap());
        }
        check(&secant::secant(&c, 2).unwrap());
        if let Some(f) = c.facets().first().copied() {
            check(&c.face_contraction(secantx::complex::Face(f)).unwrap());
        }
    }

    #[test]
    fn minimal_nonfaces_commute_with_restriction(c in arb_complex(6), w in any::<u64>()) {
        let w = VertexSet::from_bits(w).intersection(VertexSet::full(c.n()));
        prop_assume!(!w.is_empty());
        let restricted = c.induced(w).unwrap();
        let direct = restricted.minimal_nonfaces();
        let mut expect: Vec<VertexSet> = Vec::new();
        for s in w.subsets() {
            if s.is_empty() || c.is_face(s) {
                continue;
            }
            if s.iter().all(|v| c.is_face(s.without(v))) {
                expect.push(s.compress_into(w));
            }
        }
        expect.sort_by_key(|x| (x.len(), x.vertices()));
        prop_assert_eq!(direct, expect);
    }

    #[test]
    fn secants_are_monotone(c in arb_complex(6)) {
        for q in 1..=3 {
            let a = secant::secant(&c, q).unwrap();
            let b = secant::secant(&c, q + 1).unwrap();
            prop_assert!(b.contains_complex(&a));
        }
    }

    #[test]
    fn equal_secants_stay_equal(c in arb_complex(5), extra in any::<u64>()) {
        // nested pair: the larger complex adds one face
        let extra = VertexSet::from_bits(extra).intersection(VertexSet::full(c.n()));
        let mut facets = c.facets().to_vec();
        facets.push(extra);
        let d = SimplicialComplex::from_facets(c.n(), facets).unwrap();
        for q in 1..=3 {
            if secant::secant(&c, q).unwrap() == secant::secant(&d, q).unwrap() {
                prop_assert_eq!(
                    secant::secant(&c, q + 1).unwrap(),
                    secant::secant(&d, q + 1).unwrap()
                );
            }
        }
    }
}
