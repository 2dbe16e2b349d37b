//! Theorem verification suites over exhaustively enumerated small graphs.

use crate::error::{Error, Result};
use crate::field::FieldSpec;

pub const SUITES: &[&str] = &[
    "thm-main",
    "froberg",
    "cor-secant-linear",
    "cor-contraction",
    "thm-numerical",
    "del-pezzo",
    "cm-forests",
    "prop-4-17",
    "cor-3-6",
    "ebci",
    "prop-4-11",
    "prop-4-20",
    "prop-4-21",
    "lem-4-13",
    "eventually",
    "isol",
    "thm-2-8",
    "cor-2-13",
    "field-independence",
    "question-7-1",
];

/// Knobs shared by every suite; each suite clamps them to its own defaults.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n_max: Option<usize>,
    pub q_max: Option<usize>,
    pub p_max: Option<usize>,
    pub field: FieldSpec,
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: None,
            q_max: None,
            p_max: None,
            field: FieldSpec::Rationals,
            seed: 0x5eca47,
            samples: 200,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FailureRecord {
    /// replayable witness, graph6 unless stated otherwise
    pub witness: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub params: String,
    pub instances: u64,
    pub failures: Vec<FailureRecord>,
    pub infos: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "suite": self.suite,
            "params": self.params,
            "instances": self.instances,
            "passed": self.passed(),
            "failures": self.failures.iter().map(|f| serde_json::json!({
                "witness": f.witness,
                "expected": f.expected,
                "got": f.got,
            })).collect::<Vec<_>>(),
            "infos": self.infos,
        })
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} instances, {} failures){}",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances,
            self.failures.len(),
            if self.infos.is_empty() {
                String::new()
            } else {
                format!(" [{} infos]", self.infos.len())
            }
        )
    }
}

pub fn run_suite(id: &str, cfg: &SuiteConfig) -> Result<VerificationReport> {
    match id {
        "thm-main" => suites::thm_main(cfg),
        "froberg" => suites::froberg(cfg),
        "cor-secant-linear" => suites::cor_secant_linear(cfg),
        "cor-contraction" => suites::cor_contraction(cfg),
        "thm-numerical" => suites::thm_numerical(cfg),
        "del-pezzo" => suites::del_pezzo(cfg),
        "cm-forests" => suites::cm_forests(cfg),
        "prop-4-17" => suites::prop_4_17(cfg),
        "cor-3-6" => suites::cor_3_6(cfg),
        "ebci" => suites::ebci(cfg),
        "prop-4-11" => suites::prop_4_11(cfg),
        "prop-4-20" => suites::prop_4_20(cfg),
        "prop-4-21" => suites::prop_4_21(cfg),
        "lem-4-13" => suites::lem_4_13(cfg),
        "eventually" => suites::eventually(cfg),
        "isol" => suites::isol(cfg),
        "thm-2-8" => suites::thm_2_8(cfg),
        "cor-2-13" => suites::cor_2_13(cfg),
        "field-independence" => suites::field_independence(cfg),
        "question-7-1" => suites::question_7_1(cfg),
        _ => Err(Error::UnknownSuite(id.to_string(), SUITES.join(", "))),
    }
}

mod suites {
    use super::{FailureRecord, SuiteConfig, VerificationReport};
    use crate::betti::{
        betti_table_hochster, delpezzo_shape_table, herzog_kuhl_check, minimal_shape_table,
        BettiTable,
    };
    use crate::canon;
    use crate::census;
    use crate::complex::{Face, SimplicialComplex};
    use crate::enumerate::{enumerate_forests, enumerate_graphs, enumerate_graphs_up_to};
    use crate::error::Result;
    use crate::families;
    use crate::field::FieldSpec;
    use crate::graph::Graph;
    use crate::graph6::emit_graph6;
    use crate::homology::reduced_homology_dims;
    use crate::matching;
    use crate::secant;
    use crate::vset::VertexSet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rayon::prelude::*;

    fn g6(g: &Graph) -> String {
        emit_graph6(&canon::canonical_graph(g)).unwrap_or_else(|_| format!("{:?}", g))
    }

    fn report(
        suite: &str,
        params: String,
        instances: u64,
        mut failures: Vec<FailureRecord>,
        infos: Vec<String>,
    ) -> VerificationReport {
        failures.sort_by(|a, b| a.witness.cmp(&b.witness));
        VerificationReport {
            suite: suite.to_string(),
            params,
            instances,
            failures,
            infos,
        }
    }

    /// check one property over graphs in parallel, collecting failures
    fn sweep<F>(graphs: &[Graph], f: F) -> (u64, Vec<FailureRecord>)
    where
        F: Fn(&Graph) -> Vec<FailureRecord> + Sync,
    {
        let failures: Vec<FailureRecord> = graphs.par_iter().flat_map_iter(&f).collect();
        (graphs.len() as u64, failures)
    }

    fn table_of(g: &Graph, q: usize, field: &FieldSpec) -> Result<BettiTable> {
        betti_table_hochster(&secant::secant_of_graph(g, q)?, field)
    }

    /// the forbidden-subgraph side of the main theorem at level p
    fn rhs_clause(g: &Graph, q: usize, p: usize) -> Result<bool> {
        if !secant::generators_all_linear(g, q)? {
            return Ok(false);
        }
        if p >= 2 {
            for size in (q + 3)..=(2 * q + 2).min(g.n()) {
                for w in crate::vset::k_subsets(g.n(), size) {
                    if families::in_fq2(&g.induced(w), q).verdict {
                        return Ok(false);
                    }
                }
            }
        }
        if p >= 3 {
            for i in 3..=p {
                let len = 2 * q + i;
                if len <= g.n() && g.has_induced_cycle(len) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn thm_main(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(7).min(8);
        let q_max = cfg.q_max.unwrap_or(3);
        let p_max = cfg.p_max.unwrap_or(3);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let (instances, failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            for q in 1..=q_max {
                let bt = match table_of(g, q, &cfg.field) {
                    Ok(bt) => bt,
                    Err(e) => {
                        out.push(FailureRecord {
                            witness: g6(g),
                            expected: "a Betti table".into(),
                            got: format!("error: {}", e),
                        });
                        continue;
                    }
                };
                for p in 1..=p_max {
                    let lhs = bt.satisfies_ndp(q + 1, p);
                    let rhs = match rhs_clause(g, q, p) {
                        Ok(r) => r,
                        Err(e) => {
                            out.push(FailureRecord {
                                witness: g6(g),
                                expected: "a clause verdict".into(),
                                got: format!("error: {}", e),
                            });
                            continue;
                        }
                    };
                    if lhs != rhs {
                        out.push(FailureRecord {
                            witness: g6(g),
                            expected: format!("N_{{{},{}}} <=> clause at q={}, p={}", q + 1, p, q, p),
                            got: format!("table says {}, forbidden subgraphs say {}", lhs, rhs),
                        });
                    }
                }
            }
            out
        });
        Ok(report(
            "thm-main",
            format!("n <= {}, q <= {}, p <= {}, field {}", n_max, q_max, p_max, cfg.field),
            instances * (q_max as u64) * (p_max as u64),
            failures,
            vec![],
        ))
    }

    pub fn froberg(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(7).min(8);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let (instances, failures) = sweep(&graphs, |g| {
            let d = SimplicialComplex::clique_complex(g);
            let bt = betti_table_hochster(&d, &cfg.field).expect("desk scale");
            let linear = bt.regularity_ideal() <= 2;
            if linear != g.is_chordal() {
                vec![FailureRecord {
                    witness: g6(g),
                    expected: format!("reg I <= 2 iff chordal ({})", g.is_chordal()),
                    got: format!("reg I = {}", bt.regularity_ideal()),
                }]
            } else {
                vec![]
            }
        });
        Ok(report(
            "froberg",
            format!("n <= {}, field {}", n_max, cfg.field),
            instances,
            failures,
            vec![],
        ))
    }

    pub fn cor_secant_linear(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(7).min(8);
        let q_max = cfg.q_max.unwrap_or(3);
        let graphs: Vec<Graph> = enumerate_graphs_up_to(n_max)?
            .into_iter()
            .filter(|g| g.is_chordal())
            .collect();
        let (instances, failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            for q in 1..=q_max {
                let bt = table_of(g, q, &cfg.field).expect("desk scale");
                if bt.regularity_ideal() > q + 1 {
                    out.push(FailureRecord {
                        witness: g6(g),
                        expected: format!("reg I(σ_{}Δ) <= {}", q, q + 1),
                        got: format!("reg I = {}", bt.regularity_ideal()),
                    });
                }
            }
            out
        });
        Ok(report(
            "cor-secant-linear",
            format!("chordal, n <= {}, q <= {}, field {}", n_max, q_max, cfg.field),
            instances * q_max as u64,
            failures,
            vec![],
        ))
    }

    pub fn cor_contraction(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(7).min(7);
        let q_max = cfg.q_max.unwrap_or(2);
        let p_cap = cfg.p_max.unwrap_or(7);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let (instances, failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            let d = SimplicialComplex::clique_complex(g);
            for q in 1..=q_max {
                let bt = betti_table_hochster(&secant::secant(&d, q).unwrap(), &cfg.field)
                    .expect("desk scale");
                // graph side of the corollary: chordality of the class is preserved
                let chordal_q = families::is_q_secant_chordal(g, q).expect("desk scale").verdict;
                for (u, v) in g.edges() {
                    let e = VertexSet::from_vertices([u, v]);
                    let contracted = d.face_contraction(Face(e)).expect("edges are faces");
                    let bt_c =
                        betti_table_hochster(&secant::secant(&contracted, q).unwrap(), &cfg.field)
                            .expect("desk scale");
                    for p in 2..=p_cap {
                        if bt.satisfies_ndp(q + 1, p) && !bt_c.satisfies_ndp(q + 1, p - 1) {
                            out.push(FailureRecord {
                                witness: g6(g),
                                expected: format!(
                                    "N_{{{},{}}} passes to N_{{{},{}}} under contracting ({},{})",
                                    q + 1,
                                    p,
                                    q + 1,
                                    p - 1,
                                    u,
                                    v
                                ),
                                got: "contracted table violates the shifted property".into(),
                            });
                        }
                    }
                    if chordal_q {
                        let gc = g.contract_edge(u, v).expect("edge");
                        if !families::is_q_secant_chordal(&gc, q).expect("desk scale").verdict {
                            out.push(FailureRecord {
                                witness: g6(g),
                                expected: format!("G/e stays {}-secant chordal", q),
                                got: format!("contracting ({},{}) leaves the class", u, v),
                            });
                        }
                    }
                }
            }
            out
        });
        Ok(report(
            "cor-contraction",
            format!("n <= {}, q <= {}, field {}", n_max, q_max, cfg.field),
            instances * q_max as u64,
            failures,
            vec![],
        ))
    }

    pub fn thm_numerical(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(8).min(8);
        let q_max = cfg.q_max.unwrap_or(3);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let mut infos = Vec::new();
        let (instances, mut failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            let census = match census::component_census(g) {
                Ok(c) => c,
                Err(e) => {
                    out.push(FailureRecord {
                        witness: g6(g),
                        expected: "a census".into(),
                        got: format!("error: {}", e),
                    });
                    return out;
                }
            };
            for q in 1..=q_max {
                if !families::is_q_secant_chordal(g, q).expect("desk scale").verdict {
                    continue;
                }
                let bt = table_of(g, q, &cfg.field).expect("desk scale");
                for p in 1..=g.n().saturating_sub(q) {
                    let predicted = census::betti_by_census(&census, q, p);
                    let actual = bt.beta(p, q);
                    if predicted != actual {
                        out.push(FailureRecord {
                            witness: g6(g),
                            expected: format!("β_{{{},{}}} = {} by the census", p, q, predicted),
                            got: format!("Hochster gives {}", actual),
                        });
                    }
                }
            }
            out
        });
        // inversion identity on graphs where the vanishing hypotheses hold
        let inv_max = n_max.min(7);
        let inv_failures: Vec<FailureRecord> = enumerate_graphs_up_to(inv_max)?
            .par_iter()
            .flat_map_iter(|g| {
                let mut out = Vec::new();
                let census = census::component_census(g).expect("desk scale");
                let tables: Vec<Option<BettiTable>> = (0..=g.n())
                    .map(|q| {
                        if q == 0 {
                            None
                        } else {
                            table_of(g, q, &cfg.field).ok()
                        }
                    })
                    .collect();
                for m in 2..=g.n() {
                    for s in 1..m {
                        let hyp = (s..m).all(|q| {
                            tables[q]
                                .as_ref()
                                .map(|t| m < q + 1 || t.satisfies_ndp(q + 1, m - q - 1))
                                .unwrap_or(false)
                        });
                        if !hyp {
                            continue;
                        }
                        let mut acc: i128 = 0;
                        for q in s..m {
                            let beta = tables[q].as_ref().unwrap().beta(m - q, q) as i128;
                            let sign = if (q - s) % 2 == 0 { 1 } else { -1 };
                            acc += sign * binom_i128(q, s) * beta;
                        }
                        let expected = census.count(m, s) as i128;
                        if acc != expected {
                            out.push(FailureRecord {
                                witness: g6(g),
                                expected: format!("|H^{}_{}| = {}", s, m, expected),
                                got: format!("inversion sum = {}", acc),
                            });
                        }
                    }
                }
                out
            })
            .collect();
        failures.extend(inv_failures);
        infos.push(format!("inversion identity checked at n <= {}", inv_max));
        Ok(report(
            "thm-numerical",
            format!("n <= {}, q <= {}, field {}", n_max, q_max, cfg.field),
            instances * q_max as u64,
            failures,
            infos,
        ))
    }

    fn binom_i128(n: usize, k: usize) -> i128 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut acc: i128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as i128 / (i + 1) as i128;
        }
        acc
    }

    pub fn del_pezzo(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(8).min(8);
        let q_max = cfg.q_max.unwrap_or(3);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let (instances, failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            for q in 1..=q_max {
                let sq = secant::secant_of_graph(g, q).expect("desk scale");
                let universal = sq.universal_vertices();
                let core = if universal.is_empty() {
                    g.clone()
                } else if universal == g.vertices() {
                    continue;
                } else {
                    g.induced(g.vertices().difference(universal))
                };
                let by_table = families::is_del_pezzo_secant(&core, q, &cfg.field)
                    .expect("universal vertices were removed");
                let by_structure = families::del_pezzo_trichotomy(&core, q)
                    .expect("desk scale")
                    .is_some();
                if by_table != by_structure {
                    out.push(FailureRecord {
                        witness: g6(&core),
                        expected: format!("table match iff structural clause at q = {}", q),
                        got: format!("table {}, structure {}", by_table, by_structure),
                    });
                }
            }
            out
        });
        Ok(report(
            "del-pezzo",
            format!("n <= {}, q <= {}, field {}", n_max, q_max, cfg.field),
            instances * q_max as u64,
            failures,
            vec![],
        ))
    }

    pub fn cm_forests(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(10).min(12);
        let q_list: Vec<usize> = (2..=cfg.q_max.unwrap_or(3)).collect();
        let mut forests: Vec<Graph> = Vec::new();
        for n in 1..=n_max {
            forests.extend(enumerate_forests(n)?);
        }
        let (_, failures) = sweep(&forests, |g| {
            let mut out = Vec::new();
            for &q in &q_list {
                if g.n() < 2 * q + 2 || matching::matching_number(g) < q {
                    continue;
                }
                match families::cm_forest_parts(g, q) {
                    Err(e) => out.push(FailureRecord {
                        witness: g6(g),
                        expected: "hypotheses admit the test".into(),
                        got: format!("error: {}", e),
                    }),
                    Ok(parts) => {
                        if parts.agreed().is_none() {
                            out.push(FailureRecord {
                                witness: g6(g),
                                expected: "path test = separator criterion = pd comparison".into(),
                                got: format!("{:?}", parts),
                            });
                        }
                    }
                }
            }
            out
        });
        // boundary instances: subdivided trees on 2q+1 vertices are CM with ν = q
        let mut boundary_failures = Vec::new();
        let mut checked = 0u64;
        for &q in &q_list {
            for t0 in crate::enumerate::enumerate_trees(q + 1)? {
                let t = t0.subdivide_all_edges();
                checked += 1;
                let nu = matching::matching_number(&t);
                let cm = crate::betti::is_cohen_macaulay(
                    &secant::secant_of_graph(&t, q)?,
                    &cfg.field,
                )?;
                if nu != q || !cm {
                    boundary_failures.push(FailureRecord {
                        witness: g6(&t),
                        expected: format!("CM subdivided tree with ν = {}", q),
                        got: format!("ν = {}, CM = {}", nu, cm),
                    });
                }
            }
        }
        let instances = forests.len() as u64 + checked;
        let mut all = failures;
        all.extend(boundary_failures);
        Ok(report(
            "cm-forests",
            format!("forests n <= {}, q in {:?}, field {}", n_max, q_list, cfg.field),
            instances,
            all,
            vec![],
        ))
    }

    pub fn prop_4_17(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let q_max = cfg.q_max.unwrap_or(3);
        let mut failures = Vec::new();
        let mut instances = 0u64;
        // F_{q,1}: one generator in top degree
        for (g, q) in families::fq1_samples(20)? {
            instances += 1;
            let bt = table_of(&g, q, &cfg.field)?;
            let mut expect = BettiTable::new(cfg.field);
            expect.add(0, 0, 1);
            expect.add(1, g.n() - 1, 1);
            if bt != expect {
                failures.push(FailureRecord {
                    witness: g6(&g),
                    expected: format!("single-generator table at q = {}", q),
                    got: format!("{:?}", bt),
                });
            }
        }
        // F_{q,2}: β_{1,q} = 2 and β_{2,2q-s} = 1
        for q in 1..=q_max {
            for g in families::fq2_members(q)? {
                instances += 1;
                let s = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
                let bt = table_of(&g, q, &cfg.field)?;
                let mut expect = BettiTable::new(cfg.field);
                expect.add(0, 0, 1);
                expect.add(1, q, 2);
                expect.add(2, 2 * q - s, 1);
                if bt != expect {
                    failures.push(FailureRecord {
                        witness: g6(&g),
                        expected: format!("two-generator table with s = {} at q = {}", s, q),
                        got: format!("{:?}", bt),
                    });
                }
            }
        }
        // cycles match the del Pezzo shape with its corner entry; at c = 1 and
        // c = 2 the closed form degenerates to the one- and two-generator tables
        for q in 1..=q_max {
            for c in 1..=4usize {
                if 2 * q + c < 4 {
                    continue;
                }
                instances += 1;
                let g = Graph::cycle(2 * q + c)?;
                let bt = table_of(&g, q, &cfg.field)?;
                let expect = delpezzo_shape_table(c, q, cfg.field);
                if bt != expect || bt.beta(c, 2 * q) != 1 {
                    failures.push(FailureRecord {
                        witness: g6(&g),
                        expected: format!("del Pezzo table c = {}, q = {}", c, q),
                        got: format!("{:?}", bt),
                    });
                }
            }
        }
        Ok(report(
            "prop-4-17",
            format!("20 F_q1 samples, all F_q2 members q <= {}, cycles c <= 4", q_max),
            instances,
            failures,
            vec![],
        ))
    }

    pub fn cor_3_6(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(10).min(12);
        let q_max = cfg.q_max.unwrap_or(4);
        let mut failures = Vec::new();
        let mut instances = 0u64;
        for n in 1..=n_max {
            for q in 1..=q_max {
                for (name, g) in [("path", Graph::path(n)?), ("empty", Graph::empty_graph(n)?)] {
                    instances += 1;
                    let sq = secant::secant_of_graph(&g, q)?;
                    let bt = betti_table_hochster(&sq, &cfg.field)?;
                    let c = sq.codimension();
                    let expect = minimal_shape_table(c, q, cfg.field);
                    if bt != expect {
                        failures.push(FailureRecord {
                            witness: format!("{}({}) q={}", name, n, q),
                            expected: format!("minimal-shape table with c = {}", c),
                            got: format!("{:?}", bt),
                        });
                        continue;
                    }
                    if c > 0 {
                        match herzog_kuhl_check(&bt) {
                            Ok(true) => {}
                            other => failures.push(FailureRecord {
                                witness: format!("{}({}) q={}", name, n, q),
                                expected: "pure table passing the ratio test".into(),
                                got: format!("{:?}", other),
                            }),
                        }
                    }
                }
            }
        }
        Ok(report(
            "cor-3-6",
            format!("paths and edgeless graphs, n <= {}, q <= {}", n_max, q_max),
            instances,
            failures,
            vec![],
        ))
    }

    pub fn ebci(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let q_max = cfg.q_max.unwrap_or(3);
        let mut failures = Vec::new();
        let mut instances = 0u64;
        for q in 1..=q_max {
            let n = 2 * q + 2;
            if n > 8 {
                continue;
            }
            let graphs = enumerate_graphs(n)?;
            instances += graphs.len() as u64;
            let fails: Vec<FailureRecord> = graphs
                .par_iter()
                .flat_map_iter(|g| {
                    let mut out = Vec::new();
                    let eb = families::is_elementary_bipartite(g).verdict;
                    let gens = secant::secant_minimal_generators(g, q).expect("desk scale");
                    let two_ci = gens.len() == 2
                        && gens.iter().all(|x| x.vertices.len() == q + 1)
                        && gens[0].vertices.is_disjoint(gens[1].vertices);
                    // degree-(q+1) slice: nonface count and disjointness
                    let table = secant::secant_face_table(g, q).expect("desk scale");
                    let slice: Vec<VertexSet> = crate::vset::k_subsets(g.n(), q + 1)
                        .filter(|w| !table[w.bits() as usize])
                        .collect();
                    let slice_ci = slice.len() == 2 && slice[0].is_disjoint(slice[1]);
                    if eb != two_ci || eb != slice_ci {
                        out.push(FailureRecord {
                            witness: g6(g),
                            expected: "EB iff two disjoint generators iff degree slice".into(),
                            got: format!("eb {}, gens {}, slice {}", eb, two_ci, slice_ci),
                        });
                    }
                    if eb && two_ci {
                        // the two monomials are the bipartition classes, the ideal
                        // is F_{q,1}-free, and the next secant is the whole simplex
                        let (u, w) = matching::bipartition(g).expect("EB graphs are bipartite");
                        let parts = [u, w];
                        if !(parts.contains(&gens[0].vertices) && parts.contains(&gens[1].vertices))
                        {
                            out.push(FailureRecord {
                                witness: g6(g),
                                expected: "generators are the bipartition classes".into(),
                                got: format!("{:?}", gens.iter().map(|x| x.vertices).collect::<Vec<_>>()),
                            });
                        }
                        if !secant::generators_all_linear(g, q).expect("desk scale") {
                            out.push(FailureRecord {
                                witness: g6(g),
                                expected: "EB graphs are F_{q,1}-free".into(),
                                got: "a high-degree generator".into(),
                            });
                        }
                        if !secant::secant_of_graph(g, q + 1).expect("desk scale").is_simplex() {
                            out.push(FailureRecord {
                                witness: g6(g),
                                expected: "I(σ_{q+1}) = 0".into(),
                                got: "σ_{q+1} is not the simplex".into(),
                            });
                        }
                    }
                    out
                })
                .collect();
            failures.extend(fails);
        }
        Ok(report(
            "ebci",
            format!("all graphs on 2q+2 vertices, q <= {}", q_max),
            instances,
            failures,
            vec![],
        ))
    }

    pub fn prop_4_11(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let q_max = cfg.q_max.unwrap_or(3);
        let mut failures = Vec::new();
        let mut instances = 0u64;
        for q in 1..=q_max {
            for g in families::fq2_members(q)? {
                for (u, v) in g.edges() {
                    if edge_in_induced_c4(&g, (u, v)) {
                        continue;
                    }
                    instances += 1;
                    let contracted = g.contract_edge(u, v).expect("edge");
                    if !families::in_fq1(&contracted, q).verdict {
                        failures.push(FailureRecord {
                            witness: g6(&g),
                            expected: format!("G/e in F_{{{},1}} for e = ({},{})", q, u, v),
                            got: "contraction left the family".into(),
                        });
                    }
                }
            }
        }
        Ok(report(
            "prop-4-11",
            format!("all F_q2 members, q <= {}", q_max),
            instances,
            failures,
            vec![],
        ))
    }

    fn edge_in_induced_c4(g: &Graph, e: (usize, usize)) -> bool {
        for w in crate::vset::k_subsets(g.n(), 4) {
            if w.contains(e.0) && w.contains(e.1) {
                let h = g.induced(w);
                let cycle =
                    h.edge_count() == 4 && (0..4).all(|v| h.degree(v) == 2) && h.is_connected();
                if cycle {
                    return true;
                }
            }
        }
        false
    }

    pub fn prop_4_20(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(7).min(7);
        let q_max = cfg.q_max.unwrap_or(3);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let (instances, failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            for q in 1..=q_max {
                let hyp_lower = (2..q).all(|j| fq1_free(g, j));
                let hyp = hyp_lower
                    && if q == 1 {
                        fq2_free(g, 1) && (g.n() < 5 || !g.has_induced_cycle(5))
                    } else {
                        fq1_free(g, q) && (2 * q + 3 > g.n() || !g.has_induced_cycle(2 * q + 3))
                    };
                if hyp && !fq1_free(g, q + 1) {
                    out.push(FailureRecord {
                        witness: g6(g),
                        expected: format!("F_{{{},1}}-freeness propagates", q + 1),
                        got: format!("hypotheses hold at q = {} but the conclusion fails", q),
                    });
                }
            }
            out
        });
        Ok(report(
            "prop-4-20",
            format!("n <= {}, q <= {}", n_max, q_max),
            instances * q_max as u64,
            failures,
            vec![],
        ))
    }

    fn fq1_free(g: &Graph, q: usize) -> bool {
        secant::generators_all_linear(g, q).expect("desk scale")
    }

    fn fq2_free(g: &Graph, q: usize) -> bool {
        for size in (q + 3)..=(2 * q + 2).min(g.n()) {
            for w in crate::vset::k_subsets(g.n(), size) {
                if families::in_fq2(&g.induced(w), q).verdict {
                    return false;
                }
            }
        }
        true
    }

    pub fn prop_4_21(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(7).min(8);
        let q_max = cfg.q_max.unwrap_or(3);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let (instances, failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            for q in 1..=q_max {
                let hyp = fq2_free(g, q) && (2 * q + 4 > g.n() || !g.has_induced_cycle(2 * q + 4));
                if hyp && !fq2_free(g, q + 1) {
                    out.push(FailureRecord {
                        witness: g6(g),
                        expected: format!("F_{{{},2}}-freeness propagates", q + 1),
                        got: format!("hypotheses hold at q = {} but the conclusion fails", q),
                    });
                }
            }
            out
        });
        Ok(report(
            "prop-4-21",
            format!("n <= {}, q <= {}", n_max, q_max),
            instances * q_max as u64,
            failures,
            vec![],
        ))
    }

    pub fn lem_4_13(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(7).min(8);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let (instances, failures) = sweep(&graphs, |g| {
            let all_contractions_bipartite = g
                .edges()
                .iter()
                .all(|&(u, v)| matching::bipartition(&g.contract_edge(u, v).unwrap()).is_some());
            if !all_contractions_bipartite {
                return vec![];
            }
            let conclusion = g.is_forest() || odd_cycle_plus_isolated(g);
            if conclusion {
                vec![]
            } else {
                vec![FailureRecord {
                    witness: g6(g),
                    expected: "forest or odd cycle plus isolated vertices".into(),
                    got: "hypothesis holds but the conclusion fails".into(),
                }]
            }
        });
        Ok(report(
            "lem-4-13",
            format!("n <= {}", n_max),
            instances,
            failures,
            vec![],
        ))
    }

    fn odd_cycle_plus_isolated(g: &Graph) -> bool {
        let comps = g.components();
        let mut cycle_seen = false;
        for c in comps {
            let h = g.induced(c);
            if h.n() == 1 {
                continue;
            }
            let is_cycle =
                h.n() >= 3 && h.edge_count() == h.n() && (0..h.n()).all(|v| h.degree(v) == 2);
            if is_cycle && h.n() % 2 == 1 && !cycle_seen {
                cycle_seen = true;
            } else {
                return false;
            }
        }
        cycle_seen
    }

    pub fn eventually(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(6).min(7);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut failures = Vec::new();
        let mut nontrivial = 0u64;
        let mut instances = 0u64;
        // a deterministic seed pair on which the hypothesis genuinely bites
        let c4 = SimplicialComplex::clique_complex(&Graph::cycle(4)?);
        let mut pairs: Vec<(SimplicialComplex, SimplicialComplex)> =
            vec![(c4.clone(), SimplicialComplex::simplex(4))];
        for _ in 0..cfg.samples {
            let n = rng.gen_range(3..=n_max);
            let d1 = random_complex(&mut rng, n);
            let mut extra = d1.facets().to_vec();
            for _ in 0..rng.gen_range(1..=2) {
                extra.push(random_subset(&mut rng, n));
            }
            let d2 = SimplicialComplex::from_facets(n, extra).expect("superset stays valid");
            pairs.push((d1, d2));
        }
        for (d1, d2) in pairs {
            for q in 1..=3usize {
                instances += 1;
                let s1 = secant::secant(&d1, q)?;
                let s2 = secant::secant(&d2, q)?;
                if s1 != s2 {
                    continue;
                }
                nontrivial += 1;
                let t1 = secant::secant(&d1, q + 1)?;
                let t2 = secant::secant(&d2, q + 1)?;
                if t1 != t2 {
                    failures.push(FailureRecord {
                        witness: format!("{:?} vs {:?}", d1, d2),
                        expected: format!("σ_{} equal implies σ_{} equal", q, q + 1),
                        got: "higher secants differ".into(),
                    });
                }
            }
        }
        Ok(report(
            "eventually",
            format!("{} random nested pairs, n <= {}", cfg.samples, n_max),
            instances,
            failures,
            vec![format!("{} pairs with equal σ_q", nontrivial)],
        ))
    }

    fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
        let mut s = VertexSet::empty();
        for v in 0..n {
            if rng.gen_bool(0.5) {
                s = s.with(v);
            }
        }
        s
    }

    fn random_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
        let mut facets: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        for _ in 0..rng.gen_range(1..=n) {
            facets.push(random_subset(rng, n));
        }
        SimplicialComplex::from_facets(n, facets).expect("singletons keep it nondegenerate")
    }

    pub fn isol(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(5).min(5);
        let q_max = cfg.q_max.unwrap_or(3);
        let mut pairs: Vec<(SimplicialComplex, SimplicialComplex)> = Vec::new();
        // all pairs of clique complexes on up to n_max vertices each
        let small: Vec<SimplicialComplex> = enumerate_graphs_up_to(n_max)?
            .iter()
            .map(SimplicialComplex::clique_complex)
            .collect();
        for a in &small {
            for b in &small {
                pairs.push((a.clone(), b.clone()));
            }
        }
        // plus random non-clique complexes
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x150);
        for _ in 0..cfg.samples.min(100) {
            let n1 = rng.gen_range(2..=n_max);
            let n2 = rng.gen_range(2..=n_max);
            pairs.push((random_complex(&mut rng, n1), random_complex(&mut rng, n2)));
        }
        let checks: Vec<(usize, FailureRecord)> = pairs
            .par_iter()
            .enumerate()
            .flat_map_iter(|(idx, (a, b))| {
                let mut out = Vec::new();
                for q in 1..=q_max {
                    match secant::disjoint_union_ideal_check(a, b, q) {
                        Ok(true) => {}
                        Ok(false) => out.push((
                            idx,
                            FailureRecord {
                                witness: format!("{:?} ⊔ {:?} at q = {}", a, b, q),
                                expected: "ideal identity".into(),
                                got: "generator sets differ".into(),
                            },
                        )),
                        Err(e) => out.push((
                            idx,
                            FailureRecord {
                                witness: format!("{:?} ⊔ {:?} at q = {}", a, b, q),
                                expected: "a verdict".into(),
                                got: format!("error: {}", e),
                            },
                        )),
                    }
                }
                out
            })
            .collect();
        let instances = pairs.len() as u64 * q_max as u64;
        Ok(report(
            "isol",
            format!("{} complex pairs, q <= {}", pairs.len(), q_max),
            instances,
            checks.into_iter().map(|(_, f)| f).collect(),
            vec![],
        ))
    }

    pub fn thm_2_8(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(6).min(7);
        let q_max = cfg.q_max.unwrap_or(3);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let (instances, mut failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            for q in 1..=q_max {
                let table = secant::secant_face_table(g, q).expect("desk scale");
                for bits in 0..(1usize << g.n()) {
                    let w = VertexSet::from_bits(bits as u64);
                    if w.len() == q && !table[bits] {
                        out.push(FailureRecord {
                            witness: g6(g),
                            expected: format!("every {}-subset is a face", q),
                            got: format!("{} is not", w),
                        });
                    }
                    if w.len() == q + 1 {
                        let edgeless = g.induced(w).edge_count() == 0;
                        if table[bits] != !edgeless {
                            out.push(FailureRecord {
                                witness: g6(g),
                                expected: "(q+1)-subsets: nonface iff edgeless".into(),
                                got: format!("{} breaks it", w),
                            });
                        }
                    }
                }
            }
            out
        });
        // the same degree structure on random non-clique complexes
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x28);
        let mut extra = 0u64;
        for _ in 0..cfg.samples.min(100) {
            let n = rng.gen_range(2..=n_max);
            let d = random_complex(&mut rng, n);
            for q in 1..=q_max {
                extra += 1;
                let sq = secant::secant(&d, q)?;
                for bits in 1..(1u64 << n) {
                    let w = VertexSet::from_bits(bits);
                    if w.len() == q && !sq.is_face(w) {
                        failures.push(FailureRecord {
                            witness: format!("{:?}", d),
                            expected: format!("every {}-subset is a face", q),
                            got: format!("{} is not", w),
                        });
                    }
                    if w.len() == q + 1 {
                        let edges_inside =
                            d.facets().iter().any(|f| f.intersection(w).len() >= 2);
                        if sq.is_face(w) != edges_inside {
                            failures.push(FailureRecord {
                                witness: format!("{:?}", d),
                                expected: "(q+1)-subsets: face iff an edge inside".into(),
                                got: format!("{} breaks it", w),
                            });
                        }
                    }
                }
            }
        }
        Ok(report(
            "thm-2-8",
            format!("n <= {}, q <= {}", n_max, q_max),
            instances * q_max as u64 + extra,
            failures,
            vec![],
        ))
    }

    pub fn cor_2_13(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(6).min(8);
        let q_max = cfg.q_max.unwrap_or(3);
        let graphs = enumerate_graphs_up_to(n_max.min(6))?;
        let (instances, mut failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            let d = SimplicialComplex::clique_complex(g);
            for q in 1..=q_max {
                let sq = secant::secant(&d, q).expect("desk scale");
                // hypothesis: generated in degree q+1
                if !sq
                    .minimal_nonfaces()
                    .iter()
                    .all(|w| w.len() == q + 1)
                {
                    continue;
                }
                let dims = reduced_homology_dims(&sq, &cfg.field);
                for (u, v) in g.edges() {
                    let e = VertexSet::from_vertices([u, v]);
                    let cq = sq.face_contraction(Face(e)).expect("edge is a face");
                    let dims_c = reduced_homology_dims(&cq, &cfg.field);
                    if !dims_equal(&dims, &dims_c) {
                        out.push(FailureRecord {
                            witness: g6(g),
                            expected: format!("homology preserved under contracting ({},{})", u, v),
                            got: format!("{:?} vs {:?}", dims, dims_c),
                        });
                    }
                }
            }
            out
        });
        // random graphs at n = 7, 8 when allowed
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x213);
        let mut extra = 0u64;
        if n_max >= 7 {
            for _ in 0..cfg.samples.min(60) {
                let n = rng.gen_range(7..=n_max);
                let mut g = Graph::new(n);
                for i in 0..n {
                    for j in (i + 1)..n {
                        if rng.gen_bool(0.4) {
                            g.add_edge(i, j).unwrap();
                        }
                    }
                }
                let d = SimplicialComplex::clique_complex(&g);
                for q in 1..=q_max {
                    let sq = secant::secant(&d, q)?;
                    if !sq.minimal_nonfaces().iter().all(|w| w.len() == q + 1) {
                        continue;
                    }
                    extra += 1;
                    let dims = reduced_homology_dims(&sq, &cfg.field);
                    for (u, v) in g.edges() {
                        let e = VertexSet::from_vertices([u, v]);
                        let cq = sq.face_contraction(Face(e))?;
                        let dims_c = reduced_homology_dims(&cq, &cfg.field);
                        if !dims_equal(&dims, &dims_c) {
                            failures.push(FailureRecord {
                                witness: g6(&g),
                                expected: "homology invariance".into(),
                                got: format!("{:?} vs {:?}", dims, dims_c),
                            });
                        }
                    }
                }
            }
        }
        Ok(report(
            "cor-2-13",
            format!("n <= {}, q <= {}, field {}", n_max, q_max, cfg.field),
            instances * q_max as u64 + extra,
            failures,
            vec![],
        ))
    }

    fn dims_equal(a: &[usize], b: &[usize]) -> bool {
        let len = a.len().max(b.len());
        (0..len).all(|i| a.get(i).copied().unwrap_or(0) == b.get(i).copied().unwrap_or(0))
    }

    pub fn field_independence(cfg: &SuiteConfig) -> Result<VerificationReport> {
        // on q-secant chordal graphs the Betti numbers count induced subgraphs,
        // so the table is the same over every coefficient field; any rational
        // versus GF(2) disagreement on this class is reported
        let n_max = cfg.n_max.unwrap_or(7).min(7);
        let q_max = cfg.q_max.unwrap_or(3);
        let graphs = enumerate_graphs_up_to(n_max)?;
        let (instances, failures) = sweep(&graphs, |g| {
            let mut out = Vec::new();
            for q in 1..=q_max {
                if !families::is_q_secant_chordal(g, q).expect("desk scale").verdict {
                    continue;
                }
                let over_q = table_of(g, q, &FieldSpec::Rationals).expect("desk scale");
                let over_f2 = table_of(g, q, &FieldSpec::PrimeField(2)).expect("desk scale");
                if over_q != over_f2 {
                    out.push(FailureRecord {
                        witness: g6(g),
                        expected: format!("equal tables over Q and F2 at q = {}", q),
                        got: "tables disagree".into(),
                    });
                }
            }
            out
        });
        Ok(report(
            "field-independence",
            format!("q-secant chordal graphs, n <= {}, q <= {}", n_max, q_max),
            instances * q_max as u64,
            failures,
            vec![],
        ))
    }

    pub fn question_7_1(cfg: &SuiteConfig) -> Result<VerificationReport> {
        let n_max = cfg.n_max.unwrap_or(9).min(9);
        let q = cfg.q_max.unwrap_or(3).max(3);
        let mut candidates: Vec<String> = Vec::new();
        let mut instances = 0u64;
        for n in 1..=n_max {
            let graphs = enumerate_graphs(n)?;
            instances += graphs.len() as u64;
            let hits: Vec<String> = graphs
                .par_iter()
                .filter_map(|g| {
                    // hypothesis: F_{q,1}-, F_{q,2}-, C_{2q+3}-free
                    if !fq1_free(g, q) {
                        return None;
                    }
                    if !fq2_free(g, q) {
                        return None;
                    }
                    if 2 * q + 3 <= g.n() && g.has_induced_cycle(2 * q + 3) {
                        return None;
                    }
                    // candidate iff the conclusion fails
                    if fq1_free(g, q + 1) {
                        None
                    } else {
                        Some(g6(g))
                    }
                })
                .collect();
            candidates.extend(hits);
        }
        candidates.sort();
        let failures: Vec<FailureRecord> = candidates
            .iter()
            .map(|w| FailureRecord {
                witness: w.clone(),
                expected: "no counterexample candidates".into(),
                got: "candidate found".into(),
            })
            .collect();
        Ok(report(
            "question-7-1",
            format!("search n <= {}, q = {}", n_max, q),
            instances,
            failures,
            vec![format!("{} candidates emitted", candidates.len())],
        ))
    }
}
