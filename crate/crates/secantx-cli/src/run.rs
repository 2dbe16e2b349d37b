use crate::Command;
use secantx::{
    betti, census, families, graph6, secant, verify, Error, FieldSpec, Graph, Result,
    SimplicialComplex, VertexSet,
};
use std::io::Read;
use std::process::ExitCode;

pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Infeasible { .. } => 3,
        Error::UnknownSuite(..) => 2,
        Error::Parse { .. } | Error::ParseLine { .. } | Error::Invalid(_) => 2,
        _ => 2,
    }
}

enum Input {
    Graphs(Vec<Graph>),
    Complexes(Vec<SimplicialComplex>),
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Invalid(format!("stdin: {}", e)))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {}", path, e)))
    }
}

fn parse_input(path: &str, format: &str) -> Result<Input> {
    let text = read_source(path)?;
    match format {
        "graph6" => {
            let mut graphs = Vec::new();
            for (k, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                graphs.push(graph6::parse_graph6(line).map_err(|e| Error::ParseLine {
                    line: k + 1,
                    msg: e.to_string(),
                })?);
            }
            if graphs.is_empty() {
                return Err(Error::Invalid("no graphs in input".into()));
            }
            Ok(Input::Graphs(graphs))
        }
        "edges" => {
            let mut edges = Vec::new();
            let mut max = 0usize;
            for (k, line) in text.lines().enumerate() {
                let t = line.trim();
                if t.is_empty() || t.starts_with('#') {
                    continue;
                }
                let mut it = t.split_whitespace();
                let parse = |s: Option<&str>| -> Result<usize> {
                    s.and_then(|x| x.parse().ok()).ok_or(Error::ParseLine {
                        line: k + 1,
                        msg: format!("expected 'u v', got '{}'", t),
                    })
                };
                let u = parse(it.next())?;
                let v = parse(it.next())?;
                if it.next().is_some() {
                    return Err(Error::ParseLine {
                        line: k + 1,
                        msg: format!("trailing tokens in '{}'", t),
                    });
                }
                max = max.max(u).max(v);
                edges.push((u, v));
            }
            if edges.is_empty() {
                return Err(Error::Invalid("no edges in input".into()));
            }
            Ok(Input::Graphs(vec![Graph::with_edges(max + 1, &edges)?]))
        }
        "facets" => {
            let mut facets = Vec::new();
            let mut max = 0usize;
            for (k, line) in text.lines().enumerate() {
                let t = line.trim();
                if t.is_empty() || t.starts_with('#') {
                    continue;
                }
                let mut f = VertexSet::empty();
                for tok in t.split_whitespace() {
                    let v: usize = tok.parse().map_err(|_| Error::ParseLine {
                        line: k + 1,
                        msg: format!("bad vertex id '{}'", tok),
                    })?;
                    max = max.max(v);
                    f = f.with(v);
                }
                facets.push(f);
            }
            if facets.is_empty() {
                return Err(Error::Invalid("no facets in input".into()));
            }
            Ok(Input::Complexes(vec![SimplicialComplex::from_facets(
                max + 1,
                facets,
            )?]))
        }
        other => Err(Error::Invalid(format!(
            "unknown format '{}': expected graph6, edges, or facets",
            other
        ))),
    }
}

fn complexes_of(input: &Input) -> Vec<(String, SimplicialComplex, Option<Graph>)> {
    match input {
        Input::Graphs(gs) => gs
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let label = graph6::emit_graph6(g).unwrap_or_else(|_| format!("graph {}", k));
                (label, SimplicialComplex::clique_complex(g), Some(g.clone()))
            })
            .collect(),
        Input::Complexes(cs) => cs
            .iter()
            .enumerate()
            .map(|(k, c)| (format!("complex {}", k), c.clone(), None))
            .collect(),
    }
}

pub fn dispatch(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Betti {
            input,
            q,
            field,
            format,
            json,
        } => {
            let field = FieldSpec::parse(&field)?;
            let items = complexes_of(&parse_input(&input, &format)?);
            for (label, base, _) in items {
                let sq = secant::secant(&base, q)?;
                let bt = betti::betti_table_hochster(&sq, &field)?;
                if json {
                    let mut v = bt.to_json();
                    v["schema"] = serde_json::json!(1);
                    v["q"] = serde_json::json!(q);
                    v["input"] = serde_json::json!(label);
                    v["reg_s"] = serde_json::json!(bt.regularity());
                    v["reg_ideal"] = serde_json::json!(bt.regularity_ideal());
                    v["pd"] = serde_json::json!(bt.projective_dimension());
                    v["codim"] = serde_json::json!(sq.codimension());
                    println!("{}", v);
                } else {
                    println!("# {} (n = {}, q = {}, field {})", label, base.n(), q, field);
                    print!("{}", bt.render());
                    println!(
                        "reg S = {}, reg I = {}, pd = {}, codim = {}",
                        bt.regularity(),
                        bt.regularity_ideal(),
                        bt.projective_dimension(),
                        sq.codimension()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Secant {
            input,
            q,
            format,
            json,
        } => {
            let items = complexes_of(&parse_input(&input, &format)?);
            for (label, base, graph) in items {
                let sq = secant::secant(&base, q)?;
                let gens: Vec<serde_json::Value> = match &graph {
                    Some(g) => secant::secant_minimal_generators(g, q)?
                        .iter()
                        .map(|x| {
                            serde_json::json!({
                                "vertices": x.vertices.vertices(),
                                "family": x.kind.tag(),
                            })
                        })
                        .collect(),
                    None => sq
                        .minimal_nonfaces()
                        .iter()
                        .map(|w| serde_json::json!({ "vertices": w.vertices() }))
                        .collect(),
                };
                if json {
                    let v = serde_json::json!({
                        "schema": 1,
                        "input": label,
                        "q": q,
                        "facets": sq.facets().iter().map(|f| f.vertices()).collect::<Vec<_>>(),
                        "minimal_generators": gens,
                    });
                    println!("{}", v);
                } else {
                    println!("# {} (q = {})", label, q);
                    println!("facets:");
                    for f in sq.facets() {
                        println!("  {}", f);
                    }
                    println!("minimal generators:");
                    for g in &gens {
                        println!("  {}", g);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            input,
            q,
            field,
            format,
        } => {
            let field = FieldSpec::parse(&field)?;
            let parsed = parse_input(&input, &format)?;
            let graphs = match parsed {
                Input::Graphs(gs) => gs,
                Input::Complexes(_) => {
                    return Err(Error::Invalid(
                        "classify expects graph input (graph6 or edges)".into(),
                    ))
                }
            };
            for g in graphs {
                if g.n() > secantx::betti::HOCHSTER_MAX_VERTICES {
                    return Err(Error::Infeasible {
                        what: "classification",
                        n: g.n(),
                        max: secantx::betti::HOCHSTER_MAX_VERTICES,
                    });
                }
                if g.n() > 10 {
                    eprintln!(
                        "warning: n = {} is above the verified range for the census formulas",
                        g.n()
                    );
                }
                let del_pezzo = match families::is_del_pezzo_secant(&g, q, &field) {
                    Ok(b) => serde_json::json!(b),
                    Err(Error::UniversalVertices(u)) => {
                        serde_json::json!({ "error": format!("universal vertices: remove first ({})", u) })
                    }
                    Err(e) => return Err(e),
                };
                let v = serde_json::json!({
                    "schema": 1,
                    "input": graph6::emit_graph6(&g)?,
                    "n": g.n(),
                    "q": q,
                    "elementary_bipartite": families::is_elementary_bipartite(&g).to_json(),
                    "fq1": families::in_fq1(&g, q).to_json(),
                    "fq2": families::in_fq2(&g, q).to_json(),
                    "q_secant_chordal": families::is_q_secant_chordal(&g, q)?.to_json(),
                    "del_pezzo": del_pezzo,
                    "secant_is_simplex": census::secant_is_simplex(&g, q),
                });
                println!("{}", v);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            n_max,
            q_max,
            p_max,
            field,
            json,
        } => {
            let cfg = verify::SuiteConfig {
                n_max,
                q_max,
                p_max,
                field: FieldSpec::parse(&field)?,
                ..Default::default()
            };
            let ids: Vec<&str> = if suite == "all" {
                verify::SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut all_passed = true;
            for id in ids {
                let report = verify::run_suite(id, &cfg)?;
                all_passed &= report.passed();
                if json {
                    println!("{}", report.to_json());
                } else {
                    println!("{}", report.summary());
                    for f in report.failures.iter().take(10) {
                        println!("  FAIL {} expected {} got {}", f.witness, f.expected, f.got);
                    }
                    for i in &report.infos {
                        println!("  INFO {}", i);
                    }
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Enumerate { n } => {
            for g in secantx::enumerate::enumerate_graphs(n)? {
                println!("{}", graph6::emit_graph6(&g)?);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
