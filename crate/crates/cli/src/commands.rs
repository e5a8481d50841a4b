use std::fs;
use std::path::Path;
use std::sync::Arc;

use cayley_forge::constructions::{
    dihedral_counterexample, dihedral_cover, dihedral_projection, iterate_wreath,
    odd_counterexample, CounterexampleInstance, U18_EXPONENTS,
};
use cayley_forge::graph::{induced_degrees, is_covering_map, VertexSubset};
use cayley_forge::group::dihedral_element;
use cayley_forge::io::{
    graph_to_json, parse_graph_json, parse_subset_json, subset_to_json, to_dot, CertificateFile,
    GraphFile,
};
use cayley_forge::search::{
    census_dihedral, search as run_search, SearchMode, SearchOptions, SearchResult,
};
use cayley_forge::verify::verify_certificate;
use cayley_forge::Error;
use num_rational::Ratio;
use serde::Serialize;

use crate::{ExportSource, FamilyArgs, SearchArgs};

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit(_) => 3,
            Error::InvalidParameter(_) | Error::Parse { .. } => 2,
            _ => 1,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult = Result<u8, CliError>;

/// Errors while reading user input are usage errors unless a cap was hit.
fn input_error(path: &Path, e: Error) -> CliError {
    let code = if matches!(e, Error::ResourceLimit(_)) {
        3
    } else {
        2
    };
    CliError {
        code,
        message: format!("{}: {e}", path.display()),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError {
            code: 1,
            message: format!("cannot write {}: {e}", p.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

struct Claims {
    all_hold: bool,
}

impl Claims {
    fn new() -> Self {
        Claims { all_hold: true }
    }

    fn check(&mut self, name: &str, holds: bool) {
        eprintln!("claim {name}: {}", if holds { "ok" } else { "FAILED" });
        self.all_hold &= holds;
    }
}

fn build(family: FamilyArgs) -> Result<Vec<CounterexampleInstance>, CliError> {
    Ok(match family {
        FamilyArgs::Odd { n } => {
            if n == 0 {
                return Err(CliError::usage("--n must be at least 1"));
            }
            vec![odd_counterexample(n)?]
        }
        FamilyArgs::Dihedral { m } => {
            if m == 0 {
                return Err(CliError::usage("--m must be at least 1"));
            }
            vec![dihedral_cover(m)?]
        }
        FamilyArgs::Wreath { levels } => iterate_wreath(levels)?,
    })
}

pub fn reproduce(family: FamilyArgs, out: Option<&Path>) -> CliResult {
    let instances = build(family)?;
    let mut claims = Claims::new();
    let mut last = None;
    for (level, inst) in instances.iter().enumerate() {
        let cert = CertificateFile::for_instance(inst)?;
        let c = &cert.certificate;
        let degrees = induced_degrees(inst.graph(), inst.subset())?;
        claims.check("subset is more than half", c.ratio > Ratio::new(1, 2));
        match family {
            FamilyArgs::Odd { n } => {
                let n64 = n as u64;
                let expected = num_integer::binomial(2 * n64, n64);
                claims.check("|U| = C(2n, n)", c.subset_size as u64 == expected);
                claims.check(
                    "ratio = (n+1)/(2n+1)",
                    c.ratio == Ratio::new(n64 + 1, 2 * n64 + 1),
                );
                claims.check("induced subgraph is 1-regular", degrees.is_regular_of(1));
                claims.check("graph is (n+1)-regular", c.d == Some(n as usize + 1));
            }
            FamilyArgs::Dihedral { m } => {
                claims.check("graph has 18m vertices", c.n == 18 * m);
                claims.check("|U| = 10m", c.subset_size == 10 * m);
                claims.check("induced subgraph is 1-regular", degrees.is_regular_of(1));
                claims.check("graph is 3-regular", c.d == Some(3));
                if m == 1 {
                    let figure = VertexSubset::from_indices(
                        18,
                        U18_EXPONENTS
                            .iter()
                            .map(|&(i, j)| dihedral_element(9, i, j)),
                    )?;
                    claims.check(
                        "subset is the shaded set a^i b^j of the 18-vertex drawing",
                        inst.subset() == &figure,
                    );
                } else {
                    let base = dihedral_counterexample()?;
                    let phi = dihedral_projection(m)?;
                    claims.check(
                        "projection is a covering map",
                        is_covering_map(inst.graph(), base.graph(), phi.map()),
                    );
                }
                claims.check("below sqrt(x + x'/2)", c.is_pt_counterexample);
            }
            FamilyArgs::Wreath { .. } => {
                let expected_order = wreath_order(level);
                claims.check(
                    &format!("level {level} order = {expected_order}"),
                    c.n == expected_order,
                );
                claims.check(&format!("level {level} is bipartite"), c.bipartite);
                claims.check(
                    &format!("level {level} induced max degree = 1"),
                    c.induced_max_degree == 1,
                );
                claims.check(
                    &format!("level {level} valency = {}", level + 1),
                    c.d == Some(level + 1),
                );
                if level > 0 {
                    let prev = &instances[level - 1];
                    let g = prev.graph().n() as u64;
                    let twice = 2 * prev.subset().len() as u64 + ((1u64 << g) - 1) * g;
                    claims.check(
                        &format!("level {level} |Ĥ| = |H| + (2^|G| - 1)|G|/2"),
                        2 * c.subset_size as u64 == twice,
                    );
                    claims.check(
                        &format!("level {level} below sqrt(x + x'/2)"),
                        c.is_pt_counterexample,
                    );
                }
            }
        }
        last = Some(cert);
    }
    let cert = last.expect("at least one instance");
    write_or_print(out, &cert.to_json())?;
    Ok(if claims.all_hold { 0 } else { 1 })
}

fn wreath_order(level: usize) -> usize {
    let mut order = 2usize;
    for _ in 0..level {
        order = (1usize << order) * order;
    }
    order
}

pub fn verify(graph_path: &Path, subset_path: &Path, out: Option<&Path>) -> CliResult {
    let (graph, cayley) =
        parse_graph_json(&read(graph_path)?).map_err(|e| input_error(graph_path, e))?;
    let subset = parse_subset_json(&read(subset_path)?, graph.n())
        .map_err(|e| input_error(subset_path, e))?;
    let certificate = verify_certificate(&graph, &subset, cayley.as_ref())?;
    let file = CertificateFile {
        family: "custom".into(),
        params: Default::default(),
        graph: GraphFile::from_graph(&graph, cayley.as_ref()),
        subset: subset.to_vec(),
        certificate,
    };
    write_or_print(out, &file.to_json())?;
    Ok(if file.certificate.is_pt_counterexample {
        0
    } else {
        1
    })
}

#[derive(Serialize)]
struct SearchOutput {
    best_size: usize,
    witness: Vec<usize>,
    proven_optimal: bool,
    nodes_explored: u64,
}

impl From<&SearchResult> for SearchOutput {
    fn from(r: &SearchResult) -> Self {
        SearchOutput {
            best_size: r.best_size,
            witness: r.witness.to_vec(),
            proven_optimal: r.proven_optimal,
            nodes_explored: r.nodes_explored,
        }
    }
}

pub fn search(args: &SearchArgs) -> CliResult {
    let (graph, _) =
        parse_graph_json(&read(&args.graph)?).map_err(|e| input_error(&args.graph, e))?;
    let mode = match (args.exact, args.heuristic) {
        (true, _) => SearchMode::Exact,
        (_, true) => SearchMode::Heuristic,
        _ => SearchMode::Auto,
    };
    let progress = args.progress.then(|| {
        Arc::new(|p: cayley_forge::search::Progress| {
            eprintln!("nodes {} incumbent {}", p.nodes_explored, p.incumbent);
        }) as cayley_forge::search::ProgressHook
    });
    let options = SearchOptions {
        mode,
        threads: args.threads,
        node_limit: args.node_limit,
        progress,
    };
    let result = run_search(&graph, args.max_degree, &options).map_err(|e| match e {
        Error::ResourceLimit(msg) => CliError {
            code: 3,
            message: format!("{msg} (try --heuristic)"),
        },
        other => other.into(),
    })?;
    print!("{}", to_json(&SearchOutput::from(&result)));
    Ok(0)
}

#[derive(Serialize)]
struct CensusOutput {
    n: usize,
    connection_set: Vec<usize>,
    labels: Vec<String>,
    x: usize,
    x_prime: usize,
    degree_cap: usize,
    best_size: usize,
    witness: Vec<usize>,
    proven_optimal: bool,
}

pub fn census(max_half_order: usize, connection_size: usize, threads: usize) -> CliResult {
    let options = SearchOptions {
        threads,
        ..Default::default()
    };
    let hits = census_dihedral(max_half_order, connection_size, &options)?;
    let out: Vec<CensusOutput> = hits
        .into_iter()
        .map(|h| CensusOutput {
            n: h.n,
            connection_set: h.connection_set,
            labels: h.labels,
            x: h.x,
            x_prime: h.x_prime,
            degree_cap: h.degree_cap,
            best_size: h.result.best_size,
            witness: h.result.witness.to_vec(),
            proven_optimal: h.result.proven_optimal,
        })
        .collect();
    print!("{}", to_json(&out));
    Ok(0)
}

pub fn export(
    source: &ExportSource,
    dot: Option<&Path>,
    graph_json: Option<&Path>,
    subset_json: Option<&Path>,
) -> CliResult {
    let (graph, subset, cayley, name) = match source {
        ExportSource::Files { graph, subset } => {
            let (g, ctx) = parse_graph_json(&read(graph)?).map_err(|e| input_error(graph, e))?;
            let s = match subset {
                Some(p) => {
                    Some(parse_subset_json(&read(p)?, g.n()).map_err(|e| input_error(p, e))?)
                }
                None => None,
            };
            (g, s, ctx, "graph".to_string())
        }
        family => {
            let family = match *family {
                ExportSource::Odd { n } => FamilyArgs::Odd { n },
                ExportSource::Dihedral { m } => FamilyArgs::Dihedral { m },
                ExportSource::Wreath { levels } => FamilyArgs::Wreath { levels },
                ExportSource::Files { .. } => unreachable!(),
            };
            let inst = build(family)?.pop().expect("at least one instance");
            let name = format!(
                "{}_{}",
                inst.family().as_str(),
                inst.params()
                    .values()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join("_")
            );
            (
                inst.graph().clone(),
                Some(inst.subset().clone()),
                inst.cayley().cloned(),
                name,
            )
        }
    };
    if let Some(p) = graph_json {
        write_or_print(Some(p), &graph_to_json(&graph, cayley.as_ref()))?;
    }
    if let Some(p) = subset_json {
        let s = subset
            .clone()
            .unwrap_or_else(|| VertexSubset::empty(graph.n()));
        write_or_print(Some(p), &subset_to_json(&s))?;
    }
    if dot.is_some() || (graph_json.is_none() && subset_json.is_none()) {
        write_or_print(dot, &to_dot(&graph, subset.as_ref(), &name))?;
    }
    Ok(0)
}
