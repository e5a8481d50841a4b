//! File formats: graph JSON, subset JSON, certificate JSON and DOT.
//!
//! Graph JSON is `{"n": int, "edges": [[u, v], ...], "labels": [str, ...]}`
//! with `u < v` and edges sorted. An optional `"cayley"` object names a
//! built-in group family and a connection set; readers rebuild the Cayley
//! graph from it and reject files where it does not match the edges.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::constructions::{CayleyContext, CounterexampleInstance};
use crate::graph::{cayley_graph, Graph, VertexSubset};
use crate::group::{Element, GroupSpec};
use crate::verify::{certify_instance, Certificate};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyFile {
    pub group: GroupSpec,
    pub connection_set: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cayley: Option<CayleyFile>,
}

impl GraphFile {
    pub fn from_graph(graph: &Graph, cayley: Option<&CayleyContext>) -> Self {
        GraphFile {
            n: graph.n(),
            edges: graph.edges().map(|(u, v)| [u, v]).collect(),
            labels: Some((0..graph.n()).map(|v| graph.label(v)).collect()),
            cayley: cayley.and_then(|c| {
                Some(CayleyFile {
                    group: c.group.spec()?,
                    connection_set: c.connection_set.clone(),
                })
            }),
        }
    }

    /// Builds the graph and, when present, the verified Cayley context.
    pub fn to_graph(&self) -> Result<(Graph, Option<CayleyContext>)> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let mut graph = Graph::from_edges(self.n, &edges)?;
        if let Some(labels) = &self.labels {
            graph = graph.with_labels(labels.clone())?;
        }
        let ctx = match &self.cayley {
            None => None,
            Some(c) => {
                let group = c.group.build()?;
                let rebuilt = cayley_graph(&group, &c.connection_set)?;
                if rebuilt.n() != graph.n() || graph.edges().ne(rebuilt.edges()) {
                    return Err(Error::Precondition(
                        "edges do not match the Cayley graph named in the file".into(),
                    ));
                }
                Some(CayleyContext {
                    group,
                    connection_set: group_set(&c.connection_set),
                })
            }
        };
        Ok((graph, ctx))
    }
}

fn group_set(s: &[Element]) -> Vec<Element> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    pub graph: GraphFile,
    pub subset: Vec<usize>,
    pub certificate: Certificate,
}

impl CertificateFile {
    pub fn for_instance(instance: &CounterexampleInstance) -> Result<Self> {
        Ok(CertificateFile {
            family: instance.family().as_str().to_string(),
            params: instance.params().clone(),
            graph: GraphFile::from_graph(instance.graph(), instance.cayley()),
            subset: instance.subset().to_vec(),
            certificate: certify_instance(instance)?,
        })
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse_graph_json(text: &str) -> Result<(Graph, Option<CayleyContext>)> {
    let file: GraphFile = serde_json::from_str(text).map_err(parse_error)?;
    file.to_graph()
}

pub fn graph_to_json(graph: &Graph, cayley: Option<&CayleyContext>) -> String {
    to_json(&GraphFile::from_graph(graph, cayley))
}

/// Parses `[v, ...]` against a host graph with `graph_n` vertices.
pub fn parse_subset_json(text: &str, graph_n: usize) -> Result<VertexSubset> {
    let members: Vec<usize> = serde_json::from_str(text).map_err(parse_error)?;
    VertexSubset::from_indices(graph_n, members)
}

pub fn subset_to_json(subset: &VertexSubset) -> String {
    let mut s = serde_json::to_string(&subset.to_vec()).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse_certificate_json(text: &str) -> Result<CertificateFile> {
    serde_json::from_str(text).map_err(parse_error)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering with subset members filled gray and the rest white.
pub fn to_dot(graph: &Graph, subset: Option<&VertexSubset>, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", dot_escape(name)).unwrap();
    writeln!(out, "  node [shape=circle, style=filled];").unwrap();
    for v in 0..graph.n() {
        let fill = if subset.is_some_and(|s| s.contains(v)) {
            "gray"
        } else {
            "white"
        };
        writeln!(
            out,
            "  {v} [label=\"{}\", fillcolor={fill}];",
            dot_escape(&graph.label(v))
        )
        .unwrap();
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
