//! Labelled directed multigraphs and the graphs used by the constructions:
//! the glueing graphs of the building block, Cayley blow-ups, and cubic
//! graphs for the census.

mod automorphism;
mod blowup;
mod cubic;
mod glueing;

pub use automorphism::{
    automorphisms, automorphisms_with_cap, canonical_form, is_isomorphic, AutomorphismGroup, AutomorphismMode,
    GraphAutomorphism, DEFAULT_VERTEX_CAP,
};
pub use blowup::{blow_up, related_classes, BlowUpVertex, Sign};
pub use cubic::{cubic_graphs, delete_edge, is_asymmetric, MAX_CUBIC_VERTICES};
pub use glueing::{boundary_graph, k6_glueing_graph, klein_graph};

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph too large: {vertices} vertices exceeds cap {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("label {0:?} not present")]
    MissingLabel(String),
    #[error("generator count mismatch: graph has {found} labels, expected {expected}")]
    GeneratorMismatch { expected: usize, found: usize },
    #[error("graph has the wrong shape: {0}")]
    Shape(String),
    #[error("cubic enumeration supports 4 <= 2k <= {max} with 2k even, got {got}")]
    CubicCap { got: usize, max: usize },
    #[error("too many labels ({0}) for label-permuting search")]
    TooManyLabels(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: usize,
}

/// Directed multigraph with named vertices and totally ordered labels.
///
/// Labels are referred to by index; the index order is the label order.
/// Undirected graphs store every edge as a pair of opposite directed edges
/// and set the `undirected` flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    vertices: Vec<String>,
    labels: Vec<String>,
    edges: Vec<Edge>,
    undirected: bool,
}

impl LabeledDigraph {
    pub fn new(vertices: Vec<String>, labels: Vec<String>) -> Self {
        LabeledDigraph { vertices, labels, edges: Vec::new(), undirected: false }
    }

    pub fn new_undirected(vertices: Vec<String>, labels: Vec<String>) -> Self {
        LabeledDigraph { vertices, labels, edges: Vec::new(), undirected: true }
    }

    /// Plain undirected graph on `0..n` with a single label.
    pub fn from_undirected_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new_undirected((0..n).map(|v| v.to_string()).collect(), vec!["e".into()]);
        for &(u, v) in edges {
            g.add_undirected_edge(u, v, 0);
        }
        g
    }

    pub fn add_edge(&mut self, src: usize, dst: usize, label: usize) {
        assert!(src < self.vertices.len() && dst < self.vertices.len(), "edge endpoint out of range");
        assert!(src != dst, "self-loops are not supported");
        assert!(label < self.labels.len(), "unknown label");
        self.edges.push(Edge { src, dst, label });
    }

    pub fn add_undirected_edge(&mut self, u: usize, v: usize, label: usize) {
        debug_assert!(self.undirected);
        self.add_edge(u, v, label);
        self.add_edge(v, u, label);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of stored directed edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    /// Edges with `src < dst` for undirected graphs; all edges otherwise.
    pub fn undirected_edges(&self) -> Vec<Edge> {
        if self.undirected {
            self.edges.iter().copied().filter(|e| e.src < e.dst).collect()
        } else {
            self.edges.clone()
        }
    }

    /// In-degree plus out-degree for directed graphs, ordinary degree for
    /// undirected ones.
    pub fn degree(&self, v: usize) -> usize {
        let total = self.edges.iter().filter(|e| e.src == v || e.dst == v).count();
        if self.undirected {
            total / 2
        } else {
            total
        }
    }

    /// Number of edges carrying `label` (undirected edges counted once).
    pub fn label_count(&self, label: usize) -> usize {
        let c = self.edges.iter().filter(|e| e.label == label).count();
        if self.undirected {
            c / 2
        } else {
            c
        }
    }

    /// Copy with every edge of `label` removed; the label itself is dropped
    /// from the label order.
    pub fn without_label(&self, label: usize) -> LabeledDigraph {
        let labels = self.labels.iter().enumerate().filter(|&(i, _)| i != label).map(|(_, l)| l.clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.label != label)
            .map(|e| Edge { label: if e.label > label { e.label - 1 } else { e.label }, ..*e })
            .collect();
        LabeledDigraph { vertices: self.vertices.clone(), labels, edges, undirected: self.undirected }
    }

    /// Same vertices and edges with every label collapsed to one.
    pub fn unlabelled(&self) -> LabeledDigraph {
        LabeledDigraph {
            vertices: self.vertices.clone(),
            labels: vec!["e".into()],
            edges: self.edges.iter().map(|e| Edge { label: 0, ..*e }).collect(),
            undirected: self.undirected,
        }
    }

    /// Neighbour lists of the underlying simple undirected graph.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.src].push(e.dst);
            adj[e.dst].push(e.src);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let adj = self.neighbours();
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Edge-list exchange format:
    ///
    /// ```text
    /// labels <l1> <l2> ...        (in label order)
    /// vertices <v1> <v2> ...
    /// undirected                  (only for undirected graphs)
    /// <src> <dst> <label>         (one line per edge)
    /// ```
    ///
    /// Undirected graphs list each edge once, as `src dst` with `src` first
    /// in vertex order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "labels {}", self.labels.join(" ")).unwrap();
        writeln!(out, "vertices {}", self.vertices.join(" ")).unwrap();
        if self.undirected {
            out.push_str("undirected\n");
        }
        for e in self.undirected_edges() {
            writeln!(out, "{} {} {}", self.vertices[e.src], self.vertices[e.dst], self.labels[e.label]).unwrap();
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let err = |line: usize, msg: &str| GraphError::Parse { line, msg: msg.to_string() };
        let mut labels: Option<Vec<String>> = None;
        let mut vertices: Option<Vec<String>> = None;
        let mut undirected = false;
        let mut raw_edges = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                [] => continue,
                ["labels", rest @ ..] => labels = Some(rest.iter().map(|s| s.to_string()).collect()),
                ["vertices", rest @ ..] => vertices = Some(rest.iter().map(|s| s.to_string()).collect()),
                ["undirected"] => undirected = true,
                [s, d, l] => raw_edges.push((lineno, *s, *d, *l)),
                _ => return Err(err(lineno, "expected 'src dst label'")),
            }
        }
        let labels = labels.ok_or_else(|| err(1, "missing 'labels' header"))?;
        let vertices = vertices.ok_or_else(|| err(1, "missing 'vertices' header"))?;
        let mut g = LabeledDigraph { vertices, labels, edges: Vec::new(), undirected };
        for (lineno, s, d, l) in raw_edges {
            let src = g.vertices.iter().position(|v| v == s).ok_or_else(|| err(lineno, "unknown source vertex"))?;
            let dst = g.vertices.iter().position(|v| v == d).ok_or_else(|| err(lineno, "unknown target vertex"))?;
            let label = g.label_index(l).ok_or_else(|| err(lineno, "unknown label"))?;
            if src == dst {
                return Err(err(lineno, "self-loop"));
            }
            if undirected {
                g.add_undirected_edge(src, dst, label);
            } else {
                g.add_edge(src, dst, label);
            }
        }
        Ok(g)
    }

    /// DOT text for external visualisation.
    pub fn to_dot(&self) -> String {
        let (kind, arrow) = if self.undirected { ("graph", "--") } else { ("digraph", "->") };
        let mut out = format!("{kind} G {{\n");
        for v in &self.vertices {
            writeln!(out, "  \"{v}\";").unwrap();
        }
        for e in self.undirected_edges() {
            writeln!(
                out,
                "  \"{}\" {arrow} \"{}\" [label=\"{}\"];",
                self.vertices[e.src], self.vertices[e.dst], self.labels[e.label]
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}
