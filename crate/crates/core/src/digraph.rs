//! The restricted de Bruijn digraph of a word class.
//!
//! Every class member `w` of length `m` is an edge from its prefix `w[..m-1]`
//! to its suffix `w[1..]`. Vertices are exactly the windows that occur on some
//! edge, so no vertex is isolated.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::class::{for_each_member, validate_spec, ClassSpec};
use crate::error::Result;
use crate::word::{Letter, Word};

/// One labelled edge. `source` and `target` index into the vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionDigraph {
    spec: ClassSpec,
    vertices: Vec<Word>,
    edges: Vec<Edge>,
    out_adjacency: Vec<Vec<usize>>,
    in_adjacency: Vec<Vec<usize>>,
}

impl TransitionDigraph {
    pub fn spec(&self) -> &ClassSpec {
        &self.spec
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    /// Edges in lexicographic order of their words.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Outgoing edge indices of vertex `v`, sorted by edge word.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_adjacency[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_adjacency[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adjacency[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adjacency[v].len()
    }

    pub fn vertex_index(&self, word: &Word) -> Option<usize> {
        self.vertices.binary_search(word).ok()
    }

    /// Successor vertex indices of `v`, one per outgoing edge.
    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_adjacency[v].iter().map(move |&e| self.edges[e].target)
    }

    /// Renders the digraph in Graphviz DOT. Vertex and edge order follow the
    /// sorted vertex and edge lists, so output is stable across runs.
    pub fn to_dot(&self) -> String {
        let n = self.spec.alphabet();
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.spec.to_string().replace('"', "'"));
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{}\";", v.render(n));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[e.source].render(n),
                self.vertices[e.target].render(n),
                e.word.render(n)
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the digraph with one edge per class member.
pub fn build_digraph(spec: &ClassSpec, budget: u64) -> Result<TransitionDigraph> {
    let spec = validate_spec(spec)?.spec;
    let m = spec.word_len();

    let mut words: Vec<Letter> = Vec::new();
    for_each_member(&spec, budget, |w| words.extend_from_slice(w))?;
    let edge_count = words.len() / m;

    let mut windows: Vec<&[Letter]> = Vec::with_capacity(2 * edge_count);
    for w in words.chunks_exact(m) {
        windows.push(&w[..m - 1]);
        windows.push(&w[1..]);
    }
    windows.sort_unstable();
    windows.dedup();
    let index: HashMap<&[Letter], usize> =
        windows.iter().enumerate().map(|(i, &w)| (w, i)).collect();

    let mut out_adjacency = vec![Vec::new(); windows.len()];
    let mut in_adjacency = vec![Vec::new(); windows.len()];
    let mut edges = Vec::with_capacity(edge_count);
    for (e, w) in words.chunks_exact(m).enumerate() {
        let source = index[&w[..m - 1]];
        let target = index[&w[1..]];
        out_adjacency[source].push(e);
        in_adjacency[target].push(e);
        edges.push(Edge { source, target, word: Word::from(w) });
    }
    let vertices = windows.into_iter().map(Word::from).collect();

    Ok(TransitionDigraph { spec, vertices, edges, out_adjacency, in_adjacency })
}

/// Per-vertex degrees and a summary grouping vertices by `(in, out)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub rows: Vec<DegreeRow>,
    /// Number of vertices with each `(in, out)` pair.
    pub summary: BTreeMap<(usize, usize), usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub vertex: Word,
    pub in_degree: usize,
    pub out_degree: usize,
}

impl DegreeProfile {
    pub fn degree_of(&self, vertex: &Word) -> Option<(usize, usize)> {
        self.rows
            .binary_search_by(|row| row.vertex.cmp(vertex))
            .ok()
            .map(|i| (self.rows[i].in_degree, self.rows[i].out_degree))
    }
}

pub fn degree_profile(g: &TransitionDigraph) -> DegreeProfile {
    let mut summary = BTreeMap::new();
    let rows = (0..g.vertex_count())
        .map(|v| {
            let row = DegreeRow {
                vertex: g.vertices[v].clone(),
                in_degree: g.in_degree(v),
                out_degree: g.out_degree(v),
            };
            *summary.entry((row.in_degree, row.out_degree)).or_insert(0) += 1;
            row
        })
        .collect();
    DegreeProfile { rows, summary }
}

/// `(in, out)` degree of a single `(m-1)`-letter window computed from the
/// class predicate alone, without building the digraph. Useful where the
/// full digraph is far beyond the enumeration budget.
pub fn local_degree(spec: &ClassSpec, vertex: &[Letter]) -> (usize, usize) {
    let n = spec.alphabet() as Letter;
    let mut buf = Vec::with_capacity(vertex.len() + 1);
    let mut scratch = Vec::new();
    let (mut indeg, mut outdeg) = (0, 0);
    for x in 1..=n {
        buf.clear();
        buf.extend_from_slice(vertex);
        buf.push(x);
        if spec.member_letters(&buf, &mut scratch) {
            outdeg += 1;
        }
        buf.clear();
        buf.push(x);
        buf.extend_from_slice(vertex);
        if spec.member_letters(&buf, &mut scratch) {
            indeg += 1;
        }
    }
    (indeg, outdeg)
}
