//! Existence diagnosis and U-cycle construction.
//!
//! A class has a U-cycle iff its digraph is balanced (in-degree equals
//! out-degree everywhere) and all vertices lie in one strongly connected
//! component. When both hold, an Eulerian circuit read off by last letters
//! is the cycle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::class::ClassSpec;
use crate::digraph::{build_digraph, TransitionDigraph};
use crate::error::{Error, Result};
use crate::word::{render_letters, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnbalancedVertex {
    pub vertex: Word,
    pub in_degree: usize,
    pub out_degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    Ok,
    Unbalanced,
    Disconnected,
    Empty,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::Ok => "ok",
            Reason::Unbalanced => "unbalanced",
            Reason::Disconnected => "disconnected",
            Reason::Empty => "empty",
        })
    }
}

/// Exact fraction `numerator / denominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub numerator: usize,
    pub denominator: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceReport {
    pub balanced: bool,
    pub unbalanced: Vec<UnbalancedVertex>,
    pub scc_count: usize,
    /// Size of the largest component over the number of vertices.
    pub largest_scc_fraction: Ratio,
    pub exists: bool,
    pub reason: Reason,
    /// Number of disjoint cycles, reported only when every vertex has
    /// in-degree and out-degree 1.
    pub forced_cycle_count: Option<usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
}

/// Vertices whose in-degree differs from their out-degree.
pub fn check_balanced(g: &TransitionDigraph) -> Vec<UnbalancedVertex> {
    (0..g.vertex_count())
        .filter(|&v| g.in_degree(v) != g.out_degree(v))
        .map(|v| UnbalancedVertex {
            vertex: g.vertices()[v].clone(),
            in_degree: g.in_degree(v),
            out_degree: g.out_degree(v),
        })
        .collect()
}

/// Strongly connected components by an iterative Tarjan traversal.
///
/// Each component is sorted ascending and components are ordered by their
/// smallest vertex index (vertices themselves are in lexicographic order).
pub fn strongly_connected_components(g: &TransitionDigraph) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = g.vertex_count();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0usize;
    // (vertex, position in its out-edge list)
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        frames.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            let out = g.out_edges(v);
            if frame.1 < out.len() {
                let w = g.edges()[out[frame.1]].target;
                frame.1 += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    components.sort_unstable_by_key(|c| c[0]);
    components
}

/// Decides U-cycle existence. An unbalanced digraph is reported as such even
/// when it is also disconnected.
pub fn diagnose(g: &TransitionDigraph) -> ExistenceReport {
    let unbalanced = check_balanced(g);
    let balanced = unbalanced.is_empty();
    let components = strongly_connected_components(g);
    let largest = components.iter().map(Vec::len).max().unwrap_or(0);
    let all_unit = g.vertex_count() > 0
        && (0..g.vertex_count()).all(|v| g.in_degree(v) == 1 && g.out_degree(v) == 1);

    let reason = if g.edge_count() == 0 {
        Reason::Empty
    } else if !balanced {
        Reason::Unbalanced
    } else if components.len() > 1 {
        Reason::Disconnected
    } else {
        Reason::Ok
    };

    ExistenceReport {
        balanced,
        unbalanced,
        scc_count: components.len(),
        largest_scc_fraction: Ratio { numerator: largest, denominator: g.vertex_count().max(1) },
        exists: reason == Reason::Ok,
        reason,
        forced_cycle_count: all_unit.then_some(components.len()),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
    }
}

/// Iterative Hierholzer. Starts at the smallest vertex and takes outgoing
/// edges in adjacency order; returns edge indices in circuit order.
pub fn eulerian_circuit(g: &TransitionDigraph) -> Result<Vec<usize>> {
    let report = diagnose(g);
    if !report.exists {
        return Err(Error::NoCircuit(Box::new(report)));
    }
    let mut next = vec![0usize; g.vertex_count()];
    let mut circuit = Vec::with_capacity(g.edge_count());
    // (vertex, edge used to enter it)
    let mut stack: Vec<(usize, Option<usize>)> = vec![(0, None)];
    while let Some(&(v, entered_by)) = stack.last() {
        let out = g.out_edges(v);
        if next[v] < out.len() {
            let e = out[next[v]];
            next[v] += 1;
            stack.push((g.edges()[e].target, Some(e)));
        } else {
            stack.pop();
            if let Some(e) = entered_by {
                circuit.push(e);
            }
        }
    }
    circuit.reverse();
    debug_assert_eq!(circuit.len(), g.edge_count());
    Ok(circuit)
}

/// A cyclic string whose length-`m` windows list a class exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UCycle {
    pub class: ClassSpec,
    /// Letters in circuit order.
    pub letters: Vec<Letter>,
}

impl UCycle {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The lexicographically smallest rotation.
    pub fn canonical(&self) -> Vec<Letter> {
        let start = least_rotation(&self.letters);
        let mut out = self.letters[start..].to_vec();
        out.extend_from_slice(&self.letters[..start]);
        out
    }

    /// Renders letters in circuit order using the cycle file convention.
    pub fn render(&self) -> String {
        render_letters(&self.letters, self.class.alphabet())
    }

    pub fn render_canonical(&self) -> String {
        render_letters(&self.canonical(), self.class.alphabet())
    }
}

/// Start index of the lexicographically least rotation (two-pointer scan).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j).min(n.saturating_sub(1))
}

/// Reads the last letter of every edge along the circuit.
pub fn read_ucycle(g: &TransitionDigraph, circuit: &[usize]) -> UCycle {
    let letters = circuit
        .iter()
        .map(|&e| *g.edges()[e].word.letters().last().expect("edge words are non-empty"))
        .collect();
    UCycle { class: g.spec().clone(), letters }
}

/// Builds the digraph, checks existence and reads off a cycle.
pub fn generate(spec: &ClassSpec, budget: u64) -> Result<UCycle> {
    let g = build_digraph(spec, budget)?;
    let circuit = eulerian_circuit(&g)?;
    Ok(read_ucycle(&g, &circuit))
}
