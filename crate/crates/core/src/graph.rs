//! Crystal graphs: closure of a seed set under `e_i`, `f_i` and export to DOT
//! and JSON.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::crystal::Crystal;
use crate::exec::{Budget, Exec};
use crate::Result;

/// An `i`-arrow `source → target` between vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: usize,
}

/// Vertices in canonical order and every `f_i` arrow between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph<E> {
    pub vertices: Vec<E>,
    pub edges: Vec<Edge>,
}

#[derive(Serialize)]
struct JsonGraph {
    vertices: Vec<String>,
    edges: Vec<[usize; 3]>,
}

impl<E: Ord + Clone> CrystalGraph<E> {
    pub fn index_of(&self, b: &E) -> Option<usize> {
        self.vertices.binary_search(b).ok()
    }

    pub fn to_dot<C: Crystal<Element = E>>(&self, crystal: &C) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (idx, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{idx} [label=\"{}\"];", crystal.encode(v));
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.source, e.target, e.label);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json<C: Crystal<Element = E>>(&self, crystal: &C) -> serde_json::Value {
        let g = JsonGraph {
            vertices: self.vertices.iter().map(|v| crystal.encode(v)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| [e.source, e.target, e.label])
                .collect(),
        };
        serde_json::to_value(g).expect("graph serializes")
    }
}

/// Closes `seeds` under `e_i` and `f_i` for `i ∈ labels` and records every
/// `f_i` arrow inside the closure.
pub fn build_graph<C: Crystal>(
    crystal: &C,
    seeds: &[C::Element],
    labels: &[usize],
    budget: Budget,
    exec: Exec,
) -> Result<CrystalGraph<C::Element>> {
    let mut seen: BTreeSet<C::Element> = seeds.iter().cloned().collect();
    budget.check(seen.len())?;
    let mut frontier: Vec<C::Element> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let found = exec.map(&frontier, |b| {
            labels
                .iter()
                .flat_map(|&i| [crystal.f(i, b), crystal.e(i, b)])
                .flatten()
                .collect::<Vec<_>>()
        });
        let mut next = Vec::new();
        for b in found.into_iter().flatten() {
            if seen.insert(b.clone()) {
                next.push(b);
            }
        }
        budget.check(seen.len())?;
        frontier = next;
    }
    let vertices: Vec<C::Element> = seen.into_iter().collect();
    let arrows = exec.map_range(vertices.len(), |src| {
        labels
            .iter()
            .filter_map(|&i| {
                let target = crystal.f(i, &vertices[src])?;
                let dst = vertices.binary_search(&target).expect("closure contains f_i b");
                Some(Edge { source: src, target: dst, label: i })
            })
            .collect::<Vec<_>>()
    });
    Ok(CrystalGraph {
        vertices,
        edges: arrows.into_iter().flatten().collect(),
    })
}
