//! Graphviz rendering. Output only; JSON is the interchange format.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::graph::{CrystalGraph, GraphDiff, VertexLabel};

#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    /// Label arrows with their residue.
    pub show_colors: bool,
    /// Diff against another graph, this graph being the right-hand side.
    /// Vertices that differ are drawn in bold.
    pub bold_diff: Option<GraphDiff>,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot<V: VertexLabel>(g: &CrystalGraph<V>, options: &DotOptions) -> String {
    let bold: BTreeSet<String> = options
        .bold_diff
        .as_ref()
        .map(GraphDiff::changed_right)
        .unwrap_or_default();
    let mut out = String::new();
    out.push_str("digraph crystal {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=plaintext];\n");
    for (id, v) in g.vertices().iter().enumerate() {
        let label = escape(&v.display_text());
        if bold.contains(&v.canonical()) {
            writeln!(out, "  v{id} [label=\"{label}\", style=bold, fontname=\"Times-Bold\"];").unwrap();
        } else {
            writeln!(out, "  v{id} [label=\"{label}\"];").unwrap();
        }
    }
    for rank in 0..=g.max_rank() {
        let ids: Vec<String> = g
            .vertices()
            .iter()
            .enumerate()
            .filter(|(_, v)| v.rank() == rank)
            .map(|(id, _)| format!("v{id}"))
            .collect();
        writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
    for e in g.edges() {
        if options.show_colors {
            writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.source, e.target, e.color).unwrap();
        } else {
            writeln!(out, "  v{} -> v{};", e.source, e.target).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
