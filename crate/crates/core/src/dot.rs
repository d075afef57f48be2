//! Graphviz output for eyeballing colourings and matches. Not a data format.

use std::fmt::Write;

use crate::coloring::Color;
use crate::plane_graph::{PlaneGraph, VertexId};

const FILLS: [&str; 3] = ["#f4a582", "#92c5de", "#b8e186"];

/// A labelled vertex set drawn as a cluster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Highlight {
    pub label: String,
    pub vertices: Vec<VertexId>,
}

/// Deterministic DOT text. Vertices are 1-based; a vertex claimed by several
/// highlights is drawn in the first one only, since Graphviz clusters nest.
pub fn emit_dot(g: &PlaneGraph, coloring: Option<&[Color]>, highlights: &[Highlight]) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    let mut placed = vec![false; g.vertex_count()];
    for (i, h) in highlights.iter().enumerate() {
        let mut vs: Vec<VertexId> = h.vertices.iter().copied().filter(|&v| v < placed.len() && !placed[v]).collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() {
            continue;
        }
        let _ = writeln!(s, "  subgraph cluster_{i} {{\n    label=\"{}\";\n    style=dashed;", h.label.replace('"', "'"));
        for &v in &vs {
            placed[v] = true;
            let _ = writeln!(s, "    {};", v + 1);
        }
        s.push_str("  }\n");
    }
    for v in 0..g.vertex_count() {
        match coloring.and_then(|c| c.get(v)) {
            Some(&c) if (1..=3).contains(&c) => {
                let _ = writeln!(s, "  {} [label=\"{}:{}\", fillcolor=\"{}\"];", v + 1, v + 1, c, FILLS[c as usize - 1]);
            }
            _ => {
                let _ = writeln!(s, "  {};", v + 1);
            }
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "  {} -- {};", u + 1, v + 1);
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::k3;

    #[test]
    fn coloured_triangle_has_three_fills() {
        let out = emit_dot(&k3(), Some(&[1, 1, 2]), &[]);
        assert_eq!(out.matches("fillcolor=\"#f4a582\"").count(), 2);
        assert_eq!(out.matches("fillcolor=\"#92c5de\"").count(), 1);
        assert!(!out.contains("cluster"));
    }

    #[test]
    fn plain_drawing_lists_every_edge() {
        let out = emit_dot(&k3(), None, &[]);
        assert_eq!(out.matches(" -- ").count(), 3);
        assert_eq!(out, emit_dot(&k3(), None, &[]));
    }

    #[test]
    fn highlight_becomes_a_cluster() {
        let h = Highlight { label: "tri".into(), vertices: vec![2, 0] };
        let out = emit_dot(&k3(), None, &[h]);
        assert!(out.contains("subgraph cluster_0 {\n    label=\"tri\";\n    style=dashed;\n    1;\n    3;\n  }"));
    }
}
