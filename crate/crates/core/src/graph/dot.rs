//! Graphviz export of the skeleton. Arrows run from source to range.

use std::fmt::Write;

use super::KGraph;

const STYLES: [(&str, &str); 6] = [
    ("red", "solid"),
    ("blue", "dashed"),
    ("darkgreen", "dotted"),
    ("orange", "bold"),
    ("purple", "solid"),
    ("brown", "dashed"),
];

pub fn color_style(color: usize) -> (&'static str, &'static str) {
    STYLES[color % STYLES.len()]
}

pub fn to_dot(g: &KGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph kgraph {{").unwrap();
    writeln!(out, "  // rank {}", g.rank()).unwrap();
    for v in g.vertices() {
        writeln!(out, "  \"{}\";", g.vertex_name(v)).unwrap();
    }
    for e in g.edge_ids() {
        let edge = g.edge(e);
        let (c, s) = color_style(edge.color);
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\", color={c}, style={s}];",
            g.vertex_name(edge.source),
            g.vertex_name(edge.range),
            edge.name
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
