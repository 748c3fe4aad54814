//! Structural checks on a [`Presentation`].

use std::collections::{HashMap, HashSet};
use std::fmt;

use super::Presentation;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolationKind {
    Malformed,
    IncompleteSquares,
    CubeInconsistent,
}

impl ViolationKind {
    pub fn code(self) -> &'static str {
        match self {
            ViolationKind::Malformed => "MALFORMED",
            ViolationKind::IncompleteSquares => "INCOMPLETE_SQUARES",
            ViolationKind::CubeInconsistent => "CUBE_INCONSISTENT",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.code(), self.message)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, kind: ViolationKind, message: String) {
        self.violations.push(Violation { kind, message });
    }
}

struct E<'a> {
    range: &'a str,
    source: &'a str,
    color: usize,
}

pub fn validate(p: &Presentation) -> ValidationReport {
    use ViolationKind::*;
    let mut report = ValidationReport::default();

    if p.rank == 0 {
        report.push(Malformed, "rank must be at least 1".into());
        return report;
    }
    let mut names = HashSet::new();
    for v in &p.vertices {
        if !names.insert(v.as_str()) {
            report.push(Malformed, format!("duplicate name `{v}`"));
        }
    }
    let vertex_set: HashSet<&str> = p.vertices.iter().map(String::as_str).collect();
    let mut edges: HashMap<&str, E> = HashMap::new();
    for e in &p.edges {
        if !names.insert(e.name.as_str()) {
            report.push(Malformed, format!("duplicate name `{}`", e.name));
        }
        for end in [&e.range, &e.source] {
            if !vertex_set.contains(end.as_str()) {
                report.push(Malformed, format!("edge `{}` refers to unknown vertex `{end}`", e.name));
            }
        }
        if e.color == 0 || e.color > p.rank {
            report.push(Malformed, format!("edge `{}` has color {} outside 1..={}", e.name, e.color, p.rank));
        }
        edges.insert(&e.name, E { range: &e.range, source: &e.source, color: e.color });
    }
    for sq in &p.squares {
        for name in [&sq.left.0, &sq.left.1, &sq.right.0, &sq.right.1] {
            if !edges.contains_key(name.as_str()) {
                report.push(Malformed, format!("square mentions unknown edge `{name}`"));
            }
        }
    }
    if !report.is_valid() {
        return report;
    }

    // Squares: shape checks, then totality and uniqueness.
    let word = |w: &(String, String)| format!("{}.{}", w.0, w.1);
    let mut seen: HashMap<(&str, &str), usize> = HashMap::new();
    let mut swap: HashMap<(&str, &str), (&str, &str)> = HashMap::new();
    for sq in &p.squares {
        let (a, b) = (&edges[sq.left.0.as_str()], &edges[sq.left.1.as_str()]);
        let (c, d) = (&edges[sq.right.0.as_str()], &edges[sq.right.1.as_str()]);
        let text = format!("{} ~ {}", word(&sq.left), word(&sq.right));
        let mut bad = Vec::new();
        if a.source != b.range {
            bad.push(format!("{} is not composable", word(&sq.left)));
        }
        if c.source != d.range {
            bad.push(format!("{} is not composable", word(&sq.right)));
        }
        if a.color == b.color || a.color != d.color || b.color != c.color {
            bad.push("colors must be (i,j) against (j,i) with i != j".into());
        }
        if a.range != c.range || b.source != d.source {
            bad.push("range or source differs between the two sides".into());
        }
        if !bad.is_empty() {
            report.push(IncompleteSquares, format!("square {text}: {}", bad.join(", ")));
            continue;
        }
        let l = (sq.left.0.as_str(), sq.left.1.as_str());
        let r = (sq.right.0.as_str(), sq.right.1.as_str());
        *seen.entry(l).or_default() += 1;
        *seen.entry(r).or_default() += 1;
        swap.insert(l, r);
        swap.insert(r, l);
    }
    for g in &p.edges {
        for h in &p.edges {
            if g.source != h.range || g.color == h.color {
                continue;
            }
            match seen.get(&(g.name.as_str(), h.name.as_str())).copied().unwrap_or(0) {
                1 => {}
                0 => report.push(IncompleteSquares, format!("word {}.{} is in no square", g.name, h.name)),
                n => report.push(IncompleteSquares, format!("word {}.{} is in {n} squares", g.name, h.name)),
            }
        }
    }
    if !report.is_valid() || p.rank < 3 {
        return report;
    }

    // Cube condition on every composable word whose colors strictly decrease.
    let at = |w: &[&str], i: usize| -> Vec<String> {
        let (x, y) = swap[&(w[i], w[i + 1])];
        let mut out: Vec<String> = w.iter().map(|s| s.to_string()).collect();
        out[i] = x.to_string();
        out[i + 1] = y.to_string();
        out
    };
    let run = |start: &[&str], order: [usize; 3]| -> Vec<String> {
        let mut cur: Vec<String> = start.iter().map(|s| s.to_string()).collect();
        for i in order {
            let refs: Vec<&str> = cur.iter().map(String::as_str).collect();
            cur = at(&refs, i);
        }
        cur
    };
    for x in &p.edges {
        for y in &p.edges {
            if x.source != y.range || x.color <= y.color {
                continue;
            }
            for z in &p.edges {
                if y.source != z.range || y.color <= z.color {
                    continue;
                }
                let w = [x.name.as_str(), y.name.as_str(), z.name.as_str()];
                let one = run(&w, [0, 1, 0]);
                let two = run(&w, [1, 0, 1]);
                if one != two {
                    report.push(
                        CubeInconsistent,
                        format!("word {} sorts to {} and to {}", w.join("."), one.join("."), two.join(".")),
                    );
                }
            }
        }
    }
    report
}
