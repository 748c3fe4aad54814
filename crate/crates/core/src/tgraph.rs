//! The doubled graph `TΛ` with live copies `α(λ)` and dead-end copies `β(λ)`.
//!
//! Names are mangled as `a:NAME` and `b:NAME` for both vertices and edges.
//! Vertices are laid out as all `α(v)` then all `β(v)`; edges likewise.

use serde::Serialize;

use crate::combinatorics::ExhaustiveVerdict;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graph::{EdgeDecl, EdgeId, KGraph, Presentation, SquareDecl, VertexId};
use crate::path::Path;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub enum Tag {
    Alpha,
    Beta,
}

pub fn alpha_name(name: &str) -> String {
    format!("a:{name}")
}

pub fn beta_name(name: &str) -> String {
    format!("b:{name}")
}

/// Presentation of `TΛ`. Squares `gh ~ h'g'` of `Λ` lift to
/// `α(g)α(h) ~ α(h')α(g')` and `α(g)β(h) ~ α(h')β(g')`.
pub fn build_tlambda(g: &KGraph) -> Result<Presentation> {
    let sources = g.sources();
    if !sources.is_empty() {
        let names: Vec<&str> = sources.iter().map(|v| g.vertex_name(*v)).collect();
        return Err(Error::HasSources(names.join(", ")));
    }
    let base = g.to_presentation();
    let mut out = Presentation { rank: base.rank, ..Default::default() };
    out.vertices = base.vertices.iter().map(|v| alpha_name(v)).chain(base.vertices.iter().map(|v| beta_name(v))).collect();
    for e in &base.edges {
        out.edges.push(EdgeDecl {
            name: alpha_name(&e.name),
            range: alpha_name(&e.range),
            source: alpha_name(&e.source),
            color: e.color,
        });
    }
    for e in &base.edges {
        out.edges.push(EdgeDecl {
            name: beta_name(&e.name),
            range: alpha_name(&e.range),
            source: beta_name(&e.source),
            color: e.color,
        });
    }
    for tail in [alpha_name, beta_name] {
        for sq in &base.squares {
            out.squares.push(SquareDecl {
                left: (alpha_name(&sq.left.0), tail(&sq.left.1)),
                right: (alpha_name(&sq.right.0), tail(&sq.right.1)),
            });
        }
    }
    Ok(out)
}

/// `Λ` together with `TΛ` and the maps between their paths.
#[derive(Clone, Debug)]
pub struct TLambda {
    base: KGraph,
    graph: KGraph,
}

impl TLambda {
    pub fn new(base: &KGraph) -> Result<TLambda> {
        let graph = KGraph::from_presentation(&build_tlambda(base)?)?;
        Ok(TLambda { base: base.clone(), graph })
    }

    pub fn base(&self) -> &KGraph {
        &self.base
    }

    pub fn graph(&self) -> &KGraph {
        &self.graph
    }

    pub fn alpha_vertex(&self, v: VertexId) -> VertexId {
        v
    }

    pub fn beta_vertex(&self, v: VertexId) -> VertexId {
        VertexId(v.0 + self.base.vertex_count() as u32)
    }

    fn alpha_edge(&self, e: EdgeId) -> EdgeId {
        e
    }

    fn beta_edge(&self, e: EdgeId) -> EdgeId {
        EdgeId(e.0 + self.base.edge_count() as u32)
    }

    pub fn classify_vertex(&self, x: VertexId) -> (Tag, VertexId) {
        let n = self.base.vertex_count() as u32;
        if x.0 < n {
            (Tag::Alpha, x)
        } else {
            (Tag::Beta, VertexId(x.0 - n))
        }
    }

    fn classify_edge(&self, x: EdgeId) -> (Tag, EdgeId) {
        let n = self.base.edge_count() as u32;
        if x.0 < n {
            (Tag::Alpha, x)
        } else {
            (Tag::Beta, EdgeId(x.0 - n))
        }
    }

    pub fn alpha(&self, lambda: &Path) -> Path {
        if lambda.is_vertex() {
            return self.graph.vertex_path(self.alpha_vertex(lambda.range()));
        }
        let word: Vec<EdgeId> = lambda.edges().iter().map(|e| self.alpha_edge(*e)).collect();
        self.graph.path_from_edges(&word).expect("α preserves composability")
    }

    pub fn beta(&self, lambda: &Path) -> Path {
        if lambda.is_vertex() {
            return self.graph.vertex_path(self.beta_vertex(lambda.range()));
        }
        let mut word: Vec<EdgeId> = lambda.edges().iter().map(|e| self.alpha_edge(*e)).collect();
        let last = word.len() - 1;
        word[last] = self.beta_edge(lambda.edges()[last]);
        self.graph.path_from_edges(&word).expect("β preserves composability")
    }

    pub fn tag(&self, tau: &Path) -> Tag {
        self.classify_vertex(tau.source()).0
    }

    /// Inverse of [`Self::alpha`] and [`Self::beta`].
    pub fn classify(&self, tau: &Path) -> (Tag, Path) {
        if tau.is_vertex() {
            let (tag, v) = self.classify_vertex(tau.range());
            return (tag, self.base.vertex_path(v));
        }
        let parts: Vec<(Tag, EdgeId)> = tau.edges().iter().map(|e| self.classify_edge(*e)).collect();
        let last = parts.len() - 1;
        assert!(
            parts[..last].iter().all(|(t, _)| *t == Tag::Alpha),
            "a β edge can only end a path of TΛ"
        );
        let word: Vec<EdgeId> = parts.iter().map(|(_, e)| *e).collect();
        (parts[last].0, self.base.path_from_edges(&word).expect("underlying word composes"))
    }

    /// Checks that no proper subset of `α(v)TΛ¹` is exhaustive and that the
    /// whole set is.
    pub fn exhaustive_check(&self, v: VertexId) -> Result<TExhaustiveReport> {
        let av = self.alpha_vertex(v);
        let edges: Vec<Path> = self.graph.edges_with_range(av).into_iter().map(|e| self.graph.edge_path(e)).collect();
        let bound = Degree::splat(self.graph.rank(), 2);
        let mut report = TExhaustiveReport { vertex: self.base.vertex_name(v).to_string(), ..Default::default() };
        let n = edges.len();
        assert!(n < 20, "too many edges at one vertex for subset enumeration");
        for mask in 0..(1u32 << n) {
            let set: Vec<Path> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| edges[i].clone()).collect();
            let verdict = self.graph.is_exhaustive(av, &set, Some(&bound))?;
            let full = mask == (1u32 << n) - 1;
            let ok = match &verdict {
                ExhaustiveVerdict::Exhaustive { .. } => full,
                ExhaustiveVerdict::NotExhaustive { witness } => !full && self.graph.refutes(witness, &set),
                ExhaustiveVerdict::UnknownUpToBound { .. } => false,
            };
            report.cases.push(TExhaustiveCase {
                set: set.iter().map(|p| self.graph.display(p).to_string()).collect(),
                verdict: verdict.label().to_string(),
                witness: verdict.witness().map(|w| self.graph.display(w).to_string()),
                witness_degree: verdict.witness().map(|w| w.degree().to_string()),
                ok,
            });
        }
        report.pass = report.cases.iter().all(|c| c.ok);
        Ok(report)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TExhaustiveCase {
    pub set: Vec<String>,
    pub verdict: String,
    pub witness: Option<String>,
    pub witness_degree: Option<String>,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TExhaustiveReport {
    pub vertex: String,
    pub cases: Vec<TExhaustiveCase>,
    pub pass: bool,
}

impl TExhaustiveReport {
    /// The case whose set is the full edge set minus `dropped`.
    pub fn case_without(&self, dropped: &str) -> Option<&TExhaustiveCase> {
        let full = self.cases.iter().map(|c| c.set.len()).max()?;
        self.cases.iter().find(|c| c.set.len() + 1 == full && !c.set.iter().any(|s| s == dropped))
    }
}
