//! The Cohn path algebra `C_R(Λ)` on the spanning words `t_λ t_{μ*}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::degree::{Degree, Grade};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, KGraph, VertexId};
use crate::path::Path;
use crate::ring::CoefficientRing;

/// `t_λ t_{μ*}` with `s(λ) = s(μ)`. Ordered by `λ` then `μ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct NormalWord {
    pub lambda: Path,
    pub mu: Path,
}

impl NormalWord {
    pub fn grade(&self) -> Grade {
        self.lambda.degree().grade_minus(self.mu.degree())
    }

    pub fn source(&self) -> VertexId {
        self.lambda.source()
    }
}

/// A finite combination of normal words with nonzero coefficients.
#[derive(Clone, Debug)]
pub struct Element<R: CoefficientRing> {
    terms: BTreeMap<NormalWord, R::Elem>,
}

impl<R: CoefficientRing> PartialEq for Element<R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<R: CoefficientRing> Eq for Element<R> {}

impl<R: CoefficientRing> Element<R> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalWord, &R::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &NormalWord) -> Option<&R::Elem> {
        self.terms.get(w)
    }

    fn accumulate(&mut self, ring: &R, w: NormalWord, c: &R::Elem) {
        if ring.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                let sum = ring.add(old, c);
                if ring.is_zero(&sum) {
                    self.terms.remove(&w);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }
}

/// Formats an element against its graph, e.g. `2*t[e]t*[f] - t[v]`.
pub struct ElementDisplay<'a, R: CoefficientRing> {
    algebra: &'a CohnAlgebra<R>,
    element: &'a Element<R>,
}

impl<R: CoefficientRing> fmt::Display for ElementDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return write!(f, "0");
        }
        let g = &self.algebra.graph;
        for (i, (w, c)) in self.element.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != self.algebra.ring.one() {
                write!(f, "({c})*")?;
            }
            if w.lambda == w.mu && w.lambda.is_vertex() {
                write!(f, "t[{}]", g.display(&w.lambda))?;
                continue;
            }
            if !w.lambda.is_vertex() {
                write!(f, "t[{}]", g.display(&w.lambda))?;
            }
            if !w.mu.is_vertex() {
                write!(f, "t*[{}]", g.display(&w.mu))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct CohnAlgebra<R: CoefficientRing> {
    graph: KGraph,
    ring: R,
}

impl<R: CoefficientRing> CohnAlgebra<R> {
    pub fn new(graph: KGraph, ring: R) -> Self {
        CohnAlgebra { graph, ring }
    }

    pub fn graph(&self) -> &KGraph {
        &self.graph
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn display<'a>(&'a self, a: &'a Element<R>) -> ElementDisplay<'a, R> {
        ElementDisplay { algebra: self, element: a }
    }

    pub fn word(&self, lambda: &Path, mu: &Path) -> Result<NormalWord> {
        if lambda.source() != mu.source() {
            return Err(Error::NotComposable {
                source_vertex: self.graph.vertex_name(lambda.source()).to_string(),
                range_vertex: self.graph.vertex_name(mu.source()).to_string(),
            });
        }
        Ok(NormalWord { lambda: lambda.clone(), mu: mu.clone() })
    }

    pub fn term(&self, w: NormalWord, c: R::Elem) -> Element<R> {
        let mut out = Element::zero();
        out.accumulate(&self.ring, w, &c);
        out
    }

    pub fn word_element(&self, w: &NormalWord) -> Element<R> {
        self.term(w.clone(), self.ring.one())
    }

    /// `t_λ`.
    pub fn gen(&self, lambda: &Path) -> Element<R> {
        let s = self.graph.vertex_path(lambda.source());
        self.word_element(&NormalWord { lambda: lambda.clone(), mu: s })
    }

    /// `t_{μ*}`.
    pub fn gen_star(&self, mu: &Path) -> Element<R> {
        let s = self.graph.vertex_path(mu.source());
        self.word_element(&NormalWord { lambda: s, mu: mu.clone() })
    }

    pub fn vertex(&self, v: VertexId) -> Element<R> {
        self.gen(&self.graph.vertex_path(v))
    }

    pub fn one_scalar(&self) -> R::Elem {
        self.ring.one()
    }

    pub fn add(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        let mut out = a.clone();
        for (w, c) in b.terms() {
            out.accumulate(&self.ring, w.clone(), c);
        }
        out
    }

    pub fn neg(&self, a: &Element<R>) -> Element<R> {
        let mut out = Element::zero();
        for (w, c) in a.terms() {
            out.accumulate(&self.ring, w.clone(), &self.ring.neg(c));
        }
        out
    }

    pub fn sub(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, r: &R::Elem, a: &Element<R>) -> Element<R> {
        let mut out = Element::zero();
        for (w, c) in a.terms() {
            out.accumulate(&self.ring, w.clone(), &self.ring.mul(r, c));
        }
        out
    }

    /// `(t_λ t_{μ*})(t_ν t_{γ*}) = Σ_{(ρ,ζ) ∈ Λ^min(μ,ν)} t_{λρ} t_{(γζ)*}`.
    pub fn mul_words(&self, a: &NormalWord, b: &NormalWord) -> Vec<NormalWord> {
        self.graph
            .lambda_min(&a.mu, &b.lambda)
            .into_iter()
            .map(|(rho, zeta)| NormalWord {
                lambda: self.graph.compose(&a.lambda, &rho).expect("s(μ) = s(λ) = r(ρ)"),
                mu: self.graph.compose(&b.mu, &zeta).expect("s(γ) = s(ν) = r(ζ)"),
            })
            .collect()
    }

    pub fn mul(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        let mut out = Element::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let c = self.ring.mul(ca, cb);
                for w in self.mul_words(wa, wb) {
                    out.accumulate(&self.ring, w, &c);
                }
            }
        }
        out
    }

    pub fn product(&self, factors: &[Element<R>]) -> Element<R> {
        let mut it = factors.iter();
        let first = it.next().cloned().expect("nonempty product");
        it.fold(first, |acc, x| self.mul(&acc, x))
    }

    /// `∏_{e}(t_v - t_e t_{e*})` over `order` (all of `vΛ¹` in color order
    /// when `None`); the empty product is `t_v`.
    pub fn gap_product(&self, v: VertexId, order: Option<&[EdgeId]>) -> Element<R> {
        let default = self.graph.edges_with_range(v);
        let edges = order.unwrap_or(&default);
        let tv = self.vertex(v);
        edges.iter().fold(tv.clone(), |acc, e| {
            let p = self.graph.edge_path(*e);
            let proj = self.mul(&self.gen(&p), &self.gen_star(&p));
            self.mul(&acc, &self.sub(&tv, &proj))
        })
    }

    /// `F_v = t_v - ∏_{e ∈ vΛ¹}(t_v - t_e t_{e*})`.
    pub fn f_idempotent(&self, v: VertexId) -> Element<R> {
        self.sub(&self.vertex(v), &self.gap_product(v, None))
    }

    pub fn f_idempotent_ordered(&self, v: VertexId, order: &[EdgeId]) -> Element<R> {
        self.sub(&self.vertex(v), &self.gap_product(v, Some(order)))
    }

    pub fn graded_component(&self, a: &Element<R>, n: &Grade) -> Element<R> {
        Element { terms: a.terms().filter(|(w, _)| w.grade() == *n).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    pub fn degree_support(&self, a: &Element<R>) -> BTreeSet<Grade> {
        a.terms().map(|(w, _)| w.grade()).collect()
    }

    /// All normal words with `d(λ), d(μ) <= bound`, in word order.
    pub fn spanning_words(&self, bound: &Degree) -> Vec<NormalWord> {
        let all = self.graph.all_paths_up_to(bound);
        let mut by_source: BTreeMap<VertexId, Vec<&Path>> = BTreeMap::new();
        for p in &all {
            by_source.entry(p.source()).or_default().push(p);
        }
        let mut out = Vec::new();
        for group in by_source.values() {
            for l in group {
                for m in group {
                    out.push(NormalWord { lambda: (*l).clone(), mu: (*m).clone() });
                }
            }
        }
        out.sort();
        out
    }
}
