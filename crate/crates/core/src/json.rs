//! JSON forms of algebra and Steinberg elements.
//!
//! Paths are lists of edge names. A vertex path is `[]`; when both `lambda`
//! and `mu` are `[]` the term carries `"vertex"`.

use serde::{Deserialize, Serialize};

use crate::algebra::{CohnAlgebra, Element};
use crate::error::{Error, Result};
use crate::graph::KGraph;
use crate::path::Path;
use crate::ring::{CoefficientRing, RingSpec};
use crate::steinberg::{Bisection, SteinbergAlgebra, SteinbergElement};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub lambda: Vec<String>,
    pub mu: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub minus: Vec<Vec<String>>,
    pub coeff: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub ring: String,
    pub terms: Vec<TermJson>,
}

impl ElementJson {
    pub fn parse(text: &str) -> Result<ElementJson> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn ring_spec(&self) -> Result<RingSpec> {
        self.ring.parse()
    }
}

/// Steinberg elements as disjoint pieces, with the expanded form alongside.
#[derive(Clone, Debug, Serialize)]
pub struct SteinbergJson {
    pub ring: String,
    pub terms: Vec<TermJson>,
    pub expanded: Vec<TermJson>,
}

fn term(g: &KGraph, lambda: &Path, mu: &Path, minus: &[Path], coeff: String) -> TermJson {
    TermJson {
        lambda: g.path_names(lambda),
        mu: g.path_names(mu),
        minus: minus.iter().map(|p| g.path_names(p)).collect(),
        coeff,
        vertex: (lambda.is_vertex() && mu.is_vertex()).then(|| g.vertex_name(lambda.source()).to_string()),
    }
}

fn paths(g: &KGraph, t: &TermJson) -> Result<(Path, Path)> {
    let anchor = |other: &[String]| -> Result<Option<String>> {
        if let Some(v) = &t.vertex {
            return Ok(Some(v.clone()));
        }
        if other.is_empty() {
            return Ok(None);
        }
        let p = g.path_from_names(other, None)?;
        Ok(Some(g.vertex_name(p.source()).to_string()))
    };
    let lambda = g.path_from_names(&t.lambda, anchor(&t.mu)?.as_deref())?;
    let mu = g.path_from_names(&t.mu, anchor(&t.lambda)?.as_deref())?;
    Ok((lambda, mu))
}

fn check_ring<R: CoefficientRing>(ring: &R, j: &ElementJson) -> Result<()> {
    if j.ring_spec()?.to_string() != ring.name() {
        return Err(Error::InvalidArgument(format!("element is over {} but the ring is {}", j.ring, ring.name())));
    }
    Ok(())
}

pub fn element_to_json<R: CoefficientRing>(alg: &CohnAlgebra<R>, a: &Element<R>) -> ElementJson {
    let g = alg.graph();
    ElementJson {
        ring: alg.ring().name(),
        terms: a.terms().map(|(w, c)| term(g, &w.lambda, &w.mu, &[], c.to_string())).collect(),
    }
}

pub fn element_from_json<R: CoefficientRing>(alg: &CohnAlgebra<R>, j: &ElementJson) -> Result<Element<R>> {
    check_ring(alg.ring(), j)?;
    let mut out = Element::zero();
    for t in &j.terms {
        if !t.minus.is_empty() {
            return Err(Error::InvalidArgument("`minus` is only meaningful for Steinberg elements".into()));
        }
        let (lambda, mu) = paths(alg.graph(), t)?;
        let w = alg.word(&lambda, &mu)?;
        out = alg.add(&out, &alg.term(w, alg.ring().parse(&t.coeff)?));
    }
    Ok(out)
}

pub fn bisection_from_json<R: CoefficientRing>(s: &SteinbergAlgebra<R>, t: &TermJson) -> Result<Bisection> {
    let g = s.graph();
    let (lambda, mu) = paths(g, t)?;
    let anchor = g.vertex_name(lambda.source()).to_string();
    let minus = t.minus.iter().map(|n| g.path_from_names(n, Some(&anchor))).collect::<Result<Vec<_>>>()?;
    s.bisection(&lambda, &mu, &minus)
}

pub fn steinberg_from_json<R: CoefficientRing>(s: &SteinbergAlgebra<R>, j: &ElementJson) -> Result<SteinbergElement<R>> {
    check_ring(s.ring(), j)?;
    let mut out = SteinbergElement::zero();
    for t in &j.terms {
        let b = bisection_from_json(s, t)?;
        out = s.add(&out, &s.scale(&s.ring().parse(&t.coeff)?, &s.indicator(&b)));
    }
    Ok(out)
}

pub fn steinberg_to_json<R: CoefficientRing>(s: &SteinbergAlgebra<R>, a: &SteinbergElement<R>) -> SteinbergJson {
    let g = s.graph();
    SteinbergJson {
        ring: s.ring().name(),
        terms: s.pieces(a).iter().map(|(b, c)| term(g, &b.lambda, &b.mu, &b.minus, c.to_string())).collect(),
        expanded: a.expanded().map(|((l, m), c)| term(g, l, m, &[], c.to_string())).collect(),
    }
}
