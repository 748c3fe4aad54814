//! Cohn families in arbitrary target algebras and the relation checker.

use std::collections::BTreeMap;
use std::fmt::Debug;

use serde::Serialize;

use crate::algebra::{CohnAlgebra, Element, NormalWord};
use crate::degree::Degree;
use crate::error::Result;
use crate::graph::KGraph;
use crate::path::Path;
use crate::ring::CoefficientRing;

/// Elements `T_λ`, `T_{μ*}` of some `R`-algebra, indexed by a graph.
pub trait CohnFamily {
    type Ring: CoefficientRing;
    type Value: Clone + Debug;

    fn graph(&self) -> &KGraph;
    fn ring(&self) -> &Self::Ring;
    fn t(&self, lambda: &Path) -> Self::Value;
    fn t_star(&self, mu: &Path) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn scale(&self, r: &<Self::Ring as CoefficientRing>::Elem, a: &Self::Value) -> Self::Value;
    fn zero(&self) -> Self::Value;
    fn equal(&self, a: &Self::Value, b: &Self::Value) -> bool;

    fn is_zero(&self, a: &Self::Value) -> bool {
        self.equal(a, &self.zero())
    }

    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        let minus_one = self.ring().neg(&self.ring().one());
        self.add(a, &self.scale(&minus_one, b))
    }

    fn word(&self, w: &NormalWord) -> Self::Value {
        self.mul(&self.t(&w.lambda), &self.t_star(&w.mu))
    }

    /// The image of `a ∈ C_R(Λ)` under the homomorphism this family induces.
    fn eval(&self, a: &Element<Self::Ring>) -> Self::Value {
        a.terms().fold(self.zero(), |acc, (w, c)| self.add(&acc, &self.scale(c, &self.word(w))))
    }
}

/// Families whose values can be written as coordinate vectors, so that
/// linear independence of images is decidable.
pub trait Coordinates: CohnFamily {
    #[allow(clippy::type_complexity)]
    fn coordinates(
        &self,
        values: &[Self::Value],
    ) -> Result<Vec<Vec<(usize, <Self::Ring as CoefficientRing>::Elem)>>>;
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomFailure {
    pub relation: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub checks: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, relation: &str, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(AxiomFailure { relation: relation.into(), detail: detail() });
        }
    }
}

/// Checks CP1 on vertex pairs, CP2 on composable pairs and CP3 on all pairs
/// of paths with degree at most `bound`.
pub fn verify_cohn_axioms<F: CohnFamily>(family: &F, bound: &Degree) -> AxiomReport {
    let g = family.graph();
    let mut report = AxiomReport::default();
    let show = |p: &Path| g.display(p).to_string();

    let vertices: Vec<Path> = g.vertices().map(|v| g.vertex_path(v)).collect();
    for v in &vertices {
        for w in &vertices {
            let lhs = family.mul(&family.t(v), &family.t(w));
            let rhs = if v == w { family.t(v) } else { family.zero() };
            report.record(family.equal(&lhs, &rhs), "CP1", || format!("T_{} T_{}", show(v), show(w)));
        }
        report.record(family.equal(&family.t(v), &family.t_star(v)), "CP1", || {
            format!("T_{} != T_{}*", show(v), show(v))
        });
    }

    let paths = g.all_paths_up_to(bound);
    for l in &paths {
        for m in &paths {
            if l.source() == m.range() {
                let lm = g.compose(l, m).unwrap();
                let ok = family.equal(&family.mul(&family.t(l), &family.t(m)), &family.t(&lm));
                report.record(ok, "CP2", || format!("T_{} T_{} != T_{}", show(l), show(m), show(&lm)));
                let ok = family.equal(&family.mul(&family.t_star(m), &family.t_star(l)), &family.t_star(&lm));
                report.record(ok, "CP2", || format!("T_{}* T_{}* != T_({})*", show(m), show(l), show(&lm)));
            }
            let lhs = family.mul(&family.t_star(l), &family.t(m));
            let rhs = g
                .lambda_min(l, m)
                .iter()
                .fold(family.zero(), |acc, (nu, ga)| family.add(&acc, &family.mul(&family.t(nu), &family.t_star(ga))));
            report.record(family.equal(&lhs, &rhs), "CP3", || format!("T_{}* T_{}", show(l), show(m)));
        }
    }
    report
}

/// The generators of `C_R(Λ)` itself.
#[derive(Clone, Debug)]
pub struct UniversalFamily<R: CoefficientRing> {
    pub algebra: CohnAlgebra<R>,
}

impl<R: CoefficientRing> UniversalFamily<R> {
    pub fn new(algebra: CohnAlgebra<R>) -> Self {
        UniversalFamily { algebra }
    }
}

impl<R: CoefficientRing> CohnFamily for UniversalFamily<R> {
    type Ring = R;
    type Value = Element<R>;

    fn graph(&self) -> &KGraph {
        self.algebra.graph()
    }
    fn ring(&self) -> &R {
        self.algebra.ring()
    }
    fn t(&self, lambda: &Path) -> Element<R> {
        self.algebra.gen(lambda)
    }
    fn t_star(&self, mu: &Path) -> Element<R> {
        self.algebra.gen_star(mu)
    }
    fn mul(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        self.algebra.mul(a, b)
    }
    fn add(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        self.algebra.add(a, b)
    }
    fn scale(&self, r: &R::Elem, a: &Element<R>) -> Element<R> {
        self.algebra.scale(r, a)
    }
    fn zero(&self) -> Element<R> {
        Element::zero()
    }
    fn equal(&self, a: &Element<R>, b: &Element<R>) -> bool {
        a == b
    }
    fn word(&self, w: &NormalWord) -> Element<R> {
        self.algebra.word_element(w)
    }
}

impl<R: CoefficientRing> Coordinates for UniversalFamily<R> {
    fn coordinates(&self, values: &[Element<R>]) -> Result<Vec<Vec<(usize, R::Elem)>>> {
        let mut index: BTreeMap<NormalWord, usize> = BTreeMap::new();
        Ok(values
            .iter()
            .map(|v| {
                v.terms()
                    .map(|(w, c)| {
                        let n = index.len();
                        (*index.entry(w.clone()).or_insert(n), c.clone())
                    })
                    .collect()
            })
            .collect())
    }
}
