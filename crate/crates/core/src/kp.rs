//! `KP_R(TΛ)` realized inside `C_R(Λ)`, the Kumjian-Pask relation checker
//! and the uniqueness harness.

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{CohnAlgebra, Element, NormalWord};
use crate::combinatorics::ExhaustiveVerdict;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::family::{verify_cohn_axioms, AxiomReport, CohnFamily, Coordinates};
use crate::graph::{KGraph, VertexId};
use crate::path::Path;
use crate::ring::CoefficientRing;
use crate::tgraph::{TLambda, Tag};

/// A combination of words `s_τ s_{ω*}` over `TΛ`, tagged with the graph it
/// was built on.
#[derive(Clone, Debug)]
pub struct KpWord<R: CoefficientRing> {
    pub fingerprint: u64,
    pub element: Element<R>,
}

/// The family `S` in `C_R(Λ)` indexed by `TΛ`.
#[derive(Clone, Debug)]
pub struct KpBridge<R: CoefficientRing> {
    t: TLambda,
    alg: CohnAlgebra<R>,
    kp: CohnAlgebra<R>,
    f: Vec<Element<R>>,
}

impl<R: CoefficientRing> KpBridge<R> {
    pub fn new(base: &KGraph, ring: R) -> Result<Self> {
        let t = TLambda::new(base)?;
        let alg = CohnAlgebra::new(base.clone(), ring.clone());
        let kp = CohnAlgebra::new(t.graph().clone(), ring);
        let f = base.vertices().map(|v| alg.f_idempotent(v)).collect();
        Ok(KpBridge { t, alg, kp, f })
    }

    pub fn tlambda(&self) -> &TLambda {
        &self.t
    }

    pub fn algebra(&self) -> &CohnAlgebra<R> {
        &self.alg
    }

    fn split(&self, v: VertexId, tag: Tag) -> Element<R> {
        match tag {
            Tag::Alpha => self.f[v.0 as usize].clone(),
            Tag::Beta => self.alg.sub(&self.alg.vertex(v), &self.f[v.0 as usize]),
        }
    }

    /// `S_{α(λ)} = t_λ F_{s(λ)}`, `S_{β(λ)} = t_λ (t_{s(λ)} - F_{s(λ)})`.
    pub fn s_image(&self, tau: &Path) -> Element<R> {
        let (tag, lambda) = self.t.classify(tau);
        self.alg.mul(&self.alg.gen(&lambda), &self.split(lambda.source(), tag))
    }

    /// `S_{α(μ)*} = F_{s(μ)} t_{μ*}`, `S_{β(μ)*} = (t_{s(μ)} - F_{s(μ)}) t_{μ*}`.
    pub fn s_star_image(&self, omega: &Path) -> Element<R> {
        let (tag, mu) = self.t.classify(omega);
        self.alg.mul(&self.split(mu.source(), tag), &self.alg.gen_star(&mu))
    }

    /// The word `s_τ s_{ω*}` over `TΛ`.
    pub fn kp_word(&self, tau: &Path, omega: &Path) -> Result<KpWord<R>> {
        let w = self.kp.word(tau, omega)?;
        Ok(KpWord { fingerprint: self.t.graph().fingerprint(), element: self.kp.term(w, self.alg.ring().one()) })
    }

    pub fn kp_sum(&self, a: &KpWord<R>, b: &KpWord<R>) -> Result<KpWord<R>> {
        if a.fingerprint != b.fingerprint {
            return Err(Error::MixedGraphs);
        }
        Ok(KpWord { fingerprint: a.fingerprint, element: self.kp.add(&a.element, &b.element) })
    }

    pub fn pi(&self, x: &KpWord<R>) -> Result<Element<R>> {
        if x.fingerprint != self.t.graph().fingerprint() {
            return Err(Error::MixedGraphs);
        }
        Ok(self.eval(&x.element))
    }
}

impl<R: CoefficientRing> CohnFamily for KpBridge<R> {
    type Ring = R;
    type Value = Element<R>;

    fn graph(&self) -> &KGraph {
        self.t.graph()
    }
    fn ring(&self) -> &R {
        self.alg.ring()
    }
    fn t(&self, lambda: &Path) -> Element<R> {
        self.s_image(lambda)
    }
    fn t_star(&self, mu: &Path) -> Element<R> {
        self.s_star_image(mu)
    }
    fn mul(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        self.alg.mul(a, b)
    }
    fn add(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        self.alg.add(a, b)
    }
    fn scale(&self, r: &R::Elem, a: &Element<R>) -> Element<R> {
        self.alg.scale(r, a)
    }
    fn zero(&self) -> Element<R> {
        Element::zero()
    }
    fn equal(&self, a: &Element<R>, b: &Element<R>) -> bool {
        a == b
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct KpReport {
    pub vertices_checked: Vec<String>,
    pub vacuous: Vec<String>,
    pub stepstone_checks: usize,
    pub failures: Vec<String>,
}

impl KpReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn gap<F: CohnFamily>(family: &F, x: &Path, projections: &[Path]) -> F::Value {
    let sx = family.t(x);
    projections.iter().fold(sx.clone(), |acc, p| {
        let proj = family.mul(&family.t(p), &family.t_star(p));
        family.mul(&acc, &family.sub(&sx, &proj))
    })
}

fn edges_exhaustive(g: &KGraph, v: VertexId) -> Result<Option<Vec<Path>>> {
    let edges: Vec<Path> = g.edges_with_range(v).into_iter().map(|e| g.edge_path(e)).collect();
    if edges.is_empty() {
        return Ok(None);
    }
    Ok(match g.is_exhaustive(v, &edges, None)? {
        ExhaustiveVerdict::Exhaustive { .. } => Some(edges),
        _ => None,
    })
}

/// At every vertex `x` whose edge set `xΛ¹` is exhaustive, checks
/// `∏_{g ∈ xΛ¹}(S_x - S_g S_{g*}) = 0`, and spot-checks
/// `S_x - S_λ S_{λ*} = ∏_{g ∈ s(λ)Λ¹}(S_x - S_{λg} S_{(λg)*})` for `λ ∈ xΛ`
/// up to `bound`. Other vertices are recorded as vacuous.
pub fn verify_kp_family<F: CohnFamily>(family: &F, bound: &Degree) -> Result<KpReport> {
    let g = family.graph();
    let mut report = KpReport::default();
    for x in g.vertices() {
        let name = g.vertex_name(x).to_string();
        let Some(edges) = edges_exhaustive(g, x)? else {
            report.vacuous.push(name);
            continue;
        };
        let xp = g.vertex_path(x);
        if !family.is_zero(&gap(family, &xp, &edges)) {
            report.failures.push(format!("KP product at {name} is nonzero"));
        }
        report.vertices_checked.push(name);
        for lambda in g.paths_up_to(x, bound).into_iter().filter(|l| !l.is_vertex()) {
            let Some(next) = edges_exhaustive(g, lambda.source())? else { continue };
            let ext: Vec<Path> = next.iter().map(|e| g.compose(&lambda, e).unwrap()).collect();
            let lhs = family.sub(&family.t(&xp), &family.mul(&family.t(&lambda), &family.t_star(&lambda)));
            report.stepstone_checks += 1;
            if !family.equal(&lhs, &gap(family, &xp, &ext)) {
                report.failures.push(format!("stepstone identity fails for {}", g.display(&lambda)));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct IsoReport {
    pub ring: String,
    pub bound: String,
    pub cohn: AxiomReport,
    pub kp: KpReport,
    pub surjectivity_checks: usize,
    pub surjectivity_failures: Vec<String>,
    pub grading_checks: usize,
    pub grading_failures: Vec<String>,
    pub pass: bool,
}

/// Relations, KP condition, surjectivity identities and grading of `π`.
pub fn iso_check<R: CoefficientRing>(bridge: &KpBridge<R>, bound: &Degree) -> Result<IsoReport> {
    let alg = bridge.algebra();
    let base = alg.graph();
    let t = bridge.tlambda();
    let mut report = IsoReport {
        ring: alg.ring().name(),
        bound: bound.to_string(),
        cohn: verify_cohn_axioms(bridge, bound),
        kp: verify_kp_family(bridge, bound)?,
        ..Default::default()
    };
    for lambda in base.all_paths_up_to(bound) {
        let (a, b) = (t.alpha(&lambda), t.beta(&lambda));
        report.surjectivity_checks += 2;
        if alg.add(&bridge.s_image(&a), &bridge.s_image(&b)) != alg.gen(&lambda) {
            report.surjectivity_failures.push(format!("t_{}", base.display(&lambda)));
        }
        if alg.add(&bridge.s_star_image(&a), &bridge.s_star_image(&b)) != alg.gen_star(&lambda) {
            report.surjectivity_failures.push(format!("t_{}*", base.display(&lambda)));
        }
    }
    let tg = t.graph();
    let kp = CohnAlgebra::new(tg.clone(), alg.ring().clone());
    for w in kp.spanning_words(bound) {
        let image = bridge.pi(&bridge.kp_word(&w.lambda, &w.mu)?)?;
        report.grading_checks += 1;
        if alg.degree_support(&image).iter().any(|n| *n != w.grade()) {
            report
                .grading_failures
                .push(format!("s_{} s_{}* leaves its component", tg.display(&w.lambda), tg.display(&w.mu)));
        }
    }
    report.pass = report.cohn.pass()
        && report.kp.pass()
        && report.surjectivity_failures.is_empty()
        && report.grading_failures.is_empty();
    Ok(report)
}

/// Identities of the boundary idempotents `F_v` in `C_R(Λ)`, including
/// independence of the edge order.
pub fn f_lemma_report<R: CoefficientRing>(alg: &CohnAlgebra<R>, bound: &Degree) -> AxiomReport {
    let g = alg.graph();
    let mut report = AxiomReport::default();
    let f: Vec<Element<R>> = g.vertices().map(|v| alg.f_idempotent(v)).collect();
    for v in g.vertices() {
        let fv = &f[v.0 as usize];
        let tv = alg.vertex(v);
        let rest = alg.sub(&tv, fv);
        let name = g.vertex_name(v);
        report.record(alg.mul(fv, fv) == *fv, "F^2 = F", || name.to_string());
        report.record(alg.mul(&rest, &rest) == rest, "(t - F)^2 = t - F", || name.to_string());
        report.record(alg.mul(&tv, fv) == *fv && alg.mul(fv, &tv) == *fv, "t_v F_v = F_v = F_v t_v", || {
            name.to_string()
        });
        for w in g.vertices().filter(|w| *w != v) {
            let fw = &f[w.0 as usize];
            report.record(alg.mul(fw, fv).is_zero() && alg.mul(&alg.vertex(w), fv).is_zero(), "F_w F_v = 0 = t_w F_v", || {
                format!("{} {}", g.vertex_name(w), name)
            });
        }
        for lambda in g.paths_up_to(v, bound).into_iter().filter(|l| !l.is_vertex()) {
            let (t, ts) = (alg.gen(&lambda), alg.gen_star(&lambda));
            report.record(alg.mul(fv, &t) == t && alg.mul(&ts, fv) == ts, "F_v t_λ = t_λ, t_λ* F_v = t_λ*", || {
                g.display(&lambda).to_string()
            });
        }
        let edges = g.edges_with_range(v);
        if edges.len() <= 6 {
            for order in edges.iter().copied().permutations(edges.len()) {
                report.record(alg.f_idempotent_ordered(v, &order) == *fv, "edge order", || name.to_string());
            }
        }
    }
    report
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct UniquenessReport {
    pub ring: String,
    pub bound: String,
    pub hypothesis_checks: usize,
    pub independent_words: usize,
    pub independent: bool,
    pub factorization_checks: usize,
    pub factorization_failures: Vec<String>,
    pub pass: bool,
}

/// Checks `φ(r t_v) ≠ 0` and `φ(r ∏(t_v - t_e t_{e*})) ≠ 0` for the ring's
/// sample scalars, then independence of the images of all normal words up
/// to `bound`, then `φ(t_λ) = φ(t_λ)F^φ + φ(t_λ)(φ(t_s) - F^φ)` and its
/// ghost analogue on generators.
pub fn uniqueness_harness<F: Coordinates>(family: &F, bound: &Degree) -> Result<UniquenessReport> {
    let g = family.graph();
    let ring = family.ring();
    let mut report = UniquenessReport { ring: ring.name(), bound: bound.to_string(), ..Default::default() };
    for v in g.vertices() {
        let vp = g.vertex_path(v);
        let edges: Vec<Path> = g.edges_with_range(v).into_iter().map(|e| g.edge_path(e)).collect();
        let prod = gap(family, &vp, &edges);
        for r in ring.samples() {
            for (which, x) in [("r t_v", family.t(&vp)), ("r prod(t_v - t_e t_e*)", prod.clone())] {
                report.hypothesis_checks += 1;
                if family.is_zero(&family.scale(&r, &x)) {
                    return Err(Error::HypothesisFailed {
                        vertex: g.vertex_name(v).to_string(),
                        r: r.to_string(),
                        which: which.to_string(),
                    });
                }
            }
        }
    }

    let alg = CohnAlgebra::new(g.clone(), ring.clone());
    let words: Vec<NormalWord> = alg.spanning_words(bound);
    let images: Vec<F::Value> = words.iter().map(|w| family.word(w)).collect();
    report.independent_words = words.len();
    report.independent = ring.independent(&family.coordinates(&images)?);

    let f: Vec<F::Value> = g
        .vertices()
        .map(|v| {
            let vp = g.vertex_path(v);
            let edges: Vec<Path> = g.edges_with_range(v).into_iter().map(|e| g.edge_path(e)).collect();
            family.sub(&family.t(&vp), &gap(family, &vp, &edges))
        })
        .collect();
    for lambda in g.all_paths_up_to(bound) {
        let s = lambda.source();
        let fs = &f[s.0 as usize];
        let rest = family.sub(&family.t(&g.vertex_path(s)), fs);
        let t = family.t(&lambda);
        let ts = family.t_star(&lambda);
        report.factorization_checks += 2;
        if !family.equal(&family.add(&family.mul(&t, fs), &family.mul(&t, &rest)), &t) {
            report.factorization_failures.push(format!("t_{}", g.display(&lambda)));
        }
        if !family.equal(&family.add(&family.mul(fs, &ts), &family.mul(&rest, &ts)), &ts) {
            report.factorization_failures.push(format!("t_{}*", g.display(&lambda)));
        }
    }
    report.pass = report.independent && report.factorization_failures.is_empty();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::UniversalFamily;
    use crate::graph::fixtures::lambda2;
    use crate::ring::{Integers, IntegersMod, Rationals};

    fn bridge() -> KpBridge<Integers> {
        KpBridge::new(&lambda2(), Integers).unwrap()
    }

    fn tp(b: &KpBridge<Integers>, s: &str) -> Path {
        b.tlambda().graph().parse_path(s).unwrap()
    }

    #[test]
    fn vertex_images() {
        let b = bridge();
        let alg = b.algebra();
        let v = alg.graph().vertex_id("v").unwrap();
        let f = alg.f_idempotent(v);
        assert_eq!(b.s_image(&tp(&b, "a:v")), f);
        assert_eq!(b.s_image(&tp(&b, "b:v")), alg.sub(&alg.vertex(v), &f));
        assert!(alg.mul(&b.s_image(&tp(&b, "a:v")), &b.s_image(&tp(&b, "b:v"))).is_zero());
        let e = alg.graph().parse_path("e").unwrap();
        assert_eq!(alg.add(&b.s_image(&tp(&b, "a:e")), &b.s_image(&tp(&b, "b:e"))), alg.gen(&e));
    }

    #[test]
    fn pi_is_multiplicative_on_generators() {
        let b = bridge();
        let (ae, af) = (tp(&b, "a:e"), tp(&b, "a:f"));
        let lhs = b.algebra().mul(&b.s_star_image(&ae), &b.s_image(&af));
        let tg = b.tlambda().graph();
        let rhs: Vec<KpWord<Integers>> =
            tg.lambda_min(&ae, &af).iter().map(|(n, g)| b.kp_word(n, g).unwrap()).collect();
        let sum = rhs.iter().skip(1).fold(rhs[0].clone(), |acc, w| b.kp_sum(&acc, w).unwrap());
        assert_eq!(b.pi(&sum).unwrap(), lhs);
    }

    #[test]
    fn mixed_graphs_rejected() {
        let b = bridge();
        let other = KpBridge::new(&crate::graph::fixtures::lambda1(), Integers);
        let w = b.kp_word(&tp(&b, "a:v"), &tp(&b, "a:v")).unwrap();
        if let Ok(other) = other {
            assert!(matches!(other.pi(&w), Err(Error::MixedGraphs)));
        }
        let forged = KpWord { fingerprint: w.fingerprint ^ 1, element: w.element };
        assert!(matches!(b.pi(&forged), Err(Error::MixedGraphs)));
    }

    #[test]
    fn isomorphism_suite() {
        let r = iso_check(&bridge(), &Degree::splat(2, 2)).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.kp.vertices_checked.contains(&"a:v".to_string()));
        assert!(r.kp.vacuous.contains(&"b:v".to_string()));
        assert!(r.kp.stepstone_checks > 0);
    }

    #[test]
    fn kp_fails_for_cohn_algebra() {
        let fam = UniversalFamily::new(CohnAlgebra::new(lambda2(), Integers));
        let r = verify_kp_family(&fam, &Degree::splat(2, 1)).unwrap();
        assert!(!r.pass());
    }

    #[test]
    fn f_lemma_holds() {
        {
            let bound = Degree::splat(2, 2);
            let r = f_lemma_report(&CohnAlgebra::new(lambda2(), Integers), &bound);
            assert!(r.pass(), "{:?}", r.failures);
            let r = f_lemma_report(&CohnAlgebra::new(lambda2(), IntegersMod::new(4).unwrap()), &bound);
            assert!(r.pass());
        }
    }

    #[test]
    fn uniqueness_for_steinberg_model() {
        let s = crate::steinberg::SteinbergAlgebra::new(lambda2(), Rationals);
        let r = uniqueness_harness(&s, &Degree::splat(2, 2)).unwrap();
        assert!(r.pass, "{r:?}");
    }
}
