//! The path groupoid on finite paths and its Steinberg algebra.
//!
//! Arrows are triples `(x, m, y)`. The basic set `TZ(λ *_s μ)` holds the
//! arrows `(λz, d(λ) - d(μ), μz)`; removing extensions `G` gives
//! `TZ(λ *_s μ ∖ G)`, the arrows whose `z` extends no `ν ∈ G`.
//!
//! Elements are stored as combinations of the indicators of the `G`-free
//! sets `B(λ, μ) = TZ(λ *_s μ)`, which are linearly independent as functions
//! on finite-path arrows. [`SteinbergAlgebra::pieces`] rewrites an element
//! as a combination of pairwise disjoint basic sets.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::Element;
use crate::degree::{Degree, Grade};
use crate::error::{Error, Result};
use crate::graph::KGraph;
use crate::path::Path;
use crate::ring::CoefficientRing;

/// `TZ(λ *_s μ ∖ G)` with `G` an antichain under extension, sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Bisection {
    pub lambda: Path,
    pub mu: Path,
    pub minus: Vec<Path>,
}

impl Bisection {
    pub fn grade(&self) -> Grade {
        self.lambda.degree().grade_minus(self.mu.degree())
    }

    pub fn inverse(&self) -> Bisection {
        Bisection { lambda: self.mu.clone(), mu: self.lambda.clone(), minus: self.minus.clone() }
    }
}

/// An arrow `(x, m, y)` of the groupoid on finite paths.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Triple {
    pub x: Path,
    pub m: Grade,
    pub y: Path,
}

impl Triple {
    pub fn inverse(&self) -> Triple {
        Triple { x: self.y.clone(), m: self.m.neg(), y: self.x.clone() }
    }
}

/// Key of a `G`-free basic set.
pub type Basic = (Path, Path);

#[derive(Clone, Debug)]
pub struct SteinbergElement<R: CoefficientRing> {
    terms: BTreeMap<Basic, R::Elem>,
}

impl<R: CoefficientRing> PartialEq for SteinbergElement<R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<R: CoefficientRing> SteinbergElement<R> {
    pub fn zero() -> Self {
        SteinbergElement { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients on the `G`-free indicators.
    pub fn expanded(&self) -> impl Iterator<Item = (&Basic, &R::Elem)> {
        self.terms.iter()
    }

    fn accumulate(&mut self, ring: &R, b: Basic, c: &R::Elem) {
        if ring.is_zero(c) {
            return;
        }
        let sum = match self.terms.get(&b) {
            Some(old) => ring.add(old, c),
            None => c.clone(),
        };
        if ring.is_zero(&sum) {
            self.terms.remove(&b);
        } else {
            self.terms.insert(b, sum);
        }
    }
}

#[derive(Clone, Debug)]
pub struct SteinbergAlgebra<R: CoefficientRing> {
    graph: KGraph,
    ring: R,
}

impl<R: CoefficientRing> SteinbergAlgebra<R> {
    pub fn new(graph: KGraph, ring: R) -> Self {
        SteinbergAlgebra { graph, ring }
    }

    pub fn graph(&self) -> &KGraph {
        &self.graph
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Validates and normalizes `TZ(λ *_s μ ∖ G)`.
    pub fn bisection(&self, lambda: &Path, mu: &Path, minus: &[Path]) -> Result<Bisection> {
        let g = &self.graph;
        if lambda.source() != mu.source() {
            return Err(Error::NotComposable {
                source_vertex: g.vertex_name(lambda.source()).to_string(),
                range_vertex: g.vertex_name(mu.source()).to_string(),
            });
        }
        if let Some(bad) = minus.iter().find(|nu| nu.range() != lambda.source()) {
            return Err(Error::NotAtVertex(format!(
                "{} (removed extension {})",
                g.vertex_name(lambda.source()),
                g.display(bad)
            )));
        }
        let set: BTreeSet<&Path> = minus.iter().collect();
        let minus: Vec<Path> = set
            .iter()
            .filter(|nu| !set.iter().any(|other| other != *nu && g.extends(nu, other)))
            .map(|nu| (*nu).clone())
            .collect();
        Ok(Bisection { lambda: lambda.clone(), mu: mu.clone(), minus })
    }

    pub fn contains(&self, b: &Bisection, t: &Triple) -> bool {
        let g = &self.graph;
        if t.m != b.grade() || !g.extends(&t.x, &b.lambda) || !g.extends(&t.y, &b.mu) {
            return false;
        }
        let z = g.shift(&t.x, b.lambda.degree()).unwrap();
        z == g.shift(&t.y, b.mu.degree()).unwrap() && !b.minus.iter().any(|nu| g.extends(&z, nu))
    }

    /// Members `(λz, m, μz)` with `d(z) <= bound`.
    pub fn members(&self, b: &Bisection, bound: &Degree) -> Vec<Triple> {
        let g = &self.graph;
        g.paths_up_to(b.lambda.source(), bound)
            .into_iter()
            .filter(|z| !b.minus.iter().any(|nu| g.extends(z, nu)))
            .map(|z| Triple {
                x: g.compose(&b.lambda, &z).unwrap(),
                m: b.grade(),
                y: g.compose(&b.mu, &z).unwrap(),
            })
            .collect()
    }

    pub fn basic(&self, lambda: &Path, mu: &Path) -> SteinbergElement<R> {
        let mut out = SteinbergElement::zero();
        out.accumulate(&self.ring, (lambda.clone(), mu.clone()), &self.ring.one());
        out
    }

    pub fn add(&self, a: &SteinbergElement<R>, b: &SteinbergElement<R>) -> SteinbergElement<R> {
        let mut out = a.clone();
        for (k, c) in &b.terms {
            out.accumulate(&self.ring, k.clone(), c);
        }
        out
    }

    pub fn scale(&self, r: &R::Elem, a: &SteinbergElement<R>) -> SteinbergElement<R> {
        let mut out = SteinbergElement::zero();
        for (k, c) in &a.terms {
            out.accumulate(&self.ring, k.clone(), &self.ring.mul(r, c));
        }
        out
    }

    pub fn sub(&self, a: &SteinbergElement<R>, b: &SteinbergElement<R>) -> SteinbergElement<R> {
        self.add(a, &self.scale(&self.ring.neg(&self.ring.one()), b))
    }

    /// `f*(a) = f(a⁻¹)`.
    pub fn star(&self, a: &SteinbergElement<R>) -> SteinbergElement<R> {
        let mut out = SteinbergElement::zero();
        for ((l, m), c) in &a.terms {
            out.accumulate(&self.ring, (m.clone(), l.clone()), c);
        }
        out
    }

    /// `B(λ1, μ1) ∩ B(λ2, μ2)` as a disjoint union of basic sets.
    pub fn intersect(&self, a: &Basic, b: &Basic) -> Vec<Basic> {
        let g = &self.graph;
        if a.0.degree().grade_minus(a.1.degree()) != b.0.degree().grade_minus(b.1.degree()) {
            return Vec::new();
        }
        if a.1.range() != b.1.range() {
            return Vec::new();
        }
        g.lambda_min(&a.0, &b.0)
            .into_iter()
            .filter_map(|(r1, r2)| {
                let y1 = g.compose(&a.1, &r1).unwrap();
                let y2 = g.compose(&b.1, &r2).unwrap();
                (y1 == y2).then(|| (g.compose(&a.0, &r1).unwrap(), y1))
            })
            .collect()
    }

    /// Pointwise product of functions.
    pub fn pointwise(&self, a: &SteinbergElement<R>, b: &SteinbergElement<R>) -> SteinbergElement<R> {
        let mut out = SteinbergElement::zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let c = self.ring.mul(ca, cb);
                for k in self.intersect(ka, kb) {
                    out.accumulate(&self.ring, k, &c);
                }
            }
        }
        out
    }

    /// `B(λ, μ) B(ν, γ) = ⊔_{(ρ,ζ) ∈ Λ^min(μ,ν)} B(λρ, γζ)`.
    pub fn basic_product(&self, a: &Basic, b: &Basic) -> Vec<Basic> {
        let g = &self.graph;
        g.lambda_min(&a.1, &b.0)
            .into_iter()
            .map(|(rho, zeta)| (g.compose(&a.0, &rho).unwrap(), g.compose(&b.1, &zeta).unwrap()))
            .collect()
    }

    /// Convolution, from `1_U ⋆ 1_V = 1_{UV}` on basic sets.
    pub fn convolve(&self, a: &SteinbergElement<R>, b: &SteinbergElement<R>) -> SteinbergElement<R> {
        let mut out = SteinbergElement::zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let c = self.ring.mul(ca, cb);
                for k in self.basic_product(ka, kb) {
                    out.accumulate(&self.ring, k, &c);
                }
            }
        }
        out
    }

    /// `1_{U_1 ∪ ... ∪ U_n}` by `u ← u + 1_U - u·1_U`.
    pub fn union_to_span(&self, sets: &[Bisection]) -> SteinbergElement<R> {
        let mut u = SteinbergElement::zero();
        for s in sets {
            let a = self.indicator(s);
            let overlap = self.pointwise(&u, &a);
            u = self.sub(&self.add(&u, &a), &overlap);
        }
        u
    }

    /// `1_{TZ(λ *_s μ ∖ G)}`.
    pub fn indicator(&self, b: &Bisection) -> SteinbergElement<R> {
        let g = &self.graph;
        let whole = self.basic(&b.lambda, &b.mu);
        if b.minus.is_empty() {
            return whole;
        }
        let removed: Vec<Bisection> = b
            .minus
            .iter()
            .map(|nu| Bisection {
                lambda: g.compose(&b.lambda, nu).unwrap(),
                mu: g.compose(&b.mu, nu).unwrap(),
                minus: Vec::new(),
            })
            .collect();
        self.sub(&whole, &self.union_to_span(&removed))
    }

    pub fn bisection_product(&self, u: &Bisection, v: &Bisection) -> SteinbergElement<R> {
        self.convolve(&self.indicator(u), &self.indicator(v))
    }

    /// Value of `f` at an arrow.
    pub fn evaluate(&self, f: &SteinbergElement<R>, t: &Triple) -> R::Elem {
        let mut acc = self.ring.zero();
        for ((l, m), c) in &f.terms {
            let b = Bisection { lambda: l.clone(), mu: m.clone(), minus: Vec::new() };
            if self.contains(&b, t) {
                acc = self.ring.add(&acc, c);
            }
        }
        acc
    }

    /// `(f ⋆ g)(a) = Σ_{r(b) = r(a)} f(b) g(b⁻¹a)`, summing over the arrows
    /// `b` in the support of `f`.
    pub fn convolution_at(&self, f: &SteinbergElement<R>, h: &SteinbergElement<R>, a: &Triple) -> R::Elem {
        let g = &self.graph;
        let mut bs: BTreeSet<Triple> = BTreeSet::new();
        for (l, m) in f.terms.keys() {
            if g.extends(&a.x, l) {
                let z = g.shift(&a.x, l.degree()).unwrap();
                if m.source() == z.range() {
                    bs.insert(Triple { x: a.x.clone(), m: l.degree().grade_minus(m.degree()), y: g.compose(m, &z).unwrap() });
                }
            }
        }
        let mut acc = self.ring.zero();
        for b in bs {
            let rest = Triple { x: b.y.clone(), m: a.m.add(&b.m.neg()), y: a.y.clone() };
            let term = self.ring.mul(&self.evaluate(f, &b), &self.evaluate(h, &rest));
            acc = self.ring.add(&acc, &term);
        }
        acc
    }

    /// Rewrites `f` as a combination of pairwise disjoint basic sets.
    pub fn pieces(&self, f: &SteinbergElement<R>) -> Vec<(Bisection, R::Elem)> {
        let g = &self.graph;
        let mut closure: BTreeSet<Basic> = f.terms.keys().cloned().collect();
        loop {
            let list: Vec<Basic> = closure.iter().cloned().collect();
            let mut grew = false;
            for (i, a) in list.iter().enumerate() {
                for b in &list[i + 1..] {
                    for k in self.intersect(a, b) {
                        grew |= closure.insert(k);
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let below = |w: &Basic, inner: &Basic| -> Option<Path> {
            if inner == w || !g.extends(&inner.0, &w.0) {
                return None;
            }
            let nu = g.shift(&inner.0, w.0.degree()).unwrap();
            (g.compose(&w.1, &nu).ok()? == inner.1).then_some(nu)
        };
        let mut out = Vec::new();
        for w in &closure {
            let value = f
                .terms
                .iter()
                .filter(|(b, _)| *b == w || below(b, w).is_some())
                .fold(self.ring.zero(), |acc, (_, c)| self.ring.add(&acc, c));
            if self.ring.is_zero(&value) {
                continue;
            }
            let minus: Vec<Path> = closure.iter().filter_map(|inner| below(w, inner)).collect();
            let b = self.bisection(&w.0, &w.1, &minus).expect("extensions of a basic set");
            out.push((b, value));
        }
        out
    }

    pub fn from_pieces(&self, pieces: &[(Bisection, R::Elem)]) -> SteinbergElement<R> {
        pieces
            .iter()
            .fold(SteinbergElement::zero(), |acc, (b, c)| self.add(&acc, &self.scale(c, &self.indicator(b))))
    }

    /// `φ_Q(t_λ t_{μ*}) = 1_{TZ(λ *_s μ)}`.
    pub fn phi_q(&self, a: &Element<R>) -> SteinbergElement<R> {
        let mut out = SteinbergElement::zero();
        for (w, c) in a.terms() {
            out.accumulate(&self.ring, (w.lambda.clone(), w.mu.clone()), c);
        }
        out
    }

    /// `Q_λ = 1_{TZ(λ *_s s(λ))}`.
    pub fn q(&self, lambda: &Path) -> SteinbergElement<R> {
        self.basic(lambda, &self.graph.vertex_path(lambda.source()))
    }

    /// `Q_{μ*} = 1_{TZ(s(μ) *_s μ)}`.
    pub fn q_star(&self, mu: &Path) -> SteinbergElement<R> {
        self.basic(&self.graph.vertex_path(mu.source()), mu)
    }

    /// Basic bisections with `d(λ), d(μ) <= bound` and `G ⊆ s(λ)Λ¹`; those
    /// with `λ ≠ μ` must contain an arrow `(x, m, y)` with `x ≠ y`.
    pub fn effectiveness_probe(&self, bound: &Degree) -> Result<EffectivenessReport> {
        let g = &self.graph;
        let all = g.all_paths_up_to(bound);
        let mut report = EffectivenessReport { bound: bound.to_string(), ..Default::default() };
        for l in &all {
            let edges: Vec<Path> = g.edges_with_range(l.source()).into_iter().map(|e| g.edge_path(e)).collect();
            if edges.len() >= 16 {
                return Err(Error::InvalidArgument("too many edges at one vertex to enumerate G".into()));
            }
            for m in all.iter().filter(|m| m.source() == l.source()) {
                for mask in 0..(1u32 << edges.len()) {
                    let minus: Vec<Path> =
                        (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i].clone()).collect();
                    let b = self.bisection(l, m, &minus)?;
                    let members = self.members(&b, bound);
                    if members.is_empty() {
                        continue;
                    }
                    report.checked += 1;
                    let in_iso = members.iter().all(|t| t.x == t.y);
                    if l == m {
                        if !members.iter().all(|t| t.x == t.y && t.m == Grade::zero(g.rank())) {
                            report.violations.push(format!("TZ({}*{}) leaves the unit space", g.display(l), g.display(m)));
                        }
                    } else if in_iso {
                        report.violations.push(format!(
                            "TZ({} * {} minus {} sets) lies in Iso",
                            g.display(l),
                            g.display(m),
                            minus.len()
                        ));
                    }
                }
            }
        }
        Ok(report)
    }
}

impl<R: CoefficientRing> crate::family::CohnFamily for SteinbergAlgebra<R> {
    type Ring = R;
    type Value = SteinbergElement<R>;

    fn graph(&self) -> &KGraph {
        &self.graph
    }
    fn ring(&self) -> &R {
        &self.ring
    }
    fn t(&self, lambda: &Path) -> SteinbergElement<R> {
        self.q(lambda)
    }
    fn t_star(&self, mu: &Path) -> SteinbergElement<R> {
        self.q_star(mu)
    }
    fn mul(&self, a: &SteinbergElement<R>, b: &SteinbergElement<R>) -> SteinbergElement<R> {
        self.convolve(a, b)
    }
    fn add(&self, a: &SteinbergElement<R>, b: &SteinbergElement<R>) -> SteinbergElement<R> {
        SteinbergAlgebra::add(self, a, b)
    }
    fn scale(&self, r: &R::Elem, a: &SteinbergElement<R>) -> SteinbergElement<R> {
        SteinbergAlgebra::scale(self, r, a)
    }
    fn zero(&self) -> SteinbergElement<R> {
        SteinbergElement::zero()
    }
    fn equal(&self, a: &SteinbergElement<R>, b: &SteinbergElement<R>) -> bool {
        a == b
    }
}

/// Values at the corner arrows `(λ, m, μ)` of every basic set in the
/// supports; the corner of `B` lies in `B'` iff `B ⊆ B'`, so this evaluation
/// is injective on spans of the supports.
impl<R: CoefficientRing> crate::family::Coordinates for SteinbergAlgebra<R> {
    fn coordinates(&self, values: &[SteinbergElement<R>]) -> Result<Vec<Vec<(usize, R::Elem)>>> {
        let corners: BTreeSet<Triple> = values
            .iter()
            .flat_map(|v| v.terms.keys())
            .map(|(l, m)| Triple { x: l.clone(), m: l.degree().grade_minus(m.degree()), y: m.clone() })
            .collect();
        Ok(values
            .iter()
            .map(|v| {
                corners
                    .iter()
                    .enumerate()
                    .map(|(i, t)| (i, self.evaluate(v, t)))
                    .filter(|(_, c)| !self.ring.is_zero(c))
                    .collect()
            })
            .collect())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct EffectivenessReport {
    pub bound: String,
    pub checked: usize,
    pub violations: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CohnAlgebra;
    use crate::graph::fixtures::lambda2;
    use crate::ring::Integers;
    use num_bigint::BigInt;

    fn setup() -> (SteinbergAlgebra<Integers>, KGraph) {
        let g = lambda2();
        (SteinbergAlgebra::new(g.clone(), Integers), g)
    }

    fn p(g: &KGraph, s: &str) -> Path {
        g.parse_path(s).unwrap()
    }

    #[test]
    fn bisection_products() {
        let (s, g) = setup();
        let (v, e, f) = (p(&g, "v"), p(&g, "e"), p(&g, "f"));
        let b = |l: &Path, m: &Path| s.bisection(l, m, &[]).unwrap();
        assert_eq!(s.bisection_product(&b(&e, &v), &b(&v, &f)), s.basic(&e, &f));
        assert_eq!(s.bisection_product(&b(&v, &e), &b(&f, &v)), s.basic(&f, &e));
        assert_eq!(s.bisection_product(&b(&v, &v), &b(&v, &v)), s.basic(&v, &v));
    }

    #[test]
    fn range_projections_commute() {
        let (s, g) = setup();
        let (e, f, ef) = (p(&g, "e"), p(&g, "f"), p(&g, "e.f"));
        let pe = s.convolve(&s.q(&e), &s.q_star(&e));
        let pf = s.convolve(&s.q(&f), &s.q_star(&f));
        assert_eq!(s.convolve(&pe, &pf), s.basic(&ef, &ef));
        assert!(s.convolve(&pe, &SteinbergElement::zero()).is_zero());
    }

    #[test]
    fn unions() {
        let (s, g) = setup();
        let (v, e, f, ef) = (p(&g, "v"), p(&g, "e"), p(&g, "f"), p(&g, "e.f"));
        let b = |l: &Path| s.bisection(l, l, &[]).unwrap();
        assert_eq!(s.union_to_span(&[b(&v), b(&e)]), s.basic(&v, &v));
        let expected = s.sub(&s.add(&s.basic(&e, &e), &s.basic(&f, &f)), &s.basic(&ef, &ef));
        assert_eq!(s.union_to_span(&[b(&e), b(&f)]), expected);
    }

    #[test]
    fn pieces_round_trip() {
        let (s, g) = setup();
        let (v, e, f) = (p(&g, "v"), p(&g, "e"), p(&g, "f"));
        let x = s.add(&s.add(&s.basic(&v, &v), &s.basic(&e, &e)), &s.scale(&BigInt::from(3), &s.basic(&f, &f)));
        let pieces = s.pieces(&x);
        assert_eq!(s.from_pieces(&pieces), x);
        assert_eq!(s.pieces(&s.from_pieces(&pieces)), pieces);
        // Pieces are disjoint: no member of one lies in another.
        for (i, (a, _)) in pieces.iter().enumerate() {
            for t in s.members(a, &Degree::splat(2, 2)) {
                for (j, (b, _)) in pieces.iter().enumerate() {
                    assert!(i == j || !s.contains(b, &t));
                }
                // And values agree with the expanded form.
                let val = pieces.iter().find(|(b, _)| s.contains(b, &t)).map(|(_, c)| c.clone()).unwrap();
                assert_eq!(val, s.evaluate(&x, &t));
            }
        }
    }

    #[test]
    fn phi_q_examples() {
        let (s, g) = setup();
        let alg = CohnAlgebra::new(g.clone(), Integers);
        let vid = g.vertex_id("v").unwrap();
        let v = p(&g, "v");
        assert_eq!(s.phi_q(&alg.vertex(vid)), s.basic(&v, &v));
        let edges: Vec<Path> = g.edges_with_range(vid).into_iter().map(|e| g.edge_path(e)).collect();
        for r in [1i64, -1, 2] {
            let r = BigInt::from(r);
            let lhs = s.phi_q(&alg.scale(&r, &alg.gap_product(vid, None)));
            let rhs = s.scale(&r, &s.indicator(&s.bisection(&v, &v, &edges).unwrap()));
            assert_eq!(lhs, rhs);
            assert!(!lhs.is_zero());
        }
    }

    #[test]
    fn indicator_with_removed_set_uses_ghost_factor() {
        let (s, g) = setup();
        let (e, f, ef) = (p(&g, "e"), p(&g, "f"), p(&g, "e.f"));
        let src = g.vertex_path(e.source());
        let gap = s.sub(&s.basic(&src, &src), &s.convolve(&s.q(&f), &s.q_star(&f)));
        let recovered = s.convolve(&s.convolve(&s.q(&e), &gap), &s.q_star(&ef));
        let direct = s.indicator(&s.bisection(&e, &ef, std::slice::from_ref(&f)).unwrap());
        assert_eq!(recovered, direct);
    }

    #[test]
    fn normalizes_removed_sets() {
        let (s, g) = setup();
        let (v, e, ef) = (p(&g, "v"), p(&g, "e"), p(&g, "e.f"));
        let b = s.bisection(&v, &v, &[ef.clone(), e.clone()]).unwrap();
        assert_eq!(b.minus, vec![e]);
        assert!(s.bisection(&v, &ef, std::slice::from_ref(&ef)).is_ok());
    }

    #[test]
    fn convolution_matches_pointwise_formula() {
        let (s, g) = setup();
        let all = g.all_paths_up_to(&Degree::splat(2, 1));
        let mut words: Vec<(Path, Path)> = Vec::new();
        for l in &all {
            for m in all.iter().filter(|m| m.source() == l.source()) {
                words.push((l.clone(), m.clone()));
            }
        }
        let x = s.add(&s.basic(&words[1].0, &words[1].1), &s.scale(&BigInt::from(2), &s.basic(&words[3].0, &words[3].1)));
        let y = s.sub(&s.basic(&words[2].0, &words[2].1), &s.basic(&words[5].0, &words[5].1));
        let prod = s.convolve(&x, &y);
        for (l, m) in &words {
            for t in s.members(&s.bisection(l, m, &[]).unwrap(), &Degree::splat(2, 1)) {
                assert_eq!(s.convolution_at(&x, &y, &t), s.evaluate(&prod, &t));
            }
        }
    }

    #[test]
    fn steinberg_family_satisfies_relations() {
        let (s, _) = setup();
        let r = crate::family::verify_cohn_axioms(&s, &Degree::splat(2, 2));
        assert!(r.pass(), "{:?}", r.failures);
    }

    #[test]
    fn effectiveness_on_lambda2() {
        let (s, _) = setup();
        let r = s.effectiveness_probe(&Degree::splat(2, 1)).unwrap();
        assert!(r.violations.is_empty());
        assert!(r.checked > 0);
    }
}
