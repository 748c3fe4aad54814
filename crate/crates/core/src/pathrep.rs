//! The path representation on the free module over finite paths.
//!
//! `T_v x = x` when `r(x) = v`, `T_λ x = λx` when `s(λ) = r(x)`, and
//! `T_{μ*} x = σ^{d(μ)} x` when `x(0, d(μ)) = μ`; everything else is `0`.
//!
//! Operators are kept as combinations of monomials in these generators and
//! evaluated exactly. The basis is truncated at a degree cap `N`; an
//! operator is compared only on inputs `x` with `d(x) + margin <= N`, where
//! the margin bounds how far any monomial can raise degrees.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::{CohnAlgebra, Element, NormalWord};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::family::{CohnFamily, Coordinates};
use crate::graph::{KGraph, VertexId};
use crate::path::Path;
use crate::ring::CoefficientRing;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    /// `T_λ`; a vertex path gives `T_v`.
    Path(Path),
    /// `T_{μ*}`.
    Ghost(Path),
}

/// A combination of monomials; each monomial acts right to left.
#[derive(Clone, Debug)]
pub struct RepOperator<R: CoefficientRing> {
    terms: BTreeMap<Vec<Atom>, R::Elem>,
}

pub type Vector<R> = BTreeMap<Path, <R as CoefficientRing>::Elem>;

impl<R: CoefficientRing> RepOperator<R> {
    pub fn zero() -> Self {
        RepOperator { terms: BTreeMap::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, ring: &R, m: Vec<Atom>, c: R::Elem) {
        if ring.is_zero(&c) {
            return;
        }
        let sum = match self.terms.get(&m) {
            Some(old) => ring.add(old, &c),
            None => c,
        };
        if ring.is_zero(&sum) {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    /// Largest degree any monomial can add to its input at an intermediate
    /// step.
    pub fn margin(&self, rank: usize) -> Degree {
        let mut out = vec![0i64; rank];
        for m in self.terms.keys() {
            let mut run = vec![0i64; rank];
            for atom in m.iter().rev() {
                let (p, sign) = match atom {
                    Atom::Path(p) => (p, 1),
                    Atom::Ghost(p) => (p, -1),
                };
                for (i, r) in run.iter_mut().enumerate() {
                    *r += sign * p.degree().get(i) as i64;
                    out[i] = out[i].max(*r);
                }
            }
        }
        Degree::from_coords(out.into_iter().map(|x| x as u32).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Consistent { checked: usize, cap: Degree },
    Distinguished { witness: Path, cap: Degree },
}

/// The representation on paths of degree at most `cap`.
#[derive(Clone, Debug)]
pub struct PathRep<R: CoefficientRing> {
    graph: KGraph,
    ring: R,
    /// Inputs compared when no fixed cap is set.
    bound: Degree,
    cap: Option<Degree>,
}

impl<R: CoefficientRing> PathRep<R> {
    /// Compares operators on all inputs of degree at most `bound`, taking
    /// the cap as `bound + margin` per query.
    pub fn new(graph: KGraph, ring: R, bound: Degree) -> Self {
        PathRep { graph, ring, bound, cap: None }
    }

    /// Fixes the truncation cap.
    pub fn with_cap(graph: KGraph, ring: R, cap: Degree) -> Self {
        PathRep { graph, ring, bound: cap.clone(), cap: Some(cap) }
    }

    pub fn graph(&self) -> &KGraph {
        &self.graph
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    fn single(&self, atom: Atom) -> RepOperator<R> {
        let mut out = RepOperator::zero();
        out.accumulate(&self.ring, vec![atom], self.ring.one());
        out
    }

    pub fn op_vertex(&self, v: VertexId) -> RepOperator<R> {
        self.single(Atom::Path(self.graph.vertex_path(v)))
    }

    pub fn op_path(&self, lambda: &Path) -> RepOperator<R> {
        self.single(Atom::Path(lambda.clone()))
    }

    pub fn op_ghost(&self, mu: &Path) -> RepOperator<R> {
        if mu.is_vertex() {
            return self.op_vertex(mu.range());
        }
        self.single(Atom::Ghost(mu.clone()))
    }

    pub fn compose(&self, a: &RepOperator<R>, b: &RepOperator<R>) -> RepOperator<R> {
        let mut out = RepOperator::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let mut m = ma.clone();
                m.extend(mb.iter().cloned());
                out.accumulate(&self.ring, m, self.ring.mul(ca, cb));
            }
        }
        out
    }

    pub fn add(&self, a: &RepOperator<R>, b: &RepOperator<R>) -> RepOperator<R> {
        let mut out = a.clone();
        for (m, c) in &b.terms {
            out.accumulate(&self.ring, m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, r: &R::Elem, a: &RepOperator<R>) -> RepOperator<R> {
        let mut out = RepOperator::zero();
        for (m, c) in &a.terms {
            out.accumulate(&self.ring, m.clone(), self.ring.mul(r, c));
        }
        out
    }

    /// `t_λ t_{μ*} ↦ T_λ T_{μ*}`, extended linearly.
    pub fn represent(&self, a: &Element<R>) -> RepOperator<R> {
        let mut out = RepOperator::zero();
        for (w, c) in a.terms() {
            out.accumulate(&self.ring, self.word_monomial(w), c.clone());
        }
        out
    }

    fn word_monomial(&self, w: &NormalWord) -> Vec<Atom> {
        if w.mu.is_vertex() {
            vec![Atom::Path(w.lambda.clone())]
        } else {
            vec![Atom::Path(w.lambda.clone()), Atom::Ghost(w.mu.clone())]
        }
    }

    fn apply_monomial(&self, m: &[Atom], x: &Path) -> Option<Path> {
        let mut cur = x.clone();
        for atom in m.iter().rev() {
            cur = match atom {
                Atom::Path(l) if l.source() == cur.range() => self.graph.compose(l, &cur).unwrap(),
                Atom::Ghost(mu) if self.graph.extends(&cur, mu) => self.graph.shift(&cur, mu.degree()).unwrap(),
                _ => return None,
            };
        }
        Some(cur)
    }

    pub fn apply(&self, op: &RepOperator<R>, x: &Path) -> Vector<R> {
        let mut out: Vector<R> = BTreeMap::new();
        for (m, c) in &op.terms {
            if let Some(y) = self.apply_monomial(m, x) {
                let e = out.entry(y).or_insert_with(|| self.ring.zero());
                *e = self.ring.add(e, c);
            }
        }
        out.retain(|_, c| !self.ring.is_zero(c));
        out
    }

    pub fn apply_vector(&self, op: &RepOperator<R>, v: &Vector<R>) -> Vector<R> {
        let mut out: Vector<R> = BTreeMap::new();
        for (x, a) in v {
            for (y, b) in self.apply(op, x) {
                let e = out.entry(y).or_insert_with(|| self.ring.zero());
                *e = self.ring.add(e, &self.ring.mul(a, &b));
            }
        }
        out.retain(|_, c| !self.ring.is_zero(c));
        out
    }

    pub fn cap_for(&self, margin: &Degree) -> Degree {
        self.cap.clone().unwrap_or_else(|| self.bound.add(margin))
    }

    /// Basis paths on which an operator of this margin is exact.
    pub fn window(&self, margin: &Degree) -> Result<Vec<Path>> {
        let cap = self.cap_for(margin);
        let Some(room) = cap.checked_sub(margin) else {
            return Err(Error::WindowTooSmall { cap: cap.to_string(), margin: margin.to_string() });
        };
        Ok(self.graph.all_paths_up_to(&room))
    }

    /// Compares two operators on their common window.
    pub fn compare(&self, a: &RepOperator<R>, b: &RepOperator<R>) -> Result<OracleVerdict> {
        let rank = self.graph.rank();
        let margin = a.margin(rank).join(&b.margin(rank));
        let cap = self.cap_for(&margin);
        let inputs = self.window(&margin)?;
        for x in &inputs {
            if self.apply(a, x) != self.apply(b, x) {
                return Ok(OracleVerdict::Distinguished { witness: x.clone(), cap });
            }
        }
        Ok(OracleVerdict::Consistent { checked: inputs.len(), cap })
    }

    pub fn oracle_equal(&self, a: &Element<R>, b: &Element<R>) -> Result<OracleVerdict> {
        self.compare(&self.represent(a), &self.represent(b))
    }

    /// Matrix rows of the given operators over a shared window, for rank
    /// computations. Columns are `(input, output)` pairs.
    pub fn rows(&self, ops: &[RepOperator<R>]) -> Result<Vec<Vec<(usize, R::Elem)>>> {
        let rank = self.graph.rank();
        let margin = ops.iter().fold(Degree::zero(rank), |acc, o| acc.join(&o.margin(rank)));
        let inputs = self.window(&margin)?;
        let mut columns: HashMap<(Path, Path), usize> = HashMap::new();
        let mut rows = Vec::with_capacity(ops.len());
        for op in ops {
            let mut row = Vec::new();
            for x in &inputs {
                for (y, c) in self.apply(op, x) {
                    let n = columns.len();
                    let col = *columns.entry((x.clone(), y)).or_insert(n);
                    row.push((col, c));
                }
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

impl<R: CoefficientRing> CohnFamily for PathRep<R> {
    type Ring = R;
    type Value = RepOperator<R>;

    fn graph(&self) -> &KGraph {
        &self.graph
    }
    fn ring(&self) -> &R {
        &self.ring
    }
    fn t(&self, lambda: &Path) -> RepOperator<R> {
        self.op_path(lambda)
    }
    fn t_star(&self, mu: &Path) -> RepOperator<R> {
        self.op_ghost(mu)
    }
    fn mul(&self, a: &RepOperator<R>, b: &RepOperator<R>) -> RepOperator<R> {
        self.compose(a, b)
    }
    fn add(&self, a: &RepOperator<R>, b: &RepOperator<R>) -> RepOperator<R> {
        PathRep::add(self, a, b)
    }
    fn scale(&self, r: &R::Elem, a: &RepOperator<R>) -> RepOperator<R> {
        PathRep::scale(self, r, a)
    }
    fn zero(&self) -> RepOperator<R> {
        RepOperator::zero()
    }
    fn equal(&self, a: &RepOperator<R>, b: &RepOperator<R>) -> bool {
        matches!(self.compare(a, b), Ok(OracleVerdict::Consistent { .. }))
    }
    fn word(&self, w: &NormalWord) -> RepOperator<R> {
        let mut out = RepOperator::zero();
        out.accumulate(&self.ring, self.word_monomial(w), self.ring.one());
        out
    }
}

impl<R: CoefficientRing> Coordinates for PathRep<R> {
    fn coordinates(&self, values: &[RepOperator<R>]) -> Result<Vec<Vec<(usize, R::Elem)>>> {
        self.rows(values)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RepCheckReport {
    pub ring: String,
    pub bound: String,
    pub homomorphism_pairs: usize,
    pub homomorphism_failures: Vec<String>,
    pub nondegeneracy_checks: usize,
    pub nondegeneracy_failures: Vec<String>,
    pub independent_words: usize,
    pub independent: bool,
    pub pass: bool,
}

/// `r t_v` and `r ∏(t_v - t_e t_e*)` act on the basis vector `v` as `r v`,
/// for every vertex and every sample scalar of the ring.
pub fn nondegeneracy<R: CoefficientRing>(rep: &PathRep<R>) -> (usize, Vec<String>) {
    let g = rep.graph();
    let alg = CohnAlgebra::new(g.clone(), rep.ring().clone());
    let mut checks = 0;
    let mut failures = Vec::new();
    for v in g.vertices() {
        let vp = g.vertex_path(v);
        let basis: Vector<R> = BTreeMap::from([(vp.clone(), rep.ring().one())]);
        for r in rep.ring().samples() {
            for (label, x) in [("r t_v", alg.vertex(v)), ("r prod(t_v - t_e t_e*)", alg.gap_product(v, None))] {
                let image = rep.apply_vector(&rep.represent(&alg.scale(&r, &x)), &basis);
                checks += 1;
                let expected = BTreeMap::from([(vp.clone(), r.clone())]);
                if image != expected {
                    failures.push(format!("{label} at {} with r = {r}", g.vertex_name(v)));
                }
            }
        }
    }
    (checks, failures)
}

/// Homomorphism on word pairs, nondegeneracy at every vertex for the ring's
/// sample scalars, and independence of word images.
pub fn rep_check<R: CoefficientRing>(rep: &PathRep<R>, bound: &Degree) -> Result<RepCheckReport> {
    let g = rep.graph();
    let alg = CohnAlgebra::new(g.clone(), rep.ring().clone());
    let words = alg.spanning_words(bound);
    let mut report = RepCheckReport { ring: rep.ring().name(), bound: bound.to_string(), ..Default::default() };

    let ops: Vec<RepOperator<R>> = words.iter().map(|w| rep.represent(&alg.word_element(w))).collect();
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate() {
            let prod = rep.represent(&alg.mul(&alg.word_element(a), &alg.word_element(b)));
            let comp = rep.compose(&ops[i], &ops[j]);
            report.homomorphism_pairs += 1;
            match rep.compare(&prod, &comp)? {
                OracleVerdict::Consistent { .. } => {}
                OracleVerdict::Distinguished { witness, .. } => report.homomorphism_failures.push(format!(
                    "({})({}) at {}",
                    alg.display(&alg.word_element(a)),
                    alg.display(&alg.word_element(b)),
                    g.display(&witness)
                )),
            }
        }
    }

    let (checks, failures) = nondegeneracy(rep);
    report.nondegeneracy_checks = checks;
    report.nondegeneracy_failures = failures;

    report.independent_words = words.len();
    report.independent = rep.ring().independent(&rep.rows(&ops)?);
    report.pass = report.homomorphism_failures.is_empty() && report.nondegeneracy_failures.is_empty() && report.independent;
    Ok(report)
}
