//! Property suites: the acceptance criteria over the bundled graphs, and
//! the per-graph suite behind `kgraph suite FILE`.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::algebra::{CohnAlgebra, Element, NormalWord};
use crate::corpus;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::family::{verify_cohn_axioms, UniversalFamily};
use crate::graph::{validate, KGraph};
use crate::kp::{f_lemma_report, iso_check, uniqueness_harness, KpBridge};
use crate::pathrep::{nondegeneracy, rep_check, PathRep};
use crate::ring::{CoefficientRing, Integers, IntegersMod, Rationals};
use crate::steinberg::{Bisection, SteinbergAlgebra, Triple};
use crate::tgraph::TLambda;

pub const SEED_VAR: &str = "KGRAPH_SUITE_SEED";
pub const DEFAULT_SEED: u64 = 0x6b67;

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub ring: String,
    pub bound: String,
    pub seed: u64,
    pub criteria: Vec<Criterion>,
    pub pass: bool,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn lines(&self) -> Vec<String> {
        self.criteria
            .iter()
            .map(|c| format!("[{}] {} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.name, c.detail))
            .collect()
    }
}

pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED)
}

struct Builder {
    criteria: Vec<Criterion>,
}

impl Builder {
    fn push(&mut self, id: &str, name: &str, outcome: Result<(bool, String)>) {
        let (pass, detail) = outcome.unwrap_or_else(|e| (false, format!("{}: {e}", e.code())));
        self.criteria.push(Criterion { id: id.into(), name: name.into(), pass, detail });
    }

    fn finish(self, ring: String, bound: &Degree, seed: u64, start: Instant) -> SuiteReport {
        let pass = self.criteria.iter().all(|c| c.pass);
        SuiteReport {
            ring,
            bound: bound.to_string(),
            seed,
            criteria: self.criteria,
            pass,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

fn first<T: std::fmt::Debug>(xs: &[T]) -> String {
    xs.first().map(|x| format!("{x:?}")).unwrap_or_default()
}

fn axioms(g: &KGraph, bound: &Degree) -> (bool, String) {
    let r = verify_cohn_axioms(&UniversalFamily::new(CohnAlgebra::new(g.clone(), Integers)), bound);
    (r.pass(), format!("{} checks, {} failures {}", r.checks, r.failures.len(), first(&r.failures)))
}

fn homomorphism(g: &KGraph, bound: &Degree) -> Result<(bool, String)> {
    let r = rep_check(&PathRep::new(g.clone(), Integers, bound.clone()), bound)?;
    let ok = r.homomorphism_failures.is_empty();
    Ok((ok, format!("{} word pairs, {} discrepancies {}", r.homomorphism_pairs, r.homomorphism_failures.len(), first(&r.homomorphism_failures))))
}

fn nondegenerate_on<R: CoefficientRing>(g: &KGraph, ring: R, bound: &Degree) -> (usize, Vec<String>) {
    nondegeneracy(&PathRep::new(g.clone(), ring, bound.clone()))
}

fn f_lemma(graphs: &[&KGraph], bound: &Degree) -> (bool, String) {
    let mut checks = 0;
    let mut failures = Vec::new();
    for g in graphs {
        for r in [
            f_lemma_report(&CohnAlgebra::new((*g).clone(), Integers), bound),
            f_lemma_report(&CohnAlgebra::new((*g).clone(), Rationals), bound),
            f_lemma_report(&CohnAlgebra::new((*g).clone(), IntegersMod::new(4).unwrap()), bound),
        ] {
            checks += r.checks;
            failures.extend(r.failures);
        }
    }
    (failures.is_empty(), format!("{checks} identities, {} failures {}", failures.len(), first(&failures)))
}

fn tgraph_structure(base: &KGraph) -> Result<(bool, String)> {
    let t = TLambda::new(base)?;
    let tg = t.graph();
    let valid = validate(&tg.to_presentation()).is_valid();
    let sources: Vec<String> = tg.sources().into_iter().map(|v| tg.vertex_name(v).to_string()).collect();
    let expected: Vec<String> = base.vertices().map(|v| tg.vertex_name(t.beta_vertex(v)).to_string()).collect();
    let mut ok = valid && sources == expected;
    let mut notes = vec![format!("valid={valid}, sources={sources:?}")];
    for v in base.vertices() {
        let report = t.exhaustive_check(v)?;
        ok &= report.pass;
        notes.push(format!("{}: {} edge subsets", tg.vertex_name(t.alpha_vertex(v)), report.cases.len()));
    }
    Ok((ok, notes.join("; ")))
}

fn witness_when_dropping(base: &KGraph, v: &str, drop: &str) -> Result<(String, String)> {
    let t = TLambda::new(base)?;
    let report = t.exhaustive_check(base.vertex_id(v).ok_or_else(|| Error::InvalidArgument(v.into()))?)?;
    let case = report.case_without(drop).ok_or_else(|| Error::InvalidArgument(drop.into()))?;
    Ok((case.witness.clone().unwrap_or_default(), case.witness_degree.clone().unwrap_or_default()))
}

fn isomorphism<R: CoefficientRing>(base: &KGraph, ring: R, bound: &Degree) -> Result<(bool, String)> {
    let r = iso_check(&KpBridge::new(base, ring)?, bound)?;
    Ok((
        r.pass,
        format!(
            "{}: CP {} checks, KP at {:?} (vacuous {:?}), {} stepstones, {} surjectivity, {} graded words",
            r.ring,
            r.cohn.checks,
            r.kp.vertices_checked,
            r.kp.vacuous,
            r.kp.stepstone_checks,
            r.surjectivity_checks,
            r.grading_checks
        ),
    ))
}

fn uniqueness(base: &KGraph, bound: &Degree) -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    macro_rules! run {
        ($label:expr, $fam:expr) => {{
            let r = uniqueness_harness(&$fam, bound)?;
            ok &= r.pass;
            notes.push(format!("{} over {}: {} words independent={}", $label, r.ring, r.independent_words, r.independent));
        }};
    }
    run!("path-rep", PathRep::new(base.clone(), Integers, bound.clone()));
    run!("path-rep", PathRep::new(base.clone(), Rationals, bound.clone()));
    run!("phi_Q", SteinbergAlgebra::new(base.clone(), Integers));
    run!("phi_Q", SteinbergAlgebra::new(base.clone(), Rationals));
    Ok((ok, notes.join("; ")))
}

/// `φ_Q(ab) = φ_Q(a) ⋆ φ_Q(b)` on all word pairs; each product is also
/// evaluated pointwise at the corners of its support and at sampled arrows.
fn steinberg_multiplicative(base: &KGraph, bound: &Degree, rng: &mut StdRng) -> (bool, String) {
    let alg = CohnAlgebra::new(base.clone(), Integers);
    let s = SteinbergAlgebra::new(base.clone(), Integers);
    let words = alg.spanning_words(bound);
    let mut sample: Vec<Triple> = Vec::new();
    for w in &words {
        let b = Bisection { lambda: w.lambda.clone(), mu: w.mu.clone(), minus: Vec::new() };
        sample.extend(s.members(&b, &Degree::splat(base.rank(), 1)));
    }
    sample.shuffle(rng);
    sample.truncate(24);
    let mut pairs = 0;
    let mut pointwise = 0;
    let mut failures = Vec::new();
    for a in &words {
        let pa = s.phi_q(&alg.word_element(a));
        for b in &words {
            let pb = s.phi_q(&alg.word_element(b));
            let conv = s.convolve(&pa, &pb);
            pairs += 1;
            if conv != s.phi_q(&alg.mul(&alg.word_element(a), &alg.word_element(b))) {
                failures.push(format!("{:?} {:?}", a, b));
            }
            let corners = conv
                .expanded()
                .map(|((l, m), _)| Triple { x: l.clone(), m: l.degree().grade_minus(m.degree()), y: m.clone() });
            for t in corners.chain(sample.iter().cloned()) {
                pointwise += 1;
                if s.convolution_at(&pa, &pb, &t) != s.evaluate(&conv, &t) {
                    failures.push(format!("pointwise at {t:?}"));
                }
            }
        }
    }
    (failures.is_empty(), format!("{pairs} word pairs, {pointwise} pointwise evaluations, {} failures", failures.len()))
}

fn union_example(base: &KGraph) -> Result<(bool, String)> {
    let s = SteinbergAlgebra::new(base.clone(), Integers);
    let (e, f) = (base.parse_path("e")?, base.parse_path("f")?);
    let ef = base.compose(&e, &f)?;
    let got = s.union_to_span(&[s.bisection(&e, &e, &[])?, s.bisection(&f, &f, &[])?]);
    let want = s.sub(&s.add(&s.basic(&e, &e), &s.basic(&f, &f)), &s.basic(&ef, &ef));
    Ok((got == want, "1_TZ(e*e) + 1_TZ(f*f) - 1_TZ(ef*ef)".into()))
}

fn effectiveness(g: &KGraph, bound: &Degree) -> Result<(bool, String)> {
    let r = SteinbergAlgebra::new(g.clone(), Integers).effectiveness_probe(bound)?;
    Ok((r.violations.is_empty(), format!("{} bisections, {} violations", r.checked, r.violations.len())))
}

fn aperiodicity(tl: &KGraph, l2: &KGraph, bound: &Degree) -> Result<(bool, String)> {
    let t = tl.aperiodicity_probe(bound);
    let p = l2.aperiodicity_probe(bound);
    let (e, f) = (l2.parse_path("e")?, l2.parse_path("f")?);
    let flagged = p.is_unresolved(&e, &f) || p.is_unresolved(&f, &e);
    Ok((
        t.unresolved.is_empty() && flagged,
        format!(
            "T(Lambda2): {} witnessed, {} unresolved; Lambda2: (e,f) unresolved={flagged}",
            t.witnessed.len(),
            t.unresolved.len()
        ),
    ))
}

fn combine(parts: Vec<Result<(bool, String)>>) -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for p in parts {
        let (pass, note) = p?;
        ok &= pass;
        notes.push(note);
    }
    Ok((ok, notes.join("; ")))
}

/// The nine acceptance criteria on `Λ₁`, `Λ₂`, `Ω_{2,(1,2)}` and `TΛ(Λ₂)`.
pub fn acceptance(bound: &Degree, seed: u64) -> Result<SuiteReport> {
    if bound.rank() != 2 {
        return Err(Error::InvalidArgument("the acceptance graphs have rank 2".into()));
    }
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(seed);
    let l1 = corpus::lambda1();
    let l2 = corpus::lambda2();
    let om = corpus::omega_1_2();
    let tl = TLambda::new(&l2)?.graph().clone();
    let mut b = Builder { criteria: Vec::new() };

    let (a2, n2) = axioms(&l2, bound);
    let (ao, no) = axioms(&om, bound);
    let (a1, n1) = axioms(&l1, bound);
    b.push("1", "axiom suite", Ok((a2 && ao && a1, format!("Lambda2 {n2}; Omega {no}; Lambda1 {n1}"))));

    b.push("2", "path-representation oracle", homomorphism(&l2, bound));

    let mut checks = 0;
    let mut failures = Vec::new();
    for g in [&l2, &om] {
        for (c, f) in [
            nondegenerate_on(g, Integers, bound),
            nondegenerate_on(g, IntegersMod::new(4).unwrap(), bound),
            nondegenerate_on(g, Rationals, bound),
        ] {
            checks += c;
            failures.extend(f);
        }
    }
    b.push("3", "nondegeneracy", Ok((failures.is_empty(), format!("{checks} checks, {} failures {}", failures.len(), first(&failures)))));

    b.push("4", "F-lemma suite", Ok(f_lemma(&[&l2, &tl], bound)));

    b.push(
        "5",
        "T(Lambda) structure",
        combine(vec![
            tgraph_structure(&l2),
            witness_when_dropping(&l2, "v", "a:e").map(|(w, d)| {
                (w == "a:e.b:e" && d == "(2,0)", format!("dropping a:e: witness {w} at {d}"))
            }),
        ]),
    );

    let small = Degree::splat(2, 1);
    b.push(
        "6",
        "isomorphism suite",
        combine(vec![
            isomorphism(&l2, Integers, bound),
            isomorphism(&l2, Rationals, &small),
            isomorphism(&l2, IntegersMod::new(4).unwrap(), &small),
        ]),
    );

    b.push("7", "uniqueness harness", uniqueness(&l2, bound));

    b.push(
        "8",
        "Steinberg suite",
        combine(vec![
            Ok(steinberg_multiplicative(&l2, bound, &mut rng)),
            union_example(&l2),
            effectiveness(&l2, bound),
            effectiveness(&tl, bound),
        ]),
    );

    b.push("9", "aperiodicity", aperiodicity(&tl, &l2, bound));

    Ok(b.finish("Z (spot checks over Q and Zmod:4)".into(), bound, seed, start))
}

fn random_element<R: CoefficientRing>(alg: &CohnAlgebra<R>, words: &[NormalWord], rng: &mut StdRng) -> Element<R> {
    let samples = alg.ring().samples();
    words.choose_multiple(rng, 3).fold(Element::zero(), |acc, w| {
        let c = samples.choose(rng).unwrap();
        alg.add(&acc, &alg.scale(c, &alg.word_element(w)))
    })
}

/// Properties of one graph over one ring. Graphs without sources also get
/// the `TΛ`, isomorphism, uniqueness and Steinberg checks.
pub fn graph_suite<R: CoefficientRing>(g: &KGraph, ring: R, bound: &Degree, seed: u64) -> Result<SuiteReport> {
    if bound.rank() != g.rank() {
        return Err(Error::InvalidArgument(format!("bound {bound} does not have rank {}", g.rank())));
    }
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut b = Builder { criteria: Vec::new() };
    let alg = CohnAlgebra::new(g.clone(), ring.clone());

    let r = verify_cohn_axioms(&UniversalFamily::new(alg.clone()), bound);
    b.push("axioms", "CP1-3 on the universal family", Ok((r.pass(), format!("{} checks, {} failures", r.checks, r.failures.len()))));

    let words = alg.spanning_words(bound);
    let mut assoc_ok = true;
    for _ in 0..32 {
        let [x, y, z] = [0, 1, 2].map(|_| random_element(&alg, &words, &mut rng));
        assoc_ok &= alg.mul(&alg.mul(&x, &y), &z) == alg.mul(&x, &alg.mul(&y, &z));
    }
    b.push("assoc", "associativity on random elements", Ok((assoc_ok, "32 triples".into())));

    let rep = PathRep::new(g.clone(), ring.clone(), bound.clone());
    b.push(
        "rep",
        "path representation",
        rep_check(&rep, bound).map(|r| {
            (
                r.pass,
                format!(
                    "{} pairs, {} discrepancies, {} nondegeneracy failures, {} words independent={}",
                    r.homomorphism_pairs,
                    r.homomorphism_failures.len(),
                    r.nondegeneracy_failures.len(),
                    r.independent_words,
                    r.independent
                ),
            )
        }),
    );

    let r = f_lemma_report(&alg, bound);
    b.push("flemma", "F-lemma identities", Ok((r.pass(), format!("{} identities", r.checks))));

    if g.has_no_sources() {
        b.push("tgraph", "T(Lambda) structure", tgraph_structure(g));
        b.push("iso", "isomorphism suite", isomorphism(g, ring.clone(), bound));
        b.push(
            "unique",
            "uniqueness harness",
            combine(vec![
                uniqueness_harness(&PathRep::new(g.clone(), ring.clone(), bound.clone()), bound).map(|r| (r.pass, format!("path-rep: {} words", r.independent_words))),
                uniqueness_harness(&SteinbergAlgebra::new(g.clone(), ring.clone()), bound).map(|r| (r.pass, format!("phi_Q: {} words", r.independent_words))),
            ]),
        );
        b.push("steinberg", "phi_Q multiplicative", Ok(steinberg_multiplicative(g, bound, &mut rng)));
        let tl = TLambda::new(g)?.graph().clone();
        b.push("effective", "effectiveness probe", combine(vec![effectiveness(g, bound), effectiveness(&tl, bound)]));
    }
    let name = ring.name();
    Ok(b.finish(name, bound, seed, start))
}
