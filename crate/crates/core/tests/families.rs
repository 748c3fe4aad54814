//! Families that are not faithful, or not families at all.

use std::collections::BTreeMap;

use kgraph_cohn::algebra::{CohnAlgebra, Element};
use kgraph_cohn::corpus::{lambda2, omega_1_2};
use kgraph_cohn::family::{verify_cohn_axioms, CohnFamily, Coordinates, UniversalFamily};
use kgraph_cohn::kp::{uniqueness_harness, verify_kp_family};
use kgraph_cohn::pathrep::PathRep;
use kgraph_cohn::ring::{CoefficientRing, Integers};
use kgraph_cohn::{Degree, Error, KGraph, Path, Result};
use num_bigint::BigInt;

/// Laurent polynomials in one variable per color: `T_λ = x^{d(λ)}`,
/// `T_{μ*} = x^{-d(μ)}`. Only meaningful on single-vertex graphs.
struct Laurent {
    graph: KGraph,
}

type Poly = BTreeMap<Vec<i64>, BigInt>;

impl Laurent {
    fn monomial(&self, exp: Vec<i64>) -> Poly {
        BTreeMap::from([(exp, BigInt::from(1))])
    }
}

impl CohnFamily for Laurent {
    type Ring = Integers;
    type Value = Poly;

    fn graph(&self) -> &KGraph {
        &self.graph
    }
    fn ring(&self) -> &Integers {
        &Integers
    }
    fn t(&self, lambda: &Path) -> Poly {
        self.monomial(lambda.degree().coords().iter().map(|c| *c as i64).collect())
    }
    fn t_star(&self, mu: &Path) -> Poly {
        self.monomial(mu.degree().coords().iter().map(|c| -(*c as i64)).collect())
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *out.entry(e).or_default() += ca * cb;
            }
        }
        out.retain(|_, c| *c != BigInt::from(0));
        out
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = a.clone();
        for (e, c) in b {
            *out.entry(e.clone()).or_default() += c;
        }
        out.retain(|_, c| *c != BigInt::from(0));
        out
    }
    fn scale(&self, r: &BigInt, a: &Poly) -> Poly {
        let mut out: Poly = a.iter().map(|(e, c)| (e.clone(), r * c)).collect();
        out.retain(|_, c| *c != BigInt::from(0));
        out
    }
    fn zero(&self) -> Poly {
        Poly::new()
    }
    fn equal(&self, a: &Poly, b: &Poly) -> bool {
        a == b
    }
}

impl Coordinates for Laurent {
    fn coordinates(&self, values: &[Poly]) -> Result<Vec<Vec<(usize, BigInt)>>> {
        let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        Ok(values
            .iter()
            .map(|p| {
                p.iter()
                    .map(|(e, c)| {
                        let n = index.len();
                        (*index.entry(e.clone()).or_insert(n), c.clone())
                    })
                    .collect()
            })
            .collect())
    }
}

#[test]
fn laurent_family_is_kumjian_pask_and_fails_the_gap_hypothesis() {
    let fam = Laurent { graph: lambda2() };
    let bound = Degree::splat(2, 2);
    assert!(verify_cohn_axioms(&fam, &bound).pass());
    assert!(verify_kp_family(&fam, &bound).unwrap().pass());
    match uniqueness_harness(&fam, &bound) {
        Err(Error::HypothesisFailed { vertex, r, which }) => {
            assert_eq!(vertex, "v");
            assert_eq!(r, "1");
            assert!(which.contains("prod"), "{which}");
        }
        other => panic!("expected HYPOTHESIS_FAILED, got {other:?}"),
    }
}

/// The universal family with the images of two edges exchanged, while
/// longer paths keep their own generators.
struct Swapped {
    inner: UniversalFamily<Integers>,
    a: Path,
    b: Path,
}

impl Swapped {
    fn pick<'p>(&'p self, p: &'p Path) -> &'p Path {
        if *p == self.a {
            &self.b
        } else if *p == self.b {
            &self.a
        } else {
            p
        }
    }
}

impl CohnFamily for Swapped {
    type Ring = Integers;
    type Value = Element<Integers>;

    fn graph(&self) -> &KGraph {
        self.inner.graph()
    }
    fn ring(&self) -> &Integers {
        &Integers
    }
    fn t(&self, lambda: &Path) -> Element<Integers> {
        self.inner.t(self.pick(lambda))
    }
    fn t_star(&self, mu: &Path) -> Element<Integers> {
        self.inner.t_star(self.pick(mu))
    }
    fn mul(&self, a: &Element<Integers>, b: &Element<Integers>) -> Element<Integers> {
        self.inner.mul(a, b)
    }
    fn add(&self, a: &Element<Integers>, b: &Element<Integers>) -> Element<Integers> {
        self.inner.add(a, b)
    }
    fn scale(&self, r: &BigInt, a: &Element<Integers>) -> Element<Integers> {
        self.inner.scale(r, a)
    }
    fn zero(&self) -> Element<Integers> {
        Element::zero()
    }
    fn equal(&self, a: &Element<Integers>, b: &Element<Integers>) -> bool {
        a == b
    }
}

fn swapped(g: KGraph, a: &str, b: &str) -> Swapped {
    let (a, b) = (g.parse_path(a).unwrap(), g.parse_path(b).unwrap());
    Swapped { inner: UniversalFamily::new(CohnAlgebra::new(g, Integers)), a, b }
}

#[test]
fn swapping_edge_images_breaks_cp2() {
    let fam = swapped(lambda2(), "e", "f");
    let r = verify_cohn_axioms(&fam, &Degree::splat(2, 2));
    assert!(r.failures.iter().any(|f| f.relation == "CP2"));
    assert!(r.failures.iter().any(|f| f.detail == "T_e T_e != T_e.e"), "{:?}", r.failures);

    let fam = swapped(omega_1_2(), "c1_0_0", "c2_0_0");
    let r = verify_cohn_axioms(&fam, &Degree::splat(2, 1));
    assert!(r.failures.iter().any(|f| f.relation == "CP2"));
}

#[test]
fn harness_accepts_faithful_families() {
    let g = lambda2();
    let bound = Degree::splat(2, 2);
    let r = uniqueness_harness(&PathRep::new(g.clone(), Integers, bound.clone()), &bound).unwrap();
    assert!(r.pass);
    assert_eq!(r.independent_words, 81);
    // The universal family is trivially independent in normal-word coordinates.
    let r = uniqueness_harness(&UniversalFamily::new(CohnAlgebra::new(g, Integers)), &bound).unwrap();
    assert!(r.pass);
    assert_eq!(Integers.name(), "Z");
}
