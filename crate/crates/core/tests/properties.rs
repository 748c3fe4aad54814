use kgraph_cohn::algebra::{CohnAlgebra, Element, NormalWord};
use kgraph_cohn::corpus::{lambda2, omega_1_2};
use kgraph_cohn::kp::KpBridge;
use kgraph_cohn::pathrep::{OracleVerdict, PathRep};
use kgraph_cohn::ring::Integers;
use kgraph_cohn::steinberg::{Bisection, SteinbergAlgebra, SteinbergElement};
use kgraph_cohn::{Degree, Path};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::Index;

fn words(g: &kgraph_cohn::KGraph, b: u32) -> Vec<NormalWord> {
    CohnAlgebra::new(g.clone(), Integers).spanning_words(&Degree::splat(g.rank(), b))
}

fn element(alg: &CohnAlgebra<Integers>, ws: &[NormalWord], picks: &[(Index, i64)]) -> Element<Integers> {
    picks.iter().fold(Element::zero(), |acc, (i, c)| {
        alg.add(&acc, &alg.scale(&BigInt::from(*c), &alg.word_element(i.get(ws))))
    })
}

fn picks() -> impl Strategy<Value = Vec<(Index, i64)>> {
    prop::collection::vec((any::<Index>(), -2i64..=2), 1..4)
}

fn steinberg_element(s: &SteinbergAlgebra<Integers>, ws: &[NormalWord], p: &[(Index, i64)]) -> SteinbergElement<Integers> {
    let alg = CohnAlgebra::new(s.graph().clone(), Integers);
    s.phi_q(&element(&alg, ws, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pieces_are_a_normal_form(p in picks()) {
        let s = SteinbergAlgebra::new(lambda2(), Integers);
        let x = steinberg_element(&s, &words(s.graph(), 1), &p);
        let pieces = s.pieces(&x);
        prop_assert_eq!(s.from_pieces(&pieces), x.clone());
        prop_assert_eq!(s.pieces(&s.from_pieces(&pieces)), pieces.clone());
        let probe = Degree::splat(2, 1);
        for (i, (a, _)) in pieces.iter().enumerate() {
            for t in s.members(a, &probe) {
                prop_assert!(pieces.iter().enumerate().all(|(j, (b, _))| i == j || !s.contains(b, &t)));
            }
        }
    }

    #[test]
    fn inverse_reverses_products(p in picks(), q in picks()) {
        let s = SteinbergAlgebra::new(lambda2(), Integers);
        let ws = words(s.graph(), 1);
        let (x, y) = (steinberg_element(&s, &ws, &p), steinberg_element(&s, &ws, &q));
        prop_assert_eq!(s.star(&s.convolve(&x, &y)), s.convolve(&s.star(&y), &s.star(&x)));
    }

    #[test]
    fn convolution_is_pointwise(p in picks(), q in picks()) {
        let s = SteinbergAlgebra::new(omega_1_2(), Integers);
        let ws = words(s.graph(), 1);
        let (x, y) = (steinberg_element(&s, &ws, &p), steinberg_element(&s, &ws, &q));
        let xy = s.convolve(&x, &y);
        for w in &ws {
            let b = Bisection { lambda: w.lambda.clone(), mu: w.mu.clone(), minus: Vec::new() };
            for t in s.members(&b, &Degree::splat(2, 1)) {
                prop_assert_eq!(s.convolution_at(&x, &y, &t), s.evaluate(&xy, &t));
            }
        }
    }

    #[test]
    fn union_indicator_is_membership(sets in prop::collection::vec((any::<Index>(), any::<bool>()), 1..4)) {
        let g = lambda2();
        let s = SteinbergAlgebra::new(g.clone(), Integers);
        let ws = words(&g, 1);
        let e: Vec<Path> = g.edges_with_range(g.vertex_id("v").unwrap()).into_iter().map(|e| g.edge_path(e)).collect();
        let bis: Vec<Bisection> = sets
            .iter()
            .map(|(i, cut)| {
                let w = i.get(&ws);
                let minus = if *cut { vec![e[0].clone()] } else { Vec::new() };
                s.bisection(&w.lambda, &w.mu, &minus).unwrap()
            })
            .collect();
        let u = s.union_to_span(&bis);
        for w in &ws {
            let b = Bisection { lambda: w.lambda.clone(), mu: w.mu.clone(), minus: Vec::new() };
            for t in s.members(&b, &Degree::splat(2, 1)) {
                let inside = bis.iter().any(|b| s.contains(b, &t));
                prop_assert_eq!(s.evaluate(&u, &t), BigInt::from(inside as i64));
            }
        }
    }

    #[test]
    fn representation_is_multiplicative_on_omega(p in picks(), q in picks()) {
        let g = omega_1_2();
        let alg = CohnAlgebra::new(g.clone(), Integers);
        let rep = PathRep::new(g.clone(), Integers, Degree::splat(2, 2));
        let ws = words(&g, 1);
        let (x, y) = (element(&alg, &ws, &p), element(&alg, &ws, &q));
        let lhs = rep.represent(&alg.mul(&x, &y));
        let rhs = rep.compose(&rep.represent(&x), &rep.represent(&y));
        let consistent = matches!(rep.compare(&lhs, &rhs).unwrap(), OracleVerdict::Consistent { .. });
        prop_assert!(consistent);
    }

    #[test]
    fn pi_respects_grading(i in any::<Index>(), c in 1i64..3) {
        let b = KpBridge::new(&lambda2(), Integers).unwrap();
        let tg = b.tlambda().graph().clone();
        let tw = CohnAlgebra::new(tg, Integers).spanning_words(&Degree::splat(2, 1));
        let w = i.get(&tw);
        let img = b.pi(&b.kp_word(&w.lambda, &w.mu).unwrap()).unwrap();
        let alg = b.algebra();
        prop_assert!(alg.degree_support(&alg.scale(&BigInt::from(c), &img)).iter().all(|n| *n == w.grade()));
    }
}

fn small_bisection(s: &SteinbergAlgebra<Integers>, ws: &[NormalWord], i: &Index, cut: bool) -> Bisection {
    let g = s.graph();
    let w = i.get(ws);
    let minus: Vec<Path> = if cut {
        g.edges_with_range(w.lambda.source()).into_iter().take(1).map(|e| g.edge_path(e)).collect()
    } else {
        Vec::new()
    };
    s.bisection(&w.lambda, &w.mu, &minus).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// A triple lies in UV iff it is `bc` with `b ∈ U`, `c ∈ V`.
    #[test]
    fn product_membership_is_factorisation(i in any::<Index>(), j in any::<Index>(), cu in any::<bool>(), cv in any::<bool>()) {
        let s = SteinbergAlgebra::new(lambda2(), Integers);
        let ws = words(s.graph(), 1);
        let (u, v) = (small_bisection(&s, &ws, &i, cu), small_bisection(&s, &ws, &j, cv));
        let uv = s.bisection_product(&u, &v);
        let big = Degree::splat(2, 4);
        let bs = s.members(&u, &big);
        for w in &ws {
            let cyl = Bisection { lambda: w.lambda.clone(), mu: w.mu.clone(), minus: Vec::new() };
            for a in s.members(&cyl, &Degree::splat(2, 1)) {
                let factors = bs.iter().any(|b| {
                    b.x == a.x && {
                        let rest = kgraph_cohn::steinberg::Triple { x: b.y.clone(), m: a.m.add(&b.m.neg()), y: a.y.clone() };
                        s.contains(&v, &rest)
                    }
                });
                prop_assert_eq!(s.evaluate(&uv, &a), BigInt::from(factors as i64));
            }
        }
    }
}
