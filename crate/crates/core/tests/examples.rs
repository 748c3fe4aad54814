//! Worked examples, each checked against an oracle that does not go through
//! the symbolic product: the action of an element on finite paths.

use std::collections::BTreeMap;

use kgraph_cohn::algebra::{CohnAlgebra, Element};
use kgraph_cohn::corpus::{lambda1, lambda2, omega_1_2};
use kgraph_cohn::kp::KpBridge;
use kgraph_cohn::pathrep::PathRep;
use kgraph_cohn::ring::Integers;
use kgraph_cohn::steinberg::{SteinbergAlgebra, Triple};
use kgraph_cohn::{Degree, KGraph, Path};
use num_bigint::BigInt;

/// Checks `a` acts on every window path `x` as `x ↦ expected(x)`.
fn acts_as(g: &KGraph, a: &Element<Integers>, expected: impl Fn(&Path) -> Option<Path>) {
    let rep = PathRep::new(g.clone(), Integers, Degree::splat(g.rank(), 2));
    let op = rep.represent(a);
    for x in rep.window(&op.margin(g.rank())).unwrap() {
        let want: BTreeMap<Path, BigInt> = expected(&x).into_iter().map(|p| (p, BigInt::from(1))).collect();
        assert_eq!(rep.apply(&op, &x), want, "at {}", g.display(&x));
    }
}

#[test]
fn f_projection_kills_exactly_the_vertex() {
    let g = lambda2();
    let alg = CohnAlgebra::new(g.clone(), Integers);
    let v = g.vertex_id("v").unwrap();
    let f = alg.f_idempotent(v);
    acts_as(&g, &f, |x| (!x.is_vertex()).then(|| x.clone()));
    // t_e t_e* + t_f t_f* - t_ef t_ef*
    assert_eq!(f.len(), 3);
}

#[test]
fn f_on_omega_matches_action() {
    let g = omega_1_2();
    let alg = CohnAlgebra::new(g.clone(), Integers);
    for v in g.vertices() {
        let f = alg.f_idempotent(v);
        acts_as(&g, &f, |x| (x.range() == v && !x.is_vertex()).then(|| x.clone()));
    }
    assert!(alg.f_idempotent(g.vertex_id("v1_2").unwrap()).is_zero());
}

#[test]
fn s_images_of_vertices() {
    let g = lambda2();
    let b = KpBridge::new(&g, Integers).unwrap();
    let tg = b.tlambda().graph();
    let av = tg.parse_path("a:v").unwrap();
    let bv = tg.parse_path("b:v").unwrap();
    acts_as(&g, &b.s_image(&av), |x| (!x.is_vertex()).then(|| x.clone()));
    acts_as(&g, &b.s_image(&bv), |x| x.is_vertex().then(|| x.clone()));
    assert_eq!(b.s_star_image(&bv), b.s_image(&bv));
}

#[test]
fn s_images_of_edges() {
    let g = lambda2();
    let b = KpBridge::new(&g, Integers).unwrap();
    let tg = b.tlambda().graph();
    let e = g.parse_path("e").unwrap();
    // S_{α(e)} = t_e F_v sends nonvertex x to ex and kills v.
    acts_as(&g, &b.s_image(&tg.parse_path("a:e").unwrap()), |x| {
        (!x.is_vertex()).then(|| g.compose(&e, x).unwrap())
    });
    // S_{β(e)} = t_e (t_v - F_v) sends v to e and kills the rest.
    acts_as(&g, &b.s_image(&tg.parse_path("b:e").unwrap()), |x| x.is_vertex().then(|| e.clone()));
    // S_{β(e)*} sends e to v and kills the rest.
    acts_as(&g, &b.s_star_image(&tg.parse_path("b:e").unwrap()), |x| (*x == e).then(|| g.parse_path("v").unwrap()));
}

#[test]
fn ghost_products() {
    let alg = CohnAlgebra::new(lambda1(), Integers);
    let g = alg.graph().clone();
    let (e, f) = (g.parse_path("e").unwrap(), g.parse_path("f").unwrap());
    assert!(alg.mul(&alg.gen_star(&e), &alg.gen(&f)).is_zero());
    assert_eq!(alg.mul(&alg.gen_star(&e), &alg.gen(&e)), alg.gen(&g.parse_path("w").unwrap()));

    let g = lambda2();
    let alg = CohnAlgebra::new(g.clone(), Integers);
    let (e, f) = (g.parse_path("e").unwrap(), g.parse_path("f").unwrap());
    let fe = alg.mul(&alg.gen_star(&e), &alg.gen(&f));
    // t_e* t_f sends ex' to fx' when x' = f x''.
    acts_as(&g, &fe, |x| {
        let head = g.prefix(x, e.degree()).ok()?;
        (head == e).then(|| g.compose(&f, &g.shift(x, e.degree()).unwrap()).unwrap())
    });
}

#[test]
fn effectiveness_witness_is_a_member() {
    let g = lambda2();
    let s = SteinbergAlgebra::new(g.clone(), Integers);
    let edges: Vec<Path> = ["e", "f"].iter().map(|n| g.parse_path(n).unwrap()).collect();
    for l in g.all_paths_up_to(&Degree::splat(2, 1)) {
        for m in g.all_paths_up_to(&Degree::splat(2, 1)) {
            let b = s.bisection(&l, &m, &edges).unwrap();
            let t = Triple { x: l.clone(), m: l.degree().grade_minus(m.degree()), y: m.clone() };
            assert!(s.contains(&b, &t));
        }
    }
}
