//! The grid k-graphs `Ω_{k,n}`: objects `p <= n`, one morphism `p -> q`
//! for each `p <= q`, of degree `q - p`.
//!
//! Names: the vertex `p = (2,0)` is `v2_0`; the color-`i` edge with range
//! `p` (and source `p + e_i`) is `c{i}_2_0`.

use super::{EdgeDecl, Presentation, SquareDecl};
use crate::degree::Degree;

pub fn vertex_name(p: &Degree) -> String {
    let parts: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
    format!("v{}", parts.join("_"))
}

pub fn edge_name(p: &Degree, color: usize) -> String {
    let parts: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
    format!("c{}_{}", color + 1, parts.join("_"))
}

pub fn omega(k: usize, n: &Degree) -> Presentation {
    assert_eq!(n.rank(), k, "degree rank must match k");
    let points = n.below();
    let mut p = Presentation { rank: k, ..Default::default() };
    p.vertices = points.iter().map(vertex_name).collect();
    for q in &points {
        for i in 0..k {
            let t = q.add(&Degree::unit(k, i));
            if t.le(n) {
                p.edges.push(EdgeDecl {
                    name: edge_name(q, i),
                    range: vertex_name(q),
                    source: vertex_name(&t),
                    color: i + 1,
                });
            }
        }
    }
    for q in &points {
        for i in 0..k {
            for j in i + 1..k {
                let ei = Degree::unit(k, i);
                let ej = Degree::unit(k, j);
                if !q.add(&ei).add(&ej).le(n) {
                    continue;
                }
                p.squares.push(SquareDecl {
                    left: (edge_name(q, i), edge_name(&q.add(&ei), j)),
                    right: (edge_name(q, j), edge_name(&q.add(&ej), i)),
                });
            }
        }
    }
    p
}
