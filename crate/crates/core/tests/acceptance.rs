//! Acceptance criteria over Λ₁, Λ₂, Ω_{2,(1,2)} and TΛ(Λ₂): ring ℤ with
//! spot checks over ℚ and ℤ/4, bound (2,2). One line per criterion.

use kgraph_cohn::suite::{acceptance, seed_from_env};
use kgraph_cohn::Degree;

#[test]
fn acceptance_criteria() {
    let report = acceptance(&Degree::splat(2, 2), seed_from_env()).expect("suite runs");
    for line in report.lines() {
        println!("{line}");
    }
    println!("total {:.1}s", report.seconds);
    let failed: Vec<_> = report.criteria.iter().filter(|c| !c.pass).map(|c| c.id.clone()).collect();
    assert_eq!(report.criteria.len(), 9);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
