//! Exhaustive sets, `I(E)`, `L(E)` and the aperiodicity probe.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::graph::{KGraph, VertexId};
use crate::path::Path;

/// States explored by the finite-state certificate before giving up.
pub const CERTIFICATE_BUDGET: usize = 200_000;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExhaustiveVerdict {
    /// Decided exactly from paths of degree at most `bound` (the join of the
    /// degrees in `E`) together with the extension structure beyond it.
    Exhaustive { bound: Degree },
    /// `Λ^min(witness, μ) = ∅` for every `μ ∈ E`.
    NotExhaustive { witness: Path },
    UnknownUpToBound { bound: Degree },
}

impl ExhaustiveVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            ExhaustiveVerdict::Exhaustive { .. } => "EXHAUSTIVE",
            ExhaustiveVerdict::NotExhaustive { .. } => "NOT_EXHAUSTIVE",
            ExhaustiveVerdict::UnknownUpToBound { .. } => "UNKNOWN_UP_TO_BOUND",
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self, ExhaustiveVerdict::Exhaustive { .. })
    }

    pub fn witness(&self) -> Option<&Path> {
        match self {
            ExhaustiveVerdict::NotExhaustive { witness } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct AperiodicityReport {
    /// `(λ, μ, η)` with `MCE(λη, μη) = ∅`.
    pub witnessed: Vec<(Path, Path, Path)>,
    /// Pairs for which no `η` within the bound was found.
    pub unresolved: Vec<(Path, Path)>,
    pub bound: Option<Degree>,
}

#[derive(Serialize)]
pub struct AperiodicityJson {
    pub bound: String,
    pub witnessed: Vec<[String; 3]>,
    pub unresolved: Vec<[String; 2]>,
}

impl AperiodicityReport {
    pub fn is_unresolved(&self, lambda: &Path, mu: &Path) -> bool {
        self.unresolved.iter().any(|(a, b)| (a == lambda && b == mu) || (a == mu && b == lambda))
    }

    pub fn to_json(&self, g: &KGraph) -> AperiodicityJson {
        let s = |p: &Path| g.display(p).to_string();
        AperiodicityJson {
            bound: self.bound.as_ref().map(|b| b.to_string()).unwrap_or_default(),
            witnessed: self.witnessed.iter().map(|(a, b, c)| [s(a), s(b), s(c)]).collect(),
            unresolved: self.unresolved.iter().map(|(a, b)| [s(a), s(b)]).collect(),
        }
    }
}

impl KGraph {
    /// `Λ^min(λ, μ) ≠ ∅`.
    pub fn compatible(&self, lambda: &Path, mu: &Path) -> bool {
        !self.mce(lambda, mu).is_empty()
    }

    /// True when `λ` is compatible with no member of `set`.
    pub fn refutes(&self, lambda: &Path, set: &[Path]) -> bool {
        set.iter().all(|mu| !self.compatible(lambda, mu))
    }

    /// Decides whether `set ⊆ vΛ` is exhaustive.
    ///
    /// Without sources the check at `N = ⋁ d(μ)` is exact: any `λ` extends to
    /// some `λρ` of degree `d(λ) ∨ N`; the segment `(λρ)(0, N)` starts with
    /// some `μ ∈ E`, so `λρ` is a common extension of `λ` and `μ`.
    ///
    /// With sources, paths up to `bound` (default `2N`) are searched for a
    /// witness first, then [`Self::exhaustive_certificate`] settles the rest.
    pub fn is_exhaustive(&self, v: VertexId, set: &[Path], bound: Option<&Degree>) -> Result<ExhaustiveVerdict> {
        if let Some(bad) = set.iter().find(|mu| mu.range() != v) {
            return Err(Error::NotAtVertex(format!(
                "{} (offending path {})",
                self.vertex_name(v),
                self.display(bad)
            )));
        }
        let n = set.iter().fold(Degree::zero(self.rank()), |acc, mu| acc.join(mu.degree()));

        if self.has_no_sources() {
            for lambda in self.paths(v, &n) {
                if !set.iter().any(|mu| self.extends(&lambda, mu)) {
                    return Ok(ExhaustiveVerdict::NotExhaustive { witness: lambda });
                }
            }
            return Ok(ExhaustiveVerdict::Exhaustive { bound: n });
        }

        let bound = bound.cloned().unwrap_or_else(|| n.scale(2));
        if bound.rank() != self.rank() {
            return Err(Error::InvalidArgument(format!("bound {bound} has the wrong rank")));
        }
        for lambda in self.paths_up_to(v, &bound) {
            if self.refutes(&lambda, set) {
                return Ok(ExhaustiveVerdict::NotExhaustive { witness: lambda });
            }
        }
        match self.exhaustive_certificate(v, set, CERTIFICATE_BUDGET) {
            Some(None) => Ok(ExhaustiveVerdict::Exhaustive { bound: n }),
            Some(Some(witness)) => Ok(ExhaustiveVerdict::NotExhaustive { witness }),
            None => Ok(ExhaustiveVerdict::UnknownUpToBound { bound }),
        }
    }

    /// Exact decision for graphs with sources. Returns `Some(None)` when
    /// exhaustive, `Some(Some(witness))` when not, `None` over budget.
    ///
    /// Every `λ ∈ vΛ` splits as `λ0 ρ` with `λ0 = λ(0, d(λ) ∧ N)` and `ρ`
    /// using only the colors `S` in which `d(λ0)` reaches `N`. For
    /// `μ ∈ E` put `q = (d(μ) - d(λ0))⁺`; then `λ` is compatible with `μ`
    /// iff `μ` is an initial segment of `λ0 x` for some `x` in the image of
    /// `g_q : s(ρ)Λ^q -> s(λ0)Λ^q, y ↦ (ρy)(0, q)`. Appending an edge `e`
    /// to `ρ` updates `g_q` to `ζ ↦ g_q((eζ)(0, q))`, so the pairs
    /// `(s(ρ), (g_q)_q)` form a finite automaton which is searched breadth
    /// first for a state refuting every `μ`.
    pub fn exhaustive_certificate(&self, v: VertexId, set: &[Path], budget: usize) -> Option<Option<Path>> {
        let n = set.iter().fold(Degree::zero(self.rank()), |acc, mu| acc.join(mu.degree()));
        let mut explored = 0usize;
        for lambda0 in self.paths_up_to(v, &n) {
            let p = lambda0.degree().clone();
            let colors: Vec<usize> = (0..self.rank()).filter(|&i| p.get(i) == n.get(i)).collect();
            let qs: Vec<Degree> = set
                .iter()
                .map(|mu| mu.degree().saturating_sub(&p))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let q_index: Vec<usize> =
                set.iter().map(|mu| qs.iter().position(|q| *q == mu.degree().saturating_sub(&p)).unwrap()).collect();

            type Maps = Vec<BTreeMap<Path, Path>>;
            let refuted = |maps: &Maps| {
                set.iter().zip(&q_index).all(|(mu, &qi)| {
                    !maps[qi].values().any(|x| {
                        let full = self.compose(&lambda0, x).unwrap();
                        self.extends(&full, mu)
                    })
                })
            };

            let start = lambda0.source();
            let init: Maps = qs
                .iter()
                .map(|q| self.paths(start, q).into_iter().map(|y| (y.clone(), y)).collect())
                .collect();
            let mut seen: HashSet<(VertexId, Maps)> = HashSet::new();
            let mut queue = VecDeque::new();
            seen.insert((start, init.clone()));
            queue.push_back((start, init, self.vertex_path(start)));
            while let Some((w, maps, rho)) = queue.pop_front() {
                explored += 1;
                if explored > budget {
                    return None;
                }
                if refuted(&maps) {
                    return Some(Some(self.compose(&lambda0, &rho).unwrap()));
                }
                for &c in &colors {
                    for &e in self.edges_at(w, c) {
                        let edge = self.edge_path(e);
                        let w2 = edge.source();
                        let next: Maps = qs
                            .iter()
                            .zip(&maps)
                            .map(|(q, g)| {
                                self.paths(w2, q)
                                    .into_iter()
                                    .map(|zeta| {
                                        let moved = self.prefix(&self.compose(&edge, &zeta).unwrap(), q).unwrap();
                                        let image = g[&moved].clone();
                                        (zeta, image)
                                    })
                                    .collect()
                            })
                            .collect();
                        if seen.insert((w2, next.clone())) {
                            let rho2 = self.compose(&rho, &edge).unwrap();
                            queue.push_back((w2, next, rho2));
                        }
                    }
                }
            }
        }
        Some(None)
    }

    /// `I(E)`: the initial edges `λ(0, e_i)` of members of `E`.
    pub fn i_of(&self, set: &[Path]) -> BTreeSet<Path> {
        let mut out = BTreeSet::new();
        for lambda in set {
            for i in 0..self.rank() {
                if lambda.degree().get(i) > 0 {
                    out.insert(self.prefix(lambda, &Degree::unit(self.rank(), i)).unwrap());
                }
            }
        }
        out
    }

    /// `L(E) = Σ_i max_{λ ∈ E} d(λ)_i`.
    pub fn l_of(&self, set: &[Path]) -> u64 {
        set.iter().fold(Degree::zero(self.rank()), |acc, l| acc.join(l.degree())).total()
    }

    /// For distinct `λ, μ` with a common source and degrees at most `bound`,
    /// looks for `η` with `d(η) <= bound` and `MCE(λη, μη) = ∅`.
    pub fn aperiodicity_probe(&self, bound: &Degree) -> AperiodicityReport {
        let all = self.all_paths_up_to(bound);
        let mut by_source: BTreeMap<VertexId, Vec<&Path>> = BTreeMap::new();
        for p in &all {
            by_source.entry(p.source()).or_default().push(p);
        }
        let mut report = AperiodicityReport { bound: Some(bound.clone()), ..Default::default() };
        for (src, group) in by_source {
            let etas = self.paths_up_to(src, bound);
            for (i, lambda) in group.iter().enumerate() {
                for mu in &group[i + 1..] {
                    let found = etas.iter().find(|eta| {
                        let a = self.compose(lambda, eta).unwrap();
                        let b = self.compose(mu, eta).unwrap();
                        self.mce(&a, &b).is_empty()
                    });
                    match found {
                        Some(eta) => report.witnessed.push(((*lambda).clone(), (*mu).clone(), eta.clone())),
                        None => report.unresolved.push(((*lambda).clone(), (*mu).clone())),
                    }
                }
            }
        }
        report
    }
}
