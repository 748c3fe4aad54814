//! The bundled example graphs.

use crate::degree::Degree;
use crate::error::Result;
use crate::graph::{omega, KGraph};

pub const LAMBDA1: &str = include_str!("../examples/lambda1.kg");
pub const LAMBDA2: &str = include_str!("../examples/lambda2.kg");
pub const OMEGA_1_2: &str = include_str!("../examples/omega-1-2.kg");

pub fn lambda1() -> KGraph {
    KGraph::parse(LAMBDA1).expect("bundled graph")
}

pub fn lambda2() -> KGraph {
    KGraph::parse(LAMBDA2).expect("bundled graph")
}

pub fn omega_1_2() -> KGraph {
    KGraph::parse(OMEGA_1_2).expect("bundled graph")
}

/// Reads a graph from a file, or builds `Ω_{k,n}` from `omega:K:n1,n2,...`.
pub fn load(spec: &str) -> Result<KGraph> {
    if let Some(rest) = spec.strip_prefix("omega:") {
        let (k, n) = rest.split_once(':').ok_or_else(|| {
            crate::Error::InvalidArgument(format!("expected omega:K:n1,...,nK, got `{spec}`"))
        })?;
        let k: usize = k.parse().map_err(|_| crate::Error::InvalidArgument(format!("bad rank `{k}`")))?;
        let n = Degree::parse(n)?;
        if n.rank() != k {
            return Err(crate::Error::InvalidArgument(format!("`{spec}`: expected {k} coordinates")));
        }
        return KGraph::from_presentation(&omega(k, &n));
    }
    KGraph::parse(&std::fs::read_to_string(spec)?)
}
