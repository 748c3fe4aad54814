pub mod degree;
pub mod error;
pub mod graph;
pub mod path;
pub mod combinatorics;
pub mod tgraph;
pub mod ring;
pub mod linalg;
pub mod algebra;
pub mod family;
pub mod pathrep;
pub mod steinberg;
pub mod kp;
pub mod json;
pub mod corpus;
pub mod suite;
pub mod cli;

pub use degree::{Degree, Grade};
pub use error::{Error, Result};
pub use graph::{EdgeId, KGraph, Presentation, VertexId};
pub use path::Path;
