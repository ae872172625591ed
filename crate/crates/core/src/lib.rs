//! Shifted-antimagic edge labelings.
//!
//! A labeling of a graph with `m` edges is `k`-shifted-antimagic when it uses
//! each of `k+1, ..., k+m` exactly once and all vertex sums differ. The crate
//! verifies such labelings, builds them for forests, odd-degree graphs and
//! several named families, and decides the full set of feasible shifts of
//! small graphs by exhaustive search.

pub mod certificate;
pub mod constructors;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod search;
pub mod spectrum;

pub use certificate::{Certificate, CertificateCheck, CertificateError};
pub use constructors::{ConstructError, Construction};
pub use families::Family;
pub use graph::{EdgeId, Graph, GraphError, LevelPartition, ParseError, Subgraph, Vertex};
pub use labeling::{
    is_sdds, is_strongly_antimagic, mirror_base, sdds_shift_threshold, verify_shifted,
    vertex_sums, EdgeLabeling, LabelError, Rejection, Verdict, VertexSums,
};
pub use search::{SearchError, SearchMode, DEFAULT_BUDGET};
pub use spectrum::{
    closed_form_spectrum, decide, finite_window, spectrum, spectrum_with, Decision, ExcludedSet,
    SpectrumError, SpectrumOptions, SpectrumReport, Status, Window,
};
