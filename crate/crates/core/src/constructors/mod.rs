//! Explicit labelings: SDDS labelings for forests and odd-degree graphs,
//! and shifted-antimagic labelings for paths, stars, double stars, `P_5'`,
//! `cP_3`, `2P_4` and `2S_3` at every feasible shift.
//!
//! Constructors for a named family expect the vertex layout produced by the
//! matching generator in [`crate::families`].

mod disjoint;
mod forest;
mod odd;
mod path;
mod trails;
mod trees;

use thiserror::Error;

use crate::families::Family;
use crate::graph::{Graph, GraphError, Vertex};
use crate::labeling::{EdgeLabeling, LabelError};

pub use disjoint::{construct_2p4, construct_2s3, construct_cp3, p3_threshold};
pub use forest::construct_forest_sdds;
pub use odd::{construct_odd_degree, construct_odd_degree_traced, LevelTrace};
pub use path::{construct_path, construct_path_shifted, construct_path_strong};
pub use trails::{find_sigma_and_trails, label_trails, Trail, TrailDecomposition, TrailKind};
pub use trees::{construct_double_star, construct_p5prime, construct_star};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("graph contains a cycle")]
    NotForest,
    #[error("graph has a component isomorphic to K2")]
    HasK2Component,
    #[error("graph has {0} isolated vertices; at most one can have a distinct sum")]
    IsolatedVertices(usize),
    #[error("vertex {0} has even degree")]
    EvenDegreeVertex(Vertex),
    #[error("no admissible σ-injection at level {level}")]
    NoValidSigma { level: usize },
    #[error("path on {0} vertices is too short")]
    PathTooShort(usize),
    #[error("a star needs at least two leaves, got {0}")]
    TooFewLeaves(usize),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("shift {k} is below the constructive threshold {min}")]
    KBelowThreshold { k: i64, min: i64 },
    #[error("label range holds {found} labels but the trails have {expected} edges")]
    RangeSizeMismatch { expected: usize, found: usize },
    #[error("W- or M-type trail with {0} edges; expected an even count")]
    OddWMTrail(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Label(#[from] LabelError),
}

/// Result of a constructor that decides feasibility in closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Labeling(EdgeLabeling),
    Infeasible,
}

impl Construction {
    pub fn labeling(&self) -> Option<&EdgeLabeling> {
        match self {
            Construction::Labeling(f) => Some(f),
            Construction::Infeasible => None,
        }
    }

    pub fn into_labeling(self) -> Option<EdgeLabeling> {
        match self {
            Construction::Labeling(f) => Some(f),
            Construction::Infeasible => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Construction::Infeasible)
    }
}

/// Labeling of `family.graph()` at shift `k`, or `Infeasible` where the
/// family's closed form excludes `k`.
pub fn construct_family(family: Family, k: i64) -> Result<Construction, ConstructError> {
    match family {
        Family::Path { n } => construct_path(n, k),
        Family::Star { n } => construct_star(n, k),
        Family::DoubleStar { a, b } => construct_double_star(a, b, k),
        Family::Cp3 { c } => {
            let l = (c / 2) as i64;
            let m = 2 * c;
            if k >= l {
                construct_cp3(c, k).map(Construction::Labeling)
            } else if crate::labeling::mirror_base(m, k) >= l {
                Ok(Construction::Labeling(
                    construct_cp3(c, crate::labeling::mirror_base(m, k))?.negated(),
                ))
            } else {
                construct_cp3(c, l)?;
                Ok(Construction::Infeasible)
            }
        }
        Family::TwoP4 => Ok(construct_2p4(k)),
        Family::TwoS3 => Ok(construct_2s3(k)),
        Family::P5Prime => construct_p5prime(k),
    }
}

fn has_k2_component(g: &Graph) -> bool {
    g.components()
        .iter()
        .any(|c| c.graph.vertex_count() == 2 && c.graph.edge_count() == 1)
}

/// Labels each component with its own `1..=m_c` labeling and stacks the
/// components' label blocks in component order, so the result is a
/// bijection onto `1..=m` and same-degree vertices in different components
/// cannot collide.
fn label_components<F>(g: &Graph, mut per_component: F) -> Result<EdgeLabeling, ConstructError>
where
    F: FnMut(&Graph) -> Result<EdgeLabeling, ConstructError>,
{
    let mut labels = vec![0i64; g.edge_count()];
    let mut offset = 0i64;
    for comp in g.components() {
        if comp.graph.edge_count() == 0 {
            continue;
        }
        let local = per_component(&comp.graph)?;
        for (local_e, &x) in local.labels().iter().enumerate() {
            labels[comp.edge_map[local_e]] = x + offset;
        }
        offset += comp.graph.edge_count() as i64;
    }
    Ok(EdgeLabeling::from_ranks(labels))
}

/// Picks the base construction for `k` or its mirror `-(m + k + 1)` and
/// negates when the mirror was used.
fn by_symmetry<F>(m: usize, k: i64, direct: impl Fn(i64) -> bool, build: F) -> Construction
where
    F: Fn(i64) -> Construction,
{
    if direct(k) {
        build(k)
    } else {
        match build(crate::labeling::mirror_base(m, k)) {
            Construction::Labeling(f) => Construction::Labeling(f.negated()),
            Construction::Infeasible => Construction::Infeasible,
        }
    }
}
