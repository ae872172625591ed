//! JSON labeling certificates.
//!
//! ```json
//! {"n":5,"edges":[[0,1],[1,2],[2,3],[3,4]],"k":-1,"labels":[0,1,3,2],
//!  "vertex_sums":[0,1,4,5,2],"valid":true}
//! ```
//!
//! `labels[i]` belongs to `edges[i]`; the edge list may be in any order. The
//! stored `vertex_sums` and `valid` fields are advisory: [`Certificate::check`]
//! recomputes both.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::labeling::{verify_shifted, vertex_sums, EdgeLabeling, LabelError, Verdict};

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("invalid graph in certificate: {0}")]
    Graph(#[from] GraphError),
    #[error("certificate lists {edges} edges but {labels} labels")]
    LabelCount { edges: usize, labels: usize },
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub k: i64,
    pub labels: Vec<i64>,
    pub vertex_sums: Vec<i64>,
    pub valid: bool,
}

/// Outcome of re-deriving a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck {
    pub graph: Graph,
    /// Labels moved to the graph's canonical edge order.
    pub labeling: EdgeLabeling,
    pub vertex_sums: Vec<i64>,
    pub verdict: Verdict,
    /// Whether the advisory fields agree with the recomputation.
    pub stored_fields_agree: bool,
}

impl Certificate {
    /// Certificate for `f` on `g` claimed at shift `k`.
    pub fn new(g: &Graph, f: &EdgeLabeling, k: i64) -> Result<Self, LabelError> {
        let sums = vertex_sums(g, f)?;
        Ok(Certificate {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            k,
            labels: f.labels().to_vec(),
            vertex_sums: sums.0,
            valid: verify_shifted(g, f, k).is_accept(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn check(&self) -> Result<CertificateCheck, CertificateError> {
        if self.edges.len() != self.labels.len() {
            return Err(CertificateError::LabelCount {
                edges: self.edges.len(),
                labels: self.labels.len(),
            });
        }
        let graph = Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))?;
        let mut canonical = vec![0; self.labels.len()];
        for (&[u, v], &label) in self.edges.iter().zip(&self.labels) {
            let id = graph.edge_id(u, v).expect("edge was just inserted");
            canonical[id] = label;
        }
        let labeling = EdgeLabeling::new(self.k, canonical);
        let sums = vertex_sums(&graph, &labeling)?.0;
        let verdict = verify_shifted(&graph, &labeling, self.k);
        let stored_fields_agree = sums == self.vertex_sums && verdict.is_accept() == self.valid;
        Ok(CertificateCheck {
            graph,
            labeling,
            vertex_sums: sums,
            verdict,
            stored_fields_agree,
        })
    }
}
