//! Edge labelings, induced vertex sums and the verifiers built on them.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("labeling has {found} labels but the graph has {expected} edges")]
    IncompleteLabeling { expected: usize, found: usize },
    #[error("labels are not a bijection onto 1..={m}")]
    LabelsNotOneToM { m: usize },
    #[error("the graph has no edges")]
    EmptyGraph,
    #[error("edge {edge} at vertex {vertex} is unlabeled")]
    UnlabeledIncidentEdge { vertex: Vertex, edge: EdgeId },
    #[error("edge {edge} is not incident to vertex {vertex}")]
    EdgeNotIncident { vertex: Vertex, edge: EdgeId },
}

/// An injective-by-intent assignment of integers to the edges of a graph,
/// indexed by the graph's canonical edge order, together with the shift
/// `base` it claims to realize (labels `base+1 ..= base+m`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    base: i64,
    labels: Vec<i64>,
}

impl EdgeLabeling {
    pub fn new(base: i64, labels: Vec<i64>) -> Self {
        EdgeLabeling { base, labels }
    }

    /// Labels `1..=m` in the given order, i.e. base `0`.
    pub fn from_ranks(labels: Vec<i64>) -> Self {
        EdgeLabeling { base: 0, labels }
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<i64> {
        self.labels
    }

    pub fn label(&self, e: EdgeId) -> i64 {
        self.labels[e]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Every label increased by `t`; the base moves with it.
    pub fn shifted(&self, t: i64) -> Self {
        EdgeLabeling {
            base: self.base + t,
            labels: self.labels.iter().map(|&x| x + t).collect(),
        }
    }

    /// Every label negated. A `k`-shifted labeling on `m` edges becomes a
    /// `-(m + k + 1)`-shifted one.
    pub fn negated(&self) -> Self {
        EdgeLabeling {
            base: mirror_base(self.labels.len(), self.base),
            labels: self.labels.iter().map(|&x| -x).collect(),
        }
    }
}

/// The shift paired with `k` by label negation on a graph with `m` edges.
pub fn mirror_base(m: usize, k: i64) -> i64 {
    -(m as i64 + k + 1)
}

pub fn shift_labeling(f: &EdgeLabeling, t: i64) -> EdgeLabeling {
    f.shifted(t)
}

pub fn negate_labeling(f: &EdgeLabeling) -> EdgeLabeling {
    f.negated()
}

/// `φ_f(v)` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSums(pub Vec<i64>);

impl VertexSums {
    pub fn get(&self, v: Vertex) -> i64 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Lexicographically smallest pair `u < v` with equal sums among the
    /// vertices in the same `class`.
    fn first_collision(&self, class: impl Fn(Vertex) -> usize) -> Option<(Vertex, Vertex)> {
        let mut groups: HashMap<(usize, i64), Vec<Vertex>> = HashMap::new();
        for (v, &s) in self.0.iter().enumerate() {
            groups.entry((class(v), s)).or_default().push(v);
        }
        groups
            .values()
            .filter(|vs| vs.len() > 1)
            .map(|vs| (vs[0], vs[1]))
            .min()
    }
}

pub fn vertex_sums(g: &Graph, f: &EdgeLabeling) -> Result<VertexSums, LabelError> {
    if f.len() != g.edge_count() {
        return Err(LabelError::IncompleteLabeling {
            expected: g.edge_count(),
            found: f.len(),
        });
    }
    let mut sums = vec![0i64; g.vertex_count()];
    for (&(u, v), &x) in g.edges().iter().zip(f.labels()) {
        sums[u] += x;
        sums[v] += x;
    }
    Ok(VertexSums(sums))
}

/// Why a labeling failed a check. Variants are listed in the order the
/// checks run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    WrongLabelCount { expected: usize, found: usize },
    LabelOutOfRange { edge: EdgeId, label: i64, lo: i64, hi: i64 },
    DuplicateLabel { label: i64, first: EdgeId, second: EdgeId },
    SumCollision { u: Vertex, v: Vertex, sum: i64 },
    DegreeOrder { higher: Vertex, lower: Vertex },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::WrongLabelCount { expected, found } => {
                write!(f, "expected {expected} labels, found {found}")
            }
            Rejection::LabelOutOfRange { edge, label, lo, hi } => {
                write!(f, "edge {edge} has label {label} outside {lo}..={hi}")
            }
            Rejection::DuplicateLabel { label, first, second } => {
                write!(f, "label {label} used on edges {first} and {second}")
            }
            Rejection::SumCollision { u, v, sum } => {
                write!(f, "vertices {u} and {v} share vertex sum {sum}")
            }
            Rejection::DegreeOrder { higher, lower } => write!(
                f,
                "vertex {higher} has larger degree than vertex {lower} but no larger sum"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Rejection),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            Verdict::Accept => None,
            Verdict::Reject(r) => Some(r),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => write!(f, "accept"),
            Verdict::Reject(r) => write!(f, "reject: {r}"),
        }
    }
}

/// Checks that `f` uses exactly the labels `lo..=hi`, one per edge.
fn check_label_set(f: &EdgeLabeling, m: usize, lo: i64, hi: i64) -> Option<Rejection> {
    if f.len() != m {
        return Some(Rejection::WrongLabelCount {
            expected: m,
            found: f.len(),
        });
    }
    let mut first_use: HashMap<i64, EdgeId> = HashMap::with_capacity(m);
    for (edge, &label) in f.labels().iter().enumerate() {
        if label < lo || label > hi {
            return Some(Rejection::LabelOutOfRange { edge, label, lo, hi });
        }
        if let Some(&first) = first_use.get(&label) {
            return Some(Rejection::DuplicateLabel {
                label,
                first,
                second: edge,
            });
        }
        first_use.insert(label, edge);
    }
    None
}

/// Accepts iff the labels are exactly `{k+1, ..., k+m}` and all vertex sums
/// are pairwise distinct.
pub fn verify_shifted(g: &Graph, f: &EdgeLabeling, k: i64) -> Verdict {
    let m = g.edge_count();
    if let Some(r) = check_label_set(f, m, k + 1, k + m as i64) {
        return Verdict::Reject(r);
    }
    let sums = vertex_sums(g, f).expect("label count checked above");
    match sums.first_collision(|_| 0) {
        Some((u, v)) => Verdict::Reject(Rejection::SumCollision {
            u,
            v,
            sum: sums.get(u),
        }),
        None => Verdict::Accept,
    }
}

fn require_one_to_m(g: &Graph, f: &EdgeLabeling) -> Result<VertexSums, LabelError> {
    let m = g.edge_count();
    if check_label_set(f, m, 1, m as i64).is_some() {
        return Err(LabelError::LabelsNotOneToM { m });
    }
    vertex_sums(g, f)
}

/// Same-degree distinct-sum check for a labeling onto `1..=m`.
pub fn is_sdds(g: &Graph, f: &EdgeLabeling) -> Result<Verdict, LabelError> {
    let sums = require_one_to_m(g, f)?;
    Ok(match sums.first_collision(|v| g.degree(v)) {
        Some((u, v)) => Verdict::Reject(Rejection::SumCollision {
            u,
            v,
            sum: sums.get(u),
        }),
        None => Verdict::Accept,
    })
}

/// Antimagic onto `1..=m` with vertex sums strictly increasing in degree.
pub fn is_strongly_antimagic(g: &Graph, f: &EdgeLabeling) -> Result<Verdict, LabelError> {
    let sums = require_one_to_m(g, f)?;
    if let Some((u, v)) = sums.first_collision(|_| 0) {
        return Ok(Verdict::Reject(Rejection::SumCollision {
            u,
            v,
            sum: sums.get(u),
        }));
    }
    Ok(match degree_order_violation(g, &sums) {
        Some((higher, lower)) => Verdict::Reject(Rejection::DegreeOrder { higher, lower }),
        None => Verdict::Accept,
    })
}

fn degree_order_violation(g: &Graph, sums: &VertexSums) -> Option<(Vertex, Vertex)> {
    let mut by_degree: Vec<Vertex> = (0..g.vertex_count()).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    // max sum (and its vertex) over all strictly lower degrees
    let mut lower_max: Option<(i64, Vertex)> = None;
    let mut i = 0;
    while i < by_degree.len() {
        let d = g.degree(by_degree[i]);
        let j = by_degree[i..]
            .iter()
            .position(|&v| g.degree(v) != d)
            .map_or(by_degree.len(), |p| i + p);
        let group = &by_degree[i..j];
        if let Some((max_sum, low)) = lower_max {
            if let Some(&u) = group.iter().find(|&&u| sums.get(u) <= max_sum) {
                return Some((u, low));
            }
        }
        for &v in group {
            if lower_max.is_none_or(|(s, _)| sums.get(v) > s) {
                lower_max = Some((sums.get(v), v));
            }
        }
        i = j;
    }
    None
}

/// `(m - 1)(Δ - 1)`: shifting an SDDS labeling by at least this much gives a
/// shifted-antimagic labeling.
pub fn sdds_shift_threshold(g: &Graph) -> Result<i64, LabelError> {
    let m = g.edge_count() as i64;
    if m == 0 {
        return Err(LabelError::EmptyGraph);
    }
    Ok((m - 1) * (g.max_degree() as i64 - 1))
}

/// A labeling under construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialLabeling {
    labels: Vec<Option<i64>>,
}

impl PartialLabeling {
    pub fn new(m: usize) -> Self {
        PartialLabeling {
            labels: vec![None; m],
        }
    }

    pub fn get(&self, e: EdgeId) -> Option<i64> {
        self.labels[e]
    }

    pub fn set(&mut self, e: EdgeId, label: i64) {
        debug_assert!(self.labels[e].is_none(), "edge {e} labeled twice");
        self.labels[e] = Some(label);
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labeled_count(&self) -> usize {
        self.labels.iter().flatten().count()
    }

    /// The finished labeling, or the first unlabeled edge.
    pub fn complete(self, base: i64) -> Result<EdgeLabeling, EdgeId> {
        self.labels
            .iter()
            .enumerate()
            .map(|(e, x)| x.ok_or(e))
            .collect::<Result<Vec<_>, _>>()
            .map(|labels| EdgeLabeling::new(base, labels))
    }
}

/// `φ'_f(v)`: the sum of labels at `v` over every incident edge except
/// `excluded`, all of which must already be labeled.
pub fn partial_vertex_sum(
    g: &Graph,
    partial: &PartialLabeling,
    v: Vertex,
    excluded: EdgeId,
) -> Result<i64, LabelError> {
    if !g.incident(v).iter().any(|&(_, e)| e == excluded) {
        return Err(LabelError::EdgeNotIncident {
            vertex: v,
            edge: excluded,
        });
    }
    g.incident(v)
        .iter()
        .filter(|&&(_, e)| e != excluded)
        .map(|&(_, e)| {
            partial
                .get(e)
                .ok_or(LabelError::UnlabeledIncidentEdge { vertex: v, edge: e })
        })
        .sum()
}
