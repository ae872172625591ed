//! Simple undirected graphs, connected components and BFS level partitions.
//!
//! Vertices are dense ids `0..n`. Edges are stored canonically as `(min, max)`
//! pairs sorted lexicographically, so an edge is identified by its index in
//! [`Graph::edges`]. Every labeling in this crate is a vector indexed by that
//! edge order.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(Vertex),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("root {root} is outside 0..{n}")]
    RootOutOfRange { root: Vertex, n: usize },
    #[error("level {level} is outside 1..={depth}")]
    LevelOutOfRange { level: usize, depth: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("empty input: expected a header line \"n m\"")]
    MissingHeader,
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: GraphError },
}

/// A simple undirected graph in canonical form.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a canonical graph, rejecting loops, duplicates and out-of-range
    /// endpoints.
    pub fn new<I>(n: usize, raw_edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        for (u, v) in raw_edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            edges.push(e);
        }
        edges.sort_unstable();
        let mut adjacency = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adjacency })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// Index of the edge `{u, v}`, if present.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// `(neighbor, edge id)` pairs, sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Lowest-id vertex of maximum degree among `vertices`.
    pub fn default_root_among(&self, vertices: impl IntoIterator<Item = Vertex>) -> Option<Vertex> {
        vertices
            .into_iter()
            .fold(None, |best: Option<Vertex>, v| match best {
                Some(b) if self.degree(b) >= self.degree(v) => Some(b),
                _ => Some(v),
            })
    }

    pub fn default_root(&self) -> Option<Vertex> {
        self.default_root_among(0..self.n)
    }

    /// The endpoint of `e` other than `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0).len() == self.n
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        let components = self.components();
        self.edge_count() + components.len() == self.n
    }

    fn component_of(&self, start: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n];
        let mut order = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order.sort_unstable();
        order
    }

    /// Maximal connected subgraphs, ordered by their smallest vertex id.
    pub fn components(&self) -> Vec<Subgraph> {
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if assigned[start] {
                continue;
            }
            let vertices = self.component_of(start);
            for &v in &vertices {
                assigned[v] = true;
            }
            out.push(self.induced(&vertices));
        }
        out
    }

    /// Subgraph induced by `vertices` (which must be sorted and distinct).
    pub fn induced(&self, vertices: &[Vertex]) -> Subgraph {
        let set: BTreeSet<Vertex> = vertices.iter().copied().collect();
        let edge_ids = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, (u, v))| set.contains(u) && set.contains(v))
            .map(|(id, _)| id);
        self.edge_subgraph(vertices, edge_ids)
    }

    /// Subgraph on `vertices` keeping exactly the edges in `edge_ids`, whose
    /// endpoints must lie in `vertices`.
    pub fn edge_subgraph(
        &self,
        vertices: &[Vertex],
        edge_ids: impl IntoIterator<Item = EdgeId>,
    ) -> Subgraph {
        let local: HashMap<Vertex, Vertex> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut pairs: Vec<((Vertex, Vertex), EdgeId)> = edge_ids
            .into_iter()
            .map(|id| {
                let (u, v) = self.edges[id];
                let (a, b) = (local[&u], local[&v]);
                ((a.min(b), a.max(b)), id)
            })
            .collect();
        pairs.sort_unstable();
        let graph = Graph::new(vertices.len(), pairs.iter().map(|&(e, _)| e))
            .expect("edges of a simple graph stay simple in a subgraph");
        Subgraph {
            graph,
            vertex_map: vertices.to_vec(),
            edge_map: pairs.into_iter().map(|(_, id)| id).collect(),
        }
    }

    /// BFS layers of the component containing `root`.
    pub fn level_partition(&self, root: Vertex) -> Result<LevelPartition, GraphError> {
        if root >= self.n {
            return Err(GraphError::RootOutOfRange { root, n: self.n });
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut levels: Vec<Vec<Vertex>> = vec![vec![root]];
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if levels.len() <= dist[w] {
                        levels.push(Vec::new());
                    }
                    levels[dist[w]].push(w);
                    queue.push_back(w);
                }
            }
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        Ok(LevelPartition { root, levels, dist })
    }

    /// Parses the edge-list text format: a header `n m` followed by `m` lines
    /// `u v`. Blank lines and lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let (n, m) = parse_pair(header_line, header)?;
        let mut raw = Vec::with_capacity(m);
        for (line, text) in lines {
            let (u, v) = parse_pair(line, text)?;
            if u >= n || v >= n {
                return Err(ParseError::Invalid {
                    line,
                    source: GraphError::EndpointOutOfRange { u, v, n },
                });
            }
            raw.push((line, (u, v)));
        }
        if raw.len() != m {
            return Err(ParseError::EdgeCountMismatch {
                expected: m,
                found: raw.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for &(line, (u, v)) in &raw {
            if u == v {
                return Err(ParseError::Invalid {
                    line,
                    source: GraphError::LoopEdge(u),
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(ParseError::Invalid {
                    line,
                    source: GraphError::DuplicateEdge(u.min(v), u.max(v)),
                });
            }
        }
        Graph::new(n, raw.into_iter().map(|(_, e)| e)).map_err(|source| ParseError::Invalid {
            line: header_line,
            source,
        })
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let field = fields.next().ok_or_else(|| ParseError::Malformed {
            line,
            message: format!("missing {what}"),
        })?;
        field.parse().map_err(|_| ParseError::Malformed {
            line,
            message: format!("{what} {field:?} is not a non-negative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(ParseError::Malformed {
            line,
            message: format!("unexpected trailing field {extra:?}"),
        });
    }
    Ok((a, b))
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse_edge_list(s)
    }
}

/// A graph carved out of a parent, remembering where its vertices and edges
/// came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// local vertex id -> parent vertex id
    pub vertex_map: Vec<Vertex>,
    /// local edge id -> parent edge id
    pub edge_map: Vec<EdgeId>,
}

impl Subgraph {
    pub fn parent_vertex(&self, local: Vertex) -> Vertex {
        self.vertex_map[local]
    }

    pub fn local_vertex(&self, parent: Vertex) -> Option<Vertex> {
        self.vertex_map.binary_search(&parent).ok()
    }
}

/// BFS layers `L_0 = {root}, L_1, ..., L_d` of the root's component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelPartition {
    root: Vertex,
    levels: Vec<Vec<Vertex>>,
    dist: Vec<usize>,
}

/// Edges inside one level and edges between it and the level above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerSubgraphs {
    /// `G[L_i]`, on the vertices of `L_i`.
    pub intra: Subgraph,
    /// `G[L_i, L_{i-1}]`, on the vertices of `L_i ∪ L_{i-1}`.
    pub cross: Subgraph,
}

impl LevelPartition {
    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Eccentricity of the root within its component.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[Vec<Vertex>] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &[Vertex] {
        &self.levels[i]
    }

    /// Distance from the root, or `None` outside the root's component.
    pub fn level_of(&self, v: Vertex) -> Option<usize> {
        match self.dist[v] {
            usize::MAX => None,
            d => Some(d),
        }
    }

    /// `G[L_i]` and `G[L_i, L_{i-1}]` for `1 <= i <= d`.
    pub fn layer_subgraphs(&self, g: &Graph, i: usize) -> Result<LayerSubgraphs, GraphError> {
        if i == 0 || i > self.depth() {
            return Err(GraphError::LevelOutOfRange {
                level: i,
                depth: self.depth(),
            });
        }
        let mut intra_ids = BTreeSet::new();
        let mut cross_ids = BTreeSet::new();
        for &v in &self.levels[i] {
            for &(w, e) in g.incident(v) {
                match self.dist[w] {
                    d if d == i => {
                        intra_ids.insert(e);
                    }
                    d if d + 1 == i => {
                        cross_ids.insert(e);
                    }
                    _ => {}
                }
            }
        }
        let mut both: Vec<Vertex> = self.levels[i]
            .iter()
            .chain(&self.levels[i - 1])
            .copied()
            .collect();
        both.sort_unstable();
        Ok(LayerSubgraphs {
            intra: g.edge_subgraph(&self.levels[i], intra_ids),
            cross: g.edge_subgraph(&both, cross_ids),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        let k2 = Graph::new(2, [(1, 0)]).unwrap();
        assert_eq!(k2.edges(), &[(0, 1)]);
        assert_eq!(
            Graph::new(4, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, [(2, 2)]), Err(GraphError::LoopEdge(2)));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange { .. })
        ));
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::new(4, [(3, 2), (0, 3), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_id(3, 0), Some(1));
        assert_eq!(g.edge_id(1, 2), None);
    }

    #[test]
    fn components_ordered_by_smallest_vertex() {
        let two_p4 = Graph::new(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]).unwrap();
        let comps = two_p4.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertex_map, vec![0, 1, 2, 3]);
        assert_eq!(comps[1].vertex_map, vec![4, 5, 6, 7]);
        assert_eq!(comps[1].edge_map, vec![3, 4, 5]);
        assert_eq!(comps[1].graph.edges(), &[(0, 1), (1, 2), (2, 3)]);

        assert_eq!(complete(4).components().len(), 1);

        let empty = Graph::empty(3);
        let comps = empty.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.graph.vertex_count() == 1));
    }

    #[test]
    fn level_partition_examples() {
        let p = path(5).level_partition(2).unwrap();
        assert_eq!(p.levels(), &[vec![2], vec![1, 3], vec![0, 4]]);
        assert_eq!(p.depth(), 2);

        let p = complete(4).level_partition(0).unwrap();
        assert_eq!(p.levels(), &[vec![0], vec![1, 2, 3]]);

        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = star.level_partition(0).unwrap();
        assert_eq!(p.levels(), &[vec![0], vec![1, 2, 3]]);

        assert_eq!(
            path(3).level_partition(3),
            Err(GraphError::RootOutOfRange { root: 3, n: 3 })
        );
    }

    #[test]
    fn layer_subgraph_examples() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = c4.level_partition(0).unwrap();
        let layers = p.layer_subgraphs(&c4, 2).unwrap();
        assert_eq!(layers.intra.graph.edge_count(), 0);
        assert_eq!(layers.cross.graph.edge_count(), 2);

        let k4 = complete(4);
        let p = k4.level_partition(0).unwrap();
        let layers = p.layer_subgraphs(&k4, 1).unwrap();
        assert_eq!(layers.intra.graph.edge_count(), 3);
        assert_eq!(layers.cross.graph.edge_count(), 3);

        assert_eq!(
            p.layer_subgraphs(&k4, 2),
            Err(GraphError::LevelOutOfRange { level: 2, depth: 1 })
        );
        assert!(p.layer_subgraphs(&k4, 0).is_err());
    }

    #[test]
    fn tree_layers_have_no_intra_edges() {
        let tree = Graph::new(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        let p = tree.level_partition(0).unwrap();
        for i in 1..=p.depth() {
            assert_eq!(p.layer_subgraphs(&tree, i).unwrap().intra.graph.edge_count(), 0);
        }
    }

    #[test]
    fn default_root_prefers_lowest_id() {
        let p5 = path(5);
        assert_eq!(p5.default_root(), Some(1));
        assert_eq!(Graph::empty(0).default_root(), None);
    }

    #[test]
    fn forest_detection() {
        assert!(path(5).is_forest());
        assert!(!complete(3).is_forest());
        assert!(Graph::empty(4).is_forest());
    }

    #[test]
    fn parse_edge_list() {
        let g: Graph = "4 3\n0 1\n1 2\n\n2 3\n".parse().unwrap();
        assert_eq!(g, path(4));
        assert_eq!(g.to_edge_list().parse::<Graph>().unwrap(), g);

        let err = "3 2\n0 1\n1 x\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 3, .. }), "{err}");
        let err = "3 2\n0 1\n1 0\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, ParseError::Invalid { line: 3, .. }), "{err}");
        let err = "3 2\n0 1\n".parse::<Graph>().unwrap_err();
        assert_eq!(err, ParseError::EdgeCountMismatch { expected: 2, found: 1 });
        let err = "3 1\n0 5\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, ParseError::Invalid { line: 2, .. }));
        assert_eq!("".parse::<Graph>().unwrap_err(), ParseError::MissingHeader);
        let err = "2 1\n0 1 7\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 2, .. }));
    }

    #[test]
    fn json_round_trip_canonicalizes() {
        let g: Graph = serde_json::from_str(r#"{"n":3,"edges":[[2,1],[0,1]]}"#).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
