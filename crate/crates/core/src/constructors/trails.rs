//! σ-injections and open-trail decompositions of the bipartite graph
//! between two consecutive BFS levels.
//!
//! Given the cross graph `h = G[L_i, L_{i-1}]` and the deeper side `L_i`, we
//! look for `σ` mapping each deeper vertex to one of its cross edges such
//! that `h - σ(L_i)` splits into open trails, no two of which share an end
//! vertex. A vertex can then end at most one trail, so odd-degree vertices
//! of `h - σ(L_i)` end exactly one and even-degree vertices none. Such a
//! decomposition exists iff every non-trivial component of `h - σ(L_i)` has
//! an odd-degree vertex; the trails come from an Euler circuit through an
//! auxiliary vertex joined to all odd-degree vertices.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::labeling::PartialLabeling;

use super::ConstructError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrailKind {
    /// Both ends on the shallower level.
    W,
    /// Both ends on the deeper level.
    M,
    /// One end on each level; stored starting at the deeper end.
    N,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    pub vertices: Vec<Vertex>,
    /// `edges[j]` joins `vertices[j]` and `vertices[j + 1]`.
    pub edges: Vec<EdgeId>,
    pub kind: TrailKind,
}

impl Trail {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("trail has vertices")
    }

    fn reversed(&self) -> Trail {
        Trail {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
            kind: self.kind,
        }
    }
}

/// Vertex and edge ids are local to the cross graph it was computed on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailDecomposition {
    pub sigma: BTreeMap<Vertex, EdgeId>,
    pub trails: Vec<Trail>,
}

impl TrailDecomposition {
    pub fn trail_edge_count(&self) -> usize {
        self.trails.iter().map(Trail::len).sum()
    }

    /// Checks the structural invariants against `h` and its deeper side:
    /// σ is an injection onto incident edges, σ-edges and trail edges
    /// partition `E(h)`, every trail is an open trail of `h`, trail ends are
    /// pairwise disjoint, and each kind matches its ends.
    pub fn check_invariants(&self, h: &Graph, deeper: &BTreeSet<Vertex>) -> Result<(), String> {
        let mut owner: Vec<Option<String>> = vec![None; h.edge_count()];
        let mut claim = |e: EdgeId, who: String| -> Result<(), String> {
            if e >= owner.len() {
                return Err(format!("{who} uses unknown edge {e}"));
            }
            if let Some(prev) = &owner[e] {
                return Err(format!("edge {e} used by both {prev} and {who}"));
            }
            owner[e] = Some(who);
            Ok(())
        };
        let sigma_domain: BTreeSet<Vertex> = self.sigma.keys().copied().collect();
        if &sigma_domain != deeper {
            return Err("σ is not defined exactly on the deeper level".into());
        }
        for (&v, &e) in &self.sigma {
            let (a, b) = h.edge(e);
            if a != v && b != v {
                return Err(format!("σ({v}) = edge {e} is not incident to {v}"));
            }
            claim(e, format!("σ({v})"))?;
        }
        let mut ends = BTreeSet::new();
        for (t, trail) in self.trails.iter().enumerate() {
            if trail.is_empty() || trail.vertices.len() != trail.edges.len() + 1 {
                return Err(format!("trail {t} is malformed"));
            }
            for (j, &e) in trail.edges.iter().enumerate() {
                let (x, y) = (trail.vertices[j], trail.vertices[j + 1]);
                if h.edge_id(x, y) != Some(e) {
                    return Err(format!("trail {t} step {j} does not follow edge {e}"));
                }
                claim(e, format!("trail {t}"))?;
            }
            if trail.first() == trail.last() {
                return Err(format!("trail {t} is closed"));
            }
            for end in [trail.first(), trail.last()] {
                if !ends.insert(end) {
                    return Err(format!("vertex {end} ends more than one trail"));
                }
            }
            let (a, b) = (deeper.contains(&trail.first()), deeper.contains(&trail.last()));
            let expected = match (a, b) {
                (false, false) => TrailKind::W,
                (true, true) => TrailKind::M,
                (true, false) => TrailKind::N,
                (false, true) => return Err(format!("N trail {t} starts on the shallow side")),
            };
            if trail.kind != expected {
                return Err(format!("trail {t} has kind {:?}, ends say {expected:?}", trail.kind));
            }
        }
        if let Some(e) = owner.iter().position(Option::is_none) {
            return Err(format!("edge {e} is covered by neither σ nor a trail"));
        }
        Ok(())
    }
}

/// Depth-first search over σ choices in canonical order (each deeper vertex
/// tries its incident edges by neighbor id); the first σ whose complement
/// decomposes wins.
pub fn find_sigma_and_trails(
    h: &Graph,
    deeper: &BTreeSet<Vertex>,
) -> Result<TrailDecomposition, ConstructError> {
    let order: Vec<Vertex> = deeper.iter().copied().collect();
    let mut chosen = Vec::with_capacity(order.len());
    if order.iter().any(|&v| h.degree(v) == 0) || !search_sigma(h, &order, &mut chosen) {
        return Err(ConstructError::NoValidSigma { level: 0 });
    }
    let sigma: BTreeMap<Vertex, EdgeId> = order.iter().copied().zip(chosen).collect();
    let in_sigma: BTreeSet<EdgeId> = sigma.values().copied().collect();
    let rest: Vec<EdgeId> = (0..h.edge_count()).filter(|e| !in_sigma.contains(e)).collect();
    let trails = split_into_trails(h, &rest, deeper);
    Ok(TrailDecomposition { sigma, trails })
}

fn search_sigma(h: &Graph, order: &[Vertex], chosen: &mut Vec<EdgeId>) -> bool {
    if chosen.len() == order.len() {
        let taken: BTreeSet<EdgeId> = chosen.iter().copied().collect();
        let rest: Vec<EdgeId> = (0..h.edge_count()).filter(|e| !taken.contains(e)).collect();
        return decomposable(h, &rest);
    }
    let v = order[chosen.len()];
    for &(_, e) in h.incident(v) {
        chosen.push(e);
        if search_sigma(h, order, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// True iff every component of `(V(h), edges)` that has an edge also has an
/// odd-degree vertex.
fn decomposable(h: &Graph, edges: &[EdgeId]) -> bool {
    let n = h.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut degree = vec![0usize; n];
    for &e in edges {
        let (u, v) = h.edge(e);
        degree[u] += 1;
        degree[v] += 1;
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        parent[ru] = rv;
    }
    let mut has_edge = vec![false; n];
    let mut has_odd = vec![false; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        has_edge[r] |= degree[v] > 0;
        has_odd[r] |= degree[v] % 2 == 1;
    }
    (0..n).all(|r| !has_edge[r] || has_odd[r])
}

/// Splits `edges` (assumed decomposable) into open trails whose ends are
/// exactly the odd-degree vertices, each used once.
fn split_into_trails(h: &Graph, edges: &[EdgeId], deeper: &BTreeSet<Vertex>) -> Vec<Trail> {
    let n = h.vertex_count();
    let hub = n;
    // arc list: (neighbor, real edge or None for a hub edge, arc slot id)
    let mut adjacency: Vec<Vec<(Vertex, Option<EdgeId>, usize)>> = vec![Vec::new(); n + 1];
    let mut slots = 0usize;
    for &e in edges {
        let (u, v) = h.edge(e);
        adjacency[u].push((v, Some(e), slots));
        adjacency[v].push((u, Some(e), slots));
        slots += 1;
    }
    let odd: Vec<Vertex> = (0..n).filter(|&v| adjacency[v].len() % 2 == 1).collect();
    for &v in &odd {
        adjacency[v].push((hub, None, slots));
        adjacency[hub].push((v, None, slots));
        slots += 1;
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    if odd.is_empty() {
        debug_assert!(edges.is_empty(), "caller checked decomposability");
        return Vec::new();
    }

    // iterative Hierholzer from the hub
    let mut used = vec![false; slots];
    let mut cursor = vec![0usize; n + 1];
    let mut stack: Vec<(Vertex, Option<EdgeId>)> = vec![(hub, None)];
    let mut circuit: Vec<(Vertex, Option<EdgeId>)> = Vec::with_capacity(slots + 1);
    while let Some(&(v, _)) = stack.last() {
        let list = &adjacency[v];
        while cursor[v] < list.len() && used[list[cursor[v]].2] {
            cursor[v] += 1;
        }
        if let Some(&(w, e, slot)) = list.get(cursor[v]) {
            used[slot] = true;
            stack.push((w, e));
        } else {
            circuit.push(stack.pop().expect("stack is non-empty"));
        }
    }
    circuit.reverse();
    // circuit[j].1 joins circuit[j - 1].0 and circuit[j].0

    let mut trails = Vec::new();
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut trail_edges: Vec<EdgeId> = Vec::new();
    for &(v, e) in &circuit[1..] {
        if v == hub {
            let mut trail = Trail {
                kind: TrailKind::W,
                vertices: std::mem::take(&mut vertices),
                edges: std::mem::take(&mut trail_edges),
            };
            let (a, b) = (deeper.contains(&trail.first()), deeper.contains(&trail.last()));
            trail.kind = match (a, b) {
                (false, false) => TrailKind::W,
                (true, true) => TrailKind::M,
                _ => TrailKind::N,
            };
            if trail.kind == TrailKind::N && !a {
                trail = trail.reversed();
            }
            trails.push(trail);
        } else {
            if let Some(e) = e {
                trail_edges.push(e);
            }
            vertices.push(v);
        }
    }
    trails
}

/// Labels the trails of `dec` with `range = s..=ℓ`, writing into `partial`
/// (indexed like `h`'s edges).
///
/// Labels are drawn from two cursors, the low one climbing from `s` and the
/// high one descending from `ℓ`. W-trails alternate low/high starting low,
/// M-trails start high. N-trails are sorted by length (longest first) and
/// paired: the first of a pair runs from its deeper end starting high, the
/// second from its shallower end starting low; an unpaired N-trail is
/// labeled like the first of a pair. Consequently two consecutive trail
/// edges meeting at a shallower internal vertex sum to `s + ℓ` or
/// `s + ℓ + 1`, and at a deeper internal vertex to `s + ℓ` or `s + ℓ - 1`.
pub fn label_trails(
    dec: &TrailDecomposition,
    range: RangeInclusive<i64>,
    partial: &mut PartialLabeling,
) -> Result<(), ConstructError> {
    let total = dec.trail_edge_count();
    let available = (range.end() - range.start() + 1).max(0) as usize;
    if available != total {
        return Err(ConstructError::RangeSizeMismatch {
            expected: total,
            found: available,
        });
    }
    let mut low = *range.start();
    let mut high = *range.end();
    let mut alternate = |edges: &mut dyn Iterator<Item = EdgeId>, start_high: bool, out: &mut PartialLabeling| {
        let mut take_high = start_high;
        for e in edges {
            if take_high {
                out.set(e, high);
                high -= 1;
            } else {
                out.set(e, low);
                low += 1;
            }
            take_high = !take_high;
        }
    };

    for trail in dec.trails.iter().filter(|t| t.kind != TrailKind::N) {
        if trail.len() % 2 == 1 {
            return Err(ConstructError::OddWMTrail(trail.len()));
        }
        alternate(&mut trail.edges.iter().copied(), trail.kind == TrailKind::M, partial);
    }

    let mut n_trails: Vec<&Trail> = dec.trails.iter().filter(|t| t.kind == TrailKind::N).collect();
    n_trails.sort_by_key(|t| std::cmp::Reverse(t.len()));
    let mut pairs = n_trails.chunks(2);
    for pair in &mut pairs {
        // deeper end first, starting high
        alternate(&mut pair[0].edges.iter().copied(), true, partial);
        if let Some(second) = pair.get(1) {
            // shallower end first, starting low
            alternate(&mut second.edges.iter().rev().copied(), false, partial);
        }
    }
    debug_assert_eq!(low, high + 1, "all labels consumed");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn cross_graph(g: &Graph, level: usize) -> (Graph, BTreeSet<Vertex>) {
        let p = g.level_partition(g.default_root().unwrap()).unwrap();
        let layers = p.layer_subgraphs(g, level).unwrap();
        let deeper = p
            .level(level)
            .iter()
            .map(|&v| layers.cross.local_vertex(v).unwrap())
            .collect();
        (layers.cross.graph, deeper)
    }

    #[test]
    fn k4_level_one_uses_only_sigma() {
        let (h, deeper) = cross_graph(&families::complete(4), 1);
        assert_eq!(h.edge_count(), 3);
        let dec = find_sigma_and_trails(&h, &deeper).unwrap();
        assert!(dec.trails.is_empty());
        for (&v, &e) in &dec.sigma {
            assert_eq!(h.other_end(e, v), 0);
        }
        dec.check_invariants(&h, &deeper).unwrap();
    }

    #[test]
    fn single_edge() {
        let h = families::path(2);
        let deeper = BTreeSet::from([1]);
        let dec = find_sigma_and_trails(&h, &deeper).unwrap();
        assert_eq!(dec.sigma, BTreeMap::from([(1, 0)]));
        assert!(dec.trails.is_empty());
    }

    #[test]
    fn k33_level_two_decomposes() {
        let g = families::complete_bipartite(3, 3);
        let (h, deeper) = cross_graph(&g, 2);
        // root 0: L1 = {3,4,5}, L2 = {1,2}; six cross edges
        assert_eq!(h.edge_count(), 6);
        let dec = find_sigma_and_trails(&h, &deeper).unwrap();
        dec.check_invariants(&h, &deeper).unwrap();
        assert_eq!(dec.trail_edge_count(), 4);
    }

    #[test]
    fn eulerian_remainder_is_not_decomposable() {
        // C4 has every degree even; nothing removed, so no open trails fit
        let c4 = families::cycle(4);
        let all: Vec<EdgeId> = (0..4).collect();
        assert!(!decomposable(&c4, &all));
        assert!(decomposable(&c4, &all[..3]));
    }

    #[test]
    fn isolated_deeper_vertex_has_no_sigma() {
        let h = Graph::new(3, [(0, 1)]).unwrap();
        let deeper = BTreeSet::from([0, 2]);
        assert_eq!(
            find_sigma_and_trails(&h, &deeper),
            Err(ConstructError::NoValidSigma { level: 0 })
        );
    }

    #[test]
    fn trails_end_at_odd_vertices() {
        // shallow {0, 1}, deep {2, 3, 4}; complete bipartite K_{2,3}
        let h = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let deeper = BTreeSet::from([2, 3, 4]);
        let dec = find_sigma_and_trails(&h, &deeper).unwrap();
        dec.check_invariants(&h, &deeper).unwrap();
    }

    fn trail(vertices: &[Vertex], edges: &[EdgeId], kind: TrailKind) -> Trail {
        Trail {
            vertices: vertices.to_vec(),
            edges: edges.to_vec(),
            kind,
        }
    }

    #[test]
    fn w_and_m_two_edge_trails() {
        let w = TrailDecomposition {
            sigma: BTreeMap::new(),
            trails: vec![trail(&[0, 1, 2], &[0, 1], TrailKind::W)],
        };
        let mut partial = PartialLabeling::new(2);
        label_trails(&w, 5..=6, &mut partial).unwrap();
        assert_eq!(partial.complete(0).unwrap().labels(), &[5, 6]);

        let m = TrailDecomposition {
            sigma: BTreeMap::new(),
            trails: vec![trail(&[0, 1, 2], &[0, 1], TrailKind::M)],
        };
        let mut partial = PartialLabeling::new(2);
        label_trails(&m, 5..=6, &mut partial).unwrap();
        assert_eq!(partial.complete(0).unwrap().labels(), &[6, 5]);
    }

    #[test]
    fn label_trail_errors() {
        let w = TrailDecomposition {
            sigma: BTreeMap::new(),
            trails: vec![trail(&[0, 1, 2], &[0, 1], TrailKind::W)],
        };
        let mut partial = PartialLabeling::new(2);
        assert_eq!(
            label_trails(&w, 1..=3, &mut partial),
            Err(ConstructError::RangeSizeMismatch { expected: 2, found: 3 })
        );
        let odd = TrailDecomposition {
            sigma: BTreeMap::new(),
            trails: vec![trail(&[0, 1, 2, 3], &[0, 1, 2], TrailKind::W)],
        };
        let mut partial = PartialLabeling::new(3);
        assert_eq!(
            label_trails(&odd, 1..=3, &mut partial),
            Err(ConstructError::OddWMTrail(3))
        );
    }

    /// Every bijection from the range onto the trail edges that satisfies
    /// the internal-vertex sum windows.
    fn admissible(dec: &TrailDecomposition, deeper: &BTreeSet<Vertex>, s: i64, l: i64, m: usize) -> Vec<Vec<i64>> {
        use itertools::Itertools;
        let edges: Vec<EdgeId> = dec.trails.iter().flat_map(|t| t.edges.clone()).collect();
        let mut out = Vec::new();
        for perm in (s..=l).permutations(edges.len()) {
            let mut labels = vec![0; m];
            for (&e, &x) in edges.iter().zip(&perm) {
                labels[e] = x;
            }
            let ok = dec.trails.iter().all(|t| {
                (1..t.vertices.len() - 1).all(|j| {
                    let pair = labels[t.edges[j - 1]] + labels[t.edges[j]];
                    if deeper.contains(&t.vertices[j]) {
                        pair == s + l || pair == s + l - 1
                    } else {
                        pair == s + l || pair == s + l + 1
                    }
                })
            });
            if ok {
                out.push(labels);
            }
        }
        out
    }

    #[test]
    fn n_pair_matches_sum_window_oracle() {
        // T1: deep 0 - 1 - 2 - 3 (3 edges), T2: deep 4 - 5 (1 edge).
        // Deep side {0, 2, 4}, shallow {1, 3, 5}.
        let deeper = BTreeSet::from([0, 2, 4]);
        let dec = TrailDecomposition {
            sigma: BTreeMap::new(),
            trails: vec![
                trail(&[0, 1, 2, 3], &[0, 1, 2], TrailKind::N),
                trail(&[4, 5], &[3], TrailKind::N),
            ],
        };
        let mut partial = PartialLabeling::new(4);
        label_trails(&dec, 1..=4, &mut partial).unwrap();
        let labels = partial.complete(0).unwrap().into_labels();
        assert_eq!(labels, vec![4, 1, 3, 2]);
        let oracle = admissible(&dec, &deeper, 1, 4, 4);
        assert!(oracle.contains(&labels), "{labels:?} not in {oracle:?}");

        // two single-edge N trails: T1 gets ℓ, T2 gets s
        let dec = TrailDecomposition {
            sigma: BTreeMap::new(),
            trails: vec![
                trail(&[0, 1], &[0], TrailKind::N),
                trail(&[2, 3], &[1], TrailKind::N),
            ],
        };
        let mut partial = PartialLabeling::new(2);
        label_trails(&dec, 1..=2, &mut partial).unwrap();
        assert_eq!(partial.complete(0).unwrap().labels(), &[2, 1]);
    }

    #[test]
    fn mixed_trails_match_sum_window_oracle() {
        // W: 1 - 0 - 3 (shallow ends), M: 2 - 5 - 4, N pair of lengths 3, 1,
        // and a leftover N of length 1. Deep side is even ids.
        let deeper = BTreeSet::from([0, 2, 4, 6, 8, 10, 12]);
        let dec = TrailDecomposition {
            sigma: BTreeMap::new(),
            trails: vec![
                trail(&[1, 0, 3], &[0, 1], TrailKind::W),
                trail(&[2, 5, 4], &[2, 3], TrailKind::M),
                trail(&[6, 7], &[4], TrailKind::N),
                trail(&[8, 9, 10, 11], &[5, 6, 7], TrailKind::N),
                trail(&[12, 13], &[8], TrailKind::N),
            ],
        };
        let mut partial = PartialLabeling::new(9);
        label_trails(&dec, 10..=18, &mut partial).unwrap();
        let labels = partial.complete(0).unwrap().into_labels();
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (10..=18).collect::<Vec<_>>());
        for t in &dec.trails {
            for j in 1..t.vertices.len() - 1 {
                let pair = labels[t.edges[j - 1]] + labels[t.edges[j]];
                let allowed = if deeper.contains(&t.vertices[j]) { [28, 27] } else { [28, 29] };
                assert!(allowed.contains(&pair), "trail {t:?} pair {pair}");
            }
        }
    }
}
