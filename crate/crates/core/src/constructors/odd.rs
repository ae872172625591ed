use std::collections::BTreeSet;

use crate::graph::{Graph, Subgraph, Vertex};
use crate::labeling::{partial_vertex_sum, EdgeLabeling, PartialLabeling};

use super::trails::{find_sigma_and_trails, label_trails, TrailDecomposition};
use super::{has_k2_component, label_components, ConstructError};

/// One level's σ/trail decomposition, kept for inspection.
#[derive(Debug, Clone)]
pub struct LevelTrace {
    /// Index of the component in [`Graph::components`] order.
    pub component: usize,
    pub level: usize,
    /// `G[L_i, L_{i-1}]` of that component.
    pub cross: Subgraph,
    /// Local ids (in `cross`) of the deeper level.
    pub deeper: BTreeSet<Vertex>,
    pub decomposition: TrailDecomposition,
}

/// SDDS labeling of a graph whose vertices all have odd degree and which has
/// no `K_2` component.
pub fn construct_odd_degree(g: &Graph) -> Result<EdgeLabeling, ConstructError> {
    construct_odd_degree_traced(g).map(|(f, _)| f)
}

/// Like [`construct_odd_degree`], also returning every level decomposition.
///
/// Within a component, levels are processed from the deepest up. For level
/// `i` the next labels go, in order, to the edges inside `L_i` (canonical
/// order), to the trails of `G[L_i, L_{i-1}] - σ(L_i)`, and finally to the
/// σ-edges sorted by the partial sums of their deeper ends (ties by id).
pub fn construct_odd_degree_traced(
    g: &Graph,
) -> Result<(EdgeLabeling, Vec<LevelTrace>), ConstructError> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v).is_multiple_of(2)) {
        return Err(ConstructError::EvenDegreeVertex(v));
    }
    if has_k2_component(g) {
        return Err(ConstructError::HasK2Component);
    }
    let mut traces = Vec::new();
    let mut component = 0;
    let f = label_components(g, |c| {
        let (f, mut levels) = label_component(c, component)?;
        traces.append(&mut levels);
        component += 1;
        Ok(f)
    })?;
    Ok((f, traces))
}

fn label_component(
    g: &Graph,
    component: usize,
) -> Result<(EdgeLabeling, Vec<LevelTrace>), ConstructError> {
    let root = g.default_root().expect("component is non-empty");
    let levels = g.level_partition(root)?;
    let mut partial = PartialLabeling::new(g.edge_count());
    let mut next = 1i64;
    let mut traces = Vec::new();
    for i in (1..=levels.depth()).rev() {
        let layers = levels.layer_subgraphs(g, i)?;
        for &e in &layers.intra.edge_map {
            partial.set(e, next);
            next += 1;
        }

        let cross = layers.cross;
        let deeper: BTreeSet<Vertex> = levels
            .level(i)
            .iter()
            .map(|&v| cross.local_vertex(v).expect("deeper level lies in the cross graph"))
            .collect();
        let dec = find_sigma_and_trails(&cross.graph, &deeper).map_err(|e| match e {
            ConstructError::NoValidSigma { .. } => ConstructError::NoValidSigma { level: i },
            other => other,
        })?;

        let trail_edges = dec.trail_edge_count() as i64;
        let mut local = PartialLabeling::new(cross.graph.edge_count());
        label_trails(&dec, next..=next + trail_edges - 1, &mut local)?;
        for (local_e, &parent_e) in cross.edge_map.iter().enumerate() {
            if let Some(x) = local.get(local_e) {
                partial.set(parent_e, x);
            }
        }
        next += trail_edges;

        let mut keyed = Vec::with_capacity(dec.sigma.len());
        for (&local_v, &local_e) in &dec.sigma {
            let v = cross.parent_vertex(local_v);
            let e = cross.edge_map[local_e];
            keyed.push((partial_vertex_sum(g, &partial, v, e)?, v, e));
        }
        keyed.sort_unstable();
        for (_, _, e) in keyed {
            partial.set(e, next);
            next += 1;
        }

        traces.push(LevelTrace {
            component,
            level: i,
            cross,
            deeper,
            decomposition: dec,
        });
    }
    let f = partial
        .complete(0)
        .expect("intra, trail and σ edges cover every edge");
    Ok((f, traces))
}
