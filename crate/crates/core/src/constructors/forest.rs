use crate::graph::Graph;
use crate::labeling::{partial_vertex_sum, EdgeLabeling, PartialLabeling};

use super::{has_k2_component, label_components, ConstructError};

/// SDDS labeling of a forest without `K_2` components.
///
/// Each tree is rooted at its lowest-id maximum-degree vertex and labeled
/// from the deepest level upward: the parent edges of level `i` take the
/// next block of labels, ordered by the partial sums their children already
/// contribute (ties by vertex id).
pub fn construct_forest_sdds(g: &Graph) -> Result<EdgeLabeling, ConstructError> {
    if !g.is_forest() {
        return Err(ConstructError::NotForest);
    }
    if has_k2_component(g) {
        return Err(ConstructError::HasK2Component);
    }
    let isolated = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).count();
    if isolated > 1 {
        return Err(ConstructError::IsolatedVertices(isolated));
    }
    label_components(g, label_tree)
}

fn label_tree(tree: &Graph) -> Result<EdgeLabeling, ConstructError> {
    let root = tree.default_root().expect("component is non-empty");
    let levels = tree.level_partition(root)?;
    let mut partial = PartialLabeling::new(tree.edge_count());
    let mut next = 1i64;
    for i in (1..=levels.depth()).rev() {
        let mut keyed = Vec::with_capacity(levels.level(i).len());
        for &v in levels.level(i) {
            let parent_edge = tree
                .incident(v)
                .iter()
                .find(|&&(w, _)| levels.level_of(w) == Some(i - 1))
                .map(|&(_, e)| e)
                .expect("every non-root vertex has a BFS parent");
            let key = partial_vertex_sum(tree, &partial, v, parent_edge)?;
            keyed.push((key, v, parent_edge));
        }
        keyed.sort_unstable();
        for (_, _, e) in keyed {
            partial.set(e, next);
            next += 1;
        }
    }
    Ok(partial
        .complete(0)
        .expect("every tree edge is some vertex's parent edge"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::labeling::{is_sdds, sdds_shift_threshold, verify_shifted, Verdict};

    #[test]
    fn star_gets_ascending_labels() {
        let s3 = families::star(3);
        let f = construct_forest_sdds(&s3).unwrap();
        assert_eq!(f.labels(), &[1, 2, 3]);
        assert_eq!(is_sdds(&s3, &f), Ok(Verdict::Accept));
    }

    #[test]
    fn p5_is_sdds() {
        let p5 = families::path(5);
        let f = construct_forest_sdds(&p5).unwrap();
        assert_eq!(is_sdds(&p5, &f), Ok(Verdict::Accept));
        let t = sdds_shift_threshold(&p5).unwrap();
        assert!(verify_shifted(&p5, &f.shifted(t), t).is_accept());
    }

    #[test]
    fn p5_labels_follow_levels() {
        // root 1; levels {1}, {0,2}, {3}, {4}
        let f = construct_forest_sdds(&families::path(5)).unwrap();
        // edge 34 first, then 23, then 01 (partial 0) before 12 (partial 2)
        assert_eq!(f.labels(), &[3, 4, 2, 1]);
    }

    #[test]
    fn rejections() {
        assert_eq!(
            construct_forest_sdds(&families::path(2)),
            Err(ConstructError::HasK2Component)
        );
        assert_eq!(
            construct_forest_sdds(&families::cycle(4)),
            Err(ConstructError::NotForest)
        );
        let two_isolated = families::disjoint_union(&families::path(3), &Graph::empty(2));
        assert_eq!(
            construct_forest_sdds(&two_isolated),
            Err(ConstructError::IsolatedVertices(2))
        );
    }

    #[test]
    fn forest_with_one_isolated_vertex() {
        let g = families::disjoint_union(&families::copies_of_p3(3), &Graph::empty(1));
        let f = construct_forest_sdds(&g).unwrap();
        assert_eq!(is_sdds(&g, &f), Ok(Verdict::Accept));
    }

    #[test]
    fn disjoint_components_use_stacked_blocks() {
        let g = families::disjoint_union(&families::star(3), &families::path(4));
        let f = construct_forest_sdds(&g).unwrap();
        assert_eq!(&f.labels()[..3], &[1, 2, 3]);
        let mut tail = f.labels()[3..].to_vec();
        tail.sort_unstable();
        assert_eq!(tail, vec![4, 5, 6]);
        assert_eq!(is_sdds(&g, &f), Ok(Verdict::Accept));
    }
}
