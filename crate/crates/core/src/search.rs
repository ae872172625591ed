//! Pruned exhaustive search over label permutations.

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::labeling::EdgeLabeling;

/// Largest edge count searched by default (`10!` leaves before pruning).
pub const DEFAULT_BUDGET: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph has {m} edges, above the search budget of {budget}")]
    BudgetExceeded { m: usize, budget: usize },
}

/// Which vertex pairs must get distinct sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// All pairs.
    Antimagic,
    /// Pairs of equal degree.
    Sdds,
    /// All pairs, and sums strictly increasing with degree.
    Strong,
}

/// Some labeling of `g` with labels `base+1..=base+m` satisfying `mode`, or
/// `None` once every permutation has been ruled out.
pub fn search_labeling(
    g: &Graph,
    base: i64,
    mode: SearchMode,
    budget: usize,
) -> Result<Option<EdgeLabeling>, SearchError> {
    let m = g.edge_count();
    if m > budget {
        return Err(SearchError::BudgetExceeded { m, budget });
    }
    let mut search = Search::new(g, base, mode);
    let found = search.prefinalized_ok() && search.extend(0);
    Ok(found.then(|| {
        let mut labels = vec![0; m];
        for (step, &e) in search.order.iter().enumerate() {
            labels[e] = search.assigned[step];
        }
        EdgeLabeling::new(base, labels)
    }))
}

/// A `k`-shifted-antimagic labeling, if one exists.
pub fn find_shifted(g: &Graph, k: i64, budget: usize) -> Result<Option<EdgeLabeling>, SearchError> {
    search_labeling(g, k, SearchMode::Antimagic, budget)
}

pub fn find_sdds(g: &Graph, budget: usize) -> Result<Option<EdgeLabeling>, SearchError> {
    search_labeling(g, 0, SearchMode::Sdds, budget)
}

pub fn find_strong(g: &Graph, budget: usize) -> Result<Option<EdgeLabeling>, SearchError> {
    search_labeling(g, 0, SearchMode::Strong, budget)
}

/// Edges in the order they get labeled: each step takes the unlabeled edge
/// that completes the most vertices, ties by canonical order.
pub fn finalizing_order(g: &Graph) -> Vec<EdgeId> {
    let m = g.edge_count();
    let mut open: Vec<usize> = g.degrees();
    let mut done = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let completes = |e: EdgeId| {
            let (u, v) = g.edge(e);
            usize::from(open[u] == 1) + usize::from(open[v] == 1)
        };
        let e = (0..m)
            .filter(|&e| !done[e])
            .max_by_key(|&e| (completes(e), std::cmp::Reverse(e)))
            .expect("an unlabeled edge remains");
        done[e] = true;
        let (u, v) = g.edge(e);
        open[u] -= 1;
        open[v] -= 1;
        order.push(e);
    }
    order
}

struct Search<'g> {
    g: &'g Graph,
    base: i64,
    mode: SearchMode,
    order: Vec<EdgeId>,
    /// Vertices whose last edge is `order[step]`.
    finishing: Vec<Vec<Vertex>>,
    assigned: Vec<i64>,
    used: Vec<bool>,
    sums: Vec<i64>,
    finalized: Vec<Vertex>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, base: i64, mode: SearchMode) -> Self {
        let m = g.edge_count();
        let order = finalizing_order(g);
        let mut step_of = vec![0; m];
        for (step, &e) in order.iter().enumerate() {
            step_of[e] = step;
        }
        let mut finishing = vec![Vec::new(); m];
        let mut finalized = Vec::new();
        for v in 0..g.vertex_count() {
            match g.incident(v).iter().map(|&(_, e)| step_of[e]).max() {
                Some(last) => finishing[last].push(v),
                None => finalized.push(v),
            }
        }
        Search {
            g,
            base,
            mode,
            order,
            finishing,
            assigned: vec![0; m],
            used: vec![false; m],
            sums: vec![0; g.vertex_count()],
            finalized,
        }
    }

    fn conflicts(&self, u: Vertex, v: Vertex) -> bool {
        let (su, sv) = (self.sums[u], self.sums[v]);
        let (du, dv) = (self.g.degree(u), self.g.degree(v));
        match self.mode {
            SearchMode::Antimagic => su == sv,
            SearchMode::Sdds => du == dv && su == sv,
            SearchMode::Strong => su == sv || (du > dv && su < sv) || (dv > du && sv < su),
        }
    }

    /// Isolated vertices are final from the start.
    fn prefinalized_ok(&self) -> bool {
        let f = &self.finalized;
        (0..f.len()).all(|i| (0..i).all(|j| !self.conflicts(f[i], f[j])))
    }

    fn extend(&mut self, step: usize) -> bool {
        if step == self.order.len() {
            return true;
        }
        let e = self.order[step];
        let (u, v) = self.g.edge(e);
        for slot in 0..self.used.len() {
            if self.used[slot] {
                continue;
            }
            let x = self.base + 1 + slot as i64;
            self.used[slot] = true;
            self.assigned[step] = x;
            self.sums[u] += x;
            self.sums[v] += x;

            let before = self.finalized.len();
            let mut ok = true;
            for i in 0..self.finishing[step].len() {
                let w = self.finishing[step][i];
                if self.finalized.iter().any(|&z| self.conflicts(w, z)) {
                    ok = false;
                    break;
                }
                self.finalized.push(w);
            }
            if ok && self.extend(step + 1) {
                return true;
            }
            self.finalized.truncate(before);
            self.sums[u] -= x;
            self.sums[v] -= x;
            self.used[slot] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::labeling::{is_sdds, is_strongly_antimagic, verify_shifted, Verdict};

    #[test]
    fn small_paths() {
        let p5 = families::path(5);
        assert_eq!(find_shifted(&p5, -2, DEFAULT_BUDGET).unwrap(), None);
        assert_eq!(find_shifted(&p5, -3, DEFAULT_BUDGET).unwrap(), None);
        for k in [-6, -5, -4, -1, 0, 3] {
            let f = find_shifted(&p5, k, DEFAULT_BUDGET).unwrap().unwrap();
            assert!(verify_shifted(&p5, &f, k).is_accept());
        }
        for k in -5..5 {
            assert_eq!(find_shifted(&families::path(2), k, DEFAULT_BUDGET).unwrap(), None);
        }
    }

    #[test]
    fn sdds_and_strong() {
        let g = families::petersen();
        assert_eq!(
            search_labeling(&g, 0, SearchMode::Sdds, 10),
            Err(SearchError::BudgetExceeded { m: 15, budget: 10 })
        );
        let s4 = families::star(4);
        let f = find_sdds(&s4, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(is_sdds(&s4, &f), Ok(Verdict::Accept));
        let f = find_strong(&families::path(6), DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(is_strongly_antimagic(&families::path(6), &f), Ok(Verdict::Accept));
        assert_eq!(find_sdds(&families::path(2), DEFAULT_BUDGET).unwrap(), None);
    }

    #[test]
    fn two_isolated_vertices_never_antimagic() {
        let g = families::disjoint_union(&families::path(3), &Graph::empty(2));
        assert_eq!(find_shifted(&g, 5, DEFAULT_BUDGET).unwrap(), None);
        assert!(find_sdds(&g, DEFAULT_BUDGET).unwrap().is_none());
    }

    #[test]
    fn order_finishes_leaves_first() {
        // star edges each finish a leaf; the last also finishes the center
        assert_eq!(finalizing_order(&families::star(3)), vec![0, 1, 2]);
        let order = finalizing_order(&families::path(5));
        assert_eq!(order[0], 0);
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3]);
    }
}
