//! Generators for the named graphs the constructors and spectra talk about.
//!
//! Each generator fixes a vertex numbering that the matching constructor
//! relies on; the layouts are documented per function.

use crate::graph::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("generator emits a simple graph")
}

/// `P_n` as `0 - 1 - ... - (n-1)`; edge `i` joins `i` and `i + 1`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star `S_n`: center `0`, leaves `1..=n`; edge `i` is `{0, i + 1}`.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Double star `S_{a,b}` with the larger side first.
///
/// Center `v = 0` carries `max(a, b)` leaves `2..`, center `u = 1` carries
/// `min(a, b)` leaves after them. Edge `0` is the bridge `vu`.
pub fn double_star(a: usize, b: usize) -> Graph {
    let (a, b) = (a.max(b), a.min(b));
    let v_leaves = (2..2 + a).map(|x| (0, x));
    let u_leaves = (2 + a..2 + a + b).map(|x| (1, x));
    build(
        a + b + 2,
        std::iter::once((0, 1)).chain(v_leaves).chain(u_leaves),
    )
}

/// `c` disjoint copies of `P_3`; copy `i` is `3i - (3i+1) - (3i+2)` with the
/// center `3i + 1`.
pub fn copies_of_p3(c: usize) -> Graph {
    disjoint_copies(&path(3), c)
}

/// `2P_4`: `0-1-2-3` and `4-5-6-7`.
pub fn two_p4() -> Graph {
    disjoint_copies(&path(4), 2)
}

/// `2S_3`: centers `0` and `4` with leaves `1..=3` and `5..=7`.
pub fn two_s3() -> Graph {
    disjoint_copies(&star(3), 2)
}

/// `P_5'`: the path `0-1-2-3-4` with a pendant vertex `5` on the center `2`.
///
/// Canonical edge order: `01, 12, 23, 25, 34`.
pub fn p5_prime() -> Graph {
    build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// The `d`-dimensional hypercube on bit strings.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    build(
        n,
        (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)),
    )
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// Disjoint union of `copies` copies of `g`, copy `j` shifted by `j * n`.
pub fn disjoint_copies(g: &Graph, copies: usize) -> Graph {
    let n = g.vertex_count();
    build(
        n * copies,
        (0..copies).flat_map(|j| g.edges().iter().map(move |&(u, v)| (u + j * n, v + j * n))),
    )
}

/// Disjoint union `first + second`, `second` shifted past `first`.
pub fn disjoint_union(first: &Graph, second: &Graph) -> Graph {
    let off = first.vertex_count();
    build(
        off + second.vertex_count(),
        first
            .edges()
            .iter()
            .copied()
            .chain(second.edges().iter().map(|&(u, v)| (u + off, v + off))),
    )
}

/// Tree from a Prüfer sequence over `0..seq.len() + 2`.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        assert!(x < n, "Prüfer entry {x} out of range");
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    build(n, edges)
}

/// The families whose shifted spectra are known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path { n: usize },
    Star { n: usize },
    DoubleStar { a: usize, b: usize },
    Cp3 { c: usize },
    TwoP4,
    TwoS3,
    P5Prime,
}

impl Family {
    pub fn graph(&self) -> Graph {
        match *self {
            Family::Path { n } => path(n),
            Family::Star { n } => star(n),
            Family::DoubleStar { a, b } => double_star(a, b),
            Family::Cp3 { c } => copies_of_p3(c),
            Family::TwoP4 => two_p4(),
            Family::TwoS3 => two_s3(),
            Family::P5Prime => p5_prime(),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "P{n}"),
            Family::Star { n } => write!(f, "S{n}"),
            Family::DoubleStar { a, b } => write!(f, "S({a},{b})"),
            Family::Cp3 { c } => write!(f, "{c}P3"),
            Family::TwoP4 => write!(f, "2P4"),
            Family::TwoS3 => write!(f, "2S3"),
            Family::P5Prime => write!(f, "P5'"),
        }
    }
}
