use crate::graph::Graph;
use crate::labeling::EdgeLabeling;

use super::{by_symmetry, ConstructError, Construction};

/// `cP_3` in the layout of [`crate::families::copies_of_p3`] for
/// `k >= ⌊c/2⌋`. Copy `i` gets a pair with the smaller label on `u_i v_i`.
///
/// At `k = ⌊c/2⌋` the labeling is strongly antimagic, so larger `k` are plain
/// shifts.
pub fn construct_cp3(c: usize, k: i64) -> Result<EdgeLabeling, ConstructError> {
    if c == 0 {
        return Err(ConstructError::BadParameters("cP3 needs c >= 1".into()));
    }
    let l = (c / 2) as i64;
    if k < l {
        return Err(ConstructError::KBelowThreshold { k, min: l });
    }
    let pairs: Vec<(i64, i64)> = if c % 2 == 1 {
        (0..=l)
            .map(|j| (l + 1 + 2 * j, 4 * l + 2 - j))
            .chain((0..l).map(|j| (l + 2 + 2 * j, 5 * l + 2 - j)))
            .collect()
    } else {
        (0..l)
            .map(|j| (l + 1 + 2 * j, 4 * l - j))
            .chain((0..l).map(|j| (l + 2 + 2 * j, 5 * l - j)))
            .collect()
    };
    let labels = pairs.into_iter().flat_map(|(lo, hi)| [lo, hi]).collect();
    Ok(EdgeLabeling::new(l, labels).shifted(k - l))
}

/// `2P_4` in the layout of [`crate::families::two_p4`]. Infeasible exactly
/// at `k` in `{-5, -2}`.
pub fn construct_2p4(k: i64) -> Construction {
    by_symmetry(
        6,
        k,
        |k| k >= -3,
        |k| match k {
            -2 => Construction::Infeasible,
            -3 => Construction::Labeling(EdgeLabeling::new(-3, vec![-2, -1, 0, 2, 3, 1])),
            _ => Construction::Labeling(EdgeLabeling::new(-1, vec![0, 4, 1, 2, 5, 3]).shifted(k + 1)),
        },
    )
}

/// `2S_3` in the layout of [`crate::families::two_s3`]. Infeasible exactly
/// at `k` in `{-5, -2}`.
pub fn construct_2s3(k: i64) -> Construction {
    by_symmetry(
        6,
        k,
        |k| k >= -3,
        |k| match k {
            -2 => Construction::Infeasible,
            -3 => Construction::Labeling(EdgeLabeling::new(-3, vec![-2, -1, 0, 1, 2, 3])),
            _ => Construction::Labeling(EdgeLabeling::new(
                k,
                [1, 3, 6, 2, 4, 5].iter().map(|x| k + x).collect(),
            )),
        },
    )
}

/// Smallest `c > m` with `(1+m+2c)(m+2c) < (1+m+5c)(c-m)`, `m = |E(G)|`.
/// For this `c` the graph `G + cP_3` is not antimagic.
pub fn p3_threshold(g: &Graph) -> u64 {
    let m = g.edge_count() as i128;
    let holds = |c: i128| (1 + m + 2 * c) * (m + 2 * c) < (1 + m + 5 * c) * (c - m);
    let mut c = m + 1;
    while !holds(c) {
        c += 1;
    }
    c as u64
}
