use crate::labeling::EdgeLabeling;

use super::{by_symmetry, ConstructError, Construction};

/// `S_n` with leaves `1..=n` on center `0`. Any injection works unless the
/// center sum `nk + n(n+1)/2` lands on a leaf label.
pub fn construct_star(n: usize, k: i64) -> Result<Construction, ConstructError> {
    if n < 2 {
        return Err(ConstructError::TooFewLeaves(n));
    }
    let len = n as i64;
    let center = len * k + len * (len + 1) / 2;
    if k < center && center <= k + len {
        return Ok(Construction::Infeasible);
    }
    Ok(Construction::Labeling(EdgeLabeling::new(
        k,
        (1..=len).map(|i| k + i).collect(),
    )))
}

fn positives(m: i64, k: i64) -> i64 {
    (k + m).clamp(0, m)
}

fn negatives(m: i64, k: i64) -> i64 {
    (-k - 1).clamp(0, m)
}

/// `S_{a,b}` in the layout of [`crate::families::double_star`]: edge `0` is
/// the bridge `vu`, edges `1..=a` the leaves of `v` and the rest the leaves
/// of `u`, where `a >= b` after normalizing.
///
/// Infeasible exactly for `S_{a,1}` with odd `a` at `k = -(a+3)/2` and for
/// `S_{2,1}` at `k` in `{-3, -2}`.
pub fn construct_double_star(a: usize, b: usize, k: i64) -> Result<Construction, ConstructError> {
    if a == 0 || b == 0 {
        return Err(ConstructError::BadParameters(format!(
            "double star needs leaves on both centers, got ({a}, {b})"
        )));
    }
    let (a, b) = (a.max(b), a.min(b));
    let m = a + b + 1;
    let mm = m as i64;
    Ok(by_symmetry(
        m,
        k,
        |k| positives(mm, k) >= negatives(mm, k),
        |k| match double_star_labels(a, b, k) {
            Some(labels) => Construction::Labeling(EdgeLabeling::new(k, labels)),
            None => Construction::Infeasible,
        },
    ))
}

/// Assumes `n_+ >= n_-`. Returns `None` when no labeling exists.
fn double_star_labels(a: usize, b: usize, k: i64) -> Option<Vec<i64>> {
    let m = (a + b + 1) as i64;
    let (np, nn) = (positives(m, k), negatives(m, k));
    let v_leaves: Vec<usize> = (1..=a).collect();
    let u_leaves: Vec<usize> = (a + 1..=a + b).collect();
    let mut labels = vec![0i64; a + b + 1];

    if nn == 0 {
        let mut next = k + m;
        for e in descending_order(&v_leaves, &u_leaves) {
            labels[e] = next;
            next -= 1;
        }
        return Some(labels);
    }

    if b == 1 {
        let rest = |labels: &mut Vec<i64>, skip: &[i64]| {
            let pool = (-nn..=np).filter(|x| !skip.contains(x));
            for (&e, x) in v_leaves.iter().zip(pool) {
                labels[e] = x;
            }
        };
        return match np - nn {
            0 => None,
            1 if a == 2 => None,
            1 => {
                labels[0] = -(nn - 1);
                labels[u_leaves[0]] = -nn;
                rest(&mut labels, &[-(nn - 1), -nn]);
                Some(labels)
            }
            _ => {
                labels[0] = np;
                labels[u_leaves[0]] = 0;
                rest(&mut labels, &[np, 0]);
                Some(labels)
            }
        };
    }

    match np - nn {
        0 => {
            let order = u_leaves.iter().chain(&v_leaves);
            for (&e, x) in order.zip((-nn..=np).filter(|&x| x != 0)) {
                labels[e] = x;
            }
        }
        1 => {
            // leave 2 or 3 leaves per side so that a + b - 2(n_- - 2) = 5 splits 3/2
            let u_keep = if b.is_multiple_of(2) { 2 } else { 3 };
            let v_keep = 5 - u_keep;
            let (u_pair, u_rest) = u_leaves.split_at(b - u_keep);
            let (v_pair, v_rest) = v_leaves.split_at(a - v_keep);
            for (j, pair) in u_pair.chunks(2).chain(v_pair.chunks(2)).enumerate() {
                labels[pair[0]] = j as i64 + 1;
                labels[pair[1]] = -(j as i64 + 1);
            }
            let (three, two) = if u_keep == 3 { (u_rest, v_rest) } else { (v_rest, u_rest) };
            for (&e, x) in three.iter().zip([np, nn, nn - 1]) {
                labels[e] = x;
            }
            for (&e, x) in two.iter().zip([-nn, -(nn - 1)]) {
                labels[e] = x;
            }
        }
        _ => {
            let mut u_free = u_leaves.as_slice();
            let mut v_free = v_leaves.as_slice();
            for j in 1..=nn {
                let side = if u_free.len() >= 2 { &mut u_free } else { &mut v_free };
                let free: &[usize] = side;
                labels[free[0]] = j;
                labels[free[1]] = -j;
                *side = &free[2..];
            }
            let remaining = std::iter::once(0).chain(nn + 1..=np);
            if u_free.is_empty() || v_free.is_empty() {
                let order = std::iter::once(0).chain(v_free.iter().copied()).chain(u_free.iter().copied());
                for (e, x) in order.zip(remaining) {
                    labels[e] = x;
                }
            } else {
                let (larger, smaller) = if v_free.len() >= u_free.len() {
                    (v_free, u_free)
                } else {
                    (u_free, v_free)
                };
                let pool: Vec<i64> = remaining.rev().collect();
                for (e, &x) in descending_order(larger, smaller).zip(&pool) {
                    labels[e] = x;
                }
            }
        }
    }
    Some(labels)
}

/// `vu`, then the two sides' leaves alternately starting with `first`, then
/// whatever is left of `first`.
fn descending_order<'a>(first: &'a [usize], second: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
    let paired = first.len().min(second.len());
    std::iter::once(0)
        .chain((0..paired).flat_map(move |i| [first[i], second[i]]))
        .chain(first[paired..].iter().copied())
        .chain(second[paired..].iter().copied())
}

/// `P_5'` in the layout of [`crate::families::p5_prime`]. Infeasible only at
/// `k = -3`.
pub fn construct_p5prime(k: i64) -> Result<Construction, ConstructError> {
    // canonical order 01, 12, 23, 25, 34
    Ok(by_symmetry(
        5,
        k,
        |k| k >= -3,
        |k| match k {
            -3 => Construction::Infeasible,
            -2 => Construction::Labeling(EdgeLabeling::new(-2, vec![3, 2, 1, -1, 0])),
            -1 => Construction::Labeling(EdgeLabeling::new(-1, vec![1, 3, 4, 0, 2])),
            _ => Construction::Labeling(EdgeLabeling::from_ranks(vec![2, 4, 5, 1, 3]).shifted(k)),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::labeling::{vertex_sums, verify_shifted, Verdict};

    fn check(g: &crate::graph::Graph, c: &Construction, k: i64) {
        if let Construction::Labeling(f) = c {
            assert_eq!(f.base(), k);
            assert_eq!(verify_shifted(g, f, k), Verdict::Accept, "k = {k}: {f:?}");
        }
    }

    #[test]
    fn star_examples() {
        for k in -6..=4 {
            let c = construct_star(4, k).unwrap();
            assert_eq!(c.is_infeasible(), k == -3 || k == -2, "k = {k}");
        }
        assert!(construct_star(3, -2).unwrap().is_infeasible());
        let f = construct_star(2, 0).unwrap().into_labeling().unwrap();
        assert_eq!(f.labels(), &[1, 2]);
        assert_eq!(vertex_sums(&families::star(2), &f).unwrap().0, vec![3, 1, 2]);
        assert_eq!(construct_star(1, 0), Err(ConstructError::TooFewLeaves(1)));
    }

    #[test]
    fn star_matches_closed_form() {
        for n in 2..=20usize {
            let g = families::star(n);
            let len = n as i64;
            for k in -3 * len..=2 * len {
                let excluded = if n % 2 == 0 {
                    k == -len / 2 - 1 || k == -len / 2
                } else {
                    k == -(len + 1) / 2
                };
                let c = construct_star(n, k).unwrap();
                assert_eq!(c.is_infeasible(), excluded, "n = {n}, k = {k}");
                check(&g, &c, k);
            }
        }
    }

    #[test]
    fn double_star_examples() {
        let f = construct_double_star(3, 2, 0).unwrap().into_labeling().unwrap();
        // vu, v1..v3, u1, u2
        assert_eq!(f.labels(), &[6, 5, 3, 1, 4, 2]);
        let sums = vertex_sums(&families::double_star(3, 2), &f).unwrap().0;
        assert_eq!(&sums[..2], &[15, 12]);
        assert!(construct_double_star(3, 1, -3).unwrap().is_infeasible());
        assert!(construct_double_star(2, 1, -2).unwrap().is_infeasible());
        assert!(construct_double_star(2, 1, -3).unwrap().is_infeasible());
        assert!(construct_double_star(1, 1, -2).unwrap().is_infeasible());
        assert!(matches!(
            construct_double_star(0, 3, 0),
            Err(ConstructError::BadParameters(_))
        ));
    }

    #[test]
    fn double_star_every_case() {
        for a in 1..=9usize {
            for b in 1..=a {
                let g = families::double_star(a, b);
                let m = (a + b + 1) as i64;
                for k in -3 * m..=2 * m {
                    let excluded = match (a, b) {
                        (2, 1) => k == -2 || k == -3,
                        (_, 1) if a % 2 == 1 => 2 * k == -(a as i64 + 3),
                        _ => false,
                    };
                    let c = construct_double_star(a, b, k).unwrap();
                    assert_eq!(c.is_infeasible(), excluded, "S_({a},{b}) k = {k}");
                    check(&g, &c, k);
                    assert_eq!(construct_double_star(b, a, k).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn p5prime_examples() {
        let g = families::p5_prime();
        let f = construct_p5prime(0).unwrap().into_labeling().unwrap();
        // path edges v1v2..v4v5 get 2, 4, 5, 3 and v0v3 gets 1
        assert_eq!(f.labels(), &[2, 4, 5, 1, 3]);
        assert!(construct_p5prime(-3).unwrap().is_infeasible());
        let f = construct_p5prime(-2).unwrap().into_labeling().unwrap();
        assert_eq!(f.labels(), &[3, 2, 1, -1, 0]);
        for k in -20..=20 {
            let c = construct_p5prime(k).unwrap();
            assert_eq!(c.is_infeasible(), k == -3);
            check(&g, &c, k);
        }
    }
}
