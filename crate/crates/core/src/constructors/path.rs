use crate::labeling::EdgeLabeling;

use super::trees::{construct_double_star, construct_star};
use super::{by_symmetry, ConstructError, Construction};

/// Strongly antimagic labeling of `P_n` (`n >= 3`), edge `i` joining
/// vertices `i` and `i + 1`.
///
/// Odd `n`: `1, 3, 4, ..., n - 1, 2`. Even `n`: `1, n - 1, n - 2, ..., 2`.
pub fn construct_path_strong(n: usize) -> Result<EdgeLabeling, ConstructError> {
    Ok(EdgeLabeling::from_ranks(strong_labels(n)?))
}

fn strong_labels(n: usize) -> Result<Vec<i64>, ConstructError> {
    if n < 3 {
        return Err(ConstructError::PathTooShort(n));
    }
    let n = n as i64;
    // position i is the 1-based index of edge v_i v_{i+1}
    let labels = (1..n)
        .map(|i| match i {
            1 => 1,
            _ if n % 2 == 1 && i == n - 1 => 2,
            _ if n % 2 == 1 => i + 1,
            _ => n + 1 - i,
        })
        .collect();
    Ok(labels)
}

/// `k`-shifted-antimagic labeling of `P_n` for `n >= 6` and any `k`.
///
/// * `k >= 0`: the strong labeling shifted by `k`.
/// * `-n/2 <= k <= -3` or `k = -1`: with `j = |k|`, the edge `v_j v_{j+1}`
///   gets `0`, the prefix `v_1..v_j` the negated strong labeling on
///   `1..j-1` and the suffix `v_{j+1}..v_n` the strong labeling on
///   `1..n-j-1`. Prefix sums are negative and suffix sums positive.
/// * `k = -2`: a direct labeling on `{-1, 0, ..., n - 3}`.
/// * `k < -n/2`: negation of the labeling for `-(n + k)`.
pub fn construct_path_shifted(n: usize, k: i64) -> Result<EdgeLabeling, ConstructError> {
    if n < 6 {
        return Err(ConstructError::PathTooShort(n));
    }
    let len = n as i64;
    if 2 * k < -len {
        // -(m + k + 1) with m = n - 1
        return Ok(construct_path_shifted(n, -(len + k))?.negated());
    }
    let labels = match k {
        0.. => strong_labels(n)?.into_iter().map(|x| x + k).collect(),
        -2 => minus_two_labels(len),
        _ => {
            let j = (-k) as usize;
            let mut labels = Vec::with_capacity(n - 1);
            if j >= 2 {
                labels.extend(strong_labels(j)?.into_iter().map(|x| -x));
            }
            labels.push(0);
            labels.extend(strong_labels(n - j)?);
            labels
        }
    };
    Ok(EdgeLabeling::new(k, labels))
}

/// `P_n` for every `n >= 2` and `k`, reporting the excluded shifts of the
/// short paths as `Infeasible`.
pub fn construct_path(n: usize, k: i64) -> Result<Construction, ConstructError> {
    match n {
        0 | 1 => Err(ConstructError::PathTooShort(n)),
        2 => Ok(Construction::Infeasible),
        // P_3 is S_2 with the center in the middle
        3 => construct_star(2, k),
        4 => {
            // S_{1,1} lists vu, v_1 v, u_1 u
            let c = construct_double_star(1, 1, k)?;
            Ok(match c.into_labeling() {
                Some(f) => {
                    let l = f.labels();
                    Construction::Labeling(EdgeLabeling::new(k, vec![l[1], l[0], l[2]]))
                }
                None => Construction::Infeasible,
            })
        }
        5 => Ok(by_symmetry(
            4,
            k,
            |k| k >= -2,
            |k| match k {
                -2 => Construction::Infeasible,
                -1 => Construction::Labeling(EdgeLabeling::new(-1, vec![0, 1, 3, 2])),
                _ => Construction::Labeling(EdgeLabeling::from_ranks(vec![1, 3, 4, 2]).shifted(k)),
            },
        )),
        _ => construct_path_shifted(n, k).map(Construction::Labeling),
    }
}

fn minus_two_labels(n: i64) -> Vec<i64> {
    (1..n)
        .map(|i| {
            if n % 2 == 1 {
                match i {
                    1 => -1,
                    2 => 1,
                    3 => 0,
                    _ => i - 2,
                }
            } else {
                match i {
                    1 => 0,
                    2 => -1,
                    _ => n - i,
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::labeling::{is_strongly_antimagic, verify_shifted, vertex_sums, Verdict};

    fn sums(n: usize, f: &EdgeLabeling) -> Vec<i64> {
        vertex_sums(&families::path(n), f).unwrap().0
    }

    #[test]
    fn strong_examples() {
        let f = construct_path_strong(7).unwrap();
        assert_eq!(f.labels(), &[1, 3, 4, 5, 6, 2]);
        assert_eq!(sums(7, &f), vec![1, 4, 7, 9, 11, 8, 2]);

        let f = construct_path_strong(6).unwrap();
        assert_eq!(f.labels(), &[1, 5, 4, 3, 2]);
        assert_eq!(sums(6, &f), vec![1, 6, 9, 7, 5, 2]);

        assert_eq!(construct_path_strong(3).unwrap().labels(), &[1, 2]);
        assert_eq!(construct_path_strong(2), Err(ConstructError::PathTooShort(2)));
    }

    #[test]
    fn strong_for_small_and_medium_n() {
        for n in 3..=50 {
            let f = construct_path_strong(n).unwrap();
            assert_eq!(
                is_strongly_antimagic(&families::path(n), &f),
                Ok(Verdict::Accept),
                "n = {n}"
            );
        }
    }

    #[test]
    fn split_construction_example() {
        let f = construct_path_shifted(8, -3).unwrap();
        assert_eq!(f.labels(), &[-1, -2, 0, 1, 3, 4, 2]);
        assert_eq!(sums(8, &f), vec![-1, -3, -2, 1, 4, 7, 6, 2]);
        assert!(verify_shifted(&families::path(8), &f, -3).is_accept());
    }

    #[test]
    fn minus_one_puts_zero_on_first_edge() {
        let f = construct_path_shifted(6, -1).unwrap();
        assert_eq!(f.labels(), &[0, 1, 3, 4, 2]);
        assert!(verify_shifted(&families::path(6), &f, -1).is_accept());
    }

    #[test]
    fn minus_two_odd_and_even() {
        let f = construct_path_shifted(7, -2).unwrap();
        assert_eq!(f.labels(), &[-1, 1, 0, 2, 3, 4]);
        assert_eq!(sums(7, &f), vec![-1, 0, 1, 2, 5, 7, 4]);
        assert!(verify_shifted(&families::path(7), &f, -2).is_accept());

        let f = construct_path_shifted(6, -2).unwrap();
        assert_eq!(f.labels(), &[0, -1, 3, 2, 1]);
        // 0, -1, n-4, 2n-7, ..., 3, 1
        assert_eq!(sums(6, &f), vec![0, -1, 2, 5, 3, 1]);
        assert!(verify_shifted(&families::path(6), &f, -2).is_accept());
    }

    #[test]
    fn zero_is_strong_labeling() {
        assert_eq!(
            construct_path_shifted(6, 0).unwrap(),
            construct_path_strong(6).unwrap()
        );
    }

    #[test]
    fn mirrored_shifts() {
        // -(n + k) for n = 8: k = -5 mirrors -3, k = -8 mirrors 0
        let f = construct_path_shifted(8, -5).unwrap();
        assert_eq!(f.base(), -5);
        assert!(verify_shifted(&families::path(8), &f, -5).is_accept());
        let f = construct_path_shifted(8, -8).unwrap();
        assert!(verify_shifted(&families::path(8), &f, -8).is_accept());
    }

    #[test]
    fn short_paths_follow_closed_form() {
        let excluded = |n: usize, k: i64| match n {
            2 => true,
            3 => k == -2 || k == -1,
            4 => k == -2,
            5 => k == -3 || k == -2,
            _ => false,
        };
        for n in 2..=8 {
            let g = families::path(n);
            for k in -20..=20 {
                let c = construct_path(n, k).unwrap();
                assert_eq!(c.is_infeasible(), excluded(n, k), "n = {n}, k = {k}");
                if let Some(f) = c.labeling() {
                    assert_eq!(f.base(), k);
                    assert_eq!(verify_shifted(&g, f, k), Verdict::Accept, "n = {n}, k = {k}");
                }
            }
        }
        assert_eq!(construct_path(1, 0), Err(ConstructError::PathTooShort(1)));
    }

    #[test]
    fn every_shift_for_moderate_paths() {
        for n in 6..=14 {
            let g = families::path(n);
            for k in -3 * n as i64..=3 * n as i64 {
                let f = construct_path_shifted(n, k).unwrap();
                assert_eq!(f.base(), k);
                assert_eq!(verify_shifted(&g, &f, k), Verdict::Accept, "n = {n}, k = {k}");
            }
        }
        assert_eq!(construct_path_shifted(5, 0), Err(ConstructError::PathTooShort(5)));
    }
}
