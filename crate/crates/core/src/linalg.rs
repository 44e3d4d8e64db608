//! Exact rational linear algebra: rank and convex-combination feasibility.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Rank of a list of row vectors.
pub(crate) fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Rational::one() / &rows[rank][col];
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Finds weights `w >= 0` with `sum w = 1` and `sum w_k points[k] = target`,
/// by an exact phase-one simplex with Bland's rule. Returns `None` when no
/// such weights exist.
pub(crate) fn convex_combination(points: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = points.len();
    if k == 0 {
        return None;
    }
    // Constraint rows: one per coordinate plus the normalization row.
    let mut a: Vec<Vec<Rational>> = (0..target.len()).map(|r| points.iter().map(|p| p[r].clone()).collect()).collect();
    let mut b: Vec<Rational> = target.to_vec();
    a.push(vec![Rational::one(); k]);
    b.push(Rational::one());
    for (row, rhs) in a.iter_mut().zip(b.iter_mut()) {
        if rhs.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            *rhs = -rhs.clone();
        }
    }
    let rows = a.len();
    let cols = k + rows;
    // Tableau with artificial variables k..k+rows forming the initial basis.
    let mut tab: Vec<Vec<Rational>> = a
        .into_iter()
        .zip(b)
        .enumerate()
        .map(|(r, (mut row, rhs))| {
            row.extend((0..rows).map(|s| if s == r { Rational::one() } else { Rational::zero() }));
            row.push(rhs);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..cols).collect();
    // Reduced costs of the phase-one objective sum(artificials).
    let mut cost = vec![Rational::zero(); cols + 1];
    for row in &tab {
        for (c, v) in cost.iter_mut().zip(row) {
            *c -= v;
        }
    }
    for c in cost.iter_mut().take(cols).skip(k) {
        *c = Rational::zero();
    }
    while let Some(enter) = (0..cols).find(|&c| cost[c].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (r, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (pr, _) = leave?;
        let inv = Rational::one() / &tab[pr][enter];
        for v in tab[pr].iter_mut() {
            *v *= &inv;
        }
        let pivot = tab[pr].clone();
        for (r, row) in tab.iter_mut().enumerate() {
            if r != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (v, p) in cost.iter_mut().zip(&pivot) {
                *v -= &f * p;
            }
        }
        basis[pr] = enter;
    }
    if !cost[cols].is_zero() {
        return None;
    }
    let mut weights = vec![Rational::zero(); k];
    for (r, &var) in basis.iter().enumerate() {
        if var < k {
            weights[var] = tab[r][cols].clone();
        }
    }
    Some(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(rank(vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 0])]), 2);
        assert_eq!(rank(vec![v(&[0, 0])]), 0);
        assert_eq!(rank(Vec::new()), 0);
    }

    #[test]
    fn convex_combinations() {
        let square = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        let w = convex_combination(&square, &[ratio(1, 2), ratio(1, 3)]).unwrap();
        assert!(w.iter().all(|x| !x.is_negative()));
        let sum: Rational = w.iter().sum();
        assert_eq!(sum, int(1));
        assert!(convex_combination(&square, &[int(2), int(0)]).is_none());
        assert!(convex_combination(&square[1..], &v(&[0, 0])).is_none());
        assert!(convex_combination(&[], &v(&[0])).is_none());
        assert!(convex_combination(&square, &[int(-1), int(0)]).is_none());
    }
}
