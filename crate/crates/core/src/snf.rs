//! Smith normal form of integer matrices.
//!
//! Only the diagonal is needed downstream (rank and invariant factors), so the
//! transformation matrices are not tracked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Diagonal of the Smith normal form: the nonzero invariant factors
/// `d_1 | d_2 | ... | d_r`, all positive. `r` is the rank of the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDiagonal {
    pub factors: Vec<BigInt>,
}

impl SmithDiagonal {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form of a dense `rows x cols` matrix given row-major.
///
/// Pivoting always picks an entry of smallest absolute value in the remaining
/// block, which keeps intermediate growth modest.
pub fn smith_normal_form(matrix: &[Vec<BigInt>]) -> SmithDiagonal {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_nonzero(&a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut changed = false;
            // clear column t below the pivot
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, p) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                        *x -= &q * p;
                    }
                }
                if !a[i][t].is_zero() {
                    // remainder is smaller than the pivot: promote it
                    a.swap(t, i);
                    changed = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a[t..].iter_mut() {
                        let p = row[t].clone();
                        row[j] -= &q * p;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, y) in top[t][t..].iter_mut().zip(&rest[0][t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    SmithDiagonal { factors }
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                let done = ax.is_one();
                best = Some((i, j, ax));
                if done {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        smith_normal_form(&m(rows)).factors.iter().map(|d| d.try_into().unwrap()).collect()
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(factors(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(factors(&[&[2], &[2]]), vec![2]);
        assert_eq!(factors(&[&[0, 0], &[0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[]), Vec::<i64>::new());
    }

    #[test]
    fn invariant_factors_divide_each_other() {
        let d = smith_normal_form(&m(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]));
        assert_eq!(d.factors, vec![BigInt::from(2), BigInt::from(2), BigInt::from(60)]);
        for w in d.factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        assert_eq!(d.torsion().len(), 3);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let d = smith_normal_form(&m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]));
        assert_eq!(d.rank(), 2);
    }
}
