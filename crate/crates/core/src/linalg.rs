//! Exact Gauss–Jordan elimination over a [`Scalar`] field.

use crate::exactnum::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
/// Pivots are taken at the first nonzero entry, scanning columns left to
/// right, so the result is canonical for the row space.
pub fn rref<S: Scalar>(rows: &mut [Vec<S>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = S::one() / rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(pv));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Outcome of solving `A·x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<S> {
    /// Consistent; `particular` sets every free variable to zero and
    /// `nullspace` spans the homogeneous solutions.
    Consistent {
        particular: Vec<S>,
        nullspace: Vec<Vec<S>>,
        rank: usize,
    },
    Inconsistent {
        rank: usize,
    },
}

impl<S> Solution<S> {
    pub fn unique(&self) -> Option<&Vec<S>> {
        match self {
            Solution::Consistent {
                particular,
                nullspace,
                ..
            } if nullspace.is_empty() => Some(particular),
            _ => None,
        }
    }
}

/// Solves `A·x = b` exactly; `a` has one row per equation.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S], nvars: usize) -> Solution<S> {
    let mut rows: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.resize(nvars, S::zero());
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, nvars + 1);
    if pivots.last() == Some(&nvars) {
        return Solution::Inconsistent {
            rank: pivots.len() - 1,
        };
    }
    let mut particular = vec![S::zero(); nvars];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = rows[r][nvars].clone();
    }
    let nullspace = kernel_from_rref(&rows, &pivots, nvars);
    Solution::Consistent {
        particular,
        nullspace,
        rank: pivots.len(),
    }
}

fn kernel_from_rref<S: Scalar>(rows: &[Vec<S>], pivots: &[usize], nvars: usize) -> Vec<Vec<S>> {
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); nvars];
            v[f] = S::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -rows[r][f].clone();
            }
            v
        })
        .collect()
}

/// Basis of `{x : A·x = 0}` in reduced echelon form: each vector has a 1 at
/// its first nonzero position and zeros at the leading positions of the
/// others.
pub fn nullspace<S: Scalar>(a: &[Vec<S>], nvars: usize) -> Vec<Vec<S>> {
    let mut rows: Vec<Vec<S>> = a.to_vec();
    let pivots = rref(&mut rows, nvars);
    let mut basis = kernel_from_rref(&rows, &pivots, nvars);
    rref(&mut basis, nvars);
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn unique_solution() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let sol = solve(&a, &[int(3), int(5)], 2);
        assert_eq!(sol.unique().unwrap(), &vec![rat(4, 5), rat(7, 5)]);
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(matches!(
            solve(&a, &[int(1), int(3)], 2),
            Solution::Inconsistent { rank: 1 }
        ));
        match solve(&a, &[int(1), int(2)], 2) {
            Solution::Consistent {
                particular,
                nullspace,
                rank,
            } => {
                assert_eq!(rank, 1);
                assert_eq!(particular, vec![int(1), int(0)]);
                assert_eq!(nullspace, vec![vec![int(-1), int(1)]]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nullspace_is_echelon() {
        let a = m(&[&[1, -1, 0, 0]]);
        let k = nullspace(&a, 4);
        assert_eq!(
            k,
            vec![
                vec![int(1), int(1), int(0), int(0)],
                vec![int(0), int(0), int(1), int(0)],
                vec![int(0), int(0), int(0), int(1)],
            ]
        );
    }
}
