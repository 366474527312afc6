//! Small dense exact linear algebra: fraction-free determinants and
//! Gauss-Jordan elimination over a field of exact rationals.

use num_integer::Integer;
use num_traits::{Num, Signed};

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate value is a minor of the input, so the arithmetic
/// stays in `T` without rounding. Panics if the matrix is not square.
pub fn det_bareiss<T>(mut m: Vec<Vec<T>>) -> T
where
    T: Integer + Signed + Clone,
{
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return T::one();
    }
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Solves `a x = b` exactly. Returns `None` when `a` is singular.
pub fn solve<T>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>>
where
    T: Num + Clone,
{
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = T::one() / aug[col][col].clone();
        for v in aug[col][col..].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            let pivot_row = aug[col].clone();
            for (x, p) in aug[r].iter_mut().zip(pivot_row).skip(col) {
                *x = x.clone() - factor.clone() * p;
            }
        }
    }
    Some(aug.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<T>(a: &[Vec<T>]) -> Option<Vec<Vec<T>>>
where
    T: Num + Clone,
{
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<T> = (0..n)
            .map(|i| if i == j { T::one() } else { T::zero() })
            .collect();
        cols.push(solve(a, &e)?);
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect(),
    )
}
