//! Dense exact linear algebra on small matrices.

use thiserror::Error;

use crate::scalar::ExactScalar;

pub type Matrix = Vec<Vec<ExactScalar>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("system is inconsistent")]
    Inconsistent,
    #[error("system has a {0}-dimensional solution space")]
    Underdetermined(usize),
    #[error("matrix is singular")]
    Singular,
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { ExactScalar::one() } else { ExactScalar::zero() }).collect())
        .collect()
}

pub fn from_integers(rows: &[&[i64]]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&v| ExactScalar::from_integer(v)).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(ExactScalar::zero(), |acc, k| &acc + &(&row[k] * &b[k][j])))
                .collect()
        })
        .collect()
}

/// Row echelon form in place; returns pivot columns.
fn echelon(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn determinant(m: &Matrix) -> ExactScalar {
    let n = m.len();
    let mut a = m.clone();
    let mut det = ExactScalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return ExactScalar::zero() };
        if p != c {
            a.swap(p, c);
            det = -&det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    det
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    echelon(&mut a).len()
}

/// Basis of the right kernel.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<ExactScalar>> {
    let mut a = m.clone();
    let pivots = echelon(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ExactScalar::zero(); cols];
            v[f] = ExactScalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[r][f];
            }
            v
        })
        .collect()
}

/// Solves `A x = b` for a system that must have exactly one solution;
/// extra rows are checked for consistency.
pub fn solve(a: &Matrix, b: &[ExactScalar]) -> Result<Vec<ExactScalar>, LinalgError> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.contains(&cols) {
        return Err(LinalgError::Inconsistent);
    }
    if pivots.len() < cols {
        return Err(LinalgError::Underdetermined(cols - pivots.len()));
    }
    Ok((0..cols).map(|r| aug[r][cols].clone()).collect())
}

pub fn inverse(m: &Matrix) -> Result<Matrix, LinalgError> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(LinalgError::Singular);
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}
