//! Exact linear algebra over the rationals by fraction-free-enough Gaussian
//! elimination (pivots are exact rationals, so no precision is lost).

use num_traits::{One, Zero};

use super::{rat, ExactMathError, Rational, RationalFunction};

/// Determinant of a square integer matrix, computed exactly.
pub fn det_rational(a: &[Vec<i64>]) -> Result<Rational, ExactMathError> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(ExactMathError::DimensionMismatch(
            "determinant of non-square matrix".into(),
        ));
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Ok(Rational::zero()),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let v = &m[r][c] - &factor * &m[col][c];
                m[r][c] = v;
            }
        }
    }
    Ok(det)
}

/// Solves `A x = b` for an invertible square integer matrix `A` and a vector
/// of rational functions `b`.  All row operations are exact.
pub fn solve_linear(
    a: &[Vec<i64>],
    b: &[RationalFunction],
) -> Result<Vec<RationalFunction>, ExactMathError> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(ExactMathError::DimensionMismatch(format!(
            "system is {}x{} with rhs of length {}",
            n,
            a.first().map_or(0, |r| r.len()),
            b.len()
        )));
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let mut rhs: Vec<RationalFunction> = b.to_vec();

    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(ExactMathError::SingularMatrix)?;
        m.swap(pivot_row, col);
        rhs.swap(pivot_row, col);
        let pivot = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let v = &m[r][c] - &factor * &m[col][c];
                m[r][c] = v;
            }
            let delta = rhs[col].scale(&factor);
            rhs[r] = &rhs[r] - &delta;
        }
    }
    Ok((0..n)
        .map(|i| {
            let inv = Rational::one() / &m[i][i];
            rhs[i].scale(&inv)
        })
        .collect())
}

/// Solves `A x = b` over the rationals (used for coordinate extraction in
/// small systems).  Errors if `A` is singular.
pub fn solve_linear_rational(
    a: &[Vec<Rational>],
    b: &[Rational],
) -> Result<Vec<Rational>, ExactMathError> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(ExactMathError::DimensionMismatch(
            "square system required".into(),
        ));
    }
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut rhs: Vec<Rational> = b.to_vec();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(ExactMathError::SingularMatrix)?;
        m.swap(pivot_row, col);
        rhs.swap(pivot_row, col);
        let pivot = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let v = &m[r][c] - &factor * &m[col][c];
                m[r][c] = v;
            }
            let d = &rhs[r] - &factor * &rhs[col];
            rhs[r] = d;
        }
    }
    Ok((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

/// Rank of a rational matrix (not necessarily square).
pub fn rank(a: &[Vec<Rational>]) -> usize {
    if a.is_empty() {
        return 0;
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let pivot_row = match (rank..m.len()).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        m.swap(pivot_row, rank);
        let pivot = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..cols {
                let v = &m[r][c] - &factor * &m[rank][c];
                m[r][c] = v;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
