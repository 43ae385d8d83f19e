//! Row reduction, kernels and small solvers over an exact field.
//!
//! Vectors are rows throughout the crate; a matrix is a `Vec` of rows of
//! equal length.

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("row {row} has length {got}, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
}

pub fn zero_vector<F: Field>(field: &F, len: usize) -> Vec<F::Elem> {
    vec![field.zero(); len]
}

pub fn is_zero_vector<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

pub fn add_vectors<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub fn scale_vector<F: Field>(field: &F, c: &F::Elem, v: &[F::Elem]) -> Vec<F::Elem> {
    v.iter().map(|x| field.mul(c, x)).collect()
}

/// v += c * w, in place.
pub fn add_scaled<F: Field>(field: &F, v: &mut [F::Elem], c: &F::Elem, w: &[F::Elem]) {
    debug_assert_eq!(v.len(), w.len());
    for (x, y) in v.iter_mut().zip(w) {
        *x = field.add(x, &field.mul(c, y));
    }
}

/// Linear combination `sum coeffs[i] * rows[i]`.
pub fn combine<F: Field>(
    field: &F,
    coeffs: &[F::Elem],
    rows: &[Vec<F::Elem>],
    width: usize,
) -> Vec<F::Elem> {
    debug_assert_eq!(coeffs.len(), rows.len());
    let mut out = zero_vector(field, width);
    for (c, row) in coeffs.iter().zip(rows) {
        if !field.is_zero(c) {
            add_scaled(field, &mut out, c, row);
        }
    }
    out
}

/// Reduced row echelon form. Returns `(rref_rows, rank)`; zero rows are
/// dropped, pivots are 1 with their column zero elsewhere, and pivot
/// columns strictly increase. The RREF of a given row space is unique.
pub fn reduce<F: Field>(
    field: &F,
    rows: &[Vec<F::Elem>],
) -> Result<(Vec<Vec<F::Elem>>, usize), LinAlgError> {
    let width = match rows.first() {
        Some(r) => r.len(),
        None => return Ok((Vec::new(), 0)),
    };
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(LinAlgError::RaggedRows {
                row: i,
                expected: width,
                got: r.len(),
            });
        }
    }
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let mut pivot_row = 0usize;
    for col in 0..width {
        let Some(src) = (pivot_row..m.len()).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv = field
            .inv(&m[pivot_row][col])
            .expect("pivot entry is nonzero");
        m[pivot_row] = scale_vector(field, &inv, &m[pivot_row]);
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !field.is_zero(&row[col]) {
                let c = field.neg(&row[col]);
                add_scaled(field, row, &c, &pivot);
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    Ok((m, pivot_row))
}

/// Pivot columns of RREF rows.
pub fn pivot_columns<F: Field>(field: &F, rref: &[Vec<F::Elem>]) -> Vec<usize> {
    rref.iter()
        .map(|row| {
            row.iter()
                .position(|x| !field.is_zero(x))
                .expect("RREF rows are nonzero")
        })
        .collect()
}

/// Canonical basis of `{x in F^width : A x = 0}` where the rows of
/// `constraints` are the equations. Returned rows are in RREF.
pub fn kernel<F: Field>(field: &F, constraints: &[Vec<F::Elem>], width: usize) -> Vec<Vec<F::Elem>> {
    debug_assert!(constraints.iter().all(|r| r.len() == width));
    let (rref, _) = reduce(field, constraints).expect("equal-length constraint rows");
    let pivots = pivot_columns(field, &rref);
    let mut basis = Vec::new();
    for free in 0..width {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = zero_vector(field, width);
        v[free] = field.one();
        for (row, &pc) in rref.iter().zip(&pivots) {
            v[pc] = field.neg(&row[free]);
        }
        basis.push(v);
    }
    let (canon, _) = reduce(field, &basis).expect("kernel rows share width");
    canon
}

/// Solve `x * a = b` for a square matrix `a` with independent rows, i.e.
/// express `b` in the row basis `a`. Returns `None` if `b` is outside the
/// row space or `a` is singular.
pub fn solve_in_rows<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let width = b.len();
    debug_assert!(a.iter().all(|r| r.len() == width));
    // Augment each row with its coefficient-tracking tail and reduce.
    let n = a.len();
    let mut aug: Vec<Vec<F::Elem>> = Vec::with_capacity(n + 1);
    for (i, row) in a.iter().enumerate() {
        let mut r = row.clone();
        r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
        aug.push(r);
    }
    let (rref, rank) = reduce(field, &aug).expect("augmented rows share width");
    if rank < n {
        return None;
    }
    // Reduce b against the reduced rows, collecting coefficients.
    let mut residual = b.to_vec();
    let mut coeffs = zero_vector(field, n);
    for row in &rref {
        let pc = row[..width]
            .iter()
            .position(|x| !field.is_zero(x))
            .expect("full-rank rows have a pivot in the matrix part");
        if pc >= width {
            return None;
        }
        let c = residual[pc].clone();
        if field.is_zero(&c) {
            continue;
        }
        let neg = field.neg(&c);
        for k in 0..width {
            residual[k] = field.add(&residual[k], &field.mul(&neg, &row[k]));
        }
        for k in 0..n {
            coeffs[k] = field.add(&coeffs[k], &field.mul(&c, &row[width + k]));
        }
    }
    if is_zero_vector(field, &residual) {
        Some(coeffs)
    } else {
        None
    }
}

/// Matrix-times-vector where the matrix is given as rows acting on the
/// right: `out[j] = sum_i v[i] * rows[i][j]`.
pub fn apply_rows<F: Field>(field: &F, v: &[F::Elem], rows: &[Vec<F::Elem>], width: usize) -> Vec<F::Elem> {
    combine(field, v, rows, width)
}
