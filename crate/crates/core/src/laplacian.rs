//! Combinatorial Laplacians of the reduced simplicial chain complex.
//!
//! Dimensions are topological: `k` indexes faces with `k + 1` vertices, and
//! `∂_0` sends every vertex to the empty face.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Matrices up to this size also get an exact integrality check.
pub const EXACT_LIMIT: usize = 10;

/// Faces with `k + 1` vertices in lex order (`k = -1` gives `[∅]`).
pub fn faces_of_dimension(c: &OrderedComplex, k: isize) -> Vec<VertexSet> {
    let size = k + 1;
    if size < 0 {
        return Vec::new();
    }
    let mut faces: Vec<VertexSet> = c
        .face_set()
        .into_iter()
        .filter(|f| f.len() as isize == size)
        .collect();
    faces.sort();
    faces
}

fn check_dimension(c: &OrderedComplex, k: isize) -> Result<()> {
    if k < 0 || k >= c.rank() as isize {
        return Err(Error::DimensionOutOfRange { k, rank: c.rank() });
    }
    Ok(())
}

/// `∂_k` from `k`-faces (columns) to `(k-1)`-faces (rows). Removing the
/// `i`-th smallest vertex (0-based) carries sign `(-1)^i`.
pub fn boundary_matrix(c: &OrderedComplex, k: isize) -> Result<DMatrix<i64>> {
    check_dimension(c, k)?;
    Ok(boundary_unchecked(c, k))
}

fn boundary_unchecked(c: &OrderedComplex, k: isize) -> DMatrix<i64> {
    let cols = faces_of_dimension(c, k);
    let rows = faces_of_dimension(c, k - 1);
    let mut m = DMatrix::zeros(rows.len(), cols.len());
    for (j, f) in cols.iter().enumerate() {
        for (i, v) in f.iter().enumerate() {
            let r = rows
                .binary_search(&f.without(v))
                .expect("boundary face exists");
            m[(r, j)] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// `D_k = ∂_{k+1} ∂_{k+1}^T + ∂_k^T ∂_k`, exactly.
pub fn laplacian_matrix(c: &OrderedComplex, k: isize) -> Result<DMatrix<i64>> {
    check_dimension(c, k)?;
    let down = boundary_unchecked(c, k);
    let up = boundary_unchecked(c, k + 1);
    Ok(&up * up.transpose() + down.transpose() * &down)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub dimension: isize,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub integral: bool,
    /// Largest distance from an eigenvalue to its nearest integer.
    pub max_deviation: f64,
    /// Exact verdict from the characteristic polynomial, for small matrices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_integral: Option<bool>,
}

pub fn laplacian_spectrum(c: &OrderedComplex, k: isize, tol: f64) -> Result<SpectrumReport> {
    let d = laplacian_matrix(c, k)?;
    let n = d.nrows();
    let mut eigenvalues: Vec<f64> = if n == 0 {
        Vec::new()
    } else {
        SymmetricEigen::new(d.map(|x| x as f64))
            .eigenvalues
            .iter()
            .copied()
            .collect()
    };
    eigenvalues.sort_by(f64::total_cmp);
    let max_deviation = eigenvalues
        .iter()
        .map(|&e| (e - e.round()).abs())
        .fold(0.0, f64::max);
    let exact_integral = (n <= EXACT_LIMIT).then(|| exactly_integral(&d, &eigenvalues));
    Ok(SpectrumReport {
        dimension: k,
        eigenvalues,
        integral: max_deviation <= tol,
        max_deviation,
        exact_integral,
    })
}

/// Reports for every dimension `0..rank`.
pub fn integrality_survey(c: &OrderedComplex, tol: f64) -> Vec<SpectrumReport> {
    (0..c.rank() as isize)
        .map(|k| laplacian_spectrum(c, k, tol).expect("dimension in range"))
        .collect()
}

/// Coefficients of `det(xI - M)`, constant term first (Faddeev-LeVerrier).
pub fn characteristic_polynomial(m: &DMatrix<i64>) -> Vec<i128> {
    let n = m.nrows();
    let a = m.map(|x| x as i128);
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk = DMatrix::<i128>::zeros(n, n);
    for k in 1..=n {
        let mut next = &a * &mk;
        for i in 0..n {
            next[(i, i)] += coeffs[n - k + 1];
        }
        mk = next;
        let am = &a * &mk;
        let trace: i128 = (0..n).map(|i| am[(i, i)]).sum();
        coeffs[n - k] = -trace / k as i128;
    }
    coeffs
}

/// Divides out `(x - r)` for each rounded eigenvalue; integral iff the
/// characteristic polynomial splits completely that way.
fn exactly_integral(m: &DMatrix<i64>, approx: &[f64]) -> bool {
    let mut p = characteristic_polynomial(m);
    for &e in approx {
        let r = e.round() as i128;
        // Synthetic division by (x - r).
        let deg = p.len() - 1;
        let mut q = vec![0i128; deg];
        let mut carry = 0i128;
        for i in (0..=deg).rev() {
            let val = p[i] + carry;
            if i == 0 {
                if val != 0 {
                    return false;
                }
            } else {
                q[i - 1] = val;
                carry = val * r;
            }
        }
        p = q;
    }
    p == [1]
}

/// Reduced Betti numbers over the rationals, read off as kernel dimensions.
pub fn reduced_betti_numbers(c: &OrderedComplex, tol: f64) -> Vec<usize> {
    integrality_survey(c, tol)
        .iter()
        .map(|r| r.eigenvalues.iter().filter(|e| e.abs() <= 1e-6).count())
        .collect()
}
