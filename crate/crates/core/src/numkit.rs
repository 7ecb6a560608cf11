//! Self-contained complex dense/tridiagonal linear-algebra kernel.
//!
//! Everything here is deliberately brute force: this module is the
//! independent oracle that every closed-form result in the crate is
//! checked against, so it must not share any machinery with them.

use crate::error::{Error, Result};
use num_complex::Complex64;

pub type ComplexScalar = Complex64;

/// Relative pivot threshold below which elimination reports a singular matrix.
pub const PIVOT_REL_TOL: f64 = 1e-12;

fn ensure_finite(z: ComplexScalar, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(format!("{what} = {z}")))
    }
}

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<ComplexScalar>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("matrix order must be >= 1".into()));
        }
        Ok(Self { n, data: vec![ComplexScalar::new(0.0, 0.0); n * n] })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.set(i, i, ComplexScalar::new(1.0, 0.0));
        }
        Ok(m)
    }

    /// Builds a matrix from explicit rows, validating shape and finiteness.
    pub fn from_rows(rows: &[Vec<ComplexScalar>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, &z) in row.iter().enumerate() {
                ensure_finite(z, "matrix entry")?;
                m.set(i, j, z);
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based (row, col). Panics on out-of-range indices; callers
    /// that take untrusted indices must bounds-check first.
    pub fn get(&self, row: usize, col: usize) -> ComplexScalar {
        assert!(row < self.n && col < self.n, "index ({row},{col}) out of range for order {}", self.n);
        self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: ComplexScalar) {
        assert!(row < self.n && col < self.n, "index ({row},{col}) out of range for order {}", self.n);
        self.data[row * self.n + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<ComplexScalar>> {
        (0..self.n).map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    /// Maximum row sum of entry magnitudes (the induced infinity norm).
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].iter().map(|z| z.norm()).sum())
            .fold(0.0, f64::max)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> ComplexScalar {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

/// Square matrix with nonzeros confined to the main, super-, and
/// sub-diagonals. `sub[i]` sits at (i+1, i) and `sup[i]` at (i, i+1).
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    n: usize,
    sub: Vec<ComplexScalar>,
    diag: Vec<ComplexScalar>,
    sup: Vec<ComplexScalar>,
}

impl TridiagonalMatrix {
    pub fn new(
        sub: Vec<ComplexScalar>,
        diag: Vec<ComplexScalar>,
        sup: Vec<ComplexScalar>,
    ) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::InvalidSpec("matrix order must be >= 1".into()));
        }
        if sub.len() != n - 1 || sup.len() != n - 1 {
            return Err(Error::DimensionMismatch(format!(
                "band lengths (sub {}, sup {}) do not match order {n}",
                sub.len(),
                sup.len()
            )));
        }
        for &z in sub.iter().chain(diag.iter()).chain(sup.iter()) {
            ensure_finite(z, "band entry")?;
        }
        Ok(Self { n, sub, diag, sup })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sub(&self) -> &[ComplexScalar] {
        &self.sub
    }

    pub fn diag(&self) -> &[ComplexScalar] {
        &self.diag
    }

    pub fn sup(&self) -> &[ComplexScalar] {
        &self.sup
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.n).expect("order >= 1 by construction");
        for i in 0..self.n {
            m.set(i, i, self.diag[i]);
        }
        for i in 0..self.n - 1 {
            m.set(i, i + 1, self.sup[i]);
            m.set(i + 1, i, self.sub[i]);
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[ComplexScalar]) -> Result<Vec<ComplexScalar>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} does not match order {}",
                v.len(),
                self.n
            )));
        }
        let mut out = vec![ComplexScalar::new(0.0, 0.0); self.n];
        for i in 0..self.n {
            let mut acc = self.diag[i] * v[i];
            if i > 0 {
                acc += self.sub[i - 1] * v[i - 1];
            }
            if i + 1 < self.n {
                acc += self.sup[i] * v[i + 1];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Induced infinity norm (max row sum of magnitudes).
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| {
                let mut s = self.diag[i].norm();
                if i > 0 {
                    s += self.sub[i - 1].norm();
                }
                if i + 1 < self.n {
                    s += self.sup[i].norm();
                }
                s
            })
            .fold(0.0, f64::max)
    }
}

pub fn mat_mul(lhs: &DenseMatrix, rhs: &DenseMatrix) -> Result<DenseMatrix> {
    if lhs.n != rhs.n {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply order {} by order {}",
            lhs.n, rhs.n
        )));
    }
    let n = lhs.n;
    let mut out = DenseMatrix::zeros(n)?;
    for i in 0..n {
        for k in 0..n {
            let l = lhs.get(i, k);
            if l.re == 0.0 && l.im == 0.0 {
                continue;
            }
            for j in 0..n {
                let v = out.get(i, j) + l * rhs.get(k, j);
                out.set(i, j, v);
            }
        }
    }
    Ok(out)
}

/// `m^r` by binary exponentiation; `r = 0` yields the identity and negative
/// `r` inverts first.
pub fn mat_pow_oracle(m: &DenseMatrix, r: i64) -> Result<DenseMatrix> {
    let base = if r < 0 { mat_inverse(m)? } else { m.clone() };
    let mut exp = r.unsigned_abs();
    let mut result = DenseMatrix::identity(m.n)?;
    let mut square = base;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mat_mul(&result, &square)?;
        }
        exp >>= 1;
        if exp > 0 {
            square = mat_mul(&square, &square)?;
        }
    }
    Ok(result)
}

/// Inverse by Gauss-Jordan elimination with partial pivoting. A pivot whose
/// magnitude falls below `PIVOT_REL_TOL` times the largest initial entry
/// magnitude reports the matrix as singular.
pub fn mat_inverse(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.n;
    let scale = m.max_abs();
    if scale == 0.0 {
        return Err(Error::Singular("zero matrix".into()));
    }
    let threshold = PIVOT_REL_TOL * scale;
    let mut work = m.clone();
    let mut inv = DenseMatrix::identity(n)?;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| {
                work.get(a, col).norm().partial_cmp(&work.get(b, col).norm()).expect("finite")
            })
            .expect("nonempty range");
        let pivot = work.get(pivot_row, col);
        if pivot.norm() < threshold {
            return Err(Error::Singular(format!(
                "pivot magnitude {:.3e} below threshold {threshold:.3e} at column {col}",
                pivot.norm()
            )));
        }
        if pivot_row != col {
            for j in 0..n {
                let (a, b) = (work.get(col, j), work.get(pivot_row, j));
                work.set(col, j, b);
                work.set(pivot_row, j, a);
                let (a, b) = (inv.get(col, j), inv.get(pivot_row, j));
                inv.set(col, j, b);
                inv.set(pivot_row, j, a);
            }
        }
        let inv_pivot = 1.0 / pivot;
        for j in 0..n {
            work.set(col, j, work.get(col, j) * inv_pivot);
            inv.set(col, j, inv.get(col, j) * inv_pivot);
        }
        for row in 0..n {
            if row == col {
                continue;
            }
            let factor = work.get(row, col);
            if factor.re == 0.0 && factor.im == 0.0 {
                continue;
            }
            for j in 0..n {
                let w = work.get(row, j) - factor * work.get(col, j);
                work.set(row, j, w);
                let v = inv.get(row, j) - factor * inv.get(col, j);
                inv.set(row, j, v);
            }
        }
    }
    Ok(inv)
}

/// Determinant via the three-term recurrence on leading principal minors:
/// d_k = diag_k * d_{k-1} - sup_{k-1} * sub_{k-1} * d_{k-2}, iterated with two
/// running values so no recursion depth is involved.
pub fn tridiag_det(t: &TridiagonalMatrix) -> ComplexScalar {
    let mut prev = ComplexScalar::new(1.0, 0.0);
    let mut last = t.diag[0];
    for k in 1..t.n {
        let next = t.diag[k] * last - t.sup[k - 1] * t.sub[k - 1] * prev;
        prev = last;
        last = next;
    }
    last
}

pub fn max_abs_diff(lhs: &DenseMatrix, rhs: &DenseMatrix) -> Result<f64> {
    if lhs.n != rhs.n {
        return Err(Error::DimensionMismatch(format!(
            "cannot compare order {} with order {}",
            lhs.n, rhs.n
        )));
    }
    Ok(lhs
        .data
        .iter()
        .zip(rhs.data.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}

/// Integer power of a complex scalar; negative exponents go through the
/// reciprocal so no branch cuts are involved.
pub fn complex_int_pow(z: ComplexScalar, r: i64) -> ComplexScalar {
    let base = if r < 0 { 1.0 / z } else { z };
    let mut exp = r.unsigned_abs();
    let mut result = ComplexScalar::new(1.0, 0.0);
    let mut square = base;
    while exp > 0 {
        if exp & 1 == 1 {
            result *= square;
        }
        exp >>= 1;
        if exp > 0 {
            square *= square;
        }
    }
    result
}
