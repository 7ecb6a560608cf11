//! Closed-form integer powers of family A at odd orders via the spectral
//! decomposition A^r = P diag(lambda_k^r) P^-1, cross-checked on demand
//! against the brute-force oracle. Even orders fall back to the oracle
//! outright: no validated eigenvector sign pattern exists there for the
//! closed inverse, and extrapolating one is exactly the kind of silent
//! guess this crate exists to avoid.

use crate::chebyshev::{cheb_t, ChebDegree};
use crate::error::{Error, Result};
use crate::numkit::{
    complex_int_pow, mat_mul, mat_pow_oracle, max_abs_diff, ComplexScalar, DenseMatrix,
};
use crate::specmat::{self, eigenvalues, nodes_for, Family, FamilySpec};

/// Relative magnitude below which an eigenvalue is treated as zero when a
/// negative power asks for its reciprocal.
const EIGENVALUE_ZERO_REL_TOL: f64 = 1e-14;

/// A power request: family A only, any integer exponent.
#[derive(Debug, Clone, Copy)]
pub struct PowerRequest {
    spec: FamilySpec,
    r: i64,
}

impl PowerRequest {
    pub fn new(spec: FamilySpec, r: i64) -> Result<Self> {
        if spec.family() != Family::A {
            return Err(Error::InvalidSpec(
                "powers are implemented for family A only".into(),
            ));
        }
        Ok(Self { spec, r })
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn r(&self) -> i64 {
        self.r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PowerResult {
    pub value: DenseMatrix,
    pub method: Method,
    /// Max-abs deviation between the closed form and the oracle, present
    /// only when both were computed.
    pub cross_check_residual: Option<f64>,
}

#[derive(Debug, Clone, Copy)]
pub struct PowerOptions {
    /// Largest order at which the dispatcher runs the oracle alongside the
    /// closed form to populate the cross-check residual.
    pub crosscheck_max_order: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        Self { crosscheck_max_order: 64 }
    }
}

fn require_odd_family_a(spec: &FamilySpec, what: &str) -> Result<()> {
    if spec.family() != Family::A {
        return Err(Error::InvalidSpec(format!(
            "{what} is defined for family A only"
        )));
    }
    if spec.n() < 3 || spec.n().is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!(
            "{what} needs an odd order >= 3, got n = {}",
            spec.n()
        )));
    }
    Ok(())
}

/// Modal matrix P for family A at odd order: eigenvector k in column k.
pub fn modal_matrix(spec: &FamilySpec) -> Result<DenseMatrix> {
    require_odd_family_a(spec, "the modal matrix")?;
    specmat::modal_matrix(spec)
}

/// Closed-form inverse of the modal matrix.
///
/// Entry (k, j) is (2/(n-1)) * w_j * c_k * sign(j) * T_{j-1}(m_k), where
/// w_j and c_k halve the endpoint columns and rows (j, k in {1, n}) and
/// sign(j) matches the eigenvector component sign. These are the
/// endpoint-halved cosine-grid orthogonality weights; `P * P^-1 = I` to
/// machine precision, which the tests pin against the numeric inverse.
pub fn modal_inverse(spec: &FamilySpec) -> Result<DenseMatrix> {
    require_odd_family_a(spec, "the modal inverse")?;
    let n = spec.n();
    let nodes = nodes_for(spec.family(), n)?;
    let prefactor = 2.0 / ((n - 1) as f64);
    let mut inv = DenseMatrix::zeros(n)?;
    for k in 1..=n {
        let ck = if k == 1 || k == n { 0.5 } else { 1.0 };
        let node = ComplexScalar::new(nodes[k - 1], 0.0);
        for j in 1..=n {
            let wj = if j == 1 || j == n { 0.5 } else { 1.0 };
            let sign = specmat::component_sign(n, j);
            let t = cheb_t(ChebDegree::integer((j - 1) as u32), node);
            inv.set(k - 1, j - 1, prefactor * wj * ck * sign * t);
        }
    }
    Ok(inv)
}

fn eigenvalue_powers(spec: &FamilySpec, r: i64) -> Result<Vec<ComplexScalar>> {
    let lambdas = eigenvalues(spec)?;
    if r < 0 {
        let scale = lambdas.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for (i, lambda) in lambdas.iter().enumerate() {
            if lambda.norm() <= EIGENVALUE_ZERO_REL_TOL * scale {
                return Err(Error::Singular(format!(
                    "eigenvalue {} is zero (k = {}); negative powers do not exist",
                    lambda,
                    i + 1
                )));
            }
        }
    }
    Ok(lambdas.into_iter().map(|l| complex_int_pow(l, r)).collect())
}

/// A^r by the closed form P diag(lambda_k^r) P^-1 (family A, odd n >= 3).
pub fn power_closed(req: &PowerRequest) -> Result<DenseMatrix> {
    require_odd_family_a(&req.spec, "the closed-form power")?;
    let n = req.spec.n();
    let p = modal_matrix(&req.spec)?;
    let p_inv = modal_inverse(&req.spec)?;
    let lambda_r = eigenvalue_powers(&req.spec, req.r)?;
    let mut scaled = p.clone();
    for (k, factor) in lambda_r.iter().enumerate() {
        for i in 0..n {
            scaled.set(i, k, p.get(i, k) * factor);
        }
    }
    mat_mul(&scaled, &p_inv)
}

/// Dispatching power: closed form for odd orders (with an oracle cross-check
/// up to the configured order), oracle for even orders.
pub fn power_with(req: &PowerRequest, opts: &PowerOptions) -> Result<PowerResult> {
    let n = req.spec.n();
    if n >= 3 && n % 2 == 1 {
        let value = power_closed(req)?;
        let cross_check_residual = if n <= opts.crosscheck_max_order {
            let oracle = mat_pow_oracle(&specmat::build(&req.spec).to_dense(), req.r)?;
            Some(max_abs_diff(&value, &oracle)?)
        } else {
            None
        };
        Ok(PowerResult { value, method: Method::ClosedForm, cross_check_residual })
    } else {
        let value = mat_pow_oracle(&specmat::build(&req.spec).to_dense(), req.r)?;
        Ok(PowerResult { value, method: Method::Oracle, cross_check_residual: None })
    }
}

pub fn power(req: &PowerRequest) -> Result<PowerResult> {
    power_with(req, &PowerOptions::default())
}
