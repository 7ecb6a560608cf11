//! Constructors and closed-form spectra for the two structured complex
//! tridiagonal families A and A-dagger.
//!
//! Family A has constant diagonal a, doubled corner couplings (2b at the
//! (1,2) and (n,n-1) positions), and an alternating -b interior band.
//! Family A-dagger shifts the corner diagonal entries to a+b and uses a
//! symmetric band (b at both ends, -b inside). Eigenvalues for both are
//! a + 2b*m_k with real nodes m_k on a cosine grid in [-1, 1]; eigenvector
//! components are signed Chebyshev values at those nodes (integer degrees
//! for A, half-integer for A-dagger).

use crate::chebyshev::{cheb_t, ChebDegree};
use crate::error::{Error, Result};
use crate::numkit::{mat_inverse, ComplexScalar, DenseMatrix, TridiagonalMatrix};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    ADagger,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::ADagger => write!(f, "A-dagger"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Family::A),
            "a-dagger" | "adagger" | "dagger" => Ok(Family::ADagger),
            other => Err(Error::InvalidSpec(format!(
                "unknown family '{other}' (expected 'A' or 'A-dagger')"
            ))),
        }
    }
}

/// Identifies one concrete matrix: family, order, and the two parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    family: Family,
    n: usize,
    a: ComplexScalar,
    b: ComplexScalar,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, a: ComplexScalar, b: ComplexScalar) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("order n = {n} must be >= 2")));
        }
        if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(Error::NonFinite(format!("parameters a = {a}, b = {b}")));
        }
        if b.re == 0.0 && b.im == 0.0 {
            return Err(Error::InvalidSpec("parameter b must be nonzero".into()));
        }
        Ok(Self { family, n, a, b })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> ComplexScalar {
        self.a
    }

    pub fn b(&self) -> ComplexScalar {
        self.b
    }

    pub fn nodes(&self) -> Result<Vec<f64>> {
        nodes_for(self.family, self.n)
    }
}

/// Scaled eigenvalue nodes m_k = (lambda_k - a) / (2b) in the k = 1..n order.
///
/// Family A uses cos((k-1)pi/(n-1)) and needs n >= 3; family A-dagger uses
/// -cos(k*pi/n). Values at the grid midpoint and endpoints are snapped to
/// 0 and +/-1 exactly and the second half mirrors the first, so symmetric
/// eigenvalues (in particular lambda = a at a midpoint node) come out exact.
pub fn nodes_for(family: Family, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("order n = {n} must be >= 2")));
    }
    let mut nodes = vec![0.0f64; n];
    match family {
        Family::A => {
            if n < 3 {
                return Err(Error::InvalidSpec(
                    "family A eigenvalue grid needs n >= 3".into(),
                ));
            }
            for i in 0..n {
                nodes[i] = if i == 0 {
                    1.0
                } else if i == n - 1 {
                    -1.0
                } else if 2 * i == n - 1 {
                    0.0
                } else if 2 * i > n - 1 {
                    -nodes[n - 1 - i]
                } else {
                    ((i as f64) * std::f64::consts::PI / ((n - 1) as f64)).cos()
                };
            }
        }
        Family::ADagger => {
            for i in 0..n {
                let k = i + 1;
                nodes[i] = if k == n {
                    1.0
                } else if 2 * k == n {
                    0.0
                } else if 2 * k > n {
                    -nodes[n - k - 1]
                } else {
                    -((k as f64) * std::f64::consts::PI / (n as f64)).cos()
                };
            }
        }
    }
    Ok(nodes)
}

/// Assembles the tridiagonal matrix for a spec.
///
/// The alternating -b interior band only exists for n >= 5; at n = 4 the
/// single interior band slot is +b (the unique value under which the
/// closed-form eigenpairs satisfy the eigen-equations), and at n <= 3 the
/// endpoint entries fill the whole band. Order 2 keeps the doubled corner
/// couplings for family A: [[a, 2b], [2b, a]].
pub fn build(spec: &FamilySpec) -> TridiagonalMatrix {
    let n = spec.n;
    let (a, b) = (spec.a, spec.b);
    let interior = |p: usize| -> ComplexScalar {
        // p is the 0-based band position, 1..n-3 exclusive of endpoints.
        debug_assert!(p > 0 && p < n - 2);
        if n == 4 {
            b
        } else {
            -b
        }
    };
    let mut sup = Vec::with_capacity(n - 1);
    let mut sub = Vec::with_capacity(n - 1);
    let mut diag = Vec::with_capacity(n);
    match spec.family {
        Family::A => {
            diag.resize(n, a);
            for p in 0..n - 1 {
                sup.push(if p == 0 {
                    2.0 * b
                } else if p == n - 2 {
                    b
                } else {
                    interior(p)
                });
                sub.push(if p == n - 2 {
                    2.0 * b
                } else if p == 0 {
                    b
                } else {
                    interior(p)
                });
            }
        }
        Family::ADagger => {
            diag.push(a + b);
            diag.resize(n - 1, a);
            diag.push(a + b);
            for p in 0..n - 1 {
                let v = if p == 0 || p == n - 2 { b } else { interior(p) };
                sup.push(v);
                sub.push(v);
            }
        }
    }
    TridiagonalMatrix::new(sub, diag, sup).expect("band lengths are consistent by construction")
}

/// Eigenvalues lambda_k = a + 2b*m_k in the k = 1..n order.
pub fn eigenvalues(spec: &FamilySpec) -> Result<Vec<ComplexScalar>> {
    let nodes = nodes_for(spec.family, spec.n)?;
    Ok(nodes.iter().map(|&m| spec.a + 2.0 * spec.b * m).collect())
}

/// Sign carried by eigenvector component j (1-based) at order n.
///
/// Components 1 and 2 are positive and the interior 3 <= j <= n-2 alternates
/// as (-1)^j. The last two components carry (-1)^(n-1): +1 for odd n, and
/// for even n >= 6 the flip that the alternating interior band forces
/// (residual sweeps across both families pin this down; see the errata
/// notes). Orders n <= 4 have no interior band and all signs are +1.
pub(crate) fn component_sign(n: usize, j: usize) -> f64 {
    debug_assert!((1..=n).contains(&j));
    if n <= 4 || j <= 2 {
        1.0
    } else if j >= n - 1 {
        if (n - 1).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    } else if j.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Eigenvector for the k-th eigenvalue (k is 1-based), unnormalized with
/// first component 1. Component j is a signed Chebyshev value at the node:
/// degree j-1 for family A, degree (2j-1)/2 for family A-dagger.
pub fn eigenvector(spec: &FamilySpec, k: usize) -> Result<Vec<ComplexScalar>> {
    if spec.family == Family::A && spec.n < 3 {
        return Err(Error::InvalidSpec(
            "family A eigenvectors need n >= 3".into(),
        ));
    }
    if k < 1 || k > spec.n {
        return Err(Error::IndexOutOfRange(format!(
            "k = {k} outside 1..={}",
            spec.n
        )));
    }
    let node = ComplexScalar::new(nodes_for(spec.family, spec.n)?[k - 1], 0.0);
    let n = spec.n;
    Ok((1..=n)
        .map(|j| {
            let deg = match spec.family {
                Family::A => ChebDegree::integer((j - 1) as u32),
                Family::ADagger => ChebDegree::half_odd(j as u32),
            };
            component_sign(n, j) * cheb_t(deg, node)
        })
        .collect())
}

/// Relative residual of the k-th closed-form eigenpair:
/// max|M v - lambda v| / (norm_inf(M) * max|v|).
pub fn eigen_residual(spec: &FamilySpec, k: usize) -> Result<f64> {
    let m = build(spec);
    let v = eigenvector(spec, k)?;
    let lambda = eigenvalues(spec)?[k - 1];
    let mv = m.apply(&v)?;
    let defect = mv
        .iter()
        .zip(v.iter())
        .map(|(mv_j, v_j)| (mv_j - lambda * v_j).norm())
        .fold(0.0, f64::max);
    let vscale = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(defect / (m.norm_inf() * vscale))
}

/// Full closed-form spectral decomposition of one spec: eigenvalues, nodes,
/// the modal matrix P (eigenvectors as columns), and a numerically inverted
/// P^-1. The closed-form weighted inverse for family A at odd orders lives
/// in the powers module; this struct carries the oracle-grade inverse so the
/// two can be compared.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub eigenvalues: Vec<ComplexScalar>,
    pub nodes: Vec<f64>,
    pub modal: DenseMatrix,
    pub modal_inv: DenseMatrix,
}

impl SpectralData {
    pub fn compute(spec: &FamilySpec) -> Result<Self> {
        let eigenvalues = eigenvalues(spec)?;
        let nodes = nodes_for(spec.family, spec.n)?;
        let modal = modal_matrix(spec)?;
        let modal_inv = mat_inverse(&modal)?;
        Ok(Self { eigenvalues, nodes, modal, modal_inv })
    }
}

/// Modal matrix P with eigenvector k in column k (any family, any valid n).
pub fn modal_matrix(spec: &FamilySpec) -> Result<DenseMatrix> {
    let n = spec.n;
    let mut p = DenseMatrix::zeros(n)?;
    for k in 1..=n {
        let v = eigenvector(spec, k)?;
        for (i, &value) in v.iter().enumerate() {
            p.set(i, k - 1, value);
        }
    }
    Ok(p)
}
