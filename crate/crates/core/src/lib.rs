//! Closed-form spectra, eigenvectors, and integer powers for two families of
//! complex tridiagonal matrices whose perturbed corners make the eigensystem
//! expressible through Chebyshev polynomials evaluated on cosine grids.
//!
//! Family A carries a constant diagonal `a` and off-diagonal bands built from
//! `b` with doubled corner entries; family A-dagger shifts the first and last
//! diagonal entries to `a + b` and symmetrizes the bands. Both diagonalize
//! over nodes `m_k` in `[-1, 1]`, so eigenvalues are `a + 2 b m_k` and any
//! integer power reduces to scaling modal columns by `lambda_k^r`.
//!
//! The same spectra factor determinants of related matrices into products
//! that recover Fibonacci polynomial values, Fibonacci numbers, and Pell
//! numbers; `fibfact` checks those identities against exact big-integer
//! recurrences.
//!
//! Modules:
//! - [`numkit`]: dense/tridiagonal matrix types, brute-force power and
//!   inverse oracles, determinant recurrence.
//! - [`chebyshev`]: first/second-kind Chebyshev evaluation, including
//!   half-odd degrees, and the `delta_poly` bridge.
//! - [`specmat`]: family construction, nodes, eigenvalues, eigenvectors,
//!   residuals, modal matrices.
//! - [`powers`]: closed-form integer powers with oracle cross-checks.
//! - [`fibfact`]: determinant and factor-product identities for integer
//!   sequences.
//! - [`verify`]: the full property sweep behind `tripow verify`.
//! - [`report`] and [`cli`]: deterministic JSON reports and the command-line
//!   front end.

pub mod chebyshev;
pub mod cli;
pub mod error;
pub mod fibfact;
pub mod numkit;
pub mod powers;
pub mod report;
pub mod specmat;
pub mod verify;

pub use error::{Error, Result};
pub use numkit::{ComplexScalar, DenseMatrix, TridiagonalMatrix};
