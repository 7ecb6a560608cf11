//! Chebyshev polynomials of the first and second kind at complex arguments,
//! including half-integer first-kind degrees, plus the determinant
//! recurrence polynomial they solve.

use crate::numkit::ComplexScalar;

/// Degree of a first-kind Chebyshev polynomial, stored doubled so both
/// integer and half-integer degrees are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChebDegree {
    twice: u32,
}

impl ChebDegree {
    pub fn from_twice(twice: u32) -> Self {
        Self { twice }
    }

    pub fn integer(s: u32) -> Self {
        Self { twice: 2 * s }
    }

    /// Degree (2j-1)/2 for 1-based j.
    pub fn half_odd(j: u32) -> Self {
        assert!(j >= 1, "half-odd degree needs j >= 1");
        Self { twice: 2 * j - 1 }
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }
}

/// First-kind Chebyshev value T_s(x).
///
/// Integer degrees use the three-term recurrence T_{s+1} = 2x T_s - T_{s-1},
/// which stays exact at integer arguments and needs no branch choices.
/// Half-integer degrees use cos(s * arccos x) through the principal branch
/// of the complex arccos; the callers in this crate only need it at real
/// x in [-1, 1], where the branch choice is immaterial.
pub fn cheb_t(deg: ChebDegree, x: ComplexScalar) -> ComplexScalar {
    if deg.is_integer() {
        let s = deg.twice / 2;
        let mut prev = ComplexScalar::new(1.0, 0.0);
        if s == 0 {
            return prev;
        }
        let mut last = x;
        for _ in 1..s {
            let next = 2.0 * x * last - prev;
            prev = last;
            last = next;
        }
        last
    } else {
        (deg.as_f64() * x.acos()).cos()
    }
}

/// Second-kind Chebyshev value U_n(x) by the recurrence U_0 = 1, U_1 = 2x.
pub fn cheb_u(n: u32, x: ComplexScalar) -> ComplexScalar {
    let mut prev = ComplexScalar::new(1.0, 0.0);
    if n == 0 {
        return prev;
    }
    let mut last = 2.0 * x;
    for _ in 1..n {
        let next = 2.0 * x * last - prev;
        prev = last;
        last = next;
    }
    last
}

/// The determinant recurrence polynomial D_n(t) = t D_{n-1}(t) - D_{n-2}(t)
/// with D_0 = 1, D_1 = t; equals `cheb_u(n, t/2)`.
pub fn delta_poly(n: u32, t: ComplexScalar) -> ComplexScalar {
    let mut prev = ComplexScalar::new(1.0, 0.0);
    if n == 0 {
        return prev;
    }
    let mut last = t;
    for _ in 1..n {
        let next = t * last - prev;
        prev = last;
        last = next;
    }
    last
}
