//! Seeded property sweeps over every module's invariants, reported one
//! named property at a time. The `verify` CLI command runs all of them;
//! the optional VERIFY_MAX_N environment variable raises the largest
//! matrix order the order-sweeping properties reach (it never lowers a
//! default, so the acceptance ranges always stay covered).

use crate::chebyshev::{cheb_t, cheb_u, delta_poly, ChebDegree};
use crate::fibfact::{
    det_dagger_check, det_dagger_laplace, det_fibpoly_check, fib_factor_product,
    fib_poly_bigint, fib_poly_complex, fibpoly_factor_product, pell_factor_product,
    DaggerVariant,
};
use crate::numkit::{
    complex_int_pow, mat_inverse, mat_mul, mat_pow_oracle, max_abs_diff, tridiag_det,
    ComplexScalar, DenseMatrix, TridiagonalMatrix,
};
use crate::powers::{modal_inverse, modal_matrix, power_closed, PowerRequest};
use crate::specmat::{build, eigen_residual, eigenvalues, nodes_for, Family, FamilySpec};
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x7412_d00d_5eed_2026;

/// Result of one named property sweep.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub reports: Vec<PropertyReport>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.reports.iter().filter(|r| !r.passed).count()
    }
}

/// Running worst case of a sweep.
struct Sweep {
    cases: usize,
    max_residual: f64,
    worst: String,
}

impl Sweep {
    fn new() -> Self {
        Self { cases: 0, max_residual: 0.0, worst: String::new() }
    }

    fn record(&mut self, residual: f64, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if residual > self.max_residual || self.cases == 1 {
            self.max_residual = residual;
            self.worst = describe();
        }
    }
}

fn report(name: &str, tolerance: f64, sweep: Sweep) -> PropertyReport {
    PropertyReport {
        name: name.to_string(),
        passed: sweep.max_residual <= tolerance && sweep.cases > 0,
        cases: sweep.cases,
        max_residual: sweep.max_residual,
        tolerance,
        detail: sweep.worst,
    }
}

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

fn env_max_n() -> Option<usize> {
    std::env::var("VERIFY_MAX_N").ok()?.trim().parse().ok()
}

fn raised(default: usize) -> usize {
    env_max_n().map_or(default, |v| v.max(default))
}

fn largest_odd(cap: usize) -> usize {
    if cap.is_multiple_of(2) {
        cap - 1
    } else {
        cap
    }
}

/// Complex (a, b) parameter grid shared by the family sweeps; four of the
/// b values are purely imaginary.
fn parameter_grid() -> Vec<(ComplexScalar, ComplexScalar)> {
    vec![
        (c(1.0, 0.0), c(3.0, 0.0)),
        (c(2.5, 0.0), c(-1.25, 0.0)),
        (c(0.0, 0.0), c(0.0, 1.0)),
        (c(1.0, 1.0), c(0.0, 2.0)),
        (c(-2.0, 0.5), c(1.0, -1.0)),
        (c(0.3, -0.7), c(-0.4, 0.9)),
        (c(5.0, 0.0), c(0.0, -3.0)),
        (c(1.5, 2.0), c(2.0, 0.001)),
        (c(-1.0, -1.0), c(-2.0, -2.0)),
        (c(0.1, 0.0), c(0.0, 0.5)),
    ]
}

fn random_complex(rng: &mut StdRng, scale: f64) -> ComplexScalar {
    c(rng.random_range(-scale..scale), rng.random_range(-scale..scale))
}

fn random_dense(rng: &mut StdRng, n: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n).expect("n >= 1");
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, random_complex(rng, 1.0));
        }
    }
    m
}

/// True when every eigenvalue is comfortably away from zero, so negative
/// powers are well posed.
fn spec_invertible(spec: &FamilySpec) -> bool {
    let lambdas = match eigenvalues(spec) {
        Ok(v) => v,
        Err(_) => return false,
    };
    let top = lambdas.iter().map(|z| z.norm()).fold(0.0, f64::max);
    lambdas.iter().all(|z| z.norm() > 1e-6 * top.max(1.0))
}

fn det_sign_flip_invariance() -> PropertyReport {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut sweep = Sweep::new();
    for case in 0..200 {
        let n = rng.random_range(1..=12usize);
        let diag: Vec<ComplexScalar> = (0..n).map(|_| random_complex(&mut rng, 2.0)).collect();
        let sub: Vec<ComplexScalar> =
            (0..n.saturating_sub(1)).map(|_| random_complex(&mut rng, 2.0)).collect();
        let sup: Vec<ComplexScalar> =
            (0..n.saturating_sub(1)).map(|_| random_complex(&mut rng, 2.0)).collect();
        let t = TridiagonalMatrix::new(sub.clone(), diag.clone(), sup.clone())
            .expect("consistent bands");
        let flipped = TridiagonalMatrix::new(
            sub.iter().map(|z| -z).collect(),
            diag,
            sup.iter().map(|z| -z).collect(),
        )
        .expect("consistent bands");
        let d = tridiag_det(&t);
        let df = tridiag_det(&flipped);
        let residual = (d - df).norm() / d.norm().max(1.0);
        sweep.record(residual, || format!("case {case} n {n}"));
    }
    report("det_sign_flip_invariance", 1e-12, sweep)
}

fn mat_mul_associativity() -> PropertyReport {
    let mut rng = StdRng::seed_from_u64(SEED ^ 1);
    let mut sweep = Sweep::new();
    for case in 0..50 {
        let a = random_dense(&mut rng, 4);
        let b = random_dense(&mut rng, 4);
        let d = random_dense(&mut rng, 4);
        let left = mat_mul(&mat_mul(&a, &b).unwrap(), &d).unwrap();
        let right = mat_mul(&a, &mat_mul(&b, &d).unwrap()).unwrap();
        let residual =
            max_abs_diff(&left, &right).unwrap() / left.max_abs().max(1.0);
        sweep.record(residual, || format!("case {case}"));
    }
    report("mat_mul_associativity", 1e-12, sweep)
}

fn oracle_power_group_law() -> PropertyReport {
    let mut rng = StdRng::seed_from_u64(SEED ^ 2);
    let mut sweep = Sweep::new();
    for case in 0..8 {
        // Diagonal dominance keeps the random matrix invertible.
        let mut m = random_dense(&mut rng, 5);
        for i in 0..5 {
            m.set(i, i, m.get(i, i) + c(4.0, 0.0));
        }
        for r in -2i64..=3 {
            for s in -2i64..=3 {
                let combined = mat_pow_oracle(&m, r + s).unwrap();
                let split =
                    mat_mul(&mat_pow_oracle(&m, r).unwrap(), &mat_pow_oracle(&m, s).unwrap())
                        .unwrap();
                let residual =
                    max_abs_diff(&combined, &split).unwrap() / combined.max_abs().max(1.0);
                sweep.record(residual, || format!("case {case} r {r} s {s}"));
            }
        }
    }
    report("oracle_power_group_law", 1e-10, sweep)
}

fn inverse_roundtrip() -> PropertyReport {
    let mut rng = StdRng::seed_from_u64(SEED ^ 3);
    let mut sweep = Sweep::new();
    let mut case = 0;
    while sweep.cases < 40 {
        case += 1;
        let n = rng.random_range(2..=8usize);
        let m = random_dense(&mut rng, n);
        let inv = match mat_inverse(&m) {
            Ok(inv) => inv,
            Err(_) => continue,
        };
        if m.norm_inf() * inv.norm_inf() >= 1e6 {
            continue;
        }
        let prod = mat_mul(&m, &inv).unwrap();
        let id = DenseMatrix::identity(n).unwrap();
        sweep.record(max_abs_diff(&prod, &id).unwrap(), || format!("case {case} n {n}"));
    }
    report("inverse_roundtrip", 1e-10, sweep)
}

fn cheb_t_cosine_bridge() -> PropertyReport {
    let mut sweep = Sweep::new();
    for twice in 0..=20u32 {
        let s = f64::from(twice) / 2.0;
        for i in 0..=32 {
            let theta = std::f64::consts::PI * (i as f64) / 32.0;
            let v = cheb_t(ChebDegree::from_twice(twice), c(theta.cos(), 0.0));
            let residual = (v - c((s * theta).cos(), 0.0)).norm();
            sweep.record(residual, || format!("twice {twice} theta {theta:.4}"));
        }
    }
    report("cheb_t_cosine_bridge", 1e-12, sweep)
}

fn delta_cheb_u_bridge() -> PropertyReport {
    let mut rng = StdRng::seed_from_u64(SEED ^ 4);
    let mut sweep = Sweep::new();
    let cap = raised(30);
    for n in 0..=cap.min(60) as u32 {
        for _ in 0..8 {
            let t = random_complex(&mut rng, 2.0 * std::f64::consts::SQRT_2);
            let lhs = delta_poly(n, t);
            let rhs = cheb_u(n, t / 2.0);
            let residual = (lhs - rhs).norm() / rhs.norm().max(1.0);
            sweep.record(residual, || format!("n {n} t {t:.4}"));
        }
    }
    report("delta_cheb_u_bridge", 1e-12, sweep)
}

fn cheb_t_half_degree_recurrence() -> PropertyReport {
    // T_{s+1} = 2x T_s - T_{s-1} at half-integer s >= 3/2, checked through
    // the trig definition.
    let mut sweep = Sweep::new();
    for twice in (3..=19u32).step_by(2) {
        for i in 1..32 {
            let theta = std::f64::consts::PI * (i as f64) / 32.0;
            let x = c(theta.cos(), 0.0);
            let up = cheb_t(ChebDegree::from_twice(twice + 2), x);
            let mid = cheb_t(ChebDegree::from_twice(twice), x);
            let down = cheb_t(ChebDegree::from_twice(twice - 2), x);
            let residual = (up - (2.0 * x * mid - down)).norm();
            sweep.record(residual, || format!("twice {twice} theta {theta:.4}"));
        }
    }
    report("cheb_t_half_degree_recurrence", 1e-11, sweep)
}

fn eigen_residual_sweep() -> PropertyReport {
    let mut sweep = Sweep::new();
    let a_cap = largest_odd(raised(11));
    let d_cap = raised(12);
    for (a, b) in parameter_grid() {
        for n in (3..=a_cap).step_by(2) {
            let spec = FamilySpec::new(Family::A, n, a, b).expect("valid spec");
            for k in 1..=n {
                let residual = eigen_residual(&spec, k).expect("valid eigenpair");
                sweep.record(residual, || format!("family A n {n} k {k} a {a:.3} b {b:.3}"));
            }
        }
        for n in 2..=d_cap {
            let spec = FamilySpec::new(Family::ADagger, n, a, b).expect("valid spec");
            for k in 1..=n {
                let residual = eigen_residual(&spec, k).expect("valid eigenpair");
                sweep.record(residual, || {
                    format!("family A-dagger n {n} k {k} a {a:.3} b {b:.3}")
                });
            }
        }
    }
    report("eigen_residual_sweep", 1e-10, sweep)
}

fn eigenvalue_distinctness() -> PropertyReport {
    let mut sweep = Sweep::new();
    for (a, b) in parameter_grid() {
        for family in [Family::A, Family::ADagger] {
            let lo = if family == Family::A { 3 } else { 2 };
            for n in lo..=12usize {
                let spec = FamilySpec::new(family, n, a, b).expect("valid spec");
                let vals = eigenvalues(&spec).expect("valid order");
                let mut min_gap = f64::INFINITY;
                for i in 0..n {
                    for j in 0..i {
                        min_gap = min_gap.min((vals[i] - vals[j]).norm());
                    }
                }
                // Ratio below 1 means the minimal gap clears the threshold.
                let residual = (1e-12 * b.norm()) / min_gap;
                sweep.record(residual, || format!("family {family} n {n}"));
            }
        }
    }
    report("eigenvalue_distinctness", 1.0, sweep)
}

fn det_eigenvalue_product_bridge() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = raised(15);
    for (a, b) in parameter_grid() {
        for family in [Family::A, Family::ADagger] {
            let lo = if family == Family::A { 3 } else { 2 };
            for n in lo..=cap {
                let spec = FamilySpec::new(family, n, a, b).expect("valid spec");
                let det = tridiag_det(&build(&spec));
                let prod = eigenvalues(&spec)
                    .expect("valid order")
                    .into_iter()
                    .fold(c(1.0, 0.0), |acc, v| acc * v);
                let residual = (det - prod).norm() / prod.norm().max(1.0);
                sweep.record(residual, || format!("family {family} n {n} a {a:.3} b {b:.3}"));
            }
        }
    }
    report("det_eigenvalue_product_bridge", 1e-9, sweep)
}

fn power_first_reconstruction() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = largest_odd(raised(21));
    for (a, b) in parameter_grid() {
        for n in (3..=cap).step_by(2) {
            let spec = FamilySpec::new(Family::A, n, a, b).expect("valid spec");
            let req = PowerRequest::new(spec, 1).expect("family A");
            let rebuilt = power_closed(&req).expect("closed form");
            let direct = build(&spec).to_dense();
            let residual = max_abs_diff(&rebuilt, &direct).unwrap();
            sweep.record(residual, || format!("n {n} a {a:.3} b {b:.3}"));
        }
    }
    report("power_first_reconstruction", 1e-10, sweep)
}

fn modal_inverse_vs_numeric() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = largest_odd(raised(21));
    for (a, b) in parameter_grid() {
        for n in (3..=cap).step_by(2) {
            let spec = FamilySpec::new(Family::A, n, a, b).expect("valid spec");
            let p = modal_matrix(&spec).expect("odd family A");
            let closed = modal_inverse(&spec).expect("odd family A");
            let numeric = mat_inverse(&p).expect("modal matrix invertible");
            let dev = max_abs_diff(&closed, &numeric).unwrap();
            let prod = mat_mul(&p, &closed).unwrap();
            let id = DenseMatrix::identity(n).unwrap();
            let closure = max_abs_diff(&prod, &id).unwrap();
            sweep.record(dev.max(closure), || format!("n {n} a {a:.3} b {b:.3}"));
        }
    }
    report("modal_inverse_vs_numeric", 1e-10, sweep)
}

fn closed_power_group_law() -> PropertyReport {
    let mut sweep = Sweep::new();
    for (a, b) in parameter_grid() {
        for n in [3usize, 5, 7] {
            let spec = FamilySpec::new(Family::A, n, a, b).expect("valid spec");
            if !spec_invertible(&spec) {
                continue;
            }
            for r in -2i64..=3 {
                for s in -2i64..=3 {
                    let pr = power_closed(&PowerRequest::new(spec, r).unwrap()).unwrap();
                    let ps = power_closed(&PowerRequest::new(spec, s).unwrap()).unwrap();
                    let prs = power_closed(&PowerRequest::new(spec, r + s).unwrap()).unwrap();
                    let prod = mat_mul(&pr, &ps).unwrap();
                    let residual =
                        max_abs_diff(&prod, &prs).unwrap() / prs.max_abs().max(1.0);
                    sweep.record(residual, || format!("n {n} r {r} s {s} a {a:.3} b {b:.3}"));
                }
            }
        }
    }
    report("closed_power_group_law", 1e-8, sweep)
}

fn closed_vs_oracle_powers() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = largest_odd(raised(11));
    for (a, b) in parameter_grid() {
        for n in (3..=cap).step_by(2) {
            let spec = FamilySpec::new(Family::A, n, a, b).expect("valid spec");
            if !spec_invertible(&spec) {
                continue;
            }
            let dense = build(&spec).to_dense();
            for r in -3i64..=6 {
                let closed = power_closed(&PowerRequest::new(spec, r).unwrap()).unwrap();
                let oracle = mat_pow_oracle(&dense, r).unwrap();
                let residual =
                    max_abs_diff(&closed, &oracle).unwrap() / oracle.max_abs().max(1.0);
                sweep.record(residual, || format!("n {n} r {r} a {a:.3} b {b:.3}"));
            }
        }
    }
    report("closed_vs_oracle_powers", 1e-8, sweep)
}

fn closed_power_trace_sum() -> PropertyReport {
    let mut sweep = Sweep::new();
    for (a, b) in parameter_grid() {
        for n in [3usize, 7, 11] {
            let spec = FamilySpec::new(Family::A, n, a, b).expect("valid spec");
            for r in [2i64, 3, 5] {
                let value = power_closed(&PowerRequest::new(spec, r).unwrap()).unwrap();
                let sum: ComplexScalar = eigenvalues(&spec)
                    .unwrap()
                    .into_iter()
                    .map(|l| complex_int_pow(l, r))
                    .sum();
                let residual = (value.trace() - sum).norm() / sum.norm().max(1.0);
                sweep.record(residual, || format!("n {n} r {r} a {a:.3} b {b:.3}"));
            }
        }
    }
    report("closed_power_trace_sum", 1e-9, sweep)
}

fn closed_inverse_vs_numeric() -> PropertyReport {
    let mut sweep = Sweep::new();
    for (a, b) in parameter_grid() {
        for n in [3usize, 5, 9] {
            let spec = FamilySpec::new(Family::A, n, a, b).expect("valid spec");
            if !spec_invertible(&spec) {
                continue;
            }
            let closed = power_closed(&PowerRequest::new(spec, -1).unwrap()).unwrap();
            let numeric = mat_inverse(&build(&spec).to_dense()).unwrap();
            let residual = max_abs_diff(&closed, &numeric).unwrap();
            sweep.record(residual, || format!("n {n} a {a:.3} b {b:.3}"));
        }
    }
    report("closed_inverse_vs_numeric", 1e-9, sweep)
}

fn det_fibpoly_identity() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = raised(15);
    let xs = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(1.5, 0.0), c(-1.0, 0.0)];
    for n in 3..=cap {
        for x in xs {
            let check = det_fibpoly_check(n, x).expect("n >= 3");
            sweep.record(check.residual, || format!("n {n} x {x:.2}"));
        }
    }
    report("det_fibpoly_identity", 1e-10, sweep)
}

fn fibpoly_factor_vs_recurrence() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = raised(15);
    let xs = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(1.5, 0.0), c(-1.0, 0.0)];
    for n in 3..=cap {
        for x in xs {
            let product = fibpoly_factor_product(n, x).expect("nondegenerate x");
            let reference = fib_poly_complex((n - 1) as u64, x);
            let residual = (product - reference).norm() / reference.norm().max(1.0);
            sweep.record(residual, || format!("n {n} x {x:.2}"));
        }
    }
    report("fibpoly_factor_vs_recurrence", 1e-9, sweep)
}

fn dagger_det_identity() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = raised(20);
    for n in 2..=cap {
        for variant in [DaggerVariant::Fib, DaggerVariant::Pell] {
            let check = det_dagger_check(n, variant).expect("n >= 2");
            sweep.record(check.residual, || format!("n {n} variant {}", variant.name()));
        }
    }
    report("dagger_det_identity", 1e-10, sweep)
}

fn sequence_factor_products() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = raised(40) as u64;
    for n in 1..=cap {
        for variant in [DaggerVariant::Fib, DaggerVariant::Pell] {
            let product = match variant {
                DaggerVariant::Fib => fib_factor_product(n),
                DaggerVariant::Pell => pell_factor_product(n),
            }
            .expect("n >= 1");
            let exact = variant.exact(n).to_f64().expect("fits f64 on this range");
            let residual = (product.re - exact).abs() / exact.abs().max(1.0);
            sweep.record(residual, || format!("n {n} variant {}", variant.name()));
        }
    }
    report("sequence_factor_products", 1e-9, sweep)
}

fn sequence_factor_realness() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = raised(40) as u64;
    for n in 1..=cap {
        for (name, product) in [
            ("fib", fib_factor_product(n).expect("n >= 1")),
            ("pell", pell_factor_product(n).expect("n >= 1")),
        ] {
            let residual = product.im.abs() / product.re.abs().max(1.0);
            sweep.record(residual, || format!("n {n} variant {name}"));
        }
    }
    report("sequence_factor_realness", 1e-8, sweep)
}

fn factor_conjugate_pairing() -> PropertyReport {
    let mut sweep = Sweep::new();
    for n in 2..=40usize {
        let nodes = nodes_for(Family::ADagger, n).expect("n >= 2");
        for a in [1.0, 2.0] {
            for k in 1..n {
                let f = c(a, 0.0) + c(0.0, 2.0) * nodes[k - 1];
                let g = c(a, 0.0) + c(0.0, 2.0) * nodes[n - k - 1];
                let pair = f * g;
                let residual = pair.im.abs() / pair.norm().max(1.0);
                sweep.record(residual, || format!("n {n} k {k} a {a}"));
            }
        }
    }
    report("factor_conjugate_pairing", 1e-12, sweep)
}

fn dagger_laplace_expansion() -> PropertyReport {
    let mut sweep = Sweep::new();
    let cap = raised(15);
    let params = [
        (c(1.0, 0.0), c(0.0, 1.0)),
        (c(2.0, 0.0), c(0.0, 1.0)),
        (c(0.7, -1.4), c(1.3, 0.6)),
    ];
    for n in 4..=cap {
        for (a, b) in params {
            let spec = FamilySpec::new(Family::ADagger, n, a, b).expect("valid spec");
            let direct = tridiag_det(&build(&spec));
            let expanded = det_dagger_laplace(n, a, b).expect("n >= 4");
            let residual = (direct - expanded).norm() / direct.norm().max(1.0);
            sweep.record(residual, || format!("n {n} a {a:.2} b {b:.2}"));
        }
    }
    report("dagger_laplace_expansion", 1e-10, sweep)
}

fn constant_band_det_fib_identity() -> PropertyReport {
    // det(tridiag_m(-i, x, -i)) equals the (m+1)-th Fibonacci polynomial
    // value F_{m+1}(x).
    let mut sweep = Sweep::new();
    let mi = c(0.0, -1.0);
    for m in 1..=12usize {
        for x in [1.0f64, 2.0, 3.0, -1.0] {
            let t = TridiagonalMatrix::new(
                vec![mi; m - 1],
                vec![c(x, 0.0); m],
                vec![mi; m - 1],
            )
            .unwrap();
            let det = tridiag_det(&t);
            let reference = fib_poly_bigint((m + 1) as u64, x as i64)
                .to_f64()
                .expect("fits f64 on this range");
            let residual = (det - c(reference, 0.0)).norm() / reference.abs().max(1.0);
            sweep.record(residual, || format!("m {m} x {x}"));
        }
    }
    report("constant_band_det_fib_identity", 1e-12, sweep)
}

fn scaled_cosine_spectrum() -> PropertyReport {
    let mut sweep = Sweep::new();
    for n in 3..=15usize {
        let spec = FamilySpec::new(Family::A, n, c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        let vals = eigenvalues(&spec).unwrap();
        for (i, v) in vals.iter().enumerate() {
            let expected = 2.0 * ((i as f64) * std::f64::consts::PI / ((n - 1) as f64)).cos();
            sweep.record((v - c(expected, 0.0)).norm(), || format!("n {n} k {}", i + 1));
        }
    }
    for n in 2..=15usize {
        let (a, b) = (c(0.8, -0.6), c(0.0, 1.5));
        let spec = FamilySpec::new(Family::ADagger, n, a, b).unwrap();
        let vals = eigenvalues(&spec).unwrap();
        for (i, v) in vals.iter().enumerate() {
            let k = (i + 1) as f64;
            let expected = a - 2.0 * b * (k * std::f64::consts::PI / (n as f64)).cos();
            sweep.record((v - expected).norm() / expected.norm().max(1.0), || {
                format!("dagger n {n} k {}", i + 1)
            });
        }
    }
    report("scaled_cosine_spectrum", 1e-12, sweep)
}

/// Runs every property sweep and collects the per-property reports.
pub fn run_all() -> VerifySummary {
    let reports = vec![
        det_sign_flip_invariance(),
        mat_mul_associativity(),
        oracle_power_group_law(),
        inverse_roundtrip(),
        cheb_t_cosine_bridge(),
        delta_cheb_u_bridge(),
        cheb_t_half_degree_recurrence(),
        eigen_residual_sweep(),
        eigenvalue_distinctness(),
        det_eigenvalue_product_bridge(),
        power_first_reconstruction(),
        modal_inverse_vs_numeric(),
        closed_power_group_law(),
        closed_vs_oracle_powers(),
        closed_power_trace_sum(),
        closed_inverse_vs_numeric(),
        det_fibpoly_identity(),
        fibpoly_factor_vs_recurrence(),
        dagger_det_identity(),
        sequence_factor_products(),
        sequence_factor_realness(),
        factor_conjugate_pairing(),
        dagger_laplace_expansion(),
        constant_band_det_fib_identity(),
        scaled_cosine_spectrum(),
    ];
    VerifySummary { reports }
}
