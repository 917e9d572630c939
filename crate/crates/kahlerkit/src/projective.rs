//! Complex projective space P^n: line bundles O(k), their sections and
//! transition cocycles, the CW homology of P^n, and the Fubini-Study
//! metric with its numeric sanity checks (positivity, closedness, the
//! curvature identity for O(1), and the normalized volume of P^1).
//!
//! Everything about bundle classes is exact; the metric side is f64
//! because it involves transcendental functions, with explicit
//! tolerances on every check.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cech::AbelianGroup;
use crate::chern::CohClass;
use crate::linalg::{smith_normal_form, IntMatrix};

/// The isomorphism class of a holomorphic line bundle on P^n, i.e. O(k).
/// Pic(P^n) = Z, so the twist `k` is a complete invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleClass {
    pub n: usize,
    pub k: i64,
}

impl LineBundleClass {
    pub fn new(n: usize, k: i64) -> Self {
        LineBundleClass { n, k }
    }

    /// O(k) ⊗ O(l) = O(k + l).
    pub fn tensor(&self, other: &LineBundleClass) -> Result<LineBundleClass, String> {
        if self.n != other.n {
            return Err(format!(
                "cannot tensor bundles on P^{} and P^{}",
                self.n, other.n
            ));
        }
        Ok(LineBundleClass::new(self.n, self.k + other.k))
    }

    /// O(k)^* = O(-k).
    pub fn dual(&self) -> LineBundleClass {
        LineBundleClass::new(self.n, -self.k)
    }

    /// First Chern class k·h in H^2(P^n, Z) = Z[h]/(h^{n+1}).
    pub fn first_chern(&self) -> CohClass {
        let mut c = CohClass::zero(self.n);
        if self.n >= 1 {
            c = c.add(&CohClass::monomial(self.n, 1, self.k));
        }
        c
    }
}

/// The bundle class O(Σ aᵢ dᵢ) of a divisor given as a formal sum of
/// degree-dᵢ hypersurfaces with multiplicities aᵢ.
pub fn divisor_class(n: usize, components: &[(i64, u32)]) -> LineBundleClass {
    let k = components.iter().map(|&(a, d)| a * d as i64).sum();
    LineBundleClass::new(n, k)
}

/// dim H^0(P^n, O(k)) = C(n+k, n) for k ≥ 0, zero otherwise: global
/// sections are the degree-k homogeneous polynomials in n+1 variables.
pub fn h0_dim(n: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..n {
        acc *= BigInt::from(k + 1 + i as i64);
        acc /= BigInt::from(i as i64 + 1);
    }
    acc
}

/// Count degree-k monomials in n+1 variables by explicit enumeration.
/// Deliberately independent of `h0_dim`, as its cross-check.
pub fn monomial_count(n: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    // number of (e_0, ..., e_n) with non-negative entries summing to k
    fn count(vars: usize, total: i64) -> u64 {
        if vars == 1 {
            return 1;
        }
        (0..=total).map(|e| count(vars - 1, total - e)).sum()
    }
    BigInt::from(count(n + 1, k))
}

/// A point of P^n in the affine chart U_i = {z_i ≠ 0}, with the n
/// inhomogeneous coordinates w_a = z_a / z_i (a ≠ i, in increasing order).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChartPoint {
    pub chart: usize,
    pub w: Vec<Complex64>,
}

impl ChartPoint {
    pub fn new(chart: usize, w: Vec<Complex64>) -> Self {
        ChartPoint { chart, w }
    }

    fn n(&self) -> usize {
        self.w.len()
    }

    /// Homogeneous coordinates [z_0 : ... : z_n] with z_chart = 1.
    pub fn homogeneous(&self) -> Vec<Complex64> {
        let mut z = Vec::with_capacity(self.n() + 1);
        let mut it = self.w.iter();
        for idx in 0..=self.n() {
            if idx == self.chart {
                z.push(Complex64::new(1.0, 0.0));
            } else {
                z.push(*it.next().unwrap());
            }
        }
        z
    }

    /// The same point in chart U_j, if it lies there (|z_j| above the
    /// degeneracy threshold).
    pub fn to_chart(&self, j: usize) -> Option<ChartPoint> {
        let z = self.homogeneous();
        if z[j].norm() <= OVERLAP_EPS {
            return None;
        }
        let w = (0..z.len())
            .filter(|&a| a != j)
            .map(|a| z[a] / z[j])
            .collect();
        Some(ChartPoint { chart: j, w })
    }
}

/// Below this magnitude a homogeneous coordinate is treated as zero,
/// i.e. the point is considered outside the corresponding chart.
pub const OVERLAP_EPS: f64 = 1e-10;

/// Transition function of O(k) from chart U_i to chart U_j at a point of
/// the overlap: φ_{ij} = (z_j / z_i)^k. Errors if the point is too close
/// to either coordinate hyperplane for the quotient to be trustworthy.
pub fn cocycle_eval(bundle: &LineBundleClass, p: &ChartPoint, j: usize) -> Result<Complex64, String> {
    if j > bundle.n || p.chart > bundle.n || p.n() != bundle.n {
        return Err("chart index out of range for this projective space".into());
    }
    let z = p.homogeneous();
    if z[p.chart].norm() <= OVERLAP_EPS || z[j].norm() <= OVERLAP_EPS {
        return Err(format!(
            "point is not safely inside the overlap U_{} ∩ U_{}",
            p.chart, j
        ));
    }
    Ok((z[j] / z[p.chart]).powi(bundle.k as i32))
}

/// H_*(P^n, Z) from the standard CW structure: one cell in each even
/// dimension 0, 2, ..., 2n and none in odd dimensions, so every boundary
/// map is zero. The homology is still run through Smith normal form
/// rather than read off, so the elimination path is exercised.
pub fn cw_homology_pn(n: usize) -> Vec<AbelianGroup> {
    let cells: Vec<usize> = (0..=2 * n).map(|d| if d % 2 == 0 { 1 } else { 0 }).collect();
    let boundary = |d: usize| -> IntMatrix {
        // ∂_d : C_d → C_{d-1}; one side is always rank zero here.
        let rows = if d >= 1 { cells[d - 1] } else { 0 };
        IntMatrix::zeros(rows, cells[d])
    };
    let mut out = Vec::with_capacity(2 * n + 1);
    for d in 0..=2 * n {
        let del_d = boundary(d);
        let del_up = if d + 1 <= 2 * n {
            boundary(d + 1)
        } else {
            IntMatrix::zeros(cells[d], 0)
        };
        let snf_d = smith_normal_form(&del_d);
        let snf_up = smith_normal_form(&del_up);
        let cycles = cells[d] - snf_d.rank();
        let free_rank = cycles - snf_up.rank();
        let torsion = snf_up
            .invariant_factors()
            .into_iter()
            .map(|f| if f.sign() == num_bigint::Sign::Minus { -f } else { f })
            .filter(|f| f > &BigInt::one())
            .collect();
        out.push(AbelianGroup { free_rank, torsion });
    }
    out
}

/// The Fubini-Study metric tensor h_{ab̄} at a chart point, normalized so
/// that the associated (1,1)-form integrates to 1 on every line:
/// h_{ab̄} = (1/π) [(1+|w|²) δ_{ab} − w̄_a w_b] / (1+|w|²)².
pub fn fubini_study_matrix(p: &ChartPoint) -> Vec<Vec<Complex64>> {
    let n = p.n();
    let s: f64 = 1.0 + p.w.iter().map(|z| z.norm_sqr()).sum::<f64>();
    let denom = std::f64::consts::PI * s * s;
    let mut h = vec![vec![Complex64::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let mut v = -p.w[a].conj() * p.w[b];
            if a == b {
                v += Complex64::new(s, 0.0);
            }
            h[a][b] = v / denom;
        }
    }
    h
}

/// Outcome of the pointwise Fubini-Study sanity checks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FsReport {
    /// Hermitian positive-definiteness (Cholesky succeeded).
    pub positive: bool,
    /// max |h_{ab̄} − conj(h_{bā})|
    pub hermitian_err: f64,
    /// max |∂_c h_{ab̄} − ∂_a h_{cb̄}|, the dω = 0 residual in (1,1)-data
    pub closedness_residual: f64,
    pub pass: bool,
}

/// Cholesky test for Hermitian positive definiteness.
fn is_positive_definite(h: &[Vec<Complex64>]) -> bool {
    let n = h.len();
    let mut l = vec![vec![Complex64::zero(); n]; n];
    for j in 0..n {
        let mut d = h[j][j].re;
        for k in 0..j {
            d -= l[j][k].norm_sqr();
        }
        if d <= 0.0 {
            return false;
        }
        let dj = d.sqrt();
        l[j][j] = Complex64::new(dj, 0.0);
        for i in (j + 1)..n {
            let mut s = h[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k].conj();
            }
            l[i][j] = s / dj;
        }
    }
    true
}

fn shifted(p: &ChartPoint, c: usize, dx: f64, dy: f64) -> ChartPoint {
    let mut q = p.clone();
    q.w[c] += Complex64::new(dx, dy);
    q
}

/// Holomorphic derivative ∂_c = ½(∂_x − i ∂_y) of a chart-point-valued
/// function by central differences.
fn del_c<F: Fn(&ChartPoint) -> Complex64>(f: &F, p: &ChartPoint, c: usize, step: f64) -> Complex64 {
    let fx = (f(&shifted(p, c, step, 0.0)) - f(&shifted(p, c, -step, 0.0))) / (2.0 * step);
    let fy = (f(&shifted(p, c, 0.0, step)) - f(&shifted(p, c, 0.0, -step))) / (2.0 * step);
    (fx - Complex64::i() * fy) * 0.5
}

/// Antiholomorphic derivative ∂̄_c = ½(∂_x + i ∂_y), same scheme.
fn delbar_c<F: Fn(&ChartPoint) -> Complex64>(
    f: &F,
    p: &ChartPoint,
    c: usize,
    step: f64,
) -> Complex64 {
    let fx = (f(&shifted(p, c, step, 0.0)) - f(&shifted(p, c, -step, 0.0))) / (2.0 * step);
    let fy = (f(&shifted(p, c, 0.0, step)) - f(&shifted(p, c, 0.0, -step))) / (2.0 * step);
    (fx + Complex64::i() * fy) * 0.5
}

/// Pointwise checks on the Fubini-Study metric: Hermitian symmetry,
/// positive definiteness, and the symmetry ∂_c h_{ab̄} = ∂_a h_{cb̄}
/// that encodes closedness of the Kähler form.
pub fn fs_checks(p: &ChartPoint, step: f64, tol: f64) -> FsReport {
    let n = p.n();
    let h = fubini_study_matrix(p);
    let mut hermitian_err: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            hermitian_err = hermitian_err.max((h[a][b] - h[b][a].conj()).norm());
        }
    }
    let positive = is_positive_definite(&h);

    let mut closedness_residual: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let entry_ab = |q: &ChartPoint| fubini_study_matrix(q)[a][b];
                let entry_cb = |q: &ChartPoint| fubini_study_matrix(q)[c][b];
                let lhs = del_c(&entry_ab, p, c, step);
                let rhs = del_c(&entry_cb, p, a, step);
                closedness_residual = closedness_residual.max((lhs - rhs).norm());
            }
        }
    }
    let pass = positive && hermitian_err <= tol && closedness_residual <= tol;
    FsReport {
        positive,
        hermitian_err,
        closedness_residual,
        pass,
    }
}

// 8-point Gauss-Legendre nodes and weights on [-1, 1].
const GL_NODES: [f64; 8] = [
    -0.9602898564975363,
    -0.7966664774136267,
    -0.5255324099163290,
    -0.1834346424956498,
    0.1834346424956498,
    0.5255324099163290,
    0.7966664774136267,
    0.9602898564975363,
];
const GL_WEIGHTS: [f64; 8] = [
    0.1012285362903763,
    0.2223810344533745,
    0.3137066458778873,
    0.3626837833783620,
    0.3626837833783620,
    0.3137066458778873,
    0.2223810344533745,
    0.1012285362903763,
];

/// Composite 8-point Gauss-Legendre quadrature with `panels` subintervals.
fn gauss_legendre<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let width = (b - a) / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * width;
        let mid = lo + 0.5 * width;
        let half = 0.5 * width;
        for (x, w) in GL_NODES.iter().zip(GL_WEIGHTS.iter()) {
            acc += w * half * f(mid + half * x);
        }
    }
    acc
}

/// ∫ over the radial disc |w| ≤ radius of the Fubini-Study form on P^1,
/// by quadrature of the radial density 2r/(1+r²)². Closed form:
/// 1 − 1/(1+radius²); used as the oracle for the full integral.
pub fn fs_integral_disc(radius: f64, tol: f64) -> Result<f64, String> {
    let f = |r: f64| 2.0 * r / (1.0 + r * r).powi(2);
    refine(&f, 0.0, radius, tol)
}

/// ∫_{P^1} ω_FS. Substituting r = tan t maps [0, ∞) to [0, π/2) and the
/// radial density 2r/(1+r²)² to 2 tan t / (1 + tan²t), which is bounded,
/// so plain quadrature applies. The answer should be exactly 1.
pub fn fs_integral_p1(tol: f64) -> Result<f64, String> {
    let g = |t: f64| {
        let tt = t.tan();
        2.0 * tt / (1.0 + tt * tt)
    };
    refine(&g, 0.0, std::f64::consts::FRAC_PI_2, tol)
}

/// Refine composite quadrature by doubling panel counts until two
/// successive values agree within tol.
fn refine<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64, String> {
    if !(tol > 0.0) {
        return Err("tolerance must be positive".into());
    }
    let mut prev = gauss_legendre(f, a, b, 1);
    let mut panels = 2;
    while panels <= 4096 {
        let cur = gauss_legendre(f, a, b, panels);
        if (cur - prev).abs() <= 0.5 * tol {
            return Ok(cur);
        }
        prev = cur;
        panels *= 2;
    }
    Err(format!(
        "quadrature did not stabilize to {} within 4096 panels",
        tol
    ))
}

/// The standard hermitian metric on O(1) in chart U_i:
/// h(w) = 1 / (1 + Σ|w_a|²), the norm² of the frame section z_i.
pub fn o1_metric(p: &ChartPoint) -> f64 {
    1.0 / (1.0 + p.w.iter().map(|z| z.norm_sqr()).sum::<f64>())
}

/// Metric on O(k) induced from the O(1) metric: h^k.
pub fn ok_metric(p: &ChartPoint, k: i64) -> f64 {
    o1_metric(p).powi(k as i32)
}

/// Result of the Chern-Weil curvature check for O(k).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub max_err: f64,
    pub pass: bool,
}

/// Verify numerically that (−1/π) ∂_a ∂̄_b log(h^k) equals k times the
/// Fubini-Study tensor at the given point, i.e. that the curvature form
/// of O(k) represents k·ω_FS.
pub fn chern_curvature_check(p: &ChartPoint, k: i64, step: f64, tol: f64) -> CurvatureReport {
    let n = p.n();
    let h_fs = fubini_study_matrix(p);
    let log_hk = |q: &ChartPoint| Complex64::new((k as f64) * o1_metric(q).ln(), 0.0);
    let mut max_err: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let inner = |q: &ChartPoint| delbar_c(&log_hk, q, b, step);
            let mixed = del_c(&inner, p, a, step);
            let candidate = -mixed / std::f64::consts::PI;
            let target = h_fs[a][b] * (k as f64);
            max_err = max_err.max((candidate - target).norm());
        }
    }
    CurvatureReport {
        max_err,
        pass: max_err <= tol,
    }
}

/// Hard Lefschetz on the cohomology ring of P^n: multiplication by
/// h^{n-k} is a bijection H^k → H^{2n-k} (both are rank ≤ 1 here, so
/// the check is that generators map to generators).
pub fn hard_lefschetz_ring(n: usize, k: usize) -> Result<bool, String> {
    if k > n {
        return Err(format!("need k ≤ n, got k = {}, n = {}", k, n));
    }
    if k % 2 == 1 {
        // odd cohomology of P^n vanishes; the map 0 → 0 is a bijection
        return Ok(true);
    }
    let gen = CohClass::monomial(n, k / 2, 1);
    let power = CohClass::monomial(n, n - k, 1);
    let image = gen.mul(&power);
    let target = CohClass::monomial(n, n - k / 2, 1);
    Ok(image == target)
}
