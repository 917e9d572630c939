//! Morse-theoretic counting: Morse polynomials from index profiles, the
//! strong inequality test M − P = Q·(1+t) with Q ≥ 0, the weak and
//! alternating inequalities, and a closed-form distance-squared fixture
//! on round spheres where the critical points and their indices are
//! computable exactly from the shape operator.

use serde::{Deserialize, Serialize};

/// Multiset of Morse indices of a function's critical points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseProfile {
    pub indices: Vec<usize>,
}

impl MorseProfile {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        MorseProfile { indices }
    }
}

/// A polynomial with integer coefficients, constant term first, trailing
/// zeros trimmed (so the zero polynomial is the empty list).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPolynomial(pub Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.0.len().max(other.0.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (a, i) {
                (_, 0) => write!(f, "{}", a)?,
                (1, 1) => write!(f, "t")?,
                (_, 1) => write!(f, "{}t", a)?,
                (1, _) => write!(f, "t^{}", i)?,
                _ => write!(f, "{}t^{}", a, i)?,
            }
        }
        Ok(())
    }
}

/// M(t) = Σ μ_i t^i, where μ_i counts critical points of index i.
pub fn morse_polynomial(profile: &MorseProfile) -> IntPolynomial {
    let top = profile.indices.iter().copied().max();
    let mut coeffs = vec![0i64; top.map_or(0, |t| t + 1)];
    for &i in &profile.indices {
        coeffs[i] += 1;
    }
    IntPolynomial::new(coeffs)
}

/// The strong Morse inequalities in polynomial form: M − P = Q·(1+t)
/// for some polynomial Q with nonnegative integer coefficients. Returns
/// Q when the exact division succeeds and Q ≥ 0, `None` otherwise.
/// Division by 1+t is synthetic: q_i = d_i − q_{i−1}, remainder must
/// vanish.
pub fn morse_inequality_check(m: &IntPolynomial, p: &IntPolynomial) -> Option<IntPolynomial> {
    let d = m.sub(p);
    if d.is_zero() {
        return Some(IntPolynomial::zero());
    }
    let mut q = Vec::with_capacity(d.0.len());
    let mut carry = 0i64;
    for &di in &d.0 {
        let qi = di - carry;
        q.push(qi);
        carry = qi;
    }
    // carry is now the remainder at t = -1 stage: it must be the last
    // quotient coefficient, and the division is exact iff the quotient's
    // leading entry closes the recursion, i.e. the synthetic remainder
    // (the final carry beyond the data) is zero.
    if carry != 0 {
        return None;
    }
    q.pop(); // the closing zero
    if q.iter().any(|&c| c < 0) {
        return None;
    }
    Some(IntPolynomial::new(q))
}

/// Outcome of the weak and alternating Morse inequalities.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeakInequalityReport {
    pub pass: bool,
    pub first_violation: Option<String>,
}

/// Check b_k ≤ μ_k for every k, and every alternating partial sum
/// Σ_{i≤k} (−1)^{k−i} b_i ≤ Σ_{i≤k} (−1)^{k−i} μ_i. M carries the μ_k,
/// P the b_k.
pub fn weak_inequalities(m: &IntPolynomial, p: &IntPolynomial) -> WeakInequalityReport {
    let len = m.0.len().max(p.0.len());
    for k in 0..len {
        if p.coeff(k) > m.coeff(k) {
            return WeakInequalityReport {
                pass: false,
                first_violation: Some(format!(
                    "b_{k} = {} exceeds μ_{k} = {}",
                    p.coeff(k),
                    m.coeff(k)
                )),
            };
        }
    }
    for k in 0..len {
        let mut alt_b = 0i64;
        let mut alt_m = 0i64;
        for i in (0..=k).rev() {
            let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
            alt_b += sign * p.coeff(i);
            alt_m += sign * m.coeff(i);
        }
        if alt_b > alt_m {
            return WeakInequalityReport {
                pass: false,
                first_violation: Some(format!(
                    "alternating sum through degree {k}: {} exceeds {}",
                    alt_b, alt_m
                )),
            };
        }
    }
    WeakInequalityReport {
        pass: true,
        first_violation: None,
    }
}

/// Critical points of the distance-squared function L_q(p) = |p − q|² on
/// the m-sphere of the given center and radius in R^{m+1}. They are the
/// two antipodal points on the line through center and q; the Hessian
/// there is (1 − t/radius)·identity on the tangent space, with t the
/// component of p − q along the outward normal, so each index is 0 or m
/// by the sign of that eigenvalue. q = center is rejected: every point
/// is critical and degenerate.
pub fn sphere_distance_morse(
    center: &[f64],
    radius: f64,
    q: &[f64],
) -> Result<MorseProfile, String> {
    if center.len() != q.len() {
        return Err("center and q must live in the same R^{m+1}".into());
    }
    let m1 = center.len();
    if m1 < 1 {
        return Err("ambient dimension must be at least 1".into());
    }
    if !(radius > 0.0) {
        return Err("radius must be positive".into());
    }
    let m = m1 - 1;
    let diff: Vec<f64> = (0..m1).map(|i| q[i] - center[i]).collect();
    let dist = diff.iter().map(|x| x * x).sum::<f64>().sqrt();
    if dist < 1e-12 {
        return Err("q coincides with the center: the distance function is degenerate".into());
    }
    let mut indices = Vec::new();
    // the two critical points p = center ± radius·u, outward normal ±u
    for &sign in &[1.0f64, -1.0] {
        // t = <p - q, outward normal> = <center + sign·radius·u - q, sign·u>
        let t = sign * (sign * radius - dist);
        let eigenvalue = 1.0 - t / radius;
        if eigenvalue.abs() < 1e-12 {
            return Err("degenerate critical point: q lies on the focal set".into());
        }
        indices.push(if eigenvalue > 0.0 { 0 } else { m });
    }
    Ok(MorseProfile::new(indices))
}
