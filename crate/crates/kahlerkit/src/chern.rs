//! Chern-class calculus in the truncated ring Z[h]/(h^{m+1}), where h is the
//! hyperplane class generating H*(Pᵐ, Z).
//!
//! Total classes of complete intersections come from the Euler sequence plus
//! Whitney's formula on the normal sequence. Euler characteristics are read
//! off as the top Chern number, normalized by ∫_{Pᵐ} h^m = 1; that step
//! (Gauss–Bonnet–Chern) is classical input, not derived here, and every χ
//! computed this way is cross-checked in the tests against direct series
//! expansion.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::ExactMatrix;
use crate::scalar::GaussianRational;

/// Element Σ aᵢ hⁱ of Z[h]/(h^{m+1}).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CohClass {
    /// truncation degree: powers above h^m vanish
    pub m: usize,
    /// coefficients a₀..a_m, always of length m+1
    pub coeffs: Vec<BigInt>,
}

impl CohClass {
    pub fn zero(m: usize) -> Self {
        CohClass {
            m,
            coeffs: vec![BigInt::zero(); m + 1],
        }
    }

    pub fn one(m: usize) -> Self {
        let mut c = Self::zero(m);
        c.coeffs[0] = BigInt::one();
        c
    }

    /// The class c·h^k (zero when k > m).
    pub fn monomial(m: usize, k: usize, c: i64) -> Self {
        let mut out = Self::zero(m);
        if k <= m {
            out.coeffs[k] = BigInt::from(c);
        }
        out
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        assert_eq!(self.m, other.m, "truncation mismatch");
        CohClass {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &CohClass) -> CohClass {
        assert_eq!(self.m, other.m, "truncation mismatch");
        let mut out = Self::zero(self.m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.m {
                    break;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// A total Chern class: a CohClass with constant term 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernSeries(CohClass);

impl ChernSeries {
    pub fn new(class: CohClass) -> Result<ChernSeries, String> {
        if !class.coeffs[0].is_one() {
            return Err("total Chern class must have constant term 1".into());
        }
        Ok(ChernSeries(class))
    }

    pub fn one(m: usize) -> Self {
        ChernSeries(CohClass::one(m))
    }

    /// 1 + d·h, the total class of O(d).
    pub fn line_bundle(m: usize, d: i64) -> Self {
        let mut c = CohClass::one(m);
        if m >= 1 {
            c.coeffs[1] = BigInt::from(d);
        }
        ChernSeries(c)
    }

    pub fn class(&self) -> &CohClass {
        &self.0
    }

    /// The k-th Chern class c_k, the h^k coefficient.
    pub fn chern(&self, k: usize) -> &BigInt {
        self.0.coeff(k)
    }

    pub fn truncation(&self) -> usize {
        self.0.m
    }
}

/// Whitney product c(E⊕F) = c(E)·c(F).
pub fn whitney_product(a: &ChernSeries, b: &ChernSeries) -> ChernSeries {
    assert_eq!(a.truncation(), b.truncation(), "truncation mismatch");
    ChernSeries(a.0.mul(&b.0))
}

/// Multiplicative inverse of a series with constant term 1, term by term.
pub fn series_inverse(a: &ChernSeries) -> ChernSeries {
    let m = a.truncation();
    let mut inv = CohClass::zero(m);
    inv.coeffs[0] = BigInt::one();
    for k in 1..=m {
        // a₀·inv_k = −Σ_{j=1..k} a_j·inv_{k−j}, with a₀ = 1
        let mut s = BigInt::zero();
        for j in 1..=k {
            s += &a.0.coeffs[j] * &inv.coeffs[k - j];
        }
        inv.coeffs[k] = -s;
    }
    ChernSeries(inv)
}

/// c(Pⁿ) = (1+h)^{n+1} truncated at h^{n+1}, built by repeated Whitney
/// products from the Euler sequence factors.
pub fn chern_pn(n: usize) -> ChernSeries {
    assert!(n >= 1);
    let h = ChernSeries::line_bundle(n, 1);
    let mut c = ChernSeries::one(n);
    for _ in 0..=n {
        c = whitney_product(&c, &h);
    }
    c
}

/// c(T_Y) for Y ⊂ Pᵐ a smooth complete intersection of the given degrees:
/// (1+h)^{m+1} · Π_j (1+d_j h)⁻¹, restricted (formally) to Y.
///
/// An empty degree list returns c(Pᵐ).
pub fn chern_complete_intersection(m: usize, degrees: &[u32]) -> Result<ChernSeries, String> {
    if degrees.len() > m {
        return Err(format!(
            "{} hypersurfaces in P^{} leave negative dimension",
            degrees.len(),
            m
        ));
    }
    if degrees.iter().any(|&d| d == 0) {
        return Err("degrees must be positive".into());
    }
    let mut c = chern_pn(m);
    for &d in degrees {
        c = whitney_product(&c, &series_inverse(&ChernSeries::line_bundle(m, d as i64)));
    }
    Ok(c)
}

/// Degree of the canonical bundle: K_Y ≅ O(Σd_j − m − 1)|_Y.
pub fn canonical_degree(m: usize, degrees: &[u32]) -> i64 {
    degrees.iter().map(|&d| d as i64).sum::<i64>() - m as i64 - 1
}

/// Topological Euler characteristic of the complete intersection, extracted
/// as the h^m coefficient of c(T_Y)·Π(d_j h) with ∫_{Pᵐ} h^m = 1.
pub fn euler_characteristic(m: usize, degrees: &[u32]) -> Result<BigInt, String> {
    let k = degrees.len();
    if k > m {
        return Err("negative dimension".into());
    }
    let c = chern_complete_intersection(m, degrees)?;
    let mut total = c.class().clone();
    for &d in degrees {
        total = total.mul(&CohClass::monomial(m, 1, d as i64));
    }
    Ok(total.coeff(m).clone())
}

/// The invariant polynomials P̃_k of a square matrix, characterized by
/// det(I + B) = 1 + P̃₁(B) + … + P̃_r(B): the elementary symmetric functions
/// of the eigenvalues, computed by Faddeev–LeVerrier (exact over Q(i)).
pub fn chern_forms_from_matrix(b: &ExactMatrix) -> Result<Vec<GaussianRational>, String> {
    if b.rows != b.cols {
        return Err("matrix must be square".into());
    }
    let r = b.rows;
    let mut out = Vec::with_capacity(r);
    let mut mk = b.clone(); // M₁ = B
    for k in 1..=r {
        let mut tr = GaussianRational::zero();
        for i in 0..r {
            tr += mk[(i, i)].clone();
        }
        // char-poly coefficient c_k = −tr(M_k)/k; e_k = (−1)^k c_k
        let ck = tr * GaussianRational::from_frac(-1, k as i64);
        let ek = if k % 2 == 0 { ck.clone() } else { -&ck };
        out.push(ek);
        if k < r {
            // M_{k+1} = B·(M_k + c_k·I)
            let mut shifted = mk.clone();
            for i in 0..r {
                shifted[(i, i)] = &shifted[(i, i)] + &ck;
            }
            mk = b.mul(&shifted);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(m: usize, coeffs: &[i64]) -> ChernSeries {
        let mut c = CohClass::zero(m);
        for (i, &a) in coeffs.iter().enumerate() {
            c.coeffs[i] = BigInt::from(a);
        }
        ChernSeries::new(c).unwrap()
    }

    #[test]
    fn whitney_basic() {
        let a = series(2, &[1, 1]); // 1+h
        let b = series(2, &[1, 2]); // 1+2h
        assert_eq!(whitney_product(&a, &b), series(2, &[1, 3, 2]));
        assert_eq!(whitney_product(&a, &ChernSeries::one(2)), a);
        assert_eq!(whitney_product(&a, &b), whitney_product(&b, &a));
    }

    #[test]
    fn chern_pn_small() {
        assert_eq!(chern_pn(1), series(1, &[1, 2]));
        assert_eq!(chern_pn(2), series(2, &[1, 3, 3]));
        // c₁(Pⁿ) = n+1 so c₁(K) = −(n+1)
        for n in 1..=6 {
            assert_eq!(chern_pn(n).chern(1), &BigInt::from(n as i64 + 1));
        }
    }

    #[test]
    fn inverse_geometric_series() {
        assert_eq!(series_inverse(&ChernSeries::one(3)), ChernSeries::one(3));
        let a = ChernSeries::line_bundle(2, 3); // d = 3, mod h³
        assert_eq!(series_inverse(&a), series(2, &[1, -3, 9]));
        let b = series(4, &[1, 2, -1, 5, 0]);
        assert_eq!(
            whitney_product(&b, &series_inverse(&b)),
            ChernSeries::one(4)
        );
        assert_eq!(series_inverse(&series_inverse(&b)), b);
    }

    #[test]
    fn complete_intersection_classes() {
        // quartic surface in P³: c₁ = 0
        let quartic = chern_complete_intersection(3, &[4]).unwrap();
        assert_eq!(quartic.chern(1), &BigInt::zero());
        assert_eq!(quartic.chern(2), &BigInt::from(6));
        // empty list → c(Pᵐ)
        assert_eq!(chern_complete_intersection(2, &[]).unwrap(), chern_pn(2));
        // quadric in P³: c₁ = 4 − 2 = 2
        let quadric = chern_complete_intersection(3, &[2]).unwrap();
        assert_eq!(quadric.chern(1), &BigInt::from(2));
        // general: c₁ = m+1−Σd
        let ci = chern_complete_intersection(5, &[2, 3]).unwrap();
        assert_eq!(ci.chern(1), &BigInt::from(1));
        assert!(chern_complete_intersection(2, &[1, 1, 1]).is_err());
    }

    #[test]
    fn canonical_degrees() {
        assert_eq!(canonical_degree(3, &[4]), 0); // quartic: trivial canonical
        for n in 1..=6 {
            assert_eq!(canonical_degree(n, &[]), -(n as i64 + 1));
        }
        assert_eq!(canonical_degree(4, &[2, 3]), 0);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_characteristic(2, &[]).unwrap(), BigInt::from(3)); // χ(P²)
        for m in 1..=6 {
            assert_eq!(
                euler_characteristic(m, &[]).unwrap(),
                BigInt::from(m as i64 + 1)
            );
        }
        assert_eq!(euler_characteristic(3, &[4]).unwrap(), BigInt::from(24)); // K3
        assert_eq!(euler_characteristic(2, &[3]).unwrap(), BigInt::zero()); // elliptic curve
        // hyperplane in Pᵐ is P^{m−1}
        for m in 2..=6 {
            assert_eq!(
                euler_characteristic(m, &[1]).unwrap(),
                BigInt::from(m as i64)
            );
        }
    }

    #[test]
    fn plane_curve_genus_formula() {
        // χ = 2 − (d−1)(d−2) for plane curves of degree d
        for d in 1..=8u32 {
            let chi = euler_characteristic(2, &[d]).unwrap();
            let expect = 2 - ((d as i64 - 1) * (d as i64 - 2));
            assert_eq!(chi, BigInt::from(expect));
        }
    }

    #[test]
    fn euler_sequence_two_routes() {
        // c(Pⁿ) via repeated Whitney equals c(O(1))^{n+1} multiplied out directly
        for n in 1..=6usize {
            let repeated = chern_pn(n);
            let mut direct = CohClass::one(n);
            let h1 = ChernSeries::line_bundle(n, 1);
            for _ in 0..=n {
                direct = direct.mul(h1.class());
            }
            assert_eq!(repeated.class(), &direct);
        }
    }

    #[test]
    fn invariant_polynomials_basics() {
        let z = ExactMatrix::zeros(3, 3);
        assert!(chern_forms_from_matrix(&z)
            .unwrap()
            .iter()
            .all(|c| c.is_zero()));
        let i2 = ExactMatrix::identity(2);
        assert_eq!(
            chern_forms_from_matrix(&i2).unwrap(),
            vec![GaussianRational::from_int(2), GaussianRational::from_int(1)]
        );
        let d = ExactMatrix::from_int_rows(&[&[1, 0], &[0, 2]]);
        assert_eq!(
            chern_forms_from_matrix(&d).unwrap(),
            vec![GaussianRational::from_int(3), GaussianRational::from_int(2)]
        );
        assert!(chern_forms_from_matrix(&ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn invariant_under_conjugation() {
        let b = ExactMatrix::from_int_rows(&[&[1, 2, 0], &[0, 3, -1], &[4, 0, 2]]);
        let c = ExactMatrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let cinv = c.inverse().unwrap();
        let conj = c.mul(&b).mul(&cinv);
        assert_eq!(
            chern_forms_from_matrix(&b).unwrap(),
            chern_forms_from_matrix(&conj).unwrap()
        );
    }

    #[test]
    fn trace_and_det_endpoints() {
        let b = ExactMatrix::from_int_rows(&[&[2, 1], &[1, 3]]);
        let p = chern_forms_from_matrix(&b).unwrap();
        assert_eq!(p[0], GaussianRational::from_int(5)); // trace
        assert_eq!(p[1], GaussianRational::from_int(5)); // det = 6 − 1
    }
}
