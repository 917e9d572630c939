//! The complexified exterior algebra Λ*(Cⁿ)* with its (p,q) bigrading,
//! Hodge star, and the sl(2) action by the Lefschetz operators L, Λ, H.
//!
//! Conventions, fixed once here and relied on everywhere else:
//! - the real basis {dx_k, dy_k} is orthonormal, so ⟨dz_k, dz_k⟩ = 2 and
//!   vol = dx₁∧dy₁∧…∧dxₙ∧dyₙ;
//! - basis monomials are ordered dz₁ < … < dzₙ < dz̄₁ < … < dz̄ₙ and stored
//!   sorted, with signs from transposition counts;
//! - ω = (i/2) Σ dz_k∧dz̄_k, Λ = ∗⁻¹∘L∘∗, H scales degree k by (k − n).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::ExactMatrix;
use crate::scalar::GaussianRational;

/// Basis monomial dz_I ∧ dz̄_J, each index set a bitmask over {1..n} (bit k-1
/// for index k), implicitly sorted in canonical order.
pub type Monomial = (u32, u32);

/// Bidegree (p, q) of a homogeneous form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bidegree {
    pub p: usize,
    pub q: usize,
}

/// Element of Λ*(Cⁿ)* with constant Q(i) coefficients, stored sparsely.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtForm {
    pub dim: usize,
    pub terms: BTreeMap<Monomial, GaussianRational>,
}

/// Sign of sorting the concatenation of two disjoint sorted index sets,
/// or `None` when they overlap (the wedge vanishes).
pub(crate) fn merge_sign(a: u32, b: u32) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut bb = b;
    while bb != 0 {
        let k = bb.trailing_zeros();
        inversions += (a >> (k + 1)).count_ones();
        bb &= bb - 1;
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// Wedge of two basis monomials: (sign, combined monomial), or `None` if zero.
pub(crate) fn wedge_monomials(a: Monomial, b: Monomial) -> Option<(i32, Monomial)> {
    let s1 = merge_sign(a.0, b.0)?;
    let s2 = merge_sign(a.1, b.1)?;
    // move the dz-part of b past the dz̄-part of a
    let cross = (b.0.count_ones() * a.1.count_ones()) % 2;
    let sign = if cross == 0 { s1 * s2 } else { -s1 * s2 };
    Some((sign, (a.0 | b.0, a.1 | b.1)))
}

impl ExtForm {
    pub fn zero(dim: usize) -> Self {
        ExtForm {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, 0, 0)
    }

    /// The basis form dz_I ∧ dz̄_J with coefficient 1.
    pub fn monomial(dim: usize, i_mask: u32, j_mask: u32) -> Self {
        assert!(dim <= 32);
        let full = if dim == 32 { u32::MAX } else { (1u32 << dim) - 1 };
        assert!(i_mask & !full == 0 && j_mask & !full == 0, "index out of range");
        let mut terms = BTreeMap::new();
        terms.insert((i_mask, j_mask), GaussianRational::one());
        ExtForm { dim, terms }
    }

    pub fn dz(dim: usize, k: usize) -> Self {
        assert!(1 <= k && k <= dim);
        Self::monomial(dim, 1 << (k - 1), 0)
    }

    pub fn dzbar(dim: usize, k: usize) -> Self {
        assert!(1 <= k && k <= dim);
        Self::monomial(dim, 0, 1 << (k - 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, key: Monomial, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ExtForm) -> ExtForm {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ExtForm) -> ExtForm {
        self.add(&other.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, s: &GaussianRational) -> ExtForm {
        if s.is_zero() {
            return ExtForm::zero(self.dim);
        }
        ExtForm {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect(),
        }
    }

    pub fn conj(&self) -> ExtForm {
        let mut out = ExtForm::zero(self.dim);
        for ((i, j), c) in &self.terms {
            // conj(dz_I ∧ dz̄_J) = dz̄_I ∧ dz_J = (−1)^{pq} dz_J ∧ dz̄_I
            let pq = i.count_ones() * j.count_ones();
            let c = if pq % 2 == 0 { c.conj() } else { -c.conj() };
            out.insert((*j, *i), c);
        }
        out
    }

    pub fn wedge(&self, other: &ExtForm) -> ExtForm {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = ExtForm::zero(self.dim);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if let Some((sign, key)) = wedge_monomials(*ka, *kb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.insert(key, c);
                }
            }
        }
        out
    }

    /// Hermitian inner product, conjugate-linear in the second argument.
    /// Basis monomials are orthogonal with ⟨dz_I∧dz̄_J, dz_I∧dz̄_J⟩ = 2^{p+q}.
    pub fn inner(&self, other: &ExtForm) -> GaussianRational {
        assert_eq!(self.dim, other.dim);
        let mut s = GaussianRational::zero();
        for (k, ca) in &self.terms {
            if let Some(cb) = other.terms.get(k) {
                let norm = GaussianRational::from_int(1 << (k.0.count_ones() + k.1.count_ones()));
                s += &(ca * &cb.conj()) * &norm;
            }
        }
        s
    }

    /// Total degrees present in the form.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self
            .terms
            .keys()
            .map(|(i, j)| (i.count_ones() + j.count_ones()) as usize)
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// `Some(k)` when every stored monomial has total degree k.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// `Some((p,q))` when the form is homogeneous of a single bidegree.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let bd = Bidegree {
            p: first.0.count_ones() as usize,
            q: first.1.count_ones() as usize,
        };
        for k in it {
            if k.0.count_ones() as usize != bd.p || k.1.count_ones() as usize != bd.q {
                return None;
            }
        }
        Some(bd)
    }

    pub fn degree_component(&self, k: usize) -> ExtForm {
        ExtForm {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| (i.count_ones() + j.count_ones()) as usize == k)
                .map(|(key, c)| (*key, c.clone()))
                .collect(),
        }
    }
}

/// The standard fundamental form ω = (i/2) Σ dz_k ∧ dz̄_k on Cⁿ.
pub fn omega(n: usize) -> ExtForm {
    let half_i = GaussianRational::i() * GaussianRational::from_frac(1, 2);
    let mut out = ExtForm::zero(n);
    for k in 0..n {
        out.insert((1 << k, 1 << k), half_i.clone());
    }
    out
}

/// Sign of sorting dz₁∧dz̄₁∧…∧dzₙ∧dz̄ₙ into canonical dz-first order.
fn interleave_sign(n: usize) -> i32 {
    if (n * (n.saturating_sub(1)) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The metric volume form vol = dx₁∧dy₁∧…∧dxₙ∧dyₙ = (i/2)ⁿ dz₁∧dz̄₁∧…∧dzₙ∧dz̄ₙ.
pub fn vol(n: usize) -> ExtForm {
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut c = (GaussianRational::i() * GaussianRational::from_frac(1, 2)).pow(n as u32);
    if interleave_sign(n) < 0 {
        c = -c;
    }
    let mut out = ExtForm::zero(n);
    out.insert((full, full), c);
    out
}

/// Star of a single basis monomial: ∗(dz_I∧dz̄_J) = μ · dz_{Jᶜ}∧dz̄_{Iᶜ},
/// with μ determined by the defining identity α ∧ ∗β̄ = ⟨α,β⟩ vol.
pub(crate) fn star_monomial(n: usize, key: Monomial) -> (Monomial, GaussianRational) {
    let (i_mask, j_mask) = key;
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let target = (j_mask ^ full, i_mask ^ full);
    let p = i_mask.count_ones();
    let q = j_mask.count_ones();
    // dz_J∧dz̄_I ∧ (dz_{Jᶜ}∧dz̄_{Iᶜ}) must equal (−1)^{pq} 2^{p+q} vol / μ
    let (sigma, _) =
        wedge_monomials((j_mask, i_mask), target).expect("complementary monomials never overlap");
    let mut mu =
        GaussianRational::from_int(1 << (p + q)) * (GaussianRational::i() * GaussianRational::from_frac(1, 2)).pow(n as u32);
    if interleave_sign(n) < 0 {
        mu = -mu;
    }
    if sigma < 0 {
        mu = -mu;
    }
    if (p * q) % 2 == 1 {
        mu = -mu;
    }
    (target, mu)
}

/// The C-linear Hodge star; maps Λ^{p,q} to Λ^{n−q,n−p} and satisfies
/// a ∧ ∗(conj b) = ⟨a,b⟩ vol together with ∗∗ = (−1)^{p+q} id.
pub fn hodge_star(a: &ExtForm) -> ExtForm {
    let mut out = ExtForm::zero(a.dim);
    for (key, c) in &a.terms {
        let (target, mu) = star_monomial(a.dim, *key);
        out.insert(target, c * &mu);
    }
    out
}

/// Inverse star: on total degree k this is (−1)^k ∗.
pub fn hodge_star_inv(a: &ExtForm) -> ExtForm {
    let mut out = ExtForm::zero(a.dim);
    for (key, c) in &a.terms {
        let deg = key.0.count_ones() + key.1.count_ones();
        let (target, mu) = star_monomial(a.dim, *key);
        let mut v = c * &mu;
        if deg % 2 == 1 {
            v = -v;
        }
        out.insert(target, v);
    }
    out
}

/// Lefschetz raising operator L(a) = ω ∧ a.
pub fn lefschetz_l(a: &ExtForm) -> ExtForm {
    omega(a.dim).wedge(a)
}

/// Lefschetz lowering operator Λ = ∗⁻¹ ∘ L ∘ ∗, the adjoint of L.
pub fn lefschetz_dual(a: &ExtForm) -> ExtForm {
    hodge_star_inv(&lefschetz_l(&hodge_star(a)))
}

/// Counting operator: the degree-k component is scaled by (k − n).
pub fn counting_h(a: &ExtForm) -> ExtForm {
    let n = a.dim as i64;
    let mut out = ExtForm::zero(a.dim);
    for (key, c) in &a.terms {
        let k = (key.0.count_ones() + key.1.count_ones()) as i64;
        out.insert(*key, c * &GaussianRational::from_int(k - n));
    }
    out
}

/// All basis monomials of Λ*(Cⁿ)* of total degree k.
pub fn basis_of_degree(n: usize, k: usize) -> Vec<Monomial> {
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut out = Vec::new();
    for i in 0..=full {
        for j in 0..=full {
            if (i.count_ones() + j.count_ones()) as usize == k {
                out.push((i, j));
            }
        }
    }
    out
}

/// All basis monomials of Λ*(Cⁿ)*.
pub fn full_basis(n: usize) -> Vec<Monomial> {
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut out = Vec::new();
    for i in 0..=full {
        for j in 0..=full {
            out.push((i, j));
        }
    }
    out
}

/// Matrix of a linear operator with respect to the given bases.
pub fn operator_matrix<F: Fn(&ExtForm) -> ExtForm>(
    n: usize,
    domain: &[Monomial],
    codomain: &[Monomial],
    op: F,
) -> ExactMatrix {
    let index: BTreeMap<Monomial, usize> =
        codomain.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut mat = ExactMatrix::zeros(codomain.len(), domain.len());
    for (col, m) in domain.iter().enumerate() {
        let image = op(&ExtForm::monomial(n, m.0, m.1));
        for (key, c) in &image.terms {
            let row = *index
                .get(key)
                .expect("operator image leaves the stated codomain");
            mat[(row, col)] = c.clone();
        }
    }
    mat
}

/// Lefschetz (primitive) decomposition of a homogeneous degree-k form:
/// a = Σ_j L^j β_j with Λβ_j = 0 and deg β_j = k − 2j.
///
/// Solved exactly: primitive subspaces are kernels of the Λ-matrix in each
/// degree and the reconstruction condition is a linear system over Q(i).
pub fn primitive_decompose(a: &ExtForm) -> Result<Vec<(usize, ExtForm)>, String> {
    let n = a.dim;
    let Some(k) = a.homogeneous_degree() else {
        if a.is_zero() {
            return Ok(Vec::new());
        }
        return Err("primitive decomposition requires a homogeneous form".into());
    };

    let target_basis = basis_of_degree(n, k);
    let target_index: BTreeMap<Monomial, usize> =
        target_basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();

    // primitive basis vectors per level j, written out in Λ^k after applying L^j
    struct Level {
        j: usize,
        prim: Vec<ExtForm>,
    }
    let mut levels: Vec<Level> = Vec::new();
    let mut j = 0;
    while 2 * j <= k {
        let deg = k - 2 * j;
        if deg <= n {
            let basis = basis_of_degree(n, deg);
            let lambda = operator_matrix(n, &basis, &basis_of_degree(n, deg.saturating_sub(2)), |f| {
                lefschetz_dual(f)
            });
            let prim: Vec<ExtForm> = lambda
                .kernel_basis()
                .into_iter()
                .map(|v| {
                    let mut f = ExtForm::zero(n);
                    for (idx, c) in v.into_iter().enumerate() {
                        f.insert(basis[idx], c);
                    }
                    f
                })
                .collect();
            if !prim.is_empty() {
                levels.push(Level { j, prim });
            }
        }
        j += 1;
    }

    // columns: coefficients of each primitive generator; rows: Λ^k coordinates
    let mut cols: Vec<Vec<GaussianRational>> = Vec::new();
    for level in &levels {
        for p in &level.prim {
            let mut image = p.clone();
            for _ in 0..level.j {
                image = lefschetz_l(&image);
            }
            let mut col = vec![GaussianRational::zero(); target_basis.len()];
            for (key, c) in &image.terms {
                col[target_index[key]] = c.clone();
            }
            cols.push(col);
        }
    }
    let mut mat = ExactMatrix::zeros(target_basis.len(), cols.len());
    for (cidx, col) in cols.iter().enumerate() {
        for (ridx, v) in col.iter().enumerate() {
            mat[(ridx, cidx)] = v.clone();
        }
    }
    let mut rhs = vec![GaussianRational::zero(); target_basis.len()];
    for (key, c) in &a.terms {
        rhs[target_index[key]] = c.clone();
    }
    let x = mat
        .solve(&rhs)
        .ok_or_else(|| "Lefschetz decomposition system is inconsistent".to_string())?;

    let mut out = Vec::new();
    let mut offset = 0;
    for level in &levels {
        let mut beta = ExtForm::zero(n);
        for p in &level.prim {
            beta = beta.add(&p.scale(&x[offset]));
            offset += 1;
        }
        if !beta.is_zero() {
            out.push((level.j, beta));
        }
    }
    Ok(out)
}

/// Per-relation outcome of the sl(2) commutator check.
#[derive(Clone, Debug)]
pub struct Sl2Report {
    pub n: usize,
    pub basis_size: usize,
    pub hl_is_2l: bool,
    pub h_lambda_is_minus_2lambda: bool,
    pub l_lambda_is_h: bool,
}

impl Sl2Report {
    pub fn all_hold(&self) -> bool {
        self.hl_is_2l && self.h_lambda_is_minus_2lambda && self.l_lambda_is_h
    }
}

/// Evaluates [H,L] = 2L, [H,Λ] = −2Λ and [L,Λ] = H on every basis element.
pub fn verify_sl2(n: usize) -> Sl2Report {
    assert!(n >= 1);
    let two = GaussianRational::from_int(2);
    let mut r = Sl2Report {
        n,
        basis_size: 0,
        hl_is_2l: true,
        h_lambda_is_minus_2lambda: true,
        l_lambda_is_h: true,
    };
    for m in full_basis(n) {
        let a = ExtForm::monomial(n, m.0, m.1);
        r.basis_size += 1;
        let hl = counting_h(&lefschetz_l(&a)).sub(&lefschetz_l(&counting_h(&a)));
        if hl != lefschetz_l(&a).scale(&two) {
            r.hl_is_2l = false;
        }
        let hla = counting_h(&lefschetz_dual(&a)).sub(&lefschetz_dual(&counting_h(&a)));
        if hla != lefschetz_dual(&a).scale(&-&two) {
            r.h_lambda_is_minus_2lambda = false;
        }
        let lla = lefschetz_l(&lefschetz_dual(&a)).sub(&lefschetz_dual(&lefschetz_l(&a)));
        if lla != counting_h(&a) {
            r.l_lambda_is_h = false;
        }
    }
    r
}

/// True iff L^{n−k} : Λ^k → Λ^{2n−k} has full rank (hard Lefschetz, linear
/// model). Requires k ≤ n.
pub fn hard_lefschetz_check(n: usize, k: usize) -> Result<bool, String> {
    if k > n {
        return Err(format!("hard Lefschetz requires k ≤ n, got k={k}, n={n}"));
    }
    let domain = basis_of_degree(n, k);
    let codomain = basis_of_degree(n, 2 * n - k);
    let mat = operator_matrix(n, &domain, &codomain, |f| {
        let mut g = f.clone();
        for _ in 0..n - k {
            g = lefschetz_l(&g);
        }
        g
    });
    assert_eq!(domain.len(), codomain.len());
    Ok(mat.rank() == domain.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn wedge_repeated_index_vanishes() {
        let dz1 = ExtForm::dz(2, 1);
        assert!(dz1.wedge(&dz1).is_zero());
    }

    #[test]
    fn wedge_unit() {
        let a = ExtForm::dz(2, 1).wedge(&ExtForm::dzbar(2, 2));
        assert_eq!(ExtForm::one(2).wedge(&a), a);
    }

    #[test]
    fn wedge_sign_from_sorting() {
        // (dz₁∧dz̄₁) ∧ (dz₂∧dz̄₂): moving dz₂ past dz̄₁ costs one transposition,
        // then dz̄₁ and dz̄₂ are in order: total sign −1 against canonical order.
        let a = ExtForm::monomial(2, 0b01, 0b01);
        let b = ExtForm::monomial(2, 0b10, 0b10);
        let w = a.wedge(&b);
        let mut expect = ExtForm::zero(2);
        expect.insert((0b11, 0b11), GaussianRational::from_int(-1));
        assert_eq!(w, expect);
    }

    #[test]
    fn wedge_graded_commutative() {
        for n in 1..=3usize {
            for ma in full_basis(n) {
                for mb in full_basis(n) {
                    let a = ExtForm::monomial(n, ma.0, ma.1);
                    let b = ExtForm::monomial(n, mb.0, mb.1);
                    let da = (ma.0.count_ones() + ma.1.count_ones()) as usize;
                    let db = (mb.0.count_ones() + mb.1.count_ones()) as usize;
                    let ab = a.wedge(&b);
                    let sign = if (da * db) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(ab, b.wedge(&a).scale(&GaussianRational::from_int(sign)));
                }
            }
        }
    }

    #[test]
    fn star_of_one_is_vol() {
        for n in 1..=4 {
            assert_eq!(hodge_star(&ExtForm::one(n)), vol(n));
        }
        // n=1 concretely: vol = dx₁∧dy₁ = (i/2) dz₁∧dz̄₁
        let v = vol(1);
        let c = v.terms.get(&(1, 1)).unwrap();
        assert_eq!(c, &(GaussianRational::i() * GaussianRational::from_frac(1, 2)));
    }

    #[test]
    fn star_star_sign() {
        for n in 1..=3usize {
            for m in full_basis(n) {
                let a = ExtForm::monomial(n, m.0, m.1);
                let deg = (m.0.count_ones() + m.1.count_ones()) as i64;
                let ss = hodge_star(&hodge_star(&a));
                let sign = if deg % 2 == 0 { 1 } else { -1 };
                assert_eq!(ss, a.scale(&GaussianRational::from_int(sign)));
                assert_eq!(hodge_star_inv(&hodge_star(&a)), a);
            }
        }
    }

    #[test]
    fn star_defining_identity() {
        // a ∧ ∗(conj b) = ⟨a,b⟩ vol whenever deg a = deg b
        for n in 1..=2usize {
            for ma in full_basis(n) {
                for mb in full_basis(n) {
                    if ma.0.count_ones() + ma.1.count_ones() != mb.0.count_ones() + mb.1.count_ones()
                    {
                        continue;
                    }
                    let a = ExtForm::monomial(n, ma.0, ma.1);
                    let b = ExtForm::monomial(n, mb.0, mb.1);
                    let lhs = a.wedge(&hodge_star(&b.conj()));
                    let rhs = vol(n).scale(&a.inner(&b));
                    assert_eq!(lhs, rhs, "n={} a={:?} b={:?}", n, ma, mb);
                }
            }
        }
    }

    #[test]
    fn star_dz_on_c1() {
        let s = hodge_star(&ExtForm::dz(1, 1));
        assert_eq!(s, ExtForm::dz(1, 1).scale(&-GaussianRational::i()));
    }

    #[test]
    fn star_maps_bidegree() {
        for n in 1..=3usize {
            for m in full_basis(n) {
                let a = ExtForm::monomial(n, m.0, m.1);
                let bd = a.bidegree().unwrap();
                let s = hodge_star(&a);
                let sbd = s.bidegree().unwrap();
                assert_eq!((sbd.p, sbd.q), (n - bd.q, n - bd.p));
            }
        }
    }

    #[test]
    fn lefschetz_l_basics() {
        assert_eq!(lefschetz_l(&ExtForm::one(2)), omega(2));
        assert!(lefschetz_l(&vol(2)).is_zero());
        // n=2: ω ∧ dz₁ = (i/2) dz₂∧dz̄₂∧dz₁ = (i/2) dz₁∧dz₂∧dz̄₂ after two
        // transpositions (even), so coefficient +i/2 on dz₁∧dz₂∧dz̄₂.
        let l = lefschetz_l(&ExtForm::dz(2, 1));
        let mut expect = ExtForm::zero(2);
        expect.insert(
            (0b11, 0b10),
            GaussianRational::i() * GaussianRational::from_frac(1, 2),
        );
        assert_eq!(l, expect);
    }

    #[test]
    fn lambda_basics() {
        for n in 1..=3 {
            assert!(lefschetz_dual(&ExtForm::one(n)).is_zero());
            assert_eq!(
                lefschetz_dual(&omega(n)),
                ExtForm::one(n).scale(&GaussianRational::from_int(n as i64))
            );
        }
        assert!(lefschetz_dual(&ExtForm::dz(2, 1)).is_zero());
    }

    #[test]
    fn l_lambda_adjoint() {
        for n in 1..=3usize {
            for ma in full_basis(n) {
                for mb in full_basis(n) {
                    let a = ExtForm::monomial(n, ma.0, ma.1);
                    let b = ExtForm::monomial(n, mb.0, mb.1);
                    assert_eq!(lefschetz_l(&a).inner(&b), a.inner(&lefschetz_dual(&b)));
                }
            }
        }
    }

    #[test]
    fn counting_operator() {
        let n = 3;
        assert_eq!(
            counting_h(&ExtForm::one(n)),
            ExtForm::one(n).scale(&GaussianRational::from_int(-3))
        );
        assert_eq!(counting_h(&vol(n)), vol(n).scale(&GaussianRational::from_int(3)));
        assert_eq!(counting_h(&omega(n)), omega(n).scale(&GaussianRational::from_int(-1)));
    }

    #[test]
    fn omega_power_is_factorial_vol() {
        for n in 1..=4usize {
            let mut w = ExtForm::one(n);
            for _ in 0..n {
                w = w.wedge(&omega(n));
            }
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(w, vol(n).scale(&GaussianRational::from_int(fact)));
        }
    }

    #[test]
    fn sl2_relations() {
        for n in 1..=2 {
            let r = verify_sl2(n);
            assert!(r.all_hold());
            assert_eq!(r.basis_size, 4usize.pow(n as u32));
        }
        // [L,Λ](1) = H(1) = −n·1
        let n = 3;
        let one = ExtForm::one(n);
        let c = lefschetz_l(&lefschetz_dual(&one)).sub(&lefschetz_dual(&lefschetz_l(&one)));
        assert_eq!(c, one.scale(&GaussianRational::from_int(-(n as i64))));
    }

    #[test]
    fn primitive_decompose_primitive_input() {
        let a = ExtForm::dz(2, 1); // Λ(dz₁) = 0
        let d = primitive_decompose(&a).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0, 0);
        assert_eq!(d[0].1, a);
    }

    #[test]
    fn primitive_decompose_omega() {
        for n in 2..=3usize {
            let d = primitive_decompose(&omega(n)).unwrap();
            assert_eq!(d.len(), 1);
            assert_eq!(d[0].0, 1);
            assert_eq!(d[0].1, ExtForm::one(n));
        }
    }

    #[test]
    fn primitive_decompose_vol_c2() {
        // L²(1) = ω² = 2·vol on C², so vol = L²(1/2)
        let d = primitive_decompose(&vol(2)).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0, 2);
        assert_eq!(d[0].1, ExtForm::one(2).scale(&GaussianRational::from_frac(1, 2)));
    }

    #[test]
    fn primitive_decompose_reconstructs_and_is_orthogonal() {
        // random-ish homogeneous forms on C² and C³
        for n in 2..=3usize {
            for k in 0..=2 * n {
                let basis = basis_of_degree(n, k);
                let mut a = ExtForm::zero(n);
                for (idx, m) in basis.iter().enumerate() {
                    let c = GaussianRational::from_int((idx as i64 % 5) - 2)
                        + GaussianRational::i() * GaussianRational::from_int((idx as i64 % 3) - 1);
                    a.insert(*m, c);
                }
                let decomp = primitive_decompose(&a).unwrap();
                let mut recon = ExtForm::zero(n);
                let mut pieces = Vec::new();
                for (j, beta) in &decomp {
                    assert!(lefschetz_dual(beta).is_zero(), "β_j not primitive");
                    assert_eq!(beta.homogeneous_degree(), Some(k - 2 * j));
                    assert!(k - 2 * j <= n, "primitive degree above n");
                    let mut img = beta.clone();
                    for _ in 0..*j {
                        img = lefschetz_l(&img);
                    }
                    pieces.push(img.clone());
                    recon = recon.add(&img);
                }
                assert_eq!(recon, a);
                for x in 0..pieces.len() {
                    for y in 0..pieces.len() {
                        if x != y {
                            assert!(pieces[x].inner(&pieces[y]).is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hard_lefschetz_small() {
        assert!(hard_lefschetz_check(2, 1).unwrap());
        assert!(hard_lefschetz_check(2, 2).unwrap());
        assert!(hard_lefschetz_check(3, 0).unwrap());
        assert!(hard_lefschetz_check(3, 4).is_err());
        // n=3, k=0: L³(1) = 3!·vol ≠ 0
        let mut w = ExtForm::one(3);
        for _ in 0..3 {
            w = lefschetz_l(&w);
        }
        assert_eq!(w, vol(3).scale(&GaussianRational::from_int(6)));
    }
}
