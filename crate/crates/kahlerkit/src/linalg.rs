//! Exact linear algebra over Q(i) and over the integers.
//!
//! Everything here is elimination-based with arbitrary-precision entries, so
//! ranks, kernels and Smith normal forms are exact. No floating point.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalar::GaussianRational;

/// Dense matrix over Q(i), row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = GaussianRational::zero();
                for j in 0..self.cols {
                    s += &self[(i, j)] * &v[j];
                }
                s
            })
            .collect()
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let piv = (row..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(piv) = piv else { continue };
            m.swap_rows(row, piv);
            let inv = m[(row, col)].inv();
            for j in col..m.cols {
                m[(row, j)] = &m[(row, j)] * &inv;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for j in col..m.cols {
                        let t = &f * &m[(row, j)];
                        m[(r, j)] -= t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Rank over the field Q(i).
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel { v : M·v = 0 }.
    ///
    /// The returned vectors are linearly independent and there are exactly
    /// `cols − rank` of them.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[f] = GaussianRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(i, f)];
            }
            basis.push(v);
        }
        basis
    }

    /// Solve M·x = b exactly; `None` when inconsistent. If the system is
    /// underdetermined an arbitrary particular solution is returned.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        assert_eq!(self.rows, b.len());
        let mut aug = ExactMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse; `None` for singular input.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = GaussianRational::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.data[i * self.cols + j]
    }
}

/// Dense integer matrix with big-integer entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|v| v.iter().map(|&x| BigInt::from(x))).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn to_exact(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = GaussianRational::new(
                    num_rational::BigRational::from(self[(i, j)].clone()),
                    num_rational::BigRational::zero(),
                );
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += q * row[b]
    fn add_row(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = q * &self[(b, j)];
            self[(a, j)] += t;
        }
    }

    /// col[a] += q * col[b]
    fn add_col(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = q * &self[(i, b)];
            self[(i, a)] += t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let t = -self[(a, j)].clone();
            self[(a, j)] = t;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of a Smith normal form computation: U·M·V = D with U, V unimodular
/// and D diagonal, dᵢ ≥ 0, dᵢ | dᵢ₊₁.
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// The nonzero diagonal entries d₁ | d₂ | …
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form over Z.
///
/// Pivoting picks the smallest-absolute-value nonzero entry of the trailing
/// submatrix at every step, which keeps coefficient growth tame.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);

    let mut t = 0;
    while t < d.rows.min(d.cols) {
        // locate smallest nonzero entry in the trailing submatrix
        let mut best: Option<(usize, usize)> = None;
        for i in t..d.rows {
            for j in t..d.cols {
                if d[(i, j)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if d[(i, j)].abs() < d[(bi, bj)].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);

        loop {
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..d.rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !d[(i, t)].is_zero() {
                    // remainder smaller than pivot: promote it
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // clear row t right of the pivot
            for j in t + 1..d.cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !d[(t, j)].is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the submatrix
            let mut fixed = true;
            'scan: for i in t + 1..d.rows {
                for j in t + 1..d.cols {
                    if (&d[(i, j)] % &d[(t, t)]).is_zero() {
                        continue;
                    }
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                    fixed = false;
                    break 'scan;
                }
            }
            if fixed {
                break;
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Snf { u, d, v }
}

/// Determinant by fraction-free (Bareiss) elimination. Test helper for
/// unimodularity checks, but exact for any square integer matrix.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}
