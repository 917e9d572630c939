//! Hodge diamonds and Betti numbers: the diamond of P^n, validation of
//! the symmetry constraints a compact Kähler manifold imposes, and Betti
//! vectors of smooth hypersurfaces and complete intersections in
//! projective space, obtained from the hyperplane-section vanishing
//! pattern plus the exact Euler characteristic.
//!
//! Middle-row Hodge numbers of hypersurfaces are deliberately absent:
//! only the middle Betti number is computed. The diamond type exists so
//! hand-entered diamonds can be validated.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::chern;

/// The (n+1)×(n+1) grid of Hodge numbers h^{p,q} of an n-dimensional
/// compact complex manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDiamond {
    pub n: usize,
    /// grid[p][q] = h^{p,q}
    pub grid: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    pub fn new(n: usize, grid: Vec<Vec<u64>>) -> Result<Self, String> {
        if grid.len() != n + 1 || grid.iter().any(|row| row.len() != n + 1) {
            return Err(format!("grid must be {0}×{0}", n + 1));
        }
        Ok(HodgeDiamond { n, grid })
    }

    pub fn h(&self, p: usize, q: usize) -> u64 {
        self.grid[p][q]
    }
}

/// Betti numbers b_0, ..., b_{2n}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector(pub Vec<u64>);

impl BettiVector {
    /// Complex dimension implied by the length 2n + 1.
    pub fn dim(&self) -> usize {
        (self.0.len() - 1) / 2
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// h^{p,q}(P^n) = 1 when p = q, 0 otherwise.
pub fn diamond_pn(n: usize) -> HodgeDiamond {
    let grid = (0..=n)
        .map(|p| (0..=n).map(|q| u64::from(p == q)).collect())
        .collect();
    HodgeDiamond { n, grid }
}

/// b_k = Σ_{p+q=k} h^{p,q}.
pub fn betti_from_diamond(d: &HodgeDiamond) -> BettiVector {
    let mut b = vec![0u64; 2 * d.n + 1];
    for p in 0..=d.n {
        for q in 0..=d.n {
            b[p + q] += d.grid[p][q];
        }
    }
    BettiVector(b)
}

/// Check the four constraints a compact Kähler manifold satisfies:
/// conjugation symmetry h^{p,q} = h^{q,p}, Serre duality
/// h^{n-p,n-q} = h^{p,q}, even odd-degree Betti numbers, and
/// h^{p,p} ≥ 1. Returns a human-readable list of violations,
/// empty iff the diamond is consistent.
pub fn validate_diamond(d: &HodgeDiamond) -> Vec<String> {
    let n = d.n;
    let mut violations = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            if d.grid[p][q] != d.grid[q][p] {
                violations.push(format!(
                    "conjugation symmetry fails: h^{{{p},{q}}} = {} but h^{{{q},{p}}} = {}",
                    d.grid[p][q], d.grid[q][p]
                ));
            }
            if d.grid[p][q] != d.grid[n - p][n - q] {
                violations.push(format!(
                    "Serre duality fails: h^{{{p},{q}}} = {} but h^{{{},{}}} = {}",
                    d.grid[p][q],
                    n - p,
                    n - q,
                    d.grid[n - p][n - q]
                ));
            }
        }
    }
    let betti = betti_from_diamond(d);
    for (k, &b) in betti.0.iter().enumerate() {
        if k % 2 == 1 && b % 2 == 1 {
            violations.push(format!("odd Betti number b_{} = {} is not even", k, b));
        }
    }
    for p in 0..=n {
        if d.grid[p][p] < 1 {
            violations.push(format!(
                "h^{{{p},{p}}} = 0, but powers of the Kähler class force h^{{p,p}} ≥ 1"
            ));
        }
    }
    violations
}

/// Betti vector implied by the hyperplane-section vanishing pattern in
/// complex dimension `dim` together with the Euler characteristic:
/// b_i = 1 for even i ≠ dim, 0 for odd i ≠ dim, and the middle entry
/// recovered from the alternating sum.
fn betti_from_pattern(dim: usize, chi: &BigInt) -> Result<BettiVector, String> {
    let mut b = vec![0u64; 2 * dim + 1];
    let mut partial = BigInt::from(0);
    for i in 0..=2 * dim {
        if i != dim {
            b[i] = u64::from(i % 2 == 0);
            let signed = BigInt::from(b[i]);
            if i % 2 == 0 {
                partial += signed;
            } else {
                partial -= signed;
            }
        }
    }
    let mut middle = chi - partial;
    if dim % 2 == 1 {
        middle = -middle;
    }
    if middle.is_negative() {
        return Err(format!(
            "computed middle Betti number b_{} = {} is negative",
            dim, middle
        ));
    }
    b[dim] = middle
        .to_u64()
        .ok_or_else(|| "middle Betti number overflows u64".to_string())?;
    Ok(BettiVector(b))
}

/// Betti numbers of a smooth degree-d hypersurface of complex dimension
/// n in P^{n+1}.
pub fn hypersurface_betti(n: usize, d: u32) -> Result<BettiVector, String> {
    if n < 1 {
        return Err("hypersurface dimension must be at least 1".into());
    }
    if d < 1 {
        return Err("degree must be positive".into());
    }
    let chi = chern::euler_characteristic(n + 1, &[d])?;
    betti_from_pattern(n, &chi)
}

/// Betti numbers of a smooth complete intersection of the given
/// multidegree in P^m.
pub fn complete_intersection_betti(m: usize, degrees: &[u32]) -> Result<BettiVector, String> {
    if degrees.len() >= m {
        return Err(format!(
            "{} hypersurfaces in P^{} leave dimension < 1",
            degrees.len(),
            m
        ));
    }
    if degrees.iter().any(|&d| d < 1) {
        return Err("degrees must be positive".into());
    }
    let dim = m - degrees.len();
    let chi = chern::euler_characteristic(m, degrees)?;
    betti_from_pattern(dim, &chi)
}

/// Outcome of comparing an ambient Betti vector with a hyperplane
/// section's, per the hyperplane theorem: restriction is an isomorphism
/// below degree nY − 1 and injective at nY − 1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LefschetzPatternReport {
    pub pass: bool,
    pub failures: Vec<String>,
}

/// bX: Betti numbers of the ambient space X, bY: of the subvariety Y of
/// complex dimension nY. Passes iff bX[i] = bY[i] for i < nY − 1 and
/// bX[nY−1] ≤ bY[nY−1].
pub fn lefschetz_pattern_check(
    bx: &BettiVector,
    by: &BettiVector,
    n_y: usize,
) -> Result<LefschetzPatternReport, String> {
    if by.0.len() < 2 * n_y + 1 || bx.0.len() < 2 * n_y + 1 {
        return Err(format!(
            "Betti vectors too short for a dimension-{} subvariety",
            n_y
        ));
    }
    let mut failures = Vec::new();
    for i in 0..n_y.saturating_sub(1) {
        if bx.0[i] != by.0[i] {
            failures.push(format!(
                "b_{}: ambient {} ≠ section {} (isomorphism range)",
                i, bx.0[i], by.0[i]
            ));
        }
    }
    if n_y >= 1 {
        let i = n_y - 1;
        if bx.0[i] > by.0[i] {
            failures.push(format!(
                "b_{}: ambient {} > section {} (injectivity fails)",
                i, bx.0[i], by.0[i]
            ));
        }
    }
    Ok(LefschetzPatternReport {
        pass: failures.is_empty(),
        failures,
    })
}

/// Genus of a smooth plane curve of degree d: (d−1)(d−2)/2, cross-checked
/// against (2 − χ)/2 with χ from the Chern-class route.
pub fn plane_curve_genus(d: u32) -> Result<u64, String> {
    if d < 1 {
        return Err("degree must be positive".into());
    }
    let formula = (d as u64 - 1) * (d as u64).saturating_sub(2) / 2;
    let chi = chern::euler_characteristic(2, &[d])?;
    let from_chi = (BigInt::from(2) - chi) / BigInt::from(2);
    if BigInt::from(formula) != from_chi {
        return Err(format!(
            "genus formula {} disagrees with Euler-characteristic value {}",
            formula, from_chi
        ));
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::cw_homology_pn;

    #[test]
    fn pn_diamonds() {
        let d0 = diamond_pn(0);
        assert_eq!(d0.grid, vec![vec![1]]);
        let d1 = diamond_pn(1);
        assert_eq!(d1.grid, vec![vec![1, 0], vec![0, 1]]);
        let d2 = diamond_pn(2);
        for p in 0..=2 {
            for q in 0..=2 {
                assert_eq!(d2.h(p, q), u64::from(p == q));
            }
        }
    }

    #[test]
    fn betti_sums() {
        assert_eq!(betti_from_diamond(&diamond_pn(2)).0, vec![1, 0, 1, 0, 1]);
        // genus-g curve
        let g = 5;
        let curve = HodgeDiamond::new(1, vec![vec![1, g], vec![g, 1]]).unwrap();
        assert_eq!(betti_from_diamond(&curve).0, vec![1, 2 * g, 1]);
        let point_like = HodgeDiamond::new(2, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(betti_from_diamond(&point_like).0, vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn diamond_validation() {
        for n in 0..=6 {
            assert!(validate_diamond(&diamond_pn(n)).is_empty());
        }
        let asym = HodgeDiamond::new(1, vec![vec![1, 1], vec![0, 1]]).unwrap();
        let v = validate_diamond(&asym);
        assert!(v.iter().any(|s| s.contains("conjugation")));
        let no_kahler = HodgeDiamond::new(1, vec![vec![1, 0], vec![0, 0]]).unwrap();
        let v = validate_diamond(&no_kahler);
        assert!(v.iter().any(|s| s.contains("h^{p,p}")));
    }

    #[test]
    fn hypersurface_examples() {
        assert_eq!(hypersurface_betti(1, 3).unwrap().0, vec![1, 2, 1]);
        assert_eq!(hypersurface_betti(1, 1).unwrap().0, vec![1, 0, 1]);
        assert_eq!(hypersurface_betti(2, 4).unwrap().0, vec![1, 0, 22, 0, 1]);
        // cubic threefold: χ = -6, b_3 = 10
        assert_eq!(hypersurface_betti(3, 3).unwrap().0, vec![1, 0, 1, 10, 1, 0, 1]);
    }

    #[test]
    fn complete_intersection_examples() {
        assert_eq!(complete_intersection_betti(3, &[2]).unwrap().0, vec![1, 0, 2, 0, 1]);
        assert_eq!(complete_intersection_betti(2, &[2]).unwrap().0, vec![1, 0, 1]);
        // del Pezzo of degree 4: middle entry is χ - 2
        let chi = chern::euler_characteristic(4, &[2, 2]).unwrap();
        let b = complete_intersection_betti(4, &[2, 2]).unwrap();
        assert_eq!(BigInt::from(b.0[2]), chi - 2);
        assert!(complete_intersection_betti(3, &[2, 2, 2]).is_err());
    }

    #[test]
    fn middle_parity_and_positivity() {
        for n in 1..=6usize {
            for d in 1..=6u32 {
                let b = hypersurface_betti(n, d).unwrap();
                if n % 2 == 1 {
                    assert_eq!(b.0[n] % 2, 0, "n={} d={}", n, d);
                }
            }
        }
    }

    #[test]
    fn no_first_betti_in_higher_dimension() {
        for m in 3..=6usize {
            for a in 1..=4u32 {
                for b in 1..=4u32 {
                    let degs: Vec<u32> = if m - 2 >= 2 { vec![a, b] } else { vec![a] };
                    let betti = complete_intersection_betti(m, &degs).unwrap();
                    if betti.dim() >= 2 {
                        assert_eq!(betti.0[1], 0, "m={} degs={:?}", m, degs);
                    }
                }
            }
        }
    }

    #[test]
    fn hyperplane_pattern() {
        for n in 1..=5usize {
            for d in 1..=6u32 {
                let ambient = betti_from_diamond(&diamond_pn(n + 1));
                let section = hypersurface_betti(n, d).unwrap();
                let rep = lefschetz_pattern_check(&ambient, &section, n).unwrap();
                assert!(rep.pass, "n={} d={}: {:?}", n, d, rep.failures);
            }
        }
        let bad = BettiVector(vec![2, 0, 22, 0, 1]);
        let p3 = betti_from_diamond(&diamond_pn(3));
        assert!(!lefschetz_pattern_check(&p3, &bad, 2).unwrap().pass);
    }

    #[test]
    fn genus_values() {
        assert_eq!(plane_curve_genus(1).unwrap(), 0);
        assert_eq!(plane_curve_genus(2).unwrap(), 0);
        assert_eq!(plane_curve_genus(3).unwrap(), 1);
        assert_eq!(plane_curve_genus(5).unwrap(), 6);
        for d in 1..=8u32 {
            assert!(plane_curve_genus(d).is_ok());
        }
    }

    #[test]
    fn diamond_betti_matches_cw_homology() {
        for n in 0..=4usize {
            let b = betti_from_diamond(&diamond_pn(n));
            let h = cw_homology_pn(n);
            for (i, g) in h.iter().enumerate() {
                assert_eq!(b.0[i] as usize, g.free_rank, "n={} i={}", n, i);
            }
        }
    }
}
