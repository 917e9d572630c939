//! Randomized invariants over the exact-arithmetic core.

use proptest::prelude::*;

use kahlerkit::exterior::{self, ExtForm};
use kahlerkit::linalg::{smith_normal_form, IntMatrix};
use kahlerkit::scalar::GaussianRational;

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-20i64..20, -20i64..20, 1i64..8, 1i64..8).prop_map(|(a, b, p, q)| {
        GaussianRational::from_frac(a, p) + GaussianRational::from_frac(b, q) * GaussianRational::i()
    })
}

proptest! {
    #[test]
    fn norm_is_multiplicative(x in gaussian(), y in gaussian()) {
        let lhs = (x.clone() * y.clone()).norm_sqr();
        let rhs = x.norm_sqr() * y.norm_sqr();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_inverts_multiplication(x in gaussian(), y in gaussian()) {
        prop_assume!(y != GaussianRational::from_int(0));
        let z = (x.clone() * y.clone()) / y;
        prop_assert_eq!(z, x);
    }

    #[test]
    fn snf_invariant_factors_survive_row_permutation(
        entries in proptest::collection::vec(-9i64..9, 9),
        swap in (0usize..3, 0usize..3),
    ) {
        let rows: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let mut permuted = rows.clone();
        permuted.swap(swap.0, swap.1);
        let to_matrix = |rows: &[Vec<i64>]| {
            let slices: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            IntMatrix::from_rows(&slices)
        };
        let a = smith_normal_form(&to_matrix(&rows));
        let b = smith_normal_form(&to_matrix(&permuted));
        prop_assert_eq!(a.invariant_factors(), b.invariant_factors());
    }

    #[test]
    fn wedge_is_graded_commutative(
        n in 1usize..4,
        seed_a in 0u32..16,
        seed_b in 0u32..16,
    ) {
        let mask = (1u32 << n) - 1;
        let a = ExtForm::monomial(n, seed_a & mask, (seed_a >> 2) & mask);
        let b = ExtForm::monomial(n, seed_b & mask, (seed_b >> 2) & mask);
        let deg_a = a.homogeneous_degree().unwrap();
        let deg_b = b.homogeneous_degree().unwrap();
        let sign = if deg_a * deg_b % 2 == 0 { 1 } else { -1 };
        let rhs = b.wedge(&a).scale(&GaussianRational::from_int(sign));
        prop_assert!(a.wedge(&b).sub(&rhs).is_zero());
    }

    #[test]
    fn double_star_sign(n in 1usize..4, seed in 0u32..64) {
        let mask = (1u32 << n) - 1;
        let a = ExtForm::monomial(n, seed & mask, (seed >> 3) & mask);
        let k = a.homogeneous_degree().unwrap();
        let twice = exterior::hodge_star(&exterior::hodge_star(&a));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let expect = a.scale(&GaussianRational::from_int(sign));
        prop_assert!(twice.sub(&expect).is_zero());
    }
}
