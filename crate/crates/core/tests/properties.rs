//! Property tests for the exact polynomial layer and the basis
//! conversions.

use num_bigint::BigInt;
use proptest::prelude::*;

use schubert_lines::poly::{BiPoly, Partition2};

fn bipoly_strategy(max_exp: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_exp, 0..=max_exp, -20i64..=20), 0..=max_terms).prop_map(
        |terms| {
            terms.into_iter().fold(BiPoly::zero(), |acc, (p, q, c)| {
                acc.add(&BiPoly::monomial(p, q, BigInt::from(c)))
            })
        },
    )
}

fn symmetric_strategy(max_exp: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    bipoly_strategy(max_exp, max_terms).prop_map(|x| x.add(&x.swap_vars()))
}

proptest! {
    #[test]
    fn distributivity(
        x in bipoly_strategy(5, 5),
        y in bipoly_strategy(5, 5),
        z in bipoly_strategy(5, 5),
    ) {
        prop_assert_eq!(x.add(&y).mul(&z), x.mul(&z).add(&y.mul(&z)));
    }

    #[test]
    fn mul_commutes_and_associates(
        x in bipoly_strategy(4, 4),
        y in bipoly_strategy(4, 4),
        z in bipoly_strategy(4, 4),
    ) {
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn schur_round_trip(x in symmetric_strategy(6, 6)) {
        let s = x.to_schur().unwrap();
        prop_assert_eq!(s.reconstruct(), x);
    }

    #[test]
    fn vandermonde_division_inverts_multiplication(q in bipoly_strategy(6, 6)) {
        let vandermonde = BiPoly::var_a().sub(&BiPoly::var_b());
        let recovered = q.mul(&vandermonde).divide_by_vandermonde().unwrap();
        prop_assert_eq!(recovered, q);
    }

    #[test]
    fn schur_basis_unit_entries(p in 0u32..8, q in 0u32..8) {
        prop_assume!(p >= q);
        let part = Partition2::new(p, q).unwrap();
        let s = part.schur_poly().to_schur().unwrap();
        prop_assert_eq!(s.coeff(part), BigInt::from(1));
        prop_assert_eq!(s.coeffs().count(), 1);
    }
}
