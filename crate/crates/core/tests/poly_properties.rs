//! Property tests for exact integer polynomial arithmetic.

use num_bigint::BigInt;
use proptest::prelude::*;
use semicyclo::IntPoly;

fn poly_strategy(max_len: usize, max_coeff: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-max_coeff..=max_coeff, 0..max_len)
        .prop_map(|v| IntPoly::from_i64_coeffs(&v))
}

proptest! {
    #[test]
    fn multiply_then_divide_round_trips(
        a in poly_strategy(50, 10),
        b in poly_strategy(50, 10),
    ) {
        prop_assume!(!b.is_zero());
        let product = a.mul(&b);
        prop_assert_eq!(product.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn multiplication_commutes_and_respects_evaluation(
        a in poly_strategy(30, 10),
        b in poly_strategy(30, 10),
    ) {
        let ab = a.mul(&b);
        prop_assert_eq!(&ab, &b.mul(&a));
        for x in [-3i64, -1, 0, 1, 2, 5] {
            let x = BigInt::from(x);
            prop_assert_eq!(ab.eval(&x), a.eval(&x) * b.eval(&x));
        }
    }

    #[test]
    fn addition_and_subtraction_invert(
        a in poly_strategy(50, 10),
        b in poly_strategy(50, 10),
    ) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert_eq!(a.sub(&a), IntPoly::zero());
        prop_assert_eq!(a.add(&a.neg()), IntPoly::zero());
    }

    #[test]
    fn degree_of_product_adds(
        a in poly_strategy(30, 10),
        b in poly_strategy(30, 10),
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(
            a.mul(&b).degree().unwrap(),
            a.degree().unwrap() + b.degree().unwrap()
        );
    }
}
