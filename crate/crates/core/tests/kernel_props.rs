//! Randomized suites for the arithmetic kernel: ring axioms, exact division
//! by powers of linear forms, and fraction normal forms. Small ranks and
//! degrees, many cases.

use proptest::prelude::*;

use polyassign_core::fraction::LinFraction;
use polyassign_core::linform::LinForm;
use polyassign_core::poly::{monomials_of_degree, rat, Polynomial, Rational};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly(rank: usize, degree: usize) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_of_degree(rank, degree);
    let len = monos.len();
    prop::collection::vec(arb_rational(), len).prop_map(move |coeffs| {
        Polynomial::from_terms(rank, monos.iter().cloned().zip(coeffs)).unwrap()
    })
}

fn arb_linform(rank: usize) -> impl Strategy<Value = LinForm> {
    prop::collection::vec(-3i64..=3, rank)
        .prop_filter("nonzero form", |v| v.iter().any(|&c| c != 0))
        .prop_map(|v| LinForm::new(v).unwrap())
}

/// (rank, three polynomials of degrees da, db, db) for mixed-law tests.
fn ring_inputs() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (1usize..=3, 0usize..=2, 0usize..=2).prop_flat_map(|(rank, da, db)| {
        (arb_poly(rank, da), arb_poly(rank, db), arb_poly(rank, db))
    })
}

fn division_inputs() -> impl Strategy<Value = (Polynomial, LinForm, u32)> {
    (1usize..=3, 0usize..=4, 1u32..=3).prop_flat_map(|(rank, degree, mult)| {
        (arb_poly(rank, degree), arb_linform(rank), Just(mult))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplication_is_associative((f, g, h) in ring_inputs()) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn multiplication_distributes((f, g, h) in ring_inputs()) {
        let lhs = f.mul(&g.try_add(&h).unwrap());
        let rhs = f.mul(&g).try_add(&f.mul(&h)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn addition_commutes_and_cancels((_, g, h) in ring_inputs()) {
        prop_assert_eq!(g.try_add(&h).unwrap(), h.try_add(&g).unwrap());
        prop_assert!(g.try_sub(&g).unwrap().is_zero());
    }

    #[test]
    fn division_undoes_multiplication((p, l, mult) in division_inputs()) {
        let mut shifted = p.clone();
        for _ in 0..mult {
            shifted = shifted.mul(&l.to_polynomial());
        }
        let back = shifted.divide_by_linform(&l, mult);
        if p.is_zero() {
            prop_assert!(back.expect("zero divides").is_zero());
        } else {
            prop_assert_eq!(back.expect("constructed multiple divides"), p);
        }
    }
}

fn arb_fraction_terms() -> impl Strategy<Value = Vec<LinFraction>> {
    // fixed non-proportional primitive directions; every term has formal
    // degree zero so the sum stays homogeneous
    let dirs = [
        LinForm::new(vec![1, 0]).unwrap(),
        LinForm::new(vec![1, 1]).unwrap(),
        LinForm::new(vec![0, 1]).unwrap(),
    ];
    prop::collection::vec((0u32..=2, 0u32..=2, proptest::bool::ANY), 2..=5).prop_flat_map(
        move |shape| {
            let dirs = dirs.clone();
            let strategies: Vec<_> = shape
                .iter()
                .map(|&(m1, m2, which)| {
                    let d1 = dirs[0].clone();
                    let d2 = if which { dirs[1].clone() } else { dirs[2].clone() };
                    arb_poly(2, (m1 + m2) as usize).prop_map(move |num| {
                        let mut weights = Vec::new();
                        weights.extend(std::iter::repeat_n(d1.clone(), m1 as usize));
                        weights.extend(std::iter::repeat_n(d2.clone(), m2 as usize));
                        LinFraction::quotient(num, &weights)
                    })
                })
                .collect();
            strategies
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fraction_sum_is_order_independent(terms in arb_fraction_terms()) {
        let forward = LinFraction::sum(2, terms.iter()).unwrap();
        let mut reversed: Vec<&LinFraction> = terms.iter().collect();
        reversed.reverse();
        let backward = LinFraction::sum(2, reversed.into_iter()).unwrap();
        prop_assert_eq!(&forward, &backward);
        let mut rotated: Vec<&LinFraction> = terms.iter().collect();
        rotated.rotate_left(1);
        let rotated_sum = LinFraction::sum(2, rotated.into_iter()).unwrap();
        prop_assert_eq!(&forward, &rotated_sum);
    }

    #[test]
    fn fraction_reduction_is_idempotent(terms in arb_fraction_terms()) {
        for t in &terms {
            // a one-term sum re-runs the full reduction pipeline
            let again = LinFraction::sum(2, [t]).unwrap();
            prop_assert_eq!(&again, t);
        }
        let s = LinFraction::sum(2, terms.iter()).unwrap();
        let again = LinFraction::sum(2, [&s]).unwrap();
        prop_assert_eq!(again, s);
    }
}
