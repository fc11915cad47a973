//! Proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::series::{int, ratio, Rat, Series};

/// Short polynomial (degree at most 3) with small rational coefficients,
/// optionally divided by `1 + a x + b x^2`, with the given constant term.
pub fn unit_with(c0: Rat, order: usize) -> impl Strategy<Value = Series> {
    let coeff = (-3i64..=3, prop_oneof![Just(1i64), Just(2)]).prop_map(|(n, d)| ratio(n, d));
    (
        proptest::collection::vec(coeff.clone(), 1..=3),
        proptest::option::weighted(0.3, (coeff.clone(), coeff)),
    )
        .prop_map(move |(tail, den)| {
            let mut num = vec![c0.clone()];
            num.extend(tail);
            let s = Series::polynomial(&num, order);
            match den {
                Some((a, b)) => s.div(&Series::polynomial(&[int(1), a, b], order)).unwrap(),
                None => s,
            }
        })
}

pub fn nonzero_constant() -> impl Strategy<Value = Rat> {
    prop_oneof![Just(int(1)), Just(int(1)), Just(int(2)), Just(int(-1)), Just(ratio(1, 2)), Just(int(3))]
}

pub fn unit(order: usize) -> impl Strategy<Value = Series> {
    nonzero_constant().prop_flat_map(move |c| unit_with(c, order))
}

/// Series with valuation exactly 1.
pub fn f1(order: usize) -> impl Strategy<Value = Series> {
    unit(order - 1).prop_map(|s| s.shift_up(1))
}
