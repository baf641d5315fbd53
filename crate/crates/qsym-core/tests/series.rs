//! Exact truncated series: bounds enforcement, ring operations, renaming,
//! and the colored-letter substitution.

use proptest::prelude::*;

use qsym_core::series::{Alphabet, Monomial, Series, SeriesError, Variable};

fn var(alphabet: Alphabet, index: u32) -> Variable {
    Variable::new(alphabet, index).expect("valid variable")
}

fn x(index: u32) -> Variable {
    var(Alphabet::X, index)
}

#[test]
fn variable_minimum_indices() {
    // The u-letters start at 1 (u_0 does not exist); v-letters include 0.
    assert!(Variable::new(Alphabet::U, 0).is_err());
    assert!(Variable::new(Alphabet::Uy, 0).is_err());
    assert!(Variable::new(Alphabet::V, 0).is_ok());
    assert!(Variable::new(Alphabet::X, 0).is_ok());
    assert!(matches!(
        Variable::new(Alphabet::U, 0),
        Err(SeriesError::IndexBelowMinimum { .. })
    ));
}

#[test]
fn add_term_enforces_bounds() {
    let mut s = Series::zero([(Alphabet::X, 4)]);
    s.add_term(Monomial::from_pairs([(x(4), 1)]).unwrap(), 1).unwrap();
    assert!(matches!(
        s.add_term(Monomial::from_pairs([(x(5), 1)]).unwrap(), 1),
        Err(SeriesError::OutOfBounds { .. })
    ));
    assert!(matches!(
        s.add_term(Monomial::from_pairs([(var(Alphabet::Y, 1), 1)]).unwrap(), 1),
        Err(SeriesError::UnknownAlphabet { .. })
    ));
}

#[test]
fn terms_cancel_and_prune() {
    let mut s = Series::zero([(Alphabet::X, 3)]);
    let m = Monomial::from_pairs([(x(1), 2)]).unwrap();
    s.add_term(m.clone(), 5).unwrap();
    s.add_term(m.clone(), -5).unwrap();
    assert!(s.is_zero());
    assert_eq!(s.len(), 0);
    assert_eq!(s.coeff(&m), 0);
    assert_eq!(s.to_string(), "0");
}

#[test]
fn display_orders_terms_canonically() {
    let mut s = Series::zero([(Alphabet::X, 3)]);
    s.add_term(Monomial::from_pairs([(x(3), 1)]).unwrap(), 2).unwrap();
    s.add_term(Monomial::from_pairs([(x(1), 2), (x(2), 1)]).unwrap(), 1).unwrap();
    assert_eq!(s.to_string(), "x1^2*x2 + 2*x3");

    let mut t = Series::zero([(Alphabet::X, 3)]);
    t.add_term(Monomial::one(), 3).unwrap();
    t.add_term(Monomial::from_pairs([(x(1), 1)]).unwrap(), -1).unwrap();
    assert_eq!(t.to_string(), "3 - x1");

    let mut u = Series::zero([(Alphabet::U, 2), (Alphabet::V, 2)]);
    u.add_term(
        Monomial::from_pairs([(var(Alphabet::U, 1), 1), (var(Alphabet::V, 0), 1)]).unwrap(),
        -1,
    )
    .unwrap();
    assert_eq!(u.to_string(), "-u1*v0");
}

#[test]
fn mismatched_bounds_are_rejected() {
    let a = Series::zero([(Alphabet::X, 3)]);
    let b = Series::zero([(Alphabet::X, 4)]);
    assert!(matches!(a.plus(&b), Err(SeriesError::BoundsMismatch { .. })));
    assert!(matches!(a.times(&b), Err(SeriesError::BoundsMismatch { .. })));

    // Disjoint alphabets merge.
    let y = Series::zero([(Alphabet::Y, 2)]);
    let merged = a.plus(&y).unwrap();
    assert_eq!(merged.bounds().len(), 2);
}

#[test]
fn renaming_moves_an_alphabet() {
    let mut s = Series::zero([(Alphabet::X, 3)]);
    s.add_term(Monomial::from_pairs([(x(1), 1)]).unwrap(), 1).unwrap();
    s.add_term(Monomial::from_pairs([(x(2), 2)]).unwrap(), 1).unwrap();
    let renamed = s.rename_alphabet(Alphabet::X, Alphabet::Y).unwrap();
    assert_eq!(renamed.to_string(), "y1 + y2^2");
    assert!(renamed.bounds().contains_key(&Alphabet::Y));
    assert!(!renamed.bounds().contains_key(&Alphabet::X));

    let mut both = Series::zero([(Alphabet::X, 3), (Alphabet::Y, 3)]);
    both.add_term(Monomial::from_pairs([(x(1), 1)]).unwrap(), 1).unwrap();
    assert!(matches!(
        both.rename_alphabet(Alphabet::X, Alphabet::Y),
        Err(SeriesError::RenameCollision { .. })
    ));

    // Renaming u to an alphabet that allows index 0 is fine; the reverse
    // direction fails when an index-0 variable exists.
    let mut v_series = Series::zero([(Alphabet::V, 2)]);
    v_series.add_term(Monomial::from_pairs([(var(Alphabet::V, 0), 1)]).unwrap(), 1).unwrap();
    assert!(v_series.rename_alphabet(Alphabet::V, Alphabet::X).is_ok());
    assert!(v_series.rename_alphabet(Alphabet::V, Alphabet::U).is_err());
}

#[test]
fn substitution_identifies_colored_letters() {
    let mut s = Series::zero([(Alphabet::U, 2), (Alphabet::V, 2)]);
    let u1v1 = Monomial::from_pairs([(var(Alphabet::U, 1), 1), (var(Alphabet::V, 1), 1)]).unwrap();
    let u2v2 = Monomial::from_pairs([(var(Alphabet::U, 2), 1), (var(Alphabet::V, 2), 1)]).unwrap();
    s.add_term(u1v1, 1).unwrap();
    s.add_term(u2v2, 1).unwrap();
    let merged = s.substitute_u_equals_v().unwrap();
    assert_eq!(merged.to_string(), "v1^2 + v2^2");
    assert_eq!(merged.bounds().len(), 1);

    let x_series = Series::zero([(Alphabet::X, 2)]);
    assert!(matches!(x_series.substitute_u_equals_v(), Err(SeriesError::NotColored { .. })));
}

#[test]
fn json_lists_terms_with_named_variables() {
    let mut s = Series::zero([(Alphabet::X, 3)]);
    s.add_term(Monomial::from_pairs([(x(1), 2)]).unwrap(), 1).unwrap();
    s.add_term(Monomial::from_pairs([(x(2), 1), (x(3), 1)]).unwrap(), -2).unwrap();
    let json = s.to_json();
    assert_eq!(
        json,
        serde_json::json!([
            {"monomial": {"x1": 2}, "coeff": 1},
            {"monomial": {"x2": 1, "x3": 1}, "coeff": -2},
        ])
    );
}

/// A random series over x_0..=x_3 with small exponents and coefficients.
fn arb_series() -> impl Strategy<Value = Series> {
    proptest::collection::vec(
        (proptest::collection::vec((0..=3u32, 0..=2u32), 0..3), -3..=3i64),
        0..4,
    )
    .prop_map(|raw| {
        let mut s = Series::zero([(Alphabet::X, 3)]);
        for (pairs, coeff) in raw {
            let mut m = Monomial::one();
            for (index, exp) in pairs {
                m.multiply_by(x(index), exp).unwrap();
            }
            s.add_term(m, coeff).unwrap();
        }
        s
    })
}

/// A random series over the colored letters u_1..=u_2, v_0..=v_2.
fn arb_colored_series() -> impl Strategy<Value = Series> {
    proptest::collection::vec(
        (proptest::collection::vec((any::<bool>(), 0..=2u32, 1..=2u32), 0..3), -3..=3i64),
        0..4,
    )
    .prop_map(|raw| {
        let mut s = Series::zero([(Alphabet::U, 2), (Alphabet::V, 2)]);
        for (pairs, coeff) in raw {
            let mut m = Monomial::one();
            for (is_u, v_index, exp) in pairs {
                let variable = if is_u {
                    var(Alphabet::U, v_index.max(1))
                } else {
                    var(Alphabet::V, v_index)
                };
                m.multiply_by(variable, exp).unwrap();
            }
            s.add_term(m, coeff).unwrap();
        }
        s
    })
}

proptest! {
    #[test]
    fn ring_laws_hold(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(a.plus(&b).unwrap(), b.plus(&a).unwrap());
        prop_assert_eq!(a.times(&b).unwrap(), b.times(&a).unwrap());
        prop_assert_eq!(
            a.plus(&b).unwrap().plus(&c).unwrap(),
            a.plus(&b.plus(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.times(&b).unwrap().times(&c).unwrap(),
            a.times(&b.times(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.times(&b.plus(&c).unwrap()).unwrap(),
            a.times(&b).unwrap().plus(&a.times(&c).unwrap()).unwrap()
        );
        prop_assert!(a.minus(&a).unwrap().is_zero());
        prop_assert_eq!(a.scaled(-2).unwrap(), a.scaled(-1).unwrap().plus(&a.scaled(-1).unwrap()).unwrap());
    }

    #[test]
    fn substitution_is_a_ring_map(a in arb_colored_series(), b in arb_colored_series()) {
        let subst_sum = a.plus(&b).unwrap().substitute_u_equals_v().unwrap();
        let sum_subst = a
            .substitute_u_equals_v()
            .unwrap()
            .plus(&b.substitute_u_equals_v().unwrap())
            .unwrap();
        prop_assert_eq!(subst_sum, sum_subst);

        let subst_product = a.times(&b).unwrap().substitute_u_equals_v().unwrap();
        let product_subst = a
            .substitute_u_equals_v()
            .unwrap()
            .times(&b.substitute_u_equals_v().unwrap())
            .unwrap();
        prop_assert_eq!(subst_product, product_subst);
    }

    #[test]
    fn renaming_round_trips(a in arb_series()) {
        let there_and_back = a
            .rename_alphabet(Alphabet::X, Alphabet::Y)
            .unwrap()
            .rename_alphabet(Alphabet::Y, Alphabet::X)
            .unwrap();
        prop_assert_eq!(there_and_back, a);
    }
}
