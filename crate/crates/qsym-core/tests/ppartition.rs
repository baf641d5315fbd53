//! Labeled posets, order-preserving maps, and the generating functions
//! built from them — including the decomposition of a poset's maps into the
//! maps of its linear extensions, which ties the poset route to the chain
//! route independently.

use qsym_core::groups::{GroupElement, Permutation, SignedPermutation};
use qsym_core::ppartition::{
    bipartite_gamma, enumerate_b_ppartitions, enumerate_ppartitions, gamma, gamma_b,
    gamma_b_permutation, gamma_permutation, gamma_signed, gamma_signed_poset, LabeledPoset,
    PosetError, TypeBPoset,
};
use qsym_core::series::{Alphabet, Series};

fn perm(s: &str) -> Permutation {
    s.parse().expect("valid permutation")
}

fn sperm(s: &str) -> SignedPermutation {
    s.parse().expect("valid signed permutation")
}

#[test]
fn poset_construction_and_validation() {
    // Covers close transitively: 1 < 2 < 3 forces 1 < 3.
    let chain = LabeledPoset::from_covers(3, &[(1, 2), (2, 3)]).unwrap();
    assert!(chain.less(1, 3));
    assert!(!chain.less(3, 1));
    assert_eq!(chain.relations().len(), 3);

    assert!(matches!(
        LabeledPoset::from_covers(3, &[(1, 2), (2, 1)]),
        Err(PosetError::Cycle)
    ));
    assert!(matches!(
        LabeledPoset::from_covers(3, &[(1, 1)]),
        Err(PosetError::SelfRelation { label: 1 })
    ));
    assert!(matches!(
        LabeledPoset::from_covers(3, &[(0, 2)]),
        Err(PosetError::LabelOutOfRange { label: 0, n: 3 })
    ));
    assert!(matches!(
        LabeledPoset::from_covers(3, &[(1, 4)]),
        Err(PosetError::LabelOutOfRange { label: 4, n: 3 })
    ));
    assert!(matches!(LabeledPoset::from_covers(0, &[]), Err(PosetError::ZeroSize)));
}

#[test]
fn type_b_posets_validate_negation_closure() {
    // Every relation must come with its negated mirror; nothing is inferred.
    assert!(matches!(
        TypeBPoset::from_covers(2, &[(1, 2)]),
        Err(PosetError::NotNegationClosed { .. })
    ));
    let ok = TypeBPoset::from_covers(2, &[(1, 2), (-2, -1)]).unwrap();
    assert!(ok.less(1, 2));
    assert!(ok.less(-2, -1));

    // Relations touching 0 mirror to the other side of 0.
    assert!(TypeBPoset::from_covers(1, &[(0, 1)]).is_err());
    let through_zero = TypeBPoset::from_covers(1, &[(0, 1), (-1, 0)]).unwrap();
    assert!(through_zero.less(-1, 1));

    // A self-negated pair of covers can still be a cycle.
    assert!(matches!(
        TypeBPoset::from_covers(1, &[(1, -1), (-1, 1)]),
        Err(PosetError::Cycle)
    ));
    assert!(TypeBPoset::from_covers(1, &[(1, -1)]).is_ok());
}

#[test]
fn poset_text_format_round_trips() {
    let text = "3\n# a comment line\n1 < 2\n\n2 < 3\n";
    let parsed = LabeledPoset::parse_text(text).unwrap();
    assert_eq!(parsed, LabeledPoset::from_covers(3, &[(1, 2), (2, 3)]).unwrap());

    let signed_text = "2\n1 < 2\n-2 < -1\n";
    let parsed_b = TypeBPoset::parse_text(signed_text).unwrap();
    assert_eq!(parsed_b, TypeBPoset::from_covers(2, &[(1, 2), (-2, -1)]).unwrap());

    assert!(matches!(LabeledPoset::parse_text(""), Err(PosetError::Parse { .. })));
    assert!(matches!(LabeledPoset::parse_text("x\n1 < 2\n"), Err(PosetError::Parse { .. })));
    assert!(matches!(LabeledPoset::parse_text("3\n1 <"), Err(PosetError::Parse { .. })));
    assert!(matches!(LabeledPoset::parse_text("3\n1 > 2\n"), Err(PosetError::Parse { .. })));
}

#[test]
fn linear_extensions_of_basic_posets() {
    // An antichain is extended by every window; a total order by exactly
    // its own window.
    assert_eq!(LabeledPoset::antichain(3).unwrap().linear_extensions().len(), 6);
    for pi in Permutation::enumerate(4) {
        assert_eq!(LabeledPoset::from_total_order(&pi).linear_extensions(), vec![pi]);
    }
    for pi in SignedPermutation::enumerate(3) {
        assert_eq!(
            TypeBPoset::from_signed_total_order(&pi).signed_linear_extensions(),
            vec![pi]
        );
    }

    // The V poset 1 < 3, 2 < 3: windows placing 3 last.
    let v = LabeledPoset::from_covers(3, &[(1, 3), (2, 3)]).unwrap();
    let ext: Vec<String> = v.linear_extensions().iter().map(|p| p.to_string()).collect();
    assert_eq!(ext, ["1,2,3", "2,1,3"]);
}

#[test]
fn order_preserving_map_counts() {
    // Natural chain 1 <_P 2 <_P 3: weak throughout — multisets, C(5,3).
    let weak = LabeledPoset::from_covers(3, &[(1, 2), (2, 3)]).unwrap();
    assert_eq!(enumerate_ppartitions(&weak, 3).len(), 10);

    // Anti-natural chain 3 <_P 2 <_P 1: strict throughout — subsets, C(3,3).
    let strict = LabeledPoset::from_covers(3, &[(3, 2), (2, 1)]).unwrap();
    assert_eq!(enumerate_ppartitions(&strict, 3).len(), 1);
    assert_eq!(enumerate_ppartitions(&strict, 4).len(), 4);

    // The antichain puts no constraint at all.
    assert_eq!(enumerate_ppartitions(&LabeledPoset::antichain(2).unwrap(), 3).len(), 9);

    // Against the signed total order of (−3,2,−1) there are exactly the 10
    // maps behind its 10-term generating function at truncation 4.
    let b = TypeBPoset::from_signed_total_order(&sperm("-3,2,-1"));
    assert_eq!(enumerate_b_ppartitions(&b, 4).len(), 10);

    // Each map respects every relation.
    for f in enumerate_ppartitions(&weak, 3) {
        assert!(f.value(1) <= f.value(2) && f.value(2) <= f.value(3));
    }
    for f in enumerate_b_ppartitions(&b, 4) {
        // Negation symmetry is baked in: f(−i) = −f(i), f(0) = 0.
        assert_eq!(f.value(0), 0);
        for label in 1..=3 {
            assert_eq!(f.value(-label), -f.value(label));
        }
    }
}

/// Whatever the poset, its maps split exactly across its linear extensions.
fn assert_decomposes(poset: &LabeledPoset, truncation: u32) {
    let extensions = poset.linear_extensions();
    let total: usize = extensions
        .iter()
        .map(|pi| enumerate_ppartitions(&LabeledPoset::from_total_order(pi), truncation).len())
        .sum();
    assert_eq!(enumerate_ppartitions(poset, truncation).len(), total);

    let mut sum = Series::zero([(Alphabet::X, truncation)]);
    for pi in &extensions {
        sum = sum.plus(&gamma_permutation(pi, truncation).unwrap()).unwrap();
    }
    assert_eq!(gamma(poset, truncation).unwrap(), sum);
}

#[test]
fn poset_maps_decompose_over_linear_extensions() {
    let posets = [
        LabeledPoset::antichain(3).unwrap(),
        LabeledPoset::from_covers(3, &[(1, 2), (2, 3)]).unwrap(),
        LabeledPoset::from_covers(3, &[(3, 2), (2, 1)]).unwrap(),
        LabeledPoset::from_covers(3, &[(1, 3), (2, 3)]).unwrap(),
        LabeledPoset::from_covers(3, &[(3, 1), (3, 2)]).unwrap(),
        LabeledPoset::from_covers(4, &[(2, 1), (2, 3), (4, 3)]).unwrap(),
        LabeledPoset::from_covers(4, &[(1, 2), (4, 3)]).unwrap(),
        LabeledPoset::antichain(4).unwrap(),
    ];
    for poset in &posets {
        assert_decomposes(poset, 3);
    }
}

/// The signed analog: maps and both generating functions split across the
/// signed linear extensions.
fn assert_decomposes_b(poset: &TypeBPoset, truncation: u32) {
    let extensions = poset.signed_linear_extensions();
    let total: usize = extensions
        .iter()
        .map(|pi| {
            enumerate_b_ppartitions(&TypeBPoset::from_signed_total_order(pi), truncation).len()
        })
        .sum();
    assert_eq!(enumerate_b_ppartitions(poset, truncation).len(), total);

    let mut sum_b = Series::zero([(Alphabet::X, truncation)]);
    let mut sum_s = Series::zero([(Alphabet::U, truncation), (Alphabet::V, truncation)]);
    for pi in &extensions {
        sum_b = sum_b.plus(&gamma_b_permutation(pi, truncation).unwrap()).unwrap();
        sum_s = sum_s.plus(&gamma_signed(pi, truncation).unwrap()).unwrap();
    }
    assert_eq!(gamma_b(poset, truncation).unwrap(), sum_b);
    assert_eq!(gamma_signed_poset(poset, truncation).unwrap(), sum_s);
}

#[test]
fn type_b_poset_maps_decompose_over_signed_linear_extensions() {
    let posets = [
        TypeBPoset::from_covers(2, &[]).unwrap(),
        TypeBPoset::from_covers(2, &[(1, 2), (-2, -1)]).unwrap(),
        TypeBPoset::from_covers(2, &[(2, 1), (-1, -2)]).unwrap(),
        TypeBPoset::from_covers(2, &[(0, 1), (-1, 0)]).unwrap(),
        TypeBPoset::from_covers(2, &[(1, -2), (2, -1)]).unwrap(),
        TypeBPoset::from_covers(3, &[(1, 2), (-2, -1), (3, -1), (1, -3)]).unwrap(),
    ];
    for poset in &posets {
        assert_decomposes_b(poset, 3);
    }
}

#[test]
fn chain_route_agrees_with_poset_route() {
    // The closed-form chain sums must reproduce the brute-force sum over
    // order-preserving maps of the window's total order.
    for n in 1..=4 {
        for pi in Permutation::enumerate(n) {
            let direct = gamma(&LabeledPoset::from_total_order(&pi), 4).unwrap();
            assert_eq!(gamma_permutation(&pi, 4).unwrap(), direct, "pi = {pi}");
        }
    }
    for n in 1..=3 {
        for pi in SignedPermutation::enumerate(n) {
            let poset = TypeBPoset::from_signed_total_order(&pi);
            assert_eq!(gamma_b_permutation(&pi, 3).unwrap(), gamma_b(&poset, 3).unwrap());
            assert_eq!(gamma_signed(&pi, 3).unwrap(), gamma_signed_poset(&poset, 3).unwrap());
        }
    }
}

#[test]
fn bipartite_weight_bookkeeping() {
    // Degree 1: the identity window. Pairs (i, j) run over the full grid,
    // so the two-alphabet series is (x1 + x2)(y1 + y2 + y3).
    let series = bipartite_gamma(&perm("1"), 2, 3).unwrap();
    let mut expected = Series::zero([(Alphabet::X, 2), (Alphabet::Y, 3)]);
    let x_sum = gamma_permutation(&perm("1"), 2).unwrap();
    let y_sum = gamma_permutation(&perm("1"), 3)
        .unwrap()
        .rename_alphabet(Alphabet::X, Alphabet::Y)
        .unwrap();
    expected = expected.plus(&x_sum.times(&y_sum).unwrap()).unwrap();
    assert_eq!(series, expected);
    assert_eq!(series.len(), 6);

    // Each position contributes one x-letter and one y-letter, so every
    // term of a degree 2 window has total degree 4.
    let series = bipartite_gamma(&perm("2,1"), 2, 2).unwrap();
    assert!(!series.is_zero());
    for monomial in series.terms().keys() {
        assert_eq!(monomial.total_degree(), 4);
    }
}
