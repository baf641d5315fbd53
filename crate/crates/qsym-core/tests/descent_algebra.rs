//! Descent classes, their group-algebra products, brute-force structure
//! constants, and the table's export formats.

use std::collections::BTreeMap;

use qsym_core::combinatorics::{Composition, PseudoComposition, SignedComposition};
use qsym_core::descent_algebra::{
    class_sum, compute_structure_constants, ClassIndex, DegreeCaps, DescentAlgebraError,
    GroupAlgebraElement, StructureConstantTable,
};
use qsym_core::groups::Permutation;

fn comp(s: &str) -> Composition {
    s.parse().expect("valid composition")
}

fn caps() -> DegreeCaps {
    DegreeCaps::default()
}

#[test]
fn degree_caps_guard_expensive_degrees() {
    let default = caps();
    assert!(default.check(qsym_core::combinatorics::Flavor::A, 6).is_ok());
    let err = default.check(qsym_core::combinatorics::Flavor::A, 7).unwrap_err();
    assert!(err.to_string().contains("--cap-override"), "err was: {err}");
    assert!(default.check(qsym_core::combinatorics::Flavor::B, 5).is_err());
    assert!(default.check(qsym_core::combinatorics::Flavor::S, 5).is_err());
    assert!(DegreeCaps::uniform(8).check(qsym_core::combinatorics::Flavor::S, 8).is_ok());

    assert!(matches!(
        class_sum(&comp("4,3"), &default),
        Err(DescentAlgebraError::CapExceeded { degree: 7, .. })
    ));
}

#[test]
fn class_sums_collect_matching_windows() {
    let sum = class_sum(&comp("2,1"), &caps()).unwrap();
    assert_eq!(sum.term_count(), 2);
    assert_eq!(sum.coeff(&"1,3,2".parse().unwrap()), 1);
    assert_eq!(sum.coeff(&"2,3,1".parse().unwrap()), 1);
    assert_eq!(sum.coeff(&"3,2,1".parse().unwrap()), 0);
    assert_eq!(sum.coefficient_sum().unwrap(), 2);
    assert_eq!(sum.to_string(), "(1,3,2) + (2,3,1)");
}

#[test]
fn group_algebra_arithmetic() {
    let mut a = GroupAlgebraElement::<Permutation>::zero(2);
    a.add_term("1,2".parse().unwrap(), 1).unwrap();
    a.add_term("2,1".parse().unwrap(), 2).unwrap();
    assert_eq!(a.to_string(), "(1,2) + 2*(2,1)");
    assert_eq!(a.degree(), 2);

    // Convolution: (e + 2s)(e + 2s) = e + 4s + 4s² = 5e + 4s.
    let square = a.multiply(&a).unwrap();
    assert_eq!(square.coeff(&"1,2".parse().unwrap()), 5);
    assert_eq!(square.coeff(&"2,1".parse().unwrap()), 4);

    let diff = square.plus(&square.scaled(-1).unwrap()).unwrap();
    assert!(diff.is_zero());

    // Degree mismatches are rejected.
    let b = GroupAlgebraElement::<Permutation>::zero(3);
    assert!(a.plus(&b).is_err());
    assert!(a.multiply(&b).is_err());
    let mut c = GroupAlgebraElement::<Permutation>::zero(2);
    assert!(c.add_term("1,2,3".parse().unwrap(), 1).is_err());
}

#[test]
fn degree_two_table_is_exactly_right() {
    let table = compute_structure_constants::<Composition>(2, &caps()).unwrap();
    let two = comp("2");
    let one_one = comp("1,1");
    // The only products in S_2: e·e = e, s·s = e, e·s = s·e = s.
    assert_eq!(table.entry(&two, &two, &two), 1);
    assert_eq!(table.entry(&one_one, &one_one, &two), 1);
    assert_eq!(table.entry(&two, &one_one, &one_one), 1);
    assert_eq!(table.entry(&one_one, &two, &one_one), 1);
    assert_eq!(table.nonzero_count(), 4);
    assert_eq!(table.class_size(&two), 1);
    assert_eq!(table.class_size(&one_one), 1);

    assert_eq!(table.row(&one_one, &one_one).unwrap(), vec![(comp("2"), 1)]);
}

#[test]
fn identity_class_is_the_unit_of_the_products() {
    // The class of the identity window (the one-part index) is a two-sided
    // unit for the table product in every flavor.
    fn check<C: ClassIndex>(n: u32, unit: &C) {
        let table = compute_structure_constants::<C>(n, &caps()).unwrap();
        for alpha in C::enumerate(n).unwrap() {
            let left = table.inner_product(unit, &alpha).unwrap();
            let right = table.inner_product(&alpha, unit).unwrap();
            assert_eq!(left.coeff(&alpha), 1, "left unit failed at {alpha}");
            assert_eq!(left.term_count(), 1);
            assert_eq!(right.coeff(&alpha), 1, "right unit failed at {alpha}");
            assert_eq!(right.term_count(), 1);
        }
    }
    check::<Composition>(3, &comp("3"));
    check::<PseudoComposition>(3, &"3".parse().unwrap());
    check::<SignedComposition>(3, &"3".parse().unwrap());
}

#[test]
fn coproduct_lists_factor_pairs_in_enumeration_order() {
    let table = compute_structure_constants::<Composition>(2, &caps()).unwrap();
    let two = comp("2");
    let one_one = comp("1,1");
    assert_eq!(
        table.inner_coproduct(&two).unwrap(),
        vec![(two.clone(), two.clone(), 1), (one_one.clone(), one_one.clone(), 1)]
    );
    assert_eq!(
        table.inner_coproduct(&one_one).unwrap(),
        vec![(two.clone(), one_one.clone(), 1), (one_one, two, 1)]
    );
}

fn singleton<C: ClassIndex>(index: &C) -> BTreeMap<C, i64> {
    BTreeMap::from([(index.clone(), 1)])
}

fn associativity_sweep<C: ClassIndex>(table: &StructureConstantTable<C>) {
    let order = C::enumerate(table.degree()).unwrap();
    let mut pair_products: BTreeMap<(C, C), BTreeMap<C, i64>> = BTreeMap::new();
    for a in &order {
        for b in &order {
            let product = table.multiply_classes(&singleton(a), &singleton(b)).unwrap();
            pair_products.insert((a.clone(), b.clone()), product);
        }
    }
    for a in &order {
        for b in &order {
            let ab = &pair_products[&(a.clone(), b.clone())];
            for c in &order {
                let bc = &pair_products[&(b.clone(), c.clone())];
                let left = table.multiply_classes(ab, &singleton(c)).unwrap();
                let right = table.multiply_classes(&singleton(a), bc).unwrap();
                assert_eq!(left, right, "associativity failed at ({a}; {b}; {c})");
            }
        }
    }
}

#[test]
fn table_products_are_associative() {
    for n in 1..=4 {
        associativity_sweep(&compute_structure_constants::<Composition>(n, &caps()).unwrap());
    }
    for n in 1..=3 {
        associativity_sweep(&compute_structure_constants::<PseudoComposition>(n, &caps()).unwrap());
        associativity_sweep(&compute_structure_constants::<SignedComposition>(n, &caps()).unwrap());
    }
}

#[test]
#[ignore = "larger tier; run with --include-ignored"]
fn slow_flavor_b_degree_four_associativity() {
    associativity_sweep(&compute_structure_constants::<PseudoComposition>(4, &caps()).unwrap());
}

#[test]
fn csv_export_round_trips_through_the_importer() {
    fn check<C: ClassIndex>(n: u32) {
        let table = compute_structure_constants::<C>(n, &caps()).unwrap();
        let csv = table.to_csv().unwrap();
        let imported = StructureConstantTable::<C>::from_csv(&csv).unwrap();
        assert_eq!(imported.degree(), table.degree());
        let original: Vec<_> = table.entries().collect();
        let round_tripped: Vec<_> = imported.entries().collect();
        assert_eq!(original, round_tripped);
        for gamma in C::enumerate(n).unwrap() {
            assert_eq!(imported.class_size(&gamma), table.class_size(&gamma));
        }
    }
    check::<Composition>(3);
    check::<PseudoComposition>(2);
    check::<SignedComposition>(2);
}

#[test]
fn csv_shape_and_json_mirror() {
    let table = compute_structure_constants::<Composition>(2, &caps()).unwrap();
    let csv = table.to_csv().unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("flavor,n,alpha,beta,gamma,count"));
    // Multi-part indices need quoting; single parts do not.
    let body: Vec<&str> = lines.collect();
    assert_eq!(
        body,
        vec![
            "A,2,2,2,2,1",
            "A,2,2,\"1,1\",\"1,1\",1",
            "A,2,\"1,1\",2,\"1,1\",1",
            "A,2,\"1,1\",\"1,1\",2,1",
        ]
    );

    let json = table.to_json().unwrap();
    let records = json.as_array().expect("array of records");
    assert_eq!(records.len(), body.len());
    assert_eq!(
        records[0],
        serde_json::json!({
            "flavor": "A", "n": 2, "alpha": "2", "beta": "2", "gamma": "2", "count": 1
        })
    );
}

#[test]
fn csv_importer_rejects_malformed_documents() {
    let table = compute_structure_constants::<Composition>(2, &caps()).unwrap();
    let good = table.to_csv().unwrap();

    // A duplicated triple.
    let mut duplicated = good.clone();
    let last_line = good.lines().last().unwrap().to_owned();
    duplicated.push_str(&last_line);
    duplicated.push('\n');
    assert!(StructureConstantTable::<Composition>::from_csv(&duplicated).is_err());

    // Mixed degrees.
    let mixed = format!("{good}A,3,3,3,3,1\n");
    assert!(StructureConstantTable::<Composition>::from_csv(&mixed).is_err());

    // Wrong flavor letter for the requested index family.
    let wrong_flavor = good.replace("A,", "B,");
    assert!(StructureConstantTable::<Composition>::from_csv(&wrong_flavor).is_err());

    // Negative count.
    let negative = "flavor,n,alpha,beta,gamma,count\nA,2,2,2,2,-1\n";
    assert!(StructureConstantTable::<Composition>::from_csv(negative).is_err());

    // An index that is not a valid composition.
    let bad_index = "flavor,n,alpha,beta,gamma,count\nA,2,0,2,2,1\n";
    assert!(StructureConstantTable::<Composition>::from_csv(bad_index).is_err());

    // Not CSV at all.
    assert!(StructureConstantTable::<Composition>::from_csv("nonsense").is_err());
}
