mod common;

use arcperm_core::arcs::*;
use arcperm_core::canonical::{cycle_a, cycle_b};
use arcperm_core::{Permutation, SignedPermutation};
use common::*;
use std::collections::BTreeSet;

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

#[test]
fn arc_predicate_matches_definition_and_generator() {
    for n in 1..=7 {
        let oracle: Vec<Permutation> = symmetric(n).into_iter().filter(|p| arc_oracle(p.word())).collect();
        for p in symmetric(n) {
            assert_eq!(is_arc(&p), arc_oracle(p.word()), "{p}");
        }
        let generated = generate_arc(n).unwrap();
        assert_eq!(sorted(&generated), oracle, "n={n}");
        let expected = if n == 1 { 1 } else { n << (n - 2) };
        assert_eq!(generated.len(), expected);
    }
}

#[test]
fn left_unimodal_predicate_matches_definition_and_generator() {
    for n in 1..=7 {
        let oracle: Vec<Permutation> = symmetric(n)
            .into_iter()
            .filter(|p| left_unimodal_oracle(p.word()))
            .collect();
        let generated = generate_left_unimodal(n).unwrap();
        assert_eq!(sorted(&generated), oracle);
        assert_eq!(generated.len(), 1 << (n - 1));
        assert!(generated.iter().all(is_arc));
    }
}

#[test]
fn signed_families_match_definitions_and_generators() {
    for n in 1..=5 {
        let all = hyperoctahedral(n);
        let signed: Vec<_> = all.iter().filter(|p| signed_arc_oracle(p.word())).cloned().collect();
        let b: Vec<_> = all.iter().filter(|p| b_arc_oracle(p.word())).cloned().collect();
        for p in &all {
            assert_eq!(is_signed_arc(p), signed_arc_oracle(p.word()), "{p}");
            assert_eq!(is_b_arc(p), b_arc_oracle(p.word()), "{p}");
        }
        assert_eq!(sorted(&generate_signed_arc(n).unwrap()), sorted(&signed));
        assert_eq!(sorted(&generate_b_arc(n).unwrap()), sorted(&b));
        assert_eq!(signed.len(), n << n);
        assert_eq!(b.len(), n << n);
    }
}

#[test]
fn generators_emit_each_member_once() {
    for fam in Family::ALL {
        for n in 1..=6 {
            let v = fam.generate(n).unwrap();
            let set: BTreeSet<_> = v.iter().cloned().collect();
            assert_eq!(set.len(), v.len(), "{fam} n={n}");
            assert!(v.iter().all(|p| fam.contains(p)), "{fam} n={n}");
        }
    }
}

#[test]
fn generator_order_is_stable() {
    let b1: Vec<String> = generate_b_arc(1).unwrap().iter().map(ToString::to_string).collect();
    assert_eq!(b1, ["[1]", "[-1]"]);
    assert_eq!(generate_arc(4).unwrap(), generate_arc(4).unwrap());
}

#[test]
fn absolute_value_of_a_signed_arc_permutation_is_an_arc_permutation() {
    for n in 1..=8 {
        assert!(generate_signed_arc(n).unwrap().iter().all(|p| is_arc(&p.absolute())));
    }
}

#[test]
fn closed_under_rotation() {
    for n in 2..=7 {
        let c = cycle_a(n - 1, n).unwrap();
        for p in generate_arc(n).unwrap() {
            assert!(is_arc(&c.compose(&p).unwrap()));
            assert!(is_arc(&c.inverse().compose(&p).unwrap()));
        }
        let c = cycle_b(n - 1, n).unwrap();
        for p in generate_b_arc(n).unwrap() {
            assert!(is_b_arc(&c.compose(&p).unwrap()));
        }
    }
}

#[test]
fn b_arc_cardinalities_up_to_twelve() {
    for n in 1..=12 {
        assert_eq!(generate_b_arc(n).unwrap().len(), n << n);
        assert_eq!(generate_signed_arc(n).unwrap().len(), n << n);
    }
}

#[test]
fn size_guards() {
    assert!(matches!(
        generate_symmetric(10),
        Err(arcperm_core::Error::SizeGuard { n: 10, limit: 9 })
    ));
    assert!(generate_hyperoctahedral(8).is_err());
    assert_eq!(generate_hyperoctahedral_with_limit(2, 2).unwrap().len(), 8);
    assert!(generate_arc(0).is_err());
    assert!(Family::Arc.generate(17).is_err());
}

#[test]
fn diagnostics_point_at_the_first_failure() {
    let p: Permutation = "12543".parse().unwrap();
    assert_eq!(arc_violation(&p), None);
    let p: Permutation = "125436".parse().unwrap();
    assert_eq!(arc_violation(&p), Some(Violation::PrefixNotInterval { len: 3 }));
    let p: SignedPermutation = "[-2,1,3]".parse().unwrap();
    assert_eq!(signed_arc_violation(&p), Some(Violation::WrongSign { position: 2 }));
    let p: SignedPermutation = "[5,2,-1,4,3]".parse().unwrap();
    assert!(!is_b_arc(&p));
    assert!(matches!(b_arc_violation(&p), Some(Violation::SuffixNotInterval { .. })));
    assert_eq!(
        Family::Arc.violation(&p),
        Some(MembershipFailure::HasNegativeEntries)
    );
}
