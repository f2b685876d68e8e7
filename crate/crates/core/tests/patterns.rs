mod common;

use arcperm_core::arcs::{is_arc, is_b_arc, is_left_unimodal, is_signed_arc};
use arcperm_core::patterns::*;
use arcperm_core::{Permutation, SignedPermutation};
use common::*;
use itertools::Itertools;

/// Containment by trying every index subset.
fn contains_oracle(text: &[i64], pattern: &[i64], signed: bool) -> bool {
    let key = |v: i64| v.abs();
    (0..text.len()).combinations(pattern.len()).any(|idx| {
        let sub: Vec<i64> = idx.iter().map(|&i| text[i]).collect();
        let signs_ok = !signed || sub.iter().zip(pattern).all(|(a, b)| (a < &0) == (b < &0));
        let order_ok = (0..sub.len()).all(|i| {
            (0..sub.len()).all(|j| key(sub[i]).cmp(&key(sub[j])) == key(pattern[i]).cmp(&key(pattern[j])))
        });
        signs_ok && order_ok
    })
}

fn words_a(p: &Permutation) -> Vec<i64> {
    p.word().iter().map(|&v| v.into()).collect()
}

fn words_b(p: &SignedPermutation) -> Vec<i64> {
    p.word().iter().map(|&v| v.into()).collect()
}

#[test]
fn containment_agrees_with_subset_search() {
    let pats = arc_forbidden();
    for p in symmetric(6) {
        for pat in &pats {
            assert_eq!(contains_a(&p, pat), contains_oracle(&words_a(&p), &words_a(pat), false));
        }
    }
    let spats = signed_arc_forbidden();
    for p in hyperoctahedral(4) {
        for pat in &spats {
            assert_eq!(contains_b(&p, pat), contains_oracle(&words_b(&p), &words_b(pat), true), "{p} {pat}");
        }
    }
}

#[test]
fn signed_containment_compares_absolute_values() {
    let p: SignedPermutation = "[-3,2,5,-1,4]".parse().unwrap();
    assert_eq!(find_b(&p, &"[-2,-1,3]".parse().unwrap()), Some(vec![1, 4, 5]));
    assert!(!contains_b(&p, &"[2,1,3]".parse().unwrap()));
}

#[test]
fn arc_permutations_are_the_avoiders() {
    let pats = arc_forbidden();
    assert_eq!(pats.len(), 8);
    for n in 1..=6 {
        for p in symmetric(n) {
            assert_eq!(is_arc(&p), avoids_all_a(&p, &pats), "{p}");
        }
    }
}

#[test]
fn left_unimodal_permutations_are_the_avoiders() {
    let pats = left_unimodal_forbidden();
    for n in 1..=6 {
        for p in symmetric(n) {
            assert_eq!(is_left_unimodal(&p), avoids_all_a(&p, &pats), "{p}");
        }
    }
}

#[test]
fn signed_characterizations_for_small_n() {
    let s = signed_arc_forbidden();
    let b = b_arc_forbidden();
    for n in 1..=4 {
        for p in hyperoctahedral(n) {
            assert_eq!(is_signed_arc(&p), avoids_all_b(&p, &s), "{p}");
            assert_eq!(is_b_arc(&p), avoids_all_b(&p, &b), "{p}");
        }
    }
}

#[test]
fn witness_is_a_genuine_occurrence() {
    let p: Permutation = "125436".parse().unwrap();
    let w = first_occurrence_a(&p, &arc_forbidden()).unwrap();
    assert_eq!(w.positions, vec![1, 3, 4, 6]);
    let sub: Vec<i64> = w.positions.iter().map(|&i| i64::from(p.at(i))).collect();
    assert!(contains_oracle(&sub, &words_a(&w.pattern), false));
    let p: SignedPermutation = "[-2,1,3]".parse().unwrap();
    let w = first_occurrence_b(&p, &signed_arc_forbidden()).unwrap();
    assert_eq!(w.positions, vec![1, 2, 3]);
    assert!(first_occurrence_a(&"12543".parse().unwrap(), &arc_forbidden()).is_none());
}

#[test]
fn orientation_rejects_repeats() {
    assert!(triple_orientation(2, 2, 1).is_err());
    assert_eq!(triple_orientation(2, 3, 1).unwrap(), Orientation::Clockwise);
    assert_eq!(triple_orientation(2, 1, 3).unwrap(), Orientation::Counterclockwise);
}
