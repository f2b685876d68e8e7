//! Classical and signed pattern containment, and the forbidden-pattern lists
//! characterizing `A_n`, `A^s_n` and `A^B_n`.
//!
//! Searches are plain subsequence enumeration in lexicographic order of
//! index tuples, pruned as soon as a partial tuple breaks the sign or the
//! relative order; patterns here have length 3 or 4.

use alloc::vec::Vec;
use itertools::Itertools;

use crate::arcs::CircleOn;
use crate::perm::{Permutation, SignedPermutation};
use crate::{Error, Result};

/// A signed pattern `σ ∈ B_k`.
pub type SignedPattern = SignedPermutation;

/// One occurrence of a pattern: 1-based positions `i_1 < … < i_k` in the text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence<P> {
    pub positions: Vec<usize>,
    pub pattern: P,
}

/// Lexicographically first index tuple whose entries match the pattern
/// entrywise (`entry_ok`) and whose keys are order-isomorphic to `pattern_keys`.
fn first_occurrence_by(
    text_keys: &[u32],
    pattern_keys: &[u32],
    entry_ok: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    fn search(
        text: &[u32],
        pat: &[u32],
        entry_ok: &dyn Fn(usize, usize) -> bool,
        chosen: &mut Vec<usize>,
        from: usize,
    ) -> bool {
        let j = chosen.len();
        if j == pat.len() {
            return true;
        }
        let remaining = pat.len() - j;
        for i in from..=text.len() - remaining {
            if !entry_ok(i, j) {
                continue;
            }
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(jj, &ii)| text[ii].cmp(&text[i]) == pat[jj].cmp(&pat[j]));
            if !consistent {
                continue;
            }
            chosen.push(i);
            if search(text, pat, entry_ok, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    if pattern_keys.len() > text_keys.len() {
        return None;
    }
    let mut chosen = Vec::with_capacity(pattern_keys.len());
    search(text_keys, pattern_keys, &entry_ok, &mut chosen, 0)
        .then(|| chosen.into_iter().map(|i| i + 1).collect())
}

pub fn find_a(p: &Permutation, pattern: &Permutation) -> Option<Vec<usize>> {
    first_occurrence_by(p.word(), pattern.word(), |_, _| true)
}

/// Classical containment: some subsequence of `p` is order-isomorphic to `pattern`.
pub fn contains_a(p: &Permutation, pattern: &Permutation) -> bool {
    find_a(p, pattern).is_some()
}

pub fn find_b(p: &SignedPermutation, pattern: &SignedPattern) -> Option<Vec<usize>> {
    let text = p.absolute();
    let pat = pattern.absolute();
    let (tw, pw) = (p.word(), pattern.word());
    first_occurrence_by(text.word(), pat.word(), |i, j| (tw[i] < 0) == (pw[j] < 0))
}

/// Signed containment: matching signs entrywise, and absolute values in the
/// same relative order as the pattern's absolute values.
pub fn contains_b(p: &SignedPermutation, pattern: &SignedPattern) -> bool {
    find_b(p, pattern).is_some()
}

fn first_of<T: Clone, P: Clone>(
    p: &T,
    patterns: &[P],
    find: impl Fn(&T, &P) -> Option<Vec<usize>>,
) -> Option<Occurrence<P>> {
    patterns
        .iter()
        .enumerate()
        .filter_map(|(rank, pat)| find(p, pat).map(|pos| (pos, rank, pat)))
        .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)))
        .map(|(positions, _, pat)| Occurrence {
            positions,
            pattern: pat.clone(),
        })
}

/// The occurrence with the lexicographically smallest index tuple over all
/// listed patterns (ties broken by list order), if any.
pub fn first_occurrence_a(p: &Permutation, patterns: &[Permutation]) -> Option<Occurrence<Permutation>> {
    first_of(p, patterns, find_a)
}

pub fn first_occurrence_b(
    p: &SignedPermutation,
    patterns: &[SignedPattern],
) -> Option<Occurrence<SignedPattern>> {
    first_of(p, patterns, find_b)
}

pub fn avoids_all_a(p: &Permutation, patterns: &[Permutation]) -> bool {
    patterns.iter().all(|pat| !contains_a(p, pat))
}

pub fn avoids_all_b(p: &SignedPermutation, patterns: &[SignedPattern]) -> bool {
    patterns.iter().all(|pat| !contains_b(p, pat))
}

/// The eight `τ ∈ S_4` with `|τ(1) - τ(2)| = 2`, in lexicographic order.
pub fn arc_forbidden() -> Vec<Permutation> {
    (1..=4u32)
        .permutations(4)
        .filter(|w| w[0].abs_diff(w[1]) == 2)
        .map(Permutation::from_word_unchecked)
        .collect()
}

/// `132` and `312`: a later entry lying strictly between two earlier ones.
pub fn left_unimodal_forbidden() -> Vec<Permutation> {
    alloc::vec![
        Permutation::from_word_unchecked(alloc::vec![1, 3, 2]),
        Permutation::from_word_unchecked(alloc::vec![3, 1, 2]),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
}

/// Orientation of `(a, b, c)` on a circle carrying `1, 2, …, n` clockwise:
/// clockwise iff `a<b<c`, `b<c<a` or `c<a<b`.
pub fn triple_orientation(a: i64, b: i64, c: i64) -> Result<Orientation> {
    if a == b || b == c || a == c {
        return Err(Error::RepeatedTriple(a, b, c));
    }
    let cw = (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
    Ok(if cw {
        Orientation::Clockwise
    } else {
        Orientation::Counterclockwise
    })
}

fn sorted(mut v: Vec<SignedPattern>) -> Vec<SignedPattern> {
    v.sort();
    v.dedup();
    v
}

/// `[±a,-b,±c]` for clockwise `(a,b,c)` and `[±a,b,±c]` for counterclockwise
/// `(a,b,c)`, over the orderings of `{1,2,3}`; 24 patterns, sorted.
pub fn signed_arc_forbidden() -> Vec<SignedPattern> {
    let mut out = Vec::new();
    for t in (1..=3i32).permutations(3) {
        let (a, b, c) = (t[0], t[1], t[2]);
        let mid = match triple_orientation(a.into(), b.into(), c.into()).expect("distinct") {
            Orientation::Clockwise => -b,
            Orientation::Counterclockwise => b,
        };
        for (sa, sc) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            out.push(SignedPermutation::from_word_unchecked(alloc::vec![sa * a, mid, sc * c]));
        }
    }
    sorted(out)
}

/// `[a,b,c] ∈ B_3` with `b` and `c` at distance at least 2 on `O_3`; 24
/// patterns, sorted.
pub fn b_arc_forbidden() -> Vec<SignedPattern> {
    let circle = CircleOn::new(3).expect("n = 3");
    let all = crate::arcs::generate_hyperoctahedral(3).expect("B_3 is small");
    sorted(
        all.into_iter()
            .filter(|p| circle.distance(p.at(2), p.at(3)).expect("in range") >= 2)
            .collect(),
    )
}
