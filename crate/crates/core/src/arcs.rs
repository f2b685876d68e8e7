//! Arc permutations `A_n`, left-unimodal permutations `L_n`, signed arc
//! permutations `A^s_n` and B-arc permutations `A^B_n`.
//!
//! Each family has a predicate written straight from its definition (with a
//! diagnostic variant reporting the first failing prefix, suffix or sign)
//! and a generator that builds the family directly instead of filtering.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use itertools::Itertools;

use crate::perm::{Permutation, SignedPermutation};
use crate::{Error, Result};

pub const DEFAULT_SYMMETRIC_LIMIT: usize = 9;
pub const DEFAULT_HYPEROCTAHEDRAL_LIMIT: usize = 7;
/// The arc families grow like `n·2^n`; this keeps default runs small.
pub const DEFAULT_ARC_LIMIT: usize = 16;

/// True iff the distinct points `indices` of `Z_modulus` form a cyclic run.
/// The empty set and the whole circle both count.
fn is_cyclic_run(indices: &mut Vec<usize>, modulus: usize) -> bool {
    indices.sort_unstable();
    indices.dedup();
    let len = indices.len();
    if len == 0 || len == modulus {
        return true;
    }
    let gaps = (0..len)
        .filter(|&i| indices[(i + 1) % len] != (indices[i] + 1) % modulus)
        .count();
    gaps == 1
}

/// True iff `set ⊆ {1..n}` is an interval `{a, a+1, …, b}` of `Z_n`.
pub fn is_interval_zn(set: &[u32], n: usize) -> Result<bool> {
    let mut idx = set
        .iter()
        .map(|&v| {
            if v == 0 || v as usize > n {
                Err(Error::OutOfRange {
                    value: i64::from(v),
                    n,
                })
            } else {
                Ok(v as usize - 1)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(is_cyclic_run(&mut idx, n))
}

/// True iff `set ⊆ {1..n}` is an interval of the integers (no wraparound).
pub fn is_interval_z(set: &[u32]) -> bool {
    match (set.iter().min(), set.iter().max()) {
        (Some(&lo), Some(&hi)) => {
            let mut distinct = set.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            (hi - lo) as usize + 1 == distinct.len()
        }
        _ => true,
    }
}

/// The circle `O_n`: the `2n` points `-1,-2,…,-n,1,2,…,n` in clockwise order,
/// identified with `Z_2n` by `j ↦ j-1` and `-j ↦ n+j-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircleOn {
    n: usize,
}

impl CircleOn {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        Ok(CircleOn { n })
    }

    pub fn points(&self) -> usize {
        2 * self.n
    }

    pub fn index_of(&self, v: i32) -> Result<usize> {
        let a = v.unsigned_abs() as usize;
        if a == 0 || a > self.n {
            return Err(Error::OutOfRange {
                value: i64::from(v),
                n: self.n,
            });
        }
        Ok(if v > 0 { a - 1 } else { self.n + a - 1 })
    }

    pub fn point_at(&self, index: usize) -> i32 {
        let index = index % self.points();
        if index < self.n {
            index as i32 + 1
        } else {
            -((index - self.n) as i32 + 1)
        }
    }

    /// Distance between two points along the circle.
    pub fn distance(&self, a: i32, b: i32) -> Result<usize> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        let d = i.abs_diff(j);
        Ok(d.min(self.points() - d))
    }

    pub fn is_interval(&self, set: &[i32]) -> Result<bool> {
        let mut idx = set
            .iter()
            .map(|&v| self.index_of(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(is_cyclic_run(&mut idx, self.points()))
    }
}

/// True iff the image of `set ⊆ {±1..±n}` in `Z_2n` is a cyclic interval.
pub fn is_interval_on(set: &[i32], n: usize) -> Result<bool> {
    CircleOn::new(n)?.is_interval(set)
}

/// Why a permutation fails a family's definition. Positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The first `len` entries (absolute values, for signed words) are not an interval.
    PrefixNotInterval { len: usize },
    /// Entry `position` has the sign opposite to the one its neighbours force.
    WrongSign { position: usize },
    /// The entries from `start` to the end are not an interval of `O_n`.
    SuffixNotInterval { start: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PrefixNotInterval { len } => {
                write!(f, "prefix of length {len} is not an interval")
            }
            Violation::WrongSign { position } => write!(f, "entry {position} has the wrong sign"),
            Violation::SuffixNotInterval { start } => {
                write!(f, "suffix starting at position {start} is not an interval of O_n")
            }
        }
    }
}

pub fn arc_violation(p: &Permutation) -> Option<Violation> {
    let n = p.n();
    (1..=n)
        .find(|&len| !is_interval_zn(&p.word()[..len], n).expect("entries in range"))
        .map(|len| Violation::PrefixNotInterval { len })
}

pub fn left_unimodal_violation(p: &Permutation) -> Option<Violation> {
    (1..=p.n())
        .find(|&len| !is_interval_z(&p.word()[..len]))
        .map(|len| Violation::PrefixNotInterval { len })
}

/// Only interior positions `1 < i < n` are constrained; `π(1)` and `π(n)`
/// may carry either sign.
pub fn signed_arc_violation(p: &SignedPermutation) -> Option<Violation> {
    let n = p.n();
    let abs = p.absolute();
    let abs = abs.word();
    let below = |a: u32| if a == 1 { n as u32 } else { a - 1 };
    let above = |a: u32| if a as usize == n { 1 } else { a + 1 };
    for i in 2..n {
        if !is_interval_zn(&abs[..i], n).expect("entries in range") {
            return Some(Violation::PrefixNotInterval { len: i });
        }
        let a = abs[i - 1];
        let seen = &abs[..i - 1];
        let forced_ok = if p.at(i) > 0 {
            seen.contains(&below(a))
        } else {
            seen.contains(&above(a))
        };
        if !forced_ok {
            return Some(Violation::WrongSign { position: i });
        }
    }
    None
}

pub fn b_arc_violation(p: &SignedPermutation) -> Option<Violation> {
    let circle = CircleOn::new(p.n()).expect("n >= 1");
    (1..=p.n())
        .rev()
        .find(|&j| !circle.is_interval(&p.word()[j - 1..]).expect("entries in range"))
        .map(|start| Violation::SuffixNotInterval { start })
}

pub fn is_arc(p: &Permutation) -> bool {
    arc_violation(p).is_none()
}

pub fn is_left_unimodal(p: &Permutation) -> bool {
    left_unimodal_violation(p).is_none()
}

pub fn is_signed_arc(p: &SignedPermutation) -> bool {
    signed_arc_violation(p).is_none()
}

pub fn is_b_arc(p: &SignedPermutation) -> bool {
    b_arc_violation(p).is_none()
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptySize)
    } else {
        Ok(())
    }
}

/// Grows words one entry at a time while the entries seen so far occupy a
/// run `start, start+1, …, start+len-1` of a circle (or line) of `points`
/// positions; each step extends the run downward or upward.
struct RunGrower {
    points: usize,
    target: usize,
    cyclic: bool,
}

impl RunGrower {
    fn grow(&self, out: &mut Vec<Vec<usize>>) {
        for start in 0..self.points {
            let mut word = Vec::with_capacity(self.target);
            word.push(start);
            self.extend(&mut word, start, 1, out);
        }
    }

    fn extend(&self, word: &mut Vec<usize>, start: usize, len: usize, out: &mut Vec<Vec<usize>>) {
        if len == self.target {
            out.push(word.clone());
            return;
        }
        let (lower, upper) = if self.cyclic {
            let lower = (start + self.points - 1) % self.points;
            let upper = (start + len) % self.points;
            (Some(lower), Some(upper).filter(|&u| u != lower))
        } else {
            (start.checked_sub(1), Some(start + len).filter(|&u| u < self.points))
        };
        let options = [lower.map(|l| (l, l)), upper.map(|u| (u, start))];
        for (next, new_start) in options.into_iter().flatten() {
            word.push(next);
            self.extend(word, new_start, len + 1, out);
            word.pop();
        }
    }
}

/// All of `A_n`, `n·2^(n-2)` permutations for `n ≥ 2`. The first entry is
/// chosen freely, then each entry extends the current `Z_n`-interval of
/// values downward or upward (downward first).
pub fn generate_arc(n: usize) -> Result<Vec<Permutation>> {
    require_positive(n)?;
    let mut raw = Vec::new();
    RunGrower {
        points: n,
        target: n,
        cyclic: true,
    }
    .grow(&mut raw);
    Ok(raw
        .into_iter()
        .map(|w| Permutation::from_word_unchecked(w.into_iter().map(|i| i as u32 + 1).collect()))
        .collect())
}

/// All of `L_n`, `2^(n-1)` permutations.
pub fn generate_left_unimodal(n: usize) -> Result<Vec<Permutation>> {
    require_positive(n)?;
    let mut raw = Vec::new();
    RunGrower {
        points: n,
        target: n,
        cyclic: false,
    }
    .grow(&mut raw);
    Ok(raw
        .into_iter()
        .map(|w| Permutation::from_word_unchecked(w.into_iter().map(|i| i as u32 + 1).collect()))
        .collect())
}

/// All of `A^s_n`, `n·2^n` signed permutations: each `σ ∈ A_n` with its
/// forced interior signs, times the four sign choices for the first and
/// last entries.
pub fn generate_signed_arc(n: usize) -> Result<Vec<SignedPermutation>> {
    require_positive(n)?;
    if n == 1 {
        return Ok(alloc::vec![
            SignedPermutation::from_word_unchecked(alloc::vec![1]),
            SignedPermutation::from_word_unchecked(alloc::vec![-1]),
        ]);
    }
    let mut out = Vec::with_capacity(n << n);
    for sigma in generate_arc(n)? {
        let w = sigma.word();
        let mut base: Vec<i32> = w.iter().map(|&v| v as i32).collect();
        for i in 1..n - 1 {
            let below = if w[i] == 1 { n as u32 } else { w[i] - 1 };
            if !w[..i].contains(&below) {
                base[i] = -base[i];
            }
        }
        for (first, last) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let mut word = base.clone();
            word[0] *= first;
            word[n - 1] *= last;
            out.push(SignedPermutation::from_word_unchecked(word));
        }
    }
    Ok(out)
}

/// All of `A^B_n`, `n·2^n` signed permutations, written right to left: the
/// last entry is any point of `O_n`, and each earlier entry extends the
/// suffix's interval of `O_n` at one of its two ends.
pub fn generate_b_arc(n: usize) -> Result<Vec<SignedPermutation>> {
    let circle = CircleOn::new(n)?;
    let mut raw = Vec::new();
    RunGrower {
        points: circle.points(),
        target: n,
        cyclic: true,
    }
    .grow(&mut raw);
    Ok(raw
        .into_iter()
        .map(|w| {
            SignedPermutation::from_word_unchecked(
                w.into_iter().rev().map(|i| circle.point_at(i)).collect(),
            )
        })
        .collect())
}

/// All `n!` permutations in lexicographic order.
pub fn generate_symmetric(n: usize) -> Result<Vec<Permutation>> {
    generate_symmetric_with_limit(n, DEFAULT_SYMMETRIC_LIMIT)
}

pub fn generate_symmetric_with_limit(n: usize, limit: usize) -> Result<Vec<Permutation>> {
    require_positive(n)?;
    if n > limit {
        return Err(Error::SizeGuard { n, limit });
    }
    Ok((1..=n as u32)
        .permutations(n)
        .map(Permutation::from_word_unchecked)
        .collect())
}

/// All `2^n·n!` signed permutations: absolute words in lexicographic order,
/// each followed by its sign patterns in binary order (all positive first).
pub fn generate_hyperoctahedral(n: usize) -> Result<Vec<SignedPermutation>> {
    generate_hyperoctahedral_with_limit(n, DEFAULT_HYPEROCTAHEDRAL_LIMIT)
}

pub fn generate_hyperoctahedral_with_limit(n: usize, limit: usize) -> Result<Vec<SignedPermutation>> {
    require_positive(n)?;
    if n > limit {
        return Err(Error::SizeGuard { n, limit });
    }
    let mut out = Vec::new();
    for sigma in generate_symmetric_with_limit(n, limit)? {
        for mask in 0u32..1 << n {
            let word = sigma
                .word()
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    if mask >> (n - 1 - i) & 1 == 1 {
                        -(v as i32)
                    } else {
                        v as i32
                    }
                })
                .collect();
            out.push(SignedPermutation::from_word_unchecked(word));
        }
    }
    Ok(out)
}

/// The permutation families the crate can generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Arc,
    LeftUnimodal,
    SignedArc,
    BArc,
    Symmetric,
    Hyperoctahedral,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Arc,
        Family::LeftUnimodal,
        Family::SignedArc,
        Family::BArc,
        Family::Symmetric,
        Family::Hyperoctahedral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Arc => "arc",
            Family::LeftUnimodal => "left-unimodal",
            Family::SignedArc => "signed-arc",
            Family::BArc => "b-arc",
            Family::Symmetric => "sym",
            Family::Hyperoctahedral => "hyp",
        }
    }

    /// Whether members live in `B_n` rather than `S_n`.
    pub fn is_signed(self) -> bool {
        matches!(self, Family::SignedArc | Family::BArc | Family::Hyperoctahedral)
    }

    pub fn default_limit(self) -> usize {
        match self {
            Family::Symmetric => DEFAULT_SYMMETRIC_LIMIT,
            Family::Hyperoctahedral => DEFAULT_HYPEROCTAHEDRAL_LIMIT,
            _ => DEFAULT_ARC_LIMIT,
        }
    }

    /// Members as signed permutations (type-A members are all positive).
    pub fn generate(self, n: usize) -> Result<Vec<SignedPermutation>> {
        self.generate_with_limit(n, self.default_limit())
    }

    pub fn generate_with_limit(self, n: usize, limit: usize) -> Result<Vec<SignedPermutation>> {
        require_positive(n)?;
        if n > limit {
            return Err(Error::SizeGuard { n, limit });
        }
        let unsigned = |v: Vec<Permutation>| v.into_iter().map(SignedPermutation::from).collect();
        Ok(match self {
            Family::Arc => unsigned(generate_arc(n)?),
            Family::LeftUnimodal => unsigned(generate_left_unimodal(n)?),
            Family::SignedArc => generate_signed_arc(n)?,
            Family::BArc => generate_b_arc(n)?,
            Family::Symmetric => unsigned(generate_symmetric_with_limit(n, limit)?),
            Family::Hyperoctahedral => generate_hyperoctahedral_with_limit(n, limit)?,
        })
    }

    /// Definition-level membership; `None` means member.
    pub fn violation(self, p: &SignedPermutation) -> Option<MembershipFailure> {
        let positive = p.word().iter().all(|&v| v > 0);
        let unsigned = |f: fn(&Permutation) -> Option<Violation>| {
            if positive {
                f(&p.absolute()).map(MembershipFailure::Definition)
            } else {
                Some(MembershipFailure::HasNegativeEntries)
            }
        };
        match self {
            Family::Arc => unsigned(arc_violation),
            Family::LeftUnimodal => unsigned(left_unimodal_violation),
            Family::Symmetric => unsigned(|_| None),
            Family::SignedArc => signed_arc_violation(p).map(MembershipFailure::Definition),
            Family::BArc => b_arc_violation(p).map(MembershipFailure::Definition),
            Family::Hyperoctahedral => None,
        }
    }

    pub fn contains(self, p: &SignedPermutation) -> bool {
        self.violation(p).is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipFailure {
    /// A type-A family was given a word with negative entries.
    HasNegativeEntries,
    Definition(Violation),
}

impl fmt::Display for MembershipFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipFailure::HasNegativeEntries => f.write_str("word has negative entries"),
            MembershipFailure::Definition(v) => v.fmt(f),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| Error::Parse { token: s.into() })
    }
}
