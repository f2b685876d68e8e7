//! Elements of `S_n` and `B_n` in one-line (window) notation, and the
//! descent-type statistics defined on them.
//!
//! Positions are 1-based in every public function, matching the usual
//! convention `π = π(1)π(2)…π(n)`. Storage is a plain 0-based `Vec`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// `+1` or `-1`.
pub type Sign = i8;

/// A permutation of `{1..n}` in one-line notation: `word[i-1] = π(i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

/// A signed permutation in window notation: `word[i-1] = π(i)` with
/// `π(-a) = -π(a)` implied.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    word: Vec<i32>,
}

/// Every statistic of one signed permutation.
///
/// For an unsigned permutation all sign-related fields are trivial
/// (`neg = 0`, `fmaj = 2·maj`, `fdes = 2·des`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatProfile {
    pub des_set: Vec<usize>,
    pub des: usize,
    pub maj: usize,
    /// Inversions of the absolute word `|π|`.
    pub inv: usize,
    pub neg_set: Vec<usize>,
    pub neg: usize,
    pub fmaj: usize,
    pub fdes: usize,
    pub sign: Sign,
    pub sign_abs: Sign,
    pub neg_parity: Sign,
}

/// The four one-dimensional characters of `B_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Character {
    Trivial,
    /// `(-1)^(inv(|π|) + neg(π))`, the determinant of the signed permutation matrix.
    Sign,
    /// `(-1)^neg(π)`.
    NegParity,
    /// `sign(|π|) = (-1)^inv(|π|)`.
    SignAbs,
}

impl Character {
    pub const ALL: [Character; 4] = [
        Character::Trivial,
        Character::Sign,
        Character::NegParity,
        Character::SignAbs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Character::Trivial => "trivial",
            Character::Sign => "sign",
            Character::NegParity => "neg_parity",
            Character::SignAbs => "sign_abs",
        }
    }

    pub fn value(self, p: &SignedPermutation) -> Sign {
        match self {
            Character::Trivial => 1,
            Character::Sign => parity_sign(p.absolute().inv() + p.neg()),
            Character::NegParity => parity_sign(p.neg()),
            Character::SignAbs => p.absolute().sign(),
        }
    }

    pub fn of_profile(self, s: &StatProfile) -> Sign {
        match self {
            Character::Trivial => 1,
            Character::Sign => s.sign,
            Character::NegParity => s.neg_parity,
            Character::SignAbs => s.sign_abs,
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Character {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Character::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse { token: s.to_string() })
    }
}

fn parity_sign(k: usize) -> Sign {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sort key realizing the order `-1 < -2 < … < -n < 1 < 2 < … < n`.
/// Every type-B descent computation goes through this.
pub fn b_order_key(v: i32) -> (u8, u32) {
    if v < 0 {
        (0, v.unsigned_abs())
    } else {
        (1, v as u32)
    }
}

fn check_bijection(n: usize, abs: impl Iterator<Item = u64>) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    let mut seen = alloc::vec![false; n];
    for a in abs {
        if a == 0 || a as usize > n {
            return Err(Error::InvalidWord {
                n,
                reason: alloc::format!("entry {a} out of range"),
            });
        }
        if core::mem::replace(&mut seen[a as usize - 1], true) {
            return Err(Error::InvalidWord {
                n,
                reason: alloc::format!("entry {a} repeated"),
            });
        }
    }
    Ok(())
}

fn descents_by<T, K: Ord>(word: &[T], key: impl Fn(&T) -> K) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| key(&w[0]) > key(&w[1]))
        .map(|(i, _)| i + 1)
        .collect()
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        check_bijection(word.len(), word.iter().map(|&v| u64::from(v)))?;
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(check_bijection(word.len(), word.iter().map(|&v| u64::from(v))).is_ok());
        Permutation { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// `π(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn descent_set(&self) -> Vec<usize> {
        descents_by(&self.word, |&v| v)
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn inv(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| w[i] > b).count())
            .sum()
    }

    pub fn sign(&self) -> Sign {
        parity_sign(self.inv())
    }

    pub fn stats(&self) -> StatProfile {
        SignedPermutation::from(self.clone()).stats()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            word: other.word.iter().map(|&j| self.at(j as usize)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = alloc::vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    pub fn pow(&self, k: u32) -> Permutation {
        let mut acc = Permutation::identity(self.n());
        for _ in 0..k {
            acc = self.compose(&acc).expect("same size");
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }
}

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Result<Self> {
        check_bijection(word.len(), word.iter().map(|&v| u64::from(v.unsigned_abs())))?;
        Ok(SignedPermutation { word })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            word: (1..=n as i32).collect(),
        }
    }

    pub(crate) fn from_word_unchecked(word: Vec<i32>) -> Self {
        debug_assert!(
            check_bijection(word.len(), word.iter().map(|&v| u64::from(v.unsigned_abs()))).is_ok()
        );
        SignedPermutation { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<i32> {
        self.word
    }

    /// `π(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> i32 {
        self.word[i - 1]
    }

    /// `π(a)` for any `a ∈ {±1..±n}`, using `π(-a) = -π(a)`.
    pub fn apply(&self, a: i32) -> i32 {
        let v = self.word[a.unsigned_abs() as usize - 1];
        if a < 0 {
            -v
        } else {
            v
        }
    }

    pub fn absolute(&self) -> Permutation {
        Permutation {
            word: self.word.iter().map(|v| v.unsigned_abs()).collect(),
        }
    }

    /// Descents with respect to `-1 < -2 < … < -n < 1 < … < n`.
    pub fn descent_set(&self) -> Vec<usize> {
        descents_by(&self.word, |&v| b_order_key(v))
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn neg_set(&self) -> Vec<usize> {
        self.word
            .iter()
            .enumerate()
            .filter(|(_, &v)| v < 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn neg(&self) -> usize {
        self.word.iter().filter(|&&v| v < 0).count()
    }

    pub fn fmaj(&self) -> usize {
        2 * self.maj() + self.neg()
    }

    pub fn fdes(&self) -> usize {
        2 * self.des() + usize::from(self.word[0] < 0)
    }

    pub fn sign(&self) -> Sign {
        Character::Sign.value(self)
    }

    pub fn stats(&self) -> StatProfile {
        let des_set = self.descent_set();
        let neg_set = self.neg_set();
        let des = des_set.len();
        let maj: usize = des_set.iter().sum();
        let neg = neg_set.len();
        let inv = self.absolute().inv();
        StatProfile {
            des,
            maj,
            inv,
            neg,
            fmaj: 2 * maj + neg,
            fdes: 2 * des + usize::from(self.word[0] < 0),
            sign: parity_sign(inv + neg),
            sign_abs: parity_sign(inv),
            neg_parity: parity_sign(neg),
            des_set,
            neg_set,
        }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(SignedPermutation {
            word: other.word.iter().map(|&a| self.apply(a)).collect(),
        })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut word = alloc::vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            let a = i as i32 + 1;
            word[v.unsigned_abs() as usize - 1] = if v < 0 { -a } else { a };
        }
        SignedPermutation { word }
    }

    pub fn pow(&self, k: u32) -> SignedPermutation {
        let mut acc = SignedPermutation::identity(self.n());
        for _ in 0..k {
            acc = self.compose(&acc).expect("same size");
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }
}

impl From<Permutation> for SignedPermutation {
    fn from(p: Permutation) -> Self {
        SignedPermutation {
            word: p.word.into_iter().map(|v| v as i32).collect(),
        }
    }
}

fn write_bracketed<T: fmt::Display>(f: &mut fmt::Formatter<'_>, word: &[T]) -> fmt::Result {
    f.write_str("[")?;
    for (i, v) in word.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("]")
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.word)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.word)
    }
}

/// Accepts `[a,b,…]` (signed decimal entries, whitespace ignored, `−`
/// accepted as a minus sign) or a compact digit string such as `12543`.
fn parse_entries(s: &str) -> Result<Vec<i64>> {
    let s: String = s.trim().replace('\u{2212}', "-");
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| Error::Parse {
            token: s.to_string(),
        })?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        inner
            .split(',')
            .map(|tok| {
                tok.trim().parse::<i64>().map_err(|_| Error::Parse {
                    token: tok.trim().to_string(),
                })
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10).map(i64::from).ok_or_else(|| Error::Parse {
                    token: c.to_string(),
                })
            })
            .collect()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_entries(s)?;
        let word = entries
            .into_iter()
            .map(|v| {
                u32::try_from(v).map_err(|_| Error::Parse {
                    token: v.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_entries(s)?;
        let word = entries
            .into_iter()
            .map(|v| {
                i32::try_from(v).map_err(|_| Error::Parse {
                    token: v.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(word)
    }
}
