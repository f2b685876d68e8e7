//! Canonical expressions in terms of the cyclic elements `c_m`.
//!
//! Type A: `c_m = (m+1, m, …, 1)` in `S_n`, and every `π ∈ S_n` is uniquely
//! `c_{n-1}^{k_{n-1}} ⋯ c_1^{k_1}` with `0 ≤ k_i ≤ i`.
//!
//! Type B: `c_m = [-(m+1), 1, 2, …, m, m+2, …, n]` in `B_n` (order `2m+2`),
//! and every `π ∈ B_n` is uniquely `c_{n-1}^{k_{n-1}} ⋯ c_1^{k_1} c_0^{k_0}`
//! with `0 ≤ k_i ≤ 2i+1`.
//!
//! Products are read right to left with `(p∘q)(i) = p(q(i))`, so left
//! multiplication by `c_m` acts on values.
//!
//! Decomposition peels the outermost factor: `c_{n-1}^k(n)` runs through the
//! whole orbit of `n` as `k` varies, so `π(n)` determines `k_{n-1}`, and
//! `c_{n-1}^{-k_{n-1}} π` fixes `n`.

use alloc::vec::Vec;
use core::fmt;

use crate::perm::{Permutation, SignedPermutation};
use crate::{Error, Result};

/// `(k_1, …, k_{n-1})` with `0 ≤ k_i ≤ i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVectorA {
    n: usize,
    k: Vec<u32>,
}

/// `(k_0, …, k_{n-1})` with `0 ≤ k_i ≤ 2i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVectorB {
    k: Vec<u32>,
}

impl ExponentVectorA {
    /// `k[i-1]` is `k_i`.
    pub fn new(n: usize, k: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        if k.len() != n - 1 {
            return Err(Error::SizeMismatch {
                left: n - 1,
                right: k.len(),
            });
        }
        for (i, &v) in k.iter().enumerate() {
            let bound = i as u32 + 1;
            if v > bound {
                return Err(Error::ExponentBound {
                    index: i + 1,
                    value: v,
                    bound,
                });
            }
        }
        Ok(ExponentVectorA { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(k_1, …, k_{n-1})`.
    pub fn exponents(&self) -> &[u32] {
        &self.k
    }

    /// `k_i` for `1 ≤ i ≤ n-1`.
    pub fn get(&self, i: usize) -> u32 {
        self.k[i - 1]
    }

    pub fn total(&self) -> u32 {
        self.k.iter().sum()
    }

    pub fn recompose(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for i in 1..self.n {
            // p ← c_i^{k_i} ∘ p, innermost factor first
            p = cycle_a(i, self.n)
                .expect("in range")
                .pow(self.get(i))
                .compose(&p)
                .expect("same size");
        }
        p
    }
}

impl ExponentVectorB {
    /// `k[i]` is `k_i`.
    pub fn new(k: Vec<u32>) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::EmptySize);
        }
        for (i, &v) in k.iter().enumerate() {
            let bound = 2 * i as u32 + 1;
            if v > bound {
                return Err(Error::ExponentBound { index: i, value: v, bound });
            }
        }
        Ok(ExponentVectorB { k })
    }

    pub fn n(&self) -> usize {
        self.k.len()
    }

    /// `(k_0, …, k_{n-1})`.
    pub fn exponents(&self) -> &[u32] {
        &self.k
    }

    pub fn get(&self, i: usize) -> u32 {
        self.k[i]
    }

    pub fn total(&self) -> u32 {
        self.k.iter().sum()
    }

    pub fn recompose(&self) -> SignedPermutation {
        let n = self.n();
        let mut p = SignedPermutation::identity(n);
        for i in 0..n {
            p = cycle_b(i, n)
                .expect("in range")
                .pow(self.k[i])
                .compose(&p)
                .expect("same size");
        }
        p
    }
}

fn write_exponents(f: &mut fmt::Formatter<'_>, tag: &str, k: &[u32]) -> fmt::Result {
    write!(f, "{tag} k=[")?;
    for (i, v) in k.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("]")
}

impl fmt::Display for ExponentVectorA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_exponents(f, "A", &self.k)
    }
}

impl fmt::Display for ExponentVectorB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_exponents(f, "B", &self.k)
    }
}

/// `c_m ∈ S_n` for `1 ≤ m < n`: `v ↦ v-1` for `2 ≤ v ≤ m+1`, `1 ↦ m+1`.
pub fn cycle_a(m: usize, n: usize) -> Result<Permutation> {
    if m == 0 || m >= n {
        return Err(Error::OutOfRange {
            value: m as i64,
            n: n.saturating_sub(1),
        });
    }
    let word = (1..=n as u32)
        .map(|v| match v as usize {
            1 => m as u32 + 1,
            x if x <= m + 1 => v - 1,
            _ => v,
        })
        .collect();
    Ok(Permutation::from_word_unchecked(word))
}

/// `c_m ∈ B_n` for `0 ≤ m < n`: the window `[-(m+1), 1, 2, …, m, m+2, …, n]`.
pub fn cycle_b(m: usize, n: usize) -> Result<SignedPermutation> {
    if m >= n {
        return Err(Error::OutOfRange {
            value: m as i64,
            n: n.saturating_sub(1),
        });
    }
    let word = (1..=n as i32)
        .map(|v| match v as usize {
            1 => -(m as i32 + 1),
            x if x <= m + 1 => v - 1,
            _ => v,
        })
        .collect();
    Ok(SignedPermutation::from_word_unchecked(word))
}

pub fn decompose_a(p: &Permutation) -> ExponentVectorA {
    let n = p.n();
    let mut word: Vec<u32> = p.word().to_vec();
    let mut k = alloc::vec![0u32; n - 1];
    for size in (2..=n).rev() {
        let s = size as u32;
        // c_{size-1}^e(size) = size - e
        let e = s - word[size - 1];
        k[size - 2] = e;
        // apply c_{size-1}^{-e}: v ↦ v + e on the cycle 1..size
        for v in word.iter_mut() {
            *v = (*v - 1 + e) % s + 1;
        }
        debug_assert_eq!(word[size - 1], s);
        word.pop();
    }
    ExponentVectorA { n, k }
}

/// Position of `v` along the orbit `s, s-1, …, 1, -s, …, -1` of `c_{s-1}`.
fn orbit_index(v: i32, s: u32) -> u32 {
    if v > 0 {
        s - v as u32
    } else {
        2 * s - v.unsigned_abs()
    }
}

fn orbit_point(idx: u32, s: u32) -> i32 {
    if idx < s {
        (s - idx) as i32
    } else {
        -((2 * s - idx) as i32)
    }
}

pub fn decompose_b(p: &SignedPermutation) -> ExponentVectorB {
    let n = p.n();
    let mut word: Vec<i32> = p.word().to_vec();
    let mut k = alloc::vec![0u32; n];
    for size in (1..=n).rev() {
        let s = size as u32;
        let e = orbit_index(word[size - 1], s);
        k[size - 1] = e;
        for v in word.iter_mut() {
            *v = orbit_point((orbit_index(*v, s) + 2 * s - e) % (2 * s), s);
        }
        debug_assert_eq!(word[size - 1], size as i32);
        word.pop();
    }
    ExponentVectorB { k }
}

/// `Σ k_i`, which equals `maj(π)`.
pub fn maj_from_exponents(e: &ExponentVectorA) -> u32 {
    e.total()
}

/// `Σ k_i`, which equals `fmaj(π)`.
pub fn fmaj_from_exponents(e: &ExponentVectorB) -> u32 {
    e.total()
}

/// `0 ≤ k_{n-1} ≤ n-1` and `k_i ∈ {0, i}` for `1 ≤ i ≤ n-2`.
pub fn is_arc_by_exponents(e: &ExponentVectorA) -> bool {
    let n = e.n();
    (1..n.saturating_sub(1)).all(|i| {
        let v = e.get(i);
        v == 0 || v == i as u32
    })
}

/// `0 ≤ k_{n-1} ≤ 2n-1` and `k_i ∈ {0, 2i+1}` for `0 ≤ i ≤ n-2`.
pub fn is_b_arc_by_exponents(e: &ExponentVectorB) -> bool {
    let n = e.n();
    (0..n - 1).all(|i| {
        let v = e.get(i);
        v == 0 || v == 2 * i as u32 + 1
    })
}

/// Every type-A exponent vector satisfying [`is_arc_by_exponents`].
pub fn arc_exponent_vectors(n: usize) -> Result<Vec<ExponentVectorA>> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    let mut out = alloc::vec![Vec::new()];
    for i in 1..n {
        let choices: Vec<u32> = if i == n - 1 {
            (0..=i as u32).collect()
        } else {
            alloc::vec![0, i as u32]
        };
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                choices.iter().map(move |&c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|k| ExponentVectorA::new(n, k)).collect()
}

/// Every type-B exponent vector satisfying [`is_b_arc_by_exponents`].
pub fn b_arc_exponent_vectors(n: usize) -> Result<Vec<ExponentVectorB>> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    let mut out = alloc::vec![Vec::new()];
    for i in 0..n {
        let choices: Vec<u32> = if i == n - 1 {
            (0..=2 * i as u32 + 1).collect()
        } else {
            alloc::vec![0, 2 * i as u32 + 1]
        };
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                choices.iter().map(move |&c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(ExponentVectorB::new).collect()
}
