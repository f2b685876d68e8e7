//! Oracles written independently of the library: direct definitions and
//! brute-force enumeration.
#![allow(dead_code)]

use arcperm_core::{Permutation, SignedPermutation};
use itertools::Itertools;

pub fn all_words(n: usize) -> Vec<Vec<u32>> {
    (1..=n as u32).permutations(n).collect()
}

pub fn symmetric(n: usize) -> Vec<Permutation> {
    all_words(n).into_iter().map(|w| Permutation::new(w).unwrap()).collect()
}

pub fn hyperoctahedral(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for w in all_words(n) {
        for mask in 0u32..(1 << n) {
            let signed = w
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -(v as i32) } else { v as i32 })
                .collect();
            out.push(SignedPermutation::new(signed).unwrap());
        }
    }
    out
}

/// `set` is `{s, s+1, …, s+len-1}` (mod `modulus`, points `0..modulus`) for some `s`.
pub fn is_circular_interval(points: &[usize], modulus: usize) -> bool {
    let len = points.len();
    if len == 0 || len >= modulus {
        return true;
    }
    (0..modulus).any(|s| {
        let mut want: Vec<usize> = (0..len).map(|k| (s + k) % modulus).collect();
        let mut have = points.to_vec();
        want.sort();
        have.sort();
        want == have
    })
}

pub fn arc_oracle(w: &[u32]) -> bool {
    let n = w.len();
    (1..=n).all(|len| {
        let pts: Vec<usize> = w[..len].iter().map(|&v| v as usize - 1).collect();
        is_circular_interval(&pts, n)
    })
}

pub fn left_unimodal_oracle(w: &[u32]) -> bool {
    (1..=w.len()).all(|len| {
        let lo = *w[..len].iter().min().unwrap();
        let hi = *w[..len].iter().max().unwrap();
        (hi - lo) as usize + 1 == len
    })
}

/// Interior positions: the absolute prefix is an interval of `Z_n`; a positive
/// entry `a` needs `a-1` earlier, a negative entry `-a` needs `a+1` earlier.
pub fn signed_arc_oracle(w: &[i32]) -> bool {
    let n = w.len() as i32;
    let abs: Vec<u32> = w.iter().map(|v| v.unsigned_abs()).collect();
    if !arc_oracle(&abs) {
        return false;
    }
    (2..n).all(|i| {
        let i = i as usize;
        let a = abs[i - 1] as i32;
        let need = if w[i - 1] > 0 { a - 1 } else { a + 1 };
        let need = (need - 1).rem_euclid(n) + 1;
        abs[..i - 1].contains(&(need as u32))
    })
}

/// Circle `1, 2, …, n, -1, -2, …, -n`.
pub fn b_index(v: i32, n: usize) -> usize {
    if v > 0 {
        v as usize - 1
    } else {
        n + v.unsigned_abs() as usize - 1
    }
}

pub fn b_arc_oracle(w: &[i32]) -> bool {
    let n = w.len();
    (0..n).all(|start| {
        let pts: Vec<usize> = w[start..].iter().map(|&v| b_index(v, n)).collect();
        is_circular_interval(&pts, 2 * n)
    })
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<i64>>) -> i64 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// `M e_i = sgn(π(i)) e_{|π(i)|}`.
pub fn signed_matrix(p: &SignedPermutation) -> Vec<Vec<i64>> {
    let n = p.n();
    let mut m = vec![vec![0; n]; n];
    for (i, &v) in p.word().iter().enumerate() {
        m[v.unsigned_abs() as usize - 1][i] = v.signum() as i64;
    }
    m
}

/// Descent positions under `-1 < -2 < … < -n < 1 < … < n`, by explicit rank table.
pub fn b_descents(w: &[i32]) -> Vec<usize> {
    let n = w.len() as i32;
    let order: Vec<i32> = (1..=n).map(|v| -v).chain(1..=n).collect();
    let rank = |v: i32| order.iter().position(|&x| x == v).unwrap();
    (1..w.len()).filter(|&i| rank(w[i - 1]) > rank(w[i])).collect()
}
