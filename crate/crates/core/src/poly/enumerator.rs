use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Monomial, Poly, Variable};
use crate::perm::{Character, Permutation, SignedPermutation, StatProfile};

/// Which statistics a set enumerator records.
///
/// `inv`, `des` and `fdes` go on `t`; `maj` and `fmaj` on `q`; the descent
/// set on `x_i` (or `x_{i-1}` with `shift_descents`); the negative set on
/// `y_i`. `inv` is always computed on the absolute word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StatWeightSpec {
    pub inv: bool,
    pub des: bool,
    pub fdes: bool,
    pub maj: bool,
    pub fmaj: bool,
    pub descent_set: bool,
    pub shift_descents: bool,
    pub neg_set: bool,
    pub character: Character,
}

impl Default for StatWeightSpec {
    fn default() -> Self {
        StatWeightSpec {
            inv: false,
            des: false,
            fdes: false,
            maj: false,
            fmaj: false,
            descent_set: false,
            shift_descents: false,
            neg_set: false,
            character: Character::Trivial,
        }
    }
}

impl StatWeightSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn inv(mut self) -> Self {
        self.inv = true;
        self
    }

    pub fn des(mut self) -> Self {
        self.des = true;
        self
    }

    pub fn fdes(mut self) -> Self {
        self.fdes = true;
        self
    }

    pub fn maj(mut self) -> Self {
        self.maj = true;
        self
    }

    pub fn fmaj(mut self) -> Self {
        self.fmaj = true;
        self
    }

    pub fn descent_set(mut self) -> Self {
        self.descent_set = true;
        self
    }

    pub fn shifted_descent_set(mut self) -> Self {
        self.descent_set = true;
        self.shift_descents = true;
        self
    }

    pub fn neg_set(mut self) -> Self {
        self.neg_set = true;
        self
    }

    pub fn character(mut self, chi: Character) -> Self {
        self.character = chi;
        self
    }

    fn weight(&self, s: &StatProfile) -> (Monomial, i8) {
        let mut t = 0u32;
        let mut q = 0u32;
        let mut pairs: Vec<(Variable, u32)> = Vec::new();
        if self.inv {
            t += s.inv as u32;
        }
        if self.des {
            t += s.des as u32;
        }
        if self.fdes {
            t += s.fdes as u32;
        }
        if self.maj {
            q += s.maj as u32;
        }
        if self.fmaj {
            q += s.fmaj as u32;
        }
        pairs.push((Variable::T, t));
        pairs.push((Variable::Q, q));
        if self.descent_set {
            let shift = u32::from(self.shift_descents);
            pairs.extend(s.des_set.iter().map(|&i| (Variable::X(i as u32 - shift), 1)));
        }
        if self.neg_set {
            pairs.extend(s.neg_set.iter().map(|&i| (Variable::Yi(i as u32), 1)));
        }
        (Monomial::from_pairs(pairs), self.character.of_profile(s))
    }
}

/// `Σ_{π ∈ set} χ(π) · weight(π)`.
pub fn enumerator<'a>(set: impl IntoIterator<Item = &'a SignedPermutation>, spec: &StatWeightSpec) -> Poly {
    let mut counts: BTreeMap<Monomial, i64> = BTreeMap::new();
    for p in set {
        let (m, sign) = spec.weight(&p.stats());
        *counts.entry(m).or_default() += i64::from(sign);
    }
    Poly::from_terms(counts.into_iter().map(|(m, c)| (m, BigInt::from(c))))
}

pub fn enumerator_unsigned<'a>(set: impl IntoIterator<Item = &'a Permutation>, spec: &StatWeightSpec) -> Poly {
    let signed: Vec<SignedPermutation> = set.into_iter().cloned().map(SignedPermutation::from).collect();
    enumerator(&signed, spec)
}
