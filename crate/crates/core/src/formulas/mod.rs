//! Closed-form enumerators for the arc families, each paired with the
//! brute-force enumerator it should equal.
//!
//! Rational expressions are built in cleared form: numerator and
//! denominator are accumulated separately ([`Cleared`]) and divided once
//! with [`exact_div`], so a nonzero remainder surfaces as an error instead
//! of being silently dropped.

mod verify;

pub use verify::{verify, verify_custom, Status, VerificationReport, VerificationRow};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arcs::{generate_arc, generate_b_arc, generate_left_unimodal, generate_signed_arc};
use crate::perm::Character;
use crate::poly::{enumerator, enumerator_unsigned, exact_div, q_bracket, Poly, StatWeightSpec, Variable};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// `Σ_{A_n} t^inv x^Des`.
    AInvDes,
    /// `Σ_{A_n} x^Des`.
    ADesSet,
    /// `Σ_{A_n} t^des q^maj`.
    ADesMaj,
    /// `Σ_{A_n} t^des`.
    ADes,
    /// `Σ_{A_n} q^maj`.
    AMaj,
    /// `Σ_{A_n} sign · q^maj`.
    ASignedMaj,
    /// `Σ_{A^s_n} x^Des y^Neg`.
    AsDesNeg,
    /// `Σ_{A^s_n} t^inv(|π|) x^Des y^Neg`.
    AsDesNegInv,
    /// `Σ_{A^s_n} t^fdes q^fmaj`.
    AsFdesFmaj,
    /// `Σ_{A^s_n} t^fdes`.
    AsFdes,
    /// `Σ_{A^s_n} χ · q^fmaj`.
    AsCharacterFmaj(Character),
    /// `Σ_{A^B_n} χ · q^fmaj`.
    AbCharacterFmaj(Character),
    /// `Σ_{A^B_n} t^fdes q^fmaj`.
    AbFdesFmaj,
    /// `Σ_{A^B_n} t^fdes`.
    AbFdes,
    /// `Σ_{A^B_n} x^Des`.
    AbDesSet,
    /// `Σ_{L_n} x^Des`.
    LDesSet,
    /// `Σ_{A_n} sign · x^Des`, in its general and even-`n` forms.
    SignDesVariants,
}

impl FormulaId {
    /// Every formula, with the character families expanded.
    pub fn all() -> Vec<FormulaId> {
        use FormulaId::*;
        let mut v = alloc::vec![
            AInvDes, ADesSet, ADesMaj, ADes, AMaj, ASignedMaj, AsDesNeg, AsDesNegInv, AsFdesFmaj, AsFdes,
        ];
        v.extend(Character::ALL.map(AsCharacterFmaj));
        v.extend(Character::ALL.map(AbCharacterFmaj));
        v.extend([AbFdesFmaj, AbFdes, AbDesSet, LDesSet, SignDesVariants]);
        v
    }

    pub fn base_name(self) -> &'static str {
        use FormulaId::*;
        match self {
            AInvDes => "f_A_inv_des",
            ADesSet => "f_A_des_set",
            ADesMaj => "f_A_des_maj",
            ADes => "f_A_des",
            AMaj => "f_A_maj",
            ASignedMaj => "f_A_signed_maj",
            AsDesNeg => "f_As_des_neg",
            AsDesNegInv => "f_As_des_neg_inv",
            AsFdesFmaj => "f_As_fdes_fmaj",
            AsFdes => "f_As_fdes",
            AsCharacterFmaj(_) => "f_As_character_fmaj",
            AbCharacterFmaj(_) => "f_AB_character_fmaj",
            AbFdesFmaj => "f_AB_fdes_fmaj",
            AbFdes => "f_AB_fdes",
            AbDesSet => "f_AB_des_set",
            LDesSet => "f_L_des_set",
            SignDesVariants => "f_sign_des_variants",
        }
    }

    /// Formulas matching a user-facing name: an exact name, or a character
    /// family's base name (all four characters).
    pub fn resolve(name: &str) -> Result<Vec<FormulaId>> {
        if name == "all" {
            return Ok(FormulaId::all());
        }
        if let Ok(id) = name.parse::<FormulaId>() {
            return Ok(alloc::vec![id]);
        }
        let family: Vec<FormulaId> = FormulaId::all()
            .into_iter()
            .filter(|id| id.base_name() == name)
            .collect();
        if family.is_empty() {
            Err(Error::Parse { token: name.into() })
        } else {
            Ok(family)
        }
    }

    /// Smallest `n` for which the verifier produces a row.
    pub fn domain_min(self) -> usize {
        use FormulaId::*;
        match self {
            AsDesNeg | AsDesNegInv | AsCharacterFmaj(_) | AbCharacterFmaj(_) | LDesSet => 1,
            _ => 2,
        }
    }

    /// Smallest `n` from which closed form and enumerator must agree; rows
    /// below it are reported as out of the stated range.
    pub fn stated_min(self) -> usize {
        use FormulaId::*;
        match self {
            ADesMaj | ADes | AsFdes | AbFdes => 3,
            other => other.domain_min(),
        }
    }

    /// The closed form at `n`.
    pub fn closed_form(self, n: usize) -> Result<Poly> {
        use FormulaId::*;
        if n < self.domain_min() {
            return Err(Error::FormulaRange {
                formula: self.to_string(),
                n,
            });
        }
        match self {
            AInvDes => Ok(a_inv_des(n)),
            ADesSet => Ok(a_des_set(n)),
            ADesMaj => a_des_maj(n),
            ADes => a_des(n),
            AMaj => Ok(a_maj(n)),
            ASignedMaj => Ok(a_signed_maj(n)),
            AsDesNeg => Ok(as_des_neg(n)),
            AsDesNegInv => Ok(as_des_neg_inv(n)),
            AsFdesFmaj => as_fdes_fmaj(n),
            AsFdes => as_fdes(n),
            AsCharacterFmaj(chi) => Ok(as_character_fmaj(n, chi)),
            AbCharacterFmaj(chi) => Ok(ab_character_fmaj(n, chi)),
            AbFdesFmaj => ab_fdes_fmaj(n),
            AbFdes => ab_fdes(n),
            AbDesSet => Ok(ab_des_set(n)),
            LDesSet => Ok(l_des_set(n)),
            SignDesVariants => Ok(sign_des(n)),
        }
    }

    /// A second closed form that must coincide with the first, when one exists.
    pub fn alternate_form(self, n: usize) -> Option<Poly> {
        match self {
            FormulaId::SignDesVariants if n.is_multiple_of(2) && n >= 2 => Some(sign_des_even(n)),
            _ => None,
        }
    }

    /// The closed form with every reversed-range product read as 1, where
    /// that reading differs from [`Cleared::range_product`].
    pub fn literal_reading(self, n: usize) -> Option<Poly> {
        let n = n as i64;
        match self {
            FormulaId::ADesMaj if n == 2 => Some(a_des_maj_inner(n)),
            FormulaId::AsFdesFmaj if n == 2 => Some(as_fdes_fmaj_inner(n)),
            _ => None,
        }
    }

    /// The brute-force enumerator at `n`.
    pub fn brute_force(self, n: usize) -> Result<Poly> {
        use FormulaId::*;
        let spec = StatWeightSpec::new();
        let a = |spec: StatWeightSpec| -> Result<Poly> { Ok(enumerator_unsigned(&generate_arc(n)?, &spec)) };
        let signed_arc = |spec: StatWeightSpec| -> Result<Poly> { Ok(enumerator(&generate_signed_arc(n)?, &spec)) };
        let b_arc = |spec: StatWeightSpec| -> Result<Poly> { Ok(enumerator(&generate_b_arc(n)?, &spec)) };
        match self {
            AInvDes => a(spec.inv().descent_set()),
            ADesSet => a(spec.descent_set()),
            ADesMaj => a(spec.des().maj()),
            ADes => a(spec.des()),
            AMaj => a(spec.maj()),
            ASignedMaj => a(spec.maj().character(Character::Sign)),
            SignDesVariants => a(spec.descent_set().character(Character::Sign)),
            AsDesNeg => signed_arc(spec.descent_set().neg_set()),
            AsDesNegInv => signed_arc(spec.inv().descent_set().neg_set()),
            AsFdesFmaj => signed_arc(spec.fdes().fmaj()),
            AsFdes => signed_arc(spec.fdes()),
            AsCharacterFmaj(chi) => signed_arc(spec.fmaj().character(chi)),
            AbCharacterFmaj(chi) => b_arc(spec.fmaj().character(chi)),
            AbFdesFmaj => b_arc(spec.fdes().fmaj()),
            AbFdes => b_arc(spec.fdes()),
            AbDesSet => b_arc(spec.descent_set()),
            LDesSet => Ok(enumerator_unsigned(&generate_left_unimodal(n)?, &spec.descent_set())),
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaId::AsCharacterFmaj(chi) | FormulaId::AbCharacterFmaj(chi) => {
                write!(f, "{}:{}", self.base_name(), chi)
            }
            _ => f.write_str(self.base_name()),
        }
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::all()
            .into_iter()
            .find(|id| {
                let name: String = format!("{id}");
                name == s
            })
            .ok_or_else(|| Error::Parse { token: s.into() })
    }
}

/// A numerator over a denominator, divided exactly at the end.
#[derive(Clone, Debug)]
pub struct Cleared {
    num: Poly,
    den: Poly,
}

impl Cleared {
    pub fn new(p: Poly) -> Self {
        Cleared { num: p, den: Poly::one() }
    }

    pub fn over(num: Poly, den: Poly) -> Self {
        Cleared { num, den }
    }

    pub fn times(mut self, p: &Poly) -> Self {
        self.num = &self.num * p;
        self
    }

    pub fn divided_by(mut self, p: &Poly) -> Self {
        self.den = &self.den * p;
        self
    }

    pub fn times_cleared(self, other: Cleared) -> Self {
        self.times(&other.num).divided_by(&other.den)
    }

    /// `∏_{i=a}^{b} f(i)`, where a reversed range `b < a-1` denotes
    /// `1 / ∏_{i=b+1}^{a-1} f(i)` (so that `∏_a^b · ∏_{b+1}^c = ∏_a^c` always).
    pub fn range_product(a: i64, b: i64, f: impl Fn(i64) -> Poly) -> Self {
        if b >= a - 1 {
            Cleared::new((a..=b).map(&f).product())
        } else {
            Cleared::over(Poly::one(), (b + 1..a).map(&f).product())
        }
    }

    /// `base^e` for any integer `e`.
    pub fn power(base: &Poly, e: i64) -> Self {
        if e >= 0 {
            Cleared::new(base.pow(e as u32))
        } else {
            Cleared::over(Poly::one(), base.pow(e.unsigned_abs() as u32))
        }
    }

    pub fn finish(self) -> Result<Poly> {
        exact_div(&self.num, &self.den)
    }
}

fn t() -> Poly {
    Poly::var(Variable::T)
}

fn q() -> Poly {
    Poly::var(Variable::Q)
}

fn x(i: i64) -> Poly {
    Poly::var(Variable::X(i as u32))
}

fn y(i: i64) -> Poly {
    Poly::var(Variable::Yi(i as u32))
}

fn c(k: i64) -> Poly {
    Poly::constant(k)
}

fn t_pow(e: i64) -> Poly {
    t().pow(e as u32)
}

fn q_pow(e: i64) -> Poly {
    q().pow(e as u32)
}

/// `∏_{i=a}^{b} f(i)` for a forward (possibly empty) range.
fn prod(a: i64, b: i64, f: impl Fn(i64) -> Poly) -> Poly {
    debug_assert!(b >= a - 1, "reversed range {a}..{b} needs Cleared::range_product");
    (a..=b).map(f).product()
}

fn sum(a: i64, b: i64, f: impl Fn(i64) -> Poly) -> Poly {
    (a..=b).map(f).sum()
}

fn bracket(n: i64, base: &Poly) -> Poly {
    q_bracket(n as u32, base)
}

fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn x0_to_one(p: Poly) -> Poly {
    p.substitute(|v| (v == Variable::X(0)).then(Poly::one))
}

fn a_inv_des(n: usize) -> Poly {
    let n = n as i64;
    let head = prod(1, n - 1, |i| c(1) + t_pow(i) * x(i));
    let tail = sum(1, n - 2, |j| {
        (t_pow(j * (n - j)) * x(j) + t_pow(n - j - 1) * x(j + 1))
            * prod(1, j - 1, |i| c(1) + t_pow(i) * x(i))
            * prod(j + 2, n - 1, |i| c(1) + t_pow(n - i) * x(i))
    });
    head + tail
}

/// `base(1..m) + Σ_j pair(j) · ∏_{i ∉ {j, j+1}} factor(i)`: the cleared form
/// of `∏ factor(i) · (1 + Σ_j pair(j) / (factor(j) factor(j+1)))`.
fn cleared_pair_sum(
    lo: i64,
    hi: i64,
    j_range: (i64, i64),
    factor: impl Fn(i64) -> Poly,
    pair: impl Fn(i64) -> Poly,
) -> (Poly, Poly) {
    let full = prod(lo, hi, &factor);
    let pairs = sum(j_range.0, j_range.1, |j| {
        pair(j) * prod(lo, hi, |i| if i == j || i == j + 1 { c(1) } else { factor(i) })
    });
    (full, pairs)
}

fn a_des_set(n: usize) -> Poly {
    let n = n as i64;
    let (full, pairs) = cleared_pair_sum(1, n - 1, (1, n - 2), |i| c(1) + x(i), |j| x(j) + x(j + 1));
    full + pairs
}

fn a_des_maj_inner(n: i64) -> Poly {
    c(1) + c(2) * t() * q() * bracket(n - 1, &q()) + t_pow(2) * q_pow(n)
}

fn a_des_maj(n: usize) -> Result<Poly> {
    let n = n as i64;
    Cleared::range_product(2, n - 2, |i| c(1) + t() * q_pow(i))
        .times(&a_des_maj_inner(n))
        .finish()
}

fn a_des(n: usize) -> Result<Poly> {
    let n = n as i64;
    Cleared::power(&(c(1) + t()), n - 3)
        .times(&(c(1) + c(2 * (n - 1)) * t() + t_pow(2)))
        .finish()
}

fn a_maj(n: usize) -> Poly {
    let n = n as i64;
    bracket(n, &q()) * prod(1, n - 2, |i| c(1) + q_pow(i))
}

fn a_signed_maj(n: usize) -> Poly {
    let n = n as i64;
    bracket(n, &q().scale(sign_pow(n - 1))) * prod(1, n - 2, |i| c(1) + q_pow(i).scale(sign_pow(i)))
}

fn as_des_neg(n: usize) -> Poly {
    let n = n as i64;
    let (full, pairs) = cleared_pair_sum(
        1,
        n,
        (1, n - 1),
        |i| c(1) + x(i - 1) * y(i),
        |j| (x(j) + x(j - 1) * y(j)) * (c(1) + y(j + 1)),
    );
    x0_to_one(full + pairs)
}

fn as_des_neg_inv(n: usize) -> Poly {
    let n = n as i64;
    let head = prod(1, n, |i| c(1) + t_pow(i - 1) * x(i - 1) * y(i));
    let tail = sum(1, n - 1, |j| {
        (x(j) + t_pow(j - 1) * x(j - 1) * y(j))
            * (t_pow(j * (n - j)) + t_pow(n - j - 1) * y(j + 1))
            * prod(1, j - 1, |i| c(1) + t_pow(i - 1) * x(i - 1) * y(i))
            * prod(j + 2, n, |i| c(1) + t_pow(n - i) * x(i - 1) * y(i))
    });
    x0_to_one(head + tail)
}

fn as_fdes_fmaj_inner(n: i64) -> Poly {
    let one_plus_q = c(1) + q();
    let inner = c(1)
        + t() * q() * &one_plus_q
        + c(2) * t_pow(2) * q_pow(3) * bracket(2 * n - 3, &q())
        + t_pow(3) * q_pow(2 * n) * &one_plus_q
        + t_pow(4) * q_pow(2 * n + 2);
    (c(1) + t() * q()) * inner
}

fn as_fdes_fmaj(n: usize) -> Result<Poly> {
    let n = n as i64;
    Cleared::new(as_fdes_fmaj_inner(n))
        .times_cleared(Cleared::range_product(3, n - 1, |i| c(1) + t_pow(2) * q_pow(2 * i - 1)))
        .finish()
}

fn as_fdes(n: usize) -> Result<Poly> {
    let n = n as i64;
    Cleared::power(&(c(1) + t_pow(2)), n - 3)
        .times(&(c(1) + t()))
        .times(&(c(1) + c(2) * t() + c(4 * n - 6) * t_pow(2) + c(2) * t_pow(3) + t_pow(4)))
        .finish()
}

/// `∏_{i=1}^{n-1} (1 + s(i) q^{2i-1})`.
fn odd_power_product(n: i64, s: impl Fn(i64) -> i64) -> Poly {
    prod(1, n - 1, |i| c(1) + q_pow(2 * i - 1).scale(s(i)))
}

fn as_character_fmaj(n: usize, chi: Character) -> Poly {
    let n = n as i64;
    let odd = n % 2 == 1;
    let minus_q_sq = q_pow(2).scale(-1);
    match chi {
        Character::Trivial => bracket(2 * n, &q()) * odd_power_product(n, |_| 1),
        Character::Sign if odd => (c(1) - q()) * bracket(n, &minus_q_sq) * odd_power_product(n, sign_pow),
        Character::Sign => bracket(2 * n, &q()) * odd_power_product(n, sign_pow),
        Character::NegParity => bracket(2 * n, &-q()) * odd_power_product(n, |_| -1),
        Character::SignAbs if odd => {
            (c(1) + q()) * bracket(n, &minus_q_sq) * odd_power_product(n, |i| sign_pow(i - 1))
        }
        Character::SignAbs => bracket(2 * n, &-q()) * odd_power_product(n, |i| sign_pow(i - 1)),
    }
}

fn ab_character_fmaj(n: usize, chi: Character) -> Poly {
    let n = n as i64;
    match chi {
        Character::Trivial => bracket(2 * n, &q()) * odd_power_product(n, |_| 1),
        Character::Sign => bracket(2 * n, &q().scale(sign_pow(n))) * odd_power_product(n, sign_pow),
        Character::NegParity => bracket(2 * n, &-q()) * odd_power_product(n, |_| -1),
        Character::SignAbs => {
            bracket(2 * n, &q().scale(sign_pow(n - 1))) * odd_power_product(n, |i| sign_pow(i - 1))
        }
    }
}

fn ab_fdes_fmaj(n: usize) -> Result<Poly> {
    let n = n as i64;
    let lead = (c(1) + t() * q()) * (c(1) + t() * q_pow(n));
    let first = (c(1) - t() * q_pow(n)) * prod(1, n - 2, |i| c(1) + t_pow(2) * q_pow(2 * i + 1));
    let second = (c(1) - t()) * q() * prod(1, n - 2, |i| c(1) + t_pow(2) * q_pow(2 * i + 2));
    Cleared::over(lead * (first - second), c(1) - q()).finish()
}

fn ab_fdes(n: usize) -> Result<Poly> {
    let n = n as i64;
    Cleared::power(&(c(1) + t_pow(2)), n - 3)
        .times(&(c(1) + t()).pow(3))
        .times(&(c(1) + c(n - 2) * t() + t_pow(2)))
        .finish()
}

fn ab_des_set(n: usize) -> Poly {
    let n = n as i64;
    let (full, pairs) = cleared_pair_sum(1, n - 1, (1, n - 2), |i| c(1) + x(i), |j| x(j) + x(j + 1));
    full.scale(2 + n) + pairs.scale(2)
}

fn l_des_set(n: usize) -> Poly {
    prod(1, n as i64 - 1, |i| c(1) + x(i))
}

fn sign_des(n: usize) -> Poly {
    a_inv_des(n).substitute(|v| (v == Variable::T).then(|| c(-1)))
}

fn sign_des_even(n: usize) -> Poly {
    let n = n as i64;
    let (full, pairs) = cleared_pair_sum(
        1,
        n - 1,
        (1, n - 2),
        |i| c(1) + x(i).scale(sign_pow(i)),
        |j| (x(j) - x(j + 1)).scale(sign_pow(j)),
    );
    full + pairs
}
