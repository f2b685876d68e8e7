use arcperm_core::formulas::{verify, FormulaId, Status};
use arcperm_core::{Character, Poly, Variable};

fn t() -> Poly {
    Poly::var(Variable::T)
}

fn q() -> Poly {
    Poly::var(Variable::Q)
}

fn closed(id: FormulaId, n: usize) -> Poly {
    id.closed_form(n).unwrap()
}

fn set_to_one(p: &Poly, var: Variable) -> Poly {
    p.substitute(|v| (v == var).then(Poly::one))
}

#[test]
fn every_formula_matches_brute_force_up_to_seven() {
    for id in FormulaId::all() {
        for row in verify(id, 1..=7).unwrap().rows {
            assert_ne!(row.status, Status::Mismatch, "{} n={} {:?}", row.formula, row.n, row.note);
            if row.n >= id.stated_min() {
                assert_eq!(row.status, Status::Equal);
            }
        }
    }
}

#[test]
fn specializations_are_coherent() {
    for n in 3..=7 {
        assert_eq!(set_to_one(&closed(FormulaId::AInvDes, n), Variable::T), closed(FormulaId::ADesSet, n));
        let des_maj = closed(FormulaId::ADesSet, n).substitute(|v| match v {
            Variable::X(i) => Some(&t() * &q().pow(i)),
            _ => None,
        });
        assert_eq!(des_maj, closed(FormulaId::ADesMaj, n));
        assert_eq!(set_to_one(&des_maj, Variable::Q), closed(FormulaId::ADes, n));
        assert_eq!(set_to_one(&des_maj, Variable::T), closed(FormulaId::AMaj, n));
        assert_eq!(
            set_to_one(&closed(FormulaId::AsFdesFmaj, n), Variable::Q),
            closed(FormulaId::AsFdes, n)
        );
        assert_eq!(
            set_to_one(&closed(FormulaId::AbFdesFmaj, n), Variable::Q),
            closed(FormulaId::AbFdes, n)
        );
        assert_eq!(
            set_to_one(&closed(FormulaId::AsFdesFmaj, n), Variable::T),
            closed(FormulaId::AsCharacterFmaj(Character::Trivial), n)
        );
        assert_eq!(
            set_to_one(&closed(FormulaId::AbFdesFmaj, n), Variable::T),
            closed(FormulaId::AbCharacterFmaj(Character::Trivial), n)
        );
    }
    for n in 1..=7 {
        assert_eq!(
            set_to_one(&closed(FormulaId::AsDesNegInv, n), Variable::T),
            closed(FormulaId::AsDesNeg, n)
        );
    }
}

#[test]
fn descent_and_negative_sets_determine_the_flag_statistics() {
    // fdes = 2 des + [1 ∈ Neg], fmaj = 2 maj + neg
    for n in 2..=7 {
        let flag = closed(FormulaId::AsDesNeg, n).substitute(|v| match v {
            Variable::X(i) => Some(&t().pow(2) * &q().pow(2 * i)),
            Variable::Yi(1) => Some(&t() * &q()),
            Variable::Yi(_) => Some(q()),
            _ => None,
        });
        assert_eq!(flag, closed(FormulaId::AsFdesFmaj, n));
    }
}

#[test]
fn sign_variants_agree_for_even_n() {
    for n in (2..=8).step_by(2) {
        assert_eq!(FormulaId::SignDesVariants.alternate_form(n), Some(closed(FormulaId::SignDesVariants, n)));
    }
    assert_eq!(FormulaId::SignDesVariants.alternate_form(3), None);
}

#[test]
fn spot_values() {
    assert_eq!(FormulaId::AbFdes.brute_force(2).unwrap().to_string(), "1 + 3*t + 3*t^2 + t^3");
    assert_eq!(FormulaId::ADes.brute_force(3).unwrap().to_string(), "1 + 4*t + t^2");
    assert_eq!(FormulaId::ASignedMaj.brute_force(2).unwrap().to_string(), "1 - q");
    assert_eq!(closed(FormulaId::AbDesSet, 2).to_string(), "4 + 4*x_1");
}

#[test]
fn trivial_and_sign_equidistribution() {
    for n in 1..=7 {
        let trivial_s = FormulaId::AsCharacterFmaj(Character::Trivial).brute_force(n).unwrap();
        let trivial_b = FormulaId::AbCharacterFmaj(Character::Trivial).brute_force(n).unwrap();
        assert_eq!(trivial_s, trivial_b);
        let sign_s = FormulaId::AsCharacterFmaj(Character::Sign).brute_force(n).unwrap();
        let sign_b = FormulaId::AbCharacterFmaj(Character::Sign).brute_force(n).unwrap();
        assert_eq!(sign_s == sign_b, n % 2 == 0 || n == 1, "n={n}");
    }
}
