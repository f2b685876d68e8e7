//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output.

use std::process::ExitCode;
use std::time::Instant;

use arcperm::cli::{verify_outcome, OutputFormat, EXIT_MISMATCH};
use arcperm_core::arcs::{
    generate_arc, generate_b_arc, generate_hyperoctahedral, generate_signed_arc, generate_symmetric, is_arc,
    is_b_arc, is_signed_arc,
};
use arcperm_core::canonical::{
    arc_exponent_vectors, b_arc_exponent_vectors, decompose_a, decompose_b, fmaj_from_exponents,
    is_arc_by_exponents, is_b_arc_by_exponents, maj_from_exponents,
};
use arcperm_core::formulas::{verify, verify_custom, FormulaId, Status};
use arcperm_core::patterns::{arc_forbidden, avoids_all_a, avoids_all_b, b_arc_forbidden, signed_arc_forbidden};
use arcperm_core::{Character, Error, Poly};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cardinalities() -> Check {
    for n in 2..=12 {
        let a = generate_arc(n).map_err(|e| e.to_string())?.len();
        ensure(a == n << (n - 2), || format!("|A_{n}| = {a}"))?;
    }
    for n in 1..=12 {
        let s = generate_signed_arc(n).map_err(|e| e.to_string())?.len();
        let b = generate_b_arc(n).map_err(|e| e.to_string())?.len();
        ensure(s == n << n && b == n << n, || format!("n={n}: |A^s| = {s}, |A^B| = {b}"))?;
    }
    Ok("|A_n| = n2^(n-2) for 2..12; |A^s_n| = |A^B_n| = n2^n for 1..12".into())
}

fn pattern_characterizations() -> Check {
    let arc = arc_forbidden();
    let mut checked = 0usize;
    for n in 1..=7 {
        for p in generate_symmetric(n).map_err(|e| e.to_string())? {
            ensure(is_arc(&p) == avoids_all_a(&p, &arc), || format!("arc counterexample {p}"))?;
            checked += 1;
        }
    }
    let (s, b) = (signed_arc_forbidden(), b_arc_forbidden());
    for n in 1..=6 {
        for p in generate_hyperoctahedral(n).map_err(|e| e.to_string())? {
            ensure(is_signed_arc(&p) == avoids_all_b(&p, &s), || format!("signed arc counterexample {p}"))?;
            ensure(is_b_arc(&p) == avoids_all_b(&p, &b), || format!("B-arc counterexample {p}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} permutations, 0 counterexamples"))
}

fn formula_ranges() -> Vec<(FormulaId, usize)> {
    use FormulaId::*;
    FormulaId::all()
        .into_iter()
        .map(|id| {
            let lo = match id {
                AInvDes | ADesSet | AMaj | ASignedMaj | SignDesVariants => 2,
                ADesMaj | ADes => 3,
                AsDesNeg | AsDesNegInv | AsCharacterFmaj(_) | AbCharacterFmaj(_) | LDesSet => 1,
                AsFdesFmaj | AbFdesFmaj | AbDesSet => 2,
                AsFdes | AbFdes => 3,
            };
            (id, lo)
        })
        .collect()
}

fn formula_identities() -> Check {
    let mut rows = 0;
    for (id, lo) in formula_ranges() {
        for row in verify(id, lo..=8).map_err(|e| e.to_string())?.rows {
            ensure(row.status == Status::Equal, || {
                format!("{} n={}: {} {:?}", row.formula, row.n, row.status, row.note)
            })?;
            rows += 1;
        }
    }
    Ok(format!("{rows} (formula, n) pairs EQUAL"))
}

fn canonical_forms() -> Check {
    let mut checked = 0usize;
    for n in 1..=7 {
        for p in generate_symmetric(n).map_err(|e| e.to_string())? {
            let e = decompose_a(&p);
            ensure(e.recompose() == p, || format!("round trip fails for {p}"))?;
            ensure(maj_from_exponents(&e) as usize == p.maj(), || format!("maj identity fails for {p}"))?;
            ensure(is_arc_by_exponents(&e) == is_arc(&p), || format!("arc constraint fails for {p}"))?;
            checked += 1;
        }
        let count = arc_exponent_vectors(n).map_err(|e| e.to_string())?.len();
        let expected = if n == 1 { 1 } else { n << (n - 2) };
        ensure(count == expected, || format!("{count} type-A constrained vectors for n={n}"))?;
    }
    for n in 1..=6 {
        for p in generate_hyperoctahedral(n).map_err(|e| e.to_string())? {
            let e = decompose_b(&p);
            ensure(e.recompose() == p, || format!("round trip fails for {p}"))?;
            ensure(fmaj_from_exponents(&e) as usize == p.fmaj(), || format!("fmaj identity fails for {p}"))?;
            ensure(is_b_arc_by_exponents(&e) == is_b_arc(&p), || format!("B-arc constraint fails for {p}"))?;
            checked += 1;
        }
        let count = b_arc_exponent_vectors(n).map_err(|e| e.to_string())?.len();
        ensure(count == n << n, || format!("{count} type-B constrained vectors for n={n}"))?;
    }
    Ok(format!("{checked} permutations round-trip; constraint counts match"))
}

fn equidistribution() -> Check {
    let fmaj = |id: FormulaId, n| id.brute_force(n).map_err(|e| e.to_string());
    for n in 1..=10 {
        let s = fmaj(FormulaId::AsCharacterFmaj(Character::Trivial), n)?;
        let b = fmaj(FormulaId::AbCharacterFmaj(Character::Trivial), n)?;
        ensure(s == b, || format!("trivial character differs at n={n}"))?;
    }
    for n in 2..=10 {
        let s = fmaj(FormulaId::AsCharacterFmaj(Character::Sign), n)?;
        let b = fmaj(FormulaId::AbCharacterFmaj(Character::Sign), n)?;
        if n % 2 == 0 {
            ensure(s == b, || format!("sign character differs at even n={n}"))?;
        } else if n >= 3 {
            ensure(s != b, || format!("sign character agrees at odd n={n}"))?;
        }
    }
    Ok("trivial equal for n <= 10; sign equal for even n <= 10, unequal for odd 3..9".into())
}

fn spot_values() -> Check {
    let cases = [
        (FormulaId::AbFdes, 2, "1 + 3*t + 3*t^2 + t^3"),
        (FormulaId::ADes, 3, "1 + 4*t + t^2"),
        (FormulaId::ASignedMaj, 2, "1 - q"),
    ];
    for (id, n, want) in cases {
        let got = id.brute_force(n).map_err(|e| e.to_string())?.to_string();
        ensure(got == want, || format!("{id} at n={n}: {got}"))?;
    }
    Ok("fdes on A^B_2, des on A_3, signed maj on A_2".into())
}

fn exact_division() -> Check {
    let mut divisions = 0;
    for id in FormulaId::all() {
        for n in id.domain_min()..=10 {
            match id.closed_form(n) {
                Ok(_) => divisions += 1,
                Err(e @ Error::InexactDivision { .. }) => return Err(format!("{id} n={n}: {e}")),
                Err(e) => return Err(format!("{id} n={n}: {e}")),
            }
        }
    }
    Ok(format!("{divisions} closed forms built, no nonzero remainder"))
}

fn negative_control() -> Check {
    let id = FormulaId::AbFdesFmaj;
    let corrupted = |n: usize| Ok(id.closed_form(n)? + Poly::var(arcperm_core::Variable::T).pow(n as u32));
    let report = verify_custom("f_AB_fdes_fmaj (corrupted)", 2..=4, 2, corrupted, |n| id.brute_force(n))
        .map_err(|e| e.to_string())?;
    let outcome = verify_outcome(&report, OutputFormat::Lines);
    ensure(outcome.code == EXIT_MISMATCH, || format!("exit code {}", outcome.code))?;
    ensure(outcome.text.contains("MISMATCH") && outcome.text.contains("diff:"), || outcome.text.clone())?;
    let json = verify_outcome(&report, OutputFormat::Json);
    ensure(json.code == EXIT_MISMATCH && json.text.contains("\"MISMATCH\""), || json.text.clone())?;
    Ok(format!("{} MISMATCH rows, exit code {}", report.rows.len(), outcome.code))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 cardinalities", cardinalities),
        ("2 pattern characterizations", pattern_characterizations),
        ("3 formula identities", formula_identities),
        ("4 canonical forms", canonical_forms),
        ("5 equidistribution", equidistribution),
        ("6 spot values", spot_values),
        ("7 exact division", exact_division),
        ("8 negative control", negative_control),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
