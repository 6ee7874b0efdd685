//! The `demo-examples` command: the midpoint parasemifields and `(ℤ, max, +)`.

use std::fmt::Write as _;

use ringoid_core::{catalog, ideal, symmetry, ElementStats, Permutation, Ringoid};

use crate::{CliError, Outcome};

pub const DEFAULT_MODULI: [usize; 5] = [1, 3, 5, 7, 9];
pub const DEFAULT_WINDOW: i64 = 50;

/// `(ℤ_m, ∘, +)` with `a ∘ b = (a + b)/2` as addition and `+` mod `m` as
/// multiplication.
pub fn midpoint_parasemifield(m: usize) -> Result<Ringoid, CliError> {
    Ok(Ringoid::new(catalog::midpoint_groupoid(m)?, catalog::cyclic_add(m))?)
}

/// Every claim about the midpoint example, as `(claim, holds)`.
pub fn midpoint_claims(m: usize) -> Result<Vec<(String, bool)>, CliError> {
    let r = midpoint_parasemifield(m)?;
    let (plus, times) = (r.plus(), r.times());
    let f = r.flags();
    let ones = ElementStats {
        nl: 1,
        nr: 1,
        al: 1,
        ar: 1,
    };
    let stats = symmetry::stats_lemmas_check(plus);
    let shifts_are_automorphisms = (0..m).all(|c| {
        let p = Permutation::new((0..m).map(|x| (x + c) % m).collect()).expect("shift is a bijection");
        plus.is_automorphism(&p)
    });
    Ok(vec![
        (
            "addition is a commutative quasigroup".into(),
            f.plus_commutative && plus.is_quasigroup(),
        ),
        (
            "Aut(addition) is transitive".into(),
            symmetry::automorphisms(plus).is_transitive(),
        ),
        (
            "stats (nl nr al ar) = (1 1 1 1) at every element".into(),
            stats.is_ok_and(|s| s.holds() && s.stats == ones),
        ),
        (
            "every shift x -> x + c is an automorphism of the addition".into(),
            shifts_are_automorphisms,
        ),
        (
            "both distributive laws hold".into(),
            symmetry::ringoid_check_via_mult(plus, times)?,
        ),
        (
            "generalised parasemifield (translations act as automorphisms)".into(),
            f.is_generalised_parasemifield() && symmetry::parasemifield_check_via_mult(plus, times)?,
        ),
        (
            "multiplication is a commutative group".into(),
            f.times_commutative && times.is_group(),
        ),
        ("ideal-free".into(), ideal::is_ideal_free(&r)?),
    ])
}

/// Counts triples in `[-k, k]³` violating `a + max(b, c) = max(a + b, a + c)`
/// or `max(b, c) + a = max(b + a, c + a)`.
pub fn max_plus_violations(k: i64) -> u64 {
    let mut bad = 0;
    for a in -k..=k {
        for b in -k..=k {
            for c in -k..=k {
                if a + b.max(c) != (a + b).max(a + c) || b.max(c) + a != (b + a).max(c + a) {
                    bad += 1;
                }
            }
        }
    }
    bad
}

pub fn cmd_demo_examples(moduli: &[usize], window: i64) -> Result<Outcome, CliError> {
    if window < 0 {
        return Err(CliError::Usage("--window must be non-negative".into()));
    }
    let mut s = String::new();
    let mut failures = Vec::new();
    for &m in moduli {
        let _ = writeln!(s, "midpoint addition on Z_{m} with multiplication + mod {m}:");
        for (claim, ok) in midpoint_claims(m)? {
            let _ = writeln!(s, "  {} {claim}", if ok { "PASS" } else { "FAIL" });
            if !ok {
                failures.push(format!("m={m}: {claim}"));
            }
        }
    }
    let bad = max_plus_violations(window);
    let side = (2 * window + 1) as u64;
    let _ = writeln!(
        s,
        "(Z, max, +) on [-{window}, {window}] (sampled, not a proof): {} of {} triples satisfy both distributive laws",
        side.pow(3) - bad,
        side.pow(3)
    );
    if bad > 0 {
        failures.push(format!("(Z, max, +): {bad} violating triples"));
    }
    Ok(Outcome {
        output: s,
        notes: String::new(),
        failures,
    })
}
