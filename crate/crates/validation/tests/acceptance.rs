//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Expected values are the published ones; they are not
//! adjusted to the engine's output.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ringoid_cli::demo::midpoint_claims;
use ringoid_cli::enumerate::{cmd_enumerate, run_search, EnumerateConfig, OutputFormat};
use ringoid_core::congruence::{self, PlusDichotomy};
use ringoid_core::ideal::{self, Trichotomy};
use ringoid_core::search::{self, CheckpointLog, Class, ClassCounts, Filter, GroupoidConstraints, SearchSpec};
use ringoid_core::symmetry::{self, FullAutType};
use ringoid_core::{catalog, random, CayleyTable, Ringoid};

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

/// Joins `(ok, text)` parts into one verdict.
fn all(parts: Vec<(bool, String)>) -> Verdict {
    let pass = parts.iter().all(|(ok, _)| *ok);
    let detail = parts
        .into_iter()
        .map(|(ok, s)| if ok { s } else { format!("[x] {s}") })
        .collect::<Vec<_>>()
        .join("; ");
    Verdict::new(pass, detail)
}

fn count(order: usize, class: Class, filter: Filter, prune: bool, jobs: Option<usize>) -> (ClassCounts, Duration) {
    let mut spec = SearchSpec::semirings(order, class);
    spec.filter = filter;
    spec.prune = prune;
    spec.count_only = true;
    let start = Instant::now();
    let res = run_search(&spec, jobs, None).expect("search runs");
    (res.counts, start.elapsed())
}

fn ringoids(order: usize, filter: Filter) -> Vec<Ringoid> {
    let mut spec = SearchSpec::semirings(order, Class::General);
    spec.filter = filter;
    search::enumerate(&spec).unwrap().ringoids.unwrap()
}

fn expect_count(label: &str, got: u64, want: u64, took: Duration, limit: Duration) -> (bool, String) {
    let ok = got == want && took < limit;
    (
        ok,
        format!(
            "{label} = {got} (expected {want}, {:.2}s, limit {}s)",
            took.as_secs_f64(),
            limit.as_secs()
        ),
    )
}

fn small_orders() -> Verdict {
    let limit = Duration::from_secs(10);
    all([(2, 2), (3, 5), (4, 428)]
        .into_iter()
        .map(|(n, want)| {
            let (c, took) = count(n, Class::General, Filter::CongruenceSimple, true, Some(1));
            expect_count(&format!("general n={n}"), c.total, want, took, limit)
        })
        .collect())
}

fn order_five() -> Verdict {
    let (g, tg) = count(5, Class::General, Filter::CongruenceSimple, true, Some(4));
    let (c, tc) = count(5, Class::Commutative, Filter::CongruenceSimple, true, None);
    all(vec![
        expect_count(
            "general n=5 (--jobs 4)",
            g.total,
            138_167,
            tg,
            Duration::from_secs(30 * 60),
        ),
        expect_count("commutative n=5", c.total, 715, tc, Duration::from_secs(60)),
    ])
}

fn extended() -> Verdict {
    let generous = Duration::from_secs(3600);
    let mut parts = Vec::new();
    let (c, t) = count(6, Class::Commutative, Filter::CongruenceSimple, true, None);
    parts.push(expect_count("commutative n=6", c.total, 59_640, t, generous));
    for (n, want) in [(2, 2), (3, 0), (4, 0), (5, 0), (6, 1)] {
        let (c, t) = count(n, Class::Associative, Filter::CongruenceSimple, true, None);
        parts.push(expect_count(&format!("associative n={n}"), c.total, want, t, generous));
    }
    all(parts)
}

fn order_three_tables() -> Verdict {
    let iso =
        |rs: Vec<Ringoid>| -> BTreeSet<Ringoid> { rs.iter().map(|r| symmetry::canonical_form(r, false).0).collect() };
    let found = iso(ringoids(3, Filter::CongruenceSimple));
    let printed = iso(catalog::order3_examples());
    Verdict::new(
        found == printed && printed.len() == 5,
        format!(
            "{} found, {} printed, equal as sets: {}",
            found.len(),
            printed.len(),
            found == printed
        ),
    )
}

fn fast_k_ideal_oracle() -> Verdict {
    let mut checked = 0;
    let mut mismatches = 0;
    for n in 1..=4 {
        for r in ringoids(n, Filter::All) {
            checked += 1;
            if ideal::k_ideal_simple_fast(&r).unwrap() != ideal::is_k_ideal_simple(&r).unwrap() {
                mismatches += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=5);
        let r = random::random_idempotent_semiring(n, &mut rng);
        checked += 1;
        if ideal::k_ideal_simple_fast(&r).unwrap() != ideal::is_k_ideal_simple(&r).unwrap() {
            mismatches += 1;
        }
    }
    Verdict::new(
        mismatches == 0,
        format!("{checked} semirings (all enumerated n<=4, 10000 random n<=5), {mismatches} discrepancies"),
    )
}

fn pruning_soundness() -> Verdict {
    let mut compared = 0;
    let mut diffs = Vec::new();
    for n in 1..=4 {
        for class in Class::ALL {
            for filter in [
                Filter::CongruenceSimple,
                Filter::KIdealSimple,
                Filter::IdealSimple,
                Filter::All,
            ] {
                let (on, _) = count(n, class, filter, true, None);
                let (off, _) = count(n, class, filter, false, None);
                compared += 1;
                if on != off {
                    diffs.push(format!("n={n} {class} {filter}: {} vs {}", on.total, off.total));
                }
            }
        }
    }
    Verdict::new(
        diffs.is_empty(),
        format!("{compared} (order, class, filter) combinations compared; differences: {diffs:?}"),
    )
}

fn all_tables(n: usize) -> Vec<CayleyTable> {
    let mut out = Vec::new();
    search::for_each_groupoid(n, |t| out.push(t.clone())).unwrap();
    out
}

fn lemma_suite() -> Verdict {
    // (a) rho from the multiple preorder
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut a_bad = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=5);
        let r = random::random_semiring(n, &mut rng);
        let rho = congruence::preorder_rho(&r).unwrap();
        if !congruence::is_congruence(&r, &rho) || !(0..n).all(|x| rho.related(x, r.add(x, x))) {
            a_bad += 1;
        }
    }
    // (b) rho_A for every k-ideal
    let (mut b_checked, mut b_bad) = (0, 0);
    for n in 1..=4 {
        for r in ringoids(n, Filter::All) {
            for a in ideal::enumerate_ideals(&r, true).unwrap() {
                b_checked += 1;
                let rho = congruence::rho_from_ideal(&r, a).unwrap();
                if !congruence::is_congruence(&r, &rho) || rho.class_containing(0) != a.elements() {
                    b_bad += 1;
                }
            }
        }
    }
    // (c) congruence-simple semirings with additive neutral element: every
    // semiring of order <= 3, and the enumerated ones of order 4
    let mut candidates: Vec<Ringoid> = Vec::new();
    for n in 2..=3 {
        let tables = all_tables(n);
        for plus in tables
            .iter()
            .filter(|p| p.is_commutative() && p.is_associative() && p.neutral_element().is_some())
        {
            for times in &tables {
                if let Ok(r) = Ringoid::new(plus.clone(), times.clone()) {
                    if congruence::is_congruence_simple(&r) {
                        candidates.push(r);
                    }
                }
            }
        }
    }
    candidates.extend(ringoids(4, Filter::CongruenceSimple));
    let c_bad = candidates
        .iter()
        .filter(|r| {
            !ideal::is_k_ideal_simple(r).unwrap()
                || !matches!(
                    congruence::plus_dichotomy(r).unwrap(),
                    PlusDichotomy::Idempotent | PlusDichotomy::Group
                )
        })
        .count();
    // (d) trichotomy, exhaustive for n <= 3
    let (mut d_checked, mut d_bad) = (0, 0);
    for n in 1..=3 {
        let tables = all_tables(n);
        let times: Vec<&CayleyTable> = tables
            .iter()
            .filter(|t| t.is_commutative() && t.is_associative())
            .collect();
        for plus in &tables {
            for t in &times {
                let Ok(r) = Ringoid::new(plus.clone(), (*t).clone()) else {
                    continue;
                };
                if ideal::is_ideal_simple(&r).unwrap() {
                    d_checked += 1;
                    if ideal::trichotomy(&r).unwrap() == Trichotomy::NotApplicable {
                        d_bad += 1;
                    }
                }
            }
        }
    }
    all(vec![
        (a_bad == 0, format!("(a) 1000 random semirings, {a_bad} failures")),
        (b_bad == 0, format!("(b) {b_checked} k-ideals, {b_bad} failures")),
        (
            c_bad == 0,
            format!("(c) {} congruence-simple semirings, {c_bad} failures", candidates.len()),
        ),
        (
            d_bad == 0 && d_checked > 0,
            format!("(d) {d_checked} ideal-simple ringoids, {d_bad} outside the trichotomy"),
        ),
    ])
}

fn groupoid_suite() -> Verdict {
    // (a) Aut = Sym exactly on the known list, orders 2 and 3
    let mut a_parts = Vec::new();
    let mut a_ok = true;
    for (n, full) in [(2usize, 2usize), (3, 6)] {
        let mut mismatches = 0;
        let mut kinds = BTreeSet::new();
        search::for_each_groupoid(n, |t| {
            let is_full = symmetry::automorphisms(t).len() == full;
            let kind = symmetry::full_aut_classification(t);
            if is_full != (kind != FullAutType::NotFull) {
                mismatches += 1;
            }
            if is_full {
                kinds.insert(format!("{kind:?}"));
            }
        })
        .unwrap();
        a_ok &= mismatches == 0;
        a_parts.push(format!("n={n}: {mismatches} mismatches, types {kinds:?}"));
    }
    // (b) element-count identities on transitive groupoids
    let mut b_found = Vec::new();
    let mut b_bad = 0;
    for n in 1..=4 {
        let found = search::scan_transitive_groupoids(n, GroupoidConstraints::default()).unwrap();
        b_bad += found
            .iter()
            .filter(|t| !symmetry::stats_lemmas_check(t).unwrap().holds())
            .count();
        b_found.push(found.len());
    }
    // (c) midpoint parasemifields
    let mut c_bad = Vec::new();
    for m in [3, 5, 7, 9] {
        for (claim, ok) in midpoint_claims(m).unwrap() {
            if !ok {
                c_bad.push(format!("m={m}: {claim}"));
            }
        }
    }
    // (d) no commutative-semigroup addition at n = 2, 3
    let mut d_parts = Vec::new();
    let mut d_ok = true;
    for n in [2, 3] {
        let rep = search::scan_parasemifields(n).unwrap();
        d_ok &= rep.commutative_semigroup_plus.is_empty() && !rep.instances.is_empty();
        d_parts.push(format!(
            "n={n}: {} instances, {} with commutative semigroup addition",
            rep.instances.len(),
            rep.commutative_semigroup_plus.len()
        ));
    }
    all(vec![
        (a_ok, format!("(a) {}", a_parts.join(", "))),
        (
            b_bad == 0,
            format!("(b) transitive groupoids by order {b_found:?}, {b_bad} failures"),
        ),
        (c_bad.is_empty(), format!("(c) m in 3,5,7,9: failed claims {c_bad:?}")),
        (d_ok, format!("(d) {}", d_parts.join(", "))),
    ])
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let mut parts = Vec::new();
    for n in 1..=4 {
        for filter in [Filter::CongruenceSimple, Filter::All] {
            let mut outputs = Vec::new();
            for jobs in [1, 2, 8] {
                let path = dir.path().join(format!("n{n}-{filter}-j{jobs}.jsonl"));
                let cfg = EnumerateConfig {
                    out: Some(path.clone()),
                    format: OutputFormat::Jsonl,
                    filter,
                    jobs: Some(jobs),
                    ..EnumerateConfig::new(n)
                };
                cmd_enumerate(&cfg).unwrap();
                let mut lines: Vec<String> = std::fs::read_to_string(&path)
                    .unwrap()
                    .lines()
                    .map(str::to_string)
                    .collect();
                lines.sort();
                outputs.push(lines);
            }
            let same = outputs.windows(2).all(|w| w[0] == w[1]);
            parts.push((
                same,
                format!("n={n} {filter}: {} lines, identical: {same}", outputs[0].len() - 1),
            ));
        }
    }
    // interrupted run: keep half of the finished units plus a torn line, then resume
    let mut spec = SearchSpec::semirings(5, Class::Commutative);
    spec.count_only = true;
    let ckpt = dir.path().join("resume.ckpt");
    let full = {
        let log = CheckpointLog::create(&ckpt, &spec).unwrap();
        run_search(&spec, Some(4), Some(&log)).unwrap().counts
    };
    let text = std::fs::read_to_string(&ckpt).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let keep = 1 + (lines.len() - 1) / 2;
    std::fs::write(&ckpt, format!("{}\n12 3", lines[..keep].join("\n"))).unwrap();
    let log = CheckpointLog::resume(&ckpt, &spec).unwrap();
    let resumed = run_search(&spec, Some(2), Some(&log)).unwrap();
    let same = resumed.counts == full && resumed.provenance.work_units_resumed == keep - 1;
    parts.push((
        same,
        format!(
            "resume after {} of {} units: {} vs {} uninterrupted",
            keep - 1,
            lines.len() - 1,
            resumed.counts.total,
            full.total
        ),
    ));
    all(parts)
}

type Criterion = (&'static str, &'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1", "congruence-simple counts n=2,3,4", small_orders),
        ("2", "congruence-simple counts n=5", order_five),
        ("3", "extended counts (commutative n=6, associative n=2..6)", extended),
        ("4", "order-3 tables match the printed five", order_three_tables),
        ("5", "fast k-ideal criterion equals brute force", fast_k_ideal_oracle),
        ("6", "pruning does not change counts (n<=4)", pruning_soundness),
        ("7", "lemma suite", lemma_suite),
        ("8", "groupoid and parasemifield suite", groupoid_suite),
        ("9", "determinism across --jobs and checkpoint resume", determinism),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (id, title, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| f == id) {
            continue;
        }
        let start = Instant::now();
        let verdict = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Verdict::new(false, format!("panicked: {msg}"))
        });
        if !verdict.pass {
            failed += 1;
        }
        println!(
            "{} criterion {id}: {title} [{:.1}s] {}",
            if verdict.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            verdict.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
