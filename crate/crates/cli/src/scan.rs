//! The `scan-groupoids` command.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ringoid_core::search::{self, GroupoidConstraints};
use ringoid_core::symmetry::{self, FullAutType};
use ringoid_core::CayleyTable;

use crate::format::{render_groupoid, render_text};
use crate::{CliError, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Every groupoid satisfying the constraints, up to isomorphism.
    All,
    /// Groupoids with transitive automorphism group, checked against the
    /// element-count identities.
    Transitive,
    /// Generalised parasemifields.
    Parasemifields,
    /// Every labeled table, checked for `Aut = Sym` against the known list.
    FullAut,
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub order: usize,
    pub mode: ScanMode,
    pub constraints: GroupoidConstraints,
    /// Sampling budget for transitive scans above the exhaustive range.
    pub samples: Option<usize>,
    pub seed: u64,
    /// Print the tables found, not just the summary.
    pub list: bool,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn list_tables(s: &mut String, tables: &[CayleyTable]) {
    for t in tables {
        s.push('\n');
        s.push_str(&render_groupoid(t));
    }
}

fn scan_all(cfg: &ScanConfig) -> Result<Outcome, CliError> {
    let found = search::scan_groupoids(cfg.order, cfg.constraints)?;
    let mut s = format!("{} groupoids of order {} up to isomorphism\n", found.len(), cfg.order);
    if cfg.list {
        list_tables(&mut s, &found);
    }
    Ok(Outcome::ok(s))
}

fn scan_transitive(cfg: &ScanConfig) -> Result<Outcome, CliError> {
    let n = cfg.order;
    let (found, how) = if n <= search::MAX_EXHAUSTIVE_TRANSITIVE_ORDER {
        (
            search::scan_transitive_groupoids(n, cfg.constraints)?,
            "exhaustive".to_string(),
        )
    } else {
        let samples = cfg.samples.ok_or_else(|| {
            CliError::Usage(format!(
                "order {n} is beyond the exhaustive range (≤ {}); pass --samples",
                search::MAX_EXHAUSTIVE_TRANSITIVE_ORDER
            ))
        })?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let found = search::sample_transitive_groupoids(n, cfg.constraints, samples, &mut rng)?;
        (
            found,
            format!("sampled ({samples} draws, seed {}; candidates failing the identities are discarded, so this is not a test of them)", cfg.seed),
        )
    };
    let mut failures = Vec::new();
    let mut by_stats: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
    for t in &found {
        let rep = symmetry::stats_lemmas_check(t)?;
        if !rep.holds() {
            failures.push(format!("element-count identities fail on {:?}", t.rows()));
        }
        *by_stats.entry(rep.stats.as_tuple()).or_default() += 1;
    }
    let mut s = format!(
        "{} groupoids of order {n} with transitive automorphism group ({how})\n",
        found.len()
    );
    let _ = writeln!(
        s,
        "identities hold on {} of {}",
        found.len() - failures.len(),
        found.len()
    );
    for ((nl, nr, al, ar), k) in &by_stats {
        let _ = writeln!(s, "  stats (nl nr al ar) = ({nl} {nr} {al} {ar}): {k}");
    }
    if cfg.list {
        list_tables(&mut s, &found);
    }
    Ok(Outcome {
        output: s,
        notes: String::new(),
        failures,
    })
}

fn scan_parasemifields(cfg: &ScanConfig) -> Result<Outcome, CliError> {
    let rep = search::scan_parasemifields(cfg.order)?;
    let mut failures = Vec::new();
    if cfg.order >= 2 && !rep.commutative_semigroup_plus.is_empty() {
        failures.push(format!(
            "{} instances of order {} have a commutative semigroup as addition",
            rep.commutative_semigroup_plus.len(),
            cfg.order
        ));
    }
    if !rep.non_transitive_plus.is_empty() {
        failures.push(format!(
            "{} instances have an addition with intransitive automorphism group",
            rep.non_transitive_plus.len()
        ));
    }
    let mut s = format!(
        "{} generalised parasemifields of order {} up to isomorphism\n",
        rep.instances.len(),
        cfg.order
    );
    let _ = writeln!(
        s,
        "with commutative semigroup addition: {}",
        rep.commutative_semigroup_plus.len()
    );
    let _ = writeln!(s, "with intransitive Aut(plus): {}", rep.non_transitive_plus.len());
    if cfg.list {
        for r in &rep.instances {
            s.push('\n');
            s.push_str(&render_text(r));
        }
    }
    Ok(Outcome {
        output: s,
        notes: String::new(),
        failures,
    })
}

fn scan_full_aut(cfg: &ScanConfig) -> Result<Outcome, CliError> {
    let n = cfg.order;
    let full = factorial(n);
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut total = 0usize;
    search::for_each_groupoid(n, |t| {
        total += 1;
        let is_full = symmetry::automorphisms(t).len() == full;
        let kind = symmetry::full_aut_classification(t);
        if is_full != (kind != FullAutType::NotFull) {
            failures.push(format!(
                "{:?}: |Aut| = Sym is {is_full}, classified as {kind:?}",
                t.rows()
            ));
        }
        if is_full {
            *tally.entry(format!("{kind:?}")).or_default() += 1;
        }
    })?;
    let mut s = format!(
        "{total} tables of order {n}; {} with Aut = Sym\n",
        tally.values().sum::<usize>()
    );
    for (kind, k) in &tally {
        let _ = writeln!(s, "  {kind}: {k}");
    }
    let _ = writeln!(s, "mismatches against the classification: {}", failures.len());
    Ok(Outcome {
        output: s,
        notes: String::new(),
        failures,
    })
}

pub fn cmd_scan_groupoids(cfg: &ScanConfig) -> Result<Outcome, CliError> {
    match cfg.mode {
        ScanMode::All => scan_all(cfg),
        ScanMode::Transitive => scan_transitive(cfg),
        ScanMode::Parasemifields => scan_parasemifields(cfg),
        ScanMode::FullAut => scan_full_aut(cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(order: usize, mode: ScanMode) -> ScanConfig {
        ScanConfig {
            order,
            mode,
            constraints: GroupoidConstraints::default(),
            samples: None,
            seed: 0,
            list: false,
        }
    }

    #[test]
    fn full_aut_order_2() {
        let out = cmd_scan_groupoids(&cfg(2, ScanMode::FullAut)).unwrap();
        assert!(out.failures.is_empty());
        assert!(
            out.output.starts_with("16 tables of order 2; 4 with Aut = Sym"),
            "{}",
            out.output
        );
    }

    #[test]
    fn transitive_needs_samples_above_range() {
        assert!(matches!(
            cmd_scan_groupoids(&cfg(6, ScanMode::Transitive)),
            Err(CliError::Usage(_))
        ));
        let out = cmd_scan_groupoids(&ScanConfig {
            samples: Some(20),
            ..cfg(6, ScanMode::Transitive)
        })
        .unwrap();
        assert!(out.failures.is_empty());
        assert!(out.output.contains("sampled"));
    }

    #[test]
    fn parasemifields_order_3() {
        let out = cmd_scan_groupoids(&cfg(3, ScanMode::Parasemifields)).unwrap();
        assert!(out.failures.is_empty());
        assert!(out.output.contains("with commutative semigroup addition: 0"));
    }
}
