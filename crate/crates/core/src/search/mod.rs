//! Isomorphism-free enumeration.
//!
//! The main engine enumerates semirings with idempotent addition and an
//! absorbing zero: for every additive skeleton (a join-semilattice with
//! bottom 0) it completes the multiplication row by row. Work units are
//! `(skeleton, top row)` pairs, numbered in lexicographic order; a shard is a
//! contiguous range of unit ids, and results merge in unit order, so output
//! does not depend on how units are scheduled.

mod checkpoint;
mod completion;
mod groupoids;
mod skeleton;

use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::congruence;
use crate::error::{Error, Result};
use crate::ideal;
use crate::ringoid::Ringoid;
use crate::table::CayleyTable;

pub use checkpoint::CheckpointLog;
pub use groupoids::{
    for_each_groupoid, sample_transitive_groupoids, scan_groupoids, scan_parasemifields, scan_transitive_groupoids,
    scan_transitive_groupoids_raw, GroupoidConstraints, ParasemifieldReport, MAX_EXHAUSTIVE_TRANSITIVE_ORDER,
    MAX_PARASEMIFIELD_ORDER, MAX_RAW_SCAN_ORDER,
};
pub use skeleton::{enumerate_additive_skeletons, Skeleton, MAX_SKELETON_ORDER};

use completion::{Completion, CompletionOptions};

/// Default ceiling on the projected branch count when lists are materialized.
pub const DEFAULT_WORK_CEILING: u128 = 10_000_000_000;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureClass {
    SemiringIdempotentAbszero,
    Groupoid,
    GeneralisedParasemifieldCandidate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    CongruenceSimple,
    KIdealSimple,
    IdealSimple,
    All,
}

/// The rows of the published count table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    General,
    Commutative,
    Associative,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::General, Class::Commutative, Class::Associative];

    pub fn constraints(self) -> Constraints {
        Constraints {
            times_commutative: self == Class::Commutative,
            times_associative: self == Class::Associative,
        }
    }
}

macro_rules! kebab_enum {
    ($ty:ty { $($variant:ident => $name:literal),* $(,)? }) => {
        impl $ty {
            pub fn as_str(self) -> &'static str {
                match self { $(Self::$variant => $name),* }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(Self::$variant),)*
                    _ => Err(Error::Unsupported(format!("unknown value {s:?}"))),
                }
            }
        }
    };
}

kebab_enum!(StructureClass {
    SemiringIdempotentAbszero => "semiring-idempotent-abszero",
    Groupoid => "groupoid",
    GeneralisedParasemifieldCandidate => "generalised-parasemifield-candidate",
});
kebab_enum!(Filter {
    CongruenceSimple => "congruence-simple",
    KIdealSimple => "k-ideal-simple",
    IdealSimple => "ideal-simple",
    All => "all",
});
kebab_enum!(Class {
    General => "general",
    Commutative => "commutative",
    Associative => "associative",
});

/// Constraints on the multiplication. Both are enforced during the search;
/// the results are re-verified on every emitted table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraints {
    pub times_commutative: bool,
    pub times_associative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub order: usize,
    pub structure: StructureClass,
    pub constraints: Constraints,
    pub filter: Filter,
    pub count_only: bool,
    /// Work-unit ids to run; `None` runs all of them.
    pub shard: Option<Range<usize>>,
    /// The k-ideal prune. Only active when the filter implies k-ideal-simplicity.
    pub prune: bool,
    pub work_ceiling: u128,
}

impl SearchSpec {
    /// Congruence-simple semirings of the given order and class.
    pub fn semirings(order: usize, class: Class) -> Self {
        Self {
            order,
            structure: StructureClass::SemiringIdempotentAbszero,
            constraints: class.constraints(),
            filter: Filter::CongruenceSimple,
            count_only: false,
            shard: None,
            prune: true,
            work_ceiling: DEFAULT_WORK_CEILING,
        }
    }

    fn prune_active(&self) -> bool {
        self.prune && self.filter != Filter::All
    }

    /// A stable one-line description used to match checkpoints to runs.
    pub fn key(&self) -> String {
        format!(
            "order={} structure={} commutative={} associative={} filter={} prune={}",
            self.order,
            self.structure,
            self.constraints.times_commutative,
            self.constraints.times_associative,
            self.filter,
            self.prune_active()
        )
    }
}

/// Counts of found structures. `total` counts everything satisfying the spec;
/// each class count is present when the spec's constraints do not already
/// exclude part of that class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub total: u64,
    pub general: Option<u64>,
    pub commutative: Option<u64>,
    pub associative: Option<u64>,
}

impl ClassCounts {
    fn empty_for(c: Constraints) -> Self {
        let zero = |allowed: bool| allowed.then_some(0);
        Self {
            total: 0,
            general: zero(!c.times_commutative && !c.times_associative),
            commutative: zero(!c.times_associative),
            associative: zero(!c.times_commutative),
        }
    }

    fn record(&mut self, commutative: bool, associative: bool) {
        self.total += 1;
        if let Some(g) = &mut self.general {
            *g += 1;
        }
        if let (Some(c), true) = (&mut self.commutative, commutative) {
            *c += 1;
        }
        if let (Some(a), true) = (&mut self.associative, associative) {
            *a += 1;
        }
    }

    pub fn merge(&mut self, other: &ClassCounts) {
        fn add(a: &mut Option<u64>, b: Option<u64>) {
            *a = match (*a, b) {
                (Some(x), Some(y)) => Some(x + y),
                (x, y) => x.or(y),
            };
        }
        self.total += other.total;
        add(&mut self.general, other.general);
        add(&mut self.commutative, other.commutative);
        add(&mut self.associative, other.associative);
    }

    pub fn get(&self, class: Class) -> Option<u64> {
        match class {
            Class::General => self.general,
            Class::Commutative => self.commutative,
            Class::Associative => self.associative,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub spec: SearchSpec,
    pub engine_version: String,
    pub wall_seconds: f64,
    pub work_units_total: usize,
    pub work_units_run: usize,
    pub work_units_resumed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub counts: ClassCounts,
    /// Canonical ringoids in lexicographic order, unless `count_only`.
    pub ringoids: Option<Vec<Ringoid>>,
    /// Canonical tables for the groupoid structure class, unless `count_only`.
    pub groupoids: Option<Vec<CayleyTable>>,
    pub provenance: Provenance,
}

/// Upper bound on the number of multiplication branches for semirings of
/// order `n`: per skeleton, one endomorphism choice for the top column and for
/// each join-irreducible row.
pub fn projected_work(n: usize) -> Result<u128> {
    let mut total: u128 = 0;
    for plus in enumerate_additive_skeletons(n)? {
        let sk = Skeleton::new(plus)?;
        let e = sk.endomorphisms.len() as u128;
        total = total.saturating_add(e.saturating_pow(sk.join_irreducible_count() as u32 + 1));
    }
    Ok(total)
}

struct UnitPlan {
    skeletons: Vec<Skeleton>,
    /// `(skeleton index, top-row index)` by unit id.
    units: Vec<(usize, usize)>,
}

fn plan(n: usize) -> Result<UnitPlan> {
    let skeletons = enumerate_additive_skeletons(n)?
        .into_iter()
        .map(Skeleton::new)
        .collect::<Result<Vec<_>>>()?;
    let units = skeletons
        .iter()
        .enumerate()
        .flat_map(|(s, sk)| (0..sk.endomorphisms.len()).map(move |e| (s, e)))
        .collect();
    Ok(UnitPlan { skeletons, units })
}

/// Number of work units for a spec (the valid shard range is `0..count`).
pub fn work_unit_count(spec: &SearchSpec) -> Result<usize> {
    match spec.structure {
        StructureClass::SemiringIdempotentAbszero => Ok(plan(spec.order)?.units.len()),
        _ => Ok(1),
    }
}

fn passes_filter(r: &Ringoid, filter: Filter) -> bool {
    match filter {
        Filter::All => true,
        _ if r.n() == 1 => false,
        Filter::CongruenceSimple => congruence::is_congruence_simple(r),
        Filter::KIdealSimple => ideal::is_k_ideal_simple(r).unwrap_or(false),
        Filter::IdealSimple => ideal::is_ideal_simple(r).unwrap_or(false),
    }
}

fn passes_constraints(r: &Ringoid, c: Constraints) -> bool {
    (!c.times_commutative || r.flags().times_commutative) && (!c.times_associative || r.flags().times_associative)
}

struct UnitOutcome {
    counts: ClassCounts,
    ringoids: Vec<Ringoid>,
}

fn run_unit(sk: &Skeleton, top_row: usize, spec: &SearchSpec) -> UnitOutcome {
    let n = sk.n();
    let opts = CompletionOptions {
        prune: spec.prune_active(),
        commutative: spec.constraints.times_commutative,
        associative: spec.constraints.times_associative,
    };
    let mut counts = ClassCounts::empty_for(spec.constraints);
    let mut ringoids = Vec::new();
    let mut completion = Completion::new(sk, opts);
    completion.run(top_row, &mut |t: &[u8]| {
        let times = CayleyTable::from_bytes(n, t.to_vec());
        let r = Ringoid::new(sk.plus.clone(), times).expect("search emitted a non-distributive table");
        if !passes_constraints(&r, spec.constraints) || !passes_filter(&r, spec.filter) {
            return;
        }
        counts.record(r.flags().times_commutative, r.flags().times_associative);
        if !spec.count_only {
            ringoids.push(r);
        }
    });
    UnitOutcome { counts, ringoids }
}

/// Runs every multiplication completion over one skeleton, calling `sink`
/// with each canonical ringoid that satisfies the spec's constraints and
/// filter. The shard and count-only fields of the spec are ignored.
pub fn complete_multiplications(
    skeleton: &CayleyTable,
    spec: &SearchSpec,
    sink: &mut dyn FnMut(Ringoid),
) -> Result<()> {
    let sk = Skeleton::new(skeleton.clone())?;
    let spec = SearchSpec {
        count_only: false,
        ..spec.clone()
    };
    for e in 0..sk.endomorphisms.len() {
        for r in run_unit(&sk, e, &spec).ringoids {
            sink(r);
        }
    }
    Ok(())
}

/// Runs a search on the current rayon pool.
pub fn enumerate(spec: &SearchSpec) -> Result<EnumerationResult> {
    enumerate_with(spec, None)
}

/// Like [`enumerate`], recording each finished work unit in `log` and
/// skipping the units it already lists. Skipping requires `count_only`,
/// since the log stores counts only.
pub fn enumerate_with(spec: &SearchSpec, log: Option<&CheckpointLog>) -> Result<EnumerationResult> {
    let started = Instant::now();
    if spec.order == 0 {
        return Err(Error::EmptyCarrier);
    }
    match spec.structure {
        StructureClass::SemiringIdempotentAbszero => {}
        StructureClass::Groupoid => return groupoid_result(spec, started),
        StructureClass::GeneralisedParasemifieldCandidate => return parasemifield_result(spec, started),
    }
    if !spec.count_only {
        let projected = projected_work(spec.order)?;
        if projected > spec.work_ceiling {
            return Err(Error::WorkCeiling {
                projected,
                ceiling: spec.work_ceiling,
            });
        }
    }
    let plan = plan(spec.order)?;
    let range = match &spec.shard {
        Some(r) if r.start > r.end || r.end > plan.units.len() => {
            return Err(Error::Precondition(format!(
                "shard {}..{} outside 0..{}",
                r.start,
                r.end,
                plan.units.len()
            )))
        }
        Some(r) => r.clone(),
        None => 0..plan.units.len(),
    };
    let resumed = match log {
        Some(log) => {
            if log.spec_key() != spec.key() {
                return Err(Error::Precondition("checkpoint belongs to a different search".into()));
            }
            log.completed()
        }
        None => Default::default(),
    };
    let skipped = range.clone().filter(|u| resumed.contains_key(u)).count();
    if skipped > 0 && !spec.count_only {
        return Err(Error::Unsupported("resuming requires count-only".into()));
    }

    let outcomes: Vec<(usize, Result<UnitOutcome>)> = range
        .clone()
        .into_par_iter()
        .filter(|u| !resumed.contains_key(u))
        .map(|u| {
            let (s, e) = plan.units[u];
            let outcome = run_unit(&plan.skeletons[s], e, spec);
            let logged = match log {
                Some(log) => log.record(u, &outcome.counts).map(|_| outcome),
                None => Ok(outcome),
            };
            (u, logged)
        })
        .collect();

    let mut counts = ClassCounts::empty_for(spec.constraints);
    for u in range.clone() {
        if let Some(c) = resumed.get(&u) {
            counts.merge(c);
        }
    }
    let mut ringoids = Vec::new();
    for (_, outcome) in outcomes {
        let outcome = outcome?;
        counts.merge(&outcome.counts);
        ringoids.extend(outcome.ringoids);
    }
    ringoids.sort();
    Ok(EnumerationResult {
        counts,
        ringoids: (!spec.count_only).then_some(ringoids),
        groupoids: None,
        provenance: Provenance {
            spec: spec.clone(),
            engine_version: ENGINE_VERSION.to_string(),
            wall_seconds: started.elapsed().as_secs_f64(),
            work_units_total: plan.units.len(),
            work_units_run: range.len() - skipped,
            work_units_resumed: skipped,
        },
    })
}

fn single_unit_provenance(spec: &SearchSpec, started: Instant) -> Provenance {
    Provenance {
        spec: spec.clone(),
        engine_version: ENGINE_VERSION.to_string(),
        wall_seconds: started.elapsed().as_secs_f64(),
        work_units_total: 1,
        work_units_run: 1,
        work_units_resumed: 0,
    }
}

fn groupoid_result(spec: &SearchSpec, started: Instant) -> Result<EnumerationResult> {
    if spec.filter != Filter::All {
        return Err(Error::Unsupported("groupoid scans take filter all".into()));
    }
    let c = GroupoidConstraints {
        commutative: spec.constraints.times_commutative,
        associative: spec.constraints.times_associative,
        ..Default::default()
    };
    let tables = scan_groupoids(spec.order, c)?;
    let mut counts = ClassCounts::empty_for(spec.constraints);
    for t in &tables {
        counts.record(t.is_commutative(), t.is_associative());
    }
    Ok(EnumerationResult {
        counts,
        ringoids: None,
        groupoids: (!spec.count_only).then_some(tables),
        provenance: single_unit_provenance(spec, started),
    })
}

fn parasemifield_result(spec: &SearchSpec, started: Instant) -> Result<EnumerationResult> {
    let report = scan_parasemifields(spec.order)?;
    let mut counts = ClassCounts::empty_for(spec.constraints);
    let mut ringoids = Vec::new();
    for r in report.instances {
        if passes_constraints(&r, spec.constraints) && passes_filter(&r, spec.filter) {
            counts.record(r.flags().times_commutative, r.flags().times_associative);
            ringoids.push(r);
        }
    }
    Ok(EnumerationResult {
        counts,
        ringoids: (!spec.count_only).then_some(ringoids),
        groupoids: None,
        provenance: single_unit_provenance(spec, started),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, class: Class) -> u64 {
        let mut spec = SearchSpec::semirings(n, class);
        spec.count_only = true;
        enumerate(&spec).unwrap().counts.get(class).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(1, Class::General), 0);
        assert_eq!(count(2, Class::General), 2);
        assert_eq!(count(3, Class::General), 5);
        assert_eq!(count(3, Class::Commutative), 1);
        assert_eq!(count(2, Class::Associative), 2);
        assert_eq!(count(3, Class::Associative), 0);
    }

    #[test]
    fn class_counts_agree_with_unconstrained_run() {
        let spec = SearchSpec::semirings(3, Class::General);
        let all = enumerate(&spec).unwrap();
        let rs = all.ringoids.as_ref().unwrap();
        assert_eq!(rs.len() as u64, all.counts.total);
        let comm = rs.iter().filter(|r| r.flags().times_commutative).count() as u64;
        assert_eq!(all.counts.commutative, Some(comm));
    }

    #[test]
    fn filter_all_keeps_everything() {
        let mut spec = SearchSpec::semirings(1, Class::General);
        spec.filter = Filter::All;
        assert_eq!(enumerate(&spec).unwrap().counts.total, 1);
    }

    #[test]
    fn ceiling_refuses_large_materialized_runs() {
        let mut spec = SearchSpec::semirings(4, Class::General);
        spec.work_ceiling = 10;
        assert!(matches!(enumerate(&spec), Err(Error::WorkCeiling { .. })));
        spec.count_only = true;
        assert!(enumerate(&spec).is_ok());
    }

    #[test]
    fn parse_and_display() {
        for f in [
            Filter::CongruenceSimple,
            Filter::KIdealSimple,
            Filter::IdealSimple,
            Filter::All,
        ] {
            assert_eq!(f.as_str().parse::<Filter>().unwrap(), f);
        }
        assert!("simple".parse::<Class>().is_err());
    }
}
