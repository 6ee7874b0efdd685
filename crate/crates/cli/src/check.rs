//! The `check` command: every property the engine knows, for one input.

use std::fmt::Write as _;
use std::str::FromStr;

use ringoid_core::congruence::{self, NoNeutralDichotomy, PlusDichotomy};
use ringoid_core::ideal::{self, Trichotomy};
use ringoid_core::ringoid::classify;
use ringoid_core::{symmetry, ElementStats, Flags, Ringoid};
use serde::Serialize;

use crate::format::Tables;
use crate::{CliError, Outcome};

/// Above this order the full-isomorphism automorphism count (`n!` relabelings)
/// is skipped.
const MAX_RINGOID_AUT_ORDER: usize = 9;

/// Properties a caller can demand with `--require`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Distributive,
    Semiring,
    GeneralisedParasemifield,
    CongruenceSimple,
    IdealSimple,
    IdealFree,
    KIdealSimple,
}

impl FromStr for Property {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "distributive" => Self::Distributive,
            "semiring" => Self::Semiring,
            "generalised-parasemifield" => Self::GeneralisedParasemifield,
            "congruence-simple" => Self::CongruenceSimple,
            "ideal-simple" => Self::IdealSimple,
            "ideal-free" => Self::IdealFree,
            "k-ideal-simple" => Self::KIdealSimple,
            _ => return Err(CliError::Usage(format!("unknown property {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub n: usize,
    pub distributive: bool,
    /// The first violated distributive law, when there is one.
    pub distributivity_failure: Option<String>,
    pub flags: Flags,
    pub semiring: bool,
    pub generalised_parasemifield: bool,
    pub congruence_simple: Option<bool>,
    /// A congruence other than identity and full, as lists of classes.
    pub witness_congruence: Option<Vec<Vec<usize>>>,
    pub ideal_simple: Option<bool>,
    pub ideal_free: Option<bool>,
    pub k_ideal_simple: Option<bool>,
    /// The criterion for idempotent semirings with absorbing zero.
    pub k_ideal_simple_fast: Option<bool>,
    pub trichotomy: Option<Trichotomy>,
    pub plus_dichotomy: Option<PlusDichotomy>,
    pub no_neutral_dichotomy: Option<NoNeutralDichotomy>,
    pub aut_size: Option<usize>,
    pub aut_plus_size: usize,
    pub aut_times_size: usize,
    pub aut_plus_transitive: bool,
    pub aut_times_transitive: bool,
    pub plus_stats: Vec<ElementStats>,
    pub times_stats: Vec<ElementStats>,
}

pub fn check_report(tables: &Tables) -> Result<CheckReport, CliError> {
    let (plus, times) = (&tables.plus, &tables.times);
    let n = plus.n();
    let (ringoid, distributivity_failure) = match Ringoid::new(plus.clone(), times.clone()) {
        Ok(r) => (Some(r), None),
        Err(ringoid_core::Error::NotDistributive(why)) => (None, Some(why)),
        Err(e) => return Err(e.into()),
    };
    let distributive = ringoid.is_some();
    let flags = classify(plus, times);
    let r = ringoid.as_ref();
    let aut_plus = symmetry::automorphisms(plus);
    let aut_times = symmetry::automorphisms(times);
    let witness = r.map(congruence::nontrivial_congruence);
    Ok(CheckReport {
        n,
        distributive,
        distributivity_failure,
        flags,
        semiring: distributive && flags.is_semiring(),
        generalised_parasemifield: distributive && flags.is_generalised_parasemifield(),
        congruence_simple: r.map(congruence::is_congruence_simple),
        witness_congruence: witness.flatten().map(|p| p.classes()),
        ideal_simple: r.and_then(|r| ideal::is_ideal_simple(r).ok()),
        ideal_free: r.and_then(|r| ideal::is_ideal_free(r).ok()),
        k_ideal_simple: r.and_then(|r| ideal::is_k_ideal_simple(r).ok()),
        k_ideal_simple_fast: r.and_then(|r| ideal::k_ideal_simple_fast(r).ok()),
        trichotomy: r.and_then(|r| ideal::trichotomy(r).ok()),
        plus_dichotomy: r.and_then(|r| congruence::plus_dichotomy(r).ok()),
        no_neutral_dichotomy: r.and_then(|r| congruence::no_neutral_dichotomy(r).ok()),
        aut_size: r
            .filter(|r| r.n() <= MAX_RINGOID_AUT_ORDER)
            .map(|r| symmetry::canonical_form(r, false).1.len()),
        aut_plus_size: aut_plus.len(),
        aut_times_size: aut_times.len(),
        aut_plus_transitive: aut_plus.is_transitive(),
        aut_times_transitive: aut_times.is_transitive(),
        plus_stats: (0..n).map(|s| plus.element_stats(s)).collect(),
        times_stats: (0..n).map(|s| times.element_stats(s)).collect(),
    })
}

impl CheckReport {
    /// Failed requirements, plus any disagreement between the two k-ideal tests.
    pub fn failures(&self, required: &[Property]) -> Vec<String> {
        let mut out = Vec::new();
        if let (Some(fast), Some(oracle)) = (self.k_ideal_simple_fast, self.k_ideal_simple) {
            if fast != oracle {
                out.push(format!(
                    "k-ideal-simple: fast criterion says {fast}, subset scan says {oracle}"
                ));
            }
        }
        let mut required = required.to_vec();
        if !required.contains(&Property::Distributive) {
            required.insert(0, Property::Distributive);
        }
        for p in required {
            let (name, value) = match p {
                Property::Distributive => ("distributive", Some(self.distributive)),
                Property::Semiring => ("semiring", Some(self.semiring)),
                Property::GeneralisedParasemifield => {
                    ("generalised-parasemifield", Some(self.generalised_parasemifield))
                }
                Property::CongruenceSimple => ("congruence-simple", self.congruence_simple),
                Property::IdealSimple => ("ideal-simple", self.ideal_simple),
                Property::IdealFree => ("ideal-free", self.ideal_free),
                Property::KIdealSimple => ("k-ideal-simple", self.k_ideal_simple),
            };
            match value {
                Some(true) => {}
                Some(false) => out.push(format!("{name}: false")),
                None => out.push(format!("{name}: not decidable for this input")),
            }
        }
        out
    }

    pub fn render_text(&self) -> String {
        fn opt<T: std::fmt::Debug>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "n/a".to_string(), |x| format!("{x:?}"))
        }
        fn yn(v: Option<bool>) -> String {
            v.map_or_else(|| "n/a".to_string(), |b| b.to_string())
        }
        let f = &self.flags;
        let mut s = String::new();
        let _ = writeln!(s, "order: {}", self.n);
        let _ = writeln!(s, "distributive: {}", self.distributive);
        if let Some(why) = &self.distributivity_failure {
            let _ = writeln!(s, "  first failure: {why}");
        }
        let _ = writeln!(
            s,
            "plus: commutative={} associative={} idempotent={}",
            f.plus_commutative, f.plus_associative, f.plus_idempotent
        );
        let _ = writeln!(
            s,
            "times: commutative={} associative={} quasigroup={}",
            f.times_commutative, f.times_associative, f.times_quasigroup
        );
        let _ = writeln!(
            s,
            "neutral zero: {}  absorbing zero: {}",
            f.has_neutral_zero, f.has_absorbing_zero
        );
        let _ = writeln!(s, "semiring: {}", self.semiring);
        let _ = writeln!(s, "generalised parasemifield: {}", self.generalised_parasemifield);
        let _ = writeln!(s, "congruence-simple: {}", yn(self.congruence_simple));
        if let Some(w) = &self.witness_congruence {
            let classes: Vec<String> = w
                .iter()
                .map(|c| format!("{{{}}}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            let _ = writeln!(s, "  witness congruence: {}", classes.join("/"));
        }
        let _ = writeln!(s, "ideal-simple: {}", yn(self.ideal_simple));
        let _ = writeln!(s, "ideal-free: {}", yn(self.ideal_free));
        let _ = writeln!(s, "k-ideal-simple: {}", yn(self.k_ideal_simple));
        let _ = writeln!(s, "k-ideal-simple (fast criterion): {}", yn(self.k_ideal_simple_fast));
        let _ = writeln!(s, "trichotomy: {}", opt(&self.trichotomy));
        let _ = writeln!(s, "plus dichotomy: {}", opt(&self.plus_dichotomy));
        let _ = writeln!(s, "no-neutral dichotomy: {}", opt(&self.no_neutral_dichotomy));
        let _ = writeln!(s, "|Aut|: {}", opt(&self.aut_size));
        let _ = writeln!(
            s,
            "|Aut(plus)|: {} (transitive: {})",
            self.aut_plus_size, self.aut_plus_transitive
        );
        let _ = writeln!(
            s,
            "|Aut(times)|: {} (transitive: {})",
            self.aut_times_size, self.aut_times_transitive
        );
        for (name, stats) in [("plus", &self.plus_stats), ("times", &self.times_stats)] {
            let _ = writeln!(s, "{name} element stats (nl nr al ar):");
            for (x, st) in stats.iter().enumerate() {
                let _ = writeln!(s, "  {x}: {} {} {} {}", st.nl, st.nr, st.al, st.ar);
            }
        }
        s
    }
}

pub fn cmd_check(input: &str, required: &[Property], json: bool) -> Result<Outcome, CliError> {
    let tables = crate::format::parse_tables(input)?;
    let report = check_report(&tables)?;
    let output = if json {
        serde_json::to_string_pretty(&report)? + "\n"
    } else {
        report.render_text()
    };
    Ok(Outcome {
        output,
        notes: String::new(),
        failures: report.failures(required),
    })
}
