//! The `enumerate` command.

use std::fmt::Write as _;
use std::path::PathBuf;

use ringoid_core::search::{self, CheckpointLog, Class, EnumerationResult, Filter, SearchSpec};
use ringoid_core::Ringoid;

use crate::format::{render_text, Record};
use crate::{CliError, Outcome};

pub const WORK_CEILING_ENV: &str = "RINGOID_WORK_CEILING";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Jsonl,
    Csv,
    Text,
}

#[derive(Clone, Debug)]
pub struct EnumerateConfig {
    pub order: usize,
    /// `None` searches without multiplication constraints and reports every class.
    pub class: Option<Class>,
    pub filter: Filter,
    pub count_only: bool,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub jobs: Option<usize>,
    pub checkpoint: Option<PathBuf>,
    pub resume: bool,
    pub prune: bool,
    pub work_ceiling: u128,
}

impl EnumerateConfig {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            class: None,
            filter: Filter::CongruenceSimple,
            count_only: false,
            out: None,
            format: OutputFormat::Jsonl,
            jobs: None,
            checkpoint: None,
            resume: false,
            prune: true,
            work_ceiling: search::DEFAULT_WORK_CEILING,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.order == 0 || self.order > search::MAX_SKELETON_ORDER {
            return Err(CliError::Usage(format!(
                "--order must be in 1..={}",
                search::MAX_SKELETON_ORDER
            )));
        }
        if self.resume && self.checkpoint.is_none() {
            return Err(CliError::Usage("--resume needs --checkpoint".into()));
        }
        if self.checkpoint.is_some() && !self.count_only {
            return Err(CliError::Usage(
                "--checkpoint records counts only; add --count-only".into(),
            ));
        }
        if self.count_only && self.out.is_some() && self.format != OutputFormat::Csv {
            return Err(CliError::Usage(
                "--count-only writes no records; use --format csv for a count file".into(),
            ));
        }
        if self.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        Ok(())
    }

    pub fn spec(&self) -> SearchSpec {
        let mut spec = SearchSpec::semirings(self.order, self.class.unwrap_or(Class::General));
        spec.filter = self.filter;
        spec.count_only = self.count_only || self.format == OutputFormat::Csv;
        spec.prune = self.prune;
        spec.work_ceiling = self.work_ceiling;
        spec
    }
}

/// Reads the ceiling override; unset means the default.
pub fn work_ceiling_from_env() -> Result<u128, CliError> {
    match std::env::var(WORK_CEILING_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{WORK_CEILING_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(search::DEFAULT_WORK_CEILING),
    }
}

/// Runs the search on `jobs` worker threads (all cores when unset).
pub fn run_search(
    spec: &SearchSpec,
    jobs: Option<usize>,
    log: Option<&CheckpointLog>,
) -> Result<EnumerationResult, CliError> {
    let run = || search::enumerate_with(spec, log);
    let result = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| CliError::Input(e.to_string()))?
            .install(run),
        None => run(),
    };
    result.map_err(|e| match e {
        ringoid_core::Error::WorkCeiling { projected, ceiling } => CliError::Ceiling { projected, ceiling },
        e => e.into(),
    })
}

/// The `#` provenance line heading every output file. It holds nothing that
/// varies between runs of the same search.
pub fn provenance_header(spec: &SearchSpec) -> String {
    format!("# ringoid {} {}\n", search::ENGINE_VERSION, spec.key())
}

/// `(class name, count)` for every class the result reports.
fn class_counts(res: &EnumerationResult) -> Vec<(Class, u64)> {
    Class::ALL
        .iter()
        .filter_map(|&c| res.counts.get(c).map(|v| (c, v)))
        .collect()
}

pub fn render_csv(cfg: &EnumerateConfig, res: &EnumerationResult) -> String {
    let mut s = provenance_header(&res.provenance.spec);
    s.push_str("order,class,filter,count,seconds\n");
    let rows: Vec<(Class, u64)> = match cfg.class {
        Some(c) => vec![(c, res.counts.total)],
        None => class_counts(res),
    };
    for (class, count) in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{:.3}",
            cfg.order, class, cfg.filter, count, res.provenance.wall_seconds
        );
    }
    s
}

pub fn render_records(spec: &SearchSpec, ringoids: &[Ringoid], format: OutputFormat) -> Result<String, CliError> {
    let mut s = provenance_header(spec);
    for (i, r) in ringoids.iter().enumerate() {
        match format {
            OutputFormat::Jsonl => {
                s.push_str(&serde_json::to_string(&Record::canonical(r))?);
                s.push('\n');
            }
            OutputFormat::Text => {
                if i > 0 {
                    s.push('\n');
                }
                s.push_str(&render_text(r));
            }
            OutputFormat::Csv => unreachable!("csv holds counts only"),
        }
    }
    Ok(s)
}

pub fn render_summary(cfg: &EnumerateConfig, res: &EnumerationResult) -> String {
    let p = &res.provenance;
    let mut s = format!(
        "order {} filter {} class {}\n",
        cfg.order,
        cfg.filter,
        cfg.class.map_or("any", |c| c.as_str())
    );
    match cfg.class {
        Some(c) => {
            let _ = writeln!(s, "  {:<12} {}", c.as_str(), res.counts.total);
        }
        None => {
            for (c, v) in class_counts(res) {
                let _ = writeln!(s, "  {:<12} {v}", c.as_str());
            }
        }
    }
    let _ = writeln!(
        s,
        "work units {} (run {}, resumed {}), {:.2} s",
        p.work_units_total, p.work_units_run, p.work_units_resumed, p.wall_seconds
    );
    s
}

pub fn cmd_enumerate(cfg: &EnumerateConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let spec = cfg.spec();
    let log = match &cfg.checkpoint {
        Some(path) if cfg.resume => Some(CheckpointLog::resume(path, &spec)?),
        Some(path) => Some(CheckpointLog::create(path, &spec)?),
        None => None,
    };
    let res = run_search(&spec, cfg.jobs, log.as_ref())?;
    let summary = render_summary(cfg, &res);
    let data = if cfg.format == OutputFormat::Csv {
        Some(render_csv(cfg, &res))
    } else {
        res.ringoids
            .as_deref()
            .map(|rs| render_records(&spec, rs, cfg.format))
            .transpose()?
    };
    let mut outcome = Outcome::default();
    match (&cfg.out, data) {
        (Some(path), Some(data)) => {
            std::fs::write(path, data)?;
            outcome.output = summary;
        }
        (None, Some(data)) => {
            outcome.output = data;
            outcome.notes = summary;
        }
        (_, None) => outcome.output = summary,
    }
    Ok(outcome)
}
