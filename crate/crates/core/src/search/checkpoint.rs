//! Append-only log of finished work units.
//!
//! ```text
//! # ringoid-checkpoint v1 order=4 structure=... prune=true
//! 17 12 12 3 0
//! ```
//!
//! Each data line is `unit total general commutative associative`, with `-`
//! for a class the spec does not count. A torn final line (from a crash
//! mid-write) is dropped on resume.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::Path;
use std::sync::Mutex;

use super::{ClassCounts, SearchSpec};
use crate::error::{Error, Result};

const MAGIC: &str = "# ringoid-checkpoint v1 ";

pub struct CheckpointLog {
    key: String,
    file: Mutex<File>,
    completed: BTreeMap<usize, ClassCounts>,
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

impl CheckpointLog {
    /// Starts a fresh log, truncating any existing file.
    pub fn create(path: &Path, spec: &SearchSpec) -> Result<Self> {
        let key = spec.key();
        let mut file = File::create(path).map_err(io)?;
        writeln!(file, "{MAGIC}{key}").map_err(io)?;
        file.flush().map_err(io)?;
        Ok(Self {
            key,
            file: Mutex::new(file),
            completed: BTreeMap::new(),
        })
    }

    /// Reopens an existing log for appending; a missing file starts fresh.
    pub fn resume(path: &Path, spec: &SearchSpec) -> Result<Self> {
        if !path.exists() {
            return Self::create(path, spec);
        }
        let key = spec.key();
        let raw = std::fs::read(path).map_err(io)?;
        let text = String::from_utf8_lossy(&raw);
        let lines: Vec<&str> = text.lines().collect();
        let torn_tail = !raw.is_empty() && raw.last() != Some(&b'\n');
        let header = lines.first().ok_or_else(|| Error::Checkpoint("empty file".into()))?;
        if header.strip_prefix(MAGIC) != Some(key.as_str()) {
            return Err(Error::Checkpoint(format!(
                "header {header:?} does not match this search"
            )));
        }
        let mut completed = BTreeMap::new();
        for (i, line) in lines.iter().enumerate().skip(1) {
            match parse_line(line) {
                Some((u, c)) => {
                    completed.insert(u, c);
                }
                None if torn_tail && i + 1 == lines.len() => {}
                None => return Err(Error::Checkpoint(format!("line {}: {line:?}", i + 1))),
            }
        }
        if torn_tail {
            let keep = raw.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
            let f = OpenOptions::new().write(true).open(path).map_err(io)?;
            f.set_len(keep as u64).map_err(io)?;
        }
        let file = OpenOptions::new().append(true).open(path).map_err(io)?;
        Ok(Self {
            key,
            file: Mutex::new(file),
            completed,
        })
    }

    pub fn spec_key(&self) -> &str {
        &self.key
    }

    /// Units finished before this log was opened.
    pub fn completed(&self) -> BTreeMap<usize, ClassCounts> {
        self.completed.clone()
    }

    pub fn record(&self, unit: usize, c: &ClassCounts) -> Result<()> {
        let field = |x: Option<u64>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
        let line = format!(
            "{unit} {} {} {} {}\n",
            c.total,
            field(c.general),
            field(c.commutative),
            field(c.associative)
        );
        let mut f = self.file.lock().expect("checkpoint lock poisoned");
        f.write_all(line.as_bytes()).map_err(io)?;
        f.flush().map_err(io)
    }
}

fn parse_line(line: &str) -> Option<(usize, ClassCounts)> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 5 {
        return None;
    }
    let opt = |s: &str| -> Option<Option<u64>> {
        if s == "-" {
            Some(None)
        } else {
            s.parse().ok().map(Some)
        }
    };
    Some((
        parts[0].parse().ok()?,
        ClassCounts {
            total: parts[1].parse().ok()?,
            general: opt(parts[2])?,
            commutative: opt(parts[3])?,
            associative: opt(parts[4])?,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_roundtrip() {
        assert_eq!(
            parse_line("3 7 7 - 2"),
            Some((
                3,
                ClassCounts {
                    total: 7,
                    general: Some(7),
                    commutative: None,
                    associative: Some(2)
                }
            ))
        );
        assert_eq!(parse_line("3 7 7"), None);
        assert_eq!(parse_line("x 1 1 1 1"), None);
    }
}
