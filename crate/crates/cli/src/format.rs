//! Cayley-table input and output.
//!
//! Text form: a line with `n`, then `n` rows of the addition table, a blank
//! line, then `n` rows of the multiplication table. Lines starting with `#`
//! are ignored. JSON form: `{"n":3,"plus":[[..]],"times":[[..]]}`.

use ringoid_core::{CayleyTable, Flags, Ringoid};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// The two raw tables of an input, before the distributivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub plus: CayleyTable,
    pub times: CayleyTable,
}

impl Tables {
    pub fn into_ringoid(self) -> Result<Ringoid, CliError> {
        Ok(Ringoid::new(self.plus, self.times)?)
    }
}

#[derive(Serialize, Deserialize)]
struct TablesJson {
    n: usize,
    plus: Vec<Vec<usize>>,
    times: Vec<Vec<usize>>,
}

/// One line of an enumeration JSONL stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub n: usize,
    pub plus: Vec<Vec<usize>>,
    pub times: Vec<Vec<usize>>,
    pub canonical: bool,
    pub flags: Flags,
}

impl Record {
    pub fn canonical(r: &Ringoid) -> Self {
        Self {
            n: r.n(),
            plus: r.plus().rows(),
            times: r.times().rows(),
            canonical: true,
            flags: r.flags(),
        }
    }

    pub fn to_ringoid(&self) -> Result<Ringoid, CliError> {
        tables_from_rows(self.n, &self.plus, &self.times)?.into_ringoid()
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses either form, choosing JSON when the first non-blank character is `{`.
pub fn parse_tables(input: &str) -> Result<Tables, CliError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_ringoid(input: &str) -> Result<Ringoid, CliError> {
    parse_tables(input)?.into_ringoid()
}

/// A non-comment line with its 1-based number.
struct Line<'a> {
    no: usize,
    text: &'a str,
}

/// Whitespace-separated integers with their 1-based columns.
fn numbers(line: &Line<'_>) -> Result<Vec<(usize, usize)>, CliError> {
    let mut out = Vec::new();
    let mut start = None;
    let bytes = line.text.as_bytes();
    for i in 0..=bytes.len() {
        let ws = i == bytes.len() || bytes[i].is_ascii_whitespace();
        match (start, ws) {
            (None, false) => start = Some(i),
            (Some(s), true) => {
                let tok = &line.text[s..i];
                let v = tok.parse::<usize>().map_err(|_| {
                    parse_err(
                        line.no,
                        s + 1,
                        format!("expected a non-negative integer, found {tok:?}"),
                    )
                })?;
                out.push((v, s + 1));
                start = None;
            }
            _ => {}
        }
    }
    Ok(out)
}

fn read_rows<'a>(
    lines: &mut impl Iterator<Item = Line<'a>>,
    n: usize,
    what: &str,
    last_line: usize,
) -> Result<Vec<usize>, CliError> {
    let mut entries = Vec::with_capacity(n * n);
    for r in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| parse_err(last_line + 1, 1, format!("{what} table ends after {r} of {n} rows")))?;
        if line.text.trim().is_empty() {
            return Err(parse_err(
                line.no,
                1,
                format!("{what} table has {r} rows, expected {n}"),
            ));
        }
        let row = numbers(&line)?;
        if row.len() != n {
            let col = row.get(n).map_or(line.text.len() + 1, |&(_, c)| c);
            return Err(parse_err(
                line.no,
                col,
                format!("{what} row has {} entries, expected {n}", row.len()),
            ));
        }
        for (v, col) in row {
            if v >= n {
                return Err(parse_err(line.no, col, format!("entry {v} is outside 0..{n}")));
            }
            entries.push(v);
        }
    }
    Ok(entries)
}

pub fn parse_text(input: &str) -> Result<Tables, CliError> {
    let all: Vec<Line<'_>> = input
        .lines()
        .enumerate()
        .map(|(i, text)| Line { no: i + 1, text })
        .filter(|l| !l.text.trim_start().starts_with('#'))
        .collect();
    let last_line = input.lines().count();
    let mut lines = all.into_iter().skip_while(|l| l.text.trim().is_empty()).peekable();
    let header = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let head = numbers(&header)?;
    let n = match head.as_slice() {
        [(n, _)] => *n,
        [] => return Err(parse_err(header.no, 1, "expected the order n")),
        [_, (_, col), ..] => {
            return Err(parse_err(
                header.no,
                *col,
                "expected only the order n on the first line",
            ))
        }
    };
    if n == 0 {
        return Err(parse_err(header.no, head[0].1, "order must be positive"));
    }
    let plus = read_rows(&mut lines, n, "plus", last_line)?;
    match lines.next() {
        Some(l) if l.text.trim().is_empty() => {}
        Some(l) => return Err(parse_err(l.no, 1, "expected a blank line between the tables")),
        None => return Err(parse_err(last_line + 1, 1, "missing times table")),
    }
    while lines.peek().is_some_and(|l| l.text.trim().is_empty()) {
        lines.next();
    }
    let times = read_rows(&mut lines, n, "times", last_line)?;
    if let Some(l) = lines.find(|l| !l.text.trim().is_empty()) {
        return Err(parse_err(l.no, 1, "unexpected content after the times table"));
    }
    Ok(Tables {
        plus: CayleyTable::new(n, plus)?,
        times: CayleyTable::new(n, times)?,
    })
}

fn tables_from_rows(n: usize, plus: &[Vec<usize>], times: &[Vec<usize>]) -> Result<Tables, CliError> {
    for (name, rows) in [("plus", plus), ("times", times)] {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(CliError::Input(format!("{name} is not an {n}x{n} table")));
        }
    }
    Ok(Tables {
        plus: CayleyTable::from_rows(plus)?,
        times: CayleyTable::from_rows(times)?,
    })
}

pub fn parse_json(input: &str) -> Result<Tables, CliError> {
    let j: TablesJson = serde_json::from_str(input).map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    if j.n == 0 {
        return Err(CliError::Input("order must be positive".into()));
    }
    tables_from_rows(j.n, &j.plus, &j.times)
}

fn render_table(out: &mut String, t: &CayleyTable) {
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

pub fn render_text(r: &Ringoid) -> String {
    let mut out = format!("{}\n", r.n());
    render_table(&mut out, r.plus());
    out.push('\n');
    render_table(&mut out, r.times());
    out
}

pub fn render_json(r: &Ringoid) -> String {
    serde_json::to_string(&TablesJson {
        n: r.n(),
        plus: r.plus().rows(),
        times: r.times().rows(),
    })
    .expect("tables serialize")
}

/// A single groupoid table in the text layout (order line, then rows).
pub fn render_groupoid(t: &CayleyTable) -> String {
    let mut out = format!("{}\n", t.n());
    render_table(&mut out, t);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ringoid_core::catalog;

    #[test]
    fn roundtrip_both_forms() {
        for r in catalog::order3_examples()
            .into_iter()
            .chain([catalog::zn_ring(4), catalog::trivial()])
        {
            assert_eq!(parse_ringoid(&render_text(&r)).unwrap(), r);
            assert_eq!(parse_ringoid(&render_json(&r)).unwrap(), r);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let bad = "2\n0 1\n1 x\n\n0 0\n0 1\n";
        match parse_text(bad) {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
        match parse_text("2\n0 1\n1 5\n\n0 0\n0 1\n") {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
            other => panic!("{other:?}"),
        }
        match parse_text("2\n0 1 1\n1 0\n\n0 0\n0 1\n") {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        match parse_text("2\n0 1\n1 0\n0 0\n0 1\n") {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_text("2\n0 1\n1 0\n\n0 0\n"),
            Err(CliError::Parse { line: 6, .. })
        ));
        assert!(matches!(
            parse_json(r#"{"n":2,"plus":[[0,1],[1,0]],"times":[[0,0]]}"#),
            Err(CliError::Input(_))
        ));
        assert!(matches!(
            parse_json("{\"n\":2,\n \"plus\": ["),
            Err(CliError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn comments_and_blank_padding_are_ignored() {
        let r = parse_ringoid("# header\n\n1\n0\n\n\n0\n\n").unwrap();
        assert_eq!(r, catalog::trivial());
    }
}
