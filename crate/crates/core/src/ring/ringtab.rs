//! The `ringtab 1` text format.
//!
//! ```text
//! ringtab 1
//! order 2
//! label Z_2
//! add
//! 0 1
//! 1 0
//! mul
//! 0 0
//! 0 1
//! ```
//!
//! Lines starting with `#` are comments. Table rows are read until the next
//! keyword, so a malformed table surfaces as the same axiom violation that
//! [`make_ring`] reports.

use std::fmt::Write as _;

use crate::error::{Axiom, Error, Result};

use super::{make_ring, FiniteRing};

pub const MAGIC: &str = "ringtab 1";

pub fn write_ringtab(r: &FiniteRing) -> String {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    let _ = writeln!(out, "order {}", r.order());
    if let Some(label) = r.label() {
        let _ = writeln!(out, "label {}", label.replace('\n', " "));
    }
    for (name, table) in [("add", r.add_table()), ("mul", r.mul_table())] {
        out.push_str(name);
        out.push('\n');
        for row in table {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

#[derive(PartialEq)]
enum Section {
    Header,
    Add,
    Mul,
}

/// Parses one ring. `first_line` is the 1-based line number of `text` within
/// a larger file, used for diagnostics.
pub(crate) fn parse_ringtab_at(text: &str, first_line: usize) -> Result<FiniteRing> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + first_line, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, l)) if l == MAGIC => {}
        Some((n, l)) => return Err(Error::format(n, format!("expected `{MAGIC}`, found `{l}`"))),
        None => return Err(Error::format(first_line, "empty ringtab")),
    }
    let mut order: Option<usize> = None;
    let mut label: Option<String> = None;
    let mut add: Vec<Vec<usize>> = Vec::new();
    let mut mul: Vec<Vec<usize>> = Vec::new();
    let mut section = Section::Header;
    for (lineno, line) in lines {
        if let Some(rest) = line.strip_prefix("order ") {
            if section != Section::Header || order.is_some() {
                return Err(Error::format(lineno, "unexpected `order` line"));
            }
            order = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| Error::format(lineno, format!("bad order `{rest}`")))?,
            );
        } else if let Some(rest) = line.strip_prefix("label") {
            if section != Section::Header {
                return Err(Error::format(lineno, "`label` must precede the tables"));
            }
            label = Some(rest.trim().to_string());
        } else if line == "add" {
            if section != Section::Header {
                return Err(Error::format(lineno, "duplicate `add` section"));
            }
            section = Section::Add;
        } else if line == "mul" {
            if section != Section::Add {
                return Err(Error::format(lineno, "`mul` must follow `add`"));
            }
            section = Section::Mul;
        } else {
            let row = line
                .split_whitespace()
                .map(|tok| tok.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::format(lineno, format!("bad table row `{line}`")))?;
            match section {
                Section::Header => return Err(Error::format(lineno, format!("unexpected line `{line}`"))),
                Section::Add => add.push(row),
                Section::Mul => mul.push(row),
            }
        }
    }
    let order = order.ok_or_else(|| Error::format(first_line, "missing `order` line"))?;
    if section != Section::Mul {
        return Err(Error::format(first_line, "missing `add` or `mul` section"));
    }
    if add.len() != order || mul.len() != order {
        return Err(Error::AxiomViolation {
            axiom: Axiom::TableShape,
            witness: vec![order, add.len(), mul.len()],
        });
    }
    make_ring(&add, &mul, label.as_deref())
}

pub fn parse_ringtab(text: &str) -> Result<FiniteRing> {
    parse_ringtab_at(text, 1)
}

pub fn read_ringtab(path: impl AsRef<std::path::Path>) -> Result<FiniteRing> {
    parse_ringtab(&std::fs::read_to_string(path)?)
}

pub fn write_ringtab_file(r: &FiniteRing, path: impl AsRef<std::path::Path>) -> Result<()> {
    std::fs::write(path, write_ringtab(r))?;
    Ok(())
}
