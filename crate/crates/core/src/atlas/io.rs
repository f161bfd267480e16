//! The `atlas v1` file format.
//!
//! ```text
//! atlas v1
//! order 2
//! count 2
//! <certificate hex>
//! <certificate hex>
//!
//! ringtab 1
//! ...
//!
//! ringtab 1
//! ...
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::ring::{parse_ringtab_at, write_ringtab};
use crate::structure::{ring_canonical_certificate, RingCertificate};

use super::AtlasEntry;

pub const MAGIC: &str = "atlas v1";

/// Entries must all have order `order`.
pub fn write_atlas(order: u64, entries: &[AtlasEntry]) -> String {
    let mut out = format!("{MAGIC}\norder {order}\ncount {}\n", entries.len());
    for e in entries {
        out.push_str(&e.certificate.to_hex());
        out.push('\n');
    }
    for e in entries {
        out.push('\n');
        out.push_str(&write_ringtab(&e.ring));
    }
    out
}

pub fn save_atlas(order: u64, entries: &[AtlasEntry], path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_atlas(order, entries))?;
    Ok(())
}

/// Parses an atlas file, re-deriving every certificate and checking it
/// against the index. An empty file is an empty atlas.
pub fn parse_atlas(text: &str) -> Result<Vec<AtlasEntry>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let lines: Vec<&str> = text.lines().collect();
    let header = |i: usize, key: &str| -> Result<u64> {
        lines
            .get(i)
            .and_then(|l| l.trim().strip_prefix(key))
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::format(i + 1, format!("expected `{key}<n>`")))
    };
    if lines[0].trim() != MAGIC {
        return Err(Error::format(1, format!("expected `{MAGIC}`")));
    }
    let order = header(1, "order ")?;
    let count = header(2, "count ")? as usize;
    let mut index = Vec::with_capacity(count);
    for i in 3..3 + count {
        let line = lines.get(i).ok_or_else(|| Error::format(i + 1, "missing certificate line"))?;
        index.push(RingCertificate::from_hex(line).map_err(|e| Error::format(i + 1, e.to_string()))?);
    }

    // ringtab blocks separated by blank lines
    let mut blocks: Vec<(usize, String)> = Vec::new();
    let mut current: Option<(usize, String)> = None;
    for (i, line) in lines.iter().enumerate().skip(3 + count) {
        if line.trim().is_empty() {
            blocks.extend(current.take());
        } else {
            let block = current.get_or_insert_with(|| (i + 1, String::new()));
            block.1.push_str(line);
            block.1.push('\n');
        }
    }
    blocks.extend(current);
    if blocks.len() != count {
        return Err(Error::format(
            lines.len(),
            format!("index lists {count} rings but {} tables follow", blocks.len()),
        ));
    }
    let mut entries = Vec::with_capacity(count);
    for ((line, block), cert) in blocks.iter().zip(index) {
        let ring = parse_ringtab_at(block, *line)?;
        if ring.order() as u64 != order {
            return Err(Error::format(*line, format!("ring of order {} in an order-{order} atlas", ring.order())));
        }
        if ring_canonical_certificate(&ring)? != cert {
            return Err(Error::format(*line, "table does not match its indexed certificate"));
        }
        entries.push(AtlasEntry::new(ring)?);
    }
    Ok(entries)
}

pub fn load_atlas(path: impl AsRef<Path>) -> Result<Vec<AtlasEntry>> {
    parse_atlas(&std::fs::read_to_string(path)?)
}
