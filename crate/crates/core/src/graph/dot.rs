//! DOT export and a reader for the subset of DOT that export produces.

use crate::error::{Error, Result};

use super::SimpleGraph;

/// Vertices in index order, then edges in sorted order.
pub fn export_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  v{v} [label=\"{}\"];\n", escape(&g.label(v))));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  v{a} -- v{b};\n"));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Reads `graph { ... }` with `vN [label="..."];` node lines and
/// `vA -- vB;` edge lines. Nodes mentioned only in edges are created too.
pub fn parse_dot(text: &str) -> Result<SimpleGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with("//") && !l.starts_with('#'));
    match lines.next() {
        Some((_, l)) if l.trim_end_matches('{').trim() == "graph" || l.starts_with("graph ") && l.ends_with('{') => {}
        Some((n, _)) => return Err(Error::format(n, "expected `graph {`")),
        None => return Err(Error::format(0, "empty DOT input")),
    }
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut edges = Vec::new();
    let mut closed = false;
    for (n, line) in lines {
        if closed {
            return Err(Error::format(n, "content after closing brace"));
        }
        if line == "}" {
            closed = true;
            continue;
        }
        let body = line.trim_end_matches(';').trim();
        if let Some((a, b)) = body.split_once("--") {
            let a = vertex(a.trim(), n)?;
            let b = vertex(b.trim(), n)?;
            grow(&mut labels, a.max(b));
            edges.push((a, b));
        } else {
            let (name, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
            let v = vertex(name, n)?;
            grow(&mut labels, v);
            let rest = rest.trim();
            if let Some(inner) = rest.strip_prefix("[label=\"").and_then(|s| s.strip_suffix("\"]")) {
                labels[v] = Some(inner.replace("\\\"", "\"").replace("\\\\", "\\"));
            } else if !rest.is_empty() {
                return Err(Error::format(n, "unsupported node attributes"));
            }
        }
    }
    if !closed {
        return Err(Error::format(0, "missing closing brace"));
    }
    let count = labels.len();
    let g = SimpleGraph::new(count, edges).map_err(|e| Error::format(0, &e.to_string()))?;
    if labels.iter().all(Option::is_some) && count > 0 {
        g.with_labels(labels.into_iter().map(Option::unwrap).collect())
    } else {
        Ok(g)
    }
}

fn vertex(name: &str, line: usize) -> Result<usize> {
    name.strip_prefix('v')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::format(line, &format!("bad vertex name `{name}`")))
}

fn grow(labels: &mut Vec<Option<String>>, v: usize) {
    if labels.len() <= v {
        labels.resize(v + 1, None);
    }
}
