//! Text format for rooted multigraphs.
//!
//! A graph file is a TOML document with two keys:
//!
//! ```toml
//! # K_3 with a doubled inner edge
//! n = 2
//! edges = [
//!   [0, 1, 1],
//!   [0, 2, 1],
//!   [1, 2, 2],
//! ]
//! ```
//!
//! `n` is the number of non-root vertices (at least 1); vertices are
//! `0..=n` with root `0`. Each entry of `edges` is a `[u, v, multiplicity]`
//! triple of nonnegative integers with `u != v`; repeated pairs accumulate
//! and the order within a pair does not matter. The file is UTF-8.

use serde::Deserialize;
use toml::Spanned;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: Spanned<i64>,
    #[serde(default)]
    edges: Vec<Spanned<Vec<i64>>>,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let doc: GraphDoc = toml::from_str(text).map_err(|e| Error::Parse {
        line: e.span().map_or(1, |s| line_of(text, s.start)),
        message: e.message().to_string(),
    })?;
    let at = |span: std::ops::Range<usize>, message: String| Error::Parse {
        line: line_of(text, span.start),
        message,
    };
    let n = *doc.n.get_ref();
    if n < 1 {
        return Err(at(doc.n.span(), format!("n must be at least 1, got {n}")));
    }
    let n = n as usize;
    let mut g = Multigraph::empty(n)?;
    for edge in &doc.edges {
        let triple = edge.get_ref();
        if triple.len() != 3 {
            return Err(at(
                edge.span(),
                format!("edge must be [u, v, multiplicity], got {} entries", triple.len()),
            ));
        }
        let (u, v, m) = (triple[0], triple[1], triple[2]);
        if u < 0 || v < 0 || m < 0 {
            return Err(at(edge.span(), format!("negative entry in [{u}, {v}, {m}]")));
        }
        if u as usize > n || v as usize > n {
            return Err(at(edge.span(), format!("vertex out of range 0..={n} in [{u}, {v}, {m}]")));
        }
        if u == v && m > 0 {
            return Err(at(edge.span(), format!("loop at vertex {u}")));
        }
        g.add_edges(u as usize, v as usize, m as u64)?;
    }
    Ok(g)
}

/// Serializes with one `[u, v, m]` line per adjacent pair, `u < v`.
pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("n = {}\nedges = [\n", g.n());
    for (u, v, m) in g.edges() {
        out.push_str(&format!("  [{u}, {v}, {m}],\n"));
    }
    out.push_str("]\n");
    out
}
