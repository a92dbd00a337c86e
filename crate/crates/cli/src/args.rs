//! Argument parsing helpers: target specs, graph specs, weights.

use homx_core::error::{Error, Result};
use homx_core::graph::{family, parse_graph6, parse_rational, SimpleGraph, TargetGraph};
use homx_core::ExactRational;

/// Parses a target spec: a built-in alias (`ind`, `wr`, `hc:k`, `kq:q`,
/// `kqloop:q`), a JSON document, or the inline `rows/joined/by/slashes`
/// form.
pub fn parse_target(spec: &str) -> Result<TargetGraph> {
    let spec = spec.trim();
    match spec {
        "ind" => return Ok(family::h_ind()),
        "wr" => return Ok(family::h_wr()),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("hc:") {
        return family::hard_core(parse_usize(rest, "hc:k")?);
    }
    if let Some(rest) = spec.strip_prefix("kq:") {
        return family::complete_target(parse_usize(rest, "kq:q")?);
    }
    if let Some(rest) = spec.strip_prefix("kqloop:") {
        return family::looped_complete(parse_usize(rest, "kqloop:q")?);
    }
    if spec.starts_with('{') {
        return TargetGraph::parse_document(spec);
    }
    TargetGraph::parse_inline(spec)
}

/// Reads a target from a file holding either a JSON document or an inline
/// adjacency string.
pub fn parse_target_file(path: &str) -> Result<TargetGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("cannot read target file {path}: {e}")))?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        TargetGraph::parse_document(trimmed)
    } else {
        TargetGraph::parse_inline(trimmed)
    }
}

/// Applies a comma-separated weight list (`"1,3/2,2"`) to a target.
pub fn apply_weights(h: TargetGraph, weights: &str) -> Result<TargetGraph> {
    let parsed: Result<Vec<ExactRational>> =
        weights.split(',').map(|w| parse_rational(w.trim())).collect();
    h.with_weights(parsed?)
}

/// A counted-graph argument: either a named family kept symbolic (so closed
/// forms can be used) or an explicit graph.
#[derive(Debug, Clone)]
pub enum GraphSpec {
    Cycle(usize),
    Path(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Explicit(SimpleGraph),
}

impl GraphSpec {
    /// Materialises the spec as a concrete graph.
    pub fn build(&self) -> Result<SimpleGraph> {
        match *self {
            GraphSpec::Cycle(n) => family::cycle(n),
            GraphSpec::Path(n) => family::path(n),
            GraphSpec::Star(n) => family::star(n),
            GraphSpec::Complete(n) => family::complete(n),
            GraphSpec::CompleteBipartite(a, b) => family::complete_bipartite(a, b),
            GraphSpec::Explicit(ref g) => Ok(g.clone()),
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            GraphSpec::Cycle(n) => format!("cycle:{n}"),
            GraphSpec::Path(n) => format!("path:{n}"),
            GraphSpec::Star(n) => format!("star:{n}"),
            GraphSpec::Complete(n) => format!("complete:{n}"),
            GraphSpec::CompleteBipartite(a, b) => format!("cbip:{a},{b}"),
            GraphSpec::Explicit(ref g) => format!("g6:{}", homx_core::graph::write_graph6(g)),
        }
    }
}

/// Parses `cycle:n`, `path:n`, `star:n`, `complete:n`, `cbip:a,b`, or
/// `g6:<line>`.
pub fn parse_graph_spec(spec: &str) -> Result<GraphSpec> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("cycle:") {
        return Ok(GraphSpec::Cycle(parse_usize(rest, "cycle:n")?));
    }
    if let Some(rest) = spec.strip_prefix("path:") {
        return Ok(GraphSpec::Path(parse_usize(rest, "path:n")?));
    }
    if let Some(rest) = spec.strip_prefix("star:") {
        return Ok(GraphSpec::Star(parse_usize(rest, "star:n")?));
    }
    if let Some(rest) = spec.strip_prefix("complete:") {
        return Ok(GraphSpec::Complete(parse_usize(rest, "complete:n")?));
    }
    if let Some(rest) = spec.strip_prefix("cbip:") {
        let (a, b) = rest.split_once(',').ok_or_else(|| {
            Error::Parameter("cbip takes two sizes, e.g. cbip:2,3".into())
        })?;
        return Ok(GraphSpec::CompleteBipartite(
            parse_usize(a, "cbip:a")?,
            parse_usize(b, "cbip:b")?,
        ));
    }
    if let Some(rest) = spec.strip_prefix("g6:") {
        return Ok(GraphSpec::Explicit(parse_graph6(rest)?));
    }
    Err(Error::Parameter(format!(
        "unrecognised graph spec {spec:?}; expected cycle:n, path:n, star:n, complete:n, \
         cbip:a,b, or g6:<line>"
    )))
}

/// Reads one graph6 line from a file.
pub fn parse_graph_file(path: &str) -> Result<SimpleGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("cannot read graph file {path}: {e}")))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Error::Parameter(format!("graph file {path} is empty")))?;
    parse_graph6(line)
}

fn parse_usize(text: &str, what: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::Parameter(format!("bad integer for {what}: {text:?}")))
}
