//! Turning command-line graph arguments into graphs.

use std::fs;

use anyhow::{Context, Result};
use wcprod::families::FamilySpec;
use wcprod::formats::{from_graph6, parse_graph_auto};
use wcprod::Graph;

/// A graph argument: `@path` (graph6 or edge list), a family spec such as
/// `cycle:7`, or a bare graph6 string.
pub fn read_graph(arg: &str) -> Result<Graph> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
        return parse_graph_auto(&text).with_context(|| format!("cannot parse {path}"));
    }
    if arg.contains(':') {
        let spec: FamilySpec = arg.parse()?;
        return Ok(spec.build()?);
    }
    from_graph6(arg).with_context(|| format!("{arg:?} is neither a family spec nor graph6"))
}
