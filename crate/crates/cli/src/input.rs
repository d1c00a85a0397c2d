//! Reading graphs and rational matrices from files, stdin or bundled
//! fixtures.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use dgs_core::cospectral::RationalMatrix;
use dgs_core::graphio::{parse_adjacency_with_limit, parse_graph6_with_limit, DEFAULT_MAX_ORDER};
use dgs_core::{fixtures, Graph};

/// Prefix selecting a bundled fixture instead of a file, e.g. `fixture:example1`.
pub const FIXTURE_PREFIX: &str = "fixture:";

/// Contents of `source`: a path, `-` / `None` for stdin, or a fixture.
pub fn read_source(source: Option<&str>) -> Result<String> {
    match source {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("reading stdin")?;
            Ok(text)
        }
        Some(s) if s.starts_with(FIXTURE_PREFIX) => {
            let name = &s[FIXTURE_PREFIX.len()..];
            match fixtures::get(name) {
                Some(f) => Ok(f.contents.to_string()),
                None => bail!("no bundled fixture named {name:?} (see `dgs fixtures list`)"),
            }
        }
        Some(path) => std::fs::read_to_string(Path::new(path))
            .with_context(|| format!("reading {path}")),
    }
}

/// A single line of printable graph6 bytes is graph6; anything else is an
/// adjacency matrix.
pub fn looks_like_graph6(text: &str) -> bool {
    let t = text.trim();
    let body = t.strip_prefix(">>graph6<<").unwrap_or(t);
    !body.is_empty() && !body.contains('\n') && body.bytes().all(|b| (63..=126).contains(&b))
}

pub fn parse_graph(text: &str, allow_large: bool) -> Result<Graph> {
    let limit = if allow_large { usize::MAX } else { DEFAULT_MAX_ORDER };
    let g = if looks_like_graph6(text) {
        parse_graph6_with_limit(text.trim(), limit)?
    } else {
        parse_adjacency_with_limit(text, limit)?
    };
    Ok(g)
}

pub fn load_graph(source: Option<&str>, allow_large: bool) -> Result<Graph> {
    let text = read_source(source)?;
    parse_graph(&text, allow_large).with_context(|| match source {
        None | Some("-") => "parsing graph from stdin".to_string(),
        Some(s) => format!("parsing graph from {s}"),
    })
}

pub fn load_matrix(source: &str) -> Result<RationalMatrix> {
    let text = read_source(Some(source))?;
    RationalMatrix::parse(&text).with_context(|| format!("parsing matrix from {source}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_formats() {
        assert!(looks_like_graph6("IYtVAnvK?\n"));
        assert!(looks_like_graph6(">>graph6<<A_"));
        assert!(!looks_like_graph6("0 1\n1 0\n"));
        assert!(!looks_like_graph6("01\n10"));
        assert!(!looks_like_graph6("   "));
    }

    #[test]
    fn parses_both_formats() {
        let a = parse_graph("A_", false).unwrap();
        let b = parse_graph("0 1\n1 0\n", false).unwrap();
        assert_eq!(a, b);
        assert!(parse_graph("", false).is_err());
    }

    #[test]
    fn fixtures_resolve() {
        let g = load_graph(Some("fixture:example2"), false).unwrap();
        assert_eq!(g.order(), 10);
        assert!(read_source(Some("fixture:nope")).is_err());
    }
}
