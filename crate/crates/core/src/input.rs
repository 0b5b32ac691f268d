//! The input document format: a tiny hand-writable text grammar and an
//! equivalent JSON form.
//!
//! ```text
//! n=4
//! facets: {1,2} {3,4}
//! ```
//!
//! or, for an ideal given by its square-free generators,
//!
//! ```text
//! n=5
//! generators: x1*x2 x2*x3 x3*x4 x4*x5 x5*x1
//! ```
//!
//! JSON input carries the same fields: `{"n": 4, "facets": [[1,2],[3,4]]}`.
//! Lines starting with `#` are comments.

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, SupportFamily};
use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDocument {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<VertexSet>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<VertexSet>>,
}

impl InputDocument {
    pub fn from_facets(n: usize, facets: Vec<VertexSet>) -> Self {
        InputDocument {
            n,
            facets: Some(facets),
            generators: None,
        }
    }

    pub fn from_generators(n: usize, generators: Vec<VertexSet>) -> Self {
        InputDocument {
            n,
            facets: None,
            generators: Some(generators),
        }
    }

    /// The complex described by the document; facets are taken literally,
    /// generators go through the nonface dictionary.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        match (&self.facets, &self.generators) {
            (Some(facets), None) => {
                SimplicialComplex::from_facets(self.n, facets.iter().copied(), false)
            }
            (None, Some(generators)) => {
                Ok(SupportFamily::new(self.n, generators.iter().copied())?.complex())
            }
            _ => Err(Error::AmbiguousInput),
        }
    }

    /// The generator-support family: literal for generator documents, the
    /// minimal nonfaces for facet documents.
    pub fn family(&self) -> Result<SupportFamily> {
        match (&self.facets, &self.generators) {
            (Some(_), None) => Ok(self.complex()?.minimal_nonfaces()),
            (None, Some(generators)) => SupportFamily::new(self.n, generators.iter().copied()),
            _ => Err(Error::AmbiguousInput),
        }
    }

    /// Canonical text form; `parse_input(doc.to_text())` round-trips.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        match (&self.facets, &self.generators) {
            (Some(facets), _) => {
                out.push_str("facets:");
                for f in facets {
                    out.push(' ');
                    out.push_str(&f.to_string());
                }
            }
            (_, Some(generators)) => {
                out.push_str("generators:");
                for g in generators {
                    out.push(' ');
                    let term: Vec<String> = g.iter().map(|v| format!("x{v}")).collect();
                    out.push_str(&term.join("*"));
                }
            }
            _ => {}
        }
        out.push('\n');
        out
    }
}

/// Parses either the text grammar or a JSON object with the same fields.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return parse_json(text);
    }
    parse_text(text)
}

fn parse_json(text: &str) -> Result<InputDocument> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    validate(&doc, 1, 1)?;
    Ok(doc)
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn parse_text(text: &str) -> Result<InputDocument> {
    let mut n: Option<usize> = None;
    let mut n_line = 0;
    let mut facets: Option<Vec<VertexSet>> = None;
    let mut generators: Option<Vec<VertexSet>> = None;
    let mut body_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end();
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if n.is_some() {
                return Err(err(line_no, 1, "duplicate `n=` declaration"));
            }
            n = Some(rest.trim().parse().map_err(|_| {
                err(line_no, 3, format!("expected an integer after `n=`, found `{}`", rest.trim()))
            })?);
            n_line = line_no;
            continue;
        }
        if let Some(rest) = line.strip_prefix("facets:") {
            if facets.is_some() || generators.is_some() {
                return Err(err(line_no, 1, "duplicate facets/generators declaration"));
            }
            facets = Some(parse_facet_terms(rest, line_no, "facets:".len() + 1)?);
            body_line = line_no;
            continue;
        }
        if let Some(rest) = line.strip_prefix("generators:") {
            if facets.is_some() || generators.is_some() {
                return Err(err(line_no, 1, "duplicate facets/generators declaration"));
            }
            generators = Some(parse_generator_terms(rest, line_no, "generators:".len() + 1)?);
            body_line = line_no;
            continue;
        }
        return Err(err(
            line_no,
            1,
            format!("expected `n=`, `facets:` or `generators:`, found `{line}`"),
        ));
    }

    let n = n.ok_or_else(|| err(1, 1, "missing `n=` declaration"))?;
    if facets.is_none() && generators.is_none() {
        return Err(err(n_line + 1, 1, "missing `facets:` or `generators:` declaration"));
    }
    let doc = InputDocument {
        n,
        facets,
        generators,
    };
    validate(&doc, body_line, 1)?;
    Ok(doc)
}

/// Splits `rest` on whitespace, tracking the column of each token within the
/// original line (`base_col` is the 1-based column where `rest` starts).
fn tokens_with_columns(rest: &str, base_col: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in rest.split_whitespace() {
        let pos = rest[offset..].find(token).expect("token came from rest") + offset;
        out.push((base_col + pos, token));
        offset = pos + token.len();
    }
    out
}

fn parse_facet_terms(rest: &str, line: usize, base_col: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for (col, token) in tokens_with_columns(rest, base_col) {
        let inner = token
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| err(line, col, format!("facet term `{token}` must look like {{1,2}}")))?;
        let mut set = VertexSet::EMPTY;
        for part in inner.split(',') {
            let v: usize = part.trim().parse().map_err(|_| {
                err(line, col, format!("invalid vertex `{part}` in facet `{token}`"))
            })?;
            if !(1..=32).contains(&v) {
                return Err(err(line, col, format!("vertex {v} out of range in `{token}`")));
            }
            set = set.with(v);
        }
        out.push(set);
    }
    Ok(out)
}

fn parse_generator_terms(rest: &str, line: usize, base_col: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for (col, token) in tokens_with_columns(rest, base_col) {
        let mut set = VertexSet::EMPTY;
        for factor in token.split('*') {
            let v: usize = factor
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| {
                    err(line, col, format!("generator term `{token}` must look like x1*x2"))
                })?;
            if !(1..=32).contains(&v) {
                return Err(err(line, col, format!("vertex {v} out of range in `{token}`")));
            }
            set = set.with(v);
        }
        if set.len() < 2 {
            return Err(err(line, col, format!("singleton generator `{token}` would delete a vertex")));
        }
        out.push(set);
    }
    Ok(out)
}

fn validate(doc: &InputDocument, line: usize, col: usize) -> Result<()> {
    if doc.facets.is_some() == doc.generators.is_some() {
        return Err(Error::AmbiguousInput);
    }
    let full = VertexSet::full(doc.n.min(32));
    if doc.n > 32 {
        return Err(err(line, col, format!("n={} exceeds the supported maximum of 32", doc.n)));
    }
    let sets = doc.facets.as_ref().or(doc.generators.as_ref()).unwrap();
    for s in sets {
        if !s.is_subset_of(full) {
            let v = s.difference(full).min().unwrap();
            return Err(err(line, col, format!("vertex {v} out of range 1..={}", doc.n)));
        }
        if doc.generators.is_some() && s.len() < 2 {
            return Err(err(line, col, format!("singleton generator {s} would delete a vertex")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(labels: &[usize]) -> VertexSet {
        labels.iter().copied().collect()
    }

    #[test]
    fn parses_facet_document() {
        let doc = parse_input("n=4\nfacets: {1,2} {3,4}\n").unwrap();
        assert_eq!(doc.n, 4);
        assert_eq!(doc.facets, Some(vec![vs(&[1, 2]), vs(&[3, 4])]));
        let delta = doc.complex().unwrap();
        assert_eq!(delta.facets(), &[vs(&[1, 2]), vs(&[3, 4])]);
    }

    #[test]
    fn parses_generator_document() {
        let doc = parse_input("n=5\ngenerators: x1*x2 x2*x3 x3*x4 x4*x5 x5*x1\n").unwrap();
        let family = doc.family().unwrap();
        assert_eq!(family.len(), 5);
        assert!(family.contains(vs(&[1, 5])));
    }

    #[test]
    fn parses_json_document() {
        let doc = parse_input(r#"{"n": 4, "facets": [[1,2],[3,4]]}"#).unwrap();
        assert_eq!(doc.n, 4);
        assert_eq!(doc.facets, Some(vec![vs(&[1, 2]), vs(&[3, 4])]));
    }

    #[test]
    fn rejects_singleton_generator() {
        let e = parse_input("n=3\ngenerators: x1\n").unwrap_err();
        match e {
            Error::Parse { line, msg, .. } => {
                assert_eq!(line, 2);
                assert!(msg.contains("singleton"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        let e = parse_input("n=3\nfacets: {1,2} {3,9}\n").unwrap_err();
        match e {
            Error::Parse { line, msg, .. } => {
                assert_eq!(line, 2);
                assert!(msg.contains("out of range"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_duplicates_and_garbage() {
        assert!(parse_input("n=3\nn=4\nfacets: {1,2,3}\n").is_err());
        assert!(parse_input("n=3\nfacets: {1,2,3}\ngenerators: x1*x2\n").is_err());
        let e = parse_input("n=3\nfacetz: {1,2,3}\n").unwrap_err();
        match e {
            Error::Parse { line, col, .. } => {
                assert_eq!((line, col), (2, 1));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn reports_token_column() {
        let e = parse_input("n=4\nfacets: {1,2} {3;4}\n").unwrap_err();
        match e {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 15); // the second facet term
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn round_trips_through_text() {
        let docs = [
            InputDocument::from_facets(4, vec![vs(&[1, 2]), vs(&[3, 4])]),
            InputDocument::from_generators(5, vec![vs(&[1, 2]), vs(&[2, 3])]),
        ];
        for doc in docs {
            assert_eq!(parse_input(&doc.to_text()).unwrap(), doc);
        }
    }
}
