use thiserror::Error;

use crate::set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("empty facet is not allowed")]
    EmptyFacet,
    #[error("vertex {vertex} is not covered by any facet")]
    UncoveredVertex { vertex: usize },
    #[error("singleton generator {0} would delete a vertex")]
    SingletonMember(VertexSet),
    #[error("support family is not an antichain: {inner} is contained in {outer}")]
    NotAntichain { inner: VertexSet, outer: VertexSet },
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),
    #[error("vertex sets overlap in {0}; join requires disjoint complexes")]
    OverlappingJoin(VertexSet),
    #[error("{0} is not a member of the family, or has fewer than 3 vertices")]
    NotABigMember(VertexSet),
    #[error("boundary dimension {k} out of range for a complex of dimension {dim}")]
    DimensionOutOfRange { k: isize, dim: isize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exhaustive enumeration supports n <= {max}, got n = {n}")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("the lemma suite requires the members to cover {{1..n}}; vertex {vertex} is missing")]
    CoverViolation { vertex: usize },
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("input must declare exactly one of `facets` or `generators`")]
    AmbiguousInput,
    #[error("classifier routes disagree: links={links}, local={local}, theorem={theorem}")]
    RouteDisagreement {
        links: bool,
        local: bool,
        theorem: bool,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
