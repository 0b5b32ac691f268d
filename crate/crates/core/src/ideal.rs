//! Complete-intersection and localization machinery on support families.
//!
//! A square-free monomial ideal is a complete intersection exactly when its
//! minimal generators have pairwise disjoint supports. Localizing at a
//! variable `X_i` drops `i` from every support and keeps only the
//! inclusion-minimal survivors; the local ring is a complete intersection
//! exactly when those survivors are pairwise disjoint.

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, SupportFamily};
use crate::error::{Error, Result};
use crate::set::{minimal_members, VertexSet};

/// The image of a support family under inverting the variable `X_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizedFamily {
    pub vertex: usize,
    /// `{S \ {i} : S in F}`; distinct members of an antichain stay distinct.
    pub all: Vec<VertexSet>,
    /// The inclusion-minimal members of `all`; may contain singletons.
    pub minimal: Vec<VertexSet>,
}

/// True iff the family's members are pairwise disjoint. The empty family
/// (zero ideal) counts as a complete intersection.
pub fn is_complete_intersection(family: &SupportFamily) -> bool {
    let members = family.members();
    members
        .iter()
        .enumerate()
        .all(|(k, s)| members[k + 1..].iter().all(|t| s.is_disjoint_from(*t)))
}

pub fn localize(family: &SupportFamily, vertex: usize) -> Result<LocalizedFamily> {
    if vertex < 1 || vertex > family.n() {
        return Err(Error::VertexOutOfRange {
            vertex,
            n: family.n(),
        });
    }
    let all: Vec<VertexSet> = family
        .members()
        .iter()
        .map(|s| s.without(vertex))
        .collect();
    let minimal = minimal_members(all.clone());
    Ok(LocalizedFamily {
        vertex,
        all,
        minimal,
    })
}

/// Disjointness of `min F_i`, with the offending pair on failure.
pub fn is_locally_ci_at(
    family: &SupportFamily,
    vertex: usize,
) -> Result<(bool, Option<(VertexSet, VertexSet)>)> {
    let local = localize(family, vertex)?;
    for (k, s) in local.minimal.iter().enumerate() {
        for t in &local.minimal[k + 1..] {
            if !s.is_disjoint_from(*t) {
                return Ok((false, Some((*s, *t))));
            }
        }
    }
    Ok((true, None))
}

/// Outcome of one vertex check in a gCI route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCheck {
    pub vertex: usize,
    pub ok: bool,
    /// Intersecting pair of generator supports, present iff `ok` is false.
    pub witness: Option<(VertexSet, VertexSet)>,
}

/// Per-vertex detail for [`gci_route_local`] and [`gci_route_links`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteReport {
    pub is_gci: bool,
    pub is_pure: bool,
    pub per_vertex: Vec<VertexCheck>,
}

/// Route B: Δ is gCI iff it is pure and `min F_i` is pairwise disjoint for
/// every vertex `i`.
pub fn gci_route_local(delta: &SimplicialComplex) -> RouteReport {
    let family = delta.minimal_nonfaces();
    let is_pure = delta.is_pure();
    let mut per_vertex = Vec::with_capacity(delta.n());
    for v in 1..=delta.n() {
        let (ok, witness) = is_locally_ci_at(&family, v).expect("vertex in range");
        per_vertex.push(VertexCheck {
            vertex: v,
            ok,
            witness,
        });
    }
    RouteReport {
        is_gci: is_pure && per_vertex.iter().all(|c| c.ok),
        is_pure,
        per_vertex,
    }
}

/// Route A: Δ is gCI iff it is pure and `k[lk({i})]` is a complete
/// intersection for every vertex `i`, read off as pairwise disjointness of
/// the link's minimal nonfaces within the link's vertex set.
pub fn gci_route_links(delta: &SimplicialComplex) -> RouteReport {
    let is_pure = delta.is_pure();
    let mut per_vertex = Vec::with_capacity(delta.n());
    for v in 1..=delta.n() {
        let link = delta
            .link(VertexSet::singleton(v))
            .expect("singletons are faces");
        let nonfaces = link.minimal_nonfaces();
        let mut ok = true;
        let mut witness = None;
        'outer: for (k, s) in nonfaces.members().iter().enumerate() {
            for t in &nonfaces.members()[k + 1..] {
                if !s.is_disjoint_from(*t) {
                    ok = false;
                    witness = Some((*s, *t));
                    break 'outer;
                }
            }
        }
        per_vertex.push(VertexCheck {
            vertex: v,
            ok,
            witness,
        });
    }
    RouteReport {
        is_gci: is_pure && per_vertex.iter().all(|c| c.ok),
        is_pure,
        per_vertex,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(labels: &[usize]) -> VertexSet {
        labels.iter().copied().collect()
    }

    fn family(n: usize, members: &[&[usize]]) -> SupportFamily {
        SupportFamily::new(n, members.iter().map(|m| vs(m))).unwrap()
    }

    #[test]
    fn ci_detection() {
        assert!(is_complete_intersection(&family(4, &[&[1, 2], &[3, 4]])));
        assert!(!is_complete_intersection(&family(
            4,
            &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]
        )));
        assert!(is_complete_intersection(&family(3, &[])));
    }

    #[test]
    fn localize_e1() {
        let f = family(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let local = localize(&f, 1).unwrap();
        assert_eq!(local.minimal, vec![vs(&[3]), vs(&[4])]);
    }

    #[test]
    fn localize_pentagon() {
        let f = family(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let local = localize(&f, 1).unwrap();
        let mut minimal = local.minimal;
        minimal.sort();
        assert_eq!(minimal, vec![vs(&[2]), vs(&[3, 4]), vs(&[5])]);
    }

    #[test]
    fn localize_untouched_member() {
        let f = family(3, &[&[1, 2]]);
        let local = localize(&f, 3).unwrap();
        assert_eq!(local.minimal, vec![vs(&[1, 2])]);
    }

    #[test]
    fn localize_rejects_out_of_range() {
        let f = family(3, &[&[1, 2]]);
        assert!(localize(&f, 4).is_err());
        assert!(localize(&f, 0).is_err());
    }

    #[test]
    fn locally_ci_examples() {
        let f = family(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert_eq!(is_locally_ci_at(&f, 1).unwrap(), (true, None));

        let f = family(4, &[&[1, 2, 3], &[1, 4], &[2, 4]]);
        let (ok, witness) = is_locally_ci_at(&f, 3).unwrap();
        assert!(!ok);
        let (a, b) = witness.unwrap();
        assert!(!a.is_disjoint_from(b));

        let f = family(5, &[]);
        assert_eq!(is_locally_ci_at(&f, 2).unwrap(), (true, None));
    }

    #[test]
    fn routes_agree_on_examples() {
        let e1 = family(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]).complex();
        assert!(gci_route_local(&e1).is_gci);
        assert!(gci_route_links(&e1).is_gci);

        let impure =
            SimplicialComplex::from_facets(4, [vs(&[1, 2, 3]), vs(&[3, 4])], false).unwrap();
        let r = gci_route_local(&impure);
        assert!(!r.is_gci);
        assert!(!r.is_pure);

        let pentagon = family(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]).complex();
        assert!(gci_route_local(&pentagon).is_gci);
        assert!(gci_route_links(&pentagon).is_gci);

        let bad = family(4, &[&[1, 2, 3], &[1, 4], &[2, 4]]).complex();
        assert_eq!(gci_route_links(&bad).is_gci, gci_route_local(&bad).is_gci);
        assert!(!gci_route_links(&bad).is_gci);

        let full = SimplicialComplex::full_simplex(4);
        assert!(gci_route_links(&full).is_gci);
        assert!(gci_route_local(&full).is_gci);
    }
}
