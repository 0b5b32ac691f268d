//! The combinatorial characterization of generalized complete intersections:
//! the skeleton graph, cover sets, the four theorem conditions with
//! re-checkable witnesses, clique-complex reconstruction, clique-based
//! purity, and the theorem-route classifier.

use serde::{Deserialize, Serialize};

use crate::complex::{restrict_facets, SimplicialComplex, SupportFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{is_complete_intersection, is_locally_ci_at, localize};
use crate::set::VertexSet;

/// The graph `G_Δ` on `{1..n}` whose edges are exactly the pairs that are
/// NOT members of the family; this is the 1-skeleton of Δ (the complement
/// graph, for edge ideals).
pub fn complement_graph(family: &SupportFamily) -> Graph {
    let n = family.n();
    let mut g = Graph::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if !family.contains_edge(i, j) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// `C(S) = {i : {i,j} ∈ F for some j ∈ S}`, defined for big members
/// (size >= 3).
pub fn big_cover_set(family: &SupportFamily, s: VertexSet) -> Result<VertexSet> {
    if s.len() < 3 || !family.contains(s) {
        return Err(Error::NotABigMember(s));
    }
    Ok(cover_set_raw(family, s))
}

fn cover_set_raw(family: &SupportFamily, s: VertexSet) -> VertexSet {
    let mut cover = VertexSet::EMPTY;
    for i in 1..=family.n() {
        if s.iter().any(|j| j != i && family.contains_edge(i, j)) {
            cover = cover.with(i);
        }
    }
    cover
}

/// A length-4 path through size-2 members: four pairwise-distinct edges,
/// each meeting the next. The path is only required to be consecutively
/// intersecting, not a vertex chain, matching how the converse argument
/// joins paths through a shared member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    /// E_1, ..., E_4; each a member of the family.
    pub edges: Vec<VertexSet>,
}

impl PathWitness {
    /// The start vertex: the vertex of E_1 outside E_2 (unique, since
    /// distinct edges share at most one vertex).
    pub fn start(&self) -> Option<usize> {
        let (e1, e2) = (*self.edges.first()?, *self.edges.get(1)?);
        e1.difference(e2).min()
    }

    /// Re-checks the path against a raw family: four pairwise-distinct edge
    /// members with consecutive nonempty intersections, and no chord from
    /// the start vertex into E_3 ∪ E_4.
    pub fn is_valid_chordless(&self, family: &SupportFamily) -> bool {
        let e = &self.edges;
        if e.len() != 4 {
            return false;
        }
        for (k, s) in e.iter().enumerate() {
            if s.len() != 2 || !family.contains(*s) || e[k + 1..].contains(s) {
                return false;
            }
        }
        if (0..3).any(|p| e[p].is_disjoint_from(e[p + 1])) {
            return false;
        }
        let Some(start) = self.start() else {
            return false;
        };
        e[2].union(e[3])
            .without(start)
            .iter()
            .all(|l| !family.contains_edge(start, l))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConditionId {
    #[serde(rename = "1a")]
    OneA,
    #[serde(rename = "1b")]
    OneB,
    #[serde(rename = "1c")]
    OneC,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "3")]
    Three,
    #[serde(rename = "4")]
    Four,
}

/// The violating object attached to a failed condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// Condition 1a: a big member whose cover set is empty or meets it.
    EmptyCoverSet { s: VertexSet },
    CoverSetMeetsMember { s: VertexSet, overlap: VertexSet },
    /// Condition 1b: `{i, j}` is not a member although `i` covers `s`.
    MissingCoverEdge { s: VertexSet, i: usize, j: usize },
    /// Condition 1b: a member meeting `s` that is not a cover edge.
    StrayMember { s: VertexSet, t: VertexSet },
    /// Condition 1c: `k` outside `C(s) ∪ s` missing an edge to `i ∈ C(s)`.
    MissingOutsideEdge { s: VertexSet, i: usize, k: usize },
    /// Condition 2: a pair in different edge components.
    DisconnectedPair { i: usize, j: usize },
    /// Condition 3: a length-4 path with no chord from its start vertex
    /// into the last two edges.
    ChordlessPath(PathWitness),
    /// Condition 4: the table of maximal admissible clique sizes, r_1..r_n.
    CliqueSizeTable { sizes: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub id: ConditionId,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl ConditionResult {
    fn ok(id: ConditionId) -> Self {
        ConditionResult {
            id,
            holds: true,
            witness: None,
        }
    }

    fn fail(id: ConditionId, witness: Witness) -> Self {
        ConditionResult {
            id,
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Theorem condition 1 (a)-(c), evaluated for every big member; vacuously
/// true when no big member exists. The first violation per sub-condition is
/// reported.
pub fn check_condition1(family: &SupportFamily) -> Vec<ConditionResult> {
    let mut a = ConditionResult::ok(ConditionId::OneA);
    let mut b = ConditionResult::ok(ConditionId::OneB);
    let mut c = ConditionResult::ok(ConditionId::OneC);
    for s in family.big_members() {
        let cover = cover_set_raw(family, s);
        if a.holds {
            if cover.is_empty() {
                a = ConditionResult::fail(ConditionId::OneA, Witness::EmptyCoverSet { s });
            } else if !cover.is_disjoint_from(s) {
                a = ConditionResult::fail(
                    ConditionId::OneA,
                    Witness::CoverSetMeetsMember {
                        s,
                        overlap: cover.intersection(s),
                    },
                );
            }
        }
        if b.holds {
            'b_scan: {
                for i in cover.iter() {
                    for j in s.iter() {
                        if !family.contains_edge(i, j) {
                            b = ConditionResult::fail(
                                ConditionId::OneB,
                                Witness::MissingCoverEdge { s, i, j },
                            );
                            break 'b_scan;
                        }
                    }
                }
                for t in family.members().iter().copied() {
                    if t == s || t.is_disjoint_from(s) {
                        continue;
                    }
                    let is_cover_edge = t.len() == 2 && {
                        let mut it = t.iter();
                        let (x, y) = (it.next().unwrap(), it.next().unwrap());
                        (cover.contains(x) && s.contains(y)) || (cover.contains(y) && s.contains(x))
                    };
                    if !is_cover_edge {
                        b = ConditionResult::fail(ConditionId::OneB, Witness::StrayMember { s, t });
                        break 'b_scan;
                    }
                }
            }
        }
        if c.holds {
            let outside = VertexSet::full(family.n()).difference(cover.union(s));
            'c_scan: for k in outside.iter() {
                for i in cover.iter() {
                    if !family.contains_edge(i, k) {
                        c = ConditionResult::fail(
                            ConditionId::OneC,
                            Witness::MissingOutsideEdge { s, i, k },
                        );
                        break 'c_scan;
                    }
                }
            }
        }
    }
    vec![a, b, c]
}

/// Theorem condition 2: every pair of vertices in `{1..n}` is linked by a
/// path of size-2 members.
pub fn check_condition2(family: &SupportFamily) -> ConditionResult {
    let n = family.n();
    if n <= 1 {
        return ConditionResult::ok(ConditionId::Two);
    }
    // BFS from vertex 1 over edge members
    let mut reached = VertexSet::singleton(1);
    let mut frontier = vec![1usize];
    while let Some(v) = frontier.pop() {
        for w in 1..=n {
            if !reached.contains(w) && family.contains_edge(v, w) {
                reached = reached.with(w);
                frontier.push(w);
            }
        }
    }
    match (1..=n).find(|&v| !reached.contains(v)) {
        None => ConditionResult::ok(ConditionId::Two),
        Some(j) => ConditionResult::fail(ConditionId::Two, Witness::DisconnectedPair { i: 1, j }),
    }
}

/// Theorem condition 3: every length-4 path (four pairwise-distinct edges,
/// consecutive ones intersecting) has a chord from its start vertex — the
/// vertex of the first edge outside the second — into the union of the last
/// two edges. Vertex-chain paths are the special case where consecutive
/// edges meet in a walk; the looser reading is what the converse argument
/// relies on when it concatenates paths through a shared member.
pub fn check_condition3(family: &SupportFamily) -> ConditionResult {
    let edges: Vec<VertexSet> = family.edges().collect();
    let m = edges.len();
    for a in 0..m {
        for b in 0..m {
            if b == a || edges[a].is_disjoint_from(edges[b]) {
                continue;
            }
            let start = edges[a].difference(edges[b]).min().expect("distinct edges");
            for c in 0..m {
                if c == a || c == b || edges[b].is_disjoint_from(edges[c]) {
                    continue;
                }
                for d in 0..m {
                    if d == a || d == b || d == c || edges[c].is_disjoint_from(edges[d]) {
                        continue;
                    }
                    let tail = edges[c].union(edges[d]).without(start);
                    if !tail.iter().any(|l| family.contains_edge(start, l)) {
                        return ConditionResult::fail(
                            ConditionId::Three,
                            Witness::ChordlessPath(PathWitness {
                                edges: vec![edges[a], edges[b], edges[c], edges[d]],
                            }),
                        );
                    }
                }
            }
        }
    }
    ConditionResult::ok(ConditionId::Three)
}

/// The clique (flag) complex of a graph, by facets = maximal cliques.
pub fn simp(graph: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_facets(graph.n(), graph.maximal_cliques(), false)
        .expect("maximal cliques cover every vertex")
}

/// Removes from `gamma` every face containing a big (size >= 3) member of
/// the family, returning the result by facets.
pub fn red(family: &SupportFamily, gamma: &SimplicialComplex) -> SimplicialComplex {
    let big: Vec<VertexSet> = family.big_members().collect();
    restrict_facets(gamma, &big)
}

/// `Red(F, Simp(G_Δ))`: rebuilds Δ from its generator supports through the
/// skeleton graph. Agrees with [`SupportFamily::complex`] on every valid
/// family.
pub fn reconstruct(family: &SupportFamily) -> SimplicialComplex {
    red(family, &simp(&complement_graph(family)))
}

/// Theorem condition 4: the maximal sizes r_i of cliques of `G_Δ` through
/// each vertex that contain no big member must be constant. The witness on
/// failure is the full r_i table.
pub fn check_condition4(family: &SupportFamily) -> ConditionResult {
    let sizes = admissible_clique_sizes(family);
    if sizes.windows(2).all(|w| w[0] == w[1]) {
        ConditionResult::ok(ConditionId::Four)
    } else {
        ConditionResult::fail(ConditionId::Four, Witness::CliqueSizeTable { sizes })
    }
}

/// r_i for every vertex, via maximal clique enumeration on `G_Δ` followed by
/// removal of big members inside each clique.
pub fn admissible_clique_sizes(family: &SupportFamily) -> Vec<usize> {
    let n = family.n();
    let admissible = reconstruct(family);
    let mut sizes = vec![0usize; n];
    for f in admissible.facets() {
        for v in f.iter() {
            sizes[v - 1] = sizes[v - 1].max(f.len());
        }
    }
    sizes
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremBranch {
    /// The generators are pairwise disjoint (or absent): gCI iff pure.
    CompleteIntersection,
    /// Δ has cone points and is not a complete intersection: never gCI.
    NotCore,
    /// Δ = core Δ, not CI: the four conditions decide.
    Conditions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremClassification {
    pub is_gci: bool,
    pub branch: TheoremBranch,
    pub conditions: Vec<ConditionResult>,
}

/// Route C: the combinatorial classifier. Complete intersections are gCI
/// exactly when pure; complexes with cone points are gCI only if CI; for
/// core complexes the four conditions are evaluated and conjoined.
pub fn classify_theorem(delta: &SimplicialComplex) -> TheoremClassification {
    let family = delta.minimal_nonfaces();
    if is_complete_intersection(&family) {
        return TheoremClassification {
            is_gci: delta.is_pure(),
            branch: TheoremBranch::CompleteIntersection,
            conditions: Vec::new(),
        };
    }
    if delta.core_vertices() != delta.vertices() {
        return TheoremClassification {
            is_gci: false,
            branch: TheoremBranch::NotCore,
            conditions: Vec::new(),
        };
    }
    let mut conditions = check_condition1(&family);
    conditions.push(check_condition2(&family));
    conditions.push(check_condition3(&family));
    conditions.push(check_condition4(&family));
    TheoremClassification {
        is_gci: conditions.iter().all(|c| c.holds),
        branch: TheoremBranch::Conditions,
        conditions,
    }
}

/// Independent re-check of a failed condition's witness against the raw
/// family. Used by the oracle and the CLI to keep mismatch reports honest.
pub fn witness_is_valid(family: &SupportFamily, result: &ConditionResult) -> bool {
    let Some(witness) = &result.witness else {
        return result.holds;
    };
    match witness {
        Witness::EmptyCoverSet { s } => {
            family.contains(*s) && s.len() >= 3 && cover_set_raw(family, *s).is_empty()
        }
        Witness::CoverSetMeetsMember { s, overlap } => {
            family.contains(*s)
                && !overlap.is_empty()
                && overlap.is_subset_of(cover_set_raw(family, *s).intersection(*s))
        }
        Witness::MissingCoverEdge { s, i, j } => {
            family.contains(*s)
                && cover_set_raw(family, *s).contains(*i)
                && s.contains(*j)
                && !family.contains_edge(*i, *j)
        }
        Witness::StrayMember { s, t } => {
            let cover = cover_set_raw(family, *s);
            let is_cover_edge = t.len() == 2 && {
                let mut it = t.iter();
                let (x, y) = (it.next().unwrap(), it.next().unwrap());
                (cover.contains(x) && s.contains(y)) || (cover.contains(y) && s.contains(x))
            };
            family.contains(*s)
                && family.contains(*t)
                && *t != *s
                && !t.is_disjoint_from(*s)
                && !is_cover_edge
        }
        Witness::MissingOutsideEdge { s, i, k } => {
            let cover = cover_set_raw(family, *s);
            family.contains(*s)
                && cover.contains(*i)
                && !cover.union(*s).contains(*k)
                && !family.contains_edge(*i, *k)
        }
        Witness::DisconnectedPair { i, j } => {
            // direct path search, independent of the BFS above
            let mut reach = VertexSet::singleton(*i);
            loop {
                let mut grew = false;
                for v in 1..=family.n() {
                    if !reach.contains(v) && reach.iter().any(|u| family.contains_edge(u, v)) {
                        reach = reach.with(v);
                        grew = true;
                    }
                }
                if !grew {
                    break;
                }
            }
            !reach.contains(*j)
        }
        Witness::ChordlessPath(path) => path.is_valid_chordless(family),
        Witness::CliqueSizeTable { sizes } => {
            *sizes == admissible_clique_sizes(family) && sizes.windows(2).any(|w| w[0] != w[1])
        }
    }
}

/// Outcome of one lemma-conclusion predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaResult {
    pub lemma: u8,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub results: Vec<LemmaResult>,
    pub all_hold: bool,
}

/// Evaluates the conclusions of the eight structural lemmas as predicates on
/// a family that covers `{1..n}` (the remaining standing assumptions — sizes
/// >= 2 and the antichain condition — are `SupportFamily` invariants).
pub fn lemma_suite(family: &SupportFamily) -> Result<LemmaReport> {
    if !family.covers() {
        let missing = VertexSet::full(family.n())
            .difference(family.support())
            .min()
            .expect("cover violated");
        return Err(Error::CoverViolation { vertex: missing });
    }
    let members = family.members();
    let mut results = Vec::with_capacity(8);
    let fail = |lemma: u8, witness: String, results: &mut Vec<LemmaResult>| {
        results.push(LemmaResult {
            lemma,
            holds: false,
            witness: Some(witness),
        });
    };
    let pass = |lemma: u8, results: &mut Vec<LemmaResult>| {
        results.push(LemmaResult {
            lemma,
            holds: true,
            witness: None,
        });
    };

    // lemma 1: every member meets another member
    match members
        .iter()
        .find(|s| !members.iter().any(|t| *t != **s && !s.is_disjoint_from(*t)))
    {
        Some(s) => fail(1, format!("{s} meets no other member"), &mut results),
        None => pass(1, &mut results),
    }

    // lemma 2: members are minimal in F_i at their own vertices, and a
    // localized inclusion between distinct members forces i inside the
    // smaller one
    let mut lemma2_witness = None;
    'l2: for s in members {
        for i in s.iter() {
            let local = localize(family, i).expect("vertex in range");
            if !local.minimal.contains(&s.without(i)) {
                lemma2_witness = Some(format!("{s} is not minimal in F_{i}"));
                break 'l2;
            }
        }
    }
    if lemma2_witness.is_none() {
        'l2b: for s in members {
            for t in members {
                if s == t {
                    continue;
                }
                for i in 1..=family.n() {
                    if s.without(i).is_subset_of(t.without(i)) && !s.contains(i) {
                        lemma2_witness =
                            Some(format!("{s}\\{{{i}}} inside {t}\\{{{i}}} but {i} not in {s}"));
                        break 'l2b;
                    }
                }
            }
        }
    }
    match lemma2_witness {
        Some(w) => fail(2, w, &mut results),
        None => pass(2, &mut results),
    }

    // lemma 3: pairwise intersections have at most one vertex
    let mut l3 = None;
    for (k, s) in members.iter().enumerate() {
        for t in &members[k + 1..] {
            if s.intersection(*t).len() >= 2 {
                l3 = Some(format!("{s} and {t} share {}", s.intersection(*t)));
            }
        }
    }
    match l3 {
        Some(w) => fail(3, w, &mut results),
        None => pass(3, &mut results),
    }

    // lemma 4: whatever meets a big member is an edge
    let mut l4 = None;
    for s in family.big_members() {
        for t in members {
            if *t != s && !t.is_disjoint_from(s) && t.len() != 2 {
                l4 = Some(format!("{t} meets big member {s} but has size {}", t.len()));
            }
        }
    }
    match l4 {
        Some(w) => fail(4, w, &mut results),
        None => pass(4, &mut results),
    }

    // lemma 5: an edge {i,j} touching a big member S at j forces all edges
    // {i,k}, k in S
    let mut l5 = None;
    'l5: for s in family.big_members() {
        for e in family.edges() {
            let meet = e.intersection(s);
            if meet.len() != 1 {
                continue;
            }
            let i = e.difference(s).min().expect("edge leaves s");
            for k in s.iter() {
                if !family.contains_edge(i, k) {
                    l5 = Some(format!("edge {e} meets {s} but {{{i},{k}}} is missing"));
                    break 'l5;
                }
            }
        }
    }
    match l5 {
        Some(w) => fail(5, w, &mut results),
        None => pass(5, &mut results),
    }

    // lemma 6: vertices outside C(S) ∪ S are joined to all of C(S)
    let mut l6 = None;
    'l6: for s in family.big_members() {
        let cover = cover_set_raw(family, s);
        for i in VertexSet::full(family.n()).difference(cover.union(s)).iter() {
            for k in cover.iter() {
                if !family.contains_edge(i, k) {
                    l6 = Some(format!("{{{i},{k}}} missing outside C({s}) ∪ {s}"));
                    break 'l6;
                }
            }
        }
    }
    match l6 {
        Some(w) => fail(6, w, &mut results),
        None => pass(6, &mut results),
    }

    // lemma 7: edge-connectivity of all vertex pairs
    let c2 = check_condition2(family);
    match c2.witness {
        Some(Witness::DisconnectedPair { i, j }) => {
            fail(7, format!("{i} and {j} lie in different edge components"), &mut results)
        }
        _ => pass(7, &mut results),
    }

    // lemma 8: every length-4 path has a chord from its start vertex
    let c3 = check_condition3(family);
    match c3.witness {
        Some(Witness::ChordlessPath(p)) => {
            fail(8, format!("chordless path {:?}", p.edges), &mut results)
        }
        _ => pass(8, &mut results),
    }

    let all_hold = results.iter().all(|r| r.holds);
    Ok(LemmaReport { results, all_hold })
}

/// The left-hand side of the converse proposition: local disjointness after
/// every localization, plus the existence of an intersecting pair.
pub fn local_ci_and_intersecting(family: &SupportFamily) -> bool {
    let local_everywhere = (1..=family.n())
        .all(|i| is_locally_ci_at(family, i).expect("vertex in range").0);
    local_everywhere && !is_complete_intersection(family)
}
