//! Exhaustive and seeded-random generation of support families on small
//! vertex sets, and the cross-validation harness that checks every
//! equivalence and implication between the classifier routes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    check_condition1, check_condition2, check_condition3, check_condition4, classify_theorem,
    lemma_suite, local_ci_and_intersecting, reconstruct,
};
use crate::complex::SupportFamily;
use crate::error::{Error, Result};
use crate::homology::{is_buchsbaum, FieldSpec};
use crate::ideal::{gci_route_links, gci_route_local, is_complete_intersection};
use crate::set::{minimal_members, VertexSet};

pub const MAX_EXHAUSTIVE_N: usize = 6;
pub const MAX_SAMPLED_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumerationMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationTask {
    pub n: usize,
    pub mode: EnumerationMode,
    pub checks: CheckSelection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    /// Agreement of the link, localization and theorem routes, plus the
    /// complete-intersection implication.
    Routes,
    /// gCI complexes are Buchsbaum over Q and GF(2).
    Buchsbaum,
    /// Reconstruction through the skeleton graph equals the direct
    /// nonface dictionary.
    Reconstruct,
    /// The lemma conclusions hold exactly when localization is disjoint
    /// everywhere and some pair of members meets.
    Converse,
    /// On families passing conditions 1-3, the clique-size criterion agrees
    /// with facet equicardinality.
    Purity,
}

pub const ALL_CHECKS: [CheckId; 5] = [
    CheckId::Routes,
    CheckId::Buchsbaum,
    CheckId::Reconstruct,
    CheckId::Converse,
    CheckId::Purity,
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSelection(pub Vec<CheckId>);

impl CheckSelection {
    pub fn all() -> Self {
        CheckSelection(ALL_CHECKS.to_vec())
    }
}

/// A replayable disagreement between two supposedly equal classifications.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchRecord {
    pub family: SupportFamily,
    pub check: CheckId,
    pub left: String,
    pub right: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub check: CheckId,
    /// Families on which the check's hypothesis applied.
    pub applicable: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationSummary {
    pub instances: usize,
    pub gci_count: usize,
    pub tallies: Vec<CheckTally>,
    pub mismatches: Vec<MismatchRecord>,
}

impl ValidationSummary {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// All >= 2-element subsets of `{1..n}`, ordered by size then mask. The
/// fixed ordering makes the enumeration deterministic and partitionable.
pub fn candidate_subsets(n: usize) -> Vec<VertexSet> {
    let mut subsets: Vec<VertexSet> = VertexSet::full(n)
        .subsets()
        .filter(|s| s.len() >= 2)
        .collect();
    subsets.sort_by_key(|s| (s.len(), s.mask()));
    subsets
}

/// Visits every antichain of >= 2-element subsets of `{1..n}` exactly once,
/// in a deterministic depth-first order. Each antichain is the minimal
/// nonface family of exactly one complex containing all singletons.
pub fn for_each_family<F: FnMut(&SupportFamily)>(n: usize, mut visit: F) -> Result<()> {
    if n < 1 || n > MAX_EXHAUSTIVE_N {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_EXHAUSTIVE_N,
        });
    }
    let subsets = candidate_subsets(n);
    let mut chosen: Vec<VertexSet> = Vec::new();
    fn recurse<F: FnMut(&SupportFamily)>(
        n: usize,
        subsets: &[VertexSet],
        start: usize,
        chosen: &mut Vec<VertexSet>,
        visit: &mut F,
    ) {
        let family = SupportFamily::new(n, chosen.iter().copied()).expect("antichain by construction");
        visit(&family);
        for k in start..subsets.len() {
            let s = subsets[k];
            let compatible = chosen
                .iter()
                .all(|t| !t.is_subset_of(s) && !s.is_subset_of(*t));
            if compatible {
                chosen.push(s);
                recurse(n, subsets, k + 1, chosen, visit);
                chosen.pop();
            }
        }
    }
    recurse(n, &subsets, 0, &mut chosen, &mut visit);
    Ok(())
}

/// Collected form of [`for_each_family`].
pub fn enumerate_complexes(n: usize) -> Result<Vec<SupportFamily>> {
    let mut out = Vec::new();
    for_each_family(n, |f| out.push(f.clone()))?;
    Ok(out)
}

/// Seed-deterministic stream of valid families: a random selection of
/// >= 2-subsets reduced to its inclusion-minimal members.
pub fn sample_complexes(n: usize, count: usize, seed: u64) -> Result<Vec<SupportFamily>> {
    if n < 1 || n > MAX_SAMPLED_N {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_SAMPLED_N,
        });
    }
    let subsets = candidate_subsets(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let picks = rng.gen_range(0..=(2 * n));
        let selection: Vec<VertexSet> = subsets
            .choose_multiple(&mut rng, picks.min(subsets.len()))
            .copied()
            .collect();
        let members = minimal_members(selection);
        out.push(SupportFamily::new(n, members).expect("minimal members form an antichain"));
    }
    Ok(out)
}

/// Runs one check on one family, returning a mismatch if the expected
/// relation fails and whether the check's hypothesis applied at all.
pub fn run_check(family: &SupportFamily, check: CheckId) -> (bool, Option<MismatchRecord>) {
    let mismatch = |left: String, right: String, detail: &str| MismatchRecord {
        family: family.clone(),
        check,
        left,
        right,
        detail: detail.to_string(),
    };
    match check {
        CheckId::Routes => {
            let delta = family.complex();
            let links = gci_route_links(&delta).is_gci;
            let local = gci_route_local(&delta).is_gci;
            let theorem = classify_theorem(&delta).is_gci;
            if links != local || local != theorem {
                return (
                    true,
                    Some(mismatch(
                        format!("links={links} local={local}"),
                        format!("theorem={theorem}"),
                        "the three gCI routes must agree",
                    )),
                );
            }
            if is_complete_intersection(family) {
                let pure = delta.is_pure();
                if !pure || !links {
                    return (
                        true,
                        Some(mismatch(
                            "ci=true".to_string(),
                            format!("pure={pure} gci={links}"),
                            "complete intersections must be pure and gCI",
                        )),
                    );
                }
            }
            (true, None)
        }
        CheckId::Buchsbaum => {
            let delta = family.complex();
            if !classify_theorem(&delta).is_gci {
                return (false, None);
            }
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
                if !is_buchsbaum(&delta, field) {
                    return (
                        true,
                        Some(mismatch(
                            "gci=true".to_string(),
                            format!("buchsbaum({field})=false"),
                            "gCI complexes must be Buchsbaum",
                        )),
                    );
                }
            }
            (true, None)
        }
        CheckId::Reconstruct => {
            let direct = family.complex();
            let via_graph = reconstruct(family);
            if direct != via_graph {
                return (
                    true,
                    Some(mismatch(
                        format!("{:?}", direct.facets()),
                        format!("{:?}", via_graph.facets()),
                        "Red(F, Simp(G)) must equal the nonface dictionary",
                    )),
                );
            }
            (true, None)
        }
        CheckId::Converse => {
            if !family.covers() {
                return (false, None);
            }
            let lhs = local_ci_and_intersecting(family);
            let rhs = lemma_suite(family).expect("cover checked").all_hold;
            if lhs != rhs {
                return (
                    true,
                    Some(mismatch(
                        format!("local-ci-and-intersecting={lhs}"),
                        format!("all-lemmas={rhs}"),
                        "converse equivalence violated",
                    )),
                );
            }
            (true, None)
        }
        CheckId::Purity => {
            let mut conditions = check_condition1(family);
            conditions.push(check_condition2(family));
            conditions.push(check_condition3(family));
            if !conditions.iter().all(|c| c.holds) {
                return (false, None);
            }
            let via_cliques = check_condition4(family).holds;
            let via_facets = family.complex().is_pure();
            if via_cliques != via_facets {
                return (
                    true,
                    Some(mismatch(
                        format!("clique-criterion={via_cliques}"),
                        format!("facet-purity={via_facets}"),
                        "conditional purity violated",
                    )),
                );
            }
            (true, None)
        }
    }
}

/// Evaluates the selected checks over a stream of families. Mismatches are
/// data, not errors; a clean run has an empty mismatch list.
pub fn cross_validate<'a, I>(families: I, checks: &CheckSelection) -> ValidationSummary
where
    I: IntoIterator<Item = &'a SupportFamily>,
{
    let mut tallies: Vec<CheckTally> = checks
        .0
        .iter()
        .map(|&check| CheckTally {
            check,
            applicable: 0,
            mismatches: 0,
        })
        .collect();
    let mut mismatches = Vec::new();
    let mut instances = 0;
    let mut gci_count = 0;
    for family in families {
        instances += 1;
        if classify_theorem(&family.complex()).is_gci {
            gci_count += 1;
        }
        for (slot, &check) in checks.0.iter().enumerate() {
            let (applicable, mismatch) = run_check(family, check);
            if applicable {
                tallies[slot].applicable += 1;
            }
            if let Some(m) = mismatch {
                tallies[slot].mismatches += 1;
                mismatches.push(m);
            }
        }
    }
    ValidationSummary {
        instances,
        gci_count,
        tallies,
        mismatches,
    }
}
