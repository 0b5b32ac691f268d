//! The catalog of example ideals E1-E9 (five non-Cohen-Macaulay edge ideals,
//! two Cohen-Macaulay edge ideals, two ideals with degree >= 3 generators)
//! plus the 6-vertex projective-plane triangulation used to exercise the
//! field dependence of the homology engine.

use serde::{Deserialize, Serialize};

use crate::input::InputDocument;
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    /// False for fixtures that are standard references rather than examples
    /// from the source material (currently only RP2).
    pub from_examples: bool,
    pub doc: InputDocument,
    /// The facet list the example is stated with, when one is printed;
    /// checked verbatim against the computed facets.
    pub expected_facets: Option<Vec<VertexSet>>,
}

fn vs(labels: &[usize]) -> VertexSet {
    labels.iter().copied().collect()
}

fn edges(pairs: &[[usize; 2]]) -> Vec<VertexSet> {
    pairs.iter().map(|p| vs(p)).collect()
}

/// The bipartite fixture E5 for an arbitrary side size `m >= 1`:
/// the intersection of the two primes `(X_1..X_m)` and `(X_{m+1}..X_{2m})`,
/// generated by all cross pairs.
pub fn e5(m: usize) -> Fixture {
    let mut generators = Vec::new();
    for i in 1..=m {
        for j in m + 1..=2 * m {
            generators.push(vs(&[i, j]));
        }
    }
    Fixture {
        name: "E5",
        description: "bipartite edge ideal: intersection of two complementary primes",
        from_examples: true,
        doc: InputDocument::from_generators(2 * m, generators),
        // facets are the complements of the two prime components
        expected_facets: Some(vec![
            (1..=m).collect::<VertexSet>(),
            (m + 1..=2 * m).collect::<VertexSet>(),
        ]),
    }
}

/// The nine example ideals plus RP2, in catalog order E1..E9, RP2.
/// E5 is included at its smallest interesting parameter, m = 2.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = vec![
        Fixture {
            name: "E1",
            description: "two disjoint edges",
            from_examples: true,
            doc: InputDocument::from_generators(4, edges(&[[1, 3], [1, 4], [2, 3], [2, 4]])),
            expected_facets: Some(vec![vs(&[1, 2]), vs(&[3, 4])]),
        },
        Fixture {
            name: "E2",
            description: "a path of length 4",
            from_examples: true,
            doc: InputDocument::from_generators(
                5,
                edges(&[[1, 2], [2, 3], [1, 3], [3, 4], [4, 5], [1, 5]]),
            ),
            expected_facets: Some(vec![vs(&[1, 4]), vs(&[4, 2]), vs(&[2, 5]), vs(&[5, 3])]),
        },
        Fixture {
            name: "E3",
            description: "disjoint union of a path of length 2 and an edge",
            from_examples: true,
            doc: InputDocument::from_generators(
                5,
                edges(&[[1, 2], [2, 3], [1, 3], [3, 4], [4, 5], [1, 5], [2, 5]]),
            ),
            expected_facets: Some(vec![vs(&[1, 4]), vs(&[4, 2]), vs(&[5, 3])]),
        },
        Fixture {
            name: "E4",
            description: "an edge attached to a circle",
            from_examples: true,
            doc: InputDocument::from_generators(
                5,
                edges(&[[1, 2], [1, 5], [2, 3], [2, 5], [3, 4]]),
            ),
            expected_facets: Some(vec![
                vs(&[1, 3]),
                vs(&[3, 5]),
                vs(&[5, 4]),
                vs(&[4, 1]),
                vs(&[4, 2]),
            ]),
        },
        e5(2),
        Fixture {
            name: "E6",
            description: "a path of length 3 (Cohen-Macaulay)",
            from_examples: true,
            doc: InputDocument::from_generators(4, edges(&[[1, 2], [2, 3], [3, 4]])),
            expected_facets: Some(vec![vs(&[1, 3]), vs(&[1, 4]), vs(&[4, 2])]),
        },
        Fixture {
            name: "E7",
            description: "a circle on five vertices (Cohen-Macaulay)",
            from_examples: true,
            doc: InputDocument::from_generators(
                5,
                edges(&[[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]]),
            ),
            expected_facets: Some(vec![
                vs(&[1, 3]),
                vs(&[3, 5]),
                vs(&[5, 2]),
                vs(&[2, 4]),
                vs(&[4, 1]),
            ]),
        },
    ];

    // E8: (X1 X2 X3) + (X1,X2,X3)*(X4,X5,X6) + (X4 X7, X5 X7, X6 X7)
    let mut e8_gens = vec![vs(&[1, 2, 3])];
    for i in 1..=3 {
        for j in 4..=6 {
            e8_gens.push(vs(&[i, j]));
        }
    }
    for j in 4..=6 {
        e8_gens.push(vs(&[j, 7]));
    }
    out.push(Fixture {
        name: "E8",
        description: "degree-3 generator with a cone point over a triangle boundary",
        from_examples: true,
        doc: InputDocument::from_generators(7, e8_gens),
        expected_facets: Some(vec![
            vs(&[1, 2, 7]),
            vs(&[1, 3, 7]),
            vs(&[2, 3, 7]),
            vs(&[4, 5, 6]),
        ]),
    });

    // E9: (X1 X2 X3 X4) + (X1..X4)*(X5,X6,X7)
    let mut e9_gens = vec![vs(&[1, 2, 3, 4])];
    for i in 1..=4 {
        for j in 5..=7 {
            e9_gens.push(vs(&[i, j]));
        }
    }
    out.push(Fixture {
        name: "E9",
        description: "degree-4 generator: tetrahedron boundary next to a triangle",
        from_examples: true,
        doc: InputDocument::from_generators(7, e9_gens),
        expected_facets: Some(vec![
            vs(&[1, 2, 3]),
            vs(&[1, 2, 4]),
            vs(&[1, 3, 4]),
            vs(&[2, 3, 4]),
            vs(&[5, 6, 7]),
        ]),
    });

    out.push(Fixture {
        name: "RP2",
        description: "minimal 6-vertex triangulation of the real projective plane",
        from_examples: false,
        doc: InputDocument::from_facets(
            6,
            vec![
                vs(&[1, 2, 3]),
                vs(&[1, 3, 4]),
                vs(&[1, 4, 5]),
                vs(&[1, 5, 6]),
                vs(&[1, 2, 6]),
                vs(&[2, 3, 5]),
                vs(&[3, 4, 6]),
                vs(&[2, 4, 5]),
                vs(&[3, 5, 6]),
                vs(&[2, 4, 6]),
            ],
        ),
        expected_facets: None,
    });

    out
}

/// Looks a fixture up by name (case-insensitive).
pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures()
        .into_iter()
        .find(|f| f.name.eq_ignore_ascii_case(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_contains_ten_entries() {
        let all = fixtures();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0].name, "E1");
        assert_eq!(all[9].name, "RP2");
        assert!(!all[9].from_examples);
    }

    #[test]
    fn computed_facets_match_printed_lists() {
        for f in fixtures() {
            let Some(expected) = &f.expected_facets else {
                continue;
            };
            let mut expected = expected.clone();
            expected.sort();
            let mut got = f.doc.complex().unwrap().facets().to_vec();
            got.sort();
            assert_eq!(got, expected, "facets of {}", f.name);
        }
    }

    #[test]
    fn e5_facets_are_prime_complements_for_m3() {
        let f = e5(3);
        let mut got = f.doc.complex().unwrap().facets().to_vec();
        got.sort();
        let mut expected = f.expected_facets.unwrap();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn e2_generators_match_catalog() {
        let f = fixture("e2").unwrap();
        let gens = f.doc.generators.unwrap();
        assert_eq!(gens.len(), 6);
        assert!(gens.contains(&vs(&[4, 5])));
    }

    #[test]
    fn rp2_has_ten_triangles() {
        let f = fixture("RP2").unwrap();
        let delta = f.doc.complex().unwrap();
        assert_eq!(delta.facets().len(), 10);
        assert!(delta.facets().iter().all(|t| t.len() == 3));
    }
}
