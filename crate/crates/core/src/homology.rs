//! Reduced simplicial homology over Q and GF(p), the Reisner criterion for
//! Cohen-Macaulayness, and the Buchsbaum test.
//!
//! Betti numbers are computed from exact boundary ranks; no floating point
//! is involved anywhere. The augmented chain complex is used throughout, so
//! dimension -1 (the empty face) participates and the Betti numbers are the
//! reduced ones.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::matrix::{is_prime, IntMatrix};
use crate::set::VertexSet;

/// The coefficient field for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) && p < (1 << 31) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Short name used in reports: `q`, `f2`, `f7`, ...
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "q".to_string(),
            FieldSpec::PrimeField(p) => format!("f{p}"),
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Reduced Betti numbers b~_{-1}, b~_0, ..., b~_{dim}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    values: Vec<usize>,
}

impl BettiVector {
    /// b~_k; zero outside the stored range.
    pub fn betti(&self, k: isize) -> usize {
        let idx = k + 1;
        if idx < 0 || idx as usize >= self.values.len() {
            0
        } else {
            self.values[idx as usize]
        }
    }

    /// The stored values, index 0 holding b~_{-1}.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Reduced Euler characteristic from the Betti numbers:
    /// sum over k >= -1 of (-1)^k b~_k.
    pub fn euler(&self) -> i64 {
        let mut sum = 0i64;
        for (idx, &b) in self.values.iter().enumerate() {
            // idx 0 is dimension -1
            if idx % 2 == 1 {
                sum += b as i64;
            } else {
                sum -= b as i64;
            }
        }
        sum
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }
}

/// The matrix of the boundary map from k-faces to (k-1)-faces, with columns
/// indexed by the k-faces and rows by the (k-1)-faces, both in ascending
/// bitmask order. Orientation is by ascending vertex order: removing the
/// j-th smallest vertex carries sign (-1)^j.
pub fn boundary_matrix(delta: &SimplicialComplex, k: isize) -> Result<IntMatrix> {
    let dim = delta.dim();
    if k < -1 || k > dim {
        return Err(Error::DimensionOutOfRange { k, dim });
    }
    if k == -1 {
        // map from the empty face to the zero module
        return Ok(IntMatrix::zero(0, delta.faces_of_dim(-1).len()));
    }
    let sources = delta.faces_of_dim(k);
    let targets = delta.faces_of_dim(k - 1);
    let index_of = |face: VertexSet| targets.binary_search(&face).expect("face of a face");
    let mut m = IntMatrix::zero(targets.len(), sources.len());
    for (col, face) in sources.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            m.set(index_of(face.without(v)), col, sign);
        }
    }
    Ok(m)
}

fn rank_over(m: &IntMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => m.rank_rational(),
        FieldSpec::PrimeField(p) => m.rank_mod_p(p),
    }
}

/// Reduced Betti numbers of the complex over the field:
/// b~_k = dim ker d_k - rank d_{k+1}.
pub fn reduced_betti(delta: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    let dim = delta.dim();
    if delta.facets().is_empty() {
        // the truly empty complex has no faces and no homology
        return BettiVector { values: Vec::new() };
    }
    // ranks[i] = rank of d_{k} for k = i - 1 (so ranks[0] is rank d_{-1} = 0)
    let mut ranks = vec![0usize; (dim + 3) as usize];
    for k in 0..=dim {
        let m = boundary_matrix(delta, k).expect("k within range");
        ranks[(k + 1) as usize] = rank_over(&m, field);
    }
    let counts = delta.face_counts();
    let values = (0..counts.len())
        .map(|idx| counts[idx] - ranks[idx] - ranks[idx + 1])
        .collect();
    BettiVector { values }
}

/// Reisner's criterion: Δ is Cohen-Macaulay over the field iff for every
/// face F (including the empty face), the link of F has vanishing reduced
/// homology below its dimension. On failure, returns a face and the degree
/// in which homology survives.
pub fn is_cohen_macaulay(
    delta: &SimplicialComplex,
    field: FieldSpec,
) -> (bool, Option<(VertexSet, isize)>) {
    reisner_over_faces(delta, field, false)
}

/// Buchsbaum test: Δ is pure and the link of every nonempty face is
/// Cohen-Macaulay over the field. Equivalently (since a link of a face of a
/// link is a link in Δ), Δ is pure and the Reisner vanishing holds at every
/// nonempty face.
pub fn is_buchsbaum(delta: &SimplicialComplex, field: FieldSpec) -> bool {
    delta.is_pure() && reisner_over_faces(delta, field, true).0
}

fn reisner_over_faces(
    delta: &SimplicialComplex,
    field: FieldSpec,
    skip_empty_face: bool,
) -> (bool, Option<(VertexSet, isize)>) {
    for face in delta.faces() {
        if skip_empty_face && face.is_empty() {
            continue;
        }
        let link = delta.link(face).expect("iterating faces");
        let betti = reduced_betti(&link, field);
        for k in -1..link.dim() {
            if betti.betti(k) != 0 {
                return (false, Some((face, k)));
            }
        }
    }
    (true, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SupportFamily;

    fn vs(labels: &[usize]) -> VertexSet {
        labels.iter().copied().collect()
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| vs(f)), false).unwrap()
    }

    /// The minimal 6-vertex triangulation of the real projective plane.
    pub(crate) fn rp2() -> SimplicialComplex {
        complex(
            6,
            &[
                &[1, 2, 3],
                &[1, 3, 4],
                &[1, 4, 5],
                &[1, 5, 6],
                &[1, 2, 6],
                &[2, 3, 5],
                &[3, 4, 6],
                &[2, 4, 5],
                &[3, 5, 6],
                &[2, 4, 6],
            ],
        )
    }

    #[test]
    fn single_edge_boundary() {
        let d = complex(2, &[&[1, 2]]);
        let m = boundary_matrix(&d, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 1));
        let entries = [m.get(0, 0), m.get(1, 0)];
        assert_eq!(entries[0] * entries[1], -1); // opposite signs
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let d = complex(5, &[&[1, 2, 3], &[2, 3, 4], &[4, 5]]);
        for k in 0..=d.dim() - 1 {
            let a = boundary_matrix(&d, k + 1).unwrap();
            let b = boundary_matrix(&d, k).unwrap();
            assert!(b.mul(&a).is_zero());
        }
    }

    #[test]
    fn boundary_rejects_out_of_range() {
        let d = complex(2, &[&[1, 2]]);
        assert!(boundary_matrix(&d, 2).is_err());
        assert!(boundary_matrix(&d, -2).is_err());
    }

    #[test]
    fn hollow_triangle_betti() {
        let d = complex(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        let m = boundary_matrix(&d, 1).unwrap();
        assert_eq!(m.rank_rational(), 2);
        let betti = reduced_betti(&d, FieldSpec::Rationals);
        assert_eq!(betti.betti(-1), 0);
        assert_eq!(betti.betti(0), 0);
        assert_eq!(betti.betti(1), 1);
    }

    #[test]
    fn disconnected_complex_has_betti0() {
        let e8 = complex(7, &[&[1, 2, 7], &[1, 3, 7], &[2, 3, 7], &[4, 5, 6]]);
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(5)] {
            assert_eq!(reduced_betti(&e8, field).betti(0), 1);
        }
    }

    #[test]
    fn rp2_betti_depends_on_field() {
        let d = rp2();
        let over_q = reduced_betti(&d, FieldSpec::Rationals);
        assert_eq!(over_q.betti(0), 0);
        assert_eq!(over_q.betti(1), 0);
        assert_eq!(over_q.betti(2), 0);
        let over_f2 = reduced_betti(&d, FieldSpec::PrimeField(2));
        assert_eq!(over_f2.betti(1), 1);
        assert_eq!(over_f2.betti(2), 1);
    }

    #[test]
    fn cohen_macaulay_examples() {
        // path of length 3: CM over Q
        let e6 = complex(4, &[&[1, 3], &[1, 4], &[4, 2]]);
        assert!(is_cohen_macaulay(&e6, FieldSpec::Rationals).0);

        // two disjoint edges: not CM (disconnected), witness at the empty face
        let e1 = complex(4, &[&[1, 2], &[3, 4]]);
        let (cm, witness) = is_cohen_macaulay(&e1, FieldSpec::Rationals);
        assert!(!cm);
        assert_eq!(witness, Some((VertexSet::EMPTY, 0)));

        // RP^2: CM over Q, not over GF(2)
        let d = rp2();
        assert!(is_cohen_macaulay(&d, FieldSpec::Rationals).0);
        assert!(!is_cohen_macaulay(&d, FieldSpec::PrimeField(2)).0);
    }

    #[test]
    fn buchsbaum_examples() {
        let e1 = complex(4, &[&[1, 2], &[3, 4]]);
        assert!(is_buchsbaum(&e1, FieldSpec::Rationals));

        let impure = complex(4, &[&[1, 2, 3], &[3, 4]]);
        assert!(!is_buchsbaum(&impure, FieldSpec::Rationals));

        let e8 = complex(7, &[&[1, 2, 7], &[1, 3, 7], &[2, 3, 7], &[4, 5, 6]]);
        assert!(is_buchsbaum(&e8, FieldSpec::Rationals));
    }

    #[test]
    fn buchsbaum_matches_link_cm_formulation() {
        let samples = [
            complex(4, &[&[1, 2], &[3, 4]]),
            complex(4, &[&[1, 2, 3], &[3, 4]]),
            complex(5, &[&[1, 3], &[3, 5], &[5, 2], &[2, 4], &[4, 1]]),
            rp2(),
            SupportFamily::new(5, [vs(&[1, 2, 3]), vs(&[1, 4]), vs(&[2, 4]), vs(&[3, 5])])
                .unwrap()
                .complex(),
        ];
        for d in samples {
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
                let direct = is_buchsbaum(&d, field);
                let via_links = d.is_pure()
                    && d.faces().into_iter().filter(|f| !f.is_empty()).all(|f| {
                        is_cohen_macaulay(&d.link(f).unwrap(), field).0
                    });
                assert_eq!(direct, via_links, "on {:?} over {field}", d.facets());
            }
        }
    }

    #[test]
    fn euler_characteristic_consistency() {
        let samples = [
            complex(3, &[&[1, 2], &[2, 3], &[1, 3]]),
            complex(7, &[&[1, 2, 7], &[1, 3, 7], &[2, 3, 7], &[4, 5, 6]]),
            rp2(),
        ];
        for d in samples {
            let counts = d.face_counts();
            let mut from_faces = 0i64;
            for (idx, &c) in counts.iter().enumerate() {
                if idx % 2 == 1 {
                    from_faces += c as i64;
                } else {
                    from_faces -= c as i64;
                }
            }
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)] {
                assert_eq!(reduced_betti(&d, field).euler(), from_faces);
            }
        }
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(97).is_ok());
        assert_eq!(FieldSpec::prime(6).unwrap_err(), Error::NotPrime(6));
        assert_eq!(FieldSpec::prime(1).unwrap_err(), Error::NotPrime(1));
    }
}
