//! Static affine-diagram data per type: nodes in gamma_0..gamma_n order,
//! edges with bond multiplicities and arrow directions, the marks b and c,
//! ϑ-orbit sizes, fundamental coweights of the fixed-point root system, and
//! barycentric Kac points. Tables are hard-coded and validated against the
//! pairing identity mu_k(gamma_j) = (b_k f)/(c_k |gamma_k|) delta_kj.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::tag::{Family, TypeTag};

/// Undirected edge between node indices with bond multiplicity 1, 2, or 4;
/// `arrow_to` names the node the arrow points at (None for single bonds and
/// for the two-headed rank-one affine A edge).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub bond: u8,
    pub arrow_to: Option<usize>,
}

impl Edge {
    fn single(i: usize, j: usize) -> Self {
        Edge { i, j, bond: 1, arrow_to: None }
    }

    fn double(i: usize, j: usize, arrow_to: usize) -> Self {
        Edge { i, j, bond: 2, arrow_to: Some(arrow_to) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineDiagram {
    pub tag: TypeTag,
    /// Node count n + 1; node k is the paper's gamma_k, gamma_0 affine.
    pub nodes: usize,
    pub edges: Vec<Edge>,
    pub marks_b: Vec<u64>,
    pub marks_c: Vec<u64>,
    pub orbit_sizes: Vec<u64>,
}

/// Rank of the reflection representation of the fixed-point Weyl group:
/// the number of non-affine diagram nodes.
pub fn reflection_rank(tag: TypeTag) -> usize {
    let l = tag.rank;
    match tag.family {
        Family::A => l - 1,
        Family::B | Family::C | Family::D | Family::TwoD => l,
        Family::TwoA => l / 2,
    }
}

/// Minimum rank at which the per-type diagram recipes apply (stricter than
/// the matrix realizations for B and D).
fn check_diagram_rank(tag: TypeTag) -> Result<()> {
    let min = match tag.family {
        Family::B => 3,
        Family::D => 4,
        Family::TwoA => 3,
        _ => 2,
    };
    if tag.rank < min {
        return Err(Error::UnsupportedType {
            tag: tag.family.name().to_string(),
            rank: tag.rank,
            reason: format!("diagram recipe needs rank >= {min}"),
        });
    }
    Ok(())
}

pub fn diagram_for(tag: TypeTag) -> Result<AffineDiagram> {
    check_diagram_rank(tag)?;
    let l = tag.rank;
    let n = reflection_rank(tag);
    let nodes = n + 1;
    let (edges, marks_b, marks_c, orbit_sizes) = match tag.family {
        Family::A => {
            let mut edges = Vec::new();
            if l == 2 {
                edges.push(Edge { i: 0, j: 1, bond: 2, arrow_to: None });
            } else {
                for k in 0..l - 1 {
                    edges.push(Edge::single(k, k + 1));
                }
                edges.push(Edge::single(l - 1, 0));
            }
            (edges, vec![1; l], vec![1; l], vec![1; l])
        }
        Family::B => {
            let mut edges = vec![Edge::single(0, 2), Edge::single(1, 2)];
            for k in 2..l - 1 {
                edges.push(Edge::single(k, k + 1));
            }
            edges.push(Edge::double(l - 1, l, l));
            let mut b = vec![2; nodes];
            b[0] = 1;
            b[1] = 1;
            (edges, b.clone(), b, vec![1; nodes])
        }
        Family::C => {
            let mut edges = vec![Edge::double(0, 1, 1)];
            for k in 1..l - 1 {
                edges.push(Edge::single(k, k + 1));
            }
            edges.push(Edge::double(l - 1, l, l - 1));
            let mut b = vec![2; nodes];
            b[0] = 1;
            b[l] = 1;
            (edges, b.clone(), b, vec![1; nodes])
        }
        Family::D => {
            let mut edges = vec![Edge::single(0, 2), Edge::single(1, 2)];
            for k in 2..l - 2 {
                edges.push(Edge::single(k, k + 1));
            }
            edges.push(Edge::single(l - 2, l - 1));
            edges.push(Edge::single(l - 2, l));
            let mut b = vec![2; nodes];
            b[0] = 1;
            b[1] = 1;
            b[l - 1] = 1;
            b[l] = 1;
            (edges, b.clone(), b, vec![1; nodes])
        }
        Family::TwoA => {
            if l % 2 == 0 {
                // l = 2n: fork at gamma_2, double bond into gamma_{n-1}.
                let mut edges = Vec::new();
                if n == 2 {
                    edges.push(Edge::double(2, 0, 0));
                    edges.push(Edge::double(2, 1, 1));
                } else {
                    edges.push(Edge::single(0, 2));
                    edges.push(Edge::single(1, 2));
                    for k in 2..n - 1 {
                        edges.push(Edge::single(k, k + 1));
                    }
                    edges.push(Edge::double(n - 1, n, n - 1));
                }
                let mut b = vec![2; nodes];
                b[0] = 1;
                b[1] = 1;
                b[n] = 1;
                let mut c = vec![2; nodes];
                c[0] = 1;
                c[1] = 1;
                let mut orbit = vec![2; nodes];
                orbit[0] = 1;
                orbit[n] = 1;
                (edges, b, c, orbit)
            } else {
                // l = 2n + 1: chain with arrows pointing away from gamma_0.
                let mut edges = Vec::new();
                if n == 1 {
                    edges.push(Edge { i: 0, j: 1, bond: 4, arrow_to: Some(1) });
                } else {
                    edges.push(Edge::double(0, 1, 1));
                    for k in 1..n - 1 {
                        edges.push(Edge::single(k, k + 1));
                    }
                    edges.push(Edge::double(n - 1, n, n));
                }
                let mut b = vec![2; nodes];
                b[0] = 1;
                let mut c = vec![2; nodes];
                c[0] = 1;
                c[n] = 1;
                let mut orbit = vec![2; nodes];
                orbit[0] = 1;
                (edges, b, c, orbit)
            }
        }
        Family::TwoD => {
            let mut edges = vec![Edge::double(0, 1, 0)];
            for k in 1..l - 1 {
                edges.push(Edge::single(k, k + 1));
            }
            edges.push(Edge::double(l - 1, l, l));
            let mut c = vec![2; nodes];
            c[0] = 1;
            c[l] = 1;
            let mut orbit = vec![1; nodes];
            orbit[l] = 2;
            (edges, vec![1; nodes], c, orbit)
        }
    };
    Ok(AffineDiagram { tag, nodes, edges, marks_b, marks_c, orbit_sizes })
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Basis vector sum e_1 + ... + e_k scaled by `scale`, in `dim` coordinates.
fn prefix_vector(dim: usize, k: usize, scale: BigRational) -> Vec<BigRational> {
    (0..dim).map(|i| if i < k { scale.clone() } else { rat(0, 1) }).collect()
}

/// Fundamental coweights of the fixed-point group, one per non-affine node;
/// index 0 corresponds to gamma_1. Coordinates are the paper's ambient
/// e-coordinates (x-coordinates of the fixed subspace for twisted A).
pub fn coweights(tag: TypeTag) -> Result<Vec<Vec<BigRational>>> {
    check_diagram_rank(tag)?;
    let l = tag.rank;
    let n = reflection_rank(tag);
    let one = rat(1, 1);
    let half = rat(1, 2);
    Ok(match tag.family {
        Family::A => (1..=n)
            .map(|k| {
                let mut v = prefix_vector(l, k, one.clone());
                let shift = rat(k as i64, l as i64);
                for entry in &mut v {
                    *entry -= shift.clone();
                }
                v
            })
            .collect(),
        Family::B => (1..=l).map(|k| prefix_vector(l, k, one.clone())).collect(),
        Family::C | Family::TwoD => (1..=l)
            .map(|k| {
                let scale = if k == l { half.clone() } else { one.clone() };
                prefix_vector(l, k, scale)
            })
            .collect(),
        Family::D => (1..=l)
            .map(|k| {
                if k <= l - 2 {
                    prefix_vector(l, k, one.clone())
                } else if k == l - 1 {
                    let mut v = prefix_vector(l, l, half.clone());
                    v[l - 1] = -half.clone();
                    v
                } else {
                    prefix_vector(l, l, half.clone())
                }
            })
            .collect(),
        Family::TwoA => (1..=n).map(|k| prefix_vector(n, k, half.clone())).collect(),
    })
}

/// Simple roots of the restricted root system, one per non-affine node;
/// index 0 corresponds to gamma_1. Same coordinates as `coweights`.
pub fn restricted_simples(tag: TypeTag) -> Result<Vec<Vec<BigRational>>> {
    check_diagram_rank(tag)?;
    let l = tag.rank;
    let n = reflection_rank(tag);
    let dim = if tag.family == Family::TwoA { n } else { l };
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let mut v = vec![rat(0, 1); dim];
        match tag.family {
            Family::A => {
                v[k - 1] = rat(1, 1);
                v[k] = rat(-1, 1);
            }
            Family::B => {
                v[k - 1] = rat(1, 1);
                if k < l {
                    v[k] = rat(-1, 1);
                }
            }
            Family::C | Family::TwoD => {
                v[k - 1] = if k < l { rat(1, 1) } else { rat(2, 1) };
                if k < l {
                    v[k] = rat(-1, 1);
                }
            }
            Family::D => {
                if k < l {
                    v[k - 1] = rat(1, 1);
                    v[k] = rat(-1, 1);
                } else {
                    v[l - 2] = rat(1, 1);
                    v[l - 1] = rat(1, 1);
                }
            }
            Family::TwoA => {
                if k < n {
                    v[k - 1] = rat(2, 1);
                    v[k] = rat(-2, 1);
                } else if l % 2 == 0 {
                    v[n - 1] = rat(2, 1);
                } else {
                    v[n - 1] = rat(4, 1);
                }
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Barycentric alcove coordinates of the torsion point determined by the
/// labels: m = f * sum(s_k b_k) and x_k = f * s_k * b_k / m.
pub fn kac_point(tag: TypeTag, labels: &[u64]) -> Result<(Vec<BigRational>, u64)> {
    let diagram = diagram_for(tag)?;
    assert_eq!(labels.len(), diagram.nodes, "one label per node");
    if labels.iter().all(|&s| s == 0) {
        return Err(Error::AllZeroLabels);
    }
    let f = tag.family.twist_order();
    let m: u64 = f * labels.iter().zip(&diagram.marks_b).map(|(&s, &b)| s * b).sum::<u64>();
    let coords: Vec<BigRational> = labels
        .iter()
        .zip(&diagram.marks_b)
        .map(|(&s, &b)| rat((f * s * b) as i64, m as i64))
        .collect();
    Ok((coords, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tags_up_to(max_rank: usize) -> Vec<TypeTag> {
        let mut tags = Vec::new();
        for family in Family::ALL {
            let min = match family {
                Family::B => 3,
                Family::D => 4,
                Family::TwoA => 3,
                _ => 2,
            };
            for rank in min..=max_rank {
                tags.push(TypeTag::new(family, rank).unwrap());
            }
        }
        tags
    }

    #[test]
    fn node_counts_match_fixed_point_rank() {
        for (family, rank, want) in [
            (Family::A, 5, 5),
            (Family::B, 4, 5),
            (Family::C, 3, 4),
            (Family::D, 4, 5),
            (Family::TwoA, 7, 4),
            (Family::TwoA, 6, 4),
            (Family::TwoD, 2, 3),
        ] {
            let tag = TypeTag::new(family, rank).unwrap();
            assert_eq!(diagram_for(tag).unwrap().nodes, want);
        }
    }

    #[test]
    fn mark_tables_for_small_types() {
        let c3 = diagram_for(TypeTag::new(Family::C, 3).unwrap()).unwrap();
        assert_eq!(c3.marks_b, vec![1, 2, 2, 1]);
        assert_eq!(c3.marks_b, c3.marks_c);

        let b3 = diagram_for(TypeTag::new(Family::B, 3).unwrap()).unwrap();
        assert_eq!(b3.marks_b, vec![1, 1, 2, 2]);

        let d5 = diagram_for(TypeTag::new(Family::D, 5).unwrap()).unwrap();
        assert_eq!(d5.marks_b, vec![1, 1, 2, 2, 1, 1]);

        let a4 = diagram_for(TypeTag::new(Family::TwoA, 4).unwrap()).unwrap();
        assert_eq!(a4.marks_b, vec![1, 1, 1]);
        assert_eq!(a4.marks_c, vec![1, 1, 2]);
        assert_eq!(a4.orbit_sizes, vec![1, 2, 1]);

        let a3 = diagram_for(TypeTag::new(Family::TwoA, 3).unwrap()).unwrap();
        assert_eq!(a3.marks_b, vec![1, 2]);
        assert_eq!(a3.marks_c, vec![1, 1]);
        assert_eq!(a3.edges, vec![Edge { i: 0, j: 1, bond: 4, arrow_to: Some(1) }]);

        let a9 = diagram_for(TypeTag::new(Family::TwoA, 9).unwrap()).unwrap();
        assert_eq!(a9.marks_b, vec![1, 2, 2, 2, 2]);
        assert_eq!(a9.marks_c, vec![1, 2, 2, 2, 1]);

        let d2 = diagram_for(TypeTag::new(Family::TwoD, 2).unwrap()).unwrap();
        assert_eq!(d2.marks_b, vec![1, 1, 1]);
        assert_eq!(d2.marks_c, vec![1, 2, 1]);
        assert_eq!(d2.orbit_sizes, vec![1, 1, 2]);
    }

    #[test]
    fn twisted_affine_node_orbit_is_trivial() {
        for tag in tags_up_to(9) {
            let d = diagram_for(tag).unwrap();
            assert_eq!(d.marks_b[0], 1);
            assert_eq!(d.marks_c[0], 1);
            assert_eq!(d.orbit_sizes[0], 1);
        }
    }

    #[test]
    fn pairing_identity_holds_exactly() {
        for tag in tags_up_to(12) {
            let diagram = diagram_for(tag).unwrap();
            let mus = coweights(tag).unwrap();
            let gammas = restricted_simples(tag).unwrap();
            let f = tag.family.twist_order() as i64;
            for (k, mu) in mus.iter().enumerate() {
                for (j, gamma) in gammas.iter().enumerate() {
                    let dot: BigRational =
                        mu.iter().zip(gamma).map(|(a, b)| a * b).fold(rat(0, 1), |s, x| s + x);
                    let expected = if k == j {
                        rat(
                            diagram.marks_b[k + 1] as i64 * f,
                            (diagram.marks_c[k + 1] * diagram.orbit_sizes[k + 1]) as i64,
                        )
                    } else {
                        rat(0, 1)
                    };
                    assert_eq!(dot, expected, "{tag:?} mu_{} gamma_{}", k + 1, j + 1);
                }
            }
        }
    }

    #[test]
    fn kac_points_from_labels() {
        let (x, m) = kac_point(TypeTag::new(Family::A, 2).unwrap(), &[1, 1]).unwrap();
        assert_eq!(m, 2);
        assert_eq!(x, vec![rat(1, 2), rat(1, 2)]);

        let (x, m) = kac_point(TypeTag::new(Family::C, 2).unwrap(), &[1, 0, 1]).unwrap();
        assert_eq!(m, 2);
        assert_eq!(x, vec![rat(1, 2), rat(0, 1), rat(1, 2)]);

        let (x, m) = kac_point(TypeTag::new(Family::TwoA, 4).unwrap(), &[0, 1, 0]).unwrap();
        assert_eq!(m, 2);
        assert_eq!(x, vec![rat(0, 1), rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn kac_point_sums_to_one_and_rejects_zero() {
        for tag in tags_up_to(8) {
            let d = diagram_for(tag).unwrap();
            let labels: Vec<u64> = (0..d.nodes as u64).collect();
            let (x, _) = kac_point(tag, &labels).unwrap();
            let total = x.into_iter().fold(rat(0, 1), |s, v| s + v);
            assert_eq!(total, rat(1, 1));
        }
        assert!(matches!(
            kac_point(TypeTag::new(Family::C, 2).unwrap(), &[0, 0, 0]),
            Err(Error::AllZeroLabels)
        ));
    }

    #[test]
    fn low_rank_diagrams_are_rejected() {
        assert!(diagram_for(TypeTag::new(Family::B, 2).unwrap()).is_err());
        assert!(diagram_for(TypeTag::new(Family::D, 3).unwrap()).is_err());
    }
}
