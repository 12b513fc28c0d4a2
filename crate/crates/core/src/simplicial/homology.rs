//! Simplicial (co)homology of pairs with coefficients, presented as
//! subquotients with canonical generators so that induced and connecting
//! homomorphisms come out as explicit matrices.
//!
//! Chains with coefficients in G are modelled integrally: the chain group
//! `C_n (x) G` is the quotient of `C_n (x) Z^k` (k the generator count of a
//! free presentation of G) by one relation block per simplex. Numerators and
//! denominators of the homology subquotients then live in an ambient free
//! lattice and all the exact machinery applies unchanged.

use super::chains::{chain_map_matrix, connecting_matrix, PairChains};
use super::complex::SimplicialPair;
use super::map::SimplicialMap;
use crate::abelian::{
    kernel_basis, rank, smith_normal_form, Coefficients, FgAbGroup, GroupHom, IntMatrix,
    Subquotient, UctVariant,
};
use crate::Result;
use num_bigint::BigInt;

/// `I_k (x) R` block-diagonal relation matrix: one copy of the coefficient
/// relations per chain-basis element.
fn relation_block(k: usize, rel: &IntMatrix) -> IntMatrix {
    let ng = rel.rows();
    let tg = rel.cols();
    let mut m = IntMatrix::zero(k * ng, k * tg);
    for s in 0..k {
        for r in 0..ng {
            for c in 0..tg {
                let x = rel.get(r, c);
                if !num_traits::Zero::is_zero(x) {
                    m.set(s * ng + r, s * tg + c, x.clone());
                }
            }
        }
    }
    m
}

fn project_rows(m: &IntMatrix, rows: usize) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = (0..m.cols())
        .map(|j| (0..rows).map(|i| m.get(i, j).clone()).collect())
        .collect();
    IntMatrix::from_columns(rows, &cols)
}

/// Subquotient presentation of `H_n(total, sub; G)`.
///
/// The chains must have been built at least to degree `n + 1`.
pub fn homology_subquotient(
    chains: &PairChains,
    n: usize,
    coeffs: &Coefficients,
) -> Result<Subquotient> {
    assert!(chains.max_degree() >= n + 1 || chains.dim(n + 1) == 0);
    let ng = coeffs.cover_rank();
    let rel = coeffs.cover_relations();
    let k_n = chains.dim(n);
    let ambient = k_n * ng;
    let d_n = chains.boundary(n);
    let d_np1 = chains.boundary(n + 1);

    let numerator = if d_n.rows() == 0 || ng == 0 {
        IntMatrix::identity(ambient)
    } else {
        let stacked = d_n
            .kron_identity(ng)
            .hstack(&relation_block(d_n.rows(), &rel));
        project_rows(&kernel_basis(&stacked), ambient)
    };
    let denominator = d_np1
        .kron_identity(ng)
        .hstack(&relation_block(k_n, &rel));
    Subquotient::new(ambient, &numerator, &denominator, coeffs.ring())
}

/// Subquotient presentation of `H^n(total, sub; G)` on relative cochains.
pub fn cohomology_subquotient(
    chains: &PairChains,
    n: usize,
    coeffs: &Coefficients,
) -> Result<Subquotient> {
    assert!(chains.max_degree() >= n + 1 || chains.dim(n + 1) == 0);
    let ng = coeffs.cover_rank();
    let rel = coeffs.cover_relations();
    let k_n = chains.dim(n);
    let ambient = k_n * ng;
    let delta_out = chains.boundary(n + 1).transpose();
    let delta_in = chains.boundary(n).transpose();

    let numerator = if delta_out.rows() == 0 || ng == 0 {
        IntMatrix::identity(ambient)
    } else {
        let stacked = delta_out
            .kron_identity(ng)
            .hstack(&relation_block(delta_out.rows(), &rel));
        project_rows(&kernel_basis(&stacked), ambient)
    };
    let denominator = delta_in
        .kron_identity(ng)
        .hstack(&relation_block(k_n, &rel));
    Subquotient::new(ambient, &numerator, &denominator, coeffs.ring())
}

/// Integral homology by the classical normal-form formula: free rank from
/// the two boundary ranks, torsion from the invariant factors of the
/// incoming boundary. Independent of the subquotient route.
pub fn integral_homology(chains: &PairChains, n: usize) -> FgAbGroup {
    let k_n = chains.dim(n);
    let d_n = chains.boundary(n);
    let d_np1 = chains.boundary(n + 1);
    let s = smith_normal_form(&d_np1);
    let mut torsion = Vec::new();
    for i in 0..s.rank {
        torsion.push(s.diagonal_entry(i).clone());
    }
    FgAbGroup::from_cyclic_factors(k_n - rank(&d_n) - s.rank, torsion)
}

/// `H_n(total, sub; G)` as a canonical value. Integral coefficients go
/// through the universal-coefficient decomposition of the integral answer;
/// rational coefficients are a rank computation.
pub fn homology_value(chains: &PairChains, n: usize, coeffs: &Coefficients) -> FgAbGroup {
    match coeffs {
        Coefficients::Rational => {
            let betti = chains.dim(n) - rank(&chains.boundary(n)) - rank(&chains.boundary(n + 1));
            FgAbGroup::free(betti)
        }
        Coefficients::Integral(g) => {
            let h_n = integral_homology(chains, n);
            let h_prev = if n == 0 {
                FgAbGroup::trivial()
            } else {
                integral_homology(chains, n - 1)
            };
            crate::abelian::uct_coefficients(&h_n, &h_prev, g, UctVariant::Homology)
        }
    }
}

/// `H^n(total, sub; G)` as a canonical value (see `homology_value`).
pub fn cohomology_value(chains: &PairChains, n: usize, coeffs: &Coefficients) -> FgAbGroup {
    match coeffs {
        Coefficients::Rational => homology_value(chains, n, coeffs),
        Coefficients::Integral(g) => {
            let h_n = integral_homology(chains, n);
            let h_prev = if n == 0 {
                FgAbGroup::trivial()
            } else {
                integral_homology(chains, n - 1)
            };
            crate::abelian::uct_coefficients(&h_n, &h_prev, g, UctVariant::Cohomology)
        }
    }
}

/// Convenience entry points building the chain data on the fly.
pub fn homology(pair: &SimplicialPair, n: usize, coeffs: &Coefficients) -> FgAbGroup {
    homology_value(&PairChains::new(pair, n + 1), n, coeffs)
}

pub fn cohomology(pair: &SimplicialPair, n: usize, coeffs: &Coefficients) -> FgAbGroup {
    cohomology_value(&PairChains::new(pair, n + 1), n, coeffs)
}

/// The homomorphism induced by a simplicial map on (co)homology at degree
/// `n`, on canonical generators. Cohomology is contravariant: the result
/// maps the target pair's group to the source pair's.
pub fn induced_hom(
    map: &SimplicialMap,
    n: usize,
    coeffs: &Coefficients,
    variant: UctVariant,
) -> Result<GroupHom> {
    let src = PairChains::new(map.source(), n + 1);
    let tgt = PairChains::new(map.target(), n + 1);
    induced_hom_on(map, &src, &tgt, n, coeffs, variant)
}

/// As `induced_hom`, reusing prebuilt chain data.
pub fn induced_hom_on(
    map: &SimplicialMap,
    src: &PairChains,
    tgt: &PairChains,
    n: usize,
    coeffs: &Coefficients,
    variant: UctVariant,
) -> Result<GroupHom> {
    let ng = coeffs.cover_rank();
    let f = chain_map_matrix(map, src, tgt, n);
    match variant {
        UctVariant::Homology => {
            let sq_src = homology_subquotient(src, n, coeffs)?;
            let sq_tgt = homology_subquotient(tgt, n, coeffs)?;
            sq_src.induced_hom(&sq_tgt, &f.kron_identity(ng))
        }
        UctVariant::Cohomology => {
            let sq_tgt = cohomology_subquotient(tgt, n, coeffs)?;
            let sq_src = cohomology_subquotient(src, n, coeffs)?;
            sq_tgt.induced_hom(&sq_src, &f.transpose().kron_identity(ng))
        }
    }
}

/// Connecting homomorphism of the pair: for homology
/// `H_n(X, A; G) -> H_{n-1}(A; G)` (requires `n >= 1`); for cohomology
/// `H^{n-1}(A; G) -> H^n(X, A; G)`.
pub fn pair_connecting(
    pair: &SimplicialPair,
    n: usize,
    coeffs: &Coefficients,
    variant: UctVariant,
) -> Result<GroupHom> {
    assert!(n >= 1, "connecting homomorphism needs a positive degree");
    let rel = PairChains::new(pair, n + 1);
    let sub = PairChains::new(&pair.sub_as_pair(), n);
    pair_connecting_on(&rel, &sub, n, coeffs, variant)
}

/// As `pair_connecting`, reusing prebuilt chain data (`rel` for the pair,
/// `sub` for the subcomplex as an absolute complex).
pub fn pair_connecting_on(
    rel: &PairChains,
    sub: &PairChains,
    n: usize,
    coeffs: &Coefficients,
    variant: UctVariant,
) -> Result<GroupHom> {
    let ng = coeffs.cover_rank();
    let d = connecting_matrix(rel, sub, n);
    match variant {
        UctVariant::Homology => {
            let sq_rel = homology_subquotient(rel, n, coeffs)?;
            let sq_sub = homology_subquotient(sub, n - 1, coeffs)?;
            sq_rel.induced_hom(&sq_sub, &d.kron_identity(ng))
        }
        UctVariant::Cohomology => {
            let sq_sub = cohomology_subquotient(sub, n - 1, coeffs)?;
            let sq_rel = cohomology_subquotient(rel, n, coeffs)?;
            sq_sub.induced_hom(&sq_rel, &d.transpose().kron_identity(ng))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::complex::SimplicialComplex;
    use std::collections::BTreeMap;

    fn z() -> Coefficients {
        Coefficients::integers()
    }

    fn hollow_triangle() -> SimplicialPair {
        SimplicialPair::absolute(
            SimplicialComplex::from_maximal(
                [],
                [
                    vec!["a".into(), "b".into()],
                    vec!["b".into(), "c".into()],
                    vec!["a".into(), "c".into()],
                ],
            )
            .unwrap(),
        )
    }

    #[test]
    fn circle_homology() {
        let pair = hollow_triangle();
        assert_eq!(homology(&pair, 1, &z()), FgAbGroup::free(1));
        assert_eq!(homology(&pair, 0, &z()), FgAbGroup::free(1));
        assert_eq!(homology(&pair, 2, &z()), FgAbGroup::trivial());
        assert_eq!(
            homology(&pair, 1, &Coefficients::Integral(FgAbGroup::cyclic(2))),
            FgAbGroup::cyclic(2)
        );
        assert_eq!(cohomology(&pair, 1, &z()), FgAbGroup::free(1));
        assert_eq!(
            homology(&pair, 1, &Coefficients::Rational),
            FgAbGroup::free(1)
        );
    }

    #[test]
    fn components_count() {
        let two = SimplicialPair::absolute(
            SimplicialComplex::from_maximal(["u".into(), "v".into()], []).unwrap(),
        );
        assert_eq!(homology(&two, 0, &z()), FgAbGroup::free(2));
    }

    #[test]
    fn point_cohomology_is_g() {
        let pt = SimplicialPair::absolute(SimplicialComplex::point("p"));
        let g = Coefficients::Integral(FgAbGroup::from_cyclic_factors(
            1,
            vec![BigInt::from(4)],
        ));
        assert_eq!(cohomology(&pt, 0, &g), g.as_group());
        assert_eq!(homology(&pt, 0, &g), g.as_group());
        assert_eq!(cohomology(&pt, 1, &g), FgAbGroup::trivial());
    }

    #[test]
    fn two_triangles_additivity() {
        let c = SimplicialComplex::from_maximal(
            [],
            [
                vec!["a".into(), "b".into()],
                vec!["b".into(), "c".into()],
                vec!["a".into(), "c".into()],
                vec!["x".into(), "y".into()],
                vec!["y".into(), "z".into()],
                vec!["x".into(), "z".into()],
            ],
        )
        .unwrap();
        let pair = SimplicialPair::absolute(c);
        assert_eq!(cohomology(&pair, 1, &z()), FgAbGroup::free(2));
    }

    #[test]
    fn subquotient_and_uct_routes_agree() {
        let pair = hollow_triangle();
        let chains = PairChains::new(&pair, 3);
        for n in 0..=2 {
            for coeffs in [
                z(),
                Coefficients::Integral(FgAbGroup::cyclic(2)),
                Coefficients::Integral(FgAbGroup::cyclic(6)),
                Coefficients::Rational,
            ] {
                let direct = homology_subquotient(&chains, n, &coeffs).unwrap();
                assert_eq!(
                    direct.group(),
                    &homology_value(&chains, n, &coeffs),
                    "degree {n}, coefficients {}",
                    coeffs.render()
                );
                let direct = cohomology_subquotient(&chains, n, &coeffs).unwrap();
                assert_eq!(direct.group(), &cohomology_value(&chains, n, &coeffs));
            }
        }
    }

    #[test]
    fn induced_identity_and_constant() {
        let pair = hollow_triangle();
        let id = SimplicialMap::identity(&pair);
        let h = induced_hom(&id, 1, &z(), UctVariant::Homology).unwrap();
        assert!(h.is_identity());
        let constant: BTreeMap<String, String> = pair
            .total()
            .vertices()
            .iter()
            .map(|v| (v.clone(), "a".to_string()))
            .collect();
        let c = SimplicialMap::new(pair.clone(), pair.clone(), constant).unwrap();
        let h = induced_hom(&c, 1, &z(), UctVariant::Homology).unwrap();
        assert!(h.is_zero());
    }

    #[test]
    fn hexagon_wraps_once_onto_triangle() {
        let hexagon = SimplicialPair::absolute(
            SimplicialComplex::from_maximal(
                [],
                (0..6)
                    .map(|i| vec![format!("h{i}"), format!("h{}", (i + 1) % 6)])
                    .collect::<Vec<_>>(),
            )
            .unwrap(),
        );
        let triangle = hollow_triangle();
        let images = ["a", "b", "c", "a", "a", "a"];
        let vm: BTreeMap<String, String> = (0..6)
            .map(|i| (format!("h{i}"), images[i].to_string()))
            .collect();
        let wrap = SimplicialMap::new(hexagon, triangle, vm).unwrap();
        let h = induced_hom(&wrap, 1, &z(), UctVariant::Homology).unwrap();
        assert!(h.is_isomorphism(crate::abelian::CoefficientRing::Integral).unwrap());
        assert_eq!(h.matrix().get(0, 0).magnitude(), &1u32.into());
    }

    #[test]
    fn disk_circle_connecting_is_iso() {
        let filled = SimplicialComplex::from_maximal(
            [],
            [vec!["a".into(), "b".into(), "c".into()]],
        )
        .unwrap();
        let circle = SimplicialComplex::from_maximal(
            [],
            [
                vec!["a".into(), "b".into()],
                vec!["b".into(), "c".into()],
                vec!["a".into(), "c".into()],
            ],
        )
        .unwrap();
        let pair = SimplicialPair::new(filled, circle).unwrap();
        assert_eq!(homology(&pair, 2, &z()), FgAbGroup::free(1));
        let del = pair_connecting(&pair, 2, &z(), UctVariant::Homology).unwrap();
        assert!(del
            .is_isomorphism(crate::abelian::CoefficientRing::Integral)
            .unwrap());
        // and the cohomology coboundary H^1(circle) -> H^2(pair) is an iso too
        let delta = pair_connecting(&pair, 2, &z(), UctVariant::Cohomology).unwrap();
        assert!(delta
            .is_isomorphism(crate::abelian::CoefficientRing::Integral)
            .unwrap());
    }

    #[test]
    fn triangle_relative_to_vertex_has_zero_connecting() {
        let t = hollow_triangle();
        let names: std::collections::BTreeSet<String> = ["a".to_string()].into();
        let sub = t.total().full_subcomplex(&names);
        let pair = SimplicialPair::new(t.total().clone(), sub).unwrap();
        assert_eq!(homology(&pair, 1, &z()), FgAbGroup::free(1));
        let del = pair_connecting(&pair, 1, &z(), UctVariant::Homology).unwrap();
        assert!(del.is_zero());
    }

    use num_bigint::BigInt;
}
