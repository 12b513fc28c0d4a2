//! Relative chain complexes of simplicial pairs: oriented boundary matrices
//! on the quotient basis (simplices of the total complex not in the sub),
//! chain maps of simplicial maps, and the chain-level connecting matrix.

use super::complex::SimplicialPair;
use super::map::SimplicialMap;
use crate::abelian::IntMatrix;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Precomputed relative chain data of a pair up to a fixed degree.
#[derive(Clone, Debug)]
pub struct PairChains {
    pair: SimplicialPair,
    /// bases[d] = ordered relative d-simplices (vertex-index vectors).
    bases: Vec<Vec<Vec<usize>>>,
    positions: Vec<BTreeMap<Vec<usize>, usize>>,
    /// boundaries[d] is the matrix of the boundary operator on relative
    /// d-chains; boundaries[0] has zero rows.
    boundaries: Vec<IntMatrix>,
}

impl PairChains {
    /// Build bases and boundary matrices for degrees `0..=max_degree`.
    pub fn new(pair: &SimplicialPair, max_degree: usize) -> PairChains {
        let mut bases = Vec::with_capacity(max_degree + 1);
        let mut positions = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            let basis: Vec<Vec<usize>> = pair
                .total()
                .simplices_of_dim(d)
                .filter(|s| !pair.in_sub(s))
                .cloned()
                .collect();
            let pos: BTreeMap<Vec<usize>, usize> = basis
                .iter()
                .enumerate()
                .map(|(i, s)| (s.clone(), i))
                .collect();
            bases.push(basis);
            positions.push(pos);
        }
        let mut boundaries = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            let rows = if d == 0 { 0 } else { bases[d - 1].len() };
            let mut m = IntMatrix::zero(rows, bases[d].len());
            if d > 0 {
                for (j, s) in bases[d].iter().enumerate() {
                    let mut sign = BigInt::from(1);
                    for omit in 0..s.len() {
                        let mut face = s.clone();
                        face.remove(omit);
                        if let Some(&i) = positions[d - 1].get(&face) {
                            m.set(i, j, sign.clone());
                        }
                        sign = -sign;
                    }
                }
            }
            boundaries.push(m);
        }
        PairChains {
            pair: pair.clone(),
            bases,
            positions,
            boundaries,
        }
    }

    pub fn pair(&self) -> &SimplicialPair {
        &self.pair
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, d: usize) -> &[Vec<usize>] {
        self.bases.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, d: usize) -> usize {
        self.bases.get(d).map_or(0, Vec::len)
    }

    pub fn position(&self, d: usize, simplex: &[usize]) -> Option<usize> {
        self.positions.get(d).and_then(|p| p.get(simplex).copied())
    }

    /// Boundary matrix at degree `d`; degrees beyond the built range are
    /// empty (their chain groups vanish or were not requested).
    pub fn boundary(&self, d: usize) -> IntMatrix {
        match self.boundaries.get(d) {
            Some(m) => m.clone(),
            None => IntMatrix::zero(self.dim(d.wrapping_sub(1)), 0),
        }
    }
}

/// Matrix of the induced chain map at degree `n` between the relative chain
/// bases of the source and target of a simplicial map. Simplices that
/// degenerate or land in the target subcomplex contribute zero.
pub fn chain_map_matrix(
    map: &SimplicialMap,
    src: &PairChains,
    tgt: &PairChains,
    n: usize,
) -> IntMatrix {
    let mut m = IntMatrix::zero(tgt.dim(n), src.dim(n));
    for (j, s) in src.basis(n).iter().enumerate() {
        let image: Vec<usize> = s
            .iter()
            .map(|&v| {
                let name = map.source().total().vertex_name(v);
                let w = map.vertex_image(name);
                map.target()
                    .total()
                    .vertex_index(w)
                    .expect("validated map image vertex")
            })
            .collect();
        let Some((sorted, sign)) = sort_with_sign(&image) else {
            continue; // degenerate image
        };
        if let Some(i) = tgt.position(n, &sorted) {
            m.set(i, j, BigInt::from(sign));
        }
    }
    m
}

/// Matrix of the chain-level connecting operator: take a relative n-chain of
/// the pair, apply the absolute boundary in the total complex, and read off
/// the part supported on the subcomplex in the basis of `sub_chains`
/// (the subcomplex as an absolute complex).
pub fn connecting_matrix(rel: &PairChains, sub_chains: &PairChains, n: usize) -> IntMatrix {
    let rows = if n == 0 { 0 } else { sub_chains.dim(n - 1) };
    let mut m = IntMatrix::zero(rows, rel.dim(n));
    if n == 0 {
        return m;
    }
    let pair = rel.pair();
    let sub_total = sub_chains.pair().total();
    for (j, s) in rel.basis(n).iter().enumerate() {
        let mut sign = BigInt::from(1);
        for omit in 0..s.len() {
            let mut face = s.clone();
            face.remove(omit);
            if pair.in_sub(&face) {
                let names = pair.total().names_of(&face);
                let idx: Vec<usize> = names
                    .iter()
                    .map(|v| sub_total.vertex_index(v).expect("face lives in sub"))
                    .collect();
                let (sorted, _s) = sort_with_sign(&idx).expect("face has distinct vertices");
                let i = sub_chains
                    .position(n - 1, &sorted)
                    .expect("face is a basis element of the subcomplex");
                let cur = m.get(i, j) + &sign;
                m.set(i, j, cur);
            }
            sign = -sign;
        }
    }
    m
}

/// Sort a vertex tuple, returning the permutation sign; `None` on repeats.
fn sort_with_sign(v: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] == v[j] {
                return None;
            }
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    Some((sorted, if inversions % 2 == 0 { 1 } else { -1 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::complex::SimplicialComplex;
    use num_traits::Zero;

    fn hollow_triangle_pair() -> SimplicialPair {
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
    fn triangle_boundary_columns_sum_to_zero() {
        let chains = PairChains::new(&hollow_triangle_pair(), 1);
        let d1 = chains.boundary(1);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        for j in 0..3 {
            let sum: BigInt = (0..3).map(|i| d1.get(i, j).clone()).sum();
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn single_vertex_has_empty_boundaries() {
        let chains = PairChains::new(&SimplicialPair::absolute(SimplicialComplex::point("p")), 2);
        assert_eq!(chains.boundary(1).cols(), 0);
        assert_eq!(chains.boundary(2).cols(), 0);
    }

    #[test]
    fn filled_triangle_relative_to_boundary() {
        let filled = SimplicialComplex::from_maximal(
            [],
            [vec!["a".into(), "b".into(), "c".into()]],
        )
        .unwrap();
        let boundary = {
            let names: std::collections::BTreeSet<String> =
                ["a".to_string(), "b".to_string(), "c".to_string()].into();
            let mut sub = filled.full_subcomplex(&names);
            // remove the 2-cell: rebuild from edges only
            sub = SimplicialComplex::from_maximal(
                [],
                [
                    vec!["a".into(), "b".into()],
                    vec!["b".into(), "c".into()],
                    vec!["a".into(), "c".into()],
                ],
            )
            .unwrap();
            sub
        };
        let pair = SimplicialPair::new(filled, boundary).unwrap();
        let chains = PairChains::new(&pair, 2);
        // all faces of the 2-simplex lie in sub: the relative boundary is a 0x1 matrix
        let d2 = chains.boundary(2);
        assert_eq!((d2.rows(), d2.cols()), (0, 1));
        assert_eq!(chains.dim(0), 0);
        assert_eq!(chains.dim(1), 0);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let filled = SimplicialComplex::from_maximal(
            [],
            [
                vec!["a".into(), "b".into(), "c".into()],
                vec!["b".into(), "c".into(), "d".into()],
            ],
        )
        .unwrap();
        let chains = PairChains::new(&SimplicialPair::absolute(filled), 2);
        let d1 = chains.boundary(1);
        let d2 = chains.boundary(2);
        assert!(d1.mul(&d2).is_zero());
    }
}
