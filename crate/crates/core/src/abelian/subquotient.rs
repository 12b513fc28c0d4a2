//! Subquotients of free lattices with canonical generators.
//!
//! Given generating sets S and T of lattices in an ambient `Z^n` with
//! span(T) contained in span(S), this computes the canonical form of
//! span(S)/span(T) together with ambient representatives of the canonical
//! generators and a coordinate map for arbitrary elements of span(S).
//! Every homology-type value in the crate is produced this way, which is
//! what makes induced maps computable on canonical generators.

use super::group::FgAbGroup;
use super::hom::GroupHom;
use super::matrix::{smith_normal_form, IntMatrix, Smith};
use super::CoefficientRing;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient_dim: usize,
    ring: CoefficientRing,
    /// Smith data of the n x k numerator-lattice basis (saturated in
    /// rational mode), used for membership and coordinate solving.
    basis_smith: Smith,
    /// k x k unimodular change of coordinates diagonalizing the denominator.
    u_y: IntMatrix,
    /// Indices into the diagonal coordinates kept as canonical generators,
    /// torsion positions first (with their orders), then free positions.
    torsion_positions: Vec<(usize, BigInt)>,
    free_positions: Vec<usize>,
    group: FgAbGroup,
    /// Ambient representatives of the canonical generators, one per kept position.
    gen_reps: Vec<Vec<BigInt>>,
}

impl Subquotient {
    /// `numerator` and `denominator` are generating sets (columns) of
    /// lattices in `Z^ambient_dim`; the denominator must lie in the span of
    /// the numerator.
    pub fn new(
        ambient_dim: usize,
        numerator: &IntMatrix,
        denominator: &IntMatrix,
        ring: CoefficientRing,
    ) -> Result<Subquotient> {
        assert_eq!(numerator.rows(), ambient_dim);
        assert_eq!(denominator.rows(), ambient_dim);

        // basis of the numerator lattice (its saturation in rational mode)
        let ns = smith_normal_form(numerator);
        let mut basis_cols = Vec::with_capacity(ns.rank);
        for i in 0..ns.rank {
            let mut col = ns.u_inv.column(i);
            if ring == CoefficientRing::Integral {
                let d = ns.diagonal_entry(i);
                for x in &mut col {
                    *x *= d;
                }
            }
            basis_cols.push(col);
        }
        let basis = IntMatrix::from_columns(ambient_dim, &basis_cols);
        let basis_smith = smith_normal_form(&basis);
        let k = basis.cols();

        // denominator in basis coordinates
        let mut y_cols = Vec::with_capacity(denominator.cols());
        for j in 0..denominator.cols() {
            let col = denominator.column(j);
            let y = super::matrix::solve(&basis_smith, &col).ok_or_else(|| {
                Error::Invalid("denominator lattice not contained in numerator".into())
            })?;
            y_cols.push(y);
        }
        let y = IntMatrix::from_columns(k, &y_cols);
        let ys = smith_normal_form(&y);

        let mut torsion_positions = Vec::new();
        let mut free_positions = Vec::new();
        for i in 0..k {
            let d = if i < k.min(y.cols()) {
                ys.diagonal_entry(i).clone()
            } else {
                BigInt::zero()
            };
            if d.is_zero() {
                free_positions.push(i);
            } else if ring == CoefficientRing::Integral && d > BigInt::from(1) {
                torsion_positions.push((i, d));
            }
            // d == 1, or any nonzero d in rational mode: coordinate dies
        }
        let group = FgAbGroup::from_cyclic_factors(
            free_positions.len(),
            torsion_positions.iter().map(|(_, d)| d.clone()).collect(),
        );
        debug_assert_eq!(group.num_generators(), torsion_positions.len() + free_positions.len());

        let w = basis.mul(&ys.u_inv);
        let mut gen_reps = Vec::new();
        for (i, _) in &torsion_positions {
            gen_reps.push(w.column(*i));
        }
        for i in &free_positions {
            gen_reps.push(w.column(*i));
        }

        Ok(Subquotient {
            ambient_dim,
            ring,
            basis_smith,
            u_y: ys.u,
            torsion_positions,
            free_positions,
            group,
            gen_reps,
        })
    }

    /// The quotient of the full ambient lattice by the given relations.
    pub fn of_quotient(
        ambient_dim: usize,
        relations: &IntMatrix,
        ring: CoefficientRing,
    ) -> Result<Subquotient> {
        Subquotient::new(ambient_dim, &IntMatrix::identity(ambient_dim), relations, ring)
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    /// Ambient representative of the i-th canonical generator.
    pub fn generator_rep(&self, i: usize) -> &[BigInt] {
        &self.gen_reps[i]
    }

    /// Is the ambient vector in the numerator lattice?
    pub fn contains(&self, v: &[BigInt]) -> bool {
        super::matrix::solve(&self.basis_smith, v).is_some()
    }

    /// Canonical coordinates of an ambient vector of the numerator lattice.
    pub fn classify(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        let x = super::matrix::solve(&self.basis_smith, v)
            .ok_or_else(|| Error::Invalid("vector outside the numerator lattice".into()))?;
        let coords = self.u_y.mul_vec(&x);
        let mut out = Vec::with_capacity(self.group.num_generators());
        for (i, _) in &self.torsion_positions {
            out.push(coords[*i].clone());
        }
        for i in &self.free_positions {
            out.push(coords[*i].clone());
        }
        self.group.reduce_coords(&mut out);
        Ok(out)
    }

    /// The homomorphism induced on subquotient values by an ambient linear
    /// map that carries numerator into numerator and denominator into
    /// denominator.
    pub fn induced_hom(&self, target: &Subquotient, f: &IntMatrix) -> Result<GroupHom> {
        assert_eq!(f.cols(), self.ambient_dim);
        assert_eq!(f.rows(), target.ambient_dim);
        let n_src = self.group.num_generators();
        let mut m = IntMatrix::zero(target.group().num_generators(), n_src);
        for j in 0..n_src {
            let image = f.mul_vec(self.generator_rep(j));
            let coords = target.classify(&image)?;
            for (i, c) in coords.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        GroupHom::new(self.group.clone(), target.group().clone(), m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_z_by_2z() {
        let sq = Subquotient::new(
            1,
            &IntMatrix::identity(1),
            &IntMatrix::from_rows(&[vec![2]]),
            CoefficientRing::Integral,
        )
        .unwrap();
        assert_eq!(sq.group(), &FgAbGroup::cyclic(2));
        let c = sq.classify(&[BigInt::from(3)]).unwrap();
        assert_eq!(c, vec![BigInt::from(1)]);
    }

    #[test]
    fn saturated_quotient_is_free() {
        // Z^2 / <(2,0)>: integrally Z + Z/2, rationally Q
        let den = IntMatrix::from_rows(&[vec![2], vec![0]]);
        let sq = Subquotient::of_quotient(2, &den, CoefficientRing::Integral).unwrap();
        assert_eq!(
            sq.group(),
            &FgAbGroup::from_cyclic_factors(1, vec![BigInt::from(2)])
        );
        let sq = Subquotient::of_quotient(2, &den, CoefficientRing::Rational).unwrap();
        assert_eq!(sq.group(), &FgAbGroup::free(1));
    }

    #[test]
    fn classify_respects_generators() {
        // Z^3 / <2e1, 6e2>
        let den = IntMatrix::from_rows(&[vec![2, 0], vec![0, 6], vec![0, 0]]);
        let sq = Subquotient::of_quotient(3, &den, CoefficientRing::Integral).unwrap();
        assert_eq!(
            sq.group(),
            &FgAbGroup::from_cyclic_factors(1, vec![BigInt::from(2), BigInt::from(6)])
        );
        for i in 0..sq.group().num_generators() {
            let rep = sq.generator_rep(i).to_vec();
            let coords = sq.classify(&rep).unwrap();
            let expected: Vec<BigInt> = (0..sq.group().num_generators())
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect();
            assert_eq!(coords, expected, "generator {i} must classify to e_{i}");
        }
    }

    #[test]
    fn classification_is_additive() {
        let den = IntMatrix::from_rows(&[vec![4, 1], vec![0, 3]]);
        let sq = Subquotient::of_quotient(2, &den, CoefficientRing::Integral).unwrap();
        let a = vec![BigInt::from(3), BigInt::from(5)];
        let b = vec![BigInt::from(-2), BigInt::from(7)];
        let sum: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let mut lhs = sq.classify(&sum).unwrap();
        let ca = sq.classify(&a).unwrap();
        let cb = sq.classify(&b).unwrap();
        let mut rhs: Vec<BigInt> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
        sq.group().reduce_coords(&mut rhs);
        sq.group().reduce_coords(&mut lhs);
        assert_eq!(lhs, rhs);
    }
}
