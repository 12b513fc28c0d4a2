//! Homomorphisms between canonical finitely generated abelian groups,
//! given by integer matrices on the canonical generators.

use super::group::FgAbGroup;
use super::matrix::{kernel_basis, IntMatrix};
use super::subquotient::Subquotient;
use super::CoefficientRing;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// Homomorphism `source -> target`. The matrix has one column per source
/// generator and one row per target generator (torsion generators first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Validates that the matrix respects torsion: the image of a torsion
    /// generator of order d must be annihilated by d in the target.
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.num_generators() || matrix.cols() != source.num_generators() {
            return Err(Error::Mismatch(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.num_generators(),
                source.num_generators()
            )));
        }
        for (j, d) in source.torsion().iter().enumerate() {
            for i in 0..target.num_generators() {
                let scaled = d * matrix.get(i, j);
                match target.generator_order(i) {
                    Some(e) => {
                        if !(&scaled % e).is_zero() {
                            return Err(Error::MalformedHom(j));
                        }
                    }
                    None => {
                        if !scaled.is_zero() {
                            return Err(Error::MalformedHom(j));
                        }
                    }
                }
            }
        }
        let mut h = GroupHom {
            source,
            target,
            matrix,
        };
        h.reduce();
        Ok(h)
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.num_generators()),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zero(target.num_generators(), source.num_generators()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Canonical representative: torsion rows reduced into `[0, d)`.
    fn reduce(&mut self) {
        for i in 0..self.target.num_generators() {
            if let Some(d) = self.target.generator_order(i).cloned() {
                for j in 0..self.source.num_generators() {
                    let x = num_integer::Integer::mod_floor(self.matrix.get(i, j), &d);
                    self.matrix.set(i, j, x);
                }
            }
        }
    }

    /// Composition `self . inner` (apply `inner` first).
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.target != self.source {
            return Err(Error::Mismatch(
                "composition: inner target differs from outer source".into(),
            ));
        }
        let mut h = GroupHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        };
        h.reduce();
        Ok(h)
    }

    pub fn apply(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut out = self.matrix.mul_vec(coords);
        self.target.reduce_coords(&mut out);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let mut id = GroupHom::identity(&self.source);
        id.reduce();
        self.matrix == id.matrix
    }

    /// Equality as homomorphisms (same endpoints, equal canonical matrices).
    pub fn equiv(&self, other: &GroupHom) -> bool {
        self.source == other.source && self.target == other.target && self.matrix == other.matrix
    }

    /// Kernel, image and cokernel in canonical form, computed by lifting to
    /// free presentations. In rational mode the same data is interpreted over
    /// Q, which saturates the relevant lattices.
    pub fn kernel_image_cokernel(
        &self,
        ring: CoefficientRing,
    ) -> Result<(FgAbGroup, FgAbGroup, FgAbGroup)> {
        let n1 = self.source.num_generators();
        let n2 = self.target.num_generators();
        let r1 = self.source.relation_matrix();
        let r2 = self.target.relation_matrix();

        // kernel: preimage of the relation lattice, modulo source relations
        let stacked = self.matrix.hstack(&r2);
        let ker = kernel_basis(&stacked);
        let mut pre_cols = Vec::new();
        for j in 0..ker.cols() {
            let col: Vec<BigInt> = (0..n1).map(|i| ker.get(i, j).clone()).collect();
            pre_cols.push(col);
        }
        let preimage = IntMatrix::from_columns(n1, &pre_cols);
        let kernel = Subquotient::new(n1, &preimage, &r1, ring)?.group().clone();

        let image_num = self.matrix.hstack(&r2);
        let image = Subquotient::new(n2, &image_num, &r2, ring)?.group().clone();

        let coker = Subquotient::new(n2, &IntMatrix::identity(n2), &image_num, ring)?
            .group()
            .clone();
        Ok((kernel, image, coker))
    }

    pub fn is_isomorphism(&self, ring: CoefficientRing) -> Result<bool> {
        let (ker, _, coker) = self.kernel_image_cokernel(ring)?;
        Ok(ker.is_trivial() && coker.is_trivial())
    }
}

/// Canonical-form equality; isomorphism classes of canonical groups coincide
/// with field-wise equality.
pub fn iso_check(g1: &FgAbGroup, g2: &FgAbGroup) -> bool {
    g1 == g2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kio_multiplication_by_two_on_z() {
        let z = FgAbGroup::free(1);
        let h = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[vec![2]])).unwrap();
        let (k, i, c) = h.kernel_image_cokernel(CoefficientRing::Integral).unwrap();
        assert!(k.is_trivial());
        assert_eq!(i, FgAbGroup::free(1));
        assert_eq!(c, FgAbGroup::cyclic(2));
    }

    #[test]
    fn kio_identity_on_z6() {
        let z6 = FgAbGroup::cyclic(6);
        let h = GroupHom::identity(&z6);
        let (k, i, c) = h.kernel_image_cokernel(CoefficientRing::Integral).unwrap();
        assert!(k.is_trivial());
        assert_eq!(i, z6);
        assert!(c.is_trivial());
        assert!(h.is_isomorphism(CoefficientRing::Integral).unwrap());
    }

    #[test]
    fn kio_zero_map_z2_to_z() {
        let h = GroupHom::zero(&FgAbGroup::free(2), &FgAbGroup::free(1));
        let (k, i, c) = h.kernel_image_cokernel(CoefficientRing::Integral).unwrap();
        assert_eq!(k, FgAbGroup::free(2));
        assert!(i.is_trivial());
        assert_eq!(c, FgAbGroup::free(1));
    }

    #[test]
    fn torsion_respect_is_enforced() {
        let z2 = FgAbGroup::cyclic(2);
        let z = FgAbGroup::free(1);
        assert!(GroupHom::new(z2.clone(), z.clone(), IntMatrix::from_rows(&[vec![1]])).is_err());
        // Z/2 -> Z/4 must land in the 2-torsion
        let z4 = FgAbGroup::cyclic(4);
        assert!(GroupHom::new(z2.clone(), z4.clone(), IntMatrix::from_rows(&[vec![1]])).is_err());
        assert!(GroupHom::new(z2, z4, IntMatrix::from_rows(&[vec![2]])).is_ok());
    }

    #[test]
    fn rational_mode_saturates() {
        let z = FgAbGroup::free(1);
        let h = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[vec![2]])).unwrap();
        let (k, i, c) = h.kernel_image_cokernel(CoefficientRing::Rational).unwrap();
        assert!(k.is_trivial());
        assert_eq!(i, FgAbGroup::free(1));
        assert!(c.is_trivial(), "x2 is a Q-isomorphism");
        assert!(h.is_isomorphism(CoefficientRing::Rational).unwrap());
    }

    #[test]
    fn rank_additivity_at_free_level() {
        let h = GroupHom::new(
            FgAbGroup::free(3),
            FgAbGroup::free(2),
            IntMatrix::from_rows(&[vec![1, 0, 1], vec![0, 2, 2]]),
        )
        .unwrap();
        let (k, i, _) = h.kernel_image_cokernel(CoefficientRing::Integral).unwrap();
        assert_eq!(k.free_rank() + i.free_rank(), 3);
    }
}
