//! Exact arithmetic for finitely generated abelian groups: integer matrices
//! and Smith normal form, canonical invariant-factor presentations,
//! homomorphisms with kernels/images/cokernels, subquotients with canonical
//! generators, and the universal-coefficient bifunctors.

pub mod group;
pub mod hom;
pub mod matrix;
pub mod subquotient;
pub mod uct;

pub use group::FgAbGroup;
pub use hom::{iso_check, GroupHom};
pub use matrix::{
    hnf_columns, kernel_basis, rank, same_column_lattice, saturation_basis, smith_normal_form,
    solve, IntMatrix, Smith,
};
pub use subquotient::Subquotient;
pub use uct::{ext, hom_group, tensor, tor, uct_coefficients, UctVariant};

use crate::{Error, Result};
use num_bigint::BigInt;

/// The ground ring of a computation: exact integers, or exact rationals
/// (in which case every value is a Q-vector space and lattice comparisons
/// happen up to saturation).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integral,
    Rational,
}

/// Coefficient group for (co)homology: a finitely generated abelian group,
/// or the rationals handled as a separate exact field computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integral(FgAbGroup),
    Rational,
}

impl Coefficients {
    pub fn integers() -> Self {
        Coefficients::Integral(FgAbGroup::free(1))
    }

    pub fn ring(&self) -> CoefficientRing {
        match self {
            Coefficients::Integral(_) => CoefficientRing::Integral,
            Coefficients::Rational => CoefficientRing::Rational,
        }
    }

    /// Number of generators of the free cover of G (1 for the rationals).
    pub fn cover_rank(&self) -> usize {
        match self {
            Coefficients::Integral(g) => g.num_generators(),
            Coefficients::Rational => 1,
        }
    }

    /// Relation columns of the free presentation of G (empty for Z^k and Q).
    pub fn cover_relations(&self) -> IntMatrix {
        match self {
            Coefficients::Integral(g) => g.relation_matrix(),
            Coefficients::Rational => IntMatrix::zero(1, 0),
        }
    }

    /// The coefficient group itself as a group value (degree-0 value of a point).
    pub fn as_group(&self) -> FgAbGroup {
        match self {
            Coefficients::Integral(g) => g.clone(),
            Coefficients::Rational => FgAbGroup::free(1),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Coefficients::Integral(g) => g.render(),
            Coefficients::Rational => "Q".to_string(),
        }
    }

    /// Render a group value in this coefficient mode.
    pub fn render_value(&self, g: &FgAbGroup) -> String {
        match self {
            Coefficients::Integral(_) => g.render(),
            Coefficients::Rational => g.render_rational(),
        }
    }

    /// Parse the coefficient grammar: `Z`, `Z/<m>`, `Q`, and sums with `+`.
    pub fn parse(s: &str) -> Result<Coefficients> {
        let terms: Vec<&str> = s.split('+').map(str::trim).collect();
        if terms.iter().any(|t| t.is_empty()) {
            return Err(Error::UnsupportedCoefficients(format!(
                "empty summand in `{s}`"
            )));
        }
        if terms.iter().any(|&t| t == "Q") {
            if terms.len() > 1 {
                return Err(Error::UnsupportedCoefficients(
                    "Q cannot be combined in a sum".into(),
                ));
            }
            return Ok(Coefficients::Rational);
        }
        let mut free = 0usize;
        let mut factors: Vec<BigInt> = Vec::new();
        for t in terms {
            if t == "Z" {
                free += 1;
            } else if let Some(m) = t.strip_prefix("Z/") {
                let m: BigInt = m.parse().map_err(|_| {
                    Error::UnsupportedCoefficients(format!("bad modulus in `{t}`"))
                })?;
                if m < BigInt::from(2) {
                    return Err(Error::UnsupportedCoefficients(format!(
                        "modulus must be at least 2 in `{t}`"
                    )));
                }
                factors.push(m);
            } else {
                return Err(Error::UnsupportedCoefficients(format!(
                    "unrecognized summand `{t}`"
                )));
            }
        }
        Ok(Coefficients::Integral(FgAbGroup::from_cyclic_factors(
            free, factors,
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_grammar() {
        assert_eq!(Coefficients::parse("Z").unwrap(), Coefficients::integers());
        assert_eq!(
            Coefficients::parse("Z/6").unwrap(),
            Coefficients::Integral(FgAbGroup::cyclic(6))
        );
        assert_eq!(Coefficients::parse("Q").unwrap(), Coefficients::Rational);
        let g = Coefficients::parse("Z/2 + Z").unwrap();
        assert_eq!(
            g,
            Coefficients::Integral(FgAbGroup::from_cyclic_factors(1, vec![BigInt::from(2)]))
        );
        assert!(Coefficients::parse("Z/1").is_err());
        assert!(Coefficients::parse("Q + Z").is_err());
        assert!(Coefficients::parse("R").is_err());
    }
}
