//! The universal-coefficient bifunctors on canonical groups: tensor product,
//! Tor, Hom and Ext, and the coefficient decompositions built from them.

use super::group::FgAbGroup;
use num_bigint::BigInt;
use num_integer::Integer;

fn pairwise_gcds(a: &FgAbGroup, b: &FgAbGroup) -> Vec<BigInt> {
    let mut out = Vec::new();
    for d in a.torsion() {
        for m in b.torsion() {
            out.push(d.gcd(m));
        }
    }
    out
}

/// `A (x) B` for finitely generated A, B.
pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let mut factors = Vec::new();
    for m in b.torsion() {
        for _ in 0..a.free_rank() {
            factors.push(m.clone());
        }
    }
    for d in a.torsion() {
        for _ in 0..b.free_rank() {
            factors.push(d.clone());
        }
    }
    factors.extend(pairwise_gcds(a, b));
    FgAbGroup::from_cyclic_factors(a.free_rank() * b.free_rank(), factors)
}

/// `Tor(A, B)`: only the torsion parts interact.
pub fn tor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    FgAbGroup::from_cyclic_factors(0, pairwise_gcds(a, b))
}

/// `Hom(A, B)`.
pub fn hom_group(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let mut factors = Vec::new();
    for m in b.torsion() {
        for _ in 0..a.free_rank() {
            factors.push(m.clone());
        }
    }
    factors.extend(pairwise_gcds(a, b));
    FgAbGroup::from_cyclic_factors(a.free_rank() * b.free_rank(), factors)
}

/// `Ext(A, B)`.
pub fn ext(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let mut factors = Vec::new();
    for d in a.torsion() {
        for _ in 0..b.free_rank() {
            factors.push(d.clone());
        }
    }
    factors.extend(pairwise_gcds(a, b));
    FgAbGroup::from_cyclic_factors(0, factors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UctVariant {
    Homology,
    Cohomology,
}

/// Universal-coefficient decomposition for a degree of a free chain complex:
/// homology gives `(H_n (x) G) + Tor(H_{n-1}, G)`, cohomology gives
/// `Hom(H_n, G) + Ext(H_{n-1}, G)`.
pub fn uct_coefficients(
    h_n: &FgAbGroup,
    h_nminus1: &FgAbGroup,
    g: &FgAbGroup,
    variant: UctVariant,
) -> FgAbGroup {
    match variant {
        UctVariant::Homology => tensor(h_n, g).direct_sum(&tor(h_nminus1, g)),
        UctVariant::Cohomology => hom_group(h_n, g).direct_sum(&ext(h_nminus1, g)),
    }
}
