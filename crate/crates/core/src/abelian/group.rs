//! Finitely generated abelian groups in canonical invariant-factor form.

use super::matrix::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// A finitely generated abelian group `Z^r + Z/d1 + Z/d2 + ...` with
/// `d1 | d2 | ...` and every `di >= 2`. Two values are isomorphic iff they
/// are field-wise equal.
///
/// Generator convention used throughout the crate: the torsion generators
/// come first (in invariant-factor order), then the free generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Cyclic group of the given order; `0` means `Z`, `1` the trivial group.
    pub fn cyclic(order: i64) -> Self {
        FgAbGroup::from_cyclic_factors(0, vec![BigInt::from(order)])
    }

    /// Canonicalize an arbitrary direct sum of cyclic groups. Factors equal
    /// to `0` contribute free rank, factors equal to `1` vanish, and the rest
    /// are recombined into a divisibility chain.
    pub fn from_cyclic_factors(free_rank: usize, factors: Vec<BigInt>) -> Self {
        let mut free = free_rank;
        let mut finite = Vec::new();
        for f in factors {
            let f = if f.sign() == num_bigint::Sign::Minus { -f } else { f };
            if f.is_zero() {
                free += 1;
            } else if !f.is_one() {
                finite.push(f);
            }
        }
        FgAbGroup {
            free_rank: free,
            torsion: recombine(finite),
        }
    }

    /// Canonical form of `Z^generators / column-span(relations)`.
    pub fn from_presentation(generators: usize, relations: &IntMatrix) -> Self {
        assert_eq!(
            relations.rows(),
            generators,
            "relations must have one row per generator"
        );
        let s = smith_normal_form(relations);
        let mut factors = Vec::new();
        for i in 0..s.rank {
            factors.push(s.diagonal_entry(i).clone());
        }
        FgAbGroup::from_cyclic_factors(generators - s.rank, factors)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of canonical generators (torsion generators then free ones).
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of the i-th canonical generator; `None` for free generators.
    pub fn generator_order(&self, i: usize) -> Option<&BigInt> {
        self.torsion.get(i)
    }

    /// Relation matrix of the canonical presentation: one column `di * ei`
    /// per torsion generator, in an ambient of all generators.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.num_generators();
        let mut m = IntMatrix::zero(n, self.torsion.len());
        for (j, d) in self.torsion.iter().enumerate() {
            m.set(j, j, d.clone());
        }
        m
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut factors = self.torsion.clone();
        factors.extend(other.torsion.iter().cloned());
        FgAbGroup::from_cyclic_factors(self.free_rank + other.free_rank, factors)
    }

    /// Reduce a coordinate vector on the canonical generators: torsion
    /// coordinates into `[0, di)`, free coordinates unchanged.
    pub fn reduce_coords(&self, coords: &mut [BigInt]) {
        assert_eq!(coords.len(), self.num_generators());
        for (i, d) in self.torsion.iter().enumerate() {
            coords[i] = coords[i].mod_floor(d);
        }
    }

    /// Rendering grammar used by reports: `Z^r (+ Z/d1 + Z/d2 ...)`,
    /// with `0` for the trivial group.
    pub fn render(&self) -> String {
        if self.is_trivial() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        parts.join(" + ")
    }

    /// Rendering for the rational mode, where the value is a Q-vector space
    /// of dimension `free_rank` (rational-mode groups carry no torsion).
    pub fn render_rational(&self) -> String {
        debug_assert!(self.torsion.is_empty());
        match self.free_rank {
            0 => "0".to_string(),
            1 => "Q".to_string(),
            r => format!("Q^{r}"),
        }
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Recombine a multiset of finite cyclic orders (each >= 2) into the
/// canonical invariant-factor chain.
fn recombine(mut finite: Vec<BigInt>) -> Vec<BigInt> {
    if finite.is_empty() {
        return finite;
    }
    finite.sort();
    if chain_holds(&finite) {
        return finite;
    }
    // bucket prime-power contributions, largest exponent first
    let mut buckets: std::collections::BTreeMap<BigInt, Vec<u32>> = Default::default();
    for f in &finite {
        for (p, e) in factorize(f) {
            buckets.entry(p).or_default().push(e);
        }
    }
    let mut depth = 0;
    for exps in buckets.values_mut() {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        depth = depth.max(exps.len());
    }
    let mut chain = Vec::with_capacity(depth);
    for j in 0..depth {
        let mut factor = BigInt::one();
        for (p, exps) in &buckets {
            if let Some(e) = exps.get(j) {
                factor *= p.pow(*e);
            }
        }
        chain.push(factor);
    }
    chain.reverse();
    chain
}

fn chain_holds(sorted: &[BigInt]) -> bool {
    sorted.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
}

fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut e = 0;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}
