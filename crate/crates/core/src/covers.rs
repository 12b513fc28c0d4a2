//! Border covers of filtered pairs: finite open families with compact
//! enclosure, in the star-union representation.
//!
//! Every open set is a union of open vertex stars over a core vertex set.
//! This turns the point-set predicates into exact combinatorics:
//! containment of members is containment of cores, a member meets the
//! subspace iff its core does, a family of members has nonempty intersection
//! iff some cross-choice of core vertices spans a simplex of the carrier,
//! and the enclosure is the full subcomplex on the vertices missed by every
//! core.

use crate::simplicial::{SimplicialComplex, SimplicialMap, SimplicialPair};
use crate::spaces::{ProperModelMap, SpacePair};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

/// Index of a cover member; products arise from common refinements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CoverIndex {
    Name(String),
    Pair(Box<CoverIndex>, Box<CoverIndex>),
}

impl CoverIndex {
    pub fn name(s: &str) -> CoverIndex {
        CoverIndex::Name(s.to_string())
    }

    pub fn pair(a: CoverIndex, b: CoverIndex) -> CoverIndex {
        CoverIndex::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for CoverIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverIndex::Name(s) => write!(f, "{s}"),
            CoverIndex::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// An open set of the model: the union of the open stars of its core
/// vertices. The empty core is the empty set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarUnionSet {
    core: BTreeSet<String>,
}

impl StarUnionSet {
    pub fn new(core: BTreeSet<String>) -> Self {
        StarUnionSet { core }
    }

    pub fn single(v: &str) -> Self {
        StarUnionSet {
            core: [v.to_string()].into(),
        }
    }

    pub fn empty() -> Self {
        StarUnionSet {
            core: BTreeSet::new(),
        }
    }

    pub fn core(&self) -> &BTreeSet<String> {
        &self.core
    }

    pub fn is_empty_set(&self) -> bool {
        self.core.is_empty()
    }

    /// Point-set containment of star-unions is core containment: the core
    /// vertex itself is covered only by its own star.
    pub fn contained_in(&self, other: &StarUnionSet) -> bool {
        self.core.is_subset(&other.core)
    }

    /// The set meets the full subcomplex on `vertices` iff its core does.
    pub fn meets_vertex_set(&self, vertices: &BTreeSet<String>) -> bool {
        self.core.iter().any(|c| vertices.contains(c))
    }

    pub fn intersect(&self, other: &StarUnionSet) -> StarUnionSet {
        StarUnionSet {
            core: self.core.intersection(&other.core).cloned().collect(),
        }
    }
}

/// A border cover of a pair: a finite indexed family of star-union sets
/// whose enclosure (the subcomplex missed by every member) is compact, with
/// a sub-index family covering the subspace away from the enclosure.
#[derive(Clone, Debug)]
pub struct BorderCover {
    pair: Arc<SpacePair>,
    members: BTreeMap<CoverIndex, StarUnionSet>,
    sub_indices: BTreeSet<CoverIndex>,
    enclosure_vertices: BTreeSet<String>,
}

/// Enclosure vertex set: the vertices missed by every core.
fn enclosure_vertices(
    pair: &SpacePair,
    members: &BTreeMap<CoverIndex, StarUnionSet>,
) -> BTreeSet<String> {
    let mut covered: BTreeSet<&String> = BTreeSet::new();
    for set in members.values() {
        covered.extend(set.core());
    }
    pair.complex()
        .vertices()
        .iter()
        .filter(|v| !covered.contains(v))
        .cloned()
        .collect()
}

/// Check the border-cover conditions without failing: the verdict is false
/// when the enclosure is not compact or the sub-family misses part of the
/// subspace. Unknown vertices are a hard error.
pub fn is_border_cover(
    pair: &SpacePair,
    members: &BTreeMap<CoverIndex, StarUnionSet>,
    sub_indices: &BTreeSet<CoverIndex>,
) -> Result<(bool, SimplicialComplex)> {
    for (index, set) in members {
        for c in set.core() {
            if pair.complex().vertex_index(c).is_none() {
                return Err(Error::UnknownVertex(format!("{c} (member {index})")));
            }
        }
    }
    for index in sub_indices {
        if !members.contains_key(index) {
            return Err(Error::InvalidCover(format!(
                "sub-index {index} is not a member index"
            )));
        }
    }
    let k_vertices = enclosure_vertices(pair, members);
    let enclosure = pair.complex().full_subcomplex(&k_vertices);
    if !pair.vertex_set_is_compact(&k_vertices) {
        return Ok((false, enclosure));
    }
    // sub condition: every subspace simplex met by some core must be met by
    // a sub-indexed core
    let mut covered: BTreeSet<&String> = BTreeSet::new();
    for set in members.values() {
        covered.extend(set.core());
    }
    let mut sub_covered: BTreeSet<&String> = BTreeSet::new();
    for index in sub_indices {
        sub_covered.extend(members[index].core());
    }
    let a = pair.a_vertices();
    for s in pair.complex().all_simplices() {
        let names = pair.complex().names_of(s);
        if !names.iter().all(|v| a.contains(v)) {
            continue;
        }
        if names.iter().any(|v| covered.contains(v)) && !names.iter().any(|v| sub_covered.contains(v))
        {
            return Ok((false, enclosure));
        }
    }
    Ok((true, enclosure))
}

impl BorderCover {
    pub fn new(
        pair: Arc<SpacePair>,
        members: BTreeMap<CoverIndex, StarUnionSet>,
        sub_indices: BTreeSet<CoverIndex>,
    ) -> Result<Self> {
        let (ok, _) = is_border_cover(&pair, &members, &sub_indices)?;
        if !ok {
            return Err(Error::InvalidCover(
                "family is not a border cover of the pair".into(),
            ));
        }
        let enclosure_vertices = enclosure_vertices(&pair, &members);
        Ok(BorderCover {
            pair,
            members,
            sub_indices,
            enclosure_vertices,
        })
    }

    pub fn pair(&self) -> &Arc<SpacePair> {
        &self.pair
    }

    pub fn members(&self) -> &BTreeMap<CoverIndex, StarUnionSet> {
        &self.members
    }

    pub fn sub_indices(&self) -> &BTreeSet<CoverIndex> {
        &self.sub_indices
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn enclosure_vertices(&self) -> &BTreeSet<String> {
        &self.enclosure_vertices
    }

    pub fn enclosure_complex(&self) -> SimplicialComplex {
        self.pair.complex().full_subcomplex(&self.enclosure_vertices)
    }

    /// A cover is proper when the sub-index set is exactly the set of
    /// members meeting the subspace.
    pub fn is_proper(&self) -> bool {
        self.members.iter().all(|(index, set)| {
            self.sub_indices.contains(index) == set.meets_vertex_set(self.pair.a_vertices())
        })
    }

    fn same_carrier(&self, other: &BorderCover) -> bool {
        Arc::ptr_eq(&self.pair, &other.pair) || *self.pair == *other.pair
    }
}

/// A refinement projection witnessing `finer >= coarser`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementWitness {
    projection: BTreeMap<CoverIndex, CoverIndex>,
}

impl RefinementWitness {
    pub fn projection(&self) -> &BTreeMap<CoverIndex, CoverIndex> {
        &self.projection
    }

    pub fn project(&self, index: &CoverIndex) -> &CoverIndex {
        &self.projection[index]
    }

    /// Check the refinement conditions for an explicitly given projection.
    pub fn validate(
        projection: BTreeMap<CoverIndex, CoverIndex>,
        finer: &BorderCover,
        coarser: &BorderCover,
    ) -> Result<RefinementWitness> {
        for (index, set) in finer.members() {
            let target = projection
                .get(index)
                .ok_or_else(|| Error::InvalidCover(format!("index {index} unprojected")))?;
            let coarse_set = coarser
                .members()
                .get(target)
                .ok_or_else(|| Error::InvalidCover(format!("target index {target} missing")))?;
            if !set.contained_in(coarse_set) {
                return Err(Error::InvalidCover(format!(
                    "member {index} not contained in its target {target}"
                )));
            }
            if finer.sub_indices().contains(index) && !coarser.sub_indices().contains(target) {
                return Err(Error::InvalidCover(format!(
                    "sub-index {index} projects outside the coarser sub-index set"
                )));
            }
        }
        Ok(RefinementWitness { projection })
    }
}

/// Search for a refinement witness `beta >= alpha`. The projection prefers
/// the member's own index when admissible (so that a cover refines itself by
/// the identity) and otherwise the smallest admissible index.
pub fn refines(beta: &BorderCover, alpha: &BorderCover) -> Result<Option<RefinementWitness>> {
    if !beta.same_carrier(alpha) {
        return Err(Error::DifferentCarriers);
    }
    let mut projection = BTreeMap::new();
    for (index, set) in beta.members() {
        let needs_sub = beta.sub_indices().contains(index);
        let admissible = |target: &CoverIndex| -> bool {
            let Some(coarse) = alpha.members().get(target) else {
                return false;
            };
            set.contained_in(coarse) && (!needs_sub || alpha.sub_indices().contains(target))
        };
        let chosen = if admissible(index) {
            Some(index.clone())
        } else {
            alpha
                .members()
                .keys()
                .find(|t| admissible(t))
                .cloned()
        };
        match chosen {
            Some(t) => {
                projection.insert(index.clone(), t);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(RefinementWitness { projection }))
}

/// Product cover: indices are pairs, sets are intersections (realized as
/// core intersections), sub-indices the product of the sub-index sets.
/// Empty intersections are retained under their product index.
pub fn common_refinement(alpha: &BorderCover, beta: &BorderCover) -> Result<BorderCover> {
    if !alpha.same_carrier(beta) {
        return Err(Error::DifferentCarriers);
    }
    let mut members = BTreeMap::new();
    let mut sub_indices = BTreeSet::new();
    for (ia, sa) in alpha.members() {
        for (ib, sb) in beta.members() {
            let index = CoverIndex::pair(ia.clone(), ib.clone());
            members.insert(index.clone(), sa.intersect(sb));
            if alpha.sub_indices().contains(ia) && beta.sub_indices().contains(ib) {
                sub_indices.insert(index);
            }
        }
    }
    BorderCover::new(Arc::clone(alpha.pair()), members, sub_indices)
}

/// The coordinate-projection witnesses `common_refinement(a, b) >= a, b`.
pub fn product_projections(
    gamma: &BorderCover,
    alpha: &BorderCover,
    beta: &BorderCover,
) -> Result<(RefinementWitness, RefinementWitness)> {
    let mut to_alpha = BTreeMap::new();
    let mut to_beta = BTreeMap::new();
    for index in gamma.members().keys() {
        match index {
            CoverIndex::Pair(a, b) => {
                to_alpha.insert(index.clone(), (**a).clone());
                to_beta.insert(index.clone(), (**b).clone());
            }
            CoverIndex::Name(_) => {
                return Err(Error::InvalidCover(
                    "cover is not product-indexed".into(),
                ))
            }
        }
    }
    Ok((
        RefinementWitness::validate(to_alpha, gamma, alpha)?,
        RefinementWitness::validate(to_beta, gamma, beta)?,
    ))
}

/// Properization: members outside the subspace-meeting sub-index family
/// lose their subspace core vertices, and the sub-index set shrinks to the
/// members genuinely meeting the subspace. The result refines the input by
/// the identity projection.
pub fn properize(alpha: &BorderCover) -> Result<BorderCover> {
    let a = alpha.pair().a_vertices();
    let keep: BTreeSet<CoverIndex> = alpha
        .sub_indices()
        .iter()
        .filter(|i| alpha.members()[i].meets_vertex_set(a))
        .cloned()
        .collect();
    let mut members = BTreeMap::new();
    for (index, set) in alpha.members() {
        if keep.contains(index) {
            members.insert(index.clone(), set.clone());
        } else {
            let core = set.core().iter().filter(|v| !a.contains(*v)).cloned().collect();
            members.insert(index.clone(), StarUnionSet::new(core));
        }
    }
    BorderCover::new(Arc::clone(alpha.pair()), members, keep)
}

/// Preimage cover of a proper map: the same index pair, with each core
/// replaced by its vertex preimage (the preimage of a star-union is the
/// star-union of the preimage of its core).
pub fn preimage_cover(f: &ProperModelMap, alpha: &BorderCover) -> Result<BorderCover> {
    if !Arc::ptr_eq(f.target(), alpha.pair()) && **f.target() != **alpha.pair() {
        return Err(Error::Mismatch(
            "cover does not live on the map's target".into(),
        ));
    }
    let mut members = BTreeMap::new();
    for (index, set) in alpha.members() {
        members.insert(
            index.clone(),
            StarUnionSet::new(f.preimage_vertices(set.core())),
        );
    }
    BorderCover::new(
        Arc::clone(f.source()),
        members,
        alpha.sub_indices().clone(),
    )
}

/// Nerve of a border cover as a simplicial pair. Vertices are the indices of
/// nonempty members; a set of indices spans a simplex iff some cross-choice
/// of core vertices spans a simplex of the carrier. The sub-nerve consists of
/// the simplices with all indices in the sub-index set whose members' common
/// intersection meets the subspace. Simplices are only produced up to
/// `max_dim` when a cap is given.
pub fn nerve_capped(alpha: &BorderCover, max_dim: Option<usize>) -> Result<SimplicialPair> {
    let complex = alpha.pair().complex();
    let a_vertices = alpha.pair().a_vertices();

    // member index (rendered) per carrier vertex
    let mut covering: BTreeMap<&String, Vec<&CoverIndex>> = BTreeMap::new();
    for (index, set) in alpha.members() {
        for c in set.core() {
            covering.entry(c).or_default().push(index);
        }
    }

    let vertex_names: Vec<String> = alpha
        .members()
        .iter()
        .filter(|(_, set)| !set.is_empty_set())
        .map(|(index, _)| index.to_string())
        .collect();

    let mut total_simplices: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut sub_simplices: BTreeSet<Vec<String>> = BTreeSet::new();
    for s in complex.all_simplices() {
        let names = complex.names_of(s);
        let mut met: BTreeSet<&CoverIndex> = BTreeSet::new();
        for v in &names {
            if let Some(list) = covering.get(v) {
                met.extend(list.iter().copied());
            }
        }
        if met.is_empty() {
            continue;
        }
        let met: Vec<&CoverIndex> = met.into_iter().collect();
        let in_a = names.iter().all(|v| a_vertices.contains(v));
        let cap = max_dim.map_or(met.len(), |d| (d + 1).min(met.len()));
        for subset in subsets_up_to(&met, cap) {
            let rendered: Vec<String> = subset.iter().map(|i| i.to_string()).collect();
            if in_a && subset.iter().all(|i| alpha.sub_indices().contains(*i)) {
                sub_simplices.insert(rendered.clone());
            }
            total_simplices.insert(rendered);
        }
    }

    let total = SimplicialComplex::from_maximal(vertex_names, total_simplices)?;
    let sub = SimplicialComplex::from_maximal([], sub_simplices)?;
    SimplicialPair::new(total, sub)
}

pub fn nerve(alpha: &BorderCover) -> Result<SimplicialPair> {
    nerve_capped(alpha, None)
}

/// All nonempty subsets of `items` of size at most `max_size`.
fn subsets_up_to<'a>(
    items: &[&'a CoverIndex],
    max_size: usize,
) -> Vec<Vec<&'a CoverIndex>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse<'a>(
        items: &[&'a CoverIndex],
        start: usize,
        max_size: usize,
        current: &mut Vec<&'a CoverIndex>,
        out: &mut Vec<Vec<&'a CoverIndex>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == max_size {
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            recurse(items, i + 1, max_size, current, out);
            current.pop();
        }
    }
    recurse(items, 0, max_size, &mut current, &mut out);
    out
}

/// The simplicial map of nerves induced by a refinement witness.
pub fn nerve_map(
    witness: &RefinementWitness,
    finer_nerve: &SimplicialPair,
    coarser_nerve: &SimplicialPair,
) -> Result<SimplicialMap> {
    let rendered: BTreeMap<String, String> = witness
        .projection()
        .iter()
        .map(|(from, to)| (from.to_string(), to.to_string()))
        .collect();
    let vertex_map: BTreeMap<String, String> = finer_nerve
        .total()
        .vertices()
        .iter()
        .map(|v| (v.clone(), rendered[v].clone()))
        .collect();
    SimplicialMap::new(finer_nerve.clone(), coarser_nerve.clone(), vertex_map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{canonical_cover, generate_example, ExampleName};

    fn line(depth: u32) -> Arc<SpacePair> {
        Arc::new(generate_example(ExampleName::Line, depth).unwrap())
    }

    #[test]
    fn canonical_line_cover() {
        let pair = line(4);
        let cov = canonical_cover(&pair, 1).unwrap();
        assert_eq!(cov.len(), 6); // vertices ±2, ±3, ±4
        let k: Vec<String> = cov.enclosure_vertices().iter().cloned().collect();
        assert_eq!(k, vec!["-1".to_string(), "0".to_string(), "1".to_string()]);
        assert!(cov.is_proper());
    }

    #[test]
    fn empty_cover_on_compact_model() {
        let pair = Arc::new(generate_example(ExampleName::CompactTriangle, 3).unwrap());
        let cov = canonical_cover(&pair, 5).unwrap();
        assert!(cov.is_empty());
        assert_eq!(cov.enclosure_vertices().len(), 3);
    }

    #[test]
    fn missing_ray_is_not_a_border_cover() {
        let pair = line(4);
        // stars of the positive vertices only: the negative ray is uncovered
        let members: BTreeMap<CoverIndex, StarUnionSet> = (1..=4i64)
            .map(|i| (CoverIndex::name(&i.to_string()), StarUnionSet::single(&i.to_string())))
            .collect();
        let (ok, enclosure) = is_border_cover(&pair, &members, &BTreeSet::new()).unwrap();
        assert!(!ok);
        assert!(enclosure.vertex_index("-4").is_some());
    }

    #[test]
    fn refines_is_reflexive_and_chain_witnesses_exist() {
        let pair = line(5);
        let c1 = canonical_cover(&pair, 1).unwrap();
        let c2 = canonical_cover(&pair, 2).unwrap();
        let w = refines(&c1, &c1).unwrap().unwrap();
        for (from, to) in w.projection() {
            assert_eq!(from, to);
        }
        let w = refines(&c2, &c1).unwrap().unwrap();
        for (from, to) in w.projection() {
            assert_eq!(from, to);
        }
        assert!(refines(&c1, &c2).unwrap().is_none());
    }

    #[test]
    fn common_refinement_of_canonical_stages() {
        let pair = line(5);
        let c1 = canonical_cover(&pair, 1).unwrap();
        let c3 = canonical_cover(&pair, 3).unwrap();
        let gamma = common_refinement(&c1, &c3).unwrap();
        assert_eq!(gamma.len(), c1.len() * c3.len());
        assert_eq!(gamma.enclosure_vertices(), c3.enclosure_vertices());
        let (wa, wb) = product_projections(&gamma, &c1, &c3).unwrap();
        assert_eq!(wa.projection().len(), gamma.len());
        assert_eq!(wb.projection().len(), gamma.len());
        assert!(refines(&gamma, &c1).unwrap().is_some());
        assert!(refines(&gamma, &c3).unwrap().is_some());
    }

    #[test]
    fn properize_fixes_wrong_indexing() {
        let pair = line(4);
        let a: BTreeSet<String> = (-4..=0i64).map(|i| i.to_string()).collect();
        let pair = Arc::new(pair.with_a(a).unwrap());
        // one member per side; the negative-side member meets A but is not
        // sub-indexed, the positive-side member is sub-indexed but misses A
        let mut members = BTreeMap::new();
        members.insert(
            CoverIndex::name("neg"),
            StarUnionSet::new((-4..=-1i64).map(|i| i.to_string()).collect()),
        );
        members.insert(
            CoverIndex::name("pos"),
            StarUnionSet::new((1..=4i64).map(|i| i.to_string()).collect()),
        );
        let cov = BorderCover::new(
            Arc::clone(&pair),
            members,
            [CoverIndex::name("neg"), CoverIndex::name("pos")].into(),
        )
        .unwrap();
        assert!(!cov.is_proper());
        let proper = properize(&cov).unwrap();
        assert!(proper.is_proper());
        // the negative member kept its core, the positive member was already
        // disjoint from A so deletion is a no-op
        assert_eq!(
            proper.members()[&CoverIndex::name("neg")],
            cov.members()[&CoverIndex::name("neg")]
        );
        assert_eq!(
            proper.members()[&CoverIndex::name("pos")],
            cov.members()[&CoverIndex::name("pos")]
        );
        assert_eq!(proper.sub_indices().len(), 1);
        assert!(refines(&proper, &cov).unwrap().is_some());
        // properize of a proper cover changes nothing
        let again = properize(&proper).unwrap();
        assert_eq!(again.members(), proper.members());
        assert_eq!(again.sub_indices(), proper.sub_indices());
    }

    #[test]
    fn nerve_of_canonical_cover_is_full_subcomplex() {
        let pair = line(4);
        let cov = canonical_cover(&pair, 1).unwrap();
        let nerve = nerve(&cov).unwrap();
        let away: BTreeSet<String> = pair
            .complex()
            .vertices()
            .iter()
            .filter(|v| pair.space().stage(v) > 1)
            .cloned()
            .collect();
        let expected = pair.complex().full_subcomplex(&away);
        assert_eq!(nerve.total(), &expected);
        // two path components, one per end
        assert_eq!(
            crate::simplicial::homology(&nerve, 0, &crate::abelian::Coefficients::integers()),
            crate::abelian::FgAbGroup::free(2)
        );
    }

    #[test]
    fn single_member_nerve_is_a_point() {
        let pair = line(3);
        let members: BTreeMap<CoverIndex, StarUnionSet> = [(
            CoverIndex::name("all"),
            StarUnionSet::new(pair.complex().vertices().iter().cloned().collect()),
        )]
        .into();
        let cov = BorderCover::new(Arc::clone(&pair), members, BTreeSet::new()).unwrap();
        let nerve = nerve(&cov).unwrap();
        assert_eq!(nerve.total().vertices().len(), 1);
    }

    #[test]
    fn plane_nerve_is_annular() {
        let pair = Arc::new(generate_example(ExampleName::Plane, 3).unwrap());
        let cov = canonical_cover(&pair, 0).unwrap();
        let nerve = nerve_capped(&cov, Some(2)).unwrap();
        assert_eq!(
            crate::simplicial::homology(&nerve, 1, &crate::abelian::Coefficients::integers()),
            crate::abelian::FgAbGroup::free(1)
        );
    }

    #[test]
    fn preimage_of_canonical_cover_under_inclusion() {
        let pair = line(4);
        let keep: BTreeSet<String> = (0..=4i64).map(|i| i.to_string()).collect();
        let (half, incl) = crate::spaces::closed_subpair(&pair, &keep).unwrap();
        let cov = canonical_cover(&pair, 1).unwrap();
        let pre = preimage_cover(&incl, &cov).unwrap();
        assert_eq!(pre.len(), cov.len());
        let nonempty = pre.members().values().filter(|s| !s.is_empty_set()).count();
        assert_eq!(nonempty, 3); // stars of 2, 3, 4 restricted to the ray
        assert_eq!(*pre.pair(), half);
        // identity preimage is the cover itself
        let idpre = preimage_cover(&ProperModelMap::identity(&pair), &cov).unwrap();
        assert_eq!(idpre.members(), cov.members());
    }

    #[test]
    fn two_witnesses_between_same_covers_are_contiguous() {
        // a coarse cover with overlapping members so that the witness is not unique
        let pair = line(5);
        let fine = canonical_cover(&pair, 3).unwrap();
        let mut members = BTreeMap::new();
        members.insert(
            CoverIndex::name("L"),
            StarUnionSet::new((-5..=-1i64).map(|i| i.to_string()).collect()),
        );
        members.insert(
            CoverIndex::name("L2"),
            StarUnionSet::new((-5..=-1i64).map(|i| i.to_string()).collect()),
        );
        members.insert(
            CoverIndex::name("R"),
            StarUnionSet::new((1..=5i64).map(|i| i.to_string()).collect()),
        );
        let coarse = BorderCover::new(Arc::clone(&pair), members, BTreeSet::new()).unwrap();
        let w1 = refines(&fine, &coarse).unwrap().unwrap();
        // alternative witness: send negative members to L2 instead of L
        let mut alt = w1.projection().clone();
        for (from, to) in alt.iter_mut() {
            if *to == CoverIndex::name("L") {
                *to = CoverIndex::name("L2");
                let _ = from;
            }
        }
        let w2 = RefinementWitness::validate(alt, &fine, &coarse).unwrap();
        let nf = nerve(&fine).unwrap();
        let nc = nerve(&coarse).unwrap();
        let m1 = nerve_map(&w1, &nf, &nc).unwrap();
        let m2 = nerve_map(&w2, &nf, &nc).unwrap();
        assert!(crate::simplicial::contiguous(&m1, &m2).unwrap());
    }
}
