//! The combinatorial space model: locally finite simplicial pairs presented
//! as truncated exhaustions.
//!
//! A `FilteredSpace` is a finite complex with a stage for every vertex and a
//! horizon `depth`. Vertices at stage `depth` (when `depth >= 1`) mark where
//! the presented space continues beyond the truncation; a subcomplex is
//! compact in the model sense iff it avoids them. Spaces with `depth == 0`
//! are entire compact complexes.

use crate::covers::{BorderCover, CoverIndex, StarUnionSet};
use crate::simplicial::SimplicialComplex;
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FilteredSpace {
    complex: SimplicialComplex,
    stages: BTreeMap<String, u32>,
    depth: u32,
}

impl FilteredSpace {
    pub fn new(
        complex: SimplicialComplex,
        stages: BTreeMap<String, u32>,
        depth: u32,
    ) -> Result<Self> {
        for v in complex.vertices() {
            match stages.get(v) {
                None => return Err(Error::UnknownVertex(format!("{v} (no stage)"))),
                Some(&s) if s > depth => {
                    return Err(Error::Invalid(format!(
                        "vertex `{v}` has stage {s} beyond the horizon {depth}"
                    )))
                }
                _ => {}
            }
        }
        Ok(FilteredSpace {
            complex,
            stages,
            depth,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn stage(&self, v: &str) -> u32 {
        self.stages[v]
    }

    pub fn stages(&self) -> &BTreeMap<String, u32> {
        &self.stages
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn max_stage(&self) -> u32 {
        self.complex
            .vertices()
            .iter()
            .map(|v| self.stages[v])
            .max()
            .unwrap_or(0)
    }
}

/// A filtered space with a closed subspace: the full subcomplex on the
/// flagged vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpacePair {
    space: FilteredSpace,
    a_vertices: BTreeSet<String>,
}

impl SpacePair {
    pub fn new(space: FilteredSpace, a_vertices: BTreeSet<String>) -> Result<Self> {
        for v in &a_vertices {
            if space.complex().vertex_index(v).is_none() {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        Ok(SpacePair { space, a_vertices })
    }

    pub fn absolute(space: FilteredSpace) -> Self {
        SpacePair {
            space,
            a_vertices: BTreeSet::new(),
        }
    }

    pub fn space(&self) -> &FilteredSpace {
        &self.space
    }

    pub fn complex(&self) -> &SimplicialComplex {
        self.space.complex()
    }

    pub fn a_vertices(&self) -> &BTreeSet<String> {
        &self.a_vertices
    }

    pub fn is_a_vertex(&self, v: &str) -> bool {
        self.a_vertices.contains(v)
    }

    pub fn a_is_empty(&self) -> bool {
        self.a_vertices.is_empty()
    }

    pub fn a_complex(&self) -> SimplicialComplex {
        self.complex().full_subcomplex(&self.a_vertices)
    }

    /// Replace the subspace flags.
    pub fn with_a(&self, a_vertices: BTreeSet<String>) -> Result<SpacePair> {
        SpacePair::new(self.space.clone(), a_vertices)
    }

    /// The subspace as a space pair of its own (with empty subspace).
    pub fn a_as_pair(&self) -> Result<SpacePair> {
        let sub = self.complex().full_subcomplex(&self.a_vertices);
        let stages = self
            .a_vertices
            .iter()
            .map(|v| (v.clone(), self.space.stage(v)))
            .collect();
        Ok(SpacePair::absolute(FilteredSpace::new(
            sub,
            stages,
            self.space.depth(),
        )?))
    }

    /// Whether the whole model is compact: it has no vertices at the horizon.
    pub fn is_compact_model(&self) -> bool {
        self.space.depth() == 0
            || self.complex().is_empty()
            || self.space.max_stage() < self.space.depth()
    }

    /// Whether the full subcomplex on the given vertices avoids the horizon.
    pub fn vertex_set_is_compact(&self, vertices: &BTreeSet<String>) -> bool {
        self.space.depth() == 0
            || vertices
                .iter()
                .all(|v| self.space.stage(v) < self.space.depth())
    }
}

/// Built-in example models.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleName {
    Point,
    CompactTriangle,
    Line,
    Ray,
    Plane,
    Cylinder,
    TwoRaysWedge,
}

impl std::str::FromStr for ExampleName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "point" => Ok(ExampleName::Point),
            "compact_triangle" => Ok(ExampleName::CompactTriangle),
            "line" => Ok(ExampleName::Line),
            "ray" => Ok(ExampleName::Ray),
            "plane" => Ok(ExampleName::Plane),
            "cylinder" => Ok(ExampleName::Cylinder),
            "two_rays_wedge" => Ok(ExampleName::TwoRaysWedge),
            other => Err(Error::Invalid(format!("unknown example `{other}`"))),
        }
    }
}

impl ExampleName {
    pub const ALL: [ExampleName; 7] = [
        ExampleName::Point,
        ExampleName::CompactTriangle,
        ExampleName::Line,
        ExampleName::Ray,
        ExampleName::Plane,
        ExampleName::Cylinder,
        ExampleName::TwoRaysWedge,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ExampleName::Point => "point",
            ExampleName::CompactTriangle => "compact_triangle",
            ExampleName::Line => "line",
            ExampleName::Ray => "ray",
            ExampleName::Plane => "plane",
            ExampleName::Cylinder => "cylinder",
            ExampleName::TwoRaysWedge => "two_rays_wedge",
        }
    }
}

/// Deterministic filtered example models. `line` is the path on vertices
/// `-depth..depth` with stage `|v|`; `ray` its half; `plane` the triangulated
/// square grid with sup-norm stages; `cylinder` a hexagonal tube over heights
/// `-depth..depth` with stage `|h|`; `two_rays_wedge` two rays glued at a
/// point. The compact models are single-stage with horizon 0.
pub fn generate_example(name: ExampleName, depth: u32) -> Result<SpacePair> {
    if depth == 0 {
        return Err(Error::Invalid("example depth must be at least 1".into()));
    }
    let d = depth as i64;
    match name {
        ExampleName::Point => {
            let complex = SimplicialComplex::point("p");
            let stages = [("p".to_string(), 0)].into();
            Ok(SpacePair::absolute(FilteredSpace::new(complex, stages, 0)?))
        }
        ExampleName::CompactTriangle => {
            let complex = SimplicialComplex::from_maximal(
                [],
                [
                    vec!["a".into(), "b".into()],
                    vec!["b".into(), "c".into()],
                    vec!["a".into(), "c".into()],
                ],
            )?;
            let stages = complex
                .vertices()
                .iter()
                .map(|v| (v.clone(), 0))
                .collect();
            Ok(SpacePair::absolute(FilteredSpace::new(complex, stages, 0)?))
        }
        ExampleName::Line => {
            let edges: Vec<Vec<String>> = (-d..d)
                .map(|i| vec![i.to_string(), (i + 1).to_string()])
                .collect();
            let complex = SimplicialComplex::from_maximal([], edges)?;
            let stages = (-d..=d)
                .map(|i| (i.to_string(), i.unsigned_abs() as u32))
                .collect();
            Ok(SpacePair::absolute(FilteredSpace::new(
                complex, stages, depth,
            )?))
        }
        ExampleName::Ray => {
            let edges: Vec<Vec<String>> = (0..d)
                .map(|i| vec![i.to_string(), (i + 1).to_string()])
                .collect();
            let complex = SimplicialComplex::from_maximal([], edges)?;
            let stages = (0..=d).map(|i| (i.to_string(), i as u32)).collect();
            Ok(SpacePair::absolute(FilteredSpace::new(
                complex, stages, depth,
            )?))
        }
        ExampleName::Plane => {
            let id = |x: i64, y: i64| format!("{x},{y}");
            let mut triangles = Vec::new();
            for x in -d..d {
                for y in -d..d {
                    triangles.push(vec![id(x, y), id(x + 1, y), id(x + 1, y + 1)]);
                    triangles.push(vec![id(x, y), id(x, y + 1), id(x + 1, y + 1)]);
                }
            }
            let complex = SimplicialComplex::from_maximal([], triangles)?;
            let mut stages = BTreeMap::new();
            for x in -d..=d {
                for y in -d..=d {
                    stages.insert(id(x, y), x.unsigned_abs().max(y.unsigned_abs()) as u32);
                }
            }
            Ok(SpacePair::absolute(FilteredSpace::new(
                complex, stages, depth,
            )?))
        }
        ExampleName::Cylinder => {
            const RING: i64 = 6;
            let id = |k: i64, h: i64| format!("{}@{h}", k.rem_euclid(RING));
            let mut triangles = Vec::new();
            for h in -d..d {
                for k in 0..RING {
                    triangles.push(vec![id(k, h), id(k + 1, h), id(k + 1, h + 1)]);
                    triangles.push(vec![id(k, h), id(k, h + 1), id(k + 1, h + 1)]);
                }
            }
            let complex = SimplicialComplex::from_maximal([], triangles)?;
            let mut stages = BTreeMap::new();
            for h in -d..=d {
                for k in 0..RING {
                    stages.insert(id(k, h), h.unsigned_abs() as u32);
                }
            }
            Ok(SpacePair::absolute(FilteredSpace::new(
                complex, stages, depth,
            )?))
        }
        ExampleName::TwoRaysWedge => {
            let mut edges = vec![
                vec!["c".to_string(), "a1".to_string()],
                vec!["c".to_string(), "b1".to_string()],
            ];
            for i in 1..d {
                edges.push(vec![format!("a{i}"), format!("a{}", i + 1)]);
                edges.push(vec![format!("b{i}"), format!("b{}", i + 1)]);
            }
            let complex = SimplicialComplex::from_maximal([], edges)?;
            let mut stages: BTreeMap<String, u32> = [("c".to_string(), 0)].into();
            for i in 1..=d {
                stages.insert(format!("a{i}"), i as u32);
                stages.insert(format!("b{i}"), i as u32);
            }
            Ok(SpacePair::absolute(FilteredSpace::new(
                complex, stages, depth,
            )?))
        }
    }
}

/// The canonical cover at stage `i`: one member per vertex of stage greater
/// than `i`, each the open star of its vertex, with the subspace index set
/// given by the subspace flags. The enclosure is the full subcomplex on
/// stages `<= i`. On compact models every stage yields the empty cover with
/// the whole space as enclosure.
pub fn canonical_cover(pair: &Arc<SpacePair>, i: u32) -> Result<BorderCover> {
    let depth = pair.space().depth();
    if depth > 0 && i >= depth {
        return Err(Error::StageOutOfRange {
            stage: i as usize,
            depth: depth as usize,
        });
    }
    let mut members = BTreeMap::new();
    let mut sub_indices = BTreeSet::new();
    for v in pair.complex().vertices() {
        if pair.space().stage(v) > i {
            let index = CoverIndex::name(v);
            members.insert(index.clone(), StarUnionSet::single(v));
            if pair.is_a_vertex(v) {
                sub_indices.insert(index);
            }
        }
    }
    BorderCover::new(Arc::clone(pair), members, sub_indices)
}

/// A proper simplicial map of space pairs with its properness certificate:
/// `stage_bounds[k]` bounds the source stage of the preimage of the stage-k
/// truncation of the target.
#[derive(Clone, Debug)]
pub struct ProperModelMap {
    source: Arc<SpacePair>,
    target: Arc<SpacePair>,
    vertex_map: BTreeMap<String, String>,
    stage_bounds: Vec<u32>,
}

impl ProperModelMap {
    pub fn new(
        source: Arc<SpacePair>,
        target: Arc<SpacePair>,
        vertex_map: BTreeMap<String, String>,
    ) -> Result<Self> {
        for v in source.complex().vertices() {
            let w = vertex_map
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(format!("{v} (unmapped)")))?;
            if target.complex().vertex_index(w).is_none() {
                return Err(Error::UnknownVertex(w.clone()));
            }
            if source.is_a_vertex(v) && !target.is_a_vertex(w) {
                return Err(Error::SubNotPreserved(v.clone()));
            }
        }
        for s in source.complex().all_simplices() {
            let names = source.complex().names_of(s);
            let image: Vec<String> = names.iter().map(|v| vertex_map[v].clone()).collect();
            if !target.complex().has_simplex_named(&image) {
                return Err(Error::NotSimplicial(names));
            }
        }
        // properness certificate on the truncation
        let t_depth = target.space().depth();
        let mut stage_bounds = vec![0u32; t_depth as usize + 1];
        for v in source.complex().vertices() {
            let k = target.space().stage(&vertex_map[v]) as usize;
            let s = source.space().stage(v);
            for b in stage_bounds.iter_mut().skip(k) {
                *b = (*b).max(s);
            }
        }
        let s_depth = source.space().depth();
        if s_depth > 0 && source.space().max_stage() == s_depth {
            // non-compact source: preimages of truncation stages must avoid
            // the source horizon
            if t_depth == 0 {
                return Err(Error::NotProper(
                    "non-compact source over a compact target".into(),
                ));
            }
            for (k, b) in stage_bounds.iter().enumerate().take(t_depth as usize) {
                if *b >= s_depth {
                    return Err(Error::NotProper(format!(
                        "preimage of the stage-{k} truncation reaches the source horizon"
                    )));
                }
            }
        }
        Ok(ProperModelMap {
            source,
            target,
            vertex_map,
            stage_bounds,
        })
    }

    pub fn identity(pair: &Arc<SpacePair>) -> Self {
        let vertex_map = pair
            .complex()
            .vertices()
            .iter()
            .map(|v| (v.clone(), v.clone()))
            .collect();
        ProperModelMap::new(Arc::clone(pair), Arc::clone(pair), vertex_map)
            .expect("identity is proper")
    }

    pub fn source(&self) -> &Arc<SpacePair> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SpacePair> {
        &self.target
    }

    pub fn vertex_image(&self, v: &str) -> &str {
        &self.vertex_map[v]
    }

    pub fn vertex_map(&self) -> &BTreeMap<String, String> {
        &self.vertex_map
    }

    /// Source stage bound for the preimage of the stage-k truncation.
    pub fn stage_bound(&self, k: u32) -> u32 {
        let i = (k as usize).min(self.stage_bounds.len().saturating_sub(1));
        self.stage_bounds.get(i).copied().unwrap_or(0)
    }

    /// Preimage of a target vertex set.
    pub fn preimage_vertices(&self, targets: &BTreeSet<String>) -> BTreeSet<String> {
        self.vertex_map
            .iter()
            .filter(|(_, w)| targets.contains(*w))
            .map(|(v, _)| v.clone())
            .collect()
    }

    /// Composition `outer . self` (apply `self` first).
    pub fn then(&self, outer: &ProperModelMap) -> Result<ProperModelMap> {
        if !Arc::ptr_eq(&self.target, &outer.source) && *self.target != *outer.source {
            return Err(Error::Mismatch("composition: middle pairs differ".into()));
        }
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|(v, w)| (v.clone(), outer.vertex_map[w].clone()))
            .collect();
        ProperModelMap::new(
            Arc::clone(&self.source),
            Arc::clone(&outer.target),
            vertex_map,
        )
    }

    /// The restriction `f|A : (A, {}) -> (B, {})` between the subspaces.
    pub fn restrict_to_sub(&self) -> Result<ProperModelMap> {
        let src = Arc::new(self.source.a_as_pair()?);
        let tgt = Arc::new(self.target.a_as_pair()?);
        let vertex_map = self
            .source
            .a_vertices()
            .iter()
            .map(|v| (v.clone(), self.vertex_map[v].clone()))
            .collect();
        ProperModelMap::new(src, tgt, vertex_map)
    }
}

/// Full subcomplex on a vertex set, as a new pair with inherited stages and
/// horizon, plus the (proper) inclusion.
pub fn closed_subpair(
    pair: &Arc<SpacePair>,
    vertex_set: &BTreeSet<String>,
) -> Result<(Arc<SpacePair>, ProperModelMap)> {
    for v in vertex_set {
        if pair.complex().vertex_index(v).is_none() {
            return Err(Error::UnknownVertex(v.clone()));
        }
    }
    let sub = pair.complex().full_subcomplex(vertex_set);
    let stages = vertex_set
        .iter()
        .map(|v| (v.clone(), pair.space().stage(v)))
        .collect();
    let a: BTreeSet<String> = pair
        .a_vertices()
        .intersection(vertex_set)
        .cloned()
        .collect();
    let new_pair = Arc::new(SpacePair::new(
        FilteredSpace::new(sub, stages, pair.space().depth())?,
        a,
    )?);
    let vertex_map = vertex_set.iter().map(|v| (v.clone(), v.clone())).collect();
    let inclusion = ProperModelMap::new(Arc::clone(&new_pair), Arc::clone(pair), vertex_map)?;
    Ok((new_pair, inclusion))
}

/// Excision surgery: remove the open star-union `U` (given by its core
/// vertices). Precondition: every core vertex and each of its neighbors is a
/// subspace vertex, so the closure of `U` lies interior to the subspace.
pub fn excise(
    pair: &Arc<SpacePair>,
    u: &StarUnionSet,
) -> Result<(Arc<SpacePair>, ProperModelMap)> {
    for c in u.core() {
        if pair.complex().vertex_index(c).is_none() {
            return Err(Error::UnknownVertex(c.clone()));
        }
        if !pair.is_a_vertex(c) {
            return Err(Error::ExcisionPrecondition(c.clone()));
        }
        for n in pair.complex().neighbors(c) {
            if !pair.is_a_vertex(&n) {
                return Err(Error::ExcisionPrecondition(n));
            }
        }
    }
    let keep: BTreeSet<String> = pair
        .complex()
        .vertices()
        .iter()
        .filter(|v| !u.core().contains(*v))
        .cloned()
        .collect();
    closed_subpair(pair, &keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_shape() {
        let line = generate_example(ExampleName::Line, 3).unwrap();
        assert_eq!(line.complex().vertices().len(), 7);
        assert_eq!(line.complex().simplex_count(1), 6);
        assert_eq!(line.space().stage("-3"), 3);
        assert_eq!(line.space().stage("0"), 0);
        assert!(!line.is_compact_model());
    }

    #[test]
    fn point_is_single_stage() {
        let p = generate_example(ExampleName::Point, 5).unwrap();
        assert_eq!(p.complex().vertices(), &["p".to_string()]);
        assert!(p.is_compact_model());
    }

    #[test]
    fn plane_counts() {
        let plane = generate_example(ExampleName::Plane, 2).unwrap();
        assert_eq!(plane.complex().vertices().len(), 25);
        assert_eq!(plane.complex().simplex_count(2), 32);
    }

    #[test]
    fn determinism() {
        for name in ExampleName::ALL {
            let a = generate_example(name, 3).unwrap();
            let b = generate_example(name, 3).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn generated_examples_have_spread_one() {
        for name in ExampleName::ALL {
            let pair = generate_example(name, 3).unwrap();
            for s in pair.complex().all_simplices() {
                let stages: Vec<u32> = pair
                    .complex()
                    .names_of(s)
                    .iter()
                    .map(|v| pair.space().stage(v))
                    .collect();
                let spread = stages.iter().max().unwrap() - stages.iter().min().unwrap();
                assert!(spread <= 1, "{name:?} simplex {s:?} has spread {spread}");
            }
        }
    }

    #[test]
    fn subpair_of_line_is_ray() {
        let line = Arc::new(generate_example(ExampleName::Line, 4).unwrap());
        let keep: BTreeSet<String> = (-4..=0i64).map(|i| i.to_string()).collect();
        let (ray, incl) = closed_subpair(&line, &keep).unwrap();
        assert_eq!(ray.complex().vertices().len(), 5);
        assert_eq!(ray.space().depth(), 4);
        assert_eq!(ray.space().stage("-4"), 4);
        assert!(!ray.is_compact_model());
        assert_eq!(incl.stage_bound(2), 2);
    }

    #[test]
    fn middle_circle_of_cylinder_is_compact() {
        let cyl = Arc::new(generate_example(ExampleName::Cylinder, 3).unwrap());
        let keep: BTreeSet<String> = (0..6).map(|k| format!("{k}@0")).collect();
        let (circle, _) = closed_subpair(&cyl, &keep).unwrap();
        assert!(circle.is_compact_model());
        assert_eq!(circle.complex().simplex_count(1), 6);
    }

    #[test]
    fn excise_line_tail() {
        let line = Arc::new(generate_example(ExampleName::Line, 4).unwrap());
        let a: BTreeSet<String> = (-4..=0i64).map(|i| i.to_string()).collect();
        let pair = Arc::new(line.with_a(a).unwrap());
        let u = StarUnionSet::new((-4..=-2i64).map(|i| i.to_string()).collect());
        let (excised, _incl) = excise(&pair, &u).unwrap();
        let expected: BTreeSet<String> = (-1..=4i64).map(|i| i.to_string()).collect();
        assert_eq!(
            excised
                .complex()
                .vertices()
                .iter()
                .cloned()
                .collect::<BTreeSet<_>>(),
            expected
        );
        // touching a vertex outside the subspace is rejected
        let bad = StarUnionSet::new(["0".to_string()].into());
        assert!(matches!(
            excise(&pair, &bad),
            Err(Error::ExcisionPrecondition(_))
        ));
    }

    #[test]
    fn fold_map_is_proper() {
        let wedge = Arc::new(generate_example(ExampleName::TwoRaysWedge, 3).unwrap());
        let ray = Arc::new(generate_example(ExampleName::Ray, 3).unwrap());
        let mut vm: BTreeMap<String, String> = [("c".to_string(), "0".to_string())].into();
        for i in 1..=3 {
            vm.insert(format!("a{i}"), i.to_string());
            vm.insert(format!("b{i}"), i.to_string());
        }
        let fold = ProperModelMap::new(Arc::clone(&wedge), Arc::clone(&ray), vm).unwrap();
        assert_eq!(fold.stage_bound(1), 1);
    }

    #[test]
    fn collapse_to_point_is_not_proper() {
        let line = Arc::new(generate_example(ExampleName::Line, 3).unwrap());
        let point = Arc::new(generate_example(ExampleName::Point, 3).unwrap());
        let vm: BTreeMap<String, String> = line
            .complex()
            .vertices()
            .iter()
            .map(|v| (v.clone(), "p".to_string()))
            .collect();
        assert!(matches!(
            ProperModelMap::new(line, point, vm),
            Err(Error::NotProper(_))
        ));
    }
}
