//! Inverse and direct limits of stage-indexed systems of finitely generated
//! abelian groups, with explicit stabilization certificates.
//!
//! A truncated system can never prove its limit outright; the engine reports
//! `Stabilized` only under a window certificate. For an inverse tower the
//! certificate demands that the image lattices of the maps from the top of
//! the truncation are constant over the last `window` stages and that the
//! induced maps between consecutive stable images are isomorphisms across a
//! run of at least `window` stages; the limit value is then the stable image
//! group. Direct chains stabilize when the chain maps are isomorphisms from
//! some stage to the top, for at least `window` steps. Anything else is
//! reported `Inconclusive`, never guessed.

use crate::abelian::{
    hnf_columns, saturation_basis, CoefficientRing, FgAbGroup, GroupHom, IntMatrix, Subquotient,
};
use crate::{Error, Result};

/// Inverse system on a chain of stages: `maps[i]: stages[i+1] -> stages[i]`.
#[derive(Clone, Debug)]
pub struct GroupTower {
    stages: Vec<FgAbGroup>,
    maps: Vec<GroupHom>,
}

impl GroupTower {
    pub fn new(stages: Vec<FgAbGroup>, maps: Vec<GroupHom>) -> Result<Self> {
        if stages.is_empty() {
            return Err(Error::Mismatch("empty tower".into()));
        }
        if maps.len() + 1 != stages.len() {
            return Err(Error::Mismatch("tower needs one map per stage step".into()));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.source() != &stages[i + 1] || m.target() != &stages[i] {
                return Err(Error::Mismatch(format!(
                    "tower map {i} endpoints do not match the stages"
                )));
            }
        }
        Ok(GroupTower { stages, maps })
    }

    /// Constant tower with identity maps.
    pub fn constant(g: &FgAbGroup, length: usize) -> Self {
        GroupTower {
            stages: vec![g.clone(); length],
            maps: vec![GroupHom::identity(g); length.saturating_sub(1)],
        }
    }

    pub fn stages(&self) -> &[FgAbGroup] {
        &self.stages
    }

    pub fn maps(&self) -> &[GroupHom] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    /// Composite map `stages[j] -> stages[i]` for `i <= j`.
    pub fn composite(&self, i: usize, j: usize) -> Result<GroupHom> {
        let mut acc = GroupHom::identity(&self.stages[j]);
        for k in (i..j).rev() {
            acc = self.maps[k].compose(&acc)?;
        }
        Ok(acc)
    }

    /// Subsystem on the given (strictly increasing) stage indices, with
    /// composed maps; used for cofinal-subchain checks.
    pub fn thin(&self, keep: &[usize]) -> Result<GroupTower> {
        let stages = keep.iter().map(|&i| self.stages[i].clone()).collect();
        let mut maps = Vec::new();
        for w in keep.windows(2) {
            maps.push(self.composite(w[0], w[1])?);
        }
        GroupTower::new(stages, maps)
    }
}

/// Direct system on a chain of stages: `maps[i]: stages[i] -> stages[i+1]`.
#[derive(Clone, Debug)]
pub struct GroupChain {
    stages: Vec<FgAbGroup>,
    maps: Vec<GroupHom>,
}

impl GroupChain {
    pub fn new(stages: Vec<FgAbGroup>, maps: Vec<GroupHom>) -> Result<Self> {
        if stages.is_empty() {
            return Err(Error::Mismatch("empty chain".into()));
        }
        if maps.len() + 1 != stages.len() {
            return Err(Error::Mismatch("chain needs one map per stage step".into()));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.source() != &stages[i] || m.target() != &stages[i + 1] {
                return Err(Error::Mismatch(format!(
                    "chain map {i} endpoints do not match the stages"
                )));
            }
        }
        Ok(GroupChain { stages, maps })
    }

    pub fn constant(g: &FgAbGroup, length: usize) -> Self {
        GroupChain {
            stages: vec![g.clone(); length],
            maps: vec![GroupHom::identity(g); length.saturating_sub(1)],
        }
    }

    pub fn stages(&self) -> &[FgAbGroup] {
        &self.stages
    }

    pub fn maps(&self) -> &[GroupHom] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    pub fn composite(&self, i: usize, j: usize) -> Result<GroupHom> {
        let mut acc = GroupHom::identity(&self.stages[i]);
        for k in i..j {
            acc = self.maps[k].compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn thin(&self, keep: &[usize]) -> Result<GroupChain> {
        let stages = keep.iter().map(|&i| self.stages[i].clone()).collect();
        let mut maps = Vec::new();
        for w in keep.windows(2) {
            maps.push(self.composite(w[0], w[1])?);
        }
        GroupChain::new(stages, maps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Stabilized,
    Inconclusive,
}

/// Limit value with its stabilization certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitResult {
    pub verdict: Verdict,
    pub group: Option<FgAbGroup>,
    pub stable_stage: Option<usize>,
    pub window: usize,
}

impl LimitResult {
    pub fn inconclusive(window: usize) -> Self {
        LimitResult {
            verdict: Verdict::Inconclusive,
            group: None,
            stable_stage: None,
            window,
        }
    }

    pub fn stabilized(group: FgAbGroup, stage: usize, window: usize) -> Self {
        LimitResult {
            verdict: Verdict::Stabilized,
            group: Some(group),
            stable_stage: Some(stage),
            window,
        }
    }

    pub fn is_stabilized(&self) -> bool {
        self.verdict == Verdict::Stabilized
    }

    /// The limit group of a stabilized result.
    pub fn expect_group(&self) -> Result<&FgAbGroup> {
        self.group
            .as_ref()
            .ok_or_else(|| Error::Inconclusive("limit did not stabilize".into()))
    }
}

/// Canonical form of a sublattice of the presentation lattice of `g`,
/// for exact subgroup comparison (saturated first in rational mode).
fn subgroup_key(g: &FgAbGroup, columns: &IntMatrix, ring: CoefficientRing) -> IntMatrix {
    let full = columns.hstack(&g.relation_matrix());
    match ring {
        CoefficientRing::Integral => hnf_columns(&full),
        CoefficientRing::Rational => hnf_columns(&saturation_basis(&full)),
    }
}

/// The image of the composite from stage `j` into stage `i`, as a
/// subquotient of the presentation lattice of stage `i`.
fn image_subquotient(
    tower: &GroupTower,
    i: usize,
    j: usize,
    ring: CoefficientRing,
) -> Result<Subquotient> {
    let comp = tower.composite(i, j)?;
    let g_i = &tower.stages()[i];
    let rel = g_i.relation_matrix();
    let numerator = comp.matrix().hstack(&rel);
    Subquotient::new(g_i.num_generators(), &numerator, &rel, ring)
}

/// Analysis of an inverse tower: the limit verdict plus, when stabilized,
/// the stable-image subquotient at the deepest certified stage (used to
/// evaluate maps between limits consistently).
#[derive(Clone, Debug)]
pub struct InverseAnalysis {
    pub result: LimitResult,
    pub eval_stage: Option<usize>,
    pub eval_subquotient: Option<Subquotient>,
}

pub fn inverse_limit_analysis(
    tower: &GroupTower,
    window: usize,
    ring: CoefficientRing,
) -> Result<InverseAnalysis> {
    assert!(window >= 1, "window must be positive");
    let top = tower.len() - 1;
    let inconclusive = || InverseAnalysis {
        result: LimitResult::inconclusive(window),
        eval_stage: None,
        eval_subquotient: None,
    };
    if top < 2 * window {
        return Ok(inconclusive());
    }
    let edge = top - window;

    // image chains settle: the last `window` image lattices at stage i agree
    let mut settled = vec![false; edge + 1];
    for (i, flag) in settled.iter_mut().enumerate() {
        let reference = subgroup_key(&tower.stages()[i], tower.composite(i, top)?.matrix(), ring);
        *flag = (top - window + 1..top).all(|j| {
            tower
                .composite(i, j)
                .map(|c| subgroup_key(&tower.stages()[i], c.matrix(), ring) == reference)
                .unwrap_or(false)
        });
    }

    // restricted maps between consecutive stable images are isomorphisms
    let mut stable: Vec<Option<Subquotient>> = vec![None; edge + 1];
    for (i, slot) in stable.iter_mut().enumerate() {
        if settled[i] {
            *slot = Some(image_subquotient(tower, i, top, ring)?);
        }
    }
    let mut iso = vec![false; edge.max(1)];
    for i in 0..edge {
        if let (Some(s_next), Some(s_cur)) = (&stable[i + 1], &stable[i]) {
            let restricted = s_next.induced_hom(s_cur, tower.maps()[i].matrix())?;
            iso[i] = restricted.is_isomorphism(ring)?;
        }
    }

    let latest_start = edge + 1 - window; // ensures a run of >= window stages
    let mut found: Option<usize> = None;
    for i0 in 0..=latest_start {
        let ok_settled = (i0..=edge).all(|i| settled[i]);
        let ok_iso = (i0..edge).all(|i| iso[i]);
        if ok_settled && ok_iso {
            found = Some(i0);
            break;
        }
    }
    match found {
        Some(i0) => {
            let group = stable[i0].as_ref().unwrap().group().clone();
            Ok(InverseAnalysis {
                result: LimitResult::stabilized(group, i0, window),
                eval_stage: Some(edge),
                eval_subquotient: stable[edge].clone(),
            })
        }
        None => Ok(inconclusive()),
    }
}

pub fn inverse_limit(tower: &GroupTower, window: usize) -> Result<LimitResult> {
    Ok(inverse_limit_analysis(tower, window, CoefficientRing::Integral)?.result)
}

/// Analysis of a direct chain; stabilization means the chain maps are
/// isomorphisms from the stable stage to the top of the truncation, over at
/// least `window` steps.
#[derive(Clone, Debug)]
pub struct DirectAnalysis {
    pub result: LimitResult,
    pub eval_stage: Option<usize>,
    pub eval_subquotient: Option<Subquotient>,
}

pub fn direct_limit_analysis(
    chain: &GroupChain,
    window: usize,
    ring: CoefficientRing,
) -> Result<DirectAnalysis> {
    assert!(window >= 1, "window must be positive");
    let top = chain.len() - 1;
    let inconclusive = || DirectAnalysis {
        result: LimitResult::inconclusive(window),
        eval_stage: None,
        eval_subquotient: None,
    };
    if top < window {
        return Ok(inconclusive());
    }
    let mut iso = vec![false; top];
    for (i, flag) in iso.iter_mut().enumerate() {
        *flag = chain.maps()[i].is_isomorphism(ring)?;
    }
    let mut found: Option<usize> = None;
    for i0 in 0..=top - window {
        if (i0..top).all(|i| iso[i]) {
            found = Some(i0);
            break;
        }
    }
    match found {
        Some(i0) => {
            let g_top = &chain.stages()[top];
            let sq =
                Subquotient::of_quotient(g_top.num_generators(), &g_top.relation_matrix(), ring)?;
            Ok(DirectAnalysis {
                result: LimitResult::stabilized(chain.stages()[i0].clone(), i0, window),
                eval_stage: Some(top),
                eval_subquotient: Some(sq),
            })
        }
        None => Ok(inconclusive()),
    }
}

pub fn direct_limit(chain: &GroupChain, window: usize) -> Result<LimitResult> {
    Ok(direct_limit_analysis(chain, window, CoefficientRing::Integral)?.result)
}

/// Limit of a stagewise map of inverse towers. The stagewise squares are
/// checked exactly; an inconclusive side propagates as an error. The result
/// connects the stable limit groups, evaluated on the stable images at the
/// shared certified stage.
pub fn inverse_limit_map(
    src: &GroupTower,
    tgt: &GroupTower,
    stagewise: &[GroupHom],
    window: usize,
    ring: CoefficientRing,
) -> Result<GroupHom> {
    if src.len() != tgt.len() || stagewise.len() != src.len() {
        return Err(Error::Mismatch(
            "stagewise family must cover the (equal-length) towers".into(),
        ));
    }
    for i in 0..src.len() - 1 {
        let left = stagewise[i].compose(&src.maps()[i])?;
        let right = tgt.maps()[i].compose(&stagewise[i + 1])?;
        if !left.equiv(&right) {
            return Err(Error::NonCommuting(i));
        }
    }
    let a_src = inverse_limit_analysis(src, window, ring)?;
    let a_tgt = inverse_limit_analysis(tgt, window, ring)?;
    let (Some(e), Some(sq_src)) = (a_src.eval_stage, a_src.eval_subquotient) else {
        return Err(Error::Inconclusive("source tower did not stabilize".into()));
    };
    let (Some(e_tgt), Some(sq_tgt)) = (a_tgt.eval_stage, a_tgt.eval_subquotient) else {
        return Err(Error::Inconclusive("target tower did not stabilize".into()));
    };
    debug_assert_eq!(e, e_tgt);
    sq_src.induced_hom(&sq_tgt, stagewise[e].matrix())
}

/// Limit of a stagewise map of direct chains (evaluated at the top stage).
pub fn direct_limit_map(
    src: &GroupChain,
    tgt: &GroupChain,
    stagewise: &[GroupHom],
    window: usize,
    ring: CoefficientRing,
) -> Result<GroupHom> {
    if src.len() != tgt.len() || stagewise.len() != src.len() {
        return Err(Error::Mismatch(
            "stagewise family must cover the (equal-length) chains".into(),
        ));
    }
    for i in 0..src.len() - 1 {
        let left = stagewise[i + 1].compose(&src.maps()[i])?;
        let right = tgt.maps()[i].compose(&stagewise[i])?;
        if !left.equiv(&right) {
            return Err(Error::NonCommuting(i));
        }
    }
    let a_src = direct_limit_analysis(src, window, ring)?;
    let a_tgt = direct_limit_analysis(tgt, window, ring)?;
    if !a_src.result.is_stabilized() {
        return Err(Error::Inconclusive("source chain did not stabilize".into()));
    }
    if !a_tgt.result.is_stabilized() {
        return Err(Error::Inconclusive("target chain did not stabilize".into()));
    }
    Ok(stagewise[src.len() - 1].clone())
}
