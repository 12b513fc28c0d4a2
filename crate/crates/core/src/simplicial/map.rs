//! Simplicial maps of pairs and the contiguity relation.

use super::complex::SimplicialPair;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A simplicial map of pairs, given on vertices. The image of every simplex
/// must span a simplex of the target, and the subcomplex must map into the
/// target subcomplex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialMap {
    source: SimplicialPair,
    target: SimplicialPair,
    vertex_map: BTreeMap<String, String>,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialPair,
        target: SimplicialPair,
        vertex_map: BTreeMap<String, String>,
    ) -> Result<Self> {
        for v in source.total().vertices() {
            let image = vertex_map
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(format!("{v} (unmapped)")))?;
            if target.total().vertex_index(image).is_none() {
                return Err(Error::UnknownVertex(image.clone()));
            }
        }
        let map = SimplicialMap {
            source,
            target,
            vertex_map,
        };
        for s in map.source.total().all_simplices() {
            let image = map.image_names(s);
            if !map.target.total().has_simplex_named(&image) {
                return Err(Error::NotSimplicial(map.source.total().names_of(s)));
            }
        }
        for s in map.source.sub().all_simplices() {
            let names = map.source.sub().names_of(s);
            let image: Vec<String> = names.iter().map(|v| map.vertex_map[v].clone()).collect();
            if !map.target.sub().has_simplex_named(&image) {
                return Err(Error::SubNotPreserved(names[0].clone()));
            }
        }
        Ok(map)
    }

    pub fn identity(pair: &SimplicialPair) -> Self {
        let vertex_map = pair
            .total()
            .vertices()
            .iter()
            .map(|v| (v.clone(), v.clone()))
            .collect();
        SimplicialMap {
            source: pair.clone(),
            target: pair.clone(),
            vertex_map,
        }
    }

    /// Inclusion of pairs; every simplex of `source` must already live in `target`.
    pub fn inclusion(source: &SimplicialPair, target: &SimplicialPair) -> Result<Self> {
        let vertex_map = source
            .total()
            .vertices()
            .iter()
            .map(|v| (v.clone(), v.clone()))
            .collect();
        SimplicialMap::new(source.clone(), target.clone(), vertex_map)
    }

    pub fn source(&self) -> &SimplicialPair {
        &self.source
    }

    pub fn target(&self) -> &SimplicialPair {
        &self.target
    }

    pub fn vertex_image(&self, v: &str) -> &str {
        &self.vertex_map[v]
    }

    fn image_names(&self, simplex: &[usize]) -> Vec<String> {
        self.source
            .total()
            .names_of(simplex)
            .iter()
            .map(|v| self.vertex_map[v].clone())
            .collect()
    }

    /// Composition `outer . self` (apply `self` first).
    pub fn then(&self, outer: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target != outer.source {
            return Err(Error::Mismatch(
                "composition: middle pairs differ".into(),
            ));
        }
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|(v, w)| (v.clone(), outer.vertex_map[w].clone()))
            .collect();
        SimplicialMap::new(self.source.clone(), outer.target.clone(), vertex_map)
    }
}

/// Two maps with the same endpoints are contiguous when for every simplex s
/// of the source, `f(s) ∪ g(s)` spans a simplex of the target (and likewise
/// within the subcomplexes). Contiguous maps induce the same homomorphisms.
pub fn contiguous(f: &SimplicialMap, g: &SimplicialMap) -> Result<bool> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::Mismatch(
            "contiguity requires identical source and target".into(),
        ));
    }
    for s in f.source.total().all_simplices() {
        let mut union = f.image_names(s);
        union.extend(g.image_names(s));
        union.sort();
        union.dedup();
        if !f.target.total().has_simplex_named(&union) {
            return Ok(false);
        }
    }
    for s in f.source.sub().all_simplices() {
        let names = f.source.sub().names_of(s);
        let mut union: Vec<String> = names.iter().map(|v| f.vertex_map[v].clone()).collect();
        union.extend(names.iter().map(|v| g.vertex_map[v].clone()));
        union.sort();
        union.dedup();
        if !f.target.sub().has_simplex_named(&union) {
            return Ok(false);
        }
    }
    Ok(true)
}
