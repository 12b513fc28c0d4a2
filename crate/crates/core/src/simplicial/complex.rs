//! Finite simplicial complexes and pairs over named vertices.
//!
//! Vertices carry string identifiers; the single global total order used for
//! orientations everywhere is the lexicographic order on identifiers.

use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// A finite simplicial complex: an ordered vertex set and a face-closed
/// family of simplices given as sorted vertex-index vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    index: BTreeMap<String, usize>,
    /// simplices[d] holds the d-dimensional simplices.
    simplices: Vec<BTreeSet<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            index: BTreeMap::new(),
            simplices: Vec::new(),
        }
    }

    /// Single-vertex complex.
    pub fn point(name: &str) -> Self {
        SimplicialComplex::from_maximal([name.to_string()], [vec![name.to_string()]]).unwrap()
    }

    /// Build from maximal (or any) simplices, closing under faces. Every
    /// listed vertex becomes a 0-simplex even when it appears in no larger
    /// simplex.
    pub fn from_maximal(
        vertices: impl IntoIterator<Item = String>,
        simplices: impl IntoIterator<Item = Vec<String>>,
    ) -> Result<Self> {
        let mut names: BTreeSet<String> = vertices.into_iter().collect();
        let raw: Vec<Vec<String>> = simplices.into_iter().collect();
        for s in &raw {
            for v in s {
                names.insert(v.clone());
            }
        }
        let vertices: Vec<String> = names.into_iter().collect();
        let index: BTreeMap<String, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut complex = SimplicialComplex {
            vertices,
            index,
            simplices: Vec::new(),
        };
        for v in 0..complex.vertices.len() {
            complex.insert_closed(vec![v]);
        }
        for s in raw {
            let mut idx: Vec<usize> = s.iter().map(|v| complex.index[v]).collect();
            idx.sort_unstable();
            idx.dedup();
            complex.insert_closed(idx);
        }
        Ok(complex)
    }

    /// Build from an explicit simplex list that must already be face-closed;
    /// a missing face is an error. Vertices are the 0-simplices plus any
    /// extra isolated names supplied.
    pub fn from_explicit(
        vertices: impl IntoIterator<Item = String>,
        simplices: impl IntoIterator<Item = Vec<String>>,
    ) -> Result<Self> {
        let vertex_list: Vec<String> = vertices.into_iter().collect();
        let names: BTreeSet<String> = vertex_list.iter().cloned().collect();
        let raw: Vec<Vec<String>> = simplices.into_iter().collect();
        for s in &raw {
            for v in s {
                if !names.contains(v) {
                    return Err(Error::UnknownVertex(v.clone()));
                }
            }
        }
        let vertices: Vec<String> = names.into_iter().collect();
        let index: BTreeMap<String, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut simpl: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new()];
        for v in 0..vertices.len() {
            simpl[0].insert(vec![v]);
        }
        for s in &raw {
            let mut idx: Vec<usize> = s.iter().map(|v| index[v]).collect();
            idx.sort_unstable();
            let before = idx.len();
            idx.dedup();
            if idx.len() != before {
                return Err(Error::InvalidComplex(format!(
                    "repeated vertex in simplex {s:?}"
                )));
            }
            let d = idx.len() - 1;
            while simpl.len() <= d {
                simpl.push(BTreeSet::new());
            }
            simpl[d].insert(idx);
        }
        let complex = SimplicialComplex {
            vertices,
            index,
            simplices: simpl,
        };
        // face closure check
        for d in 1..complex.simplices.len() {
            for s in &complex.simplices[d] {
                for omit in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(omit);
                    if !complex.has_simplex(&face) {
                        return Err(Error::NotFaceClosed(complex.names_of(s)));
                    }
                }
            }
        }
        Ok(complex)
    }

    fn insert_closed(&mut self, simplex: Vec<usize>) {
        let d = simplex.len() - 1;
        while self.simplices.len() <= d {
            self.simplices.push(BTreeSet::new());
        }
        if self.simplices[d].contains(&simplex) {
            return;
        }
        if d > 0 {
            for omit in 0..simplex.len() {
                let mut face = simplex.clone();
                face.remove(omit);
                self.insert_closed(face);
            }
        }
        self.simplices[d].insert(simplex);
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn names_of(&self, simplex: &[usize]) -> Vec<String> {
        simplex.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the complex; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        (0..self.simplices.len())
            .rev()
            .find(|&d| !self.simplices[d].is_empty())
    }

    pub fn has_simplex(&self, simplex: &[usize]) -> bool {
        let d = simplex.len().checked_sub(1);
        match d {
            Some(d) => self
                .simplices
                .get(d)
                .is_some_and(|set| set.contains(simplex)),
            None => false,
        }
    }

    pub fn has_simplex_named(&self, names: &[String]) -> bool {
        let mut idx = Vec::with_capacity(names.len());
        for n in names {
            match self.vertex_index(n) {
                Some(i) => idx.push(i),
                None => return false,
            }
        }
        idx.sort_unstable();
        idx.dedup();
        self.has_simplex(&idx)
    }

    /// Ordered d-simplices (deterministic lexicographic order).
    pub fn simplices_of_dim(&self, d: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.get(d).into_iter().flatten()
    }

    pub fn simplex_count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, BTreeSet::len)
    }

    /// All simplices of all dimensions, by ascending dimension.
    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().flatten()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.all_simplices()
            .all(|s| other.has_simplex_named(&self.names_of(s)))
    }

    /// Full subcomplex spanned by the named vertices.
    pub fn full_subcomplex(&self, names: &BTreeSet<String>) -> SimplicialComplex {
        let keep: BTreeSet<usize> = names
            .iter()
            .filter_map(|n| self.vertex_index(n))
            .collect();
        let vertex_names: Vec<String> = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let simplices: Vec<Vec<String>> = self
            .all_simplices()
            .filter(|s| s.iter().all(|v| keep.contains(v)))
            .map(|s| self.names_of(s))
            .collect();
        SimplicialComplex::from_explicit(vertex_names, simplices)
            .expect("full subcomplex is face-closed")
    }

    /// Neighbors of a vertex (other endpoints of incident edges), by name.
    pub fn neighbors(&self, name: &str) -> BTreeSet<String> {
        let Some(i) = self.vertex_index(name) else {
            return BTreeSet::new();
        };
        let mut out = BTreeSet::new();
        for e in self.simplices_of_dim(1) {
            if e[0] == i {
                out.insert(self.vertices[e[1]].clone());
            } else if e[1] == i {
                out.insert(self.vertices[e[0]].clone());
            }
        }
        out
    }

    /// Every vertex lies in finitely many simplices by finiteness; this
    /// reports the largest vertex degree, used by local-finiteness asserts.
    pub fn max_vertex_load(&self) -> usize {
        let mut load = vec![0usize; self.vertices.len()];
        for s in self.all_simplices() {
            for &v in s {
                load[v] += 1;
            }
        }
        load.into_iter().max().unwrap_or(0)
    }
}

/// A simplicial pair: a complex together with a subcomplex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialPair {
    total: SimplicialComplex,
    sub: SimplicialComplex,
}

impl SimplicialPair {
    pub fn new(total: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        if !sub.is_subcomplex_of(&total) {
            return Err(Error::InvalidComplex(
                "sub is not a subcomplex of total".into(),
            ));
        }
        Ok(SimplicialPair { total, sub })
    }

    /// The absolute pair `(X, empty)`.
    pub fn absolute(total: SimplicialComplex) -> Self {
        SimplicialPair {
            total,
            sub: SimplicialComplex::empty(),
        }
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }

    /// The subcomplex viewed as an absolute pair.
    pub fn sub_as_pair(&self) -> SimplicialPair {
        SimplicialPair::absolute(self.sub.clone())
    }

    /// Is the given simplex of `total` contained in `sub`?
    pub fn in_sub(&self, simplex: &[usize]) -> bool {
        if self.sub.is_empty() {
            return false;
        }
        self.sub.has_simplex_named(&self.total.names_of(simplex))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_maximal(
            [],
            [
                vec!["a".into(), "b".into()],
                vec!["b".into(), "c".into()],
                vec!["a".into(), "c".into()],
            ],
        )
        .unwrap()
    }

    #[test]
    fn closure_and_counts() {
        let t = hollow_triangle();
        assert_eq!(t.simplex_count(0), 3);
        assert_eq!(t.simplex_count(1), 3);
        assert_eq!(t.dim(), Some(1));
    }

    #[test]
    fn explicit_requires_closure() {
        let r = SimplicialComplex::from_explicit(
            ["a".into(), "b".into(), "c".into()],
            [vec!["a".into(), "b".into(), "c".into()]],
        );
        assert!(matches!(r, Err(Error::NotFaceClosed(_))));
    }

    #[test]
    fn full_subcomplex_of_triangle() {
        let filled = SimplicialComplex::from_maximal(
            [],
            [vec!["a".into(), "b".into(), "c".into()]],
        )
        .unwrap();
        let names: BTreeSet<String> = ["a".to_string(), "b".to_string()].into();
        let edge = filled.full_subcomplex(&names);
        assert_eq!(edge.simplex_count(1), 1);
        assert!(edge.is_subcomplex_of(&filled));
    }

    #[test]
    fn pair_validation() {
        let t = hollow_triangle();
        let names: BTreeSet<String> = ["a".to_string()].into();
        let sub = t.full_subcomplex(&names);
        let pair = SimplicialPair::new(t.clone(), sub).unwrap();
        assert!(pair.in_sub(&[pair.total().vertex_index("a").unwrap()]));
        let other = SimplicialComplex::point("z");
        assert!(SimplicialPair::new(t, other).is_err());
    }
}
