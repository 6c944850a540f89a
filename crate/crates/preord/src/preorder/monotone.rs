use std::fmt;

use crate::error::Error;
use crate::preorder::{ComplementedSub, FinPreorder};

/// A relation-preserving total function between finite preorders.
///
/// Equality is pointwise on the carrier together with equal domain and
/// codomain, which is decidable because carriers are canonical index
/// ranges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    dom: FinPreorder,
    cod: FinPreorder,
    map: Vec<usize>,
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonotoneMap({:?} -> {:?}, {:?})", self.dom, self.cod, self.map)
    }
}

impl MonotoneMap {
    /// Validates that every related pair of the domain maps to a related
    /// pair of the codomain.
    pub fn new(dom: FinPreorder, cod: FinPreorder, map: Vec<usize>) -> Result<Self, Error> {
        if map.len() != dom.size() {
            return Err(Error::SizeMismatch { left: map.len(), right: dom.size() });
        }
        for &v in &map {
            if v >= cod.size() {
                return Err(Error::IndexOutOfRange { index: v, size: cod.size() });
            }
        }
        for (i, j) in dom.rel().pairs() {
            if !cod.le(map[i], map[j]) {
                return Err(Error::NotMonotone(i, j, map[i], map[j]));
            }
        }
        Ok(MonotoneMap { dom, cod, map })
    }

    pub fn identity(a: &FinPreorder) -> Self {
        MonotoneMap {
            dom: a.clone(),
            cod: a.clone(),
            map: (0..a.size()).collect(),
        }
    }

    /// The map sending everything to one point. Always monotone.
    pub fn constant(dom: FinPreorder, cod: FinPreorder, value: usize) -> Result<Self, Error> {
        if value >= cod.size() {
            return Err(Error::IndexOutOfRange { index: value, size: cod.size() });
        }
        let map = vec![value; dom.size()];
        Ok(MonotoneMap { dom, cod, map })
    }

    pub fn dom(&self) -> &FinPreorder {
        &self.dom
    }

    pub fn cod(&self) -> &FinPreorder {
        &self.cod
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn values(&self) -> &[usize] {
        &self.map
    }

    /// Pointwise composition `self ∘ other`. Strictly associative and
    /// unital.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        if other.cod != self.dom {
            return Err(Error::BoundaryMismatch);
        }
        let map = other.map.iter().map(|&i| self.map[i]).collect();
        Ok(MonotoneMap { dom: other.dom.clone(), cod: self.cod.clone(), map })
    }

    /// Preimage of a complemented subobject of the codomain. The result
    /// is again complemented: monotone maps send comparability into
    /// comparability, so no related pair crosses a preimage boundary.
    pub fn inverse_image(&self, s: &ComplementedSub) -> Result<ComplementedSub, Error> {
        if s.parent() != &self.cod {
            return Err(Error::BoundaryMismatch);
        }
        let members: Vec<_> = (0..self.dom.size()).filter(|&i| s.contains(self.map[i])).collect();
        debug_assert!(self.dom.complemented_sub(&members).is_ok());
        Ok(ComplementedSub::from_parts_unchecked(self.dom.clone(), members))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Inverse of a bijective map, when the inverse is monotone too.
    pub fn invert(&self) -> Option<Self> {
        if !self.is_injective() || !self.is_surjective() {
            return None;
        }
        let mut inv = vec![0; self.cod.size()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        MonotoneMap::new(self.cod.clone(), self.dom.clone(), inv).ok()
    }

    pub(crate) fn from_parts_unchecked(dom: FinPreorder, cod: FinPreorder, map: Vec<usize>) -> Self {
        debug_assert!(MonotoneMap::new(dom.clone(), cod.clone(), map.clone()).is_ok());
        MonotoneMap { dom, cod, map }
    }
}
