//! Finite preorders, monotone maps, and complemented subobjects.

mod monotone;
mod relation;

pub use monotone::MonotoneMap;
pub use relation::Relation;

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::Error;

/// A preorder on the carrier `{0, …, size−1}`: a reflexive, transitive
/// relation, with `(i, j)` read as `i ≤ j`.
///
/// Values are immutable after construction and the invariants are
/// enforced by every constructor: [`FinPreorder::from_relation`]
/// validates, [`FinPreorder::from_generators`] closes.
#[derive(Clone)]
pub struct FinPreorder {
    rel: Relation,
    /// Comparability component of each element; ids are assigned in
    /// order of least member.
    comp_of: Vec<usize>,
    num_comps: usize,
}

impl PartialEq for FinPreorder {
    fn eq(&self, other: &Self) -> bool {
        self.rel == other.rel
    }
}

impl Eq for FinPreorder {}

impl Hash for FinPreorder {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rel.hash(state);
    }
}

impl fmt::Debug for FinPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinPreorder(size={}, pairs={:?})", self.size(), self.nontrivial_pairs())
    }
}

impl FinPreorder {
    fn from_closed(rel: Relation) -> Self {
        let size = rel.size();
        let mut uf = UnionFind::new(size);
        for (i, j) in rel.pairs() {
            uf.union(i, j);
        }
        let (comp_of, num_comps) = uf.canonical_ids();
        FinPreorder { rel, comp_of, num_comps }
    }

    /// Wraps an already reflexive and transitive relation.
    pub fn from_relation(rel: Relation) -> Result<Self, Error> {
        if let Some(i) = rel.reflexivity_violation() {
            return Err(Error::NotReflexive(i));
        }
        if let Some((i, j, k)) = rel.transitivity_violation() {
            return Err(Error::NotTransitive(i, j, k));
        }
        Ok(FinPreorder::from_closed(rel))
    }

    /// The least preorder containing the given generating pairs.
    pub fn from_generators(size: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        let rel = Relation::new(size, pairs)?;
        Ok(FinPreorder::from_closed(
            rel.reflexive_closure().transitive_closure(),
        ))
    }

    /// The discrete preorder: only the diagonal.
    pub fn discrete(size: usize) -> Self {
        FinPreorder::from_closed(Relation::diagonal(size))
    }

    /// All pairs related: the indiscrete equivalence relation.
    pub fn full(size: usize) -> Self {
        FinPreorder::from_closed(Relation::full(size))
    }

    /// The linear order `0 ≤ 1 ≤ … ≤ size−1`.
    pub fn chain(size: usize) -> Self {
        let pairs: Vec<_> = (0..size.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        FinPreorder::from_generators(size, &pairs).expect("chain generators are in range")
    }

    pub fn size(&self) -> usize {
        self.rel.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Whether `i ≤ j`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.rel.contains(i, j)
    }

    pub fn rel(&self) -> &Relation {
        &self.rel
    }

    /// All related pairs off the diagonal.
    pub fn nontrivial_pairs(&self) -> Vec<(usize, usize)> {
        self.rel.pairs().into_iter().filter(|&(i, j)| i != j).collect()
    }

    /// The preorder with all pairs swapped. Involutive.
    pub fn opposite(&self) -> Self {
        FinPreorder::from_closed(self.rel.transpose())
    }

    /// Pairwise intersection of relations on the same carrier.
    ///
    /// The intersection of two preorders is again a preorder.
    pub fn meet(&self, other: &Self) -> Result<Self, Error> {
        let rel = self.rel.intersection(&other.rel)?;
        debug_assert!(rel.is_reflexive() && rel.is_transitive());
        Ok(FinPreorder::from_closed(rel))
    }

    /// Symmetric preorders: `ρ° = ρ`.
    pub fn is_equivalence(&self) -> bool {
        self.rel == self.rel.transpose()
    }

    /// Antisymmetric preorders: `ρ ∩ ρ° = Δ`.
    pub fn is_partial_order(&self) -> bool {
        self.rel
            .intersection(&self.rel.transpose())
            .expect("same carrier")
            == Relation::diagonal(self.size())
    }

    /// Exactly the diagonal. Discrete preorders are the trivial objects:
    /// the intersection of equivalence relations and partial orders.
    pub fn is_discrete(&self) -> bool {
        self.rel == Relation::diagonal(self.size())
    }

    /// Number of comparability components (connected components of
    /// `ρ ∪ ρ°`).
    pub fn num_components(&self) -> usize {
        self.num_comps
    }

    /// Component id of an element; ids are ordered by least member.
    pub fn component_of(&self, i: usize) -> usize {
        self.comp_of[i]
    }

    pub fn same_component(&self, i: usize, j: usize) -> bool {
        self.comp_of[i] == self.comp_of[j]
    }

    /// The finest partition of the carrier such that every related pair
    /// lies within one block. Blocks are sorted, and listed by least
    /// member.
    pub fn comparability_components(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_comps];
        for (i, &c) in self.comp_of.iter().enumerate() {
            blocks[c].push(i);
        }
        blocks
    }

    /// The subobject on `members`, together with its complement.
    ///
    /// Succeeds exactly when `members` is a union of comparability
    /// components; otherwise some related pair crosses the boundary and
    /// the subobject has no complement.
    pub fn complemented_sub(&self, members: &[usize]) -> Result<ComplementedSub, Error> {
        let members = check_member_list(members, self.size())?;
        let mut in_members = vec![false; self.size()];
        for &m in &members {
            in_members[m] = true;
        }
        for &m in &members {
            for (i, j) in pairs_touching(&self.rel, m) {
                let other = if i == m { j } else { i };
                if !in_members[other] {
                    return Err(Error::NotComplemented { inside: m, outside: other });
                }
            }
        }
        Ok(ComplementedSub { parent: self.clone(), members })
    }

    /// Block coproduct: the carrier of `b` is shifted past the carrier
    /// of `a`, and the relation is the disjoint union of the two
    /// relations. The injection images are complementary subobjects.
    pub fn coproduct(a: &Self, b: &Self) -> Coproduct {
        let n = a.size() + b.size();
        let mut pairs = a.rel.pairs();
        pairs.extend(b.rel.pairs().into_iter().map(|(i, j)| (i + a.size(), j + a.size())));
        let rel = Relation::new(n, &pairs).expect("shifted indices are in range");
        let object = FinPreorder::from_closed(rel);
        let left = MonotoneMap::new(a.clone(), object.clone(), (0..a.size()).collect())
            .expect("left injection is monotone");
        let right = MonotoneMap::new(
            b.clone(),
            object.clone(),
            (a.size()..n).collect(),
        )
        .expect("right injection is monotone");
        Coproduct { object, left, right }
    }

    /// The induced preorder on a subset of the carrier, reindexed along
    /// the sorted member list.
    pub(crate) fn restrict(&self, members: &[usize]) -> FinPreorder {
        let mut pairs = Vec::new();
        for (li, &i) in members.iter().enumerate() {
            for (lj, &j) in members.iter().enumerate() {
                if self.rel.contains(i, j) {
                    pairs.push((li, lj));
                }
            }
        }
        let rel = Relation::new(members.len(), &pairs).expect("local indices are in range");
        debug_assert!(rel.is_reflexive() && rel.is_transitive());
        FinPreorder::from_closed(rel)
    }
}

fn pairs_touching(rel: &Relation, m: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = rel.row(m).into_iter().map(|j| (m, j)).collect();
    for i in 0..rel.size() {
        if rel.contains(i, m) {
            out.push((i, m));
        }
    }
    out
}

fn check_member_list(members: &[usize], size: usize) -> Result<Vec<usize>, Error> {
    for w in members.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::BadMemberList);
        }
    }
    if let Some(&m) = members.last() {
        if m >= size {
            return Err(Error::IndexOutOfRange { index: m, size });
        }
    }
    Ok(members.to_vec())
}

/// A subobject of a preorder that is closed under comparability, stored
/// as a sorted member list of a fixed parent. Its complement is again
/// such a subobject, and the parent relation splits as the disjoint
/// union of the two induced relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementedSub {
    parent: FinPreorder,
    members: Vec<usize>,
}

impl ComplementedSub {
    pub fn parent(&self) -> &FinPreorder {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Position of a parent index in the sorted member list.
    pub fn local_index(&self, i: usize) -> Option<usize> {
        self.members.binary_search(&i).ok()
    }

    pub fn complement(&self) -> ComplementedSub {
        let members: Vec<_> = (0..self.parent.size()).filter(|&i| !self.contains(i)).collect();
        ComplementedSub { parent: self.parent.clone(), members }
    }

    /// The induced preorder on the members, on the carrier
    /// `{0, …, len−1}` in sorted member order.
    pub fn induced(&self) -> FinPreorder {
        self.parent.restrict(&self.members)
    }

    /// The inclusion of the induced preorder into the parent.
    pub fn inclusion(&self) -> MonotoneMap {
        MonotoneMap::new(self.induced(), self.parent.clone(), self.members.clone())
            .expect("inclusion of an induced preorder is monotone")
    }

    pub(crate) fn from_parts_unchecked(parent: FinPreorder, members: Vec<usize>) -> Self {
        debug_assert!(parent.complemented_sub(&members).is_ok());
        ComplementedSub { parent, members }
    }
}

/// A coproduct presentation: the block object together with the two
/// injections.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub object: FinPreorder,
    pub left: MonotoneMap,
    pub right: MonotoneMap,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }

    /// Component ids numbered by least member.
    fn canonical_ids(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for i in 0..n {
            let root = self.find(i);
            if ids[root] == usize::MAX {
                ids[root] = next;
                next += 1;
            }
            out[i] = ids[root];
        }
        (out, next)
    }
}
