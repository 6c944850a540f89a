use std::collections::BTreeSet;

use crate::error::Error;

/// Carrier sizes up to this bound use one machine word per row.
const DENSE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Store {
    /// Bit `j` of `rows[i]` records the pair `(i, j)`. Only for sizes ≤ 64.
    Dense(Vec<u64>),
    Sparse(BTreeSet<(usize, usize)>),
}

/// An arbitrary set of ordered pairs on the carrier `{0, …, size−1}`.
///
/// No reflexivity or transitivity is assumed; this is the input type of
/// the transitive closure and the raw material preorders are generated
/// from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    size: usize,
    store: Store,
}

impl Relation {
    pub fn empty(size: usize) -> Self {
        let store = if size <= DENSE_LIMIT {
            Store::Dense(vec![0; size])
        } else {
            Store::Sparse(BTreeSet::new())
        };
        Relation { size, store }
    }

    /// Builds a relation from explicit pairs, rejecting out-of-range indices.
    pub fn new(size: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut rel = Relation::empty(size);
        for &(i, j) in pairs {
            for idx in [i, j] {
                if idx >= size {
                    return Err(Error::IndexOutOfRange { index: idx, size });
                }
            }
            rel.insert(i, j);
        }
        Ok(rel)
    }

    /// The diagonal `{(i, i)}` on the carrier.
    pub fn diagonal(size: usize) -> Self {
        let mut rel = Relation::empty(size);
        for i in 0..size {
            rel.insert(i, i);
        }
        rel
    }

    /// All pairs on the carrier.
    pub fn full(size: usize) -> Self {
        let mut rel = Relation::empty(size);
        for i in 0..size {
            for j in 0..size {
                rel.insert(i, j);
            }
        }
        rel
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.size && j < self.size);
        match &self.store {
            Store::Dense(rows) => rows[i] >> j & 1 == 1,
            Store::Sparse(set) => set.contains(&(i, j)),
        }
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize) {
        debug_assert!(i < self.size && j < self.size);
        match &mut self.store {
            Store::Dense(rows) => rows[i] |= 1 << j,
            Store::Sparse(set) => {
                set.insert((i, j));
            }
        }
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        match &self.store {
            Store::Dense(rows) => rows.iter().map(|r| r.count_ones() as usize).sum(),
            Store::Sparse(set) => set.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        match &self.store {
            Store::Dense(rows) => {
                let mut out = Vec::with_capacity(self.len());
                for (i, &row) in rows.iter().enumerate() {
                    let mut bits = row;
                    while bits != 0 {
                        let j = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        out.push((i, j));
                    }
                }
                out
            }
            Store::Sparse(set) => set.iter().copied().collect(),
        }
    }

    /// Successors of `i`, in increasing order.
    pub fn row(&self, i: usize) -> Vec<usize> {
        match &self.store {
            Store::Dense(rows) => {
                let mut out = Vec::new();
                let mut bits = rows[i];
                while bits != 0 {
                    let j = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.push(j);
                }
                out
            }
            Store::Sparse(set) => set
                .range((i, 0)..=(i, usize::MAX))
                .map(|&(_, j)| j)
                .collect(),
        }
    }

    /// The opposite relation, with every pair swapped. Involutive.
    pub fn transpose(&self) -> Self {
        let mut out = Relation::empty(self.size);
        for (i, j) in self.pairs() {
            out.insert(j, i);
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_size(other)?;
        let store = match (&self.store, &other.store) {
            (Store::Dense(a), Store::Dense(b)) => {
                Store::Dense(a.iter().zip(b).map(|(x, y)| x & y).collect())
            }
            (Store::Sparse(a), Store::Sparse(b)) => Store::Sparse(a.intersection(b).copied().collect()),
            _ => unreachable!("storage variant is determined by size"),
        };
        Ok(Relation { size: self.size, store })
    }

    pub fn union(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_size(other)?;
        let store = match (&self.store, &other.store) {
            (Store::Dense(a), Store::Dense(b)) => {
                Store::Dense(a.iter().zip(b).map(|(x, y)| x | y).collect())
            }
            (Store::Sparse(a), Store::Sparse(b)) => Store::Sparse(a.union(b).copied().collect()),
            _ => unreachable!("storage variant is determined by size"),
        };
        Ok(Relation { size: self.size, store })
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.size == other.size && self.pairs().iter().all(|&(i, j)| other.contains(i, j))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|i| self.contains(i, i))
    }

    /// First missing diagonal element, if any.
    pub(crate) fn reflexivity_violation(&self) -> Option<usize> {
        (0..self.size).find(|&i| !self.contains(i, i))
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    pub(crate) fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for (i, j) in self.pairs() {
            for k in self.row(j) {
                if !self.contains(i, k) {
                    return Some((i, j, k));
                }
            }
        }
        None
    }

    /// Adds the diagonal.
    pub fn reflexive_closure(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.size {
            out.insert(i, i);
        }
        out
    }

    /// Least transitive superset, by the squaring fixpoint
    /// `R ← R ∪ R·R` iterated until stable. Idempotent.
    pub fn transitive_closure(&self) -> Self {
        match &self.store {
            Store::Dense(rows) => {
                let mut rows = rows.clone();
                loop {
                    let prev = rows.clone();
                    let mut changed = false;
                    for i in 0..self.size {
                        let mut acc = prev[i];
                        let mut bits = prev[i];
                        while bits != 0 {
                            let j = bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            acc |= prev[j];
                        }
                        if acc != rows[i] {
                            rows[i] = acc;
                            changed = true;
                        }
                    }
                    if !changed {
                        return Relation {
                            size: self.size,
                            store: Store::Dense(rows),
                        };
                    }
                }
            }
            Store::Sparse(set) => {
                let mut set = set.clone();
                loop {
                    let mut additions = Vec::new();
                    for &(i, j) in &set {
                        for &(_, k) in set.range((j, 0)..=(j, usize::MAX)) {
                            if !set.contains(&(i, k)) {
                                additions.push((i, k));
                            }
                        }
                    }
                    if additions.is_empty() {
                        return Relation {
                            size: self.size,
                            store: Store::Sparse(set),
                        };
                    }
                    set.extend(additions);
                }
            }
        }
    }

    fn check_same_size(&self, other: &Self) -> Result<(), Error> {
        if self.size != other.size {
            return Err(Error::SizeMismatch {
                left: self.size,
                right: other.size,
            });
        }
        Ok(())
    }
}
