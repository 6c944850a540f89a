//! Exhaustive enumerators for small preorders, monotone maps, partial
//! maps, and stable morphisms.
//!
//! Everything here enumerates labeled structures in a fixed
//! deterministic order, so enumeration doubles as the quantifier in
//! bounded universal-property checks.

use crate::error::Error;
use crate::preorder::{FinPreorder, MonotoneMap, Relation};
use crate::stable::{PartialMap, StableMorphism};

/// Hard cap for exhaustive preorder enumeration; the count grows as
/// 1, 1, 4, 29, 355, … and size 5 is already past desk scale.
pub const MAX_ENUMERATION_SIZE: usize = 4;

const DEFAULT_CANDIDATE_BOUND: u128 = 1 << 26;

/// Every preorder on the labeled carrier `{0, …, size−1}`, exactly once.
pub fn enumerate_preorders(size: usize) -> Result<Vec<FinPreorder>, Error> {
    if size > MAX_ENUMERATION_SIZE {
        return Err(Error::SizeTooLarge { got: size, max: MAX_ENUMERATION_SIZE });
    }
    let cells: Vec<(usize, usize)> = (0..size)
        .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << cells.len() {
        let pairs: Vec<_> = cells
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let rel = Relation::new(size, &pairs)?.reflexive_closure();
        if rel.is_transitive() {
            out.push(FinPreorder::from_relation(rel).expect("reflexive and transitive"));
        }
    }
    Ok(out)
}

/// All preorders of size at most `max_size`, smallest first.
pub fn enumerate_preorders_up_to(max_size: usize) -> Vec<FinPreorder> {
    (0..=max_size)
        .flat_map(|n| enumerate_preorders(n).expect("bounded enumeration"))
        .collect()
}

/// All monotone maps `a → b`, under the default candidate bound.
pub fn enumerate_monotone_maps(a: &FinPreorder, b: &FinPreorder) -> Vec<MonotoneMap> {
    try_enumerate_monotone_maps(a, b, DEFAULT_CANDIDATE_BOUND)
        .expect("within the default enumeration bound")
}

/// All monotone maps `a → b`, refusing to scan more than `bound`
/// candidate functions.
pub fn try_enumerate_monotone_maps(
    a: &FinPreorder,
    b: &FinPreorder,
    bound: u128,
) -> Result<Vec<MonotoneMap>, Error> {
    let candidates = function_count(b.size(), a.size());
    if candidates > bound {
        return Err(Error::EnumerationTooLarge { candidates, bound });
    }
    let assignments = monotone_assignments(a, b);
    Ok(assignments
        .into_iter()
        .map(|map| MonotoneMap::new(a.clone(), b.clone(), map).expect("search only emits monotone maps"))
        .collect())
}

fn function_count(base: usize, exp: usize) -> u128 {
    (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX)
}

/// Backtracking enumeration of monotone assignments, pruning as soon as
/// a related pair of already-placed elements breaks.
fn monotone_assignments(a: &FinPreorder, b: &FinPreorder) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut assign = Vec::with_capacity(a.size());
    fn rec(a: &FinPreorder, b: &FinPreorder, assign: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let t = assign.len();
        if t == a.size() {
            out.push(assign.clone());
            return;
        }
        'candidate: for v in 0..b.size() {
            for s in 0..t {
                if a.le(s, t) && !b.le(assign[s], v) {
                    continue 'candidate;
                }
                if a.le(t, s) && !b.le(v, assign[s]) {
                    continue 'candidate;
                }
            }
            assign.push(v);
            rec(a, b, assign, out);
            assign.pop();
        }
    }
    rec(a, b, &mut assign, &mut out);
    out
}

/// All partial maps `a ⇀ b`: every complemented domain paired with
/// every monotone assignment on it.
pub fn enumerate_partial_maps(a: &FinPreorder, b: &FinPreorder) -> Vec<PartialMap> {
    let blocks = a.comparability_components();
    let mut out = Vec::new();
    for mask in 0u64..1 << blocks.len() {
        let mut members = Vec::new();
        for (pos, block) in blocks.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                members.extend(block.iter().copied());
            }
        }
        members.sort_unstable();
        let sub = a.complemented_sub(&members).expect("union of components");
        let induced = sub.induced();
        for values in monotone_assignments(&induced, b) {
            out.push(
                PartialMap::new(a.clone(), b.clone(), &members, values)
                    .expect("assignments are monotone on the induced preorder"),
            );
        }
    }
    out
}

/// All stable morphisms `a → b` in normal form: for each union of
/// non-singleton components, each monotone assignment that is
/// non-constant on every chosen component. Normal forms are pairwise
/// distinct, so no deduplication is needed.
pub fn enumerate_stable_morphisms(a: &FinPreorder, b: &FinPreorder) -> Vec<StableMorphism> {
    let blocks = a.comparability_components();
    let eligible: Vec<usize> = (0..blocks.len()).filter(|&i| blocks[i].len() >= 2).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << eligible.len() {
        let chosen: Vec<usize> = eligible
            .iter()
            .enumerate()
            .filter(|&(pos, _)| mask >> pos & 1 == 1)
            .map(|(_, &bidx)| bidx)
            .collect();
        let mut members = Vec::new();
        for &bidx in &chosen {
            members.extend(blocks[bidx].iter().copied());
        }
        members.sort_unstable();
        let sub = a.complemented_sub(&members).expect("union of components");
        let induced = sub.induced();
        'assignment: for values in monotone_assignments(&induced, b) {
            for &bidx in &chosen {
                let mut vals = blocks[bidx]
                    .iter()
                    .map(|&i| values[sub.local_index(i).expect("member")]);
                let first = vals.next().expect("components are non-empty");
                if vals.all(|v| v == first) {
                    continue 'assignment;
                }
            }
            out.push(StableMorphism::from_parts_unchecked(
                a.clone(),
                b.clone(),
                members.clone(),
                values,
            ));
        }
    }
    out
}
