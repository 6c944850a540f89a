//! Partial monotone maps and the stable category.
//!
//! A partial map `(α, f) : A ⇀ B` is a monotone map `f` defined on a
//! complemented subobject `α` of `A`. Two parallel partial maps are
//! congruent when they agree on a common complemented subobject and are
//! trivial on its complements; the quotient by this congruence is the
//! stable category. Because complemented subobjects are exactly unions
//! of comparability components and a morphism is trivial on a component
//! precisely when it is constant there, every congruence class has a
//! canonical representative: drop the components on which the map is
//! constant. [`StableMorphism`] is that normal form, so equality of
//! stable morphisms is plain structural equality, and
//! [`find_congruence_diagram`] provides the brute-force witness search
//! the normal form is checked against.
//!
//! The stable category is pointed (discrete preorders become zero
//! objects), has disjoint pre-universal coproducts computed blockwise,
//! and has kernels and cokernels: the kernel of a morphism restricts
//! its relation to the collapsed pairs and re-attaches the complement,
//! and the cokernel is the image under [`sigma`] of the codomain
//! quotient by the relation generated by the defined part.

use crate::enumerate::{enumerate_preorders_up_to, enumerate_stable_morphisms};
use crate::error::Error;
use crate::preorder::{ComplementedSub, FinPreorder, MonotoneMap};
use crate::pretorsion::{z_cokernel, z_kernel};

/// A monotone map defined on a complemented subobject of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialMap {
    source: FinPreorder,
    target: FinPreorder,
    /// Sorted member list of the domain subobject.
    members: Vec<usize>,
    /// Values aligned with `members`.
    values: Vec<usize>,
}

impl PartialMap {
    /// Validates that `members` is complemented in `source` and that the
    /// assignment is monotone for the induced preorder.
    pub fn new(
        source: FinPreorder,
        target: FinPreorder,
        members: &[usize],
        values: Vec<usize>,
    ) -> Result<Self, Error> {
        source.complemented_sub(members)?;
        if values.len() != members.len() {
            return Err(Error::SizeMismatch { left: values.len(), right: members.len() });
        }
        for &v in &values {
            if v >= target.size() {
                return Err(Error::IndexOutOfRange { index: v, size: target.size() });
            }
        }
        for (li, &i) in members.iter().enumerate() {
            for (lj, &j) in members.iter().enumerate() {
                if source.le(i, j) && !target.le(values[li], values[lj]) {
                    return Err(Error::NotMonotone(i, j, values[li], values[lj]));
                }
            }
        }
        Ok(PartialMap { source, target, members: members.to_vec(), values })
    }

    /// The everywhere-defined partial map carrying a monotone map; this
    /// is the inclusion of total maps into partial ones.
    pub fn from_monotone(f: &MonotoneMap) -> Self {
        PartialMap {
            source: f.dom().clone(),
            target: f.cod().clone(),
            members: (0..f.dom().size()).collect(),
            values: f.values().to_vec(),
        }
    }

    /// The nowhere-defined partial map.
    pub fn empty(source: FinPreorder, target: FinPreorder) -> Self {
        PartialMap { source, target, members: Vec::new(), values: Vec::new() }
    }

    pub fn identity(a: &FinPreorder) -> Self {
        PartialMap::from_monotone(&MonotoneMap::identity(a))
    }

    pub fn source(&self) -> &FinPreorder {
        &self.source
    }

    pub fn target(&self) -> &FinPreorder {
        &self.target
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn domain(&self) -> ComplementedSub {
        ComplementedSub::from_parts_unchecked(self.source.clone(), self.members.clone())
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.members.binary_search(&i).ok().map(|li| self.values[li])
    }

    /// Pullback composition `self ∘ other`: defined where `other` is
    /// defined and lands in the domain of `self`. Strictly associative
    /// and unital under the subset representation of domains.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        if other.target != self.source {
            return Err(Error::BoundaryMismatch);
        }
        let mut members = Vec::new();
        let mut values = Vec::new();
        for (li, &i) in other.members.iter().enumerate() {
            if let Some(v) = self.apply(other.values[li]) {
                members.push(i);
                values.push(v);
            }
        }
        Ok(PartialMap {
            source: other.source.clone(),
            target: self.target.clone(),
            members,
            values,
        })
    }

    /// The canonical representative of the congruence class: drop every
    /// comparability component of the domain on which the map is
    /// constant. Idempotent.
    pub fn normalize(&self) -> StableMorphism {
        let mut kept = Vec::new();
        let mut values = Vec::new();
        let blocks = self.source.comparability_components();
        for block in &blocks {
            if block.iter().any(|&i| !self.members.binary_search(&i).is_ok()) {
                continue;
            }
            let first = self.apply(block[0]).expect("member of the domain");
            let constant = block.iter().all(|&i| self.apply(i) == Some(first));
            if constant {
                continue;
            }
            for &i in block {
                kept.push(i);
                values.push(self.apply(i).expect("member of the domain"));
            }
        }
        let mut paired: Vec<_> = kept.into_iter().zip(values).collect();
        paired.sort_unstable_by_key(|&(i, _)| i);
        let (kept, values) = paired.into_iter().unzip();
        StableMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            kept,
            values,
        }
    }

    /// Whether the two partial maps are congruent, decided by comparing
    /// normal forms. Cross-checked against [`find_congruence_diagram`].
    pub fn equivalent(&self, other: &Self) -> Result<bool, Error> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::BoundaryMismatch);
        }
        Ok(self.normalize() == other.normalize())
    }
}

/// A witness that two parallel partial maps are congruent: a common
/// complemented subobject on which they agree, such that each map is
/// trivial on the rest of its own domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceWitness {
    /// Member list of the shared subobject, as source indices.
    pub members: Vec<usize>,
}

/// Brute-force search for a congruence witness between two parallel
/// partial maps, independent of the normal form.
///
/// All unions of comparability components contained in both domains are
/// tried; a candidate works when the maps agree on it pointwise and
/// each map is constant on every remaining component of its own domain.
/// On success the returned witness is the canonical one: the union of
/// the components where both maps are defined, equal, and non-constant.
pub fn find_congruence_diagram(p1: &PartialMap, p2: &PartialMap) -> Option<CongruenceWitness> {
    assert_eq!(p1.source, p2.source, "parallel morphisms required");
    assert_eq!(p1.target, p2.target, "parallel morphisms required");
    let blocks = p1.source.comparability_components();
    let in_both: Vec<usize> = (0..blocks.len())
        .filter(|&b| {
            blocks[b]
                .iter()
                .all(|&i| p1.apply(i).is_some() && p2.apply(i).is_some())
        })
        .collect();

    let agrees_on = |b: usize| blocks[b].iter().all(|&i| p1.apply(i) == p2.apply(i));
    let constant_on = |p: &PartialMap, b: usize| {
        let first = p.apply(blocks[b][0]);
        blocks[b].iter().all(|&i| p.apply(i) == first)
    };
    let defined_on = |p: &PartialMap, b: usize| blocks[b].iter().all(|&i| p.apply(i).is_some());

    let mut exists = false;
    'mask: for mask in 0u64..1 << in_both.len() {
        let chosen: Vec<usize> = in_both
            .iter()
            .enumerate()
            .filter(|&(pos, _)| mask >> pos & 1 == 1)
            .map(|(_, &b)| b)
            .collect();
        for &b in &chosen {
            if !agrees_on(b) {
                continue 'mask;
            }
        }
        for (p, _other) in [(p1, p2), (p2, p1)] {
            for b in 0..blocks.len() {
                if defined_on(p, b) && !chosen.contains(&b) && !constant_on(p, b) {
                    continue 'mask;
                }
            }
        }
        exists = true;
        break;
    }
    if !exists {
        return None;
    }
    // Canonical witness: components where both maps are defined, equal,
    // and non-constant.
    let mut members = Vec::new();
    for b in 0..blocks.len() {
        if defined_on(p1, b) && defined_on(p2, b) && agrees_on(b) && !constant_on(p1, b) {
            members.extend(blocks[b].iter().copied());
        }
    }
    members.sort_unstable();
    debug_assert!({
        let ok_agree = members.iter().all(|&i| p1.apply(i) == p2.apply(i));
        let ok_rest = [p1, p2].into_iter().all(|p| {
            (0..blocks.len()).all(|b| {
                !defined_on(p, b)
                    || blocks[b].iter().all(|i| members.contains(i))
                    || constant_on(p, b)
            })
        });
        ok_agree && ok_rest
    });
    Some(CongruenceWitness { members })
}

/// The normal form of a congruence class of partial maps: a monotone
/// map defined on a union of comparability components and non-constant
/// on each of them. Structural equality decides equality in the stable
/// category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StableMorphism {
    source: FinPreorder,
    target: FinPreorder,
    kept: Vec<usize>,
    values: Vec<usize>,
}

impl StableMorphism {
    /// Validates the normal-form invariants: `kept` is complemented,
    /// the assignment is monotone, and no kept component is constant.
    pub fn new(
        source: FinPreorder,
        target: FinPreorder,
        kept: &[usize],
        values: Vec<usize>,
    ) -> Result<Self, Error> {
        let p = PartialMap::new(source, target, kept, values)?;
        let n = p.normalize();
        if n.kept != p.members {
            return Err(Error::BadMemberList);
        }
        Ok(n)
    }

    pub(crate) fn from_parts_unchecked(
        source: FinPreorder,
        target: FinPreorder,
        kept: Vec<usize>,
        values: Vec<usize>,
    ) -> Self {
        let m = StableMorphism { source, target, kept, values };
        debug_assert_eq!(m.as_partial().normalize(), m);
        m
    }

    /// The zero morphism: nowhere defined.
    pub fn zero(source: FinPreorder, target: FinPreorder) -> Self {
        StableMorphism { source, target, kept: Vec::new(), values: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.kept.is_empty()
    }

    pub fn identity(a: &FinPreorder) -> Self {
        sigma(&MonotoneMap::identity(a))
    }

    pub fn source(&self) -> &FinPreorder {
        &self.source
    }

    pub fn target(&self) -> &FinPreorder {
        &self.target
    }

    /// Sorted member list of the surviving components.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.kept.binary_search(&i).ok().map(|li| self.values[li])
    }

    /// The normal form viewed as a partial map representative.
    pub fn as_partial(&self) -> PartialMap {
        PartialMap {
            source: self.source.clone(),
            target: self.target.clone(),
            members: self.kept.clone(),
            values: self.values.clone(),
        }
    }

    /// The defined part as a monotone map out of the induced preorder
    /// on the kept members.
    pub fn kept_map(&self) -> MonotoneMap {
        let sub = self.kept_sub();
        MonotoneMap::new(sub.induced(), self.target.clone(), self.values.clone())
            .expect("normal forms are monotone on the induced preorder")
    }

    pub fn kept_sub(&self) -> ComplementedSub {
        ComplementedSub::from_parts_unchecked(self.source.clone(), self.kept.clone())
    }

    /// Composition in the stable category: compose representatives and
    /// normalize. Well-defined on congruence classes.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.as_partial().compose(&other.as_partial())?.normalize())
    }

    /// Blockwise coproduct `self ∐ other` between the block coproducts
    /// of the boundaries.
    pub fn coproduct(m1: &Self, m2: &Self) -> Self {
        let src = FinPreorder::coproduct(&m1.source, &m2.source).object;
        let tgt = FinPreorder::coproduct(&m1.target, &m2.target).object;
        let mut kept = m1.kept.clone();
        kept.extend(m2.kept.iter().map(|&i| i + m1.source.size()));
        let mut values = m1.values.clone();
        values.extend(m2.values.iter().map(|&v| v + m1.target.size()));
        StableMorphism::from_parts_unchecked(src, tgt, kept, values)
    }

    /// The copairing `[f, g]` out of the block coproduct of the two
    /// sources, for morphisms into a common target.
    pub fn copair(f: &Self, g: &Self) -> Result<Self, Error> {
        if f.target != g.target {
            return Err(Error::BoundaryMismatch);
        }
        let src = FinPreorder::coproduct(&f.source, &g.source).object;
        let mut kept = f.kept.clone();
        kept.extend(g.kept.iter().map(|&i| i + f.source.size()));
        let mut values = f.values.clone();
        values.extend(g.values.iter().copied());
        Ok(StableMorphism::from_parts_unchecked(src, f.target.clone(), kept, values))
    }

    /// Kernel in the stable category.
    ///
    /// The kernel object is the block coproduct of the Z-kernel of the
    /// defined part with the complement of the domain, and the kernel
    /// morphism is the image under [`sigma`] of the evident
    /// inclusion-on-points map.
    pub fn kernel(&self) -> StableKernel {
        let sub = self.kept_sub();
        let zk = z_kernel(&self.kept_map());
        let comp = sub.complement();
        let object = FinPreorder::coproduct(&zk.object, &comp.induced()).object;
        let mut map = self.kept.clone();
        map.extend(comp.members().iter().copied());
        let embed = MonotoneMap::new(object.clone(), self.source.clone(), map)
            .expect("kernel block relations embed in the source");
        let morphism = sigma(&embed);
        StableKernel { object, embed, morphism }
    }

    /// Cokernel in the stable category: the image under [`sigma`] of
    /// the Z-cokernel of the defined part.
    pub fn cokernel(&self) -> StableCokernel {
        let zc = z_cokernel(&self.kept_map());
        let morphism = sigma(&zc.projection);
        StableCokernel { object: zc.object, projection: zc.projection, morphism }
    }

    /// Two-sided inverse in the stable category, when one exists.
    ///
    /// An isomorphism must keep every non-singleton component and map it
    /// bijectively onto the non-singleton part of the target, so the
    /// only candidate is the reversed point assignment; it is built and
    /// verified.
    pub fn inverse(&self) -> Option<StableMorphism> {
        let mut paired: Vec<(usize, usize)> = self
            .values
            .iter()
            .copied()
            .zip(self.kept.iter().copied())
            .collect();
        paired.sort_unstable();
        if paired.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        let kept: Vec<usize> = paired.iter().map(|&(v, _)| v).collect();
        let values: Vec<usize> = paired.iter().map(|&(_, i)| i).collect();
        let candidate =
            StableMorphism::new(self.target.clone(), self.source.clone(), &kept, values).ok()?;
        let id_src = StableMorphism::identity(&self.source);
        let id_tgt = StableMorphism::identity(&self.target);
        if candidate.compose(self).ok()? == id_src && self.compose(&candidate).ok()? == id_tgt {
            Some(candidate)
        } else {
            None
        }
    }
}

/// The canonical functor from preorders to the stable category: take
/// the everywhere-defined partial map and normalize.
///
/// `sigma(f)` is zero exactly when `f` is trivial, and `sigma` sends
/// discrete preorders to zero objects.
pub fn sigma(f: &MonotoneMap) -> StableMorphism {
    PartialMap::from_monotone(f).normalize()
}

/// The injections of the block coproduct, as stable morphisms.
pub fn stable_injections(a: &FinPreorder, b: &FinPreorder) -> (StableMorphism, StableMorphism) {
    let cop = FinPreorder::coproduct(a, b);
    (sigma(&cop.left), sigma(&cop.right))
}

/// A stable kernel: the block object, the underlying inclusion-on-points
/// monotone map, and its image in the stable category.
#[derive(Debug, Clone)]
pub struct StableKernel {
    pub object: FinPreorder,
    pub embed: MonotoneMap,
    pub morphism: StableMorphism,
}

/// A stable cokernel: the quotient object, the underlying projection,
/// and its image in the stable category.
#[derive(Debug, Clone)]
pub struct StableCokernel {
    pub object: FinPreorder,
    pub projection: MonotoneMap,
    pub morphism: StableMorphism,
}

/// A pre-universal decomposition of a morphism into a designated binary
/// coproduct: a complementary split of the source together with the two
/// component morphisms.
#[derive(Debug, Clone)]
pub struct PreuniversalSplit {
    /// Components mapped into the first summand, plus everything the
    /// morphism drops.
    pub first: ComplementedSub,
    /// Components mapped into the second summand.
    pub second: ComplementedSub,
    /// Induced morphism from the first part into the first summand.
    pub into_first: StableMorphism,
    /// Induced morphism from the second part into the second summand.
    pub into_second: StableMorphism,
}

/// Splits `m : C → B₁ ∐ B₂` along the designated block coproduct.
///
/// Every kept component maps into a single summand because monotone
/// maps preserve comparability; the canonical choice assigns the
/// dropped components to the first block.
pub fn preuniversal_decomposition(
    m: &StableMorphism,
    b1: &FinPreorder,
    b2: &FinPreorder,
) -> Result<PreuniversalSplit, Error> {
    let cop = FinPreorder::coproduct(b1, b2);
    if &cop.object != m.target() {
        return Err(Error::NotACoproduct);
    }
    let source = m.source().clone();
    let blocks = source.comparability_components();
    let mut first_members = Vec::new();
    let mut second_members = Vec::new();
    for block in &blocks {
        let defined = block.iter().all(|&i| m.apply(i).is_some());
        if !defined {
            first_members.extend(block.iter().copied());
            continue;
        }
        let v = m.apply(block[0]).expect("defined block");
        debug_assert!(
            block.iter().all(|&i| (m.apply(i).unwrap() < b1.size()) == (v < b1.size())),
            "a component must map into a single summand"
        );
        if v < b1.size() {
            first_members.extend(block.iter().copied());
        } else {
            second_members.extend(block.iter().copied());
        }
    }
    first_members.sort_unstable();
    second_members.sort_unstable();
    let first = ComplementedSub::from_parts_unchecked(source.clone(), first_members);
    let second = ComplementedSub::from_parts_unchecked(source, second_members);

    let into_first = component_morphism(m, &first, b1, 0)?;
    let into_second = component_morphism(m, &second, b2, b1.size())?;
    Ok(PreuniversalSplit { first, second, into_first, into_second })
}

fn component_morphism(
    m: &StableMorphism,
    part: &ComplementedSub,
    summand: &FinPreorder,
    shift: usize,
) -> Result<StableMorphism, Error> {
    let induced = part.induced();
    let mut members = Vec::new();
    let mut values = Vec::new();
    for (local, &i) in part.members().iter().enumerate() {
        if let Some(v) = m.apply(i) {
            members.push(local);
            values.push(v - shift);
        }
    }
    Ok(PartialMap::new(induced, summand.clone(), &members, values)?.normalize())
}

/// Bounded verification that `first` is a kernel of `second` and
/// `second` a cokernel of `first` in the stable category, quantifying
/// over all test objects of size at most `test_bound`.
pub fn is_short_exact(first: &StableMorphism, second: &StableMorphism, test_bound: usize) -> bool {
    assert_eq!(first.target(), second.source(), "composable pair required");
    let composite = second.compose(first).expect("boundaries match");
    if !composite.is_zero() {
        return false;
    }
    let middle = first.target();
    for t in enumerate_preorders_up_to(test_bound) {
        // Kernel universal property of `first` for `second`.
        for probe in enumerate_stable_morphisms(&t, middle) {
            if !second.compose(&probe).expect("composable").is_zero() {
                continue;
            }
            let hits = enumerate_stable_morphisms(&t, first.source())
                .into_iter()
                .filter(|u| &first.compose(u).expect("composable") == &probe)
                .count();
            if hits != 1 {
                return false;
            }
        }
        // Cokernel universal property of `second` for `first`.
        for probe in enumerate_stable_morphisms(middle, &t) {
            if !probe.compose(first).expect("composable").is_zero() {
                continue;
            }
            let hits = enumerate_stable_morphisms(second.target(), &t)
                .into_iter()
                .filter(|u| &u.compose(second).expect("composable") == &probe)
                .count();
            if hits != 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_partial_maps;
    use crate::pretorsion::{canonical_ses, is_trivial_morphism, torsion_free_part, torsion_part};

    fn cycle_then_step() -> FinPreorder {
        FinPreorder::from_generators(3, &[(0, 1), (1, 0), (1, 2)]).unwrap()
    }

    #[test]
    fn partial_composition_is_unital_and_tracks_domains() {
        let chain = FinPreorder::chain(2);
        let cop = FinPreorder::coproduct(&chain, &FinPreorder::discrete(1));
        let p = PartialMap::from_monotone(
            &MonotoneMap::new(chain.clone(), cop.object.clone(), vec![0, 1]).unwrap(),
        );

        let id_src = PartialMap::identity(&chain);
        let id_tgt = PartialMap::identity(&cop.object);
        assert_eq!(p.compose(&id_src).unwrap(), p);
        assert_eq!(id_tgt.compose(&p).unwrap(), p);

        // A map defined only on the isolated point composes to nothing.
        let q = PartialMap::new(cop.object.clone(), chain.clone(), &[2], vec![0]).unwrap();
        let qp = q.compose(&p).unwrap();
        assert!(qp.members().is_empty());

        // Empty domain behaves like an absorbing element.
        let none = PartialMap::empty(cop.object.clone(), chain.clone());
        assert!(none.compose(&p).unwrap().members().is_empty());
    }

    #[test]
    fn normalize_drops_constant_components() {
        // Identity on a discrete object: everything is constant.
        let d = FinPreorder::discrete(2);
        assert!(PartialMap::identity(&d).normalize().is_zero());

        // Identity on a chain keeps its single component.
        let chain = FinPreorder::chain(2);
        let n = PartialMap::identity(&chain).normalize();
        assert_eq!(n.kept(), &[0, 1]);
        assert_eq!(n.values(), &[0, 1]);

        // On chain ∐ point the isolated point is dropped.
        let cop = FinPreorder::coproduct(&chain, &FinPreorder::discrete(1)).object;
        let n = PartialMap::identity(&cop).normalize();
        assert_eq!(n.kept(), &[0, 1]);

        // Idempotent.
        assert_eq!(n.as_partial().normalize(), n);
    }

    #[test]
    fn zero_iff_trivial_examples() {
        let chain = FinPreorder::chain(2);
        // Full-domain trivial map vs empty map: congruent.
        let trivial = PartialMap::from_monotone(
            &MonotoneMap::constant(chain.clone(), chain.clone(), 0).unwrap(),
        );
        let none = PartialMap::empty(chain.clone(), chain.clone());
        assert!(trivial.equivalent(&none).unwrap());
        assert!(find_congruence_diagram(&trivial, &none).is_some());

        let id = PartialMap::identity(&chain);
        assert!(!id.equivalent(&none).unwrap());
        assert!(find_congruence_diagram(&id, &none).is_none());
    }

    #[test]
    fn congruence_witness_examples() {
        let chain = FinPreorder::chain(2);
        let id = PartialMap::identity(&chain);
        let w = find_congruence_diagram(&id, &id).unwrap();
        assert_eq!(w.members, vec![0, 1]);

        let z1 = PartialMap::empty(chain.clone(), chain.clone());
        let w = find_congruence_diagram(&z1, &z1).unwrap();
        assert!(w.members.is_empty());

        // Two maps agreeing on one non-constant component, each trivial
        // elsewhere.
        let two = FinPreorder::coproduct(&chain, &chain).object;
        let p1 = PartialMap::new(two.clone(), chain.clone(), &[0, 1], vec![0, 1]).unwrap();
        let p2 =
            PartialMap::new(two.clone(), chain.clone(), &[0, 1, 2, 3], vec![0, 1, 1, 1]).unwrap();
        assert!(p1.equivalent(&p2).unwrap());
        let w = find_congruence_diagram(&p1, &p2).unwrap();
        assert_eq!(w.members, vec![0, 1]);
    }

    #[test]
    fn congruence_search_agrees_with_normal_forms_exhaustively() {
        for a in enumerate_preorders_up_to(2) {
            for b in enumerate_preorders_up_to(2) {
                let maps = enumerate_partial_maps(&a, &b);
                for p1 in &maps {
                    for p2 in &maps {
                        let nf = p1.equivalent(p2).unwrap();
                        let bf = find_congruence_diagram(p1, p2).is_some();
                        assert_eq!(nf, bf, "{p1:?} vs {p2:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_sends_trivial_to_zero() {
        let chain = FinPreorder::chain(2);
        let t = MonotoneMap::constant(chain.clone(), chain.clone(), 1).unwrap();
        assert!(is_trivial_morphism(&t));
        assert!(sigma(&t).is_zero());

        let id = MonotoneMap::identity(&chain);
        assert!(!sigma(&id).is_zero());
        assert_eq!(sigma(&id), StableMorphism::identity(&chain));

        let a = cycle_then_step();
        let pi = torsion_free_part(&a).projection;
        let s = sigma(&pi);
        assert_eq!(s.kept(), &[0, 1, 2]);
        assert_eq!(s.values(), pi.values());
    }

    #[test]
    fn sigma_is_functorial() {
        let a = cycle_then_step();
        let pi = torsion_free_part(&a).projection;
        let incl = torsion_part(&a).inclusion;
        let both = pi.compose(&incl).unwrap();
        assert_eq!(
            sigma(&both),
            sigma(&pi).compose(&sigma(&incl)).unwrap()
        );
        assert!(sigma(&both).is_zero());
    }

    #[test]
    fn zero_absorbs_composition() {
        let a = FinPreorder::chain(2);
        let b = FinPreorder::chain(3);
        let z = StableMorphism::zero(a.clone(), b.clone());
        let m = StableMorphism::identity(&b);
        assert!(m.compose(&z).unwrap().is_zero());
        let z2 = StableMorphism::zero(b.clone(), a.clone());
        assert!(z2.compose(&m).unwrap().is_zero());
    }

    #[test]
    fn coproduct_of_stable_morphisms_is_blockwise() {
        let chain = FinPreorder::chain(2);
        let z = StableMorphism::zero(chain.clone(), chain.clone());
        assert!(StableMorphism::coproduct(&z, &z).is_zero());

        let f = MonotoneMap::identity(&chain);
        let g = MonotoneMap::new(chain.clone(), FinPreorder::chain(3), vec![0, 2]).unwrap();
        let blockwise = StableMorphism::coproduct(&sigma(&f), &sigma(&g));
        // Σ(f) ∐ Σ(g) = Σ(f ∐ g).
        let mut joint = f.values().to_vec();
        joint.extend(g.values().iter().map(|&v| v + 2));
        let src = FinPreorder::coproduct(&chain, &chain).object;
        let tgt = FinPreorder::coproduct(&chain, &FinPreorder::chain(3)).object;
        let fg = MonotoneMap::new(src, tgt, joint).unwrap();
        assert_eq!(blockwise, sigma(&fg));
    }

    #[test]
    fn kernel_of_condensation_is_torsion_part() {
        let a = cycle_then_step();
        let m = sigma(&torsion_free_part(&a).projection);
        let k = m.kernel();
        assert_eq!(k.object, torsion_part(&a).object);
        assert_eq!(k.morphism, sigma(&torsion_part(&a).inclusion));
        assert!(m.compose(&k.morphism).unwrap().is_zero());
    }

    #[test]
    fn kernel_of_zero_is_identity() {
        let a = FinPreorder::full(2);
        let z = StableMorphism::zero(a.clone(), FinPreorder::chain(2));
        let k = z.kernel();
        assert_eq!(k.object, a);
        assert_eq!(k.morphism, StableMorphism::identity(&a));
    }

    #[test]
    fn kernel_of_chain_identity_is_zero_morphism() {
        let chain = FinPreorder::chain(2);
        let m = StableMorphism::identity(&chain);
        let k = m.kernel();
        assert_eq!(k.object, FinPreorder::discrete(2));
        assert!(k.morphism.is_zero());
    }

    #[test]
    fn cokernel_of_torsion_inclusion_is_condensation() {
        let a = cycle_then_step();
        let m = sigma(&torsion_part(&a).inclusion);
        let q = m.cokernel();
        let free = torsion_free_part(&a);
        assert_eq!(q.object, free.object);
        assert_eq!(q.projection, free.projection);
        assert!(q.morphism.compose(&m).unwrap().is_zero());
    }

    #[test]
    fn cokernel_of_identity_collapses_components() {
        let chain = FinPreorder::chain(2);
        let q = StableMorphism::identity(&chain).cokernel();
        assert_eq!(q.object.size(), 1);
        assert!(q.morphism.is_zero());
    }

    #[test]
    fn cokernel_of_zero_is_identity() {
        let b = FinPreorder::chain(2);
        let z = StableMorphism::zero(FinPreorder::full(2), b.clone());
        let q = z.cokernel();
        assert_eq!(q.object, b);
        assert_eq!(q.morphism, StableMorphism::identity(&b));
    }

    #[test]
    fn preuniversal_split_examples() {
        let chain = FinPreorder::chain(2);
        let pt = FinPreorder::discrete(1);
        let cop = FinPreorder::coproduct(&chain, &pt);

        // Σ of the first injection keeps everything in the first block.
        let m = sigma(&cop.left);
        let split = preuniversal_decomposition(&m, &chain, &pt).unwrap();
        assert_eq!(split.first.members(), &[0, 1]);
        assert!(split.second.members().is_empty());

        // The zero morphism sends everything to the first block too.
        let z = StableMorphism::zero(chain.clone(), cop.object.clone());
        let split = preuniversal_decomposition(&z, &chain, &pt).unwrap();
        assert_eq!(split.first.members(), &[0, 1]);
        assert!(split.second.members().is_empty());

        // One chain component into the first summand, one point into the
        // second: the evident two-block split — but a point component is
        // dropped by normalization, so it lands in `first`.
        let src = FinPreorder::coproduct(&chain, &pt).object;
        let p = PartialMap::new(src.clone(), cop.object.clone(), &[0, 1, 2], vec![0, 1, 2])
            .unwrap()
            .normalize();
        let split = preuniversal_decomposition(&p, &chain, &pt).unwrap();
        assert_eq!(split.first.members(), &[0, 1, 2]);
        assert!(split.second.members().is_empty());

        // A genuinely two-sided example: two chains, one into each block.
        let two_chains = FinPreorder::coproduct(&chain, &chain).object;
        let tgt = FinPreorder::coproduct(&chain, &chain);
        let m = StableMorphism::new(
            two_chains.clone(),
            tgt.object.clone(),
            &[0, 1, 2, 3],
            vec![0, 1, 2, 3],
        )
        .unwrap();
        let split = preuniversal_decomposition(&m, &chain, &chain).unwrap();
        assert_eq!(split.first.members(), &[0, 1]);
        assert_eq!(split.second.members(), &[2, 3]);

        // Commutativity of the defining squares.
        let (s1, s2) = stable_injections(&chain, &chain);
        let left = m.compose(&sigma(&split.first.inclusion())).unwrap();
        let right = s1.compose(&split.into_first).unwrap();
        assert_eq!(left, right);
        let left = m.compose(&sigma(&split.second.inclusion())).unwrap();
        let right = s2.compose(&split.into_second).unwrap();
        assert_eq!(left, right);

        // Mismatched presentation is rejected.
        assert!(matches!(
            preuniversal_decomposition(&m, &chain, &pt),
            Err(Error::NotACoproduct)
        ));
    }

    #[test]
    fn sigma_image_of_canonical_sequence_is_short_exact() {
        for a in [cycle_then_step(), FinPreorder::full(2), FinPreorder::chain(3)] {
            let s = canonical_ses(&a);
            assert!(is_short_exact(&sigma(s.left()), &sigma(s.right()), 2));
        }
    }

    #[test]
    fn identity_pair_is_not_short_exact() {
        let a = FinPreorder::chain(2);
        let id = StableMorphism::identity(&a);
        assert!(!is_short_exact(&id, &id, 2));
    }

    #[test]
    fn kernel_then_cokernel_of_kernel_is_short_exact() {
        let a = cycle_then_step();
        let m = sigma(&torsion_free_part(&a).projection);
        let k = m.kernel();
        let q = k.morphism.cokernel();
        assert!(is_short_exact(&k.morphism, &q.morphism, 2));
    }

    #[test]
    fn inverse_finds_component_permutations() {
        let chain = FinPreorder::chain(2);
        let two = FinPreorder::coproduct(&chain, &chain).object;
        let swap = StableMorphism::new(two.clone(), two.clone(), &[0, 1, 2, 3], vec![2, 3, 0, 1])
            .unwrap();
        let inv = swap.inverse().unwrap();
        assert_eq!(inv.compose(&swap).unwrap(), StableMorphism::identity(&two));

        // Dropping a singleton block still gives an isomorphism.
        let with_pt = FinPreorder::coproduct(&chain, &FinPreorder::discrete(1));
        let incl = sigma(&with_pt.left);
        let inv = incl.inverse().unwrap();
        assert_eq!(
            incl.compose(&inv).unwrap(),
            StableMorphism::identity(&with_pt.object)
        );

        let collapse = sigma(
            &MonotoneMap::new(chain.clone(), FinPreorder::full(2), vec![0, 1]).unwrap(),
        );
        // Bijective on points but not an isomorphism: the inverse
        // assignment is not monotone.
        assert!(collapse.inverse().is_none());

        assert!(StableMorphism::zero(chain.clone(), chain.clone()).inverse().is_none());
    }
}
