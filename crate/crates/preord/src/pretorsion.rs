//! The torsion theory structure on finite preorders.
//!
//! Equivalence relations play the role of torsion objects and partial
//! orders the role of torsion-free objects; their intersection is the
//! class of discrete preorders, the trivial objects. A morphism is
//! *trivial* if it factors through a discrete preorder, and kernels,
//! cokernels, and exactness are all taken modulo the ideal of trivial
//! morphisms (written `Z-` below). Every preorder sits in a canonical
//! short Z-exact sequence
//!
//! ```text
//! (A, ρ ∩ ρ°)  →  (A, ρ)  →  (A/∼, π(ρ))
//! ```
//!
//! whose left leg is an equivalence relation and whose right leg is the
//! partial order induced on the quotient by the classes of `ρ ∩ ρ°`.

use crate::enumerate::{enumerate_monotone_maps, enumerate_preorders_up_to};
use crate::error::Error;
use crate::preorder::{FinPreorder, MonotoneMap, Relation};

/// Whether `f` factors through a discrete preorder.
///
/// Concretely: every related pair of the domain maps to a single point,
/// i.e. `f` is constant on each comparability component.
pub fn is_trivial_morphism(f: &MonotoneMap) -> bool {
    f.dom()
        .rel()
        .pairs()
        .into_iter()
        .all(|(i, j)| f.apply(i) == f.apply(j))
}

/// The torsion part of a preorder: same carrier, relation `ρ ∩ ρ°`,
/// with the identity-on-points inclusion into the original.
#[derive(Debug, Clone)]
pub struct TorsionPart {
    pub object: FinPreorder,
    pub inclusion: MonotoneMap,
}

pub fn torsion_part(a: &FinPreorder) -> TorsionPart {
    let object = a.meet(&a.opposite()).expect("same carrier");
    debug_assert!(object.is_equivalence());
    let inclusion = MonotoneMap::new(object.clone(), a.clone(), (0..a.size()).collect())
        .expect("the symmetric core embeds in the original relation");
    TorsionPart { object, inclusion }
}

/// The torsion-free part: the quotient of the carrier by the classes of
/// `ρ ∩ ρ°`, carrying the induced partial order, with its projection.
#[derive(Debug, Clone)]
pub struct TorsionFreePart {
    pub object: FinPreorder,
    pub projection: MonotoneMap,
}

pub fn torsion_free_part(a: &FinPreorder) -> TorsionFreePart {
    let symmetric = a.meet(&a.opposite()).expect("same carrier");
    let (class_of, num_classes) = classes_by_min_member(&symmetric);
    let mut pairs = Vec::new();
    for (i, j) in a.rel().pairs() {
        pairs.push((class_of[i], class_of[j]));
    }
    let rel = Relation::new(num_classes, &pairs).expect("class indices are in range");
    // The direct image of a closed relation along the class projection
    // is already reflexive and transitive.
    let object = FinPreorder::from_relation(rel).expect("quotient of a preorder is a preorder");
    debug_assert!(object.is_partial_order());
    let projection = MonotoneMap::new(a.clone(), object.clone(), class_of)
        .expect("the class projection is monotone");
    TorsionFreePart { object, projection }
}

/// Classes of an equivalence relation, indexed by least member.
fn classes_by_min_member(eq: &FinPreorder) -> (Vec<usize>, usize) {
    let mut class_of = vec![usize::MAX; eq.size()];
    let mut next = 0;
    for i in 0..eq.size() {
        if class_of[i] == usize::MAX {
            for j in i..eq.size() {
                if eq.le(i, j) {
                    class_of[j] = next;
                }
            }
            next += 1;
        }
    }
    (class_of, next)
}

/// A composable pair whose composite is trivial; [`is_z_exact`] decides
/// whether it actually satisfies both universal properties.
#[derive(Debug, Clone)]
pub struct ZExactSequence {
    left: MonotoneMap,
    right: MonotoneMap,
}

impl ZExactSequence {
    pub fn new(left: MonotoneMap, right: MonotoneMap) -> Result<Self, Error> {
        if left.cod() != right.dom() {
            return Err(Error::BoundaryMismatch);
        }
        let composite = right.compose(&left)?;
        if !is_trivial_morphism(&composite) {
            return Err(Error::BoundaryMismatch);
        }
        Ok(ZExactSequence { left, right })
    }

    pub fn left(&self) -> &MonotoneMap {
        &self.left
    }

    pub fn right(&self) -> &MonotoneMap {
        &self.right
    }
}

/// The canonical sequence `torsion part → A → torsion-free part`.
pub fn canonical_ses(a: &FinPreorder) -> ZExactSequence {
    let t = torsion_part(a);
    let f = torsion_free_part(a);
    ZExactSequence::new(t.inclusion, f.projection)
        .expect("projection collapses the symmetric core")
}

/// A kernel modulo trivial morphisms: same carrier as the domain of
/// `f`, relation restricted to the pairs `f` collapses, identity
/// inclusion.
#[derive(Debug, Clone)]
pub struct ZKernel {
    pub object: FinPreorder,
    pub inclusion: MonotoneMap,
}

pub fn z_kernel(f: &MonotoneMap) -> ZKernel {
    let dom = f.dom();
    let mut pairs = Vec::new();
    for (i, j) in dom.rel().pairs() {
        if f.apply(i) == f.apply(j) {
            pairs.push((i, j));
        }
    }
    let rel = Relation::new(dom.size(), &pairs).expect("indices come from the domain");
    let object =
        FinPreorder::from_relation(rel).expect("restricting to collapsed pairs keeps closure");
    let inclusion = MonotoneMap::new(object.clone(), dom.clone(), (0..dom.size()).collect())
        .expect("restricted relation embeds in the domain");
    ZKernel { object, inclusion }
}

/// A cokernel modulo trivial morphisms: the codomain quotiented by the
/// equivalence generated by the image of the domain relation, carrying
/// the transitive closure of the image relation.
#[derive(Debug, Clone)]
pub struct ZCokernel {
    pub object: FinPreorder,
    pub projection: MonotoneMap,
}

pub fn z_cokernel(f: &MonotoneMap) -> ZCokernel {
    let cod = f.cod();
    let mut gens = Vec::new();
    for (i, j) in f.dom().rel().pairs() {
        gens.push((f.apply(i), f.apply(j)));
        gens.push((f.apply(j), f.apply(i)));
    }
    let eq_rel = Relation::new(cod.size(), &gens)
        .expect("values are in the codomain")
        .reflexive_closure()
        .transitive_closure();
    let eq = FinPreorder::from_relation(eq_rel).expect("generated equivalence is a preorder");
    let (class_of, num_classes) = classes_by_min_member(&eq);
    let mut pairs = Vec::new();
    for (i, j) in cod.rel().pairs() {
        pairs.push((class_of[i], class_of[j]));
    }
    let rel = Relation::new(num_classes, &pairs)
        .expect("class indices are in range")
        .transitive_closure();
    let object = FinPreorder::from_relation(rel).expect("closure of a reflexive image");
    let projection = MonotoneMap::new(cod.clone(), object.clone(), class_of)
        .expect("class projection is monotone");
    ZCokernel { object, projection }
}

/// Bounded verification that `left` is a kernel of `right` and `right`
/// a cokernel of `left`, both modulo trivial morphisms.
///
/// Both universal properties quantify over all preorders; the check
/// quantifies over all test objects of size at most `test_bound`, which
/// is sound for refutation.
pub fn is_z_exact(s: &ZExactSequence, test_bound: usize) -> bool {
    let composite = s.right.compose(&s.left).expect("boundaries checked at construction");
    if !is_trivial_morphism(&composite) {
        return false;
    }
    let tests = enumerate_preorders_up_to(test_bound);
    for y in &tests {
        // Kernel property of `left` for `right`: every probe into the
        // middle killed by `right` factors uniquely through `left`.
        for lambda in enumerate_monotone_maps(y, s.left.cod()) {
            if !is_trivial_morphism(&s.right.compose(&lambda).unwrap()) {
                continue;
            }
            let mut factorizations = 0;
            for mu in enumerate_monotone_maps(y, s.left.dom()) {
                if s.left.compose(&mu).unwrap() == lambda {
                    factorizations += 1;
                }
            }
            if factorizations != 1 {
                return false;
            }
        }
        // Cokernel property of `right` for `left`, dually.
        for lambda in enumerate_monotone_maps(s.right.dom(), y) {
            if !is_trivial_morphism(&lambda.compose(&s.left).unwrap()) {
                continue;
            }
            let mut factorizations = 0;
            for mu in enumerate_monotone_maps(s.right.cod(), y) {
                if mu.compose(&s.right).unwrap() == lambda {
                    factorizations += 1;
                }
            }
            if factorizations != 1 {
                return false;
            }
        }
    }
    true
}
