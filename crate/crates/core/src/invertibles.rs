//! Inverses, cancellation, the three equivalence relations on elements,
//! and the category-of-invertibles quotient.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::kernel::{ElementRef, GenCatPresentation, KernelError, PresentationBuilder};
use crate::symbol::Symbol;
use crate::transform::{FunctorMap, TransformError, Variance};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InvertiblesError {
    #[error("element {0} has no class in the quotient carrier")]
    NoClass(ElementRef),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// Which equivalence relation to use in [`same_class`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    /// `a·θ = b` for an invertible θ (subobject).
    Monic,
    /// `θ·a = b` for an invertible θ (quotient).
    Epic,
    /// `θ1·a = b·θ2` for invertibles θ1, θ2.
    Iso,
}

/// Witness for a class membership: one or two invertible elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassWitness {
    One(ElementRef),
    Pair(ElementRef, ElementRef),
}

/// The two-sided inverse of `e`, if any. Unique when it exists; the
/// search order is deterministic so reports are reproducible.
pub fn inverse(p: &GenCatPresentation, e: &ElementRef) -> Result<Option<ElementRef>, KernelError> {
    p.validate(e)?;
    let e = p.canonicalize(e);
    let (s, t) = (p.source(&e)?, p.target(&e)?);
    let (id_s, id_t) = match (p.identity_of(&s), p.identity_of(&t)) {
        (Ok(a), Ok(b)) => (a, b),
        // Identities beyond the bound cannot witness invertibility.
        _ => return Ok(None),
    };
    for b in p.elements() {
        let eb = match p.compose(&e, &b) {
            Ok(v) => v,
            Err(_) => continue,
        };
        if eb.as_ref() != Some(&id_t) {
            continue;
        }
        let be = match p.compose(&b, &e) {
            Ok(v) => v,
            Err(_) => continue,
        };
        if be.as_ref() == Some(&id_s) {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// All invertible elements of the enumerated fragment, in order.
pub fn invertible_elements(p: &GenCatPresentation) -> Vec<ElementRef> {
    p.elements()
        .into_iter()
        .filter(|e| matches!(inverse(p, e), Ok(Some(_))))
        .collect()
}

/// `a ≅ b`: some invertible element runs from `a` to `b`.
pub fn isomorphic(
    p: &GenCatPresentation,
    a: &ElementRef,
    b: &ElementRef,
) -> Result<bool, KernelError> {
    let a = p.canonicalize(a);
    let b = p.canonicalize(b);
    for theta in invertible_elements(p) {
        if p.source(&theta)? == a && p.target(&theta)? == b {
            return Ok(true);
        }
    }
    Ok(a == b)
}

/// Membership of `a` and `b` in the same monic, epic, or iso class, with
/// the witnessing invertible(s).
pub fn same_class(
    p: &GenCatPresentation,
    a: &ElementRef,
    b: &ElementRef,
    kind: ClassKind,
) -> Result<Option<ClassWitness>, KernelError> {
    p.validate(a)?;
    p.validate(b)?;
    let a = p.canonicalize(a);
    let b = p.canonicalize(b);
    let invs = invertible_elements(p);
    match kind {
        ClassKind::Monic => {
            for theta in &invs {
                if let Ok(Some(v)) = p.compose(&a, theta) {
                    if v == b {
                        return Ok(Some(ClassWitness::One(theta.clone())));
                    }
                }
            }
            Ok(None)
        }
        ClassKind::Epic => {
            for theta in &invs {
                if let Ok(Some(v)) = p.compose(theta, &a) {
                    if v == b {
                        return Ok(Some(ClassWitness::One(theta.clone())));
                    }
                }
            }
            Ok(None)
        }
        ClassKind::Iso => {
            for t1 in &invs {
                let Ok(Some(l)) = p.compose(t1, &a) else {
                    continue;
                };
                for t2 in &invs {
                    if let Ok(Some(r)) = p.compose(&b, t2) {
                        if l == r {
                            return Ok(Some(ClassWitness::Pair(t1.clone(), t2.clone())));
                        }
                    }
                }
            }
            Ok(None)
        }
    }
}

/// Monic/epic cancellation record for one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cancellation {
    pub is_monic: bool,
    pub is_epi: bool,
    /// Counterexample pair when not monic.
    pub monic_witness: Option<(ElementRef, ElementRef)>,
    /// Counterexample pair when not epi.
    pub epi_witness: Option<(ElementRef, ElementRef)>,
}

/// Exhaustive cancellation check over the enumerated fragment:
/// `m` is monic when `m·f = m·g` forces `f = g`, epi dually.
pub fn cancellation(p: &GenCatPresentation, e: &ElementRef) -> Result<Cancellation, KernelError> {
    p.validate(e)?;
    let e = p.canonicalize(e);
    let elements = p.elements();
    let mut monic_witness = None;
    let mut epi_witness = None;
    for f in &elements {
        for g in &elements {
            if f >= g {
                continue;
            }
            if monic_witness.is_none() {
                if let (Ok(Some(ef)), Ok(Some(eg))) = (p.compose(&e, f), p.compose(&e, g)) {
                    if ef == eg {
                        monic_witness = Some((f.clone(), g.clone()));
                    }
                }
            }
            if epi_witness.is_none() {
                if let (Ok(Some(fe)), Ok(Some(ge))) = (p.compose(f, &e), p.compose(g, &e)) {
                    if fe == ge {
                        epi_witness = Some((f.clone(), g.clone()));
                    }
                }
            }
        }
    }
    Ok(Cancellation {
        is_monic: monic_witness.is_none(),
        is_epi: epi_witness.is_none(),
        monic_witness,
        epi_witness,
    })
}

/// The category of invertibles: iso classes with composition through an
/// invertible witness, presented as a sharp one-category after identity
/// absorption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertiblesQuotient {
    pub quotient: GenCatPresentation,
    /// Class id (the quotient generator) per carrier element.
    pub classes: BTreeMap<ElementRef, Symbol>,
    /// Lexicographically least member per class id.
    pub section: BTreeMap<Symbol, ElementRef>,
}

impl InvertiblesQuotient {
    /// The class of an element computed through the stored carrier,
    /// falling back to an iso-class search against the section.
    pub fn class_of(
        &self,
        p: &GenCatPresentation,
        e: &ElementRef,
    ) -> Result<Symbol, InvertiblesError> {
        let e = p.canonicalize(e);
        if let Some(c) = self.classes.get(&e) {
            return Ok(c.clone());
        }
        for (class, rep) in &self.section {
            if same_class(p, &e, rep, ClassKind::Iso)?.is_some() {
                return Ok(class.clone());
            }
        }
        Err(InvertiblesError::NoClass(e))
    }
}

/// Carrier of the quotient: the generators plus the level-1 identities
/// required as boundary objects (identities over non-object boundaries).
/// Deeper towers only repeat these classes.
fn quotient_carrier(p: &GenCatPresentation) -> Vec<ElementRef> {
    let mut carrier: Vec<ElementRef> = Vec::new();
    for g in p.generators() {
        carrier.push(ElementRef::base(g.as_str()));
    }
    let mut boundary_ids = Vec::new();
    for g in p.generators() {
        let e = ElementRef::base(g.as_str());
        for side in [crate::kernel::Side::Source, crate::kernel::Side::Target] {
            if let Ok(b) = p.boundary(&e, side) {
                if !p.is_object(&b) {
                    if let Ok(id) = p.identity_of(&b) {
                        boundary_ids.push(id);
                    }
                }
            }
        }
    }
    for id in boundary_ids {
        if !carrier.contains(&id) {
            carrier.push(id);
        }
    }
    carrier.sort();
    carrier.dedup();
    carrier
}

/// Builds the [`InvertiblesQuotient`] of a presentation.
pub fn category_of_invertibles(
    p: &GenCatPresentation,
) -> Result<InvertiblesQuotient, InvertiblesError> {
    let carrier = quotient_carrier(p);

    // Partition the carrier into iso classes; representatives are the
    // least members.
    let mut reps: Vec<ElementRef> = Vec::new();
    let mut classes: BTreeMap<ElementRef, Symbol> = BTreeMap::new();
    let class_name = |rep: &ElementRef| Symbol::new(format!("~{rep}"));
    for e in &carrier {
        let mut assigned = None;
        for rep in &reps {
            if same_class(p, e, rep, ClassKind::Iso)?.is_some() {
                assigned = Some(class_name(rep));
                break;
            }
        }
        let name = match assigned {
            Some(n) => n,
            None => {
                reps.push(e.clone());
                class_name(e)
            }
        };
        classes.insert(e.clone(), name);
    }
    let mut section: BTreeMap<Symbol, ElementRef> = BTreeMap::new();
    for rep in &reps {
        section.insert(class_name(rep), rep.clone());
    }

    // Class of the identity over an element, used for boundaries.
    let id_class = |e: &ElementRef| -> Result<Symbol, InvertiblesError> {
        let id = p.identity_of(e)?;
        classes
            .get(&id)
            .cloned()
            .ok_or(InvertiblesError::NoClass(id))
    };

    // Object classes are the classes of invertibles.
    let mut is_object_class: BTreeMap<Symbol, bool> = BTreeMap::new();
    for rep in &reps {
        let invertible = inverse(p, rep)?.is_some();
        is_object_class.insert(class_name(rep), invertible);
    }

    let mut builder = PresentationBuilder::new(Symbol::new(format!("{}~", p.name())))
        .identity_bound(p.identity_bound());
    for rep in &reps {
        let name = class_name(rep);
        if is_object_class[&name] {
            builder = builder.object(name.as_str());
        } else {
            let s = id_class(&p.source(rep)?)?;
            let t = id_class(&p.target(rep)?)?;
            builder = builder.arrow(name.as_str(), s.as_str(), t.as_str());
        }
    }

    // Composition of arrow classes through an invertible witness:
    // defined when some invertible θ links source(a) up to target(b),
    // the value being the class of a·θ·b.
    let invs = invertible_elements(p);
    for a in &reps {
        let na = class_name(a);
        if is_object_class[&na] {
            continue;
        }
        for b in &reps {
            let nb = class_name(b);
            if is_object_class[&nb] {
                continue;
            }
            let mut value = None;
            for theta in &invs {
                let Ok(Some(at)) = p.compose(a, theta) else {
                    continue;
                };
                if let Ok(Some(atb)) = p.compose(&at, b) {
                    value = Some(atb);
                    break;
                }
            }
            if let Some(v) = value {
                let class = classes
                    .get(&v)
                    .cloned()
                    .map(Ok)
                    .unwrap_or_else(|| -> Result<Symbol, InvertiblesError> {
                        // The composite may land outside the carrier
                        // order; resolve by iso search.
                        for rep in &reps {
                            if same_class(p, &v, rep, ClassKind::Iso)?.is_some() {
                                return Ok(class_name(rep));
                            }
                        }
                        Err(InvertiblesError::NoClass(v.clone()))
                    })?;
                builder = builder.comp(na.as_str(), nb.as_str(), class.as_str());
            }
        }
    }

    let quotient = builder.build()?;
    Ok(InvertiblesQuotient {
        quotient,
        classes,
        section,
    })
}

/// Lifts a functor to the categories of invertibles:
/// `F~(class(a)) = class(F(a))`.
pub fn lift_functor(
    f: &FunctorMap,
    qc: &InvertiblesQuotient,
    qd: &InvertiblesQuotient,
    cod: &GenCatPresentation,
) -> Result<FunctorMap, InvertiblesError> {
    let mut lifted = FunctorMap::new(
        Symbol::new(format!("{}~", f.name)),
        qc.quotient.name().clone(),
        qd.quotient.name().clone(),
        Variance::Covariant,
    );
    for class in qc.quotient.generators().cloned().collect::<Vec<_>>() {
        let rep = qc
            .section
            .get(&class)
            .ok_or_else(|| InvertiblesError::NoClass(ElementRef::base(class.as_str())))?;
        let image = f.apply(cod, rep)?;
        let image_class = qd.class_of(cod, &image)?;
        lifted.insert(class, ElementRef::base(image_class.as_str()));
    }
    Ok(lifted)
}

/// Essential injectivity and surjectivity of a functor, computed both
/// directly from the definitions and through the lifted functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialProperties {
    pub essentially_injective: bool,
    pub essentially_surjective: bool,
}

pub fn essential_properties(
    f: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
) -> Result<EssentialProperties, InvertiblesError> {
    let qc = category_of_invertibles(dom)?;
    let qd = category_of_invertibles(cod)?;
    let lifted = lift_functor(f, &qc, &qd, cod)?;

    // Injectivity/surjectivity of the lifted map on classes.
    let mut images = Vec::new();
    for class in qc.quotient.generators() {
        if let Some(v) = lifted.get(class) {
            images.push(v.generator.clone());
        }
    }
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let lift_injective = sorted.len() == images.len();
    let lift_surjective = qd
        .quotient
        .generators()
        .all(|c| sorted.binary_search(c).is_ok());

    // Direct route, cross-checked by the property suites: F(a) = F(b)
    // forces a ~ b; every codomain element meets the image up to iso.
    let mut direct_injective = true;
    let elems: Vec<ElementRef> = dom.elements();
    'outer: for a in &elems {
        for b in &elems {
            if a >= b {
                continue;
            }
            let (Ok(fa), Ok(fb)) = (f.apply(cod, a), f.apply(cod, b)) else {
                continue;
            };
            if fa == fb && same_class(dom, a, b, ClassKind::Iso)?.is_none() {
                direct_injective = false;
                break 'outer;
            }
        }
    }
    let mut direct_surjective = true;
    'surj: for alpha in cod.elements() {
        for a in &elems {
            if let Ok(fa) = f.apply(cod, a) {
                if same_class(cod, &fa, &alpha, ClassKind::Iso)?.is_some() {
                    continue 'surj;
                }
            }
        }
        direct_surjective = false;
        break;
    }

    Ok(EssentialProperties {
        essentially_injective: lift_injective && direct_injective,
        essentially_surjective: lift_surjective && direct_surjective,
    })
}

/// The two computation routes for [`essential_properties`], exposed for
/// the agreement property tests.
pub fn essential_properties_routes(
    f: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
) -> Result<(EssentialProperties, EssentialProperties), InvertiblesError> {
    let qc = category_of_invertibles(dom)?;
    let qd = category_of_invertibles(cod)?;
    let lifted = lift_functor(f, &qc, &qd, cod)?;
    let mut images = Vec::new();
    for class in qc.quotient.generators() {
        if let Some(v) = lifted.get(class) {
            images.push(v.generator.clone());
        }
    }
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let via_lift = EssentialProperties {
        essentially_injective: sorted.len() == images.len(),
        essentially_surjective: qd
            .quotient
            .generators()
            .all(|c| sorted.binary_search(c).is_ok()),
    };

    let elems: Vec<ElementRef> = dom.elements();
    let mut direct_injective = true;
    'outer: for a in &elems {
        for b in &elems {
            if a >= b {
                continue;
            }
            let (Ok(fa), Ok(fb)) = (f.apply(cod, a), f.apply(cod, b)) else {
                continue;
            };
            if fa == fb && same_class(dom, a, b, ClassKind::Iso)?.is_none() {
                direct_injective = false;
                break 'outer;
            }
        }
    }
    let mut direct_surjective = true;
    'surj: for alpha in cod.elements() {
        for a in &elems {
            if let Ok(fa) = f.apply(cod, a) {
                if same_class(cod, &fa, &alpha, ClassKind::Iso)?.is_some() {
                    continue 'surj;
                }
            }
        }
        direct_surjective = false;
        break;
    }
    let direct = EssentialProperties {
        essentially_injective: direct_injective,
        essentially_surjective: direct_surjective,
    };
    Ok((via_lift, direct))
}
