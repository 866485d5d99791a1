//! Functor presentations and checking, morphisms of functors,
//! naturality, and the two 2-cell compositions.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::invertibles;
use crate::kernel::{ElementRef, Finding, GenCatPresentation, KernelError, Report};
use crate::symbol::Symbol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
    /// Boundary preservation is exempted at objects and identities must
    /// map to identities and nothing else; used for diagram bases, where
    /// it admits products of arbitrary elements.
    UpToObjects,
}

impl Variance {
    /// Variance of a composite `outer ∘ inner`.
    pub fn compose(outer: Variance, inner: Variance) -> Result<Variance, TransformError> {
        use Variance::*;
        match (outer, inner) {
            (Covariant, Covariant) | (Contravariant, Contravariant) => Ok(Covariant),
            (Covariant, Contravariant) | (Contravariant, Covariant) => Ok(Contravariant),
            (Covariant, UpToObjects) => Ok(UpToObjects),
            _ => Err(TransformError::VarianceMismatch),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("functor does not map generator `{0}`")]
    UnmappedGenerator(Symbol),
    #[error("image of {0} exceeds the identity bound of the codomain")]
    ImageBeyondBound(ElementRef),
    #[error("variances do not compose")]
    VarianceMismatch,
    #[error("functor boundary mismatch: expected codomain `{expected}`, found `{found}`")]
    BoundaryMismatch { expected: Symbol, found: Symbol },
    #[error("transformations are not composable: {0}")]
    NotComposable(String),
    #[error("missing transformation component at {0}")]
    MissingComponent(ElementRef),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// A finite presentation of a functor: a map on generators, extended to
/// identity towers by `F(1_a) = 1_{F(a)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorMap {
    pub name: Symbol,
    pub dom: Symbol,
    pub cod: Symbol,
    pub variance: Variance,
    /// Enforces the globular side condition `source(F(a)) = F(a)
    /// implies source(a) = a` (no collapsing of higher cells onto
    /// 0-cells) when mapping cellular categories.
    pub cellular_morphism_flag: bool,
    map: BTreeMap<Symbol, ElementRef>,
}

impl FunctorMap {
    pub fn new(
        name: impl Into<Symbol>,
        dom: impl Into<Symbol>,
        cod: impl Into<Symbol>,
        variance: Variance,
    ) -> Self {
        FunctorMap {
            name: name.into(),
            dom: dom.into(),
            cod: cod.into(),
            variance,
            cellular_morphism_flag: false,
            map: BTreeMap::new(),
        }
    }

    /// The identity functor on a presentation.
    pub fn identity(name: impl Into<Symbol>, p: &GenCatPresentation) -> Self {
        let mut f = FunctorMap::new(name, p.name().clone(), p.name().clone(), Variance::Covariant);
        for g in p.generators() {
            f.insert(g.clone(), ElementRef::base(g.as_str()));
        }
        f
    }

    pub fn insert(&mut self, generator: Symbol, image: ElementRef) {
        self.map.insert(generator, image);
    }

    pub fn get(&self, generator: &Symbol) -> Option<&ElementRef> {
        self.map.get(generator)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Symbol, &ElementRef)> {
        self.map.iter()
    }

    /// Applies the functor to an element, lifting the generator image
    /// through the identity tower.
    pub fn apply(
        &self,
        cod: &GenCatPresentation,
        e: &ElementRef,
    ) -> Result<ElementRef, TransformError> {
        let image = self
            .map
            .get(&e.generator)
            .ok_or_else(|| TransformError::UnmappedGenerator(e.generator.clone()))?;
        let lifted = cod.element(image.generator.clone(), image.level + e.level);
        if lifted.level > cod.identity_bound() + 1 {
            return Err(TransformError::ImageBeyondBound(e.clone()));
        }
        Ok(lifted)
    }
}

/// Verifies functoriality exhaustively over the enumerated fragment of
/// the domain: order (monotone or antitone), boundary preservation (or
/// swap, or the object exemption), composition, and identity clauses.
pub fn check_functor(
    f: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
) -> Report {
    let mut report = Report::new(f.name.clone());
    for g in dom.generators() {
        if f.get(g).is_none() {
            report.push(Finding::violation(
                "functor-totality",
                vec![ElementRef::base(g.as_str())],
                format!("generator {g} has no image"),
            ));
        } else if let Some(image) = f.get(g) {
            if !cod.has_generator(&image.generator) {
                report.push(Finding::violation(
                    "functor-image",
                    vec![ElementRef::base(g.as_str())],
                    format!("image {image} names no generator of {}", cod.name()),
                ));
            }
        }
    }
    if !report.passed() {
        report.normalize();
        return report;
    }

    let elements = dom.elements();
    let apply = |e: &ElementRef| f.apply(cod, e);

    // Order clause.
    if f.variance != Variance::UpToObjects {
        for a in &elements {
            for b in &elements {
                if !dom.leq(a, b) {
                    continue;
                }
                let (Ok(fa), Ok(fb)) = (apply(a), apply(b)) else {
                    continue;
                };
                let ok = match f.variance {
                    Variance::Covariant => cod.leq(&fa, &fb),
                    Variance::Contravariant => cod.leq(&fb, &fa),
                    Variance::UpToObjects => true,
                };
                if !ok {
                    report.push(Finding::violation(
                        "functor-order",
                        vec![a.clone(), b.clone()],
                        format!("{a} ⊴ {b} is not carried to the image order"),
                    ));
                }
            }
        }
    }

    // Boundary clauses.
    for a in &elements {
        let Ok(fa) = apply(a) else {
            report.push(Finding::violation(
                "functor-image",
                vec![a.clone()],
                format!("image of {a} is not representable in the codomain"),
            ));
            continue;
        };
        match f.variance {
            Variance::Covariant | Variance::Contravariant => {
                let (Ok(sa), Ok(ta)) = (dom.source(a), dom.target(a)) else {
                    continue;
                };
                let (Ok(fsa), Ok(fta)) = (apply(&sa), apply(&ta)) else {
                    continue;
                };
                let (Ok(sfa), Ok(tfa)) = (cod.source(&fa), cod.target(&fa)) else {
                    continue;
                };
                let (want_s, want_t) = match f.variance {
                    Variance::Covariant => (fsa, fta),
                    _ => (fta, fsa),
                };
                if sfa != want_s {
                    report.push(Finding::violation(
                        "functor-boundary",
                        vec![a.clone()],
                        format!("source(F({a})) = {sfa}, expected {want_s}"),
                    ));
                }
                if tfa != want_t {
                    report.push(Finding::violation(
                        "functor-boundary",
                        vec![a.clone()],
                        format!("target(F({a})) = {tfa}, expected {want_t}"),
                    ));
                }
            }
            Variance::UpToObjects => {
                // Objects are exempt: they may map to arbitrary
                // elements, which is what admits products of elements.
                if !dom.is_object(a) && dom.is_identity(a) != cod.is_identity(&fa) {
                    report.push(Finding::violation(
                        "functor-identity-reflection",
                        vec![a.clone()],
                        format!("{a} and F({a}) = {fa} disagree on being identities"),
                    ));
                }
                if !dom.is_object(a) {
                    let (Ok(sa), Ok(ta)) = (dom.source(a), dom.target(a)) else {
                        continue;
                    };
                    let (Ok(fsa), Ok(fta)) = (apply(&sa), apply(&ta)) else {
                        continue;
                    };
                    let (Ok(sfa), Ok(tfa)) = (cod.source(&fa), cod.target(&fa)) else {
                        continue;
                    };
                    if sfa != fsa {
                        report.push(Finding::violation(
                            "functor-boundary",
                            vec![a.clone()],
                            format!("source(F({a})) = {sfa}, expected {fsa}"),
                        ));
                    }
                    if tfa != fta {
                        report.push(Finding::violation(
                            "functor-boundary",
                            vec![a.clone()],
                            format!("target(F({a})) = {tfa}, expected {fta}"),
                        ));
                    }
                }
            }
        }
    }

    // Composition clause. Under the object exemption, unit composites
    // carry no constraint downstairs, so they are skipped there.
    for a in &elements {
        for b in &elements {
            if f.variance == Variance::UpToObjects
                && (dom.is_identity(a) || dom.is_identity(b))
            {
                continue;
            }
            let Ok(Some(ab)) = dom.compose(a, b) else {
                continue;
            };
            let (Ok(fa), Ok(fb), Ok(fab)) = (apply(a), apply(b), apply(&ab)) else {
                continue;
            };
            let image = match f.variance {
                Variance::Contravariant => cod.compose(&fb, &fa),
                _ => cod.compose(&fa, &fb),
            };
            match image {
                Ok(Some(v)) if v == fab => {}
                Ok(Some(v)) => {
                    report.push(Finding::violation(
                        "functor-composition",
                        vec![a.clone(), b.clone()],
                        format!("F({a}·{b}) = {fab} but the image composite is {v}"),
                    ));
                }
                Ok(None) => {
                    report.push(Finding::violation(
                        "functor-composition",
                        vec![a.clone(), b.clone()],
                        format!("image of the composite {a}·{b} is not composable"),
                    ));
                }
                Err(e) => {
                    report.push(Finding::incomplete(
                        "functor-composition-incomplete",
                        vec![a.clone(), b.clone()],
                        format!("image composite of ({a}, {b}) not evaluable: {e}"),
                    ));
                }
            }
        }
    }

    // Globular side condition, when requested.
    if f.cellular_morphism_flag {
        for a in &elements {
            let (Ok(fa), Ok(sa)) = (apply(a), dom.source(a)) else {
                continue;
            };
            let Ok(sfa) = cod.source(&fa) else { continue };
            if sfa == fa && sa != *a {
                report.push(Finding::violation(
                    "functor-cellular",
                    vec![a.clone()],
                    format!("F({a}) is boundary-fixed but {a} is not"),
                ));
            }
        }
    }

    report.normalize();
    report
}

/// The composite functor `outer ∘ inner`. `outer_cod` is the codomain of
/// `outer`, needed to lift generator images.
pub fn compose_functors(
    name: impl Into<Symbol>,
    outer: &FunctorMap,
    inner: &FunctorMap,
    outer_cod: &GenCatPresentation,
) -> Result<FunctorMap, TransformError> {
    if inner.cod != outer.dom {
        return Err(TransformError::BoundaryMismatch {
            expected: inner.cod.clone(),
            found: outer.dom.clone(),
        });
    }
    let variance = Variance::compose(outer.variance, inner.variance)?;
    let mut f = FunctorMap::new(name, inner.dom.clone(), outer.cod.clone(), variance);
    for (g, image) in inner.entries() {
        f.insert(g.clone(), outer.apply(outer_cod, image)?);
    }
    Ok(f)
}

/// A candidate (natural) transformation between two functors.
///
/// Stored in θ-form: one component per generator of the domain, the
/// component at `u` being an element of the codomain from `F(u)` toward
/// `G(u)`. Only components at boundary generators enter the defining
/// relation. A raw `(θ1, θ2)` pair may be attached instead for checking
/// non-natural morphisms of functors; raw pairs are read-only (no
/// compositions are offered for them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformation {
    pub name: Symbol,
    pub source_functor: Symbol,
    pub target_functor: Symbol,
    pub theta: BTreeMap<Symbol, ElementRef>,
    pub raw_pair: Option<RawPair>,
}

/// Component maps of a raw morphism of functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPair {
    pub theta1: BTreeMap<Symbol, ElementRef>,
    pub theta2: BTreeMap<Symbol, ElementRef>,
}

impl Transformation {
    pub fn new(
        name: impl Into<Symbol>,
        source_functor: impl Into<Symbol>,
        target_functor: impl Into<Symbol>,
    ) -> Self {
        Transformation {
            name: name.into(),
            source_functor: source_functor.into(),
            target_functor: target_functor.into(),
            theta: BTreeMap::new(),
            raw_pair: None,
        }
    }

    /// The identity transformation `1_F`: every component the identity
    /// on the image.
    pub fn identity_of_functor(
        name: impl Into<Symbol>,
        f: &FunctorMap,
        dom: &GenCatPresentation,
        cod: &GenCatPresentation,
    ) -> Result<Self, TransformError> {
        let mut t = Transformation::new(name, f.name.clone(), f.name.clone());
        for g in dom.generators() {
            let image = f.apply(cod, &ElementRef::base(g.as_str()))?;
            let id = cod.identity_of(&image)?;
            t.theta.insert(g.clone(), id);
        }
        Ok(t)
    }

    pub fn at(mut self, generator: impl Into<Symbol>, component: impl Into<ElementRef>) -> Self {
        self.theta.insert(generator.into(), component.into());
        self
    }

    /// Component at an element. Stored at generators; at towers the
    /// component only exists when the two functors agree there, where it
    /// is the identity on the common image.
    pub fn component(
        &self,
        e: &ElementRef,
        f: &FunctorMap,
        g: &FunctorMap,
        cod: &GenCatPresentation,
    ) -> Result<ElementRef, TransformError> {
        if e.level == 0 {
            return self
                .theta
                .get(&e.generator)
                .cloned()
                .ok_or_else(|| TransformError::MissingComponent(e.clone()));
        }
        let fe = f.apply(cod, e)?;
        let ge = g.apply(cod, e)?;
        if fe == ge {
            Ok(cod.identity_of(&fe)?)
        } else {
            Err(TransformError::MissingComponent(e.clone()))
        }
    }
}

/// Checks the defining relation of a morphism of functors at every
/// generator, plus the naturality constancy conditions when requested.
pub fn check_transformation(
    t: &Transformation,
    f: &FunctorMap,
    g: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
    require_natural: bool,
) -> Report {
    let mut report = Report::new(t.name.clone());
    if f.dom != g.dom || f.cod != g.cod {
        report.push(Finding::violation(
            "transformation-shape",
            vec![],
            "source and target functors do not share a domain and codomain",
        ));
        report.normalize();
        return report;
    }

    match &t.raw_pair {
        None => check_theta_form(t, f, g, dom, cod, &mut report),
        Some(raw) => check_raw_pair(raw, f, g, dom, cod, require_natural, &mut report),
    }

    report.normalize();
    report
}

/// θ-form relation: `θ(target(a)) · F(a) = G(a) · θ(source(a))`, all
/// composites defined, for every generator `a`. Naturality is built into
/// the θ-form (components depend only on the boundary element).
fn check_theta_form(
    t: &Transformation,
    f: &FunctorMap,
    g: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
    report: &mut Report,
) {
    for a in dom.generators() {
        let e = ElementRef::base(a.as_str());
        let (Ok(sa), Ok(ta)) = (dom.source(&e), dom.target(&e)) else {
            continue;
        };
        let (Ok(fa), Ok(ga)) = (f.apply(cod, &e), g.apply(cod, &e)) else {
            report.push(Finding::violation(
                "transformation-image",
                vec![e.clone()],
                format!("functor images of {a} are not representable"),
            ));
            continue;
        };
        let th_t = t.component(&ta, f, g, cod);
        let th_s = t.component(&sa, f, g, cod);
        let (Ok(th_t), Ok(th_s)) = (th_t, th_s) else {
            report.push(Finding::violation(
                "transformation-component",
                vec![e.clone()],
                format!("missing component at a boundary of {a}"),
            ));
            continue;
        };
        let lhs = cod.compose(&th_t, &fa);
        let rhs = cod.compose(&ga, &th_s);
        match (lhs, rhs) {
            (Ok(Some(l)), Ok(Some(r))) if l == r => {}
            (Ok(Some(l)), Ok(Some(r))) => report.push(Finding::violation(
                "transformation-relation",
                vec![e.clone(), th_t, th_s],
                format!("θ(target)·F({a}) = {l} but G({a})·θ(source) = {r}"),
            )),
            (l, r) => {
                let msg = match (&l, &r) {
                    (Ok(None), _) | (_, Ok(None)) => "a side of the relation is not composable",
                    _ => "a side of the relation is not evaluable",
                };
                report.push(Finding::violation(
                    "transformation-relation",
                    vec![e.clone(), th_t, th_s],
                    format!("{msg} at {a}"),
                ));
            }
        }
    }
}

/// Raw pair: the relation `θ1(a)·F(a) = G(a)·θ2(a)` with all composites
/// defined; under naturality additionally θ1 constant on common targets,
/// θ2 constant on common sources, and θ1 = θ2 at identities.
fn check_raw_pair(
    raw: &RawPair,
    f: &FunctorMap,
    g: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
    require_natural: bool,
    report: &mut Report,
) {
    let gens: Vec<Symbol> = dom.generators().cloned().collect();
    for a in &gens {
        let e = ElementRef::base(a.as_str());
        let (Some(t1), Some(t2)) = (raw.theta1.get(a), raw.theta2.get(a)) else {
            report.push(Finding::violation(
                "transformation-component",
                vec![e],
                format!("raw pair lacks a component at {a}"),
            ));
            continue;
        };
        let (Ok(fa), Ok(ga)) = (f.apply(cod, &e), g.apply(cod, &e)) else {
            continue;
        };
        match (cod.compose(t1, &fa), cod.compose(&ga, t2)) {
            (Ok(Some(l)), Ok(Some(r))) if l == r => {}
            (Ok(Some(l)), Ok(Some(r))) => report.push(Finding::violation(
                "transformation-relation",
                vec![e, t1.clone(), t2.clone()],
                format!("θ1({a})·F({a}) = {l} but G({a})·θ2({a}) = {r}"),
            )),
            _ => report.push(Finding::violation(
                "transformation-relation",
                vec![e, t1.clone(), t2.clone()],
                format!("the defining relation at {a} is not composable"),
            )),
        }
    }
    if require_natural {
        for a in &gens {
            for b in &gens {
                if a >= b {
                    continue;
                }
                let (ea, eb) = (ElementRef::base(a.as_str()), ElementRef::base(b.as_str()));
                let (Ok(ta), Ok(tb)) = (dom.target(&ea), dom.target(&eb)) else {
                    continue;
                };
                if ta == tb && raw.theta1.get(a) != raw.theta1.get(b) {
                    report.push(Finding::violation(
                        "transformation-naturality",
                        vec![ea.clone(), eb.clone()],
                        format!("θ1 differs on {a} and {b} though their targets agree"),
                    ));
                }
                let (Ok(sa), Ok(sb)) = (dom.source(&ea), dom.source(&eb)) else {
                    continue;
                };
                if sa == sb && raw.theta2.get(a) != raw.theta2.get(b) {
                    report.push(Finding::violation(
                        "transformation-naturality",
                        vec![ea, eb],
                        format!("θ2 differs on {a} and {b} though their sources agree"),
                    ));
                }
            }
        }
        for a in &gens {
            let e = ElementRef::base(a.as_str());
            if dom.is_identity(&e) && raw.theta1.get(a) != raw.theta2.get(a) {
                report.push(Finding::violation(
                    "transformation-naturality",
                    vec![e],
                    format!("θ1 and θ2 differ at the identity {a}"),
                ));
            }
        }
    }
}

/// Vertical composition `(β ⊙ α)(u) = β(u) · α(u)`.
pub fn vertical_compose(
    name: impl Into<Symbol>,
    beta: &Transformation,
    alpha: &Transformation,
    cod: &GenCatPresentation,
) -> Result<Transformation, TransformError> {
    if alpha.target_functor != beta.source_functor {
        return Err(TransformError::NotComposable(format!(
            "{} ends at {} but {} starts at {}",
            alpha.name, alpha.target_functor, beta.name, beta.source_functor
        )));
    }
    let mut out = Transformation::new(
        name,
        alpha.source_functor.clone(),
        beta.target_functor.clone(),
    );
    for (u, av) in &alpha.theta {
        let Some(bv) = beta.theta.get(u) else {
            continue;
        };
        match cod.compose(bv, av)? {
            Some(v) => {
                out.theta.insert(u.clone(), v);
            }
            None => {
                return Err(TransformError::NotComposable(format!(
                    "components at {u} do not compose"
                )))
            }
        }
    }
    Ok(out)
}

/// Star (horizontal) composition of `alpha: F ⟹ G` between functors
/// `C → D` with `beta: F' ⟹ G'` between functors `D → E`, producing a
/// transformation `F'∘F ⟹ G'∘G` with component
/// `β(G(X)) · F'(α(X))` at each generator `X` of `C`.
#[allow(clippy::too_many_arguments)]
pub fn star_compose(
    name: impl Into<Symbol>,
    beta: &Transformation,
    alpha: &Transformation,
    alpha_tgt: &FunctorMap,
    beta_src: &FunctorMap,
    beta_tgt: &FunctorMap,
    mid: &GenCatPresentation,
    cod: &GenCatPresentation,
) -> Result<Transformation, TransformError> {
    let mut out = Transformation::new(name, Symbol::default(), Symbol::default());
    for (u, a_u) in &alpha.theta {
        let gx = alpha_tgt.apply(mid, &ElementRef::base(u.as_str()))?;
        let b_gx = beta.component(&gx, beta_src, beta_tgt, cod)?;
        let f1_au = beta_src.apply(cod, a_u)?;
        match cod.compose(&b_gx, &f1_au)? {
            Some(v) => {
                out.theta.insert(u.clone(), v);
            }
            None => {
                return Err(TransformError::NotComposable(format!(
                    "star components at {u} do not compose"
                )))
            }
        }
    }
    Ok(out)
}

/// The other evaluation order of the star composite:
/// `G'(α(X)) · β(F(X))`. Equal to [`star_compose`] for natural inputs.
#[allow(clippy::too_many_arguments)]
pub fn star_compose_via_outer(
    name: impl Into<Symbol>,
    beta: &Transformation,
    alpha: &Transformation,
    alpha_src: &FunctorMap,
    beta_src: &FunctorMap,
    beta_tgt: &FunctorMap,
    mid: &GenCatPresentation,
    cod: &GenCatPresentation,
) -> Result<Transformation, TransformError> {
    let mut out = Transformation::new(name, Symbol::default(), Symbol::default());
    for (u, a_u) in &alpha.theta {
        let fx = alpha_src.apply(mid, &ElementRef::base(u.as_str()))?;
        let b_fx = beta.component(&fx, beta_src, beta_tgt, cod)?;
        let g1_au = beta_tgt.apply(cod, a_u)?;
        match cod.compose(&g1_au, &b_fx)? {
            Some(v) => {
                out.theta.insert(u.clone(), v);
            }
            None => {
                return Err(TransformError::NotComposable(format!(
                    "star components at {u} do not compose"
                )))
            }
        }
    }
    Ok(out)
}

/// Searches for invertible-valued component pairs `(θ1, θ2)` realizing
/// `θ1(a)·F(a) = G(a)·θ2(a)` at every generator; the relation is
/// pointwise, so the search runs generator by generator in deterministic
/// order.
pub fn functor_iso(
    f: &FunctorMap,
    g: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
) -> Option<RawPair> {
    let invs = invertibles::invertible_elements(cod);
    let mut theta1 = BTreeMap::new();
    let mut theta2 = BTreeMap::new();
    for a in dom.generators() {
        let e = ElementRef::base(a.as_str());
        let (Ok(fa), Ok(ga)) = (f.apply(cod, &e), g.apply(cod, &e)) else {
            return None;
        };
        let mut found = None;
        'search: for t1 in &invs {
            let Ok(Some(l)) = cod.compose(t1, &fa) else {
                continue;
            };
            for t2 in &invs {
                let Ok(Some(r)) = cod.compose(&ga, t2) else {
                    continue;
                };
                if l == r {
                    found = Some((t1.clone(), t2.clone()));
                    break 'search;
                }
            }
        }
        let (t1, t2) = found?;
        theta1.insert(a.clone(), t1);
        theta2.insert(a.clone(), t2);
    }
    Some(RawPair { theta1, theta2 })
}
