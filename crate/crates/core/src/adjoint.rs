//! Adjunction verification via the triangle identities, the natural
//! hom-set bijection, fullness and faithfulness, and equivalence
//! decisions.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::invertibles::{self, InvertiblesError};
use crate::kernel::{ElementRef, Finding, GenCatPresentation, KernelError, Report};
use crate::symbol::Symbol;
use crate::transform::{
    check_functor, check_transformation, compose_functors, FunctorMap, TransformError,
    Transformation,
};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AdjointError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Invertibles(#[from] InvertiblesError),
}

/// Outcome of a bounded search: a witness, a definite refusal with the
/// reason, or an explicit budget exhaustion (never a silent negative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    NotFound(String),
    Inconclusive { budget: u64 },
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// The four components of a candidate adjunction `F ⊣ G` with its unit
/// and counit, resolved against their presentations.
pub struct AdjunctionWitness<'a> {
    /// `F : C → D`.
    pub left: &'a FunctorMap,
    /// `G : D → C`.
    pub right: &'a FunctorMap,
    /// `η : id_C ⟹ G∘F`.
    pub unit: &'a Transformation,
    /// `ε : F∘G ⟹ id_D`.
    pub counit: &'a Transformation,
    pub dom: &'a GenCatPresentation,
    pub cod: &'a GenCatPresentation,
}

/// Verifies naturality of the unit and counit and both triangle
/// identities elementwise.
pub fn check_adjunction(w: &AdjunctionWitness) -> Report {
    let mut report = Report::new(Symbol::new(format!(
        "adjunction:{}⊣{}",
        w.left.name, w.right.name
    )));
    let id_c = FunctorMap::identity(Symbol::new("id_dom"), w.dom);
    let id_d = FunctorMap::identity(Symbol::new("id_cod"), w.cod);
    let gf = match compose_functors(Symbol::new("G∘F"), w.right, w.left, w.dom) {
        Ok(f) => f,
        Err(e) => {
            report.push(Finding::violation("adjunction-shape", vec![], e.to_string()));
            report.normalize();
            return report;
        }
    };
    let fg = match compose_functors(Symbol::new("F∘G"), w.left, w.right, w.cod) {
        Ok(f) => f,
        Err(e) => {
            report.push(Finding::violation("adjunction-shape", vec![], e.to_string()));
            report.normalize();
            return report;
        }
    };

    report.absorb(check_transformation(w.unit, &id_c, &gf, w.dom, w.dom, true));
    report.absorb(check_transformation(w.counit, &fg, &id_d, w.cod, w.cod, true));

    // Triangle (G∘ε) ⊙ (η∘G) = 1_G, at each generator of the codomain.
    for u in w.cod.generators() {
        let ue = ElementRef::base(u.as_str());
        let Some(eps_u) = w.counit.theta.get(u) else {
            continue;
        };
        let (Ok(g_eps), Ok(gu)) = (w.right.apply(w.dom, eps_u), w.right.apply(w.dom, &ue)) else {
            continue;
        };
        let Ok(eta_gu) = w.unit.component(&gu, &id_c, &gf, w.dom) else {
            report.push(Finding::violation(
                "triangle-right",
                vec![ue.clone()],
                format!("missing unit component at G({u})"),
            ));
            continue;
        };
        let Ok(expected) = w.dom.identity_of(&gu) else {
            continue;
        };
        match w.dom.compose(&g_eps, &eta_gu) {
            Ok(Some(v)) if v == expected => {}
            Ok(Some(v)) => report.push(Finding::violation(
                "triangle-right",
                vec![ue.clone(), v.clone()],
                format!("G(ε)·η at {u} is {v}, expected {expected}"),
            )),
            _ => report.push(Finding::violation(
                "triangle-right",
                vec![ue.clone()],
                format!("G(ε)·η at {u} is not composable"),
            )),
        }
    }

    // Triangle (ε∘F) ⊙ (F∘η) = 1_F, at each generator of the domain.
    for v in w.dom.generators() {
        let ve = ElementRef::base(v.as_str());
        let Some(eta_v) = w.unit.theta.get(v) else {
            continue;
        };
        let (Ok(f_eta), Ok(fv)) = (w.left.apply(w.cod, eta_v), w.left.apply(w.cod, &ve)) else {
            continue;
        };
        let Ok(eps_fv) = w.counit.component(&fv, &fg, &id_d, w.cod) else {
            report.push(Finding::violation(
                "triangle-left",
                vec![ve.clone()],
                format!("missing counit component at F({v})"),
            ));
            continue;
        };
        let Ok(expected) = w.cod.identity_of(&fv) else {
            continue;
        };
        match w.cod.compose(&eps_fv, &f_eta) {
            Ok(Some(x)) if x == expected => {}
            Ok(Some(x)) => report.push(Finding::violation(
                "triangle-left",
                vec![ve.clone(), x.clone()],
                format!("ε·F(η) at {v} is {x}, expected {expected}"),
            )),
            _ => report.push(Finding::violation(
                "triangle-left",
                vec![ve.clone()],
                format!("ε·F(η) at {v} is not composable"),
            )),
        }
    }

    report.normalize();
    report
}

/// The two directions of the hom-set bijection at a pair `(x, y)`:
/// `phi : hom(F x, y) → hom(x, G y)` and its inverse `psi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomBijection {
    pub phi: BTreeMap<ElementRef, ElementRef>,
    pub psi: BTreeMap<ElementRef, ElementRef>,
    pub report: Report,
}

fn phi_apply(
    w: &AdjunctionWitness,
    x: &ElementRef,
    v: &ElementRef,
) -> Result<Option<ElementRef>, AdjointError> {
    // phi(v) = G(v) · η_x
    let Some(eta_x) = component_at(w.unit, x, w.dom) else {
        return Ok(None);
    };
    let gv = w.right.apply(w.dom, v)?;
    Ok(w.dom.compose(&gv, &eta_x)?)
}

fn psi_apply(
    w: &AdjunctionWitness,
    y: &ElementRef,
    u: &ElementRef,
) -> Result<Option<ElementRef>, AdjointError> {
    // psi(u) = ε_y · F(u)
    let Some(eps_y) = component_at(w.counit, y, w.cod) else {
        return Ok(None);
    };
    let fu = w.left.apply(w.cod, u)?;
    Ok(w.cod.compose(&eps_y, &fu)?)
}

/// Component of a transformation at an element, without functor
/// context: stored components at level 0, towers unavailable.
fn component_at(
    t: &Transformation,
    e: &ElementRef,
    _p: &GenCatPresentation,
) -> Option<ElementRef> {
    if e.level == 0 {
        t.theta.get(&e.generator).cloned()
    } else {
        None
    }
}

/// Builds and verifies the hom-set bijection at `(x, y)`:
/// mutual inverses on the enumerated hom sets plus both naturality
/// equations over all applicable composites.
pub fn hom_bijection(
    w: &AdjunctionWitness,
    x: &ElementRef,
    y: &ElementRef,
) -> Result<HomBijection, AdjointError> {
    let mut report = Report::new(Symbol::new(format!("hom-bijection({x},{y})")));
    let fx = w.left.apply(w.cod, x)?;
    let gy = w.right.apply(w.dom, y)?;
    let upstairs = w.cod.hom_set(&fx, y)?;
    let downstairs = w.dom.hom_set(x, &gy)?;

    let mut phi = BTreeMap::new();
    for v in &upstairs {
        match phi_apply(w, x, v)? {
            Some(img) => {
                if !downstairs.contains(&img) {
                    report.push(Finding::violation(
                        "hom-bijection-range",
                        vec![v.clone(), img.clone()],
                        format!("phi({v}) = {img} lies outside hom({x}, G {y})"),
                    ));
                }
                phi.insert(v.clone(), img);
            }
            None => report.push(Finding::violation(
                "hom-bijection-total",
                vec![v.clone()],
                format!("phi({v}) is not defined"),
            )),
        }
    }
    let mut psi = BTreeMap::new();
    for u in &downstairs {
        match psi_apply(w, y, u)? {
            Some(img) => {
                if !upstairs.contains(&img) {
                    report.push(Finding::violation(
                        "hom-bijection-range",
                        vec![u.clone(), img.clone()],
                        format!("psi({u}) = {img} lies outside hom(F {x}, {y})"),
                    ));
                }
                psi.insert(u.clone(), img);
            }
            None => report.push(Finding::violation(
                "hom-bijection-total",
                vec![u.clone()],
                format!("psi({u}) is not defined"),
            )),
        }
    }
    // Mutual inverses.
    for v in &upstairs {
        let round = phi.get(v).and_then(|m| psi.get(m));
        if round != Some(v) {
            report.push(Finding::violation(
                "hom-bijection-inverse",
                vec![v.clone()],
                format!("psi(phi({v})) ≠ {v}"),
            ));
        }
    }
    for u in &downstairs {
        let round = psi.get(u).and_then(|m| phi.get(m));
        if round != Some(u) {
            report.push(Finding::violation(
                "hom-bijection-inverse",
                vec![u.clone()],
                format!("phi(psi({u})) ≠ {u}"),
            ));
        }
    }

    // Naturality in the first argument: phi(u·F(w)) = phi(u)·w for
    // every w into x.
    for u in &upstairs {
        for wmap in w.dom.elements() {
            if w.dom.target(&wmap)? != *x {
                continue;
            }
            let x2 = w.dom.source(&wmap)?;
            let fw = w.left.apply(w.cod, &wmap)?;
            let Some(ufw) = w.cod.compose(u, &fw).ok().flatten() else {
                continue;
            };
            let lhs = phi_apply(w, &x2, &ufw)?;
            let rhs = phi
                .get(u)
                .map(|pu| w.dom.compose(pu, &wmap))
                .transpose()?
                .flatten();
            if lhs != rhs || lhs.is_none() {
                report.push(Finding::violation(
                    "hom-bijection-natural-dom",
                    vec![u.clone(), wmap.clone()],
                    format!("phi({u}·F({wmap})) disagrees with phi({u})·{wmap}"),
                ));
            }
        }
    }
    // Naturality in the second argument: phi(v'·v) = G(v')·phi(v).
    for v in &upstairs {
        for vprime in w.cod.elements() {
            if w.cod.source(&vprime)? != *y {
                continue;
            }
            let Some(vv) = w.cod.compose(&vprime, v).ok().flatten() else {
                continue;
            };
            let lhs = phi_apply(w, x, &vv)?;
            let gv = w.right.apply(w.dom, &vprime)?;
            let rhs = phi
                .get(v)
                .map(|pv| w.dom.compose(&gv, pv))
                .transpose()?
                .flatten();
            if lhs != rhs || lhs.is_none() {
                report.push(Finding::violation(
                    "hom-bijection-natural-cod",
                    vec![v.clone(), vprime.clone()],
                    format!("phi({vprime}·{v}) disagrees with G({vprime})·phi({v})"),
                ));
            }
        }
    }

    report.normalize();
    Ok(HomBijection { phi, psi, report })
}

/// Per-hom-set injectivity and surjectivity of a functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullFaithful {
    pub is_full: bool,
    pub is_faithful: bool,
}

pub fn fullness_faithfulness(
    f: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
) -> Result<FullFaithful, AdjointError> {
    let elements = dom.elements();
    let mut is_full = true;
    let mut is_faithful = true;
    for a in &elements {
        for b in &elements {
            let hom = dom.hom_set(a, b)?;
            let (fa, fb) = (f.apply(cod, a)?, f.apply(cod, b)?);
            let image_hom = cod.hom_set(&fa, &fb)?;
            let mut images = Vec::new();
            for h in &hom {
                images.push(f.apply(cod, h)?);
            }
            let mut sorted = images.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != images.len() {
                is_faithful = false;
            }
            for target in &image_hom {
                if !images.contains(target) {
                    is_full = false;
                }
            }
        }
    }
    Ok(FullFaithful { is_full, is_faithful })
}

/// Witness data returned by a successful equivalence search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub right: FunctorMap,
    pub unit: Transformation,
    pub counit: Transformation,
}

/// Decides whether `f` is a natural equivalence: full, faithful, and
/// essentially surjective; when so, constructs an adjoint-equivalence
/// witness (quasi-inverse, unit, counit) with invertible components.
///
/// The witness construction walks codomain objects in deterministic
/// order, preferring strict preimages and otherwise searching
/// invertibles, then extends along hom-set bijections. Works on
/// one-category presentations; the budget bounds the candidate search.
pub fn is_natural_equivalence(
    f: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
    budget: u64,
) -> Result<SearchOutcome<EquivalenceWitness>, AdjointError> {
    let ff = fullness_faithfulness(f, dom, cod)?;
    if !ff.is_full {
        return Ok(SearchOutcome::NotFound("not full".to_owned()));
    }
    if !ff.is_faithful {
        return Ok(SearchOutcome::NotFound("not faithful".to_owned()));
    }
    let ess = invertibles::essential_properties(f, dom, cod)?;
    if !ess.essentially_surjective {
        return Ok(SearchOutcome::NotFound("not essentially surjective".to_owned()));
    }
    if !dom.classify_category().is_one_category || !cod.classify_category().is_one_category {
        return Ok(SearchOutcome::Inconclusive { budget: 0 });
    }

    let mut steps = 0u64;
    let invs = invertibles::invertible_elements(cod);

    // Choose, per codomain object, a domain object and an invertible
    // ε_d : F(G d) → d.
    let cod_objects: Vec<Symbol> = cod
        .generators()
        .filter(|g| cod.is_object_generator(g))
        .cloned()
        .collect();
    let dom_objects: Vec<Symbol> = dom
        .generators()
        .filter(|g| dom.is_object_generator(g))
        .cloned()
        .collect();

    let mut g0: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    let mut eps: BTreeMap<Symbol, ElementRef> = BTreeMap::new();
    for dgen in &cod_objects {
        let de = ElementRef::base(dgen.as_str());
        let mut chosen = None;
        // Strict preimage first.
        for cgen in &dom_objects {
            steps += 1;
            if steps > budget {
                return Ok(SearchOutcome::Inconclusive { budget });
            }
            let fc = f.apply(cod, &ElementRef::base(cgen.as_str()))?;
            if fc == de {
                chosen = Some((cgen.clone(), de.clone()));
                break;
            }
        }
        if chosen.is_none() {
            'search: for cgen in &dom_objects {
                let fc = f.apply(cod, &ElementRef::base(cgen.as_str()))?;
                for theta in &invs {
                    steps += 1;
                    if steps > budget {
                        return Ok(SearchOutcome::Inconclusive { budget });
                    }
                    if cod.source(theta)? == fc && cod.target(theta)? == de {
                        chosen = Some((cgen.clone(), theta.clone()));
                        break 'search;
                    }
                }
            }
        }
        let Some((cgen, eps_d)) = chosen else {
            return Ok(SearchOutcome::NotFound(format!(
                "no object of the domain maps onto {dgen} up to isomorphism"
            )));
        };
        g0.insert(dgen.clone(), cgen);
        eps.insert(dgen.clone(), eps_d);
    }

    // Extend to arrows through the hom bijection given by fullness and
    // faithfulness: G(k) is the unique preimage of ε_{d'}⁻¹ · k · ε_d.
    let mut right = FunctorMap::new(
        Symbol::new(format!("{}_inv", f.name)),
        cod.name().clone(),
        dom.name().clone(),
        crate::transform::Variance::Covariant,
    );
    for (dgen, cgen) in &g0 {
        right.insert(dgen.clone(), ElementRef::base(cgen.as_str()));
    }
    for k in cod.generators() {
        if cod.is_object_generator(k) {
            continue;
        }
        let (d1, d2) = (
            cod.declared_src(k).unwrap().clone(),
            cod.declared_tgt(k).unwrap().clone(),
        );
        let eps_d1 = &eps[&d1];
        let eps_d2_inv = invertibles::inverse(cod, &eps[&d2])?.ok_or_else(|| {
            AdjointError::Kernel(KernelError::UnknownGenerator(Symbol::new("eps-not-invertible")))
        })?;
        let ke = ElementRef::base(k.as_str());
        let Some(mid) = cod.compose(&ke, eps_d1).ok().flatten() else {
            return Ok(SearchOutcome::NotFound(format!(
                "counit at {d1} does not compose under {k}"
            )));
        };
        let Some(conjugated) = cod.compose(&eps_d2_inv, &mid).ok().flatten() else {
            return Ok(SearchOutcome::NotFound(format!(
                "counit inverse at {d2} does not compose over {k}"
            )));
        };
        // Unique preimage in hom(G d1, G d2).
        let gd1 = ElementRef::base(g0[&d1].as_str());
        let gd2 = ElementRef::base(g0[&d2].as_str());
        let mut preimage = None;
        for h in dom.hom_set(&gd1, &gd2)? {
            steps += 1;
            if steps > budget {
                return Ok(SearchOutcome::Inconclusive { budget });
            }
            if f.apply(cod, &h)? == conjugated {
                preimage = Some(h);
                break;
            }
        }
        let Some(h) = preimage else {
            return Ok(SearchOutcome::NotFound(format!(
                "no preimage for the conjugate of {k}"
            )));
        };
        right.insert(k.clone(), h);
    }

    // Unit: η_c is the unique preimage of ε_{F c}⁻¹.
    let id_dom = FunctorMap::identity(Symbol::new("id_dom"), dom);
    let mut unit = Transformation::new(
        Symbol::new(format!("{}_unit", f.name)),
        id_dom.name.clone(),
        Symbol::new("G∘F"),
    );
    for cgen in &dom_objects {
        let ce = ElementRef::base(cgen.as_str());
        let fc = f.apply(cod, &ce)?;
        let eps_fc = &eps[&fc.generator];
        let eps_fc_inv = invertibles::inverse(cod, eps_fc)?.ok_or_else(|| {
            AdjointError::Kernel(KernelError::UnknownGenerator(Symbol::new("eps-not-invertible")))
        })?;
        let gfc = right.apply(dom, &fc)?;
        let mut preimage = None;
        for h in dom.hom_set(&ce, &gfc)? {
            steps += 1;
            if steps > budget {
                return Ok(SearchOutcome::Inconclusive { budget });
            }
            if f.apply(cod, &h)? == eps_fc_inv {
                preimage = Some(h);
                break;
            }
        }
        let Some(h) = preimage else {
            return Ok(SearchOutcome::NotFound(format!(
                "no unit component at {cgen}"
            )));
        };
        unit.theta.insert(cgen.clone(), h);
    }
    // Arrow components of the unit are never consulted on one-category
    // boundaries; objects suffice.

    let mut counit = Transformation::new(
        Symbol::new(format!("{}_counit", f.name)),
        Symbol::new("F∘G"),
        Symbol::new("id_cod"),
    );
    for (dgen, eps_d) in &eps {
        counit.theta.insert(dgen.clone(), eps_d.clone());
    }

    // Verify the assembled witness.
    let fun_report = check_functor(&right, cod, dom);
    if !fun_report.passed() {
        return Ok(SearchOutcome::NotFound(format!(
            "constructed quasi-inverse is not a functor: {}",
            fun_report
                .violations()
                .next()
                .map(|v| v.message.clone())
                .unwrap_or_default()
        )));
    }
    let witness = AdjunctionWitness {
        left: f,
        right: &right,
        unit: &unit,
        counit: &counit,
        dom,
        cod,
    };
    let adj_report = check_adjunction(&witness);
    if !adj_report.passed() {
        return Ok(SearchOutcome::NotFound(format!(
            "triangle identities fail: {}",
            adj_report
                .violations()
                .next()
                .map(|v| v.message.clone())
                .unwrap_or_default()
        )));
    }
    for comp in unit.theta.values() {
        if invertibles::inverse(dom, comp)?.is_none() {
            return Ok(SearchOutcome::NotFound(format!(
                "unit component {comp} is not invertible"
            )));
        }
    }
    for comp in counit.theta.values() {
        if invertibles::inverse(cod, comp)?.is_none() {
            return Ok(SearchOutcome::NotFound(format!(
                "counit component {comp} is not invertible"
            )));
        }
    }

    Ok(SearchOutcome::Found(EquivalenceWitness {
        right,
        unit,
        counit,
    }))
}

/// Structural isomorphism search between two presentations by
/// backtracking over generator assignments with invariant pruning.
pub fn presentation_isomorphism(
    a: &GenCatPresentation,
    b: &GenCatPresentation,
    budget: u64,
) -> SearchOutcome<BTreeMap<Symbol, Symbol>> {
    let ga: Vec<Symbol> = a.generators().cloned().collect();
    let gb: Vec<Symbol> = b.generators().cloned().collect();
    if ga.len() != gb.len() {
        return SearchOutcome::NotFound("generator counts differ".to_owned());
    }

    // Local invariant: objectness plus boundary in/out degrees.
    let signature = |p: &GenCatPresentation, g: &Symbol| -> (bool, usize, usize) {
        let outdeg = p
            .generators()
            .filter(|h| p.declared_src(h) == Some(g))
            .count();
        let indeg = p
            .generators()
            .filter(|h| p.declared_tgt(h) == Some(g))
            .count();
        (p.is_object_generator(g), outdeg, indeg)
    };

    let mut steps = 0u64;
    let mut map: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    let mut used: Vec<bool> = vec![false; gb.len()];

    fn consistent(
        a: &GenCatPresentation,
        b: &GenCatPresentation,
        map: &BTreeMap<Symbol, Symbol>,
    ) -> bool {
        for (x, y) in map {
            let (sx, tx) = (a.declared_src(x).unwrap(), a.declared_tgt(x).unwrap());
            if let Some(sy) = map.get(sx) {
                if b.declared_src(y) != Some(sy) {
                    return false;
                }
            }
            if let Some(ty) = map.get(tx) {
                if b.declared_tgt(y) != Some(ty) {
                    return false;
                }
            }
        }
        for ((l, r), v) in a.comp_table() {
            let (Some(l2), Some(r2)) = (map.get(l), map.get(r)) else {
                continue;
            };
            match b.comp_table().get(&(l2.clone(), r2.clone())) {
                Some(v2) => {
                    if let Some(vm) = map.get(&v.generator) {
                        if &v2.generator != vm || v2.level != v.level {
                            return false;
                        }
                    }
                }
                None => return false,
            }
        }
        for (l, r) in a.declared_order() {
            if let (Some(l2), Some(r2)) = (map.get(l), map.get(r)) {
                if !b.gen_leq(l2, r2) {
                    return false;
                }
            }
        }
        true
    }

    fn backtrack(
        a: &GenCatPresentation,
        b: &GenCatPresentation,
        ga: &[Symbol],
        gb: &[Symbol],
        signature: &dyn Fn(&GenCatPresentation, &Symbol) -> (bool, usize, usize),
        map: &mut BTreeMap<Symbol, Symbol>,
        used: &mut Vec<bool>,
        depth: usize,
        steps: &mut u64,
        budget: u64,
    ) -> Result<bool, ()> {
        if depth == ga.len() {
            return Ok(true);
        }
        let x = &ga[depth];
        for (j, y) in gb.iter().enumerate() {
            if used[j] || signature(a, x) != signature(b, y) {
                continue;
            }
            *steps += 1;
            if *steps > budget {
                return Err(());
            }
            map.insert(x.clone(), y.clone());
            used[j] = true;
            if consistent(a, b, map)
                && backtrack(a, b, ga, gb, signature, map, used, depth + 1, steps, budget)?
            {
                return Ok(true);
            }
            map.remove(x);
            used[j] = false;
        }
        Ok(false)
    }

    match backtrack(
        a, b, &ga, &gb, &signature, &mut map, &mut used, 0, &mut steps, budget,
    ) {
        Ok(true) => SearchOutcome::Found(map),
        Ok(false) => SearchOutcome::NotFound("no structure-preserving bijection".to_owned()),
        Err(()) => SearchOutcome::Inconclusive { budget },
    }
}

/// Result of an equivalence decision between two presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceDecision {
    pub outcome: SearchOutcome<BTreeMap<Symbol, Symbol>>,
    /// When functors were supplied: whether their lifts realize the
    /// isomorphism of quotients in both directions.
    pub lifts_through_functors: Option<bool>,
}

/// Equivalence in the quotient sense: the categories of invertibles are
/// isomorphic. Optionally records whether a supplied functor pair
/// realizes the isomorphism through its lifts.
pub fn categories_equivalent(
    c: &GenCatPresentation,
    d: &GenCatPresentation,
    functors: Option<(&FunctorMap, &FunctorMap)>,
    budget: u64,
) -> Result<EquivalenceDecision, AdjointError> {
    let qc = invertibles::category_of_invertibles(c)?;
    let qd = invertibles::category_of_invertibles(d)?;
    let outcome = presentation_isomorphism(&qc.quotient, &qd.quotient, budget);
    let lifts_through_functors = match functors {
        None => None,
        Some((f, g)) => {
            let lf = invertibles::lift_functor(f, &qc, &qd, d)?;
            let lg = invertibles::lift_functor(g, &qd, &qc, c)?;
            // Mutually inverse on classes.
            let mut ok = true;
            for class in qc.quotient.generators() {
                let there = lf.get(class).cloned();
                let back = there.as_ref().and_then(|t| lg.get(&t.generator)).cloned();
                if back != Some(ElementRef::base(class.as_str())) {
                    ok = false;
                }
            }
            for class in qd.quotient.generators() {
                let there = lg.get(class).cloned();
                let back = there.as_ref().and_then(|t| lf.get(&t.generator)).cloned();
                if back != Some(ElementRef::base(class.as_str())) {
                    ok = false;
                }
            }
            Some(ok)
        }
    };
    Ok(EquivalenceDecision {
        outcome,
        lifts_through_functors,
    })
}
