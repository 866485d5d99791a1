//! Cones, (co)limit verification by universal property, standard
//! diagram shapes, construction of finite limits from products and
//! equalizers, and functor exactness checks.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::constructions::flat_object_name;
use crate::kernel::{
    ElementRef, Finding, GenCatPresentation, KernelError, PresentationBuilder, Report,
};
use crate::symbol::Symbol;
use crate::transform::{compose_functors, FunctorMap, TransformError, Variance};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LimitError {
    #[error("missing {kind}: no limit cone exists for {description}")]
    MissingLimit { kind: String, description: String },
    #[error("no mediating element from {from} to {to}")]
    NoMediator { from: ElementRef, to: ElementRef },
    #[error("mediating element from {from} is not unique")]
    NonUniqueMediator { from: ElementRef },
    #[error("diagram has an index element of infinite height")]
    InfiniteHeight,
    #[error("equalizer data is not a parallel pair")]
    NotParallel,
    #[error("assembled cone fails the limit property: {0}")]
    ConstructionInvalid(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// An index presentation together with a base map into the ambient
/// category. The base is covariant or a functor up to objects (the
/// latter admits products of arbitrary elements).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub name: Symbol,
    pub index: GenCatPresentation,
    pub base: FunctorMap,
}

impl Diagram {
    /// Value of the base at an index generator.
    pub fn value(
        &self,
        ambient: &GenCatPresentation,
        i: &Symbol,
    ) -> Result<ElementRef, TransformError> {
        self.base.apply(ambient, &ElementRef::base(i.as_str()))
    }

    /// Maximum height over the index generators; `None` when some
    /// generator has infinite height.
    pub fn height(&self) -> Result<Option<u64>, KernelError> {
        let mut h = 0;
        for g in self.index.generators().cloned().collect::<Vec<_>>() {
            match self.index.height(&ElementRef::base(g.as_str()))? {
                Some(x) => h = h.max(x),
                None => return Ok(None),
            }
        }
        Ok(Some(h))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Orientation {
    Cone,
    Cocone,
}

/// A cone (or cocone): a vertex plus one leg per index generator. Legs
/// at identity towers are determined by these and need no storage.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cone {
    pub orientation: Orientation,
    pub vertex: ElementRef,
    pub legs: BTreeMap<Symbol, ElementRef>,
}

impl Cone {
    pub fn new(orientation: Orientation, vertex: ElementRef) -> Self {
        Cone {
            orientation,
            vertex,
            legs: BTreeMap::new(),
        }
    }

    pub fn leg(mut self, i: impl Into<Symbol>, e: impl Into<ElementRef>) -> Self {
        self.legs.insert(i.into(), e.into());
        self
    }
}

/// Verifies the common-vertex condition and both over-the-base clauses
/// for every index generator.
pub fn check_cone(cone: &Cone, d: &Diagram, ambient: &GenCatPresentation) -> Report {
    let mut report = Report::new(Symbol::new(format!("cone:{}", d.name)));
    let vertex_side = match cone.orientation {
        Orientation::Cone => crate::kernel::Side::Source,
        Orientation::Cocone => crate::kernel::Side::Target,
    };
    for i in d.index.generators() {
        let Some(leg) = cone.legs.get(i) else {
            report.push(Finding::violation(
                "cone-legs",
                vec![ElementRef::base(i.as_str())],
                format!("no leg at index generator {i}"),
            ));
            continue;
        };
        if ambient.validate(leg).is_err() {
            report.push(Finding::violation(
                "cone-legs",
                vec![leg.clone()],
                format!("leg {leg} is not a valid element"),
            ));
            continue;
        }
        // Common vertex.
        match ambient.boundary(leg, vertex_side) {
            Ok(v) if v == cone.vertex => {}
            Ok(v) => report.push(Finding::violation(
                "cone-vertex",
                vec![ElementRef::base(i.as_str()), leg.clone()],
                format!("leg at {i} has vertex-side boundary {v}, expected {}", cone.vertex),
            )),
            Err(e) => report.push(Finding::violation(
                "cone-vertex",
                vec![leg.clone()],
                e.to_string(),
            )),
        }
        // Clause 1: the other boundary matches the base value.
        let Ok(value) = d.value(ambient, i) else {
            report.push(Finding::violation(
                "cone-base",
                vec![ElementRef::base(i.as_str())],
                format!("base has no value at {i}"),
            ));
            continue;
        };
        match ambient.boundary(leg, vertex_side.flip()) {
            Ok(b) if b == value => {}
            Ok(b) => report.push(Finding::violation(
                "cone-over-base",
                vec![ElementRef::base(i.as_str()), leg.clone()],
                format!("leg at {i} has boundary {b}, expected the base value {value}"),
            )),
            Err(e) => report.push(Finding::violation(
                "cone-over-base",
                vec![leg.clone()],
                e.to_string(),
            )),
        }
    }
    // Clause 2: legs at boundaries factor through the base value.
    for i in d.index.generators() {
        let ie = ElementRef::base(i.as_str());
        let (Ok(si), Ok(ti)) = (d.index.source(&ie), d.index.target(&ie)) else {
            continue;
        };
        let (Some(leg_s), Some(leg_t)) = (
            cone.legs.get(&si.generator),
            cone.legs.get(&ti.generator),
        ) else {
            continue;
        };
        let Ok(value) = d.value(ambient, i) else {
            continue;
        };
        let (want, got) = match cone.orientation {
            Orientation::Cone => (leg_t.clone(), ambient.compose(&value, leg_s)),
            Orientation::Cocone => (leg_s.clone(), ambient.compose(leg_t, &value)),
        };
        match got {
            Ok(Some(v)) if v == want => {}
            Ok(Some(v)) => report.push(Finding::violation(
                "cone-commutes",
                vec![ie.clone(), v.clone()],
                format!("legs around {i} compose to {v}, expected {want}"),
            )),
            Ok(None) => report.push(Finding::violation(
                "cone-commutes",
                vec![ie.clone()],
                format!("legs around {i} are not composable with the base value"),
            )),
            Err(e) => report.push(Finding::incomplete(
                "cone-commutes-incomplete",
                vec![ie.clone()],
                e.to_string(),
            )),
        }
    }
    report.normalize();
    report
}

/// All cones (of the requested orientation) over the base, enumerated
/// exhaustively over vertices and legs at the identity bound.
pub fn enumerate_cones(
    d: &Diagram,
    ambient: &GenCatPresentation,
    orientation: Orientation,
) -> Result<Vec<Cone>, LimitError> {
    let gens: Vec<Symbol> = d.index.generators().cloned().collect();
    let elements = ambient.elements();
    let vertex_side = match orientation {
        Orientation::Cone => crate::kernel::Side::Source,
        Orientation::Cocone => crate::kernel::Side::Target,
    };

    let mut values = BTreeMap::new();
    for i in &gens {
        values.insert(i.clone(), d.value(ambient, i)?);
    }

    let mut out = Vec::new();
    for vertex in &elements {
        // Candidate legs per index generator from this vertex.
        let mut candidates: Vec<(Symbol, Vec<ElementRef>)> = Vec::new();
        let mut dead = false;
        for i in &gens {
            let value = &values[i];
            let legs: Vec<ElementRef> = elements
                .iter()
                .filter(|e| {
                    ambient.boundary(e, vertex_side).ok().as_ref() == Some(vertex)
                        && ambient.boundary(e, vertex_side.flip()).ok().as_ref() == Some(value)
                })
                .cloned()
                .collect();
            if legs.is_empty() {
                dead = true;
                break;
            }
            candidates.push((i.clone(), legs));
        }
        if dead {
            continue;
        }
        // Cartesian product of leg choices, filtered by the commuting
        // clause afterwards.
        let mut assignments: Vec<BTreeMap<Symbol, ElementRef>> = vec![BTreeMap::new()];
        for (i, legs) in &candidates {
            let mut next = Vec::new();
            for partial in &assignments {
                for leg in legs {
                    let mut extended = partial.clone();
                    extended.insert(i.clone(), leg.clone());
                    next.push(extended);
                }
            }
            assignments = next;
        }
        for legs in assignments {
            let cone = Cone {
                orientation,
                vertex: vertex.clone(),
                legs,
            };
            if check_cone(&cone, d, ambient).passed() {
                out.push(cone);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Mediating candidates from `other`'s vertex into `cone`'s vertex (for
/// cones; reversed for cocones): elements λ with `other = cone ⊙ λ`.
fn mediators(
    cone: &Cone,
    other: &Cone,
    ambient: &GenCatPresentation,
) -> Result<Vec<ElementRef>, LimitError> {
    let mut out = Vec::new();
    'candidates: for lambda in ambient.elements() {
        if cone.legs.is_empty() {
            // Empty index: the mediator runs between the vertices.
            let (s, t) = (ambient.source(&lambda)?, ambient.target(&lambda)?);
            let ok = match cone.orientation {
                Orientation::Cone => s == other.vertex && t == cone.vertex,
                Orientation::Cocone => s == cone.vertex && t == other.vertex,
            };
            if ok {
                out.push(lambda);
            }
            continue;
        }
        for (i, leg) in &cone.legs {
            let Some(other_leg) = other.legs.get(i) else {
                continue 'candidates;
            };
            let composed = match cone.orientation {
                Orientation::Cone => ambient.compose(leg, &lambda),
                Orientation::Cocone => ambient.compose(&lambda, leg),
            };
            match composed {
                Ok(Some(v)) if v == *other_leg => {}
                _ => continue 'candidates,
            }
        }
        // The mediator must start at the other cone's vertex.
        let side = match cone.orientation {
            Orientation::Cone => crate::kernel::Side::Source,
            Orientation::Cocone => crate::kernel::Side::Target,
        };
        if ambient.boundary(&lambda, side)? == other.vertex {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// Decides the (co)limit property: every cone over the same base must
/// factor through `cone` by exactly one mediating element.
pub fn is_limit(cone: &Cone, d: &Diagram, ambient: &GenCatPresentation) -> (bool, Report) {
    let mut report = check_cone(cone, d, ambient);
    if !report.passed() {
        return (false, report);
    }
    let all = match enumerate_cones(d, ambient, cone.orientation) {
        Ok(c) => c,
        Err(e) => {
            report.push(Finding::violation("limit-enumeration", vec![], e.to_string()));
            report.normalize();
            return (false, report);
        }
    };
    for other in &all {
        let meds = match mediators(cone, other, ambient) {
            Ok(m) => m,
            Err(e) => {
                report.push(Finding::violation("limit-mediator", vec![], e.to_string()));
                continue;
            }
        };
        if meds.is_empty() {
            report.push(Finding::violation(
                "limit-mediator-missing",
                vec![other.vertex.clone()],
                format!("cone at vertex {} does not factor through", other.vertex),
            ));
        } else if meds.len() > 1 {
            report.push(Finding::violation(
                "limit-mediator-ambiguous",
                std::iter::once(other.vertex.clone()).chain(meds.clone()).collect(),
                format!(
                    "cone at vertex {} factors through {} mediators",
                    other.vertex,
                    meds.len()
                ),
            ));
        }
    }
    report.normalize();
    (report.passed(), report)
}

/// All limit cones of the diagram, by exhaustive enumeration. Any two
/// members have isomorphic vertices.
pub fn find_limits(d: &Diagram, ambient: &GenCatPresentation) -> Result<Vec<Cone>, LimitError> {
    let cones = enumerate_cones(d, ambient, Orientation::Cone)?;
    Ok(cones
        .into_iter()
        .filter(|c| is_limit(c, d, ambient).0)
        .collect())
}

/// All colimit cocones of the diagram.
pub fn find_colimits(d: &Diagram, ambient: &GenCatPresentation) -> Result<Vec<Cone>, LimitError> {
    let cones = enumerate_cones(d, ambient, Orientation::Cocone)?;
    Ok(cones
        .into_iter()
        .filter(|c| is_limit(c, d, ambient).0)
        .collect())
}

/// Standard shapes with their usual meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Product,
    Equalizer,
    Coproduct,
    Coequalizer,
}

impl StandardKind {
    pub fn orientation(self) -> Orientation {
        match self {
            StandardKind::Product | StandardKind::Equalizer => Orientation::Cone,
            StandardKind::Coproduct | StandardKind::Coequalizer => Orientation::Cocone,
        }
    }
}

/// Builds the discrete index for (co)products or the parallel-pair
/// index for (co)equalizers, with a base mapping onto the given data.
/// The base is a functor up to objects, so products of arbitrary
/// elements are expressible.
pub fn make_standard_diagram(
    kind: StandardKind,
    data: &[ElementRef],
    ambient: &GenCatPresentation,
) -> Result<Diagram, LimitError> {
    match kind {
        StandardKind::Product | StandardKind::Coproduct => {
            let mut b = PresentationBuilder::new("I_discrete");
            for (k, _) in data.iter().enumerate() {
                b = b.object(format!("i{k}"));
            }
            let index = b.build()?;
            let mut base = FunctorMap::new(
                Symbol::new(format!("prod_base_{}", data.len())),
                index.name().clone(),
                ambient.name().clone(),
                Variance::UpToObjects,
            );
            for (k, e) in data.iter().enumerate() {
                base.insert(Symbol::new(format!("i{k}")), ambient.canonicalize(e));
            }
            Ok(Diagram {
                name: Symbol::new("product"),
                index,
                base,
            })
        }
        StandardKind::Equalizer | StandardKind::Coequalizer => {
            let [f, g] = data else {
                return Err(LimitError::NotParallel);
            };
            let (sf, tf) = (ambient.source(f)?, ambient.target(f)?);
            let (sg, tg) = (ambient.source(g)?, ambient.target(g)?);
            if sf != sg || tf != tg {
                return Err(LimitError::NotParallel);
            }
            let index = PresentationBuilder::new("I_parallel")
                .object("i")
                .object("j")
                .arrow("u", "i", "j")
                .arrow("v", "i", "j")
                .build()?;
            let mut base = FunctorMap::new(
                "eq_base",
                index.name().clone(),
                ambient.name().clone(),
                Variance::UpToObjects,
            );
            base.insert(Symbol::new("i"), sf);
            base.insert(Symbol::new("j"), tf);
            base.insert(Symbol::new("u"), ambient.canonicalize(f));
            base.insert(Symbol::new("v"), ambient.canonicalize(g));
            Ok(Diagram {
                name: Symbol::new("equalizer"),
                index,
                base,
            })
        }
    }
}

/// Deterministically chosen limit cone of a height-0 (product-shaped)
/// diagram, or a structured failure naming it.
fn product_cone(
    d: &Diagram,
    ambient: &GenCatPresentation,
    what: &str,
) -> Result<Cone, LimitError> {
    let mut lims = find_limits(d, ambient)?;
    lims.sort();
    lims.into_iter().next().ok_or_else(|| LimitError::MissingLimit {
        kind: "product".to_owned(),
        description: what.to_owned(),
    })
}

/// The unique mediator from `other` into the limit cone, as an error if
/// absent or ambiguous (a non-unique mediator falsifies the claimed
/// limit).
fn unique_mediator(
    limit: &Cone,
    other: &Cone,
    ambient: &GenCatPresentation,
) -> Result<ElementRef, LimitError> {
    let meds = mediators(limit, other, ambient)?;
    match meds.len() {
        0 => Err(LimitError::NoMediator {
            from: other.vertex.clone(),
            to: limit.vertex.clone(),
        }),
        1 => Ok(meds.into_iter().next().unwrap()),
        _ => Err(LimitError::NonUniqueMediator {
            from: other.vertex.clone(),
        }),
    }
}

fn restrict_index(
    index: &GenCatPresentation,
    keep: &[Symbol],
    name: &str,
) -> Result<GenCatPresentation, LimitError> {
    let kept: std::collections::BTreeSet<&Symbol> = keep.iter().collect();
    let mut b = PresentationBuilder::new(name)
        .mode(index.mode())
        .identity_bound(index.identity_bound());
    for g in keep {
        if index.is_object_generator(g) {
            b = b.object(g.as_str());
        } else {
            b = b.arrow(
                g.as_str(),
                index.declared_src(g).unwrap().as_str(),
                index.declared_tgt(g).unwrap().as_str(),
            );
        }
    }
    for (a, c) in index.declared_order() {
        if kept.contains(a) && kept.contains(c) {
            b = b.order(a.as_str(), c.as_str());
        }
    }
    for ((l, r), v) in index.comp_table() {
        if kept.contains(l) && kept.contains(r) && kept.contains(&v.generator) {
            b = b.comp_elem(l.as_str(), r.as_str(), v.clone());
        }
    }
    for ((l, r), v) in index.coerce_left_table() {
        if kept.contains(l) && kept.contains(r) && kept.contains(&v.generator) {
            b = b.coerce_left(l.as_str(), r.as_str(), v.clone());
        }
    }
    for ((l, r), v) in index.coerce_right_table() {
        if kept.contains(l) && kept.contains(r) && kept.contains(&v.generator) {
            b = b.coerce_right(l.as_str(), r.as_str(), v.clone());
        }
    }
    Ok(b.build()?)
}

fn restrict_base(base: &FunctorMap, keep: &[Symbol], index_name: &Symbol) -> FunctorMap {
    let mut f = FunctorMap::new(
        Symbol::new(format!("{}_restr", base.name)),
        index_name.clone(),
        base.cod.clone(),
        base.variance,
    );
    for g in keep {
        if let Some(v) = base.get(g) {
            f.insert(g.clone(), v.clone());
        }
    }
    f
}

/// A product diagram over a list of (name, value) pairs, used for the
/// flattened stages of the construction.
fn flat_product_diagram(
    name: &str,
    entries: &[(Symbol, ElementRef)],
    ambient: &GenCatPresentation,
) -> Result<Diagram, LimitError> {
    let mut b = PresentationBuilder::new(name);
    for (n, _) in entries {
        b = b.object(n.as_str());
    }
    let index = b.build()?;
    let mut base = FunctorMap::new(
        Symbol::new(format!("{name}_base")),
        index.name().clone(),
        ambient.name().clone(),
        Variance::UpToObjects,
    );
    for (n, v) in entries {
        base.insert(n.clone(), v.clone());
    }
    Ok(Diagram {
        name: Symbol::new(name),
        index,
        base,
    })
}

/// Constructs a limit cone for a finite diagram by induction on height,
/// reducing to products and equalizers:
///
/// 1. height 0 resolves to a product;
/// 2. otherwise the height-restricted subdiagram is solved inductively,
/// 3. the flattened restriction and the flattened top level produce two
///    product cones with universal arrows `u1`, `u2`, `u3`,
/// 4. the parallel pair `u2·u1`, `u3·u1` is equalized, and
/// 5. the legs are assembled as `π_i · u1 · e` and verified.
pub fn construct_limit(d: &Diagram, ambient: &GenCatPresentation) -> Result<Cone, LimitError> {
    let Some(height) = d.height()? else {
        return Err(LimitError::InfiniteHeight);
    };
    let cone = construct_limit_at(d, ambient, height)?;
    let (ok, report) = is_limit(&cone, d, ambient);
    if !ok {
        let first = report
            .violations()
            .next()
            .map(|f| f.message.clone())
            .unwrap_or_else(|| "unknown".to_owned());
        return Err(LimitError::ConstructionInvalid(first));
    }
    Ok(cone)
}

fn construct_limit_at(
    d: &Diagram,
    ambient: &GenCatPresentation,
    height: u64,
) -> Result<Cone, LimitError> {
    let gens: Vec<Symbol> = d.index.generators().cloned().collect();
    if height == 0 {
        return product_cone(
            d,
            ambient,
            &format!("height-0 diagram {} over {} generators", d.name, gens.len()),
        );
    }

    let gen_height = |g: &Symbol| -> Result<u64, LimitError> {
        d.index
            .height(&ElementRef::base(g.as_str()))?
            .ok_or(LimitError::InfiniteHeight)
    };

    // Restriction to heights below the top.
    let mut low: Vec<Symbol> = Vec::new();
    let mut top: Vec<Symbol> = Vec::new();
    for g in &gens {
        if gen_height(g)? < height {
            low.push(g.clone());
        } else {
            top.push(g.clone());
        }
    }
    let low_index = restrict_index(&d.index, &low, &format!("{}_le{}", d.name, height - 1))?;
    let low_base = restrict_base(&d.base, &low, low_index.name());
    let d_low = Diagram {
        name: Symbol::new(format!("{}_le{}", d.name, height - 1)),
        index: low_index,
        base: low_base,
    };
    let low_height = d_low.height()?.ok_or(LimitError::InfiniteHeight)?;
    let cone_low = construct_limit_at(&d_low, ambient, low_height)?;

    // Product over the flattened restriction.
    let mut flat_entries = Vec::new();
    for g in &low {
        flat_entries.push((
            flat_object_name(&ElementRef::base(g.as_str())),
            d.value(ambient, g)?,
        ));
    }
    let d_flat = flat_product_diagram(&format!("{}_flat{}", d.name, height - 1), &flat_entries, ambient)?;
    let cone_flat = product_cone(
        &d_flat,
        ambient,
        &format!("flattened restriction of {}", d.name),
    )?;

    // u1: the inductive cone, seen over the flattened base, factors
    // through the flat product.
    let mut induced = Cone::new(Orientation::Cone, cone_low.vertex.clone());
    for g in &low {
        let flat_name = flat_object_name(&ElementRef::base(g.as_str()));
        induced
            .legs
            .insert(flat_name, cone_low.legs[g].clone());
    }
    let u1 = unique_mediator(&cone_flat, &induced, ambient)?;

    // Product over the flattened top level, valued at the targets.
    let mut top_entries = Vec::new();
    for g in &top {
        let value = d.value(ambient, g)?;
        top_entries.push((
            flat_object_name(&ElementRef::base(g.as_str())),
            ambient.target(&value)?,
        ));
    }
    let d_top = flat_product_diagram(&format!("{}_top{}", d.name, height), &top_entries, ambient)?;
    let cone_top = product_cone(&d_top, ambient, &format!("flattened top level of {}", d.name))?;

    // u2: flat-product legs at the targets of the top generators.
    let mut toward_targets = Cone::new(Orientation::Cone, cone_flat.vertex.clone());
    for g in &top {
        let ie = ElementRef::base(g.as_str());
        let t_i = d.index.target(&ie)?;
        let flat_t = flat_object_name(&ElementRef::base(t_i.generator.as_str()));
        let leg = cone_flat
            .legs
            .get(&flat_t)
            .ok_or_else(|| LimitError::MissingLimit {
                kind: "product".to_owned(),
                description: format!("flat leg at the target of {g}"),
            })?
            .clone();
        toward_targets
            .legs
            .insert(flat_object_name(&ie), leg);
    }
    let u2 = unique_mediator(&cone_top, &toward_targets, ambient)?;

    // u3: base values composed onto the flat-product legs at the
    // sources of the top generators.
    let mut through_base = Cone::new(Orientation::Cone, cone_flat.vertex.clone());
    for g in &top {
        let ie = ElementRef::base(g.as_str());
        let s_i = d.index.source(&ie)?;
        let flat_s = flat_object_name(&ElementRef::base(s_i.generator.as_str()));
        let leg = cone_flat
            .legs
            .get(&flat_s)
            .ok_or_else(|| LimitError::MissingLimit {
                kind: "product".to_owned(),
                description: format!("flat leg at the source of {g}"),
            })?;
        let value = d.value(ambient, g)?;
        let composed = ambient
            .compose(&value, leg)?
            .ok_or_else(|| LimitError::ConstructionInvalid(format!(
                "base value at {g} does not compose with the flat leg"
            )))?;
        through_base.legs.insert(flat_object_name(&ie), composed);
    }
    let u3 = unique_mediator(&cone_top, &through_base, ambient)?;

    // Equalize u2·u1 and u3·u1.
    let p1 = ambient
        .compose(&u2, &u1)?
        .ok_or_else(|| LimitError::ConstructionInvalid("u2·u1 undefined".to_owned()))?;
    let p2 = ambient
        .compose(&u3, &u1)?
        .ok_or_else(|| LimitError::ConstructionInvalid("u3·u1 undefined".to_owned()))?;
    let d_eq = make_standard_diagram(StandardKind::Equalizer, &[p1, p2], ambient)?;
    let mut eq_lims = find_limits(&d_eq, ambient)?;
    eq_lims.sort();
    let eq_cone = eq_lims.into_iter().next().ok_or_else(|| LimitError::MissingLimit {
        kind: "equalizer".to_owned(),
        description: format!("parallel pair u2·u1, u3·u1 for {}", d.name),
    })?;
    let e = eq_cone.legs[&Symbol::new("i")].clone();

    // Assemble: π_i · u1 · e, where π_i is the flat leg at i for the
    // low generators and at target(i) for the top ones.
    let u1e = ambient
        .compose(&u1, &e)?
        .ok_or_else(|| LimitError::ConstructionInvalid("u1·e undefined".to_owned()))?;
    let mut result = Cone::new(Orientation::Cone, eq_cone.vertex.clone());
    for g in &gens {
        let ie = ElementRef::base(g.as_str());
        let flat_key = if low.contains(g) {
            flat_object_name(&ie)
        } else {
            let t_i = d.index.target(&ie)?;
            flat_object_name(&ElementRef::base(t_i.generator.as_str()))
        };
        let pi = cone_flat
            .legs
            .get(&flat_key)
            .ok_or_else(|| LimitError::MissingLimit {
                kind: "product".to_owned(),
                description: format!("flat projection for {g}"),
            })?;
        let leg = ambient
            .compose(pi, &u1e)?
            .ok_or_else(|| LimitError::ConstructionInvalid(format!(
                "projection for {g} does not compose with u1·e"
            )))?;
        result.legs.insert(g.clone(), leg);
    }
    Ok(result)
}

/// Exactness record for a functor over a sample of diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exactness {
    pub preserves_limits: bool,
    pub preserves_colimits: bool,
    pub creates_limits: bool,
    pub creates_colimits: bool,
    /// One line per sampled diagram, for the report.
    pub details: Vec<String>,
}

/// Applies a functor to a cone.
pub fn map_cone(
    f: &FunctorMap,
    cone: &Cone,
    cod: &GenCatPresentation,
) -> Result<Cone, TransformError> {
    let mut out = Cone::new(cone.orientation, f.apply(cod, &cone.vertex)?);
    for (i, leg) in &cone.legs {
        out.legs.insert(i.clone(), f.apply(cod, leg)?);
    }
    Ok(out)
}

/// Checks preservation and creation of limits and colimits over the
/// sampled diagrams: preservation means every found (co)limit cone maps
/// to a (co)limit of the composite diagram; creation means every
/// (co)limit downstairs has exactly one (co)limit preimage.
pub fn exactness_check(
    f: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
    sample: &[Diagram],
) -> Result<Exactness, LimitError> {
    let mut ex = Exactness {
        preserves_limits: true,
        preserves_colimits: true,
        creates_limits: true,
        creates_colimits: true,
        details: Vec::new(),
    };
    for d in sample {
        let image = Diagram {
            name: Symbol::new(format!("{}∘{}", f.name, d.name)),
            index: d.index.clone(),
            base: compose_functors(
                Symbol::new(format!("{}∘{}", f.name, d.base.name)),
                f,
                &d.base,
                cod,
            )?,
        };
        for orientation in [Orientation::Cone, Orientation::Cocone] {
            let upstairs = match orientation {
                Orientation::Cone => find_limits(d, dom)?,
                Orientation::Cocone => find_colimits(d, dom)?,
            };
            let downstairs = match orientation {
                Orientation::Cone => find_limits(&image, cod)?,
                Orientation::Cocone => find_colimits(&image, cod)?,
            };
            let mut preserved = true;
            for cone in &upstairs {
                let mapped = map_cone(f, cone, cod)?;
                if !is_limit(&mapped, &image, cod).0 {
                    preserved = false;
                }
            }
            let mut created = true;
            for down in &downstairs {
                let preimages = upstairs
                    .iter()
                    .filter(|up| map_cone(f, up, cod).ok().as_ref() == Some(down))
                    .count();
                if preimages != 1 {
                    created = false;
                }
            }
            match orientation {
                Orientation::Cone => {
                    ex.preserves_limits &= preserved;
                    ex.creates_limits &= created;
                    ex.details.push(format!(
                        "{}: limits up={} down={} preserved={} created={}",
                        d.name,
                        upstairs.len(),
                        downstairs.len(),
                        preserved,
                        created
                    ));
                }
                Orientation::Cocone => {
                    ex.preserves_colimits &= preserved;
                    ex.creates_colimits &= created;
                    ex.details.push(format!(
                        "{}: colimits up={} down={} preserved={} created={}",
                        d.name,
                        upstairs.len(),
                        downstairs.len(),
                        preserved,
                        created
                    ));
                }
            }
        }
    }
    Ok(ex)
}

/// All standard diagrams over at most `max_elems` level-0 generators of
/// the presentation: products of generator subsets plus equalizers of
/// parallel generator pairs.
pub fn standard_sample(
    ambient: &GenCatPresentation,
    max_elems: usize,
) -> Result<Vec<Diagram>, LimitError> {
    let gens: Vec<ElementRef> = ambient
        .generators()
        .map(|g| ElementRef::base(g.as_str()))
        .collect();
    let mut out = Vec::new();
    // Subsets of size 1..=max_elems, in index order.
    let n = gens.len();
    let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    while let Some(s) = stack.pop() {
        subsets.push(s.clone());
        if s.len() < max_elems {
            for j in (s.last().unwrap() + 1)..n {
                let mut t = s.clone();
                t.push(j);
                stack.push(t);
            }
        }
    }
    subsets.sort();
    for s in &subsets {
        let data: Vec<ElementRef> = s.iter().map(|&i| gens[i].clone()).collect();
        let mut d = make_standard_diagram(StandardKind::Product, &data, ambient)?;
        d.name = Symbol::new(format!("product{s:?}"));
        out.push(d);
    }
    for (i, f) in gens.iter().enumerate() {
        for g in gens.iter().skip(i) {
            if ambient.source(f)? == ambient.source(g)?
                && ambient.target(f)? == ambient.target(g)?
            {
                let mut d =
                    make_standard_diagram(StandardKind::Equalizer, &[f.clone(), g.clone()], ambient)?;
                d.name = Symbol::new(format!("equalizer({f},{g})"));
                out.push(d);
            }
        }
    }
    Ok(out)
}
