//! Finite presentations and the elementary queries over them.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::element::ElementRef;
use crate::symbol::Symbol;

/// Identity-law semantics of a presentation.
///
/// `Strict` implements the unit laws literally: an identity absorbs into
/// any composite its order admits, even across a strict upcast. For a
/// nontrivial order this is inconsistent with the boundary law, which the
/// checker will report. `Lax` restricts the unit laws to exact boundary
/// matches and routes strict-upcast composites involving identities
/// through declared `coerce` entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Mode {
    Strict,
    Lax,
}

/// Which boundary of an element to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Source,
    Target,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Source => Side::Target,
            Side::Target => Side::Source,
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(Symbol),
    #[error("element {0} exceeds the identity bound {1}")]
    LevelOutOfBounds(ElementRef, u32),
    #[error("identity of {0} is truncated at the identity bound {1}")]
    Truncated(ElementRef, u32),
    #[error("incomplete presentation: no entry for the composable pair ({left}, {right})")]
    IncompleteComposition { left: ElementRef, right: ElementRef },
    #[error("composite of ({left}, {right}) lies beyond the presented truncation depth")]
    TruncatedComposition { left: ElementRef, right: ElementRef },
    #[error("presentation `{0}` is not a one-category")]
    NotOneCategory(Symbol),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(Symbol),
    #[error("duplicate composition entry for ({0}, {1})")]
    DuplicateComposition(Symbol, Symbol),
    #[error("duplicate coercion entry")]
    DuplicateCoercion,
    #[error("boundary iteration from {0} does not stabilize")]
    NonStabilizing(ElementRef),
}

/// A finite presentation of a generalized category.
///
/// Carries the generating data (generators, boundary maps, order pairs,
/// composition and coercion tables) plus the identity-tower truncation
/// depth and the identity-law mode. The reflexive-transitive closure of
/// the declared order is precomputed at build time; everything else is
/// answered on demand. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenCatPresentation {
    name: Symbol,
    generators: BTreeSet<Symbol>,
    src: BTreeMap<Symbol, Symbol>,
    tgt: BTreeMap<Symbol, Symbol>,
    order: BTreeSet<(Symbol, Symbol)>,
    comp: BTreeMap<(Symbol, Symbol), ElementRef>,
    coerce_left: BTreeMap<(Symbol, Symbol), ElementRef>,
    coerce_right: BTreeMap<(Symbol, Symbol), ElementRef>,
    truncated: BTreeSet<(Symbol, Symbol)>,
    identity_bound: u32,
    mode: Mode,
    closure: BTreeMap<Symbol, BTreeSet<Symbol>>,
}

/// Element classification record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClass {
    pub is_object: bool,
    pub is_identity: bool,
    pub is_subject: bool,
    /// `None` means the identity exists but lies beyond the truncation
    /// bound (never a silent wraparound).
    pub identity_of: Option<ElementRef>,
}

/// Category-level classification record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryClass {
    pub is_sharp: bool,
    pub is_casting: bool,
    pub is_zero_category: bool,
    pub is_one_category: bool,
    pub is_finitely_generated: bool,
}

pub const DEFAULT_IDENTITY_BOUND: u32 = 2;

impl GenCatPresentation {
    pub fn name(&self) -> &Symbol {
        &self.name
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn identity_bound(&self) -> u32 {
        self.identity_bound
    }

    pub fn generators(&self) -> impl Iterator<Item = &Symbol> {
        self.generators.iter()
    }

    pub fn has_generator(&self, g: &Symbol) -> bool {
        self.generators.contains(g)
    }

    pub fn declared_order(&self) -> &BTreeSet<(Symbol, Symbol)> {
        &self.order
    }

    pub fn comp_table(&self) -> &BTreeMap<(Symbol, Symbol), ElementRef> {
        &self.comp
    }

    pub fn coerce_left_table(&self) -> &BTreeMap<(Symbol, Symbol), ElementRef> {
        &self.coerce_left
    }

    pub fn coerce_right_table(&self) -> &BTreeMap<(Symbol, Symbol), ElementRef> {
        &self.coerce_right
    }

    pub fn truncated_pairs(&self) -> &BTreeSet<(Symbol, Symbol)> {
        &self.truncated
    }

    pub fn declared_src(&self, g: &Symbol) -> Option<&Symbol> {
        self.src.get(g)
    }

    pub fn declared_tgt(&self, g: &Symbol) -> Option<&Symbol> {
        self.tgt.get(g)
    }

    /// True when the generator is an object: fixed by both boundary maps.
    pub fn is_object_generator(&self, g: &Symbol) -> bool {
        self.src.get(g) == Some(g) && self.tgt.get(g) == Some(g)
    }

    /// The canonical element over `generator` at the given tower level.
    /// Towers over objects collapse to the object itself.
    pub fn element(&self, generator: impl Into<Symbol>, level: u32) -> ElementRef {
        let generator = generator.into();
        if self.is_object_generator(&generator) {
            ElementRef::new(generator, 0)
        } else {
            ElementRef::new(generator, level)
        }
    }

    pub fn canonicalize(&self, e: &ElementRef) -> ElementRef {
        self.element(e.generator.clone(), e.level)
    }

    /// Validates that `e` names a declared generator and respects the
    /// enumeration bound (boundary queries admit one extra level).
    pub fn validate(&self, e: &ElementRef) -> Result<(), KernelError> {
        if !self.generators.contains(&e.generator) {
            return Err(KernelError::UnknownGenerator(e.generator.clone()));
        }
        if e.level > self.identity_bound + 1 {
            return Err(KernelError::LevelOutOfBounds(
                e.clone(),
                self.identity_bound,
            ));
        }
        Ok(())
    }

    /// Every element with level at most the identity bound, in the
    /// deterministic (generator, level) order.
    pub fn elements(&self) -> Vec<ElementRef> {
        let mut out = Vec::new();
        for g in &self.generators {
            if self.is_object_generator(g) {
                out.push(ElementRef::new(g.clone(), 0));
            } else {
                for level in 0..=self.identity_bound {
                    out.push(ElementRef::new(g.clone(), level));
                }
            }
        }
        out
    }

    /// Source or target of an element. For towers this walks one level
    /// down; at level 0 it reads the declared boundary maps.
    pub fn boundary(&self, e: &ElementRef, side: Side) -> Result<ElementRef, KernelError> {
        self.validate(e)?;
        if e.level >= 1 {
            return Ok(self.element(e.generator.clone(), e.level - 1));
        }
        let map = match side {
            Side::Source => &self.src,
            Side::Target => &self.tgt,
        };
        let b = map
            .get(&e.generator)
            .ok_or_else(|| KernelError::UnknownGenerator(e.generator.clone()))?;
        Ok(self.element(b.clone(), 0))
    }

    pub fn source(&self, e: &ElementRef) -> Result<ElementRef, KernelError> {
        self.boundary(e, Side::Source)
    }

    pub fn target(&self, e: &ElementRef) -> Result<ElementRef, KernelError> {
        self.boundary(e, Side::Target)
    }

    pub fn is_object(&self, e: &ElementRef) -> bool {
        e.level == 0 && self.is_object_generator(&e.generator)
    }

    /// True when `e` is structurally an identity: an object, or any
    /// tower element of level ≥ 1.
    pub fn is_identity(&self, e: &ElementRef) -> bool {
        e.level >= 1 || self.is_object(e)
    }

    /// The element an identity sits over; `None` if `e` is not an identity.
    pub fn identity_base(&self, e: &ElementRef) -> Option<ElementRef> {
        if self.is_object(e) {
            Some(e.clone())
        } else if e.level >= 1 {
            Some(self.element(e.generator.clone(), e.level - 1))
        } else {
            None
        }
    }

    /// The identity on `e`. Objects are their own identities; towers
    /// beyond the bound signal truncation explicitly.
    pub fn identity_of(&self, e: &ElementRef) -> Result<ElementRef, KernelError> {
        self.validate(e)?;
        if self.is_object(e) {
            return Ok(e.clone());
        }
        if e.level + 1 > self.identity_bound {
            return Err(KernelError::Truncated(e.clone(), self.identity_bound));
        }
        Ok(ElementRef::new(e.generator.clone(), e.level + 1))
    }

    /// Generator-level reflexive-transitive order closure.
    pub fn gen_leq(&self, a: &Symbol, b: &Symbol) -> bool {
        a == b || self.closure.get(a).is_some_and(|s| s.contains(b))
    }

    /// True when some order path from `a` to `b` passes through an
    /// object generator (either endpoint counts).
    fn order_path_through_object(&self, a: &Symbol, b: &Symbol) -> bool {
        self.generators
            .iter()
            .filter(|o| self.is_object_generator(o))
            .any(|o| self.gen_leq(a, o) && self.gen_leq(o, b))
    }

    /// The element order `a ⊴ b`.
    ///
    /// Declared on generators and lifted level-wise along the identity
    /// congruence `a ⊴ b ⟹ 1_a ⊴ 1_b`. Because towers over objects
    /// collapse, a lift step through an object forgets the level; levels
    /// may therefore differ exactly when an order path passes through an
    /// object generator.
    pub fn leq(&self, a: &ElementRef, b: &ElementRef) -> bool {
        let a = self.canonicalize(a);
        let b = self.canonicalize(b);
        if a == b {
            return true;
        }
        if !self.gen_leq(&a.generator, &b.generator) {
            return false;
        }
        if a.generator == b.generator && a.level != b.level {
            // Distinct levels of one tower relate only through an order
            // cycle via an object, which antisymmetry rules out.
            return false;
        }
        a.level == b.level || self.order_path_through_object(&a.generator, &b.generator)
    }

    /// Composition `a · b`, defined exactly when `source(a) ⊴ target(b)`.
    ///
    /// Returns `Ok(None)` for non-composable pairs. Exact-boundary
    /// composites with an identity absorb structurally; strict-upcast
    /// composites involving identities consult the coercion tables in lax
    /// mode and follow the literal unit laws in strict mode; everything
    /// else reads the composition table. Missing entries surface as
    /// [`KernelError::IncompleteComposition`].
    pub fn compose(
        &self,
        a: &ElementRef,
        b: &ElementRef,
    ) -> Result<Option<ElementRef>, KernelError> {
        self.validate(a)?;
        self.validate(b)?;
        let a = self.canonicalize(a);
        let b = self.canonicalize(b);
        let sa = self.source(&a)?;
        let tb = self.target(&b)?;
        if !self.leq(&sa, &tb) {
            return Ok(None);
        }
        // Exact-boundary unit laws, valid in both modes.
        if sa == tb {
            if self.identity_base(&a).as_ref() == Some(&tb) {
                return Ok(Some(b));
            }
            if self.identity_base(&b).as_ref() == Some(&sa) {
                return Ok(Some(a));
            }
            return self.table_composite(&a, &b);
        }
        // Strict upcast.
        match self.mode {
            Mode::Strict => {
                if self.is_identity(&a) {
                    return Ok(Some(b));
                }
                if self.is_identity(&b) {
                    return Ok(Some(a));
                }
                self.table_composite(&a, &b)
            }
            Mode::Lax => {
                let left_base = self.identity_base(&a);
                let right_base = self.identity_base(&b);
                if left_base.is_none() && right_base.is_none() {
                    return self.table_composite(&a, &b);
                }
                // Both factors may be identities (objects, in
                // particular); either coercion table can carry the entry.
                if let Some(base) = &left_base {
                    if base.level == 0 && b.level == 0 {
                        if let Some(v) = self
                            .coerce_left
                            .get(&(base.generator.clone(), b.generator.clone()))
                        {
                            return Ok(Some(self.canonicalize(v)));
                        }
                    }
                }
                if let Some(base) = &right_base {
                    if base.level == 0 && a.level == 0 {
                        if let Some(v) = self
                            .coerce_right
                            .get(&(a.generator.clone(), base.generator.clone()))
                        {
                            return Ok(Some(self.canonicalize(v)));
                        }
                    }
                }
                Err(KernelError::IncompleteComposition { left: a, right: b })
            }
        }
    }

    fn table_composite(
        &self,
        a: &ElementRef,
        b: &ElementRef,
    ) -> Result<Option<ElementRef>, KernelError> {
        if a.level > 0 || b.level > 0 {
            // Non-identity elements are level 0; a table lookup at higher
            // levels means an identity pair escaped the unit laws, which
            // only happens for unpresentable coercions.
            return Err(KernelError::IncompleteComposition {
                left: a.clone(),
                right: b.clone(),
            });
        }
        let key = (a.generator.clone(), b.generator.clone());
        if let Some(v) = self.comp.get(&key) {
            return Ok(Some(self.canonicalize(v)));
        }
        if self.truncated.contains(&key) {
            return Err(KernelError::TruncatedComposition {
                left: a.clone(),
                right: b.clone(),
            });
        }
        Err(KernelError::IncompleteComposition {
            left: a.clone(),
            right: b.clone(),
        })
    }

    /// The hom set `{e | source(e) = a, target(e) = b}` over the
    /// enumerated fragment.
    pub fn hom_set(
        &self,
        a: &ElementRef,
        b: &ElementRef,
    ) -> Result<Vec<ElementRef>, KernelError> {
        self.validate(a)?;
        self.validate(b)?;
        let a = self.canonicalize(a);
        let b = self.canonicalize(b);
        let mut out = Vec::new();
        for e in self.elements() {
            if self.source(&e)? == a && self.target(&e)? == b {
                out.push(e);
            }
        }
        Ok(out)
    }

    /// Recursive height: 0 on objects, `1 + max(height(source),
    /// height(target))` otherwise, `None` (infinity) when the boundary
    /// graph reaches a cycle through a non-object.
    pub fn height(&self, e: &ElementRef) -> Result<Option<u64>, KernelError> {
        self.validate(e)?;
        let e = self.canonicalize(e);
        // Level n sits n boundary steps above its generator.
        let g = ElementRef::new(e.generator.clone(), 0);
        let mut memo: BTreeMap<Symbol, Option<Option<u64>>> = BTreeMap::new();
        let h = self.generator_height(&g.generator, &mut memo)?;
        Ok(h.map(|h| h + u64::from(e.level)))
    }

    /// Height of a level-0 generator with cycle detection. `memo` holds
    /// `None` for in-progress nodes; hitting one means a boundary cycle.
    fn generator_height(
        &self,
        g: &Symbol,
        memo: &mut BTreeMap<Symbol, Option<Option<u64>>>,
    ) -> Result<Option<u64>, KernelError> {
        if self.is_object_generator(g) {
            return Ok(Some(0));
        }
        match memo.get(g) {
            Some(Some(h)) => return Ok(*h),
            Some(None) => return Ok(None),
            None => {}
        }
        memo.insert(g.clone(), None);
        let s = self.src[g].clone();
        let t = self.tgt[g].clone();
        let hs = self.generator_height(&s, memo)?;
        let ht = self.generator_height(&t, memo)?;
        let h = match (hs, ht) {
            (Some(x), Some(y)) => Some(1 + x.max(y)),
            _ => None,
        };
        memo.insert(g.clone(), Some(h));
        Ok(h)
    }

    /// Per-element classification.
    pub fn classify_element(&self, e: &ElementRef) -> Result<ElementClass, KernelError> {
        self.validate(e)?;
        let e = self.canonicalize(e);
        let is_object = self.is_object(&e);
        let is_identity = self.is_identity(&e);
        let mut is_subject = is_object;
        if !is_subject {
            for f in self.elements() {
                if self.source(&f)? == e || self.target(&f)? == e {
                    is_subject = true;
                    break;
                }
            }
        }
        let identity_of = self.identity_of(&e).ok();
        Ok(ElementClass {
            is_object,
            is_identity,
            is_subject,
            identity_of,
        })
    }

    /// Category-level classification.
    pub fn classify_category(&self) -> CategoryClass {
        let is_sharp = self
            .generators
            .iter()
            .all(|a| self.closure.get(a).map_or(true, |s| s.iter().all(|b| b == a)));
        let is_zero_category = self
            .generators
            .iter()
            .all(|g| self.is_object_generator(g));
        let is_one_category = self.generators.iter().all(|g| {
            self.is_object_generator(g)
                || (self.is_object_generator(&self.src[g]) && self.is_object_generator(&self.tgt[g]))
        });
        CategoryClass {
            is_sharp,
            is_casting: !is_sharp,
            is_zero_category,
            is_one_category,
            is_finitely_generated: true,
        }
    }

    /// Subjects of the presented fragment: elements occurring as a
    /// source or target of some enumerated element.
    pub fn subjects(&self) -> BTreeSet<ElementRef> {
        let mut out = BTreeSet::new();
        for e in self.elements() {
            if let (Ok(s), Ok(t)) = (self.source(&e), self.target(&e)) {
                out.insert(s);
                out.insert(t);
            }
        }
        out
    }

    /// The opposite presentation: boundary maps swapped, composition
    /// transposed, order reversed, coercion tables exchanged. Involutive
    /// up to the `_op` name toggle.
    pub fn opposite(&self) -> GenCatPresentation {
        let name = match self.name.as_str().strip_suffix("_op") {
            Some(stem) => Symbol::new(stem),
            None => Symbol::new(format!("{}_op", self.name)),
        };
        GenCatPresentation {
            name,
            generators: self.generators.clone(),
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            order: self.order.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            comp: self
                .comp
                .iter()
                .map(|((a, b), v)| ((b.clone(), a.clone()), v.clone()))
                .collect(),
            coerce_left: self
                .coerce_right
                .iter()
                .map(|((f, x), v)| ((x.clone(), f.clone()), v.clone()))
                .collect(),
            coerce_right: self
                .coerce_left
                .iter()
                .map(|((x, f), v)| ((f.clone(), x.clone()), v.clone()))
                .collect(),
            truncated: self
                .truncated
                .iter()
                .map(|(a, b)| (b.clone(), a.clone()))
                .collect(),
            identity_bound: self.identity_bound,
            mode: self.mode,
            closure: reflexive_transitive_closure(&self.generators, {
                let rev: BTreeSet<(Symbol, Symbol)> =
                    self.order.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
                rev
            }),
        }
    }
}

fn reflexive_transitive_closure(
    generators: &BTreeSet<Symbol>,
    pairs: BTreeSet<(Symbol, Symbol)>,
) -> BTreeMap<Symbol, BTreeSet<Symbol>> {
    let mut closure: BTreeMap<Symbol, BTreeSet<Symbol>> = BTreeMap::new();
    for g in generators {
        closure.entry(g.clone()).or_default().insert(g.clone());
    }
    for (a, b) in &pairs {
        closure.entry(a.clone()).or_default().insert(b.clone());
    }
    // Worklist closure; generator counts are small.
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot: Vec<(Symbol, Vec<Symbol>)> = closure
            .iter()
            .map(|(k, v)| (k.clone(), v.iter().cloned().collect()))
            .collect();
        for (a, reach) in snapshot {
            for b in reach {
                let next: Vec<Symbol> = closure.get(&b).map(|s| s.iter().cloned().collect()).unwrap_or_default();
                for c in next {
                    if closure.get_mut(&a).unwrap().insert(c) {
                        changed = true;
                    }
                }
            }
        }
    }
    closure
}

/// Builder for [`GenCatPresentation`]. Validates references and
/// duplicate entries at `build` time; axiom violations are left to the
/// checker.
#[derive(Debug, Clone, Default)]
pub struct PresentationBuilder {
    name: Symbol,
    generators: BTreeSet<Symbol>,
    src: BTreeMap<Symbol, Symbol>,
    tgt: BTreeMap<Symbol, Symbol>,
    order: BTreeSet<(Symbol, Symbol)>,
    comp: BTreeMap<(Symbol, Symbol), ElementRef>,
    coerce_left: BTreeMap<(Symbol, Symbol), ElementRef>,
    coerce_right: BTreeMap<(Symbol, Symbol), ElementRef>,
    truncated: BTreeSet<(Symbol, Symbol)>,
    identity_bound: u32,
    mode: Mode,
    duplicate: Option<KernelError>,
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Strict
    }
}

impl PresentationBuilder {
    pub fn new(name: impl Into<Symbol>) -> Self {
        PresentationBuilder {
            name: name.into(),
            identity_bound: DEFAULT_IDENTITY_BOUND,
            ..Default::default()
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn identity_bound(mut self, bound: u32) -> Self {
        self.identity_bound = bound;
        self
    }

    pub fn object(mut self, name: impl Into<Symbol>) -> Self {
        let name = name.into();
        self.declare(name.clone(), name.clone(), name);
        self
    }

    pub fn arrow(
        mut self,
        name: impl Into<Symbol>,
        src: impl Into<Symbol>,
        tgt: impl Into<Symbol>,
    ) -> Self {
        self.declare(name.into(), src.into(), tgt.into());
        self
    }

    fn declare(&mut self, name: Symbol, src: Symbol, tgt: Symbol) {
        if !self.generators.insert(name.clone()) {
            self.duplicate
                .get_or_insert(KernelError::DuplicateGenerator(name.clone()));
        }
        self.src.insert(name.clone(), src);
        self.tgt.insert(name, tgt);
    }

    pub fn order(mut self, a: impl Into<Symbol>, b: impl Into<Symbol>) -> Self {
        self.order.insert((a.into(), b.into()));
        self
    }

    pub fn comp(
        self,
        left: impl Into<Symbol>,
        right: impl Into<Symbol>,
        value: impl Into<ElementRef>,
    ) -> Self {
        self.comp_elem(left, right, value.into())
    }

    pub fn comp_elem(
        mut self,
        left: impl Into<Symbol>,
        right: impl Into<Symbol>,
        value: ElementRef,
    ) -> Self {
        let key = (left.into(), right.into());
        if self.comp.contains_key(&key) {
            self.duplicate
                .get_or_insert(KernelError::DuplicateComposition(key.0.clone(), key.1.clone()));
        }
        self.comp.insert(key, value);
        self
    }

    /// `coerce idof(base) . right = value`
    pub fn coerce_left(
        mut self,
        base: impl Into<Symbol>,
        right: impl Into<Symbol>,
        value: impl Into<ElementRef>,
    ) -> Self {
        let key = (base.into(), right.into());
        if self.coerce_left.contains_key(&key) {
            self.duplicate.get_or_insert(KernelError::DuplicateCoercion);
        }
        self.coerce_left.insert(key, value.into());
        self
    }

    /// `coerce left . idof(base) = value`
    pub fn coerce_right(
        mut self,
        left: impl Into<Symbol>,
        base: impl Into<Symbol>,
        value: impl Into<ElementRef>,
    ) -> Self {
        let key = (left.into(), base.into());
        if self.coerce_right.contains_key(&key) {
            self.duplicate.get_or_insert(KernelError::DuplicateCoercion);
        }
        self.coerce_right.insert(key, value.into());
        self
    }

    /// Marks a composable pair whose composite lies beyond the presented
    /// truncation depth (used by depth-bounded constructions).
    pub fn truncated_pair(mut self, left: impl Into<Symbol>, right: impl Into<Symbol>) -> Self {
        self.truncated.insert((left.into(), right.into()));
        self
    }

    pub fn build(self) -> Result<GenCatPresentation, KernelError> {
        if let Some(err) = self.duplicate {
            return Err(err);
        }
        let check_gen = |s: &Symbol| -> Result<(), KernelError> {
            if self.generators.contains(s) {
                Ok(())
            } else {
                Err(KernelError::UnknownGenerator(s.clone()))
            }
        };
        for (g, s) in self.src.iter().chain(self.tgt.iter()) {
            check_gen(g)?;
            check_gen(s)?;
        }
        for (a, b) in &self.order {
            check_gen(a)?;
            check_gen(b)?;
        }
        for ((a, b), v) in self
            .comp
            .iter()
            .chain(self.coerce_left.iter())
            .chain(self.coerce_right.iter())
        {
            check_gen(a)?;
            check_gen(b)?;
            check_gen(&v.generator)?;
        }
        for (a, b) in &self.truncated {
            check_gen(a)?;
            check_gen(b)?;
        }
        let closure = reflexive_transitive_closure(&self.generators, self.order.clone());
        Ok(GenCatPresentation {
            name: self.name,
            generators: self.generators,
            src: self.src,
            tgt: self.tgt,
            order: self.order,
            comp: self.comp,
            coerce_left: self.coerce_left,
            coerce_right: self.coerce_right,
            truncated: self.truncated,
            identity_bound: self.identity_bound,
            mode: self.mode,
            closure,
        })
    }
}
