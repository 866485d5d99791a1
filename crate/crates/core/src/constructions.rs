//! Builders producing generalized categories from other data:
//! one-category absorption, flattenings, path categories of generalized
//! graphs, binary-tree categories, cell analysis, and globular-set
//! conversions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::kernel::{ElementRef, GenCatPresentation, KernelError, PresentationBuilder, Side};
use crate::symbol::Symbol;
use crate::transform::{FunctorMap, TransformError, Variance};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("presentation `{0}` is not a one-category")]
    NotOneCategory(Symbol),
    #[error("presentation `{0}` is not sharp and cellular")]
    NotCellular(Symbol),
    #[error("boundary iteration from {0} does not stabilize; dimension undefined")]
    DimUndefined(ElementRef),
    #[error("globularity violation at `{0}`")]
    NotGlobular(Symbol),
    #[error("cell `{0}` declared in more than one dimension")]
    DuplicateCell(Symbol),
    #[error("boundary map missing for cell `{0}`")]
    MissingBoundary(Symbol),
    #[error("a length or depth bound of zero is not usable")]
    ZeroBound,
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// A generalized directed graph: a carrier of edges with two endomaps.
/// Any pair of total maps qualifies; objects are their common fixed
/// points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenGraph {
    pub name: Symbol,
    pub edges: BTreeSet<Symbol>,
    pub src: BTreeMap<Symbol, Symbol>,
    pub tgt: BTreeMap<Symbol, Symbol>,
}

impl GenGraph {
    pub fn new(name: impl Into<Symbol>) -> Self {
        GenGraph {
            name: name.into(),
            edges: BTreeSet::new(),
            src: BTreeMap::new(),
            tgt: BTreeMap::new(),
        }
    }

    pub fn edge(
        mut self,
        name: impl Into<Symbol>,
        src: impl Into<Symbol>,
        tgt: impl Into<Symbol>,
    ) -> Self {
        let name = name.into();
        self.edges.insert(name.clone());
        self.src.insert(name.clone(), src.into());
        self.tgt.insert(name, tgt.into());
        self
    }

    /// Ordinary graphs are exactly the 1-dimensional generalized graphs:
    /// `ss = s` and `tt = t`.
    pub fn is_one_dimensional(&self) -> bool {
        self.edges.iter().all(|e| {
            let s = &self.src[e];
            let t = &self.tgt[e];
            self.src.get(s) == Some(s) && self.tgt.get(t) == Some(t)
        })
    }
}

/// A finite globular presentation: cells per dimension with boundary
/// maps one dimension down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobularPresentation {
    pub name: Symbol,
    /// Cells by dimension, `0..=n_max`. Symbol sets must be disjoint.
    pub cells: BTreeMap<u32, BTreeSet<Symbol>>,
    pub sigma: BTreeMap<Symbol, Symbol>,
    pub tau: BTreeMap<Symbol, Symbol>,
}

impl GlobularPresentation {
    pub fn new(name: impl Into<Symbol>) -> Self {
        GlobularPresentation {
            name: name.into(),
            cells: BTreeMap::new(),
            sigma: BTreeMap::new(),
            tau: BTreeMap::new(),
        }
    }

    pub fn cell(mut self, dim: u32, name: impl Into<Symbol>) -> Self {
        self.cells.entry(dim).or_default().insert(name.into());
        self
    }

    pub fn boundaries(
        mut self,
        name: impl Into<Symbol>,
        sigma: impl Into<Symbol>,
        tau: impl Into<Symbol>,
    ) -> Self {
        let name = name.into();
        self.sigma.insert(name.clone(), sigma.into());
        self.tau.insert(name, tau.into());
        self
    }

    pub fn n_max(&self) -> u32 {
        self.cells.keys().copied().max().unwrap_or(0)
    }

    /// Validates well-formedness plus the globular relations
    /// `σσ = στ` and `ττ = τσ` on the boundary maps.
    pub fn validate(&self) -> Result<(), ConstructError> {
        let mut seen: BTreeSet<&Symbol> = BTreeSet::new();
        for cells in self.cells.values() {
            for c in cells {
                if !seen.insert(c) {
                    return Err(ConstructError::DuplicateCell(c.clone()));
                }
            }
        }
        for (dim, cells) in &self.cells {
            if *dim == 0 {
                continue;
            }
            let below = self.cells.get(&(dim - 1)).cloned().unwrap_or_default();
            for c in cells {
                let s = self
                    .sigma
                    .get(c)
                    .ok_or_else(|| ConstructError::MissingBoundary(c.clone()))?;
                let t = self
                    .tau
                    .get(c)
                    .ok_or_else(|| ConstructError::MissingBoundary(c.clone()))?;
                if !below.contains(s) || !below.contains(t) {
                    return Err(ConstructError::NotGlobular(c.clone()));
                }
            }
        }
        for (dim, cells) in &self.cells {
            if *dim < 2 {
                continue;
            }
            for c in cells {
                let (s, t) = (&self.sigma[c], &self.tau[c]);
                if self.sigma.get(s) != self.sigma.get(t) || self.tau.get(s) != self.tau.get(t) {
                    return Err(ConstructError::NotGlobular(c.clone()));
                }
            }
        }
        Ok(())
    }
}

/// A planar binary tree of morphism symbols, the element shape of the
/// tree category over a one-category. Nodes delegate their boundaries
/// to their subtrees; leaves fall back to the boundaries of the carried
/// morphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum TreeElement {
    Leaf(Symbol),
    Node {
        root: Symbol,
        left: Box<TreeElement>,
        right: Box<TreeElement>,
    },
}

impl TreeElement {
    pub fn leaf(m: impl Into<Symbol>) -> Self {
        TreeElement::Leaf(m.into())
    }

    pub fn node(root: impl Into<Symbol>, left: TreeElement, right: TreeElement) -> Self {
        TreeElement::Node {
            root: root.into(),
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn root(&self) -> &Symbol {
        match self {
            TreeElement::Leaf(m) => m,
            TreeElement::Node { root, .. } => root,
        }
    }

    pub fn depth(&self) -> u32 {
        match self {
            TreeElement::Leaf(_) => 1,
            TreeElement::Node { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// Target of the tree: the left subtree, or for a leaf the leaf of
    /// the carried morphism's codomain.
    pub fn target(&self, base: &GenCatPresentation) -> TreeElement {
        match self {
            TreeElement::Leaf(m) => TreeElement::Leaf(base.declared_tgt(m).cloned().unwrap_or_else(|| m.clone())),
            TreeElement::Node { left, .. } => (**left).clone(),
        }
    }

    /// Source of the tree: the right subtree, or for a leaf the leaf of
    /// the carried morphism's domain.
    pub fn source(&self, base: &GenCatPresentation) -> TreeElement {
        match self {
            TreeElement::Leaf(m) => TreeElement::Leaf(base.declared_src(m).cloned().unwrap_or_else(|| m.clone())),
            TreeElement::Node { right, .. } => (**right).clone(),
        }
    }

    /// The defining condition: the root of the source subtree shares its
    /// domain with the root, and the root of the target subtree its
    /// codomain.
    pub fn satisfies_condition(&self, base: &GenCatPresentation) -> bool {
        match self {
            TreeElement::Leaf(m) => base.has_generator(m),
            TreeElement::Node { root, left, right } => {
                let (Some(dom_root), Some(cod_root)) =
                    (base.declared_src(root), base.declared_tgt(root))
                else {
                    return false;
                };
                left.satisfies_condition(base)
                    && right.satisfies_condition(base)
                    && base.declared_src(right.root()) == Some(dom_root)
                    && base.declared_tgt(left.root()) == Some(cod_root)
            }
        }
    }
}

impl fmt::Display for TreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeElement::Leaf(m) => write!(f, "({m})"),
            TreeElement::Node { root, left, right } => write!(f, "({root} {left} {right})"),
        }
    }
}

/// Requires a one-category.
fn require_one_category(p: &GenCatPresentation) -> Result<(), ConstructError> {
    if p.classify_category().is_one_category {
        Ok(())
    } else {
        Err(ConstructError::NotOneCategory(p.name().clone()))
    }
}

/// The generalized category generated by a one-category: identity
/// arrows are identified with their objects and the tables rewritten
/// accordingly.
pub fn from_category(p: &GenCatPresentation) -> Result<GenCatPresentation, ConstructError> {
    require_one_category(p)?;

    // A generator acts as the identity of object x when the composition
    // table realizes both unit laws for it everywhere they apply.
    let mut absorbed: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    for g in p.generators() {
        if p.is_object_generator(g) {
            continue;
        }
        let (s, t) = (&p.declared_src(g).unwrap(), &p.declared_tgt(g).unwrap());
        if s != t || !p.is_object_generator(s) {
            continue;
        }
        let x = (*s).clone();
        let unit_everywhere = p.generators().all(|f| {
            if p.is_object_generator(f) {
                return true;
            }
            let mut ok = true;
            if p.declared_tgt(f) == Some(&x) {
                ok &= p.comp_table().get(&(g.clone(), f.clone())).map(|v| &v.generator) == Some(f)
                    && p.comp_table()
                        .get(&(g.clone(), f.clone()))
                        .map(|v| v.level)
                        == Some(0);
            }
            if p.declared_src(f) == Some(&x) {
                ok &= p.comp_table().get(&(f.clone(), g.clone())).map(|v| &v.generator) == Some(f)
                    && p.comp_table()
                        .get(&(f.clone(), g.clone()))
                        .map(|v| v.level)
                        == Some(0);
            }
            ok
        });
        // The self-composite must also be the unit itself.
        let self_ok = p
            .comp_table()
            .get(&(g.clone(), g.clone()))
            .map(|v| v == &ElementRef::base(g.as_str()))
            .unwrap_or(false);
        if unit_everywhere && self_ok {
            absorbed.insert(g.clone(), x);
        }
    }

    let rename = |s: &Symbol| absorbed.get(s).cloned().unwrap_or_else(|| s.clone());
    let mut b = PresentationBuilder::new(p.name().clone())
        .mode(p.mode())
        .identity_bound(p.identity_bound());
    for g in p.generators() {
        if absorbed.contains_key(g) {
            continue;
        }
        if p.is_object_generator(g) {
            b = b.object(g.as_str());
        } else {
            b = b.arrow(
                g.as_str(),
                rename(p.declared_src(g).unwrap()).as_str(),
                rename(p.declared_tgt(g).unwrap()).as_str(),
            );
        }
    }
    for (a, c) in p.declared_order() {
        b = b.order(rename(a).as_str(), rename(c).as_str());
    }
    for ((l, r), v) in p.comp_table() {
        if absorbed.contains_key(l) || absorbed.contains_key(r) {
            continue;
        }
        let v = ElementRef::new(rename(&v.generator), v.level);
        b = b.comp_elem(l.as_str(), r.as_str(), v);
    }
    Ok(b.build()?)
}

/// Flattening variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlattenVariant {
    /// One object per element, one morphism per element, identities of
    /// the new objects given by the old identity elements.
    FlatCat,
    /// The further flattening toward a zero-category: identities become
    /// self-loop arrows, everything else a fresh object.
    FlatZero,
}

/// Name of the flattened object over an element.
pub fn flat_object_name(e: &ElementRef) -> Symbol {
    Symbol::new(format!("[{e}]"))
}

/// Name of the flattened morphism over an element.
pub fn flat_arrow_name(e: &ElementRef) -> Symbol {
    Symbol::new(format!("({e})"))
}

/// Flattens a generalized category to a one-category (or further to a
/// zero-category), over the enumerated fragment.
pub fn flatten(
    p: &GenCatPresentation,
    variant: FlattenVariant,
) -> Result<GenCatPresentation, ConstructError> {
    let name = match variant {
        FlattenVariant::FlatCat => Symbol::new(format!("{}_flat", p.name())),
        FlattenVariant::FlatZero => Symbol::new(format!("{}_flat0", p.name())),
    };
    let mut b = PresentationBuilder::new(name).identity_bound(p.identity_bound());
    match variant {
        FlattenVariant::FlatCat => {
            // Objects for every element; non-identity elements become
            // arrows. The arrow over an identity element is exactly the
            // identity of its base object, hence already absorbed.
            for e in p.elements() {
                b = b.object(flat_object_name(&e).as_str());
            }
            for e in p.elements() {
                if p.is_identity(&e) {
                    continue;
                }
                let s = flat_object_name(&p.source(&e)?);
                let t = flat_object_name(&p.target(&e)?);
                b = b.arrow(flat_arrow_name(&e).as_str(), s.as_str(), t.as_str());
            }
            for a in p.elements() {
                if p.is_identity(&a) {
                    continue;
                }
                for c in p.elements() {
                    if p.is_identity(&c) {
                        continue;
                    }
                    // Sharp: the flattened pair composes only at exact
                    // boundaries of the originals.
                    if p.source(&a)? != p.target(&c)? {
                        continue;
                    }
                    match p.compose(&a, &c) {
                        Ok(Some(v)) => {
                            let vname = if p.is_identity(&v) {
                                flat_object_name(&p.canonicalize(&v))
                            } else {
                                flat_arrow_name(&v)
                            };
                            b = b.comp(
                                flat_arrow_name(&a).as_str(),
                                flat_arrow_name(&c).as_str(),
                                vname.as_str(),
                            );
                        }
                        Ok(None) => {}
                        Err(KernelError::IncompleteComposition { .. })
                        | Err(KernelError::TruncatedComposition { .. }) => {
                            b = b.truncated_pair(
                                flat_arrow_name(&a).as_str(),
                                flat_arrow_name(&c).as_str(),
                            );
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            }
        }
        FlattenVariant::FlatZero => {
            // Identities map to self-loop arrows over the flattening of
            // their base; everything else becomes a fresh object.
            let flat_name = |e: &ElementRef| -> Symbol {
                if p.is_identity(e) && !p.is_object(e) {
                    flat_arrow_name(e)
                } else {
                    flat_object_name(e)
                }
            };
            for e in p.elements() {
                let n = flat_name(&e);
                if p.is_identity(&e) && !p.is_object(&e) {
                    let base = p.identity_base(&e).unwrap();
                    let bn = flat_name(&base);
                    b = b.arrow(n.as_str(), bn.as_str(), bn.as_str());
                    b = b.comp(n.as_str(), n.as_str(), n.as_str());
                } else {
                    b = b.object(n.as_str());
                }
            }
        }
    }
    Ok(b.build()?)
}

/// Transports a functor along [`FlattenVariant::FlatCat`].
pub fn flatten_functor(
    f: &FunctorMap,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
    flat_dom: &GenCatPresentation,
    flat_cod_name: &Symbol,
) -> Result<FunctorMap, ConstructError> {
    let mut out = FunctorMap::new(
        Symbol::new(format!("{}_flat", f.name)),
        flat_dom.name().clone(),
        flat_cod_name.clone(),
        Variance::Covariant,
    );
    let image_name = |v: &ElementRef| -> Symbol {
        if cod.is_identity(v) {
            flat_object_name(&cod.canonicalize(v))
        } else {
            flat_arrow_name(v)
        }
    };
    for e in dom.elements() {
        let fe = f.apply(cod, &e)?;
        // Object over e.
        out.insert(
            flat_object_name(&e),
            ElementRef::base(flat_object_name(&fe).as_str()),
        );
        // Arrow over e, when e is not an identity.
        if !dom.is_identity(&e) {
            out.insert(flat_arrow_name(&e), ElementRef::base(image_name(&fe).as_str()));
        }
    }
    Ok(out)
}

/// Path name for a sequence of edges (rightmost applied first).
fn path_name(edges: &[Symbol]) -> Symbol {
    let parts: Vec<&str> = edges.iter().map(|e| e.as_str()).collect();
    Symbol::new(format!("p:{}", parts.join(".")))
}

/// The (sharp) path category of a generalized graph: generators are
/// composable edge paths up to `max_len`, composition is concatenation
/// where the bound permits, marked truncated beyond it.
pub fn graph_path_category(
    g: &GenGraph,
    max_len: u32,
) -> Result<GenCatPresentation, ConstructError> {
    if max_len == 0 {
        return Err(ConstructError::ZeroBound);
    }

    // Paths of length 1..=max_len; a pair (e after f) concatenates when
    // src(last of e-path) ... concatenation e·f requires src(e) = tgt(f)
    // edge-wise at the seam.
    let mut paths: Vec<Vec<Symbol>> = g.edges.iter().map(|e| vec![e.clone()]).collect();
    let mut frontier = paths.clone();
    for _ in 1..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            let seam = &g.src[p.last().unwrap()];
            for e in &g.edges {
                if &g.tgt[e] == seam {
                    let mut q = p.clone();
                    q.push(e.clone());
                    next.push(q);
                }
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    paths.sort();
    paths.dedup();

    let is_object_edge = |e: &Symbol| g.src[e] == *e && g.tgt[e] == *e;
    let mut b = PresentationBuilder::new(Symbol::new(format!("{}_paths", g.name)));
    for p in &paths {
        if p.len() == 1 && is_object_edge(&p[0]) {
            b = b.object(path_name(p).as_str());
        } else {
            let src_edge = g.src[p.last().unwrap()].clone();
            let tgt_edge = g.tgt[&p[0]].clone();
            b = b.arrow(
                path_name(p).as_str(),
                path_name(&[src_edge]).as_str(),
                path_name(&[tgt_edge]).as_str(),
            );
        }
    }
    // Composition: q · p concatenates when src(q) = tgt(p) as edges. An
    // object edge at the seam absorbs (its path acts as the identity).
    for q in &paths {
        for p in &paths {
            let seam_q = &g.src[q.last().unwrap()];
            let seam_p = &g.tgt[&p[0]];
            if seam_q != seam_p {
                continue;
            }
            let q_is_id = q.len() == 1 && is_object_edge(&q[0]);
            let p_is_id = p.len() == 1 && is_object_edge(&p[0]);
            if q_is_id || p_is_id {
                // Structural unit law covers these.
                continue;
            }
            if (q.len() + p.len()) as u32 <= max_len {
                let mut v = q.clone();
                v.extend(p.iter().cloned());
                b = b.comp(path_name(q).as_str(), path_name(p).as_str(), path_name(&v).as_str());
            } else {
                b = b.truncated_pair(path_name(q).as_str(), path_name(p).as_str());
            }
        }
    }
    Ok(b.build()?)
}

/// Tree element name usable as a generator symbol.
fn tree_name(t: &TreeElement) -> Symbol {
    Symbol::new(t.to_string())
}

/// The sharp generalized category of planar binary trees of morphisms
/// over a one-category, truncated at `max_depth`.
///
/// Boundaries are the subtrees (falling back to boundary leaves at
/// leaves); the composite of two trees keeps the outer boundary
/// subtrees and composes the roots, so the boundary law holds by
/// construction.
pub fn tree_category(
    base: &GenCatPresentation,
    max_depth: u32,
) -> Result<GenCatPresentation, ConstructError> {
    require_one_category(base)?;
    if max_depth == 0 {
        return Err(ConstructError::ZeroBound);
    }

    // Enumerate valid trees by depth.
    let gens: Vec<Symbol> = base.generators().cloned().collect();
    let mut by_depth: Vec<Vec<TreeElement>> = Vec::new();
    by_depth.push(gens.iter().map(|m| TreeElement::leaf(m.clone())).collect());
    for d in 2..=max_depth {
        let prior: Vec<TreeElement> = by_depth.iter().flatten().cloned().collect();
        let mut level = Vec::new();
        for root in &gens {
            let (Some(dom_r), Some(cod_r)) = (base.declared_src(root), base.declared_tgt(root))
            else {
                continue;
            };
            for left in prior.iter().filter(|t| base.declared_tgt(t.root()) == Some(cod_r)) {
                for right in prior.iter().filter(|t| base.declared_src(t.root()) == Some(dom_r)) {
                    let t = TreeElement::node(root.clone(), left.clone(), right.clone());
                    if t.depth() == d {
                        level.push(t);
                    }
                }
            }
        }
        level.sort();
        level.dedup();
        by_depth.push(level);
    }
    let trees: Vec<TreeElement> = by_depth.into_iter().flatten().collect();
    debug_assert!(trees.iter().all(|t| t.satisfies_condition(base)));

    let is_object_tree =
        |t: &TreeElement| matches!(t, TreeElement::Leaf(m) if base.is_object_generator(m));
    let mut b = PresentationBuilder::new(Symbol::new(format!("{}_trees", base.name())));
    for t in &trees {
        if is_object_tree(t) {
            b = b.object(tree_name(t).as_str());
        } else {
            b = b.arrow(
                tree_name(t).as_str(),
                tree_name(&t.source(base)).as_str(),
                tree_name(&t.target(base)).as_str(),
            );
        }
    }

    // Composite of g after f: roots compose in the base, the target
    // subtree of g and source subtree of f carry over.
    for tg in &trees {
        for tf in &trees {
            if is_object_tree(tg) || is_object_tree(tf) {
                continue;
            }
            if tg.source(base) != tf.target(base) {
                continue;
            }
            let root = match base.compose(
                &ElementRef::base(tg.root().as_str()),
                &ElementRef::base(tf.root().as_str()),
            ) {
                Ok(Some(v)) if v.level == 0 => v.generator,
                _ => {
                    b = b.truncated_pair(tree_name(tg).as_str(), tree_name(tf).as_str());
                    continue;
                }
            };
            let composed = TreeElement::node(root, tg.target(base), tf.source(base));
            if composed.depth() <= max_depth && trees.contains(&composed) {
                b = b.comp(
                    tree_name(tg).as_str(),
                    tree_name(tf).as_str(),
                    tree_name(&composed).as_str(),
                );
            } else {
                b = b.truncated_pair(tree_name(tg).as_str(), tree_name(tf).as_str());
            }
        }
    }
    Ok(b.build()?)
}

/// Composes two trees directly, or reports truncation.
pub fn compose_trees(
    base: &GenCatPresentation,
    g: &TreeElement,
    f: &TreeElement,
    max_depth: u32,
) -> Result<Option<TreeElement>, ConstructError> {
    if g.source(base) != f.target(base) {
        return Ok(None);
    }
    let root = match base.compose(
        &ElementRef::base(g.root().as_str()),
        &ElementRef::base(f.root().as_str()),
    )? {
        Some(v) if v.level == 0 => v.generator,
        _ => return Ok(None),
    };
    let composed = TreeElement::node(root, g.target(base), f.source(base));
    if composed.depth() > max_depth {
        return Err(ConstructError::Kernel(KernelError::TruncatedComposition {
            left: ElementRef::base(tree_name(g).as_str()),
            right: ElementRef::base(tree_name(f).as_str()),
        }));
    }
    Ok(Some(composed))
}

/// Cell analysis record for one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellAnalysis {
    /// Least n with `sⁿe = sⁿ⁺¹e`.
    pub dim: u32,
    /// `is_k_cell[k]` for k in `0..=dim`.
    pub is_k_cell: Vec<bool>,
    pub is_cellular_element: bool,
}

fn iterate_boundary(
    p: &GenCatPresentation,
    e: &ElementRef,
    side: Side,
    n: u32,
) -> Result<ElementRef, KernelError> {
    let mut cur = p.canonicalize(e);
    for _ in 0..n {
        cur = p.boundary(&cur, side)?;
    }
    Ok(cur)
}

/// Dimension and k-cell analysis. The dimension is the least n at which
/// the source iteration stabilizes; a non-stabilizing iteration is an
/// error.
pub fn cell_analysis(
    p: &GenCatPresentation,
    e: &ElementRef,
) -> Result<CellAnalysis, ConstructError> {
    p.validate(e)?;
    let e = p.canonicalize(e);
    let bound = p.elements().len() as u32 + e.level + 2;
    let mut dim = None;
    let mut cur = e.clone();
    for n in 0..bound {
        let next = p.boundary(&cur, Side::Source)?;
        if next == cur {
            dim = Some(n);
            break;
        }
        cur = next;
    }
    let Some(dim) = dim else {
        return Err(ConstructError::DimUndefined(e));
    };

    let mut is_k_cell = Vec::new();
    for k in 0..=dim {
        is_k_cell.push(is_k_cell_check(p, &e, k)?);
    }
    let is_cellular = p.is_object(&e) || is_k_cell.iter().skip(1).any(|b| *b);
    Ok(CellAnalysis {
        dim,
        is_k_cell,
        is_cellular_element: is_cellular,
    })
}

/// The three k-cell clauses: boundaries reach objects at exactly depth
/// k, one-step globularity, and the boundaries are (k−1)-cells.
fn is_k_cell_check(
    p: &GenCatPresentation,
    e: &ElementRef,
    k: u32,
) -> Result<bool, ConstructError> {
    if k == 0 {
        return Ok(p.is_object(e));
    }
    for n in 0..k {
        if p.is_object(&iterate_boundary(p, e, Side::Source, n)?)
            || p.is_object(&iterate_boundary(p, e, Side::Target, n)?)
        {
            return Ok(false);
        }
    }
    if !p.is_object(&iterate_boundary(p, e, Side::Source, k)?)
        || !p.is_object(&iterate_boundary(p, e, Side::Target, k)?)
    {
        return Ok(false);
    }
    let (s, t) = (p.source(e)?, p.target(e)?);
    // Globularity: the two boundaries are parallel. Bites only from
    // dimension 2 down; 1-cell boundaries are objects and unconstrained.
    if k >= 2 && (p.source(&t)? != p.source(&s)? || p.target(&s)? != p.target(&t)?) {
        return Ok(false);
    }
    Ok(is_k_cell_check(p, &s, k - 1)? && is_k_cell_check(p, &t, k - 1)?)
}

/// True when every element is cellular and the presentation is sharp.
pub fn is_cellular(p: &GenCatPresentation) -> bool {
    p.classify_category().is_sharp
        && p.elements().iter().all(|e| {
            cell_analysis(p, e)
                .map(|c| c.is_cellular_element)
                .unwrap_or(false)
        })
}

/// Buckets the level-0 generators of a sharp cellular presentation by
/// dimension, with σ and τ the source and target maps.
pub fn to_globular(
    p: &GenCatPresentation,
    n_max: u32,
) -> Result<GlobularPresentation, ConstructError> {
    if !is_cellular(p) {
        return Err(ConstructError::NotCellular(p.name().clone()));
    }
    let mut g = GlobularPresentation::new(Symbol::new(format!("{}_glob", p.name())));
    for gen in p.generators() {
        let e = ElementRef::base(gen.as_str());
        let dim = cell_analysis(p, &e)?.dim;
        if dim > n_max {
            continue;
        }
        g = g.cell(dim, gen.clone());
        if dim > 0 {
            g = g.boundaries(
                gen.clone(),
                p.source(&e)?.generator,
                p.target(&e)?.generator,
            );
        }
    }
    g.validate()?;
    Ok(g)
}

/// The free sharp cellular presentation on a globular set: one generator
/// per cell, boundaries from σ and τ, no nontrivial composites. Pairs
/// the free object would compose are marked truncated: their composites
/// are formal elements beyond the presented fragment.
pub fn from_globular(g: &GlobularPresentation) -> Result<GenCatPresentation, ConstructError> {
    g.validate()?;
    let mut b = PresentationBuilder::new(Symbol::new(format!("{}_gencat", g.name)));
    let mut nonobjects: Vec<(Symbol, &Symbol, &Symbol)> = Vec::new();
    for (dim, cells) in &g.cells {
        for c in cells {
            if *dim == 0 {
                b = b.object(c.as_str());
            } else {
                b = b.arrow(c.as_str(), g.sigma[c].as_str(), g.tau[c].as_str());
                nonobjects.push((c.clone(), &g.sigma[c], &g.tau[c]));
            }
        }
    }
    for (a, sa, _) in &nonobjects {
        for (c, _, tc) in &nonobjects {
            if sa == tc {
                b = b.truncated_pair(a.as_str(), c.as_str());
            }
        }
    }
    Ok(b.build()?)
}

/// Tree-likeness: every hom set has at most one element and boundary
/// operations may loop only through objects.
pub fn is_tree_like(p: &GenCatPresentation) -> Result<bool, ConstructError> {
    let elements = p.elements();
    for a in &elements {
        for b in &elements {
            if p.hom_set(a, b)?.len() > 1 {
                return Ok(false);
            }
        }
    }
    // Boundary cycles: walk the src/tgt successor graph; any cycle node
    // must be an object.
    for e in &elements {
        let mut stack = vec![(e.clone(), 0u32)];
        let mut seen = BTreeSet::new();
        while let Some((cur, depth)) = stack.pop() {
            if depth > elements.len() as u32 + 2 {
                break;
            }
            for side in [Side::Source, Side::Target] {
                let b = p.boundary(&cur, side)?;
                if b == *e && !p.is_object(e) {
                    return Ok(false);
                }
                if b != cur && seen.insert((b.clone(), side as usize)) {
                    stack.push((b, depth + 1));
                }
            }
        }
    }
    Ok(true)
}
