//! Construction builders: absorption, flattenings, path and tree
//! categories, cells, globular conversions.

use gencat::constructions::*;
use gencat::fixtures::*;
use gencat::kernel::{
    check_axioms, CheckProfile, ElementRef, PresentationBuilder, Side,
};
use gencat::transform::FunctorMap;
use gencat::Symbol;

fn e(name: &str) -> ElementRef {
    ElementRef::base(name)
}

#[test]
fn from_category_absorbs_explicit_identities() {
    // Z3 written with a separate identity arrow `id` alongside the
    // object X.
    let raw = PresentationBuilder::new("Z3raw")
        .object("X")
        .arrow("id", "X", "X")
        .arrow("g1", "X", "X")
        .arrow("g2", "X", "X")
        .comp("id", "id", "id")
        .comp("id", "g1", "g1")
        .comp("g1", "id", "g1")
        .comp("id", "g2", "g2")
        .comp("g2", "id", "g2")
        .comp("g1", "g1", "g2")
        .comp("g1", "g2", "id")
        .comp("g2", "g1", "id")
        .comp("g2", "g2", "g1")
        .build()
        .unwrap();
    // The raw form is consistent (object-identity forces id·X = id, so
    // the separate arrow is not a unit on the object itself), but the
    // absorbed form is the generated generalized category.
    assert!(check_axioms(&raw, CheckProfile::DefMain).passed());
    let before = raw.hom_set(&e("X"), &e("X")).unwrap().len();

    let absorbed = from_category(&raw).unwrap();
    assert!(check_axioms(&absorbed, CheckProfile::DefMain).passed());
    assert!(absorbed.classify_category().is_one_category);
    assert!(!absorbed.has_generator(&Symbol::new("id")));
    // The composite g1·g2 now lands on the object itself.
    assert_eq!(absorbed.compose(&e("g1"), &e("g2")).unwrap(), Some(e("X")));
    let after = absorbed.hom_set(&e("X"), &e("X")).unwrap().len();
    assert_eq!(after + 1, before, "hom(X,X) shrinks by the duplicate");
}

#[test]
fn from_category_fixed_point_on_absorbed_input() {
    let p2 = p2();
    let again = from_category(&p2).unwrap();
    assert_eq!(again, p2);
}

#[test]
fn from_category_rejects_non_one_categories() {
    assert!(matches!(
        from_category(&t1()),
        Err(ConstructError::NotOneCategory(_))
    ));
}

#[test]
fn flatten_t0_is_single_object() {
    let flat = flatten(&t0(), FlattenVariant::FlatCat).unwrap();
    assert_eq!(flat.elements().len(), 1);
    assert!(flat.classify_category().is_one_category);
}

#[test]
fn flatten_t1_at_bound_one() {
    let t1 = PresentationBuilder::new("T1")
        .identity_bound(1)
        .object("a")
        .arrow("b", "a", "b")
        .build()
        .unwrap();
    let flat = flatten(&t1, FlattenVariant::FlatCat).unwrap();
    // Objects over a, b, 1_b; one non-identity arrow over b.
    let objects: Vec<_> = flat
        .generators()
        .filter(|g| flat.is_object_generator(g))
        .cloned()
        .collect();
    assert_eq!(
        objects,
        vec![Symbol::new("[a]"), Symbol::new("[b]"), Symbol::new("[idof(b)]")]
    );
    let arrows: Vec<_> = flat
        .generators()
        .filter(|g| !flat.is_object_generator(g))
        .cloned()
        .collect();
    assert_eq!(arrows, vec![Symbol::new("(b)")]);
    assert_eq!(flat.declared_src(&Symbol::new("(b)")), Some(&Symbol::new("[a]")));
    assert_eq!(flat.declared_tgt(&Symbol::new("(b)")), Some(&Symbol::new("[b]")));
}

#[test]
fn flatten_always_yields_a_one_category() {
    for p in passing_fixtures() {
        let flat = flatten(&p, FlattenVariant::FlatCat).unwrap();
        let report = check_axioms(&flat, CheckProfile::DefMain);
        assert!(report.passed(), "flatten({}) failed:\n{report}", p.name());
        assert!(
            flat.classify_category().is_one_category,
            "flatten({}) is not a one-category",
            p.name()
        );
    }
}

#[test]
fn flat_zero_sends_identities_to_self_loops() {
    let flat = flatten(&p2(), FlattenVariant::FlatZero).unwrap();
    // Non-identities x-wait: m is not an identity so it becomes an
    // object [m]; the tower identities over m become self-loop arrows.
    assert!(flat.is_object_generator(&Symbol::new("[m]")));
    assert!(flat.has_generator(&Symbol::new("(idof(m))")));
    assert!(!flat.is_object_generator(&Symbol::new("(idof(m))")));
    let report = check_axioms(&flat, CheckProfile::DefMain);
    assert!(report.passed(), "{report}");
}

#[test]
fn flatten_respects_functor_composition() {
    // Functors over posets: P2 → L4 → L4.
    let p2 = p2();
    let l4 = l4();
    let f = poset_functor("F", &p2, &l4, &[("x", "bot"), ("y", "top"), ("m", "")]);
    // poset_functor derives arrow images; the m entry above is ignored.
    let g = poset_functor(
        "G",
        &l4,
        &l4,
        &[("bot", "bot"), ("p", "p"), ("q", "q"), ("top", "top")],
    );
    let flat_p2 = flatten(&p2, FlattenVariant::FlatCat).unwrap();
    let flat_l4 = flatten(&l4, FlattenVariant::FlatCat).unwrap();

    let ff = flatten_functor(&f, &p2, &l4, &flat_p2, flat_l4.name()).unwrap();
    let gf = flatten_functor(&g, &l4, &l4, &flat_l4, flat_l4.name()).unwrap();

    // flatten(G∘F) = flatten(G)∘flatten(F), entrywise.
    let gof = gencat::transform::compose_functors(Symbol::new("G∘F"), &g, &f, &l4).unwrap();
    let flat_gof = flatten_functor(&gof, &p2, &l4, &flat_p2, flat_l4.name()).unwrap();
    let composed =
        gencat::transform::compose_functors(Symbol::new("fg∘ff"), &gf, &ff, &flat_l4).unwrap();
    for (k, v) in flat_gof.entries() {
        assert_eq!(composed.get(k), Some(v), "mismatch at {k}");
    }
}

#[test]
fn graph_path_category_of_ordinary_graph() {
    // Ordinary 2-path graph: vertices are self-edges, one edge between.
    let g = GenGraph::new("Walk")
        .edge("u", "u", "u")
        .edge("v", "v", "v")
        .edge("f", "u", "v")
        .edge("g", "v", "u");
    assert!(g.is_one_dimensional());
    let cat = graph_path_category(&g, 2).unwrap();
    let report = check_axioms(&cat, CheckProfile::DefMain);
    assert!(report.passed(), "{report}");
    assert!(cat.classify_category().is_sharp);
    // Paths g·f and f·g exist at length 2.
    assert!(cat.has_generator(&Symbol::new("p:g.f")));
    assert!(cat.has_generator(&Symbol::new("p:f.g")));
    assert_eq!(
        cat.compose(&e("p:g"), &e("p:f")).unwrap(),
        Some(e("p:g.f"))
    );
}

#[test]
fn graph_path_category_constant_maps() {
    let g = GenGraph::new("Const")
        .edge("e", "e", "e")
        .edge("a", "e", "e")
        .edge("b", "e", "e");
    let cat = graph_path_category(&g, 2).unwrap();
    // e is the unique object; a and b are arrows e → e.
    assert!(cat.is_object_generator(&Symbol::new("p:e")));
    assert_eq!(cat.declared_src(&Symbol::new("p:a")), Some(&Symbol::new("p:e")));
    let report = check_axioms(&cat, CheckProfile::DefMain);
    assert!(report.passed(), "{report}");
}

#[test]
fn graph_path_category_composes_levelwise() {
    // Certificates: goods g1, g2 exchangeable via c0; the certificate
    // trade c1 sits one level up, between edges.
    let g = GenGraph::new("Cert")
        .edge("g1", "g1", "g1")
        .edge("g2", "g2", "g2")
        .edge("c0", "g1", "g2")
        .edge("c1", "c0", "c0");
    assert!(!g.is_one_dimensional());
    let cat = graph_path_category(&g, 2).unwrap();
    let report = check_axioms(&cat, CheckProfile::DefMain);
    assert!(report.passed(), "{report}");
    // c1 composes with itself (same level) but not across levels.
    assert!(cat
        .compose(&e("p:c1"), &e("p:c1"))
        .unwrap()
        .is_some());
    assert_eq!(cat.compose(&e("p:c1"), &e("p:c0")).unwrap(), None);
    // Truncation shows up as an explicit marker, not silence.
    assert!(!cat.truncated_pairs().is_empty());
}

#[test]
fn tree_category_depth_one_trees_over_p2() {
    let trees = tree_category(&p2(), 1).unwrap();
    // Depth-1 trees are exactly the leaves over the three morphisms.
    let gens: Vec<_> = trees.generators().cloned().collect();
    assert_eq!(
        gens,
        vec![Symbol::new("(m)"), Symbol::new("(x)"), Symbol::new("(y)")]
    );
    // Leaf boundaries fall back to the base boundaries.
    assert_eq!(trees.boundary(&e("(m)"), Side::Source).unwrap(), e("(x)"));
    assert_eq!(trees.boundary(&e("(m)"), Side::Target).unwrap(), e("(y)"));
    // Object leaves are their own boundaries.
    assert!(trees.is_object_generator(&Symbol::new("(x)")));
}

#[test]
fn tree_category_composition_rule() {
    let p2 = p2();
    let trees = tree_category(&p2, 2).unwrap();
    let report = check_axioms(&trees, CheckProfile::DefMain);
    assert!(report.passed(), "{report}");
    assert!(trees.classify_category().is_sharp);

    // A non-identity self-loop at (x): the depth-2 tree with root x.
    let loop_x = Symbol::new("(x (x) (x))");
    assert!(trees.has_generator(&loop_x));
    // Composing (m) with it applies the rule: root m·x = m, left the
    // target of (m), right the source of the loop.
    let composed = trees
        .compose(&e("(m)"), &ElementRef::base(loop_x.as_str()))
        .unwrap();
    assert_eq!(composed, Some(e("(m (y) (x))")));
    // Its root is the composite m∘id and its depth is 2.
    let t = TreeElement::node("m", TreeElement::leaf("y"), TreeElement::leaf("x"));
    assert_eq!(t.depth(), 2);
    assert!(t.satisfies_condition(&p2));
}

#[test]
fn tree_category_truncation_is_signalled() {
    let p2 = p2();
    // A depth-3 tree whose target subtree has depth 2.
    let g = TreeElement::node(
        "m",
        TreeElement::node("y", TreeElement::leaf("y"), TreeElement::leaf("y")),
        TreeElement::leaf("x"),
    );
    let f = TreeElement::node("x", TreeElement::leaf("x"), TreeElement::leaf("x"));
    // The composite keeps g's depth-2 target subtree, needing depth 3.
    match compose_trees(&p2, &g, &f, 2) {
        Err(ConstructError::Kernel(gencat::kernel::KernelError::TruncatedComposition {
            ..
        })) => {}
        other => panic!("expected truncation, got {other:?}"),
    }
}

#[test]
fn tree_boundary_recursion_holds_for_generated_elements() {
    let p2 = p2();
    let trees = tree_category(&p2, 2).unwrap();
    for g in trees.generators() {
        let el = ElementRef::base(g.as_str());
        let s = trees.boundary(&el, Side::Source).unwrap();
        let t = trees.boundary(&el, Side::Target).unwrap();
        assert!(trees.has_generator(&s.generator));
        assert!(trees.has_generator(&t.generator));
    }
}

#[test]
fn cell_analysis_on_fixtures() {
    let p2 = p2();
    let m = cell_analysis(&p2, &e("m")).unwrap();
    assert_eq!(m.dim, 1);
    assert!(m.is_k_cell[1]);
    assert!(m.is_cellular_element);

    let t0 = t0();
    let a = cell_analysis(&t0, &e("a")).unwrap();
    assert_eq!(a.dim, 0);

    // Boundaries never reach objects in the two-cycle.
    assert!(matches!(
        cell_analysis(&t2(), &e("a")),
        Err(ConstructError::DimUndefined(_))
    ));
}

#[test]
fn two_cell_fixture_analyzed() {
    // One 0-cell pair, a 1-cell between, and a 2-cell on it.
    let c = PresentationBuilder::new("TwoCell")
        .object("x")
        .object("y")
        .arrow("f", "x", "y")
        .arrow("g", "x", "y")
        .arrow("al", "f", "g")
        .build()
        .unwrap();
    let al = cell_analysis(&c, &e("al")).unwrap();
    assert_eq!(al.dim, 2);
    assert!(al.is_k_cell[2]);
    assert!(al.is_cellular_element);
}

#[test]
fn to_globular_buckets_by_dimension() {
    let g = to_globular(&p2(), 1).unwrap();
    assert_eq!(
        g.cells.get(&0),
        Some(&[Symbol::new("x"), Symbol::new("y")].into_iter().collect())
    );
    assert_eq!(
        g.cells.get(&1),
        Some(&[Symbol::new("m")].into_iter().collect())
    );
    assert_eq!(g.sigma.get(&Symbol::new("m")), Some(&Symbol::new("x")));
    assert_eq!(g.tau.get(&Symbol::new("m")), Some(&Symbol::new("y")));
}

#[test]
fn to_globular_rejects_non_cellular() {
    assert!(matches!(
        to_globular(&t2(), 2),
        Err(ConstructError::NotCellular(_))
    ));
}

#[test]
fn from_globular_builds_free_presentation() {
    // One 0-cell, one... two 0-cells and a 1-cell: the P2 shape minus
    // composites.
    let g = GlobularPresentation::new("G")
        .cell(0, "x")
        .cell(0, "y")
        .cell(1, "m")
        .boundaries("m", "x", "y");
    let p = from_globular(&g).unwrap();
    assert!(p.is_object_generator(&Symbol::new("x")));
    assert_eq!(p.declared_src(&Symbol::new("m")), Some(&Symbol::new("x")));
    assert!(p.comp_table().is_empty());
}

#[test]
fn globular_roundtrip_on_handmade_sets() {
    let g = GlobularPresentation::new("H")
        .cell(0, "a")
        .cell(0, "b")
        .cell(1, "f")
        .cell(1, "g")
        .cell(2, "al")
        .boundaries("f", "a", "b")
        .boundaries("g", "a", "b")
        .boundaries("al", "f", "g");
    g.validate().unwrap();
    let p = from_globular(&g).unwrap();
    let back = to_globular(&p, 2).unwrap();
    assert_eq!(back.cells, g.cells);
    assert_eq!(back.sigma, g.sigma);
    assert_eq!(back.tau, g.tau);
}

#[test]
fn globular_validation_rejects_violations() {
    // Target of the 2-cell is not parallel to its source.
    let g = GlobularPresentation::new("Bad")
        .cell(0, "a")
        .cell(0, "b")
        .cell(0, "c")
        .cell(1, "f")
        .cell(1, "h")
        .cell(2, "al")
        .boundaries("f", "a", "b")
        .boundaries("h", "a", "c")
        .boundaries("al", "f", "h");
    assert!(matches!(g.validate(), Err(ConstructError::NotGlobular(_))));
}

#[test]
fn tree_likeness() {
    assert!(is_tree_like(&p2()).unwrap());
    assert!(!is_tree_like(&z3()).unwrap(), "hom(e,e) has three elements");
    assert!(!is_tree_like(&t2()).unwrap(), "boundary loop through non-objects");
}

#[test]
fn constructions_pass_axioms_in_their_modes() {
    let outputs: Vec<gencat::GenCatPresentation> = vec![
        flatten(&t1(), FlattenVariant::FlatCat).unwrap(),
        flatten(&z3(), FlattenVariant::FlatZero).unwrap(),
        graph_path_category(
            &GenGraph::new("G")
                .edge("u", "u", "u")
                .edge("f", "u", "u"),
            3,
        )
        .unwrap(),
        tree_category(&p2(), 2).unwrap(),
        from_globular(
            &GlobularPresentation::new("G2")
                .cell(0, "x")
                .cell(1, "f")
                .boundaries("f", "x", "x"),
        )
        .unwrap(),
    ];
    for p in outputs {
        let report = check_axioms(&p, CheckProfile::DefMain);
        assert!(report.passed(), "{} failed:\n{report}", p.name());
        assert!(p.classify_category().is_sharp);
    }
}

#[test]
fn poset_functor_helper_builds_checked_functors() {
    let p2 = p2();
    let l4 = l4();
    let f: FunctorMap = poset_functor("F", &p2, &l4, &[("x", "bot"), ("y", "top")]);
    let report = gencat::transform::check_functor(&f, &p2, &l4);
    assert!(report.passed(), "{report}");
}
