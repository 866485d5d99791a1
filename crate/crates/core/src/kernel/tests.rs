use super::*;
use crate::fixtures::*;
use crate::kernel::axioms::CheckProfile;

fn e(name: &str) -> ElementRef {
    ElementRef::base(name)
}

fn lv(name: &str, level: u32) -> ElementRef {
    ElementRef::new(name, level)
}

#[test]
fn boundaries_on_fixtures() {
    let t1 = t1();
    assert_eq!(t1.boundary(&e("b"), Side::Source).unwrap(), e("a"));
    assert_eq!(t1.boundary(&e("b"), Side::Target).unwrap(), e("b"));

    // Identity of an object collapses: (a,1) normalizes to a.
    let t0 = t0();
    assert_eq!(t0.canonicalize(&lv("a", 1)), e("a"));
    assert_eq!(t0.boundary(&lv("a", 1), Side::Source).unwrap(), e("a"));

    // Two-cycle of boundaries.
    let t2 = t2();
    assert_eq!(t2.boundary(&e("a"), Side::Target).unwrap(), e("b"));
    assert_eq!(t2.boundary(&e("b"), Side::Target).unwrap(), e("a"));
}

#[test]
fn boundary_unknown_generator_errors() {
    let t0 = t0();
    assert!(matches!(
        t0.boundary(&e("zz"), Side::Source),
        Err(KernelError::UnknownGenerator(_))
    ));
}

#[test]
fn order_declared_reflexive_and_lifted() {
    let p = PresentationBuilder::new("P2ord")
        .object("x")
        .object("y")
        .order("x", "y")
        .build()
        .unwrap();
    assert!(p.leq(&e("x"), &e("y")));
    assert!(!p.leq(&e("y"), &e("x")));
    assert!(p.leq(&e("x"), &e("x")));

    // Identities inherit order level-wise.
    let c = PresentationBuilder::new("ArrOrd")
        .object("x")
        .object("y")
        .arrow("f", "x", "y")
        .arrow("g", "x", "y")
        .order("f", "g")
        .build()
        .unwrap();
    assert!(c.leq(&lv("f", 1), &lv("g", 1)));
    assert!(!c.leq(&lv("f", 1), &lv("g", 2)));
}

#[test]
fn compose_on_fixtures() {
    let t0 = t0();
    assert_eq!(t0.compose(&e("a"), &e("a")).unwrap(), Some(e("a")));

    // a is the object at the source of b, so b·a = b.
    let t1 = t1();
    assert_eq!(t1.compose(&e("b"), &e("a")).unwrap(), Some(e("b")));
    // s(b) = a is not below t(b) = b.
    assert_eq!(t1.compose(&e("b"), &e("b")).unwrap(), None);
}

#[test]
fn compose_incomplete_names_the_pair() {
    let p = PresentationBuilder::new("Gap")
        .object("x")
        .object("y")
        .object("z")
        .arrow("f", "x", "y")
        .arrow("g", "y", "z")
        .build()
        .unwrap();
    match p.compose(&e("g"), &e("f")) {
        Err(KernelError::IncompleteComposition { left, right }) => {
            assert_eq!(left, e("g"));
            assert_eq!(right, e("f"));
        }
        other => panic!("expected incomplete composition, got {other:?}"),
    }
}

#[test]
fn classify_elements() {
    let t1 = t1();
    let ca = t1.classify_element(&e("a")).unwrap();
    assert!(ca.is_object && ca.is_subject);
    assert_eq!(ca.identity_of, Some(e("a")));

    let t2 = t2();
    let cb = t2.classify_element(&e("a")).unwrap();
    assert!(!cb.is_object);
    assert!(cb.is_subject, "every element of the two-cycle is a subject");

    // identity_of beyond the bound signals truncation.
    let top = lv("b", t1.identity_bound());
    assert!(matches!(
        t1.identity_of(&top),
        Err(KernelError::Truncated(_, _))
    ));
}

#[test]
fn heights() {
    assert_eq!(t0().height(&e("a")).unwrap(), Some(0));
    assert_eq!(p2().height(&e("m")).unwrap(), Some(1));
    assert_eq!(t2().height(&e("a")).unwrap(), None);
    // Towers add their level.
    assert_eq!(p2().height(&lv("m", 2)).unwrap(), Some(3));
}

#[test]
fn hom_sets() {
    let t1 = t1();
    assert_eq!(t1.hom_set(&e("a"), &e("b")).unwrap(), vec![e("b")]);
    let t0 = t0();
    assert_eq!(t0.hom_set(&e("a"), &e("a")).unwrap(), vec![e("a")]);
    let p2 = p2();
    assert!(p2.hom_set(&e("y"), &e("x")).unwrap().is_empty());
}

#[test]
fn fixtures_pass_axioms() {
    for p in passing_fixtures() {
        let report = check_axioms(&p, CheckProfile::DefMain);
        assert!(report.passed(), "{} failed:\n{report}", p.name());
    }
}

#[test]
fn fixtures_pass_alternative_profile() {
    for p in passing_fixtures() {
        let report = check_axioms(&p, CheckProfile::DefAlternative);
        assert!(report.passed(), "{} failed:\n{report}", p.name());
    }
}

#[test]
fn strict_casting_fails_on_identity_boundary_clash() {
    let p = casting_strict();
    let report = check_axioms(&p, CheckProfile::DefMain);
    assert!(!report.passed());
    let clash = report
        .violations()
        .find(|f| f.rule == "axiom-4-boundary" && f.witness == vec![e("x"), e("y")]);
    assert!(clash.is_some(), "expected the boundary clash on (x, y):\n{report}");
}

#[test]
fn lax_casting_passes_with_declared_coercions() {
    let p = casting_lax();
    let report = check_axioms(&p, CheckProfile::DefMain);
    assert!(report.passed(), "{report}");
    // The upcast composite routes through the declared cast element.
    assert_eq!(p.compose(&e("x"), &e("y")).unwrap(), Some(e("c")));
    // Virtual identity coercions beyond the fragment are noted.
    assert!(report
        .findings
        .iter()
        .any(|f| f.rule == "incomplete-coercion"));
}

#[test]
fn redeclared_identity_composite_fails_object_identity() {
    let p = PresentationBuilder::new("T1mut")
        .object("a")
        .arrow("b", "a", "b")
        .comp("b", "a", "a")
        .build()
        .unwrap();
    let report = check_axioms(&p, CheckProfile::DefMain);
    assert!(!report.passed());
    assert!(
        report
            .violations()
            .any(|f| f.rule.starts_with("axiom-6") && f.witness == vec![e("b"), e("a")]),
        "{report}"
    );
}

#[test]
fn opposite_is_involutive_and_swaps() {
    for p in passing_fixtures() {
        let opop = p.opposite().opposite();
        assert_eq!(opop, p, "opposite not involutive for {}", p.name());
    }
    let p2op = p2().opposite();
    assert_eq!(p2op.boundary(&e("m"), Side::Source).unwrap(), e("y"));
    assert_eq!(p2op.boundary(&e("m"), Side::Target).unwrap(), e("x"));
}

#[test]
fn opposite_passes_when_original_does() {
    for p in passing_fixtures() {
        let report = check_axioms(&p.opposite(), CheckProfile::DefMain);
        assert!(report.passed(), "opposite of {} failed:\n{report}", p.name());
    }
}

#[test]
fn classify_categories() {
    let l4 = l4().classify_category();
    assert!(l4.is_sharp && l4.is_one_category && !l4.is_zero_category);

    let t2 = t2().classify_category();
    assert!(t2.is_sharp && !t2.is_one_category && !t2.is_zero_category);

    let discrete = PresentationBuilder::new("S3")
        .object("u")
        .object("v")
        .object("w")
        .build()
        .unwrap()
        .classify_category();
    assert!(discrete.is_zero_category && discrete.is_one_category);

    assert!(casting_lax().classify_category().is_casting);
}

#[test]
fn axiom2_contract_compose_iff_leq() {
    for p in passing_fixtures() {
        for a in p.elements() {
            for b in p.elements() {
                let composable = p.leq(&p.source(&a).unwrap(), &p.target(&b).unwrap());
                match p.compose(&a, &b) {
                    Ok(Some(_)) => assert!(composable),
                    Ok(None) => assert!(!composable),
                    // Composable but beyond the presented fragment.
                    Err(_) => assert!(composable),
                }
            }
        }
    }
}

#[test]
fn duplicate_declarations_rejected() {
    let dup = PresentationBuilder::new("Dup")
        .object("a")
        .object("a")
        .build();
    assert!(matches!(dup, Err(KernelError::DuplicateGenerator(_))));

    let dup2 = PresentationBuilder::new("Dup2")
        .object("a")
        .arrow("f", "a", "a")
        .comp("f", "f", "f")
        .comp("f", "f", "a")
        .build();
    assert!(matches!(dup2, Err(KernelError::DuplicateComposition(_, _))));
}

#[test]
fn undeclared_reference_rejected_naming_symbol() {
    let bad = PresentationBuilder::new("Bad")
        .object("a")
        .arrow("b", "a", "a")
        .comp("b", "b", "c")
        .build();
    match bad {
        Err(KernelError::UnknownGenerator(s)) => assert_eq!(s.as_str(), "c"),
        other => panic!("expected unknown generator, got {other:?}"),
    }
}
