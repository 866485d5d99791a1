//! Inverses, classes, the category-of-invertibles quotient, lifted
//! functors, and essential properties.

use gencat::adjoint::{presentation_isomorphism, SearchOutcome};
use gencat::fixtures::*;
use gencat::invertibles::*;
use gencat::kernel::{check_axioms, CheckProfile, ElementRef, PresentationBuilder};
use gencat::transform::FunctorMap;
use gencat::Symbol;

fn e(name: &str) -> ElementRef {
    ElementRef::base(name)
}

#[test]
fn objects_and_identities_are_self_inverse() {
    for p in passing_fixtures() {
        for el in p.elements() {
            if p.is_identity(&el) && p.identity_of(&el).is_ok() {
                assert_eq!(
                    inverse(&p, &el).unwrap(),
                    Some(el.clone()),
                    "identity {el} in {} should be its own inverse",
                    p.name()
                );
            }
        }
    }
}

#[test]
fn group_inverse_is_the_square() {
    let z3 = z3();
    assert_eq!(inverse(&z3, &e("g1")).unwrap(), Some(e("g2")));
    assert_eq!(inverse(&z3, &e("g2")).unwrap(), Some(e("g1")));
}

#[test]
fn poset_arrows_have_no_inverse() {
    assert_eq!(inverse(&p2(), &e("m")).unwrap(), None);
}

#[test]
fn inverse_uniqueness_exhaustive() {
    for p in passing_fixtures() {
        for el in p.elements() {
            let (Ok(s), Ok(t)) = (p.source(&el), p.target(&el)) else {
                continue;
            };
            let (Ok(id_s), Ok(id_t)) = (p.identity_of(&s), p.identity_of(&t)) else {
                continue;
            };
            let mut count = 0;
            for b in p.elements() {
                let fwd = p.compose(&el, &b).ok().flatten();
                let bwd = p.compose(&b, &el).ok().flatten();
                if fwd == Some(id_t.clone()) && bwd == Some(id_s.clone()) {
                    count += 1;
                }
            }
            assert!(count <= 1, "element {el} of {} has {count} inverses", p.name());
        }
    }
}

#[test]
fn inverse_swaps_boundaries() {
    for p in passing_fixtures() {
        for el in p.elements() {
            if let Ok(Some(inv)) = inverse(&p, &el) {
                assert_eq!(p.source(&inv).unwrap(), p.target(&el).unwrap());
                assert_eq!(p.target(&inv).unwrap(), p.source(&el).unwrap());
            }
        }
    }
}

#[test]
fn same_class_is_an_equivalence_relation() {
    for p in [z3(), p2(), t1(), l4()] {
        let elements = p.elements();
        for kind in [ClassKind::Monic, ClassKind::Epic, ClassKind::Iso] {
            for a in &elements {
                assert!(
                    same_class(&p, a, a, kind).unwrap().is_some(),
                    "reflexivity fails at {a} in {}",
                    p.name()
                );
            }
            for a in &elements {
                for b in &elements {
                    let ab = same_class(&p, a, b, kind).unwrap().is_some();
                    let ba = same_class(&p, b, a, kind).unwrap().is_some();
                    assert_eq!(ab, ba, "symmetry fails at ({a},{b}) in {}", p.name());
                    if !ab {
                        continue;
                    }
                    for c in &elements {
                        if same_class(&p, b, c, kind).unwrap().is_some() {
                            assert!(
                                same_class(&p, a, c, kind).unwrap().is_some(),
                                "transitivity fails at ({a},{b},{c}) in {}",
                                p.name()
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn all_group_elements_share_one_iso_class() {
    let z3 = z3();
    for pair in [("e", "g1"), ("g1", "g2"), ("e", "g2")] {
        assert!(
            same_class(&z3, &e(pair.0), &e(pair.1), ClassKind::Iso)
                .unwrap()
                .is_some()
        );
    }
}

#[test]
fn chain_arrow_is_alone_in_its_class() {
    let p2 = p2();
    for other in ["x", "y"] {
        assert!(same_class(&p2, &e("m"), &e(other), ClassKind::Iso)
            .unwrap()
            .is_none());
    }
}

#[test]
fn isomorphic_iff_identities_share_iso_class() {
    for p in [p2(), z3(), l4_dup_top(), t1()] {
        for a in p.elements() {
            for b in p.elements() {
                let (Ok(ia), Ok(ib)) = (p.identity_of(&a), p.identity_of(&b)) else {
                    continue;
                };
                let direct = isomorphic(&p, &a, &b).unwrap();
                let via_classes = same_class(&p, &ia, &ib, ClassKind::Iso).unwrap().is_some();
                assert_eq!(
                    direct,
                    via_classes,
                    "{a} ≅ {b} disagrees with 1-class comparison in {}",
                    p.name()
                );
            }
        }
    }
}

#[test]
fn cancellation_on_fixtures() {
    let p2 = p2();
    let m = cancellation(&p2, &e("m")).unwrap();
    assert!(m.is_monic && m.is_epi, "vacuous quantification");

    let z3 = z3();
    for g in ["e", "g1", "g2"] {
        let c = cancellation(&z3, &e(g)).unwrap();
        assert!(c.is_monic && c.is_epi, "group cancellation at {g}");
    }

    // Constructed counterexample: f merges two distinct arrows.
    let p = PresentationBuilder::new("Merge")
        .object("a")
        .object("b")
        .object("c")
        .arrow("x", "a", "b")
        .arrow("y", "a", "b")
        .arrow("f", "b", "c")
        .arrow("z", "a", "c")
        .comp("f", "x", "z")
        .comp("f", "y", "z")
        .build()
        .unwrap();
    let c = cancellation(&p, &e("f")).unwrap();
    assert!(!c.is_monic);
    assert_eq!(c.monic_witness, Some((e("x"), e("y"))));
}

#[test]
fn monics_are_stable_under_monic_class() {
    for p in [p2(), z3(), l4(), t1()] {
        for a in p.elements() {
            if !cancellation(&p, &a).unwrap().is_monic {
                continue;
            }
            for b in p.elements() {
                if same_class(&p, &a, &b, ClassKind::Monic).unwrap().is_some() {
                    assert!(
                        cancellation(&p, &b).unwrap().is_monic,
                        "{b} shares {a}'s monic class in {} but is not monic",
                        p.name()
                    );
                }
            }
        }
    }
}

#[test]
fn invertibles_are_monic_and_epi() {
    // Exact-boundary unit laws drive the classical cancellation
    // argument, so this quantifies over the sharp fixtures.
    for p in sharp_fixtures() {
        for theta in invertible_elements(&p) {
            let c = cancellation(&p, &theta).unwrap();
            assert!(c.is_monic && c.is_epi, "invertible {theta} in {}", p.name());
        }
    }
}

#[test]
fn quotient_of_group_is_a_point() {
    let q = category_of_invertibles(&z3()).unwrap();
    let objects: Vec<_> = q
        .quotient
        .generators()
        .filter(|g| q.quotient.is_object_generator(g))
        .collect();
    assert_eq!(objects.len(), 1);
    assert_eq!(q.quotient.generators().count(), 1, "no non-identity arrows");
}

#[test]
fn quotient_of_chain_is_the_chain() {
    let q = category_of_invertibles(&p2()).unwrap();
    match presentation_isomorphism(&q.quotient, &p2(), 10_000) {
        SearchOutcome::Found(_) => {}
        other => panic!("quotient of P2 is not isomorphic to P2: {other:?}"),
    }
}

#[test]
fn quotient_of_t1_has_three_classes() {
    let t1 = t1();
    let q = category_of_invertibles(&t1).unwrap();
    let gens: Vec<_> = q.quotient.generators().cloned().collect();
    assert_eq!(gens.len(), 3, "classes of a, b, and the identity over b");
    // b's class runs from the class of a to the class of 1_b.
    let b_class = q.class_of(&t1, &e("b")).unwrap();
    let a_class = q.class_of(&t1, &e("a")).unwrap();
    let idb_class = q.class_of(&t1, &ElementRef::new("b", 1)).unwrap();
    assert_eq!(q.quotient.declared_src(&b_class), Some(&a_class));
    assert_eq!(q.quotient.declared_tgt(&b_class), Some(&idb_class));
}

#[test]
fn quotients_are_sharp_one_categories() {
    for p in sharp_fixtures() {
        let q = category_of_invertibles(&p).unwrap();
        let class = q.quotient.classify_category();
        assert!(class.is_sharp, "quotient of {} is not sharp", p.name());
        assert!(
            class.is_one_category,
            "quotient of {} is not a one-category",
            p.name()
        );
        let report = check_axioms(&q.quotient, CheckProfile::DefMain);
        assert!(report.passed(), "quotient of {} fails:\n{report}", p.name());
    }
}

#[test]
fn object_classes_are_exactly_invertible_classes() {
    for p in sharp_fixtures() {
        let q = category_of_invertibles(&p).unwrap();
        for (el, class) in &q.classes {
            let invertible = inverse(&p, el).unwrap().is_some();
            assert_eq!(
                q.quotient.is_object_generator(class),
                invertible,
                "class of {el} in {}",
                p.name()
            );
        }
    }
}

#[test]
fn quotient_objects_match_object_iso_classes_for_one_categories() {
    for p in [p2(), z3(), l4(), l4_dup_top(), chain("C3", 3)] {
        let q = category_of_invertibles(&p).unwrap();
        let quotient_objects = q
            .quotient
            .generators()
            .filter(|g| q.quotient.is_object_generator(g))
            .count();
        // Iso classes of the objects, computed directly.
        let objects: Vec<ElementRef> = p
            .generators()
            .filter(|g| p.is_object_generator(g))
            .map(|g| ElementRef::base(g.as_str()))
            .collect();
        let mut reps: Vec<ElementRef> = Vec::new();
        for o in &objects {
            if !reps.iter().any(|r| isomorphic(&p, r, o).unwrap()) {
                reps.push(o.clone());
            }
        }
        assert_eq!(
            quotient_objects,
            reps.len(),
            "object classes of {} disagree with the object iso classes",
            p.name()
        );
    }
}

#[test]
fn lift_of_identity_is_identity() {
    let p2 = p2();
    let q = category_of_invertibles(&p2).unwrap();
    let id = FunctorMap::identity(Symbol::new("Id"), &p2);
    let lifted = lift_functor(&id, &q, &q, &p2).unwrap();
    for class in q.quotient.generators() {
        assert_eq!(lifted.get(class), Some(&ElementRef::base(class.as_str())));
    }
}

#[test]
fn lift_of_poset_inclusion_is_injective() {
    let p2 = p2();
    let l4 = l4();
    let f = poset_functor("F", &p2, &l4, &[("x", "bot"), ("y", "top")]);
    let qc = category_of_invertibles(&p2).unwrap();
    let qd = category_of_invertibles(&l4).unwrap();
    let lifted = lift_functor(&f, &qc, &qd, &l4).unwrap();
    let mut images: Vec<_> = qc
        .quotient
        .generators()
        .filter_map(|c| lifted.get(c).cloned())
        .collect();
    let n = images.len();
    images.sort();
    images.dedup();
    assert_eq!(images.len(), n, "lift of the inclusion is injective");
    // The lift is a functor on the quotients.
    let report = gencat::transform::check_functor(&lifted, &qc.quotient, &qd.quotient);
    assert!(report.passed(), "{report}");
}

#[test]
fn lift_respects_composition() {
    let p2 = p2();
    let l4 = l4();
    let f = poset_functor("F", &p2, &l4, &[("x", "bot"), ("y", "top")]);
    let g = poset_functor(
        "G",
        &l4,
        &l4,
        &[("bot", "bot"), ("p", "top"), ("q", "top"), ("top", "top")],
    );
    let qp = category_of_invertibles(&p2).unwrap();
    let ql = category_of_invertibles(&l4).unwrap();
    let gf = gencat::transform::compose_functors(Symbol::new("G∘F"), &g, &f, &l4).unwrap();
    let lift_gf = lift_functor(&gf, &qp, &ql, &l4).unwrap();
    let lift_f = lift_functor(&f, &qp, &ql, &l4).unwrap();
    let lift_g = lift_functor(&g, &ql, &ql, &l4).unwrap();
    let composed =
        gencat::transform::compose_functors(Symbol::new("~g∘~f"), &lift_g, &lift_f, &ql.quotient)
            .unwrap();
    for class in qp.quotient.generators() {
        assert_eq!(lift_gf.get(class), composed.get(class));
    }
}

#[test]
fn lift_of_collapse_is_the_unique_point_map() {
    let z3 = z3();
    let t0 = t0();
    let collapse = poset_functor("C", &z3, &t0, &[("e", "a")]);
    // All three generators map to a; the helper only maps objects, so
    // fill the arrows by hand.
    let mut collapse = collapse;
    collapse.insert(Symbol::new("g1"), e("a"));
    collapse.insert(Symbol::new("g2"), e("a"));
    let qz = category_of_invertibles(&z3).unwrap();
    let qt = category_of_invertibles(&t0).unwrap();
    let lifted = lift_functor(&collapse, &qz, &qt, &t0).unwrap();
    assert_eq!(qz.quotient.generators().count(), 1);
    assert_eq!(qt.quotient.generators().count(), 1);
    assert_eq!(lifted.entries().count(), 1);
}

#[test]
fn functors_send_invertibles_to_invertibles() {
    let dup = l4_dup_top();
    let l4 = l4();
    let collapse = poset_functor(
        "Col",
        &dup,
        &l4,
        &[
            ("bot", "bot"),
            ("p", "p"),
            ("q", "q"),
            ("top", "top"),
            ("top2", "top"),
        ],
    );
    assert!(gencat::transform::check_functor(&collapse, &dup, &l4).passed());
    for theta in invertible_elements(&dup) {
        let image = collapse.apply(&l4, &theta).unwrap();
        let image_inv = inverse(&l4, &image).unwrap().expect("image invertible");
        let theta_inv = inverse(&dup, &theta).unwrap().unwrap();
        assert_eq!(collapse.apply(&l4, &theta_inv).unwrap(), image_inv);
    }
}

#[test]
fn essential_properties_of_identity() {
    let l4 = l4();
    let id = FunctorMap::identity(Symbol::new("Id"), &l4);
    let props = essential_properties(&id, &l4, &l4).unwrap();
    assert!(props.essentially_injective && props.essentially_surjective);
}

#[test]
fn essential_properties_of_constant_functor() {
    let l4 = l4();
    let t0 = t0();
    let mut constant = FunctorMap::new("K", l4.name().clone(), t0.name().clone(), gencat::transform::Variance::Covariant);
    for g in l4.generators() {
        constant.insert(g.clone(), e("a"));
    }
    let props = essential_properties(&constant, &l4, &t0).unwrap();
    assert!(props.essentially_surjective);
    assert!(!props.essentially_injective);
}

#[test]
fn essential_properties_of_inclusion() {
    let p2 = p2();
    let l4 = l4();
    let f = poset_functor("F", &p2, &l4, &[("x", "bot"), ("y", "top")]);
    let props = essential_properties(&f, &p2, &l4).unwrap();
    assert!(props.essentially_injective);
    assert!(!props.essentially_surjective);
}

#[test]
fn essential_property_routes_agree() {
    let p2 = p2();
    let l4 = l4();
    let cases: Vec<(FunctorMap, gencat::GenCatPresentation, gencat::GenCatPresentation)> = vec![
        (FunctorMap::identity(Symbol::new("Id"), &l4), l4.clone(), l4.clone()),
        (
            poset_functor("F", &p2, &l4, &[("x", "bot"), ("y", "top")]),
            p2.clone(),
            l4.clone(),
        ),
        (
            poset_functor("G", &l4, &l4, &[("bot", "bot"), ("p", "top"), ("q", "top"), ("top", "top")]),
            l4.clone(),
            l4.clone(),
        ),
    ];
    for (f, dom, cod) in cases {
        let (via_lift, direct) = essential_properties_routes(&f, &dom, &cod).unwrap();
        assert_eq!(via_lift, direct, "routes disagree for {}", f.name);
    }
}
