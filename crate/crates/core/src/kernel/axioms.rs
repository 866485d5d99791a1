//! Exhaustive axiom checking over the enumerated fragment.
//!
//! All quantifiers range over elements with tower level at most the
//! presentation's identity bound. The axioms are level-uniform above
//! level 1, so bounded checking decides the presented fragment.

use std::collections::BTreeMap;

use super::element::ElementRef;
use super::presentation::{GenCatPresentation, KernelError, Mode};
use super::report::{Finding, Report};

/// Which definition to check against.
///
/// `DefMain` requires identities for every element. `DefAlternative`
/// states identity existence only for subjects (elements that occur as a
/// source or target), so identity checks are restricted to those.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckProfile {
    DefMain,
    DefAlternative,
}

/// Composition outcome over the enumerated fragment, memoized for the
/// triple checks.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Composite {
    Undefined,
    Defined(ElementRef),
    Missing { virtual_identity: bool },
    Truncated,
}

struct Enumeration<'a> {
    p: &'a GenCatPresentation,
    elements: Vec<ElementRef>,
    table: BTreeMap<(ElementRef, ElementRef), Composite>,
}

impl<'a> Enumeration<'a> {
    fn new(p: &'a GenCatPresentation) -> Self {
        let elements = p.elements();
        let mut table = BTreeMap::new();
        for a in &elements {
            for b in &elements {
                let entry = match p.compose(a, b) {
                    Ok(None) => Composite::Undefined,
                    Ok(Some(v)) => Composite::Defined(v),
                    Err(KernelError::IncompleteComposition { left, right }) => Composite::Missing {
                        virtual_identity: left.level >= 1 || right.level >= 1,
                    },
                    Err(KernelError::TruncatedComposition { .. }) => Composite::Truncated,
                    Err(_) => Composite::Undefined,
                };
                table.insert((a.clone(), b.clone()), entry);
            }
        }
        Enumeration { p, elements, table }
    }

    fn composite(&self, a: &ElementRef, b: &ElementRef) -> &Composite {
        &self.table[&(a.clone(), b.clone())]
    }

    fn defined(&self, a: &ElementRef, b: &ElementRef) -> Option<&ElementRef> {
        match self.composite(a, b) {
            Composite::Defined(v) => Some(v),
            _ => None,
        }
    }
}

/// Checks every axiom of the chosen definition, exhaustively at the
/// identity bound. Failures are findings, not errors; missing table
/// entries are reported in a distinct incompleteness class.
pub fn check_axioms(p: &GenCatPresentation, profile: CheckProfile) -> Report {
    let mut report = Report::new(p.name().clone());
    let en = Enumeration::new(p);

    check_partial_order(p, &mut report);
    check_table_bounds(p, &mut report);
    check_completeness(&en, &mut report);
    check_associativity(&en, &mut report);
    check_boundary_law(&en, &mut report);
    check_identities(&en, profile, &mut report);
    check_order_congruences(&en, &mut report);

    report.normalize();
    report
}

/// Axiom: the order closure is antisymmetric (reflexivity and
/// transitivity hold by construction of the closure).
fn check_partial_order(p: &GenCatPresentation, report: &mut Report) {
    let gens: Vec<_> = p.generators().cloned().collect();
    for a in &gens {
        for b in &gens {
            if a < b && p.gen_leq(a, b) && p.gen_leq(b, a) {
                report.push(Finding::violation(
                    "axiom-1-antisymmetry",
                    vec![ElementRef::base(a.as_str()), ElementRef::base(b.as_str())],
                    format!("order closure relates {a} and {b} in both directions"),
                ));
            }
        }
    }
}

/// Declared table entries must respect the composability criterion and
/// coercion entries must involve strictly ordered boundaries.
fn check_table_bounds(p: &GenCatPresentation, report: &mut Report) {
    for (l, r) in p.comp_table().keys() {
        let sl = ElementRef::base(l.as_str());
        let sr = ElementRef::base(r.as_str());
        let (Ok(s), Ok(t)) = (p.source(&sl), p.target(&sr)) else {
            continue;
        };
        if !p.leq(&s, &t) {
            report.push(Finding::violation(
                "axiom-2-composability",
                vec![sl, sr],
                format!("composition entry declared for non-composable pair ({l}, {r})"),
            ));
        }
    }
    for (x, f) in p.coerce_left_table().keys() {
        let fx = ElementRef::base(f.as_str());
        let Ok(t) = p.target(&fx) else { continue };
        let x0 = ElementRef::base(x.as_str());
        if !(p.leq(&x0, &t) && x0 != t) {
            report.push(Finding::violation(
                "axiom-2-composability",
                vec![x0, fx],
                format!("coercion entry idof({x}) . {f} is not a strict upcast"),
            ));
        }
    }
    for (f, x) in p.coerce_right_table().keys() {
        let fx = ElementRef::base(f.as_str());
        let Ok(s) = p.source(&fx) else { continue };
        let x0 = ElementRef::base(x.as_str());
        if !(p.leq(&s, &x0) && s != x0) {
            report.push(Finding::violation(
                "axiom-2-composability",
                vec![fx, x0],
                format!("coercion entry {f} . idof({x}) is not a strict upcast"),
            ));
        }
    }
}

/// Composable pairs with no table entry. Pairs involving a virtual
/// identity (tower level ≥ 1) cannot be presented finitely and are
/// reported as incomplete without failing; level-0 gaps are declarable
/// and fail the subject.
fn check_completeness(en: &Enumeration, report: &mut Report) {
    for a in &en.elements {
        for b in &en.elements {
            match en.composite(a, b) {
                Composite::Missing { virtual_identity } => {
                    if *virtual_identity {
                        report.push(Finding::incomplete(
                            "incomplete-coercion",
                            vec![a.clone(), b.clone()],
                            format!(
                                "composable pair ({a}, {b}) involves a virtual identity with no presentable entry"
                            ),
                        ));
                    } else {
                        report.push(Finding::violation(
                            "incomplete-composition",
                            vec![a.clone(), b.clone()],
                            format!("composable pair ({a}, {b}) has no composition entry"),
                        ));
                    }
                }
                Composite::Truncated => {
                    report.push(Finding::incomplete(
                        "truncated-composition",
                        vec![a.clone(), b.clone()],
                        format!("composite of ({a}, {b}) lies beyond the presented depth"),
                    ));
                }
                _ => {}
            }
        }
    }
}

/// Axiom: if (ab)c or a(bc) is defined then both parenthesizations agree.
fn check_associativity(en: &Enumeration, report: &mut Report) {
    for a in &en.elements {
        for b in &en.elements {
            let Some(ab) = en.defined(a, b) else { continue };
            for c in &en.elements {
                let left = en.defined(ab, c);
                let right = en.defined(b, c).and_then(|bc| en.defined(a, bc));
                match (left, right) {
                    (Some(l), Some(r)) if l != r => {
                        report.push(Finding::violation(
                            "axiom-3-associativity",
                            vec![a.clone(), b.clone(), c.clone()],
                            format!("({a}·{b})·{c} = {l} but {a}·({b}·{c}) = {r}"),
                        ));
                    }
                    (Some(l), None) => {
                        // Definedness of the two sides coincides unless a
                        // nested composite is missing from the tables.
                        if !matches!(en.composite(b, c), Composite::Missing { .. } | Composite::Truncated)
                        {
                            report.push(Finding::violation(
                                "axiom-3-associativity",
                                vec![a.clone(), b.clone(), c.clone()],
                                format!("({a}·{b})·{c} = {l} but {a}·({b}·{c}) is undefined"),
                            ));
                        }
                    }
                    _ => {}
                }
            }
        }
    }
}

/// Axiom: source(ab) = source(b) and target(ab) = target(a).
fn check_boundary_law(en: &Enumeration, report: &mut Report) {
    let p = en.p;
    for a in &en.elements {
        for b in &en.elements {
            let Some(v) = en.defined(a, b) else { continue };
            let (Ok(sv), Ok(tv)) = (p.source(v), p.target(v)) else {
                continue;
            };
            let (Ok(sb), Ok(ta)) = (p.source(b), p.target(a)) else {
                continue;
            };
            if sv != sb {
                report.push(Finding::violation(
                    "axiom-4-boundary",
                    vec![a.clone(), b.clone()],
                    format!("source({a}·{b}) = {sv} but source({b}) = {sb}"),
                ));
            }
            if tv != ta {
                report.push(Finding::violation(
                    "axiom-4-boundary",
                    vec![a.clone(), b.clone()],
                    format!("target({a}·{b}) = {tv} but target({a}) = {ta}"),
                ));
            }
        }
    }
}

/// Identity axioms: existence, the unit laws, uniqueness, and agreement
/// of declared table entries with the unit laws.
fn check_identities(en: &Enumeration, profile: CheckProfile, report: &mut Report) {
    let p = en.p;
    let subjects = p.subjects();
    let exact_only = p.mode() == Mode::Lax;

    // Unit laws for every structural identity over every composable
    // partner. In lax mode the laws are asserted only at exact
    // boundaries.
    for e in &en.elements {
        if profile == CheckProfile::DefAlternative && !subjects.contains(e) && !p.is_object(e) {
            continue;
        }
        let Ok(id) = p.identity_of(e) else { continue };
        for c in &en.elements {
            // 1_e · c
            if let Some(v) = en.defined(&id, c) {
                let exact = p.target(c).map(|t| t == *e).unwrap_or(false);
                if (exact || !exact_only) && v != c {
                    let rule = if p.is_object(e) {
                        "axiom-6-object-identity"
                    } else {
                        "axiom-5-identity-unit"
                    };
                    report.push(Finding::violation(
                        rule,
                        vec![id.clone(), c.clone()],
                        format!("left unit law: {id}·{c} = {v}, expected {c}"),
                    ));
                }
            }
            // c · 1_e
            if let Some(v) = en.defined(c, &id) {
                let exact = p.source(c).map(|s| s == *e).unwrap_or(false);
                if (exact || !exact_only) && v != c {
                    let rule = if p.is_object(e) {
                        "axiom-6-object-identity"
                    } else {
                        "axiom-5-identity-unit"
                    };
                    report.push(Finding::violation(
                        rule,
                        vec![c.clone(), id.clone()],
                        format!("right unit law: {c}·{id} = {v}, expected {c}"),
                    ));
                }
            }
        }
    }

    // Declared table entries that shadow a unit law must agree with it.
    for ((l, r), v) in p.comp_table() {
        let le = ElementRef::base(l.as_str());
        let re = ElementRef::base(r.as_str());
        let (Ok(sl), Ok(tr)) = (p.source(&le), p.target(&re)) else {
            continue;
        };
        if p.identity_base(&le).as_ref() == Some(&tr) && p.canonicalize(v) != re {
            report.push(Finding::violation(
                "axiom-6b-object-identity",
                vec![le.clone(), re.clone()],
                format!("entry {l}·{r} = {v} conflicts with the unit law value {r}"),
            ));
        } else if p.identity_base(&re).as_ref() == Some(&sl) && p.canonicalize(v) != le {
            report.push(Finding::violation(
                "axiom-6b-object-identity",
                vec![le, re],
                format!("entry {l}·{r} = {v} conflicts with the unit law value {l}"),
            ));
        }
    }

    // Uniqueness: each element carries exactly one two-sided unit at
    // exact boundaries within the bound.
    for e in &en.elements {
        if e.level + 1 > p.identity_bound() {
            continue;
        }
        if profile == CheckProfile::DefAlternative && !subjects.contains(e) && !p.is_object(e) {
            continue;
        }
        let mut units = Vec::new();
        'candidates: for u in &en.elements {
            let (Ok(su), Ok(tu)) = (p.source(u), p.target(u)) else {
                continue;
            };
            if su != *e || tu != *e {
                continue;
            }
            for c in &en.elements {
                if p.target(c).map(|t| t == *e).unwrap_or(false) {
                    match en.composite(u, c) {
                        Composite::Defined(v) if v == c => {}
                        Composite::Undefined => {}
                        _ => continue 'candidates,
                    }
                }
                if p.source(c).map(|s| s == *e).unwrap_or(false) {
                    match en.composite(c, u) {
                        Composite::Defined(v) if v == c => {}
                        Composite::Undefined => {}
                        _ => continue 'candidates,
                    }
                }
            }
            units.push(u.clone());
        }
        if units.len() != 1 {
            report.push(Finding::violation(
                "axiom-5-identity-unique",
                std::iter::once(e.clone()).chain(units.iter().cloned()).collect(),
                format!(
                    "{} elements satisfy the two-sided unit law at {e} (expected exactly 1)",
                    units.len()
                ),
            ));
        }
    }
}

/// Order congruences: boundaries, composites, and identities are
/// monotone in the order.
fn check_order_congruences(en: &Enumeration, report: &mut Report) {
    let p = en.p;
    let mut pairs = Vec::new();
    for a in &en.elements {
        for b in &en.elements {
            if a != b && p.leq(a, b) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }

    // 7a: a ⊴ b implies source(a) ⊴ source(b) and target(a) ⊴ target(b).
    for (a, b) in &pairs {
        let (Ok(sa), Ok(sb)) = (p.source(a), p.source(b)) else {
            continue;
        };
        let (Ok(ta), Ok(tb)) = (p.target(a), p.target(b)) else {
            continue;
        };
        if !p.leq(&sa, &sb) {
            report.push(Finding::violation(
                "axiom-7a-order-boundary",
                vec![a.clone(), b.clone()],
                format!("{a} ⊴ {b} but source({a}) = {sa} ⋬ {sb} = source({b})"),
            ));
        }
        if !p.leq(&ta, &tb) {
            report.push(Finding::violation(
                "axiom-7a-order-boundary",
                vec![a.clone(), b.clone()],
                format!("{a} ⊴ {b} but target({a}) = {ta} ⋬ {tb} = target({b})"),
            ));
        }
    }

    // 7b: a ⊴ b, c ⊴ d, both composites defined, implies ac ⊴ bd.
    let mut refl_pairs = pairs.clone();
    for e in &en.elements {
        refl_pairs.push((e.clone(), e.clone()));
    }
    for (a, b) in &refl_pairs {
        for (c, d) in &refl_pairs {
            if a == b && c == d {
                continue;
            }
            let (Some(ac), Some(bd)) = (en.defined(a, c), en.defined(b, d)) else {
                continue;
            };
            if !p.leq(ac, bd) {
                report.push(Finding::violation(
                    "axiom-7b-order-composition",
                    vec![a.clone(), b.clone(), c.clone(), d.clone()],
                    format!("{a} ⊴ {b} and {c} ⊴ {d} but {a}·{c} = {ac} ⋬ {bd} = {b}·{d}"),
                ));
            }
        }
    }

    // 7c: a ⊴ b implies 1_a ⊴ 1_b.
    for (a, b) in &pairs {
        let (Ok(ia), Ok(ib)) = (p.identity_of(a), p.identity_of(b)) else {
            continue;
        };
        if !p.leq(&ia, &ib) {
            report.push(Finding::violation(
                "axiom-7c-order-identity",
                vec![a.clone(), b.clone()],
                format!("{a} ⊴ {b} but 1_{a} = {ia} ⋬ {ib} = 1_{b}"),
            ));
        }
    }
}
