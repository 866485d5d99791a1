//! Small presentations used as a shared corpus across the test suites
//! and the acceptance battery.

use crate::kernel::{ElementRef, GenCatPresentation, Mode, PresentationBuilder};
use crate::symbol::Symbol;
use crate::transform::{FunctorMap, Variance};

/// The trivial generalized category: one object `a: a → a`.
pub fn t0() -> GenCatPresentation {
    PresentationBuilder::new("T0").object("a").build().unwrap()
}

/// The simplest non-category: `a: a → a`, `b: a → b` (b targets itself).
pub fn t1() -> GenCatPresentation {
    PresentationBuilder::new("T1")
        .object("a")
        .arrow("b", "a", "b")
        .build()
        .unwrap()
}

/// Two elements swapping boundaries: `a: b → b`, `b: a → a`. Finite,
/// objectless, every element a subject.
pub fn t2() -> GenCatPresentation {
    PresentationBuilder::new("T2")
        .arrow("a", "b", "b")
        .arrow("b", "a", "a")
        .comp("a", "a", "a")
        .comp("b", "b", "b")
        .build()
        .unwrap()
}

/// The 2-chain poset `x < y` as a (sharp) one-category.
pub fn p2() -> GenCatPresentation {
    PresentationBuilder::new("P2")
        .object("x")
        .object("y")
        .arrow("m", "x", "y")
        .build()
        .unwrap()
}

/// The cyclic group of order 3 as a one-object category. The object `e`
/// doubles as the group identity; `g2` is the square of `g1`.
pub fn z3() -> GenCatPresentation {
    PresentationBuilder::new("Z3")
        .object("e")
        .arrow("g1", "e", "e")
        .arrow("g2", "e", "e")
        .comp("g1", "g1", "g2")
        .comp("g1", "g2", "e")
        .comp("g2", "g1", "e")
        .comp("g2", "g2", "g1")
        .build()
        .unwrap()
}

/// The diamond lattice `{bot, p, q, top}` as a one-category: one arrow
/// per strict comparability, composites filled in.
pub fn l4() -> GenCatPresentation {
    PresentationBuilder::new("L4")
        .object("bot")
        .object("p")
        .object("q")
        .object("top")
        .arrow("bp", "bot", "p")
        .arrow("bq", "bot", "q")
        .arrow("bt", "bot", "top")
        .arrow("pt", "p", "top")
        .arrow("qt", "q", "top")
        .comp("pt", "bp", "bt")
        .comp("qt", "bq", "bt")
        .build()
        .unwrap()
}

/// L4 with a duplicated top: `top2` isomorphic to `top` via `t12`/`t21`.
pub fn l4_dup_top() -> GenCatPresentation {
    PresentationBuilder::new("L4dup")
        .object("bot")
        .object("p")
        .object("q")
        .object("top")
        .object("top2")
        .arrow("bp", "bot", "p")
        .arrow("bq", "bot", "q")
        .arrow("bt", "bot", "top")
        .arrow("pt", "p", "top")
        .arrow("qt", "q", "top")
        .arrow("bt2", "bot", "top2")
        .arrow("pt2", "p", "top2")
        .arrow("qt2", "q", "top2")
        .arrow("t12", "top", "top2")
        .arrow("t21", "top2", "top")
        .comp("pt", "bp", "bt")
        .comp("qt", "bq", "bt")
        .comp("pt2", "bp", "bt2")
        .comp("qt2", "bq", "bt2")
        .comp("t12", "bt", "bt2")
        .comp("t12", "pt", "pt2")
        .comp("t12", "qt", "qt2")
        .comp("t21", "bt2", "bt")
        .comp("t21", "pt2", "pt")
        .comp("t21", "qt2", "qt")
        .comp("t12", "t21", "top2")
        .comp("t21", "t12", "top")
        .build()
        .unwrap()
}

/// A linear chain poset `c0 < c1 < ... < c(n-1)` as a one-category, with
/// one arrow `a_i_j` per strict pair.
pub fn chain(name: &str, n: usize) -> GenCatPresentation {
    let mut b = PresentationBuilder::new(name);
    for i in 0..n {
        b = b.object(format!("c{i}"));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            b = b.arrow(format!("a{i}_{j}"), format!("c{i}"), format!("c{j}"));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                b = b.comp(format!("a{j}_{k}"), format!("a{i}_{j}"), format!("a{i}_{k}"));
            }
        }
    }
    b.build().unwrap()
}

/// Two parallel arrows `f, g: a → b` equalized by `e: e0 → a`, with the
/// common composite `h`.
pub fn eq3() -> GenCatPresentation {
    PresentationBuilder::new("EQ3")
        .object("e0")
        .object("a")
        .object("b")
        .arrow("e", "e0", "a")
        .arrow("f", "a", "b")
        .arrow("g", "a", "b")
        .arrow("h", "e0", "b")
        .comp("f", "e", "h")
        .comp("g", "e", "h")
        .build()
        .unwrap()
}

/// Two strictly ordered objects in strict mode: the literal identity
/// laws clash with the boundary law here.
pub fn casting_strict() -> GenCatPresentation {
    PresentationBuilder::new("CastStrict")
        .object("x")
        .object("y")
        .order("x", "y")
        .build()
        .unwrap()
}

/// The lax completion of [`casting_strict`]: the upcast composite
/// `x·y` is routed to a declared cast element `c: y → x`. The order
/// congruence on composites forces `x ⊴ c ⊴ y` alongside the declared
/// `x ⊴ y`.
pub fn casting_lax() -> GenCatPresentation {
    PresentationBuilder::new("CastLax")
        .mode(Mode::Lax)
        .object("x")
        .object("y")
        .arrow("c", "y", "x")
        .order("x", "y")
        .order("c", "y")
        .order("x", "c")
        .coerce_left("x", "y", "c")
        .build()
        .unwrap()
}

/// All fixtures expected to pass the axiom checker, by name.
pub fn passing_fixtures() -> Vec<GenCatPresentation> {
    vec![t0(), t1(), t2(), p2(), z3(), l4(), l4_dup_top(), chain("C3", 3), eq3(), casting_lax()]
}

/// The sharp members of [`passing_fixtures`]. The classical facts about
/// invertibles (products of invertibles invertible, invertibles monic
/// and epi, iso classes of invertibles forming the quotient objects)
/// rely on exact-boundary unit laws and can fail across lax coercions,
/// so the quotient property suites quantify over these.
pub fn sharp_fixtures() -> Vec<GenCatPresentation> {
    vec![t0(), t1(), t2(), p2(), z3(), l4(), l4_dup_top(), chain("C3", 3), eq3()]
}

/// Builds the unique covariant functor between poset one-categories
/// from an object map, deriving arrow images. The object map must be
/// monotone; panics on fixtures where no image arrow exists.
pub fn poset_functor(
    name: &str,
    dom: &GenCatPresentation,
    cod: &GenCatPresentation,
    object_map: &[(&str, &str)],
) -> FunctorMap {
    let mut f = FunctorMap::new(name, dom.name().clone(), cod.name().clone(), Variance::Covariant);
    let lookup = |o: &str| -> Symbol {
        object_map
            .iter()
            .find(|(a, _)| *a == o)
            .map(|(_, b)| Symbol::new(*b))
            .unwrap_or_else(|| panic!("object {o} not mapped"))
    };
    for g in dom.generators() {
        if dom.is_object_generator(g) {
            f.insert(g.clone(), ElementRef::base(lookup(g.as_str())));
        } else {
            let s = lookup(dom.declared_src(g).unwrap().as_str());
            let t = lookup(dom.declared_tgt(g).unwrap().as_str());
            let image = poset_arrow(cod, &s, &t)
                .unwrap_or_else(|| panic!("no arrow {s} → {t} in {}", cod.name()));
            f.insert(g.clone(), image);
        }
    }
    f
}

/// The unique element `s → t` of a poset one-category: the object itself
/// when `s = t`, otherwise the declared arrow.
pub fn poset_arrow(p: &GenCatPresentation, s: &Symbol, t: &Symbol) -> Option<ElementRef> {
    if s == t {
        return Some(ElementRef::base(s.as_str()));
    }
    for g in p.generators() {
        if !p.is_object_generator(g) && p.declared_src(g) == Some(s) && p.declared_tgt(g) == Some(t)
        {
            return Some(ElementRef::base(g.as_str()));
        }
    }
    None
}
