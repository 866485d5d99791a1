//! Canonical references to elements of a presented generalized category.

use std::fmt;

use crate::symbol::Symbol;

/// A reference to one element: a generator together with the number of
/// identity-operator applications stacked on top of it.
///
/// Level 0 is the generator itself; level `n ≥ 1` is the n-fold identity
/// `1_(1_(...))` over it. The identity axiom forces infinitely many such
/// elements over every non-object, so presentations enumerate them only
/// up to a configurable bound. References are kept canonical: the
/// identity of an object is the object itself, so towers over object
/// generators collapse to level 0 (see
/// [`GenCatPresentation::element`](super::GenCatPresentation::element)).
///
/// Displayed and parsed in `idof` form: `g`, `idof(g)`, `idof(idof(g))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementRef {
    pub generator: Symbol,
    pub level: u32,
}

impl ElementRef {
    pub fn new(generator: impl Into<Symbol>, level: u32) -> Self {
        ElementRef {
            generator: generator.into(),
            level,
        }
    }

    /// The generator at level 0.
    pub fn base(generator: impl Into<Symbol>) -> Self {
        ElementRef::new(generator, 0)
    }
}

impl fmt::Display for ElementRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.level {
            f.write_str("idof(")?;
        }
        write!(f, "{}", self.generator)?;
        for _ in 0..self.level {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl From<&str> for ElementRef {
    fn from(s: &str) -> Self {
        ElementRef::base(s)
    }
}

impl From<String> for ElementRef {
    fn from(s: String) -> Self {
        ElementRef::base(s)
    }
}

impl From<&Symbol> for ElementRef {
    fn from(s: &Symbol) -> Self {
        ElementRef::base(s.clone())
    }
}
