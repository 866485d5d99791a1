//! Finitely presented generalized categories.
//!
//! A generalized category relaxes the one-sorted category axioms: the
//! source and target maps need not be idempotent (`ss = s`, `ts = t` are
//! dropped), and composability of a pair `a · b` is governed by a partial
//! order `⊴` on elements (`a · b` is defined exactly when
//! `source(a) ⊴ target(b)`). Ordinary categories, posets, sets, and
//! cast/subtype systems all embed as special cases.
//!
//! The crate provides:
//!
//! - [`kernel`] — finite presentations, elementary queries (boundaries,
//!   order, composition, hom sets, height), and an exhaustive axiom
//!   checker producing replayable diagnostic reports;
//! - [`constructions`] — builders: one-category absorption, flattenings,
//!   path categories of generalized graphs, binary-tree categories,
//!   cell analysis and globular-set conversions;
//! - [`invertibles`] — inverses, monic/epic/iso classes, the category of
//!   invertibles quotient, lifted functors, essential injectivity and
//!   surjectivity;
//! - [`transform`] — functor and natural-transformation checking,
//!   vertical and star composition, the strict 2-category laws;
//! - [`adjoint`] — adjunction verification by triangle identities, the
//!   natural hom-set bijection, fullness/faithfulness, equivalences;
//! - [`limits`] — cones, limit verification by universal property, and
//!   construction of finite limits from products and equalizers;
//! - [`io`] — the line-oriented text formats (`.gcat`, `.ggraph`,
//!   `.glob`, `.gfun`, `.gnat`, `.gadj`, `.gdiag`) and DOT export.
//!
//! All data is immutable after construction; every query is a pure
//! function of a presentation and its arguments, so checks can run
//! concurrently over shared presentations.

pub mod adjoint;
pub mod constructions;
pub mod fixtures;
pub mod invertibles;
pub mod io;
pub mod kernel;
pub mod limits;
pub mod symbol;
pub mod transform;

pub use kernel::{
    CheckProfile, ElementRef, GenCatPresentation, KernelError, Mode, PresentationBuilder, Report,
};
pub use symbol::Symbol;
