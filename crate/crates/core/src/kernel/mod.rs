//! Element model, finite presentations, elementary queries, and the
//! axiom checker for generalized categories.

mod axioms;
mod element;
mod presentation;
mod report;
#[cfg(test)]
mod tests;

pub use axioms::{check_axioms, CheckProfile};
pub use element::ElementRef;
pub use presentation::{
    CategoryClass, ElementClass, GenCatPresentation, KernelError, Mode, PresentationBuilder, Side,
};
pub use report::{Finding, Report, Severity};
