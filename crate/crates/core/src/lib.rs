//! Exact C2-equivariant commutative algebra.
//!
//! * [`gset`]: finite C2-sets, equivariant maps, pullbacks, dependent
//!   products and exponential diagrams.
//! * [`bispan`]: the bispan category with composition, iso-class equality
//!   and evaluation into Green and Tambara functors.
//! * [`functor`], [`burnside`], [`finite`]: the two-level functor interface,
//!   the Burnside Tambara functor, table-backed functors and the axiom
//!   checker.
//! * [`free`]: normal forms for the free Green and Tambara functors on a
//!   fixed or underlying generator, their homomorphisms and co-maps.
//! * [`adjoint`]: the right adjoint from Green to Tambara functors, its
//!   unit and counit, and the adjunction verifier.
//! * [`expr`]: the element expression language.

pub mod adjoint;
pub mod bispan;
pub mod burnside;
pub mod expr;
pub mod finite;
pub mod free;
pub mod functor;
pub mod gset;

pub use burnside::{Burnside, BurnsideElement};
pub use functor::{check_green_axioms, check_tambara_axioms, CheckMode, GreenFunctor, Level, Report, TambaraFunctor};
pub use gset::{GMap, GSet, IndexingSystem};
