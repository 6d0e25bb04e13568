//! Exact-arithmetic workbench for Jack symmetric functions and Jack
//! Littlewood-Richardson coefficients over Q(a), the hook-symbol channel
//! calculus on Young diagrams, and the window algebra connecting them.
//!
//! Everything is computed exactly: coefficients are reduced rational functions
//! in the Jack parameter ([`exactalg::AlphaRat`]) or exact rationals at a
//! fixed parameter value. No floating point is used anywhere.

pub mod exactalg;
pub mod chansolve;
pub mod jack;
pub mod rules;
pub mod shapes;
pub mod windows;

pub use exactalg::{AlgError, AlphaPoly, AlphaRat, BigRat};
pub use shapes::{Cell, Hook, Partition};
