//! Exact invariants of ribbon graphs and link diagrams on oriented surfaces.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of immutable inputs; the enumeration kernels take explicit index
//! ranges so callers with threads can split the work and add the partial
//! results back together.
#![no_std]

extern crate alloc;

pub mod bollobas_riordan;
pub mod classical;
pub mod diagram;
mod dsu;
pub mod enumerate;
pub mod error;
pub mod medial;
pub mod poly;
pub mod ribbon;

pub use bollobas_riordan::{
    br_polynomial, br_polynomial_with, signed_br_polynomial, BrKernel, BrOptions, SizeLimit,
};
pub use classical::{dichromatic_polynomial, tutte_polynomial, AbstractGraph};
pub use diagram::{
    jones_from_bracket, jones_polynomial, kauffman_bracket, kauffman_bracket_with, BracketKernel,
    BracketTerm, Crossing, Orientation, OverPair, Smoothing, State, SurfaceLinkDiagram,
};
pub use error::{ComputeError, DiagramError, MapError, PolyError};
pub use medial::{
    bracket_from_br, check_identity, identity_rhs, medial_diagram, IdentityReport, Medial,
};
pub use poly::{MultiPoly, QExp, Tally};
pub use ribbon::{Dart, Edge, GraphMetrics, RibbonGraph, Sign};
