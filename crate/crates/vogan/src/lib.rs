//! Vogan diagrams for twisted affine Kac-Moody algebras.
//!
//! The crate is layered bottom-up:
//!
//! * [`cartan`]: the six twisted affine types, their Cartan matrices, marks and
//!   diagram automorphisms;
//! * [`roots`]: real and imaginary roots, Weyl reflections and the dual
//!   families `p_i`, `p̊_i`;
//! * [`diagram`]: Vogan diagrams, the equivalence moves, orbit classification
//!   and involution labels;
//! * [`cyclo`], [`chevalley`], [`loop_algebra`], [`realize`]: an exact
//!   realization of the algebras as twisted loop algebras, used to verify the
//!   identities the diagram layer relies on.
//!
//! Everything is `no_std` with `alloc`; all arithmetic is exact.

#![no_std]

extern crate alloc;

pub mod cartan;
pub mod chevalley;
pub mod cyclo;
pub mod diagram;
pub mod loop_algebra;
pub mod rational;
pub mod realize;
pub mod render;
pub mod roots;
pub mod tables;

mod error;

pub use cartan::{diagram_automorphisms, gcm, make_type, marks, parse_type, AffineType, Family, FiniteType, Gcm, Perm};
pub use cyclo::CycloNum;
pub use diagram::{parse_diagram, InvolutionLabel, MoveSet, VoganDiagram};
pub use error::Error;
pub use roots::RootVector;
