//! Exact construction and verification of Weierstrass sections for the
//! adjoint action of a parabolic subgroup of `SL(n)` on its nilradical.
//!
//! The pipeline is: [`Tableau`] from a composition, line construction in
//! [`construction`], the minors and their restrictions in [`invariants`],
//! and the lattice and orbit checks in [`verify`]. [`report`] runs
//! everything for one composition and [`render`] draws the result.

pub mod construction;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod render;
pub mod report;
pub mod tableau;
pub mod verify;

pub use construction::{construct, Label, LabelMode, Line, LineSet, Section, Stage};
pub use error::{Error, Result};
pub use poly::{Polynomial, SymbolicMatrix, Var};
pub use tableau::{Composition, MatrixUnit, NeighborPair, Tableau};
