//! Exact incidence geometry in the rational projective plane.
//!
//! Everything is integer homogeneous coordinates and exact predicates; no
//! floating point anywhere. The crate has three layers:
//!
//! * a kernel of projective primitives ([`ProjPoint`], [`ProjLine`],
//!   [`ProjTransform`], join/meet, betweenness, euclideanization),
//! * brute-force incidence analysis over a point set ([`Configuration`],
//!   [`IncidenceReport`]),
//! * and a constructive witness search ([`find_ordinary_point`]) that, for
//!   a set distributed on three concurrent lines, produces a point on at
//!   least `ceil(n/2)` spanned lines by case analysis instead of scanning.
//!
//! The [`generate`] module builds the n = 4k+1 families with
//! `t < ceil(n/2)` and seeded random inputs.
//!
//! The crate is `no_std` (with `alloc`) so the kernel can be embedded; all
//! IO lives in the companion CLI crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
mod incidence;
mod projective;
mod structure;
mod witness;

pub mod generate;

pub use error::{Error, Result};
pub use incidence::{Configuration, IncidenceReport};
pub use projective::{
    affine_between, collinear, euclideanize, half_line_side, ProjLine, ProjPoint, ProjTransform,
};
pub use structure::{ConcurrentStructure, HalfLine};
pub use witness::{find_ordinary_point, ProofStep, WitnessResult};
