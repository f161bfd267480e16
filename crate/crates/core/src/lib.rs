//! Finite associative rings as Cayley tables.
//!
//! The crate builds the small named rings (`Z_n`, `GF(p^k)`, `N_{0,p^n}`,
//! `N_{p^2}`, `N_{p,p}`, `A_p`, `A^0_p`, `Z_p[x]/(x^2)`) and the usual
//! combinators, computes their zero-divisor graphs and structural invariants,
//! checks polynomial identities by exhaustive evaluation, and enumerates all
//! rings of small order up to isomorphism.

pub mod additive;
pub mod arith;
pub mod atlas;
mod elemset;
pub mod error;
pub mod graph;
pub mod limits;
pub mod poly;
pub mod ring;
pub mod structure;
pub mod verify;

pub use error::{Axiom, Error, Result};
pub use graph::SimpleGraph;
pub use poly::NcPoly;
pub use ring::{make_ring, FiniteRing, RingHom};
pub use structure::{Ideal, RingCertificate, StructureReport};
