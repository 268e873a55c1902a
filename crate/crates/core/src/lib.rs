//! Core machinery for enumerating and verifying tilings of closed oriented
//! surfaces by unit triangles and unit squares.
//!
//! The crate is organised around combinatorial maps (dart permutation pairs):
//! [`map`] holds the representation, canonical forms and isomorphism tests,
//! [`enumerate`] the isomorph-free generators and census bookkeeping,
//! [`holonomy`] and [`cover`] the flat-metric holonomy and canonical cyclic
//! covers with their integral periods, [`homology`] the exact chain-complex
//! engine behind the eigenspace dimension counts, [`lattice`] the rational
//! subspace / lattice-point machinery, [`volume`] the floating-point checks of
//! the local volume-form identities, and [`fit`] the growth fitting and
//! rational recognition helpers.
//!
//! No IO lives here; the companion CLI crate carries file formats and the
//! command-line surface. The crate is `no_std` (with `alloc`): everything is
//! deterministic and pure, so callers may farm work out to threads and merge.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cover;
pub mod enumerate;
pub mod exact;
pub mod fit;
pub mod holonomy;
pub mod homology;
pub mod lattice;
pub mod map;
pub mod origami;
pub mod perm;
pub mod volume;

pub use map::{CombinatorialMap, MapError, Profile, Tiling, TilingKind};
