//! Exact, allocation-only core for universal sets of σ-ideals.
//!
//! Everything here is pure: no IO, no randomness, no floating point. Points and
//! parameters are finite prefixes; sets of Cantor space are canonical clopen
//! sets carrying exact dyadic measure. Membership in a universal set is read at
//! a finite stage and reported as a [`Tri`].
#![no_std]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;

pub mod baire;
pub mod countable;
pub mod e_ideal;
pub mod enumeration;
mod error;
pub mod fubini;
pub mod meager;
pub mod null;
pub mod space;

pub use error::{Error, Result};
pub use space::{
    pair, seq_code, seq_decode, unpair, BairePrefix, BitPrefix, BitWord, Clopen, Dyadic, Natural,
    Tri,
};

/// Identifier of the pairing/sequence-coding convention used for every parameter.
///
/// Parameters are only meaningful relative to a fixed coding; files carry this tag.
pub const CODING: &str = "cantor-e1";
