//! Exact-arithmetic verification kernels for the family of quasiplatonic
//! curves with automorphism group Z2^2 x| Zm.
//!
//! The crate is organised around the pipeline it certifies:
//!
//! * [`algebra`] — rationals, cyclotomic fields Q(zeta_n), polynomials,
//!   rational functions, GF(2) linear algebra and Moebius transformations.
//! * [`group`] — concrete finite groups as Cayley tables (the semidirect
//!   products Z2^2 x| Zm and companions), subgroups, quotients,
//!   automorphisms and isomorphism testing.
//! * [`fpgroup`] — finitely presented groups: Todd–Coxeter coset
//!   enumeration, Schreier generators for kernels of homomorphism chains,
//!   normality tests at finite index.
//! * [`repr`] — exact character tables (Burnside–Dixon), rational
//!   irreducible families and group-algebra idempotents.
//! * [`covering`] — signatures, Riemann–Hurwitz bookkeeping, generating
//!   vectors, fixed-point counts and the GF(2) classification of the free
//!   Z2^(m-3) actions on generalized Fermat curves.
//! * [`curve`] — function fields of curves {y^2=f(x), z^2=g(x)}, symbolic
//!   verification of automorphisms, Belyi maps and quotient models.
//! * [`jacobian`] — Kani–Rosen and group-algebra isogeny decompositions
//!   with cross-oracle genus checks.
//! * [`descent`] — the Weil-descent construction of a rational model for
//!   the m = 3l curves.
//! * [`report`] — deterministic certification reports shared with the CLI.

pub mod algebra;
pub mod cases;
pub mod covering;
pub mod curve;
pub mod descent;
pub mod fpgroup;
pub mod group;
pub mod jacobian;
pub mod pipelines;
pub mod report;
pub mod repr;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
