//! Exact Galois-cohomology computations for Brauer groups of diagonal cubic
//! surfaces `ax³ + by³ + cz³ + dt³ = 0` over fields containing a primitive
//! cube root of unity `ζ`.
//!
//! * [`exact`] — `Q(ζ)`, the Laurent ring in `α, γ, α′`, integer matrices,
//!   Smith normal form, solvers.
//! * [`geometry`] — the 27 lines, incidences, Picard lattice, Galois action,
//!   divisors of functions.
//! * [`cohomology`] — cochains, differentials, coboundary witnesses, Tate and
//!   bar cohomology, connecting maps, symbol cocycles.
//! * [`classifier`] — `H¹(k, Pic V̄)` and `Br(V)/Br(k)` from cube classes.
//! * [`suite`] — the verification battery reproducing the explicit tables.

pub mod classifier;
pub mod cohomology;
pub mod exact;
pub mod geometry;
pub mod suite;
