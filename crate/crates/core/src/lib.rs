//! Exact verification of divisibility properties of factorial ratios,
//! binomial-coefficient products and their q-analogues.
//!
//! Layers, bottom up: [`valuation`] (Legendre orders), [`floor`] (step
//! functions and congruence-conditioned floor identities), [`divisibility`]
//! (big-integer sequences and the claims about them), [`qseries`] (exact
//! polynomial arithmetic in `q`) and [`harness`] (claim registry, parallel
//! sweeps, reports).

pub mod divisibility;
pub mod floor;
pub mod harness;
pub mod qseries;
pub mod valuation;
