//! Braid groups, braid monodromy factorizations and fundamental groups of
//! plane-curve complements.
//!
//! * [`braid`]: Artin words, permutations, conjugacy search.
//! * [`free_group`]: the Artin action on free groups, geometric bases.
//! * [`factorization`]: Hurwitz moves, orbits and equivalence tests.
//! * [`presentation`]: Zariski–van Kampen presentations, Tietze moves, abelianization.
//! * [`homcount`]: homomorphism counts into symmetric groups.
//! * [`puiseux`] and [`tracker`]: local braids of curve germs.

pub mod braid;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod free_group;
pub mod homcount;
pub mod io;
pub mod par;
pub mod presentation;
pub mod puiseux;
pub mod snf;
pub mod tracker;

pub use braid::{block_embed, BraidWord, Permutation};
pub use error::{Error, Result};
pub use factorization::{BlockedPuiseuxFactor, Factorization, PuiseuxBlock, PuiseuxFactorization, Verdict};
pub use free_group::{delta_word, FreeWord, GeometricTuple};
pub use presentation::{AbelianInvariants, Presentation};
pub use puiseux::{LocalCurve, PuiseuxBranch, XOrder};
pub use tracker::{local_braid, semilocal_braid, LocalBraid, TrackerConfig};
