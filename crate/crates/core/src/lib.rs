//! Exact-arithmetic unitarity classification for irreducible highest
//! weight modules of the Hermitian pairs `sp(2n, R)`, `su(p, q)` and
//! `so*(2n)`.
//!
//! The crate decides unitarity of the module with a given dominant
//! integral highest weight in closed form ([`mod@classify`]), certifies
//! the answer independently by scanning sign conditions over the lattice
//! of compact types of the symmetric algebra ([`dirac`], [`schmid`]),
//! constructs every discrete unitary point as an iterated product of
//! basic representations ([`prv`]), and enumerates all unitary
//! parameters sharing a fixed integral or half-integral infinitesimal
//! character for `sp` ([`infchar`]).
//!
//! All arithmetic is exact: coordinates are arbitrary-precision
//! rationals and every comparison is a strict rational comparison.
//!
//! ```
//! use hwmod_core::{classify, scan_default, Algebra, Outcome, Weight};
//!
//! let algebra = Algebra::sp(6)?;
//! let lambda = Weight::parse(algebra, "-3,-3,-4,-4,-6,-7")?;
//!
//! // closed form: this weight sits at the first reduction point
//! let verdict = classify(&lambda)?;
//! assert_eq!(verdict.outcome, Outcome::UnitaryDiscrete(1));
//!
//! // the certificate scan reaches the same conclusion independently
//! let cert = scan_default(&lambda)?;
//! assert_eq!(cert.variant_name(), "EqualityAt");
//! # Ok::<(), hwmod_core::Error>(())
//! ```

pub mod algebra;
pub mod classify;
pub mod dirac;
pub mod error;
pub mod infchar;
pub mod prv;
pub mod rat;
pub mod schmid;
pub mod weights;

pub use algebra::Algebra;
pub use classify::{classify, line_position, shape, LinePosition, Outcome, ShapeInfo, Verdict};
pub use dirac::{dirac_difference, dirac_test, default_scan_bound, scan, scan_default, DiracCertificate};
pub use error::{Error, Result};
pub use prv::{
    closed_forms, discrete_recipe, prv_component, prv_product_chain, weil_coefficient_identity,
    BasicLabel, BasicRep, ClosedForm, Recipe,
};
pub use rat::Rat;
pub use schmid::{decompose, enumerate_up_to_level, SchmidModule};
pub use weights::{beta, rho, rho_parts, RhoTriple, Weight};
