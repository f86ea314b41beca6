//! Probabilistic-method toolkit.
//!
//! A workbench for existence-by-counting arguments: if fewer than all objects
//! are "bad", a good object exists. The crate has four working layers plus a
//! file-format layer:
//!
//! * [`graph`], [`setsystem`], [`certificate`] — finite objects (graphs,
//!   edge/subset colorings, set systems, ±1 colorings), exact detectors for
//!   the structures the counting arguments talk about, and certificate
//!   verification.
//! * [`bounds`] — the counting bounds themselves (Ramsey-type lower bounds,
//!   discrepancy guarantees, Markov/Chernoff counting inequalities) on top of
//!   [`magnitude`], a sound two-tier arithmetic for numbers like `2^(5·10^13)`
//!   that cannot be materialized exactly.
//! * [`oracle`] — exact desk-scale enumeration that cross-checks the bounds:
//!   every count here is a ground truth the inequalities must dominate.
//! * [`construct`] — seeded Las Vegas constructors that search for witness
//!   objects by rejection sampling and return verified certificates or an
//!   honest failure report.
//! * [`instance`] and [`report`] — the versioned JSON documents the CLI (and
//!   the C API) read and write.
//!
//! Indices are 0-based everywhere in this API; the file formats and all
//! human-readable output are 1-based.

pub mod bounds;
pub mod certificate;
pub mod construct;
pub mod error;
pub mod graph;
pub mod instance;
pub mod magnitude;
pub mod oracle;
pub mod report;
pub mod setsystem;

mod bits;

pub use error::{Error, Result};
pub use magnitude::{Magnitude, Verdict};
