//! Lifetime distributions of series and parallel systems whose components
//! are dependent and heterogeneous: proportional-odds marginals coupled by
//! an Archimedean survival copula.
//!
//! The crate provides
//!
//! * a catalog of Archimedean generators with closed-form inverses and
//!   derivatives ([`generator`]),
//! * baseline lifetime laws and the proportional-odds transform
//!   ([`baseline`], [`po`]),
//! * closed-form laws of the sample extremes, including hazard and reversed
//!   hazard rates and the shock-model variants ([`system`]),
//! * majorization-family preorders and numerical stochastic-order verdicts
//!   between two systems ([`majorize`], [`orders`]),
//! * a theorem harness that checks a comparison theorem's hypotheses and
//!   then verifies or falsifies its conclusion on a grid ([`theorems`]),
//! * a reproducible Monte Carlo sampler acting as an independent oracle for
//!   the analytic laws ([`mc`]).
//!
//! Everything is pure and immutable after construction; grid evaluations and
//! sampling parallelize with rayon under the default `parallel` feature and
//! fall back to sequential loops without it, producing identical results.

pub mod baseline;
pub mod checks;
pub mod error;
pub mod exec;
pub mod generator;
pub mod grid;
pub mod majorize;
pub mod mc;
pub mod orders;
pub mod po;
pub mod report;
pub mod system;
pub mod theorems;

pub use baseline::BaselineDist;
pub use error::{Error, Result};
pub use generator::{ArchimedeanGenerator, GeneratorSpec};
pub use grid::GridSpec;
pub use majorize::{majorizes, MajorizeMode};
pub use orders::{check_order, check_order_shocked, Extreme, OrderVerdict, StochOrder};
pub use report::{CheckReport, Verdict, Witness};
pub use system::{i1_statistic, ShockedSystem, SystemModel};
pub use theorems::{run_theorem, run_theorem_with_grid, TheoremId, TheoremReport, TheoremScenario};
