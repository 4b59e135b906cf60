//! Exact rational Betti numbers of moduli spaces of framed rank-two
//! torsion-free sheaves on the ruled surface `S = P(L ⊕ O)` over an elliptic
//! curve, computed by torus localization.
//!
//! The pipeline is:
//!
//! - [`partition`]: partitions in multiplicity form, indexing the fixed
//!   components of the torus action;
//! - [`graded`]: exact graded dimension vectors (Poincaré polynomials);
//! - [`spaces`]: Betti data of projective spaces, the curve and products of
//!   its symmetric powers;
//! - [`weights`]: torus weights of the normal directions at a fixed point;
//! - [`shift`]: the homological shift of each fixed component;
//! - [`moduli`]: the fixed-component catalog, the assembled Betti table and
//!   the enumeration of fiber splitting types;
//! - [`report`], [`verify`], [`cli`]: rendering, consistency sweeps and the
//!   command-line front end.

pub mod cli;
pub mod error;
pub mod graded;
pub mod moduli;
pub mod partition;
pub mod report;
pub mod shift;
pub mod spaces;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use graded::GradedDims;
pub use moduli::{ChernInvariants, ComponentContribution, FixedComponent, SplittingType};
pub use partition::Partition;
pub use shift::ShiftInput;
pub use weights::{WeightMultiset, WeightTriple};
