//! Entanglement created by spontaneous emission in a pair of dipole-coupled
//! two-level atoms.
//!
//! The crate is organised bottom-up:
//!
//! - [`couplings`]: collective damping `Γ12` and dipole-dipole shift `Ω12`
//!   from the interatomic geometry.
//! - [`statespace`]: density-matrix value types in the product, Bell and
//!   collective bases, with the maps between them.
//! - [`dynamics`]: closed-form evolution for identical atoms, an ODE
//!   integration of the collective equations of motion, and a full
//!   master-equation integrator in the product basis.
//! - [`entanglement`]: concurrence and negativity, both as closed forms for
//!   block (X-shaped) states and as generic 4×4 routes.
//! - [`scenario`]: named scenarios, trajectory records, parameter sweeps,
//!   figure tables and their CSV / key-value file formats.
//!
//! Rates are measured in units of the single-atom decay rate and times in
//! units of its inverse.

pub mod couplings;
pub mod dynamics;
pub mod entanglement;
mod error;
pub mod ode;
pub mod scenario;
pub mod statespace;

pub use couplings::{CouplingRates, Geometry};
pub use dynamics::{AtomPairParams, TimeGrid};
pub use entanglement::EntanglementReport;
pub use error::{Error, Result};
pub use scenario::{Scenario, TrajectoryRecord};
pub use statespace::{BellState4, BlockState, CollectiveState, DensityMatrix4};
