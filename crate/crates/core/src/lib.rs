//! Exact computations for surface-group representations over ordered,
//! valued fields: Q(X) with its non-Archimedean orders, Lagrangian geometry,
//! translation lengths via Newton polygons, closed-point detection and
//! geodesic-current periods.

pub mod currents;
pub mod error;
pub mod fields;
pub mod linalg;
pub mod reps;
pub mod spectra;
pub mod valuations;

pub use error::{Error, Result};
