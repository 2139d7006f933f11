//! Exact matrices, the standard symplectic form, Lagrangian subspaces, the
//! Maslov index and the Lagrangian crossratio.

mod lagrangian;
mod matrix;
mod symplectic;

pub use lagrangian::{
    crossratio, inertia, is_maximal_triple, lagrangian_span, maslov, maslov_full, maslov_gram, transverse,
    Inertia, Lagrangian, MaslovIndex,
};
pub use matrix::Matrix;
pub use symplectic::{form_for, is_symplectic, SymplecticForm};

/// Lagrangian over `Q(X)`.
pub type LagrangianK = Lagrangian<crate::fields::RatFunc>;
/// Matrix over `Q(X)`.
pub type MatrixK = Matrix<crate::fields::RatFunc>;
