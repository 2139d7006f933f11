//! Group presentations, words, representations into `Sp(2n, K)`, closed
//! point verdicts and maximal framings.

mod attracting;
mod closed;
mod framing;
mod model;
pub mod pants;
mod table;
mod word;

pub use attracting::{attracting_lagrangian, unipotent_fixed_lagrangian};
pub use closed::{
    closed_point_verdict, level_lengths, min_entry_valuation, sweep_for_witness, ClosedPointVerdict, Level,
    SweepOptions, WordBall, DEFAULT_DEGREE_BOUND, DEFAULT_RADIUS,
};
pub use framing::{is_positively_oriented, verify_maximal_framing, FramingReport, FramingTable, FramingViolation, Symmetry};
pub use model::{BoundaryPoint, DiagonalModel};
pub use pants::{pants_cusp_framing, pants_representation};
pub use table::{GroupPresentation, RepTable};
pub use word::{reduced_words, reduced_words_up_to, Letter, Word};
