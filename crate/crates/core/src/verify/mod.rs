//! Root-lattice and orbit-dimension checks on constructed line sets.

mod density;
mod lattice;

pub use density::{codim_orbit, density_check, lie_algebra_basis, DensityOutcome, Group};
pub use lattice::{
    cartan, gap_count, grading_element, line_weight, root_system_type, separation_rank,
    separation_witness, GradingElement, SeparationMatrix, Weight,
};
