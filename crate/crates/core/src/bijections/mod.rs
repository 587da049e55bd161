//! Constructive bijections between path families, each with its inverse.

pub mod classic;
pub mod cycle;
pub mod dimer;
pub mod dxd;
pub mod finelike;
pub mod gv;
pub mod odd_ascents;
pub mod schroder_df;
pub mod verify;

pub use classic::{deutsch_involution, dyck_to_levine, levine_to_dyck, reverse_path};
pub use cycle::{cycle_rotate, cycle_rotate_marked, cycle_unrotate, cycle_unrotate_marked};
pub use dimer::{dimer_to_hill, hill_to_dimer, DimerCase};
pub use dxd::{du_to_dxd, dxd_to_du, dxd_to_du_explicit, dxd_to_du_traced};
pub use finelike::{fine_to_finelike, finelike_to_fine};
pub use gv::{chain_a, chain_b, chain_inverse, gv_adjust, gv_unadjust, Adjusted, GvClass};
pub use odd_ascents::{marks_to_odd_ascents, odd_ascents_to_marks};
pub use schroder_df::{df_to_schroder, schroder_to_df};
pub use verify::{verify_bijection, BijectionReport, Transport, BIJECTIONS};
