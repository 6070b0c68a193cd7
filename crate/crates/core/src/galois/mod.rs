//! Mod-3 images over Q, the Frobenius probe for `-id` and irreducibility
//! witnesses from degree patterns.

mod classify;
mod irreducible;
pub mod lattice;
mod probe;

pub use classify::{classify_mod3, is_square_in_quadratic_field, Mod3Classification, Mod3Evidence, Qualifier};
pub use irreducible::{probable_irreducible, Irreducibility};
pub use lattice::{Mat3, Mod3Label};
pub use probe::{minus_id_probe, MinusIdProbeResult, DEFAULT_PROBE_BOUND};
