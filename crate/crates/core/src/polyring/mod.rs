//! Polynomial arithmetic over exact rings.

pub mod factor;
pub mod fp;
pub mod numeric;
mod poly;
pub mod resultant;
mod ring;

pub use factor::{factor_quartic, quartic_galois, rational_roots, QuarticFactorization, QuarticGroup, QuarticSplitting};
pub use fp::{mod_p_degree_pattern, FpPoly, SkipReason};
pub use numeric::{numeric_roots, RootOptions};
pub use poly::{InexactDivision, Poly};
pub use resultant::{discriminant, discriminant_q, resultant, sylvester_matrix};
pub use ring::{Domain, Field, Ring};
