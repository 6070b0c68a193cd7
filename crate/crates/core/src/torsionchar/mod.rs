//! Characteristic polynomials of linear functions on torsion points.

mod charpoly;
mod checks;
mod coord;

pub use charpoly::{
    charpoly, charpoly_matrix, charpoly_matrix_with, charpoly_n2, charpoly_resultant, curve_equation_in_x,
    multiplication_matrix, CharPolyResult, Method,
};
pub use checks::{
    coefficient_valuations, numeric_root_check, scaling_experiment, valuation_profile, ScalingProfile, ScalingRow,
    ValuationCheck, ValuationProfile,
};
pub use coord::{CoordElem, QuotientRing};

#[cfg(test)]
mod tests;
