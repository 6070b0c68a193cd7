use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::{reduce_mod_p, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::exactmath::{is_prime, primes_up_to, Rational};

pub const DEFAULT_PROBE_BOUND: u64 = 100_000;

/// Outcome of the Frobenius scan for `-id` in the mod-`l` image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MinusIdProbeResult {
    /// Smallest good prime `p = 1 mod l` with `a_p = -2 mod l`. A proof
    /// that `-id` is in the image.
    Found { prime: u64, ap: i64 },
    /// No witness up to the bound. Evidence only.
    NotFoundUpTo { bound: u64 },
}

impl MinusIdProbeResult {
    pub fn is_found(&self) -> bool {
        matches!(self, MinusIdProbeResult::Found { .. })
    }
}

/// Scans good primes `p <= bound` with `p = 1 mod ell` for `a_p = -2 mod ell`.
/// Primes where the curve is not `p`-integral are skipped.
pub fn minus_id_probe(curve: &WeierstrassCurve<Rational>, ell: u64, bound: u64) -> Result<MinusIdProbeResult> {
    if ell == 2 || !is_prime(ell) {
        return Err(Error::InvalidArgument(format!("ell must be an odd prime, got {ell}")));
    }
    let candidates: Vec<u64> = primes_up_to(bound).into_iter().filter(|p| p % ell == 1).collect();
    let hit = candidates.par_iter().find_map_first(|&p| {
        let fp = match reduce_mod_p(curve, p) {
            Ok(Ok(fp)) => fp,
            Ok(Err(_)) => return None,
            Err(e) => return Some(Err(e)),
        };
        match fp.trace_of_frobenius() {
            Ok(ap) if (ap + 2).rem_euclid(ell as i64) == 0 => Some(Ok((p, ap))),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        }
    });
    match hit {
        Some(Ok((prime, ap))) => Ok(MinusIdProbeResult::Found { prime, ap }),
        Some(Err(e)) => Err(e),
        None => Ok(MinusIdProbeResult::NotFoundUpTo { bound }),
    }
}
