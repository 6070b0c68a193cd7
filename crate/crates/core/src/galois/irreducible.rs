use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactmath::Rational;
use crate::polyring::{mod_p_degree_pattern, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Irreducibility {
    IrreducibleCertified,
    Undecided,
}

/// Degrees reachable as sums of a sub-multiset of `pattern`.
fn subset_sums(pattern: &[usize], deg: usize) -> Vec<bool> {
    let mut reach = vec![false; deg + 1];
    reach[0] = true;
    for &d in pattern {
        for s in (d..=deg).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// A rational factor of degree `k` reduces to a sub-multiset of every
/// mod-`p` pattern, so if only `0` and `deg f` survive the intersection of
/// the subset sums, `f` is irreducible. Bad primes are skipped.
pub fn probable_irreducible(f: &Poly<Rational>, primes: &[u64]) -> Result<Irreducibility> {
    let Some(deg) = f.degree() else {
        return Ok(Irreducibility::Undecided);
    };
    if deg == 1 {
        return Ok(Irreducibility::IrreducibleCertified);
    }
    if deg == 0 {
        return Ok(Irreducibility::Undecided);
    }
    let mut common = vec![true; deg + 1];
    for &p in primes {
        let Ok(pattern) = mod_p_degree_pattern(f, p)? else {
            continue;
        };
        for (c, r) in common.iter_mut().zip(subset_sums(&pattern, deg)) {
            *c &= r;
        }
        if common[1..deg].iter().all(|c| !c) {
            return Ok(Irreducibility::IrreducibleCertified);
        }
    }
    Ok(Irreducibility::Undecided)
}
