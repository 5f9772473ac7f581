//! Independent brute-force implementations used to validate the fast
//! paths. They ship in the library (not just in test code) so any
//! suspicious pair can be cross-checked from the command line; the whole
//! credibility of the fast arithmetic rests on agreeing with these.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::ideal::{enumerate_of_norm, Ideal};
use crate::order::RingSpec;

/// Literal witness search for exact division: enumerate every ideal `H`
/// of norm up to `search_norm_cap` in canonical order and return the
/// first with `H·j = i`.
///
/// Any witness `H` satisfies `i = H·j ⊆ H`, so `norm(H)` divides
/// `norm(i)`; a cap of at least `norm(i)` therefore makes absence
/// conclusive. Smaller caps still run, but bound the search only.
pub fn brute_divide(i: &Ideal, j: &Ideal, search_norm_cap: &BigInt) -> Result<Option<Ideal>> {
    let mut n = BigInt::one();
    while &n <= search_norm_cap {
        for h in enumerate_of_norm(i.ring(), &n).iter() {
            if &h.mul(j)? == i {
                return Ok(Some(h.clone()));
            }
        }
        n += 1;
    }
    Ok(None)
}

/// Sizes of the norm-`n` ideal slices for `n = 1..=n_max`. In a maximal
/// order these are the coefficients of the Dedekind zeta function of the
/// field.
pub fn count_ideals(ring: &RingSpec, n_max: u64) -> Vec<usize> {
    (1..=n_max)
        .map(|n| enumerate_of_norm(ring, &BigInt::from(n)).len())
        .collect()
}
