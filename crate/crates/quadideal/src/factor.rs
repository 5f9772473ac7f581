//! Prime splitting of rational primes and divisor-chain factorization.
//!
//! `factor_ideal` realizes the chain construction behind the
//! containment-division characterization: repeatedly pick a prime ideal
//! containing the current ideal and divide exactly, recording the
//! ascending chain of quotients. In a maximal order this always
//! terminates at the unit ideal; in a non-maximal order the division
//! step can fail, and that failure is itself a containment-division
//! violation witness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{is_rational_prime, smallest_prime_factor};
use crate::error::{Error, Result};
use crate::ideal::{enumerate_of_norm, Ideal, IdealSet};
use crate::order::RingSpec;

/// How a rational prime decomposes in the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitKind {
    /// Two distinct primes of norm `p`, with product `(p)`.
    Split,
    /// `(p)` itself is prime, of norm `p²`.
    Inert,
    /// One prime `P` of norm `p` with `P² = (p)`.
    Ramified,
}

impl SplitKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitKind::Split => "split",
            SplitKind::Inert => "inert",
            SplitKind::Ramified => "ramified",
        }
    }
}

/// Decomposition of a rational prime `p` coprime to the conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResult {
    pub p: BigInt,
    pub kind: SplitKind,
    /// The distinct primes above `p`, in canonical order.
    pub primes: Vec<Ideal>,
}

/// Kummer–Dedekind splitting: factor `x² − T·x + Nc` modulo `p`.
///
/// Two distinct roots give a split prime pair `(p, −r mod p, 1)`; no root
/// gives the inert `(p)`; a double root gives the ramified prime. Only
/// valid away from the conductor: at `p | f` the primes above `p` must
/// be found by norm enumeration instead, and asking here is an error.
pub fn split_rational_prime(ring: &RingSpec, p: &BigInt) -> Result<SplitResult> {
    if !is_rational_prime(p) {
        return Err(Error::NotPrime { n: p.clone() });
    }
    if (ring.conductor() % p).is_zero() {
        return Err(Error::ConductorPrime { p: p.clone(), f: ring.conductor().clone() });
    }
    let mut roots = Vec::new();
    let mut r = BigInt::zero();
    while &r < p {
        let value = &r * &r - ring.theta_trace() * &r + ring.theta_norm();
        if value.mod_floor(p).is_zero() {
            roots.push(r.clone());
        }
        r += 1;
    }
    let prime_at = |root: &BigInt| -> Ideal {
        Ideal::from_hnf(ring, p.clone(), (-root).mod_floor(p), BigInt::one())
            .expect("root of the minimal polynomial gives a theta-closed lattice")
    };
    let (kind, mut primes) = match roots.as_slice() {
        [] => {
            let inert = Ideal::from_hnf(ring, p.clone(), BigInt::zero(), p.clone())
                .expect("(p) is an ideal");
            (SplitKind::Inert, vec![inert])
        }
        [r] => (SplitKind::Ramified, vec![prime_at(r)]),
        [r1, r2] => (SplitKind::Split, vec![prime_at(r1), prime_at(r2)]),
        _ => unreachable!("a quadratic has at most two roots mod a prime"),
    };
    primes.sort_by_cached_key(Ideal::sort_key);
    Ok(SplitResult { p: p.clone(), kind, primes })
}

/// One link of a divisor chain: `previous = quotient · prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub prime: Ideal,
    pub quotient: Ideal,
}

/// The ascending chain `I = I₀ ⊆ I₁ ⊆ ⋯ ⊆ Iₘ` produced by repeated
/// exact division by primes, with the prime extracted at each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorChain {
    pub start: Ideal,
    pub steps: Vec<ChainStep>,
    /// Whether the chain provably stays constant from its last entry on
    /// (it ended at the unit ideal, or its last two quotients are equal).
    pub stationary: bool,
}

impl DivisorChain {
    /// The chain as a plain list of ideals: start followed by every
    /// quotient.
    pub fn ideals(&self) -> Vec<Ideal> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start.clone());
        out.extend(self.steps.iter().map(|s| s.quotient.clone()));
        out
    }
}

/// Result of `factor_ideal`: the extracted prime multiset and the chain
/// that produced it. The product of `factors` reconstructs the input
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<Ideal>,
    pub chain: DivisorChain,
}

/// Default step budget `⌊log₂ norm⌋ + 1`: tight in maximal orders, where
/// every proper division at least halves the norm. Needing more steps is
/// itself a signal that the order is not a containment-division ring.
pub fn default_max_steps(ideal: &Ideal) -> usize {
    ideal.norm().bits() as usize
}

/// All prime ideals above `p`, in canonical order. Uses polynomial
/// splitting away from the conductor and falls back to enumerating norms
/// `p` and `p²` at conductor primes.
fn primes_above(ring: &RingSpec, p: &BigInt) -> Result<Vec<Ideal>> {
    if (ring.conductor() % p).is_zero() {
        let mut candidates: Vec<Ideal> = enumerate_of_norm(ring, p).into_vec();
        candidates.extend(enumerate_of_norm(ring, &(p * p)).into_vec());
        Ok(IdealSet::new(ring, candidates)
            .into_vec()
            .into_iter()
            .filter(Ideal::is_prime)
            .collect())
    } else {
        Ok(split_rational_prime(ring, p)?.primes)
    }
}

/// Factor an ideal by the divisor-chain procedure.
///
/// At each step: take the smallest rational prime `p` dividing the
/// current norm; among the primes above `p` that contain the current
/// ideal, pick the least in canonical order; divide exactly. Stops at the
/// unit ideal.
///
/// Errors: `NoContainingPrime` if no prime above `p` contains the current
/// ideal (impossible in maximal orders); `NotDivisible` if containment
/// holds but exact division fails (a containment-division violation,
/// expected only at conductor > 1); `ChainExceeded` if `max_steps` (default
/// `⌊log₂ norm⌋ + 1`) is hit.
pub fn factor_ideal(ideal: &Ideal, max_steps: Option<usize>) -> Result<Factorization> {
    let budget = max_steps.unwrap_or_else(|| default_max_steps(ideal));
    assert!(budget >= 1, "max_steps must be >= 1");
    let ring = ideal.ring().clone();
    let mut steps: Vec<ChainStep> = Vec::new();
    let mut current = ideal.clone();
    while !current.is_unit() {
        if steps.len() >= budget {
            return Err(Error::ChainExceeded { max_steps: budget });
        }
        let p = smallest_prime_factor(&current.norm()).expect("norm >= 2 for a proper ideal");
        let prime = primes_above(&ring, &p)?
            .into_iter()
            .find(|candidate| candidate.contains(&current).expect("same ring"))
            .ok_or_else(|| Error::NoContainingPrime { p: p.clone(), ideal: current.to_string() })?;
        let quotient = current
            .divide_exact(&prime)?
            .ok_or_else(|| Error::NotDivisible { i: current.to_string(), j: prime.to_string() })?;
        steps.push(ChainStep { prime, quotient: quotient.clone() });
        current = quotient;
    }
    let factors = steps.iter().map(|s| s.prime.clone()).collect();
    Ok(Factorization {
        factors,
        chain: DivisorChain { start: ideal.clone(), steps, stationary: true },
    })
}

/// Verdict of `check_dicc_chain`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiccCheck {
    /// Every consecutive pair satisfies "the next entry divides the
    /// previous one exactly".
    pub is_divisor_chain: bool,
    /// Smallest index from which the finite chain is constant; `None`
    /// when the last two entries still differ.
    pub stationary_at: Option<usize>,
}

/// Check a finite chain `I₀ ⊆ I₁ ⊆ ⋯` for the divisor-chain property and
/// stationarity.
pub fn check_dicc_chain(chain: &[Ideal]) -> Result<DiccCheck> {
    assert!(!chain.is_empty(), "chain must be nonempty");
    let ring = chain[0].ring();
    for ideal in &chain[1..] {
        if ideal.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.to_string(),
                right: ideal.ring().to_string(),
            });
        }
    }
    let mut is_divisor_chain = true;
    for window in chain.windows(2) {
        if window[0].divide_exact(&window[1])?.is_none() {
            is_divisor_chain = false;
            break;
        }
    }
    let mut suffix_start = chain.len() - 1;
    while suffix_start > 0 && chain[suffix_start - 1] == chain[suffix_start] {
        suffix_start -= 1;
    }
    let stationary_at = if chain.len() == 1 || suffix_start < chain.len() - 1 {
        Some(suffix_start)
    } else {
        None
    };
    Ok(DiccCheck { is_divisor_chain, stationary_at })
}
