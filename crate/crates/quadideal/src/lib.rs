//! Exact ideal arithmetic in quadratic orders, built to put one question
//! under a microscope: when does *containment* of ideals coincide with
//! *divisibility*?
//!
//! A commutative ring is a containment-division ring (CDR) when, for all
//! ideals, `I ⊆ J` holds exactly when some ideal `H` satisfies `I = H·J`.
//! In a Noetherian integral domain this property characterizes Dedekind
//! domains. Quadratic orders `Z + Zθ` make a perfect desk-scale testbed:
//! the maximal order (conductor 1) of `Q(√d)` is Dedekind, while every
//! non-maximal order is not. So the first kind should never show a
//! violation and the second kind always should, at small enough norms to
//! find by exhaustive search.
//!
//! Everything is exact big-integer arithmetic. Ideals live in a canonical
//! Hermite normal form `Z·a + Z·(b + cθ)`, so equality is a triple
//! comparison and every operation (product, containment, colon ideal,
//! exact division, prime splitting, factorization into a divisor chain)
//! is decidable and reproducible. A brute-force oracle ships alongside
//! the fast paths and is held to exact agreement by the test suite.
//!
//! ## Where to start
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p quadideal --example ring_tour          # orders and element arithmetic
//! cargo run -p quadideal --example ideal_basics      # HNF triples, norms, containment
//! cargo run -p quadideal --example divide_or_not     # exact division and the counterexample
//! cargo run -p quadideal --example factor_chain      # divisor-chain factorization
//! cargo run -p quadideal --example cdr_survey        # the verdict across a zoo of rings
//! cargo run -p quadideal --example oracle_agreement  # fast paths vs brute force
//! ```
//!
//! There is also a thin CLI over the same library surface:
//!
//! ```bash
//! cargo run -p quadideal -- --ring d=-5,f=1 factor --I "6"
//! cargo run -p quadideal -- --ring d=-3,f=2 check-cdr --norm-bound 50
//! ```
//!
//! ## Library sketch
//!
//! ```
//! use quadideal::{Ideal, RingSpec};
//!
//! // The non-maximal order Z[√-3] of conductor 2 inside Q(√-3).
//! let ring = RingSpec::new(-3, 2).unwrap();
//! let two = Ideal::from_hnf(&ring, 2, 0, 2).unwrap();   // (2)
//! let p = Ideal::from_hnf(&ring, 2, 0, 1).unwrap();     // (2, θ)
//!
//! // (2) sits inside (2, θ) ...
//! assert!(p.contains(&two).unwrap());
//! // ... and yet no ideal H gives (2) = H·(2, θ): containment-division
//! // fails, exposing that this order is not Dedekind.
//! assert_eq!(two.divide_exact(&p).unwrap(), None);
//! ```
//!
//! All values are immutable and all operations are pure functions, so
//! everything can be shared freely across threads.

pub mod arith;
pub mod cdr;
pub mod cli;
mod error;
pub mod factor;
pub mod ideal;
pub mod oracle;
pub mod order;

pub use cdr::{
    check_cdr, classify_ring, default_norm_bound, CdrReport, Classification, Verdict, Violation,
};
pub use error::{Error, Result};
pub use factor::{
    check_dicc_chain, factor_ideal, split_rational_prime, ChainStep, DiccCheck, DivisorChain,
    Factorization, SplitKind, SplitResult,
};
pub use ideal::{enumerate_of_norm, enumerate_up_to, Ideal, IdealSet};
pub use oracle::{brute_divide, count_ideals};
pub use order::{Element, RingSpec};
