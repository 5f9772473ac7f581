//! The theorem harness: decide, over a bounded ideal universe, whether
//! the containment-division biconditional holds, and cross-check the
//! verdict against the Dedekind classification (conductor = 1).
//!
//! A bounded check can refute the property but never certify it, so the
//! positive verdict is named `cdr_up_to_bound` rather than `cdr`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::enumerate_up_to;
use crate::ideal::Ideal;
use crate::order::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// No violation among ideals of norm up to the bound.
    CdrUpToBound,
    /// At least one pair `I ⊆ J` with `J ∤ I`.
    NotCdr,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CdrUpToBound => "cdr_up_to_bound",
            Verdict::NotCdr => "not_cdr",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.as_str())
    }
}

/// A pair witnessing failure of the containment-division property:
/// `i ⊆ j` holds but no ideal `H` satisfies `i = H·j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub i: Ideal,
    pub j: Ideal,
}

/// Outcome of a bounded containment-division check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdrReport {
    pub ring: RingSpec,
    pub norm_bound: u64,
    pub universe_size: usize,
    pub pairs_checked: usize,
    /// Sorted by `(norm(I), I.a, I.b, norm(J), J.a, J.b)`.
    pub violations: Vec<Violation>,
    pub verdict: Verdict,
    /// Whether the ring is Dedekind on structural grounds (`f = 1`).
    pub dedekind_expected: bool,
}

/// Default universe bound: 30 for maximal orders, 50 for non-maximal
/// ones, comfortably past the small norms where every known violation
/// lives.
pub fn default_norm_bound(ring: &RingSpec) -> u64 {
    if ring.is_maximal() {
        30
    } else {
        50
    }
}

/// Check the containment-division biconditional on every ordered pair of
/// ideals of norm `1..=norm_bound` (the zero ideal is excluded from the
/// universe: it satisfies the biconditional trivially).
///
/// The "divides ⇒ contains" direction is true in every commutative ring,
/// so it is enforced as a hard sanity check: a failure aborts with
/// `InternalArithmeticBug` instead of being reported as a finding. Only
/// "contains but does not divide" pairs land in `violations`.
pub fn check_cdr(ring: &RingSpec, norm_bound: u64) -> Result<CdrReport> {
    let universe = enumerate_up_to(ring, norm_bound);
    let mut violations = Vec::new();
    for i in universe.iter() {
        for j in universe.iter() {
            match i.divide_exact(j)? {
                Some(h) => {
                    let rebuilt = h.mul(j)?;
                    if rebuilt != *i || !j.contains(i)? {
                        return Err(Error::InternalArithmeticBug {
                            details: format!(
                                "divide_exact({i}, {j}) returned {h} but mul/contains disagree"
                            ),
                        });
                    }
                }
                None => {
                    if j.contains(i)? {
                        violations.push(Violation { i: i.clone(), j: j.clone() });
                    }
                }
            }
        }
    }
    // Universe iteration is already canonical, so violations come out in
    // (norm(I), I.a, I.b, norm(J), J.a, J.b) order.
    let verdict = if violations.is_empty() {
        Verdict::CdrUpToBound
    } else {
        Verdict::NotCdr
    };
    Ok(CdrReport {
        ring: ring.clone(),
        norm_bound,
        universe_size: universe.len(),
        pairs_checked: universe.len() * universe.len(),
        violations,
        verdict,
        dedekind_expected: ring.is_maximal(),
    })
}

/// Joint classification: structural Dedekind test against the bounded
/// containment-division verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// `f = 1`.
    pub dedekind: bool,
    pub verdict: Verdict,
    /// Whether the two agree. A non-maximal order that still shows no
    /// violation is reported as inconsistent: the bound was too small to
    /// surface one, and the caller should raise it.
    pub consistent: bool,
}

/// Classify the ring: `dedekind ⟺ f = 1`, then compare with the bounded
/// check's verdict.
pub fn classify_ring(ring: &RingSpec, norm_bound: u64) -> Result<Classification> {
    let report = check_cdr(ring, norm_bound)?;
    let dedekind = ring.is_maximal();
    let consistent = dedekind == (report.verdict == Verdict::CdrUpToBound);
    Ok(Classification { dedekind, verdict: report.verdict, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use crate::order::test_zoo;

    fn ring(d: i64, f: i64) -> RingSpec {
        RingSpec::new(d, f).unwrap()
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn maximal_orders_show_no_violations() {
        for r in [ring(-1, 1), ring(-5, 1)] {
            let report = check_cdr(&r, 10).unwrap();
            assert_eq!(report.verdict, Verdict::CdrUpToBound);
            assert!(report.violations.is_empty());
            assert!(report.dedekind_expected);
            assert_eq!(report.pairs_checked, report.universe_size * report.universe_size);
        }
    }

    #[test]
    fn conductor_two_orders_fail_at_the_known_pair() {
        for r in [ring(-3, 2), ring(-1, 2)] {
            let report = check_cdr(&r, 8).unwrap();
            assert_eq!(report.verdict, Verdict::NotCdr);
            let first = &report.violations[0];
            assert_eq!((first.i.a(), first.i.b(), first.i.c()), (&b(2), &b(0), &b(2)));
            assert_eq!((first.j.a(), first.j.b(), first.j.c()), (&b(2), &b(0), &b(1)));
        }
    }

    #[test]
    fn violations_are_monotone_in_the_bound() {
        let r = ring(-3, 2);
        let small = check_cdr(&r, 8).unwrap();
        let large = check_cdr(&r, 16).unwrap();
        assert!(!small.violations.is_empty());
        for violation in &small.violations {
            assert!(
                large.violations.contains(violation),
                "violation {}/{} retracted at larger bound",
                violation.i,
                violation.j
            );
        }
    }

    #[test]
    fn reports_are_deterministic() {
        for r in test_zoo() {
            let first = check_cdr(&r, 12).unwrap();
            let second = check_cdr(&r, 12).unwrap();
            assert_eq!(first, second);
        }
    }

    #[test]
    fn classification_examples() {
        let c = classify_ring(&ring(-5, 1), 10).unwrap();
        assert_eq!(
            c,
            Classification { dedekind: true, verdict: Verdict::CdrUpToBound, consistent: true }
        );

        let c = classify_ring(&ring(-3, 2), 8).unwrap();
        assert_eq!(
            c,
            Classification { dedekind: false, verdict: Verdict::NotCdr, consistent: true }
        );

        let c = classify_ring(&ring(-1, 2), 8).unwrap();
        assert_eq!(
            c,
            Classification { dedekind: false, verdict: Verdict::NotCdr, consistent: true }
        );

        // A bound too small to surface any violation reads as
        // inconsistent for a non-maximal order.
        let c = classify_ring(&ring(-3, 2), 3).unwrap();
        assert_eq!(
            c,
            Classification { dedekind: false, verdict: Verdict::CdrUpToBound, consistent: false }
        );
    }

    #[test]
    fn default_bounds() {
        assert_eq!(default_norm_bound(&ring(-5, 1)), 30);
        assert_eq!(default_norm_bound(&ring(-3, 2)), 50);
    }
}
