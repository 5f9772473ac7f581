//! Quadratic orders `R = Z + Zθ` and exact element arithmetic.
//!
//! The order of conductor `f` in `Q(√d)` is generated by `θ = f·ω`, where
//! `ω = (1+√d)/2` if `d ≡ 1 (mod 4)` and `ω = √d` otherwise. Both cases
//! are captured by the two integers `T = tr(θ)` and `Nc = N(θ)`, so every
//! element operation reduces to `θ² = T·θ − Nc`. Setting `f = 1` recovers
//! the maximal order (the ring of integers), which is the Dedekind case.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A quadratic order, identified by a squarefree `d ∉ {0, 1}` and a
/// conductor `f >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    d: BigInt,
    f: BigInt,
    theta_trace: BigInt,
    theta_norm: BigInt,
    disc: BigInt,
}

impl RingSpec {
    /// Construct the order of conductor `f` in `Q(√d)`.
    ///
    /// Rejects non-squarefree `d`, `d ∈ {0, 1}`, and `f <= 0`.
    pub fn new(d: impl Into<BigInt>, f: impl Into<BigInt>) -> Result<Self> {
        let d: BigInt = d.into();
        let f: BigInt = f.into();
        if d.is_zero() || d.is_one() {
            return Err(Error::InvalidRing { reason: format!("d must not be {d}") });
        }
        if !is_squarefree(&d.abs()) {
            return Err(Error::InvalidRing { reason: format!("d = {d} is not squarefree") });
        }
        if !f.is_positive() {
            return Err(Error::InvalidRing { reason: format!("conductor f = {f} must be >= 1") });
        }
        let four = BigInt::from(4);
        let f2 = &f * &f;
        let (theta_trace, theta_norm, disc_field) = if d.mod_floor(&four).is_one() {
            // θ = f(1+√d)/2, root of x² - f·x + f²(1-d)/4.
            (f.clone(), &f2 * (BigInt::one() - &d) / &four, d.clone())
        } else {
            // θ = f√d, root of x² - f²·d.
            (BigInt::zero(), -&f2 * &d, &four * &d)
        };
        let disc = f2 * disc_field;
        Ok(RingSpec { d, f, theta_trace, theta_norm, disc })
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn conductor(&self) -> &BigInt {
        &self.f
    }

    /// `T` in `θ² = T·θ − Nc` (the trace of θ).
    pub fn theta_trace(&self) -> &BigInt {
        &self.theta_trace
    }

    /// `Nc` in `θ² = T·θ − Nc` (the norm of θ).
    pub fn theta_norm(&self) -> &BigInt {
        &self.theta_norm
    }

    /// Discriminant of the order, `f² · disc_K`.
    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    /// The order is maximal (hence Dedekind) exactly when `f = 1`.
    pub fn is_maximal(&self) -> bool {
        self.f.is_one()
    }

    /// Exact product of two elements: `θ²` rewrites as `T·θ − Nc`.
    pub fn mul(&self, u: &Element, v: &Element) -> Element {
        let yy = &u.y * &v.y;
        Element {
            x: &u.x * &v.x - &self.theta_norm * &yy,
            y: &u.x * &v.y + &u.y * &v.x + &self.theta_trace * &yy,
        }
    }

    /// Multiplication by θ alone: `θ(x + yθ) = −Nc·y + (x + T·y)θ`.
    pub fn theta_mul(&self, u: &Element) -> Element {
        Element {
            x: -&self.theta_norm * &u.y,
            y: &u.x + &self.theta_trace * &u.y,
        }
    }

    /// Element norm `N(x + yθ) = x² + T·x·y + Nc·y²`; multiplicative, and
    /// for `d < 0` nonnegative with zero only at the zero element.
    pub fn norm(&self, u: &Element) -> BigInt {
        &u.x * &u.x + &self.theta_trace * &u.x * &u.y + &self.theta_norm * &u.y * &u.y
    }

    /// Minimal polynomial of θ rendered as text, e.g. `x^2 - x - 1`.
    pub fn min_poly_string(&self) -> String {
        let mut s = String::from("x^2");
        let neg_trace = -&self.theta_trace;
        for (coeff, suffix) in [(&neg_trace, "*x"), (&self.theta_norm, "")] {
            if coeff.is_zero() {
                continue;
            }
            let sign = if coeff.is_negative() { " - " } else { " + " };
            let mag = coeff.abs();
            s.push_str(sign);
            if mag.is_one() && !suffix.is_empty() {
                s.push_str(suffix.trim_start_matches('*'));
            } else {
                s.push_str(&mag.to_string());
                s.push_str(suffix);
            }
        }
        s
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "d={},f={}", self.d, self.f)
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Parse the ring-spec grammar `d=<int>,f=<int>`, e.g. `d=-5,f=1`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |position: usize, message: &str| Error::ParseError {
            position,
            message: message.to_string(),
        };
        let (d_part, f_part) = s
            .split_once(',')
            .ok_or_else(|| parse_err(s.len(), "expected `d=<int>,f=<int>`"))?;
        let d_str = d_part
            .trim()
            .strip_prefix("d=")
            .ok_or_else(|| parse_err(0, "expected `d=<int>`"))?;
        let f_str = f_part
            .trim()
            .strip_prefix("f=")
            .ok_or_else(|| parse_err(d_part.len() + 1, "expected `f=<int>`"))?;
        let d = BigInt::from_str(d_str.trim())
            .map_err(|_| parse_err(0, "d is not an integer"))?;
        let f = BigInt::from_str(f_str.trim())
            .map_err(|_| parse_err(d_part.len() + 1, "f is not an integer"))?;
        RingSpec::new(d, f)
    }
}

fn is_squarefree(n: &BigInt) -> bool {
    debug_assert!(!n.is_negative());
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            m /= &p;
            if (&m % &p).is_zero() {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// The ring element `x + yθ`, with exact integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub x: BigInt,
    pub y: BigInt,
}

impl Element {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Element { x: x.into(), y: y.into() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Element { x: n.into(), y: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Element { x: BigInt::zero(), y: BigInt::zero() }
    }

    pub fn one() -> Self {
        Element { x: BigInt::one(), y: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        Element { x: self.x + rhs.x, y: self.y + rhs.y }
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        Element { x: self.x - rhs.x, y: self.y - rhs.y }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { x: -self.x, y: -self.y }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{}+{}*w", self.x, self.y)
    }
}

/// The mixed bag of orders the test suites run against: maximal and
/// non-maximal, imaginary and real.
#[cfg(test)]
pub(crate) fn test_zoo() -> Vec<RingSpec> {
    [(-1, 1), (-2, 1), (-3, 1), (-5, 1), (5, 1), (13, 1), (-3, 2), (-1, 2), (5, 2), (-1, 3)]
        .into_iter()
        .map(|(d, f)| RingSpec::new(d, f).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn gaussian_integers() {
        let r = RingSpec::new(-1, 1).unwrap();
        assert_eq!(r.theta_trace(), &b(0));
        assert_eq!(r.theta_norm(), &b(1));
        assert_eq!(r.disc(), &b(-4));
        assert!(r.is_maximal());
        assert_eq!(r.min_poly_string(), "x^2 + 1");
    }

    #[test]
    fn golden_ratio_order() {
        let r = RingSpec::new(5, 1).unwrap();
        assert_eq!(r.theta_trace(), &b(1));
        assert_eq!(r.theta_norm(), &b(-1));
        assert_eq!(r.min_poly_string(), "x^2 - x - 1");
    }

    #[test]
    fn conductor_two_in_eisenstein_field() {
        // θ = 1 + √-3, root of x² - 2x + 4.
        let r = RingSpec::new(-3, 2).unwrap();
        assert_eq!(r.theta_trace(), &b(2));
        assert_eq!(r.theta_norm(), &b(4));
        assert_eq!(r.disc(), &b(-12));
        assert!(!r.is_maximal());
    }

    #[test]
    fn rejects_bad_parameters() {
        for (d, f) in [(0, 1), (1, 1), (4, 1), (12, 1), (-8, 1), (-5, 0), (-5, -2)] {
            assert!(
                matches!(RingSpec::new(d, f), Err(Error::InvalidRing { .. })),
                "expected rejection of d={d}, f={f}"
            );
        }
        assert!(RingSpec::new(-1, 1).is_ok());
        assert!(RingSpec::new(6, 7).is_ok());
    }

    #[test]
    fn ring_spec_round_trips_through_string() {
        for ring in test_zoo() {
            let parsed: RingSpec = ring.to_string().parse().unwrap();
            assert_eq!(parsed, ring);
        }
        assert!(matches!("d=-5".parse::<RingSpec>(), Err(Error::ParseError { .. })));
        assert!(matches!("d=x,f=1".parse::<RingSpec>(), Err(Error::ParseError { .. })));
        assert!(matches!("d=4,f=1".parse::<RingSpec>(), Err(Error::InvalidRing { .. })));
        assert!(" d=-5, f=2 ".parse::<RingSpec>().is_ok());
    }

    #[test]
    fn multiplication_examples() {
        let gauss = RingSpec::new(-1, 1).unwrap();
        let prod = gauss.mul(&Element::new(1, 1), &Element::new(1, -1));
        assert_eq!(prod, Element::new(2, 0));

        let r = RingSpec::new(-3, 2).unwrap();
        let theta = Element::new(0, 1);
        assert_eq!(r.mul(&theta, &theta), Element::new(-4, 2));

        let u = Element::new(7, -3);
        assert_eq!(r.mul(&u, &Element::one()), u);
    }

    #[test]
    fn norm_examples() {
        let gauss = RingSpec::new(-1, 1).unwrap();
        assert_eq!(gauss.norm(&Element::new(1, 1)), b(2));
        assert_eq!(gauss.norm(&Element::one()), b(1));
        let r = RingSpec::new(-5, 1).unwrap();
        assert_eq!(r.norm(&Element::new(1, 1)), b(6));
    }

    #[test]
    fn theta_satisfies_its_minimal_polynomial() {
        for ring in test_zoo() {
            let theta = Element::new(0, 1);
            let theta_sq = ring.mul(&theta, &theta);
            let lhs = theta_sq
                - Element {
                    x: BigInt::zero(),
                    y: ring.theta_trace().clone(),
                }
                + Element {
                    x: ring.theta_norm().clone(),
                    y: BigInt::zero(),
                };
            assert!(lhs.is_zero(), "minimal polynomial fails in {ring}");
        }
    }

    #[test]
    fn ring_axioms_on_random_triples() {
        // 10^4 triples spread over the zoo: associativity, commutativity,
        // distributivity of multiplication.
        let zoo = test_zoo();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xa10a);
        let sample = |rng: &mut rand_chacha::ChaCha8Rng| {
            Element::new(rng.gen_range(-1_000_000i64..=1_000_000), rng.gen_range(-1_000_000i64..=1_000_000))
        };
        for i in 0..10_000 {
            let ring = &zoo[i % zoo.len()];
            let (u, v, w) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
            assert_eq!(ring.mul(&u, &v), ring.mul(&v, &u));
            assert_eq!(ring.mul(&ring.mul(&u, &v), &w), ring.mul(&u, &ring.mul(&v, &w)));
            let lhs = ring.mul(&u, &(v.clone() + w.clone()));
            let rhs = ring.mul(&u, &v) + ring.mul(&u, &w);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn norm_is_multiplicative_per_ring() {
        // 10^4 random pairs in each zoo ring.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x4042);
        for ring in test_zoo() {
            for _ in 0..10_000 {
                let u = Element::new(rng.gen_range(-100_000i64..=100_000), rng.gen_range(-100_000i64..=100_000));
                let v = Element::new(rng.gen_range(-100_000i64..=100_000), rng.gen_range(-100_000i64..=100_000));
                assert_eq!(ring.norm(&ring.mul(&u, &v)), ring.norm(&u) * ring.norm(&v));
            }
        }
    }

    #[test]
    fn norm_positive_definite_for_imaginary_fields() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x90d);
        for ring in test_zoo().into_iter().filter(|r| r.d().is_negative()) {
            assert!(ring.norm(&Element::zero()).is_zero());
            for _ in 0..2_000 {
                let u = Element::new(rng.gen_range(-500i64..=500), rng.gen_range(-500i64..=500));
                let n = ring.norm(&u);
                if u.is_zero() {
                    assert!(n.is_zero());
                } else {
                    assert!(n.is_positive(), "norm of {u} not positive in {ring}");
                }
            }
        }
    }
}
