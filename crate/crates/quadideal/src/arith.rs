//! Exact big-integer utilities and 2-row integer lattice normal forms.
//!
//! Everything here is plain `Z`-module arithmetic: no ring structure, no
//! rationals, no floating point. Lattices in `Z^2` are written in a
//! column-style Hermite normal form `{(a, 0), (b, c)}` with `a >= 1`,
//! `c >= 1` and `0 <= b < a`, which makes lattice equality a triple
//! comparison.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A column vector in `Z^2`. `x` is the coefficient of 1, `y` the
/// coefficient of the generator θ of whatever rank-2 module the caller
/// is working in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vec2 {
    pub x: BigInt,
    pub y: BigInt,
}

impl Vec2 {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Vec2 { x: x.into(), y: y.into() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// Canonical basis `{(a, 0), (b, c)}` of a full-rank sublattice of `Z^2`.
///
/// Invariants: `a >= 1`, `c >= 1`, `0 <= b < a`. The index of the lattice
/// in `Z^2` is `a * c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfBasis {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl HnfBasis {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        let basis = HnfBasis { a: a.into(), b: b.into(), c: c.into() };
        debug_assert!(basis.a.is_positive() && basis.c.is_positive());
        debug_assert!(!basis.b.is_negative() && basis.b < basis.a);
        basis
    }

    /// Index of the lattice in `Z^2`.
    pub fn det(&self) -> BigInt {
        &self.a * &self.c
    }

    /// Membership test for a column vector.
    pub fn contains_vec(&self, v: &Vec2) -> bool {
        if !v.y.is_rem_euclid_zero(&self.c) {
            return false;
        }
        let k = &v.y / &self.c;
        (&v.x - k * &self.b).is_rem_euclid_zero(&self.a)
    }
}

trait RemEuclidZero {
    fn is_rem_euclid_zero(&self, m: &BigInt) -> bool;
}

impl RemEuclidZero for BigInt {
    fn is_rem_euclid_zero(&self, m: &BigInt) -> bool {
        (self % m).is_zero()
    }
}

/// Extended gcd with the sign convention `g >= 0`.
///
/// Returns `(g, s, t)` with `g = gcd(u, v)` and `s*u + t*v = g`.
/// `g = 0` only when `u = v = 0`, and that degenerate case returns
/// `(0, 0, 0)`.
pub fn xgcd(u: &BigInt, v: &BigInt) -> (BigInt, BigInt, BigInt) {
    if u.is_zero() && v.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    let (mut r0, mut r1) = (u.clone(), v.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    (r0, s0, t0)
}

/// Hermite normal form of the integer span of a list of columns.
///
/// Returns `None` when the span has rank < 2 (all columns zero, or all
/// columns multiples of a single vector). Rank deficiency is how callers
/// detect degenerate generator sets, so it is not an error.
pub fn hnf_2xk(columns: &[Vec2]) -> Option<HnfBasis> {
    // Accumulate a combination v of the columns whose y-coordinate is the
    // gcd of all y-coordinates; v.y == g is maintained by the xgcd step.
    let mut g = BigInt::zero();
    let mut v = Vec2::new(0, 0);
    for col in columns {
        let (g2, s, t) = xgcd(&g, &col.y);
        v = Vec2 {
            x: &s * &v.x + &t * &col.x,
            y: &s * &v.y + &t * &col.y,
        };
        g = g2;
    }
    if g.is_zero() {
        return None;
    }
    let c = g;
    // Clearing the y-coordinate of every column against v leaves the
    // x-coordinates of the rank-1 remainder; their gcd is the diagonal a.
    let mut a = BigInt::zero();
    for col in columns {
        let k = &col.y / &c;
        a = a.gcd(&(&col.x - k * &v.x));
    }
    if a.is_zero() {
        return None;
    }
    let b = v.x.mod_floor(&a);
    Some(HnfBasis { a, b, c })
}

/// The sublattice `{(u, v) : alpha*u + beta*v ≡ 0 (mod m)}` of `Z^2`,
/// for `m >= 1`. Always full rank (it contains `m * Z^2`).
pub(crate) fn congruence_lattice(alpha: &BigInt, beta: &BigInt, m: &BigInt) -> HnfBasis {
    debug_assert!(m.is_positive());
    let alpha = alpha.mod_floor(m);
    let beta = beta.mod_floor(m);
    let g1 = alpha.gcd(m);
    let a = m / &g1;
    // Smallest admissible v-coordinate: g1 must divide beta * v.
    let c = &g1 / beta.gcd(&g1);
    // Solve alpha*u ≡ -beta*c (mod m); after dividing by g1 the
    // coefficient alpha/g1 is invertible mod a.
    let rhs = -(&beta * &c) / &g1;
    let (unit, s, _) = xgcd(&(&alpha / &g1), &a);
    debug_assert!(unit.is_one() || a.is_one());
    let b = (s * rhs).mod_floor(&a);
    HnfBasis { a, b, c }
}

/// Intersection of two full-rank sublattices of `Z^2`, in normal form.
pub(crate) fn lattice_intersect(l1: &HnfBasis, l2: &HnfBasis) -> HnfBasis {
    let a = l1.a.lcm(&l2.a);
    let c0 = l1.c.lcm(&l2.c);
    let m1 = &c0 / &l1.c;
    let m2 = &c0 / &l2.c;
    // A vector (x, k*c0) lies in both lattices iff x solves the pair of
    // congruences below; solvability forces k to be a multiple of k0.
    let d = &m1 * &l1.b - &m2 * &l2.b;
    let g = l1.a.gcd(&l2.a);
    let k0 = &g / g.gcd(&d);
    let c = c0 * &k0;
    let r1 = &m1 * &l1.b * &k0;
    let r2 = &m2 * &l2.b * &k0;
    let (gg, s, _) = xgcd(&l1.a, &l2.a);
    debug_assert_eq!(gg, g);
    debug_assert!((&r2 - &r1).is_rem_euclid_zero(&g));
    let x0 = &r1 + &l1.a * s * ((r2 - &r1) / g);
    let b = x0.mod_floor(&a);
    let result = HnfBasis { a, b, c };
    debug_assert!(l1.contains_vec(&Vec2 { x: result.b.clone(), y: result.c.clone() }));
    debug_assert!(l2.contains_vec(&Vec2 { x: result.b.clone(), y: result.c.clone() }));
    result
}

/// Smallest prime factor of `n`, by trial division. `None` for `n < 2`.
pub fn smallest_prime_factor(n: &BigInt) -> Option<BigInt> {
    let two = BigInt::from(2);
    if n < &two {
        return None;
    }
    let mut p = two;
    while &p * &p <= *n {
        if n.is_rem_euclid_zero(&p) {
            return Some(p);
        }
        p += 1;
    }
    Some(n.clone())
}

/// Trial-division primality test, adequate at desk scale.
pub fn is_rational_prime(n: &BigInt) -> bool {
    smallest_prime_factor(n).is_some_and(|p| p == *n)
}
