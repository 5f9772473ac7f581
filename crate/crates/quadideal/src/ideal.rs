//! Nonzero integral ideals of a quadratic order, in canonical HNF form,
//! with complete exact arithmetic: product, containment, colon ideal,
//! exact division, norm, primality, and bounded-norm enumeration.
//!
//! An ideal is stored as the lattice `Z·a + Z·(b + cθ)` with `a >= 1`,
//! `c >= 1`, `0 <= b < a`, `c | a`, `c | b`, and θ-closure
//! `a·c | b² + T·b·c + Nc·c²`. The triple is unique per ideal, so equality
//! is triple equality and `norm = a·c` is the lattice index in the ring.
//!
//! The zero ideal is deliberately not representable: containment-division
//! holds for it trivially (`(0) ⊆ J` and `(0) = (0)·J`), and excluding it
//! keeps `norm` and the HNF total.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{congruence_lattice, hnf_2xk, lattice_intersect, smallest_prime_factor, HnfBasis, Vec2};
use crate::error::{Error, Result};
use crate::order::{Element, RingSpec};

/// A nonzero integral ideal `Z·a + Z·(b + cθ)` of a quadratic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: RingSpec,
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Ideal {
    /// The smallest ideal containing all of `gens`: the HNF of the columns
    /// `{g, θ·g : g ∈ gens}`. `None` when every generator is zero.
    pub fn from_generators(ring: &RingSpec, gens: &[Element]) -> Option<Ideal> {
        let mut columns = Vec::with_capacity(2 * gens.len());
        for g in gens {
            columns.push(Vec2 { x: g.x.clone(), y: g.y.clone() });
            let tg = ring.theta_mul(g);
            columns.push(Vec2 { x: tg.x, y: tg.y });
        }
        let basis = hnf_2xk(&columns)?;
        Some(Ideal::from_basis_unchecked(ring.clone(), basis))
    }

    /// Validate a raw `(a, b, c)` triple against every ideal invariant and
    /// wrap it. The error names the first violated invariant.
    pub fn from_hnf(
        ring: &RingSpec,
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
    ) -> Result<Ideal> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        let fail = |violation: &str| Error::InvalidIdeal {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            violation: violation.to_string(),
        };
        if !a.is_positive() {
            return Err(fail("a must be >= 1"));
        }
        if !c.is_positive() {
            return Err(fail("c must be >= 1"));
        }
        if b.is_negative() || b >= a {
            return Err(fail("b must satisfy 0 <= b < a"));
        }
        if !(&a % &c).is_zero() {
            return Err(fail("c must divide a"));
        }
        if !(&b % &c).is_zero() {
            return Err(fail("c must divide b"));
        }
        let closure = &b * &b + ring.theta_trace() * &b * &c + ring.theta_norm() * &c * &c;
        if !(closure % (&a * &c)).is_zero() {
            return Err(fail("lattice is not closed under multiplication by theta"));
        }
        Ok(Ideal { ring: ring.clone(), a, b, c })
    }

    /// Wrap a basis that is known to be an ideal lattice (products of
    /// ideals, colon ideals, enumeration output). The invariants are
    /// asserted: a failure here is an arithmetic bug, not bad input.
    fn from_basis_unchecked(ring: RingSpec, basis: HnfBasis) -> Ideal {
        Ideal::from_hnf(&ring, basis.a, basis.b, basis.c)
            .expect("internally constructed lattice violates the ideal invariants")
    }

    /// The unit ideal `(1) = R`.
    pub fn unit(ring: &RingSpec) -> Ideal {
        Ideal {
            ring: ring.clone(),
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::one(),
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Lattice index of the ideal in the ring: `a·c`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.c
    }

    pub fn is_unit(&self) -> bool {
        self.a.is_one() && self.c.is_one()
    }

    /// The two basis elements `a` and `b + cθ`.
    pub fn basis(&self) -> (Element, Element) {
        (
            Element { x: self.a.clone(), y: BigInt::zero() },
            Element { x: self.b.clone(), y: self.c.clone() },
        )
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    /// Is `other ⊆ self`? Both basis vectors of `other` must lie in the
    /// lattice of `self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        if !(&other.a % &self.a).is_zero() || !(&other.c % &self.c).is_zero() {
            return Ok(false);
        }
        let k = &other.c / &self.c;
        Ok(((&other.b - k * &self.b) % &self.a).is_zero())
    }

    /// Ideal product: the HNF of the four pairwise products of basis
    /// elements. That integer span is already θ-closed.
    pub fn mul(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let (u1, u2) = self.basis();
        let (v1, v2) = other.basis();
        let mut columns = Vec::with_capacity(4);
        for u in [&u1, &u2] {
            for v in [&v1, &v2] {
                let p = self.ring.mul(u, v);
                columns.push(Vec2 { x: p.x, y: p.y });
            }
        }
        let basis = hnf_2xk(&columns).expect("product of nonzero ideals has full rank");
        Ok(Ideal::from_basis_unchecked(self.ring.clone(), basis))
    }

    /// The colon ideal `(self : other) ∩ R`: the largest integral ideal
    /// `H` with `H·other ⊆ self`.
    ///
    /// For `x = u + vθ`, membership of `x·w` in `self` (for each basis
    /// vector `w` of `other`) is a pair of linear congruences on `(u, v)`.
    /// Each pair cuts out a sublattice of `Z²`; the colon ideal is the
    /// intersection of the two sublattices. All of it is exact integer
    /// work through `xgcd`; no rationals anywhere.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let trace = self.ring.theta_trace();
        let nc = self.ring.theta_norm();
        let m1 = &self.c;
        let m2 = &self.a * &self.c;
        let mut solution: Option<HnfBasis> = None;
        let (w1, w2) = other.basis();
        for w in [&w1, &w2] {
            // x·w = (u·wx − Nc·v·wy) + (u·wy + v·(wx + T·wy))·θ.
            // The θ-coordinate must be divisible by c, and after peeling
            // that off the 1-coordinate must be divisible by a; clearing
            // denominators turns the second condition into a congruence
            // mod a·c.
            let alpha1 = &w.y;
            let beta1 = &w.x + trace * &w.y;
            let cond1 = congruence_lattice(alpha1, &beta1, m1);
            let alpha2 = &self.c * &w.x - &self.b * &w.y;
            let beta2 = -(nc * &self.c * &w.y + &self.b * &w.x + &self.b * trace * &w.y);
            let cond2 = congruence_lattice(&alpha2, &beta2, &m2);
            let per_vector = lattice_intersect(&cond1, &cond2);
            solution = Some(match solution {
                None => per_vector,
                Some(acc) => lattice_intersect(&acc, &per_vector),
            });
        }
        let basis = solution.expect("ideal has two basis vectors");
        Ok(Ideal::from_basis_unchecked(self.ring.clone(), basis))
    }

    /// Exact ideal division: the witness `H` with `H·other = self` if one
    /// exists, else `None`.
    ///
    /// The colon ideal is a complete decision procedure: any witness `H`
    /// satisfies `H ⊆ (self : other)`, so
    /// `self = H·other ⊆ (self : other)·other ⊆ self` forces the colon
    /// ideal itself to be a witness. Absence is only possible when the
    /// containment-division property fails on this pair or `self ⊄ other`.
    pub fn divide_exact(&self, other: &Ideal) -> Result<Option<Ideal>> {
        let h = self.colon(other)?;
        if h.mul(other)? == *self {
            Ok(Some(h))
        } else {
            Ok(None)
        }
    }

    /// Primality = maximality among proper ideals (equivalent for nonzero
    /// ideals of these orders, where every quotient by a nonzero ideal is
    /// finite).
    ///
    /// The norm of a prime is `p` or `p²`; otherwise the ideal splits off
    /// a proper container. Containers have norms properly dividing the
    /// norm (`I ⊆ J` forces `norm(J) | norm(I)` as lattice indices), so
    /// enumerating those norms decides maximality in every order,
    /// including at conductor primes.
    pub fn is_prime(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        let n = self.norm();
        let p = smallest_prime_factor(&n).expect("norm of a proper ideal is >= 2");
        if n == p {
            // Index-p lattices are maximal: the only proper divisor of the
            // norm is 1, the unit ideal.
            return true;
        }
        if n != &p * &p {
            return false;
        }
        for candidate in enumerate_of_norm(&self.ring, &p).members() {
            if candidate.contains(self).expect("same ring") {
                return false;
            }
        }
        true
    }

    /// Canonical ordering key `(norm, a, b)`.
    pub(crate) fn sort_key(&self) -> (BigInt, BigInt, BigInt) {
        (self.norm(), self.a.clone(), self.b.clone())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "[{}, {}+{}*w]", self.a, self.b, self.c)
    }
}

/// A duplicate-free list of ideals of one ring, sorted by `(norm, a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSet {
    ring: RingSpec,
    members: Vec<Ideal>,
}

impl IdealSet {
    pub fn new(ring: &RingSpec, mut members: Vec<Ideal>) -> IdealSet {
        debug_assert!(members.iter().all(|i| i.ring() == ring));
        members.sort_by_cached_key(Ideal::sort_key);
        members.dedup();
        IdealSet { ring: ring.clone(), members }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn members(&self) -> &[Ideal] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Ideal> {
        self.members.iter()
    }

    pub fn into_vec(self) -> Vec<Ideal> {
        self.members
    }
}

impl<'a> IntoIterator for &'a IdealSet {
    type Item = &'a Ideal;
    type IntoIter = std::slice::Iter<'a, Ideal>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Every ideal of norm exactly `n`, in canonical order.
///
/// `c` runs over the divisors of `n` with `c | n/c`; for each, `a = n/c`
/// and `b` runs over the multiples of `c` in `[0, a)`; the triple is kept
/// when θ-closure holds. Returns the empty set for `n < 1`.
pub fn enumerate_of_norm(ring: &RingSpec, n: &BigInt) -> IdealSet {
    let mut found = Vec::new();
    if n.is_positive() {
        let mut c = BigInt::one();
        while &c * &c <= *n {
            if (n % (&c * &c)).is_zero() {
                let a = n / &c;
                let mut b = BigInt::zero();
                while b < a {
                    let closure = &b * &b + ring.theta_trace() * &b * &c + ring.theta_norm() * &c * &c;
                    if (closure % n).is_zero() {
                        found.push(Ideal {
                            ring: ring.clone(),
                            a: a.clone(),
                            b: b.clone(),
                            c: c.clone(),
                        });
                    }
                    b += &c;
                }
            }
            c += 1;
        }
    }
    IdealSet::new(ring, found)
}

/// Every ideal of norm `1..=bound`, in canonical order. This is the
/// bounded universe the containment-division checker quantifies over.
pub fn enumerate_up_to(ring: &RingSpec, bound: u64) -> IdealSet {
    let mut all = Vec::new();
    for n in 1..=bound {
        all.extend(enumerate_of_norm(ring, &BigInt::from(n)).into_vec());
    }
    IdealSet::new(ring, all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::test_zoo;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn ring(d: i64, f: i64) -> RingSpec {
        RingSpec::new(d, f).unwrap()
    }

    fn ideal(r: &RingSpec, a: i64, bb: i64, c: i64) -> Ideal {
        Ideal::from_hnf(r, a, bb, c).unwrap()
    }

    fn triple(i: &Ideal) -> (BigInt, BigInt, BigInt) {
        (i.a().clone(), i.b().clone(), i.c().clone())
    }

    #[test]
    fn from_generators_examples() {
        let gauss = ring(-1, 1);
        let two = Ideal::from_generators(&gauss, &[Element::from_int(2)]).unwrap();
        assert_eq!(triple(&two), (b(2), b(0), b(2)));

        let r5 = ring(-5, 1);
        let p2 = Ideal::from_generators(&r5, &[Element::from_int(2), Element::new(1, 1)]).unwrap();
        assert_eq!(triple(&p2), (b(2), b(1), b(1)));

        let r32 = ring(-3, 2);
        let p = Ideal::from_generators(&r32, &[Element::from_int(2), Element::new(0, 1)]).unwrap();
        assert_eq!(triple(&p), (b(2), b(0), b(1)));

        assert!(Ideal::from_generators(&gauss, &[Element::zero(), Element::zero()]).is_none());
    }

    #[test]
    fn validate_hnf_accepts_and_rejects() {
        let gauss = ring(-1, 1);
        assert!(ideal(&gauss, 1, 0, 1).is_unit());

        let r5 = ring(-5, 1);
        assert_eq!(triple(&ideal(&r5, 2, 1, 1)), (b(2), b(1), b(1)));
        // (3, 1, 1) is one of the two split primes above 3: closure holds
        // because 3 | 1 + 5. It must validate, and it must be exactly what
        // the generators (3, 1+θ) produce.
        let p3 = ideal(&r5, 3, 1, 1);
        assert!(p3.is_prime());
        assert_eq!(
            Ideal::from_generators(&r5, &[Element::from_int(3), Element::new(1, 1)]).unwrap(),
            p3
        );

        let reject = |a: i64, bb: i64, c: i64, what: &str| {
            match Ideal::from_hnf(&r5, a, bb, c) {
                Err(Error::InvalidIdeal { violation, .. }) => {
                    assert!(violation.contains(what), "({a},{bb},{c}): got {violation}")
                }
                other => panic!("({a},{bb},{c}) should be invalid, got {other:?}"),
            }
        };
        reject(0, 0, 1, "a must be");
        reject(2, 0, 0, "c must be >= 1");
        reject(2, 2, 1, "0 <= b < a");
        reject(2, -1, 1, "0 <= b < a");
        reject(3, 0, 2, "c must divide a");
        reject(4, 1, 2, "c must divide b");
        reject(3, 0, 1, "closed under multiplication by theta");
    }

    #[test]
    fn norm_examples() {
        let gauss = ring(-1, 1);
        assert_eq!(Ideal::unit(&gauss).norm(), b(1));
        assert_eq!(ideal(&gauss, 2, 0, 2).norm(), b(4));
        assert_eq!(ideal(&ring(-5, 1), 2, 1, 1).norm(), b(2));
    }

    #[test]
    fn containment_examples() {
        let r32 = ring(-3, 2);
        let two = ideal(&r32, 2, 0, 2);
        let p = ideal(&r32, 2, 0, 1);
        assert!(p.contains(&two).unwrap());
        assert!(!two.contains(&p).unwrap());

        let gauss = ring(-1, 1);
        assert!(!ideal(&gauss, 3, 0, 3).contains(&ideal(&gauss, 2, 0, 2)).unwrap());

        for i in enumerate_up_to(&gauss, 12).iter() {
            assert!(i.contains(i).unwrap(), "reflexivity fails for {i}");
        }

        let mismatch = ideal(&ring(-5, 1), 2, 1, 1);
        assert!(matches!(p.contains(&mismatch), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn product_examples() {
        let r5 = ring(-5, 1);
        let p2 = ideal(&r5, 2, 1, 1);
        // P² = (2): 2 ramifies.
        assert_eq!(triple(&p2.mul(&p2).unwrap()), (b(2), b(0), b(2)));

        let r32 = ring(-3, 2);
        let p = ideal(&r32, 2, 0, 1);
        // P² = 2P has norm 8, not 4: the must-fail witness for norm
        // multiplicativity in a non-maximal order.
        let p_sq = p.mul(&p).unwrap();
        assert_eq!(triple(&p_sq), (b(4), b(0), b(2)));
        assert_eq!(p_sq.norm(), b(8));

        for i in enumerate_up_to(&r5, 10).iter() {
            assert_eq!(&i.mul(&Ideal::unit(&r5)).unwrap(), i);
        }
    }

    #[test]
    fn colon_examples() {
        let r32 = ring(-3, 2);
        let two = ideal(&r32, 2, 0, 2);
        let p = ideal(&r32, 2, 0, 1);
        assert_eq!(two.colon(&p).unwrap(), p);

        let gauss = ring(-1, 1);
        let four = ideal(&gauss, 4, 0, 4);
        assert_eq!(triple(&four.colon(&ideal(&gauss, 2, 0, 2)).unwrap()), (b(2), b(0), b(2)));

        for i in enumerate_up_to(&r32, 8).iter() {
            assert_eq!(&i.colon(&Ideal::unit(&r32)).unwrap(), i, "colon by (1) fails for {i}");
        }
    }

    #[test]
    fn divide_exact_examples() {
        let gauss = ring(-1, 1);
        let four = ideal(&gauss, 4, 0, 4);
        let two = ideal(&gauss, 2, 0, 2);
        assert_eq!(four.divide_exact(&two).unwrap(), Some(two.clone()));

        let r5 = ring(-5, 1);
        let p2 = ideal(&r5, 2, 1, 1);
        assert_eq!(ideal(&r5, 2, 0, 2).divide_exact(&p2).unwrap(), Some(p2.clone()));

        // The containment-division counterexample: (2) ⊆ (2, θ) in the
        // conductor-2 order of Q(√-3), yet no ideal H gives (2) = H·(2, θ).
        let r32 = ring(-3, 2);
        let two = ideal(&r32, 2, 0, 2);
        let p = ideal(&r32, 2, 0, 1);
        assert!(p.contains(&two).unwrap());
        assert_eq!(two.divide_exact(&p).unwrap(), None);
    }

    #[test]
    fn enumeration_examples() {
        let gauss = ring(-1, 1);
        let unit_only = enumerate_of_norm(&gauss, &b(1));
        assert_eq!(unit_only.members(), &[Ideal::unit(&gauss)]);
        assert!(enumerate_of_norm(&gauss, &b(3)).is_empty());
        assert_eq!(enumerate_of_norm(&gauss, &b(5)).len(), 2);
    }

    #[test]
    fn gaussian_ideal_counts_match_character_sum() {
        // Independent oracle: the number of ideals of norm n in the
        // Gaussian integers is the divisor sum of the character mod 4.
        let chi = |m: u64| match m % 4 {
            1 => 1i64,
            3 => -1,
            _ => 0,
        };
        let count = |n: u64| -> i64 { (1..=n).filter(|m| n.is_multiple_of(*m)).map(chi).sum() };
        let gauss = ring(-1, 1);
        let expected: Vec<i64> = (1..=30).map(count).collect();
        let actual: Vec<i64> = (1..=30)
            .map(|n| enumerate_of_norm(&gauss, &b(n as i64)).len() as i64)
            .collect();
        assert_eq!(actual, expected);
        assert_eq!(&actual[..10], &[1, 1, 0, 1, 2, 0, 0, 1, 1, 2]);
    }

    #[test]
    fn primality_examples() {
        let gauss = ring(-1, 1);
        assert!(!Ideal::unit(&gauss).is_prime());
        assert!(!ideal(&gauss, 2, 0, 2).is_prime()); // (2) = (1+i)²
        assert!(ideal(&gauss, 2, 1, 1).is_prime());
        assert!(ideal(&gauss, 3, 0, 3).is_prime()); // 3 inert
        assert!(!ideal(&gauss, 9, 0, 9).is_prime()); // norm 81 = 3⁴
        assert!(ideal(&ring(-5, 1), 2, 1, 1).is_prime());
        // Norm 6 is neither p nor p².
        assert!(!ideal(&ring(-5, 1), 6, 1, 1).is_prime());
    }

    #[test]
    fn divides_implies_contains_on_enumerated_pairs() {
        for r in test_zoo() {
            let universe = enumerate_up_to(&r, 10);
            for i in universe.iter() {
                for j in universe.iter() {
                    if let Some(h) = i.divide_exact(j).unwrap() {
                        assert_eq!(h.mul(j).unwrap(), *i);
                        assert!(j.contains(i).unwrap(), "{j} divides {i} but no containment in {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn containment_implies_index_divisibility() {
        for r in test_zoo() {
            let universe = enumerate_up_to(&r, 12);
            for i in universe.iter() {
                for j in universe.iter() {
                    if j.contains(i).unwrap() {
                        assert!(
                            (i.norm() % j.norm()).is_zero(),
                            "{i} ⊆ {j} in {r} without norm divisibility"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn basis_regenerates_identical_triple() {
        for r in test_zoo() {
            for i in enumerate_up_to(&r, 14).iter() {
                let (u, v) = i.basis();
                let regenerated = Ideal::from_generators(&r, &[u, v]).unwrap();
                assert_eq!(&regenerated, i);
            }
        }
    }

    #[test]
    fn norm_multiplicative_in_maximal_orders_only() {
        for r in test_zoo().into_iter().filter(RingSpec::is_maximal) {
            let universe = enumerate_up_to(&r, 30);
            for i in universe.iter() {
                for j in universe.iter() {
                    assert_eq!(
                        i.mul(j).unwrap().norm(),
                        i.norm() * j.norm(),
                        "norm multiplicativity fails for {i}·{j} in {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn product_commutative_and_associative_on_small_norms() {
        for r in test_zoo() {
            let universe = enumerate_up_to(&r, 12);
            for i in universe.iter() {
                for j in universe.iter() {
                    assert_eq!(i.mul(j).unwrap(), j.mul(i).unwrap());
                }
            }
            for i in universe.iter() {
                for j in universe.iter() {
                    let ij = i.mul(j).unwrap();
                    for k in universe.iter() {
                        assert_eq!(ij.mul(k).unwrap(), i.mul(&j.mul(k).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn colon_is_the_maximum_witness() {
        for r in test_zoo() {
            let universe = enumerate_up_to(&r, 8);
            for i in universe.iter() {
                for j in universe.iter() {
                    let colon = i.colon(j).unwrap();
                    let product = colon.mul(j).unwrap();
                    assert!(i.contains(&product).unwrap(), "colon({i},{j})·{j} ⊄ {i} in {r}");
                    // Every exhaustively found witness sits inside the colon.
                    for h in universe.iter() {
                        if &h.mul(j).unwrap() == i {
                            assert!(colon.contains(h).unwrap());
                        }
                    }
                }
            }
        }
    }
}
