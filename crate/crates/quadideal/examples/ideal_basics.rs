//! Ideals as canonical HNF lattices: building them from generators,
//! reading norms off the triple, testing containment, and enumerating
//! everything below a norm bound.
//!
//! Run with: cargo run -p quadideal --example ideal_basics

use num_bigint::BigInt;
use quadideal::{enumerate_of_norm, enumerate_up_to, Element, Ideal, RingSpec};

fn main() {
    let ring = RingSpec::new(-5, 1).unwrap();

    // Every nonzero ideal is Z·a + Z·(b + cθ), printed as [a, b+c*w].
    // The classic non-principal ideal (2, 1+√-5):
    let p2 = Ideal::from_generators(&ring, &[Element::from_int(2), Element::new(1, 1)]).unwrap();
    println!("(2, 1+w) in {ring} = {p2}, norm {}", p2.norm());

    // The same ideal from a redundant, messy generating set.
    let messy = Ideal::from_generators(
        &ring,
        &[Element::new(1, 1), Element::new(-3, 1), Element::from_int(-2), Element::new(4, 2)],
    )
    .unwrap();
    assert_eq!(messy, p2);
    println!("redundant generators normalize to the same triple: {messy}");

    // Containment is a three-divisibility check on the triples.
    let six = Ideal::from_generators(&ring, &[Element::from_int(6)]).unwrap();
    println!("(6) = {six} contained in {p2}: {}", p2.contains(&six).unwrap());
    println!("{p2} contained in (6): {}", six.contains(&p2).unwrap());

    // Norm slices: all ideals of one norm, in canonical order.
    for n in 1..=10i64 {
        let slice = enumerate_of_norm(&ring, &BigInt::from(n));
        let rendered: Vec<String> = slice.iter().map(ToString::to_string).collect();
        println!("norm {n:>2}: {}", if rendered.is_empty() { "-".into() } else { rendered.join("  ") });
    }

    // The bounded universe used by the containment-division checker.
    let universe = enumerate_up_to(&ring, 30);
    println!("ideals of norm <= 30: {}", universe.len());
}
