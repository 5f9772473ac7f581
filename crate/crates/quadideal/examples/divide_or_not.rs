//! Exact ideal division and where it breaks: in a Dedekind order,
//! containment and divisibility are the same relation; in a non-maximal
//! order they come apart, and this example shows the smallest split.
//!
//! Run with: cargo run -p quadideal --example divide_or_not

use quadideal::{Element, Ideal, RingSpec};

fn main() {
    // --- A Dedekind order: the maximal order of Q(√-5). ---
    let dedekind = RingSpec::new(-5, 1).unwrap();
    let two = Ideal::from_generators(&dedekind, &[Element::from_int(2)]).unwrap();
    let p2 = Ideal::from_generators(&dedekind, &[Element::from_int(2), Element::new(1, 1)]).unwrap();

    // (2) ⊆ P, and sure enough P divides (2): in fact (2) = P².
    println!("in {dedekind}:");
    println!("  (2) = {two} contained in P = {p2}: {}", p2.contains(&two).unwrap());
    match two.divide_exact(&p2).unwrap() {
        Some(h) => println!("  (2) / P = {h}  (so (2) = {h} * {p2})"),
        None => unreachable!("Dedekind orders always divide what they contain"),
    }

    // The colon ideal is the machinery underneath: the largest H with
    // H·J ⊆ I. Division succeeds exactly when the colon is a witness.
    let colon = two.colon(&p2).unwrap();
    println!("  colon ((2) : P) = {colon}");

    // --- The same question in a non-maximal order. ---
    // Conductor 2 inside Q(√-3): θ = 1 + √-3, and the prime above 2 is
    // not invertible.
    let order = RingSpec::new(-3, 2).unwrap();
    let two = Ideal::from_generators(&order, &[Element::from_int(2)]).unwrap();
    let p = Ideal::from_generators(&order, &[Element::from_int(2), Element::new(0, 1)]).unwrap();

    println!("in {order}:");
    println!("  (2) = {two} contained in P = (2, w) = {p}: {}", p.contains(&two).unwrap());
    let colon = two.colon(&p).unwrap();
    println!("  colon ((2) : P) = {colon}");
    println!("  but colon * P = {}, which is not (2)", colon.mul(&p).unwrap());
    match two.divide_exact(&p).unwrap() {
        Some(h) => println!("  unexpectedly divisible by {h}?!"),
        None => println!("  divide_exact: no witness; containment-division fails here"),
    }

    // P is idempotent-ish instead: P² = 2P, with norm 8 rather than 4.
    let p_squared = p.mul(&p).unwrap();
    println!("  P^2 = {p_squared} (norm {}), while 2P = P^2 too", p_squared.norm());

    // That single pair certifies the order is not Dedekind, matching the
    // conductor test (f = 2 > 1).
    println!("  conductor says maximal: {}", order.is_maximal());
}
