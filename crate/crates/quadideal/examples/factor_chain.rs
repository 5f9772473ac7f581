//! Divisor-chain factorization: peel prime ideals off one at a time,
//! recording the ascending chain of quotients, until the unit ideal.
//! In a maximal order this always terminates and rebuilds the input;
//! in a non-maximal order the peeling can jam, and the jam is itself a
//! containment-division violation.
//!
//! Run with: cargo run -p quadideal --example factor_chain

use quadideal::{check_dicc_chain, factor_ideal, split_rational_prime, Element, Error, Ideal, RingSpec};

fn main() {
    let ring = RingSpec::new(-5, 1).unwrap();

    // How rational primes decompose here: 2 ramifies, 3 splits, 11 stays
    // inert.
    for p in [2i64, 3, 11] {
        let split = split_rational_prime(&ring, &p.into()).unwrap();
        let rendered: Vec<String> = split.primes.iter().map(ToString::to_string).collect();
        println!("{p} is {} in {ring}: {}", split.kind.as_str(), rendered.join(", "));
    }
    println!();

    // Factor (6): the textbook non-unique-factorization example at the
    // element level, perfectly well-behaved at the ideal level.
    let six = Ideal::from_generators(&ring, &[Element::from_int(6)]).unwrap();
    let result = factor_ideal(&six, None).unwrap();
    println!("factoring (6) = {six}, norm {}:", six.norm());
    for (k, step) in result.chain.steps.iter().enumerate() {
        println!(
            "  step {}: extract prime {} (norm {}), quotient {}",
            k + 1,
            step.prime,
            step.prime.norm(),
            step.quotient
        );
    }
    let mut product = Ideal::unit(&ring);
    for prime in &result.factors {
        product = product.mul(prime).unwrap();
    }
    println!("  product of factors: {product}");
    assert_eq!(product, six);

    // The recorded chain is simultaneously an ascending containment chain
    // and a divisor chain; append the unit twice and stationarity shows.
    let mut chain = result.chain.ideals();
    chain.push(Ideal::unit(&ring));
    chain.push(Ideal::unit(&ring));
    let check = check_dicc_chain(&chain).unwrap();
    println!(
        "  divisor chain: {}, stationary from index {}",
        check.is_divisor_chain,
        check.stationary_at.map_or("(never)".to_string(), |k| k.to_string())
    );
    println!();

    // Now the jam. In the conductor-2 order of Q(√-3), the prime above 2
    // contains (2) but does not divide it, so the very first peel fails.
    let bad_order = RingSpec::new(-3, 2).unwrap();
    let two = Ideal::from_generators(&bad_order, &[Element::from_int(2)]).unwrap();
    println!("factoring (2) = {two} in {bad_order}:");
    match factor_ideal(&two, None) {
        Err(Error::NotDivisible { i, j }) => {
            println!("  stuck at step 1: {j} contains {i} but does not divide it");
            println!("  (that pair is a containment-division violation witness)");
        }
        other => println!("  unexpected outcome: {other:?}"),
    }
}
