//! A tour of quadratic orders: how the generator θ is chosen, what the
//! ring invariants look like, and exact element arithmetic.
//!
//! Run with: cargo run -p quadideal --example ring_tour

use quadideal::{Element, RingSpec};

fn main() {
    // Maximal orders: conductor 1 gives the full ring of integers.
    // Non-maximal orders: conductor f > 1 gives the subring Z + fωZ.
    let specs = [(-1, 1), (-3, 1), (5, 1), (13, 1), (-3, 2), (5, 2)];

    for (d, f) in specs {
        let ring = RingSpec::new(d, f).unwrap();
        println!("{ring}");
        println!("  theta minimal polynomial: {}", ring.min_poly_string());
        println!("  trace(theta) = {}, N(theta) = {}", ring.theta_trace(), ring.theta_norm());
        println!("  discriminant: {}", ring.disc());
        println!("  maximal (Dedekind): {}", ring.is_maximal());
        println!();
    }

    // Exact arithmetic in the Gaussian integers: theta = i.
    let gauss = RingSpec::new(-1, 1).unwrap();
    let u = Element::new(1, 1); // 1 + i
    let v = Element::new(1, -1); // 1 - i
    println!("in {gauss}: (1+w)(1-w) = {}", gauss.mul(&u, &v));
    println!("N(1+w) = {}", gauss.norm(&u));

    // theta^2 folds back through theta^2 = T*theta - Nc.
    let r = RingSpec::new(-3, 2).unwrap();
    let theta = Element::new(0, 1);
    println!("in {r}: w^2 = {}", r.mul(&theta, &theta));

    // Norms stay multiplicative no matter how big the inputs get.
    let big = Element::new(123_456_789_i64, -987_654_321_i64);
    let bigger = r.mul(&big, &big);
    assert_eq!(r.norm(&bigger), r.norm(&big) * r.norm(&big));
    println!("N(u^2) = N(u)^2 holds for u = {big}: {}", r.norm(&bigger));
}
