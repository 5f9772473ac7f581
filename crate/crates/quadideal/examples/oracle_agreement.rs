//! Differential check: the colon-ideal division decision against the
//! brute-force witness search, over every ordered pair in a small
//! universe. The fast path earns its keep only by agreeing with the
//! slow one, on presence, absence, and the witness itself.
//!
//! Run with: cargo run -p quadideal --example oracle_agreement

use quadideal::{brute_divide, count_ideals, enumerate_up_to, RingSpec};

fn main() {
    let norm_bound = 10;
    for (d, f) in [(-1, 1), (-5, 1), (-3, 2), (-1, 2)] {
        let ring = RingSpec::new(d, f).unwrap();
        let universe = enumerate_up_to(&ring, norm_bound);
        let mut pairs = 0usize;
        let mut divisible = 0usize;
        let mut contained_only = 0usize;
        for i in universe.iter() {
            for j in universe.iter() {
                pairs += 1;
                let fast = i.divide_exact(j).unwrap();
                let slow = brute_divide(i, j, &i.norm()).unwrap();
                assert_eq!(fast, slow, "oracle disagreement on ({i}, {j}) in {ring}");
                match fast {
                    Some(_) => divisible += 1,
                    None => {
                        if j.contains(i).unwrap() {
                            contained_only += 1;
                        }
                    }
                }
            }
        }
        println!(
            "{ring}: {pairs} ordered pairs (norms <= {norm_bound}), \
             {divisible} divisible, {contained_only} contained-but-not-divisible, 0 disagreements"
        );
    }

    println!();
    // The enumerator has an oracle of its own: in the Gaussian integers
    // the per-norm ideal counts are a classical divisor sum.
    let gauss = RingSpec::new(-1, 1).unwrap();
    let counts = count_ideals(&gauss, 12);
    println!("ideal counts in {gauss} for norms 1..=12: {counts:?}");
    let chi = |m: u64| -> i64 {
        match m % 4 {
            1 => 1,
            3 => -1,
            _ => 0,
        }
    };
    let by_character: Vec<i64> = (1..=12u64)
        .map(|n| (1..=n).filter(|m| n % m == 0).map(chi).sum())
        .collect();
    println!("character divisor sums for comparison:  {by_character:?}");
    assert_eq!(counts.iter().map(|&c| c as i64).collect::<Vec<_>>(), by_character);
    println!("counts agree with the independent divisor-sum formula.");
}
