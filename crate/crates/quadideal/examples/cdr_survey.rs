//! Survey a zoo of quadratic orders: run the bounded containment-division
//! check on each and line the verdicts up against the Dedekind
//! classification (conductor = 1). The two columns should always agree;
//! that agreement is the theorem this tool exists to exercise.
//!
//! Run with: cargo run -p quadideal --example cdr_survey

use quadideal::{check_cdr, classify_ring, default_norm_bound, RingSpec, Verdict};

fn main() {
    let zoo = [
        (-1, 1),
        (-2, 1),
        (-3, 1),
        (-5, 1),
        (-19, 1),
        (2, 1),
        (5, 1),
        (13, 1),
        (-3, 2),
        (-1, 2),
        (5, 2),
        (-1, 3),
        (-7, 2),
    ];

    println!(
        "{:<12} {:>6} {:>9} {:>6} {:>16} {:>10} {:>11}",
        "ring", "bound", "universe", "pairs", "verdict", "violations", "consistent"
    );
    for (d, f) in zoo {
        let ring = RingSpec::new(d, f).unwrap();
        let bound = default_norm_bound(&ring);
        let report = check_cdr(&ring, bound).unwrap();
        let classification = classify_ring(&ring, bound).unwrap();
        println!(
            "{:<12} {:>6} {:>9} {:>6} {:>16} {:>10} {:>11}",
            ring.to_string(),
            bound,
            report.universe_size,
            report.pairs_checked,
            report.verdict.to_string(),
            report.violations.len(),
            classification.consistent,
        );
        if report.verdict == Verdict::NotCdr {
            let first = &report.violations[0];
            println!("             first violation: I = {} inside J = {}", first.i, first.j);
        }
    }

    println!();
    println!("maximal orders (f = 1) report cdr_up_to_bound; every non-maximal");
    println!("order is caught by a violation at small norm, so both directions");
    println!("of the characterization are visible from a desk-scale scan.");
}
