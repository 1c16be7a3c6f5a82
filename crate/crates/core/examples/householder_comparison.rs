//! The walk eigenbasis is not the only orthogonal symmetric generator: a
//! Householder reflection works too, but its diagonal entries go negative
//! as the order grows. This example shows where, and that the walk basis
//! keeps working on the same spectra.
//!
//! ```bash
//! cargo run -p sdiep --example householder_comparison
//! ```

use sdiep::{
    construct, householder_construct, is_doubly_stochastic, Spectrum, ENTRY_TOLERANCE,
    ROW_SUM_TOLERANCE,
};

fn main() {
    println!("spectrum: all zeros except the last tail eigenvalue at -1/2\n");
    println!(
        "{:>4}  {:>14}  {:>14}  {:>10}  {:>10}",
        "n", "H diag(n-1,n-1)", "closed form", "H passes", "Q passes"
    );
    for n in [2usize, 4, 6, 8, 9, 12, 16, 25, 36] {
        let mut values = vec![0.0; n];
        values[0] = 1.0;
        values[n - 1] = -0.5;
        let s = Spectrum::new(values).expect("valid spectrum");

        let h = householder_construct(&s).expect("n >= 2");
        let walk = construct(&s);

        // closed form for the last diagonal entry of the reflection route
        let root_n = (n as f64).sqrt();
        let alpha = 1.0 / (root_n * (root_n - 1.0));
        let predicted = 1.0 / n as f64 + (1.0 - alpha) * (1.0 - alpha) * (-0.5);

        let h_pass = is_doubly_stochastic(&h, ENTRY_TOLERANCE, ROW_SUM_TOLERANCE).pass();
        let q_pass = is_doubly_stochastic(&walk, ENTRY_TOLERANCE, ROW_SUM_TOLERANCE).pass();
        println!(
            "{n:>4}  {:>14.8}  {:>14.8}  {:>10}  {:>10}",
            h.get(n - 1, n - 1),
            predicted,
            h_pass,
            q_pass
        );
    }

    println!(
        "\nThe reflection's diagonal entry tends to 1/n - lambda_last as n grows, \
         so any fixed negative tail mass eventually drives it below zero; \
         the walk basis keeps every entry non-negative whenever the tail \
         sums to at least -1/2."
    );
}
