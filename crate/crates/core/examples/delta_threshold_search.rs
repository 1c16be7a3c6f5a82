//! How far below 1/2 can the tail-sum threshold go before the construction
//! breaks? Bracket it empirically per size: randomized search for
//! infeasible spectra with the largest delta, against the structural 1/2
//! upper edge.
//!
//! ```bash
//! cargo run -p sdiep --example delta_threshold_search
//! ```

use sdiep::{bracket_delta_min, max_s_product};

fn main() {
    println!("bracketing the feasibility threshold delta_min(n):\n");
    println!(
        "{:>4} {:>12} {:>6} {:>22} {:>14}",
        "n", "lower", "upper", "1 - 1/(2 max product)", "max product"
    );
    for n in [3usize, 4, 5, 6, 7, 8, 12, 16] {
        let bracket = bracket_delta_min(n, 50_000, 42);
        let product = max_s_product(n);
        // single-eigenvalue concentration makes this the exact threshold:
        // mass m on the best product c is infeasible iff m*c > 1/2
        let analytic = 1.0 - 1.0 / (2.0 * product);
        println!(
            "{:>4} {:>12.9} {:>6.1} {:>22.9} {:>14.9}",
            n, bracket.lower, bracket.upper, analytic.max(0.0), product
        );
    }

    println!("\nwitness at n = 5:");
    let bracket = bracket_delta_min(5, 100_000, 42);
    match &bracket.witness_spectrum {
        Some(w) => {
            println!("  spectrum: {w}");
            println!("  delta:    {:.9}", bracket.lower);
        }
        None => println!("  none found"),
    }

    println!(
        "\nThe product of two basis sines reaches 1 exactly when 8 divides n, \
         so delta_min(n) < 1/2 whenever it does not; at n = 4 the products \
         cap at 1/2 and no non-positive tail with delta >= 0 can break \
         feasibility at all."
    );
}
