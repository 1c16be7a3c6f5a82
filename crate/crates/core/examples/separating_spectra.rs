//! Hunt for spectra the construction realizes but every classical scalar
//! condition rejects: evidence that the -1/2 tail-sum criterion is not
//! subsumed by the older tests.
//!
//! ```bash
//! cargo run -p sdiep --example separating_spectra
//! ```

use sdiep::{full_report, separating_examples};

fn main() {
    for n in [5usize, 10, 26] {
        let found = separating_examples(n, 20_000, 7);
        println!(
            "n = {n}: {} of 20000 sampled spectra are feasible yet fail every applicable condition",
            found.len()
        );
        if let Some(s) = found.first() {
            println!("  first hit: {s}");
            let report = full_report(s);
            for v in &report.conditions {
                if let Some(lhs) = v.lhs {
                    println!("    {:<22} lhs = {lhs:>10.6}  fail", v.name);
                }
            }
            println!(
                "    feasibility           min entry = {:.6e}  pass",
                report.feasibility.min_entry
            );
        }
        println!();
    }
}
