//! Spectra that the walk-basis construction realizes even though every
//! classical sufficient condition rejects them.
//!
//! ```bash
//! cargo run -p sdiep --example classical_conditions
//! ```

use sdiep::{full_report, Spectrum};

fn print_report(label: &str, text: &str) {
    let s = Spectrum::parse(text).expect("valid spectrum");
    let report = full_report(&s);
    println!("{label}: {s}");
    println!("  {:<22} {:<11} {:<12} verdict", "condition", "applicable", "lhs");
    for v in &report.conditions {
        let (lhs, verdict) = match (v.lhs, v.satisfied) {
            (Some(lhs), Some(sat)) => (format!("{lhs:.6}"), if sat { "pass" } else { "fail" }),
            _ => ("-".into(), "-"),
        };
        println!(
            "  {:<22} {:<11} {:<12} {}",
            v.name,
            if v.applicable { "yes" } else { "no" },
            lhs,
            verdict
        );
    }
    println!("  tail-sum bound: {:?}", report.corollary);
    println!(
        "  feasibility:    {} (min entry {:.6e})\n",
        if report.feasibility.feasible { "feasible" } else { "infeasible" },
        report.feasibility.min_entry
    );
}

fn main() {
    // every tail below sums to exactly -1/2, so the construction succeeds,
    // while the applicable scalar conditions all fail
    print_report("odd order", "1,-0.02,-0.03,-0.05,-0.4");
    print_report("even order", "1,-0.01,-0.02,-0.06,-0.08,-0.33");
    print_report(
        "order 10",
        "1,-0.01,-0.01,-0.025,-0.03,-0.035,-0.04,-0.05,-0.08,-0.22",
    );
    print_report(
        "order 16",
        "1,-0.003,-0.003,-0.004,-0.007,-0.009,-0.02,-0.0209,-0.021,-0.024,-0.026,-0.035,\
         -0.042,-0.076,-0.0811,-0.128",
    );
    print_report(
        "order 26",
        "1,-0.004,-0.005,-0.006,-0.007,-0.01,-0.01,-0.011,-0.011,-0.011,-0.012,-0.012,\
         -0.015,-0.015,-0.016,-0.017,-0.019,-0.02,-0.022,-0.022,-0.025,-0.028,-0.028,\
         -0.032,-0.069,-0.073",
    );
}
