//! A spectrum whose tail sums just below the -1/2 threshold, and the
//! certificate locating the entry that goes negative.
//!
//! ```bash
//! cargo run -p sdiep --example feasibility_certificate
//! ```

use sdiep::{construct, corollary_bound, feasibility, Spectrum};

fn main() {
    // delta = 0.48: the tail sum is -0.52, past the -1/2 sufficient bound
    let s = Spectrum::parse("1,-0.004,-0.002,-0.004,-0.51").expect("valid spectrum");
    println!("spectrum: {s}");
    println!("delta = {:.6}", s.classify().delta);
    println!("tail-sum bound: {:?}", corollary_bound(&s));

    let cert = feasibility(&s);
    println!("\nfeasible: {}", cert.feasible);
    if let (Some(k), Some(l), Some(v)) = (cert.witness_k, cert.witness_l, cert.witness_value) {
        println!("witness: entry ({k}, {l}) = {v:.6e}");
    }

    // the matrix is still well-defined, symmetric, with unit row sums; it
    // just fails non-negativity at the witness
    let m = construct(&s);
    println!("\nconstructed matrix (negative entry in the middle):");
    for r in 0..m.n() {
        let row: Vec<String> = m.row(r).iter().map(|v| format!("{v:9.6}")).collect();
        println!("  {}", row.join(" "));
    }
    let row_sums: Vec<String> =
        (0..m.n()).map(|r| format!("{:.12}", m.row(r).iter().sum::<f64>())).collect();
    println!("row sums: {}", row_sums.join(", "));

    // compare: a tail with the same shape but sum exactly -1/2 is feasible
    let safe = Spectrum::parse("1,-0.004,-0.002,-0.004,-0.49").expect("valid spectrum");
    let safe_cert = feasibility(&safe);
    println!(
        "\nsame shape at delta = {:.2}: feasible = {}, min entry = {:.6e}",
        safe.classify().delta,
        safe_cert.feasible,
        safe_cert.min_entry
    );
}
