//! High overlap with the principal state does not imply the search works.
//!
//! Take phi uniform on the first n - f vertices. Its overlap with the
//! uniform state is sqrt(1 - f/n), close to 1 for f << n — yet a walk
//! driven by -|phi><phi| - |w><w| never finds a marked vertex w inside the
//! f-vertex tail: phi has no amplitude there, so the success probability
//! stays pinned at 0 instead of reaching the 1/n a trivial random guess
//! achieves. Overlap alone is the wrong hypothesis; the vertex-wise
//! good-set condition is what the analysis actually needs. Run with
//! `cargo run --example phi_counterexample`.

use ctqw_search::evolution::phi_counterexample;

fn main() {
    for (n, f) in [(10usize, 2usize), (100, 10)] {
        let r = phi_counterexample(n, f).expect("valid n, f");
        println!("n = {n}, f = {f}:");
        println!(
            "  <phi|s> = {:.10} (predicted sqrt(1 - f/n) = {:.10})",
            r.overlap,
            (1.0 - f as f64 / n as f64).sqrt()
        );
        println!("  random-guess baseline 1/n = {}", 1.0 / n as f64);
        for &(w, p) in &r.tail_max {
            println!("  marked tail vertex {w:>3}: max probability {p:.3e}");
        }
        println!("  worst tail peak = {:.3e} — the walk never sees the tail", r.worst_tail_probability);
        println!();
    }
}
