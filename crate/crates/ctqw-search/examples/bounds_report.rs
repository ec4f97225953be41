//! Spectral concentration report for one Erdős–Rényi sample.
//!
//! Samples G(n, p) at p = 8 ln n / n, rescales the adjacency by 1/(np) and
//! checks the concentration statements the search analysis rests on: the top
//! eigenvalue near 1, the centered operator norm small, the second eigenvalue
//! suppressed, and the principal eigenvector close to uniform. Run with
//! `cargo run --example bounds_report`.

use ctqw_search::graph::sample_er;
use ctqw_search::spectral::{bound_report, epsilon};

fn main() {
    let n = 512;
    let p = 8.0 * (n as f64).ln() / n as f64;
    let graph = sample_er(n, p, 42).expect("valid parameters");
    println!(
        "G({n}, {p:.5}) seed 42: {} edges, connected = {}",
        graph.edge_count(),
        graph.is_connected()
    );

    let report = bound_report(&graph, 2.0).expect("spectral analysis");
    let eps = epsilon(n, p);
    println!();
    println!("epsilon = sqrt(ln n / (np)) = {eps:.6}");
    println!(
        "lambda1(A/(np))  = {:.6}  |dev from 1 - 1/n| = {:.2e}  ok = {}",
        report.lambda1_scaled, report.lambda1_dev, report.lambda1_bound_ok
    );
    println!(
        "||A - E[A]||/np  = {:.6}  vs sqrt(eps) = {:.6}   ok = {}",
        report.opnorm_centered,
        eps.sqrt(),
        report.opnorm_ok
    );
    println!(
        "max|lambda_i>1|  = {:.6}  vs eps = {:.6}         ok = {}",
        report.second_eig_max, eps, report.second_ok
    );
    println!(
        "<s|s'> overlap   = {:.6}  vs 1 - eps^2 = {:.6}   ok = {}",
        report.overlap,
        1.0 - eps * eps,
        report.overlap_ok
    );
    println!();
    println!(
        "good-vertex set: {} of {n} vertices (alpha = {:.6}, beta = {:.6});",
        report.w_set_size, report.alpha, report.beta
    );
    println!("the complement is provably smaller than beta*n = {:.1}.", report.beta * n as f64);
    println!();
    println!("full report as JSON:");
    println!("{}", report.to_json());
}
