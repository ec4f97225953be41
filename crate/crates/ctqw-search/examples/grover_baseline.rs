//! Spatial search on the complete graph, the exactly solvable baseline.
//!
//! With the transition rate set to 1/lambda1 the walk rotates the uniform
//! state onto the marked vertex in time close to (pi/2)*sqrt(n), the
//! continuous-time analogue of Grover's algorithm. Run with
//! `cargo run --example grover_baseline`.

use std::f64::consts::PI;

use ctqw_search::evolution::{optimal_time, RateKind, SearchSetup};
use ctqw_search::graph::complete_graph;

fn main() {
    println!("{:>6} {:>12} {:>12} {:>10}", "n", "t_star", "(pi/2)sqrt n", "p_max");
    for n in [4usize, 16, 64, 256] {
        let graph = complete_graph(n).expect("n >= 1");
        let setup = SearchSetup::new(graph, RateKind::Exact, 0).expect("connected");
        let (t_star, p_max) = optimal_time(&setup).expect("search runs");
        let grover = PI / 2.0 * (n as f64).sqrt();
        println!("{n:>6} {t_star:>12.4} {grover:>12.4} {p_max:>10.6}");
    }
    println!();
    println!("t_star sits slightly below (pi/2)*sqrt(n) and approaches it as n");
    println!("grows; the offset comes from the n/(n-1) weight the rescaled");
    println!("adjacency puts on |s><s|.");
}
