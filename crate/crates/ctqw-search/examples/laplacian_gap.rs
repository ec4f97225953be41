//! Repairing a vanishing spectral gap with the normalized Laplacian.
//!
//! For H1 = I - c*L with L the normalized Laplacian, the relevant gap is
//! lambda1 - max_{i>=2} |lambda_i|. On bipartite graphs L has an eigenvalue
//! at 2, so the choice c = 1 puts a second eigenvalue of H1 at -1, exactly
//! degenerate in magnitude with the top eigenvalue +1: the gap closes.
//! Shrinking c to 2/3 maps the spectrum of L into [-1/3, 1] and reopens a
//! constant gap. Run with `cargo run --example laplacian_gap`.

use ctqw_search::graph::{complete_bipartite, complete_graph};
use ctqw_search::spectral::h1_gap;

fn main() {
    let k33 = complete_bipartite(3, 3).expect("valid sizes");
    let k8 = complete_graph(8).expect("valid size");

    println!("{:<22} {:>6} {:>14}", "graph", "c", "gap of I - cL");
    for &c in &[1.0, 2.0 / 3.0] {
        let gap = h1_gap(&k33, c).expect("connected");
        println!("{:<22} {:>6.4} {:>14.10}", "K_{3,3} (bipartite)", c, gap);
    }
    for &c in &[1.0, 2.0 / 3.0] {
        let gap = h1_gap(&k8, c).expect("connected");
        println!("{:<22} {:>6.4} {:>14.10}", "K_8 (non-bipartite)", c, gap);
    }
    println!();
    println!("Bipartite structure kills the gap at c = 1; c = 2/3 restores it");
    println!("on every connected graph, at the cost of a slightly smaller gap");
    println!("where c = 1 was already fine.");
}
