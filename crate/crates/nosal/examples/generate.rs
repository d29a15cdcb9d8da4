//! Generate every extremal family at a small budget and self-check each
//! against its predicted statistics.
//!
//!     cargo run --release --example generate

use nosal::constructions::{
    book_construction, book_core, clique_joint_tight, clique_plus_star, k_st_plus_near,
    kpartite_plus_edge, prism_blowup,
};

fn main() {
    let outputs = vec![
        clique_plus_star(300).unwrap(),
        k_st_plus_near(301).unwrap(),
        prism_blowup(6).unwrap(),
        book_construction(301).unwrap(),
        book_core(301).unwrap(),
        clique_joint_tight(300, 3).unwrap(),
        kpartite_plus_edge(10, 3).unwrap(),
    ];
    for out in outputs {
        let status = match out.self_check() {
            Ok(()) => "self-check ok".to_string(),
            Err(e) => format!("SELF-CHECK FAILED: {e}"),
        };
        println!(
            "{:<32} n={:<5} m={:<6} {} predictions -> {}",
            out.label(),
            out.graph.n(),
            out.graph.m(),
            out.predictions.len(),
            status
        );
    }
}
