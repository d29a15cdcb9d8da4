//! The structure decomposition on the two extremal shapes: the hub-pair
//! family yields a near-complete bipartite subgraph, the clique family a
//! small-maximum-degree one.
//!
//!     cargo run --release --example dichotomy

use nosal::constructions;
use nosal::dichotomy::{structural_dichotomy, DichotomyBranch};

fn main() {
    for (label, out) in [
        (
            "book_construction(10001)",
            constructions::book_construction(10001).unwrap(),
        ),
        (
            "clique_plus_star(20000)",
            constructions::clique_plus_star(20000).unwrap(),
        ),
    ] {
        let g = &out.graph;
        let res = structural_dichotomy(g, 0.1).unwrap();
        let m = g.m() as f64;
        println!("{label}: n = {}, m = {}, lambda = {:.4}", g.n(), g.m(), res.lambda);
        match &res.branch {
            DichotomyBranch::Bipartite { a, b } => println!(
                "  branch: bipartite with sides |A| = {}, |B| = {}",
                a.len(),
                b.len()
            ),
            DichotomyBranch::SmallDegree { c } => println!(
                "  branch: small degree on |C| = {} (max degree {} <= eps m = {})",
                c.len(),
                res.subgraph.max_degree(),
                0.1 * m
            ),
        }
        println!(
            "  lambda(G') = {:.4}  [{:.1}% of sqrt(m); asymptotic target {:.1}]",
            res.lambda_sub,
            100.0 * res.lambda_sub / m.sqrt(),
            res.theorem_target
        );
        println!(
            "  ladder level used = {}, pigeonhole level = {}",
            res.t_used, res.pigeonhole_level
        );
        println!("  per-level trace (level, |A|, |B|, |C|, shed eigenweight):");
        for t in res.partition_trace.iter().take(5) {
            println!(
                "    {:>3} {:>6} {:>6} {:>6} {:>12.6}",
                t.level, t.a_size, t.b_size, t.c_size, t.shell_cross
            );
        }
        println!();
    }
}
