//! Seeded random blowup of a weighted graph, with its empirical edge-count
//! concentration around the floored expectation.
//!
//!     cargo run --release --example blowup

use nosal::constructions;
use nosal::spectral;
use nosal::weights;

fn main() {
    let out = constructions::book_core(1001).unwrap();
    let cert = spectral::spectral_radius_default(&out.graph).unwrap();
    let wg = weights::proof_weights_book(&out.graph, &cert).unwrap();
    let n_scale = 1500;
    let expected = weights::blowup_expected_edges(&wg, n_scale);
    println!(
        "base: {} | density {:.5} | blowup scale N = {n_scale} | expected edges {expected:.1}",
        out.label(),
        wg.weighted_edge_density()
    );
    let bound = 3.0 * (n_scale as f64).powf(1.5);
    let mut within = 0;
    for seed in 0..10 {
        let blown = weights::random_blowup(&wg, n_scale, seed);
        let diff = blown.m() as f64 - expected;
        let ok = diff.abs() <= bound;
        within += i32::from(ok);
        println!(
            "  seed {seed}: n = {:<6} edges = {:<8} deviation = {diff:+.1}",
            blown.n(),
            blown.m()
        );
    }
    println!("{within}/10 within 3 N^1.5 = {bound:.0} of the expectation");
}
