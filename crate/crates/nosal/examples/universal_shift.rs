//! The universal-vertex shift: reattach edges to the maximum-Perron vertex
//! until it dominates, preserving the edge count and never lowering the
//! spectral radius.
//!
//!     cargo run --release --example universal_shift

use nosal::dichotomy::universal_shift;
use nosal::{spectral, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut shown = 0;
    while shown < 5 {
        let n = rng.random_range(8..=14);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.35) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.m() == 0 || g.components().len() != 1 {
            continue;
        }
        shown += 1;
        let before = spectral::spectral_radius_default(&g).unwrap().lambda;
        let (shifted, hub) = universal_shift(&g).unwrap();
        let after = spectral::spectral_radius_default(&shifted).unwrap().lambda;
        println!(
            "n = {n:>2}, m = {:>2}: lambda {before:.5} -> {after:.5} (hub {hub} now has degree {} of {})",
            g.m(),
            shifted.degree(hub),
            shifted.n() - 1
        );
        assert!(after >= before - 1e-9);
        assert_eq!(shifted.m(), g.m());
    }
}
