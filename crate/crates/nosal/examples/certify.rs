//! Rigorous spectral certification: for a handful of graphs, compute the
//! spectral radius with its Perron vector and decide `lambda > sqrt(m)`
//! through an exact integer witness.
//!
//!     cargo run --release --example certify

use nosal::constructions;
use nosal::spectral::{self, NosalVerdict};
use nosal::Graph;

fn main() {
    let cases: Vec<(String, Graph)> = vec![
        ("K5".into(), Graph::complete(5)),
        ("C5".into(), Graph::cycle(5)),
        ("star K_{1,16}".into(), Graph::star(16)),
        ("single edge".into(), Graph::complete(2)),
        (
            "clique_plus_star(300)".into(),
            constructions::clique_plus_star(300).unwrap().graph,
        ),
        (
            "book_core(101)".into(),
            constructions::book_core(101).unwrap().graph,
        ),
        (
            "prism_blowup(10)".into(),
            constructions::prism_blowup(10).unwrap().graph,
        ),
    ];
    for (name, g) in cases {
        let cert = spectral::spectral_radius_default(&g).unwrap();
        let verdict = spectral::nosal_verdict(&g, &cert);
        let sqrt_m = (g.m() as f64).sqrt();
        print!(
            "{name:<24} n={:<5} m={:<5} lambda={:<10.6} sqrt(m)={:<10.6} rational bound={} ",
            g.n(),
            g.m(),
            cert.lambda,
            sqrt_m,
            cert.rational_lower_bound
        );
        match verdict {
            NosalVerdict::CertifiedYes(w) => {
                println!("=> CERTIFIED ({} > sqrt(m), exact)", w.rational_lower_bound)
            }
            NosalVerdict::NumericallyNo { margin } => {
                println!("=> numerically below by {margin:.4} (not rigorous)")
            }
            NosalVerdict::Inconclusive { .. } => println!("=> inconclusive (boundary)"),
        }
    }
}
