//! Four independent 4-cycle counters cross-checking each other: wedge
//! accumulation, exact walk traces, spectral moments, and brute force.
//!
//!     cargo run --release --example count_c4

use nosal::counting::{c4_count, c4_trace_estimate, C4Method};
use nosal::{constructions, Graph};

fn main() {
    let mut cases: Vec<(String, Graph)> = vec![
        ("C4".into(), Graph::cycle(4)),
        ("K4".into(), Graph::complete(4)),
        ("K7".into(), Graph::complete(7)),
        ("Petersen-ish C10".into(), Graph::cycle(10)),
    ];
    for m in [101u64, 1001] {
        cases.push((
            format!("book_core({m})"),
            constructions::book_core(m).unwrap().graph,
        ));
    }
    println!(
        "{:<18} {:>10} {:>10} {:>10} {:>14}",
        "graph", "codegree", "walks", "brute", "trace (float)"
    );
    for (name, g) in cases {
        let codeg = c4_count(&g, C4Method::Codegree).unwrap();
        let walks = c4_count(&g, C4Method::Walks).unwrap();
        let brute = if g.n() <= 14 {
            c4_count(&g, C4Method::Brute).unwrap().to_string()
        } else {
            "-".into()
        };
        let trace = c4_trace_estimate(&g).unwrap();
        println!("{name:<18} {codeg:>10} {walks:>10} {brute:>10} {trace:>14.4}");
        assert_eq!(codeg, walks);
    }
}
