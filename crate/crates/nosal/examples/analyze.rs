//! Full invariant report for one graph: parse, certify, count everything,
//! and emit the JSON document the CLI produces.
//!
//!     cargo run --release --example analyze

use nosal::counting::{CountReport, ReportOptions};
use nosal::{codec, from_edge_list, spectral};

fn main() {
    // the 5-wheel as edge-list text, then round-tripped through graph6
    let text = "0 1\n1 2\n2 3\n3 4\n4 0\n5 0\n5 1\n5 2\n5 3\n5 4\n";
    let parsed = from_edge_list(text).unwrap();
    let g6 = codec::graph6_encode(&parsed.graph).unwrap();
    let g = codec::graph6_decode(&g6).unwrap();
    println!("wheel W5 as graph6: {g6}");

    let cert = spectral::spectral_radius_default(&g).unwrap();
    let verdict = spectral::nosal_verdict(&g, &cert);
    let report = CountReport::compute(&g, &ReportOptions::default()).unwrap();
    let doc = serde_json::json!({
        "lambda": cert.lambda,
        "residual": cert.residual,
        "rational_lower_bound": cert.rational_lower_bound.to_string(),
        "nosal": format!("{verdict:?}"),
        "counts": report,
    });
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
}
