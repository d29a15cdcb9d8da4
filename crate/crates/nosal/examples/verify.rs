//! Run the claim verification suite over all construction families and
//! print the text report plus the summary table.
//!
//!     cargo run --release --example verify

use nosal::harness::{self, VerifySpec};

fn main() {
    let spec = VerifySpec {
        m_lo: 100,
        m_hi: 2000,
        seed: 1,
        ..VerifySpec::default()
    };
    let rows = harness::verify_suite(&spec);
    print!("{}", harness::rows_to_text(&rows));
    let gaps = harness::coverage_gaps(&rows);
    println!("\nclaims covered: {} rows; manifest gaps: {gaps:?}", rows.len());
    println!("failures: {}", harness::has_failures(&rows));

    let table = harness::table1_report(1000, 1, &[]);
    println!();
    print!("{}", harness::table_to_text(&table));
}
