//! Run one verification suite and summarize it.
use hindlab::suites::{run_suite, DEFAULT_SEED};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "index".to_string());
    let report = run_suite(&name, DEFAULT_SEED).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(1);
    });
    let failed = report.failures().count();
    println!("{}: {} rows, {failed} failed, {:.2}s", report.suite, report.rows.len(), report.seconds);
    for row in report.failures() {
        println!("  {}: expected {} got {}", row.name, row.expected, row.got);
    }
}
