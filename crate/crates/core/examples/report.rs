//! Runs every applicable check on one family.
//!
//! Run with `cargo run --example report -- 5,4 4,9 3`.

use sadk::lattice::LatticeVector;
use sadk::semigroup::build_family;
use sadk::verify::{full_report, ReportOptions};

fn pair(s: &str) -> Option<LatticeVector> {
    let (x, y) = s.split_once(',')?;
    LatticeVector::new(x.trim().parse().ok()?, y.trim().parse().ok()?).ok()
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = args.first().and_then(|s| pair(s)).unwrap_or(LatticeVector::from_pair(5, 4));
    let d = args.get(1).and_then(|s| pair(s)).unwrap_or(LatticeVector::from_pair(4, 9));
    let k = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let b = args.get(3).and_then(|s| pair(s));
    let f = build_family(a, d, k, b).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    let report = full_report(&f, &ReportOptions::default());
    println!("{f}");
    for c in &report.checks {
        println!("  {:<20} {}", c.name, if c.passed { "pass" } else { "FAIL" });
        if let Some(w) = &c.witness {
            println!("      {w}");
        }
    }
    for (name, why) in &report.skipped {
        println!("  {name:<20} skipped: {why}");
    }
    for (stage, t) in &report.timings {
        println!("  {stage:<20} {:.3} s", t.as_secs_f64());
    }
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
