//! Minimal free resolutions for k = 2, 3, 4, their consistency checks and
//! the regularity they imply.
//!
//! Run with `cargo run --example resolution`.

use sadk::closed_forms::{regularity_from_resolution, resolution};
use sadk::ideal::order::MonomialOrder;
use sadk::verify::complex_check;

fn main() {
    for k in 2..=4 {
        let res = resolution(k).expect("k <= 4");
        let names = res.names();
        let order = MonomialOrder::grevlex(names.len());
        println!("k = {k}, betti {:?}", res.betti);
        for (i, m) in res.maps.iter().enumerate() {
            println!("d{}:\n{}", i + 1, m.display(&names, &order));
        }
        for (i, c) in res.shifts.iter().enumerate() {
            let shown: Vec<String> = c.iter().map(|s| format!("{}x{}", s.multiplicity, s.degree)).collect();
            println!("C{i}: {}", shown.join(", "));
        }
        let entry = complex_check(&res);
        println!("check: {} ({})", entry.passed, entry.note.or(entry.witness).unwrap_or_default());
        println!("reg(I) from shifts: {}\n", regularity_from_resolution(&res));
    }
}
