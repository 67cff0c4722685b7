//! Closed-form Hilbert series checked against brute-force enumeration,
//! plus the negative control with one numerator term removed.
//!
//! Run with `cargo run --example hilbert_series`.

use sadk::closed_forms::hilbert_numerator;
use sadk::lattice::LatticeVector;
use sadk::semigroup::build_family;
use sadk::verify::{hilbert_truncation_check, EnumerationBox};

fn main() {
    let v = LatticeVector::from_pair;
    let families = [
        build_family(v(5, 4), v(4, 9), 3, None),
        build_family(v(2, 1), v(1, 3), 4, None),
        build_family(v(2, 3), v(2, 2), 3, Some(v(9, 11))),
    ];
    for f in families.into_iter().map(|f| f.expect("valid family")) {
        let form = hilbert_numerator(&f).expect("k <= 4");
        let window = EnumerationBox::default_for(&f, form.numerator.keys().copied());
        println!("{f}");
        let terms: Vec<String> = form.terms().iter().map(|(e, c)| format!("{c:+}t^{e}")).collect();
        println!("  K(t) = {}", terms.join(" "));
        let entry = hilbert_truncation_check(&f, &form, window);
        println!("  truncation in {window}: {}", entry.passed);
        let (&last, _) = form.numerator.iter().next_back().expect("nonempty numerator");
        let broken = hilbert_truncation_check(&f, &form.without_term(last), window);
        println!("  without t^{last}: {} ({})", broken.passed, broken.witness.unwrap_or_default());
    }
}
