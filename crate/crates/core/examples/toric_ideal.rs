//! Computes the defining ideal by elimination and compares it with the
//! closed-form generators.
//!
//! Run with `cargo run --example toric_ideal`.

use sadk::closed_forms::generating_set;
use sadk::ideal::groebner::ideal_equal;
use sadk::ideal::staircase::quotient_dimension;
use sadk::ideal::toric::{family_grading, toric_kernel};
use sadk::lattice::LatticeVector;
use sadk::semigroup::build_family;

fn main() {
    let v = LatticeVector::from_pair;
    for (a, d, k) in [(v(5, 4), v(4, 9), 3), (v(1, 3), v(2, 1), 4), (v(4, 0), v(1, 1), 5)] {
        let f = build_family(a, d, k, None).expect("valid family");
        let names = family_grading(&f).names;
        let kernel = toric_kernel(&f);
        let g = generating_set(k).flattened;
        println!("{f}");
        for p in &kernel.elements {
            println!("  {}", p.display(&names, &kernel.order));
        }
        let dim = quotient_dimension(&g, &[0, k as usize], &kernel.order).expect("finite quotient");
        println!("  kernel = <G>: {}, dim Q[x]/(G + <x1, x{}>) = {dim}", ideal_equal(&kernel, &g), k + 1);
    }
}
