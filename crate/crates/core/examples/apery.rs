//! Apéry sets, quasi-Frobenius elements and the ring-theoretic flags.
//!
//! Run with `cargo run --example apery`.

use sadk::lattice::LatticeVector;
use sadk::semigroup::{
    apery_closed_form, apery_set, build_family, is_cohen_macaulay, is_normal, quasi_frobenius, SemigroupFamily,
};

fn show(f: &SemigroupFamily) {
    let ap = apery_set(f);
    let qf = quasi_frobenius(f);
    let cm = is_cohen_macaulay(f, &ap);
    println!("{f}");
    println!("  Ap(S,E) = {:?}", ap.elements.iter().map(ToString::to_string).collect::<Vec<_>>());
    if f.extension().is_none() {
        println!("  closed form agrees: {}", apery_closed_form(f) == ap);
    }
    println!("  QF = {:?}", qf.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("  Cohen-Macaulay: {}, type {}, normal: {}", cm.cohen_macaulay, qf.len(), is_normal(f).normal);
}

fn main() {
    let v = LatticeVector::from_pair;
    show(&build_family(v(5, 4), v(4, 9), 3, None).expect("valid family"));
    show(&build_family(v(2, 3), v(2, 2), 3, Some(v(9, 11))).expect("valid family"));
    show(&build_family(v(3, 1), v(1, 2), 2, None).expect("valid family"));
}
