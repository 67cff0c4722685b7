//! Extends a family by one element `b` and shows the gluing data.
//!
//! Run with `cargo run --example gluing -- 9,11`.

use sadk::closed_forms::{apery_extended, extended_betti, gluing_data, qf_extended};
use sadk::ideal::toric::{family_grading, family_order};
use sadk::lattice::LatticeVector;
use sadk::semigroup::{apery_set, build_family};

fn main() {
    let b = std::env::args()
        .nth(1)
        .and_then(|s| {
            let (x, y) = s.split_once(',')?;
            Some(LatticeVector::from_pair(x.parse().ok()?, y.parse().ok()?))
        })
        .unwrap_or(LatticeVector::from_pair(9, 11));
    let f = match build_family(LatticeVector::from_pair(2, 3), LatticeVector::from_pair(2, 2), 3, Some(b)) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let g = gluing_data(&f).expect("extension present");
    let names = family_grading(&f).names;
    println!("{f}");
    println!("  mu = {}, mu*b = {}, lambda = {:?}", g.mu, g.glue_degree, g.lambda);
    println!("  extra generator {}", g.extra_generator.display_binomial(&names, &family_order(&f)));
    println!("  gluing along mu*b: {}", g.is_gluing);
    let closed = apery_extended(&f).expect("extension present");
    println!("  Ap closed form {:?}", closed.elements.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("  matches enumeration: {}", closed == apery_set(&f));
    println!("  QF {:?}", qf_extended(&f).expect("extension present").iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("  betti {:?}", extended_betti(f.k()).expect("k <= 4"));
}
