//! The quadratic generators, their Gröbner basis property and the split
//! into the five blocks used in the proof of that property.
//!
//! Run with `cargo run --example groebner -- 6`.

use sadk::closed_forms::{gb_partition, generating_set};
use sadk::ideal::groebner::{buchberger, is_groebner_basis, same_up_to_scaling};
use sadk::ideal::order::MonomialOrder;
use sadk::ideal::polynomial::x_names;

fn main() {
    let k: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let names = x_names(k as usize + 1);
    let order = MonomialOrder::grevlex(names.len());
    let g = generating_set(k);
    println!("k = {k}: {} generators", g.len());
    for (l, xi) in &g.xi {
        let shown: Vec<String> = xi.iter().map(|p| p.display(&names, &order).to_string()).collect();
        println!("  xi_{l}: {}", shown.join(", "));
    }
    for (name, part) in gb_partition(k).parts() {
        println!("  {name}: {} elements", part.len());
    }
    let check = is_groebner_basis(&g.flattened, &order);
    let completed = buchberger(&g.flattened, &order);
    println!("Buchberger's criterion: {}", check.is_groebner);
    println!("completion adds nothing: {}", same_up_to_scaling(&completed.elements, &g.flattened, &order));
}
