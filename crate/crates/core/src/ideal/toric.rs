//! The defining ideal of a family, computed by elimination.

use super::groebner::{buchberger, GroebnerBasis};
use super::monomial::{GradingMap, Monomial};
use super::order::MonomialOrder;
use super::polynomial::{x_names, Polynomial};
use crate::lattice::LatticeVector;
use crate::semigroup::SemigroupFamily;

/// Variables `x1..x_{k+1}` (and `y` for extended families) with their
/// S-degrees `a+(i-1)d` (and `b`).
pub fn family_grading(f: &SemigroupFamily) -> GradingMap {
    let mut names = x_names(f.base_generators().len());
    let mut degrees = f.base_generators().to_vec();
    if let Some(ext) = f.extension() {
        names.push("y".to_string());
        degrees.push(ext.b);
    }
    GradingMap::new(names, degrees)
}

/// Graded reverse lexicographic order `x1 > ... > x_{k+1} (> y)` on the
/// family's ring.
pub fn family_order(f: &SemigroupFamily) -> MonomialOrder {
    MonomialOrder::grevlex(f.variable_count())
}

fn exponent(c: i64) -> u32 {
    u32::try_from(c).expect("generator coordinate fits an exponent")
}

/// Gröbner basis of `ker(x_i ↦ t^{deg x_i})`.
///
/// Computes a Gröbner basis of `<x_i - t1^{g_x} t2^{g_y}>` in
/// `Q[t1, t2, x..]` under an order eliminating `t1, t2`, then keeps the
/// elements free of `t`. The result is a reduced basis for graded reverse
/// lexicographic order on the x-variables.
pub fn toric_kernel(f: &SemigroupFamily) -> GroebnerBasis {
    toric_kernel_of(&family_grading(f))
}

/// Elimination for an arbitrary grading of nonzero degrees in N².
pub fn toric_kernel_of(grading: &GradingMap) -> GroebnerBasis {
    let n = grading.nvars();
    let total = n + 2;
    let gens: Vec<Polynomial> = grading
        .degrees
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut t = vec![0u32; total];
            t[0] = exponent(g.x());
            t[1] = exponent(g.y());
            Polynomial::binomial(Monomial::variable(total, i + 2), Monomial::new(t))
        })
        .collect();
    let order = MonomialOrder::elimination(total, 2);
    let full = buchberger(&gens, &order);
    let elements: Vec<Polynomial> = full.elements.iter().filter_map(|p| p.drop_leading(2)).collect();
    for p in &elements {
        assert!(p.s_degree(grading).is_some(), "kernel element is not S-homogeneous");
        assert!(p.vanishes_under(grading), "kernel element does not vanish");
    }
    GroebnerBasis { order: order.drop_leading(2), elements, reduced: true }
}

/// S-degree of `x^α` for the family.
pub fn s_degree_of(f: &SemigroupFamily, m: &Monomial) -> LatticeVector {
    super::monomial::multidegree(m, &family_grading(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::groebner::{ideal_equal, same_up_to_scaling};
    use crate::semigroup::build_family;

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::from_pair(x, y)
    }

    fn parse(f: &SemigroupFamily, src: &[&str]) -> Vec<Polynomial> {
        let names = family_grading(f).names;
        src.iter().map(|s| Polynomial::parse(s, &names).unwrap()).collect()
    }

    #[test]
    fn example1_kernel() {
        let f = build_family(v(5, 4), v(4, 9), 3, None).unwrap();
        let kernel = toric_kernel(&f);
        let expected = parse(&f, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]);
        assert!(ideal_equal(&kernel, &expected));
        assert!(same_up_to_scaling(&kernel.elements, &expected, &kernel.order));
    }

    #[test]
    fn k2_kernel_is_principal() {
        let f = build_family(v(2, 1), v(1, 2), 2, None).unwrap();
        let kernel = toric_kernel(&f);
        assert_eq!(kernel.elements, parse(&f, &["x2^2 - x1*x3"]));
    }

    #[test]
    fn example2_kernel() {
        let f = build_family(v(2, 3), v(2, 2), 3, Some(v(9, 11))).unwrap();
        let kernel = toric_kernel(&f);
        let expected = parse(&f, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4", "y^2 - x1^2*x3*x4"]);
        assert!(ideal_equal(&kernel, &expected));
    }
}
