//! Division, S-polynomials and Buchberger completion.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_rational::BigRational;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;

/// A generating set of an ideal together with the order it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial(&self.order).cloned()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Membership test by division.
    pub fn contains(&self, f: &Polynomial) -> bool {
        reduce(f, &self.elements, &self.order).is_zero()
    }
}

/// A polynomial with its leading data cached.
struct Reducer<'a> {
    poly: &'a Polynomial,
    lm: Monomial,
    lc: BigRational,
}

fn reducers<'a>(g: &'a [Polynomial], order: &MonomialOrder) -> Vec<Reducer<'a>> {
    g.iter()
        .filter_map(|p| {
            let (lm, lc) = p.leading_term(order)?;
            Some(Reducer { poly: p, lm: lm.clone(), lc: lc.clone() })
        })
        .collect()
}

/// `(x^γ/LT(f))·f − (x^γ/LT(g))·g` with `γ` the lcm of the leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (Some((lf, cf)), Some((lg, cg))) = (f.leading_term(order), g.leading_term(order)) else {
        return Polynomial::zero(f.nvars());
    };
    let gamma = lf.lcm(lg);
    let left = f.mul_term(&gamma.div(lf).expect("lcm"), &cf.recip());
    let right = g.mul_term(&gamma.div(lg).expect("lcm"), &cg.recip());
    left - right
}

/// Full normal form of `f` modulo `g`: no term of the result is divisible
/// by a leading monomial of `g`. The first divisor in list order is used.
pub fn reduce(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    reduce_with(f, &reducers(g, order), order)
}

fn reduce_with(f: &Polynomial, g: &[Reducer<'_>], order: &MonomialOrder) -> Polynomial {
    let mut p = f.clone();
    let mut remainder = Polynomial::zero(f.nvars());
    while let Some((lm, lc)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match g.iter().find(|r| r.lm.divides(&lm)) {
            Some(r) => {
                let quotient = lm.div(&r.lm).expect("divisible");
                p = p - r.poly.mul_term(&quotient, &(lc / &r.lc));
            }
            None => {
                let head = Polynomial::term(lm, lc);
                p = p - head.clone();
                remainder = remainder + head;
            }
        }
    }
    remainder
}

/// Result of checking Buchberger's criterion on every pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerCheck {
    pub is_groebner: bool,
    /// First pair `(i, j)` whose S-polynomial leaves a nonzero remainder.
    pub failing_pair: Option<(usize, usize, Polynomial)>,
}

/// Buchberger's criterion, applied to every pair without shortcuts.
pub fn is_groebner_basis(g: &[Polynomial], order: &MonomialOrder) -> GroebnerCheck {
    let g: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    let divisors = reducers(&g, order);
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let r = reduce_with(&s_polynomial(&g[i], &g[j], order), &divisors, order);
            if !r.is_zero() {
                return GroebnerCheck { is_groebner: false, failing_pair: Some((i, j, r)) };
            }
        }
    }
    GroebnerCheck { is_groebner: true, failing_pair: None }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed smallest lcm first; pairs with coprime leading
/// monomials and pairs covered by Buchberger's chain criterion are skipped.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |p: Polynomial,
                basis: &mut Vec<Polynomial>,
                leads: &mut Vec<Monomial>,
                pending: &mut BTreeSet<(usize, usize)>| {
        let p = p.monic(order);
        let lm = p.leading_monomial(order).expect("nonzero").clone();
        let index = basis.len();
        for i in 0..index {
            pending.insert((i, index));
        }
        basis.push(p);
        leads.push(lm);
    };

    for g in gens {
        let r = reduce(g, &basis, order);
        if !r.is_zero() {
            push(r, &mut basis, &mut leads, &mut pending);
        }
    }

    while let Some(&(i, j)) = pending.iter().min_by(|p, q| {
        let lp = leads[p.0].lcm(&leads[p.1]);
        let lq = leads[q.0].lcm(&leads[q.1]);
        order.compare(&lp, &lq).then_with(|| p.cmp(q))
    }) {
        pending.remove(&(i, j));
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let lcm = leads[i].lcm(&leads[j]);
        let chain = (0..basis.len()).any(|m| {
            m != i
                && m != j
                && leads[m].divides(&lcm)
                && !pending.contains(&(i.min(m), i.max(m)))
                && !pending.contains(&(j.min(m), j.max(m)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            push(r, &mut basis, &mut leads, &mut pending);
        }
    }

    GroebnerBasis { order: order.clone(), elements: interreduce(basis, order), reduced: true }
}

/// Minimises and tail-reduces a Gröbner basis, returning it sorted by
/// leading monomial.
fn interreduce(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lm = p.leading_monomial(order).expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            let lq = q.leading_monomial(order).expect("nonzero");
            j != i && lq.divides(lm) && (lq != lm || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q.clone()).collect();
            reduce(&minimal[i], &others, order).monic(order)
        })
        .collect();
    sort_basis(&mut reduced, order);
    reduced
}

/// Sorts by leading monomial (ascending), then by the full term list.
pub fn sort_basis(basis: &mut [Polynomial], order: &MonomialOrder) {
    basis.sort_by(|p, q| {
        let lp = p.leading_monomial(order);
        let lq = q.leading_monomial(order);
        match (lp, lq) {
            (Some(a), Some(b)) => order.compare(a, b).then_with(|| a.cmp(b)),
            (None, None) => Ordering::Equal,
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
        }
    });
}

/// Whether `g` and `h` define the same polynomial set up to nonzero scaling
/// of each element.
pub fn same_up_to_scaling(g: &[Polynomial], h: &[Polynomial], order: &MonomialOrder) -> bool {
    let normalize = |set: &[Polynomial]| -> BTreeSet<Vec<(Monomial, BigRational)>> {
        set.iter()
            .map(|p| p.monic(order).terms().map(|(m, c)| (m.clone(), c.clone())).collect())
            .collect()
    };
    normalize(g) == normalize(h)
}

/// Ideal equality by mutual membership.
pub fn ideal_equal(g1: &GroebnerBasis, g2: &[Polynomial]) -> bool {
    if !g2.iter().all(|p| g1.contains(p)) {
        return false;
    }
    let other = buchberger(g2, &g1.order);
    g1.elements.iter().all(|p| other.contains(p))
}

/// Every element is homogeneous of standard degree 2.
pub fn is_quadratic(g: &GroebnerBasis) -> bool {
    g.elements.iter().all(|p| p.is_standard_homogeneous() && p.total_degree() == Some(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::polynomial::x_names;
    use proptest::prelude::*;

    fn parse_all(src: &[&str], names: &[String]) -> Vec<Polynomial> {
        src.iter().map(|s| Polynomial::parse(s, names).unwrap()).collect()
    }

    #[test]
    fn s_polynomial_of_self_vanishes() {
        let n = x_names(4);
        let f = Polynomial::parse("x2^2 - x1*x3", &n).unwrap();
        assert!(s_polynomial(&f, &f, &MonomialOrder::grevlex(4)).is_zero());
    }

    #[test]
    fn s_polynomial_middle_case() {
        let n = x_names(4);
        let order = MonomialOrder::grevlex(4);
        let f = Polynomial::parse("x2^2 - x1*x3", &n).unwrap();
        let g = Polynomial::parse("x2*x3 - x1*x4", &n).unwrap();
        let expected = Polynomial::parse("-x1*x3^2 + x1*x2*x4", &n).unwrap();
        assert_eq!(s_polynomial(&f, &g, &order), expected);
    }

    #[test]
    fn coprime_leading_terms_reduce_to_zero() {
        let n = x_names(4);
        let order = MonomialOrder::grevlex(4);
        let g = parse_all(&["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"], &n);
        let s = s_polynomial(&g[0], &g[2], &order);
        assert!(reduce(&s, &g, &order).is_zero());
    }

    #[test]
    fn reduce_of_constant_is_constant() {
        let n = x_names(3);
        let order = MonomialOrder::grevlex(3);
        let one = Polynomial::parse("1", &n).unwrap();
        let g = parse_all(&["x2^2 - x1*x3"], &n);
        assert_eq!(reduce(&one, &g, &order), one);
    }

    #[test]
    fn buchberger_linear_case() {
        let n: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let order = MonomialOrder::lex(3);
        let gb = buchberger(&parse_all(&["x - y", "y - z"], &n), &order);
        let expected = parse_all(&["y - z", "x - z"], &n);
        assert_eq!(gb.elements, expected);
    }

    #[test]
    fn buchberger_single_binomial_is_itself() {
        let n = x_names(3);
        let order = MonomialOrder::grevlex(3);
        let g = parse_all(&["x2^2 - x1*x3"], &n);
        assert_eq!(buchberger(&g, &order).elements, g);
        assert!(is_groebner_basis(&g, &order).is_groebner);
    }

    #[test]
    fn coprime_leads_are_groebner_without_the_middle_binomial() {
        let n = x_names(4);
        let order = MonomialOrder::grevlex(4);
        let g = parse_all(&["x2^2 - x1*x3", "x3^2 - x2*x4"], &n);
        assert!(is_groebner_basis(&g, &order).is_groebner);
        let gb = buchberger(&g, &order);
        assert_eq!(gb.len(), 2);
        assert!(!gb.contains(&Polynomial::parse("x2*x3 - x1*x4", &n).unwrap()));
    }

    #[test]
    fn overlapping_leads_fail_the_criterion() {
        let n = x_names(4);
        let order = MonomialOrder::grevlex(4);
        let g = parse_all(&["x2^2 - x1*x3", "x2*x3 - x1*x4"], &n);
        let check = is_groebner_basis(&g, &order);
        assert!(!check.is_groebner);
        assert!(check.failing_pair.is_some());
        let gb = buchberger(&g, &order);
        assert!(gb.len() > g.len());
        assert!(is_groebner_basis(&gb.elements, &order).is_groebner);
    }

    #[test]
    fn ideal_equality() {
        let n: Vec<String> = vec!["x".into()];
        let order = MonomialOrder::grevlex(1);
        let x = buchberger(&parse_all(&["x"], &n), &order);
        assert!(!ideal_equal(&x, &parse_all(&["x^2"], &n)));
        assert!(ideal_equal(&x, &parse_all(&["x"], &n)));
    }

    #[test]
    fn quadratic_flag() {
        let n = x_names(3);
        let order = MonomialOrder::grevlex(3);
        let empty = GroebnerBasis { order: order.clone(), elements: vec![], reduced: true };
        assert!(is_quadratic(&empty));
        assert!(is_quadratic(&buchberger(&parse_all(&["x2^2 - x1*x3"], &n), &order)));
        assert!(!is_quadratic(&buchberger(&parse_all(&["x2^4 - x1*x3^3"], &n), &order)));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, 3), -3i64..=3), 1..4).prop_map(|terms| {
            Polynomial::from_terms(
                3,
                terms.into_iter().map(|(e, c)| (Monomial::new(e), BigRational::from_integer(c.into()))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn remainder_has_no_divisible_terms(f in small_poly(), g in prop::collection::vec(small_poly(), 1..3)) {
            let order = MonomialOrder::grevlex(3);
            let r = reduce(&f, &g, &order);
            let leads: Vec<Monomial> = g.iter().filter_map(|p| p.leading_monomial(&order).cloned()).collect();
            for (m, _) in r.terms() {
                prop_assert!(!leads.iter().any(|l| l.divides(m)));
            }
        }

        #[test]
        fn buchberger_output_is_a_fixed_point(g in prop::collection::vec(small_poly(), 1..3)) {
            let order = MonomialOrder::grevlex(3);
            let gb = buchberger(&g, &order);
            prop_assert!(is_groebner_basis(&gb.elements, &order).is_groebner);
            for p in &g {
                prop_assert!(gb.contains(p));
            }
            let again = buchberger(&gb.elements, &order);
            prop_assert!(same_up_to_scaling(&again.elements, &gb.elements, &order));
        }
    }
}
