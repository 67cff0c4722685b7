use std::cmp::Ordering;

use super::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    GradedRevLex,
    Lex,
    /// Graded reverse lexicographic on the first `split` variables of the
    /// precedence, ties broken by graded reverse lexicographic on the rest.
    Elimination { split: usize },
}

/// A monomial order over a fixed variable precedence.
///
/// `precedence[0]` is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Self {
        let mut sorted = precedence.clone();
        sorted.sort_unstable();
        assert!(sorted.iter().copied().eq(0..precedence.len()), "precedence must be a permutation");
        if let OrderKind::Elimination { split } = kind {
            assert!(split <= precedence.len(), "elimination block exceeds variable count");
        }
        MonomialOrder { kind, precedence }
    }

    /// Graded reverse lexicographic with `x_1 > x_2 > ... > x_n`.
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder::new(OrderKind::GradedRevLex, (0..nvars).collect())
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::new(OrderKind::Lex, (0..nvars).collect())
    }

    /// Eliminates the first `split` variables.
    pub fn elimination(nvars: usize, split: usize) -> Self {
        MonomialOrder::new(OrderKind::Elimination { split }, (0..nvars).collect())
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn compare(&self, m1: &Monomial, m2: &Monomial) -> Ordering {
        debug_assert_eq!(m1.nvars(), m2.nvars());
        match self.kind {
            OrderKind::Lex => lex(&self.precedence, m1, m2),
            OrderKind::GradedRevLex => grevlex(&self.precedence, m1, m2),
            OrderKind::Elimination { split } => {
                let (head, tail) = self.precedence.split_at(split);
                grevlex(head, m1, m2).then_with(|| grevlex(tail, m1, m2))
            }
        }
    }

    /// The same kind of order restricted to the variables after the first
    /// `count` (which must form the leading block of the precedence).
    pub fn drop_leading(&self, count: usize) -> MonomialOrder {
        let precedence: Vec<usize> = self.precedence.iter().filter(|&&v| v >= count).map(|&v| v - count).collect();
        assert_eq!(precedence.len() + count, self.precedence.len());
        let kind = match self.kind {
            OrderKind::Elimination { split } if split == count => OrderKind::GradedRevLex,
            OrderKind::Elimination { split } if split > count => OrderKind::Elimination { split: split - count },
            OrderKind::Elimination { .. } => panic!("cannot drop more variables than the elimination block"),
            other => other,
        };
        MonomialOrder::new(kind, precedence)
    }
}

fn lex(precedence: &[usize], m1: &Monomial, m2: &Monomial) -> Ordering {
    let (e1, e2) = (m1.exponents(), m2.exponents());
    precedence.iter().map(|&v| e1[v].cmp(&e2[v])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

fn grevlex(vars: &[usize], m1: &Monomial, m2: &Monomial) -> Ordering {
    let (e1, e2) = (m1.exponents(), m2.exponents());
    let d1: u32 = vars.iter().map(|&v| e1[v]).sum();
    let d2: u32 = vars.iter().map(|&v| e2[v]).sum();
    // smaller exponent on the smallest differing variable wins
    d1.cmp(&d2).then_with(|| {
        vars.iter().rev().map(|&v| e2[v].cmp(&e1[v])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_prefers_middle_square() {
        let order = MonomialOrder::grevlex(4);
        assert_eq!(order.compare(&m(&[0, 2, 0, 0]), &m(&[1, 0, 1, 0])), Ordering::Greater);
        assert_eq!(order.compare(&m(&[1, 1, 0, 0]), &m(&[1, 1, 0, 0])), Ordering::Equal);
        // degree first
        assert_eq!(order.compare(&m(&[0, 0, 0, 3]), &m(&[2, 0, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_with_custom_precedence() {
        // x2 > x4 > x3 > x5 > x1 (0-based: 1, 3, 2, 4, 0)
        let order = MonomialOrder::new(OrderKind::Lex, vec![1, 3, 2, 4, 0]);
        assert_eq!(order.compare(&m(&[0, 3, 0, 0, 0]), &m(&[1, 1, 1, 0, 0])), Ordering::Greater);
        assert_eq!(order.compare(&m(&[0, 0, 0, 1, 0]), &m(&[0, 0, 5, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let order = MonomialOrder::elimination(3, 1);
        assert_eq!(order.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(order.compare(&m(&[0, 1, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn drop_leading_restricts_elimination() {
        let order = MonomialOrder::elimination(5, 2).drop_leading(2);
        assert_eq!(order, MonomialOrder::grevlex(3));
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::grevlex(4),
            MonomialOrder::lex(4),
            MonomialOrder::elimination(4, 2),
            MonomialOrder::new(OrderKind::GradedRevLex, vec![2, 0, 3, 1]),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_total_well_orders(
            a in prop::collection::vec(0u32..4, 4),
            b in prop::collection::vec(0u32..4, 4),
            c in prop::collection::vec(0u32..4, 4),
        ) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for order in orders() {
                let ab = order.compare(&a, &b);
                prop_assert_eq!(ab.reverse(), order.compare(&b, &a));
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(order.compare(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(order.compare(&Monomial::one(4), &a), Ordering::Greater);
            }
        }
    }
}
