//! Standard monomials: the monomials outside the leading-term ideal.

use thiserror::Error;

use super::groebner::{buchberger, GroebnerBasis};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StaircaseError {
    /// No leading monomial is a pure power of this variable.
    #[error("quotient is infinite-dimensional: no pure power of variable {variable} is a leading term")]
    InfiniteDimension { variable: usize },
    #[error("more than {cap} standard monomials")]
    ExceedsCap { cap: usize },
}

/// Standard monomials of a Gröbner basis, or why there are infinitely many.
///
/// Sorted lexicographically on exponent vectors.
pub fn standard_monomials(g: &GroebnerBasis, cap: Option<usize>) -> Result<Vec<Monomial>, StaircaseError> {
    let nvars = g.order.nvars();
    let leads = g.leading_monomials();
    let mut bounds = vec![u32::MAX; nvars];
    for m in &leads {
        if let Some(var) = m.pure_power_variable() {
            bounds[var] = bounds[var].min(m.exponents()[var]);
        }
    }
    if leads.iter().any(Monomial::is_one) {
        return Ok(Vec::new());
    }
    if let Some(variable) = bounds.iter().position(|&b| b == u32::MAX) {
        return Err(StaircaseError::InfiniteDimension { variable });
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    walk(&leads, &bounds, 0, &mut current, &mut out, cap)?;
    out.sort();
    Ok(out)
}

fn walk(
    leads: &[Monomial],
    bounds: &[u32],
    var: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
    cap: Option<usize>,
) -> Result<(), StaircaseError> {
    let m = Monomial::new(current.clone());
    // divisibility is inherited by every extension of the prefix
    if leads.iter().any(|l| l.divides(&m)) {
        return Ok(());
    }
    if var == bounds.len() {
        if cap.is_some_and(|c| out.len() >= c) {
            return Err(StaircaseError::ExceedsCap { cap: cap.unwrap_or_default() });
        }
        out.push(m);
        return Ok(());
    }
    for e in 0..bounds[var] {
        current[var] = e;
        let prefix = Monomial::new(current.clone());
        if leads.iter().any(|l| l.divides(&prefix)) {
            break;
        }
        walk(leads, bounds, var + 1, current, out, cap)?;
    }
    current[var] = 0;
    Ok(())
}

/// Gröbner basis of `<gens> + <x_v : v ∈ vars>`.
pub fn with_variables_killed(gens: &[Polynomial], vars: &[usize], order: &MonomialOrder) -> GroebnerBasis {
    let nvars = order.nvars();
    let mut all = gens.to_vec();
    all.extend(vars.iter().map(|&v| Polynomial::variable(nvars, v)));
    buchberger(&all, order)
}

/// `dim_Q Q[x] / (<gens> + <x_v : v ∈ vars>)`.
pub fn quotient_dimension(
    gens: &[Polynomial],
    vars: &[usize],
    order: &MonomialOrder,
) -> Result<usize, StaircaseError> {
    standard_monomials(&with_variables_killed(gens, vars, order), None).map(|s| s.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::polynomial::x_names;

    #[test]
    fn empty_basis_in_one_variable_is_infinite() {
        let g = GroebnerBasis { order: MonomialOrder::grevlex(1), elements: vec![], reduced: true };
        assert_eq!(standard_monomials(&g, None), Err(StaircaseError::InfiniteDimension { variable: 0 }));
    }

    #[test]
    fn staircase_of_quadratic_monomials() {
        // <x1, x4> + <x2^2, x2 x3, x3^2> in 4 variables: {1, x2, x3}
        let n = x_names(4);
        let order = MonomialOrder::grevlex(4);
        let gens: Vec<Polynomial> = ["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]
            .iter()
            .map(|s| Polynomial::parse(s, &n).unwrap())
            .collect();
        let gb = with_variables_killed(&gens, &[0, 3], &order);
        let staircase = standard_monomials(&gb, None).unwrap();
        let expected = vec![
            Monomial::new(vec![0, 0, 0, 0]),
            Monomial::new(vec![0, 0, 1, 0]),
            Monomial::new(vec![0, 1, 0, 0]),
        ];
        assert_eq!(staircase, expected);
        assert_eq!(standard_monomials(&gb, Some(2)), Err(StaircaseError::ExceedsCap { cap: 2 }));
    }

    #[test]
    fn unit_ideal_has_empty_staircase() {
        let n = x_names(2);
        let order = MonomialOrder::grevlex(2);
        let gb = buchberger(&[Polynomial::parse("1", &n).unwrap()], &order);
        assert_eq!(standard_monomials(&gb, None), Ok(vec![]));
    }
}
