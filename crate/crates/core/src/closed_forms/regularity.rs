//! Castelnuovo–Mumford regularity through the Apéry set.

use crate::error::ClosedFormError;
use crate::ideal::monomial::multidegree;
use crate::ideal::order::MonomialOrder;
use crate::ideal::polynomial::x_names;
use crate::ideal::staircase::{standard_monomials, with_variables_killed};
use crate::ideal::toric::family_grading;
use crate::lattice::LatticeVector;
use crate::semigroup::{apery_set, SemigroupFamily};

use super::generators::generating_set;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    /// `reg(I)`.
    pub value: u32,
    /// Each Apéry element with the degree of the standard monomial of that
    /// S-degree modulo `I + <x1, x_{k+1}>`.
    pub norms: Vec<(LatticeVector, u32)>,
}

/// `reg(I) = max { ‖b‖ + 1 : b ∈ Ap(S, E) }` for a base family.
pub fn regularity(f: &SemigroupFamily) -> Result<RegularityReport, ClosedFormError> {
    if f.extension().is_some() {
        return Err(ClosedFormError::UnexpectedExtension);
    }
    let k = f.k() as usize;
    let names = x_names(k + 1);
    let order = MonomialOrder::grevlex(k + 1);
    let g = generating_set(f.k()).flattened;
    if let Some(p) = g.iter().find(|p| !p.is_standard_homogeneous()) {
        return Err(ClosedFormError::NotHomogeneous(p.display(&names, &order).to_string()));
    }
    let gb = with_variables_killed(&g, &[0, k], &order);
    let staircase = standard_monomials(&gb, None).map_err(|e| ClosedFormError::NotHomogeneous(e.to_string()))?;
    let grading = family_grading(f);
    let ap = apery_set(f);
    let mut norms = Vec::with_capacity(ap.len());
    for &b in &ap.elements {
        let matching: Vec<u32> =
            staircase.iter().filter(|m| multidegree(m, &grading) == b).map(|m| m.degree()).collect();
        if matching.len() != 1 {
            return Err(ClosedFormError::StaircaseMismatch { degree: b, count: matching.len() });
        }
        norms.push((b, matching[0]));
    }
    if staircase.len() != ap.len() {
        let stray = staircase
            .iter()
            .map(|m| multidegree(m, &grading))
            .find(|s| !ap.contains(s))
            .unwrap_or(LatticeVector::ZERO);
        return Err(ClosedFormError::StaircaseMismatch { degree: stray, count: 1 });
    }
    let value = norms.iter().map(|&(_, n)| n + 1).max().unwrap_or(1);
    Ok(RegularityReport { value, norms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::build_family;

    #[test]
    fn regularity_is_two() {
        for k in 2..=6 {
            let f = build_family(LatticeVector::from_pair(5, 4), LatticeVector::from_pair(4, 9), k, None).unwrap();
            let r = regularity(&f).unwrap();
            assert_eq!(r.value, 2);
            assert_eq!(r.norms.len(), k as usize);
            assert_eq!(r.norms[0], (LatticeVector::ZERO, 0));
        }
    }

    #[test]
    fn extended_families_are_rejected() {
        let f = build_family(
            LatticeVector::from_pair(2, 3),
            LatticeVector::from_pair(2, 2),
            3,
            Some(LatticeVector::from_pair(9, 11)),
        )
        .unwrap();
        assert_eq!(regularity(&f), Err(ClosedFormError::UnexpectedExtension));
    }
}
