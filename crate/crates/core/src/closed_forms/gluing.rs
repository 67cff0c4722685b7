//! Extended families `S^b = S + <b>` as gluings of `S` and `N·b`.

use crate::error::{ClosedFormError, SemigroupError};
use crate::ideal::polynomial::Polynomial;
use crate::lattice::{in_lattice, IntegerVector, LatticeVector};
use crate::semigroup::{extremal_rays, AperySet, SemigroupFamily};

use super::generators::extension_binomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingData {
    pub mu: u64,
    /// Coefficients of `μb` over `a, a+d, ..., a+kd`.
    pub lambda: Vec<u64>,
    /// `μb`.
    pub glue_degree: LatticeVector,
    /// `y^μ - x^λ` in `Q[x1..x_{k+1}, y]`.
    pub extra_generator: Polynomial,
    /// Smallest `ν > 0` with `νb ∈ Za + Zd`.
    pub lattice_multiple: u64,
    /// `G(S) ∩ Zb = Z·μb`, which makes `S^b` a gluing along `μb`.
    pub is_gluing: bool,
}

pub fn gluing_data(f: &SemigroupFamily) -> Result<GluingData, ClosedFormError> {
    let ext = f.extension().ok_or(ClosedFormError::MissingExtension)?;
    let glue_degree = ext.b.checked_scale(ext.mu).ok_or(SemigroupError::Overflow)?;
    let (lambda, extra_generator) = extension_binomial(f)?;
    let (a, d) = (f.a().to_integer(), f.d().to_integer());
    let lattice_multiple = (1..=ext.mu)
        .find(|&nu| {
            let nu = i64::try_from(nu).expect("μ fits i64");
            ext.b.to_integer().checked_scale(nu).is_some_and(|t| in_lattice(a, d, t))
        })
        .expect("μb lies in the lattice");
    Ok(GluingData {
        mu: ext.mu,
        lambda,
        glue_degree,
        extra_generator,
        lattice_multiple,
        is_gluing: lattice_multiple == ext.mu,
    })
}

/// `{0} ∪ {jb : 1 <= j < μ} ∪ {(a+id) + jb : 1 <= i < k, 0 <= j < μ}`.
pub fn apery_extended(f: &SemigroupFamily) -> Result<AperySet, ClosedFormError> {
    let ext = f.extension().ok_or(ClosedFormError::MissingExtension)?;
    let multiple = |j: u64| ext.b.checked_scale(j).ok_or(SemigroupError::Overflow);
    let mut elements = vec![LatticeVector::ZERO];
    for j in 1..ext.mu {
        elements.push(multiple(j)?);
    }
    for i in 1..f.k() {
        for j in 0..ext.mu {
            elements.push(f.generator(i).checked_add(multiple(j)?).ok_or(SemigroupError::Overflow)?);
        }
    }
    let (r1, r2) = extremal_rays(f);
    Ok(AperySet::new(vec![r1, r2], elements))
}

/// `{(μ-1)b - (a+id) : 1 <= i < k}`, sorted.
pub fn qf_extended(f: &SemigroupFamily) -> Result<Vec<IntegerVector>, ClosedFormError> {
    let ext = f.extension().ok_or(ClosedFormError::MissingExtension)?;
    let top = ext.b.checked_scale(ext.mu - 1).ok_or(SemigroupError::Overflow)?.to_integer();
    let mut qf: Vec<IntegerVector> = (1..f.k()).map(|i| top - f.generator(i).to_integer()).collect();
    qf.sort();
    Ok(qf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{apery_set, build_family, quasi_frobenius};

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::from_pair(x, y)
    }

    fn example2() -> SemigroupFamily {
        build_family(v(2, 3), v(2, 2), 3, Some(v(9, 11))).unwrap()
    }

    #[test]
    fn second_example_gluing() {
        let g = gluing_data(&example2()).unwrap();
        assert_eq!(g.mu, 2);
        assert_eq!(g.lambda, vec![2, 0, 1, 1]);
        assert_eq!(g.glue_degree, v(18, 22));
        assert!(g.is_gluing);
    }

    #[test]
    fn closed_form_apery_matches_enumeration() {
        let f = example2();
        let closed = apery_extended(&f).unwrap();
        assert_eq!(closed.len(), 6);
        assert_eq!(closed, apery_set(&f));
        assert!(closed.contains(&v(9, 11)));
    }

    #[test]
    fn closed_form_qf_matches_enumeration() {
        let f = example2();
        let qf = qf_extended(&f).unwrap();
        assert_eq!(qf, vec![IntegerVector::new(3, 4), IntegerVector::new(5, 6)]);
        assert_eq!(qf, quasi_frobenius(&f));
    }

    #[test]
    fn base_families_have_no_gluing() {
        let f = build_family(v(5, 4), v(4, 9), 3, None).unwrap();
        assert_eq!(gluing_data(&f), Err(ClosedFormError::MissingExtension));
    }
}
