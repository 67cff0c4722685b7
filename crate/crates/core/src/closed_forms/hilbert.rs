//! Multigraded Hilbert series `K(t) / ∏ (1 - t^{g})`.

use std::collections::BTreeMap;

use crate::error::ClosedFormError;
use crate::lattice::LatticeVector;
use crate::semigroup::SemigroupFamily;

use super::resolution::{GradedResolution, ShiftDegree};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeriesForm {
    /// Nonzero coefficients of `K(t)`, keyed by exponent.
    pub numerator: BTreeMap<LatticeVector, i64>,
    /// One factor `1 - t^g` per generator, extension element last.
    pub denominator_factors: Vec<LatticeVector>,
}

impl HilbertSeriesForm {
    pub fn constant_term(&self) -> i64 {
        self.numerator.get(&LatticeVector::ZERO).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> Vec<(LatticeVector, i64)> {
        self.numerator.iter().map(|(&e, &c)| (e, c)).collect()
    }

    /// A copy with the term at `exponent` removed.
    pub fn without_term(&self, exponent: LatticeVector) -> HilbertSeriesForm {
        let mut out = self.clone();
        out.numerator.remove(&exponent);
        out
    }
}

fn range(sign: i64, p: u32, qs: std::ops::RangeInclusive<u32>) -> impl Iterator<Item = (ShiftDegree, i64)> {
    qs.map(move |q| (ShiftDegree::new(p, q), sign))
}

/// The numerator for `k = 2, 3, 4` as a signed sum of `t^{pa+qd}`.
pub fn symbolic_numerator(k: u32) -> Result<Vec<(ShiftDegree, i64)>, ClosedFormError> {
    let one = std::iter::once((ShiftDegree::ZERO, 1));
    let terms: Vec<(ShiftDegree, i64)> = match k {
        2 => one.chain(range(-1, 2, 2..=2)).collect(),
        3 => one.chain(range(-1, 2, 2..=4)).chain(range(1, 3, 4..=5)).collect(),
        4 => one
            .chain(range(-1, 2, 4..=4))
            .chain(range(-1, 2, 2..=6))
            .chain(range(1, 3, 4..=8))
            .chain(range(1, 3, 5..=7))
            .chain(range(-1, 4, 7..=9))
            .collect(),
        _ => return Err(ClosedFormError::UnsupportedK(k)),
    };
    Ok(collect(terms))
}

fn collect(terms: impl IntoIterator<Item = (ShiftDegree, i64)>) -> Vec<(ShiftDegree, i64)> {
    let mut acc = BTreeMap::new();
    for (s, c) in terms {
        *acc.entry(s).or_insert(0i64) += c;
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

fn add_to(numerator: &mut BTreeMap<LatticeVector, i64>, e: LatticeVector, c: i64) {
    let entry = numerator.entry(e).or_insert(0);
    *entry += c;
    if *entry == 0 {
        numerator.remove(&e);
    }
}

fn assemble(f: &SemigroupFamily, symbolic: &[(ShiftDegree, i64)]) -> Result<HilbertSeriesForm, ClosedFormError> {
    let mut numerator = BTreeMap::new();
    for (s, c) in symbolic {
        add_to(&mut numerator, s.evaluate(f), *c);
    }
    let mut denominator_factors = f.base_generators().to_vec();
    if let Some(ext) = f.extension() {
        // y^μ - x^λ is a nonzerodivisor of degree μb
        let glue = ext.b.checked_scale(ext.mu).ok_or(crate::error::SemigroupError::Overflow)?;
        let mut shifted = BTreeMap::new();
        for (&e, &c) in &numerator {
            add_to(&mut shifted, e, c);
            add_to(&mut shifted, e.checked_add(glue).ok_or(crate::error::SemigroupError::Overflow)?, -c);
        }
        numerator = shifted;
        denominator_factors.push(ext.b);
    }
    Ok(HilbertSeriesForm { numerator, denominator_factors })
}

/// The closed-form Hilbert series of the family's semigroup ring.
///
/// For an extended family the numerator is multiplied by `1 - t^{μb}` and
/// `1 - t^b` joins the denominator.
pub fn hilbert_numerator(f: &SemigroupFamily) -> Result<HilbertSeriesForm, ClosedFormError> {
    assemble(f, &symbolic_numerator(f.k())?)
}

/// The numerator as the alternating sum of a resolution's shifts.
pub fn numerator_from_resolution(res: &GradedResolution, f: &SemigroupFamily) -> Result<HilbertSeriesForm, ClosedFormError> {
    assemble(f, &res.alternating_shift_sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::resolution::resolution;
    use crate::semigroup::build_family;

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::from_pair(x, y)
    }

    #[test]
    fn first_example_numerator() {
        let f = build_family(v(5, 4), v(4, 9), 3, None).unwrap();
        let h = hilbert_numerator(&f).unwrap();
        let expected: BTreeMap<LatticeVector, i64> = [
            (v(0, 0), 1),
            (v(18, 26), -1),
            (v(22, 35), -1),
            (v(26, 44), -1),
            (v(31, 48), 1),
            (v(35, 57), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(h.numerator, expected);
        assert_eq!(h.denominator_factors.len(), 4);
        assert_eq!(h.constant_term(), 1);
    }

    #[test]
    fn closed_form_equals_alternating_shift_sum() {
        let f = build_family(v(3, 1), v(1, 2), 4, None).unwrap();
        for k in 2..=4 {
            let fk = build_family(f.a(), f.d(), k, None).unwrap();
            let res = resolution(k).unwrap();
            assert_eq!(symbolic_numerator(k).unwrap(), res.alternating_shift_sum());
            assert_eq!(hilbert_numerator(&fk).unwrap(), numerator_from_resolution(&res, &fk).unwrap());
        }
    }

    #[test]
    fn k4_numerator_has_a_double_quadric() {
        let terms = symbolic_numerator(4).unwrap();
        assert!(terms.contains(&(ShiftDegree::new(2, 4), -2)));
        assert_eq!(terms.iter().map(|&(_, c)| c).sum::<i64>(), 0);
    }

    #[test]
    fn extension_adds_a_factor() {
        let f = build_family(v(2, 3), v(2, 2), 3, Some(v(9, 11))).unwrap();
        let h = hilbert_numerator(&f).unwrap();
        assert_eq!(h.denominator_factors.len(), 5);
        assert_eq!(h.numerator.get(&v(18, 22)), Some(&-1));
    }
}
