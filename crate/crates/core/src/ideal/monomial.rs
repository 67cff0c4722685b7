use std::fmt;

use crate::lattice::LatticeVector;

/// Dense exponent vector `x^α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exponents: vec![0; nvars] }
    }

    /// `x_var` (0-based index).
    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[var] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect() }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { exponents })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(var)` if this is a pure power `x_var^e` with `e > 0`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut support = self.exponents.iter().enumerate().filter(|(_, &e)| e > 0);
        let (var, _) = support.next()?;
        support.next().is_none().then_some(var)
    }

    /// Drops the first `count` variables; `None` if any of them occurs.
    pub fn drop_leading(&self, count: usize) -> Option<Monomial> {
        if self.exponents[..count].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial { exponents: self.exponents[count..].to_vec() })
    }

    /// Appends `count` zero exponents.
    pub fn extend(&self, count: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents.extend(std::iter::repeat_n(0, count));
        Monomial { exponents }
    }
}

/// Variable names and S-degrees of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingMap {
    pub names: Vec<String>,
    pub degrees: Vec<LatticeVector>,
}

impl GradingMap {
    pub fn new(names: Vec<String>, degrees: Vec<LatticeVector>) -> Self {
        assert_eq!(names.len(), degrees.len(), "one degree per variable");
        GradingMap { names, degrees }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }
}

/// `deg_S x^α = Σ α_i deg(x_i)`.
pub fn multidegree(m: &Monomial, grading: &GradingMap) -> LatticeVector {
    m.exponents()
        .iter()
        .zip(&grading.degrees)
        .fold(LatticeVector::ZERO, |acc, (&e, g)| acc + u64::from(e) * *g)
}

/// Displays a monomial as `x1^2*x3` using the given variable names.
pub struct MonomialDisplay<'a> {
    pub monomial: &'a Monomial,
    pub names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, &e) in self.names.iter().zip(self.monomial.exponents()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}
