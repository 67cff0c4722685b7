use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{multidegree, GradingMap, Monomial, MonomialDisplay};
use super::order::MonomialOrder;
use crate::lattice::LatticeVector;

/// A polynomial over Q. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Polynomial::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(m, BigRational::one())
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        Polynomial::monomial(Monomial::variable(nvars, var))
    }

    /// `x^α - x^β`.
    pub fn binomial(head: Monomial, tail: Monomial) -> Self {
        Polynomial::monomial(head) - Polynomial::monomial(tail)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Terms in decreasing order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &BigRational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.compare(b.0, a.0));
        terms
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self, order: &MonomialOrder) -> Option<&BigRational> {
        self.leading_term(order).map(|(_, c)| c)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(t, v)| (t.mul(m), v * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_coefficient(order) {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Largest standard degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Whether every term has the same standard degree.
    pub fn is_standard_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    /// The common S-degree of all terms, if the polynomial is S-homogeneous.
    pub fn s_degree(&self, grading: &GradingMap) -> Option<LatticeVector> {
        let mut degrees = self.terms.keys().map(|m| multidegree(m, grading));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Image under `x_i ↦ t^{deg x_i}`, as a map from exponents of `t` to
    /// coefficients (zeros removed).
    pub fn substitute(&self, grading: &GradingMap) -> BTreeMap<LatticeVector, BigRational> {
        let mut image: BTreeMap<LatticeVector, BigRational> = BTreeMap::new();
        for (m, c) in &self.terms {
            *image.entry(multidegree(m, grading)).or_insert_with(BigRational::zero) += c;
        }
        image.retain(|_, c| !c.is_zero());
        image
    }

    /// Whether the polynomial lies in the kernel of `x_i ↦ t^{deg x_i}`.
    pub fn vanishes_under(&self, grading: &GradingMap) -> bool {
        self.substitute(grading).is_empty()
    }

    /// Whether some term is a nonzero constant.
    pub fn has_constant_term(&self) -> bool {
        self.terms.contains_key(&Monomial::one(self.nvars))
    }

    /// Removes the first `count` variables; `None` if one of them occurs.
    pub fn drop_leading(&self, count: usize) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Some((m.drop_leading(count)?, c.clone())))
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(Polynomial { nvars: self.nvars - count, terms })
    }

    /// Embeds into a ring with `count` extra trailing variables.
    pub fn extend(&self, count: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars + count,
            terms: self.terms.iter().map(|(m, c)| (m.extend(count), c.clone())).collect(),
        }
    }

    /// Parses sums of terms such as `x2^2 - x1*x3` or `-3*x*y + 1/2`.
    pub fn parse(input: &str, names: &[String]) -> Result<Polynomial, String> {
        let nvars = names.len();
        let mut p = Polynomial::zero(nvars);
        let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut chunks = Vec::new();
        let mut current = String::new();
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() {
                chunks.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        chunks.push(current);
        for chunk in chunks {
            let (negative, body) = match chunk.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, chunk.strip_prefix('+').unwrap_or(&chunk)),
            };
            let mut coefficient = BigRational::one();
            let mut exponents = vec![0u32; nvars];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(format!("empty factor in {chunk:?}"));
                }
                if factor.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    coefficient *= parse_rational(factor)?;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|e| format!("bad exponent in {factor:?}: {e}"))?),
                    None => (factor, 1),
                };
                let var = names.iter().position(|n| n == name).ok_or_else(|| format!("unknown variable {name:?}"))?;
                exponents[var] += power;
            }
            if negative {
                coefficient = -coefficient;
            }
            p.add_term(Monomial::new(exponents), coefficient);
        }
        Ok(p)
    }

    pub fn display<'a>(&'a self, names: &'a [String], order: &'a MonomialOrder) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, names, order, positive_first: false }
    }

    /// Like [`Polynomial::display`], except that a pure difference
    /// `c·m1 - c·m2` is written with its positive term first.
    pub fn display_binomial<'a>(&'a self, names: &'a [String], order: &'a MonomialOrder) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, names, order, positive_first: true }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let parse = |t: &str| t.parse::<BigInt>().map_err(|e| format!("bad number {t:?}: {e}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(BigRational::new(parse(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse(s)?)),
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
    order: &'a MonomialOrder,
    positive_first: bool,
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut terms = self.poly.sorted_terms(self.order);
        if self.positive_first && terms.len() == 2 && terms[0].1.is_negative() && *terms[1].1 == -terms[0].1.clone() {
            terms.swap(0, 1);
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            let shown = MonomialDisplay { monomial: m, names: self.names };
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{shown}")?;
            } else {
                write!(f, "{magnitude}*{shown}")?;
            }
        }
        Ok(())
    }
}

/// `x1, ..., xn`.
pub fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}
