//! Minimal graded free resolutions for `k = 2, 3, 4`.

use std::fmt;

use serde::Serialize;

use crate::error::ClosedFormError;
use crate::ideal::matrix::PolyMatrix;
use crate::ideal::monomial::Monomial;
use crate::ideal::order::{MonomialOrder, OrderKind};
use crate::ideal::polynomial::{x_names, Polynomial};
use crate::lattice::LatticeVector;
use crate::semigroup::SemigroupFamily;

/// The S-degree `p·a + q·d`. Because `a` and `d` are independent, two
/// degrees agree for one family iff they agree symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ShiftDegree {
    pub p: u32,
    pub q: u32,
}

impl ShiftDegree {
    pub const ZERO: ShiftDegree = ShiftDegree { p: 0, q: 0 };

    pub fn new(p: u32, q: u32) -> Self {
        ShiftDegree { p, q }
    }

    /// Degree of a monomial in `x1..x_{k+1}`, where `deg x_i = a+(i-1)d`.
    pub fn of_monomial(m: &Monomial) -> Self {
        let e = m.exponents();
        ShiftDegree { p: m.degree(), q: e.iter().enumerate().map(|(i, &c)| i as u32 * c).sum() }
    }

    /// Common degree of all terms, or `None` if the polynomial is zero or
    /// not homogeneous.
    pub fn of_polynomial(p: &Polynomial) -> Option<Self> {
        let mut degrees = p.terms().map(|(m, _)| ShiftDegree::of_monomial(m));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn standard_degree(&self) -> u32 {
        self.p
    }

    pub fn evaluate(&self, f: &SemigroupFamily) -> LatticeVector {
        let p = u64::from(self.p);
        let q = u64::from(self.q);
        f.a().checked_scale(p)
            .and_then(|pa| f.d().checked_scale(q).and_then(|qd| pa.checked_add(qd)))
            .expect("shift degree overflows")
    }
}

impl std::ops::Add for ShiftDegree {
    type Output = ShiftDegree;
    fn add(self, o: ShiftDegree) -> ShiftDegree {
        ShiftDegree { p: self.p + o.p, q: self.q + o.q }
    }
}

impl fmt::Display for ShiftDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (0, 0) => write!(f, "0"),
            (p, 0) => write!(f, "{p}a"),
            (0, q) => write!(f, "{q}d"),
            (p, q) => write!(f, "{p}a+{q}d"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Shift {
    pub multiplicity: u32,
    pub degree: ShiftDegree,
}

fn shifts(list: &[(u32, u32, u32)]) -> Vec<Shift> {
    list.iter().map(|&(multiplicity, p, q)| Shift { multiplicity, degree: ShiftDegree::new(p, q) }).collect()
}

/// `0 <- R/I <- F_0 <- F_1 <- ... <- F_len` with `F_0 = R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedResolution {
    pub k: u32,
    /// `maps[i]` is `δ_{i+1}: F_{i+1} -> F_i`.
    pub maps: Vec<PolyMatrix>,
    /// `shifts[i]` lists the degrees `C_i` of the basis of `F_i`.
    pub shifts: Vec<Vec<Shift>>,
    pub betti: Vec<usize>,
}

impl GradedResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn names(&self) -> Vec<String> {
        x_names(self.k as usize + 1)
    }

    /// Largest standard degree among the shifts of `F_i`.
    pub fn max_standard_degree(&self, i: usize) -> Option<u32> {
        self.shifts.get(i)?.iter().map(|s| s.degree.standard_degree()).max()
    }

    /// `Σ_i (-1)^i Σ_{s ∈ C_i} β_{i,s} t^s`, symbolically.
    pub fn alternating_shift_sum(&self) -> Vec<(ShiftDegree, i64)> {
        let mut acc = std::collections::BTreeMap::new();
        for (i, c) in self.shifts.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for s in c {
                *acc.entry(s.degree).or_insert(0i64) += sign * i64::from(s.multiplicity);
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }
}

fn parse_matrix(k: u32, rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::parse(rows, &x_names(k as usize + 1)).expect("well-formed matrix literal")
}

fn row_of(k: u32, g: &[&str]) -> PolyMatrix {
    parse_matrix(k, &[g])
}

/// The minimal graded free resolution of `k[S_{a,d,k}]` for `k <= 4`.
pub fn resolution(k: u32) -> Result<GradedResolution, ClosedFormError> {
    let (maps, shift_lists) = match k {
        2 => (vec![row_of(2, &["x2^2 - x1*x3"])], vec![shifts(&[(1, 0, 0)]), shifts(&[(1, 2, 2)])]),
        3 => (
            vec![
                row_of(3, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]),
                parse_matrix(3, &[&["-x3", "x4"], &["x2", "-x3"], &["-x1", "x2"]]),
            ],
            vec![
                shifts(&[(1, 0, 0)]),
                shifts(&[(1, 2, 2), (1, 2, 3), (1, 2, 4)]),
                shifts(&[(1, 3, 4), (1, 3, 5)]),
            ],
        ),
        4 => (
            vec![
                row_of(4, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x1*x5", "x2*x4 - x1*x5", "x3*x4 - x2*x5", "x4^2 - x3*x5"]),
                // entry (4,8) is -x5; with +x5 neither adjacent product vanishes
                parse_matrix(
                    4,
                    &[
                        &["-x3", "0", "-x4", "0", "x5", "0", "0", "0"],
                        &["x2", "-x3", "0", "-x4", "0", "x5", "x5", "0"],
                        &["-x1", "x2", "0", "0", "0", "-x4", "0", "x5"],
                        &["x1", "0", "x2", "x3", "-x3", "0", "-x4", "-x5"],
                        &["0", "-x1", "-x1", "0", "x2", "x3", "0", "-x4"],
                        &["0", "0", "0", "-x1", "0", "0", "x2", "x3"],
                    ],
                ),
                parse_matrix(
                    4,
                    &[
                        &["x4", "-x5", "0"],
                        &["0", "x4", "-x5"],
                        &["-x3", "0", "x5"],
                        &["x2", "-x3", "0"],
                        &["0", "-x3", "x4"],
                        &["-x1", "x2", "0"],
                        &["x1", "0", "-x3"],
                        &["0", "-x1", "x2"],
                    ],
                ),
            ],
            vec![
                shifts(&[(1, 0, 0)]),
                shifts(&[(1, 2, 2), (1, 2, 3), (2, 2, 4), (1, 2, 5), (1, 2, 6)]),
                shifts(&[(1, 3, 4), (2, 3, 5), (2, 3, 6), (2, 3, 7), (1, 3, 8)]),
                shifts(&[(1, 4, 7), (1, 4, 8), (1, 4, 9)]),
            ],
        ),
        _ => return Err(ClosedFormError::UnsupportedK(k)),
    };
    let mut betti = vec![1usize];
    betti.extend(maps.iter().map(PolyMatrix::cols));
    Ok(GradedResolution { k, maps, shifts: shift_lists, betti })
}

/// The matrix `δ_2` for `k = 4` with the `(4,8)` entry as `+x5`, which
/// does not give a complex. Kept for negative tests.
pub fn k4_delta2_with_positive_corner() -> PolyMatrix {
    let mut m = resolution(4).expect("k = 4 supported").maps[1].clone();
    m.set(3, 7, Polynomial::variable(5, 4));
    m
}

/// A maximal minor whose value is known in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMinor {
    pub name: &'static str,
    /// 1-based rows and columns.
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// Expected determinant up to sign.
    pub expected: Polynomial,
}

/// Minors of one map `δ_i` that together give the grade bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorGroup {
    /// 1-based index of the map.
    pub map: usize,
    pub minors: Vec<NamedMinor>,
    /// An order under which the minors' leading monomials are pairwise
    /// coprime, where that is how the sequence is shown to be regular.
    pub coprime_under: Option<MonomialOrder>,
}

fn minor(k: u32, name: &'static str, rows: &[usize], cols: &[usize], expected: &str) -> NamedMinor {
    NamedMinor {
        name,
        rows: rows.to_vec(),
        cols: cols.to_vec(),
        expected: Polynomial::parse(expected, &x_names(k as usize + 1)).expect("well-formed minor"),
    }
}

pub fn named_minors(k: u32) -> Result<Vec<MinorGroup>, ClosedFormError> {
    match k {
        2 => Ok(Vec::new()),
        3 => Ok(vec![MinorGroup {
            map: 2,
            minors: vec![
                minor(3, "R1R2|C1C2", &[1, 2], &[1, 2], "x3^2 - x2*x4"),
                minor(3, "R2R3|C1C2", &[2, 3], &[1, 2], "x2^2 - x1*x3"),
            ],
            coprime_under: Some(MonomialOrder::grevlex(4)),
        }]),
        4 => Ok(vec![
            MinorGroup {
                map: 2,
                minors: vec![
                    minor(4, "D1", &[2, 3, 4, 5, 6], &[1, 2, 3, 4, 5], "x1*x2^4 - 2*x1^2*x2^2*x3 + x1^3*x3^2"),
                    minor(4, "D2", &[1, 2, 3, 4, 5], &[4, 5, 6, 7, 8], "x5*x4^4 - 2*x3*x4^2*x5^2 + x3^2*x5^3"),
                ],
                coprime_under: None,
            },
            MinorGroup {
                map: 3,
                minors: vec![
                    minor(4, "D1", &[4, 6, 8], &[1, 2, 3], "x2^3 - x1*x2*x3"),
                    minor(4, "D2", &[3, 4, 7], &[1, 2, 3], "x3^3 - x1*x3*x5"),
                    minor(4, "D3", &[1, 2, 5], &[1, 2, 3], "x4^3 - x3*x4*x5"),
                ],
                // lex with x2 > x4 > x3 > x5 > x1
                coprime_under: Some(MonomialOrder::new(OrderKind::Lex, vec![1, 3, 2, 4, 0])),
            },
        ]),
        _ => Err(ClosedFormError::UnsupportedK(k)),
    }
}

/// `reg(I) = max_{i >= 1} (t_i - (i - 1))`, where `t_i` is the largest
/// standard degree of a shift of `F_i`.
pub fn regularity_from_resolution(res: &GradedResolution) -> u32 {
    (1..=res.length())
        .filter_map(|i| Some(res.max_standard_degree(i)? + 1 - i as u32))
        .max()
        .unwrap_or(0)
}

/// Betti numbers after adjoining one nonzerodivisor: `β'_i = β_i + β_{i-1}`.
pub fn mapping_cone_betti(betti: &[usize]) -> Vec<usize> {
    let mut out = betti.to_vec();
    out.push(0);
    for i in 1..out.len() {
        out[i] += betti[i - 1];
    }
    out
}

/// Ranks of the minimal resolution of an extended family's ring, as
/// displayed for `k = 2, 3, 4`.
pub fn extended_betti(k: u32) -> Result<Vec<usize>, ClosedFormError> {
    match k {
        2 => Ok(vec![1, 2, 1]),
        3 => Ok(vec![1, 4, 5, 2]),
        4 => Ok(vec![1, 7, 14, 11, 3]),
        _ => Err(ClosedFormError::UnsupportedK(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_numbers() {
        assert_eq!(resolution(2).unwrap().betti, vec![1, 1]);
        assert_eq!(resolution(3).unwrap().betti, vec![1, 3, 2]);
        assert_eq!(resolution(4).unwrap().betti, vec![1, 6, 8, 3]);
        assert_eq!(resolution(5), Err(ClosedFormError::UnsupportedK(5)));
    }

    #[test]
    fn shift_multiplicities_match_ranks() {
        for k in 2..=4 {
            let res = resolution(k).unwrap();
            for (i, c) in res.shifts.iter().enumerate() {
                let total: u32 = c.iter().map(|s| s.multiplicity).sum();
                assert_eq!(total as usize, res.betti[i]);
            }
        }
    }

    #[test]
    fn adjacent_maps_compose_to_zero() {
        for k in 2..=4 {
            let res = resolution(k).unwrap();
            for w in res.maps.windows(2) {
                assert!(w[0].mul(&w[1]).is_zero());
            }
        }
        let res = resolution(4).unwrap();
        let bad = k4_delta2_with_positive_corner();
        assert!(!res.maps[0].mul(&bad).is_zero());
        assert!(!bad.mul(&res.maps[2]).is_zero());
    }

    #[test]
    fn regularity_two_from_every_resolution() {
        for k in 2..=4 {
            assert_eq!(regularity_from_resolution(&resolution(k).unwrap()), 2);
        }
    }

    #[test]
    fn extended_ranks_are_the_mapping_cone() {
        for k in 2..=4 {
            let base = resolution(k).unwrap().betti;
            assert_eq!(mapping_cone_betti(&base), extended_betti(k).unwrap());
        }
    }

    #[test]
    fn shift_degree_arithmetic() {
        let m = Monomial::new(vec![1, 0, 1, 0]);
        assert_eq!(ShiftDegree::of_monomial(&m), ShiftDegree::new(2, 2));
        assert_eq!(ShiftDegree::new(3, 4).to_string(), "3a+4d");
        assert_eq!(ShiftDegree::ZERO.to_string(), "0");
    }
}
