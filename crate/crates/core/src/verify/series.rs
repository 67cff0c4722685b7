//! Brute-force enumeration and truncated power series in two variables.

use std::collections::BTreeSet;
use std::fmt;

use crate::closed_forms::HilbertSeriesForm;
use crate::lattice::LatticeVector;
use crate::semigroup::SemigroupFamily;

/// A finite window of `N²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationBox {
    /// `0 <= x <= cap_x`, `0 <= y <= cap_y`.
    Componentwise { cap_x: i64, cap_y: i64 },
    /// Sums of at most `cap` generators.
    CoefficientSum { cap: u64 },
}

impl EnumerationBox {
    pub fn componentwise(cap_x: i64, cap_y: i64) -> Self {
        assert!(cap_x >= 0 && cap_y >= 0, "box caps must be nonnegative");
        EnumerationBox::Componentwise { cap_x, cap_y }
    }

    /// The componentwise box `3·(a+kd)` (with `b` joining the maximum for
    /// extended families), widened to contain `extra`.
    pub fn default_for(f: &SemigroupFamily, extra: impl IntoIterator<Item = LatticeVector>) -> Self {
        let mut cap_x = 0;
        let mut cap_y = 0;
        let mut top = vec![f.generator(f.k())];
        if let Some(ext) = f.extension() {
            top.push(ext.b);
        }
        for v in top {
            cap_x = cap_x.max(3 * v.x());
            cap_y = cap_y.max(3 * v.y());
        }
        for v in extra {
            cap_x = cap_x.max(v.x());
            cap_y = cap_y.max(v.y());
        }
        EnumerationBox::componentwise(cap_x, cap_y)
    }
}

impl fmt::Display for EnumerationBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationBox::Componentwise { cap_x, cap_y } => write!(f, "[0,{cap_x}]x[0,{cap_y}]"),
            EnumerationBox::CoefficientSum { cap } => write!(f, "sums of <= {cap} generators"),
        }
    }
}

/// Every element of the family's semigroup in the box, sorted.
pub fn enumerate_semigroup(f: &SemigroupFamily, window: EnumerationBox) -> Vec<LatticeVector> {
    let gens = f.generators();
    match window {
        EnumerationBox::Componentwise { cap_x, cap_y } => {
            let grid = reachability(&gens, cap_x, cap_y);
            let width = cap_y as usize + 1;
            grid.iter()
                .enumerate()
                .filter(|&(_, &r)| r)
                .map(|(i, _)| LatticeVector::from_pair((i / width) as i64, (i % width) as i64))
                .collect()
        }
        EnumerationBox::CoefficientSum { cap } => {
            let mut seen = BTreeSet::from([LatticeVector::ZERO]);
            let mut frontier = vec![LatticeVector::ZERO];
            for _ in 0..cap {
                let mut next = Vec::new();
                for s in &frontier {
                    for g in &gens {
                        let t = s.checked_add(*g).expect("enumeration overflow");
                        if seen.insert(t) {
                            next.push(t);
                        }
                    }
                }
                frontier = next;
            }
            seen.into_iter().collect()
        }
    }
}

/// `s` is reachable iff `s = 0` or `s - g` is reachable for a generator `g`.
/// Cells are visited in lexicographic order, so `s - g` is always done.
fn reachability(gens: &[LatticeVector], cap_x: i64, cap_y: i64) -> Vec<bool> {
    let width = cap_y as usize + 1;
    let mut grid = vec![false; (cap_x as usize + 1) * width];
    grid[0] = true;
    for x in 0..=cap_x {
        for y in 0..=cap_y {
            let idx = x as usize * width + y as usize;
            if idx == 0 {
                continue;
            }
            grid[idx] = gens.iter().any(|g| {
                let (px, py) = (x - g.x(), y - g.y());
                px >= 0 && py >= 0 && grid[px as usize * width + py as usize]
            });
        }
    }
    grid
}

/// Integer coefficients on the grid `[0, cap_x] x [0, cap_y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap_x: i64,
    cap_y: i64,
    coefficients: Vec<i64>,
}

impl TruncatedSeries {
    pub fn zero(cap_x: i64, cap_y: i64) -> Self {
        TruncatedSeries { cap_x, cap_y, coefficients: vec![0; ((cap_x + 1) * (cap_y + 1)) as usize] }
    }

    fn index(&self, v: LatticeVector) -> Option<usize> {
        (v.x() <= self.cap_x && v.y() <= self.cap_y).then(|| (v.x() * (self.cap_y + 1) + v.y()) as usize)
    }

    pub fn caps(&self) -> (i64, i64) {
        (self.cap_x, self.cap_y)
    }

    pub fn get(&self, v: LatticeVector) -> i64 {
        self.index(v).map_or(0, |i| self.coefficients[i])
    }

    /// Adds `c·t^v`; terms outside the box are dropped.
    pub fn add_term(&mut self, v: LatticeVector, c: i64) {
        if let Some(i) = self.index(v) {
            self.coefficients[i] += c;
        }
    }

    /// Multiplies by `1/(1 - t^g) = Σ_n t^{ng}` in place.
    pub fn divide_by_one_minus(&mut self, g: LatticeVector) {
        assert!(!g.is_zero(), "1/(1 - t^0) is not a power series");
        for x in 0..=self.cap_x {
            for y in 0..=self.cap_y {
                let (px, py) = (x - g.x(), y - g.y());
                if px >= 0 && py >= 0 {
                    let from = self.get(LatticeVector::from_pair(px, py));
                    let at = self.index(LatticeVector::from_pair(x, y)).expect("in box");
                    self.coefficients[at] += from;
                }
            }
        }
    }

    /// `K(t) / ∏ (1 - t^g)` truncated to the box.
    pub fn expand(form: &HilbertSeriesForm, cap_x: i64, cap_y: i64) -> Self {
        let mut s = TruncatedSeries::zero(cap_x, cap_y);
        for (&e, &c) in &form.numerator {
            s.add_term(e, c);
        }
        for g in &form.denominator_factors {
            s.divide_by_one_minus(*g);
        }
        s
    }

    /// `Σ_{s ∈ points} t^s`.
    pub fn indicator(points: &[LatticeVector], cap_x: i64, cap_y: i64) -> Self {
        let mut s = TruncatedSeries::zero(cap_x, cap_y);
        for &p in points {
            s.add_term(p, 1);
        }
        s
    }

    /// Nonzero coefficients in lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (LatticeVector, i64)> + '_ {
        let width = self.cap_y + 1;
        self.coefficients
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(move |(i, &c)| (LatticeVector::from_pair(i as i64 / width, i as i64 % width), c))
    }

    /// First exponent (lexicographically) where the two series differ.
    pub fn first_difference(&self, other: &TruncatedSeries) -> Option<(LatticeVector, i64, i64)> {
        assert_eq!(self.caps(), other.caps(), "series over different boxes");
        let width = self.cap_y + 1;
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .position(|(a, b)| a != b)
            .map(|i| {
                let v = LatticeVector::from_pair(i as i64 / width, i as i64 % width);
                (v, self.coefficients[i], other.coefficients[i])
            })
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.coefficients.iter().sum()
    }
}
