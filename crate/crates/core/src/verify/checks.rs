//! Individual checks. Each produces one [`CheckEntry`]; failures always
//! carry a witness.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::closed_forms::{
    named_minors, GradedResolution, HilbertSeriesForm, ShiftDegree,
};
use crate::ideal::groebner::{buchberger, ideal_equal, is_groebner_basis, same_up_to_scaling};
use crate::ideal::order::MonomialOrder;
use crate::ideal::polynomial::Polynomial;
use crate::ideal::staircase::{standard_monomials, with_variables_killed};
use crate::ideal::toric::{family_grading, family_order, toric_kernel};
use crate::semigroup::{apery_set, SemigroupFamily};

use super::series::{enumerate_semigroup, EnumerationBox, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl CheckEntry {
    pub fn pass(name: &str, note: impl Into<String>) -> Self {
        CheckEntry { name: name.to_string(), passed: true, witness: None, note: Some(note.into()) }
    }

    pub fn fail(name: &str, witness: impl Into<String>) -> Self {
        CheckEntry { name: name.to_string(), passed: false, witness: Some(witness.into()), note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Expands `form` over the box and compares with the indicator of the
/// enumerated semigroup.
pub fn hilbert_truncation_check(f: &SemigroupFamily, form: &HilbertSeriesForm, window: EnumerationBox) -> CheckEntry {
    const NAME: &str = "hilbert_truncation";
    let EnumerationBox::Componentwise { cap_x, cap_y } = window else {
        return CheckEntry::fail(NAME, format!("series truncation needs a componentwise box, got {window}"));
    };
    let expanded = TruncatedSeries::expand(form, cap_x, cap_y);
    let points = enumerate_semigroup(f, window);
    let indicator = TruncatedSeries::indicator(&points, cap_x, cap_y);
    match expanded.first_difference(&indicator) {
        None => CheckEntry::pass(NAME, format!("{} semigroup points in {window}, all coefficients 0 or 1", points.len())),
        Some((at, got, want)) => CheckEntry::fail(NAME, format!("coefficient of t^{at} is {got}, expected {want}")),
    }
}

/// `δ_i δ_{i+1} = 0`, constant-free entries, consistent degrees, ranks,
/// shift lists and the named minors.
pub fn complex_check(res: &GradedResolution) -> CheckEntry {
    const NAME: &str = "complex";
    let names = res.names();
    let order = MonomialOrder::grevlex(names.len());
    let show = |p: &Polynomial| p.display(&names, &order).to_string();

    for (i, w) in res.maps.windows(2).enumerate() {
        let product = w[0].mul(&w[1]);
        let nonzero = product.entries().find(|(_, _, p)| !p.is_zero()).map(|(r, c, p)| (r, c, show(p)));
        if let Some((r, c, p)) = nonzero {
            return CheckEntry::fail(NAME, format!("entry ({},{}) of d{}*d{} is {p}", r + 1, c + 1, i + 1, i + 2));
        }
    }
    for (i, m) in res.maps.iter().enumerate() {
        if let Some((r, c, p)) = m.entries().find(|(_, _, p)| p.has_constant_term()) {
            return CheckEntry::fail(NAME, format!("d{} entry ({},{}) = {} has a constant term", i + 1, r + 1, c + 1, show(p)));
        }
    }
    if res.betti.len() != res.maps.len() + 1 || res.betti[0] != 1 {
        return CheckEntry::fail(NAME, format!("betti {:?} does not fit {} maps", res.betti, res.maps.len()));
    }
    let mut row_degrees = vec![ShiftDegree::ZERO];
    for (i, m) in res.maps.iter().enumerate() {
        if m.rows() != res.betti[i] || m.cols() != res.betti[i + 1] {
            return CheckEntry::fail(NAME, format!("d{} is {}x{}, betti {:?}", i + 1, m.rows(), m.cols(), res.betti));
        }
        let mut col_degrees = Vec::with_capacity(m.cols());
        for c in 0..m.cols() {
            let mut degree = None;
            for (r, p) in m.column(c).into_iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let Some(e) = ShiftDegree::of_polynomial(p) else {
                    return CheckEntry::fail(NAME, format!("d{} entry ({},{}) = {} is not homogeneous", i + 1, r + 1, c + 1, show(p)));
                };
                let d = row_degrees[r] + e;
                if degree.is_some_and(|prev| prev != d) {
                    return CheckEntry::fail(NAME, format!("d{} column {} mixes degrees {} and {d}", i + 1, c + 1, degree.unwrap()));
                }
                degree = Some(d);
            }
            let Some(d) = degree else {
                return CheckEntry::fail(NAME, format!("d{} column {} is zero", i + 1, c + 1));
            };
            col_degrees.push(d);
        }
        let mut derived: BTreeMap<ShiftDegree, u32> = BTreeMap::new();
        for d in &col_degrees {
            *derived.entry(*d).or_default() += 1;
        }
        let stated: BTreeMap<ShiftDegree, u32> =
            res.shifts.get(i + 1).map(|c| c.iter().map(|s| (s.degree, s.multiplicity)).collect()).unwrap_or_default();
        if derived != stated {
            return CheckEntry::fail(NAME, format!("C{} from the matrix is {derived:?}, stated {stated:?}", i + 1));
        }
        row_degrees = col_degrees;
    }

    let groups = match named_minors(res.k) {
        Ok(g) => g,
        Err(e) => return CheckEntry::fail(NAME, e.to_string()),
    };
    let mut checked = 0;
    for group in &groups {
        let m = &res.maps[group.map - 1];
        let mut values = Vec::new();
        for minor in &group.minors {
            let rows: Vec<usize> = minor.rows.iter().map(|r| r - 1).collect();
            let cols: Vec<usize> = minor.cols.iter().map(|c| c - 1).collect();
            let det = m.submatrix(&rows, &cols).determinant();
            if det != minor.expected && det != -minor.expected.clone() {
                return CheckEntry::fail(
                    NAME,
                    format!("minor {} of d{} is {}, expected ±({})", minor.name, group.map, show(&det), show(&minor.expected)),
                );
            }
            values.push(det);
            checked += 1;
        }
        if let Some(o) = &group.coprime_under {
            let leads: Vec<_> = values.iter().map(|p| p.leading_monomial(o).expect("nonzero minor").clone()).collect();
            for x in 0..leads.len() {
                for y in x + 1..leads.len() {
                    if !leads[x].is_coprime(&leads[y]) {
                        return CheckEntry::fail(
                            NAME,
                            format!("leading terms of minors {} and {} of d{} share a variable", group.minors[x].name, group.minors[y].name, group.map),
                        );
                    }
                }
            }
        }
    }
    CheckEntry::pass(
        NAME,
        format!("k={}: {} maps, betti {:?}, shifts consistent, {checked} minors verified", res.k, res.maps.len(), res.betti),
    )
}

/// Criterion for `J ⊆ I_S` to be equal: every generator vanishes on the
/// torus parametrisation and `dim Q[x]/(J + <x1, x_{k+1}>) = |Ap(S, E)|`.
pub fn gastinger_check(f: &SemigroupFamily, gens: &[Polynomial]) -> CheckEntry {
    const NAME: &str = "quotient_dimension";
    let grading = family_grading(f);
    let order = family_order(f);
    if let Some(g) = gens.iter().find(|g| !g.vanishes_under(&grading)) {
        return CheckEntry::fail(NAME, format!("{} does not vanish", g.display(&grading.names, &order)));
    }
    let k = f.k() as usize;
    let gb = with_variables_killed(gens, &[0, k], &order);
    let target = apery_set(f).len();
    match standard_monomials(&gb, Some(target + 1)) {
        Ok(s) if s.len() == target => CheckEntry::pass(NAME, format!("dimension {target} = |Ap|")),
        Ok(s) => CheckEntry::fail(NAME, format!("dimension {} but |Ap| = {target}", s.len())),
        Err(e) => CheckEntry::fail(NAME, format!("dimension exceeds |Ap| = {target}: {e}")),
    }
}

/// Buchberger's criterion holds for `gens`, and completion returns `gens`
/// up to scaling.
pub fn groebner_check(gens: &[Polynomial], order: &MonomialOrder, names: &[String]) -> CheckEntry {
    const NAME: &str = "groebner";
    let check = is_groebner_basis(gens, order);
    if let Some((i, j, r)) = check.failing_pair {
        return CheckEntry::fail(
            NAME,
            format!("S-polynomial of generators {} and {} reduces to {}", i + 1, j + 1, r.display(names, order)),
        );
    }
    let completed = buchberger(gens, order);
    if !same_up_to_scaling(&completed.elements, gens, order) {
        return CheckEntry::fail(NAME, format!("completion has {} elements, input {}", completed.len(), gens.len()));
    }
    CheckEntry::pass(NAME, format!("{} generators, all S-pairs reduce to 0", gens.len()))
}

/// `<gens>` equals the toric kernel computed by elimination.
pub fn ideal_identity_check(f: &SemigroupFamily, gens: &[Polynomial]) -> CheckEntry {
    const NAME: &str = "ideal_identity";
    let kernel = toric_kernel(f);
    if ideal_equal(&kernel, gens) {
        CheckEntry::pass(NAME, format!("<G> = toric kernel ({} reduced basis elements)", kernel.len()))
    } else {
        let grading = family_grading(f);
        let generated = buchberger(gens, &kernel.order);
        let missing = kernel
            .elements
            .iter()
            .find(|p| !generated.contains(p))
            .map(|p| p.display(&grading.names, &kernel.order).to_string())
            .unwrap_or_else(|| "a generator lies outside the kernel".into());
        CheckEntry::fail(NAME, format!("kernel element not in <G>: {missing}"))
    }
}
