//! Everything known about one family, with every applicable check run.

use std::time::{Duration, Instant};

use crate::closed_forms::{
    apery_extended, defining_ideal_generators, extended_betti, gluing_data, hilbert_numerator, qf_extended,
    regularity, regularity_from_resolution, resolution, GradedResolution, HilbertSeriesForm,
};
use crate::ideal::groebner::{buchberger, is_quadratic, GroebnerBasis};
use crate::ideal::polynomial::Polynomial;
use crate::ideal::toric::{family_grading, family_order};
use crate::lattice::{IntegerVector, LatticeVector};
use crate::semigroup::{
    apery_closed_form, apery_set, is_cohen_macaulay, is_normal_from, quasi_frobenius_closed_form, quasi_frobenius_from,
    AperySet, NormalityFault, SemigroupFamily,
};

use super::checks::{complex_check, gastinger_check, groebner_check, hilbert_truncation_check, ideal_identity_check, CheckEntry};
use super::series::EnumerationBox;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Overrides the default verification box.
    pub window: Option<EnumerationBox>,
    /// Skip the elimination-based kernel comparison above this `k`.
    pub max_kernel_k: u32,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { window: None, max_kernel_k: 5 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub normal: bool,
    /// `Some(true)` when the defining ideal has a quadratic Gröbner basis;
    /// `None` when the ideal is not standard graded.
    pub koszul: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSummary {
    pub mu: u64,
    pub lambda: Vec<u64>,
    pub extra_generator: Polynomial,
    pub is_gluing: bool,
    /// Closed-form Apéry set and quasi-Frobenius elements.
    pub apery: AperySet,
    pub qf: Vec<IntegerVector>,
    pub betti: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub names: Vec<String>,
    /// Enumerated from the definition.
    pub apery: AperySet,
    pub qf: Vec<IntegerVector>,
    pub cm_type: usize,
    pub flags: Flags,
    pub generators: Vec<Polynomial>,
    pub groebner: GroebnerBasis,
    pub hilbert: Option<HilbertSeriesForm>,
    pub resolution: Option<GradedResolution>,
    pub regularity: Option<u32>,
    pub extension: Option<ExtensionSummary>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub family: SemigroupFamily,
    pub analysis: Analysis,
    pub checks: Vec<CheckEntry>,
    /// Checks that do not apply, with the reason.
    pub skipped: Vec<(String, String)>,
    pub timings: Vec<(String, Duration)>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn timed<T>(timings: &mut Vec<(String, Duration)>, name: &str, work: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = work();
    timings.push((name.to_string(), start.elapsed()));
    out
}

fn list(points: &[LatticeVector]) -> String {
    points.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn apery_check(f: &SemigroupFamily, enumerated: &AperySet, closed: &AperySet) -> CheckEntry {
    const NAME: &str = "apery";
    if enumerated == closed {
        return CheckEntry::pass(NAME, format!("{} elements from the definition match the closed form: {{{}}}", closed.len(), list(&closed.elements)));
    }
    let only_enumerated: Vec<LatticeVector> =
        enumerated.elements.iter().copied().filter(|v| !closed.contains(v)).collect();
    let only_closed: Vec<LatticeVector> = closed.elements.iter().copied().filter(|v| !enumerated.contains(v)).collect();
    CheckEntry::fail(
        NAME,
        format!(
            "{f}: enumeration has {} elements, closed form {}; only enumerated {{{}}}, only closed form {{{}}}",
            enumerated.len(),
            closed.len(),
            list(&only_enumerated),
            list(&only_closed)
        ),
    )
}

/// Computes the family's invariants and runs every applicable check.
pub fn full_report(f: &SemigroupFamily, options: &ReportOptions) -> Report {
    let mut timings = Vec::new();
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let k = f.k();
    let grading = family_grading(f);
    let order = family_order(f);
    let names = grading.names.clone();

    let apery = timed(&mut timings, "apery", || apery_set(f));
    let qf = quasi_frobenius_from(f, &apery);
    let cm = is_cohen_macaulay(f, &apery);
    let normality = is_normal_from(f, &qf);
    let cm_type = qf.len();

    let closed_apery = match f.extension() {
        None => apery_closed_form(f),
        Some(_) => apery_extended(f).expect("extension present"),
    };
    checks.push(apery_check(f, &apery, &closed_apery));

    let expected_type = k as usize - 1;
    let closed_qf = match f.extension() {
        None => quasi_frobenius_closed_form(f),
        Some(_) => qf_extended(f).expect("extension present"),
    };
    checks.push(if cm.cohen_macaulay {
        CheckEntry::pass("cohen_macaulay", "no two Apéry elements differ by a lattice vector of the rays")
    } else {
        let (x, y) = cm.witness.expect("non-CM verdicts carry a witness");
        CheckEntry::fail("cohen_macaulay", format!("{x} - {y} lies in the lattice of the extremal rays"))
    });
    checks.push(if qf == closed_qf && cm_type == expected_type {
        CheckEntry::pass("cm_type", format!("type {cm_type} = k-1, QF matches the closed form"))
    } else {
        CheckEntry::fail("cm_type", format!("QF {qf:?} (type {cm_type}), closed form {closed_qf:?}, expected type {expected_type}"))
    });
    let normal_note = |fault: &Option<NormalityFault>| match fault {
        Some(NormalityFault::Boundary(v)) => format!("{} lies on the boundary of the cone", -*v),
        Some(NormalityFault::NotInCone(v)) => format!("{} lies outside the cone", -*v),
        None => "-QF lies in the relative interior".to_string(),
    };
    if f.extension().is_none() {
        checks.push(if normality.normal {
            CheckEntry::pass("normality", normal_note(&normality.witness))
        } else {
            CheckEntry::fail("normality", normal_note(&normality.witness))
        });
    } else {
        skipped.push(("normality".into(), format!("extended family: {}", normal_note(&normality.witness))));
    }

    let generators = defining_ideal_generators(f);
    let groebner = timed(&mut timings, "groebner", || buchberger(&generators, &order));
    if f.extension().is_none() {
        checks.push(timed(&mut timings, "groebner_check", || groebner_check(&generators, &order, &names)));
    } else {
        skipped.push(("groebner".into(), "the extension binomial is not part of the quadratic basis".into()));
    }
    if k <= options.max_kernel_k {
        checks.push(timed(&mut timings, "ideal_identity", || ideal_identity_check(f, &generators)));
    } else {
        skipped.push(("ideal_identity".into(), format!("k = {k} exceeds the elimination limit {}", options.max_kernel_k)));
    }
    checks.push(timed(&mut timings, "quotient_dimension", || gastinger_check(f, &generators)));

    let standard_graded = generators.iter().all(Polynomial::is_standard_homogeneous);
    let koszul = standard_graded.then(|| is_quadratic(&groebner));

    let hilbert = hilbert_numerator(f).ok();
    match &hilbert {
        Some(form) => {
            let window = options.window.unwrap_or_else(|| EnumerationBox::default_for(f, form.numerator.keys().copied()));
            checks.push(timed(&mut timings, "hilbert_truncation", || hilbert_truncation_check(f, form, window)));
        }
        None => skipped.push(("hilbert_truncation".into(), format!("no closed-form numerator for k = {k}"))),
    }

    let res = resolution(k).ok();
    match (&res, f.extension()) {
        (Some(r), None) => checks.push(timed(&mut timings, "complex", || complex_check(r))),
        (Some(_), Some(_)) => skipped.push(("complex".into(), "matrices describe the base family".into())),
        (None, _) => skipped.push(("complex".into(), format!("no closed-form resolution for k = {k}"))),
    }

    let reg = match f.extension() {
        None => match timed(&mut timings, "regularity", || regularity(f)) {
            Ok(r) => {
                let from_res = res.as_ref().map(regularity_from_resolution);
                checks.push(match from_res {
                    _ if r.value != 2 => CheckEntry::fail("regularity", format!("Apéry-norm formula gives {}", r.value)),
                    Some(x) if x != r.value => CheckEntry::fail("regularity", format!("Apéry norms give {}, resolution gives {x}", r.value)),
                    Some(_) => CheckEntry::pass("regularity", "reg(I) = 2 from Apéry norms and from the resolution"),
                    None => CheckEntry::pass("regularity", "reg(I) = 2 from Apéry norms"),
                });
                Some(r.value)
            }
            Err(e) => {
                checks.push(CheckEntry::fail("regularity", e.to_string()));
                None
            }
        },
        Some(_) => {
            skipped.push(("regularity".into(), "computed for base families only".into()));
            None
        }
    };

    let extension = f.extension().map(|_| {
        let g = gluing_data(f).expect("extension present");
        let lambda_ok = g.lambda.first().is_some_and(|&c| c > 0) || g.lambda.last().is_some_and(|&c| c > 0);
        let vanishes = g.extra_generator.vanishes_under(&grading);
        checks.push(if g.is_gluing && lambda_ok && vanishes {
            CheckEntry::pass(
                "gluing",
                format!("mu = {}, lambda = {:?}, {} vanishes", g.mu, g.lambda, g.extra_generator.display(&names, &order)),
            )
        } else {
            CheckEntry::fail(
                "gluing",
                format!(
                    "mu = {}, smallest lattice multiple {}, lambda = {:?}, vanishes = {vanishes}",
                    g.mu, g.lattice_multiple, g.lambda
                ),
            )
        });
        ExtensionSummary {
            mu: g.mu,
            lambda: g.lambda,
            extra_generator: g.extra_generator,
            is_gluing: g.is_gluing,
            apery: closed_apery.clone(),
            qf: closed_qf.clone(),
            betti: extended_betti(k).ok(),
        }
    });

    let flags = Flags {
        cohen_macaulay: cm.cohen_macaulay,
        gorenstein: cm.cohen_macaulay && cm_type == 1,
        normal: normality.normal,
        koszul,
    };
    let analysis = Analysis {
        names,
        apery,
        qf,
        cm_type,
        flags,
        generators,
        groebner,
        hilbert,
        resolution: if f.extension().is_none() { res } else { None },
        regularity: reg,
        extension,
    };
    Report { family: f.clone(), analysis, checks, skipped, timings }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::build_family;

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::from_pair(x, y)
    }

    #[test]
    fn first_example_report() {
        let f = build_family(v(5, 4), v(4, 9), 3, None).unwrap();
        let r = full_report(&f, &ReportOptions::default());
        assert!(r.all_passed(), "{:?}", r.checks);
        let flags = r.analysis.flags;
        assert!(flags.cohen_macaulay && !flags.gorenstein && flags.normal);
        assert_eq!(flags.koszul, Some(true));
        assert_eq!(r.analysis.regularity, Some(2));
    }

    #[test]
    fn second_example_report() {
        let f = build_family(v(2, 3), v(2, 2), 3, Some(v(9, 11))).unwrap();
        let r = full_report(&f, &ReportOptions::default());
        assert!(r.all_passed(), "{:?}", r.checks);
        assert!(!r.analysis.flags.normal);
        assert!(r.analysis.flags.cohen_macaulay);
        assert_eq!(r.analysis.cm_type, 2);
        assert_eq!(r.analysis.apery.len(), 6);
        let ext = r.analysis.extension.unwrap();
        assert_eq!(ext.mu, 2);
        assert_eq!(ext.betti, Some(vec![1, 4, 5, 2]));
    }

    #[test]
    fn k2_is_gorenstein() {
        let f = build_family(v(2, 1), v(1, 2), 2, None).unwrap();
        let r = full_report(&f, &ReportOptions::default());
        assert!(r.all_passed(), "{:?}", r.checks);
        assert!(r.analysis.flags.gorenstein);
    }
}
