//! The semigroups `S = <a, a+d, ..., a+kd>` of N² and their optional
//! one-element extensions `S^b = <a, ..., a+kd, b>`.
//!
//! Everything here is exact. Membership is decided by a bounded depth-first
//! search over coefficient vectors; the bound is finite because every
//! generator is a nonzero point of N².

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{ExtensionFault, SemigroupError};
use crate::lattice::{in_lattice, solve_in_basis, IntegerVector, LatticeVector, RationalPair};

/// Default search bound for the multiplier `μ` of an extension element.
pub const DEFAULT_MU_BOUND: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyOptions {
    pub mu_bound: u64,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions { mu_bound: DEFAULT_MU_BOUND }
    }
}

/// The extension element `b` together with the smallest `μ > 0` such that
/// `μb` lies in the base semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extension {
    pub b: LatticeVector,
    pub mu: u64,
}

/// A validated `(a, d, k[, b])` instance.
///
/// Construction checks linear independence of `a` and `d`, minimality of the
/// generator list and, when present, the admissibility of `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupFamily {
    a: LatticeVector,
    d: LatticeVector,
    k: u32,
    base: Vec<LatticeVector>,
    extension: Option<Extension>,
}

/// Coefficients expressing a vector as a combination of a generator list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MembershipCertificate {
    pub coefficients: Vec<u64>,
}

impl MembershipCertificate {
    /// Re-sums the certificate against `generators`.
    pub fn evaluate(&self, generators: &[LatticeVector]) -> Option<LatticeVector> {
        if generators.len() != self.coefficients.len() {
            return None;
        }
        let mut acc = LatticeVector::ZERO;
        for (g, &c) in generators.iter().zip(&self.coefficients) {
            acc = acc.checked_add(g.checked_scale(c)?)?;
        }
        Some(acc)
    }

    /// Number of generators used, counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.coefficients.iter().sum()
    }
}

impl SemigroupFamily {
    pub fn new(a: LatticeVector, d: LatticeVector, k: u32, b: Option<LatticeVector>) -> Result<Self, SemigroupError> {
        Self::with_options(a, d, k, b, &FamilyOptions::default())
    }

    pub fn with_options(
        a: LatticeVector,
        d: LatticeVector,
        k: u32,
        b: Option<LatticeVector>,
        options: &FamilyOptions,
    ) -> Result<Self, SemigroupError> {
        if k < 2 {
            return Err(SemigroupError::KTooSmall(k));
        }
        if a.is_zero() || d.is_zero() {
            return Err(SemigroupError::ZeroVector);
        }
        if crate::lattice::determinant(a.to_integer(), d.to_integer()) == 0 {
            return Err(SemigroupError::DependentDirections { a, d });
        }
        let base = (0..=u64::from(k))
            .map(|i| d.checked_scale(i).and_then(|id| a.checked_add(id)))
            .collect::<Option<Vec<_>>>()
            .ok_or(SemigroupError::Overflow)?;
        check_minimal(&base)?;

        let extension = match b {
            None => None,
            Some(b) => Some(validate_extension(&base, b, options.mu_bound)?),
        };
        let family = SemigroupFamily { a, d, k, base, extension };
        if extension.is_some() {
            check_minimal(&family.generators())?;
        }
        Ok(family)
    }

    pub fn a(&self) -> LatticeVector {
        self.a
    }

    pub fn d(&self) -> LatticeVector {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn extension(&self) -> Option<Extension> {
        self.extension
    }

    /// The family without its extension element.
    pub fn base_family(&self) -> SemigroupFamily {
        SemigroupFamily { extension: None, ..self.clone() }
    }

    /// `[a, a+d, ..., a+kd]`.
    pub fn base_generators(&self) -> &[LatticeVector] {
        &self.base
    }

    /// `a + i·d` for `0 <= i <= k`.
    pub fn generator(&self, i: u32) -> LatticeVector {
        self.base[i as usize]
    }

    /// The full generator list: the base generators followed by `b` if present.
    pub fn generators(&self) -> Vec<LatticeVector> {
        let mut gens = self.base.clone();
        if let Some(ext) = self.extension {
            gens.push(ext.b);
        }
        gens
    }

    /// Number of polynomial variables of the defining ideal.
    pub fn variable_count(&self) -> usize {
        self.base.len() + usize::from(self.extension.is_some())
    }

    /// Multiplier of the extension (1 for base families).
    pub fn mu(&self) -> u64 {
        self.extension.map_or(1, |e| e.mu)
    }
}

impl fmt::Display for SemigroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S(a={}, d={}, k={})", self.a, self.d, self.k)?;
        if let Some(ext) = self.extension {
            write!(f, " extended by b={} (mu={})", ext.b, ext.mu)?;
        }
        Ok(())
    }
}

/// Builds and validates a family.
pub fn build_family(
    a: LatticeVector,
    d: LatticeVector,
    k: u32,
    b: Option<LatticeVector>,
) -> Result<SemigroupFamily, SemigroupError> {
    SemigroupFamily::new(a, d, k, b)
}

fn check_minimal(gens: &[LatticeVector]) -> Result<(), SemigroupError> {
    for (index, &generator) in gens.iter().enumerate() {
        let others: Vec<LatticeVector> =
            gens.iter().enumerate().filter(|&(j, _)| j != index).map(|(_, &g)| g).collect();
        if let Some(cert) = represent(&others, generator) {
            let mut coefficients = cert.coefficients;
            coefficients.insert(index, 0);
            return Err(SemigroupError::NotMinimal { index, generator, certificate: coefficients });
        }
    }
    Ok(())
}

fn validate_extension(base: &[LatticeVector], b: LatticeVector, bound: u64) -> Result<Extension, SemigroupError> {
    let fault = |fault| SemigroupError::BadExtension { b, fault };
    if represent(base, b).is_some() {
        return Err(fault(ExtensionFault::AlreadyMember));
    }
    let mu = (2..=bound)
        .find(|&m| b.checked_scale(m).is_some_and(|mb| represent(base, mb).is_some()))
        .ok_or_else(|| fault(ExtensionFault::NoMultiple { bound }))?;
    let target = b.checked_scale(mu).ok_or(SemigroupError::Overflow)?;
    if boundary_representation(base, target).is_none() {
        return Err(fault(ExtensionFault::NoBoundaryRepresentation { mu }));
    }
    Ok(Extension { b, mu })
}

/// Lexicographically largest representation of `target` over `base`
/// (`base[0] = a`, `base[k] = a+kd`) whose first or last coefficient is
/// nonzero.
pub fn boundary_representation(base: &[LatticeVector], target: LatticeVector) -> Option<Vec<u64>> {
    let first = base[0];
    let last = *base.last()?;
    // Any representation with a positive first coefficient beats one without,
    // and the lexicographically largest representation maximises that
    // coefficient first.
    if target.checked_sub(first).is_some_and(|rest| represent(base, rest).is_some()) {
        return represent(base, target).map(|c| c.coefficients);
    }
    let rest = target.checked_sub(last)?;
    let mut coefficients = represent(base, rest)?.coefficients;
    *coefficients.last_mut()? += 1;
    Some(coefficients)
}

/// Decides `v ∈ <gens>` and returns the lexicographically largest
/// coefficient vector when it is.
pub fn represent(gens: &[LatticeVector], v: LatticeVector) -> Option<MembershipCertificate> {
    let mut coefficients = vec![0u64; gens.len()];
    let mut failed = HashSet::new();
    if search(gens, 0, v, &mut coefficients, &mut failed) {
        Some(MembershipCertificate { coefficients })
    } else {
        None
    }
}

/// Largest `c` with `c·g <= rest` componentwise.
fn max_multiple(g: LatticeVector, rest: LatticeVector) -> u64 {
    let bound = |num: i64, den: i64| if den == 0 { i64::MAX } else { num / den };
    bound(rest.x(), g.x()).min(bound(rest.y(), g.y())) as u64
}

fn search(
    gens: &[LatticeVector],
    index: usize,
    rest: LatticeVector,
    coefficients: &mut [u64],
    failed: &mut HashSet<(usize, LatticeVector)>,
) -> bool {
    if rest.is_zero() {
        coefficients[index..].iter_mut().for_each(|c| *c = 0);
        return true;
    }
    if index == gens.len() || failed.contains(&(index, rest)) {
        return false;
    }
    let g = gens[index];
    for c in (0..=max_multiple(g, rest)).rev() {
        let used = g.checked_scale(c).expect("bounded by rest");
        let next = rest.checked_sub(used).expect("bounded by rest");
        coefficients[index] = c;
        if search(gens, index + 1, next, coefficients, failed) {
            return true;
        }
    }
    coefficients[index] = 0;
    failed.insert((index, rest));
    false
}

/// Membership in the family's semigroup (extension included).
pub fn is_member(f: &SemigroupFamily, v: LatticeVector) -> Option<MembershipCertificate> {
    represent(&f.generators(), v)
}

/// Like [`is_member`] but for an arbitrary point of Z².
pub fn contains(f: &SemigroupFamily, v: IntegerVector) -> bool {
    v.to_lattice().is_some_and(|v| is_member(f, v).is_some())
}

/// `(a, a+kd)`.
pub fn extremal_rays(f: &SemigroupFamily) -> (LatticeVector, LatticeVector) {
    (f.generator(0), f.generator(f.k()))
}

/// An Apéry set `Ap(S, E)`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySet {
    pub base: Vec<LatticeVector>,
    pub elements: Vec<LatticeVector>,
}

impl AperySet {
    pub fn new(base: Vec<LatticeVector>, elements: impl IntoIterator<Item = LatticeVector>) -> Self {
        let elements: BTreeSet<_> = elements.into_iter().collect();
        AperySet { base, elements: elements.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.elements.binary_search(v).is_ok()
    }
}

/// `{0, a+d, ..., a+(k-1)d}`, the Apéry set of the base semigroup with
/// respect to its extremal rays. The extension element, if any, is ignored.
pub fn apery_closed_form(f: &SemigroupFamily) -> AperySet {
    let (r1, r2) = extremal_rays(f);
    let inner = (1..f.k()).map(|i| f.generator(i));
    AperySet::new(vec![r1, r2], std::iter::once(LatticeVector::ZERO).chain(inner))
}

/// Default coefficient-sum cap for [`apery_bruteforce`]: `4·μ`.
pub fn default_apery_cap(f: &SemigroupFamily) -> u64 {
    4 * f.mu()
}

/// All points reachable with at most `cap` generators, grouped by the first
/// layer in which they appear.
fn layers(gens: &[LatticeVector], cap: u64) -> Vec<BTreeSet<LatticeVector>> {
    let mut seen: HashSet<LatticeVector> = HashSet::from([LatticeVector::ZERO]);
    let mut out = vec![BTreeSet::from([LatticeVector::ZERO])];
    for _ in 0..cap {
        let mut next = BTreeSet::new();
        for s in out.last().expect("nonempty") {
            for g in gens {
                if let Some(t) = s.checked_add(*g) {
                    if seen.insert(t) {
                        next.insert(t);
                    }
                }
            }
        }
        out.push(next);
    }
    out
}

fn is_apery_element(f: &SemigroupFamily, base: &[LatticeVector], s: LatticeVector) -> bool {
    base.iter().all(|e| s.checked_sub(*e).is_none_or(|rest| is_member(f, rest).is_none()))
}

/// Definition-level Apéry set: every element expressible with at most `cap`
/// generators that survives `s - e ∉ S` for all `e ∈ base`.
///
/// Fails with `CapTooSmall` when one more layer would add a new Apéry
/// element; since the set is closed under S-divisors, a layer without new
/// elements proves completeness.
pub fn apery_bruteforce(f: &SemigroupFamily, base: &[LatticeVector], cap: u64) -> Result<AperySet, SemigroupError> {
    for e in base {
        if e.is_zero() || is_member(f, *e).is_none() {
            return Err(SemigroupError::InvalidAperyBase(*e));
        }
    }
    let layers = layers(&f.generators(), cap + 1);
    let (probe, inner) = layers.split_last().expect("cap + 1 layers");
    let elements: Vec<LatticeVector> =
        inner.iter().flatten().copied().filter(|s| is_apery_element(f, base, *s)).collect();
    if let Some(witness) = probe.iter().copied().find(|s| is_apery_element(f, base, *s)) {
        return Err(SemigroupError::CapTooSmall { cap, witness });
    }
    Ok(AperySet::new(base.to_vec(), elements))
}

/// `Ap(S, E)` for the extremal rays, by enumeration, doubling the cap until
/// the enumeration is provably complete.
pub fn apery_set(f: &SemigroupFamily) -> AperySet {
    let (r1, r2) = extremal_rays(f);
    let mut cap = default_apery_cap(f);
    loop {
        match apery_bruteforce(f, &[r1, r2], cap) {
            Ok(ap) => return ap,
            Err(SemigroupError::CapTooSmall { .. }) => cap *= 2,
            Err(e) => unreachable!("extremal rays are valid Apery bases: {e}"),
        }
    }
}

/// `x ⪯ y` iff `y - x ∈ S`.
pub fn divides(f: &SemigroupFamily, x: LatticeVector, y: LatticeVector) -> bool {
    y.checked_sub(x).is_some_and(|rest| is_member(f, rest).is_some())
}

/// Maximal elements of an Apéry set under `⪯`.
pub fn maximal_elements(f: &SemigroupFamily, ap: &AperySet) -> Vec<LatticeVector> {
    ap.elements
        .iter()
        .copied()
        .filter(|m| !ap.elements.iter().any(|other| other != m && divides(f, *m, *other)))
        .collect()
}

/// `{m - Σ_{e∈E} e : m maximal in Ap}` for a given Apéry set.
pub fn quasi_frobenius_from(f: &SemigroupFamily, ap: &AperySet) -> Vec<IntegerVector> {
    let shift = ap.base.iter().fold(IntegerVector::ZERO, |acc, e| acc + e.to_integer());
    let mut qf: Vec<IntegerVector> = maximal_elements(f, ap).into_iter().map(|m| m.to_integer() - shift).collect();
    qf.sort();
    qf
}

/// Quasi-Frobenius elements, computed from the definition-level Apéry set.
pub fn quasi_frobenius(f: &SemigroupFamily) -> Vec<IntegerVector> {
    quasi_frobenius_from(f, &apery_set(f))
}

/// `{-(a+id) : 1 <= i <= k-1}` for the base semigroup.
pub fn quasi_frobenius_closed_form(f: &SemigroupFamily) -> Vec<IntegerVector> {
    let mut qf: Vec<IntegerVector> = (1..f.k()).map(|i| -f.generator(i).to_integer()).collect();
    qf.sort();
    qf
}

/// Cohen–Macaulay type, as the number of quasi-Frobenius elements.
pub fn cm_type(f: &SemigroupFamily) -> usize {
    quasi_frobenius(f).len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    /// Two distinct Apéry elements whose difference lies in `G(E)`.
    pub witness: Option<(LatticeVector, LatticeVector)>,
}

/// Rosales' criterion: distinct Apéry elements must not differ by an element
/// of the group generated by the extremal rays.
pub fn is_cohen_macaulay(f: &SemigroupFamily, ap: &AperySet) -> CmVerdict {
    let (r1, r2) = extremal_rays(f);
    for (i, x) in ap.elements.iter().enumerate() {
        for y in &ap.elements[i + 1..] {
            if in_lattice(r1.to_integer(), r2.to_integer(), x.to_integer() - y.to_integer()) {
                return CmVerdict { cohen_macaulay: false, witness: Some((*x, *y)) };
            }
        }
    }
    CmVerdict { cohen_macaulay: true, witness: None }
}

/// Coordinates of `v` in the basis of extremal rays.
pub fn ray_coordinates(f: &SemigroupFamily, v: IntegerVector) -> RationalPair {
    let (r1, r2) = extremal_rays(f);
    solve_in_basis(r1.to_integer(), r2.to_integer(), v).expect("extremal rays are independent")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDegree {
    pub coordinates: RationalPair,
    pub degree: BigRational,
}

/// `v = l1·a + l2·(a+kd)` with `deg(v) = l1 + l2`.
pub fn degree_in_rays(f: &SemigroupFamily, v: LatticeVector) -> Result<ConeDegree, SemigroupError> {
    let coordinates = ray_coordinates(f, v.to_integer());
    if !coordinates.both_nonnegative() {
        return Err(SemigroupError::OutsideCone(v.to_integer()));
    }
    let degree = coordinates.total();
    Ok(ConeDegree { coordinates, degree })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalityFault {
    /// On the boundary of the cone but not in its relative interior.
    Boundary(IntegerVector),
    /// Outside the cone altogether.
    NotInCone(IntegerVector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityVerdict {
    pub normal: bool,
    pub witness: Option<NormalityFault>,
}

/// Normality test `-QF(S) ⊆ relint(cone(S))` for a given QF set.
pub fn is_normal_from(f: &SemigroupFamily, qf: &[IntegerVector]) -> NormalityVerdict {
    for q in qf {
        let v = -*q;
        let c = ray_coordinates(f, v);
        if c.l1.is_negative() || c.l2.is_negative() {
            return NormalityVerdict { normal: false, witness: Some(NormalityFault::NotInCone(v)) };
        }
        if !c.both_positive() {
            return NormalityVerdict { normal: false, witness: Some(NormalityFault::Boundary(v)) };
        }
    }
    NormalityVerdict { normal: true, witness: None }
}

pub fn is_normal(f: &SemigroupFamily) -> NormalityVerdict {
    is_normal_from(f, &quasi_frobenius(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::from_pair(x, y)
    }

    fn example1() -> SemigroupFamily {
        build_family(v(5, 4), v(4, 9), 3, None).unwrap()
    }

    fn example2() -> SemigroupFamily {
        build_family(v(2, 3), v(2, 2), 3, Some(v(9, 11))).unwrap()
    }

    #[test]
    fn example1_generators() {
        assert_eq!(example1().generators(), vec![v(5, 4), v(9, 13), v(13, 22), v(17, 31)]);
    }

    #[test]
    fn example2_is_valid_extension() {
        let f = example2();
        assert_eq!(f.extension(), Some(Extension { b: v(9, 11), mu: 2 }));
        assert_eq!(f.generators().len(), 5);
    }

    #[test]
    fn dependent_directions_rejected() {
        assert_eq!(
            build_family(v(1, 0), v(1, 0), 2, None),
            Err(SemigroupError::DependentDirections { a: v(1, 0), d: v(1, 0) })
        );
        assert!(matches!(build_family(v(1, 0), v(2, 0), 2, None), Err(SemigroupError::DependentDirections { .. })));
    }

    #[test]
    fn degenerate_inputs_rejected() {
        assert_eq!(build_family(v(1, 0), v(0, 1), 1, None), Err(SemigroupError::KTooSmall(1)));
        assert_eq!(build_family(v(0, 0), v(0, 1), 2, None), Err(SemigroupError::ZeroVector));
    }

    #[test]
    fn extension_faults() {
        let err = build_family(v(2, 3), v(2, 2), 3, Some(v(4, 6))).unwrap_err();
        assert!(matches!(err, SemigroupError::BadExtension { fault: ExtensionFault::AlreadyMember, .. }));
        // (1,1) has y - x = 0 while every element of S has y - x equal to its length
        let err = build_family(v(2, 3), v(2, 2), 3, Some(v(1, 1))).unwrap_err();
        assert!(matches!(err, SemigroupError::BadExtension { fault: ExtensionFault::NoMultiple { bound: 64 }, .. }));
    }

    #[test]
    fn boundary_representation_maximises_first_coefficient() {
        // (2,4) = 2(1,2) = (1,1)+(1,3) = (1,0)+(1,4)
        let base = build_family(v(1, 0), v(0, 1), 4, None).unwrap();
        let rep = boundary_representation(base.base_generators(), v(2, 4)).unwrap();
        assert_eq!(rep, vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn membership_examples() {
        let base = example2().base_family();
        assert_eq!(is_member(&base, v(0, 0)).unwrap().coefficients, vec![0, 0, 0, 0]);
        let cert = is_member(&base, v(18, 22)).unwrap();
        assert_eq!(cert.coefficients, vec![2, 0, 1, 1]);
        assert_eq!(cert.evaluate(base.base_generators()), Some(v(18, 22)));
        assert!(is_member(&base, v(9, 11)).is_none());
    }

    #[test]
    fn extremal_rays_examples() {
        assert_eq!(extremal_rays(&example1()), (v(5, 4), v(17, 31)));
        let f = build_family(v(2, 1), v(1, 2), 2, None).unwrap();
        assert_eq!(extremal_rays(&f), (v(2, 1), v(4, 5)));
        assert_eq!(extremal_rays(&example2()), (v(2, 3), v(8, 9)));
    }

    #[test]
    fn apery_closed_form_examples() {
        assert_eq!(apery_closed_form(&example1()).elements, vec![v(0, 0), v(9, 13), v(13, 22)]);
        let f = build_family(v(2, 1), v(1, 2), 2, None).unwrap();
        assert_eq!(apery_closed_form(&f).elements, vec![v(0, 0), v(3, 3)]);
    }

    #[test]
    fn apery_bruteforce_matches_closed_form_on_example1() {
        let f = example1();
        let (r1, r2) = extremal_rays(&f);
        assert_eq!(apery_bruteforce(&f, &[r1, r2], 4).unwrap(), apery_closed_form(&f));
    }

    #[test]
    fn apery_bruteforce_example2_includes_b() {
        let f = example2();
        let ap = apery_bruteforce(&f, &[v(2, 3), v(8, 9)], 6).unwrap();
        assert_eq!(ap.elements, vec![v(0, 0), v(4, 5), v(6, 7), v(9, 11), v(13, 16), v(15, 18)]);
    }

    #[test]
    fn apery_bruteforce_flags_small_cap() {
        let f = example2();
        // (13,16) = (4,5) + b needs two generators
        let err = apery_bruteforce(&f, &[v(2, 3), v(8, 9)], 1).unwrap_err();
        assert!(matches!(err, SemigroupError::CapTooSmall { cap: 1, .. }));
    }

    #[test]
    fn apery_base_must_be_nonzero_members() {
        let f = example1();
        assert_eq!(apery_bruteforce(&f, &[v(0, 0)], 4), Err(SemigroupError::InvalidAperyBase(v(0, 0))));
        assert_eq!(apery_bruteforce(&f, &[v(1, 1)], 4), Err(SemigroupError::InvalidAperyBase(v(1, 1))));
    }

    #[test]
    fn quasi_frobenius_examples() {
        let iv = IntegerVector::new;
        assert_eq!(quasi_frobenius(&example2()), vec![iv(3, 4), iv(5, 6)]);
        assert_eq!(quasi_frobenius(&example1()), vec![iv(-13, -22), iv(-9, -13)]);
        let f = build_family(v(2, 1), v(1, 2), 2, None).unwrap();
        assert_eq!(quasi_frobenius(&f), vec![iv(-3, -3)]);
        assert_eq!(quasi_frobenius(&example1()), quasi_frobenius_closed_form(&example1()));
    }

    #[test]
    fn cm_type_examples() {
        assert_eq!(cm_type(&example1()), 2);
        assert_eq!(cm_type(&build_family(v(2, 1), v(1, 2), 2, None).unwrap()), 1);
        assert_eq!(cm_type(&example2()), 2);
    }

    #[test]
    fn cohen_macaulay_examples() {
        for f in [example1(), example2()] {
            let verdict = is_cohen_macaulay(&f, &apery_set(&f));
            assert!(verdict.cohen_macaulay, "{f}: {verdict:?}");
        }
    }

    #[test]
    fn rosales_detects_lattice_difference() {
        // Feed a fake Apéry set whose elements differ by a ray.
        let f = example1();
        let fake = AperySet { base: vec![v(5, 4), v(17, 31)], elements: vec![v(0, 0), v(5, 4)] };
        let verdict = is_cohen_macaulay(&f, &fake);
        assert!(!verdict.cohen_macaulay);
        assert_eq!(verdict.witness, Some((v(0, 0), v(5, 4))));
    }

    #[test]
    fn normality_examples() {
        assert!(is_normal(&example1()).normal);
        let verdict = is_normal(&example2());
        assert!(!verdict.normal);
        assert!(matches!(verdict.witness, Some(NormalityFault::NotInCone(_))));
        // -QF element on a ray is boundary, not relative interior
        let f = example1();
        let verdict = is_normal_from(&f, &[IntegerVector::new(-10, -8)]);
        assert_eq!(verdict.witness, Some(NormalityFault::Boundary(IntegerVector::new(10, 8))));
    }

    #[test]
    fn degree_examples() {
        let f = example1();
        let third = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(3));
        for i in 1..3 {
            let deg = degree_in_rays(&f, f.generator(i)).unwrap();
            assert_eq!(deg.degree, third(3));
            assert_eq!(deg.coordinates.l1, third(3 - i as i64));
            assert_eq!(deg.coordinates.l2, third(i as i64));
        }
        assert_eq!(degree_in_rays(&f, v(0, 0)).unwrap().degree, third(0));
        let two_a = degree_in_rays(&f, v(10, 8)).unwrap();
        assert_eq!((two_a.coordinates.l1, two_a.degree), (third(6), third(6)));
        assert_eq!(degree_in_rays(&f, v(1, 0)), Err(SemigroupError::OutsideCone(IntegerVector::new(1, 0))));
    }
}
