//! The quadratic binomials generating the defining ideal.

use std::collections::BTreeMap;

use crate::error::ClosedFormError;
use crate::ideal::groebner::reduce;
use crate::ideal::monomial::Monomial;
use crate::ideal::order::MonomialOrder;
use crate::ideal::polynomial::Polynomial;
use crate::semigroup::{boundary_representation, SemigroupFamily};

/// `x_i x_j - x_p x_q` over `x1..x_{k+1}` (1-based indices).
fn quadric(k: u32, head: (u32, u32), tail: (u32, u32)) -> Polynomial {
    let n = k as usize + 1;
    let product = |(i, j): (u32, u32)| {
        let mut e = vec![0u32; n];
        e[i as usize - 1] += 1;
        e[j as usize - 1] += 1;
        Monomial::new(e)
    };
    Polynomial::binomial(product(head), product(tail))
}

/// Which shape a member of `ξ_ℓ` has.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Square,
    /// `x_ℓ x_{ℓ+i} - x1 x_{2ℓ-1+i}`
    FirstTail,
    /// `x_ℓ x_{ℓ+i} - x_{2ℓ-k-1+i} x_{k+1}`
    LastTail,
}

fn xi_shaped(l: u32, k: u32) -> Result<Vec<(Shape, Polynomial)>, ClosedFormError> {
    if k < 2 || !(2..=k).contains(&l) {
        return Err(ClosedFormError::BadIndex { l, k });
    }
    let mut out = Vec::with_capacity((k - l + 1) as usize);
    if 2 * l > k + 1 {
        let low = 2 * l - k - 1;
        out.push((Shape::Square, quadric(k, (l, l), (low, k + 1))));
        for i in 1..=k - l {
            out.push((Shape::LastTail, quadric(k, (l, l + i), (low + i, k + 1))));
        }
    } else {
        out.push((Shape::Square, quadric(k, (l, l), (1, 2 * l - 1))));
        let split = k + 2 - 2 * l;
        for i in 1..=k - l {
            if i <= split {
                out.push((Shape::FirstTail, quadric(k, (l, l + i), (1, 2 * l - 1 + i))));
            } else {
                // 2ℓ-k-1+i >= 2 here
                out.push((Shape::LastTail, quadric(k, (l, l + i), (i + 2 * l - k - 1, k + 1))));
            }
        }
    }
    Ok(out)
}

/// `ξ_ℓ` for `2 <= ℓ <= k`, in the ring `Q[x1..x_{k+1}]`. It has `k-ℓ+1`
/// members, the square `x_ℓ^2 - ...` first.
pub fn xi_family(l: u32, k: u32) -> Result<Vec<Polynomial>, ClosedFormError> {
    Ok(xi_shaped(l, k)?.into_iter().map(|(_, p)| p).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFamily {
    pub k: u32,
    pub xi: BTreeMap<u32, Vec<Polynomial>>,
    /// `ξ_2, ξ_3, ..., ξ_k` concatenated.
    pub flattened: Vec<Polynomial>,
}

impl GeneratorFamily {
    pub fn len(&self) -> usize {
        self.flattened.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flattened.is_empty()
    }
}

/// The union of `ξ_2, ..., ξ_k`: `k(k-1)/2` quadratic binomials.
///
/// # Panics
/// If `k < 2`.
pub fn generating_set(k: u32) -> GeneratorFamily {
    assert!(k >= 2, "k must be at least 2");
    let xi: BTreeMap<u32, Vec<Polynomial>> =
        (2..=k).map(|l| (l, xi_family(l, k).expect("index in range"))).collect();
    let flattened = xi.values().flatten().cloned().collect();
    GeneratorFamily { k, xi, flattened }
}

/// Index of a member that reduces to zero modulo the others, if any.
pub fn redundant_member(g: &[Polynomial], order: &MonomialOrder) -> Option<usize> {
    (0..g.len()).find(|&i| {
        let others: Vec<Polynomial> = g.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        reduce(&g[i], &others, order).is_zero()
    })
}

/// The five blocks used to show that the generators form a Gröbner basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GbPartition {
    /// Squares `x_ℓ^2 - x1 x_{2ℓ-1}` with `2ℓ <= k+1`.
    pub b1: Vec<Polynomial>,
    /// Products `x_ℓ x_{ℓ+i} - x1 x_{2ℓ-1+i}` with `2ℓ <= k+1`.
    pub b2: Vec<Polynomial>,
    /// Products ending in `x_{k+1}` with `2ℓ <= k+1`.
    pub b3: Vec<Polynomial>,
    /// Squares `x_ℓ^2 - x_{2ℓ-k-1} x_{k+1}` with `2ℓ > k+1`.
    pub b4: Vec<Polynomial>,
    /// Products with `2ℓ > k+1`.
    pub b5: Vec<Polynomial>,
}

impl GbPartition {
    pub fn parts(&self) -> [(&'static str, &[Polynomial]); 5] {
        [("B1", &self.b1), ("B2", &self.b2), ("B3", &self.b3), ("B4", &self.b4), ("B5", &self.b5)]
    }

    pub fn len(&self) -> usize {
        self.parts().iter().map(|(_, p)| p.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// # Panics
/// If `k < 2`.
pub fn gb_partition(k: u32) -> GbPartition {
    assert!(k >= 2, "k must be at least 2");
    let mut out = GbPartition::default();
    for l in 2..=k {
        let low = 2 * l <= k + 1;
        for (shape, p) in xi_shaped(l, k).expect("index in range") {
            let block = match (low, shape) {
                (true, Shape::Square) => &mut out.b1,
                (true, Shape::FirstTail) => &mut out.b2,
                (true, Shape::LastTail) => &mut out.b3,
                (false, Shape::Square) => &mut out.b4,
                (false, _) => &mut out.b5,
            };
            block.push(p);
        }
    }
    out
}

/// The extra binomial `y^μ - x^λ` of an extended family, in
/// `Q[x1..x_{k+1}, y]`.
pub fn extension_binomial(f: &SemigroupFamily) -> Result<(Vec<u64>, Polynomial), ClosedFormError> {
    let ext = f.extension().ok_or(ClosedFormError::MissingExtension)?;
    let target = ext.b.checked_scale(ext.mu).ok_or(crate::error::SemigroupError::Overflow)?;
    let lambda = boundary_representation(f.base_generators(), target)
        .expect("validated extensions have a boundary representation");
    let n = f.variable_count();
    let exponent = |c: u64| u32::try_from(c).expect("exponent fits u32");
    let mut tail: Vec<u32> = lambda.iter().map(|&c| exponent(c)).collect();
    tail.push(0);
    let mut head = vec![0u32; n];
    head[n - 1] = exponent(ext.mu);
    Ok((lambda, Polynomial::binomial(Monomial::new(head), Monomial::new(tail))))
}

/// Generators of the defining ideal in the family's ring: the binomials of
/// [`generating_set`], plus `y^μ - x^λ` for extended families.
pub fn defining_ideal_generators(f: &SemigroupFamily) -> Vec<Polynomial> {
    let g = generating_set(f.k()).flattened;
    match f.extension() {
        None => g,
        Some(_) => {
            let mut out: Vec<Polynomial> = g.iter().map(|p| p.extend(1)).collect();
            out.push(extension_binomial(f).expect("extension present").1);
            out
        }
    }
}
