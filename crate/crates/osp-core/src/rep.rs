//! Dimension formulas: Weyl dimension formulas for GL and Sp, the odd
//! symplectic dimension via the interleaving branching rule, filtration
//! factors, section dimensions of line bundles, and the exact Lie algebra
//! dimension check.

use num::{BigInt, BigRational, One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::{scalar_from_int, ExactMatrix};
use crate::form::OddSymplecticForm;
use crate::partitions::{interleavings as interleave, Partition};

fn big_ratio_to_u64(x: &BigRational, what: &str) -> Result<u64> {
    if !x.denom().is_one() {
        return Err(Error::Internal(format!(
            "{what} evaluated to the non-integer {x}"
        )));
    }
    if x.numer().is_negative() {
        return Err(Error::Internal(format!("{what} evaluated to negative {x}")));
    }
    x.numer()
        .to_u64()
        .ok_or(Error::DimensionOverflow)
}

/// Weyl dimension formula for GL_m at a weakly decreasing integer weight:
/// Π_{i<j} (w_i − w_j + j − i)/(j − i).
pub fn dim_gl_weight(weight: &[i64]) -> Result<u64> {
    if weight.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(format!(
            "weight {weight:?} is not weakly decreasing"
        )));
    }
    let m = weight.len();
    let mut acc = BigRational::one();
    for i in 0..m {
        for j in i + 1..m {
            let num = weight[i] - weight[j] + (j - i) as i64;
            acc *= BigRational::new(BigInt::from(num), BigInt::from((j - i) as i64));
        }
    }
    big_ratio_to_u64(&acc, "dim_gl")
}

/// dim S_λ(C^m); zero when the partition is longer than m.
pub fn dim_gl(lambda: &Partition, m: usize) -> Result<u64> {
    if lambda.len() > m {
        return Ok(0);
    }
    let weight: Vec<i64> = (1..=m).map(|i| lambda.part(i) as i64).collect();
    dim_gl_weight(&weight)
}

/// Weyl dimension formula for Sp_2n: with l_i = ν_i + n − i + 1 and
/// m_i = n − i + 1, Π_i l_i/m_i · Π_{i<j} (l_i² − l_j²)/(m_i² − m_j²).
/// Zero when the partition is longer than n.
pub fn dim_sp(nu: &Partition, n: usize) -> Result<u64> {
    if nu.len() > n {
        return Ok(0);
    }
    let l: Vec<i64> = (1..=n)
        .map(|i| nu.part(i) as i64 + (n - i + 1) as i64)
        .collect();
    let m: Vec<i64> = (1..=n).map(|i| (n - i + 1) as i64).collect();
    let mut acc = BigRational::one();
    for i in 0..n {
        acc *= BigRational::new(BigInt::from(l[i]), BigInt::from(m[i]));
        for j in i + 1..n {
            acc *= BigRational::new(
                BigInt::from(l[i] * l[i] - l[j] * l[j]),
                BigInt::from(m[i] * m[i] - m[j] * m[j]),
            );
        }
    }
    big_ratio_to_u64(&acc, "dim_sp")
}

/// The branching interleavings of λ on n slots (all ν with ℓ(ν) ≤ n and
/// λ_1 ≥ ν_1 ≥ λ_2 ≥ … ≥ ν_n ≥ λ_{n+1}), decreasing lexicographically.
pub fn interleavings(lambda: &Partition, n: usize) -> Result<Vec<Partition>> {
    interleave(lambda, n)
}

/// dim S^⟨λ⟩(C^{2n+1}): zero when ℓ(λ) > n+1, otherwise the sum of Sp_2n
/// dimensions over the interleavings of λ.
pub fn dim_odd(lambda: &Partition, n: usize) -> Result<u64> {
    if lambda.len() > n + 1 {
        return Ok(0);
    }
    let mut total: u64 = 0;
    for nu in interleave(lambda, n)? {
        total = total
            .checked_add(dim_sp(&nu, n)?)
            .ok_or(Error::DimensionOverflow)?;
    }
    Ok(total)
}

/// One factor of the filtration of the Sp_2n+2-module with highest weight λ
/// restricted to the odd group: the partition μ and the weight shift
/// −(|λ| − |μ|) it carries on the last coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShtepinFactor {
    pub factor: Partition,
    pub shift: i64,
}

/// All filtration factors: μ with λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ λ_{n+1} ≥ μ_{n+1},
/// in decreasing lexicographic order.
pub fn shtepin_factors(lambda: &Partition, n: usize) -> Result<Vec<ShtepinFactor>> {
    let weight = lambda.weight() as i64;
    Ok(interleave(lambda, n + 1)?
        .into_iter()
        .map(|factor| {
            let shift = factor.weight() as i64 - weight;
            ShtepinFactor { factor, shift }
        })
        .collect())
}

/// Does the filtration account for the whole module:
/// Σ_μ dim S^⟨μ⟩(C^{2n+1}) = dim S_λ^Sp(C^{2n+2})?
pub fn filtration_dimension_check(lambda: &Partition, n: usize) -> Result<bool> {
    let mut total: u64 = 0;
    for f in shtepin_factors(lambda, n)? {
        total = total
            .checked_add(dim_odd(&f.factor, n)?)
            .ok_or(Error::DimensionOverflow)?;
    }
    Ok(total == dim_sp(lambda, n + 1)?)
}

/// dim H⁰ of the line bundle L_λ on the full flag manifold of C^N:
/// the odd dimension for N = 2n+1, the classical Sp_{2n+2} dimension for
/// N = 2n+2.
pub fn h0_line_bundle(lambda: &Partition, ambient_dim: usize) -> Result<u64> {
    if ambient_dim < 3 {
        return Err(Error::InvalidParameter(format!(
            "ambient dimension {ambient_dim} too small"
        )));
    }
    let n = (ambient_dim - 1) / 2;
    if lambda.len() > n + 1 {
        return Err(Error::InvalidPartition(format!(
            "λ = {lambda} has more parts than the flag has steps ({})",
            n + 1
        )));
    }
    if ambient_dim % 2 == 1 {
        dim_odd(lambda, n)
    } else {
        dim_sp(lambda, n + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LieDimensions {
    /// dim {X : ᵗXJ + JX = 0} for the nondegenerate form on C^2n.
    pub even: usize,
    /// Same system for the degenerate form on C^2n+1.
    pub odd: usize,
    /// Order of the center of the even group (reported, not computed).
    pub center_order: u32,
}

/// dim of the matrices preserving the form: the kernel of X ↦ ᵗXJ + JX.
fn isotropy_algebra_dimension(form: &OddSymplecticForm) -> usize {
    let n = form.dimension();
    let mut a = ExactMatrix::zeros(n * n, n * n);
    for row_a in 0..n {
        for row_b in 0..n {
            let r = row_a * n + row_b;
            for k in 0..n {
                let t1 = form.omega(k, row_b);
                if t1 != 0 {
                    let c = k * n + row_a;
                    let v = a.get(r, c) + scalar_from_int(t1);
                    a.set(r, c, v);
                }
                let t2 = form.omega(row_a, k);
                if t2 != 0 {
                    let c = k * n + row_b;
                    let v = a.get(r, c) + scalar_from_int(t2);
                    a.set(r, c, v);
                }
            }
        }
    }
    n * n - a.rank()
}

/// Solve the invariance systems for both parities exactly and check the
/// closed dimension formulas n(2n+1) and (n+1)(2n+1).
pub fn lie_dimension_check(n: usize) -> Result<LieDimensions> {
    if n < 1 || n > 4 {
        return Err(Error::RankCap(format!(
            "Lie dimension check supports 1 ≤ n ≤ 4, got {n}"
        )));
    }
    let even = isotropy_algebra_dimension(&OddSymplecticForm::new(2 * n)?);
    let odd = isotropy_algebra_dimension(&OddSymplecticForm::new(2 * n + 1)?);
    if even != n * (2 * n + 1) {
        return Err(Error::Internal(format!(
            "even symplectic algebra dimension {even} ≠ n(2n+1)"
        )));
    }
    if odd != (n + 1) * (2 * n + 1) {
        return Err(Error::Internal(format!(
            "odd symplectic algebra dimension {odd} ≠ (n+1)(2n+1)"
        )));
    }
    Ok(LieDimensions {
        even,
        odd,
        center_order: 2,
    })
}
