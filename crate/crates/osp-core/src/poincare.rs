//! Poincaré polynomials of the grassmannians and full flag manifolds, by
//! summing q^dim over all Schubert cells. Closed product formulas are kept
//! separate so the enumeration can be checked against them.

use std::fmt;

use crate::echelon::{flag_cell_dimension, grassmannian_cell_dimension};
use crate::error::{Error, Result};
use crate::indices::admissible_indices;
use crate::weyl::{enumerate_weyl_even, enumerate_weyl_odd, Family};

/// A polynomial in q with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<u64>, // coeffs[d] is the coefficient of q^d; no trailing zeros
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// 1 + q + … + q^(m-1), the q-analogue of m.
    pub fn q_int(m: usize) -> Self {
        IntPolynomial {
            coeffs: vec![1; m],
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add_term(&mut self, deg: usize) {
        if self.coeffs.len() <= deg {
            self.coeffs.resize(deg + 1, 0);
        }
        self.coeffs[deg] += 1;
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Value at q = 1 (the number of cells, for a Poincaré polynomial).
    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let rev: Vec<u64> = self.coeffs.iter().rev().copied().collect();
        rev == self.coeffs
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, d) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (c, 1) => write!(f, "{c}q")?,
                (1, d) => write!(f, "q^{d}")?,
                (c, d) => write!(f, "{c}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// The spaces whose Schubert cells we enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Grassmannian { family: Family, k: usize },
    Flag { family: Family },
}

impl Space {
    pub fn family(&self) -> Family {
        match *self {
            Space::Grassmannian { family, .. } | Space::Flag { family } => family,
        }
    }

    /// Dimension of the whole space (equal to the largest cell dimension).
    pub fn dimension(&self) -> usize {
        let n = self.family().n();
        match *self {
            Space::Grassmannian {
                family: Family::Even { .. },
                k,
            } => k * (2 * n - k) - k * (k - 1) / 2,
            Space::Grassmannian {
                family: Family::Odd { .. },
                k,
            } => k * (2 * n + 1 - k) - k * (k - 1) / 2,
            Space::Flag {
                family: Family::Even { .. },
            } => n * n,
            Space::Flag {
                family: Family::Odd { .. },
            } => n * (n + 1),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let family = self.family();
        if family.n() < 1 {
            return Err(Error::InvalidParameter("need n ≥ 1".into()));
        }
        if let Space::Grassmannian { k, .. } = *self {
            if k < 1 || k > family.window_len() {
                return Err(Error::InvalidParameter(format!(
                    "subspace dimension {k} out of range for {family:?}"
                )));
            }
        }
        Ok(())
    }
}

/// Sum of q^(cell dimension) over all Schubert cells of the space.
pub fn poincare_polynomial(space: Space) -> Result<IntPolynomial> {
    space.validate()?;
    let mut p = IntPolynomial::zero();
    match space {
        Space::Grassmannian { family, k } => {
            for index in admissible_indices(family, k)? {
                p.add_term(grassmannian_cell_dimension(&index));
            }
        }
        Space::Flag { family } => {
            let windows = match family {
                Family::Even { n } => enumerate_weyl_even(n),
                Family::Odd { n } => enumerate_weyl_odd(n),
            };
            for w in windows {
                p.add_term(flag_cell_dimension(&w));
            }
        }
    }
    Ok(p)
}

/// The closed product for the odd flag manifold on 2n+1 letters:
/// (q^(n+1) − 1)(q^(2n) − 1)(q^(2n−2) − 1)…(q² − 1) / (q − 1)^(n+1),
/// expanded as [n+1]_q · [2n]_q · [2n−2]_q ⋯ [2]_q.
pub fn flag_odd_closed_product(n: usize) -> IntPolynomial {
    let mut p = IntPolynomial::q_int(n + 1);
    for i in 1..=n {
        p = p.mul(&IntPolynomial::q_int(2 * i));
    }
    p
}
