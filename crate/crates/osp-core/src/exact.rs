//! Exact rational linear algebra: dense matrices over arbitrary-precision
//! rationals, fraction-free Gaussian elimination for rank and kernel, and an
//! incremental row-echelon accumulator used to extract bases from spanning
//! sets.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Normalized arbitrary-precision rational (gcd 1, positive denominator is
/// maintained by the underlying type).
pub type ExactScalar = BigRational;

pub fn scalar_from_int(v: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(v))
}

/// Dense rectangular matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ExactScalar::one());
        }
        m
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidParameter("ragged rows".into()));
        }
        let mut m = ExactMatrix::zeros(height, width);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, scalar_from_int(v));
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[ExactScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::Mismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        if v.len() != self.cols {
            return Err(Error::Mismatch("vector length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Exact rank and kernel basis by fraction-free (Bareiss) elimination
    /// with the first nonzero entry in column order as pivot.
    ///
    /// Kernel vectors are normalized to primitive integer vectors whose first
    /// nonzero entry is positive, one per free column in column order.
    pub fn kernel_and_rank(&self) -> (usize, Vec<Vec<ExactScalar>>) {
        let (a, pivot_cols) = self.echelon();
        let rank = pivot_cols.len();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let mut kernel = Vec::with_capacity(self.cols - rank);
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![ExactScalar::zero(); self.cols];
            v[f] = ExactScalar::one();
            for i in (0..rank).rev() {
                let c = pivot_cols[i];
                let mut acc = ExactScalar::zero();
                for j in c + 1..self.cols {
                    if !v[j].is_zero() && !a[i][j].is_zero() {
                        acc += BigRational::from_integer(a[i][j].clone()) * &v[j];
                    }
                }
                v[c] = -acc / BigRational::from_integer(a[i][c].clone());
            }
            normalize_primitive(&mut v);
            kernel.push(v);
        }
        (rank, kernel)
    }

    /// Fraction-free row echelon form over the integers (after clearing row
    /// denominators): returns the reduced rows and the pivot columns.
    fn echelon(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let lcm = self
                    .row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                    debug_assert!((&num % &prev).is_zero(), "fraction-free step stays exact");
                    a[i][j] = num / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[r][col].clone();
            pivot_cols.push(col);
            r += 1;
        }
        a.truncate(r);
        (a, pivot_cols)
    }
}

/// Scale a rational vector to a primitive integer vector with positive
/// leading entry.
fn normalize_primitive(v: &mut [ExactScalar]) {
    let mut lcm = BigInt::one();
    for x in v.iter() {
        lcm = lcm.lcm(x.denom());
    }
    let mut gcd = BigInt::zero();
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map_or(BigInt::one(), |x| {
            if x.is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            }
        });
    let scale = gcd * sign;
    for (slot, x) in v.iter_mut().zip(ints) {
        *slot = BigRational::from_integer(x / &scale);
    }
}

/// Row-echelon accumulator: feed it vectors one at a time and it keeps a
/// fully reduced basis of their span. Pivots are the first nonzero column of
/// each row, normalized to 1.
#[derive(Debug, Clone)]
pub struct IncrementalEchelon {
    cols: usize,
    // sorted by pivot column; every row is zero at the other rows' pivots
    rows: Vec<(usize, Vec<ExactScalar>)>,
}

impl IncrementalEchelon {
    pub fn new(cols: usize) -> Self {
        IncrementalEchelon { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[ExactScalar]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Reduce `v` against the basis; if a nonzero remainder survives, absorb
    /// it (keeping the basis fully reduced) and return true.
    pub fn insert(&mut self, mut v: Vec<ExactScalar>) -> bool {
        assert_eq!(v.len(), self.cols);
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (slot, r) in v.iter_mut().zip(row).skip(*pivot) {
                if !r.is_zero() {
                    *slot -= &c * r;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pivot].clone();
        for x in v.iter_mut().skip(pivot) {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (slot, r) in row.iter_mut().zip(&v).skip(pivot) {
                if !r.is_zero() {
                    *slot -= &c * r;
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    pub fn insert_ints(&mut self, v: &[i64]) -> bool {
        self.insert(v.iter().map(|&x| scalar_from_int(x)).collect())
    }
}
