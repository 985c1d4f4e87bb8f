//! The (possibly degenerate) symplectic form in the paired basis: for N = 2n
//! the standard nondegenerate form, for N = 2n+1 the same form extended by a
//! one-dimensional kernel at the letter 0.

use crate::echelon::family_for_letter_count;
use crate::error::Result;
use crate::exact::{scalar_from_int, ExactMatrix};
use crate::weyl::Family;

/// The bilinear form ω with ω(e_i, e_j) = ±δ_{j, ī}: +1 when i is the
/// unbarred letter of its pair, −1 when barred, and 0 on the unpaired odd
/// letter. Skew-symmetric of rank 2n in both parities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddSymplecticForm {
    family: Family,
}

impl OddSymplecticForm {
    /// The canonical form on a space of dimension N (letters of the even or
    /// odd family depending on parity).
    pub fn new(dimension: usize) -> Result<Self> {
        Ok(OddSymplecticForm {
            family: family_for_letter_count(dimension)?,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dimension(&self) -> usize {
        self.family.letter_count()
    }

    /// ω on basis vectors indexed by coordinates 0..N-1 (coordinate c is the
    /// letter c in the odd family, c+1 in the even family).
    pub fn omega(&self, a: usize, b: usize) -> i64 {
        let la = a + self.family.min_letter();
        let lb = b + self.family.min_letter();
        match self.family.opposed(la) {
            Some(op) if op == lb => {
                if self.family.is_barred(la) {
                    -1
                } else {
                    1
                }
            }
            _ => 0,
        }
    }

    /// The Gram matrix as an exact matrix.
    pub fn gram(&self) -> ExactMatrix {
        let n = self.dimension();
        let mut m = ExactMatrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                let v = self.omega(a, b);
                if v != 0 {
                    m.set(a, b, scalar_from_int(v));
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn gram_is_skew_with_rank_2n() {
        for dim in 2..=7usize {
            let form = OddSymplecticForm::new(dim).unwrap();
            let g = form.gram();
            for a in 0..dim {
                for b in 0..dim {
                    assert_eq!(form.omega(a, b), -form.omega(b, a));
                }
            }
            let n = dim / 2;
            let (rank, kernel) = g.kernel_and_rank();
            assert_eq!(rank, 2 * n);
            if dim % 2 == 1 {
                assert_eq!(kernel.len(), 1);
                assert!(!kernel[0][0].is_zero(), "kernel is the 0 coordinate");
                assert!(kernel[0][1..].iter().all(|x| x.is_zero()));
            } else {
                assert!(kernel.is_empty());
            }
        }
    }

    #[test]
    fn pairing_of_opposed_letters() {
        // even family, n=2: letters 1..=4, so coordinates 0 and 3 pair up
        let form = OddSymplecticForm::new(4).unwrap();
        assert_eq!(form.omega(0, 3), 1);
        assert_eq!(form.omega(3, 0), -1);
        assert_eq!(form.omega(0, 1), 0);
        // odd family, n=1: coordinate 0 is the kernel
        let odd = OddSymplecticForm::new(3).unwrap();
        assert_eq!(odd.omega(0, 1), 0);
        assert_eq!(odd.omega(0, 2), 0);
        assert_eq!(odd.omega(1, 2), 1);
        assert_eq!(odd.omega(2, 1), -1);
    }
}
