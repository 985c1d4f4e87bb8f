//! Row-echelon shape of a Schubert cell: which matrix entries are pinned to
//! 1 or 0, which are determined by the isotropy condition, and which stay
//! free. The number of free entries is the cell dimension.

use std::fmt;

use crate::error::{Error, Result};
use crate::indices::AdmissibleIndex;
use crate::weyl::{Family, Letter, SignedPermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryState {
    One,
    Zero,
    Determined,
    Free,
}

/// The state grid of a cell's echelon matrix.
///
/// Rows follow the pivot list; columns are the family's letters in natural
/// order. The states are a function of the pivot list alone:
///
/// * the pivot entry of each row is `One`;
/// * entries right of a pivot, and entries below a pivot in its column, are
///   `Zero`;
/// * entries below row `α` in the column opposed to `α`'s pivot are
///   `Determined` (the isotropy condition fixes them in terms of earlier
///   free entries) unless a zero rule already applies;
/// * everything else is `Free`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonPattern {
    family: Family,
    pivots: Vec<Letter>,
    grid: Vec<EntryState>, // row-major, rows = pivots.len(), cols = letter count
}

impl EchelonPattern {
    /// Build the pattern for a pivot list over the ambient with `N` letters
    /// (`N = 2n` even family, `N = 2n+1` odd family). Pivot order is row
    /// order and need not be sorted.
    pub fn new(pivots: Vec<Letter>, ambient_letters: usize) -> Result<Self> {
        let family = family_for_letter_count(ambient_letters)?;
        let cols = family.letter_count();
        for (i, &p) in pivots.iter().enumerate() {
            if !family.contains(p) {
                return Err(Error::InvalidIndex(format!(
                    "pivot letter {p} out of range for {family:?}"
                )));
            }
            for &q in &pivots[..i] {
                if q == p {
                    return Err(Error::InvalidIndex(format!("duplicate pivot {p}")));
                }
                if family.opposed(p) == Some(q) {
                    return Err(Error::InvalidIndex(format!(
                        "pivots {q} and {p} are opposed"
                    )));
                }
            }
        }
        let rows = pivots.len();
        let col_of = |l: Letter| l - family.min_letter();
        let mut grid = vec![EntryState::Free; rows * cols];
        // Assign lowest precedence first so later writes win:
        // determined < zero (either rule) < one.
        for (alpha, &p) in pivots.iter().enumerate() {
            if let Some(opp) = family.opposed(p) {
                for row in alpha + 1..rows {
                    grid[row * cols + col_of(opp)] = EntryState::Determined;
                }
            }
        }
        for (alpha, &p) in pivots.iter().enumerate() {
            for l in p + 1..=family.max_letter() {
                grid[alpha * cols + col_of(l)] = EntryState::Zero;
            }
            for row in alpha + 1..rows {
                grid[row * cols + col_of(p)] = EntryState::Zero;
            }
        }
        for (alpha, &p) in pivots.iter().enumerate() {
            grid[alpha * cols + col_of(p)] = EntryState::One;
        }
        Ok(EchelonPattern {
            family,
            pivots,
            grid,
        })
    }

    /// Pattern of a grassmannian cell labeled by an admissible index.
    pub fn for_index(index: &AdmissibleIndex) -> Self {
        EchelonPattern::new(index.letters().to_vec(), index.family().letter_count())
            .expect("admissible indices are valid pivot lists")
    }

    /// Pattern of a full-flag cell: pivots are the window letters in order.
    pub fn for_window(w: &SignedPermutation) -> Self {
        EchelonPattern::new(w.window().to_vec(), w.family().letter_count())
            .expect("windows are valid pivot lists")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rows(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.family.letter_count()
    }

    pub fn pivots(&self) -> &[Letter] {
        &self.pivots
    }

    pub fn state(&self, row: usize, col: usize) -> EntryState {
        self.grid[row * self.cols() + col]
    }

    pub fn count(&self, s: EntryState) -> usize {
        self.grid.iter().filter(|&&x| x == s).count()
    }

    /// Cell dimension: the number of free entries.
    pub fn dimension(&self) -> usize {
        self.count(EntryState::Free)
    }
}

impl fmt::Display for EchelonPattern {
    /// One row per line; `1` pivot, `0` zero, `d` determined, `*` free.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..self.rows() {
            for col in 0..self.cols() {
                let c = match self.state(row, col) {
                    EntryState::One => '1',
                    EntryState::Zero => '0',
                    EntryState::Determined => 'd',
                    EntryState::Free => '*',
                };
                f.write_fmt(format_args!("{c}"))?;
                if col + 1 < self.cols() {
                    f.write_str(" ")?;
                }
            }
            if row + 1 < self.rows() {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Map a letter count to its family: 2n → even, 2n+1 → odd.
pub fn family_for_letter_count(n_letters: usize) -> Result<Family> {
    if n_letters < 2 {
        return Err(Error::InvalidParameter(format!(
            "ambient needs at least 2 letters, got {n_letters}"
        )));
    }
    Ok(if n_letters % 2 == 0 {
        Family::Even { n: n_letters / 2 }
    } else {
        Family::Odd {
            n: (n_letters - 1) / 2,
        }
    })
}

/// Dimension of the grassmannian cell labeled by an admissible index.
pub fn grassmannian_cell_dimension(index: &AdmissibleIndex) -> usize {
    EchelonPattern::for_index(index).dimension()
}

/// Dimension of the full-flag cell labeled by a window.
pub fn flag_cell_dimension(w: &SignedPermutation) -> usize {
    EchelonPattern::for_window(w).dimension()
}
