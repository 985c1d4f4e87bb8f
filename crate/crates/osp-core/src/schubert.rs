//! Schubert divisors, the hyperplane-section index in the ambient even
//! grassmannian, closure containment, and the incidence conditions cutting
//! out a cell or variety.

use crate::echelon::grassmannian_cell_dimension;
use crate::error::{Error, Result};
use crate::indices::{admissible_indices, AdmissibleIndex};
use crate::poincare::Space;
use crate::weyl::{Family, Letter, RankTable, SignedPermutation};

/// The unique codimension-one Schubert cell of the odd grassmannian of
/// k-spaces in 2n+1 letters.
///
/// For k ≤ n its index is the bars of {k+1, k−1, k−2, …, 1}; for k = n+1 it
/// is 0 together with n and the bars of {n−1, …, 1}.
pub fn schubert_divisor(k: usize, n: usize) -> Result<AdmissibleIndex> {
    let family = Family::Odd { n };
    if n < 1 || k < 1 || k > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "no grassmannian of {k}-spaces on 2·{n}+1 letters"
        )));
    }
    let bar = |m: usize| 2 * n + 1 - m;
    let mut letters: Vec<Letter> = if k <= n {
        let mut l = vec![bar(k + 1)];
        l.extend((1..k).map(bar));
        l
    } else {
        let mut l = vec![0, n];
        l.extend((1..n).map(bar));
        l
    };
    letters.sort_unstable();
    AdmissibleIndex::new(family, letters)
}

/// The index μ of the hyperplane-section Schubert variety in the ambient
/// even grassmannian of k-spaces in 2n+2 letters.
///
/// Letters here are 0-based, `0..=2n+1`, with pairing `i ↔ 2n+1−i` (the only
/// place this ambient convention appears): μ = (k̄, …, 1̄) for k ≤ n and
/// (0, n̄, …, 1̄) for k = n+1. The indices ≤ μ are exactly those avoiding the
/// letter 2n+1, i.e. the admissible indices of the odd family.
pub fn ambient_hyperplane_index(k: usize, n: usize) -> Result<Vec<Letter>> {
    if n < 1 || k < 1 || k > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "hyperplane index needs 1 ≤ k ≤ n+1, got k={k}, n={n}"
        )));
    }
    let bar = |m: usize| 2 * n + 1 - m;
    let mut letters: Vec<Letter> = if k <= n {
        (1..=k).map(bar).collect()
    } else {
        let mut l = vec![0];
        l.extend((1..=n).map(bar));
        l
    };
    letters.sort_unstable();
    Ok(letters)
}

/// Is the cell of `inner` contained in the closure of the cell of `outer`?
pub fn grassmannian_variety_contains(outer: &AdmissibleIndex, inner: &AdmissibleIndex) -> Result<bool> {
    inner.leq(outer)
}

/// Flag version of the closure containment test.
pub fn flag_variety_contains(outer: &SignedPermutation, inner: &SignedPermutation) -> Result<bool> {
    inner.bruhat_leq(outer)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Geq,
}

/// One incidence condition `dim(V_subspace ∩ E_level) (= | ≥) bound`, where
/// `E_level` is the span of the basis vectors up to the given letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceCondition {
    pub subspace: usize,
    pub level: Letter,
    pub relation: Relation,
    pub bound: usize,
}

impl IncidenceCondition {
    pub fn render(&self) -> String {
        let rel = match self.relation {
            Relation::Eq => "=",
            Relation::Geq => ">=",
        };
        format!(
            "dim(V_{} /\\ E_{}) {} {}",
            self.subspace, self.level, rel, self.bound
        )
    }
}

/// The incidence conditions of a grassmannian cell (equalities over every
/// flag level) or of its closure (inequalities at the jump levels only).
pub fn grassmannian_incidence_conditions(
    index: &AdmissibleIndex,
    closure: bool,
) -> Vec<IncidenceCondition> {
    let family = index.family();
    let k = index.k();
    if closure {
        index
            .letters()
            .iter()
            .enumerate()
            .map(|(a, &l)| IncidenceCondition {
                subspace: k,
                level: l,
                relation: Relation::Geq,
                bound: a + 1,
            })
            .collect()
    } else {
        family
            .letters()
            .map(|j| IncidenceCondition {
                subspace: k,
                level: j,
                relation: Relation::Eq,
                bound: index.letters().iter().filter(|&&l| l <= j).count(),
            })
            .collect()
    }
}

/// The incidence conditions of a flag cell or its closure, one per entry of
/// the window's rank table.
pub fn flag_incidence_conditions(w: &SignedPermutation, closure: bool) -> Vec<IncidenceCondition> {
    let family = w.family();
    let table = RankTable::new(w);
    let relation = if closure { Relation::Geq } else { Relation::Eq };
    let first = family.min_letter();
    let mut out = Vec::new();
    for (row, values) in table.values().iter().enumerate() {
        for (col, &r) in values.iter().enumerate() {
            out.push(IncidenceCondition {
                subspace: first + row,
                level: first + col,
                relation,
                bound: r,
            });
        }
    }
    out
}

/// All cells of codimension one in a grassmannian, by enumeration. Used to
/// check that the odd family has exactly one (its Schubert divisor).
pub fn codimension_one_cells(family: Family, k: usize) -> Result<Vec<AdmissibleIndex>> {
    let space = Space::Grassmannian { family, k };
    space.validate()?;
    let top = space.dimension();
    Ok(admissible_indices(family, k)?
        .into_iter()
        .filter(|i| grassmannian_cell_dimension(i) + 1 == top)
        .collect())
}
