//! Brute-force oracle for representation dimensions: build S_λV inside the
//! tensor power V^⊗d from the Young symmetrizer of the canonical tableau,
//! intersect with the kernels of all ω-contractions, and count dimensions by
//! exact elimination. Deliberately small and unconditional: hard caps keep
//! everything desk-scale.

use itertools::Itertools;
use num::Zero;

use crate::error::{Error, Result};
use crate::exact::{scalar_from_int, ExactMatrix, ExactScalar, IncrementalEchelon};
use crate::form::OddSymplecticForm;
use crate::partitions::Partition;

const MAX_WEIGHT: u64 = 4;
const MAX_DIM: usize = 7;

fn check_caps(lambda: &Partition, n_letters: usize) -> Result<()> {
    if lambda.weight() > MAX_WEIGHT {
        return Err(Error::RankCap(format!(
            "oracle handles |λ| ≤ {MAX_WEIGHT}, got |λ| = {}",
            lambda.weight()
        )));
    }
    if n_letters < 2 || n_letters > MAX_DIM {
        return Err(Error::RankCap(format!(
            "oracle handles 2 ≤ N ≤ {MAX_DIM}, got N = {n_letters}"
        )));
    }
    Ok(())
}

/// The canonical (row-filling) tableau of shape λ: position t of the tensor
/// factor sits in cell t, numbered row by row.
struct Tableau {
    d: usize,
    /// positions of each row (contiguous ranges, in order)
    rows: Vec<Vec<usize>>,
    /// positions of each column
    cols: Vec<Vec<usize>>,
}

impl Tableau {
    fn new(lambda: &Partition) -> Self {
        let d = lambda.weight() as usize;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut offset = 0;
        for i in 1..=lambda.len() {
            let width = lambda.part(i) as usize;
            rows.push((offset..offset + width).collect());
            offset += width;
        }
        let width = lambda.part(1) as usize;
        let mut cols = vec![Vec::new(); width];
        for row in &rows {
            for (j, &pos) in row.iter().enumerate() {
                cols[j].push(pos);
            }
        }
        Tableau { d, rows, cols }
    }
}

/// All permutations fixing everything outside the blocks and stabilizing
/// each block, as position maps with (optionally) their signs.
fn block_group(blocks: &[Vec<usize>], d: usize, signed: bool) -> Vec<(Vec<usize>, i64)> {
    let mut out = vec![((0..d).collect::<Vec<usize>>(), 1i64)];
    for block in blocks {
        if block.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for perm in block.iter().copied().permutations(block.len()) {
            let sign = if signed { parity(block, &perm) } else { 1 };
            for (base, base_sign) in &out {
                let mut map = base.clone();
                for (t, &img) in perm.iter().enumerate() {
                    map[block[t]] = img;
                }
                next.push((map, base_sign * sign));
            }
        }
        out = next;
    }
    out
}

/// Sign of the permutation taking `base` to `perm`.
fn parity(base: &[usize], perm: &[usize]) -> i64 {
    let idx: Vec<usize> = perm
        .iter()
        .map(|x| base.iter().position(|b| b == x).unwrap())
        .collect();
    let mut inversions = 0;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Young symmetrizer of the canonical tableau as a list of terms
/// (inverse position map, sign): rows are symmetrized first, then columns
/// antisymmetrized.
struct Symmetrizer {
    d: usize,
    terms: Vec<(Vec<usize>, i64)>,
}

impl Symmetrizer {
    fn new(lambda: &Partition) -> Self {
        let tab = Tableau::new(lambda);
        let row_group = block_group(&tab.rows, tab.d, false);
        let col_group = block_group(&tab.cols, tab.d, true);
        let mut terms = Vec::with_capacity(row_group.len() * col_group.len());
        for (q, sign) in &col_group {
            for (p, _) in &row_group {
                // composite map is q ∘ p: row shuffle applied first
                let mut inv = vec![0usize; tab.d];
                for t in 0..tab.d {
                    inv[q[p[t]]] = t;
                }
                terms.push((inv, *sign));
            }
        }
        Symmetrizer { d: tab.d, terms }
    }

    /// Image of the basis tensor with letter tuple `index`, as integer
    /// coordinates in the lexicographic tensor basis.
    fn apply_to_basis(&self, index: &[usize], n_letters: usize) -> Vec<i64> {
        let mut out = vec![0i64; n_letters.pow(self.d as u32)];
        let mut moved = vec![0usize; self.d];
        for (inv, sign) in &self.terms {
            for s in 0..self.d {
                moved[s] = index[inv[s]];
            }
            out[encode(&moved, n_letters)] += sign;
        }
        out
    }

    /// Linear extension of `apply_to_basis` to integer vectors.
    #[cfg(test)]
    fn apply_to_vec(&self, v: &[i64], n_letters: usize) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for (idx, &coef) in v.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            let tuple = decode(idx, self.d, n_letters);
            for (inv, sign) in &self.terms {
                let moved: Vec<usize> = (0..self.d).map(|s| tuple[inv[s]]).collect();
                out[encode(&moved, n_letters)] += sign * coef;
            }
        }
        out
    }
}

fn encode(tuple: &[usize], n_letters: usize) -> usize {
    tuple.iter().fold(0, |acc, &t| acc * n_letters + t)
}

fn decode(mut idx: usize, d: usize, n_letters: usize) -> Vec<usize> {
    let mut tuple = vec![0usize; d];
    for s in (0..d).rev() {
        tuple[s] = idx % n_letters;
        idx /= n_letters;
    }
    tuple
}

/// Tuples that are weakly increasing inside each row of the tableau: one
/// representative per row-symmetrization orbit (the symmetrizer takes equal
/// values on an orbit, so these span the image).
fn row_sorted_tuples(lambda: &Partition, n_letters: usize) -> Vec<Vec<usize>> {
    let tab = Tableau::new(lambda);
    let mut row_start = vec![false; tab.d.max(1)];
    for row in &tab.rows {
        if let Some(&first) = row.first() {
            row_start[first] = true;
        }
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; tab.d];
    fn rec(
        pos: usize,
        d: usize,
        n_letters: usize,
        row_start: &[bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == d {
            out.push(current.clone());
            return;
        }
        let lo = if row_start[pos] { 0 } else { current[pos - 1] };
        for letter in lo..n_letters {
            current[pos] = letter;
            rec(pos + 1, d, n_letters, row_start, current, out);
        }
    }
    if tab.d == 0 {
        out.push(vec![]);
    } else {
        rec(0, tab.d, n_letters, &row_start, &mut current, &mut out);
    }
    out
}

fn schur_echelon(lambda: &Partition, n_letters: usize) -> Result<IncrementalEchelon> {
    check_caps(lambda, n_letters)?;
    let d = lambda.weight() as usize;
    let mut ech = IncrementalEchelon::new(n_letters.pow(d as u32));
    if d == 0 {
        ech.insert_ints(&[1]);
        return Ok(ech);
    }
    let sym = Symmetrizer::new(lambda);
    for tuple in row_sorted_tuples(lambda, n_letters) {
        let image = sym.apply_to_basis(&tuple, n_letters);
        if image.iter().any(|&x| x != 0) {
            ech.insert_ints(&image);
        }
    }
    Ok(ech)
}

/// A basis of S_λV ⊂ V^⊗d (V = C^N), as reduced echelon rows in the
/// lexicographic tensor basis. Requires |λ| ≤ 4 and N ≤ 7.
pub fn schur_subspace(lambda: &Partition, n_letters: usize) -> Result<Vec<Vec<ExactScalar>>> {
    Ok(schur_echelon(lambda, n_letters)?
        .basis_rows()
        .map(|r| r.to_vec())
        .collect())
}

/// The matrix of the contraction φ_pq: V^⊗d → V^⊗(d−2) pairing the p-th and
/// q-th factors with ω (1-based, p < q), columns in the lexicographic basis.
pub fn contraction_matrix(
    p: usize,
    q: usize,
    d: usize,
    form: &OddSymplecticForm,
) -> Result<ExactMatrix> {
    if p < 1 || q <= p || q > d {
        return Err(Error::InvalidParameter(format!(
            "need 1 ≤ p < q ≤ d, got p={p}, q={q}, d={d}"
        )));
    }
    let n = form.dimension();
    let mut m = ExactMatrix::zeros(n.pow((d - 2) as u32), n.pow(d as u32));
    for col in 0..m.cols() {
        let tuple = decode(col, d, n);
        let w = form.omega(tuple[p - 1], tuple[q - 1]);
        if w == 0 {
            continue;
        }
        let rest: Vec<usize> = tuple
            .iter()
            .enumerate()
            .filter(|(s, _)| *s != p - 1 && *s != q - 1)
            .map(|(_, &t)| t)
            .collect();
        m.set(encode(&rest, n), col, scalar_from_int(w));
    }
    Ok(m)
}

/// φ_pq applied to a single vector (avoids materializing the matrix).
fn contract_vec(
    v: &[ExactScalar],
    p: usize,
    q: usize,
    d: usize,
    form: &OddSymplecticForm,
) -> Vec<ExactScalar> {
    let n = form.dimension();
    let mut out = vec![ExactScalar::zero(); n.pow((d - 2) as u32)];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let tuple = decode(idx, d, n);
        let w = form.omega(tuple[p - 1], tuple[q - 1]);
        if w == 0 {
            continue;
        }
        let rest: Vec<usize> = tuple
            .iter()
            .enumerate()
            .filter(|(s, _)| *s != p - 1 && *s != q - 1)
            .map(|(_, &t)| t)
            .collect();
        out[encode(&rest, n)] += x * scalar_from_int(w);
    }
    out
}

/// dim(S_λV ∩ ⋂_{p<q} ker φ_pq) for V = C^N with its canonical form:
/// the dimension of the trace-free part of the Schur power.
pub fn trace_free_schur_dim(lambda: &Partition, n_letters: usize) -> Result<usize> {
    let ech = schur_echelon(lambda, n_letters)?;
    let d = lambda.weight() as usize;
    if d < 2 {
        return Ok(ech.rank());
    }
    let form = OddSymplecticForm::new(n_letters)?;
    let pairs: Vec<(usize, usize)> = (1..=d)
        .flat_map(|p| (p + 1..=d).map(move |q| (p, q)))
        .collect();
    let block = n_letters.pow((d - 2) as u32);
    let mut image = IncrementalEchelon::new(pairs.len() * block);
    for row in ech.basis_rows() {
        let mut stacked = Vec::with_capacity(pairs.len() * block);
        for &(p, q) in &pairs {
            stacked.extend(contract_vec(row, p, q, d, &form));
        }
        image.insert(stacked);
    }
    Ok(ech.rank() - image.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{dim_gl, dim_odd, dim_sp};

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn schur_dimensions_match_weyl_formula() {
        for (lam, n, expect) in [
            ("1,1", 3, 3),
            ("2", 3, 6),
            ("2,1", 3, 8),
            ("1,1,1", 3, 1),
            ("2,2", 3, 6),
            ("1,1,1,1", 3, 0),
        ] {
            let lam = p(lam);
            let basis = schur_subspace(&lam, n).unwrap();
            assert_eq!(basis.len(), expect, "λ={lam}, N={n}");
            assert_eq!(dim_gl(&lam, n).unwrap(), expect as u64, "λ={lam}, N={n}");
        }
    }

    #[test]
    fn contraction_examples() {
        let form = OddSymplecticForm::new(3).unwrap();
        let phi = contraction_matrix(1, 2, 2, &form).unwrap();
        assert_eq!((phi.rows(), phi.cols()), (1, 9));
        assert_eq!(phi.rank(), 1);
        // e_1 ⊗ e_1̄ pairs to 1 (letters 1 and 2 of the odd family)
        let mut v = vec![ExactScalar::zero(); 9];
        v[1 * 3 + 2] = scalar_from_int(1);
        assert_eq!(phi.mul_vec(&v).unwrap()[0], scalar_from_int(1));
        // a symmetric tensor contracts to zero
        let mut sym = vec![ExactScalar::zero(); 9];
        sym[1 * 3 + 2] = scalar_from_int(1);
        sym[2 * 3 + 1] = scalar_from_int(1);
        assert!(phi.mul_vec(&sym).unwrap()[0].is_zero());
    }

    #[test]
    fn contraction_bounds_checked() {
        let form = OddSymplecticForm::new(3).unwrap();
        assert!(contraction_matrix(2, 2, 3, &form).is_err());
        assert!(contraction_matrix(1, 4, 3, &form).is_err());
    }

    #[test]
    fn trace_free_examples() {
        assert_eq!(trace_free_schur_dim(&p("1,1"), 3).unwrap(), 2);
        assert_eq!(trace_free_schur_dim(&p("2"), 3).unwrap(), 6);
        assert_eq!(trace_free_schur_dim(&p("2,1,1"), 3).unwrap(), 0);
    }

    #[test]
    fn trace_free_agrees_with_branching_dimension() {
        // odd case: N = 3 across all |λ| ≤ 3
        for lam in ["1", "2", "1,1", "3", "2,1", "1,1,1"] {
            let lam = p(lam);
            assert_eq!(
                trace_free_schur_dim(&lam, 3).unwrap() as u64,
                dim_odd(&lam, 1).unwrap(),
                "λ={lam}"
            );
        }
        // even sanity: N = 4
        for lam in ["1", "2", "1,1", "2,1"] {
            let lam = p(lam);
            assert_eq!(
                trace_free_schur_dim(&lam, 4).unwrap() as u64,
                dim_sp(&lam, 2).unwrap(),
                "λ={lam}"
            );
        }
    }

    #[test]
    fn symmetrizer_is_idempotent_up_to_hook_scalar() {
        for (lam, n_letters) in [("2,1", 3), ("2", 3), ("1,1", 3), ("2,2", 3)] {
            let lam = p(lam);
            let scalar = hook_product(&lam);
            let sym = Symmetrizer::new(&lam);
            let tuples = row_sorted_tuples(&lam, n_letters);
            let mut checked = 0;
            for tuple in tuples.iter().take(6) {
                let once = sym.apply_to_basis(tuple, n_letters);
                if once.iter().all(|&x| x == 0) {
                    continue;
                }
                let twice = sym.apply_to_vec(&once, n_letters);
                let scaled: Vec<i64> = once.iter().map(|&x| x * scalar).collect();
                assert_eq!(twice, scaled, "λ={lam}, tuple={tuple:?}");
                checked += 1;
            }
            assert!(checked > 0, "no nonzero images sampled for λ={lam}");
        }
    }

    /// d!/f^λ = product of the hook lengths.
    fn hook_product(lambda: &Partition) -> i64 {
        let conj = lambda.conjugate();
        let mut prod = 1i64;
        for i in 1..=lambda.len() {
            for j in 1..=lambda.part(i) {
                let arm = lambda.part(i) - j;
                let leg = conj.part(j as usize) - i as u64;
                prod *= (arm + leg + 1) as i64;
            }
        }
        prod
    }

    #[test]
    fn caps_are_enforced() {
        assert!(schur_subspace(&p("3,2"), 3).is_err());
        assert!(schur_subspace(&p("1"), 8).is_err());
        assert!(trace_free_schur_dim(&p("1"), 1).is_err());
    }

    #[test]
    fn empty_partition_is_the_trivial_module() {
        assert_eq!(schur_subspace(&Partition::empty(), 3).unwrap().len(), 1);
        assert_eq!(trace_free_schur_dim(&Partition::empty(), 5).unwrap(), 1);
    }
}
