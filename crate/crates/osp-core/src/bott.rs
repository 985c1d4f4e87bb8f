//! Hook combinatorics for the exterior-square plethysm, the Bott recipe for
//! cohomology of irreducible homogeneous bundles on G(k,m), a Koszul
//! acyclicity check built from the two, Plücker section counts, and the
//! dimension/rank bookkeeping for Fano schemes of linear subspaces on odd
//! symplectic grassmannians.

use crate::error::{Error, Result};
use crate::indices::{binomial, count_admissible};
use crate::partitions::Partition;
use crate::rep::dim_gl_weight;
use crate::weyl::Family;

/// Frobenius coordinates of a partition: arm and leg lengths of the diagonal
/// hooks, both strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusHook {
    arms: Vec<u64>,
    legs: Vec<u64>,
}

impl FrobeniusHook {
    pub fn new(arms: Vec<u64>, legs: Vec<u64>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidPartition(format!(
                "hook ranks differ: {} arms, {} legs",
                arms.len(),
                legs.len()
            )));
        }
        for seq in [&arms, &legs] {
            if seq.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidPartition(format!(
                    "hook lengths must decrease strictly, got {seq:?}"
                )));
            }
        }
        Ok(FrobeniusHook { arms, legs })
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn arms(&self) -> &[u64] {
        &self.arms
    }

    pub fn legs(&self) -> &[u64] {
        &self.legs
    }

    /// Diagonal hooks of an existing partition.
    pub fn of(lambda: &Partition) -> Self {
        let conj = lambda.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        for i in 1..=lambda.len() {
            if lambda.part(i) < i as u64 {
                break;
            }
            arms.push(lambda.part(i) - i as u64);
            legs.push(conj.part(i) - i as u64);
        }
        FrobeniusHook { arms, legs }
    }

    /// The partition with these diagonal hooks: row i has arm_i cells right of
    /// the diagonal, column i has leg_i cells below it.
    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        if r == 0 {
            return Partition::empty();
        }
        let col_lengths: Vec<u64> = (0..r).map(|i| self.legs[i] + i as u64 + 1).collect();
        let total_rows = col_lengths[0] as usize;
        let mut parts = Vec::with_capacity(total_rows);
        for i in 1..=total_rows {
            if i <= r {
                parts.push(self.arms[i - 1] + i as u64);
            } else {
                parts.push(col_lengths.iter().filter(|&&c| c >= i as u64).count() as u64);
            }
        }
        Partition::new(parts).expect("hook rows are weakly decreasing by construction")
    }
}

/// The doubled shape λ⁻ with hooks (λ_i − 1 | λ_i), defined for strictly
/// decreasing λ. Its weight is 2|λ| and it has λ_1 + 1 rows.
pub fn lambda_minus(lambda: &Partition) -> Result<Partition> {
    if !lambda.has_distinct_parts() {
        return Err(Error::InvalidPartition(format!(
            "need strictly decreasing parts, got {lambda}"
        )));
    }
    let arms: Vec<u64> = lambda.parts().iter().map(|&p| p - 1).collect();
    let legs: Vec<u64> = lambda.parts().to_vec();
    let out = FrobeniusHook::new(arms, legs)?.to_partition();
    debug_assert_eq!(out.weight(), 2 * lambda.weight());
    Ok(out)
}

/// Shapes in the decomposition of Λ^j(Λ²V) for V of the given rank: one
/// summand S_{λ⁻}V per strictly decreasing partition λ of j, dropping shapes
/// with more than `rank` rows. Σ dim = C(C(rank,2), j).
pub fn plethysm_wedge2(j: u64, rank: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for strict in strict_partitions(j) {
        let shape = lambda_minus(&strict).expect("strict by construction");
        if shape.len() <= rank {
            out.push(shape);
        }
    }
    out
}

/// Strictly decreasing partitions of j, in decreasing lexicographic order.
fn strict_partitions(j: u64) -> Vec<Partition> {
    fn rec(remaining: u64, max_part: u64, stack: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(stack.clone()).unwrap());
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            stack.push(p);
            rec(remaining - p, p.saturating_sub(1), stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(j, j, &mut Vec::new(), &mut out);
    out
}

/// An integer weight on G(k,m) twists of S_•Q ⊗ S_•T: weakly decreasing on
/// the first m−k entries and on the last k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottWeight {
    entries: Vec<i64>,
    k: usize,
}

impl BottWeight {
    pub fn new(entries: Vec<i64>, k: usize) -> Result<Self> {
        let m = entries.len();
        if m == 0 || k > m {
            return Err(Error::InvalidParameter(format!(
                "need 0 ≤ k ≤ m with m ≥ 1, got k={k}, m={m}"
            )));
        }
        let (head, tail) = entries.split_at(m - k);
        for block in [head, tail] {
            if block.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "entries must decrease weakly on each block, got {entries:?} with k={k}"
                )));
            }
        }
        Ok(BottWeight { entries, k })
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

/// What Bott's algorithm returns for one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BottOutcome {
    /// η + ρ has a repeated entry: every cohomology group is zero.
    Vanishes,
    /// Cohomology concentrated in a single degree.
    Cohomology {
        degree: usize,
        weight: Vec<i64>,
        dim: u64,
    },
}

/// Run the Bott recipe: add ρ = (m, …, 1), vanish on repeats, otherwise sort
/// to dominant, count the inversions for the degree, and take the dimension
/// of the GL(m)-module with highest weight sort(η+ρ) − ρ.
pub fn bott_cohomology(eta: &BottWeight) -> Result<BottOutcome> {
    let m = eta.m();
    let v: Vec<i64> = eta
        .entries
        .iter()
        .enumerate()
        .map(|(i, &e)| e + (m - i) as i64)
        .collect();
    let mut sorted = v.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(BottOutcome::Vanishes);
    }
    let mut degree = 0;
    for i in 0..m {
        for jj in i + 1..m {
            if v[i] < v[jj] {
                degree += 1;
            }
        }
    }
    let weight: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (m - i) as i64)
        .collect();
    let dim = dim_gl_weight(&weight)?;
    Ok(BottOutcome::Cohomology {
        degree,
        weight,
        dim,
    })
}

/// One summand of one Koszul term, with its computed cohomology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulComponent {
    /// exterior power Λ^j(Λ²T) the summand comes from
    pub j: u64,
    /// Schur shape before the det T* twist
    pub shape: Partition,
    /// full weight fed to the Bott recipe
    pub eta: BottWeight,
    pub outcome: BottOutcome,
}

/// Cohomology bookkeeping for the Koszul resolution of the Plücker-sliced
/// grassmannian G(k, 2n+1): terms Λ^j(Λ²T) ⊗ det T* for j = 0 .. k(k−1)/2.
#[derive(Debug, Clone)]
pub struct KoszulReport {
    pub k: usize,
    pub n: usize,
    /// no component has cohomology in degree ≥ 1
    pub acyclic: bool,
    /// total H⁰ dimension per j
    pub h0_by_j: Vec<u64>,
    pub components: Vec<KoszulComponent>,
}

impl KoszulReport {
    /// Every j ≥ 2 component vanishes outright (via a repeat in η + ρ).
    pub fn higher_terms_all_vanish(&self) -> bool {
        self.components
            .iter()
            .filter(|c| c.j >= 2)
            .all(|c| c.outcome == BottOutcome::Vanishes)
    }
}

/// Decompose every Koszul term on G(k, 2n+1) and push each summand through
/// the Bott recipe. Caps: 2 ≤ k ≤ n ≤ 5.
pub fn koszul_acyclicity_check(k: usize, n: usize) -> Result<KoszulReport> {
    if !(2 <= k && k <= n) {
        return Err(Error::InvalidParameter(format!(
            "need 2 ≤ k ≤ n, got k={k}, n={n}"
        )));
    }
    if n > 5 {
        return Err(Error::RankCap(format!("Koszul check capped at n ≤ 5, got n={n}")));
    }
    let m = 2 * n + 1;
    let j_max = (k * (k - 1) / 2) as u64;
    let mut h0_by_j = vec![0u64; j_max as usize + 1];
    let mut components = Vec::new();
    let mut acyclic = true;
    for j in 0..=j_max {
        for shape in plethysm_wedge2(j, k) {
            // twist by det T*: subtract 1 on the tautological block
            let mut entries = vec![0i64; m];
            for i in 0..k {
                entries[m - k + i] = shape.part(i + 1) as i64 - 1;
            }
            let eta = BottWeight::new(entries, k)?;
            let outcome = bott_cohomology(&eta)?;
            if let BottOutcome::Cohomology { degree, dim, .. } = &outcome {
                if *degree == 0 {
                    h0_by_j[j as usize] += dim;
                } else {
                    acyclic = false;
                }
            }
            components.push(KoszulComponent {
                j,
                shape,
                eta,
                outcome,
            });
        }
    }
    Ok(KoszulReport {
        k,
        n,
        acyclic,
        h0_by_j,
        components,
    })
}

/// Sections of O(1) on the Plücker-embedded G_ω(k, 2n+1): the contraction
/// kernel Λ^⟨k⟩ C^{2n+1} has dimension C(2n+1,k) − C(2n+1,k−2).
pub fn plucker_h0(k: usize, n: usize) -> Result<u64> {
    if !(1 <= k && k <= n + 1) {
        return Err(Error::InvalidParameter(format!(
            "need 1 ≤ k ≤ n+1, got k={k}, n={n}"
        )));
    }
    let m = (2 * n + 1) as u64;
    let k = k as u64;
    Ok(binomial(m, k) - if k >= 2 { binomial(m, k - 2) } else { 0 })
}

/// Component count, dimensions and conormal-cohomology ranks for the Fano
/// scheme of (k−1)-planes on G_ω(k, 2n+1), 2 ≤ k ≤ n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoReport {
    pub k: usize,
    pub n: usize,
    pub components: u8,
    /// dimension of the component parametrizing pencils through a fixed point
    pub dim_f1: u64,
    /// dimension of the second component, when it exists
    pub dim_f2: Option<u64>,
    pub rank_h1: u64,
    pub rank_h2: Option<u64>,
    /// the rank formulas are pinned by direct computation only at (k,n) = (3,3)
    pub ranks_extrapolated: bool,
}

pub fn fano_report(k: usize, n: usize) -> Result<FanoReport> {
    if !(2 <= k && k <= n) {
        return Err(Error::InvalidParameter(format!(
            "need 2 ≤ k ≤ n, got k={k}, n={n}"
        )));
    }
    let (ki, ni) = (k as i64, n as i64);
    let two_components = 3 * ki >= 2 * (ni + 1);
    let dim_f1 = (ki - 1) * (2 * ni - ki + 2) - (ki - 1) * (ki - 2) / 2;
    let odd = Family::Odd { n };
    let even = Family::Even { n };
    let rank_h1 =
        count_admissible(odd, k - 1) + (2 * n as u64 - 2 * k as u64 + 3) * count_admissible(even, k - 2);
    let (dim_f2, rank_h2) = if two_components {
        let excess = 3 * ki - 2 * (ni + 1);
        let d2 = (ki + 1) * (2 * ni - ki) - (ki + 1) * ki / 2 + excess * (2 * (ni - ki) + 3);
        let r2 = binomial(k as u64 + 1, excess as u64) * count_admissible(odd, k + 1);
        (Some(d2 as u64), Some(r2))
    } else {
        (None, None)
    };
    Ok(FanoReport {
        k,
        n,
        components: if two_components { 2 } else { 1 },
        dim_f1: dim_f1 as u64,
        dim_f2,
        rank_h1,
        rank_h2,
        ranks_extrapolated: (k, n) != (3, 3),
    })
}
