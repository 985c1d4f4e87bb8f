//! Acceptance gate: every headline invariant of the library at its full
//! stated range, exact equality throughout, one printed line per check.
//! Time-boxed checks assert their own wall-clock budgets.

use std::collections::HashMap;
use std::time::Instant;

use osp_core::bott::{fano_report, koszul_acyclicity_check, plethysm_wedge2};
use osp_core::echelon::{flag_cell_dimension, grassmannian_cell_dimension};
use osp_core::indices::{admissible_indices, count_admissible};
use osp_core::oracle::trace_free_schur_dim;
use osp_core::orbits::{flag_cell_orbit, flag_orbits, grassmannian_cell_orbit, OrbitId};
use osp_core::poincare::{flag_odd_closed_product, poincare_polynomial};
use osp_core::rep::{
    dim_gl, dim_odd, dim_sp, filtration_dimension_check, h0_line_bundle, lie_dimension_check,
};
use osp_core::weyl::{enumerate_weyl_even, enumerate_weyl_odd, odd_top_element, BruhatChainOracle};
use osp_core::{AdmissibleIndex, Family, Partition, SignedPermutation, Space};

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Partitions of every weight ≤ w, the empty one included.
fn partitions_up_to(w: u64) -> Vec<Partition> {
    fn rec(remaining: u64, max_part: u64, stack: &mut Vec<u64>, out: &mut Vec<Partition>) {
        out.push(Partition::new(stack.clone()).unwrap());
        for p in (1..=remaining.min(max_part)).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, &mut Vec::new(), &mut out);
    out
}

#[test]
fn c01_weyl_set_counts() {
    let start = Instant::now();
    for n in 1..=4usize {
        assert_eq!(
            enumerate_weyl_even(n).len() as u64,
            (1 << n) * factorial(n as u64),
            "even count at n={n}"
        );
        assert_eq!(
            enumerate_weyl_odd(n).len() as u64,
            (1 << n) * factorial(n as u64 + 1),
            "odd count at n={n}"
        );
    }
    // the two descriptions of the odd index set inside W(C_{n+1}):
    // below the shifted top element ⇔ window avoids the barred kernel letter
    for n in 1..=3usize {
        let ambient = Family::Even { n: n + 1 };
        let shifted: Vec<usize> = odd_top_element(n).window().iter().map(|l| l + 1).collect();
        let top = SignedPermutation::new(ambient, shifted).unwrap();
        let barred_kernel = 2 * n + 2;
        let mut members = 0u64;
        for v in enumerate_weyl_even(n + 1) {
            let in_interval = v.bruhat_leq(&top).unwrap();
            assert_eq!(
                in_interval,
                !v.window().contains(&barred_kernel),
                "characterizations disagree at n={n} for {v}"
            );
            members += in_interval as u64;
        }
        assert_eq!(members, (1 << n) * factorial(n as u64 + 1), "interval size at n={n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "budget exceeded: {elapsed:?}");
    println!("criterion 01: PASS — group orders to n=4 and interval/letter characterizations to n=3 ({elapsed:?})");
}

#[test]
fn c02_longest_element_lengths() {
    for n in 1..=4usize {
        let max = enumerate_weyl_even(n).iter().map(|w| w.length()).max().unwrap();
        assert_eq!(max, n * n, "even top length at n={n}");
    }
    for n in 1..=3usize {
        let max = enumerate_weyl_odd(n).iter().map(|w| w.length()).max().unwrap();
        assert_eq!(max, n * (n + 1), "odd top length at n={n}");
    }
    println!("criterion 02: PASS — longest lengths n² (n ≤ 4) and n(n+1) (n ≤ 3)");
}

#[test]
fn c03_flag_poincare_product() {
    let start = Instant::now();
    for n in 1..=3usize {
        let enumerated = poincare_polynomial(Space::Flag {
            family: Family::Odd { n },
        })
        .unwrap();
        assert_eq!(enumerated, flag_odd_closed_product(n), "product mismatch at n={n}");
    }
    let smallest = poincare_polynomial(Space::Flag {
        family: Family::Odd { n: 1 },
    })
    .unwrap();
    assert_eq!(smallest.coeffs(), [1, 2, 1]);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "budget exceeded: {elapsed:?}");
    println!("criterion 03: PASS — cell counts match the factored polynomial for n ≤ 3 ({elapsed:?})");
}

#[test]
fn c04_bruhat_chain_equivalence() {
    for (n, expect_pairs) in [(2usize, 64u64), (3, 2304)] {
        let elements = enumerate_weyl_even(n);
        let oracle = BruhatChainOracle::new(Family::Even { n }).unwrap();
        let mut pairs = 0u64;
        for a in &elements {
            for b in &elements {
                assert_eq!(
                    a.bruhat_leq(b).unwrap(),
                    oracle.leq(a, b).unwrap(),
                    "orders disagree on {a} vs {b} at n={n}"
                );
                pairs += 1;
            }
        }
        assert_eq!(pairs, expect_pairs);
    }
    println!("criterion 04: PASS — prefix criterion ≡ reflection chains on 64 + 2304 pairs");
}

#[test]
fn c05_echelon_cell_dimensions() {
    let even = AdmissibleIndex::new(Family::Even { n: 4 }, vec![4, 6, 8]).unwrap();
    assert_eq!(grassmannian_cell_dimension(&even), 9);
    let odd = AdmissibleIndex::new(Family::Odd { n: 4 }, vec![4, 6, 8]).unwrap();
    assert_eq!(grassmannian_cell_dimension(&odd), 12);
    for n in 1..=3usize {
        for w in enumerate_weyl_even(n) {
            assert_eq!(flag_cell_dimension(&w), w.length(), "even flag cell {w}");
        }
    }
    for n in 1..=2usize {
        for w in enumerate_weyl_odd(n) {
            assert_eq!(flag_cell_dimension(&w), w.length(), "odd flag cell {w}");
        }
    }
    println!("criterion 05: PASS — cell (4,6,8) has dim 9 / 12 and flag cells match lengths");
}

#[test]
fn c06_admissible_index_counts() {
    let family = Family::Odd { n: 3 };
    for (k, expect) in [(2usize, 18u64), (4, 8)] {
        assert_eq!(admissible_indices(family, k).unwrap().len() as u64, expect);
        assert_eq!(count_admissible(family, k), expect);
    }
    println!("criterion 06: PASS — 18 two-letter and 8 four-letter indices on 7 letters");
}

#[test]
fn c07_orbit_stratification() {
    for n in 1..=3usize {
        let orbits = flag_orbits(n).unwrap();
        for (i, info) in orbits.iter().enumerate() {
            assert_eq!(info.codimension, n - i, "flag orbit codim at n={n}");
        }
        let mut per_orbit: HashMap<String, u64> = HashMap::new();
        for w in enumerate_weyl_odd(n) {
            *per_orbit
                .entry(flag_cell_orbit(&w).unwrap().to_string())
                .or_default() += 1;
        }
        assert_eq!(per_orbit.len(), n + 1);
        let each = (1u64 << n) * factorial(n as u64);
        assert!(
            per_orbit.values().all(|&c| c == each),
            "per-orbit counts at n={n}: {per_orbit:?}"
        );
        for k in 1..=n + 1 {
            let mut closed_cells = 0u64;
            for idx in admissible_indices(Family::Odd { n }, k).unwrap() {
                let orbit = grassmannian_cell_orbit(&idx).unwrap();
                assert_eq!(
                    orbit == OrbitId::X0,
                    idx.letters().contains(&0),
                    "cell {idx} at k={k}, n={n}"
                );
                closed_cells += (orbit == OrbitId::X0) as u64;
            }
            assert_eq!(
                closed_cells,
                count_admissible(Family::Even { n }, k - 1),
                "closed-orbit cells at k={k}, n={n}"
            );
        }
    }
    println!("criterion 07: PASS — codimensions, 2^n·n! cells per orbit, kernel-letter split (n ≤ 3)");
}

#[test]
fn c08_branching_oracle_agreement() {
    let start = Instant::now();
    let mut cases = 0;
    for n in 1..=2usize {
        for lam in partitions_up_to(4) {
            let formula = dim_odd(&lam, n).unwrap();
            let oracle = trace_free_schur_dim(&lam, 2 * n + 1).unwrap() as u64;
            assert_eq!(formula, oracle, "λ={lam}, n={n}");
            if lam.len() > n + 1 {
                assert_eq!(formula, 0, "overlong λ={lam} at n={n}");
            }
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "budget exceeded: {elapsed:?}");
    println!("criterion 08: PASS — {cases} tensor-oracle cases agree, |λ| ≤ 4, n ≤ 2 ({elapsed:?})");
}

#[test]
fn c09_filtration_dimensions() {
    let mut cases = 0;
    for n in 1..=3usize {
        for lam in partitions_up_to(5) {
            if lam.len() > n + 1 {
                continue;
            }
            assert!(
                filtration_dimension_check(&lam, n).unwrap(),
                "filtration of λ={lam} at n={n}"
            );
            cases += 1;
        }
    }
    println!("criterion 09: PASS — {cases} filtrations sum to the classical dimension, |λ| ≤ 5, n ≤ 3");
}

#[test]
fn c10_line_bundle_sections() {
    for n in 1..=4usize {
        for lam in partitions_up_to(4) {
            if lam.len() > n + 1 {
                continue;
            }
            assert_eq!(
                h0_line_bundle(&lam, 2 * n + 2).unwrap(),
                dim_sp(&lam, n + 1).unwrap(),
                "even sections for λ={lam}, n={n}"
            );
        }
        let m = (2 * n + 1) as u64;
        for k in 1..=n + 1 {
            let expect = binomial(m, k as u64) - if k >= 2 { binomial(m, k as u64 - 2) } else { 0 };
            assert_eq!(
                h0_line_bundle(&Partition::column(k), 2 * n + 1).unwrap(),
                expect,
                "odd sections at k={k}, n={n}"
            );
        }
    }
    println!("criterion 10: PASS — section counts match both dimension formulas, n ≤ 4");
}

#[test]
fn c11_koszul_acyclicity() {
    for n in 2..=4usize {
        for k in 2..=n {
            let report = koszul_acyclicity_check(k, n).unwrap();
            assert!(report.acyclic, "higher cohomology at k={k}, n={n}");
            assert!(
                report.higher_terms_all_vanish(),
                "a j ≥ 2 component evades the repeat mechanism at k={k}, n={n}"
            );
            if k >= 3 {
                assert!(report.components.iter().any(|c| c.j >= 2));
            }
        }
    }
    println!("criterion 11: PASS — Koszul terms acyclic for 2 ≤ k ≤ n ≤ 4, higher terms vanish by repeats");
}

#[test]
fn c12_exterior_square_plethysm() {
    for rank in 2..=6usize {
        for j in 0..=6u64 {
            let total: u64 = plethysm_wedge2(j, rank)
                .iter()
                .map(|shape| dim_gl(shape, rank).unwrap())
                .sum();
            assert_eq!(
                total,
                binomial(rank as u64 * (rank as u64 - 1) / 2, j),
                "j={j}, rank={rank}"
            );
        }
    }
    println!("criterion 12: PASS — Σ dim S_λ⁻ = C(C(r,2), j) for j ≤ 6, r ≤ 6");
}

#[test]
fn c13_fano_scheme_values() {
    let pinned = fano_report(3, 3).unwrap();
    assert_eq!(pinned.components, 2);
    assert_eq!((pinned.dim_f1, pinned.dim_f2), (9, Some(9)));
    assert_eq!((pinned.rank_h1, pinned.rank_h2), (36, Some(32)));
    let mut coincidences = Vec::new();
    for n in 2..=8usize {
        for k in 2..=n {
            let r = fano_report(k, n).unwrap();
            if r.dim_f2 == Some(r.dim_f1) {
                coincidences.push((k, n));
            }
        }
    }
    assert_eq!(coincidences, vec![(3, 3)]);
    println!("criterion 13: PASS — (3,3) gives (2, 9, 9, 36, 32); unique dimension coincidence for n ≤ 8");
}

#[test]
fn c14_lie_algebra_dimensions() {
    for n in 1..=3usize {
        let dims = lie_dimension_check(n).unwrap();
        assert_eq!(dims.even, n * (2 * n + 1), "even algebra at n={n}");
        assert_eq!(dims.odd, (n + 1) * (2 * n + 1), "odd algebra at n={n}");
    }
    println!("criterion 14: PASS — kernel dimensions n(2n+1) and (n+1)(2n+1) for n ≤ 3");
}
