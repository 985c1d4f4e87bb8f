//! The `verify` subcommand: every cross-check the library promises, run at a
//! `quick` (sub-minute) or `full` range, with an optional TOML file supplying
//! default level and range overrides.

use std::collections::HashMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::json;

use osp_core::bott::{fano_report, koszul_acyclicity_check, plethysm_wedge2, plucker_h0};
use osp_core::echelon::{flag_cell_dimension, grassmannian_cell_dimension};
use osp_core::error::{Error, Result};
use osp_core::indices::{admissible_indices, count_admissible};
use osp_core::orbits::{flag_cell_orbit, flag_orbits, grassmannian_cell_orbit, OrbitId};
use osp_core::poincare::{flag_odd_closed_product, poincare_polynomial};
use osp_core::rep::{dim_gl, dim_odd, dim_sp, filtration_dimension_check, h0_line_bundle, lie_dimension_check};
use osp_core::weyl::{enumerate_weyl_even, enumerate_weyl_odd, odd_top_element, BruhatChainOracle};
use osp_core::{AdmissibleIndex, Family, Partition, SignedPermutation, Space};

use crate::Report;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Level {
    Quick,
    Full,
}

impl Level {
    fn parse(s: &str) -> Result<Level> {
        match s.to_ascii_lowercase().as_str() {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(Error::InvalidParameter(format!(
                "verify level must be quick or full, got {other:?}"
            ))),
        }
    }

    fn label(self) -> &'static str {
        match self {
            Level::Quick => "quick",
            Level::Full => "full",
        }
    }
}

/// Ranges each criterion sweeps. `full` matches the stated acceptance
/// ranges; `quick` trims the expensive sweeps.
struct Options {
    weyl_n_max: usize,
    characterization_n_max: usize,
    poincare_n_max: usize,
    bruhat_n_max: usize,
    oracle_weight_max: u64,
    oracle_n_max: usize,
    shtepin_weight_max: u64,
    shtepin_n_max: usize,
    borel_n_max: usize,
    koszul_n_max: usize,
    plethysm_j_max: u64,
    plethysm_rank_max: usize,
    fano_scan_n_max: usize,
    lie_n_max: usize,
}

impl Options {
    fn for_level(level: Level) -> Options {
        match level {
            Level::Quick => Options {
                weyl_n_max: 3,
                characterization_n_max: 2,
                poincare_n_max: 2,
                bruhat_n_max: 2,
                oracle_weight_max: 3,
                oracle_n_max: 1,
                shtepin_weight_max: 4,
                shtepin_n_max: 2,
                borel_n_max: 2,
                koszul_n_max: 3,
                plethysm_j_max: 4,
                plethysm_rank_max: 5,
                fano_scan_n_max: 6,
                lie_n_max: 2,
            },
            Level::Full => Options {
                weyl_n_max: 4,
                characterization_n_max: 3,
                poincare_n_max: 3,
                bruhat_n_max: 3,
                oracle_weight_max: 4,
                oracle_n_max: 2,
                shtepin_weight_max: 5,
                shtepin_n_max: 3,
                borel_n_max: 4,
                koszul_n_max: 4,
                plethysm_j_max: 6,
                plethysm_rank_max: 6,
                fano_scan_n_max: 8,
                lie_n_max: 3,
            },
        }
    }

    fn apply(&mut self, o: &RangeOverrides) {
        macro_rules! take {
            ($($f:ident),+) => { $( if let Some(v) = o.$f { self.$f = v; } )+ };
        }
        take!(
            weyl_n_max,
            characterization_n_max,
            poincare_n_max,
            bruhat_n_max,
            oracle_weight_max,
            oracle_n_max,
            shtepin_weight_max,
            shtepin_n_max,
            borel_n_max,
            koszul_n_max,
            plethysm_j_max,
            plethysm_rank_max,
            fano_scan_n_max,
            lie_n_max
        );
    }
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    level: Option<String>,
    #[serde(default)]
    ranges: RangeOverrides,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RangeOverrides {
    weyl_n_max: Option<usize>,
    characterization_n_max: Option<usize>,
    poincare_n_max: Option<usize>,
    bruhat_n_max: Option<usize>,
    oracle_weight_max: Option<u64>,
    oracle_n_max: Option<usize>,
    shtepin_weight_max: Option<u64>,
    shtepin_n_max: Option<usize>,
    borel_n_max: Option<usize>,
    koszul_n_max: Option<usize>,
    plethysm_j_max: Option<u64>,
    plethysm_rank_max: Option<usize>,
    fano_scan_n_max: Option<usize>,
    lie_n_max: Option<usize>,
}

fn load_config(path: &Path) -> Result<ConfigFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Error::InvalidParameter(format!("bad config: {e}")))
}

pub fn verify_cmd(level_arg: Option<&str>, config_path: Option<&Path>) -> Result<Report> {
    let config = match config_path {
        Some(p) => load_config(p)?,
        None => ConfigFile::default(),
    };
    let env_level = std::env::var("OSP_VERIFY_LEVEL").ok().filter(|s| !s.is_empty());
    let level_str = level_arg
        .map(str::to_owned)
        .or(env_level)
        .or(config.level.clone())
        .unwrap_or_else(|| "quick".into());
    let level = Level::parse(&level_str)?;
    let mut opts = Options::for_level(level);
    opts.apply(&config.ranges);

    let criteria: Vec<(&'static str, fn(&Options) -> CheckResult)> = vec![
        ("weyl-set-counts", c01_weyl_counts),
        ("longest-element-lengths", c02_longest_lengths),
        ("flag-poincare-product", c03_poincare_product),
        ("bruhat-chain-equivalence", c04_bruhat_equivalence),
        ("echelon-cell-dimensions", c05_echelon_dimensions),
        ("admissible-index-counts", c06_admissible_counts),
        ("orbit-stratification", c07_orbits),
        ("branching-oracle-agreement", c08_oracle_agreement),
        ("filtration-dimensions", c09_filtration),
        ("line-bundle-sections", c10_sections),
        ("koszul-acyclicity", c11_koszul),
        ("exterior-square-plethysm", c12_plethysm),
        ("fano-scheme-values", c13_fano),
        ("lie-algebra-dimensions", c14_lie),
    ];

    let mut rows = Vec::new();
    let mut text = format!("verify level={}", level.label());
    let mut passed_count = 0usize;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = i + 1;
        let (passed, detail) = match f(&opts) {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if passed {
            passed_count += 1;
        }
        text.push_str(&format!(
            "\n[{id:2}] {}  {name} — {detail}",
            if passed { "PASS" } else { "FAIL" }
        ));
        rows.push(json!({"id": id, "name": name, "passed": passed, "detail": detail}));
    }
    let all = passed_count == criteria.len();
    text.push_str(&format!("\n{passed_count}/{} criteria passed", criteria.len()));
    let mut report = Report::new(
        json!({"command": "verify", "level": level.label()}),
        json!({"level": level.label(), "criteria": rows, "passed": all}),
        "invariant-suite",
        "enumeration",
        text,
    );
    report.failed = !all;
    Ok(report)
}

/// Ok(detail) on pass, Err(reason) on fail.
type CheckResult = std::result::Result<String, String>;

macro_rules! check {
    ($cond:expr, $($arg:tt)+) => {
        if !($cond) {
            return Err(format!($($arg)+));
        }
    };
}

fn core<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

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

fn c01_weyl_counts(o: &Options) -> CheckResult {
    for n in 1..=o.weyl_n_max {
        let even = enumerate_weyl_even(n).len() as u64;
        check!(
            even == (1 << n) * factorial(n as u64),
            "even count at n={n}: got {even}"
        );
        let odd = enumerate_weyl_odd(n).len() as u64;
        check!(
            odd == (1 << n) * factorial(n as u64 + 1),
            "odd count at n={n}: got {odd}"
        );
    }
    // embedded characterization: below the top element ⇔ the window avoids
    // the barred image of the kernel letter
    for n in 1..=o.characterization_n_max {
        let ambient = Family::Even { n: n + 1 };
        let shifted: Vec<usize> = odd_top_element(n).window().iter().map(|l| l + 1).collect();
        let top = core(SignedPermutation::new(ambient, shifted))?;
        let barred_kernel = 2 * n + 2;
        let mut members = 0u64;
        for v in enumerate_weyl_even(n + 1) {
            let in_interval = core(v.bruhat_leq(&top))?;
            let avoids = !v.window().contains(&barred_kernel);
            check!(
                in_interval == avoids,
                "characterizations disagree at n={n} for {v}"
            );
            if in_interval {
                members += 1;
            }
        }
        check!(
            members == (1 << n) * factorial(n as u64 + 1),
            "interval size at n={n}: got {members}"
        );
    }
    Ok(format!(
        "counts to n={}, characterization to n={}",
        o.weyl_n_max, o.characterization_n_max
    ))
}

fn c02_longest_lengths(o: &Options) -> CheckResult {
    for n in 1..=o.weyl_n_max {
        let max = enumerate_weyl_even(n).iter().map(|w| w.length()).max().unwrap();
        check!(max == n * n, "even max length at n={n}: got {max}");
    }
    for n in 1..=o.weyl_n_max - 1 {
        let max = enumerate_weyl_odd(n).iter().map(|w| w.length()).max().unwrap();
        check!(max == n * (n + 1), "odd max length at n={n}: got {max}");
    }
    Ok(format!("n² and n(n+1) up to n={}", o.weyl_n_max))
}

fn c03_poincare_product(o: &Options) -> CheckResult {
    for n in 1..=o.poincare_n_max {
        let enumerated = core(poincare_polynomial(Space::Flag {
            family: Family::Odd { n },
        }))?;
        let product = flag_odd_closed_product(n);
        check!(
            enumerated == product,
            "flag polynomial differs from the product at n={n}"
        );
    }
    let smallest = core(poincare_polynomial(Space::Flag {
        family: Family::Odd { n: 1 },
    }))?;
    check!(smallest.coeffs() == [1, 2, 1], "smallest flag space: got {smallest}");
    Ok(format!("product form matches to n={}", o.poincare_n_max))
}

fn c04_bruhat_equivalence(o: &Options) -> CheckResult {
    let mut pairs = 0u64;
    for n in 2..=o.bruhat_n_max {
        let family = Family::Even { n };
        let elements = enumerate_weyl_even(n);
        let oracle = core(BruhatChainOracle::new(family))?;
        for a in &elements {
            for b in &elements {
                let criterion = core(a.bruhat_leq(b))?;
                let chain = core(oracle.leq(a, b))?;
                check!(criterion == chain, "order mismatch on {a} vs {b} at n={n}");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs agree up to rank {}", o.bruhat_n_max))
}

fn c05_echelon_dimensions(_o: &Options) -> CheckResult {
    let even = core(AdmissibleIndex::new(Family::Even { n: 4 }, vec![4, 6, 8]))?;
    check!(
        grassmannian_cell_dimension(&even) == 9,
        "cell (4,6,8) of C^8: got {}",
        grassmannian_cell_dimension(&even)
    );
    let odd = core(AdmissibleIndex::new(Family::Odd { n: 4 }, vec![4, 6, 8]))?;
    check!(
        grassmannian_cell_dimension(&odd) == 12,
        "cell (4,6,8) of C^9: got {}",
        grassmannian_cell_dimension(&odd)
    );
    for n in 1..=3 {
        for w in enumerate_weyl_even(n) {
            check!(
                flag_cell_dimension(&w) == w.length(),
                "even flag cell {w}: dim ≠ length"
            );
        }
    }
    for n in 1..=2 {
        for w in enumerate_weyl_odd(n) {
            check!(
                flag_cell_dimension(&w) == w.length(),
                "odd flag cell {w}: dim ≠ length"
            );
        }
    }
    Ok("pinned cells and cell-dimension = length sweeps".into())
}

fn c06_admissible_counts(_o: &Options) -> CheckResult {
    let odd3 = Family::Odd { n: 3 };
    for (k, expect) in [(2usize, 18u64), (4, 8)] {
        let enumerated = core(admissible_indices(odd3, k))?.len() as u64;
        let closed = count_admissible(odd3, k);
        check!(
            enumerated == expect && closed == expect,
            "index count at k={k}: enumerated {enumerated}, closed {closed}"
        );
    }
    Ok("18 two-letter and 8 four-letter indices of C^7".into())
}

fn c07_orbits(_o: &Options) -> CheckResult {
    for n in 1..=3usize {
        let orbits = core(flag_orbits(n))?;
        for (i, info) in orbits.iter().enumerate() {
            check!(
                info.codimension == n - i,
                "flag orbit codim at n={n}, i={}: got {}",
                i + 1,
                info.codimension
            );
        }
        let mut per_orbit: HashMap<String, u64> = HashMap::new();
        for w in enumerate_weyl_odd(n) {
            *per_orbit.entry(core(flag_cell_orbit(&w))?.to_string()).or_default() += 1;
        }
        let each = (1u64 << n) * factorial(n as u64);
        check!(
            per_orbit.len() == n + 1 && per_orbit.values().all(|&c| c == each),
            "flag cell partition at n={n}: {per_orbit:?}"
        );
        for k in 1..=n + 1 {
            let family = Family::Odd { n };
            let mut closed_cells = 0u64;
            for idx in core(admissible_indices(family, k))? {
                let orbit = core(grassmannian_cell_orbit(&idx))?;
                let contains_kernel = idx.letters().contains(&0);
                check!(
                    (orbit == OrbitId::X0) == contains_kernel,
                    "cell {idx} classified {orbit} at k={k}, n={n}"
                );
                if orbit == OrbitId::X0 {
                    closed_cells += 1;
                }
            }
            check!(
                closed_cells == count_admissible(Family::Even { n }, k - 1),
                "closed-orbit cell count at k={k}, n={n}: got {closed_cells}"
            );
        }
    }
    Ok("codimensions, per-orbit cell counts, kernel-letter classification (n ≤ 3)".into())
}

fn c08_oracle_agreement(o: &Options) -> CheckResult {
    use osp_core::oracle::trace_free_schur_dim;
    let mut cases = 0;
    for n in 1..=o.oracle_n_max {
        for lam in partitions_up_to(o.oracle_weight_max) {
            let formula = core(dim_odd(&lam, n))?;
            let oracle = core(trace_free_schur_dim(&lam, 2 * n + 1))? as u64;
            check!(
                formula == oracle,
                "λ={lam}, n={n}: formula {formula}, oracle {oracle}"
            );
            if lam.len() > n + 1 {
                check!(formula == 0, "λ={lam} too long for n={n} but dim {formula}");
            }
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} cases agree (|λ| ≤ {}, n ≤ {})",
        o.oracle_weight_max, o.oracle_n_max
    ))
}

fn c09_filtration(o: &Options) -> CheckResult {
    let mut cases = 0;
    for n in 1..=o.shtepin_n_max {
        for lam in partitions_up_to(o.shtepin_weight_max) {
            if lam.len() > n + 1 {
                continue;
            }
            check!(
                core(filtration_dimension_check(&lam, n))?,
                "factors of λ={lam} at n={n} do not fill the module"
            );
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} filtrations fill their modules (|λ| ≤ {}, n ≤ {})",
        o.shtepin_weight_max, o.shtepin_n_max
    ))
}

fn c10_sections(o: &Options) -> CheckResult {
    for n in 1..=o.borel_n_max {
        for lam in partitions_up_to(4) {
            if lam.len() > n + 1 {
                continue;
            }
            let h0 = core(h0_line_bundle(&lam, 2 * n + 2))?;
            let sp = core(dim_sp(&lam, n + 1))?;
            check!(h0 == sp, "even sections for λ={lam}, n={n}: {h0} vs {sp}");
        }
        for k in 1..=n + 1 {
            let h0 = core(h0_line_bundle(&Partition::column(k), 2 * n + 1))?;
            let plucker = core(plucker_h0(k, n))?;
            check!(h0 == plucker, "odd sections at k={k}, n={n}: {h0} vs {plucker}");
        }
    }
    Ok(format!("both parities up to n = {}", o.borel_n_max))
}

fn c11_koszul(o: &Options) -> CheckResult {
    for n in 2..=o.koszul_n_max {
        for k in 2..=n {
            let report = core(koszul_acyclicity_check(k, n))?;
            check!(report.acyclic, "higher cohomology at k={k}, n={n}");
            check!(
                report.higher_terms_all_vanish(),
                "a j ≥ 2 term survives the repeat test at k={k}, n={n}"
            );
            if k >= 3 {
                check!(
                    report.components.iter().any(|c| c.j >= 2),
                    "no j ≥ 2 components produced at k={k}, n={n}"
                );
            }
        }
    }
    Ok(format!("acyclic with vanishing higher terms, 2 ≤ k ≤ n ≤ {}", o.koszul_n_max))
}

fn c12_plethysm(o: &Options) -> CheckResult {
    for rank in 2..=o.plethysm_rank_max {
        for j in 0..=o.plethysm_j_max {
            let total: u64 = plethysm_wedge2(j, rank)
                .iter()
                .map(|shape| dim_gl(shape, rank).unwrap_or(0))
                .sum();
            let expect = binomial(rank as u64 * (rank as u64 - 1) / 2, j);
            check!(total == expect, "j={j}, rank={rank}: {total} vs {expect}");
        }
    }
    Ok(format!(
        "Σ dim = C(C(r,2), j) for j ≤ {}, r ≤ {}",
        o.plethysm_j_max, o.plethysm_rank_max
    ))
}

fn c13_fano(o: &Options) -> CheckResult {
    let pinned = core(fano_report(3, 3))?;
    check!(
        pinned.components == 2
            && pinned.dim_f1 == 9
            && pinned.dim_f2 == Some(9)
            && pinned.rank_h1 == 36
            && pinned.rank_h2 == Some(32),
        "pinned values at (3,3): {pinned:?}"
    );
    let mut coincidences = Vec::new();
    for n in 2..=o.fano_scan_n_max {
        for k in 2..=n {
            let r = core(fano_report(k, n))?;
            if r.dim_f2 == Some(r.dim_f1) {
                coincidences.push((k, n));
            }
        }
    }
    check!(
        coincidences == vec![(3, 3)],
        "dimension coincidences: {coincidences:?}"
    );
    Ok(format!(
        "(3,3) values pinned; unique coincidence for n ≤ {}",
        o.fano_scan_n_max
    ))
}

fn c14_lie(o: &Options) -> CheckResult {
    for n in 1..=o.lie_n_max {
        let dims = core(lie_dimension_check(n))?;
        check!(
            dims.even == n * (2 * n + 1) && dims.odd == (n + 1) * (2 * n + 1),
            "dims at n={n}: {dims:?}"
        );
    }
    Ok(format!("n(2n+1) and (n+1)(2n+1) up to n = {}", o.lie_n_max))
}
