//! `osp` — batch calculator for Schubert-cell combinatorics and dimension
//! formulas on odd symplectic grassmannians and flag manifolds.
//!
//! Every subcommand prints either stable text or, with `--json`, exactly one
//! JSON object `{"input":…,"result":…,"provenance":…}`. Exit codes: 0 on
//! success, 2 on validation errors (bad parameters), 1 on internal failures
//! (a cross-check that should be a theorem coming out false).

mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use osp_core::bott::{bott_cohomology, koszul_acyclicity_check, fano_report, BottOutcome, BottWeight};
use osp_core::echelon::{family_for_letter_count, EchelonPattern};
use osp_core::error::{Error, Result};
use osp_core::indices::admissible_indices;
use osp_core::oracle::{schur_subspace, trace_free_schur_dim};
use osp_core::orbits::{flag_cell_orbit, flag_orbits, grassmannian_cell_orbit, grassmannian_orbits};
use osp_core::poincare::poincare_polynomial;
use osp_core::rep::{dim_odd, dim_sp, h0_line_bundle, interleavings, shtepin_factors};
use osp_core::weyl::{enumerate_weyl_even, enumerate_weyl_odd, parse_window, BruhatChainOracle};
use osp_core::{AdmissibleIndex, Family, Partition, Space};

#[derive(Parser)]
#[command(
    name = "osp",
    version,
    about = "Schubert cells, Bruhat order, orbits and dimension formulas for odd symplectic spaces"
)]
struct Cli {
    /// Emit a single JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceKind {
    Grassmannian,
    Flag,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the indexing Weyl set for N letters (N = 2n or 2n+1)
    Weyl {
        #[arg(long = "N")]
        n_letters: usize,
        /// list every element with its length
        #[arg(long)]
        list: bool,
    },
    /// Compare two window-notation elements in Bruhat order
    Bruhat {
        #[arg(long = "N")]
        n_letters: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// cross-check against the reflection-chain characterization
        #[arg(long)]
        oracle: bool,
    },
    /// Echelon data of Schubert cells (one cell, or all cells of G(k,N))
    Cells {
        #[arg(long = "N")]
        n_letters: usize,
        /// admissible index as comma-separated letters, e.g. 4,6,8
        #[arg(long)]
        index: Option<String>,
        /// flag window in bar notation, e.g. 1b,2
        #[arg(long)]
        window: Option<String>,
        /// list all k-letter cells instead
        #[arg(long)]
        k: Option<usize>,
    },
    /// Poincaré polynomial by counting cells per dimension
    Poincare {
        #[arg(long)]
        space: SpaceKind,
        #[arg(long = "N")]
        n_letters: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Orbit stratification of the odd spaces (N = 2n+1)
    Orbits {
        #[arg(long)]
        space: SpaceKind,
        #[arg(long = "N")]
        n_letters: usize,
        #[arg(long)]
        k: Option<usize>,
        /// also classify the cell with this admissible index
        #[arg(long)]
        index: Option<String>,
        /// also classify the cell with this flag window
        #[arg(long)]
        window: Option<String>,
    },
    /// Dimension of the trace-free module S^⟨λ⟩C^{2n+1} for the odd group
    DimOdd {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Weyl dimension of the Sp(2n)-module with highest weight λ
    DimSp {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Interleaving decomposition of S^⟨λ⟩C^{2n+1} under sp(2n)
    Branch {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Filtration factors of the Sp(2n+2)-module V_λ over the odd group
    Shtepin {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Sections of the λ-twisted line bundle on the flag space of C^N
    H0 {
        #[arg(long)]
        lambda: String,
        #[arg(long = "N")]
        n_letters: usize,
    },
    /// Recompute module dimensions from raw tensors (Young symmetrizer + contractions)
    Oracle {
        #[arg(long)]
        lambda: String,
        #[arg(long = "N")]
        n_letters: usize,
    },
    /// Cohomology of one irreducible bundle on G(k,m) by the dominance recipe
    Bott {
        /// weight entries, comma-separated integers (length m)
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long)]
        k: usize,
    },
    /// Check the Koszul terms of the Plücker slice of G(k,2n+1) are acyclic
    Koszul {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// include every component with its Bott outcome
        #[arg(long)]
        detail: bool,
    },
    /// Fano scheme of linear spaces on G_ω(k,2n+1): components, dims, ranks
    Fano {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run the invariant suite (quick < 1 min, full = every acceptance check)
    Verify {
        /// quick | full (also via OSP_VERIFY_LEVEL or the config file)
        #[arg(long)]
        level: Option<String>,
        /// TOML file with a default level and range overrides
        #[arg(long)]
        config: Option<std::path::PathBuf>,
    },
}

/// Everything a handler produces; `main` does the printing and exiting.
struct Report {
    input: Value,
    result: Value,
    anchor: &'static str,
    mode: &'static str,
    text: String,
    failed: bool,
}

impl Report {
    fn new(input: Value, result: Value, anchor: &'static str, mode: &'static str, text: String) -> Self {
        Report {
            input,
            result,
            anchor,
            mode,
            text,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            if cli.json {
                let envelope = json!({
                    "input": report.input,
                    "result": report.result,
                    "provenance": {"paper_anchor": report.anchor, "mode": report.mode},
                });
                println!("{envelope}");
            } else {
                println!("{}", report.text);
            }
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { 2 } else { 1 })
        }
    }
}

fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Weyl { n_letters, list } => weyl_cmd(*n_letters, *list),
        Command::Bruhat {
            n_letters,
            left,
            right,
            oracle,
        } => bruhat_cmd(*n_letters, left, right, *oracle),
        Command::Cells {
            n_letters,
            index,
            window,
            k,
        } => cells_cmd(*n_letters, index.as_deref(), window.as_deref(), *k),
        Command::Poincare {
            space,
            n_letters,
            k,
        } => poincare_cmd(*space, *n_letters, *k),
        Command::Orbits {
            space,
            n_letters,
            k,
            index,
            window,
        } => orbits_cmd(*space, *n_letters, *k, index.as_deref(), window.as_deref()),
        Command::DimOdd { lambda, n } => {
            let lam = Partition::parse(lambda)?;
            let dim = dim_odd(&lam, *n)?;
            Ok(Report::new(
                json!({"command": "dim-odd", "lambda": lambda, "n": n}),
                json!({"dim": dim}),
                "interleaving-branching-formula",
                "closed-form",
                dim.to_string(),
            ))
        }
        Command::DimSp { lambda, n } => {
            let lam = Partition::parse(lambda)?;
            let dim = dim_sp(&lam, *n)?;
            Ok(Report::new(
                json!({"command": "dim-sp", "lambda": lambda, "n": n}),
                json!({"dim": dim}),
                "weyl-dimension-formula-type-c",
                "closed-form",
                dim.to_string(),
            ))
        }
        Command::Branch { lambda, n } => branch_cmd(lambda, *n),
        Command::Shtepin { lambda, n } => shtepin_cmd(lambda, *n),
        Command::H0 { lambda, n_letters } => {
            let lam = Partition::parse(lambda)?;
            let dim = h0_line_bundle(&lam, *n_letters)?;
            Ok(Report::new(
                json!({"command": "h0", "lambda": lambda, "N": n_letters}),
                json!({"dim": dim}),
                "borel-weil-sections",
                "closed-form",
                dim.to_string(),
            ))
        }
        Command::Oracle { lambda, n_letters } => oracle_cmd(lambda, *n_letters),
        Command::Bott { eta, k } => bott_cmd(eta, *k),
        Command::Koszul { k, n, detail } => koszul_cmd(*k, *n, *detail),
        Command::Fano { k, n } => fano_cmd(*k, *n),
        Command::Verify { level, config } => verify::verify_cmd(level.as_deref(), config.as_deref()),
    }
}

fn enumerate(family: Family) -> Vec<osp_core::SignedPermutation> {
    match family {
        Family::Even { n } => enumerate_weyl_even(n),
        Family::Odd { n } => enumerate_weyl_odd(n),
    }
}

fn family_label(family: Family) -> &'static str {
    match family {
        Family::Even { .. } => "even",
        Family::Odd { .. } => "odd",
    }
}

fn weyl_cmd(n_letters: usize, list: bool) -> Result<Report> {
    let family = family_for_letter_count(n_letters)?;
    let elements = enumerate(family);
    let max_length = elements.iter().map(|w| w.length()).max().unwrap_or(0);
    let mut result = json!({"count": elements.len(), "max_length": max_length});
    let mut text = format!(
        "{} letters ({}, n={}): {} elements, max length {}",
        n_letters,
        family_label(family),
        family.n(),
        elements.len(),
        max_length
    );
    if list {
        let items: Vec<Value> = elements
            .iter()
            .map(|w| json!({"window": w.to_string(), "length": w.length()}))
            .collect();
        result["elements"] = Value::Array(items);
        for w in &elements {
            text.push_str(&format!("\n  {}  length {}", w, w.length()));
        }
    }
    Ok(Report::new(
        json!({"command": "weyl", "N": n_letters, "list": list}),
        result,
        "signed-permutation-enumeration",
        "enumeration",
        text,
    ))
}

fn bruhat_cmd(n_letters: usize, left: &str, right: &str, oracle: bool) -> Result<Report> {
    let family = family_for_letter_count(n_letters)?;
    let lw = parse_window(family, left)?;
    let rw = parse_window(family, right)?;
    let leq = lw.bruhat_leq(&rw)?;
    let geq = rw.bruhat_leq(&lw)?;
    let mut result = json!({
        "leq": leq,
        "geq": geq,
        "left_length": lw.length(),
        "right_length": rw.length(),
    });
    let mut text = format!(
        "{lw} <= {rw}: {leq}\n{rw} <= {lw}: {geq}\nlengths {} and {}",
        lw.length(),
        rw.length()
    );
    let mode = if oracle {
        let chain = BruhatChainOracle::new(family)?;
        let chain_leq = chain.leq(&lw, &rw)?;
        if chain_leq != leq {
            return Err(Error::Internal(format!(
                "prefix criterion and chain oracle disagree on {lw} vs {rw}"
            )));
        }
        result["chain_leq"] = json!(chain_leq);
        text.push_str("\nchain oracle agrees");
        "oracle"
    } else {
        "closed-form"
    };
    Ok(Report::new(
        json!({"command": "bruhat", "N": n_letters, "left": left, "right": right, "oracle": oracle}),
        result,
        "sorted-prefix-criterion",
        mode,
        text,
    ))
}

fn parse_letters(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidIndex(format!("bad letter {t:?} in {s:?}")))
        })
        .collect()
}

fn pattern_json(pattern: &EchelonPattern) -> Value {
    let rows: Vec<String> = pattern.to_string().lines().map(str::to_owned).collect();
    json!({
        "dimension": pattern.dimension(),
        "determined": pattern.count(osp_core::echelon::EntryState::Determined),
        "rows": rows,
    })
}

fn cells_cmd(
    n_letters: usize,
    index: Option<&str>,
    window: Option<&str>,
    k: Option<usize>,
) -> Result<Report> {
    let family = family_for_letter_count(n_letters)?;
    let given = [index.is_some(), window.is_some(), k.is_some()]
        .iter()
        .filter(|b| **b)
        .count();
    if given != 1 {
        return Err(Error::InvalidParameter(
            "give exactly one of --index, --window, --k".into(),
        ));
    }
    if let Some(s) = index {
        let idx = AdmissibleIndex::new(family, parse_letters(s)?)?;
        let pattern = EchelonPattern::for_index(&idx);
        let text = format!(
            "{}\ncell {}: dimension {}, {} determined entries",
            pattern,
            idx,
            pattern.dimension(),
            pattern.count(osp_core::echelon::EntryState::Determined)
        );
        return Ok(Report::new(
            json!({"command": "cells", "N": n_letters, "index": s}),
            pattern_json(&pattern),
            "echelon-pattern",
            "closed-form",
            text,
        ));
    }
    if let Some(s) = window {
        let w = parse_window(family, s)?;
        let pattern = EchelonPattern::for_window(&w);
        let mut result = pattern_json(&pattern);
        result["length"] = json!(w.length());
        let text = format!(
            "{}\ncell {}: dimension {} = length {}",
            pattern,
            w,
            pattern.dimension(),
            w.length()
        );
        return Ok(Report::new(
            json!({"command": "cells", "N": n_letters, "window": s}),
            result,
            "echelon-pattern",
            "closed-form",
            text,
        ));
    }
    let k = k.unwrap();
    let cells = admissible_indices(family, k)?;
    let items: Vec<Value> = cells
        .iter()
        .map(|idx| {
            json!({
                "index": idx.to_string(),
                "dimension": osp_core::echelon::grassmannian_cell_dimension(idx),
            })
        })
        .collect();
    let mut text = format!("{} cells of the {}-letter grassmannian of C^{}", cells.len(), k, n_letters);
    for idx in &cells {
        text.push_str(&format!(
            "\n  {}  dim {}",
            idx,
            osp_core::echelon::grassmannian_cell_dimension(idx)
        ));
    }
    Ok(Report::new(
        json!({"command": "cells", "N": n_letters, "k": k}),
        json!({"count": cells.len(), "cells": items}),
        "echelon-pattern",
        "enumeration",
        text,
    ))
}

fn space_for(kind: SpaceKind, n_letters: usize, k: Option<usize>) -> Result<Space> {
    let family = family_for_letter_count(n_letters)?;
    match kind {
        SpaceKind::Grassmannian => {
            let k = k.ok_or_else(|| Error::InvalidParameter("--k is required for grassmannians".into()))?;
            Ok(Space::Grassmannian { family, k })
        }
        SpaceKind::Flag => {
            if k.is_some() {
                return Err(Error::InvalidParameter("--k only applies to grassmannians".into()));
            }
            Ok(Space::Flag { family })
        }
    }
}

fn poincare_cmd(kind: SpaceKind, n_letters: usize, k: Option<usize>) -> Result<Report> {
    let space = space_for(kind, n_letters, k)?;
    let poly = poincare_polynomial(space)?;
    let result = json!({
        "coefficients": poly.coeffs(),
        "polynomial": poly.to_string(),
        "total_cells": poly.eval_at_one(),
        "degree": poly.degree(),
        "dimension": space.dimension(),
        "palindromic": poly.is_palindromic(),
    });
    let text = format!(
        "P(q) = {}\n{} cells, complex dimension {}, palindromic: {}",
        poly,
        poly.eval_at_one(),
        space.dimension(),
        poly.is_palindromic()
    );
    let input = match k {
        Some(k) => json!({"command": "poincare", "space": kind_label(kind), "N": n_letters, "k": k}),
        None => json!({"command": "poincare", "space": kind_label(kind), "N": n_letters}),
    };
    Ok(Report::new(input, result, "cell-enumeration", "enumeration", text))
}

fn kind_label(kind: SpaceKind) -> &'static str {
    match kind {
        SpaceKind::Grassmannian => "grassmannian",
        SpaceKind::Flag => "flag",
    }
}

fn orbit_json(info: &osp_core::orbits::OrbitInfo) -> Value {
    json!({
        "id": info.id.to_string(),
        "dimension": info.dimension,
        "codimension": info.codimension,
        "model": info.model,
        "closure": info.closure.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
    })
}

fn orbits_cmd(
    kind: SpaceKind,
    n_letters: usize,
    k: Option<usize>,
    index: Option<&str>,
    window: Option<&str>,
) -> Result<Report> {
    let family = family_for_letter_count(n_letters)?;
    let n = match family {
        Family::Odd { n } => n,
        Family::Even { .. } => {
            return Err(Error::InvalidParameter(
                "orbit stratification is for odd letter counts (the even spaces are homogeneous)".into(),
            ))
        }
    };
    let orbits = match kind {
        SpaceKind::Grassmannian => {
            let k = k.ok_or_else(|| Error::InvalidParameter("--k is required for grassmannians".into()))?;
            grassmannian_orbits(k, n)?
        }
        SpaceKind::Flag => flag_orbits(n)?,
    };
    let mut result = json!({"orbits": orbits.iter().map(orbit_json).collect::<Vec<_>>()});
    let mut text = String::new();
    for info in &orbits {
        text.push_str(&format!(
            "{}: dim {}, codim {}, {}\n",
            info.id, info.dimension, info.codimension, info.model
        ));
    }
    match (kind, index, window) {
        (_, None, None) => {}
        (SpaceKind::Grassmannian, Some(s), None) => {
            let idx = AdmissibleIndex::new(family, parse_letters(s)?)?;
            let orbit = grassmannian_cell_orbit(&idx)?;
            result["cell"] = json!({"index": idx.to_string(), "orbit": orbit.to_string()});
            text.push_str(&format!("cell {idx} lies in {orbit}\n"));
        }
        (SpaceKind::Flag, None, Some(s)) => {
            let w = parse_window(family, s)?;
            let orbit = flag_cell_orbit(&w)?;
            result["cell"] = json!({"window": w.to_string(), "orbit": orbit.to_string()});
            text.push_str(&format!("cell {w} lies in {orbit}\n"));
        }
        _ => {
            return Err(Error::InvalidParameter(
                "use --index with grassmannians and --window with flags".into(),
            ))
        }
    }
    text.truncate(text.trim_end().len());
    let input = match k {
        Some(k) => json!({"command": "orbits", "space": kind_label(kind), "N": n_letters, "k": k}),
        None => json!({"command": "orbits", "space": kind_label(kind), "N": n_letters}),
    };
    Ok(Report::new(
        input,
        result,
        "kernel-intersection-stratification",
        "closed-form",
        text,
    ))
}

fn branch_cmd(lambda: &str, n: usize) -> Result<Report> {
    let lam = Partition::parse(lambda)?;
    let parts = interleavings(&lam, n)?;
    let mut summands = Vec::new();
    let mut text = format!("S^<{lam}> of C^{} under sp({}):", 2 * n + 1, 2 * n);
    let mut total: u64 = 0;
    for mu in &parts {
        let dim = dim_sp(mu, n)?;
        total += dim;
        summands.push(json!({"mu": mu.to_string(), "dim": dim}));
        text.push_str(&format!("\n  {mu}: {dim}"));
    }
    let formula = dim_odd(&lam, n)?;
    if total != formula {
        return Err(Error::Internal(format!(
            "interleaving total {total} does not match dim_odd {formula}"
        )));
    }
    text.push_str(&format!("\ntotal {total}"));
    Ok(Report::new(
        json!({"command": "branch", "lambda": lambda, "n": n}),
        json!({"summands": summands, "total": total}),
        "interleaving-branching-formula",
        "closed-form",
        text,
    ))
}

fn shtepin_cmd(lambda: &str, n: usize) -> Result<Report> {
    let lam = Partition::parse(lambda)?;
    let factors = shtepin_factors(&lam, n)?;
    let sp = dim_sp(&lam, n + 1)?;
    let mut total: u64 = 0;
    let mut items = Vec::new();
    let mut text = format!("filtration of the Sp({})-module V_{lam} over the odd group:", 2 * n + 2);
    for f in &factors {
        let dim = dim_odd(&f.factor, n)?;
        total += dim;
        items.push(json!({"factor": f.factor.to_string(), "shift": f.shift, "dim": dim}));
        text.push_str(&format!("\n  {} (shift {}): {}", f.factor, f.shift, dim));
    }
    if total != sp {
        return Err(Error::Internal(format!(
            "filtration factors sum to {total}, expected dim_sp = {sp}"
        )));
    }
    text.push_str(&format!("\nsum {total} = dim_sp(λ, n+1)"));
    Ok(Report::new(
        json!({"command": "shtepin", "lambda": lambda, "n": n}),
        json!({"factors": items, "sum": total, "sp_dim": sp}),
        "filtration-factors",
        "closed-form",
        text,
    ))
}

fn oracle_cmd(lambda: &str, n_letters: usize) -> Result<Report> {
    let lam = Partition::parse(lambda)?;
    let schur = schur_subspace(&lam, n_letters)?.len();
    let trace_free = trace_free_schur_dim(&lam, n_letters)?;
    let formula = if n_letters % 2 == 1 {
        dim_odd(&lam, (n_letters - 1) / 2)?
    } else {
        dim_sp(&lam, n_letters / 2)?
    };
    if trace_free as u64 != formula {
        return Err(Error::Internal(format!(
            "oracle dimension {trace_free} disagrees with formula {formula} for λ={lam}, N={n_letters}"
        )));
    }
    Ok(Report::new(
        json!({"command": "oracle", "lambda": lambda, "N": n_letters}),
        json!({"schur": schur, "trace_free": trace_free, "formula": formula}),
        "young-symmetrizer-contraction-kernel",
        "oracle",
        format!("schur {schur}, trace-free {trace_free}, formula {formula}: agree"),
    ))
}

fn bott_cmd(eta: &str, k: usize) -> Result<Report> {
    let entries: Vec<i64> = eta
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidParameter(format!("bad entry {t:?} in --eta")))
        })
        .collect::<Result<_>>()?;
    let weight = BottWeight::new(entries, k)?;
    let input = json!({"command": "bott", "eta": eta, "k": k});
    match bott_cohomology(&weight)? {
        BottOutcome::Vanishes => Ok(Report::new(
            input,
            json!({"vanishes": true}),
            "dominant-sorting-recipe",
            "closed-form",
            "vanishes (repeated entry after the ρ shift)".into(),
        )),
        BottOutcome::Cohomology { degree, weight, dim } => Ok(Report::new(
            input,
            json!({"vanishes": false, "degree": degree, "weight": weight, "dim": dim}),
            "dominant-sorting-recipe",
            "closed-form",
            format!(
                "cohomology in degree {degree}: weight ({}), dim {dim}",
                weight.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
        )),
    }
}

fn koszul_cmd(k: usize, n: usize, detail: bool) -> Result<Report> {
    let report = koszul_acyclicity_check(k, n)?;
    if !report.acyclic {
        return Err(Error::Internal(format!(
            "Koszul term with higher cohomology found at k={k}, n={n}"
        )));
    }
    let mut result = json!({
        "acyclic": report.acyclic,
        "h0_by_j": report.h0_by_j,
        "higher_terms_all_vanish": report.higher_terms_all_vanish(),
        "components": report.components.len(),
    });
    if detail {
        let items: Vec<Value> = report
            .components
            .iter()
            .map(|c| {
                let outcome = match &c.outcome {
                    BottOutcome::Vanishes => json!({"vanishes": true}),
                    BottOutcome::Cohomology { degree, weight, dim } => {
                        json!({"vanishes": false, "degree": degree, "weight": weight, "dim": dim})
                    }
                };
                json!({"j": c.j, "shape": c.shape.to_string(), "outcome": outcome})
            })
            .collect();
        result["detail"] = Value::Array(items);
    }
    let h0: Vec<String> = report.h0_by_j.iter().map(|d| d.to_string()).collect();
    Ok(Report::new(
        json!({"command": "koszul", "k": k, "n": n}),
        result,
        "koszul-term-cohomology",
        "enumeration",
        format!(
            "acyclic; H0 per exterior degree: {}; higher terms vanish: {}",
            h0.join(", "),
            report.higher_terms_all_vanish()
        ),
    ))
}

fn fano_cmd(k: usize, n: usize) -> Result<Report> {
    let r = fano_report(k, n)?;
    let result = json!({
        "components": r.components,
        "dim_f1": r.dim_f1,
        "dim_f2": r.dim_f2,
        "rank_h1": r.rank_h1,
        "rank_h2": r.rank_h2,
        "ranks_extrapolated": r.ranks_extrapolated,
    });
    let mut text = format!("{} component(s); dim F1 = {}", r.components, r.dim_f1);
    if let Some(d2) = r.dim_f2 {
        text.push_str(&format!(", dim F2 = {d2}"));
    }
    text.push_str(&format!("; rank H1 = {}", r.rank_h1));
    if let Some(r2) = r.rank_h2 {
        text.push_str(&format!(", rank H2 = {r2}"));
    }
    if r.ranks_extrapolated {
        text.push_str(" (ranks extrapolated)");
    }
    Ok(Report::new(
        json!({"command": "fano", "k": k, "n": n}),
        result,
        "fano-scheme-formulas",
        "closed-form",
        text,
    ))
}
