//! One function per subcommand; each turns a problem file into a [`ReportDocument`].

use std::time::Instant;

use serde_json::json;

use super::problem::{ProblemFile, PAPER_900_NAME};
use super::report::{listing, ReportDocument, Status};
use super::CliError;
use crate::cyclotomic::zero_set;
use crate::error::Error;
use crate::grid::GridSet;
use crate::group::{is_factorization, CyclicSet};
use crate::search::{
    enumerate_complements, necessity_witnesses, search_quasiperiodic, verify_quasiperiodic,
    NecessityStatus, QuasiSearch, Side, StreamStatus,
};
use crate::spectra::{
    check_spectrum_pair, check_tijdeman_counterexample, check_universal_spectrum,
    verify_complementary_zeros, verify_zero_complement, TilingInstance,
};
use crate::verdict::Verdict;

/// Default node budget for searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

fn lib(e: Error) -> CliError {
    CliError::Input(e.to_string())
}

/// Runs `body`, timing it and turning input errors into an exit-code-2 report.
pub fn run(
    command: &str,
    input: Option<&str>,
    body: impl FnOnce(&mut ReportDocument) -> Result<(), CliError>,
) -> ReportDocument {
    let start = Instant::now();
    let mut report = ReportDocument::new(command, input);
    match body(&mut report) {
        Ok(()) => report.settle(),
        Err(e) => {
            report.status = Status::InputError;
            report.exit_code = Status::InputError.exit_code();
            report.data = json!({ "error": e.to_string() });
        }
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

fn load(path: &str) -> Result<ProblemFile, CliError> {
    ProblemFile::load(path)
}

pub fn cmd_verify_factorization(path: &str, a: &str, b: &str) -> ReportDocument {
    run("verify-factorization", Some(path), |r| {
        let p = load(path)?;
        let (sa, sb) = (p.cyclic_set(a)?, p.cyclic_set(b)?);
        r.verdict = is_factorization(&sa, &sb).map_err(lib)?;
        r.data = json!({ "modulus": sa.modulus(), "sizes": [sa.len(), sb.len()] });
        Ok(())
    })
}

pub fn cmd_zero_set(path: &str, set: &str, full: bool) -> ReportDocument {
    run("zero-set", Some(path), |r| {
        let p = load(path)?;
        let s = p.cyclic_set(set)?;
        let z = zero_set(&s).map_err(lib)?;
        let residues = z.residues();
        r.verdict.ok(
            "zero set computed",
            vec![],
            format!(
                "{} of {} residues are zeros of f_{set}",
                residues.len(),
                s.modulus()
            ),
        );
        r.data = json!({
            "set": set,
            "modulus": s.modulus(),
            "vanishing_orders": z.vanishing_orders(),
            "zero_count": residues.len(),
            "zero_residues": listing(&residues, full),
        });
        Ok(())
    })
}

fn default_complement(p: &ProblemFile, tile: &str) -> Option<String> {
    let names = p.set_names();
    if names.len() == 2 {
        names.into_iter().find(|n| n != tile)
    } else {
        None
    }
}

pub fn cmd_check_universal(
    path: &str,
    tile: &str,
    gamma: Option<&str>,
    complement: Option<&str>,
) -> ReportDocument {
    run("check-universal", Some(path), |r| {
        let p = load(path)?;
        let a = p.grid_set(tile)?;
        let comp_name = complement
            .map(str::to_string)
            .or_else(|| default_complement(&p, tile));
        let comp = comp_name.as_deref().map(|n| p.grid_set(n)).transpose()?;
        let s = p.spectrum_candidate(gamma)?;
        r.verdict =
            check_universal_spectrum(&TilingInstance::new(a.clone(), comp), &s).map_err(lib)?;
        r.data = json!({
            "tile": tile,
            "complement": comp_name,
            "gamma": gamma.unwrap_or("(file)"),
            "gamma_size": s.len(),
            "tile_size": a.len(),
        });
        Ok(())
    })
}

pub fn cmd_check_spectrum(path: &str, set: &str, gamma: Option<&str>) -> ReportDocument {
    run("check-spectrum", Some(path), |r| {
        let p = load(path)?;
        let b = p.grid_set(set)?;
        let s = p.spectrum_candidate(gamma)?;
        r.verdict = check_spectrum_pair(&b, &s).map_err(lib)?;
        r.data = json!({ "set": set, "gamma": gamma.unwrap_or("(file)") });
        Ok(())
    })
}

pub fn cmd_check_tijdeman(path: &str) -> ReportDocument {
    run("check-tijdeman", Some(path), |r| {
        let p = load(path)?;
        let (a, b) = (p.cyclic_set("A")?, p.cyclic_set("B")?);
        r.verdict = check_tijdeman_counterexample(&a, &b).map_err(lib)?;
        let certified = r.verdict.pass();
        r.data = json!({
            "modulus": a.modulus(),
            "conclusion": if certified {
                "counterexample certified"
            } else {
                "not a counterexample"
            },
        });
        Ok(())
    })
}

pub fn cmd_enumerate_complements(
    path: &str,
    set: &str,
    limit: Option<usize>,
    budget: Option<u64>,
    full: bool,
) -> ReportDocument {
    run("enumerate-complements", Some(path), |r| {
        let p = load(path)?;
        let a = p.cyclic_set(set)?;
        let mut stream = enumerate_complements(&a, limit).with_node_budget(budget);
        let found: Vec<Vec<usize>> = stream.by_ref().map(|b| b.elements().to_vec()).collect();
        if let Some(d) = stream.diagnostic() {
            r.verdict.fail(
                "tile size divides modulus",
                vec![a.len() as i64],
                d.to_string(),
            );
        }
        if stream.status() == StreamStatus::BudgetExhausted {
            r.status = Status::Inconclusive;
        }
        r.data = json!({
            "set": set,
            "count": found.len(),
            "stream": format!("{:?}", stream.status()),
            "nodes": stream.nodes(),
            "complements": listing(&found, full),
        });
        Ok(())
    })
}

pub fn cmd_check_quasiperiodic(path: &str, budget: u64) -> ReportDocument {
    run("check-quasiperiodic", Some(path), |r| {
        let p = load(path)?;
        let (a, b) = (p.cyclic_set("A")?, p.cyclic_set("B")?);
        r.verdict = quasiperiodic_verdict(&p, &a, &b, budget, &mut r.status)?;
        Ok(())
    })
}

fn oriented<'s>(side: Side, a: &'s CyclicSet, b: &'s CyclicSet) -> (&'s CyclicSet, &'s CyclicSet) {
    match side {
        Side::B => (a, b),
        Side::A => (b, a),
    }
}

fn quasiperiodic_verdict(
    p: &ProblemFile,
    a: &CyclicSet,
    b: &CyclicSet,
    budget: u64,
    status: &mut Status,
) -> Result<Verdict, CliError> {
    let mut v = Verdict::new();
    let f = is_factorization(a, b).map_err(lib)?;
    if !f.pass() {
        v.absorb("factorization", f);
        return Ok(v);
    }
    if let Some((side, w)) = p.quasiperiodic_witness()? {
        let (x, y) = oriented(side, a, b);
        v.absorb(
            "supplied witness",
            verify_quasiperiodic(x, y, &w).map_err(lib)?,
        );
    }
    match search_quasiperiodic(a, b, budget).map_err(lib)? {
        QuasiSearch::Found {
            side,
            witness,
            nodes,
        } => {
            let (x, y) = oriented(side, a, b);
            let check = verify_quasiperiodic(x, y, &witness).map_err(lib)?;
            let mut witness_values = vec![witness.subgroup.len() as i64];
            witness_values.extend(witness.subgroup.as_i64());
            v.record(
                "search",
                check.pass(),
                witness_values,
                format!(
                    "partition of {side:?} over H = {} after {nodes} nodes; blocks {}",
                    witness.subgroup,
                    witness
                        .partition
                        .iter()
                        .map(|s| format!("{:?}", s.elements()))
                        .collect::<Vec<_>>()
                        .join(" | ")
                ),
            );
        }
        QuasiSearch::NoWitness { nodes } => v.fail(
            "search",
            vec![nodes as i64],
            "no cyclic subgroup admits a block partition of either factor",
        ),
        QuasiSearch::Inconclusive { nodes } => {
            *status = Status::Inconclusive;
            v.ok(
                "search",
                vec![nodes as i64],
                "budget exhausted before a decision",
            );
        }
    }
    Ok(v)
}

pub fn cmd_necessity(path: &str, set: &str, budget: u64, full: bool) -> ReportDocument {
    run("necessity", Some(path), |r| {
        let p = load(path)?;
        let a = p.cyclic_set(set)?;
        let report = necessity_witnesses(&a, Some(budget)).map_err(lib)?;
        let (mut found, mut none, mut open) = (0, 0, 0);
        for e in &report.entries {
            match e.status {
                NecessityStatus::WitnessFound { .. } => found += 1,
                NecessityStatus::ExhaustedNoWitness => none += 1,
                NecessityStatus::BudgetInconclusive => open += 1,
            }
        }
        if open > 0 {
            r.status = Status::Inconclusive;
        }
        r.verdict.ok(
            "necessity evidence gathered",
            vec![found, none, open],
            format!("{found} witnessed, {none} without witness, {open} inconclusive"),
        );
        let entries = serde_json::to_value(&report.entries).expect("entries serialize");
        let entries: Vec<_> = entries.as_array().cloned().unwrap_or_default();
        r.data = json!({
            "complements_examined": report.complements_examined,
            "nodes": report.nodes,
            "exhaustive": report.exhaustive,
            "entries": listing(&entries, full),
        });
        Ok(())
    })
}

/// Membership in the zero set of `{0,36,72,108,144} ⊕ {0,100,200} ⊕ {0,225}` via its
/// factored form: `5 ∥ k`, `3 ∥ k` or `2 ∥ k`.
pub fn valuation_zero_predicate(k: usize) -> bool {
    (k.is_multiple_of(5) && !k.is_multiple_of(25))
        || (k.is_multiple_of(3) && !k.is_multiple_of(9))
        || (k.is_multiple_of(2) && !k.is_multiple_of(4))
}

/// Replaces an error caused by a non-factorization with a failed check carrying the
/// collision or gap witness.
fn step(
    v: &mut Verdict,
    name: &str,
    a: &CyclicSet,
    b: &CyclicSet,
    result: Result<Verdict, Error>,
) -> Result<(), CliError> {
    match result {
        Ok(inner) => {
            let failed = inner.first_failure().cloned();
            match failed {
                None => v.ok(
                    name,
                    vec![],
                    format!("{} checks passed", inner.checks.len()),
                ),
                Some(c) => v.fail(name, c.witness, format!("{}: {}", c.name, c.detail)),
            }
            Ok(())
        }
        Err(Error::NotAFactorization(msg)) => {
            let f = is_factorization(a, b).map_err(lib)?;
            let w = f
                .first_failure()
                .map(|c| c.witness.clone())
                .unwrap_or_else(|| vec![a.len() as i64, b.len() as i64]);
            v.fail(name, w, format!("not a factorization: {msg}"));
            Ok(())
        }
        Err(e) => Err(lib(e)),
    }
}

/// The seven reproduction checks on a problem holding `A`, `B` and a witness.
pub fn verify_paper_with(p: &ProblemFile) -> Result<Verdict, CliError> {
    let (a, b) = (p.cyclic_set("A")?, p.cyclic_set("B")?);
    let m = a.modulus();
    let (ga, gb) = (GridSet::from(&a), GridSet::from(&b));
    let mut v = Verdict::new();

    step(
        &mut v,
        "Tijdeman counterexample",
        &a,
        &b,
        check_tijdeman_counterexample(&a, &b),
    )?;

    if p.quasiperiodic_witness()?.is_none() {
        v.fail(
            "quasiperiodic factorization",
            vec![m as i64],
            "no witness in the problem file",
        );
    } else {
        let mut status = Status::Pass;
        let res = quasiperiodic_verdict(p, &a, &b, DEFAULT_BUDGET, &mut status);
        step(&mut v, "quasiperiodic factorization", &a, &b, Ok(res?))?;
    }

    let za = zero_set(&a).map_err(lib)?;
    match (1..m).find(|&k| za.table()[k] != valuation_zero_predicate(k)) {
        None => v.ok(
            "zero set of f_A by valuation conditions",
            vec![],
            format!("{} zeros, orders {:?}", za.count(), za.vanishing_orders()),
        ),
        Some(k) => v.fail(
            "zero set of f_A by valuation conditions",
            vec![k as i64],
            format!("residue {k} disagrees"),
        ),
    }

    step(
        &mut v,
        "complementary zeros f_A f_B = 0",
        &a,
        &b,
        verify_complementary_zeros(&ga, &gb),
    )?;
    step(
        &mut v,
        "zero sets partition the nonzero residues",
        &a,
        &b,
        verify_zero_complement(&a, &b),
    )?;

    for (name, tile, other) in [("A", &ga, &gb), ("B", &gb, &ga)] {
        let s = p.spectrum_candidate(Some(name))?;
        let t = TilingInstance::new(tile.clone(), Some(other.clone()));
        let res = check_universal_spectrum(&t, &s);
        step(
            &mut v,
            &format!("universal spectrum {m}Z + {name} for T_{name}"),
            &a,
            &b,
            res,
        )?;
    }
    Ok(v)
}

pub fn cmd_verify_paper() -> ReportDocument {
    run("verify-paper", Some(PAPER_900_NAME), |r| {
        r.verdict = verify_paper_with(&ProblemFile::paper_900())?;
        Ok(())
    })
}
