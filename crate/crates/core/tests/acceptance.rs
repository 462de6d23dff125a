// Acceptance suite for the mod-900 reproduction and the small-scale sweeps. Runs without the
// libtest harness so every criterion prints its own PASS/FAIL line.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use cyclotile::cli::ProblemFile;
use cyclotile::cli::{cmd_check_tijdeman, Status};
use cyclotile::search::{
    enumerate_complements, search_quasiperiodic, verify_quasiperiodic, QuasiSearch, Side,
};
use cyclotile::spectra::{
    check_universal_spectrum, verify_complementary_zeros, verify_zero_complement,
    SpectrumCandidate, TilingInstance,
};
use cyclotile::{
    cyclotomic_polynomial, divisors, eval_float, is_factorization, set_gcd, zero_set, CyclicSet,
    GridSet, IntPolynomial,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn random_set(rng: &mut ChaCha8Rng, m: usize, size: usize) -> CyclicSet {
    let xs: Vec<usize> = sample(rng, m, size).into_iter().collect();
    CyclicSet::new(m as i64, xs.into_iter().map(|x| x as i64)).unwrap()
}

fn tijdeman_reproduction() -> Outcome {
    let start = Instant::now();
    let (a, b) = bundled_pair();
    ensure(
        a.modulus() == 900 && a.len() == 30 && b.len() == 30,
        "unexpected sizes",
    )?;
    ensure(
        brute_is_factorization(900, a.elements(), b.elements()),
        "oracle: sums are not a factorization",
    )?;
    ensure(
        is_factorization(&a, &b).unwrap().pass(),
        "is_factorization failed",
    )?;
    ensure(set_gcd(&a) == 1 && set_gcd(&b) == 1, "gcd is not 1")?;
    ensure(a.contains(0) && b.contains(0), "0 missing")?;
    let report = cmd_check_tijdeman("@paper-900");
    ensure(
        report.status == Status::Pass,
        "cmd_check_tijdeman did not pass",
    )?;
    ensure(
        report.data["conclusion"] == "counterexample certified",
        "missing certification",
    )?;
    let gcd_b = report
        .verdict
        .check("gcd(B) = 1")
        .ok_or("no gcd(B) check")?;
    ensure(
        gcd_b.witness == [126, 220, 375],
        format!("gcd(B) witness {:?}", gcd_b.witness),
    )?;
    let t = within(Duration::from_secs(1), start)?;
    Ok(format!("900 sums distinct, gcds 1, certified in {t:?}"))
}

fn zero_set_characterization() -> Outcome {
    let (a, _) = bundled_pair();
    let exact = zero_set(&a).unwrap().residues();
    let expected: Vec<usize> = (1..900).filter(|&k| valuation_predicate(k)).collect();
    if exact != expected {
        let diff = (1..900)
            .find(|k| exact.contains(k) != expected.contains(k))
            .unwrap();
        return Err(format!("first disagreement at k = {diff}"));
    }
    Ok(format!(
        "{} residues agree with the predicate scan",
        exact.len()
    ))
}

fn universal(tile: &CyclicSet, other: &CyclicSet, gamma: &CyclicSet) -> Result<(), String> {
    let t = TilingInstance::new(GridSet::from(tile), Some(GridSet::from(other)));
    let s = SpectrumCandidate::one_dimensional(900, &gamma.lifting()).unwrap();
    let v = check_universal_spectrum(&t, &s).map_err(|e| e.to_string())?;
    match v.first_failure() {
        None => Ok(()),
        Some(c) => Err(format!("{}: {}", c.name, c.detail)),
    }
}

fn universal_spectrum_for_a() -> Outcome {
    let start = Instant::now();
    let (a, b) = bundled_pair();
    universal(&a, &b, &a)?;
    // Independent view of the same criterion: no difference of A is a zero.
    let za: Vec<bool> = (0..900).map(valuation_predicate).collect();
    for (&x, &y) in a.elements().iter().tuple_combinations() {
        ensure(!za[(y + 900 - x) % 900], format!("{y} - {x} is a zero"))?;
    }
    let t = within(Duration::from_secs(1), start)?;
    Ok(format!("Γ = A passes in {t:?}"))
}

fn universal_spectrum_for_b() -> Outcome {
    let (a, b) = bundled_pair();
    universal(&b, &a, &b)?;
    let v = verify_zero_complement(&a, &b).unwrap();
    ensure(v.pass(), "zero complement failed")?;
    let (za, zb) = (zero_set(&a).unwrap(), zero_set(&b).unwrap());
    for k in 1..900 {
        ensure(
            za.table()[k] != zb.table()[k],
            format!("k = {k} is not in exactly one zero set"),
        )?;
    }
    Ok(format!(
        "Γ = B passes; {} + {} zeros partition 899 residues",
        za.count(),
        zb.count()
    ))
}

fn quasiperiodicity() -> Outcome {
    let p = ProblemFile::paper_900();
    let (a, b) = bundled_pair();
    let (side, w) = p
        .quasiperiodic_witness()
        .unwrap()
        .ok_or("no bundled witness")?;
    ensure(side == Side::B, "bundled witness should partition B")?;
    ensure(w.subgroup.elements() == [0, 300, 600], "bundled H")?;
    ensure(
        verify_quasiperiodic(&a, &b, &w).unwrap().pass(),
        "bundled witness fails",
    )?;
    match search_quasiperiodic(&a, &b, 10_000_000).unwrap() {
        QuasiSearch::Found {
            side,
            witness,
            nodes,
        } => {
            let v = match side {
                Side::B => verify_quasiperiodic(&a, &b, &witness),
                Side::A => verify_quasiperiodic(&b, &a, &witness),
            };
            ensure(v.unwrap().pass(), "searched witness fails")?;
            Ok(format!(
                "bundled witness verifies; search found |H| = {} on {side:?} in {nodes} nodes",
                witness.subgroup.len()
            ))
        }
        other => Err(format!("search returned {other:?}")),
    }
}

fn complementary_zeros_sweep() -> Outcome {
    let (a, b) = bundled_pair();
    let v = verify_complementary_zeros(&GridSet::from(&a), &GridSet::from(&b)).unwrap();
    ensure(v.pass(), "fails on the mod-900 pair")?;
    let mut pairs = 0usize;
    for m in 1..=36usize {
        for size in (1..=4).filter(|s| m % s == 0) {
            for rest in (1..m).combinations(size - 1) {
                let mut xs = vec![0];
                xs.extend(rest);
                let a = set(m, &xs);
                for b in enumerate_complements(&a, None) {
                    ensure(
                        brute_is_factorization(m, a.elements(), b.elements()),
                        format!("stream produced a non-complement {b} of {a}"),
                    )?;
                    let v =
                        verify_complementary_zeros(&GridSet::from(&a), &GridSet::from(&b)).unwrap();
                    ensure(v.pass(), format!("fails on {a} ⊕ {b}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!(
        "mod-900 pair and {pairs} small factorization pairs"
    ))
}

fn float_oracle() -> Outcome {
    let (a, b) = bundled_pair();
    let mut cases = vec![a, b];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for _ in 0..100 {
        let m = rng.gen_range(1..=500);
        let size = rng.gen_range(1..=m.min(50));
        cases.push(random_set(&mut rng, m, size));
    }
    let mut checked = 0usize;
    let mut smallest_nonzero = f64::INFINITY;
    for c in &cases {
        let table = zero_set(c).unwrap();
        for k in 0..c.modulus() {
            let mag = float_magnitude(c.modulus(), c.elements(), k);
            let exact_zero = k > 0 && table.table()[k];
            ensure(
                exact_zero == (mag < 1e-6),
                format!("{c} at k = {k}: exact {exact_zero}, |f| = {mag:e}"),
            )?;
            ensure(
                (eval_float(c, k as i64) - mag).abs() < 1e-9,
                format!("eval_float disagrees at k = {k}"),
            )?;
            if !exact_zero {
                smallest_nonzero = smallest_nonzero.min(mag);
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} residues over {} sets; smallest nonzero |f| = {smallest_nonzero:.3e}",
        cases.len()
    ))
}

/// A tile of `Z/mZ`: `{0, d, …, (r−1)d}` with `rd | m`, dilated by a unit and translated.
fn random_tile(rng: &mut ChaCha8Rng, m: usize, r: usize) -> CyclicSet {
    let ds: Vec<usize> = divisors(m / r);
    let d = ds[rng.gen_range(0..ds.len())];
    let units: Vec<usize> = (1..=m).filter(|&u| gcd(u, m) == 1).collect();
    let u = units[rng.gen_range(0..units.len())];
    let t = rng.gen_range(0..m);
    let xs: Vec<usize> = (0..r).map(|i| (i * d * u + t) % m).collect();
    set(m, &xs)
}

/// Cases whose scan finds more exact covers than this are skipped; tiles such as
/// `{0, 30} mod 60` have 2^29 complements.
const SCAN_CAP: usize = 50_000;

fn complement_oracle() -> Outcome {
    let mut total = 0usize;
    let mut tiles = 0usize;
    let mut cases = 0usize;
    let mut skipped = Vec::new();
    for seed in 0u64.. {
        if cases == 50 {
            break;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(2..=60usize);
        let sizes: Vec<usize> = (1..=6).filter(|s| m % s == 0).collect();
        let r = sizes[rng.gen_range(0..sizes.len())];
        let a = if seed % 2 == 0 {
            random_tile(&mut rng, m, r)
        } else {
            random_set(&mut rng, m, r)
        };
        let Some(expected) = brute_complements(m, a.elements(), SCAN_CAP) else {
            skipped.push(seed);
            continue;
        };
        cases += 1;
        let got: Vec<Vec<usize>> = enumerate_complements(&a, None)
            .map(|b| b.elements().to_vec())
            .collect();
        ensure(
            got == expected,
            format!(
                "seed {seed}: {a} has {} complements by scan, stream gave {}",
                expected.len(),
                got.len()
            ),
        )?;
        total += got.len();
        tiles += usize::from(!got.is_empty());
    }
    Ok(format!(
        "50 cases ({tiles} tiles), {total} complements match in order; seeds {skipped:?} over cap"
    ))
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for _ in 0..60 {
        let m = rng.gen_range(1..=300usize);
        let size = rng.gen_range(1..=m.min(40));
        let a = random_set(&mut rng, m, size);
        let energy: f64 = (0..m).map(|k| eval_float(&a, k as i64).powi(2)).sum();
        let want = (m * size) as f64;
        ensure(
            ((energy - want) / want).abs() < 1e-8,
            format!("Parseval on {a}: {energy} vs {want}"),
        )?;

        let z = zero_set(&a).unwrap();
        let t = rng.gen_range(-1000..1000i64);
        let shifted = zero_set(&a.translate(t)).unwrap();
        ensure(
            z.residues() == shifted.residues(),
            format!("translation by {t} on {a}"),
        )?;

        let units: Vec<usize> = (1..=m).filter(|&u| gcd(u, m) == 1).collect();
        let u = units[rng.gen_range(0..units.len())];
        let scaled = zero_set(&a.dilate(u as i64).unwrap()).unwrap();
        for k in 0..m {
            ensure(
                scaled.table()[k] == z.table()[(u * k) % m],
                format!("unit scaling by {u} on {a} at k = {k}"),
            )?;
        }
    }
    for s in 1..=1000usize {
        let mut prod = IntPolynomial::one();
        for d in divisors(s) {
            prod = prod.mul(&cyclotomic_polynomial(d).unwrap()).unwrap();
        }
        ensure(
            prod == IntPolynomial::x_pow_minus_one(s),
            format!("product fails at s = {s}"),
        )?;
    }
    Ok("Parseval, translation, unit scaling on 60 sets; Φ products for s ≤ 1000".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 Tijdeman counterexample mod 900", tijdeman_reproduction),
        (
            "2 zero set by valuation conditions",
            zero_set_characterization,
        ),
        ("3 universal spectrum 900Z + A", universal_spectrum_for_a),
        (
            "4 universal spectrum 900Z + B, zero complement",
            universal_spectrum_for_b,
        ),
        ("5 quasiperiodic witness and search", quasiperiodicity),
        ("6 complementary zeros sweep", complementary_zeros_sweep),
        ("7 exact and float zero decisions agree", float_oracle),
        ("8 complement enumeration against scan", complement_oracle),
        ("9 property suite", property_suite),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{t:.2?}]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} [{t:.2?}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
