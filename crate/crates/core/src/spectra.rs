//! Spectral-pair and universal-spectrum criteria for periodic tiling sets
//! `T = Z^n + A`, `A ⊆ (1/N_1)Z × … × (1/N_n)Z`, with candidate spectra
//! `Λ = (N_1Z × … × N_nZ) + Γ`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cancel::Cancellation;
use crate::cyclotomic::zero_set;
use crate::error::{Error, Result};
use crate::grid::{check_moduli, grid_is_factorization, grid_is_zero, GridSet};
use crate::group::{gcd_witness, is_factorization, set_gcd, CyclicSet, IntegerList};
use crate::par;
use crate::verdict::Verdict;

/// `Γ ⊆ Z^n` together with the lattice moduli.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumCandidate {
    moduli: Vec<usize>,
    gamma: Vec<Vec<i64>>,
}

impl SpectrumCandidate {
    pub fn new(moduli: Vec<usize>, gamma: Vec<Vec<i64>>) -> Result<Self> {
        check_moduli(&moduli)?;
        if gamma.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut seen = HashSet::new();
        for g in &gamma {
            if g.len() != moduli.len() {
                return Err(Error::DimensionMismatch {
                    expected: moduli.len(),
                    got: g.len(),
                });
            }
            if !seen.insert(g) {
                return Err(Error::DuplicateEntry(g.clone()));
            }
        }
        Ok(Self { moduli, gamma })
    }

    pub fn one_dimensional(modulus: usize, gamma: &IntegerList) -> Result<Self> {
        Self::new(
            vec![modulus],
            gamma.values().iter().map(|&g| vec![g]).collect(),
        )
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn gamma(&self) -> &[Vec<i64>] {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }
}

/// A tile set `A` and, optionally, a known complement `B` with `A ⊕ B` the whole grid group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingInstance {
    pub tile: GridSet,
    pub complement: Option<GridSet>,
}

impl TilingInstance {
    pub fn new(tile: GridSet, complement: Option<GridSet>) -> Self {
        Self { tile, complement }
    }

    pub fn moduli(&self) -> &[usize] {
        self.tile.moduli()
    }
}

fn require_same(left: &[usize], right: &[usize]) -> Result<()> {
    if left != right {
        return Err(Error::ModulusMismatch {
            left: left.to_vec(),
            right: right.to_vec(),
        });
    }
    Ok(())
}

/// Distinct difference classes of Γ − Γ modulo the lattice, each with one representative
/// true difference. Index 0 (the zero class) is reported separately as a lattice collision.
struct Differences {
    /// (representative difference, reduced residue vector) for every nonzero class.
    classes: Vec<(Vec<i64>, Vec<i64>)>,
    /// Two distinct γ in the same class, if any.
    collision: Option<(Vec<i64>, Vec<i64>)>,
}

fn differences(grid: &GridSet, gamma: &[Vec<i64>]) -> Differences {
    let moduli = grid.moduli();
    let reduce = |v: &[i64]| -> Vec<usize> {
        v.iter()
            .zip(moduli)
            .map(|(&x, &n)| x.rem_euclid(n as i64) as usize)
            .collect()
    };
    let residues: Vec<Vec<usize>> = gamma.iter().map(|g| reduce(g)).collect();
    let mut first: Vec<Option<(usize, usize)>> = vec![None; grid.group_order()];
    let mut collision = None;
    for (i, ri) in residues.iter().enumerate() {
        for (j, rj) in residues.iter().enumerate() {
            if i == j {
                continue;
            }
            let r: Vec<usize> = ri
                .iter()
                .zip(rj)
                .zip(moduli)
                .map(|((&x, &y), &n)| (x + n - y) % n)
                .collect();
            let idx = grid.flatten(&r);
            if idx == 0 {
                if collision.is_none() {
                    collision = Some((gamma[i].clone(), gamma[j].clone()));
                }
                continue;
            }
            if first[idx].is_none() {
                first[idx] = Some((i, j));
            }
        }
    }
    let classes = first
        .iter()
        .enumerate()
        .filter_map(|(idx, p)| {
            p.map(|(i, j)| {
                let diff: Vec<i64> = gamma[i].iter().zip(&gamma[j]).map(|(x, y)| x - y).collect();
                let residue = grid.unflatten(idx).into_iter().map(|c| c as i64).collect();
                (diff, residue)
            })
        })
        .collect();
    Differences { classes, collision }
}

fn record_distinct(v: &mut Verdict, d: &Differences, count: usize) {
    match &d.collision {
        None => v.ok(
            "distinct residues",
            vec![],
            format!("{count} elements of Γ are distinct modulo the lattice"),
        ),
        Some((x, y)) => {
            let mut w = x.clone();
            w.extend(y);
            v.fail(
                "distinct residues",
                w,
                format!("{x:?} and {y:?} differ by a lattice vector"),
            )
        }
    }
}

/// First difference class whose zero status equals `bad`.
fn first_offender(
    grid: &GridSet,
    d: &Differences,
    bad: bool,
    cancel: &Cancellation,
) -> Result<Option<Vec<i64>>> {
    let found = par::find_first(d.classes.len(), |i| {
        if cancel.is_cancelled() {
            return Some(Err(Error::Cancelled));
        }
        let (diff, residue) = &d.classes[i];
        match grid_is_zero(grid, residue) {
            Ok(z) if z == bad => Some(Ok(diff.clone())),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        }
    });
    found.transpose()
}

/// Whether `Λ = lattice + Γ` is a spectrum for `Ω = box + B`: `|Γ| = |B|`, Γ distinct modulo
/// the lattice, and every nonzero difference of Γ is a zero of `f_B`.
pub fn check_spectrum_pair(b: &GridSet, s: &SpectrumCandidate) -> Result<Verdict> {
    check_spectrum_pair_with_cancel(b, s, &Cancellation::none())
}

pub fn check_spectrum_pair_with_cancel(
    b: &GridSet,
    s: &SpectrumCandidate,
    cancel: &Cancellation,
) -> Result<Verdict> {
    require_same(b.moduli(), s.moduli())?;
    let mut v = Verdict::new();
    v.record(
        "cardinality",
        s.len() == b.len(),
        vec![s.len() as i64, b.len() as i64],
        format!("|Γ| = {}, |B| = {}", s.len(), b.len()),
    );
    let d = differences(b, s.gamma());
    record_distinct(&mut v, &d, s.len());
    match first_offender(b, &d, false, cancel)? {
        None => v.ok(
            "differences are zeros of f_B",
            vec![],
            format!("{} difference classes checked", d.classes.len()),
        ),
        Some(diff) => v.fail(
            "differences are zeros of f_B",
            diff.clone(),
            format!("f_B does not vanish at {diff:?}"),
        ),
    }
    Ok(v)
}

/// Sufficient condition for `Λ` to be a universal spectrum of `T = Z^n + A`:
/// `|Γ| = N_1⋯N_n / |A|`, Γ distinct modulo the lattice, and no nonzero difference of Γ
/// is a zero of `f_A`.
pub fn check_universal_spectrum(t: &TilingInstance, s: &SpectrumCandidate) -> Result<Verdict> {
    check_universal_spectrum_with_cancel(t, s, &Cancellation::none())
}

pub fn check_universal_spectrum_with_cancel(
    t: &TilingInstance,
    s: &SpectrumCandidate,
    cancel: &Cancellation,
) -> Result<Verdict> {
    let a = &t.tile;
    require_same(a.moduli(), s.moduli())?;
    let order = a.group_order();
    if !order.is_multiple_of(a.len()) {
        return Err(Error::SizeNotDivisor {
            size: a.len(),
            order,
        });
    }
    let mut v = Verdict::new();
    match &t.complement {
        Some(b) => {
            let f = grid_is_factorization(a, b)?;
            if f.pass() {
                v.note("tiling-existence", "verified");
            } else {
                v.absorb("supplied complement", f);
                v.note("tiling-existence", "supplied complement rejected");
            }
        }
        None => v.note("tiling-existence", "assumed"),
    }
    let want = order / a.len();
    v.record(
        "cardinality",
        s.len() == want,
        vec![s.len() as i64, want as i64],
        format!("|Γ| = {}, N/|A| = {order}/{} = {want}", s.len(), a.len()),
    );
    let d = differences(a, s.gamma());
    record_distinct(&mut v, &d, s.len());
    match first_offender(a, &d, true, cancel)? {
        None => v.ok(
            "differences avoid Z(f_A)",
            vec![],
            format!("{} difference classes checked", d.classes.len()),
        ),
        Some(diff) => v.fail(
            "differences avoid Z(f_A)",
            diff.clone(),
            format!("f_A vanishes at {diff:?}"),
        ),
    }
    Ok(v)
}

/// For a factorization `A ⊕ B`, every nonzero `k` modulo the lattice is a zero of
/// `f_A` or of `f_B`.
pub fn verify_complementary_zeros(a: &GridSet, b: &GridSet) -> Result<Verdict> {
    verify_complementary_zeros_with_cancel(a, b, &Cancellation::none())
}

pub fn verify_complementary_zeros_with_cancel(
    a: &GridSet,
    b: &GridSet,
    cancel: &Cancellation,
) -> Result<Verdict> {
    let f = grid_is_factorization(a, b)?;
    if let Some(c) = f.first_failure() {
        return Err(Error::NotAFactorization(format!(
            "{}: {}",
            c.name, c.detail
        )));
    }
    let order = a.group_order();
    let offender = par::find_first(order, |idx| {
        if idx == 0 {
            return None;
        }
        if cancel.is_cancelled() {
            return Some(Err(Error::Cancelled));
        }
        let k: Vec<i64> = a.unflatten(idx).into_iter().map(|c| c as i64).collect();
        let hit = grid_is_zero(a, &k).and_then(|za| Ok(za || grid_is_zero(b, &k)?));
        match hit {
            Ok(true) => None,
            Ok(false) => Some(Ok(k)),
            Err(e) => Some(Err(e)),
        }
    })
    .transpose()?;
    let mut v = Verdict::new();
    match offender {
        None => v.ok(
            "f_A(k) f_B(k) = 0",
            vec![],
            format!("all {} nonzero residues covered", order - 1),
        ),
        Some(k) => v.fail(
            "f_A(k) f_B(k) = 0",
            k.clone(),
            format!("neither f_A nor f_B vanishes at {k:?}"),
        ),
    }
    Ok(v)
}

/// Whether the nonzero residues split exactly into zeros of `f_A` and zeros of `f_B`.
pub fn verify_zero_complement(a: &CyclicSet, b: &CyclicSet) -> Result<Verdict> {
    verify_zero_complement_with_cancel(a, b, &Cancellation::none())
}

pub fn verify_zero_complement_with_cancel(
    a: &CyclicSet,
    b: &CyclicSet,
    cancel: &Cancellation,
) -> Result<Verdict> {
    require_same(&[a.modulus()], &[b.modulus()])?;
    let za = zero_set(a)?;
    cancel.checkpoint()?;
    let zb = zero_set(b)?;
    let m = a.modulus();
    let mut v = Verdict::new();
    let bad = (1..m).find(|&k| za.table()[k] == zb.table()[k]);
    match bad {
        None => v.ok(
            "exclusive zero partition",
            vec![],
            format!(
                "{} zeros of f_A and {} zeros of f_B partition [1, {m})",
                za.count(),
                zb.count()
            ),
        ),
        Some(k) => {
            let which = if za.table()[k] {
                "both vanish"
            } else {
                "neither vanishes"
            };
            v.fail(
                "exclusive zero partition",
                vec![k as i64],
                format!("at k = {k} {which}"),
            )
        }
    }
    Ok(v)
}

/// Certifies `(A, B)` as a counterexample to Tijdeman's conjecture modulo `m`: both sets
/// contain 0, `A ⊕ B = Z/mZ`, and both have gcd 1.
pub fn check_tijdeman_counterexample(a: &CyclicSet, b: &CyclicSet) -> Result<Verdict> {
    let mut v = Verdict::new();
    for (name, s) in [("A", a), ("B", b)] {
        v.record(
            format!("0 in {name}"),
            s.contains(0),
            vec![s.min() as i64],
            format!("min({name}) = {}", s.min()),
        );
    }
    v.absorb("factorization", is_factorization(a, b)?);
    for (name, s) in [("A", a), ("B", b)] {
        let g = set_gcd(s);
        let mut witness: Vec<i64> = gcd_witness(s).into_iter().map(|x| x as i64).collect();
        if witness.is_empty() {
            witness.push(0);
        }
        v.record(
            format!("gcd({name}) = 1"),
            g == 1,
            witness.clone(),
            format!("gcd({name}) = {g}, realized by {witness:?}"),
        );
    }
    Ok(v)
}
