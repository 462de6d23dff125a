//! Finite sets in Z_{N1} × … × Z_{Nn} and the per-point zero test for their exponential sums.

use std::collections::HashSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::vanishes_at_primitive_root;
use crate::error::{Error, Result, MAX_MODULUS};
use crate::group::CyclicSet;
use crate::poly::IntPolynomial;
use crate::verdict::Verdict;

/// A set `{(c_1/N_1, …, c_n/N_n)}` stored by its numerators `0 ≤ c_j < N_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSet {
    moduli: Vec<usize>,
    points: Vec<Vec<usize>>,
}

pub(crate) fn check_moduli(moduli: &[usize]) -> Result<usize> {
    if moduli.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    let mut order = 1usize;
    for &n in moduli {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        order = order
            .checked_mul(n)
            .filter(|&o| o <= MAX_MODULUS)
            .ok_or(Error::ModulusTooLarge(usize::MAX))?;
    }
    Ok(order)
}

impl GridSet {
    /// Points must be in range and pairwise distinct.
    pub fn new(moduli: Vec<usize>, points: Vec<Vec<i64>>) -> Result<Self> {
        check_moduli(&moduli)?;
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != moduli.len() {
                return Err(Error::DimensionMismatch {
                    expected: moduli.len(),
                    got: p.len(),
                });
            }
            if p.iter()
                .zip(&moduli)
                .any(|(&c, &n)| c < 0 || c as usize >= n)
            {
                return Err(Error::PointOutOfRange { point: p, moduli });
            }
            if !seen.insert(p.clone()) {
                return Err(Error::DuplicateEntry(p));
            }
            out.push(p.into_iter().map(|c| c as usize).collect());
        }
        Ok(Self {
            moduli,
            points: out,
        })
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn points(&self) -> &[Vec<usize>] {
        &self.points
    }

    pub fn dimension(&self) -> usize {
        self.moduli.len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `N_1 ⋯ N_n`.
    pub fn group_order(&self) -> usize {
        self.moduli.iter().product()
    }

    /// Mixed-radix index of a point, first coordinate most significant.
    pub(crate) fn flatten(&self, point: &[usize]) -> usize {
        point
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&c, &n)| acc * n + c)
    }

    pub(crate) fn unflatten(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &n) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = index % n;
            index /= n;
        }
        out
    }
}

impl From<&CyclicSet> for GridSet {
    fn from(set: &CyclicSet) -> Self {
        Self {
            moduli: vec![set.modulus()],
            points: set.iter().map(|e| vec![e]).collect(),
        }
    }
}

/// Whether `f_A(k) = Σ_c exp(2πi Σ_j k_j c_j / N_j)` vanishes.
///
/// With `L = lcm(N)`, each term is `ζ_L^{e(c)}` where `e(c) = Σ_j k_j c_j L/N_j mod L`.
/// The exponent-sum polynomial is divided through by the common gcd of the exponents and
/// `L`, then tested for divisibility by the cyclotomic polynomial of the remaining order.
pub fn grid_is_zero(a: &GridSet, k: &[i64]) -> Result<bool> {
    if k.len() != a.dimension() {
        return Err(Error::DimensionMismatch {
            expected: a.dimension(),
            got: k.len(),
        });
    }
    let l = a.moduli.iter().fold(1usize, |acc, &n| acc.lcm(&n));
    let li = l as i128;
    let exponents: Vec<usize> = a
        .points
        .iter()
        .map(|c| {
            let mut e: i128 = 0;
            for ((&kj, &cj), &nj) in k.iter().zip(c).zip(&a.moduli) {
                let term = (kj as i128).rem_euclid(li) * cj as i128 % li * (l / nj) as i128;
                e = (e + term) % li;
            }
            e as usize
        })
        .collect();
    let g = exponents.iter().fold(l, |acc, &e| acc.gcd(&e));
    if g == l {
        return Ok(false);
    }
    let order = l / g;
    let mut coeffs = vec![0i64; order];
    for e in exponents {
        coeffs[e / g] += 1;
    }
    vanishes_at_primitive_root(&IntPolynomial::new(coeffs), order)
}

/// Whether every element of the grid group is uniquely `a + b`.
pub fn grid_is_factorization(a: &GridSet, b: &GridSet) -> Result<Verdict> {
    if a.moduli != b.moduli {
        return Err(Error::ModulusMismatch {
            left: a.moduli.clone(),
            right: b.moduli.clone(),
        });
    }
    let order = a.group_order();
    let mut v = Verdict::new();
    v.record(
        "cardinality",
        a.len() * b.len() == order,
        vec![a.len() as i64, b.len() as i64, order as i64],
        format!("|A|·|B| = {}, group order = {order}", a.len() * b.len()),
    );
    let mut owner: Vec<Option<(usize, usize)>> = vec![None; order];
    for (i, pa) in a.points.iter().enumerate() {
        for (j, pb) in b.points.iter().enumerate() {
            let sum: Vec<usize> = pa
                .iter()
                .zip(pb)
                .zip(&a.moduli)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect();
            let idx = a.flatten(&sum);
            if let Some((i0, j0)) = owner[idx] {
                let mut w: Vec<i64> = Vec::new();
                for p in [&a.points[i0], &b.points[j0], pa, pb] {
                    w.extend(p.iter().map(|&c| c as i64));
                }
                v.fail(
                    "unique sums",
                    w,
                    format!(
                        "{:?} + {:?} = {:?} + {:?}",
                        a.points[i0], b.points[j0], pa, pb
                    ),
                );
                return Ok(v);
            }
            owner[idx] = Some((i, j));
        }
    }
    v.ok("unique sums", vec![], "all sums are distinct");
    match owner.iter().position(Option::is_none) {
        None => v.ok("covers group", vec![], "every element is a sum"),
        Some(idx) => {
            let p = a.unflatten(idx);
            v.fail(
                "covers group",
                p.iter().map(|&c| c as i64).collect(),
                format!("{p:?} is not a sum"),
            )
        }
    }
    Ok(v)
}
