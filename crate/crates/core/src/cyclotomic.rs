//! Cyclotomic polynomials, mask polynomials and exact zero sets of exponential sums.
//!
//! `f_A(k) = Σ_{a∈A} e^{2πika/m}` is the mask polynomial `A(x) = Σ x^a` evaluated at
//! `ζ_m^k`. That value is a primitive `s`-th root of unity with `s = m / gcd(k, m)`, so
//! `f_A(k) = 0` exactly when `Φ_s` divides `A(x)`. Every zero decision here goes through
//! that divisibility test; floating point only appears in [`eval_float`].

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_CYCLOTOMIC_ORDER};
use crate::group::CyclicSet;
use crate::par;
use crate::poly::{reduce_mod, IntPolynomial};

/// Divisors of `n` in ascending order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<IntPolynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<IntPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Φ_s(x) = (x^s − 1) / Π_{d|s, d<s} Φ_d(x)`, memoized for the process.
pub fn cyclotomic_polynomial(s: usize) -> Result<Arc<IntPolynomial>> {
    if s == 0 || s > MAX_CYCLOTOMIC_ORDER {
        return Err(Error::UnsupportedOrder(s));
    }
    if let Some(p) = cache().read().expect("cyclotomic cache poisoned").get(&s) {
        return Ok(p.clone());
    }
    let mut p = IntPolynomial::x_pow_minus_one(s);
    for d in divisors(s) {
        if d == s {
            break;
        }
        let phi = cyclotomic_polynomial(d)?;
        p = p
            .div_exact(&phi)?
            .expect("cyclotomic factor must divide x^s - 1");
    }
    let mut guard = cache().write().expect("cyclotomic cache poisoned");
    Ok(guard.entry(s).or_insert_with(|| Arc::new(p)).clone())
}

/// `Σ_{a∈A} x^a` over the canonical liftings.
pub fn mask_polynomial(a: &CyclicSet) -> IntPolynomial {
    let mut c = vec![0i64; a.max() + 1];
    for e in a.iter() {
        c[e] = 1;
    }
    IntPolynomial::new(c)
}

/// Whether `p(ζ) = 0` for a primitive `order`-th root of unity `ζ`.
pub fn vanishes_at_primitive_root(p: &IntPolynomial, order: usize) -> Result<bool> {
    let phi = cyclotomic_polynomial(order)?;
    if order == 1 {
        return Ok(p.coefficients().iter().map(|&c| c as i128).sum::<i128>() == 0);
    }
    Ok(reduce_mod(&p.fold(order)?, &phi)?.is_zero())
}

/// Whether `Φ_s` divides the mask polynomial of `A`; `s` must divide the modulus.
pub fn vanishes_at_order(a: &CyclicSet, s: usize) -> Result<bool> {
    if s == 0 || !a.modulus().is_multiple_of(s) {
        return Err(Error::OrderNotDivisor {
            order: s,
            modulus: a.modulus(),
        });
    }
    vanishes_at_primitive_root(&mask_polynomial(a), s)
}

/// Integer zeros of `f_A`, as residues modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSet {
    modulus: usize,
    zero_residues: Vec<bool>,
    vanishing_orders: Vec<usize>,
}

impl ZeroSet {
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// `S_A`: the divisors `s > 1` of `m` with `Φ_s | A(x)`, ascending.
    pub fn vanishing_orders(&self) -> &[usize] {
        &self.vanishing_orders
    }

    pub fn table(&self) -> &[bool] {
        &self.zero_residues
    }

    /// Whether `f_A(k) = 0` for the integer `k`.
    pub fn contains(&self, k: i64) -> bool {
        self.zero_residues[k.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn residues(&self) -> Vec<usize> {
        (0..self.modulus)
            .filter(|&k| self.zero_residues[k])
            .collect()
    }

    pub fn count(&self) -> usize {
        self.zero_residues.iter().filter(|&&z| z).count()
    }
}

/// Exact zero set of `f_A` on the integers, one cyclotomic test per divisor of `m`.
pub fn zero_set(a: &CyclicSet) -> Result<ZeroSet> {
    let m = a.modulus();
    let mask = mask_polynomial(a);
    let orders: Vec<usize> = divisors(m).into_iter().filter(|&s| s > 1).collect();
    let hits = par::map_slice(&orders, |&s| vanishes_at_primitive_root(&mask, s));
    let mut vanishing_orders = Vec::new();
    for (s, hit) in orders.iter().zip(hits) {
        if hit? {
            vanishing_orders.push(*s);
        }
    }
    let mut zero_residues = vec![false; m];
    for (k, slot) in zero_residues.iter_mut().enumerate().skip(1) {
        let order = m / k.gcd(&m);
        *slot = vanishing_orders.binary_search(&order).is_ok();
    }
    Ok(ZeroSet {
        modulus: m,
        zero_residues,
        vanishing_orders,
    })
}

/// `|f_A(k)|` in double precision. Cross-check only; never used for decisions.
pub fn eval_float(a: &CyclicSet, k: i64) -> f64 {
    let m = a.modulus() as i64;
    let k = k.rem_euclid(m);
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for e in a.iter() {
        let phase = (k * e as i64).rem_euclid(m) as f64 / m as f64;
        let (s, c) = (TAU * phase).sin_cos();
        re += c;
        im += s;
    }
    re.hypot(im)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(m: i64, xs: &[i64]) -> CyclicSet {
        CyclicSet::new(m, xs.iter().copied()).unwrap()
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(900).len(), 27);
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1).unwrap().coefficients(), &[-1, 1]);
        assert_eq!(
            cyclotomic_polynomial(6).unwrap().coefficients(),
            &[1, -1, 1]
        );
        assert_eq!(
            cyclotomic_polynomial(12).unwrap().coefficients(),
            &[1, 0, -1, 0, 1]
        );
        assert!(cyclotomic_polynomial(0).is_err());
        assert!(cyclotomic_polynomial(MAX_CYCLOTOMIC_ORDER + 1).is_err());
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let p = cyclotomic_polynomial(105).unwrap();
        assert_eq!(p.degree(), Some(48));
        assert_eq!(p.coefficient(7), -2);
        assert_eq!(p.coefficient(41), -2);
    }

    #[test]
    fn mask_of_small_sets() {
        assert_eq!(mask_polynomial(&set(4, &[0, 2])).coefficients(), &[1, 0, 1]);
        assert_eq!(mask_polynomial(&set(7, &[0])).coefficients(), &[1]);
    }

    #[test]
    fn order_tests_on_small_set() {
        let a = set(4, &[0, 2]);
        assert!(vanishes_at_order(&a, 4).unwrap());
        assert!(!vanishes_at_order(&a, 2).unwrap());
        assert!(!vanishes_at_order(&a, 1).unwrap());
        assert_eq!(
            vanishes_at_order(&a, 3),
            Err(Error::OrderNotDivisor {
                order: 3,
                modulus: 4
            })
        );
    }

    #[test]
    fn small_zero_sets() {
        assert_eq!(zero_set(&set(4, &[0, 2])).unwrap().residues(), vec![1, 3]);
        assert_eq!(zero_set(&set(4, &[0, 1])).unwrap().residues(), vec![2]);
        assert!(zero_set(&set(5, &[0])).unwrap().residues().is_empty());
    }

    #[test]
    fn float_values() {
        let a = set(4, &[0, 2]);
        assert!((eval_float(&a, 0) - 2.0).abs() < 1e-12);
        assert!(eval_float(&a, 1) < 1e-12);
        assert!((eval_float(&a, 2) - 2.0).abs() < 1e-12);
    }
}
