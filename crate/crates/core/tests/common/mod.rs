// Independent oracles shared by the integration tests. None of these call into the library's
// algorithms; they work from definitions.
#![allow(dead_code)]

use std::f64::consts::TAU;

use cyclotile::cli::ProblemFile;
use cyclotile::CyclicSet;

pub fn set(m: usize, xs: &[usize]) -> CyclicSet {
    CyclicSet::new(m as i64, xs.iter().map(|&x| x as i64)).unwrap()
}

pub fn bundled_pair() -> (CyclicSet, CyclicSet) {
    let p = ProblemFile::paper_900();
    (p.cyclic_set("A").unwrap(), p.cyclic_set("B").unwrap())
}

/// `A ⊕ B = Z/mZ` by listing all sums.
pub fn brute_is_factorization(m: usize, a: &[usize], b: &[usize]) -> bool {
    if a.len() * b.len() != m {
        return false;
    }
    let mut seen = vec![false; m];
    for &x in a {
        for &y in b {
            let s = (x + y) % m;
            if seen[s] {
                return false;
            }
            seen[s] = true;
        }
    }
    true
}

/// `|Σ_a e^{2πi a k / m}|` summed directly.
pub fn float_magnitude(m: usize, a: &[usize], k: usize) -> f64 {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for &x in a {
        let theta = TAU * (((x as u128 * k as u128) % m as u128) as f64) / m as f64;
        re += theta.cos();
        im += theta.sin();
    }
    re.hypot(im)
}

/// Residues `k` in `[1, 900)` described by the valuation conditions: `5 ∥ k`, `3 ∥ k` or `2 ∥ k`.
pub fn valuation_predicate(k: usize) -> bool {
    let exactly = |p: usize| k.is_multiple_of(p) && !k.is_multiple_of(p * p);
    exactly(5) || exactly(3) || exactly(2)
}

/// Every complement `B ∋ 0` of `A`, sorted lexicographically, or `None` once more than `cap`
/// exact covers turn up. Branches on the smallest uncovered residue, which visits each exact
/// cover once.
pub fn brute_complements(m: usize, a: &[usize], cap: usize) -> Option<Vec<Vec<usize>>> {
    fn go(
        m: usize,
        a: &[usize],
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        if out.len() > cap {
            return false;
        }
        let Some(g) = covered.iter().position(|&c| !c) else {
            let mut b = chosen.clone();
            b.sort_unstable();
            if b.first() == Some(&0) {
                out.push(b);
            }
            return true;
        };
        for &x in a {
            let b = (g + m - x) % m;
            let cells: Vec<usize> = a.iter().map(|&y| (y + b) % m).collect();
            if cells.iter().any(|&c| covered[c]) {
                continue;
            }
            cells.iter().for_each(|&c| covered[c] = true);
            chosen.push(b);
            let ok = go(m, a, covered, chosen, out, cap);
            chosen.pop();
            cells.iter().for_each(|&c| covered[c] = false);
            if !ok {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    if m.is_multiple_of(a.len()) && !go(m, a, &mut vec![false; m], &mut Vec::new(), &mut out, cap) {
        return None;
    }
    out.sort();
    out.dedup();
    Some(out)
}

pub fn mobius(mut n: usize) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn mul(p: &[i128], q: &[i128]) -> Vec<i128> {
    let mut r = vec![0i128; p.len() + q.len() - 1];
    for (i, &x) in p.iter().enumerate() {
        for (j, &y) in q.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r
}

/// Exact quotient of `p` by a monic `d`; panics if the division leaves a remainder.
fn div_exact(p: &[i128], d: &[i128]) -> Vec<i128> {
    let mut rem = p.to_vec();
    let n = d.len() - 1;
    let mut q = vec![0i128; p.len() - n];
    for i in (0..q.len()).rev() {
        let c = rem[i + n];
        q[i] = c;
        for (j, &y) in d.iter().enumerate() {
            rem[i + j] -= c * y;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact division");
    q
}

/// `Φ_n = Π_{d|n} (x^d − 1)^{μ(n/d)}`, coefficients from degree 0 upward.
pub fn cyclotomic_by_mobius(n: usize) -> Vec<i64> {
    let x_pow_minus_one = |d: usize| {
        let mut v = vec![0i128; d + 1];
        v[0] = -1;
        v[d] = 1;
        v
    };
    let (mut num, mut den) = (vec![1i128], vec![1i128]);
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        match mobius(n / d) {
            1 => num = mul(&num, &x_pow_minus_one(d)),
            -1 => den = mul(&den, &x_pow_minus_one(d)),
            _ => {}
        }
    }
    div_exact(&num, &den)
        .into_iter()
        .map(|c| c as i64)
        .collect()
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
