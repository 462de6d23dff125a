//! Residue sets in Z/mZ and the factorization primitives built on them.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_MODULUS};
use crate::verdict::Verdict;

/// A nonempty set of residues modulo `modulus`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCyclicSet", into = "RawCyclicSet")]
pub struct CyclicSet {
    modulus: usize,
    elements: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawCyclicSet {
    modulus: i64,
    elements: Vec<i64>,
}

impl TryFrom<RawCyclicSet> for CyclicSet {
    type Error = Error;

    fn try_from(raw: RawCyclicSet) -> Result<Self> {
        CyclicSet::new(raw.modulus, raw.elements)
    }
}

impl From<CyclicSet> for RawCyclicSet {
    fn from(set: CyclicSet) -> Self {
        RawCyclicSet {
            modulus: set.modulus as i64,
            elements: set.elements.iter().map(|&e| e as i64).collect(),
        }
    }
}

pub(crate) fn check_modulus(modulus: i64) -> Result<usize> {
    if modulus <= 0 {
        return Err(Error::ZeroModulus);
    }
    let m = modulus as usize;
    if m > MAX_MODULUS {
        return Err(Error::ModulusTooLarge(m));
    }
    Ok(m)
}

pub(crate) fn reduce(value: i64, modulus: usize) -> usize {
    value.rem_euclid(modulus as i64) as usize
}

impl CyclicSet {
    /// Reduces `raw` modulo `modulus` and sorts it. Two raw values landing on the
    /// same residue are an error, since factors must be sets rather than multisets.
    pub fn new(modulus: i64, raw: impl IntoIterator<Item = i64>) -> Result<Self> {
        let m = check_modulus(modulus)?;
        let mut seen: Vec<Option<i64>> = vec![None; m];
        let mut elements = Vec::new();
        for value in raw {
            let r = reduce(value, m);
            if let Some(first) = seen[r] {
                return Err(Error::DuplicateResidue {
                    first,
                    second: value,
                    modulus: m,
                });
            }
            seen[r] = Some(value);
            elements.push(r);
        }
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        elements.sort_unstable();
        Ok(Self {
            modulus: m,
            elements,
        })
    }

    /// Builds a set from residues already known to be distinct and in range.
    pub(crate) fn from_sorted_unchecked(modulus: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.last().is_some_and(|&e| e < modulus));
        Self { modulus, elements }
    }

    /// The whole group Z/mZ.
    pub fn full(modulus: usize) -> Result<Self> {
        check_modulus(modulus as i64)?;
        Ok(Self::from_sorted_unchecked(modulus, (0..modulus).collect()))
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, residue: usize) -> bool {
        self.elements.binary_search(&residue).is_ok()
    }

    pub fn min(&self) -> usize {
        self.elements[0]
    }

    pub fn max(&self) -> usize {
        self.elements[self.elements.len() - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }

    /// `{a + t mod m}`.
    pub fn translate(&self, t: i64) -> Self {
        let m = self.modulus;
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .map(|&a| reduce(a as i64 + t, m))
            .collect();
        elements.sort_unstable();
        Self::from_sorted_unchecked(m, elements)
    }

    /// `{u·a mod m}`. Fails if the dilation is not injective on this set.
    pub fn dilate(&self, u: i64) -> Result<Self> {
        Self::new(
            self.modulus as i64,
            self.elements.iter().map(|&a| (a as i64) * u),
        )
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.elements.iter().map(|&e| e as i64).collect()
    }

    /// The residues as an `IntegerList` of their canonical liftings in `[0, m)`.
    pub fn lifting(&self) -> IntegerList {
        IntegerList(self.as_i64())
    }
}

impl fmt::Display for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}} mod {}", self.modulus)
    }
}

/// A finite list of unreduced integers, e.g. a candidate spectrum Γ ⊆ Z.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerList(Vec<i64>);

impl IntegerList {
    /// Rejects repeated values.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let mut sorted = values.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEntry(vec![w[0]]));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn same_modulus(a: &CyclicSet, b: &CyclicSet) -> Result<()> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch {
            left: vec![a.modulus],
            right: vec![b.modulus],
        });
    }
    Ok(())
}

/// Marks, for every residue, the first `(a, b)` with `a + b` landing there.
/// Returns the owner table or the first collision found in `a`-major order.
fn sum_table(
    a: &CyclicSet,
    b: &CyclicSet,
) -> std::result::Result<Vec<Option<(usize, usize)>>, Error> {
    let m = a.modulus;
    let mut owner: Vec<Option<(usize, usize)>> = vec![None; m];
    for &x in &a.elements {
        for &y in &b.elements {
            let s = (x + y) % m;
            if let Some((x0, y0)) = owner[s] {
                return Err(Error::SumCollision {
                    a: x0,
                    b: y0,
                    a2: x,
                    b2: y,
                    modulus: m,
                });
            }
            owner[s] = Some((x, y));
        }
    }
    Ok(owner)
}

/// `A ⊕ B`, failing if two pairs share a sum.
pub fn direct_sum(a: &CyclicSet, b: &CyclicSet) -> Result<CyclicSet> {
    same_modulus(a, b)?;
    let owner = sum_table(a, b)?;
    let elements = owner
        .iter()
        .enumerate()
        .filter_map(|(g, o)| o.map(|_| g))
        .collect();
    Ok(CyclicSet::from_sorted_unchecked(a.modulus, elements))
}

/// Whether every residue is uniquely `a + b`.
pub fn is_factorization(a: &CyclicSet, b: &CyclicSet) -> Result<Verdict> {
    same_modulus(a, b)?;
    let m = a.modulus;
    let mut v = Verdict::new();
    let product = a.len() * b.len();
    v.record(
        "cardinality",
        product == m,
        vec![a.len() as i64, b.len() as i64, m as i64],
        format!("|A|·|B| = {product}, m = {m}"),
    );
    match sum_table(a, b) {
        Ok(owner) => {
            v.ok("unique sums", vec![], "all |A|·|B| sums are distinct");
            match owner.iter().position(Option::is_none) {
                None => v.ok("covers group", vec![], "every residue is a sum"),
                Some(g) => v.fail(
                    "covers group",
                    vec![g as i64],
                    format!("residue {g} is not of the form a + b"),
                ),
            }
        }
        Err(Error::SumCollision {
            a: x, b: y, a2, b2, ..
        }) => {
            v.fail(
                "unique sums",
                vec![x as i64, y as i64, a2 as i64, b2 as i64],
                format!("{x} + {y} ≡ {a2} + {b2} (mod {m})"),
            );
        }
        Err(e) => return Err(e),
    }
    Ok(v)
}

/// gcd of the canonical liftings, with gcd(0, x) = x. Zero for `{0}`.
pub fn set_gcd(a: &CyclicSet) -> usize {
    a.elements.iter().fold(0, |g, &x| g.gcd(&x))
}

/// A small subset of the elements with the same gcd as the whole set.
///
/// Takes the elements that lower the running gcd in ascending order, then drops any
/// element whose removal leaves the gcd unchanged. For the 900-element example pair this
/// yields 36, 100, 225 and 126, 220, 375.
pub fn gcd_witness(a: &CyclicSet) -> Vec<usize> {
    let target = set_gcd(a);
    let mut chosen = Vec::new();
    let mut running = 0usize;
    for &x in &a.elements {
        let next = running.gcd(&x);
        if next != running {
            chosen.push(x);
            running = next;
        }
        if running == target {
            break;
        }
    }
    let mut i = 0;
    while i < chosen.len() {
        let rest = chosen
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(0usize, |g, (_, &x)| g.gcd(&x));
        if chosen.len() > 1 && rest == target {
            chosen.remove(i);
        } else {
            i += 1;
        }
    }
    chosen
}

/// `{(g − g′) mod m : g, g′ ∈ G}`; always contains 0.
pub fn difference_residues(gamma: &IntegerList, modulus: usize) -> Result<CyclicSet> {
    let m = check_modulus(modulus as i64)?;
    if gamma.is_empty() {
        return Err(Error::EmptySet);
    }
    let residues: Vec<usize> = gamma.values().iter().map(|&g| reduce(g, m)).collect();
    let mut hit = vec![false; m];
    for &x in &residues {
        for &y in &residues {
            hit[(x + m - y) % m] = true;
        }
    }
    let elements = (0..m).filter(|&r| hit[r]).collect();
    Ok(CyclicSet::from_sorted_unchecked(m, elements))
}

/// Whether the values of `gamma` are pairwise distinct modulo `modulus`.
pub fn distinct_mod_lattice(gamma: &IntegerList, modulus: usize) -> Verdict {
    let mut v = Verdict::new();
    let mut seen = std::collections::HashMap::new();
    for &g in gamma.values() {
        let r = g.rem_euclid(modulus as i64);
        if let Some(&first) = seen.get(&r) {
            v.fail(
                "distinct residues",
                vec![first, g],
                format!("{first} ≡ {g} (mod {modulus})"),
            );
            return v;
        }
        seen.insert(r, g);
    }
    v.ok(
        "distinct residues",
        vec![],
        format!("{} values, pairwise distinct mod {modulus}", gamma.len()),
    );
    v
}
