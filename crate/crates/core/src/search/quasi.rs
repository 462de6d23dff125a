use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::divisors;
use crate::error::{Error, Result};
use crate::group::{is_factorization, CyclicSet};
use crate::verdict::Verdict;

/// Which factor carries the block partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

/// A subgroup `H = {h_1 = 0 < h_2 < …}` and blocks `B_1, …, B_t` of a factor, block `i`
/// paired with the `i`-th smallest element of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiperiodicWitness {
    pub subgroup: CyclicSet,
    pub partition: Vec<CyclicSet>,
}

impl QuasiperiodicWitness {
    /// `H = {0}` with the whole factor as its only block.
    pub fn trivial(factor: &CyclicSet) -> Self {
        Self {
            subgroup: CyclicSet::from_sorted_unchecked(factor.modulus(), vec![0]),
            partition: vec![factor.clone()],
        }
    }
}

fn validate(b: &CyclicSet, w: &QuasiperiodicWitness) -> Result<()> {
    let m = b.modulus();
    let h = &w.subgroup;
    let malformed = |msg: String| Err(Error::MalformedWitness(msg));
    if h.modulus() != m || w.partition.iter().any(|p| p.modulus() != m) {
        return malformed(format!("witness sets must be taken modulo {m}"));
    }
    if !h.contains(0) {
        return malformed("subgroup does not contain 0".into());
    }
    for x in h.iter() {
        for y in h.iter() {
            if !h.contains((x + y) % m) {
                return malformed(format!("{x} + {y} is not in the subgroup"));
            }
        }
    }
    if w.partition.len() != h.len() {
        return malformed(format!(
            "{} blocks for a subgroup of order {}",
            w.partition.len(),
            h.len()
        ));
    }
    let mut owner = vec![None; m];
    for (i, block) in w.partition.iter().enumerate() {
        for x in block.iter() {
            if !b.contains(x) {
                return malformed(format!("block {} element {x} is not in the factor", i + 1));
            }
            if let Some(j) = owner[x] {
                return malformed(format!("{x} lies in blocks {} and {}", j + 1, i + 1));
            }
            owner[x] = Some(i);
        }
    }
    if let Some(x) = b.iter().find(|&x| owner[x].is_none()) {
        return malformed(format!("{x} is in no block"));
    }
    Ok(())
}

fn sumset_table(a: &CyclicSet, block: &CyclicSet, shift: usize) -> Vec<bool> {
    let m = a.modulus();
    let mut t = vec![false; m];
    for x in a.iter() {
        for y in block.iter() {
            t[(x + y + shift) % m] = true;
        }
    }
    t
}

/// Checks `A + B_i = A + B_1 + h_i` for every block. `(A, B)` must be a factorization and
/// the witness must partition `B`; otherwise an error is returned instead of a verdict.
pub fn verify_quasiperiodic(
    a: &CyclicSet,
    b: &CyclicSet,
    w: &QuasiperiodicWitness,
) -> Result<Verdict> {
    let f = is_factorization(a, b)?;
    if let Some(c) = f.first_failure() {
        return Err(Error::NotAFactorization(format!(
            "{}: {}",
            c.name, c.detail
        )));
    }
    validate(b, w)?;
    let mut v = Verdict::new();
    let first = &w.partition[0];
    for (i, (block, h)) in w.partition.iter().zip(w.subgroup.iter()).enumerate() {
        let lhs = sumset_table(a, block, 0);
        let rhs = sumset_table(a, first, h);
        let name = format!("A + B_{} = A + B_1 + {h}", i + 1);
        match (0..a.modulus()).find(|&g| lhs[g] != rhs[g]) {
            None => v.ok(
                name,
                vec![],
                format!("{} elements agree", block.len() * a.len()),
            ),
            Some(g) => {
                let side = if lhs[g] { "left" } else { "right" };
                v.fail(
                    name,
                    vec![(i + 1) as i64, g as i64],
                    format!("{g} is only on the {side} side"),
                )
            }
        }
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuasiSearch {
    Found {
        side: Side,
        witness: QuasiperiodicWitness,
        nodes: u64,
    },
    /// Every cyclic subgroup was ruled out on both sides.
    NoWitness { nodes: u64 },
    /// The node budget ran out first.
    Inconclusive { nodes: u64 },
}

enum Attempt {
    Found(Vec<usize>),
    Conflict,
    OutOfBudget,
}

/// Labels the elements of `part` by block index modulo `t` so that `A + B_i` is the
/// translate of `A + B_1` by `i·d`, with `d = m/t`.
///
/// That holds iff for every residue `g`, the element of `part` covering `g + d` sits one
/// block after the element covering `g`. The relation fixes labels along each connected
/// component up to a shift, so propagation either produces a labelling or a contradiction;
/// each component is anchored at its smallest element with label 0, which puts `min(part)`
/// in the first block.
fn label_blocks(
    other: &CyclicSet,
    part: &CyclicSet,
    owner: &[usize],
    t: usize,
    nodes: &mut u64,
    budget: u64,
) -> Attempt {
    let m = part.modulus();
    let d = m / t;
    let elems = part.elements();
    let mut label: Vec<Option<usize>> = vec![None; elems.len()];
    let mut queue = VecDeque::new();
    for start in 0..elems.len() {
        if label[start].is_some() {
            continue;
        }
        label[start] = Some(0);
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            let li = label[i].expect("queued elements are labelled");
            for x in other.iter() {
                let g = x + elems[i];
                for (step, want) in [(d, (li + 1) % t), (m - d, (li + t - 1) % t)] {
                    *nodes += 1;
                    if *nodes > budget {
                        return Attempt::OutOfBudget;
                    }
                    let j = owner[(g + step) % m];
                    match label[j] {
                        Some(l) if l != want => return Attempt::Conflict,
                        Some(_) => {}
                        None => {
                            label[j] = Some(want);
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
    }
    Attempt::Found(
        label
            .into_iter()
            .map(|l| l.expect("all labelled"))
            .collect(),
    )
}

/// Looks for a quasiperiodic witness over the subgroups `⟨m/t⟩`, `t > 1`, `t | |factor|`,
/// in increasing `t`, first partitioning `B` and then `A`. A one-element `B` gets the trivial
/// witness. `budget` bounds the total number of propagation steps.
pub fn search_quasiperiodic(a: &CyclicSet, b: &CyclicSet, budget: u64) -> Result<QuasiSearch> {
    search_quasiperiodic_with_orders(a, b, &divisors(a.modulus()), budget)
}

/// Like [`search_quasiperiodic`], but only tries subgroups whose order is listed in `orders`.
pub fn search_quasiperiodic_with_orders(
    a: &CyclicSet,
    b: &CyclicSet,
    orders: &[usize],
    budget: u64,
) -> Result<QuasiSearch> {
    let f = is_factorization(a, b)?;
    if let Some(c) = f.first_failure() {
        return Err(Error::NotAFactorization(format!(
            "{}: {}",
            c.name, c.detail
        )));
    }
    if b.len() == 1 {
        return Ok(QuasiSearch::Found {
            side: Side::B,
            witness: QuasiperiodicWitness::trivial(b),
            nodes: 0,
        });
    }
    let m = a.modulus();
    let mut nodes = 0u64;
    for (side, other, part) in [(Side::B, a, b), (Side::A, b, a)] {
        let mut owner = vec![0usize; m];
        for (i, y) in part.iter().enumerate() {
            for x in other.iter() {
                owner[(x + y) % m] = i;
            }
        }
        for &t in orders {
            if t <= 1 || !m.is_multiple_of(t) || part.len() % t != 0 {
                continue;
            }
            match label_blocks(other, part, &owner, t, &mut nodes, budget) {
                Attempt::OutOfBudget => return Ok(QuasiSearch::Inconclusive { nodes }),
                Attempt::Conflict => continue,
                Attempt::Found(labels) => {
                    let d = m / t;
                    let subgroup =
                        CyclicSet::from_sorted_unchecked(m, (0..t).map(|i| i * d).collect());
                    let partition = (0..t)
                        .map(|block| {
                            let elems = part
                                .iter()
                                .zip(&labels)
                                .filter(|&(_, &l)| l == block)
                                .map(|(x, _)| x)
                                .collect();
                            CyclicSet::from_sorted_unchecked(m, elems)
                        })
                        .collect();
                    return Ok(QuasiSearch::Found {
                        side,
                        witness: QuasiperiodicWitness {
                            subgroup,
                            partition,
                        },
                        nodes,
                    });
                }
            }
        }
    }
    Ok(QuasiSearch::NoWitness { nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(m: i64, xs: &[i64]) -> CyclicSet {
        CyclicSet::new(m, xs.iter().copied()).unwrap()
    }

    #[test]
    fn witness_mod_four() {
        let (a, b) = (set(4, &[0, 1]), set(4, &[0, 2]));
        let r = search_quasiperiodic(&a, &b, 1_000).unwrap();
        let QuasiSearch::Found { side, witness, .. } = r else {
            panic!("expected a witness, got {r:?}");
        };
        assert_eq!(side, Side::B);
        assert_eq!(witness.subgroup.elements(), &[0, 2]);
        assert_eq!(witness.partition, vec![set(4, &[0]), set(4, &[2])]);
        assert!(verify_quasiperiodic(&a, &b, &witness).unwrap().pass());
    }

    #[test]
    fn trivial_witness_always_verifies() {
        let (a, b) = (set(8, &[0, 2]), set(8, &[0, 1, 4, 5]));
        let w = QuasiperiodicWitness::trivial(&b);
        assert!(verify_quasiperiodic(&a, &b, &w).unwrap().pass());
    }

    #[test]
    fn singleton_factor() {
        let (a, b) = (set(3, &[0, 1, 2]), set(3, &[0]));
        let r = search_quasiperiodic(&a, &b, 10).unwrap();
        assert!(matches!(r, QuasiSearch::Found { side: Side::B, .. }));
    }

    #[test]
    fn full_group_complement_of_trivial_tile() {
        let (a, b) = (set(6, &[0]), CyclicSet::full(6).unwrap());
        let QuasiSearch::Found { witness, side, .. } = search_quasiperiodic(&a, &b, 1_000).unwrap()
        else {
            panic!()
        };
        let (x, y) = if side == Side::B { (&a, &b) } else { (&b, &a) };
        assert!(verify_quasiperiodic(x, y, &witness).unwrap().pass());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let (a, b) = (set(8, &[0, 2]), set(8, &[0, 1, 4, 5]));
        assert!(matches!(
            search_quasiperiodic(&a, &b, 1).unwrap(),
            QuasiSearch::Inconclusive { .. }
        ));
    }

    #[test]
    fn malformed_witnesses() {
        let (a, b) = (set(4, &[0, 1]), set(4, &[0, 2]));
        let not_subgroup = QuasiperiodicWitness {
            subgroup: set(4, &[0, 1]),
            partition: vec![set(4, &[0]), set(4, &[2])],
        };
        assert!(matches!(
            verify_quasiperiodic(&a, &b, &not_subgroup),
            Err(Error::MalformedWitness(_))
        ));
        let not_partition = QuasiperiodicWitness {
            subgroup: set(4, &[0, 2]),
            partition: vec![set(4, &[0]), set(4, &[0])],
        };
        assert!(matches!(
            verify_quasiperiodic(&a, &b, &not_partition),
            Err(Error::MalformedWitness(_))
        ));
        let w = QuasiperiodicWitness::trivial(&b);
        assert!(matches!(
            verify_quasiperiodic(&a, &a, &w),
            Err(Error::NotAFactorization(_))
        ));
    }
}
