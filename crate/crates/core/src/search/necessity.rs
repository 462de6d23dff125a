use serde::{Deserialize, Serialize};

use super::complements::{enumerate_complements, StreamStatus};
use crate::cyclotomic::zero_set;
use crate::error::{Error, Result};
use crate::group::CyclicSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum NecessityStatus {
    /// A complement `B` with `f_B(k) ≠ 0`.
    WitnessFound { complement: CyclicSet },
    /// Every complement was examined and each vanishes at `k`.
    ExhaustedNoWitness,
    /// The node budget ran out before a witness turned up.
    BudgetInconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessityEntry {
    pub k: usize,
    #[serde(flatten)]
    pub status: NecessityStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessityReport {
    pub modulus: usize,
    pub entries: Vec<NecessityEntry>,
    pub complements_examined: usize,
    pub nodes: u64,
    /// True when the complement stream was drained.
    pub exhaustive: bool,
}

/// For each nonzero zero `k` of `f_A`, looks for a complement `B` of `A` with `f_B(k) ≠ 0`.
/// One pass over the complement stream serves every `k`; `budget` caps its search nodes.
pub fn necessity_witnesses(a: &CyclicSet, budget: Option<u64>) -> Result<NecessityReport> {
    let m = a.modulus();
    if !m.is_multiple_of(a.len()) {
        return Err(Error::SizeNotDivisor {
            size: a.len(),
            order: m,
        });
    }
    let zeros = zero_set(a)?.residues();
    let mut found: Vec<Option<CyclicSet>> = vec![None; zeros.len()];
    let mut open = zeros.len();
    let mut stream = enumerate_complements(a, None).with_node_budget(budget);
    let mut examined = 0;
    while open > 0 {
        let Some(b) = stream.next() else { break };
        examined += 1;
        let zb = zero_set(&b)?;
        for (slot, &k) in found.iter_mut().zip(&zeros) {
            if slot.is_none() && !zb.table()[k] {
                *slot = Some(b.clone());
                open -= 1;
            }
        }
    }
    let exhaustive = stream.status() == StreamStatus::Exhausted;
    let entries = zeros
        .iter()
        .zip(found)
        .map(|(&k, f)| NecessityEntry {
            k,
            status: match f {
                Some(complement) => NecessityStatus::WitnessFound { complement },
                None if exhaustive => NecessityStatus::ExhaustedNoWitness,
                None => NecessityStatus::BudgetInconclusive,
            },
        })
        .collect();
    Ok(NecessityReport {
        modulus: m,
        entries,
        complements_examined: examined,
        nodes: stream.nodes(),
        exhaustive,
    })
}
