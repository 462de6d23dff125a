use crate::group::CyclicSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamStatus {
    Running,
    /// Every complement has been produced.
    Exhausted,
    /// The node budget ran out before the search finished.
    BudgetExhausted,
    /// The requested number of complements has been produced.
    LimitReached,
}

/// Complements `B ∋ 0` of a set `A` with `A ⊕ B = Z/mZ`, produced lazily in
/// lexicographic order of their sorted elements.
///
/// Elements of `B` are chosen in increasing order. A candidate next element is kept only if
/// the partial cover still extends to an exact cover using larger elements, which an inner
/// exact-cover search decides (branching on the uncovered residue with the fewest free
/// candidates). Every prefix that survives therefore leads to at least one complement.
pub struct ComplementStream {
    tile: Vec<usize>,
    modulus: usize,
    target: usize,
    covered: Vec<bool>,
    /// Number of covered residues inside `A + b`, per candidate `b`.
    blocked: Vec<u32>,
    chosen: Vec<usize>,
    /// Next candidate to try at each prefix length.
    frames: Vec<usize>,
    guide: Option<Vec<bool>>,
    pending_singleton: bool,
    limit: Option<usize>,
    node_budget: Option<u64>,
    nodes: u64,
    emitted: usize,
    status: StreamStatus,
    diagnostic: Option<String>,
}

/// Streams every complement of `a` containing 0, stopping after `limit` if given.
pub fn enumerate_complements(a: &CyclicSet, limit: Option<usize>) -> ComplementStream {
    ComplementStream::new(a, None).with_limit(limit)
}

/// Whether `b` is produced by the complement stream of `a`, exploring only `b`'s own
/// branch of the search.
pub fn contains_complement(a: &CyclicSet, b: &CyclicSet) -> bool {
    if a.modulus() != b.modulus() {
        return false;
    }
    let mut guide = vec![false; b.modulus()];
    for x in b.iter() {
        guide[x] = true;
    }
    ComplementStream::new(a, Some(guide))
        .next()
        .is_some_and(|found| &found == b)
}

struct OutOfBudget;

impl ComplementStream {
    fn new(a: &CyclicSet, guide: Option<Vec<bool>>) -> Self {
        let m = a.modulus();
        let mut stream = Self {
            tile: a.elements().to_vec(),
            modulus: m,
            target: m / a.len(),
            covered: vec![false; m],
            blocked: vec![0; m],
            chosen: Vec::new(),
            frames: Vec::new(),
            guide,
            pending_singleton: false,
            limit: None,
            node_budget: None,
            nodes: 0,
            emitted: 0,
            status: StreamStatus::Running,
            diagnostic: None,
        };
        if !m.is_multiple_of(a.len()) {
            stream.status = StreamStatus::Exhausted;
            stream.diagnostic = Some(format!("|A| = {} does not divide m = {m}", a.len()));
            return stream;
        }
        if !stream.allowed(0) {
            stream.status = StreamStatus::Exhausted;
            return stream;
        }
        stream.place(0, true);
        stream.chosen.push(0);
        stream.nodes = 1;
        if stream.target == 1 {
            stream.pending_singleton = true;
        } else {
            stream.frames.push(1);
        }
        stream
    }

    pub fn with_limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        if limit == Some(0) && self.status == StreamStatus::Running {
            self.status = StreamStatus::LimitReached;
        }
        self
    }

    /// Caps the number of search nodes (trial placements) explored.
    pub fn with_node_budget(mut self, budget: Option<u64>) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn status(&self) -> StreamStatus {
        self.status
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// Why the stream is empty from the start, if it is.
    pub fn diagnostic(&self) -> Option<&str> {
        self.diagnostic.as_deref()
    }

    /// Drains the stream and returns how many complements it produced in total.
    pub fn count_all(mut self) -> usize {
        while self.next().is_some() {}
        self.emitted
    }

    fn allowed(&self, x: usize) -> bool {
        self.guide.as_ref().is_none_or(|g| g[x])
    }

    fn free(&self, b: usize) -> bool {
        self.blocked[b] == 0 && self.allowed(b)
    }

    fn place(&mut self, b: usize, on: bool) {
        let m = self.modulus;
        for i in 0..self.tile.len() {
            let r = (self.tile[i] + b) % m;
            self.covered[r] = on;
            for j in 0..self.tile.len() {
                let c = (r + m - self.tile[j]) % m;
                if on {
                    self.blocked[c] += 1;
                } else {
                    self.blocked[c] -= 1;
                }
            }
        }
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        if self.node_budget.is_some_and(|b| self.nodes >= b) {
            return Err(OutOfBudget);
        }
        self.nodes += 1;
        Ok(())
    }

    /// Free candidates `≥ lo` covering residue `g`, ascending.
    fn candidates(&self, g: usize, lo: usize) -> Vec<usize> {
        let m = self.modulus;
        let mut c: Vec<usize> = self
            .tile
            .iter()
            .map(|&a| (g + m - a) % m)
            .filter(|&b| b >= lo && self.free(b))
            .collect();
        c.sort_unstable();
        c
    }

    /// Whether `remaining` more elements, all `≥ lo`, can complete an exact cover.
    fn completable(&mut self, remaining: usize, lo: usize) -> Result<bool, OutOfBudget> {
        if remaining == 0 {
            return Ok(true);
        }
        let mut best: Option<Vec<usize>> = None;
        for g in 0..self.modulus {
            if self.covered[g] {
                continue;
            }
            let c = self.candidates(g, lo);
            if c.is_empty() {
                return Ok(false);
            }
            if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                let single = c.len() == 1;
                best = Some(c);
                if single {
                    break;
                }
            }
        }
        let Some(best) = best else {
            return Ok(false);
        };
        for b in best {
            self.tick()?;
            self.place(b, true);
            let ok = self.completable(remaining - 1, lo);
            self.place(b, false);
            if ok? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Largest free candidate `≥ lo` for the smallest uncovered residue; the next element
    /// of `B` cannot exceed it.
    fn next_bound(&self, lo: usize) -> Option<usize> {
        let g = self.covered.iter().position(|&c| !c)?;
        self.candidates(g, lo).last().copied()
    }

    fn finish(&mut self, status: StreamStatus) -> Option<CyclicSet> {
        self.status = status;
        None
    }

    fn advance(&mut self) -> Result<Option<CyclicSet>, OutOfBudget> {
        loop {
            let Some(&start) = self.frames.last() else {
                return Ok(None);
            };
            let hi = self.next_bound(start);
            let next = hi.and_then(|hi| (start..=hi).find(|&c| self.free(c)));
            let Some(c) = next else {
                self.frames.pop();
                let last = self.chosen.pop().expect("every frame has a chosen element");
                self.place(last, false);
                continue;
            };
            *self.frames.last_mut().expect("frame present") = c + 1;
            self.tick()?;
            self.place(c, true);
            self.chosen.push(c);
            let remaining = self.target - self.chosen.len();
            if remaining == 0 {
                let found = CyclicSet::from_sorted_unchecked(self.modulus, self.chosen.clone());
                self.chosen.pop();
                self.place(c, false);
                return Ok(Some(found));
            }
            match self.completable(remaining, c + 1) {
                Ok(true) => self.frames.push(c + 1),
                other => {
                    self.chosen.pop();
                    self.place(c, false);
                    other?;
                }
            }
        }
    }
}

impl Iterator for ComplementStream {
    type Item = CyclicSet;

    fn next(&mut self) -> Option<CyclicSet> {
        if self.status != StreamStatus::Running {
            return None;
        }
        if self.limit.is_some_and(|l| self.emitted >= l) {
            return self.finish(StreamStatus::LimitReached);
        }
        if self.pending_singleton {
            self.pending_singleton = false;
            self.status = StreamStatus::Exhausted;
            self.emitted += 1;
            return Some(CyclicSet::from_sorted_unchecked(self.modulus, vec![0]));
        }
        match self.advance() {
            Ok(Some(found)) => {
                self.emitted += 1;
                Some(found)
            }
            Ok(None) => self.finish(StreamStatus::Exhausted),
            Err(OutOfBudget) => self.finish(StreamStatus::BudgetExhausted),
        }
    }
}
