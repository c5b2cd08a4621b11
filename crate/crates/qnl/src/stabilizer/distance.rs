//! Minimum-distance search: exact span enumeration for small codes and a
//! bounded-weight certified search for standard-form codes.
//!
//! For a standard-form code the codeword of a combination word `u` is
//! `(uB | u)`, so its binary weight is `wt(u) + wt(uB)` and its Hamming
//! weight is `wt(uB | u)`. Both are at least `wt(u)`, which yields the
//! exactness certificate: after exhausting every `u` with `wt(u) <= W`, any
//! unseen codeword weighs at least `W + 1`, so a found minimum `m` is exact
//! iff `m <= W + 1`. (The tempting `W + 2` bound is wrong because `uB` can
//! vanish for `u != 0`.)

use super::code::GeneratorMatrix;
use super::pauli::PauliVector;
use super::CodeError;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

/// Which weight function a distance refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// Number of non-identity qubits.
    Hamming,
    /// X and Z components counted separately (Y twice).
    Binary,
}

/// Limits for distance searches.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Highest `wt(u)` class the bounded search may exhaust.
    pub max_weight: usize,
    /// Upper bound on enumerated combinations (whole classes only, so
    /// results stay deterministic).
    pub max_candidates: u64,
    /// Wall-clock hint; exceeding it abandons the class in progress.
    pub time_limit: Option<Duration>,
    /// Progress note to stderr every this many candidates (0 = quiet).
    pub progress_every: u64,
    /// Worker threads for the bounded search; 0 = `QNL_THREADS` or the
    /// available parallelism.
    pub threads: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_weight: 12,
            max_candidates: 10_000_000_000,
            time_limit: None,
            progress_every: 0,
            threads: 0,
        }
    }
}

/// Outcome of a distance search.
#[derive(Debug, Clone)]
pub struct DistanceResult {
    pub value: u32,
    /// True when no smaller nonzero codeword can exist.
    pub exact: bool,
    /// A codeword achieving `value`; ties resolved to the lexicographically
    /// smallest combination word.
    pub witness: Option<PauliVector>,
    /// Highest `wt(u)` class exhaustively searched.
    pub searched_weight: u32,
}

impl GeneratorMatrix {
    /// Minimum Hamming or binary weight over nonzero codewords.
    ///
    /// Runs the exact span enumeration when `2^k` fits the budget, otherwise
    /// falls back to the bounded standard-form search.
    pub fn min_distance(
        &self,
        kind: WeightKind,
        budget: &SearchBudget,
    ) -> Result<DistanceResult, CodeError> {
        if self.k() <= super::code::MAX_ENUMERATION_K && (1u64 << self.k()) <= budget.max_candidates
        {
            self.min_distance_exact(kind)
        } else {
            self.min_distance_bounded(kind, budget)
        }
    }

    /// Full enumeration of the `2^k - 1` nonzero codewords.
    pub fn min_distance_exact(&self, kind: WeightKind) -> Result<DistanceResult, CodeError> {
        if self.k() > super::code::MAX_ENUMERATION_K {
            return Err(CodeError::EnumerationTooLarge {
                k: self.k(),
                limit: super::code::MAX_ENUMERATION_K,
            });
        }
        if self.k() == 0 {
            // Trivial code: no nonzero codeword, hence no witness.
            return Ok(DistanceResult {
                value: 0,
                exact: true,
                witness: None,
                searched_weight: self.n() as u32,
            });
        }
        let k = self.k();
        let rows = self.rows();
        let mut alpha = 0u128;
        let mut beta = 0u128;
        let mut gray = 0u128;
        let mut best_value = u32::MAX;
        let mut best_key = u128::MAX;
        let mut best_u = 0u128;
        for idx in 1u64..1 << k {
            let flip = idx.trailing_zeros() as usize;
            alpha ^= rows[flip].alpha();
            beta ^= rows[flip].beta();
            gray ^= 1 << flip;
            let value = match kind {
                WeightKind::Hamming => (alpha | beta).count_ones(),
                WeightKind::Binary => alpha.count_ones() + beta.count_ones(),
            };
            if value < best_value || (value == best_value && lex_key(gray, k) < best_key) {
                best_value = value;
                best_key = lex_key(gray, k);
                best_u = gray;
            }
        }
        Ok(DistanceResult {
            value: best_value,
            exact: true,
            witness: Some(self.combination(best_u)),
            searched_weight: self.n() as u32,
        })
    }

    /// Bounded-weight search over combination words of a standard-form code,
    /// by increasing `wt(u)` up to the budget.
    pub fn min_distance_bounded(
        &self,
        kind: WeightKind,
        budget: &SearchBudget,
    ) -> Result<DistanceResult, CodeError> {
        if !self.is_standard_form() {
            return Err(CodeError::NotStandardForm);
        }
        if budget.max_weight == 0 {
            return Err(CodeError::EmptyBudget);
        }
        let n = self.n();
        let rows: Vec<u128> = self.rows().iter().map(|r| r.alpha()).collect();
        let deadline = budget.time_limit.map(|limit| Instant::now() + limit);
        let threads = thread_count(budget.threads);

        let mut best: Option<(u32, u128, u128)> = None; // (value, lex key, u)
        let mut searched = 0u32;
        let mut spent = 0u128;
        for w in 1..=budget.max_weight.min(n) {
            let class_size = binomial(n, w);
            if spent + class_size > budget.max_candidates as u128 {
                break;
            }
            let searcher = ClassSearcher {
                rows: &rows,
                n,
                w,
                kind,
                deadline,
                timed_out: AtomicBool::new(false),
                progress_every: budget.progress_every,
                progress: AtomicU64::new(spent as u64),
            };
            match searcher.run(threads) {
                Some(class_best) => {
                    if let Some(found) = class_best {
                        if best.map_or(true, |b| found.0 < b.0) {
                            best = Some(found);
                        }
                    }
                    spent += class_size;
                    searched = w as u32;
                }
                None => break, // timed out; class discarded
            }
            if let Some((value, _, _)) = best {
                if value <= searched + 1 {
                    break;
                }
            }
        }
        let (value, _, u) = best.ok_or(CodeError::EmptyBudget)?;
        let exact = searched as usize >= n || value <= searched + 1;
        Ok(DistanceResult {
            value,
            exact,
            witness: Some(self.combination(u)),
            searched_weight: searched,
        })
    }
}

struct ClassSearcher<'a> {
    rows: &'a [u128],
    n: usize,
    w: usize,
    kind: WeightKind,
    deadline: Option<Instant>,
    timed_out: AtomicBool,
    progress_every: u64,
    progress: AtomicU64,
}

type Found = Option<(u32, u128, u128)>;

impl ClassSearcher<'_> {
    /// Searches one `wt(u)` class; `None` means the deadline struck and the
    /// class result must be discarded.
    fn run(&self, threads: usize) -> Option<Found> {
        let first_count = self.n - self.w + 1;
        let mut partials: Vec<Found> = vec![None; first_count];
        if threads <= 1 || first_count < 2 {
            for (p0, slot) in partials.iter_mut().enumerate() {
                *slot = self.run_first_index(p0);
                if self.timed_out.load(Ordering::Relaxed) {
                    return None;
                }
            }
        } else {
            let next = AtomicUsize::new(0);
            let slots: Vec<std::sync::Mutex<Found>> = (0..first_count)
                .map(|_| std::sync::Mutex::new(None))
                .collect();
            std::thread::scope(|scope| {
                for _ in 0..threads.min(first_count) {
                    scope.spawn(|| loop {
                        let p0 = next.fetch_add(1, Ordering::Relaxed);
                        if p0 >= first_count || self.timed_out.load(Ordering::Relaxed) {
                            break;
                        }
                        *slots[p0].lock().unwrap() = self.run_first_index(p0);
                    });
                }
            });
            if self.timed_out.load(Ordering::Relaxed) {
                return None;
            }
            for (slot, partial) in slots.into_iter().zip(partials.iter_mut()) {
                *partial = slot.into_inner().unwrap();
            }
        }
        // Deterministic merge in first-index order.
        let mut best: Found = None;
        for partial in partials.into_iter().flatten() {
            best = Some(match best {
                None => partial,
                Some(b) if (partial.0, partial.1) < (b.0, b.1) => partial,
                Some(b) => b,
            });
        }
        Some(best)
    }

    fn run_first_index(&self, p0: usize) -> Found {
        let mut local = Local {
            best: None,
            leaves: 0,
            check_at: 1 << 20,
        };
        self.descend(p0, self.w, 0, 0, &mut local);
        if self.progress_every > 0 && local.leaves > 0 {
            let before = self.progress.fetch_add(local.leaves, Ordering::Relaxed);
            let after = before + local.leaves;
            if before / self.progress_every != after / self.progress_every {
                eprintln!("searched {after} candidates (weight class {})", self.w);
            }
        }
        local.best
    }

    fn descend(
        &self,
        pos: usize,
        remaining: usize,
        acc_alpha: u128,
        acc_u: u128,
        local: &mut Local,
    ) {
        if remaining == 1 {
            for p in pos..self.n {
                let alpha = acc_alpha ^ self.rows[p];
                let u = acc_u | 1 << p;
                let value = match self.kind {
                    WeightKind::Binary => self.w as u32 + alpha.count_ones(),
                    WeightKind::Hamming => (alpha | u).count_ones(),
                };
                if local.best.map_or(true, |(bv, bk, _)| {
                    value < bv || (value == bv && lex_key(u, self.n) < bk)
                }) {
                    local.best = Some((value, lex_key(u, self.n), u));
                }
            }
            local.leaves += (self.n - pos) as u64;
            if local.leaves >= local.check_at {
                local.check_at += 1 << 20;
                if let Some(deadline) = self.deadline {
                    if Instant::now() > deadline {
                        self.timed_out.store(true, Ordering::Relaxed);
                    }
                }
            }
            return;
        }
        if self.timed_out.load(Ordering::Relaxed) {
            return;
        }
        for p in pos..=(self.n - remaining) {
            self.descend(
                p + 1,
                remaining - 1,
                acc_alpha ^ self.rows[p],
                acc_u | 1 << p,
                local,
            );
        }
    }
}

struct Local {
    best: Found,
    leaves: u64,
    check_at: u64,
}

/// Lexicographic key for a combination word: qubit 1 is the most significant
/// position of the ordering, so smaller keys are lexicographically earlier.
fn lex_key(u: u128, n: usize) -> u128 {
    u.reverse_bits() >> (128 - n)
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

pub(crate) fn thread_count(requested: usize) -> usize {
    if requested > 0 {
        return requested;
    }
    if let Ok(value) = std::env::var("QNL_THREADS") {
        if let Ok(parsed) = value.trim().parse::<usize>() {
            if parsed > 0 {
                return parsed;
            }
        }
    }
    std::thread::available_parallelism().map_or(1, |p| p.get().min(16))
}
