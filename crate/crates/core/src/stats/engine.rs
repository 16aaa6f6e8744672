//! Enumeration engine: folds over `(q_i, ν_Q(γ_i), ν_Q(γ_{i+h}))` for `γ_i` in
//! a subinterval, optionally split across worker threads.

use rayon::prelude::*;

use super::StatsError;
use crate::farey::{seek, DenominatorWalker, FareyWalker, Fraction};

/// One enumerated fraction `γ_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexSample {
    /// `q_i`.
    pub den: u64,
    /// `ν_Q(γ_i)`.
    pub index: u64,
    /// `ν_Q(γ_{i+h})` for the requested lookahead `h` (equal to `index` when `h = 0`).
    pub ahead: u64,
}

/// The half-open range `(lo, hi]` of `[0, 1]` over which `γ_i` is enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Fraction,
    hi: Fraction,
}

impl Interval {
    pub fn new(lo: Fraction, hi: Fraction) -> Result<Self, StatsError> {
        if !hi.in_unit_interval() {
            return Err(StatsError::BadInterval(lo, hi));
        }
        if lo > hi {
            return Err(StatsError::BadInterval(lo, hi));
        }
        Ok(Interval { lo, hi })
    }

    /// `(0, 1]`: one full period of the sequence.
    pub fn full() -> Self {
        Interval {
            lo: Fraction::zero(),
            hi: Fraction::one(),
        }
    }

    /// `(0, t]`, i.e. the `γ_i ≤ t`.
    pub fn up_to(t: Fraction) -> Result<Self, StatsError> {
        Interval::new(Fraction::zero(), t)
    }

    pub fn lo(&self) -> Fraction {
        self.lo
    }

    pub fn hi(&self) -> Fraction {
        self.hi
    }

    pub fn is_full(&self) -> bool {
        self.lo == Fraction::zero() && self.hi == Fraction::one()
    }

    /// Boundaries `lo < j/parts < hi` inserted between the endpoints.
    fn split(&self, parts: u64) -> Vec<Interval> {
        let mut cuts = vec![self.lo];
        for j in 1..parts {
            let c = Fraction::reduced(j, parts).expect("nonzero denominator");
            if c > self.lo && c < self.hi {
                cuts.push(c);
            }
        }
        cuts.push(self.hi);
        cuts.windows(2)
            .map(|w| Interval { lo: w[0], hi: w[1] })
            .collect()
    }
}

/// How enumeration is spread over threads. Results never depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Workers(usize);

impl Workers {
    pub fn new(n: usize) -> Self {
        Workers(n.max(1))
    }

    pub const fn single() -> Self {
        Workers(1)
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl Default for Workers {
    fn default() -> Self {
        Workers::single()
    }
}

/// Chunks per worker, for load balance (the density of `F_Q` is uneven only
/// near rationals with small denominators, but chunks also differ in length).
const CHUNKS_PER_WORKER: u64 = 4;

/// Folds `step` over every `γ_i ∈ (lo, hi] ∩ F_Q`, with `ν_Q(γ_{i+lookahead})`
/// taken from the periodically extended sequence.
///
/// With one worker on the full range only denominators are tracked. Otherwise
/// the range is cut at multiples of `1/(4W)`, each chunk is located by
/// [`seek`] and walked independently, and the partial accumulators are merged
/// in chunk order.
pub fn fold_indices<A, I, S, M>(
    order: u64,
    range: Interval,
    lookahead: u64,
    workers: Workers,
    init: I,
    step: S,
    merge: M,
) -> Result<A, StatsError>
where
    A: Send,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, IndexSample) + Sync,
    M: Fn(A, A) -> A,
{
    crate::farey::FareyWalker::new(order)?;
    if workers.get() == 1 && range.is_full() {
        return Ok(fold_full_period(order, lookahead, init(), &step));
    }
    let chunks = range.split(workers.get() as u64 * CHUNKS_PER_WORKER);
    let run = || -> Result<Vec<A>, StatsError> {
        chunks
            .par_iter()
            .map(|c| fold_chunk(order, *c, lookahead, init(), &step))
            .collect()
    };
    let parts = if workers.get() == 1 {
        chunks
            .iter()
            .map(|c| fold_chunk(order, *c, lookahead, init(), &step))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers.get())
            .build()
            .map_err(|e| StatsError::ThreadPool(e.to_string()))?
            .install(run)?
    };
    let mut parts = parts.into_iter();
    let first = parts.next().unwrap_or_else(&init);
    Ok(parts.fold(first, merge))
}

fn fold_full_period<A, S>(order: u64, lookahead: u64, mut acc: A, step: &S) -> A
where
    S: Fn(&mut A, IndexSample),
{
    let mut w = DenominatorWalker::new(order).expect("order validated");
    let mut lead = w;
    lead.advance_by(lookahead);
    loop {
        step(
            &mut acc,
            IndexSample {
                den: w.curr(),
                index: w.index(),
                ahead: lead.index(),
            },
        );
        if w.curr() == 1 {
            break;
        }
        w.advance();
        lead.advance();
    }
    acc
}

fn fold_chunk<A, S>(
    order: u64,
    chunk: Interval,
    lookahead: u64,
    mut acc: A,
    step: &S,
) -> Result<A, StatsError>
where
    S: Fn(&mut A, IndexSample),
{
    let mut w: FareyWalker = seek(order, chunk.lo)?;
    let mut lead = w.denominators();
    lead.advance_by(lookahead);
    while w.curr() <= chunk.hi {
        step(
            &mut acc,
            IndexSample {
                den: w.curr().den(),
                index: w.index(),
                ahead: lead.index(),
            },
        );
        w.advance();
        lead.advance();
    }
    Ok(acc)
}
