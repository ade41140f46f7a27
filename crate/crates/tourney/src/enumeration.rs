//! Isomorphism-free enumeration of tournaments and score sequences.
//!
//! Generation is orderly: the canonical representatives of order `j - 1`
//! are extended by a new last vertex in every orientation, each candidate
//! is canonicalized, and duplicates are dropped, so no level ever stores
//! labeled tournaments. Regular enumeration additionally prunes any partial
//! tournament whose scores could no longer reach the all-equal target —
//! every induced subtournament of a regular tournament keeps its scores
//! inside the window `[m - (n - j), m]`, so the pruning loses nothing. At
//! the final level the orientation is forced outright by the scores.
//!
//! Levels are sorted by canonical bits after deduplication, which makes the
//! streams deterministic regardless of sharding.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::entropy;
use crate::error::{Error, Result};
use crate::spectral::{self, IntMatrix};
use crate::tournament::{ScoreSequence, Tournament, MAX_N};

/// Resource bounds for enumeration-backed computations.
///
/// `max_n` caps general enumeration (the default 8 covers 6880 classes);
/// setting it to 13 or above additionally unlocks the long regular-13 run.
/// `parallel_shards = 1` forces sequential extension.
#[derive(Clone, Debug)]
pub struct EnumerationBudget {
    pub max_n: usize,
    pub max_count: Option<usize>,
    pub parallel_shards: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_n: 8,
            max_count: None,
            parallel_shards: std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1),
        }
    }
}

impl EnumerationBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 {
            return Err(Error::VertexCount(0, MAX_N));
        }
        if self.parallel_shards == 0 {
            return Err(Error::Empty("parallel_shards must be positive"));
        }
        Ok(())
    }

    fn truncate(&self, mut v: Vec<Tournament>) -> Vec<Tournament> {
        if let Some(cap) = self.max_count {
            v.truncate(cap);
        }
        v
    }
}

/// Score window a partial tournament must stay inside when the final goal
/// is a regular `n`-tournament with common score `m`.
#[derive(Clone, Copy)]
struct RegularTarget {
    n: usize,
    m: usize,
}

impl RegularTarget {
    fn low(&self, order: usize) -> usize {
        self.m.saturating_sub(self.n - order)
    }
}

/// All admissible one-vertex extensions of `parent`, canonicalized.
fn extensions(parent: &Tournament, target: Option<RegularTarget>, out: &mut Vec<Tournament>) {
    let j = parent.n() + 1;
    let new = j - 1;
    let base_rows = {
        let mut rows = [0u16; MAX_N];
        for i in 0..new {
            rows[i] = parent.out_mask(i);
        }
        rows
    };
    let emit = |mask: u16, out: &mut Vec<Tournament>| {
        let mut rows = base_rows;
        rows[new] = mask;
        for i in 0..new {
            if mask >> i & 1 == 0 {
                rows[i] |= 1 << new;
            }
        }
        out.push(Tournament::from_rows_unchecked(j as u8, rows).canonicalize());
    };

    let Some(t) = target else {
        for mask in 0..1u32 << new {
            emit(mask as u16, out);
        }
        return;
    };

    let lo = t.low(j);
    // A vertex at the ceiling must lose to the newcomer; one at the old
    // floor must beat it; anything strictly between may do either.
    let mut forced = 0u16;
    let mut free = Vec::new();
    for i in 0..new {
        let s = parent.out_degree(i);
        if s == t.m {
            forced |= 1 << i;
        } else if s + 1 > lo {
            free.push(i);
        }
    }
    let forced_count = forced.count_ones() as usize;
    if forced_count > t.m {
        return;
    }
    if j == t.n {
        // Final level: the free set is empty and the mask is determined.
        if free.is_empty() && forced_count == t.m {
            emit(forced, out);
        }
        return;
    }
    let need_lo = lo.saturating_sub(forced_count);
    let need_hi = (t.m - forced_count).min(free.len());
    for subset in 0..1u32 << free.len() {
        let picked = subset.count_ones() as usize;
        if picked < need_lo || picked > need_hi {
            continue;
        }
        let mut mask = forced;
        for (b, &i) in free.iter().enumerate() {
            if subset >> b & 1 == 1 {
                mask |= 1 << i;
            }
        }
        emit(mask, out);
    }
}

/// Extends every parent, dedups by canonical bits, and sorts the level.
fn extend_level(
    parents: &[Tournament],
    target: Option<RegularTarget>,
    shards: usize,
) -> Vec<Tournament> {
    let candidates: Vec<Tournament> = if shards > 1 && parents.len() > 64 {
        parents
            .par_iter()
            .fold(Vec::new, |mut acc, p| {
                extensions(p, target, &mut acc);
                acc
            })
            .reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                a
            })
    } else {
        let mut acc = Vec::new();
        for p in parents {
            extensions(p, target, &mut acc);
        }
        acc
    };
    let mut seen = HashSet::with_capacity(candidates.len());
    let mut level: Vec<Tournament> = candidates
        .into_iter()
        .filter(|t| seen.insert(t.bits()))
        .collect();
    level.sort_unstable_by_key(Tournament::bits);
    level
}

/// One canonical representative per isomorphism class of `n`-tournaments,
/// ordered by canonical bits.
pub fn enumerate_tournaments(n: usize, budget: &EnumerationBudget) -> Result<Vec<Tournament>> {
    budget.validate()?;
    if n == 0 || n > MAX_N {
        return Err(Error::VertexCount(n, MAX_N));
    }
    if n > budget.max_n {
        return Err(Error::OverBudget(n, budget.max_n));
    }
    let mut level = vec![Tournament::from_bits(1, 0)?];
    for _ in 1..n {
        level = extend_level(&level, None, budget.parallel_shards);
    }
    Ok(budget.truncate(level))
}

/// One canonical representative per isomorphism class of regular
/// `n`-tournaments. Orders 3..=11 run in seconds to minutes; 13 is a long
/// run unlocked by `budget.max_n >= 13`.
pub fn enumerate_regular(n: usize, budget: &EnumerationBudget) -> Result<Vec<Tournament>> {
    enumerate_regular_from(n, budget, vec![Tournament::from_bits(1, 0)?], |_, _| {})
}

/// [`enumerate_regular`] with level reporting and a resume point: growth
/// starts from `seeds` (canonical representatives of one completed level)
/// and `on_level(j, reps)` fires after each level `j` finishes, enabling
/// progress output and checkpointing of long runs.
pub fn enumerate_regular_from(
    n: usize,
    budget: &EnumerationBudget,
    seeds: Vec<Tournament>,
    mut on_level: impl FnMut(usize, &[Tournament]),
) -> Result<Vec<Tournament>> {
    budget.validate()?;
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n));
    }
    if n < 3 || n > 13 {
        return Err(Error::VertexCount(n, 13));
    }
    if n == 13 && budget.max_n < 13 {
        return Err(Error::OverBudget(n, budget.max_n));
    }
    if seeds.is_empty() {
        return Err(Error::Empty("seed level"));
    }
    let start = seeds[0].n();
    if let Some(other) = seeds.iter().find(|t| t.n() != start) {
        return Err(Error::MixedOrder(start, other.n()));
    }
    if start > n {
        return Err(Error::VertexCount(start, n));
    }
    let target = RegularTarget { n, m: (n - 1) / 2 };
    let mut level: Vec<Tournament> = seeds.iter().map(Tournament::canonicalize).collect();
    level.sort_unstable_by_key(Tournament::bits);
    level.dedup_by_key(|t| t.bits());
    for j in start + 1..=n {
        level = extend_level(&level, Some(target), budget.parallel_shards);
        on_level(j, &level);
    }
    debug_assert!(level.iter().all(Tournament::is_regular));
    Ok(budget.truncate(level))
}

/// All Landau-valid nondecreasing score sequences of order `n` in
/// lexicographic order.
pub fn enumerate_score_sequences(n: usize) -> Result<Vec<ScoreSequence>> {
    if n == 0 {
        return Err(Error::VertexCount(0, usize::MAX));
    }
    let total = n * (n - 1) / 2;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn recurse(
        n: usize,
        total: usize,
        sum: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<ScoreSequence>,
    ) {
        let k = prefix.len();
        if k == n {
            if sum == total {
                out.push(ScoreSequence::new(prefix.clone()).expect("Landau-valid by pruning"));
            }
            return;
        }
        let lo = prefix.last().copied().unwrap_or(0);
        for s in lo..n {
            let new_sum = sum + s;
            // Landau prefix bound, exact total, and the nondecreasing tail
            // bound: the remaining n-k-1 entries are each at least s.
            if new_sum < (k + 1) * k / 2 {
                continue;
            }
            if new_sum + (n - k - 1) * s > total {
                break;
            }
            if new_sum + (n - k - 1) * (n - 1) < total {
                continue;
            }
            prefix.push(s);
            recurse(n, total, new_sum, prefix, out);
            prefix.pop();
        }
    }
    recurse(n, total, 0, &mut prefix, &mut out);
    Ok(out)
}

fn raw_moment_of_scores(scores: &[usize], alpha: u32) -> i64 {
    let n = scores.len();
    let choose3 = |x: usize| (x * x.saturating_sub(1) * x.saturating_sub(2) / 6) as i64;
    match alpha {
        2 => scores.iter().map(|&s| (s * s) as i64).sum(),
        3 => {
            let cubes: i64 = scores.iter().map(|&s| (s as i64).pow(3)).sum();
            let c3 = choose3(n)
                - scores
                    .iter()
                    .map(|&s| (s * s.saturating_sub(1) / 2) as i64)
                    .sum::<i64>();
            cubes - 3 * c3
        }
        _ => panic!("score route covers alpha in {{2, 3}}"),
    }
}

/// Number of distinct exact power-sum values `f_alpha` over all
/// `n`-tournaments. For `alpha` 2 and 3 the value is score-determined, so
/// any order is fine; larger exponents enumerate within the budget.
pub fn distinct_entropy_value_count(
    n: usize,
    alpha: u32,
    budget: &EnumerationBudget,
) -> Result<u64> {
    if alpha < 2 {
        return Err(Error::BadAlpha(alpha as f64, "distinct-value counts need alpha >= 2"));
    }
    if n < 2 || n > MAX_N {
        return Err(Error::VertexCount(n, MAX_N));
    }
    if alpha <= 3 {
        let values: HashSet<i64> = enumerate_score_sequences(n)?
            .iter()
            .map(|seq| raw_moment_of_scores(seq.scores(), alpha))
            .collect();
        return Ok(values.len() as u64);
    }
    let tournaments = enumerate_tournaments(n, budget)?;
    if alpha == 4 {
        let values: HashSet<i64> = tournaments
            .iter()
            .map(|t| entropy::power_sums(t).raw4)
            .collect();
        return Ok(values.len() as u64);
    }
    let values: HashSet<num::BigRational> = tournaments
        .iter()
        .map(|t| spectral::power_sum_trace(&IntMatrix::laplacian(t), alpha))
        .collect::<Result<_>>()?;
    Ok(values.len() as u64)
}

/// One row of the distinct-values census: how many distinct `f_alpha`
/// values exist against how many score sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub alpha: u32,
    pub distinct_values: u64,
    pub score_sequences: u64,
}

/// Census of `distinct_entropy_value_count` against score-sequence counts
/// for `2 <= n <= n_max`, `2 <= alpha <= alpha_max`.
pub fn conjecture_table(
    n_max: usize,
    alpha_max: u32,
    budget: &EnumerationBudget,
) -> Result<Vec<ConjectureRow>> {
    if n_max < 2 || alpha_max < 2 {
        return Err(Error::Empty("census needs n_max >= 2 and alpha_max >= 2"));
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        let score_sequences = enumerate_score_sequences(n)?.len() as u64;
        for alpha in 2..=alpha_max {
            rows.push(ConjectureRow {
                n,
                alpha,
                distinct_values: distinct_entropy_value_count(n, alpha, budget)?,
                score_sequences,
            });
        }
    }
    Ok(rows)
}
