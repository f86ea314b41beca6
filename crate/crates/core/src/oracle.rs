//! Exhaustive desk-scale oracles: exact counts over all sign colorings or all
//! graphs, grounding the probabilistic bounds in true numbers.
//!
//! All enumerations are deterministic and independent of the worker count:
//! the search space is partitioned into chunks by a fixed high-bit prefix of
//! the enumeration word, chunk results are produced in chunk order, and the
//! combining operations (sum; min over (value, lex rank)) are commutative and
//! associative, so any rayon pool yields identical answers bit for bit.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{binomial, next_combination, pair_index};
use crate::setsystem::{SetSystem, SignColoring, Subset};

/// Enumeration caps. Defaults keep the worst case around a minute of work:
/// 2^28 sign vectors, 2^30 graphs. Raise them explicitly to go further.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    /// Cap on the universe size `n` of sign-vector enumerations (2^n words).
    pub max_sign_bits: u32,
    /// Cap on the edge count C(r,2) of graph enumerations (2^(C(r,2)) words).
    pub max_edge_bits: u32,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_sign_bits: 28, max_edge_bits: 30 }
    }
}

/// How to compute a coloring count: by enumerating all 2^n sign vectors, or
/// by the exact binomial closed form (no enumeration, no cap).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    Enumerate,
    ClosedForm,
}

// ---------------------------------------------------------------------------
// the sign-vector sweep engine
// ---------------------------------------------------------------------------

/// Per-chunk observer of the sweep. The engine initializes the deltas for the
/// chunk's first word and calls `begin`, then alternates `delta_changed`
/// (once per set affected by a bit flip) and `visit` (once per word,
/// including the first).
trait SweepVisitor {
    fn begin(&mut self, deltas: &[i64]);
    fn delta_changed(&mut self, old: i64, new: i64);
    fn visit(&mut self, word: u64);
}

/// Walks all 2^n sign words (bit j set ⟺ x_j = −1), maintaining Δ_{M_k} for
/// every set incrementally: within a chunk, consecutive words differ in one
/// low bit (reflected Gray order), so a flip touches only the sets containing
/// that element. Returns one visitor per chunk, in chunk order.
fn sweep_signs<V, F>(sys: &SetSystem, limits: &OracleLimits, make: F) -> Result<Vec<V>>
where
    V: SweepVisitor + Send,
    F: Fn() -> V + Sync,
{
    let n = sys.n() as u32;
    if n > limits.max_sign_bits {
        return Err(Error::resource(format!(
            "enumeration over 2^{} sign vectors exceeds the cap of 2^{}",
            n, limits.max_sign_bits
        )));
    }
    let mut elem_sets: Vec<Vec<u32>> = vec![Vec::new(); n as usize];
    for (k, set) in sys.sets().iter().enumerate() {
        for e in set.iter() {
            elem_sets[e].push(k as u32);
        }
    }
    let p = n.min(6); // prefix bits; 64 chunks saturate any desk machine
    let q = n - p;
    let visitors = (0u64..1 << p)
        .into_par_iter()
        .map(|chunk| {
            let w0 = chunk << q;
            let mut deltas: Vec<i64> = sys
                .sets()
                .iter()
                .map(|set| set.iter().map(|e| if w0 >> e & 1 == 1 { -1i64 } else { 1 }).sum())
                .collect();
            let mut visitor = make();
            visitor.begin(&deltas);
            visitor.visit(w0);
            let mut g = 0u64;
            for i in 1..1u64 << q {
                let b = i.trailing_zeros();
                g ^= 1 << b;
                let step = if g >> b & 1 == 1 { -2 } else { 2 };
                for &k in &elem_sets[b as usize] {
                    let old = deltas[k as usize];
                    let new = old + step;
                    deltas[k as usize] = new;
                    visitor.delta_changed(old, new);
                }
                visitor.visit(w0 | g);
            }
            visitor
        })
        .collect();
    Ok(visitors)
}

/// Counts words for which at least one set's delta qualifies. Maintains the
/// number of currently qualifying sets so each word costs O(sets touched by
/// the flip), not O(s).
struct ExceedCounter {
    a: i64,
    two_sided: bool,
    hot: usize,
    count: u64,
}

impl ExceedCounter {
    fn qualifies(&self, d: i64) -> bool {
        if self.two_sided {
            d.abs() >= self.a
        } else {
            d >= self.a
        }
    }
}

impl SweepVisitor for ExceedCounter {
    fn begin(&mut self, deltas: &[i64]) {
        self.hot = deltas.iter().filter(|&&d| self.qualifies(d)).count();
    }

    fn delta_changed(&mut self, old: i64, new: i64) {
        match (self.qualifies(old), self.qualifies(new)) {
            (false, true) => self.hot += 1,
            (true, false) => self.hot -= 1,
            _ => {}
        }
    }

    fn visit(&mut self, _word: u64) {
        if self.hot > 0 {
            self.count += 1;
        }
    }
}

/// Tracks the minimum over words of max_k |Δ_k|, with the lexicographically
/// first witness. Lex order on colorings: +1 < −1, position 0 most
/// significant — i.e. ascending order of the bit-reversed enumeration word.
/// A bucket histogram of |Δ| values keeps the running maximum amortized O(1).
struct MinMaxTracker {
    n: u32,
    buckets: Vec<u32>,
    cur_max: usize,
    best_value: u64,
    best_rank: u64,
    best_word: u64,
}

impl MinMaxTracker {
    fn new(n: u32) -> MinMaxTracker {
        MinMaxTracker {
            n,
            buckets: vec![0; n as usize + 1],
            cur_max: 0,
            best_value: u64::MAX,
            best_rank: u64::MAX,
            best_word: 0,
        }
    }

    fn rank(&self, word: u64) -> u64 {
        if self.n == 0 {
            0
        } else {
            word.reverse_bits() >> (64 - self.n)
        }
    }
}

impl SweepVisitor for MinMaxTracker {
    fn begin(&mut self, deltas: &[i64]) {
        self.buckets.fill(0);
        self.cur_max = 0;
        for &d in deltas {
            let v = d.unsigned_abs() as usize;
            self.buckets[v] += 1;
            self.cur_max = self.cur_max.max(v);
        }
    }

    fn delta_changed(&mut self, old: i64, new: i64) {
        let old_v = old.unsigned_abs() as usize;
        let new_v = new.unsigned_abs() as usize;
        self.buckets[old_v] -= 1;
        self.buckets[new_v] += 1;
        if new_v > self.cur_max {
            self.cur_max = new_v;
        }
    }

    fn visit(&mut self, word: u64) {
        while self.cur_max > 0 && self.buckets[self.cur_max] == 0 {
            self.cur_max -= 1;
        }
        let value = self.cur_max as u64;
        if value < self.best_value {
            self.best_value = value;
            self.best_rank = self.rank(word);
            self.best_word = word;
        } else if value == self.best_value {
            let rank = self.rank(word);
            if rank < self.best_rank {
                self.best_rank = rank;
                self.best_word = word;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// public oracles
// ---------------------------------------------------------------------------

/// Exact |{x ∈ {−1,+1}^n : Δ_M(x) >= a}| for one set M in universe [n]
/// (n = `m.universe()`), by full enumeration or by the closed form
/// 2^(n−|M|) · Σ_{j : 2j−|M| >= a} C(|M|, j). Requires `a >= 1`; enumeration
/// is subject to `limits.max_sign_bits`, the closed form is uncapped.
pub fn count_bad_colorings(
    m: &Subset,
    a: u64,
    mode: CountMode,
    limits: &OracleLimits,
) -> Result<BigUint> {
    if a == 0 {
        return Err(Error::invalid("threshold a must be at least 1"));
    }
    let n = m.universe();
    match mode {
        CountMode::ClosedForm => {
            let mm = m.card();
            let mut qualifying = BigUint::zero();
            for j in 0..=mm {
                if 2 * j as i64 - mm as i64 >= a as i64 {
                    qualifying += crate::bounds::binomial_big(mm as u64, j as u64);
                }
            }
            Ok(qualifying << (n - mm))
        }
        CountMode::Enumerate => {
            let sys = SetSystem::new(n, vec![m.clone()])?;
            let a = i64::try_from(a).map_err(|_| Error::invalid("threshold a too large"))?;
            let chunks = sweep_signs(&sys, limits, || ExceedCounter {
                a,
                two_sided: false,
                hot: 0,
                count: 0,
            })?;
            Ok(chunks.iter().map(|c| c.count).sum::<u64>().into())
        }
    }
}

/// Exact count of colorings x with |Δ_{M_k}(x)| >= a for at least one set of
/// the system, by full enumeration. Requires `a >= 1`.
pub fn count_exceeding_colorings(sys: &SetSystem, a: u64, limits: &OracleLimits) -> Result<BigUint> {
    if a == 0 {
        return Err(Error::invalid("threshold a must be at least 1"));
    }
    let a = i64::try_from(a).map_err(|_| Error::invalid("threshold a too large"))?;
    let chunks = sweep_signs(sys, limits, || ExceedCounter {
        a,
        two_sided: true,
        hot: 0,
        count: 0,
    })?;
    Ok(chunks.iter().map(|c| c.count).sum::<u64>().into())
}

/// True optimum min over all 2^n colorings of max_k |Δ_{M_k}|, with the
/// lexicographically first optimal coloring (+1 < −1, position 0 most
/// significant). The empty system has optimum 0 with the all-+1 witness.
pub fn min_max_discrepancy(sys: &SetSystem, limits: &OracleLimits) -> Result<(u64, SignColoring)> {
    let n = sys.n() as u32;
    let chunks = sweep_signs(sys, limits, || MinMaxTracker::new(n))?;
    let best = chunks
        .iter()
        .min_by_key(|t| (t.best_value, t.best_rank))
        .expect("at least one chunk");
    let signs: Vec<i8> =
        (0..n as usize).map(|j| if best.best_word >> j & 1 == 1 { -1 } else { 1 }).collect();
    Ok((best.best_value, SignColoring::from_signs(signs)?))
}

/// Exact count of graphs on `r` labeled vertices containing an n-clique or an
/// n-anticlique, by enumerating all 2^(C(r,2)) graphs against precomputed
/// n-subset edge masks. Requires `2 <= n <= r` and C(r,2) within
/// `limits.max_edge_bits`.
pub fn count_ramsey_graphs(r: u32, n: u32, limits: &OracleLimits) -> Result<u64> {
    if n < 2 {
        return Err(Error::invalid("clique size n must be at least 2"));
    }
    if n > r {
        return Err(Error::invalid(format!("clique size n = {} exceeds vertex count r = {}", n, r)));
    }
    let bits = binomial(r as u64, 2);
    if bits > limits.max_edge_bits as u128 {
        return Err(Error::resource(format!(
            "enumeration over 2^{} graphs exceeds the cap of 2^{}",
            bits, limits.max_edge_bits
        )));
    }
    let bits = bits as u32;

    // one mask per n-subset: the C(n,2) edge positions inside the subset
    let mut masks: Vec<u64> = Vec::new();
    let mut combo: Vec<usize> = (0..n as usize).collect();
    loop {
        let mut mask = 0u64;
        for (idx, &i) in combo.iter().enumerate() {
            for &j in &combo[idx + 1..] {
                mask |= 1 << pair_index(r as usize, i, j);
            }
        }
        masks.push(mask);
        if !next_combination(&mut combo, r as usize) {
            break;
        }
    }

    let p = bits.min(6);
    let q = bits - p;
    let count = (0u64..1 << p)
        .into_par_iter()
        .map(|chunk| {
            let base = chunk << q;
            let mut local = 0u64;
            for i in 0..1u64 << q {
                let w = base | i;
                if masks.iter().any(|&m| w & m == m || w & m == 0) {
                    local += 1;
                }
            }
            local
        })
        .sum();
    Ok(count)
}

// ---------------------------------------------------------------------------
