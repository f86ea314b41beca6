//! Las Vegas constructors: sample uniformly at random, verify with the exact
//! detectors, return a certified witness with trial statistics. Failure after
//! the trial budget is a report, not a crash.
//!
//! # Randomness contract
//!
//! Reproducibility across platforms and versions rests on a fixed consumption
//! order from a named generator:
//!
//! * Generator: ChaCha8 seeded with `seed_from_u64(seed)`; trial `t`
//!   (0-based) draws from stream `t` of that seed (`set_stream(t)`), so
//!   trials are independent and identical parameters replay identically.
//! * One `u32` is drawn per decision. Edges and pairs are visited in
//!   lexicographic `(i, j)` order, `l`-subsets in lexicographic order,
//!   elements in index order.
//! * A fair bit is the low bit of the draw (1 means edge present / sign +1).
//!   A uniform value in `[0, k)` uses rejection sampling: accept a draw `v`
//!   below `⌊2^32/k⌋·k` and return `v mod k`, else redraw. `k = 1` still
//!   consumes one draw.
//!
//! Consequently coloring `l = 2` subsets and coloring complete-graph edges
//! consume identical streams and produce identical color sequences — the
//! definitional reduction is testable bit for bit.

use num_traits::ToPrimitive;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{discrepancy_guarantee, erdos_graph_bound, erdos_hypergraph_bound, erdos_multicolor_bound};
use crate::certificate::{verify_certificate, Certificate};
use crate::error::{Error, Result};
use crate::graph::{binomial, EdgeColoring, Graph, SubsetColoring};
use crate::magnitude::Magnitude;
use crate::setsystem::{delta, SetSystem, SignColoring, Subset};

/// Hard cap on sizes taken from the theorem bounds by default. Theorem-given
/// sizes beyond this are rejected rather than silently truncated.
pub const DEFAULT_SIZE_CAP: u64 = 64;

/// Hard cap on explicitly requested vertex counts (keeps adjacency structures
/// in the tens of megabytes).
pub const EXPLICIT_SIZE_CAP: usize = 4096;

/// Hard cap on C(m, l): subset colorings are materialized as one color per
/// l-subset.
pub const SUBSET_COUNT_CAP: u128 = 1 << 20;

pub const DEFAULT_MAX_TRIALS: u64 = 1000;

/// The seeded per-trial generator implementing the randomness contract above.
pub struct TrialRng {
    rng: ChaCha8Rng,
}

impl TrialRng {
    pub fn new(seed: u64, trial: u64) -> TrialRng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        TrialRng { rng }
    }

    /// Fair bit: low bit of one u32 draw.
    pub fn bit(&mut self) -> bool {
        self.rng.next_u32() & 1 == 1
    }

    /// Uniform value in `[0, k)` by rejection sampling (unbiased for every k).
    pub fn uniform(&mut self, k: u32) -> u32 {
        assert!(k >= 1, "uniform range must be nonempty");
        let k = k as u64;
        let threshold = ((1u64 << 32) / k) * k;
        loop {
            let v = self.rng.next_u32() as u64;
            if v < threshold {
                return (v % k) as u32;
            }
        }
    }
}

/// One failed trial: its 0-based index and the reason the witness was
/// rejected (phrased by the certificate verifier).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialFailure {
    pub trial: u64,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub enum Outcome<W> {
    /// First succeeding trial (0-based) and its verified witness.
    Success { witness: W, trial: u64 },
    /// Every trial in the budget failed; one reason per trial.
    Exhausted { failures: Vec<TrialFailure> },
}

/// Result of a constructor run. Identical parameters and seed reproduce this
/// bit for bit.
#[derive(Debug, Clone)]
pub struct TrialReport<W> {
    pub seed: u64,
    pub max_trials: u64,
    pub trials_run: u64,
    pub outcome: Outcome<W>,
}

impl<W> TrialReport<W> {
    pub fn witness(&self) -> Option<&W> {
        match &self.outcome {
            Outcome::Success { witness, .. } => Some(witness),
            Outcome::Exhausted { .. } => None,
        }
    }

    pub fn success_trial(&self) -> Option<u64> {
        match &self.outcome {
            Outcome::Success { trial, .. } => Some(*trial),
            Outcome::Exhausted { .. } => None,
        }
    }

    /// Successes over trials run: 1/trials on success, 0 when exhausted.
    pub fn success_rate(&self) -> f64 {
        match &self.outcome {
            Outcome::Success { .. } => 1.0 / self.trials_run as f64,
            Outcome::Exhausted { .. } => 0.0,
        }
    }
}

/// Sequential Las Vegas loop: sample with the trial's substream, accept the
/// first witness the checker passes.
fn run_trials<W>(
    seed: u64,
    max_trials: u64,
    sample: impl Fn(&mut TrialRng) -> W,
    check: impl Fn(&W) -> std::result::Result<(), String>,
) -> TrialReport<W> {
    let mut failures = Vec::new();
    for trial in 0..max_trials {
        let mut rng = TrialRng::new(seed, trial);
        let witness = sample(&mut rng);
        match check(&witness) {
            Ok(()) => {
                return TrialReport {
                    seed,
                    max_trials,
                    trials_run: trial + 1,
                    outcome: Outcome::Success { witness, trial },
                }
            }
            Err(reason) => failures.push(TrialFailure { trial, reason }),
        }
    }
    TrialReport { seed, max_trials, trials_run: max_trials, outcome: Outcome::Exhausted { failures } }
}

fn validate_trials(max_trials: u64) -> Result<()> {
    if max_trials == 0 {
        return Err(Error::invalid("max_trials must be at least 1"));
    }
    Ok(())
}

/// Picks the default size from a theorem bound, rejecting impractically large
/// values instead of truncating them.
fn default_size(bound: &Magnitude, what: &str) -> Result<usize> {
    match bound.as_exact().and_then(|x| x.to_u64()).filter(|&v| v <= DEFAULT_SIZE_CAP) {
        Some(v) => Ok(v as usize),
        None => Err(Error::resource(format!(
            "default {what} = {bound} exceeds the practicality cap {DEFAULT_SIZE_CAP}; pass an explicit size"
        ))),
    }
}

fn validate_explicit_size(v: usize, what: &str) -> Result<()> {
    if v > EXPLICIT_SIZE_CAP {
        return Err(Error::resource(format!("{what} = {v} exceeds the cap {EXPLICIT_SIZE_CAP}")));
    }
    Ok(())
}

/// Certificate check shared by the graph/coloring constructors: the witness
/// is accepted exactly when the verifier accepts it, and the failure reason
/// is the verifier's own sentence.
fn checked(cert: Certificate) -> std::result::Result<(), String> {
    let v = verify_certificate(&cert).expect("constructed certificate is well-formed");
    if v.ok {
        Ok(())
    } else {
        Err(v.reason)
    }
}

/// Random graphs on `r` vertices (each edge present with probability 1/2)
/// until one has neither an n-clique nor an n-anticlique. `r` defaults to the
/// theorem bound 2^⌊(n−2)/2⌋ when that is at most [`DEFAULT_SIZE_CAP`].
pub fn find_ramsey_graph(
    n: usize,
    r: Option<usize>,
    seed: u64,
    max_trials: u64,
) -> Result<TrialReport<Graph>> {
    if n < 2 {
        return Err(Error::invalid("clique size n must be at least 2"));
    }
    validate_trials(max_trials)?;
    let r = match r {
        Some(r) => {
            validate_explicit_size(r, "vertex count r")?;
            r
        }
        None => default_size(&erdos_graph_bound(n as u64)?, "vertex count r")?,
    };
    let report = run_trials(
        seed,
        max_trials,
        |rng| Graph::from_fn(r, |_, _| rng.bit()),
        |g| checked(Certificate::RamseyGraph { n, graph: g.clone() }),
    );
    if let Some(g) = report.witness() {
        let v = verify_certificate(&Certificate::RamseyGraph { n, graph: g.clone() })
            .expect("constructed certificate is well-formed");
        assert!(v.ok, "returned witness failed re-verification: {}", v.reason);
    }
    Ok(report)
}

/// Random k-colorings of the edges of K_r until one has no monochromatic
/// n-clique. `r` defaults to the theorem bound k^⌊(n−2)/2⌋ (which requires
/// `k >= 2`; `k = 1` is accepted only with an explicit `r`, for testing the
/// always-failing regime).
pub fn find_multicolor_coloring(
    n: usize,
    k: u32,
    r: Option<usize>,
    seed: u64,
    max_trials: u64,
) -> Result<TrialReport<EdgeColoring>> {
    if n < 2 {
        return Err(Error::invalid("clique size n must be at least 2"));
    }
    if k == 0 {
        return Err(Error::invalid("color count k must be at least 1"));
    }
    validate_trials(max_trials)?;
    let r = match r {
        Some(r) => {
            validate_explicit_size(r, "vertex count r")?;
            r
        }
        None => default_size(&erdos_multicolor_bound(n as u64, k as u64)?, "vertex count r")?,
    };
    let report = run_trials(
        seed,
        max_trials,
        |rng| EdgeColoring::from_fn(r, k, |_, _| rng.uniform(k)),
        |c| checked(Certificate::MulticolorClique { n, coloring: c.clone() }),
    );
    if let Some(c) = report.witness() {
        let v = verify_certificate(&Certificate::MulticolorClique { n, coloring: c.clone() })
            .expect("constructed certificate is well-formed");
        assert!(v.ok, "returned witness failed re-verification: {}", v.reason);
    }
    Ok(report)
}

/// Random k-colorings of all l-subsets of an m-element universe until one has
/// no monochromatic n-set. `m` defaults to the theorem bound
/// k^⌊(n−l+1)^(l−1)/l!⌋; any `m` (default or explicit) must keep C(m, l)
/// within [`SUBSET_COUNT_CAP`] because the coloring is materialized.
pub fn find_hypergraph_coloring(
    n: usize,
    k: u32,
    l: usize,
    m: Option<usize>,
    seed: u64,
    max_trials: u64,
) -> Result<TrialReport<SubsetColoring>> {
    if l == 0 {
        return Err(Error::invalid("subset size l must be at least 1"));
    }
    if n < l {
        return Err(Error::invalid(format!("set size n = {} is below subset size l = {}", n, l)));
    }
    if k == 0 {
        return Err(Error::invalid("color count k must be at least 1"));
    }
    validate_trials(max_trials)?;
    let m = match m {
        Some(m) => {
            validate_explicit_size(m, "universe size m")?;
            m
        }
        None => {
            // the default is capped through C(m, l) below, not through the
            // vertex-count cap: universes are cheap, subset colorings are not
            let bound = erdos_hypergraph_bound(n as u64, k as u64, l as u64)?;
            match bound.as_exact().and_then(|x| x.to_u64()) {
                Some(v) if v as usize <= EXPLICIT_SIZE_CAP => v as usize,
                _ => {
                    return Err(Error::resource(format!(
                        "default universe size m = {bound} is impractically large; pass an explicit size"
                    )))
                }
            }
        }
    };
    if m < l {
        return Err(Error::invalid(format!(
            "universe size m = {} is below subset size l = {}",
            m, l
        )));
    }
    let subsets = binomial(m as u64, l as u64);
    if subsets > SUBSET_COUNT_CAP {
        return Err(Error::resource(format!(
            "C({m}, {l}) = {subsets} l-subsets exceed the cap of 2^20"
        )));
    }
    let report = run_trials(
        seed,
        max_trials,
        |rng| {
            SubsetColoring::from_fn(m, l, k, |_| rng.uniform(k))
                .expect("validated subset coloring parameters")
        },
        |c| checked(Certificate::Hyperclique { n, coloring: c.clone() }),
    );
    if let Some(c) = report.witness() {
        let v = verify_certificate(&Certificate::Hyperclique { n, coloring: c.clone() })
            .expect("constructed certificate is well-formed");
        assert!(v.ok, "returned witness failed re-verification: {}", v.reason);
    }
    Ok(report)
}

/// Random sign colorings of the universe until every set's |Δ| is strictly
/// below `a`. `a` defaults to the guarantee threshold
/// `discrepancy_guarantee(n, s)`, under which a good coloring is certain to
/// exist. A failed trial reports its worst set (largest |Δ|, first index on
/// ties).
pub fn find_low_discrepancy_coloring(
    sys: &SetSystem,
    a: Option<u64>,
    seed: u64,
    max_trials: u64,
) -> Result<TrialReport<SignColoring>> {
    validate_trials(max_trials)?;
    let a = match a {
        Some(0) => return Err(Error::invalid("threshold a must be at least 1")),
        Some(a) => a,
        None => discrepancy_guarantee(sys.n() as u64, sys.s() as u64)?,
    };
    let n = sys.n();
    let report = run_trials(
        seed,
        max_trials,
        |rng| {
            let signs: Vec<i8> = (0..n).map(|_| if rng.bit() { 1 } else { -1 }).collect();
            SignColoring::from_signs(signs).expect("signs are ±1 by construction")
        },
        |x| {
            let mut worst: Option<(u64, usize)> = None; // (|delta|, set index)
            for (idx, set) in sys.sets().iter().enumerate() {
                let d = delta(set, x).expect("coloring matches universe").unsigned_abs();
                if worst.map_or(true, |(w, _)| d > w) {
                    worst = Some((d, idx));
                }
            }
            match worst {
                Some((d, idx)) if d >= a => {
                    Err(format!("set M_{} has |delta| = {} >= a = {}", idx + 1, d, a))
                }
                _ => Ok(()),
            }
        },
    );
    if let Some(x) = report.witness() {
        let v = verify_certificate(&Certificate::Discrepancy {
            a,
            system: sys.clone(),
            coloring: x.clone(),
        })
        .expect("constructed certificate is well-formed");
        assert!(v.ok, "returned witness failed re-verification: {}", v.reason);
    }
    Ok(report)
}

/// Samples `s` random clubs as a [`SetSystem`]: each club is `club_size`
/// distinct members of an `n`-element universe, drawn uniformly (two clubs
/// may coincide). Club `c` draws from stream `c` of the seed via partial
/// Fisher–Yates, so membership is deterministic and clubs are independent.
pub fn sample_clubs(n: usize, s: usize, club_size: usize, seed: u64) -> Result<SetSystem> {
    if club_size > n {
        return Err(Error::invalid(format!(
            "club size {} exceeds the universe size {}",
            club_size, n
        )));
    }
    let mut sets = Vec::with_capacity(s);
    for club in 0..s {
        let mut rng = TrialRng::new(seed, club as u64);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..club_size {
            let j = i + rng.uniform((n - i) as u32) as usize;
            pool.swap(i, j);
        }
        let mut members: Vec<usize> = pool[..club_size].to_vec();
        members.sort_unstable();
        sets.push(Subset::from_elements(n, &members)?);
    }
    SetSystem::new(n, sets)
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, OracleLimits};

    // -- ramsey graphs ------------------------------------------------------

    #[test]
    fn default_size_for_eight_cliques_succeeds_quickly() {
        // r defaults to 2^3 = 8; the bad fraction is ≤ 2·C(8,8)·2^-28
        let report = find_ramsey_graph(8, None, 0, 1000).unwrap();
        let trial = report.success_trial().expect("succeeds");
        assert!(trial < 10, "trial {trial}");
        assert_eq!(report.witness().unwrap().r(), 8);
    }

    #[test]
    fn single_vertex_trivially_avoids_pairs() {
        let report = find_ramsey_graph(2, Some(1), 0, 5).unwrap();
        assert_eq!(report.success_trial(), Some(0));
        assert_eq!(report.trials_run, 1);
    }

    #[test]
    fn five_vertices_find_the_pentagon_eventually() {
        // success ⟺ the sample is one of the 12 labeled 5-cycles among 1024
        // graphs; 1000 trials miss with probability ≈ 7·10^-6
        let report = find_ramsey_graph(3, Some(5), 0, 1000).unwrap();
        let g = report.witness().expect("a labeled C5 appears within the budget");
        assert_eq!(g.edge_count(), 5);
        for v in 0..5 {
            let deg = (0..5).filter(|&u| u != v && g.has_edge(u, v)).count();
            assert_eq!(deg, 2);
        }
    }

    #[test]
    fn replay_is_bit_identical() {
        let a = find_ramsey_graph(3, Some(5), 42, 200).unwrap();
        let b = find_ramsey_graph(3, Some(5), 42, 200).unwrap();
        assert_eq!(a.trials_run, b.trials_run);
        assert_eq!(a.success_trial(), b.success_trial());
        match (a.witness(), b.witness()) {
            (Some(x), Some(y)) => assert_eq!(x.edges(), y.edges()),
            (None, None) => {}
            _ => panic!("replay diverged"),
        }
        // a different seed (almost surely) walks a different trajectory
        let c = find_ramsey_graph(3, Some(5), 43, 200).unwrap();
        assert!(
            a.success_trial() != c.success_trial()
                || a.witness().map(|g| g.edges()) != c.witness().map(|g| g.edges())
        );
    }

    #[test]
    fn oversized_defaults_are_rejected_not_truncated() {
        // n = 16 gives a default r of 2^7 = 128 > 64
        let err = find_ramsey_graph(16, None, 0, 10).unwrap_err();
        assert!(err.to_string().contains("128"), "{err}");
        assert!(find_ramsey_graph(1, None, 0, 10).is_err());
        assert!(find_ramsey_graph(3, Some(5000), 0, 10).is_err());
        assert!(find_ramsey_graph(3, Some(5), 0, 0).is_err());
    }

    // -- multicolor edge colorings -------------------------------------------

    #[test]
    fn small_default_board_cannot_hold_a_big_clique() {
        // n = 6, k = 2 → r defaults to 2^2 = 4 < 6: trivially no 6-clique
        let report = find_multicolor_coloring(6, 2, None, 0, 5).unwrap();
        assert_eq!(report.success_trial(), Some(0));
        assert_eq!(report.witness().unwrap().r(), 4);
    }

    #[test]
    fn three_colors_on_eight_vertices_with_fixed_seed() {
        let report = find_multicolor_coloring(4, 3, Some(8), 0, 1000).unwrap();
        assert!(report.success_trial().is_some());
    }

    #[test]
    fn one_color_fails_every_trial() {
        let report = find_multicolor_coloring(2, 1, Some(2), 0, 5).unwrap();
        match &report.outcome {
            Outcome::Exhausted { failures } => {
                assert_eq!(failures.len(), 5);
                assert_eq!(failures[0].trial, 0);
                assert!(failures[0].reason.contains("color 1"), "{}", failures[0].reason);
            }
            Outcome::Success { .. } => panic!("monochromatic everything cannot succeed"),
        }
        assert_eq!(report.success_rate(), 0.0);
        // k = 1 without an explicit r is rejected (the theorem bound needs k >= 2)
        assert!(find_multicolor_coloring(4, 1, None, 0, 5).is_err());
    }

    // -- hypergraph subset colorings -------------------------------------------

    #[test]
    fn twenty_point_universe_with_triples() {
        let report = find_hypergraph_coloring(10, 2, 3, Some(20), 0, 100).unwrap();
        assert_eq!(report.success_trial(), Some(0)); // mono 10-sets are astronomically rare
        let c = report.witness().unwrap();
        assert_eq!(c.m(), 20);
        assert_eq!(c.l(), 3);
    }

    #[test]
    fn universe_smaller_than_target_set_is_trivial() {
        let report = find_hypergraph_coloring(5, 2, 2, Some(3), 7, 5).unwrap();
        assert_eq!(report.success_trial(), Some(0));
    }

    #[test]
    fn pair_coloring_consumes_the_same_stream_as_edge_coloring() {
        // definitional reduction l = 2 ⟷ edge coloring: same seed, same
        // stream order, hence identical color sequences and trial counts
        let hyper = find_hypergraph_coloring(4, 3, 2, Some(6), 7, 50).unwrap();
        let multi = find_multicolor_coloring(4, 3, Some(6), 7, 50).unwrap();
        assert_eq!(hyper.success_trial(), multi.success_trial());
        let hc = hyper.witness().unwrap();
        let mc = multi.witness().unwrap();
        assert_eq!(hc.colors(), mc.colors());
    }

    #[test]
    fn subset_count_cap_is_enforced() {
        // C(1024, 3) ≈ 1.8·10^8 > 2^20
        let err = find_hypergraph_coloring(10, 2, 3, Some(1024), 0, 10).unwrap_err();
        assert!(err.to_string().contains("C(1024, 3)"), "{err}");
        // and the default m for n = 10, k = 2, l = 3 is the bound 2^10 = 1024
        let err = find_hypergraph_coloring(10, 2, 3, None, 0, 10).unwrap_err();
        assert!(err.to_string().contains("1024"), "{err}");
        assert!(find_hypergraph_coloring(2, 2, 3, None, 0, 10).is_err()); // n < l
        assert!(find_hypergraph_coloring(3, 0, 3, Some(5), 0, 10).is_err());
    }

    // -- low-discrepancy colorings ------------------------------------------------

    #[test]
    fn empty_sets_are_always_balanced() {
        let sys = SetSystem::from_elements(4, &[vec![], vec![]]).unwrap();
        let report = find_low_discrepancy_coloring(&sys, Some(1), 0, 5).unwrap();
        assert_eq!(report.success_trial(), Some(0));
    }

    #[test]
    fn impossible_threshold_reports_the_worst_set_each_trial() {
        // a singleton always has |Δ| = 1, so a = 1 can never be met
        let sys = SetSystem::from_elements(3, &[vec![], vec![1]]).unwrap();
        let report = find_low_discrepancy_coloring(&sys, Some(1), 0, 4).unwrap();
        match &report.outcome {
            Outcome::Exhausted { failures } => {
                assert_eq!(failures.len(), 4);
                for f in failures {
                    assert_eq!(f.reason, "set M_2 has |delta| = 1 >= a = 1");
                }
            }
            Outcome::Success { .. } => panic!("cannot succeed"),
        }
    }

    #[test]
    fn guarantee_threshold_succeeds_and_beats_the_oracle_optimum() {
        let sys = sample_clubs(12, 4, 5, 9).unwrap();
        let report = find_low_discrepancy_coloring(&sys, None, 0, 1000).unwrap();
        assert!(report.success_trial().is_some());
        let a = discrepancy_guarantee(12, 4).unwrap();
        let (optimum, _) = oracle::min_max_discrepancy(&sys, &OracleLimits::default()).unwrap();
        assert!(optimum < a, "optimum {optimum} vs guarantee {a}");
    }

    #[test]
    fn the_thousand_person_town() {
        // 1000 inhabitants, 300 clubs of 50: every coloring keeps every
        // club's imbalance below 150 (a club of 50 cannot exceed 50), so the
        // first trial certifies
        let sys = sample_clubs(1000, 300, 50, 0).unwrap();
        let report = find_low_discrepancy_coloring(&sys, Some(150), 0, 10).unwrap();
        assert_eq!(report.success_trial(), Some(0));
    }

    // -- club sampling ---------------------------------------------------------

    #[test]
    fn clubs_have_the_requested_shape_and_replay() {
        let sys = sample_clubs(30, 5, 7, 3).unwrap();
        assert_eq!(sys.n(), 30);
        assert_eq!(sys.s(), 5);
        for set in sys.sets() {
            assert_eq!(set.card(), 7);
        }
        let again = sample_clubs(30, 5, 7, 3).unwrap();
        for (a, b) in sys.sets().iter().zip(again.sets()) {
            assert_eq!(a.elements(), b.elements());
        }
        assert!(sample_clubs(5, 2, 6, 0).is_err());
    }

    // -- randomness quality -------------------------------------------------------

    #[test]
    fn coordinate_means_sit_in_the_binomial_band() {
        // 10^5 sign vectors at n = 10: per-coordinate mean within 0.02 of 0
        // (more than 6 sigma, so this cannot flake)
        let n = 10usize;
        let trials = 100_000u64;
        let mut sums = vec![0i64; n];
        for t in 0..trials {
            let mut rng = TrialRng::new(0, t);
            for item in sums.iter_mut() {
                *item += if rng.bit() { 1 } else { -1 };
            }
        }
        for (j, s) in sums.iter().enumerate() {
            let mean = *s as f64 / trials as f64;
            assert!(mean.abs() < 0.02, "coordinate {j}: mean {mean}");
        }
    }

    #[test]
    fn rejection_sampling_is_exactly_uniform_in_distribution_shape() {
        // side regression: small-range draws cover all residues and nothing else
        let mut rng = TrialRng::new(5, 0);
        let mut seen = [0u32; 3];
        for _ in 0..3000 {
            seen[rng.uniform(3) as usize] += 1;
        }
        for (v, count) in seen.iter().enumerate() {
            assert!(*count > 800, "value {v} drawn {count} times");
        }
        assert_eq!(TrialRng::new(5, 0).uniform(1), 0);
    }
}
