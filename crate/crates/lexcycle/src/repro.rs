//! Named reproduction scenarios: each target replays a bundled fixture
//! trace or runs a seeded property campaign and reports one pass/fail line
//! per claim checked. The CLI `repro` command and the acceptance test
//! suite both run these.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::checkers::{check_cocomp_order, check_pi_order, clique_split, find_induced_domino};
use crate::constructions::{fixture_g3, fixture_g4, fixture_lexdfs_example, gen_two_chain};
use crate::cycle::{
    default_max_sweeps, detect_cycle, starjoin_cycle_check, transitive_orientation,
};
use crate::generators::{gen_cobipartite, gen_interval, gen_permutation_graph, gen_tree,
    gen_unit_interval, random_ordering};
use crate::graph::Graph;
use crate::matrix::{cobipartite_matrix_with_split, BinaryMatrix};
use crate::ordering::Ordering;
use crate::sweep::{first_sweep, plus_sweep, sweep_sequence, SearchKind};

/// One checked claim.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckLine {
    fn ok(name: &str, detail: String) -> Self {
        CheckLine { name: name.to_string(), pass: true, detail }
    }

    fn fail(name: &str, detail: String) -> Self {
        CheckLine { name: name.to_string(), pass: false, detail }
    }

    fn from_result(name: &str, result: Result<String, String>) -> Self {
        match result {
            Ok(detail) => CheckLine::ok(name, detail),
            Err(detail) => CheckLine::fail(name, detail),
        }
    }
}

/// Result of one repro target.
#[derive(Debug, Clone)]
pub struct ReproReport {
    pub target: Target,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
}

impl ReproReport {
    fn new(target: Target, checks: Vec<CheckLine>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        ReproReport { target, pass, checks }
    }
}

/// Campaign configuration for the randomized targets; fixture targets
/// ignore `trials`.
#[derive(Debug, Clone, Copy)]
pub struct Campaign {
    pub trials: usize,
    pub seed: u64,
    pub jobs: usize,
    /// Optional override of the per-run sweep budget.
    pub budget: Option<usize>,
}

impl Default for Campaign {
    fn default() -> Self {
        Campaign { trials: 200, seed: 7, jobs: 1, budget: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Figure1,
    Figure2,
    Corollary1,
    G6,
    Lexdfs,
    Trees,
    ProperInterval,
    Interval,
    Cobipartite,
    DominoFree,
}

impl Target {
    pub const ALL: [Target; 10] = [
        Target::Figure1,
        Target::Figure2,
        Target::Corollary1,
        Target::G6,
        Target::Lexdfs,
        Target::Trees,
        Target::ProperInterval,
        Target::Interval,
        Target::Cobipartite,
        Target::DominoFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Figure1 => "figure1",
            Target::Figure2 => "figure2",
            Target::Corollary1 => "corollary1",
            Target::G6 => "g6",
            Target::Lexdfs => "lexdfs",
            Target::Trees => "trees",
            Target::ProperInterval => "properinterval",
            Target::Interval => "interval",
            Target::Cobipartite => "cobipartite",
            Target::DominoFree => "dominofree",
        }
    }

    pub fn from_name(name: &str) -> Option<Target> {
        Target::ALL.into_iter().find(|t| t.name() == name)
    }
}

pub fn run_target(target: Target, cfg: &Campaign) -> ReproReport {
    let checks = match target {
        Target::Figure1 => figure1(),
        Target::Figure2 => figure2(),
        Target::Corollary1 => corollary1(),
        Target::G6 => g6(),
        Target::Lexdfs => lexdfs(),
        Target::Trees => trees(cfg),
        Target::ProperInterval => proper_interval(cfg),
        Target::Interval => interval(cfg),
        Target::Cobipartite => cobipartite(cfg),
        Target::DominoFree => domino_free(cfg),
    };
    ReproReport::new(target, checks)
}

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

fn line(g: &Graph, o: &Ordering) -> String {
    o.names(g).join(" ")
}

fn trial_seed(base: u64, trial: usize) -> u64 {
    base ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Runs independent trials, possibly across threads; failures come back
/// sorted by trial index so the aggregate does not depend on `jobs`.
pub fn run_trials<F>(trials: usize, jobs: usize, f: &F) -> Vec<(usize, String)>
where
    F: Fn(usize) -> Result<(), String> + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 {
        let mut fails = Vec::new();
        for t in 0..trials {
            if let Err(e) = f(t) {
                fails.push((t, e));
            }
        }
        return fails;
    }
    let fails = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        let chunk = trials.div_ceil(jobs);
        for j in 0..jobs {
            let lo = j * chunk;
            let hi = ((j + 1) * chunk).min(trials);
            if lo >= hi {
                continue;
            }
            let fails = &fails;
            scope.spawn(move || {
                for t in lo..hi {
                    if let Err(e) = f(t) {
                        fails.lock().unwrap().push((t, e));
                    }
                }
            });
        }
    });
    let mut fails = fails.into_inner().unwrap();
    fails.sort_by_key(|&(t, _)| t);
    fails
}

fn campaign_line(name: &str, trials: usize, fails: &[(usize, String)]) -> CheckLine {
    if fails.is_empty() {
        CheckLine::ok(name, format!("{trials} trials, zero failures"))
    } else {
        CheckLine::fail(
            name,
            format!(
                "{} of {trials} trials failed; first: trial {}: {}",
                fails.len(),
                fails[0].0,
                fails[0].1
            ),
        )
    }
}

fn expect_trace(
    g: &Graph,
    got: &[Ordering],
    want: &[&[&str]],
) -> Result<String, String> {
    for (i, want_names) in want.iter().enumerate() {
        let got_names = got[i].names(g);
        if got_names != *want_names {
            return Err(format!(
                "sweep {} diverges:\n  expected: {}\n  got:      {}",
                i + 1,
                want_names.join(" "),
                got_names.join(" ")
            ));
        }
    }
    Ok(format!("{} sweeps match", want.len()))
}

// ---------------------------------------------------------------------------
// fixture targets
// ---------------------------------------------------------------------------

fn figure1() -> Vec<CheckLine> {
    let f = fixture_g3();
    let g = &f.graph;
    let mut checks = Vec::new();
    match sweep_sequence(SearchKind::LexBfs, g, f.ordering("sigma1"), 3) {
        Ok(trace) => {
            let want: Vec<Vec<&str>> = vec![
                f.ordering("sigma2").names(g),
                f.ordering("sigma3").names(g),
                f.ordering("sigma1").names(g),
            ];
            let want_refs: Vec<&[&str]> = want.iter().map(|w| w.as_slice()).collect();
            checks.push(CheckLine::from_result(
                "three sweeps from sigma1 print sigma2, sigma3, sigma1",
                expect_trace(g, &trace.orderings, &want_refs),
            ));
        }
        Err(e) => checks.push(CheckLine::fail("sweep sequence", e.to_string())),
    }
    match detect_cycle(SearchKind::LexBfs, g, f.ordering("sigma1"), default_max_sweeps(9)) {
        Ok(rep) => checks.push(if rep.cycle_length == 3 {
            CheckLine::ok("cycle length is 3", format!("tail {} cycle 3", rep.tail))
        } else {
            CheckLine::fail("cycle length is 3", format!("got {}", rep.cycle_length))
        }),
        Err(e) => checks.push(CheckLine::fail("cycle length is 3", e.to_string())),
    }
    checks
}

fn figure2() -> Vec<CheckLine> {
    let f = fixture_g4();
    let g = &f.graph;
    let mut checks = Vec::new();
    match sweep_sequence(SearchKind::LexBfs, g, f.ordering("mu1"), 4) {
        Ok(trace) => {
            let want: Vec<Vec<&str>> = vec![
                f.ordering("mu2").names(g),
                f.ordering("mu3").names(g),
                f.ordering("mu4").names(g),
                f.ordering("mu1").names(g),
            ];
            let want_refs: Vec<&[&str]> = want.iter().map(|w| w.as_slice()).collect();
            checks.push(CheckLine::from_result(
                "four sweeps from mu1 print mu2, mu3, mu4, mu1",
                expect_trace(g, &trace.orderings, &want_refs),
            ));
        }
        Err(e) => checks.push(CheckLine::fail("sweep sequence", e.to_string())),
    }
    match detect_cycle(SearchKind::LexBfs, g, f.ordering("mu1"), default_max_sweeps(12)) {
        Ok(rep) => checks.push(if rep.cycle_length == 4 {
            CheckLine::ok("cycle length is 4", format!("tail {} cycle 4", rep.tail))
        } else {
            CheckLine::fail("cycle length is 4", format!("got {}", rep.cycle_length))
        }),
        Err(e) => checks.push(CheckLine::fail("cycle length is 4", e.to_string())),
    }
    checks
}

fn corollary1() -> Vec<CheckLine> {
    use crate::checkers::asteroidal_number;
    let f3 = fixture_g3();
    let f4 = fixture_g4();
    let mut checks = Vec::new();
    let report = match starjoin_cycle_check(
        &[(&f3.graph, f3.ordering("sigma1")), (&f4.graph, f4.ordering("mu1"))],
        None,
    ) {
        Ok(r) => r,
        Err(e) => {
            checks.push(CheckLine::fail("starjoin cycle", e.to_string()));
            return checks;
        }
    };
    checks.push(if report.component_cycle_lengths == [3, 4] {
        CheckLine::ok("component cycles are 3 and 4", String::new())
    } else {
        CheckLine::fail(
            "component cycles are 3 and 4",
            format!("got {:?}", report.component_cycle_lengths),
        )
    });
    checks.push(if report.divisible && report.lcm == 12 {
        CheckLine::ok(
            "joint cycle length is a multiple of 12",
            format!("cycle length {}", report.cycle_length),
        )
    } else {
        CheckLine::fail(
            "joint cycle length is a multiple of 12",
            format!("cycle length {} lcm {}", report.cycle_length, report.lcm),
        )
    });
    let an = asteroidal_number(&report.graph, 8);
    checks.push(if report.cycle_length > an.value {
        CheckLine::ok(
            "cycle length exceeds the asteroidal number",
            format!("{} > {}", report.cycle_length, an.value),
        )
    } else {
        CheckLine::fail(
            "cycle length exceeds the asteroidal number",
            format!("{} vs {}", report.cycle_length, an.value),
        )
    });
    checks.push(if an.exact && an.value == 5 {
        CheckLine::ok("asteroidal number of the starjoin is 5", String::new())
    } else {
        CheckLine::fail(
            "asteroidal number of the starjoin is 5",
            format!(
                "computed {} (exact: {}), witness {:?}",
                an.value,
                an.exact,
                an.witness.iter().map(|&v| report.graph.name(v)).collect::<Vec<_>>()
            ),
        )
    });
    checks
}

fn g6() -> Vec<CheckLine> {
    let mut checks = Vec::new();
    let f = match gen_two_chain(6) {
        Ok(f) => f,
        Err(e) => return vec![CheckLine::fail("two-chain construction", e.to_string())],
    };
    let co = f.graph.complement();
    let tau = f.ordering("tau");

    let want: [&[&str]; 8] = [
        &["y", "a2", "b2", "b4", "a4", "a6", "b6", "a5", "b5", "b3", "a1", "a3", "x", "b1"],
        &["b1", "x", "a1", "a3", "b3", "b5", "a5", "a6", "b6", "b4", "a4", "a2", "b2", "y"],
        &["y", "b2", "a2", "a4", "b4", "b6", "a6", "b5", "a5", "a1", "a3", "b3", "x", "b1"],
        &["b1", "x", "b3", "a3", "a1", "a5", "b5", "b6", "a6", "a4", "a2", "b4", "b2", "y"],
        &["y", "b2", "b4", "a2", "a4", "a6", "b6", "a5", "a1", "a3", "b5", "b3", "x", "b1"],
        &["b1", "x", "b3", "b5", "a3", "a1", "a5", "a6", "a4", "a2", "b6", "b4", "b2", "y"],
        &["y", "b2", "b4", "b6", "a2", "a4", "a6", "a5", "a1", "a3", "b5", "b3", "x", "b1"],
        &["b1", "x", "b3", "b5", "a3", "a1", "a5", "a6", "a4", "a2", "b6", "b4", "b2", "y"],
    ];
    match sweep_sequence(SearchKind::LexBfs, &co, tau, 8) {
        Ok(trace) => {
            checks.push(CheckLine::from_result(
                "eight sweeps from tau on the complement match the trace",
                expect_trace(&co, &trace.orderings, &want),
            ));
            checks.push(if trace.orderings[7] == trace.orderings[5] {
                CheckLine::ok("sweep 8 equals sweep 6", String::new())
            } else {
                CheckLine::fail(
                    "sweep 8 equals sweep 6",
                    format!(
                        "sweep 6: {}\nsweep 8: {}",
                        line(&co, &trace.orderings[5]),
                        line(&co, &trace.orderings[7])
                    ),
                )
            });
        }
        Err(e) => checks.push(CheckLine::fail("sweep sequence", e.to_string())),
    }
    match transitive_orientation(&co, Some(tau), 64) {
        Ok(run) => checks.push(if run.stop_index == 8 {
            CheckLine::ok("orientation loop stops at sweep 8", String::new())
        } else {
            CheckLine::fail(
                "orientation loop stops at sweep 8",
                format!("stopped at {}", run.stop_index),
            )
        }),
        Err(e) => checks.push(CheckLine::fail("orientation loop stops at sweep 8", e.to_string())),
    }
    checks
}

fn lexdfs() -> Vec<CheckLine> {
    let f = fixture_lexdfs_example();
    let g = &f.graph;
    let mut checks = Vec::new();
    match detect_cycle(SearchKind::LexDfs, g, f.ordering("sigma1"), 64) {
        Ok(rep) => {
            checks.push(if rep.cycle_length == 4 && rep.tail == 0 {
                CheckLine::ok("LexDFS sweeps cycle with period 4", String::new())
            } else {
                CheckLine::fail(
                    "LexDFS sweeps cycle with period 4",
                    format!("cycle {} tail {}", rep.cycle_length, rep.tail),
                )
            });
            let want: Vec<Vec<&str>> = vec![
                f.ordering("sigma2").names(g),
                f.ordering("sigma3").names(g),
                f.ordering("sigma4").names(g),
                f.ordering("sigma1").names(g),
            ];
            let want_refs: Vec<&[&str]> = want.iter().map(|w| w.as_slice()).collect();
            checks.push(CheckLine::from_result(
                "the cycle lists sigma2, sigma3, sigma4, sigma1",
                expect_trace(g, &rep.cycle, &want_refs),
            ));
            let bad = rep
                .cycle
                .iter()
                .position(|o| check_cocomp_order(g, o).is_ok());
            checks.push(match bad {
                None => CheckLine::ok(
                    "no ordering on the cycle is a cocomparability order",
                    String::new(),
                ),
                Some(i) => CheckLine::fail(
                    "no ordering on the cycle is a cocomparability order",
                    format!("cycle entry {} passes", i + 1),
                ),
            });
        }
        Err(e) => checks.push(CheckLine::fail("LexDFS cycle", e.to_string())),
    }
    checks.push(match check_cocomp_order(g, f.ordering("tau")) {
        Ok(()) => CheckLine::ok("tau is a cocomparability order", String::new()),
        Err(v) => CheckLine::fail(
            "tau is a cocomparability order",
            format!("violation {:?}", v.witness),
        ),
    });
    checks
}

// ---------------------------------------------------------------------------
// campaign targets
// ---------------------------------------------------------------------------

fn proper_interval(cfg: &Campaign) -> Vec<CheckLine> {
    let f = |trial: usize| -> Result<(), String> {
        let ts = trial_seed(cfg.seed, trial);
        let mut r = ChaCha8Rng::seed_from_u64(ts);
        let n = r.gen_range(6..=40);
        let (g, pi) = gen_unit_interval(n, ts ^ 0xa5a5).map_err(|e| e.to_string())?;
        check_pi_order(&g, &pi)
            .map_err(|v| format!("seed {ts}: witness not a PI-order: {:?}", v.witness))?;
        let swept = plus_sweep(SearchKind::LexBfs, &g, &pi).map_err(|e| e.to_string())?;
        if swept != pi.dual() {
            return Err(format!(
                "seed {ts}: sweep of a PI-order is not its dual\n  pi:    {}\n  sweep: {}",
                line(&g, &pi),
                line(&g, &swept)
            ));
        }
        // third sweep from the default seed is a PI-order; two more sweeps
        // close the 2-cycle
        let s1 = first_sweep(SearchKind::LexBfs, &g, None).map_err(|e| e.to_string())?;
        let trace = sweep_sequence(SearchKind::LexBfs, &g, &s1, 4).map_err(|e| e.to_string())?;
        let s3 = &trace.orderings[1];
        let s5 = &trace.orderings[3];
        check_pi_order(&g, s3)
            .map_err(|v| format!("seed {ts}: third sweep not a PI-order: {:?}", v.witness))?;
        if s5 != s3 {
            return Err(format!("seed {ts}: fifth sweep differs from the third"));
        }
        let run = transitive_orientation(&g, None, cfg.budget.unwrap_or(64))
            .map_err(|e| format!("seed {ts}: {e}"))?;
        if run.stop_index > 5 {
            return Err(format!("seed {ts}: orientation stopped at {}", run.stop_index));
        }
        Ok(())
    };
    let fails = run_trials(cfg.trials, cfg.jobs, &f);
    vec![campaign_line(
        "unit-interval graphs: PI sweeps reverse and the orientation loop stops by sweep 5",
        cfg.trials,
        &fails,
    )]
}

fn interval(cfg: &Campaign) -> Vec<CheckLine> {
    let f = |trial: usize| -> Result<(), String> {
        let ts = trial_seed(cfg.seed, trial);
        let mut r = ChaCha8Rng::seed_from_u64(ts);
        let n = r.gen_range(6..=40);
        let (g, witness) = gen_interval(n, ts ^ 0x17).map_err(|e| e.to_string())?;
        let trace =
            sweep_sequence(SearchKind::LexBfs, &g, &witness, 3).map_err(|e| e.to_string())?;
        if trace.orderings[0] != trace.orderings[2] {
            return Err(format!(
                "seed {ts}: sweep 1 differs from sweep 3\n  s1: {}\n  s3: {}",
                line(&g, &trace.orderings[0]),
                line(&g, &trace.orderings[2])
            ));
        }
        Ok(())
    };
    let fails = run_trials(cfg.trials, cfg.jobs, &f);
    vec![campaign_line(
        "interval graphs: from a cocomparability seed, sweep 1 equals sweep 3",
        cfg.trials,
        &fails,
    )]
}

fn cobipartite(cfg: &Campaign) -> Vec<CheckLine> {
    let f = |trial: usize| -> Result<(), String> {
        let ts = trial_seed(cfg.seed, trial);
        let mut r = ChaCha8Rng::seed_from_u64(ts);
        let p = r.gen_range(2..=16);
        let q = r.gen_range(2..=16);
        let density = r.gen_range(1..=9) as f64 / 10.0;
        let (g, witness) = gen_cobipartite(p, q, density, ts ^ 0x2b).map_err(|e| e.to_string())?;
        let n = p + q;
        let budget = (n * n).max(64);
        let rep = detect_cycle(SearchKind::LexBfs, &g, &witness, budget)
            .map_err(|e| format!("seed {ts}: {e}"))?;
        if rep.cycle_length != 2 {
            return Err(format!("seed {ts}: cycle length {}", rep.cycle_length));
        }
        if rep.tail + rep.cycle_length >= n * n {
            return Err(format!("seed {ts}: cycle reached only after {} sweeps", rep.total_sweeps));
        }

        // replay the trace and check the matrix correspondence sweep by sweep
        let upto = rep.tail + rep.cycle_length + 1;
        let trace =
            sweep_sequence(SearchKind::LexBfs, &g, &witness, upto).map_err(|e| e.to_string())?;
        let first = &trace.orderings[0];
        let split = clique_split(&g, first).ok_or("empty graph")?;
        if !split.suffix_is_clique {
            return Err(format!("seed {ts}: sweep 1 does not split into two cliques"));
        }
        if split.prefix_len == n {
            // complete graph: sweeps plainly alternate with the dual
            return Ok(());
        }
        let mut prefix_len = split.prefix_len;
        let mut matrices = Vec::new();
        for t in 0..upto - 1 {
            let cur = &trace.orderings[t];
            let next = &trace.orderings[t + 1];
            let s = clique_split(&g, cur).ok_or("empty graph")?;
            if !s.suffix_is_clique {
                return Err(format!("seed {ts}: sweep {} does not split into two cliques", t + 1));
            }
            check_cocomp_order(&g, cur)
                .map_err(|v| format!("seed {ts}: sweep {} not cocomparability: {:?}", t + 1, v.witness))?;
            let q_len = n - prefix_len;
            let m = cobipartite_matrix_with_split(&g, cur, prefix_len)
                .map_err(|e| format!("seed {ts}: {e}"))?;
            if !m.is_cols_sorted() {
                return Err(format!("seed {ts}: sweep {} matrix columns not sorted", t + 1));
            }
            // the next sweep starts with the suffix reversed ...
            for j in 0..q_len {
                if next.at(j) != cur.at(n - 1 - j) {
                    return Err(format!(
                        "seed {ts}: sweep {} does not start with the reversed suffix of sweep {}",
                        t + 2,
                        t + 1
                    ));
                }
            }
            // ... followed by the prefix sorted by matrix rows
            let m_next = cobipartite_matrix_with_split(&g, next, q_len)
                .map_err(|e| format!("seed {ts}: {e}"))?;
            if m_next != m.sort_rows_lex().transpose() {
                return Err(format!(
                    "seed {ts}: matrix of sweep {} is not the transposed row sort of sweep {}",
                    t + 2,
                    t + 1
                ));
            }
            matrices.push(m);
            prefix_len = q_len;
        }
        // the same sequence, as alternating row/column sorts of the first
        // matrix, with the potential never increasing
        let mut expect: BinaryMatrix = matrices[0].clone();
        let mut potential = expect.potential_vector();
        for (s, m) in matrices.iter().enumerate().skip(1) {
            expect = if s % 2 == 1 { expect.sort_rows_lex() } else { expect.sort_cols_lex() };
            let got = if s % 2 == 1 { m.transpose() } else { m.clone() };
            if got != expect {
                return Err(format!("seed {ts}: sort sequence diverges at pass {s}"));
            }
            let next_potential = expect.potential_vector();
            if next_potential > potential {
                return Err(format!("seed {ts}: potential increased at pass {s}"));
            }
            potential = next_potential;
        }
        Ok(())
    };
    let fails = run_trials(cfg.trials, cfg.jobs, &f);
    vec![campaign_line(
        "cobipartite graphs: two-clique splits, matrix correspondence, 2-cycle within n^2 sweeps",
        cfg.trials,
        &fails,
    )]
}

fn domino_free(cfg: &Campaign) -> Vec<CheckLine> {
    use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrd};
    let tested = AtomicUsize::new(0);
    let f = |trial: usize| -> Result<(), String> {
        let ts = trial_seed(cfg.seed, trial);
        let mut r = ChaCha8Rng::seed_from_u64(ts);
        let n = r.gen_range(6..=40);
        let (g, witness) = if trial % 2 == 0 {
            gen_permutation_graph(n, ts ^ 0x77).map_err(|e| e.to_string())?
        } else {
            gen_interval(n, ts ^ 0x77).map_err(|e| e.to_string())?
        };
        if find_induced_domino(&g).is_some() {
            return Ok(()); // filtered out
        }
        tested.fetch_add(1, AtomicOrd::Relaxed);
        let rep = detect_cycle(
            SearchKind::LexBfs,
            &g,
            &witness,
            cfg.budget.unwrap_or_else(|| default_max_sweeps(n)),
        )
        .map_err(|e| format!("seed {ts}: {e}"))?;
        if rep.cycle_length != 2 {
            return Err(format!("seed {ts}: cycle length {}", rep.cycle_length));
        }
        Ok(())
    };
    let fails = run_trials(cfg.trials, cfg.jobs, &f);
    let kept = tested.into_inner();
    let mut line = campaign_line(
        "domino-free cocomparability graphs reach a 2-cycle from a cocomparability seed",
        cfg.trials,
        &fails,
    );
    line.detail = format!("{} ({kept} domino-free instances tested)", line.detail);
    vec![line]
}

fn trees(cfg: &Campaign) -> Vec<CheckLine> {
    let f = |trial: usize| -> Result<(), String> {
        let ts = trial_seed(cfg.seed, trial);
        let mut r = ChaCha8Rng::seed_from_u64(ts);
        let n = r.gen_range(2..=60);
        let g = gen_tree(n, ts ^ 0x3a).map_err(|e| e.to_string())?;
        let seed_ord = random_ordering(&g, ts ^ 0x1c);
        let bfs =
            sweep_sequence(SearchKind::Bfs, &g, &seed_ord, 4).map_err(|e| e.to_string())?;
        let lex =
            sweep_sequence(SearchKind::LexBfs, &g, &seed_ord, 4).map_err(|e| e.to_string())?;
        if bfs.orderings != lex.orderings {
            return Err(format!("seed {ts}: BFS and LexBFS traces differ on a tree"));
        }
        for (name, trace) in [("BFS", &bfs), ("LexBFS", &lex)] {
            if trace.orderings[3] != trace.orderings[1] {
                return Err(format!("seed {ts}: {name} sweep 4 differs from sweep 2"));
            }
        }
        let x = bfs.orderings[0].last().ok_or("empty tree")?;
        let y = bfs.orderings[1].last().ok_or("empty tree")?;
        let d = g.distance(x, y).ok_or("tree is disconnected")?;
        let diam = g.diameter().map_err(|e| e.to_string())?;
        if d != diam {
            return Err(format!(
                "seed {ts}: endpoints {} and {} at distance {d}, diameter {diam}",
                g.name(x),
                g.name(y)
            ));
        }
        Ok(())
    };
    let fails = run_trials(cfg.trials, cfg.jobs, &f);
    vec![campaign_line(
        "trees: sweep 4 equals sweep 2 under BFS and LexBFS, and sweep ends span a diametral path",
        cfg.trials,
        &fails,
    )]
}

// keep the diagnostic exercised somewhere central: lmpn agrees with a
// linear scan on fixture data
#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::lmpn;

    #[test]
    fn fixture_targets_pass() {
        for target in [Target::Figure1, Target::Figure2, Target::G6, Target::Lexdfs] {
            let report = run_target(target, &Campaign::default());
            assert!(
                report.pass,
                "{}: {:?}",
                target.name(),
                report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn campaigns_pass_with_few_trials() {
        for target in [
            Target::Trees,
            Target::ProperInterval,
            Target::Interval,
            Target::Cobipartite,
            Target::DominoFree,
        ] {
            let cfg = Campaign { trials: 12, ..Campaign::default() };
            let report = run_target(target, &cfg);
            assert!(
                report.pass,
                "{}: {:?}",
                target.name(),
                report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn jobs_do_not_change_the_aggregate() {
        let base = Campaign { trials: 16, ..Campaign::default() };
        let par = Campaign { trials: 16, jobs: 4, ..Campaign::default() };
        let a = run_target(Target::Trees, &base);
        let b = run_target(Target::Trees, &par);
        assert_eq!(a.pass, b.pass);
        assert_eq!(
            a.checks.iter().map(|c| (&c.name, c.pass)).collect::<Vec<_>>(),
            b.checks.iter().map(|c| (&c.name, c.pass)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn lmpn_matches_a_linear_scan_on_fixture_sweeps() {
        let f = fixture_g3();
        let g = &f.graph;
        let o = f.ordering("sigma2");
        for a in g.vertices() {
            for b in g.vertices() {
                if a == b {
                    continue;
                }
                let got = lmpn(g, o, a, b);
                let want = o
                    .seq()
                    .iter()
                    .copied()
                    .find(|&d| d != a && d != b && g.has_edge(d, a) && !g.has_edge(d, b));
                assert_eq!(got, want);
            }
        }
    }
}
