//! Cycle detection over iterated `+` sweeps.
//!
//! Iterating a `+` sweep maps each ordering to exactly one successor, so
//! from any seed the sequence of produced orderings eventually repeats and
//! then stays on a cycle. [`detect_cycle`] finds that cycle in one pass with
//! a seen-map; [`lexcycle`] maximizes the cycle length over every seed that
//! matters: any start ordering enters its cycle through its first sweep
//! output, which is itself a produced LexBFS ordering, so enumerating the
//! LexBFS orderings as seeds covers every reachable cycle.

use crate::constructions::starjoin_with_names;
use crate::error::Error;
use crate::graph::Graph;
use crate::ordering::Ordering;
use crate::sweep::{
    enumerate_lexbfs_orderings, first_sweep, plus_sweep, sweep_key, SearchKind, SeenMap,
};

/// Default sweep budget for a graph on `n` vertices.
pub fn default_max_sweeps(n: usize) -> usize {
    (4 * n + 8).max(64)
}

/// Errors from the iterated-sweep drivers. Budget errors carry the full
/// trace computed so far so callers can inspect or resume it.
#[derive(Debug, thiserror::Error)]
pub enum CycleError {
    #[error("no ordering repeated within {budget} sweeps")]
    BudgetExhausted { budget: usize, trace: Vec<Ordering> },
    #[error(transparent)]
    Other(#[from] Error),
}

/// The cycle a seed falls into.
///
/// `cycle[0]` is the first ordering of the trace that recurs;
/// `plus_sweep(cycle[i]) == cycle[(i + 1) % cycle_length]`, and
/// `cycle_length` is the minimal period. `tail` counts the sweeps strictly
/// before the cycle is entered.
#[derive(Debug, Clone)]
pub struct CycleReport {
    pub tail: usize,
    pub cycle_length: usize,
    pub cycle: Vec<Ordering>,
    pub total_sweeps: usize,
}

/// Iterates `+` sweeps from `seed` until an ordering repeats.
pub fn detect_cycle(
    search: SearchKind,
    g: &Graph,
    seed: &Ordering,
    max_sweeps: usize,
) -> Result<CycleReport, CycleError> {
    if max_sweeps < 2 {
        return Err(Error::InvalidParameter("max_sweeps must be at least 2".into()).into());
    }
    let mut seen = SeenMap::new();
    let mut trace: Vec<Ordering> = Vec::new();
    let mut current = seed.clone();
    for j in 1..=max_sweeps {
        let next = plus_sweep(search, g, &current)?;
        if let Some(&i) = seen.get(&sweep_key(&next)) {
            let cycle = trace[i - 1..].to_vec();
            return Ok(CycleReport {
                tail: i - 1,
                cycle_length: j - i,
                cycle,
                total_sweeps: j,
            });
        }
        seen.insert(sweep_key(&next), j);
        trace.push(next.clone());
        current = next;
    }
    Err(CycleError::BudgetExhausted { budget: max_sweeps, trace })
}

/// The LexCycle value of a graph, maximized over all LexBFS seeds.
#[derive(Debug, Clone)]
pub struct LexCycleReport {
    pub value: usize,
    pub witness_seed: Ordering,
    /// False when the seed enumeration hit its cap; `value` is then only a
    /// lower bound.
    pub exact: bool,
    pub seeds_tried: usize,
}

/// Maximum cycle length over every LexBFS ordering used as a seed. The
/// witness is the first maximizing seed in enumeration order.
pub fn lexcycle(g: &Graph, seed_cap: usize) -> Result<LexCycleReport, CycleError> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("lexcycle of an empty graph".into()).into());
    }
    let enumeration = enumerate_lexbfs_orderings(g, seed_cap);
    let budget = default_max_sweeps(g.vertex_count());
    let mut best: Option<(usize, Ordering)> = None;
    for seed in &enumeration.orderings {
        let report = detect_cycle(SearchKind::LexBfs, g, seed, budget)?;
        let better = best.as_ref().map_or(true, |(v, _)| report.cycle_length > *v);
        if better {
            best = Some((report.cycle_length, seed.clone()));
        }
    }
    let (value, witness_seed) = best.expect("a nonempty graph has a LexBFS ordering");
    Ok(LexCycleReport {
        value,
        witness_seed,
        exact: !enumeration.truncated,
        seeds_tried: enumeration.orderings.len(),
    })
}

/// Outcome of the three-sweeps-then-compare orientation loop: sweeps run
/// until the latest ordering equals the one two sweeps back.
#[derive(Debug, Clone)]
pub struct OrientationRun {
    pub ordering: Ordering,
    /// Index i of the stopping sweep, i.e. the total number of sweeps run.
    pub stop_index: usize,
    pub trace: Vec<Ordering>,
}

/// Runs sweeps s1, s2, s3, ... and stops at the first i >= 3 with
/// s_i == s_{i-2}, returning s_i. On cocomparability inputs the returned
/// ordering orients the complement transitively; callers validate with
/// `checkers::validate_transitive_orientation`. Termination is not
/// guaranteed in general, so exhausting `budget` is a recoverable error
/// carrying the whole trace.
pub fn transitive_orientation(
    g: &Graph,
    seed: Option<&Ordering>,
    budget: usize,
) -> Result<OrientationRun, CycleError> {
    if budget < 3 {
        return Err(Error::InvalidParameter("orientation budget must be at least 3".into()).into());
    }
    let mut trace = vec![first_sweep(SearchKind::LexBfs, g, seed)?];
    for i in 2.. {
        if i > budget {
            return Err(CycleError::BudgetExhausted { budget, trace });
        }
        let next = plus_sweep(SearchKind::LexBfs, g, trace.last().unwrap())?;
        trace.push(next);
        if i >= 3 && trace[i - 1] == trace[i - 3] {
            return Ok(OrientationRun {
                ordering: trace[i - 1].clone(),
                stop_index: i,
                trace,
            });
        }
    }
    unreachable!()
}

/// Report of [`starjoin_cycle_check`].
#[derive(Debug)]
pub struct StarjoinCycleReport {
    pub graph: Graph,
    pub seed: Ordering,
    pub cycle_length: usize,
    pub component_cycle_lengths: Vec<usize>,
    pub lcm: usize,
    pub divisible: bool,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Builds the starjoin of the given components, seeds it with the root, the
/// join vertices, and then the component seeds concatenated, and reports
/// whether the joint cycle length is a multiple of the least common
/// multiple of the component cycle lengths.
pub fn starjoin_cycle_check(
    components: &[(&Graph, &Ordering)],
    max_sweeps: Option<usize>,
) -> Result<StarjoinCycleReport, CycleError> {
    if components.is_empty() {
        return Err(Error::InvalidParameter("starjoin needs at least one component".into()).into());
    }
    let mut component_cycle_lengths = Vec::with_capacity(components.len());
    for (g, seed) in components {
        let budget = max_sweeps.unwrap_or_else(|| default_max_sweeps(g.vertex_count()));
        let report = detect_cycle(SearchKind::LexBfs, g, seed, budget)?;
        component_cycle_lengths.push(report.cycle_length);
    }
    let want = component_cycle_lengths.iter().copied().fold(1, lcm);

    let parts: Vec<&Graph> = components.iter().map(|(g, _)| *g).collect();
    let (h, names) = starjoin_with_names(&parts).map_err(Error::from)?;
    let mut seed_names: Vec<String> = vec!["r".to_string()];
    for i in 1..=components.len() {
        seed_names.push(format!("g{i}"));
    }
    for ((_, seed), mapped) in components.iter().zip(&names) {
        for &v in seed.seq() {
            seed_names.push(mapped[v.index()].clone());
        }
    }
    let seed_h = Ordering::from_names(&h, &seed_names).map_err(Error::from)?;
    let budget = max_sweeps.unwrap_or_else(|| default_max_sweeps(h.vertex_count()));
    let report = detect_cycle(SearchKind::LexBfs, &h, &seed_h, budget)?;
    Ok(StarjoinCycleReport {
        graph: h,
        seed: seed_h,
        cycle_length: report.cycle_length,
        component_cycle_lengths,
        lcm: want,
        divisible: report.cycle_length % want == 0,
    })
}
