//! Deterministic lexicographic searches with the `+` tie-breaking rule.
//!
//! All three searches fit one scheme: every vertex carries a label word,
//! each step numbers an unnumbered vertex with the lexicographically
//! largest label, and any tie is broken toward the vertex that is rightmost
//! in a given seed ordering (the `+` rule). The searches differ only in how
//! a numbered vertex updates the labels of its unnumbered neighbors:
//!
//! * LexBFS appends the letter `n - i` at step `i`;
//! * LexDFS prepends the letter `i`;
//! * BFS assigns the single letter `n - i` to still-unlabeled neighbors,
//!   i.e. a vertex keeps the timestamp of whichever neighbor reached it
//!   first (queue discipline).
//!
//! Because the seed resolves every tie, a sweep is a pure function of
//! (search, graph, seed). Disconnected graphs need no special casing: when
//! all remaining labels are empty, the `+` rule alone picks the next
//! component's start.
//!
//! Two engines are provided for LexBFS. The reference engine stores label
//! words explicitly and is the correctness oracle; the partition-refinement
//! engine keeps an ordered sequence of tie classes and runs in O(n + m) per
//! sweep. They must agree everywhere (see the acceptance suite).

use std::collections::HashMap;

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::ordering::Ordering;

/// The search family a sweep runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchKind {
    LexBfs,
    LexDfs,
    Bfs,
}

impl SearchKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchKind::LexBfs => "lexbfs",
            SearchKind::LexDfs => "lexdfs",
            SearchKind::Bfs => "bfs",
        }
    }
}

impl std::fmt::Display for SearchKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which sweep implementation to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineKind {
    /// Explicit label words, O(n^3) worst case. Works for every search.
    Reference,
    /// Partition refinement, O(n + m) per sweep. LexBFS only.
    Refinement,
}

fn check_seed(g: &Graph, seed: &Ordering) -> Result<(), Error> {
    if seed.len() != g.vertex_count() {
        return Err(Error::VertexSetMismatch);
    }
    Ok(())
}

/// One `+` sweep of the given search seeded by `seed`.
///
/// LexBFS runs on the refinement engine, the other searches on the
/// reference engine.
pub fn plus_sweep(search: SearchKind, g: &Graph, seed: &Ordering) -> Result<Ordering, Error> {
    let engine = match search {
        SearchKind::LexBfs => EngineKind::Refinement,
        _ => EngineKind::Reference,
    };
    plus_sweep_with(engine, search, g, seed)
}

/// One `+` sweep on an explicitly chosen engine.
pub fn plus_sweep_with(
    engine: EngineKind,
    search: SearchKind,
    g: &Graph,
    seed: &Ordering,
) -> Result<Ordering, Error> {
    check_seed(g, seed)?;
    let seq = match engine {
        EngineKind::Reference => reference_sweep(search, g, seed),
        EngineKind::Refinement => {
            if search != SearchKind::LexBfs {
                return Err(Error::InvalidParameter(
                    "the refinement engine only implements lexbfs".into(),
                ));
            }
            refinement_sweep(g, seed)
        }
    };
    Ordering::new(seq, g.vertex_count())
}

/// A plain (first) sweep; the tie-break defaults to the graph's input order.
pub fn first_sweep(
    search: SearchKind,
    g: &Graph,
    tiebreak: Option<&Ordering>,
) -> Result<Ordering, Error> {
    match tiebreak {
        Some(o) => plus_sweep(search, g, o),
        None => plus_sweep(search, g, &Ordering::identity(g)),
    }
}

/// A sequence of iterated `+` sweeps of one search kind.
#[derive(Debug, Clone)]
pub struct SweepTrace {
    pub search: SearchKind,
    pub seed: Ordering,
    /// `orderings[0]` is the sweep of `seed`; each later entry is the sweep
    /// of its predecessor.
    pub orderings: Vec<Ordering>,
}

pub fn sweep_sequence(
    search: SearchKind,
    g: &Graph,
    seed: &Ordering,
    count: usize,
) -> Result<SweepTrace, Error> {
    if count < 1 {
        return Err(Error::InvalidParameter("sweep count must be at least 1".into()));
    }
    let mut orderings = Vec::with_capacity(count);
    let mut current = plus_sweep(search, g, seed)?;
    orderings.push(current.clone());
    for _ in 1..count {
        current = plus_sweep(search, g, &current)?;
        orderings.push(current.clone());
    }
    Ok(SweepTrace { search, seed: seed.clone(), orderings })
}

// ---------------------------------------------------------------------------
// Reference engine
// ---------------------------------------------------------------------------

fn reference_sweep(search: SearchKind, g: &Graph, seed: &Ordering) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut labels: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for i in 1..=n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if numbered[v] {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => {
                    let better = match labels[v].cmp(&labels[b]) {
                        std::cmp::Ordering::Greater => true,
                        std::cmp::Ordering::Less => false,
                        std::cmp::Ordering::Equal => {
                            seed.rank(VertexId(v as u32)) > seed.rank(VertexId(b as u32))
                        }
                    };
                    Some(if better { v } else { b })
                }
            };
        }
        let v = best.expect("an unnumbered vertex remains");
        numbered[v] = true;
        order.push(VertexId(v as u32));
        for &w in g.neighbors(VertexId(v as u32)) {
            if numbered[w.index()] {
                continue;
            }
            let label = &mut labels[w.index()];
            match search {
                SearchKind::LexBfs => label.push((n - i) as u32),
                SearchKind::LexDfs => label.insert(0, i as u32),
                SearchKind::Bfs => {
                    if label.is_empty() {
                        label.push((n - i) as u32)
                    }
                }
            }
        }
    }
    order
}

// ---------------------------------------------------------------------------
// Partition-refinement engine (LexBFS)
// ---------------------------------------------------------------------------

const NONE: u32 = u32::MAX;

struct Refine {
    // intrusive per-class vertex lists, kept sorted by seed rank ascending
    next_v: Vec<u32>,
    prev_v: Vec<u32>,
    class_of: Vec<u32>,
    // class arena; slots are never reused so twin bookkeeping stays valid
    c_head: Vec<u32>,
    c_tail: Vec<u32>,
    c_prev: Vec<u32>,
    c_next: Vec<u32>,
    c_twin: Vec<u32>,
    c_stamp: Vec<u32>,
    first_class: u32,
}

impl Refine {
    fn unlink_class(&mut self, c: u32) {
        let p = self.c_prev[c as usize];
        let nx = self.c_next[c as usize];
        if p == NONE {
            self.first_class = nx;
        } else {
            self.c_next[p as usize] = nx;
        }
        if nx != NONE {
            self.c_prev[nx as usize] = p;
        }
    }

    fn detach_vertex(&mut self, v: u32) {
        let c = self.class_of[v as usize] as usize;
        let p = self.prev_v[v as usize];
        let nx = self.next_v[v as usize];
        if p == NONE {
            self.c_head[c] = nx;
        } else {
            self.next_v[p as usize] = nx;
        }
        if nx == NONE {
            self.c_tail[c] = p;
        } else {
            self.prev_v[nx as usize] = p;
        }
        if self.c_head[c] == NONE {
            self.unlink_class(c as u32);
        }
    }

    fn new_class_before(&mut self, c: u32) -> u32 {
        let t = self.c_head.len() as u32;
        let p = self.c_prev[c as usize];
        self.c_head.push(NONE);
        self.c_tail.push(NONE);
        self.c_prev.push(p);
        self.c_next.push(c);
        self.c_twin.push(NONE);
        self.c_stamp.push(0);
        self.c_prev[c as usize] = t;
        if p == NONE {
            self.first_class = t;
        } else {
            self.c_next[p as usize] = t;
        }
        t
    }

    fn append_vertex(&mut self, t: u32, v: u32) {
        let tail = self.c_tail[t as usize];
        self.prev_v[v as usize] = tail;
        self.next_v[v as usize] = NONE;
        if tail == NONE {
            self.c_head[t as usize] = v;
        } else {
            self.next_v[tail as usize] = v;
        }
        self.c_tail[t as usize] = v;
        self.class_of[v as usize] = t;
    }
}

fn refinement_sweep(g: &Graph, seed: &Ordering) -> Vec<VertexId> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }

    // Neighbors listed in ascending seed rank, so that vertices split off
    // into a twin class arrive in ascending rank and the twin stays sorted.
    let mut sorted_adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &u in seed.seq() {
        for &w in g.neighbors(u) {
            sorted_adj[w.index()].push(u.0);
        }
    }

    let mut st = Refine {
        next_v: vec![NONE; n],
        prev_v: vec![NONE; n],
        class_of: vec![0; n],
        c_head: vec![seed.at(0).0],
        c_tail: vec![seed.at(n - 1).0],
        c_prev: vec![NONE],
        c_next: vec![NONE],
        c_twin: vec![NONE],
        c_stamp: vec![0],
        first_class: 0,
    };
    for i in 0..n {
        let v = seed.at(i).0 as usize;
        st.prev_v[v] = if i == 0 { NONE } else { seed.at(i - 1).0 };
        st.next_v[v] = if i + 1 == n { NONE } else { seed.at(i + 1).0 };
    }

    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 1..=n as u32 {
        // The first class holds the maximal labels; its tail is the
        // rightmost of them in the seed.
        let c0 = st.first_class;
        let v = st.c_tail[c0 as usize];
        st.detach_vertex(v);
        numbered[v as usize] = true;
        order.push(VertexId(v));

        for &w in &sorted_adj[v as usize] {
            if numbered[w as usize] {
                continue;
            }
            let c = st.class_of[w as usize];
            let t = if st.c_stamp[c as usize] == step {
                st.c_twin[c as usize]
            } else {
                let t = st.new_class_before(c);
                st.c_twin[c as usize] = t;
                st.c_stamp[c as usize] = step;
                t
            };
            st.detach_vertex(w);
            st.append_vertex(t, w);
        }
    }
    order
}

// ---------------------------------------------------------------------------
// Enumeration of all LexBFS orderings
// ---------------------------------------------------------------------------

/// Result of [`enumerate_lexbfs_orderings`]. When `truncated` is set, more
/// than `cap` orderings exist and `orderings` holds the first `cap` of them
/// (still all valid, no duplicates).
#[derive(Debug, Clone)]
pub struct LexBfsEnumeration {
    pub orderings: Vec<Ordering>,
    pub truncated: bool,
}

/// Enumerates every distinct LexBFS ordering of `g` by branching over each
/// tie set, in lexicographic vertex-index order.
pub fn enumerate_lexbfs_orderings(g: &Graph, cap: usize) -> LexBfsEnumeration {
    let n = g.vertex_count();
    let mut out = LexBfsEnumeration { orderings: Vec::new(), truncated: false };
    if n == 0 {
        return out;
    }
    let mut labels: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut numbered = vec![false; n];
    let mut prefix: Vec<VertexId> = Vec::with_capacity(n);
    enumerate_rec(g, cap, &mut labels, &mut numbered, &mut prefix, &mut out);
    out
}

fn enumerate_rec(
    g: &Graph,
    cap: usize,
    labels: &mut Vec<Vec<u32>>,
    numbered: &mut Vec<bool>,
    prefix: &mut Vec<VertexId>,
    out: &mut LexBfsEnumeration,
) {
    if out.truncated {
        return;
    }
    let n = g.vertex_count();
    if prefix.len() == n {
        if out.orderings.len() == cap {
            out.truncated = true;
            return;
        }
        out.orderings
            .push(Ordering::new(prefix.clone(), n).expect("prefix is a permutation"));
        return;
    }
    // the tie set: all unnumbered vertices of maximal label
    let max = (0..n)
        .filter(|&v| !numbered[v])
        .map(|v| &labels[v])
        .max()
        .expect("an unnumbered vertex remains")
        .clone();
    let ties: Vec<usize> = (0..n).filter(|&v| !numbered[v] && labels[v] == max).collect();
    let i = prefix.len() + 1;
    for v in ties {
        numbered[v] = true;
        prefix.push(VertexId(v as u32));
        let mut touched = Vec::new();
        for &w in g.neighbors(VertexId(v as u32)) {
            if !numbered[w.index()] {
                labels[w.index()].push((n - i) as u32);
                touched.push(w.index());
            }
        }
        enumerate_rec(g, cap, labels, numbered, prefix, out);
        for w in touched {
            labels[w].pop();
        }
        prefix.pop();
        numbered[v] = false;
        if out.truncated {
            return;
        }
    }
}

/// Canonical key of an ordering for seen-maps.
pub(crate) fn sweep_key(o: &Ordering) -> Vec<u32> {
    o.seq().iter().map(|v| v.0).collect()
}

pub(crate) type SeenMap = HashMap<Vec<u32>, usize>;

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(g: &Graph, names: &[&str]) -> Ordering {
        Ordering::from_names(g, names).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| format!("k{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((refs[i], refs[j]));
            }
        }
        Graph::from_edges(&refs, &edges).unwrap()
    }

    #[test]
    fn single_vertex_is_a_fixed_point() {
        let g = Graph::from_edges(&["a"], &[]).unwrap();
        let o = Ordering::identity(&g);
        assert_eq!(plus_sweep(SearchKind::LexBfs, &g, &o).unwrap(), o);
    }

    #[test]
    fn complete_graph_sweep_reverses_for_every_search() {
        let g = complete(5);
        let o = ord(&g, &["k2", "k0", "k4", "k1", "k3"]);
        for search in [SearchKind::LexBfs, SearchKind::LexDfs, SearchKind::Bfs] {
            assert_eq!(plus_sweep(search, &g, &o).unwrap(), o.dual(), "{search}");
        }
    }

    #[test]
    fn edgeless_default_first_sweep_reverses_input_order() {
        let g = Graph::from_edges(&["a", "b", "c", "d"], &[]).unwrap();
        let o = first_sweep(SearchKind::LexBfs, &g, None).unwrap();
        assert_eq!(o, Ordering::identity(&g).dual());
    }

    #[test]
    fn mismatched_seed_is_rejected() {
        let g = complete(3);
        let h = complete(4);
        let o = Ordering::identity(&h);
        assert!(matches!(
            plus_sweep(SearchKind::LexBfs, &g, &o),
            Err(Error::VertexSetMismatch)
        ));
    }

    #[test]
    fn refinement_engine_rejects_other_searches() {
        let g = complete(3);
        let o = Ordering::identity(&g);
        assert!(plus_sweep_with(EngineKind::Refinement, SearchKind::Bfs, &g, &o).is_err());
    }

    #[test]
    fn lexdfs_plus_matches_hand_run() {
        // 7-vertex example: edges ge gf gc ef ec fd cd ca db
        let g = Graph::from_edges(
            &["a", "b", "c", "d", "e", "f", "g"],
            &[
                ("g", "e"),
                ("g", "f"),
                ("g", "c"),
                ("e", "f"),
                ("e", "c"),
                ("f", "d"),
                ("c", "d"),
                ("c", "a"),
                ("d", "b"),
            ],
        )
        .unwrap();
        let s1 = ord(&g, &["a", "c", "d", "b", "f", "g", "e"]);
        let s2 = plus_sweep(SearchKind::LexDfs, &g, &s1).unwrap();
        assert_eq!(s2.names(&g), ["e", "g", "f", "d", "c", "a", "b"]);
        let s3 = plus_sweep(SearchKind::LexDfs, &g, &s2).unwrap();
        assert_eq!(s3.names(&g), ["b", "d", "c", "a", "g", "e", "f"]);
    }

    #[test]
    fn bfs_plus_uses_discovery_timestamps() {
        // star of two arms of depth 2; the queue discipline orders
        // grandchildren by their parent's visit time, not merely by layer
        let g = Graph::from_edges(
            &["r", "u", "w", "p", "s"],
            &[("r", "u"), ("r", "w"), ("u", "p"), ("w", "s")],
        )
        .unwrap();
        let seed = ord(&g, &["p", "w", "s", "u", "r"]);
        let bfs = plus_sweep(SearchKind::Bfs, &g, &seed).unwrap();
        let lex = plus_sweep(SearchKind::LexBfs, &g, &seed).unwrap();
        assert_eq!(bfs.names(&g), ["r", "u", "w", "p", "s"]);
        assert_eq!(bfs, lex);
    }

    #[test]
    fn sweep_sequence_chains_and_validates_count() {
        let g = complete(4);
        let o = Ordering::identity(&g);
        assert!(sweep_sequence(SearchKind::LexBfs, &g, &o, 0).is_err());
        let trace = sweep_sequence(SearchKind::LexBfs, &g, &o, 3).unwrap();
        assert_eq!(trace.orderings.len(), 3);
        assert_eq!(trace.orderings[0], o.dual());
        assert_eq!(trace.orderings[1], o);
        assert_eq!(trace.orderings[2], o.dual());
    }

    #[test]
    fn enumerate_p3_orderings() {
        let g = Graph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let e = enumerate_lexbfs_orderings(&g, 100);
        assert!(!e.truncated);
        let mut got: Vec<Vec<&str>> = e.orderings.iter().map(|o| o.names(&g)).collect();
        got.sort();
        assert_eq!(
            got,
            vec![vec!["a", "b", "c"], vec!["b", "a", "c"], vec!["b", "c", "a"], vec!["c", "b", "a"]]
        );
    }

    #[test]
    fn enumerate_k3_is_all_permutations_and_caps() {
        let g = complete(3);
        let e = enumerate_lexbfs_orderings(&g, 100);
        assert_eq!(e.orderings.len(), 6);
        assert!(!e.truncated);
        let partial = enumerate_lexbfs_orderings(&g, 4);
        assert!(partial.truncated);
        assert_eq!(partial.orderings.len(), 4);
        // the partial stream is a prefix of the full one
        assert_eq!(partial.orderings[..], e.orderings[..4]);
    }
}
