//! Seeded random generators for the graph classes under test.
//!
//! Everything is deterministic in the seed (ChaCha8 keyed by a u64), and
//! vertex naming is deterministic so traces diff cleanly. Where a class has
//! a natural witness ordering the generator returns it alongside the graph:
//! unit-interval models yield their left-endpoint order (a PI-order),
//! interval models an I-order, permutation and closure-built graphs a
//! cocomparability order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::ordering::Ordering;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn vertex_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn graph_from(names: &[String], edges: &[(usize, usize)]) -> Graph {
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let edge_refs: Vec<(&str, &str)> =
        edges.iter().map(|&(i, j)| (refs[i], refs[j])).collect();
    Graph::from_edges(&refs, &edge_refs).expect("generated names are unique")
}

fn ordering_from(g: &Graph, idx: &[usize]) -> Ordering {
    let seq: Vec<VertexId> = idx.iter().map(|&i| VertexId(i as u32)).collect();
    Ordering::new(seq, g.vertex_count()).expect("generated permutation")
}

fn require(cond: bool, what: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

/// Intersection graph of n random unit intervals; the witness is the
/// left-endpoint order.
pub fn gen_unit_interval(n: usize, seed: u64) -> Result<(Graph, Ordering), Error> {
    require(n >= 1, "unit-interval generator needs n >= 1")?;
    let mut r = rng(seed);
    let span = (n as u64) * 4 + 1;
    let unit = 4u64;
    let mut lefts: Vec<(u64, usize)> = (0..n).map(|i| (r.gen_range(0..span), i)).collect();
    lefts.sort_unstable();
    let order: Vec<usize> = lefts.iter().map(|&(_, i)| i).collect();
    let left_of: Vec<u64> = {
        let mut v = vec![0; n];
        for &(l, i) in &lefts {
            v[i] = l;
        }
        v
    };
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if left_of[i].abs_diff(left_of[j]) <= unit {
                edges.push((i, j));
            }
        }
    }
    let g = graph_from(&vertex_names("v", n), &edges);
    let witness = ordering_from(&g, &order);
    Ok((g, witness))
}

/// Intersection graph of n random intervals; the witness is the
/// left-endpoint order.
pub fn gen_interval(n: usize, seed: u64) -> Result<(Graph, Ordering), Error> {
    require(n >= 1, "interval generator needs n >= 1")?;
    let mut r = rng(seed);
    let span = (n as u64) * 4 + 1;
    let ivals: Vec<(u64, u64)> = (0..n)
        .map(|_| {
            let l = r.gen_range(0..span);
            let len = r.gen_range(1..=span / 2 + 1);
            (l, l + len)
        })
        .collect();
    let mut by_left: Vec<usize> = (0..n).collect();
    by_left.sort_by_key(|&i| (ivals[i].0, i));
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (ivals[i], ivals[j]);
            if a.0.max(b.0) <= a.1.min(b.1) {
                edges.push((i, j));
            }
        }
    }
    let g = graph_from(&vertex_names("v", n), &edges);
    let witness = ordering_from(&g, &by_left);
    Ok((g, witness))
}

/// Inversion graph of a random permutation: vertices are positions, with an
/// edge where the permutation inverts a pair. The identity order is a
/// cocomparability ordering and is returned as the witness.
pub fn gen_permutation_graph(n: usize, seed: u64) -> Result<(Graph, Ordering), Error> {
    require(n >= 1, "permutation generator needs n >= 1")?;
    let mut r = rng(seed);
    let mut pi: Vec<usize> = (0..n).collect();
    pi.shuffle(&mut r);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pi[i] > pi[j] {
                edges.push((i, j));
            }
        }
    }
    let g = graph_from(&vertex_names("v", n), &edges);
    let witness = Ordering::identity(&g);
    Ok((g, witness))
}

/// Complement of a random bipartite graph: two cliques of sizes p and q
/// with each cross pair kept as an edge with probability `density`. The
/// witness lists the first clique then the second, which is a
/// cocomparability ordering.
pub fn gen_cobipartite(p: usize, q: usize, density: f64, seed: u64) -> Result<(Graph, Ordering), Error> {
    require(p >= 1 && q >= 1, "cobipartite generator needs p, q >= 1")?;
    require((0.0..=1.0).contains(&density), "density must lie in [0, 1]")?;
    let mut r = rng(seed);
    let n = p + q;
    let mut names = vertex_names("a", p);
    names.extend(vertex_names("b", q));
    let mut edges = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            edges.push((i, j));
        }
    }
    for i in 0..q {
        for j in i + 1..q {
            edges.push((p + i, p + j));
        }
    }
    for i in 0..p {
        for j in 0..q {
            if r.gen_bool(density) {
                edges.push((i, p + j));
            }
        }
    }
    let g = graph_from(&names, &edges);
    let witness = ordering_from(&g, &(0..n).collect::<Vec<_>>());
    Ok((g, witness))
}

/// Uniform random labeled tree from a random Pruefer sequence.
pub fn gen_tree(n: usize, seed: u64) -> Result<Graph, Error> {
    require(n >= 1, "tree generator needs n >= 1")?;
    let names = vertex_names("v", n);
    if n == 1 {
        return Ok(graph_from(&names, &[]));
    }
    if n == 2 {
        return Ok(graph_from(&names, &[(0, 1)]));
    }
    let mut r = rng(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| r.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &prufer {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in &prufer {
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Ok(graph_from(&names, &edges))
}

/// Cocomparability graph built by orienting a random graph along a hidden
/// permutation, taking the transitive closure, and complementing. The
/// witness is the hidden permutation, a cocomparability ordering.
pub fn gen_cocomparability(n: usize, density: f64, seed: u64) -> Result<(Graph, Ordering), Error> {
    require(n >= 1, "cocomparability generator needs n >= 1")?;
    require((0.0..=1.0).contains(&density), "density must lie in [0, 1]")?;
    let mut r = rng(seed);
    let mut rho: Vec<usize> = (0..n).collect();
    rho.shuffle(&mut r);
    // reach[s] = positions (in rho) comparable above position s
    let words = n.div_ceil(64);
    let mut reach = vec![0u64; n * words];
    let mut direct: Vec<Vec<usize>> = vec![Vec::new(); n];
    for s in 0..n {
        for t in s + 1..n {
            if r.gen_bool(density) {
                direct[s].push(t);
            }
        }
    }
    for s in (0..n).rev() {
        for &t in &direct[s] {
            reach[s * words + t / 64] |= 1 << (t % 64);
            for w in 0..words {
                reach[s * words + w] |= reach[t * words + w];
            }
        }
    }
    let mut edges = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            let comparable = reach[s * words + t / 64] >> (t % 64) & 1 == 1;
            if !comparable {
                let (u, v) = (rho[s], rho[t]);
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    let g = graph_from(&vertex_names("v", n), &edges);
    let witness = ordering_from(&g, &rho);
    Ok((g, witness))
}

/// Erdos-Renyi graph with independent edge probability `p`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, Error> {
    require((0.0..=1.0).contains(&p), "edge probability must lie in [0, 1]")?;
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(graph_from(&vertex_names("v", n), &edges))
}

/// Random graph with exactly `m` distinct edges (or the maximum possible).
pub fn gen_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, Error> {
    require(n >= 1, "gnm generator needs n >= 1")?;
    let max = n * (n - 1) / 2;
    let m = m.min(max);
    let mut r = rng(seed);
    let mut chosen = std::collections::HashSet::with_capacity(m * 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let i = r.gen_range(0..n);
        let j = r.gen_range(0..n);
        if i == j {
            continue;
        }
        let key = (i.min(j) as u64) << 32 | i.max(j) as u64;
        if chosen.insert(key) {
            edges.push((i.min(j), i.max(j)));
        }
    }
    Ok(graph_from(&vertex_names("v", n), &edges))
}

/// Random graph with a planted module: a random subset M made
/// indistinguishable from outside by rewiring every outside vertex to all
/// of M or none of it. Returns the graph, M, and a random seed ordering.
pub fn gen_planted_module(n: usize, seed: u64) -> Result<(Graph, Vec<VertexId>, Ordering), Error> {
    require(n >= 4, "planted-module generator needs n >= 4")?;
    let mut r = rng(seed);
    let msize = r.gen_range(2..=n / 2);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut r);
    let module: Vec<usize> = ids[..msize].to_vec();
    let mut inside = vec![false; n];
    for &v in &module {
        inside[v] = true;
    }
    let mut edges = Vec::new();
    // inside-inside and outside-outside edges at one density
    for i in 0..n {
        for j in i + 1..n {
            if inside[i] == inside[j] && r.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    // each outside vertex sees all of M or none of it
    for u in 0..n {
        if inside[u] {
            continue;
        }
        if r.gen_bool(0.5) {
            for &v in &module {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    let g = graph_from(&vertex_names("v", n), &edges);
    let module: Vec<VertexId> = {
        let mut m: Vec<usize> = module;
        m.sort_unstable();
        m.into_iter().map(|i| VertexId(i as u32)).collect()
    };
    let theta = random_ordering(&g, seed ^ 0x5eed_0a11);
    Ok((g, module, theta))
}

/// A uniformly random ordering of the graph's vertices.
pub fn random_ordering(g: &Graph, seed: u64) -> Ordering {
    let mut r = rng(seed);
    let mut idx: Vec<usize> = (0..g.vertex_count()).collect();
    idx.shuffle(&mut r);
    ordering_from(g, &idx)
}
