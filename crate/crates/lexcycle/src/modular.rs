//! Modules, modular partitions, and quotient graphs.
//!
//! A module is a vertex set whose members are indistinguishable from the
//! outside: every outside vertex is adjacent to all of the set or to none of
//! it. A [`ModularPartition`] validates every block on construction, so a
//! quotient built from one is always well defined.

use crate::error::Error;
use crate::graph::{Graph, VertexId};
use crate::ordering::Ordering;

/// True iff every vertex outside `set` is uniformly adjacent or
/// non-adjacent to all of `set`. The empty set and singletons are modules.
pub fn is_module(g: &Graph, set: &[VertexId]) -> bool {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    for &v in set {
        inside[v.index()] = true;
    }
    let size = inside.iter().filter(|&&b| b).count();
    for u in g.vertices() {
        if inside[u.index()] {
            continue;
        }
        let hits = g.neighbors(u).iter().filter(|w| inside[w.index()]).count();
        if hits != 0 && hits != size {
            return false;
        }
    }
    true
}

/// A partition of the vertex set into modules.
#[derive(Debug, Clone)]
pub struct ModularPartition {
    blocks: Vec<Vec<VertexId>>,
    block_of: Vec<u32>,
}

impl ModularPartition {
    /// Validates that `blocks` cover the vertex set, are nonempty and
    /// disjoint, and that each block passes the module test.
    pub fn new(g: &Graph, blocks: Vec<Vec<VertexId>>) -> Result<Self, Error> {
        let n = g.vertex_count();
        let mut block_of = vec![u32::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v.index() >= n {
                    return Err(Error::InvalidPartition("vertex out of range".into()));
                }
                if block_of[v.index()] != u32::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex `{}` appears in two blocks",
                        g.name(v)
                    )));
                }
                block_of[v.index()] = i as u32;
            }
        }
        if block_of.iter().any(|&b| b == u32::MAX) {
            return Err(Error::InvalidPartition("blocks do not cover the vertex set".into()));
        }
        for (i, block) in blocks.iter().enumerate() {
            if !is_module(g, block) {
                return Err(Error::InvalidPartition(format!("block {i} is not a module")));
            }
        }
        Ok(ModularPartition { blocks, block_of })
    }

    pub fn singletons(g: &Graph) -> Self {
        let blocks: Vec<Vec<VertexId>> = g.vertices().map(|v| vec![v]).collect();
        let block_of = (0..g.vertex_count() as u32).collect();
        ModularPartition { blocks, block_of }
    }

    /// The partition {module} plus singletons for everything else.
    pub fn with_module(g: &Graph, module: &[VertexId]) -> Result<Self, Error> {
        let mut inside = vec![false; g.vertex_count()];
        for &v in module {
            inside[v.index()] = true;
        }
        let mut blocks = vec![module.to_vec()];
        for v in g.vertices() {
            if !inside[v.index()] {
                blocks.push(vec![v]);
            }
        }
        ModularPartition::new(g, blocks)
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    pub fn block_of(&self, v: VertexId) -> usize {
        self.block_of[v.index()] as usize
    }
}

/// One vertex per block; blocks are adjacent iff any (equivalently, by the
/// module property, all) cross pairs are adjacent. Block `i` of the
/// partition becomes quotient vertex `i`; its name lists the block members
/// in input order.
pub fn quotient_graph(g: &Graph, p: &ModularPartition) -> Graph {
    let names: Vec<String> = p
        .blocks()
        .iter()
        .map(|block| {
            let mut members: Vec<VertexId> = block.clone();
            members.sort_unstable();
            let joined: Vec<&str> = members.iter().map(|&v| g.name(v)).collect();
            format!("{{{}}}", joined.join(","))
        })
        .collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, block) in p.blocks().iter().enumerate() {
        let rep = block[0];
        for &w in g.neighbors(rep) {
            let j = p.block_of(w);
            if j != i && i < j {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let edge_names: Vec<(&str, &str)> =
        edges.iter().map(|&(i, j)| (name_refs[i], name_refs[j])).collect();
    Graph::from_edges(&name_refs, &edge_names).expect("block names are unique")
}

/// Blocks ordered by the rank of their earliest vertex in `o`.
pub fn blocks_by_first_visit(p: &ModularPartition, o: &Ordering) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..p.blocks().len()).collect();
    idx.sort_by_key(|&b| p.blocks()[b].iter().map(|&v| o.rank(v)).min().unwrap());
    idx
}

/// Blocks ordered by the rank of their latest vertex in `o`.
pub fn blocks_by_last_visit(p: &ModularPartition, o: &Ordering) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..p.blocks().len()).collect();
    idx.sort_by_key(|&b| p.blocks()[b].iter().map(|&v| o.rank(v)).max().unwrap());
    idx
}

/// Lifts a block sequence to an ordering of the quotient graph (block `i`
/// is quotient vertex `i`).
pub fn block_ordering(quotient: &Graph, blocks_in_order: &[usize]) -> Result<Ordering, Error> {
    let seq = blocks_in_order.iter().map(|&b| VertexId(b as u32)).collect();
    Ordering::new(seq, quotient.vertex_count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        // triangle a-b-c with pendant d on c
        Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("b", "c"), ("c", "d")])
            .unwrap()
    }

    fn ids(g: &Graph, names: &[&str]) -> Vec<VertexId> {
        names.iter().map(|s| g.vertex(s).unwrap()).collect()
    }

    #[test]
    fn whole_set_and_singletons_are_modules() {
        let g = paw();
        let all: Vec<VertexId> = g.vertices().collect();
        assert!(is_module(&g, &all));
        for v in g.vertices() {
            assert!(is_module(&g, &[v]));
        }
    }

    #[test]
    fn module_test_rejects_distinguished_sets() {
        let g = paw();
        assert!(is_module(&g, &ids(&g, &["a", "b"])));
        // c sees a but d does not
        assert!(!is_module(&g, &ids(&g, &["a", "d"])));
    }

    #[test]
    fn partition_validates_blocks() {
        let g = paw();
        assert!(ModularPartition::new(&g, vec![ids(&g, &["a", "b"]), ids(&g, &["c"]), ids(&g, &["d"])]).is_ok());
        let bad = ModularPartition::new(&g, vec![ids(&g, &["a", "d"]), ids(&g, &["b"]), ids(&g, &["c"])]);
        assert!(matches!(bad, Err(Error::InvalidPartition(_))));
        let uncovering = ModularPartition::new(&g, vec![ids(&g, &["a", "b"])]);
        assert!(uncovering.is_err());
        let overlapping = ModularPartition::new(
            &g,
            vec![ids(&g, &["a", "b"]), ids(&g, &["b", "c"]), ids(&g, &["d"])],
        );
        assert!(overlapping.is_err());
    }

    #[test]
    fn quotient_of_singletons_is_isomorphic_copy() {
        let g = paw();
        let q = quotient_graph(&g, &ModularPartition::singletons(&g));
        assert_eq!(q.vertex_count(), g.vertex_count());
        assert_eq!(q.edge_count(), g.edge_count());
        for (u, w) in g.edges() {
            let qu = q.vertex(&format!("{{{}}}", g.name(u))).unwrap();
            let qw = q.vertex(&format!("{{{}}}", g.name(w))).unwrap();
            assert!(q.has_edge(qu, qw));
        }
    }

    #[test]
    fn quotient_contracts_module() {
        let g = paw();
        let p = ModularPartition::with_module(&g, &ids(&g, &["a", "b"])).unwrap();
        let q = quotient_graph(&g, &p);
        assert_eq!(q.vertex_count(), 3);
        // {a,b} - {c} - {d} path
        assert_eq!(q.edge_count(), 2);
        assert!(q.has_edge(q.vertex("{a,b}").unwrap(), q.vertex("{c}").unwrap()));
        assert!(q.has_edge(q.vertex("{c}").unwrap(), q.vertex("{d}").unwrap()));
    }

    #[test]
    fn block_visit_orders() {
        let g = paw();
        let p = ModularPartition::with_module(&g, &ids(&g, &["a", "b"])).unwrap();
        let o = Ordering::from_names(&g, &["c", "a", "d", "b"]).unwrap();
        // blocks: 0={a,b}, 1={c}, 2={d}
        assert_eq!(blocks_by_first_visit(&p, &o), vec![1, 0, 2]);
        assert_eq!(blocks_by_last_visit(&p, &o), vec![1, 2, 0]);
    }
}
