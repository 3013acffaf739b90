//! Simple undirected graphs with named vertices and a stable input order.
//!
//! Vertex identifiers are arbitrary non-whitespace tokens (except the
//! reserved directive `v`); internally they map to dense indices in
//! first-declaration order, which is the canonical "input order" used by
//! serialization and by default tie-breaking.
//!
//! Text format, one item per line: `#` starts a comment (anywhere in the
//! line), `v <name>` declares a vertex, `<u> <w>` declares an edge and
//! auto-declares unseen endpoints in order of appearance. Canonical
//! serialization emits one `v` line per vertex in input order, then edges
//! sorted by (min index, max index). Repeated edge lines are idempotent.

use std::collections::HashMap;

use crate::error::{Error, ParseError};

/// Dense handle for a vertex of a particular [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Immutable simple undirected graph. No self-loops, no parallel edges.
#[derive(Debug, Clone)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, u32>,
    adj: Vec<Vec<VertexId>>, // sorted ascending per vertex
    edge_count: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.adj == other.adj
    }
}

impl Eq for Graph {}

struct Builder {
    names: Vec<String>,
    index: HashMap<String, u32>,
    edges: Vec<(u32, u32)>,
}

impl Builder {
    fn new() -> Self {
        Builder { names: Vec::new(), index: HashMap::new(), edges: Vec::new() }
    }

    fn declare(&mut self, name: &str, line: usize) -> Result<u32, ParseError> {
        if name == "v" {
            return Err(ParseError::ReservedName);
        }
        if self.index.contains_key(name) {
            return Err(ParseError::DuplicateVertex { line, name: name.to_string() });
        }
        Ok(self.intern(name))
    }

    fn intern(&mut self, name: &str) -> u32 {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len() as u32;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    fn edge(&mut self, u: &str, w: &str, line: usize) -> Result<(), ParseError> {
        if u == "v" || w == "v" {
            return Err(ParseError::ReservedName);
        }
        if u == w {
            return Err(ParseError::SelfLoop { line, name: u.to_string() });
        }
        let a = self.intern(u);
        let b = self.intern(w);
        self.edges.push((a.min(b), a.max(b)));
        Ok(())
    }

    fn finish(self) -> Graph {
        let n = self.names.len();
        let mut edges = self.edges;
        edges.sort_unstable();
        edges.dedup();
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a as usize].push(VertexId(b));
            adj[b as usize].push(VertexId(a));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { names: self.names, index: self.index, adj, edge_count: edges.len() }
    }
}

impl Graph {
    /// Builds a graph from explicit vertex declarations followed by edges.
    /// Edge endpoints not in `vertices` are auto-declared in order of
    /// appearance, exactly as the text format does.
    pub fn from_edges(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self, Error> {
        let mut b = Builder::new();
        for (i, name) in vertices.iter().enumerate() {
            b.declare(name, i + 1)?;
        }
        for (i, (u, w)) in edges.iter().enumerate() {
            b.edge(u, w, vertices.len() + i + 1)?;
        }
        Ok(b.finish())
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut b = Builder::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                ["v", name] => {
                    b.declare(name, line)?;
                }
                [u, w] => {
                    b.edge(u, w, line)?;
                }
                _ => {
                    return Err(ParseError::MalformedLine {
                        line,
                        content: content.trim().to_string(),
                    }
                    .into())
                }
            }
        }
        Ok(b.finish())
    }

    /// Canonical serialization; `parse(serialize(g)) == g`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            out.push_str("v ");
            out.push_str(name);
            out.push('\n');
        }
        for (u, w) in self.edges() {
            out.push_str(&self.names[u.index()]);
            out.push(' ');
            out.push_str(&self.names[w.index()]);
            out.push('\n');
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len() as u32).map(VertexId)
    }

    /// Edges as (u, w) pairs with u < w in input order, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = VertexId(u as u32);
            list.iter().copied().filter(move |&w| u < w).map(move |w| (u, w))
        })
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).map(|&i| VertexId(i))
    }

    pub fn require_vertex(&self, name: &str) -> Result<VertexId, Error> {
        self.vertex(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn closed_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = self.adj[v.index()].clone();
        let at = out.partition_point(|&w| w < v);
        out.insert(at, v);
        out
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn has_edge(&self, u: VertexId, w: VertexId) -> bool {
        u != w && self.adj[u.index()].binary_search(&w).is_ok()
    }

    /// Same vertex set and input order, complemented edge set.
    pub fn complement(&self) -> Graph {
        let n = self.names.len();
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        let mut edge_count = 0;
        for u in 0..n as u32 {
            let mut it = self.adj[u as usize].iter().peekable();
            for w in 0..n as u32 {
                if w == u {
                    continue;
                }
                while let Some(&&x) = it.peek() {
                    if x.0 < w {
                        it.next();
                    } else {
                        break;
                    }
                }
                let adjacent = it.peek().map_or(false, |&&x| x.0 == w);
                if !adjacent {
                    adj[u as usize].push(VertexId(w));
                    if u < w {
                        edge_count += 1;
                    }
                }
            }
        }
        Graph { names: self.names.clone(), index: self.index.clone(), adj, edge_count }
    }

    /// Induced subgraph on `keep`; vertex order is inherited from this
    /// graph's input order restricted to `keep`.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Graph {
        let mut ids: Vec<VertexId> = keep.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut b = Builder::new();
        for &v in &ids {
            b.intern(self.name(v));
        }
        let inset: HashMap<VertexId, ()> = ids.iter().map(|&v| (v, ())).collect();
        for &v in &ids {
            for &w in self.neighbors(v) {
                if v < w && inset.contains_key(&w) {
                    b.edges.push((
                        b.index[self.name(v)].min(b.index[self.name(w)]),
                        b.index[self.name(v)].max(b.index[self.name(w)]),
                    ));
                }
            }
        }
        b.finish()
    }

    /// BFS distances from `start`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, start: VertexId) -> Vec<Option<usize>> {
        let n = self.names.len();
        let mut dist = vec![None; n];
        dist[start.index()] = Some(0);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let d = dist[u.index()].unwrap();
            for &w in self.neighbors(u) {
                if dist[w.index()].is_none() {
                    dist[w.index()] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distance, `None` if no path exists.
    pub fn distance(&self, u: VertexId, w: VertexId) -> Option<usize> {
        if u == w {
            return Some(0);
        }
        self.bfs_distances(u)[w.index()]
    }

    pub fn is_connected(&self) -> bool {
        let n = self.names.len();
        if n == 0 {
            return true;
        }
        self.bfs_distances(VertexId(0)).iter().all(|d| d.is_some())
    }

    /// Maximum pairwise distance. Errors on the empty or a disconnected graph.
    pub fn diameter(&self) -> Result<usize, Error> {
        if self.names.is_empty() {
            return Err(Error::InvalidParameter("diameter of an empty graph".into()));
        }
        let mut best = 0;
        for v in self.vertices() {
            for d in self.bfs_distances(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Err(Error::Disconnected),
                }
            }
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(names: &[&str]) -> Graph {
        let edges: Vec<(&str, &str)> =
            names.windows(2).map(|w| (w[0], w[1])).collect();
        Graph::from_edges(names, &edges).unwrap()
    }

    #[test]
    fn parse_declares_in_first_appearance_order() {
        let g = Graph::parse("a b\nv c\nb c # tail comment\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.name(VertexId(0)), "a");
        assert_eq!(g.name(VertexId(2)), "c");
    }

    #[test]
    fn parse_rejects_self_loop_and_duplicates() {
        assert!(matches!(
            Graph::parse("a a\n"),
            Err(Error::Parse(ParseError::SelfLoop { .. }))
        ));
        assert!(matches!(
            Graph::parse("v a\nv a\n"),
            Err(Error::Parse(ParseError::DuplicateVertex { .. }))
        ));
        assert!(matches!(
            Graph::parse("a b c\n"),
            Err(Error::Parse(ParseError::MalformedLine { .. }))
        ));
    }

    #[test]
    fn duplicate_edge_lines_are_idempotent() {
        let g = Graph::parse("a b\nb a\na b\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn serialize_round_trips() {
        let g = Graph::parse("# demo\nb a\nv z\na c\n").unwrap();
        let text = g.serialize();
        let h = Graph::parse(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(text, h.serialize());
    }

    #[test]
    fn neighbors_of_domino_vertex_a() {
        let g = Graph::from_edges(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("c", "e"), ("d", "f"), ("e", "f")],
        )
        .unwrap();
        let a = g.vertex("a").unwrap();
        let names: Vec<&str> = g.neighbors(a).iter().map(|&v| g.name(v)).collect();
        assert_eq!(names, ["b", "c"]);
        assert_eq!(g.closed_neighbors(a).len(), 3);
    }

    #[test]
    fn isolated_vertex_has_no_neighbors() {
        let g = Graph::from_edges(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let c = g.vertex("c").unwrap();
        assert!(g.neighbors(c).is_empty());
        assert!(g.require_vertex("nope").is_err());
    }

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let g = Graph::from_edges(&["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c")]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn induced_subgraph_keeps_input_order() {
        let g = path(&["a", "b", "c", "d"]);
        let keep: Vec<VertexId> =
            ["d", "b", "a"].iter().map(|s| g.vertex(s).unwrap()).collect();
        let h = g.induced_subgraph(&keep);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.name(VertexId(0)), "a");
        assert_eq!(h.name(VertexId(1)), "b");
        assert_eq!(h.name(VertexId(2)), "d");
        assert_eq!(h.edge_count(), 1); // only ab survives
    }

    #[test]
    fn whole_vertex_set_induces_the_graph_itself() {
        let g = path(&["a", "b", "c"]);
        let all: Vec<VertexId> = g.vertices().collect();
        assert_eq!(g.induced_subgraph(&all), g);
    }

    #[test]
    fn distance_and_diameter() {
        let g = path(&["a", "b", "c", "d", "e"]);
        let a = g.vertex("a").unwrap();
        let e = g.vertex("e").unwrap();
        assert_eq!(g.distance(a, a), Some(0));
        assert_eq!(g.distance(a, e), Some(4));
        assert_eq!(g.diameter().unwrap(), 4);

        let disconnected = Graph::from_edges(&["a", "b", "c"], &[("a", "b")]).unwrap();
        assert_eq!(disconnected.distance(a, disconnected.vertex("c").unwrap()), None);
        assert!(matches!(disconnected.diameter(), Err(Error::Disconnected)));
    }

    #[test]
    fn subdivided_claw_diameter_is_four() {
        let g = Graph::from_edges(
            &["c", "m1", "m2", "m3", "l1", "l2", "l3"],
            &[("c", "m1"), ("c", "m2"), ("c", "m3"), ("m1", "l1"), ("m2", "l2"), ("m3", "l3")],
        )
        .unwrap();
        assert_eq!(g.diameter().unwrap(), 4);
        // oracle: Floyd-Warshall over the adjacency relation
        let n = g.vertex_count();
        let mut d = vec![vec![usize::MAX / 2; n]; n];
        for v in 0..n {
            d[v][v] = 0;
        }
        for (u, w) in g.edges() {
            d[u.index()][w.index()] = 1;
            d[w.index()][u.index()] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        let oracle = d.iter().flat_map(|row| row.iter()).max().copied().unwrap();
        assert_eq!(oracle, 4);
    }
}
