//! Vertex orderings: bijections between a graph's vertices and positions 1..n.
//!
//! The ordering file format is a single whitespace-separated line of vertex
//! names.

use crate::error::{Error, ParseError};
use crate::graph::{Graph, VertexId};

/// A permutation of a graph's vertices. `seq` and the inverse position map
/// stay consistent by construction; positions reported by [`Ordering::position`]
/// are 1-based, [`Ordering::rank`] is the 0-based variant used internally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    seq: Vec<VertexId>,
    pos: Vec<u32>, // pos[v] = 0-based rank of v in seq
}

impl Ordering {
    /// Builds an ordering from a sequence that must be a permutation of the
    /// ids `0..n`.
    pub fn new(seq: Vec<VertexId>, n: usize) -> Result<Self, Error> {
        if seq.len() != n {
            return Err(Error::VertexSetMismatch);
        }
        let mut pos = vec![u32::MAX; n];
        for (i, v) in seq.iter().enumerate() {
            if v.index() >= n || pos[v.index()] != u32::MAX {
                return Err(Error::VertexSetMismatch);
            }
            pos[v.index()] = i as u32;
        }
        Ok(Ordering { seq, pos })
    }

    /// The graph's input order.
    pub fn identity(g: &Graph) -> Self {
        let n = g.vertex_count();
        Ordering { seq: g.vertices().collect(), pos: (0..n as u32).collect() }
    }

    pub fn from_names<S: AsRef<str>>(g: &Graph, names: &[S]) -> Result<Self, Error> {
        let n = g.vertex_count();
        let mut seq = Vec::with_capacity(names.len());
        let mut seen = vec![false; n];
        for name in names {
            let name = name.as_ref();
            let v = g
                .vertex(name)
                .ok_or_else(|| ParseError::UnknownVertex(name.to_string()))?;
            if seen[v.index()] {
                return Err(ParseError::DuplicateInOrdering(name.to_string()).into());
            }
            seen[v.index()] = true;
            seq.push(v);
        }
        if seq.len() != n {
            let missing = (0..n).find(|&i| !seen[i]).expect("some vertex is missing");
            return Err(ParseError::MissingFromOrdering(
                g.name(VertexId(missing as u32)).to_string(),
            )
            .into());
        }
        Ordering::new(seq, n)
    }

    pub fn parse(g: &Graph, text: &str) -> Result<Self, Error> {
        let names: Vec<&str> = text.split_whitespace().collect();
        Ordering::from_names(g, &names)
    }

    pub fn serialize(&self, g: &Graph) -> String {
        let mut s = self.names(g).join(" ");
        s.push('\n');
        s
    }

    pub fn names<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.seq.iter().map(|&v| g.name(v)).collect()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[VertexId] {
        &self.seq
    }

    /// 0-based rank of `v`.
    pub fn rank(&self, v: VertexId) -> usize {
        self.pos[v.index()] as usize
    }

    /// 1-based position of `v`.
    pub fn position(&self, v: VertexId) -> usize {
        self.rank(v) + 1
    }

    pub fn at(&self, rank: usize) -> VertexId {
        self.seq[rank]
    }

    pub fn first(&self) -> Option<VertexId> {
        self.seq.first().copied()
    }

    pub fn last(&self) -> Option<VertexId> {
        self.seq.last().copied()
    }

    /// The reverse ordering.
    pub fn dual(&self) -> Ordering {
        let n = self.seq.len();
        let seq: Vec<VertexId> = self.seq.iter().rev().copied().collect();
        let pos = self.pos.iter().map(|&p| (n as u32 - 1) - p).collect();
        Ordering { seq, pos }
    }

    /// 1-based position of the first disagreement, `None` when equal.
    pub fn first_difference(&self, other: &Ordering) -> Result<Option<usize>, Error> {
        if self.seq.len() != other.seq.len() {
            return Err(Error::VertexSetMismatch);
        }
        Ok(self
            .seq
            .iter()
            .zip(&other.seq)
            .position(|(a, b)| a != b)
            .map(|i| i + 1))
    }

    /// Restriction to the vertices of `sub`, an induced subgraph of `host`
    /// (matched by name), keeping this ordering's relative order.
    pub fn restrict(&self, host: &Graph, sub: &Graph) -> Result<Ordering, Error> {
        let names: Vec<&str> = self
            .seq
            .iter()
            .map(|&v| host.name(v))
            .filter(|name| sub.vertex(name).is_some())
            .collect();
        Ordering::from_names(sub, &names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap()
    }

    #[test]
    fn positions_are_inverse_of_sequence() {
        let g = p4();
        let o = Ordering::from_names(&g, &["c", "a", "d", "b"]).unwrap();
        for (i, &v) in o.seq().iter().enumerate() {
            assert_eq!(o.rank(v), i);
            assert_eq!(o.position(v), i + 1);
        }
    }

    #[test]
    fn dual_is_an_involution_and_flips_positions() {
        let g = p4();
        let o = Ordering::from_names(&g, &["c", "a", "d", "b"]).unwrap();
        let d = o.dual();
        assert_eq!(d.dual(), o);
        let n = o.len();
        for v in g.vertices() {
            assert_eq!(d.position(v), n + 1 - o.position(v));
        }
    }

    #[test]
    fn parse_validates_coverage() {
        let g = p4();
        assert!(matches!(
            Ordering::parse(&g, "a b c"),
            Err(Error::Parse(ParseError::MissingFromOrdering(_)))
        ));
        assert!(matches!(
            Ordering::parse(&g, "a b c c"),
            Err(Error::Parse(ParseError::DuplicateInOrdering(_)))
        ));
        assert!(matches!(
            Ordering::parse(&g, "a b c q"),
            Err(Error::Parse(ParseError::UnknownVertex(_)))
        ));
        let o = Ordering::parse(&g, "d c b a").unwrap();
        assert_eq!(o.serialize(&g), "d c b a\n");
    }

    #[test]
    fn first_difference_finds_leftmost_change() {
        let g = p4();
        let o = Ordering::parse(&g, "a b c d").unwrap();
        let p = Ordering::parse(&g, "a b d c").unwrap();
        assert_eq!(o.first_difference(&o).unwrap(), None);
        assert_eq!(o.first_difference(&p).unwrap(), Some(3));
        assert_eq!(p.first_difference(&o).unwrap(), Some(3));
    }

    #[test]
    fn restrict_keeps_relative_order() {
        let g = p4();
        let o = Ordering::parse(&g, "d a c b").unwrap();
        let keep: Vec<VertexId> = ["a", "b", "d"].iter().map(|s| g.vertex(s).unwrap()).collect();
        let sub = g.induced_subgraph(&keep);
        let r = o.restrict(&g, &sub).unwrap();
        assert_eq!(r.names(&sub), ["d", "a", "b"]);
    }
}
