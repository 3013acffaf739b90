//! Bundled fixture graphs with their named orderings, the starjoin
//! operator, and the small parameterized families (domino, ladders, the
//! two-chain family).
//!
//! The fixture edge lists are ground truth for the rest of the suite: the
//! acceptance tests replay multi-sweep traces against the fixtures' named
//! orderings, so a transcription slip here breaks those exact-match tests.

use std::collections::BTreeMap;

use crate::checkers::validate_transitive_orientation;
use crate::error::Error;
use crate::graph::Graph;
use crate::ordering::Ordering;

/// A graph plus a map of named orderings, all validated on construction.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub graph: Graph,
    pub orderings: BTreeMap<String, Ordering>,
}

impl Fixture {
    fn build(graph: Graph, named: &[(&str, &[&str])]) -> Fixture {
        let mut orderings = BTreeMap::new();
        for (label, names) in named {
            let o = Ordering::from_names(&graph, names)
                .unwrap_or_else(|e| panic!("fixture ordering {label}: {e}"));
            orderings.insert(label.to_string(), o);
        }
        Fixture { graph, orderings }
    }

    pub fn ordering(&self, label: &str) -> &Ordering {
        &self.orderings[label]
    }
}

/// Nine-vertex graph whose sweep sequence from `sigma1` runs through a
/// three-cycle of orderings.
pub fn fixture_g3() -> Fixture {
    let graph = Graph::from_edges(
        &["a", "b", "c", "d", "e", "f", "x", "y", "z"],
        &[
            ("f", "y"),
            ("f", "a"),
            ("f", "e"),
            ("y", "e"),
            ("a", "e"),
            ("a", "x"),
            ("a", "b"),
            ("a", "c"),
            ("e", "c"),
            ("x", "b"),
            ("b", "c"),
            ("c", "d"),
            ("e", "d"),
            ("c", "z"),
            ("d", "z"),
        ],
    )
    .expect("static fixture");
    Fixture::build(
        graph,
        &[
            ("sigma1", &["x", "b", "a", "c", "e", "f", "d", "z", "y"]),
            ("sigma2", &["y", "f", "e", "a", "c", "d", "b", "x", "z"]),
            ("sigma3", &["z", "d", "c", "e", "a", "b", "f", "y", "x"]),
        ],
    )
}

/// Twelve-vertex graph whose sweep sequence from `mu1` runs through a
/// four-cycle of orderings.
pub fn fixture_g4() -> Fixture {
    let graph = Graph::from_edges(
        &["x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4", "z1", "z2", "z3", "z4"],
        &[
            ("z1", "x1"),
            ("z1", "y1"),
            ("z1", "y2"),
            ("x1", "y2"),
            ("y1", "y2"),
            ("y1", "x4"),
            ("y1", "y4"),
            ("y1", "y3"),
            ("y2", "y3"),
            ("x4", "z4"),
            ("y4", "y3"),
            ("y3", "z2"),
            ("y2", "z2"),
            ("y3", "x2"),
            ("z2", "x2"),
            ("y2", "y4"),
            ("x3", "z3"),
            ("z3", "y3"),
            ("z3", "y4"),
            ("x3", "y4"),
            ("z4", "y4"),
            ("z4", "y1"),
            ("z1", "y4"),
            ("y1", "z2"),
            ("y2", "z3"),
            ("z4", "y3"),
        ],
    )
    .expect("static fixture");
    Fixture::build(
        graph,
        &[
            (
                "mu1",
                &["x4", "z4", "y1", "y3", "y4", "y2", "z2", "z1", "z3", "x2", "x3", "x1"],
            ),
            (
                "mu2",
                &["x1", "z1", "y2", "y4", "y1", "y3", "z3", "z2", "z4", "x3", "x4", "x2"],
            ),
            (
                "mu3",
                &["x2", "z2", "y3", "y1", "y2", "y4", "z4", "z3", "z1", "x4", "x1", "x3"],
            ),
            (
                "mu4",
                &["x3", "z3", "y4", "y2", "y3", "y1", "z1", "z4", "z2", "x1", "x2", "x4"],
            ),
        ],
    )
}

/// Seven-vertex cocomparability graph on which iterated LexDFS sweeps cycle
/// with period four while never producing a cocomparability ordering; `tau`
/// is the cocomparability witness.
pub fn fixture_lexdfs_example() -> Fixture {
    let graph = Graph::from_edges(
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
    .expect("static fixture");
    Fixture::build(
        graph,
        &[
            ("sigma1", &["a", "c", "d", "b", "f", "g", "e"]),
            ("sigma2", &["e", "g", "f", "d", "c", "a", "b"]),
            ("sigma3", &["b", "d", "c", "a", "g", "e", "f"]),
            ("sigma4", &["f", "e", "g", "c", "d", "b", "a"]),
            ("tau", &["a", "c", "e", "f", "g", "d", "b"]),
        ],
    )
}

/// The six-vertex double square.
pub fn gen_domino() -> Graph {
    Graph::from_edges(
        &["a", "b", "c", "d", "e", "f"],
        &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("c", "e"), ("d", "f"), ("e", "f")],
    )
    .expect("static fixture")
}

/// k chained squares: x-y rung, rungs x_i-y_i, and chain edges along both
/// sides. The 1-ladder is a four-cycle, the 2-ladder is the domino.
pub fn gen_ladder(k: usize) -> Result<Graph, Error> {
    if k < 1 {
        return Err(Error::InvalidParameter("ladder needs k >= 1".into()));
    }
    let mut names = vec!["x".to_string()];
    names.extend((1..=k).map(|i| format!("x{i}")));
    names.push("y".to_string());
    names.extend((1..=k).map(|i| format!("y{i}")));
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut edges: Vec<(String, String)> =
        vec![("x".into(), "y".into()), ("x".into(), "x1".into()), ("y".into(), "y1".into())];
    for i in 1..=k {
        edges.push((format!("x{i}"), format!("y{i}")));
        if i < k {
            edges.push((format!("x{i}"), format!("x{}", i + 1)));
            edges.push((format!("y{i}"), format!("y{}", i + 1)));
        }
    }
    let edge_refs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Graph::from_edges(&refs, &edge_refs)
}

/// Two disjoint chains on 2n+2 vertices: a_1..a_n and x, y, b_1..b_n. The
/// named ordering `tau` orients every chain edge from an odd-indexed vertex
/// to an even-indexed one, so orienting edges along `tau` is transitive and
/// `tau` is a cocomparability ordering of the complement.
///
/// The pair (a_i, b_i) enters `tau` a-first when i mod 4 is 0 or 1 and
/// b-first otherwise, odd indices ascending then even indices descending.
/// A plainer recurrence that always appends b_i, b_{i+2}, a_{i+2} after an
/// odd a_i does not reproduce the canonical n = 6 ordering, which
/// interleaves a_5 before b_5; the mod-4 alternation does, and the result
/// is gated by the transitive-orientation validator either way.
pub fn gen_two_chain(n: usize) -> Result<Fixture, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter("two-chain needs n >= 2".into()));
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    names.push("x".into());
    names.push("y".into());
    names.extend((1..=n).map(|i| format!("b{i}")));
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();

    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 1..n {
        edges.push((format!("a{i}"), format!("a{}", i + 1)));
        edges.push((format!("b{i}"), format!("b{}", i + 1)));
    }
    edges.push(("x".into(), "y".into()));
    edges.push(("y".into(), "b1".into()));
    let edge_refs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let graph = Graph::from_edges(&refs, &edge_refs)?;

    let pair = |i: usize| -> Vec<String> {
        if i % 4 == 0 || i % 4 == 1 {
            vec![format!("a{i}"), format!("b{i}")]
        } else {
            vec![format!("b{i}"), format!("a{i}")]
        }
    };
    let mut tau_names: Vec<String> = vec!["x".into()];
    let mut i = 1;
    while i <= n {
        tau_names.extend(pair(i));
        i += 2;
    }
    let mut i = if n % 2 == 0 { n } else { n - 1 };
    while i >= 2 {
        tau_names.extend(pair(i));
        i -= 2;
    }
    tau_names.push("y".into());

    let tau = Ordering::from_names(&graph, &tau_names)?;
    if let Err(v) = validate_transitive_orientation(&graph.complement(), &tau) {
        return Err(Error::InvalidParameter(format!(
            "two-chain construction bug: tau fails orientation validation at {:?}",
            v.witness
        )));
    }
    let mut orderings = BTreeMap::new();
    orderings.insert("tau".to_string(), tau);
    Ok(Fixture { graph, orderings })
}

/// Attaches a universal join vertex `g{i}` to each component and a root `r`
/// adjacent to all join vertices. Component vertex names are kept unless
/// they collide with each other or with the join/root names, in which case
/// every component vertex is renamed `p{i}.{name}`.
pub fn starjoin(parts: &[&Graph]) -> Result<Graph, Error> {
    starjoin_with_names(parts).map(|(g, _)| g)
}

/// As [`starjoin`], also returning, per component, the new name of each of
/// its vertices (indexed by the component's vertex ids).
pub(crate) fn starjoin_with_names(parts: &[&Graph]) -> Result<(Graph, Vec<Vec<String>>), Error> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("starjoin needs at least one component".into()));
    }
    let mut reserved: Vec<String> = (1..=parts.len()).map(|i| format!("g{i}")).collect();
    reserved.push("r".to_string());

    let mut all: Vec<&str> = reserved.iter().map(|s| s.as_str()).collect();
    for g in parts {
        all.extend(g.vertices().map(|v| g.name(v)));
    }
    let mut sorted = all.clone();
    sorted.sort_unstable();
    let collide = sorted.windows(2).any(|w| w[0] == w[1]);

    let mapped: Vec<Vec<String>> = parts
        .iter()
        .enumerate()
        .map(|(i, g)| {
            g.vertices()
                .map(|v| {
                    if collide {
                        format!("p{}.{}", i + 1, g.name(v))
                    } else {
                        g.name(v).to_string()
                    }
                })
                .collect()
        })
        .collect();

    let mut vertices: Vec<&str> = Vec::new();
    for names in &mapped {
        vertices.extend(names.iter().map(|s| s.as_str()));
    }
    vertices.extend(reserved.iter().map(|s| s.as_str()));

    let mut edges: Vec<(&str, &str)> = Vec::new();
    for (i, g) in parts.iter().enumerate() {
        for (u, w) in g.edges() {
            edges.push((&mapped[i][u.index()], &mapped[i][w.index()]));
        }
        let join = &reserved[i];
        for v in g.vertices() {
            edges.push((join, &mapped[i][v.index()]));
        }
        edges.push(("r", join));
    }
    let g = Graph::from_edges(&vertices, &edges)?;
    Ok((g, mapped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::{check_cocomp_order, check_lexbfs_4pc, find_induced_domino};
    use crate::graph::VertexId;

    #[test]
    fn g3_has_nine_vertices_and_fifteen_edges() {
        let f = fixture_g3();
        assert_eq!(f.graph.vertex_count(), 9);
        assert_eq!(f.graph.edge_count(), 15);
        assert_eq!(
            f.ordering("sigma1").names(&f.graph),
            ["x", "b", "a", "c", "e", "f", "d", "z", "y"]
        );
    }

    #[test]
    fn g3_sweeps_pass_the_four_point_condition() {
        let f = fixture_g3();
        for label in ["sigma1", "sigma2", "sigma3"] {
            assert!(check_lexbfs_4pc(&f.graph, f.ordering(label)).is_ok(), "{label}");
        }
    }

    #[test]
    fn g3_induced_on_abcx() {
        let f = fixture_g3();
        let keep: Vec<VertexId> =
            ["a", "b", "c", "x"].iter().map(|s| f.graph.vertex(s).unwrap()).collect();
        let h = f.graph.induced_subgraph(&keep);
        assert_eq!(h.edge_count(), 5); // ab ac bc ax xb
        let pairs = [("a", "b"), ("a", "c"), ("b", "c"), ("a", "x"), ("x", "b")];
        for (u, w) in pairs {
            assert!(h.has_edge(h.vertex(u).unwrap(), h.vertex(w).unwrap()), "{u}{w}");
        }
    }

    #[test]
    fn g4_shape_and_orderings() {
        let f = fixture_g4();
        assert_eq!(f.graph.vertex_count(), 12);
        assert_eq!(f.graph.edge_count(), 26);
        for label in ["mu1", "mu2", "mu3", "mu4"] {
            assert!(check_lexbfs_4pc(&f.graph, f.ordering(label)).is_ok(), "{label}");
        }
    }

    #[test]
    fn lexdfs_fixture_witness_is_cocomparability() {
        let f = fixture_lexdfs_example();
        assert!(check_cocomp_order(&f.graph, f.ordering("tau")).is_ok());
        for label in ["sigma1", "sigma2", "sigma3", "sigma4"] {
            assert!(check_cocomp_order(&f.graph, f.ordering(label)).is_err(), "{label}");
        }
    }

    #[test]
    fn domino_and_small_ladders() {
        let d = gen_domino();
        assert_eq!(d.vertex_count(), 6);
        assert_eq!(d.edge_count(), 7);
        assert!(find_induced_domino(&d).is_some());

        assert!(gen_ladder(0).is_err());
        let l1 = gen_ladder(1).unwrap();
        assert_eq!(l1.vertex_count(), 4);
        assert_eq!(l1.edge_count(), 4);
        let l2 = gen_ladder(2).unwrap();
        assert_eq!(l2.vertex_count(), 6);
        assert_eq!(l2.edge_count(), 7);
    }

    #[test]
    fn two_ladder_is_isomorphic_to_the_domino() {
        let l2 = gen_ladder(2).unwrap();
        let d = gen_domino();
        // exhaustive 6! mapping check
        let dn: Vec<VertexId> = d.vertices().collect();
        let mut found = false;
        let mut perm: Vec<usize> = (0..6).collect();
        let mut c = [0usize; 6];
        let mut i = 0;
        let check = |p: &[usize]| -> bool {
            l2.edges().all(|(u, w)| d.has_edge(dn[p[u.index()]], dn[p[w.index()]]))
                && l2.edge_count() == d.edge_count()
        };
        found |= check(&perm);
        while i < 6 {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                found |= check(&perm);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        assert!(found);
    }

    #[test]
    fn two_chain_tau_matches_the_canonical_n6_ordering() {
        let f = gen_two_chain(6).unwrap();
        assert_eq!(f.graph.vertex_count(), 14);
        assert_eq!(
            f.ordering("tau").names(&f.graph),
            ["x", "a1", "b1", "b3", "a3", "a5", "b5", "b6", "a6", "a4", "b4", "b2", "a2", "y"]
        );
    }

    #[test]
    fn two_chain_tau_validates_for_a_range_of_sizes() {
        for n in 2..=12 {
            let f = gen_two_chain(n).unwrap();
            assert_eq!(f.graph.vertex_count(), 2 * n + 2);
            let co = f.graph.complement();
            assert!(validate_transitive_orientation(&co, f.ordering("tau")).is_ok(), "n={n}");
            assert!(check_cocomp_order(&co, f.ordering("tau")).is_ok(), "n={n}");
        }
        assert!(gen_two_chain(1).is_err());
    }

    #[test]
    fn starjoin_of_a_single_vertex_is_a_path() {
        let k1 = Graph::from_edges(&["a"], &[]).unwrap();
        let h = starjoin(&[&k1]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(h.vertex("a").unwrap(), h.vertex("g1").unwrap()));
        assert!(h.has_edge(h.vertex("g1").unwrap(), h.vertex("r").unwrap()));
    }

    #[test]
    fn starjoin_renames_on_collision() {
        let k2 = Graph::from_edges(&["u", "w"], &[("u", "w")]).unwrap();
        let h = starjoin(&[&k2, &k2]).unwrap();
        assert_eq!(h.vertex_count(), 7);
        assert!(h.vertex("p1.u").is_some());
        assert!(h.vertex("p2.u").is_some());
        assert!(h.vertex("r").is_some());
    }
}
