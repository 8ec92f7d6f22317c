//! The classical crystal graph `B0` of the 27-element KR crystal `B^{1,1}`.
//!
//! Vertices are numbered 1..=27 as in the standard picture of the crystal;
//! the affine 0-arrows are not part of `B0` and are not stored.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cartan::{simple_root, Node, Weight, RANK};
use crate::error::{Error, Result};

pub const NUM_VERTICES: usize = 27;
pub const NUM_EDGES: usize = 36;

/// `(source, color, sink)` for every classical arrow `b --i--> f_i b`.
const EDGES: [(u8, u8, u8); NUM_EDGES] = [
    (1, 1, 2),
    (2, 2, 3),
    (3, 3, 4),
    (4, 4, 5),
    (5, 5, 6),
    (4, 6, 7),
    (5, 6, 8),
    (6, 6, 9),
    (7, 4, 8),
    (8, 5, 9),
    (8, 3, 10),
    (9, 3, 11),
    (10, 5, 11),
    (11, 4, 12),
    (10, 2, 13),
    (11, 2, 14),
    (12, 2, 15),
    (13, 5, 14),
    (14, 4, 15),
    (15, 3, 16),
    (16, 6, 17),
    (13, 1, 18),
    (14, 1, 19),
    (15, 1, 20),
    (16, 1, 21),
    (17, 1, 22),
    (18, 5, 19),
    (19, 4, 20),
    (20, 3, 21),
    (21, 6, 22),
    (21, 2, 23),
    (22, 2, 24),
    (23, 6, 24),
    (24, 3, 25),
    (25, 4, 26),
    (26, 5, 27),
];

/// A vertex of `B^{1,1}`, `1..=27`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex(u8);

impl Vertex {
    pub const HIGHEST: Vertex = Vertex(1);
    pub const LOWEST: Vertex = Vertex(27);

    pub fn new(id: i64) -> Result<Self> {
        if (1..=NUM_VERTICES as i64).contains(&id) {
            Ok(Vertex(id as u8))
        } else {
            Err(Error::InvalidVertex(id))
        }
    }

    pub const fn id(self) -> u8 {
        self.0
    }

    const fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn all() -> impl Iterator<Item = Vertex> {
        (1..=NUM_VERTICES as u8).map(Vertex)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One classical arrow `source --color--> sink`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub source: Vertex,
    pub color: Node,
    pub sink: Vertex,
}

/// A composable sequence of arrows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Route {
    pub edges: Vec<Edge>,
}

impl Route {
    pub fn colors(&self) -> Vec<Node> {
        self.edges.iter().map(|e| e.color).collect()
    }

    pub fn is_consecutive(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].sink == w[1].source)
    }

    pub fn source(&self) -> Option<Vertex> {
        self.edges.first().map(|e| e.source)
    }

    pub fn sink(&self) -> Option<Vertex> {
        self.edges.last().map(|e| e.sink)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.edges.first() {
            None => write!(f, "()"),
            Some(first) => {
                write!(f, "{}", first.source)?;
                for e in &self.edges {
                    write!(f, " -{}-> {}", e.color, e.sink)?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug)]
pub struct CrystalGraph {
    edges: Vec<Edge>,
    down: [[Option<Vertex>; RANK]; NUM_VERTICES],
    up: [[Option<Vertex>; RANK]; NUM_VERTICES],
    eps: [[u32; RANK]; NUM_VERTICES],
    phi: [[u32; RANK]; NUM_VERTICES],
    weights: [Weight; NUM_VERTICES],
    /// `reach[j][i]`: vertex `i` is reachable from vertex `j` along arrows.
    reach: [[bool; NUM_VERTICES]; NUM_VERTICES],
}

impl CrystalGraph {
    /// Builds the graph from the embedded edge table and checks its shape:
    /// edge count, per-color matching, unique source and sink, acyclicity
    /// and connectivity.
    pub fn build() -> Result<Self> {
        Self::from_edges(&EDGES)
    }

    fn from_edges(raw: &[(u8, u8, u8)]) -> Result<Self> {
        if raw.len() != NUM_EDGES {
            return Err(Error::Graph(format!(
                "expected {NUM_EDGES} edges, found {}",
                raw.len()
            )));
        }
        let mut down = [[None; RANK]; NUM_VERTICES];
        let mut up = [[None; RANK]; NUM_VERTICES];
        let mut edges = Vec::with_capacity(raw.len());
        for &(s, c, t) in raw {
            let source = Vertex::new(s as i64).map_err(|e| Error::Graph(e.to_string()))?;
            let sink = Vertex::new(t as i64).map_err(|e| Error::Graph(e.to_string()))?;
            let color = Node::new(c as i64).map_err(|e| Error::Graph(e.to_string()))?;
            let slot = &mut down[source.index()][color.index()];
            if slot.is_some() {
                return Err(Error::Graph(format!("two {color}-arrows leave {source}")));
            }
            *slot = Some(sink);
            let slot = &mut up[sink.index()][color.index()];
            if slot.is_some() {
                return Err(Error::Graph(format!("two {color}-arrows enter {sink}")));
            }
            *slot = Some(source);
            edges.push(Edge {
                source,
                color,
                sink,
            });
        }
        edges.sort();

        let string_len = |table: &[[Option<Vertex>; RANK]; NUM_VERTICES], v: Vertex, a: usize| {
            let mut n = 0;
            let mut cur = v;
            while let Some(next) = table[cur.index()][a] {
                n += 1;
                cur = next;
            }
            n
        };
        let mut eps = [[0; RANK]; NUM_VERTICES];
        let mut phi = [[0; RANK]; NUM_VERTICES];
        let mut weights = [Weight::ZERO; NUM_VERTICES];
        for v in Vertex::all() {
            for a in 0..RANK {
                eps[v.index()][a] = string_len(&up, v, a);
                phi[v.index()][a] = string_len(&down, v, a);
                weights[v.index()].0[a] = phi[v.index()][a] as i32 - eps[v.index()][a] as i32;
            }
        }

        let mut reach = [[false; NUM_VERTICES]; NUM_VERTICES];
        for v in Vertex::all() {
            let mut stack = vec![v];
            while let Some(cur) = stack.pop() {
                if reach[v.index()][cur.index()] {
                    continue;
                }
                reach[v.index()][cur.index()] = true;
                stack.extend(down[cur.index()].iter().flatten().copied());
            }
        }

        let graph = CrystalGraph {
            edges,
            down,
            up,
            eps,
            phi,
            weights,
            reach,
        };
        graph.check_shape()?;
        if !weights_follow_roots(&graph) {
            return Err(Error::Graph(
                "weights are not compatible with the arrows".into(),
            ));
        }
        Ok(graph)
    }

    fn check_shape(&self) -> Result<()> {
        let sources: Vec<Vertex> = Vertex::all()
            .filter(|&v| self.up[v.index()].iter().all(Option::is_none))
            .collect();
        let sinks: Vec<Vertex> = Vertex::all()
            .filter(|&v| self.down[v.index()].iter().all(Option::is_none))
            .collect();
        if sources != [Vertex::HIGHEST] {
            return Err(Error::Graph(format!(
                "sources {sources:?}, expected only vertex 1"
            )));
        }
        if sinks != [Vertex::LOWEST] {
            return Err(Error::Graph(format!(
                "sinks {sinks:?}, expected only vertex 27"
            )));
        }
        for v in Vertex::all() {
            if !self.reachable(v, Vertex::HIGHEST) {
                return Err(Error::Graph(format!("vertex {v} is not reachable from 1")));
            }
            for w in Vertex::all() {
                if v != w && self.reachable(v, w) && self.reachable(w, v) {
                    return Err(Error::Graph(format!("cycle through {v} and {w}")));
                }
            }
        }
        Ok(())
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `f_i b`, following the color-`i` arrow out of `b`.
    pub fn f(&self, b: Vertex, i: Node) -> Option<Vertex> {
        self.down[b.index()][i.index()]
    }

    /// `e_i b`, following the color-`i` arrow into `b` backwards.
    pub fn e(&self, b: Vertex, i: Node) -> Option<Vertex> {
        self.up[b.index()][i.index()]
    }

    pub fn eps(&self, b: Vertex, i: Node) -> u32 {
        self.eps[b.index()][i.index()]
    }

    pub fn phi(&self, b: Vertex, i: Node) -> u32 {
        self.phi[b.index()][i.index()]
    }

    pub fn wt(&self, b: Vertex) -> Weight {
        self.weights[b.index()]
    }

    /// True iff `target` can be reached from `start` by following zero or
    /// more arrows.
    pub fn reachable(&self, target: Vertex, start: Vertex) -> bool {
        self.reach[start.index()][target.index()]
    }

    /// Outgoing arrows of `b`, by increasing color.
    pub fn out_edges(&self, b: Vertex) -> impl Iterator<Item = Edge> + '_ {
        Node::ALL.into_iter().filter_map(move |color| {
            self.f(b, color).map(|sink| Edge {
                source: b,
                color,
                sink,
            })
        })
    }

    /// Incoming arrows of `b`, by increasing color.
    pub fn in_edges(&self, b: Vertex) -> impl Iterator<Item = Edge> + '_ {
        Node::ALL.into_iter().filter_map(move |color| {
            self.e(b, color).map(|source| Edge {
                source,
                color,
                sink: b,
            })
        })
    }

    /// Edge list as `"src color dst"` lines, sorted lexicographically.
    pub fn dump(&self) -> String {
        let mut lines: Vec<String> = self
            .edges
            .iter()
            .map(|e| format!("{} {} {}", e.source, e.color, e.sink))
            .collect();
        lines.sort();
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

static GRAPH: OnceLock<CrystalGraph> = OnceLock::new();

/// The process-wide crystal graph, validated on first use.
pub fn graph() -> &'static CrystalGraph {
    GRAPH.get_or_init(|| CrystalGraph::build().expect("embedded crystal graph is well formed"))
}

/// Consistency of the stored weights with the root lattice.
pub(crate) fn weights_follow_roots(g: &CrystalGraph) -> bool {
    g.edges()
        .iter()
        .all(|e| g.wt(e.sink) == g.wt(e.source) - simple_root(e.color))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(id: i64) -> Vertex {
        Vertex::new(id).unwrap()
    }

    fn n(a: i64) -> Node {
        Node::new(a).unwrap()
    }

    #[test]
    fn shape() {
        let g = graph();
        assert_eq!(g.edges().len(), 36);
        for a in Node::ALL {
            assert_eq!(g.edges().iter().filter(|e| e.color == a).count(), 6);
        }
        assert!(weights_follow_roots(g));
    }

    #[test]
    fn raising_and_lowering() {
        let g = graph();
        assert_eq!(g.f(v(1), n(1)), Some(v(2)));
        assert_eq!(g.f(v(4), n(6)), Some(v(7)));
        for a in Node::ALL {
            assert_eq!(g.e(v(1), a), None);
            for b in Vertex::all() {
                if let Some(c) = g.f(b, a) {
                    assert_eq!(g.e(c, a), Some(b));
                }
                if let Some(c) = g.e(b, a) {
                    assert_eq!(g.f(c, a), Some(b));
                }
            }
        }
    }

    #[test]
    fn string_lengths() {
        let g = graph();
        assert_eq!(g.eps(v(1), n(1)), 0);
        assert_eq!(g.phi(v(1), n(1)), 1);
        assert_eq!(g.eps(v(18), n(1)), 1);
        // Minuscule: every string has length at most one.
        for b in Vertex::all() {
            for a in Node::ALL {
                assert!(g.eps(b, a) + g.phi(b, a) <= 1);
            }
        }
    }

    #[test]
    fn weights() {
        let g = graph();
        assert_eq!(g.wt(v(1)), Weight([1, 0, 0, 0, 0, 0]));
        assert_eq!(g.wt(v(27)), Weight([0, 0, 0, 0, -1, 0]));
        let total = Vertex::all().fold(Weight::ZERO, |acc, b| acc + g.wt(b));
        assert_eq!(total, Weight::ZERO);
        // The 27 weights are distinct (the module is minuscule).
        let mut ws: Vec<Weight> = Vertex::all().map(|b| g.wt(b)).collect();
        ws.sort();
        ws.dedup();
        assert_eq!(ws.len(), 27);
    }

    #[test]
    fn reachability() {
        let g = graph();
        assert!(g.reachable(v(5), v(5)));
        assert!(g.reachable(v(16), v(2)));
        assert!(!g.reachable(v(1), v(2)));
        for b in Vertex::all() {
            assert!(g.reachable(b, v(1)));
            assert!(g.reachable(v(27), b));
        }
    }

    #[test]
    fn dump_is_sorted_lines() {
        let dump = graph().dump();
        let lines: Vec<&str> = dump.lines().collect();
        assert_eq!(lines.len(), 36);
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);
        assert!(lines.contains(&"1 1 2"));
        assert!(lines.contains(&"26 5 27"));
    }

    #[test]
    fn corrupted_tables_are_rejected() {
        let mut raw = EDGES.to_vec();
        raw.pop();
        assert!(CrystalGraph::from_edges(&raw).is_err());

        let mut raw = EDGES.to_vec();
        raw[1] = (1, 1, 3); // second 1-arrow out of vertex 1
        assert!(CrystalGraph::from_edges(&raw).is_err());

        let mut raw = EDGES.to_vec();
        raw[35] = (26, 5, 25); // cycle, 27 becomes isolated
        assert!(CrystalGraph::from_edges(&raw).is_err());
    }
}
