//! Pair-graphs of two structured endomorphisms.
//!
//! For `n`-tuples `μ`, `ν` over `{0..n}` the undirected multigraph has vertex
//! set `{0..n}` and one edge `e_i = {μ_i, ν_i}` per coordinate. For a pair
//! `(f, g)` the tuples are `θ_f`, `θ_g`, and the directed refinement carries an
//! arrow `a_i: θ_f(i) → θ_g(i)` when `φ_{g,i}` is bijective and an arrow
//! `b_i: θ_g(i) → θ_f(i)` when `φ_{f,i}` is bijective.

mod path;
pub mod trees;

use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::endo::StructuredEndo;
use crate::error::{Error, Result};

pub(crate) use path::cycle_core;
pub use path::{
    find_directed_path, find_simple_cycle, gamma_of_arrow, gamma_of_path, reverse_path, PathMap,
};

/// Undirected multigraph on `{0..n}` with exactly `n` labelled edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedPairGraph {
    n: usize,
    /// `edges[i]` is edge `e_{i+1}`, stored as `(μ_i, ν_i)`.
    edges: Vec<(usize, usize)>,
}

/// A connected component: sorted vertices and the labels (1-based) of its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Component {
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertices.len()
    }

    /// Exactly one simple cycle (loops and double edges count as cycles).
    pub fn is_unicyclic(&self) -> bool {
        self.edges.len() == self.vertices.len()
    }
}

impl UndirectedPairGraph {
    pub fn build(mu: &[usize], nu: &[usize]) -> Result<Self> {
        let n = mu.len();
        if nu.len() != n {
            return Err(Error::InvalidGraph(format!(
                "tuples have different lengths {n} and {}",
                nu.len()
            )));
        }
        if let Some(&bad) = mu.iter().chain(nu).find(|&&v| v > n) {
            return Err(Error::InvalidGraph(format!("entry {bad} outside 0..={n}")));
        }
        Ok(Self { n, edges: mu.iter().copied().zip(nu.iter().copied()).collect() })
    }

    /// `Γ_{f,g}`, built from `θ_f` and `θ_g`.
    pub fn from_endos(f: &StructuredEndo, g: &StructuredEndo) -> Self {
        assert_eq!(f.n(), g.n());
        Self { n: f.n(), edges: f.theta().iter().copied().zip(g.theta().iter().copied()).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e_i` (1-based).
    pub fn edge(&self, label: usize) -> (usize, usize) {
        self.edges[label - 1]
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| usize::from(a == v) + usize::from(b == v)).sum()
    }

    /// Connected components, ordered by lowest vertex.
    pub fn components(&self) -> Vec<Component> {
        let m = self.vertex_count();
        let mut uf = UnionFind::<usize>::new(m);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        let labels = uf.into_labeling();
        let mut comps: Vec<Component> = Vec::new();
        let mut slot = vec![usize::MAX; m];
        for v in 0..m {
            let root = labels[v];
            if slot[root] == usize::MAX {
                slot[root] = comps.len();
                comps.push(Component { vertices: Vec::new(), edges: Vec::new() });
            }
            comps[slot[root]].vertices.push(v);
        }
        for (i, &(a, _)) in self.edges.iter().enumerate() {
            comps[slot[labels[a]]].edges.push(i + 1);
        }
        comps
    }

    /// The component containing `v`.
    pub fn component_of(&self, v: usize) -> Component {
        self.components().into_iter().find(|c| c.contains(v)).expect("every vertex has a component")
    }

    /// A graph on `n+1` vertices with `n` edges is a tree iff it is connected.
    pub fn is_tree(&self) -> bool {
        let comps = self.components();
        let connected = comps.len() == 1;
        debug_assert_eq!(connected, comps.iter().all(Component::is_tree));
        connected
    }

    /// Edge multiset with each edge normalised to `(min, max)`, sorted. Two
    /// graphs are equal as unlabelled multigraphs iff these agree.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> =
            self.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        v.sort_unstable();
        v
    }

    /// One line per edge: `e<i>\t<u>\t<v>`.
    pub fn dump(&self) -> String {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| format!("e{}\t{u}\t{v}\n", i + 1))
            .collect()
    }
}

/// `#{i : μ_i = 0} + #{i : ν_i = 0}`.
pub fn degree_of_vertex0(mu: &[usize], nu: &[usize]) -> usize {
    mu.iter().filter(|&&u| u == 0).count() + nu.iter().filter(|&&v| v == 0).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    /// `a_i: θ_f(i) → θ_g(i)`, map `φ_{g,i}⁻¹ ∘ φ_{f,i}`.
    A,
    /// `b_i: θ_g(i) → θ_f(i)`, map `φ_{f,i}⁻¹ ∘ φ_{g,i}`.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    /// 1-based edge label.
    pub edge: usize,
    pub kind: ArrowKind,
    pub tail: usize,
    pub head: usize,
}

impl Arrow {
    /// The arrow on the same edge going the other way.
    pub fn reversed(self) -> Self {
        let kind = match self.kind {
            ArrowKind::A => ArrowKind::B,
            ArrowKind::B => ArrowKind::A,
        };
        Self { edge: self.edge, kind, tail: self.head, head: self.tail }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            ArrowKind::A => 'a',
            ArrowKind::B => 'b',
        };
        write!(f, "{k}{}", self.edge)
    }
}

/// Renders a path in right-to-left concatenation order, e.g. `a2b3a1` for
/// `a1` followed by `b3` followed by `a2`.
pub fn path_label(path: &[Arrow]) -> String {
    path.iter().rev().map(Arrow::to_string).collect()
}

/// Directed multigraph `Γ_(f,g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedPairGraph {
    n: usize,
    /// Sorted by `(edge, kind)`.
    arrows: Vec<Arrow>,
}

impl DirectedPairGraph {
    /// Arrows from bijectivity of the `φ`s.
    pub fn build(f: &StructuredEndo, g: &StructuredEndo) -> Self {
        assert_eq!(f.n(), g.n());
        let mut arrows = Vec::new();
        for i in 1..=f.n() {
            let (tf, tg) = (f.theta_at(i), g.theta_at(i));
            if g.phi_at(i).is_some() {
                arrows.push(Arrow { edge: i, kind: ArrowKind::A, tail: tf, head: tg });
            }
            if f.phi_at(i).is_some() {
                arrows.push(Arrow { edge: i, kind: ArrowKind::B, tail: tg, head: tf });
            }
        }
        Self { n: f.n(), arrows }
    }

    /// Rewrites the undirected graph: drop loops at 0, turn `0 - i` into
    /// `0 → i`, and `i - j` (both non-zero) into `i ↔ j`.
    pub fn from_undirected(graph: &UndirectedPairGraph) -> Self {
        let mut arrows = Vec::new();
        for (idx, &(u, v)) in graph.edges().iter().enumerate() {
            let edge = idx + 1;
            if v != 0 {
                arrows.push(Arrow { edge, kind: ArrowKind::A, tail: u, head: v });
            }
            if u != 0 {
                arrows.push(Arrow { edge, kind: ArrowKind::B, tail: v, head: u });
            }
        }
        Self { n: graph.n(), arrows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, kind: ArrowKind, edge: usize) -> Option<Arrow> {
        self.arrows.iter().copied().find(|a| a.kind == kind && a.edge == edge)
    }

    /// Arrows leaving `v`, lowest label first.
    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows.iter().copied().filter(move |a| a.tail == v)
    }

    /// Parses a right-to-left label such as `a2b3a1` into traversal order.
    pub fn path_from_labels(&self, label: &str) -> Result<Vec<Arrow>> {
        let mut tokens = Vec::new();
        let chars: Vec<char> = label.chars().filter(|c| !c.is_whitespace()).collect();
        let mut i = 0;
        while i < chars.len() {
            let kind = match chars[i] {
                'a' => ArrowKind::A,
                'b' => ArrowKind::B,
                c => return Err(Error::NotComposable(format!("bad arrow letter `{c}`"))),
            };
            let start = i + 1;
            let mut end = start;
            while end < chars.len() && chars[end].is_ascii_digit() {
                end += 1;
            }
            let edge: usize = chars[start..end]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::NotComposable(format!("missing edge number in `{label}`")))?;
            let arrow = self
                .arrow(kind, edge)
                .ok_or_else(|| Error::NotComposable(format!("no arrow {kind:?}{edge} in graph")))?;
            tokens.push(arrow);
            i = end;
        }
        tokens.reverse();
        Ok(tokens)
    }

    /// One line per arrow: `a<i>|b<i>\t<tail>\t<head>`.
    pub fn dump(&self) -> String {
        self.arrows.iter().map(|a| format!("{a}\t{}\t{}\n", a.tail, a.head)).collect()
    }
}
