//! Directed paths in `Γ_(f,g)` and the maps `γ_p` they induce.

use std::collections::VecDeque;

use super::{Arrow, ArrowKind, DirectedPairGraph, UndirectedPairGraph};
use crate::endo::StructuredEndo;
use crate::error::{Error, Result};
use crate::group::AutGroup;

/// A directed path together with `γ_p: T^(t(p)) → T^(h(p))` as a table on `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathMap {
    pub tail: usize,
    pub head: usize,
    /// Traversal order: `path[0]` is applied first.
    pub path: Vec<Arrow>,
    pub map: Vec<usize>,
}

impl PathMap {
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.map.len()).filter(|&x| self.map[x] == x).collect()
    }
}

/// `γ_{a_i} = φ_{g,i}⁻¹ ∘ φ_{f,i}` or `γ_{b_i} = φ_{f,i}⁻¹ ∘ φ_{g,i}`, with a
/// trivial factor giving the trivial map.
pub fn gamma_of_arrow(
    f: &StructuredEndo,
    g: &StructuredEndo,
    auts: &AutGroup,
    arrow: Arrow,
) -> Result<Vec<usize>> {
    let i = arrow.edge;
    if i == 0 || i > f.n() {
        return Err(Error::NotComposable(format!("edge {i} out of range")));
    }
    let (from, to, tail, head) = match arrow.kind {
        ArrowKind::A => (f.phi_at(i), g.phi_at(i), f.theta_at(i), g.theta_at(i)),
        ArrowKind::B => (g.phi_at(i), f.phi_at(i), g.theta_at(i), f.theta_at(i)),
    };
    if (tail, head) != (arrow.tail, arrow.head) {
        return Err(Error::NotComposable(format!(
            "arrow {arrow} runs {tail}→{head}, not {}→{}",
            arrow.tail, arrow.head
        )));
    }
    let Some(to) = to else {
        return Err(Error::NotComposable(format!("arrow {arrow} is absent from the graph")));
    };
    let order = auts.group().order();
    Ok(match from {
        None => vec![0; order],
        Some(from) => {
            let id = auts.compose(auts.inverse(to), from);
            auts.get(id).images().to_vec()
        }
    })
}

/// `γ_p = γ_{c_m} ∘ ... ∘ γ_{c_1}` for the path `c_1` then ... then `c_m`
/// starting at `start`. The empty path gives the identity.
pub fn gamma_of_path(
    f: &StructuredEndo,
    g: &StructuredEndo,
    auts: &AutGroup,
    start: usize,
    path: &[Arrow],
) -> Result<PathMap> {
    let mut map: Vec<usize> = auts.group().elements().collect();
    let mut at = start;
    for &arrow in path {
        if arrow.tail != at {
            return Err(Error::NotComposable(format!(
                "arrow {arrow} starts at {} but the path is at {at}",
                arrow.tail
            )));
        }
        let step = gamma_of_arrow(f, g, auts, arrow)?;
        for v in map.iter_mut() {
            *v = step[*v];
        }
        at = arrow.head;
    }
    Ok(PathMap { tail: start, head: at, path: path.to_vec(), map })
}

/// The same path traversed backwards, each arrow swapped for its partner.
pub fn reverse_path(path: &[Arrow]) -> Vec<Arrow> {
    path.iter().rev().map(|a| a.reversed()).collect()
}

/// Shortest directed path by BFS, lowest arrow label first on ties.
pub fn find_directed_path(graph: &DirectedPairGraph, from: usize, to: usize) -> Result<Vec<Arrow>> {
    let m = graph.n() + 1;
    if from >= m || to >= m {
        return Err(Error::InvalidGraph(format!("vertex out of range 0..={}", graph.n())));
    }
    let mut via: Vec<Option<Arrow>> = vec![None; m];
    let mut seen = vec![false; m];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for a in graph.out_arrows(v) {
            if !seen[a.head] {
                seen[a.head] = true;
                via[a.head] = Some(a);
                queue.push_back(a.head);
            }
        }
    }
    if !seen[to] {
        return Err(Error::Unreachable { from, to });
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let a = via[v].expect("BFS tree reaches back to the source");
        path.push(a);
        v = a.tail;
    }
    path.reverse();
    Ok(path)
}

/// Vertices on the unique cycle of a unicyclic component, sorted.
pub(crate) fn cycle_core(graph: &UndirectedPairGraph, base: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let comp = graph.component_of(base);
    if !comp.is_unicyclic() {
        return Err(Error::NotUnicyclic { vertices: comp.vertices.len(), edges: comp.edges.len() });
    }
    let mut alive_edge: Vec<bool> = vec![false; graph.n() + 1];
    for &e in &comp.edges {
        alive_edge[e] = true;
    }
    let mut alive_vertex = vec![false; graph.vertex_count()];
    for &v in &comp.vertices {
        alive_vertex[v] = true;
    }
    // strip leaves until only the cycle remains
    loop {
        let leaf = comp.vertices.iter().copied().find(|&v| {
            alive_vertex[v]
                && comp
                    .edges
                    .iter()
                    .filter(|&&e| alive_edge[e])
                    .map(|&e| {
                        let (a, b) = graph.edge(e);
                        usize::from(a == v) + usize::from(b == v)
                    })
                    .sum::<usize>()
                    == 1
        });
        let Some(leaf) = leaf else { break };
        alive_vertex[leaf] = false;
        for &e in &comp.edges {
            let (a, b) = graph.edge(e);
            if a == leaf || b == leaf {
                alive_edge[e] = false;
            }
        }
    }
    let vertices: Vec<usize> = comp.vertices.iter().copied().filter(|&v| alive_vertex[v]).collect();
    let edges: Vec<usize> = comp.edges.iter().copied().filter(|&e| alive_edge[e]).collect();
    Ok((vertices, edges))
}

/// The two directed simple cycles `(q, q⁻¹)` based at `base`, which must lie
/// on the cycle of a unicyclic component. `q` leaves `base` along the
/// lowest-labelled arrow.
pub fn find_simple_cycle(
    graph: &UndirectedPairGraph,
    directed: &DirectedPairGraph,
    base: usize,
) -> Result<(Vec<Arrow>, Vec<Arrow>)> {
    let (core, cycle_edges) = cycle_core(graph, base)?;
    if !core.contains(&base) {
        return Err(Error::InvalidGraph(format!("vertex {base} is not on the cycle")));
    }
    let mut q = Vec::new();
    let mut at = base;
    let mut prev_edge = None;
    loop {
        let next = directed
            .out_arrows(at)
            .find(|a| cycle_edges.contains(&a.edge) && Some(a.edge) != prev_edge)
            .ok_or_else(|| {
                Error::NotComposable(format!("cycle through {base} is not directed at {at}"))
            })?;
        q.push(next);
        at = next.head;
        prev_edge = Some(next.edge);
        if at == base {
            break;
        }
        if q.len() > cycle_edges.len() {
            return Err(Error::InvalidGraph("cycle walk did not close".into()));
        }
    }
    let q_inv = reverse_path(&q);
    Ok((q, q_inv))
}
