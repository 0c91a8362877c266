//! Fixed-point-freeness of pairs `(f, g)` of structured endomorphisms.
//!
//! `(f, g)` is fixed point free when `f(σ) = g(σ)` only for `σ = 1`. The
//! brute-force oracle scans `T^n`; the tree criterion reads the answer off
//! `Γ_{{f,g}}` and, when the graph is not a tree, builds an explicit fixed
//! point from a non-0 component.

use std::collections::VecDeque;
use std::fmt;

use crate::endo::StructuredEndo;
use crate::error::{Error, Result};
use crate::graph::{
    find_simple_cycle, gamma_of_arrow, gamma_of_path, Arrow, Component, DirectedPairGraph,
    UndirectedPairGraph,
};
use crate::group::{AutGroup, PowerElement};
use crate::Budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FpfMethod {
    Bruteforce,
    TreeCriterion,
}

impl fmt::Display for FpfMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FpfMethod::Bruteforce => "bruteforce",
            FpfMethod::TreeCriterion => "tree-criterion",
        })
    }
}

/// A witness, when present, is a non-identity `σ` with `f(σ) = g(σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpfVerdict {
    pub is_fpf: bool,
    pub method: FpfMethod,
    pub witness: Option<PowerElement>,
}

/// `f(σ) = g(σ)`.
pub fn is_fixed_point(f: &StructuredEndo, g: &StructuredEndo, auts: &AutGroup, sigma: &PowerElement) -> bool {
    (1..=f.n()).all(|i| f.component(auts, sigma, i) == g.component(auts, sigma, i))
}

/// Scans every `σ ≠ 1` in `T^n` and returns the first fixed point found.
pub fn is_fpf_bruteforce(
    f: &StructuredEndo,
    g: &StructuredEndo,
    auts: &AutGroup,
    budget: &Budget,
) -> Result<FpfVerdict> {
    let n = f.n();
    let t = auts.group().order();
    let size = (t as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > budget.max_elements {
        return Err(Error::BudgetExceeded {
            what: "brute-force fixed point scan",
            needed: size,
            budget: budget.max_elements,
        });
    }
    let mut sigma = PowerElement(vec![0; n]);
    // odometer over T^n, coordinate 1 fastest
    loop {
        let mut k = 0;
        while k < n {
            sigma.0[k] += 1;
            if sigma.0[k] < t {
                break;
            }
            sigma.0[k] = 0;
            k += 1;
        }
        if k == n {
            return Ok(FpfVerdict { is_fpf: true, method: FpfMethod::Bruteforce, witness: None });
        }
        if is_fixed_point(f, g, auts, &sigma) {
            return Ok(FpfVerdict {
                is_fpf: false,
                method: FpfMethod::Bruteforce,
                witness: Some(sigma),
            });
        }
    }
}

/// Tree criterion: fpf exactly when `Γ_{{f,g}}` is a tree. Only valid when `T`
/// has no fixed point free automorphism, and refused otherwise.
pub fn is_fpf_by_tree(f: &StructuredEndo, g: &StructuredEndo, auts: &AutGroup) -> Result<FpfVerdict> {
    if auts.has_fpf_automorphism() {
        return Err(Error::HasFpfAutomorphism);
    }
    let graph = UndirectedPairGraph::from_endos(f, g);
    if graph.is_tree() {
        return Ok(FpfVerdict { is_fpf: true, method: FpfMethod::TreeCriterion, witness: None });
    }
    let witness = construct_witness(f, g, auts)?;
    Ok(FpfVerdict { is_fpf: false, method: FpfMethod::TreeCriterion, witness: Some(witness) })
}

/// A non-identity fixed point of `(f, g)` built from a non-0 component of
/// `Γ_{{f,g}}` that is a tree (seeded at its lowest vertex) or unicyclic
/// (seeded at the lowest cycle vertex with a fixed point of `γ_𝔮`).
/// Coordinates outside that component are 1.
pub fn construct_witness(f: &StructuredEndo, g: &StructuredEndo, auts: &AutGroup) -> Result<PowerElement> {
    let graph = UndirectedPairGraph::from_endos(f, g);
    let directed = DirectedPairGraph::build(f, g);
    let comps: Vec<Component> = graph.components().into_iter().filter(|c| !c.contains(0)).collect();

    let trees = comps.iter().filter(|c| c.is_tree());
    let cycles = comps.iter().filter(|c| c.is_unicyclic());
    for comp in trees.chain(cycles) {
        let seeded = if comp.is_tree() {
            Some((comp.vertices[0], 1))
        } else {
            let (q, _) = find_simple_cycle(&graph, &directed, cycle_base(&graph, comp)?)?;
            let base = q[0].tail;
            let gamma = gamma_of_path(f, g, auts, base, &q)?;
            gamma.fixed_points().into_iter().find(|&x| x != 0).map(|x| (base, x))
        };
        let Some((base, seed)) = seeded else { continue };
        let sigma = propagate(f, g, auts, &directed, comp, base, seed)?;
        debug_assert!(!sigma.is_identity());
        if !is_fixed_point(f, g, auts, &sigma) {
            return Err(Error::InvalidGraph(format!("propagated element {sigma} is not a fixed point")));
        }
        return Ok(sigma);
    }
    Err(Error::NoUsableComponent)
}

fn cycle_base(graph: &UndirectedPairGraph, comp: &Component) -> Result<usize> {
    let (core, _) = crate::graph::cycle_core(graph, comp.vertices[0])?;
    Ok(core[0])
}

/// Sets `σ^(v) = γ_{𝔭_v}(seed)` along BFS paths from `base`.
fn propagate(
    f: &StructuredEndo,
    g: &StructuredEndo,
    auts: &AutGroup,
    directed: &DirectedPairGraph,
    comp: &Component,
    base: usize,
    seed: usize,
) -> Result<PowerElement> {
    let mut coords = vec![0usize; f.n()];
    let mut seen = vec![false; f.n() + 1];
    coords[base - 1] = seed;
    seen[base] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        for a in directed.out_arrows(v) {
            if !seen[a.head] && comp.contains(a.head) {
                let gamma = gamma_of_arrow(f, g, auts, a)?;
                coords[a.head - 1] = gamma[coords[v - 1]];
                seen[a.head] = true;
                queue.push_back(a.head);
            }
        }
    }
    Ok(PowerElement(coords))
}

/// Checks `σ^(h(𝔭)) = γ_𝔭(σ^(t(𝔭)))`, with `σ^(0) = 1`, over a set of directed
/// paths that decides the condition for all of them: in every component,
/// BFS-tree paths from the root (0, else the lowest vertex), and for each
/// remaining arrow, the tree path to its tail followed by that arrow.
pub fn check_path_conditions(
    f: &StructuredEndo,
    g: &StructuredEndo,
    auts: &AutGroup,
    sigma: &PowerElement,
) -> Result<bool> {
    let graph = UndirectedPairGraph::from_endos(f, g);
    let directed = DirectedPairGraph::build(f, g);
    let coord = |v: usize| sigma.component(v);
    for comp in graph.components() {
        let root = comp.vertices[0];
        let mut tree_path: Vec<Option<Vec<Arrow>>> = vec![None; graph.vertex_count()];
        tree_path[root] = Some(Vec::new());
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let here = tree_path[v].clone().expect("queued vertices have paths");
            for a in directed.out_arrows(v) {
                let mut path = here.clone();
                path.push(a);
                let map = gamma_of_path(f, g, auts, root, &path)?;
                if map.apply(coord(root)) != coord(a.head) {
                    return Ok(false);
                }
                if tree_path[a.head].is_none() {
                    tree_path[a.head] = Some(path);
                    queue.push_back(a.head);
                }
            }
        }
        if let Some(&v) = comp.vertices.iter().find(|&&v| tree_path[v].is_none()) {
            return Err(Error::Unreachable { from: root, to: v });
        }
    }
    Ok(true)
}
