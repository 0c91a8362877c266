//! Generator-image backtracking.
//!
//! A map `m` on a group `G` is determined by its values on a generating
//! sequence once a rule `m(x * g) = step(x, m(x), g, m(g))` is fixed. Images of
//! the generators are chosen one at a time; after each choice the map is
//! propagated over the subgroup generated so far and the branch is cut on the
//! first inconsistency. Homomorphisms, isomorphisms and crossed homomorphisms
//! are all instances of this.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use super::FiniteGroup;

const UNSET: usize = usize::MAX;

pub(crate) struct GeneratorSearch<'a, S> {
    group: &'a FiniteGroup,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    step: S,
    /// Reject partial maps that are not injective.
    injective: bool,
    /// Size of the codomain, needed when `injective` is set.
    codomain: usize,
}

impl<'a, S> GeneratorSearch<'a, S>
where
    S: Fn(usize, usize, usize, usize) -> usize,
{
    /// `step(x, value_at_x, generator_position, value_at_generator)` returns the
    /// value at `x * gens[generator_position]`.
    pub(crate) fn new(
        group: &'a FiniteGroup,
        gens: &'a [usize],
        candidates: &'a [Vec<usize>],
        step: S,
    ) -> Self {
        assert_eq!(gens.len(), candidates.len());
        Self { group, gens, candidates, step, injective: false, codomain: 0 }
    }

    pub(crate) fn injective(mut self, codomain: usize) -> Self {
        self.injective = true;
        self.codomain = codomain;
        self
    }

    /// Calls `visit` with every complete consistent map (indexed by element of
    /// the domain). The visitor may stop the search early.
    pub(crate) fn run<V>(&self, mut visit: V)
    where
        V: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut assigned = Vec::with_capacity(self.gens.len());
        let _ = self.descend(&mut assigned, &mut visit);
    }

    fn descend<V>(&self, assigned: &mut Vec<usize>, visit: &mut V) -> ControlFlow<()>
    where
        V: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let depth = assigned.len();
        for &c in &self.candidates[depth] {
            assigned.push(c);
            if let Some(map) = self.propagate(assigned) {
                if assigned.len() == self.gens.len() {
                    debug_assert!(map.iter().all(|&v| v != UNSET));
                    visit(&map)?;
                } else {
                    self.descend(assigned, visit)?;
                }
            }
            assigned.pop();
        }
        ControlFlow::Continue(())
    }

    /// Propagates the assignment over the subgroup generated by the assigned
    /// generators. `None` on inconsistency.
    fn propagate(&self, assigned: &[usize]) -> Option<Vec<usize>> {
        let g = self.group;
        let mut map = vec![UNSET; g.order()];
        let mut used = if self.injective { vec![false; self.codomain] } else { Vec::new() };
        map[0] = 0;
        if self.injective {
            used[0] = true;
        }
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (j, &img) in assigned.iter().enumerate() {
                let y = g.mul(x, self.gens[j]);
                let v = (self.step)(x, map[x], j, img);
                if map[y] == UNSET {
                    if self.injective {
                        if used[v] {
                            return None;
                        }
                        used[v] = true;
                    }
                    map[y] = v;
                    queue.push_back(y);
                } else if map[y] != v {
                    return None;
                }
            }
        }
        Some(map)
    }
}
