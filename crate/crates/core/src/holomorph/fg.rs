//! `(𝔣, 𝔤)` data: a homomorphism `𝔣: G → Aut(N)` and a crossed homomorphism
//! `𝔤: G → N` with `𝔤(στ) = 𝔤(σ)·𝔣(σ)(𝔤(τ))`.

use std::ops::ControlFlow;

use crate::endo::StructuredEndo;
use crate::error::{Error, Result};
use crate::group::search::GeneratorSearch;
use crate::group::{AutGroup, AutId, DirectPower, FiniteGroup, PowerElement};

pub(crate) fn validate(domain: &FiniteGroup, auts: &AutGroup, f_map: &[AutId], g_map: &[usize]) -> Result<()> {
    let n = auts.group();
    if f_map.len() != domain.order() || g_map.len() != domain.order() {
        return Err(Error::InvalidFgPair("maps must be indexed by the domain".into()));
    }
    if f_map.iter().any(|&a| a >= auts.len()) || g_map.iter().any(|&x| x >= n.order()) {
        return Err(Error::InvalidFgPair("value out of range".into()));
    }
    if g_map[0] != 0 {
        return Err(Error::InvalidFgPair("𝔤(1) ≠ 1".into()));
    }
    for s in domain.elements() {
        for t in domain.elements() {
            let st = domain.mul(s, t);
            if f_map[st] != auts.compose(f_map[s], f_map[t]) {
                return Err(Error::InvalidFgPair(format!("𝔣 is not a homomorphism at ({s}, {t})")));
            }
            if g_map[st] != n.mul(g_map[s], auts.apply(f_map[s], g_map[t])) {
                return Err(Error::InvalidFgPair(format!("crossed law fails at ({s}, {t})")));
            }
        }
    }
    Ok(())
}

/// Every crossed homomorphism `G → N` for the given `𝔣`, optionally only the
/// bijective ones, found by extending generator images.
pub fn crossed_homomorphisms(domain: &FiniteGroup, auts: &AutGroup, f_map: &[AutId], bijective_only: bool) -> Vec<Vec<usize>> {
    let n = auts.group();
    let gens = domain.minimal_generators();
    let candidates: Vec<Vec<usize>> = gens.iter().map(|_| n.elements().collect()).collect();
    let step = |x: usize, vx: usize, _j: usize, vg: usize| n.mul(vx, auts.apply(f_map[x], vg));
    let search = GeneratorSearch::new(domain, &gens, &candidates, step);
    let search = if bijective_only { search.injective(n.order()) } else { search };
    let mut found = Vec::new();
    search.run(|map| {
        found.push(map.to_vec());
        ControlFlow::Continue(())
    });
    found.sort();
    found
}

/// `(𝔣, 𝔤)` over `G = T^n` with `𝔣` landing in `Aut⁰(G)`, so that
/// `𝔣(σ) = (θ_σ, φ_{σ,i})` and `𝔤(σ) = (a_σ^(1), ..., a_σ^(n))`.
/// Both maps are indexed by the flat index of `σ`.
#[derive(Clone, Debug)]
pub struct FgPair {
    power: DirectPower,
    group: FiniteGroup,
    f: Vec<StructuredEndo>,
    g: Vec<usize>,
}

impl FgPair {
    pub fn new(power: &DirectPower, t_auts: &AutGroup, f: Vec<StructuredEndo>, g: Vec<usize>) -> Result<Self> {
        let group = power.to_group()?;
        let order = group.order();
        if f.len() != order || g.len() != order {
            return Err(Error::InvalidFgPair("maps must be indexed by G".into()));
        }
        if let Some(e) = f.iter().find(|e| !e.is_automorphism()) {
            return Err(Error::NotInAut0(format!("θ = {:?} is not a permutation", e.theta())));
        }
        if g[0] != 0 {
            return Err(Error::InvalidFgPair("𝔤(1) ≠ 1".into()));
        }
        for s in group.elements() {
            let gs = power.decode(g[s]);
            for t in group.elements() {
                let st = group.mul(s, t);
                if f[st] != f[s].compose(&f[t], t_auts) {
                    return Err(Error::InvalidFgPair(format!("𝔣 is not a homomorphism at ({s}, {t})")));
                }
                let rhs = power.mul(&gs, &f[s].apply(t_auts, &power.decode(g[t])));
                if power.encode(&rhs) != g[st] {
                    return Err(Error::InvalidFgPair(format!("crossed law fails at ({s}, {t})")));
                }
            }
        }
        Ok(Self { power: power.clone(), group, f, g })
    }

    /// From holomorph ids, where `g_auts` is `Aut(G)` for `G = power.to_group()`.
    pub fn from_hol(
        power: &DirectPower,
        t_auts: &AutGroup,
        g_auts: &AutGroup,
        f_map: &[AutId],
        g_map: &[usize],
    ) -> Result<Self> {
        let f = f_map
            .iter()
            .map(|&a| StructuredEndo::from_table(power, t_auts, g_auts.get(a).images()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(power, t_auts, f, g_map.to_vec())
    }

    pub fn power(&self) -> &DirectPower {
        &self.power
    }

    /// `G` as a table group, indexed by flat index.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn f(&self, sigma: usize) -> &StructuredEndo {
        &self.f[sigma]
    }

    pub fn g(&self, sigma: usize) -> usize {
        self.g[sigma]
    }

    /// `a_σ^(i)`, 1-based `i`.
    pub fn a(&self, sigma: usize, i: usize) -> usize {
        self.power.decode(self.g[sigma]).component(i)
    }

    /// `θ_σ = 𝔣_{S_n}(σ)`.
    pub fn theta(&self, sigma: usize) -> &[usize] {
        self.f[sigma].theta()
    }

    pub fn is_g_bijective(&self) -> bool {
        let mut seen = vec![false; self.g.len()];
        self.g.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    /// `ker(𝔣_{S_n})`, sorted flat indices.
    pub fn kernel_sn(&self) -> Vec<usize> {
        self.group.elements().filter(|&s| self.theta(s).iter().enumerate().all(|(i, &t)| t == i + 1)).collect()
    }

    /// `|𝔣_{S_n}(G)|`.
    pub fn image_sn_order(&self) -> usize {
        let set: std::collections::BTreeSet<&[usize]> = self.group.elements().map(|s| self.theta(s)).collect();
        set.len()
    }

    pub fn encode(&self, x: &PowerElement) -> usize {
        self.power.encode(x)
    }
}
