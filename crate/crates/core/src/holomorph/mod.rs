//! The holomorph `Hol(N) = ρ(N) ⋊ Aut(N)` and its regular subgroups.
//!
//! An element is a pair `(a, φ)` acting on `N` by `x ↦ φ(x)·a⁻¹`, with product
//! `(a, φ)(b, ψ) = (a·φ(b), φψ)`. So `ρ(σ) = (σ, id)` and
//! `λ(σ) = (σ⁻¹, conj_σ)`, and `ξ(η) = η(1) = a⁻¹`.

mod fg;
mod orbits;
mod suite;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{homomorphisms, is_isomorphic, AutGroup, AutId, FiniteGroup};
use crate::{Budget, Count, Rational};

pub use fg::{crossed_homomorphisms, FgPair};
pub use suite::{check_fg_pair, s3_fourth_pairs, s3_squared_pairs, verify_s3_lemmas, LemmaTally};
pub use orbits::{
    check_g_bound, check_out_prop1, check_relations_lemma, h_thetas, orbit_decompose, out_prop2_audit,
    GBoundReport, OrbitDecomposition, OutProp1Report, OutProp2Audit,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HolElement {
    pub trans: usize,
    pub aut: AutId,
}

impl fmt::Display for HolElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.trans, self.aut)
    }
}

/// A subset of `Hol(N)` kept sorted and deduplicated; this is also its key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HolSubgroup(Vec<HolElement>);

impl HolSubgroup {
    pub fn from_elements(elements: impl IntoIterator<Item = HolElement>) -> Self {
        let set: BTreeSet<HolElement> = elements.into_iter().collect();
        Self(set.into_iter().collect())
    }

    pub fn elements(&self) -> &[HolElement] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, x: &HolElement) -> bool {
        self.0.binary_search(x).is_ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InnOut {
    Inn,
    Out,
}

impl fmt::Display for InnOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InnOut::Inn => "inn",
            InnOut::Out => "out",
        })
    }
}

/// Results of the two regularity tests on a subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub xi_bijective: bool,
    pub transitive: bool,
    pub free: bool,
}

impl Regularity {
    pub fn by_action(&self) -> bool {
        self.transitive && self.free
    }

    pub fn agree(&self) -> bool {
        self.xi_bijective == self.by_action()
    }
}

#[derive(Clone, Debug)]
pub struct Holomorph {
    auts: AutGroup,
}

impl Holomorph {
    pub fn new(n: &FiniteGroup) -> Self {
        Self { auts: AutGroup::new(n) }
    }

    pub fn from_auts(auts: AutGroup) -> Self {
        Self { auts }
    }

    /// The underlying group `N`.
    pub fn base(&self) -> &FiniteGroup {
        self.auts.group()
    }

    pub fn auts(&self) -> &AutGroup {
        &self.auts
    }

    pub fn order(&self) -> usize {
        self.base().order() * self.auts.len()
    }

    pub fn identity(&self) -> HolElement {
        HolElement { trans: 0, aut: self.auts.identity_id() }
    }

    pub fn compose(&self, x: HolElement, y: HolElement) -> HolElement {
        let n = self.base();
        HolElement {
            trans: n.mul(x.trans, self.auts.apply(x.aut, y.trans)),
            aut: self.auts.compose(x.aut, y.aut),
        }
    }

    pub fn inverse(&self, x: HolElement) -> HolElement {
        let inv = self.auts.inverse(x.aut);
        HolElement { trans: self.auts.apply(inv, self.base().inv(x.trans)), aut: inv }
    }

    /// `x ↦ φ(x)·a⁻¹`.
    pub fn act(&self, h: HolElement, x: usize) -> usize {
        let n = self.base();
        n.mul(self.auts.apply(h.aut, x), n.inv(h.trans))
    }

    /// `ξ(η) = η(1)`.
    pub fn xi(&self, h: HolElement) -> usize {
        self.base().inv(h.trans)
    }

    pub fn rho(&self, sigma: usize) -> HolElement {
        HolElement { trans: sigma, aut: self.auts.identity_id() }
    }

    pub fn lambda(&self, sigma: usize) -> HolElement {
        HolElement { trans: self.base().inv(sigma), aut: self.auts.conjugation_id(sigma) }
    }

    pub fn rho_image(&self) -> HolSubgroup {
        HolSubgroup::from_elements(self.base().elements().map(|s| self.rho(s)))
    }

    pub fn lambda_image(&self) -> HolSubgroup {
        HolSubgroup::from_elements(self.base().elements().map(|s| self.lambda(s)))
    }

    /// `{1} × Aut(N)`.
    pub fn aut_image(&self) -> HolSubgroup {
        HolSubgroup::from_elements((0..self.auts.len()).map(|aut| HolElement { trans: 0, aut }))
    }

    pub fn elements(&self) -> impl Iterator<Item = HolElement> + '_ {
        let k = self.auts.len();
        (0..self.base().order()).flat_map(move |trans| (0..k).map(move |aut| HolElement { trans, aut }))
    }

    /// Dense index of an element, `trans · |Aut(N)| + aut`.
    pub fn index(&self, h: HolElement) -> usize {
        h.trans * self.auts.len() + h.aut
    }

    pub fn generated(&self, gens: &[HolElement]) -> HolSubgroup {
        let mut seen: HashSet<HolElement> = HashSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.compose(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        HolSubgroup::from_elements(seen)
    }

    pub fn is_subgroup(&self, s: &HolSubgroup) -> bool {
        s.contains(&self.identity())
            && s.elements().iter().all(|&x| {
                s.contains(&self.inverse(x)) && s.elements().iter().all(|&y| s.contains(&self.compose(x, y)))
            })
    }

    /// Both regularity tests: `ξ` bijective on `S`, and the action of `S` on
    /// `N` transitive with trivial stabilisers.
    pub fn regularity(&self, s: &HolSubgroup) -> Result<Regularity> {
        if !self.is_subgroup(s) {
            return Err(Error::NotSubgroup(format!("{} elements, not closed", s.order())));
        }
        let order = self.base().order();
        let xi_values: BTreeSet<usize> = s.elements().iter().map(|&h| self.xi(h)).collect();
        let xi_bijective = s.order() == order && xi_values.len() == order;

        let orbit: BTreeSet<usize> = s.elements().iter().map(|&h| self.act(h, 0)).collect();
        let transitive = orbit.len() == order;
        let free = self
            .base()
            .elements()
            .all(|x| s.elements().iter().filter(|&&h| self.act(h, x) == x).count() == 1);
        Ok(Regularity { xi_bijective, transitive, free })
    }

    pub fn is_regular(&self, s: &HolSubgroup) -> Result<bool> {
        let r = self.regularity(s)?;
        assert!(r.agree(), "regularity tests disagree: {r:?}");
        Ok(r.xi_bijective)
    }

    /// `inn` when every automorphism part is inner.
    pub fn classify(&self, s: &HolSubgroup) -> InnOut {
        if s.elements().iter().all(|h| self.auts.is_inner(h.aut)) {
            InnOut::Inn
        } else {
            InnOut::Out
        }
    }

    /// The subgroup as a table group, elements in sorted order.
    pub fn subgroup_as_group(&self, s: &HolSubgroup) -> Result<FiniteGroup> {
        let elems = s.elements();
        let k = elems.len();
        let mut mul = Vec::with_capacity(k * k);
        for &x in elems {
            for &y in elems {
                let z = self.compose(x, y);
                let idx = elems
                    .binary_search(&z)
                    .map_err(|_| Error::NotSubgroup(format!("{x}·{y} = {z} escapes")))?;
                mul.push(idx);
            }
        }
        FiniteGroup::from_flat("subgroup", k, mul)
    }

    /// `{(𝔤(σ), 𝔣(σ)) : σ ∈ G}` for a homomorphism `𝔣: G → Aut(N)` (as ids)
    /// and a crossed homomorphism `𝔤: G → N`.
    pub fn subgroup_from_fg(&self, domain: &FiniteGroup, f_map: &[AutId], g_map: &[usize]) -> Result<HolSubgroup> {
        fg::validate(domain, &self.auts, f_map, g_map)?;
        Ok(HolSubgroup::from_elements(
            f_map.iter().zip(g_map).map(|(&aut, &trans)| HolElement { trans, aut }),
        ))
    }

    /// `{x ↦ f(σ)·x·g(σ)⁻¹ : σ ∈ N}` for endomorphisms `f, g` of `N` given as
    /// image tables, which is `(g(σ)f(σ)⁻¹, conj_{f(σ)})`. The pair must be
    /// fixed point free.
    pub fn fpf_pair_to_subgroup(&self, f: &[usize], g: &[usize]) -> Result<HolSubgroup> {
        let n = self.base();
        if let Some(s) = n.elements().skip(1).find(|&s| f[s] == g[s]) {
            return Err(Error::NotFpf(format!("f({s}) = g({s})")));
        }
        let elems: Vec<HolElement> = n
            .elements()
            .map(|s| HolElement {
                trans: n.mul(g[s], n.inv(f[s])),
                aut: self.auts.conjugation_id(f[s]),
            })
            .collect();
        let s = HolSubgroup::from_elements(elems);
        if s.order() != n.order() {
            return Err(Error::NotFpf(format!("image has {} elements, expected {}", s.order(), n.order())));
        }
        Ok(s)
    }
}

/// A regular subgroup found by [`enumerate_regular_subgroups`], with one
/// `(𝔣, 𝔤)` presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSubgroup {
    pub subgroup: HolSubgroup,
    pub class: InnOut,
    pub f_map: Vec<AutId>,
    pub g_map: Vec<usize>,
}

/// Regular subgroups of `Hol(N)` isomorphic to `g`: for each homomorphism
/// `𝔣: G → Aut(N)`, every bijective crossed homomorphism `𝔤` gives one.
/// Sorted by subgroup.
pub fn enumerate_regular_subgroups(hol: &Holomorph, g: &FiniteGroup, budget: &Budget) -> Result<Vec<RegularSubgroup>> {
    let order = hol.order() as u128;
    if order > budget.max_holomorph {
        return Err(Error::BudgetExceeded { what: "holomorph order", needed: order, budget: budget.max_holomorph });
    }
    if g.order() != hol.base().order() {
        return Ok(Vec::new());
    }
    let aut_group = hol.auts().as_group();
    let fs = homomorphisms(g, &aut_group);
    let found: Vec<RegularSubgroup> = fs
        .par_iter()
        .flat_map_iter(|f_map| {
            crossed_homomorphisms(g, hol.auts(), f_map, true).into_iter().map(move |g_map| {
                let subgroup = HolSubgroup::from_elements(
                    f_map.iter().zip(&g_map).map(|(&aut, &trans)| HolElement { trans, aut }),
                );
                (subgroup, f_map.clone(), g_map)
            })
        })
        .map(|(subgroup, f_map, g_map)| {
            let class = hol.classify(&subgroup);
            RegularSubgroup { subgroup, class, f_map, g_map }
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut out: Vec<RegularSubgroup> = Vec::new();
    for r in found {
        if seen.insert(r.subgroup.clone()) {
            out.push(r);
        }
    }
    out.sort_by(|a, b| a.subgroup.cmp(&b.subgroup));
    for r in &out {
        debug_assert!(hol.is_regular(&r.subgroup).unwrap_or(false));
        debug_assert!(is_isomorphic(&hol.subgroup_as_group(&r.subgroup)?, g));
    }
    Ok(out)
}

/// `|Aut(G)|/|Aut(N)| · count`, which must be an integer.
pub fn translate_regular_count(count: &Count, aut_g_order: &Count, aut_n_order: &Count) -> Result<Count> {
    if aut_n_order.is_zero() {
        return Err(Error::NonIntegral("|Aut(N)| is zero".into()));
    }
    let value = Rational::new(BigInt::from(aut_g_order.clone()), BigInt::from(aut_n_order.clone()))
        * Rational::from_integer(BigInt::from(count.clone()));
    if !value.denom().is_one() {
        return Err(Error::NonIntegral(format!("{value}")));
    }
    value
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::NonIntegral(format!("{value} is negative")))
}

/// Convenience for small arguments.
pub fn translate_regular_count_u64(count: u64, aut_g_order: u64, aut_n_order: u64) -> Result<u64> {
    let c = translate_regular_count(&Count::from(count), &Count::from(aut_g_order), &Count::from(aut_n_order))?;
    c.to_u64().ok_or_else(|| Error::NonIntegral("overflow".into()))
}
