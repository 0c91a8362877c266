//! Orbits of `𝔣_{S_n}(H)` on `{1..n}` and the checks built on them.

use std::collections::{BTreeSet, HashSet};

use super::fg::FgPair;
use crate::error::{Error, Result};
use crate::group::{AutGroup, PowerElement};
use crate::scalar::pow;
use crate::Count;

/// `{1..n} = X_0 ⊔ X_1 ⊔ ... ⊔ X_r` under a group of permutations `θ_σ`,
/// `σ ∈ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub n: usize,
    pub p: usize,
    /// `X_0`.
    pub fixed: Vec<usize>,
    /// `X_1, ..., X_r`, each sorted; the representative `i_k` is the first entry.
    pub orbits: Vec<Vec<usize>>,
    /// For `i` outside `X_0`, the position in `H` of the first `σ_i` with
    /// `θ_{σ_i}(i_k) = i`.
    pub transporters: Vec<Option<usize>>,
    /// `p`-rank of the image of `H`.
    pub m: u32,
    /// `m_k` with `#X_k = p^(m_k)`, `None` when `#X_k` is not a power of `p`.
    pub m_k: Vec<Option<u32>>,
    /// `|Δ_k|`, the order of the image restricted to `X_k`.
    pub delta_orders: Vec<usize>,
}

impl OrbitDecomposition {
    pub fn r(&self) -> usize {
        self.orbits.len()
    }

    pub fn representative(&self, k: usize) -> usize {
        self.orbits[k][0]
    }

    pub fn orbit_of(&self, i: usize) -> Option<usize> {
        self.orbits.iter().position(|o| o.contains(&i))
    }

    /// `#X_k = p^(m_k)`, `|Δ_k| = #X_k`, `n − #X_0 = Σ p^(m_k)` and
    /// `m ≤ Σ m_k`.
    pub fn group_lemma_holds(&self) -> bool {
        let Some(m_k) = self.m_k.iter().copied().collect::<Option<Vec<u32>>>() else {
            return false;
        };
        let sizes_ok = self.orbits.iter().zip(&m_k).all(|(o, &mk)| o.len() == self.p.pow(mk));
        let deltas_ok = self.orbits.iter().zip(&self.delta_orders).all(|(o, &d)| o.len() == d);
        let sum: usize = m_k.iter().map(|&mk| self.p.pow(mk)).sum();
        sizes_ok && deltas_ok && self.n - self.fixed.len() == sum && self.m <= m_k.iter().sum()
    }
}

fn exact_log(p: usize, mut x: usize) -> Option<u32> {
    let mut k = 0;
    while x > 1 {
        if x % p != 0 {
            return None;
        }
        x /= p;
        k += 1;
    }
    (x == 1).then_some(k)
}

/// `θ_σ` for every `σ` in `h`.
pub fn h_thetas(fg: &FgPair, h: &[PowerElement]) -> Vec<Vec<usize>> {
    h.iter().map(|s| fg.theta(fg.encode(s)).to_vec()).collect()
}

/// Decomposes `{1..n}` under the permutations `thetas` (the images `θ_σ` of
/// the elements of `H`, in the same order).
pub fn orbit_decompose(n: usize, p: usize, thetas: &[Vec<usize>]) -> Result<OrbitDecomposition> {
    for theta in thetas {
        let set: BTreeSet<usize> = theta.iter().copied().collect();
        if theta.len() != n || set.len() != n || set.iter().any(|&t| t == 0 || t > n) {
            return Err(Error::NotInAut0(format!("θ = {theta:?} is not a permutation of 1..{n}")));
        }
    }
    let image: BTreeSet<&Vec<usize>> = thetas.iter().collect();
    let m = exact_log(p, image.len())
        .ok_or_else(|| Error::Precondition(format!("image of H has order {}, not a power of {p}", image.len())))?;

    let mut fixed = Vec::new();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut transporters = vec![None; n];
    let mut assigned = vec![false; n + 1];
    for i in 1..=n {
        if assigned[i] {
            continue;
        }
        let orbit: BTreeSet<usize> = thetas.iter().map(|t| t[i - 1]).chain([i]).collect();
        for &j in &orbit {
            assigned[j] = true;
        }
        if orbit.len() == 1 {
            fixed.push(i);
            continue;
        }
        for &j in &orbit {
            transporters[j - 1] = thetas.iter().position(|t| t[i - 1] == j);
        }
        orbits.push(orbit.into_iter().collect());
    }
    let m_k = orbits.iter().map(|o| exact_log(p, o.len())).collect();
    let delta_orders = orbits
        .iter()
        .map(|o| {
            let restricted: BTreeSet<Vec<usize>> =
                image.iter().map(|t| o.iter().map(|&j| t[j - 1]).collect()).collect();
            restricted.len()
        })
        .collect();
    Ok(OrbitDecomposition { n, p, fixed, orbits, transporters, m, m_k, delta_orders })
}

/// `φ_{σ,i}(a_τ^(θ_σ(i))) = (a_σ^(i))⁻¹·a_τ^(i)·φ_{τ,i}(a_σ^(i))` for all `i`.
/// Requires `στ = τσ` and `τ ∈ ker(𝔣_{S_n})`.
pub fn check_relations_lemma(fg: &FgPair, t_auts: &AutGroup, sigma: usize, tau: usize) -> Result<bool> {
    let g = fg.group();
    if g.mul(sigma, tau) != g.mul(tau, sigma) {
        return Err(Error::Precondition(format!("{sigma} and {tau} do not commute")));
    }
    if fg.theta(tau).iter().enumerate().any(|(i, &t)| t != i + 1) {
        return Err(Error::Precondition(format!("{tau} is not in ker(𝔣_Sn)")));
    }
    let t = t_auts.group();
    let fs = fg.f(sigma);
    let ft = fg.f(tau);
    Ok((1..=fg.power().n()).all(|i| {
        let phi_s = fs.phi_at(i).expect("Aut0 has no trivial factors");
        let phi_t = ft.phi_at(i).expect("Aut0 has no trivial factors");
        let lhs = t_auts.apply(phi_s, fg.a(tau, fs.theta_at(i)));
        let a_si = fg.a(sigma, i);
        let rhs = t.mul(t.mul(t.inv(a_si), fg.a(tau, i)), t_auts.apply(phi_t, a_si));
        lhs == rhs
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBoundReport {
    pub kernel_order: usize,
    /// `#𝔤(ker 𝔣_{S_n})`.
    pub image_order: usize,
    /// Every `𝔤(τ)` lies in the product set built from the chosen `σ_i`.
    pub contained: bool,
    /// `𝔣(ker 𝔣_{S_n}) ⊆ Inn(G)`.
    pub kernel_inner: bool,
    /// `|T|^(#X_0)·(|T||Inn T|)^r`.
    pub bound: Count,
    /// `|T|^(#X_0 + 2r)`.
    pub coarse_bound: Count,
    /// Only decided when `kernel_inner`.
    pub within_bound: Option<bool>,
}

/// The `𝔤(ker 𝔣_{S_n})` containment and, when `𝔣(ker) ⊆ Inn(G)`, the size
/// bound. For each `i` outside `X_0` a `σ_i ∈ H` with `θ_{σ_i}(i_k) = i` that
/// commutes with all of `ker(𝔣_{S_n})` is searched for; if none exists the
/// check is not run.
pub fn check_g_bound(
    fg: &FgPair,
    t_auts: &AutGroup,
    d: &OrbitDecomposition,
    h: &[PowerElement],
) -> Result<GBoundReport> {
    let g = fg.group();
    let t = t_auts.group();
    let kernel = fg.kernel_sn();
    let h_idx: Vec<usize> = h.iter().map(|s| fg.encode(s)).collect();

    let mut sigma_i = vec![None; d.n + 1];
    for orbit in &d.orbits {
        let ik = orbit[0];
        for &i in orbit {
            let found = h_idx.iter().copied().find(|&s| {
                fg.theta(s)[ik - 1] == i && kernel.iter().all(|&k| g.mul(s, k) == g.mul(k, s))
            });
            sigma_i[i] = Some(found.ok_or_else(|| {
                Error::Precondition(format!("no σ_{i} in H commuting with ker(𝔣_Sn)"))
            })?);
        }
    }

    let kernel_inner = kernel
        .iter()
        .all(|&k| fg.f(k).phis().iter().all(|p| p.is_some_and(|a| t_auts.is_inner(a))));
    let phis: Vec<usize> = if kernel_inner { t_auts.inner_ids() } else { (0..t_auts.len()).collect() };

    let mut allowed: Vec<HashSet<Vec<usize>>> = Vec::with_capacity(d.r());
    for orbit in &d.orbits {
        let ik = orbit[0];
        let mut set = HashSet::new();
        for a in t.elements() {
            for &phi in &phis {
                let tuple = orbit
                    .iter()
                    .map(|&i| {
                        let s = sigma_i[i].expect("set above");
                        let b = fg.a(s, ik);
                        let inner = t.mul(t.mul(t.inv(b), a), t_auts.apply(phi, b));
                        let phi_s = fg.f(s).phi_at(ik).expect("Aut0 has no trivial factors");
                        t_auts.apply(t_auts.inverse(phi_s), inner)
                    })
                    .collect::<Vec<usize>>();
                set.insert(tuple);
            }
        }
        allowed.push(set);
    }

    let contained = kernel.iter().all(|&k| {
        d.orbits.iter().zip(&allowed).all(|(orbit, set)| {
            let tuple: Vec<usize> = orbit.iter().map(|&i| fg.a(k, i)).collect();
            set.contains(&tuple)
        })
    });
    let image: HashSet<usize> = kernel.iter().map(|&k| fg.g(k)).collect();
    let order_t = t.order() as u64;
    let x0 = d.fixed.len() as u64;
    let r = d.r() as u64;
    let bound = pow(Count::from(order_t), x0) * pow(Count::from(order_t * t_auts.inner_count() as u64), r);
    let coarse_bound = pow(Count::from(order_t), x0 + 2 * r);
    let within_bound = kernel_inner.then(|| {
        let size = Count::from(image.len());
        size <= bound && bound <= coarse_bound
    });
    Ok(GBoundReport {
        kernel_order: kernel.len(),
        image_order: image.len(),
        contained,
        kernel_inner,
        bound,
        coarse_bound,
        within_bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutProp1Report {
    /// `ker(𝔣_{S_n})` equals its commutator subgroup.
    pub kernel_perfect: bool,
    /// `Out(T)` is solvable.
    pub out_solvable: bool,
    /// `𝔣(ker 𝔣_{S_n}) ⊆ Inn(G)`, checked only when both hypotheses hold.
    pub conclusion: Option<bool>,
}

pub fn check_out_prop1(fg: &FgPair, t_auts: &AutGroup) -> OutProp1Report {
    let kernel = fg.kernel_sn();
    let kernel_perfect = fg.group().is_perfect(&kernel);
    let out_solvable = t_auts.outer_is_solvable();
    let conclusion = (kernel_perfect && out_solvable).then(|| {
        kernel
            .iter()
            .all(|&k| fg.f(k).phis().iter().all(|p| p.is_some_and(|a| t_auts.is_inner(a))))
    });
    OutProp1Report { kernel_perfect, out_solvable, conclusion }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutProp2Audit {
    /// `𝔣_{S_n}(H) ≠ 1`, `|𝔣_{S_n}(G)| = |T|^m`, `𝔤` bijective and the bound holds.
    pub applicable: bool,
    /// `Σ (p^(m_k) − 2)`.
    pub lhs: i64,
    /// `Σ m_k`.
    pub rhs: i64,
    /// When applicable: `lhs ≤ rhs` and `p ≤ 3`. Always: for `p ≥ 5` and
    /// `r ≥ 1`, `lhs > rhs`.
    pub consistent: bool,
}

pub fn out_prop2_audit(fg: &FgPair, d: &OrbitDecomposition, report: &GBoundReport) -> OutProp2Audit {
    let m_k: Vec<i64> = d.m_k.iter().map(|mk| mk.map_or(-1, i64::from)).collect();
    let lhs: i64 = m_k.iter().map(|&mk| (d.p as i64).pow(mk.max(0) as u32) - 2).sum();
    let rhs: i64 = m_k.iter().sum();
    let order_t = fg.power().base().order();
    let image_matches = order_t.checked_pow(d.m).is_some_and(|v| v == fg.image_sn_order());
    let applicable = d.m > 0 && image_matches && fg.is_g_bijective() && report.within_bound == Some(true);
    let arithmetic = d.p < 5 || d.r() == 0 || lhs > rhs;
    let consistent = arithmetic && (!applicable || (lhs <= rhs && d.p <= 3));
    OutProp2Audit { applicable, lhs, rhs, consistent }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_action_fixes_everything() {
        let d = orbit_decompose(4, 2, &vec![vec![1, 2, 3, 4]; 16]).unwrap();
        assert_eq!(d.fixed, vec![1, 2, 3, 4]);
        assert_eq!(d.r(), 0);
        assert_eq!(d.m, 0);
        assert!(d.group_lemma_holds());
    }

    #[test]
    fn single_p_cycle() {
        let thetas = vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]];
        let d = orbit_decompose(3, 3, &thetas).unwrap();
        assert_eq!(d.orbits, vec![vec![1, 2, 3]]);
        assert_eq!((d.m, d.m_k.clone()), (1, vec![Some(1)]));
        assert_eq!(d.transporters, vec![Some(0), Some(1), Some(2)]);
        assert!(d.group_lemma_holds());
    }

    #[test]
    fn klein_four_on_four_points() {
        let thetas = vec![vec![1, 2, 3, 4], vec![2, 1, 4, 3], vec![3, 4, 1, 2], vec![4, 3, 2, 1]];
        let d = orbit_decompose(4, 2, &thetas).unwrap();
        assert_eq!(d.orbits.len(), 1);
        assert_eq!((d.m, d.m_k.clone(), d.delta_orders.clone()), (2, vec![Some(2)], vec![4]));
        assert!(d.group_lemma_holds());
        let two_swaps = vec![vec![1, 2, 3, 4], vec![2, 1, 3, 4], vec![1, 2, 4, 3], vec![2, 1, 4, 3]];
        let d = orbit_decompose(4, 2, &two_swaps).unwrap();
        assert_eq!(d.orbits, vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(d.m, 2);
        assert!(d.group_lemma_holds());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(matches!(orbit_decompose(2, 2, &[vec![1, 1]]), Err(Error::NotInAut0(_))));
        assert!(matches!(orbit_decompose(2, 2, &[vec![0, 1]]), Err(Error::NotInAut0(_))));
    }

    #[test]
    fn exact_logs() {
        assert_eq!(exact_log(2, 8), Some(3));
        assert_eq!(exact_log(3, 1), Some(0));
        assert_eq!(exact_log(2, 6), None);
    }
}
