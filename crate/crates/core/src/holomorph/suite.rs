//! Lemma checks over constructed `(𝔣, 𝔤)` data for `T = S3`.

use rayon::prelude::*;

use super::fg::{crossed_homomorphisms, FgPair};
use super::orbits::{check_g_bound, check_out_prop1, check_relations_lemma, h_thetas, orbit_decompose, out_prop2_audit};
use crate::endo::StructuredEndo;
use crate::error::{Error, Result};
use crate::group::{catalog, choose_prime_subgroups_nth, homomorphisms, AutGroup, DirectPower, PowerElement};

/// Tallies; every `*_failed` field must be zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaTally {
    pub fg_pairs: usize,
    pub relations_checked: usize,
    pub relations_failed: usize,
    pub decompositions: usize,
    pub group_lemma_failed: usize,
    pub g_bound_checked: usize,
    pub g_bound_failed: usize,
    /// No commuting `σ_i` found, so the bound was not evaluated.
    pub g_bound_skipped: usize,
    pub out_prop1_checked: usize,
    pub out_prop1_failed: usize,
    pub out_prop2_applicable: usize,
    pub out_prop2_inconsistent: usize,
}

impl LemmaTally {
    pub fn passed(&self) -> bool {
        self.relations_failed == 0
            && self.group_lemma_failed == 0
            && self.g_bound_failed == 0
            && self.out_prop1_failed == 0
            && self.out_prop2_inconsistent == 0
    }

    fn merge(mut self, o: Self) -> Self {
        self.fg_pairs += o.fg_pairs;
        self.relations_checked += o.relations_checked;
        self.relations_failed += o.relations_failed;
        self.decompositions += o.decompositions;
        self.group_lemma_failed += o.group_lemma_failed;
        self.g_bound_checked += o.g_bound_checked;
        self.g_bound_failed += o.g_bound_failed;
        self.g_bound_skipped += o.g_bound_skipped;
        self.out_prop1_checked += o.out_prop1_checked;
        self.out_prop1_failed += o.out_prop1_failed;
        self.out_prop2_applicable += o.out_prop2_applicable;
        self.out_prop2_inconsistent += o.out_prop2_inconsistent;
        self
    }

    pub fn rows(&self) -> Vec<(&'static str, usize)> {
        vec![
            ("fg_pairs", self.fg_pairs),
            ("relations_checked", self.relations_checked),
            ("relations_failed", self.relations_failed),
            ("decompositions", self.decompositions),
            ("group_lemma_failed", self.group_lemma_failed),
            ("g_bound_checked", self.g_bound_checked),
            ("g_bound_failed", self.g_bound_failed),
            ("g_bound_skipped", self.g_bound_skipped),
            ("out_prop1_checked", self.out_prop1_checked),
            ("out_prop1_failed", self.out_prop1_failed),
            ("out_prop2_applicable", self.out_prop2_applicable),
            ("out_prop2_inconsistent", self.out_prop2_inconsistent),
        ]
    }
}

/// Runs every check on one pair, using each listed prime and each of the
/// first `choices` order-`p` subgroups of `T` for `H`.
pub fn check_fg_pair(fg: &FgPair, t_auts: &AutGroup, primes: &[usize], choices: usize) -> Result<LemmaTally> {
    let mut tally = LemmaTally { fg_pairs: 1, ..LemmaTally::default() };
    let g = fg.group();
    let kernel = fg.kernel_sn();
    for &tau in &kernel {
        for sigma in g.elements().filter(|&s| g.commutes(s, tau)) {
            tally.relations_checked += 1;
            if !check_relations_lemma(fg, t_auts, sigma, tau)? {
                tally.relations_failed += 1;
            }
        }
    }
    let p1 = check_out_prop1(fg, t_auts);
    if let Some(ok) = p1.conclusion {
        tally.out_prop1_checked += 1;
        tally.out_prop1_failed += usize::from(!ok);
    }
    let power = fg.power();
    for &p in primes {
        for k in 0..choices {
            let Some(choice) = choose_prime_subgroups_nth(power.base(), power.n(), p, k)? else {
                break;
            };
            let h = choice.h_elements(power);
            let d = match orbit_decompose(power.n(), p, &h_thetas(fg, &h)) {
                Ok(d) => d,
                Err(Error::Precondition(_)) => continue,
                Err(e) => return Err(e),
            };
            tally.decompositions += 1;
            tally.group_lemma_failed += usize::from(!d.group_lemma_holds());
            match check_g_bound(fg, t_auts, &d, &h) {
                Ok(report) => {
                    tally.g_bound_checked += 1;
                    let ok = report.contained && report.within_bound != Some(false);
                    tally.g_bound_failed += usize::from(!ok);
                    let audit = out_prop2_audit(fg, &d, &report);
                    tally.out_prop2_applicable += usize::from(audit.applicable);
                    tally.out_prop2_inconsistent += usize::from(!audit.consistent);
                }
                Err(Error::Precondition(_)) => tally.g_bound_skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(tally)
}

/// `(𝔣, 𝔤)` over `S3²` for every homomorphism `𝔣: S3² → Aut(S3²)`, with
/// all crossed homomorphisms `𝔤` or only the bijective ones.
pub fn s3_squared_pairs(bijective_only: bool) -> Result<(AutGroup, Vec<FgPair>)> {
    let t = catalog("s3")?;
    let t_auts = AutGroup::new(&t);
    let power = DirectPower::new(&t, 2)?;
    let g = power.to_group()?;
    let g_auts = AutGroup::new(&g);
    let fs = homomorphisms(&g, &g_auts.as_group());
    let pairs = fs
        .par_iter()
        .map(|f_map| {
            crossed_homomorphisms(&g, &g_auts, f_map, bijective_only)
                .into_iter()
                .map(|g_map| FgPair::from_hol(&power, &t_auts, &g_auts, f_map, &g_map))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((t_auts, pairs))
}

/// Pairs over `S3^4` whose `𝔣` permutes coordinates through signs:
/// `θ_σ = (12)^{ε_a(σ)}·(34)^{ε_b(σ)}` for the listed sign patterns, with all
/// `φ` trivial, and `𝔤` principal, `𝔤(σ) = c·𝔣(σ)(c)⁻¹`.
pub fn s3_fourth_pairs() -> Result<(AutGroup, Vec<FgPair>)> {
    let t = catalog("s3")?;
    let t_auts = AutGroup::new(&t);
    let power = DirectPower::new(&t, 4)?;
    let sign = |x: usize| usize::from(t.element_order(x) == 2);
    // which coordinates' signs drive the swaps of {1,2} and {3,4}
    let patterns: [(&[usize], &[usize]); 4] = [(&[1], &[3]), (&[1, 2], &[3, 4]), (&[1], &[1]), (&[2, 3], &[])];
    let id = t_auts.identity_id();
    let size = power.order().expect("1296 elements");
    let mut out = Vec::new();
    for (sa, sb) in patterns {
        let f: Vec<StructuredEndo> = (0..size)
            .map(|s| {
                let x = power.decode(s);
                let ea = sa.iter().map(|&i| sign(x.component(i))).sum::<usize>() % 2;
                let eb = sb.iter().map(|&i| sign(x.component(i))).sum::<usize>() % 2;
                let mut theta = vec![1, 2, 3, 4];
                if ea == 1 {
                    theta.swap(0, 1);
                }
                if eb == 1 {
                    theta.swap(2, 3);
                }
                StructuredEndo::new(theta, vec![Some(id); 4], &t_auts)
            })
            .collect::<Result<_>>()?;
        for c in [vec![0, 0, 0, 0], vec![1, 0, 2, 0], vec![3, 4, 5, 1]] {
            let c = PowerElement(c);
            let c_inv = power.inv(&c);
            let g: Vec<usize> = (0..size)
                .map(|s| {
                    let moved = f[s].apply(&t_auts, &c_inv);
                    power.encode(&power.mul(&c, &moved))
                })
                .collect();
            out.push(FgPair::new(&power, &t_auts, f.clone(), g)?);
        }
    }
    Ok((t_auts, out))
}

/// The S3 suite: pairs over `S3²` (bijective `𝔤` only unless `exhaustive`)
/// with `p ∈ {2, 3}` and two choices of `H`, plus the constructed `S3^4`
/// pairs with `p = 2`.
pub fn verify_s3_lemmas(exhaustive: bool) -> Result<LemmaTally> {
    let (t_auts, pairs) = s3_squared_pairs(!exhaustive)?;
    let squared = pairs
        .par_iter()
        .map(|fg| check_fg_pair(fg, &t_auts, &[2, 3], 2))
        .try_reduce(LemmaTally::default, |a, b| Ok(a.merge(b)))?;
    let (t_auts, pairs) = s3_fourth_pairs()?;
    let fourth = pairs
        .par_iter()
        .map(|fg| check_fg_pair(fg, &t_auts, &[2], 2))
        .try_reduce(LemmaTally::default, |a, b| Ok(a.merge(b)))?;
    Ok(squared.merge(fourth))
}
