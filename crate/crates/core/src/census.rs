//! Closed-form and brute-force counts of tree pairs `#𝓕(G,G)` and of
//! `#ℰ′_inn(G,G)`, for `G = T^n` with `A = |Aut(T)|`:
//!
//! ```text
//! #𝓕      = 2^n · n! · A^n · (nA + 1)^(n-1)
//!         = Σ_d T_n(d) · 2^n · n! · A^(2n-d)
//! #ℰ′_inn = 2^n · (nA + 1)^(n-1)
//! ```

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::endo::{end0_count, enumerate_end0, StructuredEndo};
use crate::error::{Error, Result};
use crate::fpf::is_fpf_bruteforce;
use crate::graph::trees::{count_trees_root_degree, root_degree_histogram};
use crate::graph::UndirectedPairGraph;
use crate::group::{catalog, AutGroup, FiniteGroup};
use crate::holomorph::{enumerate_regular_subgroups, Holomorph, InnOut};
use crate::scalar::{factorial, from_u64, pow, CountScalar};
use crate::{Budget, Count};

pub fn formula_f<C: CountScalar>(aut_order: u64, n: u64) -> C {
    let a = from_u64::<C>(aut_order);
    pow(from_u64::<C>(2), n)
        * factorial::<C>(n)
        * pow(a.clone(), n)
        * pow(from_u64::<C>(n) * a + C::one(), n.saturating_sub(1))
}

pub fn formula_einn<C: CountScalar>(aut_order: u64, n: u64) -> C {
    let a = from_u64::<C>(aut_order);
    pow(from_u64::<C>(2), n) * pow(from_u64::<C>(n) * a + C::one(), n.saturating_sub(1))
}

/// `Σ_d T_n(d)·2^n·n!·A^(2n−d)` with `T_n(d)` from the closed form.
pub fn tree_weighted_f<C: CountScalar>(aut_order: u64, n: u64) -> C {
    weighted(aut_order, n, |d| count_trees_root_degree::<C>(n, d))
}

/// Same sum with `T_n(d)` counted by Prüfer enumeration (`n ≤ 8`).
pub fn tree_weighted_f_enumerated<C: CountScalar>(aut_order: u64, n: u64) -> Result<C> {
    let hist = root_degree_histogram(n as usize)?;
    Ok(weighted(aut_order, n, |d| from_u64::<C>(hist[d as usize])))
}

fn weighted<C: CountScalar>(aut_order: u64, n: u64, trees: impl Fn(u64) -> C) -> C {
    let scale = pow(from_u64::<C>(2), n) * factorial::<C>(n);
    let a = from_u64::<C>(aut_order);
    (1..=n).fold(C::zero(), |acc, d| acc + trees(d) * scale.clone() * pow(a.clone(), 2 * n - d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BruteMode {
    /// Pairs whose graph is a tree.
    Tree,
    /// Pairs that are fixed point free by direct scan.
    Fpf,
}

impl FromStr for BruteMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" => Ok(BruteMode::Tree),
            "fpf" => Ok(BruteMode::Fpf),
            _ => Err(Error::Precondition(format!("unknown mode `{s}`"))),
        }
    }
}

impl fmt::Display for BruteMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BruteMode::Tree => "tree",
            BruteMode::Fpf => "fpf",
        })
    }
}

fn theta_index(e: &StructuredEndo) -> usize {
    let base = e.n() + 1;
    e.theta().iter().rev().fold(0, |acc, &t| acc * base + t)
}

/// Counts pairs in `End⁰(T^n)²` by full enumeration, sharded over `f`.
pub fn brute_f(auts: &AutGroup, n: usize, mode: BruteMode, budget: &Budget) -> Result<Count> {
    let endos = end0_count(auts.len(), n).ok_or(Error::BudgetExceeded {
        what: "End0 size",
        needed: u128::MAX,
        budget: budget.max_endos,
    })?;
    let pairs = endos.saturating_mul(endos);
    if pairs > budget.max_pairs {
        return Err(Error::BudgetExceeded { what: "pair census", needed: pairs, budget: budget.max_pairs });
    }
    let all: Vec<StructuredEndo> = enumerate_end0(auts, n, budget)?.collect();
    let count: u64 = match mode {
        BruteMode::Tree => {
            // tree-ness depends on (θ_f, θ_g) only; tabulate it once
            let m = (n + 1).pow(n as u32);
            let mut thetas = vec![Vec::new(); m];
            for e in &all {
                thetas[theta_index(e)] = e.theta().to_vec();
            }
            let table: Vec<bool> = (0..m * m)
                .into_par_iter()
                .map(|k| {
                    let (a, b) = (&thetas[k / m], &thetas[k % m]);
                    !a.is_empty() && !b.is_empty() && UndirectedPairGraph::build(a, b).is_ok_and(|g| g.is_tree())
                })
                .collect();
            let idx: Vec<usize> = all.iter().map(theta_index).collect();
            idx.par_iter()
                .map(|&i| idx.iter().filter(|&&j| table[i * m + j]).count() as u64)
                .sum()
        }
        BruteMode::Fpf => {
            let size = (auts.group().order() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
            if size > budget.max_elements {
                return Err(Error::BudgetExceeded {
                    what: "brute-force fixed point scan",
                    needed: size,
                    budget: budget.max_elements,
                });
            }
            all.par_iter()
                .map(|f| {
                    all.iter()
                        .filter(|g| is_fpf_bruteforce(f, g, auts, budget).map(|v| v.is_fpf).unwrap_or(false))
                        .count() as u64
                })
                .sum()
        }
    };
    Ok(Count::from(count))
}

/// One named comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        Self { name: name.into(), expected, actual, pass }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub t_name: String,
    pub n: usize,
    pub aut_order: u64,
    pub formula_f: Count,
    pub brute_f: Option<(BruteMode, Count)>,
    pub tree_weighted_f: Count,
    pub formula_einn: Option<Count>,
    pub fpf_count: Option<Count>,
    pub checks: Vec<Check>,
}

impl CensusReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Formulas for `T^n`, optionally with brute-force counts in the listed modes.
/// `ℰ′_inn` is reported only when `T` has trivial centre.
pub fn census(t: &FiniteGroup, n: usize, modes: &[BruteMode], budget: &Budget) -> Result<CensusReport> {
    let auts = AutGroup::new(t);
    let a = auts.len() as u64;
    let nn = n as u64;
    let formula_f: Count = formula_f(a, nn);
    let tree_weighted_f: Count = tree_weighted_f(a, nn);
    let mut checks = vec![Check::new("tree_weighted_F", &formula_f, &tree_weighted_f)];
    let formula_einn = (t.center().len() == 1).then(|| {
        let e: Count = formula_einn(a, nn);
        let ratio = &formula_f / (pow(Count::from(a), nn) * factorial::<Count>(nn));
        checks.push(Check::new("Einn = F/(A^n n!)", &e, &ratio));
        e
    });
    let mut brute = None;
    let mut fpf_count = None;
    for &mode in modes {
        let c = brute_f(&auts, n, mode, budget)?;
        checks.push(Check::new(format!("brute_F[{mode}]"), &formula_f, &c));
        match mode {
            BruteMode::Tree => brute = Some((mode, c)),
            BruteMode::Fpf => {
                if brute.is_none() {
                    brute = Some((mode, c.clone()));
                }
                fpf_count = Some(c);
            }
        }
    }
    Ok(CensusReport {
        t_name: t.name().to_string(),
        n,
        aut_order: a,
        formula_f,
        brute_f: brute,
        tree_weighted_f,
        formula_einn,
        fpf_count,
        checks,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::Precondition(format!("unknown level `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub reports: Vec<CensusReport>,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CensusReport::all_match) && self.checks.iter().all(|c| c.pass)
    }
}

/// `quick`: S3 censuses for `n ≤ 2` and formula identities. `full` adds the
/// A5 fpf census, regular subgroups of `Hol(A5)` and the S3 `n = 3` tree census.
pub fn run_verification(level: Level, budget: &Budget) -> Result<Verification> {
    let s3 = catalog("s3")?;
    let mut reports = vec![
        census(&s3, 1, &[BruteMode::Tree, BruteMode::Fpf], budget)?,
        census(&s3, 2, &[BruteMode::Tree, BruteMode::Fpf], budget)?,
    ];
    let mut checks = vec![
        Check::new("formula_F(6,1)", 12, formula_f::<Count>(6, 1)),
        Check::new("formula_F(6,2)", 3744, formula_f::<Count>(6, 2)),
        Check::new("formula_F(6,3)", 3_742_848, formula_f::<Count>(6, 3)),
        Check::new("tree_weighted_F(6,3)", formula_f::<Count>(6, 3), tree_weighted_f_enumerated::<Count>(6, 3)?),
    ];
    for n in 1..=7u64 {
        let total: Count = (1..=n).map(|d| count_trees_root_degree::<Count>(n, d)).sum();
        checks.push(Check::new(format!("sum_d T_{n}(d)"), pow(Count::from(n + 1), n - 1), total));
    }
    if level == Level::Full {
        let a5 = catalog("a5")?;
        reports.push(census(&a5, 1, &[BruteMode::Fpf], budget)?);
        reports.push(census(&s3, 3, &[BruteMode::Tree], budget)?);
        let hol = Holomorph::new(&a5);
        let regs = enumerate_regular_subgroups(&hol, &a5, budget)?;
        let inn = regs.iter().filter(|r| r.class == InnOut::Inn).count();
        checks.push(Check::new("Hol(A5) regular ≅A5", 2, regs.len()));
        checks.push(Check::new("Hol(A5) inn", 2, inn));
        checks.push(Check::new("Hol(A5) out", 0, regs.len() - inn));
    }
    Ok(Verification { reports, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_formula_values() {
        assert_eq!(formula_f::<u64>(6, 1), 12);
        assert_eq!(formula_f::<u64>(6, 2), 3744);
        assert_eq!(formula_f::<u64>(6, 3), 3_742_848);
        assert_eq!(formula_f::<u64>(2520, 1), 5040);
        assert_eq!(formula_f::<u64>(120, 1), 240);
        assert_eq!(formula_einn::<u64>(2520, 1), 2);
        assert_eq!(formula_einn::<u64>(2520, 2), 20164);
        assert_eq!(formula_einn::<u64>(120, 1), 2);
    }

    #[test]
    fn weighted_examples() {
        assert_eq!(tree_weighted_f::<u64>(6, 2), 8 * (2 * 216 + 36));
        assert_eq!(tree_weighted_f::<u64>(6, 3), 3_742_848);
        assert_eq!(tree_weighted_f_enumerated::<u64>(6, 3).unwrap(), 3_742_848);
        for n in 1..=7u64 {
            let cayley = pow(n + 1, n - 1);
            assert_eq!(tree_weighted_f::<u128>(1, n), (pow(2u128, n) * factorial::<u128>(n) * cayley as u128));
        }
    }

    #[test]
    fn einn_at_n1_is_always_two() {
        for a in 1..=5040 {
            assert_eq!(formula_einn::<u64>(a, 1), 2);
        }
    }

    #[test]
    fn brute_counts_s3() {
        let auts = AutGroup::new(&catalog("s3").unwrap());
        let b = Budget::default();
        assert_eq!(brute_f(&auts, 1, BruteMode::Tree, &b).unwrap(), Count::from(12u32));
        assert_eq!(brute_f(&auts, 1, BruteMode::Fpf, &b).unwrap(), Count::from(12u32));
        assert_eq!(brute_f(&auts, 2, BruteMode::Tree, &b).unwrap(), Count::from(3744u32));
    }

    #[test]
    fn pair_budget_is_enforced() {
        let auts = AutGroup::new(&catalog("s3").unwrap());
        let tight = Budget { max_pairs: 100, ..Budget::default() };
        assert!(matches!(brute_f(&auts, 2, BruteMode::Tree, &tight), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn quick_verification_passes() {
        let v = run_verification(Level::Quick, &Budget::default()).unwrap();
        assert!(v.passed(), "{v:#?}");
    }
}
