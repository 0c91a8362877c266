//! Structured endomorphisms of `G = T^n`.
//!
//! A structured endomorphism is a pair `(θ, φ)` with `θ: {1..n} → {0..n}` and
//! one `φ_i ∈ Aut(T)` for every `i` with `θ(i) ≠ 0`. It acts by
//!
//! ```text
//! (x^(1), ..., x^(n)) ↦ (φ_1(x^(θ(1))), ..., φ_n(x^(θ(n))))
//! ```
//!
//! with `x^(0) = 1`. The set of them, `End⁰(G)`, is a monoid under
//! composition; its units form `Aut⁰(G) = Aut(T) wr S_n`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{AutGroup, AutId, DirectPower, PowerElement};
use crate::Budget;

/// `(θ, φ)` with `phis[i] == None` exactly when `theta[i] == 0`.
///
/// Both vectors are indexed from 0 for coordinate 1; `theta` values are
/// 1-based coordinates with 0 meaning the trivial subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructuredEndo {
    theta: Vec<usize>,
    phis: Vec<Option<AutId>>,
}

impl StructuredEndo {
    pub fn new(theta: Vec<usize>, phis: Vec<Option<AutId>>, auts: &AutGroup) -> Result<Self> {
        let n = theta.len();
        if n == 0 {
            return Err(Error::InvalidEndo("n must be positive".into()));
        }
        if phis.len() != n {
            return Err(Error::InvalidEndo(format!(
                "theta has {n} entries but phi has {}",
                phis.len()
            )));
        }
        for (i, (&t, &phi)) in theta.iter().zip(&phis).enumerate() {
            if t > n {
                return Err(Error::InvalidEndo(format!("theta({}) = {t} exceeds n = {n}", i + 1)));
            }
            match (t, phi) {
                (0, None) => {}
                (0, Some(_)) => {
                    return Err(Error::InvalidEndo(format!(
                        "phi_{} must be trivial since theta({}) = 0",
                        i + 1,
                        i + 1
                    )))
                }
                (_, None) => {
                    return Err(Error::InvalidEndo(format!(
                        "phi_{} must be bijective since theta({}) = {t}",
                        i + 1,
                        i + 1
                    )))
                }
                (_, Some(a)) if a >= auts.len() => {
                    return Err(Error::InvalidEndo(format!(
                        "automorphism id {a} out of range ({} automorphisms)",
                        auts.len()
                    )))
                }
                _ => {}
            }
        }
        Ok(Self { theta, phis })
    }

    /// The trivial endomorphism, `θ = (0, ..., 0)`.
    pub fn trivial(n: usize) -> Self {
        Self { theta: vec![0; n], phis: vec![None; n] }
    }

    pub fn identity(n: usize) -> Self {
        Self { theta: (1..=n).collect(), phis: vec![Some(0); n] }
    }

    pub fn n(&self) -> usize {
        self.theta.len()
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn phis(&self) -> &[Option<AutId>] {
        &self.phis
    }

    /// `θ(i)` for 1-based `i`.
    #[inline]
    pub fn theta_at(&self, i: usize) -> usize {
        self.theta[i - 1]
    }

    /// `φ_i` for 1-based `i`.
    #[inline]
    pub fn phi_at(&self, i: usize) -> Option<AutId> {
        self.phis[i - 1]
    }

    /// Coordinate `i` of the image: `φ_i(x^(θ(i)))`.
    #[inline]
    pub fn component(&self, auts: &AutGroup, x: &PowerElement, i: usize) -> usize {
        match self.phis[i - 1] {
            None => 0,
            Some(a) => auts.apply(a, x.component(self.theta[i - 1])),
        }
    }

    pub fn apply(&self, auts: &AutGroup, x: &PowerElement) -> PowerElement {
        PowerElement((1..=self.n()).map(|i| self.component(auts, x, i)).collect())
    }

    /// `θ` restricted to `{1..n}` is a permutation.
    pub fn is_automorphism(&self) -> bool {
        let mut seen = vec![false; self.n() + 1];
        self.theta.iter().all(|&t| t != 0 && !std::mem::replace(&mut seen[t], true))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self, auts: &AutGroup) -> Self {
        let n = self.n();
        let mut theta = vec![0; n];
        let mut phis = vec![None; n];
        for i in 0..n {
            let j = self.theta[i];
            if j == 0 {
                continue;
            }
            let k = other.theta[j - 1];
            if k == 0 {
                continue;
            }
            theta[i] = k;
            phis[i] = Some(auts.compose(self.phis[i].unwrap(), other.phis[j - 1].unwrap()));
        }
        Self { theta, phis }
    }

    pub fn inverse(&self, auts: &AutGroup) -> Option<Self> {
        if !self.is_automorphism() {
            return None;
        }
        // f(x)_i = φ_i(x_θ(i)), so f⁻¹(y)_θ(i) = φ_i⁻¹(y_i)
        let n = self.n();
        let mut theta = vec![0; n];
        let mut phis = vec![None; n];
        for i in 0..n {
            let j = self.theta[i] - 1;
            theta[j] = i + 1;
            phis[j] = Some(auts.inverse(self.phis[i].unwrap()));
        }
        Some(Self { theta, phis })
    }

    /// Flat image table on `T^n`.
    pub fn to_table(&self, power: &DirectPower, auts: &AutGroup) -> Vec<usize> {
        power.elements().map(|x| power.encode(&self.apply(auts, &x))).collect()
    }

    /// Recovers `(θ, φ)` from a flat endomorphism table of `T^n`. Fails if the
    /// map is not of structured shape.
    pub fn from_table(power: &DirectPower, auts: &AutGroup, images: &[usize]) -> Result<Self> {
        let n = power.n();
        let t = power.base();
        let mut theta = vec![0; n];
        let mut phis = vec![None; n];
        for i in 1..=n {
            let mut source = None;
            for j in 1..=n {
                let hits = t
                    .elements()
                    .any(|x| power.decode(images[power.encode(&power.embed(j, x))]).component(i) != 0);
                if hits {
                    if source.is_some() {
                        return Err(Error::NotInAut0(format!(
                            "coordinate {i} depends on more than one factor"
                        )));
                    }
                    source = Some(j);
                }
            }
            if let Some(j) = source {
                let table: Vec<usize> = t
                    .elements()
                    .map(|x| power.decode(images[power.encode(&power.embed(j, x))]).component(i))
                    .collect();
                let id = auts.id_of(&table).ok_or_else(|| {
                    Error::NotInAut0(format!("coordinate {i} is not an automorphic image of factor {j}"))
                })?;
                theta[i - 1] = j;
                phis[i - 1] = Some(id);
            }
        }
        let endo = Self { theta, phis };
        if endo.to_table(power, auts) != images {
            return Err(Error::NotInAut0("map does not factor coordinatewise".into()));
        }
        Ok(endo)
    }

    /// Uniform sample from `End⁰`: coordinates are independent, each either
    /// trivial or one of `n·|Aut(T)|` choices.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, aut_count: usize) -> Self {
        let mut theta = vec![0; n];
        let mut phis = vec![None; n];
        for i in 0..n {
            let k = rng.gen_range(0..1 + n * aut_count);
            if k > 0 {
                theta[i] = 1 + (k - 1) / aut_count;
                phis[i] = Some((k - 1) % aut_count);
            }
        }
        Self { theta, phis }
    }
}

/// `(1 + n·A)^n`, or `None` on overflow.
pub fn end0_count(aut_count: usize, n: usize) -> Option<u128> {
    (1 + n as u128 * aut_count as u128).checked_pow(n as u32)
}

/// `A^n · n!`, or `None` on overflow.
pub fn aut0_count(aut_count: usize, n: usize) -> Option<u128> {
    let fact = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))?;
    (aut_count as u128).checked_pow(n as u32)?.checked_mul(fact)
}

/// Streams structured endomorphisms for a sequence of `θ`s, with the `φ` ids
/// of the non-zero positions running lexicographically inside each `θ`.
pub struct EndoStream<I> {
    thetas: I,
    aut_count: usize,
    current: Option<(Vec<usize>, Vec<usize>)>,
}

impl<I: Iterator<Item = Vec<usize>>> EndoStream<I> {
    fn new(mut thetas: I, aut_count: usize) -> Self {
        let current = thetas.next().map(|t| {
            let k = t.iter().filter(|&&v| v != 0).count();
            (t, vec![0; k])
        });
        Self { thetas, aut_count, current }
    }
}

impl<I: Iterator<Item = Vec<usize>>> Iterator for EndoStream<I> {
    type Item = StructuredEndo;

    fn next(&mut self) -> Option<StructuredEndo> {
        let (theta, digits) = self.current.as_mut()?;
        let mut ids = digits.iter();
        let phis = theta.iter().map(|&t| if t == 0 { None } else { ids.next().copied() }).collect();
        let out = StructuredEndo { theta: theta.clone(), phis };

        // advance the φ odometer, then θ
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.current = self.thetas.next().map(|t| {
                    let k = t.iter().filter(|&&v| v != 0).count();
                    (t, vec![0; k])
                });
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < self.aut_count {
                break;
            }
            digits[pos] = 0;
        }
        Some(out)
    }
}

/// All maps `{1..n} → {0..n}` in lexicographic order.
pub struct ThetaOdometer {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for ThetaOdometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.next.take()?;
        let mut succ = out.clone();
        let mut pos = self.n;
        while pos > 0 {
            pos -= 1;
            if succ[pos] < self.n {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(out)
    }
}

pub fn thetas(n: usize) -> ThetaOdometer {
    ThetaOdometer { n, next: Some(vec![0; n]) }
}

/// Permutations of `1..=n` in lexicographic order.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.next.take()?;
        let mut p = out.clone();
        let n = p.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
                p.swap(i, j);
                p[i + 1..].reverse();
                self.next = Some(p);
            }
        }
        Some(out)
    }
}

pub fn permutations(n: usize) -> Permutations {
    Permutations { next: Some((1..=n).collect()) }
}

/// Streams `End⁰(T^n)`: `θ` lexicographic, then `φ` ids lexicographic.
pub fn enumerate_end0(
    auts: &AutGroup,
    n: usize,
    budget: &Budget,
) -> Result<EndoStream<ThetaOdometer>> {
    if n == 0 {
        return Err(Error::InvalidEndo("n must be positive".into()));
    }
    let needed = end0_count(auts.len(), n).unwrap_or(u128::MAX);
    if needed > budget.max_endos {
        return Err(Error::BudgetExceeded { what: "End0 enumeration", needed, budget: budget.max_endos });
    }
    Ok(EndoStream::new(thetas(n), auts.len()))
}

/// Streams `Aut⁰(T^n) = Aut(T) wr S_n`: permutations lexicographic, then `φ`.
pub fn enumerate_aut0(
    auts: &AutGroup,
    n: usize,
    budget: &Budget,
) -> Result<EndoStream<Permutations>> {
    if n == 0 {
        return Err(Error::InvalidEndo("n must be positive".into()));
    }
    let needed = aut0_count(auts.len(), n).unwrap_or(u128::MAX);
    if needed > budget.max_endos {
        return Err(Error::BudgetExceeded { what: "Aut0 enumeration", needed, budget: budget.max_endos });
    }
    Ok(EndoStream::new(permutations(n), auts.len()))
}
