use super::{DirectPower, FiniteGroup, PowerElement};
use crate::error::{Error, Result};

/// A choice of order-`p` subgroups `P^(i)` of each coordinate, given by one
/// generator per coordinate. Their product `H` is elementary abelian of rank n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSubgroupChoice {
    pub p: usize,
    pub generators: Vec<usize>,
}

impl PrimeSubgroupChoice {
    /// The generators of `H`, embedded coordinate by coordinate.
    pub fn h_generators(&self, power: &DirectPower) -> Vec<PowerElement> {
        self.generators.iter().enumerate().map(|(i, &t)| power.embed(i + 1, t)).collect()
    }

    /// All `p^n` elements of `H`.
    pub fn h_elements(&self, power: &DirectPower) -> Vec<PowerElement> {
        let base = power.base();
        let powers: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|&t| {
                let mut acc = vec![0];
                for _ in 1..self.p {
                    acc.push(base.mul(*acc.last().unwrap(), t));
                }
                acc
            })
            .collect();
        let n = self.generators.len();
        let total = self.p.pow(n as u32);
        (0..total)
            .map(|mut k| {
                let mut coords = Vec::with_capacity(n);
                for pw in &powers {
                    coords.push(pw[k % self.p]);
                    k /= self.p;
                }
                PowerElement(coords)
            })
            .collect()
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Lowest-index element of order `p` in every coordinate.
pub fn choose_prime_subgroups(t: &FiniteGroup, n: usize, p: usize) -> Result<PrimeSubgroupChoice> {
    choose_prime_subgroups_nth(t, n, p, 0)?.ok_or(Error::PrimeDoesNotDivide { p, order: t.order() })
}

/// Like [`choose_prime_subgroups`] but takes the `k`-th distinct subgroup of
/// order `p` (ordered by lowest generator). `None` if there are at most `k`.
pub fn choose_prime_subgroups_nth(
    t: &FiniteGroup,
    n: usize,
    p: usize,
    k: usize,
) -> Result<Option<PrimeSubgroupChoice>> {
    if !is_prime(p) || t.order() % p != 0 {
        return Err(Error::PrimeDoesNotDivide { p, order: t.order() });
    }
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut reps = Vec::new();
    for x in t.elements().filter(|&x| t.element_order(x) == p) {
        let sub = t.generated_subgroup(&[x]);
        if !seen.contains(&sub) {
            seen.push(sub);
            reps.push(x);
        }
    }
    Ok(reps.get(k).map(|&x| PrimeSubgroupChoice { p, generators: vec![x; n] }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    #[test]
    fn s3_p2_picks_lowest_transposition() {
        let s3 = catalog("s3").unwrap();
        let lowest = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let c = choose_prime_subgroups(&s3, 3, 2).unwrap();
        assert_eq!(c.generators, vec![lowest; 3]);
        assert_eq!(lowest, 1);
    }

    #[test]
    fn non_divisor_is_rejected() {
        let s3 = catalog("s3").unwrap();
        assert!(matches!(
            choose_prime_subgroups(&s3, 2, 5),
            Err(Error::PrimeDoesNotDivide { p: 5, order: 6 })
        ));
        assert!(choose_prime_subgroups(&s3, 2, 6).is_err());
    }

    #[test]
    fn a5_p5() {
        let a5 = catalog("a5").unwrap();
        let c = choose_prime_subgroups(&a5, 2, 5).unwrap();
        assert!(c.generators.iter().all(|&x| a5.element_order(x) == 5));
        let power = DirectPower::new(&a5, 2).unwrap();
        assert_eq!(c.h_elements(&power).len(), 25);
    }

    #[test]
    fn alternative_choices() {
        let s3 = catalog("s3").unwrap();
        // three subgroups of order 2, one of order 3
        assert!(choose_prime_subgroups_nth(&s3, 1, 2, 2).unwrap().is_some());
        assert!(choose_prime_subgroups_nth(&s3, 1, 2, 3).unwrap().is_none());
        assert!(choose_prime_subgroups_nth(&s3, 1, 3, 1).unwrap().is_none());
        let second = choose_prime_subgroups_nth(&s3, 2, 2, 1).unwrap().unwrap();
        assert_ne!(second.generators[0], 1);
    }
}
