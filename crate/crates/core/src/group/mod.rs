//! Finite groups stored as multiplication tables.
//!
//! Elements are dense indices `0..order` and the identity is always index 0.
//! Every constructor validates the group axioms, so downstream code can index
//! tables without further checks.

mod auts;
mod catalog;
mod power;
mod prime;
pub(crate) mod search;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

pub use auts::{
    enumerate_automorphisms, find_isomorphism, homomorphisms, inner_automorphisms, is_homomorphism,
    is_isomorphic, AutGroup, AutId, Automorphism,
};
pub use catalog::{catalog, CATALOG_NAMES};
pub use power::{DirectPower, PowerElement};
pub use prime::{choose_prime_subgroups, choose_prime_subgroups_nth, PrimeSubgroupChoice};

/// Groups above this order are checked for associativity on sampled triples.
const FULL_ASSOCIATIVITY_LIMIT: usize = 60;
const SAMPLED_TRIPLES: usize = 100_000;

/// A finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds and validates a group from table rows, `rows[x][y] = x * y`.
    pub fn from_rows(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::MalformedTable(format!(
                    "row {x} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::MalformedTable(format!(
                        "entry mul[{x}][{y}] = {v} out of range"
                    )));
                }
            }
            mul.extend_from_slice(row);
        }
        Self::from_flat(name, order, mul)
    }

    pub(crate) fn from_flat(name: impl Into<String>, order: usize, mul: Vec<usize>) -> Result<Self> {
        debug_assert_eq!(mul.len(), order * order);
        let at = |x: usize, y: usize| mul[x * order + y];

        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::NotAGroup(format!(
                    "identity axiom fails: index 0 is not a two-sided identity at x={x}"
                )));
            }
        }

        let mut inv = vec![usize::MAX; order];
        for x in 0..order {
            let Some(y) = (0..order).find(|&y| at(x, y) == 0) else {
                return Err(Error::NotAGroup(format!("inverse axiom fails: {x} has no right inverse")));
            };
            if at(y, x) != 0 {
                return Err(Error::NotAGroup(format!(
                    "inverse axiom fails: {y} is a right but not a left inverse of {x}"
                )));
            }
            inv[x] = y;
        }

        let assoc_fails = |x: usize, y: usize, z: usize| at(at(x, y), z) != at(x, at(y, z));
        if order <= FULL_ASSOCIATIVITY_LIMIT {
            for x in 0..order {
                for y in 0..order {
                    for z in 0..order {
                        if assoc_fails(x, y, z) {
                            return Err(associativity_error(x, y, z));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_ab1e);
            for _ in 0..SAMPLED_TRIPLES {
                let (x, y, z) = (
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                );
                if assoc_fails(x, y, z) {
                    return Err(associativity_error(x, y, z));
                }
            }
        }

        Ok(Self { name: name.into(), order, mul, inv })
    }

    /// Parses the text Cayley-table format: the order on the first line, then
    /// one row per line of space-separated 0-based indices.
    pub fn parse_table(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedTable("missing order line".into()))?;
        let order: usize = header
            .parse()
            .map_err(|_| Error::MalformedTable(format!("bad order line `{header}`")))?;
        let mut rows = Vec::with_capacity(order);
        for (i, line) in lines.enumerate() {
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| {
                        Error::MalformedTable(format!("row {i}: bad entry `{tok}`"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != order {
            return Err(Error::MalformedTable(format!(
                "expected {order} rows, found {}",
                rows.len()
            )));
        }
        Self::from_rows(name, &rows)
    }

    /// Renders the table in the format read by [`FiniteGroup::parse_table`].
    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for x in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|y| self.mul(x, y).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `g x g^-1`
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// Z(G), sorted.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.commutes(x, z)))
            .collect()
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    /// Greedy generating sequence: repeatedly add the lowest-index element
    /// that enlarges the subgroup generated so far.
    pub fn minimal_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[0] = true;
        let mut size = 1;
        while size < self.order {
            let next = (0..self.order).find(|&x| !span[x]).expect("span is proper");
            gens.push(next);
            let sub = self.generated_subgroup(&gens);
            size = sub.len();
            for x in sub {
                span[x] = true;
            }
        }
        gens
    }

    /// Whether the sorted subset is closed under the group law.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let members: BTreeSet<usize> = subset.iter().copied().collect();
        members.contains(&0)
            && members
                .iter()
                .all(|&x| members.iter().all(|&y| members.contains(&self.mul(x, y))))
    }

    pub fn is_normal(&self, subgroup: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &h in subgroup {
            member[h] = true;
        }
        (0..self.order).all(|g| subgroup.iter().all(|&h| member[self.conjugate(g, h)]))
    }

    /// The smallest normal subgroup containing `x`.
    pub fn normal_closure(&self, x: usize) -> Vec<usize> {
        let conjugates: BTreeSet<usize> = (0..self.order).map(|g| self.conjugate(g, x)).collect();
        let gens: Vec<usize> = conjugates.into_iter().collect();
        self.generated_subgroup(&gens)
    }

    /// Simple means non-trivial with no proper non-trivial normal subgroup.
    /// Scans normal closures of all elements.
    pub fn is_simple(&self) -> bool {
        self.order > 1 && (1..self.order).all(|x| self.normal_closure(x).len() == self.order)
    }

    /// `[H, H]` for a subgroup `H`, sorted.
    pub fn commutator_subgroup(&self, subgroup: &[usize]) -> Vec<usize> {
        let comms: BTreeSet<usize> = subgroup
            .iter()
            .flat_map(|&x| {
                subgroup.iter().map(move |&y| {
                    self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
                })
            })
            .collect();
        let gens: Vec<usize> = comms.into_iter().collect();
        self.generated_subgroup(&gens)
    }

    /// Perfect means equal to its own commutator subgroup.
    pub fn is_perfect(&self, subgroup: &[usize]) -> bool {
        self.commutator_subgroup(subgroup).len() == subgroup.len()
    }

    /// Renames the group; tables are untouched.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

fn associativity_error(x: usize, y: usize, z: usize) -> Error {
    Error::NotAGroup(format!("associativity fails at (x, y, z) = ({x}, {y}, {z})"))
}

/// Loads a catalog group by name, or a Cayley-table file by path.
pub fn load_group(source: &str) -> Result<FiniteGroup> {
    if let Ok(g) = catalog(source) {
        return Ok(g);
    }
    let path = Path::new(source);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::MalformedTable(format!("cannot read {source}: {e}")))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| source.to_string());
        return FiniteGroup::parse_table(name, &text);
    }
    Err(Error::UnknownGroup(source.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_table() {
        let g = catalog("c2").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn s3_has_trivial_center() {
        let g = catalog("s3").unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        // brute force: only the identity commutes with everything
        let central: Vec<usize> = (0..6)
            .filter(|&z| (0..6).all(|x| g.mul(x, z) == g.mul(z, x)))
            .collect();
        assert_eq!(central, vec![0]);
        assert_eq!(g.center(), central);
    }

    #[test]
    fn a5_is_simple() {
        let g = catalog("a5").unwrap();
        assert_eq!(g.order(), 60);
        assert!(g.is_simple());
        assert!(g.is_perfect(&(0..60).collect::<Vec<_>>()));
        assert!(!catalog("s4").unwrap().is_simple());
        assert!(!catalog("a4").unwrap().is_simple());
    }

    #[test]
    fn rejects_missing_identity() {
        let err = FiniteGroup::parse_table("bad", "2\n1 0\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::NotAGroup(ref m) if m.contains("identity")), "{err}");
    }

    #[test]
    fn rejects_non_associative_table() {
        // identity and inverses exist but (1*1)*2 != 1*(1*2)
        let text = "3\n0 1 2\n1 0 0\n2 0 0\n";
        let err = FiniteGroup::parse_table("bad", text).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)), "{err}");
        let text = "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
        assert!(FiniteGroup::parse_table("v4", text).is_ok());
        // a latin square with identity 0 that is not associative
        let text = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        let err = FiniteGroup::parse_table("bad", text).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(ref m) if m.contains("associativity")), "{err}");
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(matches!(
            FiniteGroup::parse_table("x", "2\n0 1\n").unwrap_err(),
            Error::MalformedTable(_)
        ));
        assert!(matches!(
            FiniteGroup::parse_table("x", "2\n0 1\n1 7\n").unwrap_err(),
            Error::MalformedTable(_)
        ));
        assert!(matches!(
            FiniteGroup::parse_table("x", "two\n").unwrap_err(),
            Error::MalformedTable(_)
        ));
    }

    #[test]
    fn table_text_round_trips() {
        let g = catalog("q8").unwrap();
        let h = FiniteGroup::parse_table("q8", &g.to_table_text()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn minimal_generators_generate() {
        for name in CATALOG_NAMES {
            let g = catalog(name).unwrap();
            let gens = g.minimal_generators();
            assert_eq!(g.generated_subgroup(&gens).len(), g.order(), "{name}");
        }
    }

    #[test]
    fn every_catalog_group_is_associative() {
        for name in CATALOG_NAMES {
            let g = catalog(name).unwrap();
            let n = g.order().min(60);
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                    }
                }
            }
        }
    }
}
