//! Automorphisms, homomorphisms and isomorphism tests.

use std::collections::{BTreeSet, HashMap};
use std::ops::ControlFlow;

use super::search::GeneratorSearch;
use super::FiniteGroup;

/// Index of an automorphism in the canonical (lexicographic) enumeration.
pub type AutId = usize;

/// Bijective endomorphism, stored by its image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    images: Vec<usize>,
}

impl Automorphism {
    /// Wraps an image table after checking it is a bijective homomorphism.
    pub fn from_images(group: &FiniteGroup, images: Vec<usize>) -> Option<Self> {
        if images.len() != group.order() || !is_homomorphism(group, group, &images) {
            return None;
        }
        let distinct: BTreeSet<usize> = images.iter().copied().collect();
        (distinct.len() == images.len()).then_some(Self { images })
    }

    pub fn identity(order: usize) -> Self {
        Self { images: (0..order).collect() }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Self { images }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.images.len()).filter(|&x| self.images[x] == x).collect()
    }

    /// Only the identity is fixed.
    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().skip(1).all(|(x, &y)| x != y)
    }
}

/// Whether `map` (indexed by `src` elements) is a homomorphism into `dst`.
pub fn is_homomorphism(src: &FiniteGroup, dst: &FiniteGroup, map: &[usize]) -> bool {
    map.len() == src.order()
        && map.iter().all(|&v| v < dst.order())
        && src.elements().all(|x| {
            src.elements().all(|y| map[src.mul(x, y)] == dst.mul(map[x], map[y]))
        })
}

/// All automorphisms of `group`, sorted lexicographically by image table.
pub fn enumerate_automorphisms(group: &FiniteGroup) -> Vec<Automorphism> {
    let gens = group.minimal_generators();
    let orders: Vec<usize> = group.elements().map(|x| group.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| group.elements().filter(|&x| orders[x] == orders[g]).collect())
        .collect();
    let step = |_x: usize, vx: usize, _j: usize, vg: usize| group.mul(vx, vg);
    let mut found = Vec::new();
    GeneratorSearch::new(group, &gens, &candidates, step)
        .injective(group.order())
        .run(|map| {
            found.push(Automorphism { images: map.to_vec() });
            ControlFlow::Continue(())
        });
    found.sort();
    found
}

/// Conjugations `x ↦ g x g⁻¹`, deduplicated and sorted.
pub fn inner_automorphisms(group: &FiniteGroup) -> Vec<Automorphism> {
    let set: BTreeSet<Automorphism> = group
        .elements()
        .map(|g| Automorphism { images: group.elements().map(|x| group.conjugate(g, x)).collect() })
        .collect();
    set.into_iter().collect()
}

/// All homomorphisms `src → dst`, as image tables.
pub fn homomorphisms(src: &FiniteGroup, dst: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = src.minimal_generators();
    let dst_orders: Vec<usize> = dst.elements().map(|x| dst.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = src.element_order(g);
            dst.elements().filter(|&y| k % dst_orders[y] == 0).collect()
        })
        .collect();
    let step = |_x: usize, vx: usize, _j: usize, vg: usize| dst.mul(vx, vg);
    let mut found = Vec::new();
    GeneratorSearch::new(src, &gens, &candidates, step).run(|map| {
        found.push(map.to_vec());
        ControlFlow::Continue(())
    });
    found.sort();
    found
}

/// An isomorphism `a → b`, if one exists.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.is_abelian() != b.is_abelian() {
        return None;
    }
    let order_profile = |g: &FiniteGroup| {
        let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
        v.sort_unstable();
        v
    };
    if order_profile(a) != order_profile(b) {
        return None;
    }
    let gens = a.minimal_generators();
    let b_orders: Vec<usize> = b.elements().map(|y| b.element_order(y)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = a.element_order(g);
            b.elements().filter(|&y| b_orders[y] == k).collect()
        })
        .collect();
    let step = |_x: usize, vx: usize, _j: usize, vg: usize| b.mul(vx, vg);
    let mut found = None;
    GeneratorSearch::new(a, &gens, &candidates, step)
        .injective(b.order())
        .run(|map| {
            found = Some(map.to_vec());
            ControlFlow::Break(())
        });
    found
}

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Cap on the size of the precomputed composition table.
const COMPOSE_TABLE_LIMIT: usize = 512;

/// `Aut(G)` in canonical order, with composition, inverses and inner flags.
///
/// Id 0 is always the identity automorphism, since its image table is the
/// lexicographically smallest bijection fixing 0.
#[derive(Clone, Debug)]
pub struct AutGroup {
    group: FiniteGroup,
    auts: Vec<Automorphism>,
    index: HashMap<Vec<usize>, AutId>,
    inverse: Vec<AutId>,
    inner: Vec<bool>,
    has_fpf: bool,
    compose_table: Option<Vec<AutId>>,
}

impl AutGroup {
    pub fn new(group: &FiniteGroup) -> Self {
        let auts = enumerate_automorphisms(group);
        let index: HashMap<Vec<usize>, AutId> =
            auts.iter().enumerate().map(|(i, a)| (a.images.clone(), i)).collect();
        let inverse = auts.iter().map(|a| index[&a.inverse().images]).collect();
        let mut inner = vec![false; auts.len()];
        for a in inner_automorphisms(group) {
            inner[index[&a.images]] = true;
        }
        let has_fpf = auts.iter().any(Automorphism::is_fixed_point_free);
        let mut out = Self {
            group: group.clone(),
            auts,
            index,
            inverse,
            inner,
            has_fpf,
            compose_table: None,
        };
        let k = out.auts.len();
        if k <= COMPOSE_TABLE_LIMIT {
            let mut table = Vec::with_capacity(k * k);
            for a in 0..k {
                for b in 0..k {
                    table.push(out.compose_slow(a, b));
                }
            }
            out.compose_table = Some(table);
        }
        out
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.auts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.auts.is_empty()
    }

    pub fn get(&self, id: AutId) -> &Automorphism {
        &self.auts[id]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Automorphism> {
        self.auts.iter()
    }

    pub fn id_of(&self, images: &[usize]) -> Option<AutId> {
        self.index.get(images).copied()
    }

    pub fn identity_id(&self) -> AutId {
        0
    }

    #[inline]
    pub fn apply(&self, id: AutId, x: usize) -> usize {
        self.auts[id].images[x]
    }

    /// Id of `a ∘ b`.
    pub fn compose(&self, a: AutId, b: AutId) -> AutId {
        match &self.compose_table {
            Some(t) => t[a * self.auts.len() + b],
            None => self.compose_slow(a, b),
        }
    }

    fn compose_slow(&self, a: AutId, b: AutId) -> AutId {
        self.index[&self.auts[a].compose(&self.auts[b]).images]
    }

    pub fn inverse(&self, a: AutId) -> AutId {
        self.inverse[a]
    }

    pub fn is_inner(&self, a: AutId) -> bool {
        self.inner[a]
    }

    pub fn inner_ids(&self) -> Vec<AutId> {
        (0..self.len()).filter(|&a| self.inner[a]).collect()
    }

    pub fn inner_count(&self) -> usize {
        self.inner.iter().filter(|&&b| b).count()
    }

    /// Id of conjugation by `g`.
    pub fn conjugation_id(&self, g: usize) -> AutId {
        let images: Vec<usize> = self.group.elements().map(|x| self.group.conjugate(g, x)).collect();
        self.index[&images]
    }

    pub fn fpf_ids(&self) -> Vec<AutId> {
        (0..self.len()).filter(|&a| self.auts[a].is_fixed_point_free()).collect()
    }

    /// Computed once by scanning every automorphism.
    pub fn has_fpf_automorphism(&self) -> bool {
        self.has_fpf
    }

    /// Aut(G) as a table group under `(a, b) ↦ a ∘ b`.
    pub fn as_group(&self) -> FiniteGroup {
        let k = self.len();
        let mut mul = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                mul.push(self.compose(a, b));
            }
        }
        FiniteGroup::from_flat(format!("Aut({})", self.group.name()), k, mul)
            .expect("automorphisms form a group")
    }

    /// Whether Aut(G)/Inn(G) is solvable: the derived series of Aut(G) must
    /// fall into Inn(G).
    pub fn outer_is_solvable(&self) -> bool {
        let aut = self.as_group();
        let mut current: Vec<usize> = aut.elements().collect();
        loop {
            if current.iter().all(|&a| self.inner[a]) {
                return true;
            }
            let next = aut.commutator_subgroup(&current);
            if next.len() == current.len() {
                return false;
            }
            current = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    /// Every bijection fixing 0, filtered by the homomorphism law.
    fn brute_force_automorphisms(g: &FiniteGroup) -> Vec<Vec<usize>> {
        fn rec(g: &FiniteGroup, map: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if map.len() == g.order() {
                if is_homomorphism(g, g, map) {
                    out.push(map.clone());
                }
                return;
            }
            for v in 1..g.order() {
                if !used[v] {
                    used[v] = true;
                    map.push(v);
                    rec(g, map, used, out);
                    map.pop();
                    used[v] = false;
                }
            }
        }
        let mut used = vec![false; g.order()];
        used[0] = true;
        let mut out = Vec::new();
        rec(g, &mut vec![0], &mut used, &mut out);
        out.sort();
        out
    }

    #[test]
    fn s3_automorphisms_are_inner() {
        let g = catalog("s3").unwrap();
        let auts = enumerate_automorphisms(&g);
        assert_eq!(auts.len(), 6);
        let brute = brute_force_automorphisms(&g);
        let found: Vec<Vec<usize>> = auts.iter().map(|a| a.images().to_vec()).collect();
        assert_eq!(found, brute);
        assert_eq!(inner_automorphisms(&g), auts);
    }

    #[test]
    fn small_groups_match_brute_force() {
        for name in ["c2", "c4", "c5", "c6", "c8", "d4", "q8"] {
            let g = catalog(name).unwrap();
            let found: Vec<Vec<usize>> =
                enumerate_automorphisms(&g).iter().map(|a| a.images().to_vec()).collect();
            assert_eq!(found, brute_force_automorphisms(&g), "{name}");
        }
    }

    #[test]
    fn automorphism_counts() {
        let cases = [("c2", 1), ("c12", 4), ("d4", 8), ("q8", 24), ("a4", 24), ("s4", 24)];
        for (name, count) in cases {
            assert_eq!(enumerate_automorphisms(&catalog(name).unwrap()).len(), count, "{name}");
        }
    }

    #[test]
    fn a5_automorphisms_match_s5_conjugation() {
        // Oracle: conjugation by S5 on its subgroup A5. S5 acts faithfully, so
        // the number of distinct induced maps is |S5|.
        let a5 = catalog("a5").unwrap();
        let s5 = catalog("s5").unwrap();
        let even: Vec<usize> = s5
            .elements()
            .filter(|&x| s5.normal_closure(x).len() < 120 || x == 0)
            .collect();
        assert_eq!(even.len(), 60);
        let pos: HashMap<usize, usize> = even.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let induced: BTreeSet<Vec<usize>> = s5
            .elements()
            .map(|g| even.iter().map(|&x| pos[&s5.conjugate(g, x)]).collect())
            .collect();
        assert_eq!(induced.len(), 120);
        let auts = AutGroup::new(&a5);
        assert_eq!(auts.len(), 120);
        assert_eq!(auts.inner_count(), 60);
        assert!(!auts.has_fpf_automorphism());
    }

    #[test]
    fn identity_is_id_zero_and_group_laws_hold() {
        for name in ["s3", "q8", "a4", "d5"] {
            let auts = AutGroup::new(&catalog(name).unwrap());
            assert_eq!(auts.get(0), &Automorphism::identity(auts.group().order()));
            for a in 0..auts.len() {
                assert_eq!(auts.compose(a, auts.inverse(a)), 0);
                for b in 0..auts.len() {
                    let c = auts.compose(a, b);
                    assert_eq!(auts.get(c), &auts.get(a).compose(auts.get(b)));
                }
            }
            // Inn is normal in Aut
            for a in 0..auts.len() {
                for i in auts.inner_ids() {
                    let conj = auts.compose(auts.compose(a, i), auts.inverse(a));
                    assert!(auts.is_inner(conj));
                }
            }
        }
    }

    #[test]
    fn inner_counts_follow_center() {
        for name in ["s3", "c4", "a5", "d4", "q8"] {
            let g = catalog(name).unwrap();
            assert_eq!(inner_automorphisms(&g).len(), g.order() / g.center().len(), "{name}");
        }
        assert_eq!(inner_automorphisms(&catalog("c4").unwrap()).len(), 1);
        assert_eq!(catalog("c4").unwrap().center().len(), 4);
    }

    #[test]
    fn fixed_point_free_automorphisms() {
        let s3 = AutGroup::new(&catalog("s3").unwrap());
        assert!(!s3.get(0).is_fixed_point_free());
        assert!(!s3.has_fpf_automorphism());
        let c3 = catalog("c3").unwrap();
        let inversion = Automorphism::from_images(&c3, (0..3).map(|x| c3.inv(x)).collect()).unwrap();
        assert!(inversion.is_fixed_point_free());
        assert!(AutGroup::new(&c3).has_fpf_automorphism());
    }

    #[test]
    fn isomorphism_tests() {
        let s3 = catalog("s3").unwrap();
        let c6 = catalog("c6").unwrap();
        assert!(!is_isomorphic(&s3, &c6));
        assert!(is_isomorphic(&s3, &s3));
        assert!(!is_isomorphic(&catalog("d4").unwrap(), &catalog("q8").unwrap()));
        let aut_s3 = AutGroup::new(&s3).as_group();
        assert!(is_isomorphic(&aut_s3, &s3));
        let aut_a5 = AutGroup::new(&catalog("a5").unwrap()).as_group();
        assert!(is_isomorphic(&aut_a5, &catalog("s5").unwrap()));
    }

    #[test]
    fn homomorphism_counts() {
        let s3 = catalog("s3").unwrap();
        let c2 = catalog("c2").unwrap();
        // S3 → C2: trivial and sign
        assert_eq!(homomorphisms(&s3, &c2).len(), 2);
        // End(S3): 6 automorphisms, 3 maps through C2, the trivial map
        assert_eq!(homomorphisms(&s3, &s3).len(), 10);
        // End(A5) = Aut(A5) plus the trivial map
        let a5 = catalog("a5").unwrap();
        assert_eq!(homomorphisms(&a5, &a5).len(), 121);
    }

    #[test]
    fn outer_solvability() {
        assert!(AutGroup::new(&catalog("s3").unwrap()).outer_is_solvable());
        assert!(AutGroup::new(&catalog("a5").unwrap()).outer_is_solvable());
        assert!(AutGroup::new(&catalog("c5").unwrap()).outer_is_solvable());
    }
}
