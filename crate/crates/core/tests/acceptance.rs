//! Acceptance criteria. Each criterion prints one `criterion N: PASS|FAIL` line.
//! Oracles here are written against raw tables and permutations, not the
//! library's own search code.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopfcount::census::{brute_f, formula_f, tree_weighted_f, BruteMode};
use hopfcount::endo::{enumerate_end0, StructuredEndo};
use hopfcount::fpf::{check_path_conditions, construct_witness, is_fpf_bruteforce, is_fpf_by_tree};
use hopfcount::graph::trees::{count_trees_root_degree, root_degree_histogram};
use hopfcount::graph::UndirectedPairGraph;
use hopfcount::group::{catalog, choose_prime_subgroups_nth, AutGroup, DirectPower, FiniteGroup, PowerElement};
use hopfcount::holomorph::{
    enumerate_regular_subgroups, h_thetas, orbit_decompose, s3_fourth_pairs, verify_s3_lemmas, HolElement,
    HolSubgroup, Holomorph, InnOut,
};
use hopfcount::{Budget, Count};

fn report(n: u32, ok: bool, detail: impl std::fmt::Display) -> bool {
    println!("criterion {n}: {} {detail}", if ok { "PASS" } else { "FAIL" });
    ok
}

/// No `x ≠ 1` with `f(x) = g(x)`, straight from the tables.
fn tables_fpf(f: &[usize], g: &[usize]) -> bool {
    f.iter().zip(g).skip(1).all(|(a, b)| a != b)
}

/// Tree test by union-find on the edge list `θ_f(i) - θ_g(i)`.
fn oracle_is_tree(tf: &[usize], tg: &[usize]) -> bool {
    let n = tf.len();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..n {
        let (a, b) = (find(&mut parent, tf[i]), find(&mut parent, tg[i]));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

fn s3_pairs_n2() -> (AutGroup, DirectPower, Vec<StructuredEndo>, Vec<Vec<usize>>) {
    let t = catalog("s3").unwrap();
    let auts = AutGroup::new(&t);
    let power = DirectPower::new(&t, 2).unwrap();
    let endos: Vec<StructuredEndo> = enumerate_end0(&auts, 2, &Budget::default()).unwrap().collect();
    let tables = endos.iter().map(|e| e.to_table(&power, &auts)).collect();
    (auts, power, endos, tables)
}

fn criterion_1_a5_two_inner_structures() -> bool {
    let a5 = catalog("a5").unwrap();
    let auts = AutGroup::new(&a5);
    let budget = Budget::default();
    let mut detail = Vec::new();
    let mut ok = true;

    // End(A5) via the presentation <a, b | a², b³, (ab)⁵>
    let presented = a5
        .elements()
        .flat_map(|x| a5.elements().map(move |y| (x, y)))
        .any(|(x, y)| {
            a5.element_order(x) == 2
                && a5.element_order(y) == 3
                && a5.element_order(a5.mul(x, y)) == 5
                && a5.generated_subgroup(&[x, y]).len() == 60
        });
    let oracle_end = a5
        .elements()
        .flat_map(|x| a5.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| {
            a5.mul(x, x) == 0 && a5.mul(y, a5.mul(y, y)) == 0 && {
                let xy = a5.mul(x, y);
                (0..5).fold(0, |acc, _| a5.mul(acc, xy)) == 0
            }
        })
        .count();
    let endos: Vec<StructuredEndo> = enumerate_end0(&auts, 1, &budget).unwrap().collect();
    ok &= presented && endos.len() == 121 && oracle_end == 121 && auts.len() == 120;
    detail.push(format!("|End(A5)|={} oracle={} |Aut|={}", endos.len(), oracle_end, auts.len()));

    let power = DirectPower::new(&a5, 1).unwrap();
    let tables: Vec<Vec<usize>> = endos.iter().map(|e| e.to_table(&power, &auts)).collect();
    let mut fpf_pairs = Vec::new();
    let mut disagreements = 0;
    for (i, f) in endos.iter().enumerate() {
        for (j, g) in endos.iter().enumerate() {
            let v = is_fpf_by_tree(f, g, &auts).unwrap();
            if v.is_fpf != tables_fpf(&tables[i], &tables[j]) {
                disagreements += 1;
            }
            if v.is_fpf {
                fpf_pairs.push((i, j));
            }
        }
    }
    ok &= fpf_pairs.len() == 240 && disagreements == 0;
    detail.push(format!("fpf pairs={} exhaustive disagreements={}", fpf_pairs.len(), disagreements));

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut sampled_bad = 0;
    for _ in 0..100_000 {
        let (f, g) = (&endos[rng.gen_range(0..121)], &endos[rng.gen_range(0..121)]);
        let tree = is_fpf_by_tree(f, g, &auts).unwrap().is_fpf;
        let brute = is_fpf_bruteforce(f, g, &auts, &budget).unwrap().is_fpf;
        sampled_bad += usize::from(tree != brute);
    }
    ok &= sampled_bad == 0;
    detail.push(format!("sampled disagreements={sampled_bad}"));

    let quotient = fpf_pairs.len() / auts.len();
    ok &= fpf_pairs.len() % auts.len() == 0 && quotient == 2;
    detail.push(format!("#F/|Aut|={quotient}"));

    let hol = Holomorph::new(&a5);
    let from_pairs: BTreeSet<HolSubgroup> = fpf_pairs
        .iter()
        .map(|&(i, j)| hol.fpf_pair_to_subgroup(&tables[i], &tables[j]).unwrap())
        .collect();
    let lr: BTreeSet<HolSubgroup> = [hol.lambda_image(), hol.rho_image()].into_iter().collect();
    ok &= from_pairs == lr;
    let regs = enumerate_regular_subgroups(&hol, &a5, &budget).unwrap();
    let inn = regs.iter().filter(|r| r.class == InnOut::Inn).count();
    let enumerated: BTreeSet<HolSubgroup> = regs.iter().map(|r| r.subgroup.clone()).collect();
    ok &= regs.len() == 2 && inn == 2 && enumerated == lr;
    detail.push(format!("subgroups from pairs={} Hol(A5) regular={} inn={}", from_pairs.len(), regs.len(), inn));
    report(1, ok, detail.join("; "))
}

fn criterion_2_exact_counts() -> bool {
    let t = catalog("s3").unwrap();
    let auts = AutGroup::new(&t);
    let budget = Budget::default();
    let b1 = brute_f(&auts, 1, BruteMode::Tree, &budget).unwrap();
    let b2 = brute_f(&auts, 2, BruteMode::Tree, &budget).unwrap();

    // independent tree census over all θ/φ data
    let (_, _, endos, _) = s3_pairs_n2();
    let oracle2 = endos
        .iter()
        .flat_map(|f| endos.iter().map(move |g| (f, g)))
        .filter(|(f, g)| oracle_is_tree(f.theta(), g.theta()))
        .count();
    let f3: Count = formula_f(6, 3);
    let w3: Count = tree_weighted_f(6, 3);
    let ok = b1 == Count::from(12u32)
        && b1 == formula_f::<Count>(6, 1)
        && b2 == Count::from(3744u32)
        && b2 == formula_f::<Count>(6, 2)
        && oracle2 == 3744
        && f3 == Count::from(3_742_848u32)
        && w3 == f3;
    report(2, ok, format!("brute_F(S3,1)={b1} brute_F(S3,2)={b2} oracle={oracle2} weighted(6,3)={w3}"))
}

fn criterion_3_fpf_iff_tree_s3_n2() -> bool {
    let t = catalog("s3").unwrap();
    let (auts, _, endos, tables) = s3_pairs_n2();
    let fpf_auts = auts.iter().filter(|a| t.elements().skip(1).all(|x| a.images()[x] != x)).count();
    let mut mismatches = 0;
    let mut fpf = 0;
    for (i, f) in endos.iter().enumerate() {
        for (j, g) in endos.iter().enumerate() {
            let brute = tables_fpf(&tables[i], &tables[j]);
            let tree = UndirectedPairGraph::from_endos(f, g).is_tree();
            mismatches += usize::from(brute != tree);
            fpf += usize::from(brute);
        }
    }
    let pairs = endos.len() * endos.len();
    let ok = auts.len() == 6 && fpf_auts == 0 && !auts.has_fpf_automorphism() && pairs == 28561 && mismatches == 0;
    report(3, ok, format!("pairs={pairs} fpf={fpf} mismatches={mismatches} fpf automorphisms={fpf_auts}"))
}

fn criterion_4_clarke_formula() -> bool {
    let mut ok = true;
    for n in 1..=7u64 {
        // spanning trees of K_{n+1} by brute force over all n-edge subsets
        let verts = n as usize + 1;
        let all_edges: Vec<(usize, usize)> =
            (0..verts).flat_map(|a| (a + 1..verts).map(move |b| (a, b))).collect();
        let mut oracle = vec![0u64; verts];
        let m = all_edges.len();
        let mut pick: Vec<usize> = (0..n as usize).collect();
        loop {
            let tf: Vec<usize> = pick.iter().map(|&k| all_edges[k].0).collect();
            let tg: Vec<usize> = pick.iter().map(|&k| all_edges[k].1).collect();
            if oracle_is_tree(&tf, &tg) {
                oracle[tf.iter().filter(|&&v| v == 0).count()] += 1;
            }
            // next combination
            let k = pick.len();
            let Some(pos) = (0..k).rev().find(|&i| pick[i] != i + m - k) else { break };
            pick[pos] += 1;
            for i in pos + 1..k {
                pick[i] = pick[i - 1] + 1;
            }
        }
        let hist = root_degree_histogram(n as usize).unwrap();
        for d in 1..=n {
            let clarke: u64 = count_trees_root_degree(n, d);
            ok &= clarke == hist[d as usize] && clarke == oracle[d as usize];
        }
        let total: u64 = (1..=n).map(|d| count_trees_root_degree::<u64>(n, d)).sum();
        ok &= total == (n + 1).pow(n as u32 - 1);
    }
    report(4, ok, "T_n(d) = C(n-1,d-1) n^(n-d) for 1 <= d <= n <= 7, Cayley totals")
}

fn criterion_5_necessity_and_witnesses() -> bool {
    let (auts, power, endos, tables) = s3_pairs_n2();
    let mut fpf_bad = 0;
    let mut witnesses = 0;
    let mut witness_bad = 0;
    let mut no_component = 0;
    for (i, f) in endos.iter().enumerate() {
        for (j, g) in endos.iter().enumerate() {
            let graph = UndirectedPairGraph::from_endos(f, g);
            let comps = graph.components();
            if tables_fpf(&tables[i], &tables[j]) {
                let ok = comps.iter().all(|c| {
                    if c.contains(0) {
                        c.is_tree()
                    } else {
                        c.edges.len() == c.vertices.len()
                    }
                });
                fpf_bad += usize::from(!ok);
            } else if !graph.is_tree() {
                let usable = comps.iter().any(|c| !c.contains(0) && (c.is_tree() || c.is_unicyclic()));
                if !usable {
                    no_component += 1;
                    continue;
                }
                witnesses += 1;
                match construct_witness(f, g, &auts) {
                    Ok(w) => {
                        let k = power.encode(&w);
                        witness_bad += usize::from(k == 0 || tables[i][k] != tables[j][k]);
                    }
                    Err(_) => witness_bad += 1,
                }
            }
        }
    }
    let ok = fpf_bad == 0 && witness_bad == 0 && witnesses > 0;
    report(
        5,
        ok,
        format!("fpf shape failures={fpf_bad} witnesses={witnesses} bad={witness_bad} no usable component={no_component}"),
    )
}

fn criterion_6_path_conditions() -> bool {
    let t = catalog("s3").unwrap();
    let auts = AutGroup::new(&t);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut disagreements = 0;
    let mut fixed = 0;
    for k in 0..10_000 {
        let n = rng.gen_range(1..=3);
        let power = DirectPower::new(&t, n).unwrap();
        let f = StructuredEndo::random(&mut rng, n, auts.len());
        let g = StructuredEndo::random(&mut rng, n, auts.len());
        let size = 6usize.pow(n as u32);
        // every other instance uses a fixed point when one exists
        let sigma = if k % 2 == 0 {
            let ft = f.to_table(&power, &auts);
            let gt = g.to_table(&power, &auts);
            let pts: Vec<usize> = (0..size).filter(|&x| ft[x] == gt[x]).collect();
            pts[rng.gen_range(0..pts.len())]
        } else {
            rng.gen_range(0..size)
        };
        let sigma: PowerElement = power.decode(sigma);
        let direct = f.apply(&auts, &sigma) == g.apply(&auts, &sigma);
        fixed += usize::from(direct);
        disagreements += usize::from(check_path_conditions(&f, &g, &auts, &sigma).unwrap() != direct);
    }
    report(6, disagreements == 0, format!("instances=10000 fixed={fixed} disagreements={disagreements}"))
}

type Perm = Vec<usize>;

fn compose(p: &Perm, q: &Perm) -> Perm {
    // p after q
    q.iter().map(|&x| p[x]).collect()
}

fn all_perms(n: usize) -> Vec<Perm> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn closure(gens: &[Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..gens[0].len()).collect();
    let mut set: BTreeSet<Perm> = [id].into_iter().collect();
    let mut frontier: Vec<Perm> = set.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(g, &x);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

fn regular_by_action(s: &BTreeSet<Perm>, n: usize) -> bool {
    // transitive and free on n points: the images of 0 are all distinct and cover
    let images: BTreeSet<usize> = s.iter().map(|p| p[0]).collect();
    s.len() == n && images.len() == n && s.iter().all(|p| p == &(0..n).collect::<Perm>() || (0..n).all(|x| p[x] != x))
}

fn criterion_7_holomorph_s3() -> bool {
    let s3 = catalog("s3").unwrap();
    let c6 = catalog("c6").unwrap();
    let budget = Budget::default();
    // oracle: the normaliser of the right-regular representation in Sym(6)
    let right: BTreeSet<Perm> = s3.elements().map(|g| s3.elements().map(|x| s3.mul(x, g)).collect()).collect();
    let normaliser: Vec<Perm> = all_perms(6)
        .into_iter()
        .filter(|p| {
            let mut inv = vec![0; 6];
            for (i, &v) in p.iter().enumerate() {
                inv[v] = i;
            }
            right.iter().all(|r| right.contains(&compose(p, &compose(r, &inv))))
        })
        .collect();
    let mut order6: BTreeSet<BTreeSet<Perm>> = BTreeSet::new();
    for a in &normaliser {
        for b in &normaliser {
            let s = closure(&[a.clone(), b.clone()]);
            if s.len() == 6 {
                order6.insert(s);
            }
        }
    }
    let oracle_regular: BTreeSet<BTreeSet<Perm>> =
        order6.iter().filter(|s| regular_by_action(s, 6)).cloned().collect();
    let abelian = |s: &BTreeSet<Perm>| s.iter().all(|x| s.iter().all(|y| compose(x, y) == compose(y, x)));
    let oracle_s3: BTreeSet<_> = oracle_regular.iter().filter(|s| !abelian(s)).cloned().collect();
    let oracle_c6: BTreeSet<_> = oracle_regular.iter().filter(|s| abelian(s)).cloned().collect();

    let hol = Holomorph::new(&s3);
    let as_perm = |h: HolElement| -> Perm { s3.elements().map(|x| hol.act(h, x)).collect() };
    let by_perm: HashMap<Perm, HolElement> = hol.elements().map(|h| (as_perm(h), h)).collect();
    let lib_set: BTreeSet<Perm> = by_perm.keys().cloned().collect();
    let mut ok = normaliser.len() == 36 && lib_set == normaliser.iter().cloned().collect();

    let mut disagree = 0;
    for s in &order6 {
        let sub = HolSubgroup::from_elements(s.iter().map(|p| by_perm[p]));
        let r = hol.regularity(&sub).unwrap();
        disagree += usize::from(!r.agree() || r.xi_bijective != regular_by_action(s, 6));
    }
    let to_perms = |s: &HolSubgroup| -> BTreeSet<Perm> { s.elements().iter().map(|&h| as_perm(h)).collect() };
    let lambda = to_perms(&hol.lambda_image());
    let rho = to_perms(&hol.rho_image());
    ok &= oracle_s3.contains(&lambda) && oracle_s3.contains(&rho) && lambda != rho;

    let lib_s3: BTreeSet<_> =
        enumerate_regular_subgroups(&hol, &s3, &budget).unwrap().iter().map(|r| to_perms(&r.subgroup)).collect();
    let lib_c6: BTreeSet<_> =
        enumerate_regular_subgroups(&hol, &c6, &budget).unwrap().iter().map(|r| to_perms(&r.subgroup)).collect();
    // golden, from the oracle run
    ok &= order6.len() == 20 && oracle_s3.len() == 2 && oracle_c6.len() == 6;
    ok &= disagree == 0 && lib_s3 == oracle_s3 && lib_c6 == oracle_c6;
    report(
        7,
        ok,
        format!(
            "|Hol|={} order-6 subgroups={} regular S3-type={} C6-type={} xi/action disagreements={disagree}",
            normaliser.len(),
            order6.len(),
            oracle_s3.len(),
            oracle_c6.len()
        ),
    )
}

fn oracle_orbits(n: usize, thetas: &[Vec<usize>]) -> (Vec<usize>, Vec<BTreeSet<usize>>) {
    let mut fixed = Vec::new();
    let mut orbits: Vec<BTreeSet<usize>> = Vec::new();
    for i in 1..=n {
        if orbits.iter().any(|o| o.contains(&i)) {
            continue;
        }
        let o: BTreeSet<usize> = thetas.iter().map(|t| t[i - 1]).chain([i]).collect();
        if o.len() == 1 {
            fixed.push(i);
        } else {
            orbits.push(o);
        }
    }
    (fixed, orbits)
}

fn criterion_8_s3_lemma_suite() -> bool {
    let tally = verify_s3_lemmas(false).unwrap();
    let mut ok = tally.passed() && tally.relations_checked > 0 && tally.g_bound_checked > 0;

    // S3^4, p = 2: orbit decompositions recomputed here, for two choices of H
    let t: FiniteGroup = catalog("s3").unwrap();
    let (_, pairs) = s3_fourth_pairs().unwrap();
    let mut decomps = 0;
    for fg in &pairs {
        for k in 0..2 {
            let choice = choose_prime_subgroups_nth(&t, 4, 2, k).unwrap().unwrap();
            let h = choice.h_elements(fg.power());
            let thetas = h_thetas(fg, &h);
            let d = orbit_decompose(4, 2, &thetas).unwrap();
            let (fixed, orbits) = oracle_orbits(4, &thetas);
            let image: BTreeSet<&Vec<usize>> = thetas.iter().collect();
            let m = image.len().trailing_zeros();
            let sizes_are_powers = orbits.iter().all(|o| o.len().is_power_of_two());
            let sum_mk: u32 = orbits.iter().map(|o| o.len().trailing_zeros()).sum();
            let sum_sizes: usize = orbits.iter().map(BTreeSet::len).sum();
            ok &= image.len().is_power_of_two()
                && d.fixed == fixed
                && d.orbits.iter().map(|o| o.iter().copied().collect()).collect::<Vec<BTreeSet<usize>>>() == orbits
                && d.m == m
                && sizes_are_powers
                && 4 - fixed.len() == sum_sizes
                && m <= sum_mk
                && d.group_lemma_holds();
            decomps += 1;
        }
    }
    report(
        8,
        ok,
        format!(
            "pairs={} relations={} decompositions={} g-bound checked={} skipped={} S3^4 decompositions={decomps}",
            tally.fg_pairs, tally.relations_checked, tally.decompositions, tally.g_bound_checked, tally.g_bound_skipped
        ),
    )
}

fn main() {
    let criteria: [(u32, fn() -> bool); 8] = [
        (1, criterion_1_a5_two_inner_structures),
        (2, criterion_2_exact_counts),
        (3, criterion_3_fpf_iff_tree_s3_n2),
        (4, criterion_4_clarke_formula),
        (5, criterion_5_necessity_and_witnesses),
        (6, criterion_6_path_conditions),
        (7, criterion_7_holomorph_s3),
        (8, criterion_8_s3_lemma_suite),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        match std::panic::catch_unwind(run) {
            Ok(true) => {}
            Ok(false) => failed += 1,
            Err(_) => {
                println!("criterion {n}: FAIL (panicked)");
                failed += 1;
            }
        }
    }
    println!("acceptance: {}/8 passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
