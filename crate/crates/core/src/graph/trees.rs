//! Labelled trees on `{0..n}` via Prüfer sequences, and the count `T_n(d)`
//! of those in which vertex 0 has degree `d`.

use crate::error::{Error, Result};
use crate::scalar::{binomial, from_u64, pow, CountScalar};

/// Largest `n` for which trees are enumerated outright.
pub const MAX_ENUMERATION_N: usize = 8;

/// Decodes a Prüfer sequence of length `n - 1` over `{0..n}` into the edges of
/// a tree on `{0..n}`, each `(min, max)`, sorted. The smallest leaf is removed
/// at every step.
pub fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let m = n + 1;
    debug_assert_eq!(seq.len() + 2, m.max(2));
    let mut degree = vec![1usize; m];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n);
    for &s in seq {
        let leaf = (0..m).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..m).filter(|&v| degree[v] == 1).collect();
    if rest.len() == 2 {
        edges.push((rest[0], rest[1]));
    }
    edges.sort_unstable();
    edges
}

/// Inverse of [`prufer_decode`].
pub fn prufer_encode(edges: &[(usize, usize)], n: usize) -> Vec<usize> {
    let m = n + 1;
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut removed = vec![false; m];
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut seq = Vec::with_capacity(n.saturating_sub(1));
    for _ in 0..n.saturating_sub(1) {
        let leaf = (0..m).find(|&v| !removed[v] && degree[v] == 1).expect("trees have leaves");
        let parent = adj[leaf].iter().copied().find(|&u| !removed[u]).expect("leaf has a neighbour");
        seq.push(parent);
        removed[leaf] = true;
        degree[parent] -= 1;
    }
    seq
}

/// Every labelled tree on `{0..n}`, in Prüfer-sequence order.
pub fn enumerate_labelled_trees(n: usize) -> Result<impl Iterator<Item = Vec<(usize, usize)>>> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(Error::BudgetExceeded {
            what: "labelled tree enumeration",
            needed: n as u128,
            budget: MAX_ENUMERATION_N as u128,
        });
    }
    let m = n + 1;
    let len = n - 1;
    let total = m.pow(len as u32);
    Ok((0..total).map(move |mut k| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = k % m;
            k /= m;
        }
        prufer_decode(&seq, n)
    }))
}

/// `counts[d]` is the number of trees on `{0..n}` with `deg(0) = d`, found by
/// enumeration.
pub fn root_degree_histogram(n: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n + 1];
    for tree in enumerate_labelled_trees(n)? {
        let d = tree.iter().filter(|&&(a, _)| a == 0).count();
        counts[d] += 1;
    }
    Ok(counts)
}

/// `T_n(d) = C(n-1, d-1) · n^(n-d)`, zero outside `1 ≤ d ≤ n`.
pub fn count_trees_root_degree<C: CountScalar>(n: u64, d: u64) -> C {
    if d == 0 || d > n {
        return C::zero();
    }
    binomial::<C>(n - 1, d - 1) * pow(from_u64::<C>(n), n - d)
}
