//! Small named groups, built as permutation groups and re-indexed so that
//! elements are sorted lexicographically by their image vectors.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::FiniteGroup;
use crate::error::{Error, Result};

pub const CATALOG_NAMES: &[&str] = &[
    "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12", "s3", "s4", "s5", "d4",
    "d5", "q8", "a4", "a5",
];

/// Looks up a catalog group.
pub fn catalog(name: &str) -> Result<FiniteGroup> {
    let key = name.trim().to_ascii_lowercase();
    let group = match key.as_str() {
        "s3" => symmetric(3),
        "s4" => symmetric(4),
        "s5" => symmetric(5),
        "a4" => from_permutations(&[cycle(4, &[0, 1, 2]), cycle(4, &[1, 2, 3])]),
        "a5" => from_permutations(&[cycle(5, &[0, 1, 2, 3, 4]), cycle(5, &[0, 1, 2])]),
        "d4" => from_permutations(&[cycle(4, &[0, 1, 2, 3]), cycle(4, &[1, 3])]),
        "d5" => from_permutations(&[
            cycle(5, &[0, 1, 2, 3, 4]),
            compose(&cycle(5, &[1, 4]), &cycle(5, &[2, 3])),
        ]),
        // left regular representation of Q8 on {±1, ±i, ±j, ±k}
        "q8" => from_permutations(&[quaternion_left(1), quaternion_left(2)]),
        _ => match key.strip_prefix('c').and_then(|k| k.parse::<usize>().ok()) {
            Some(m) if (2..=12).contains(&m) => {
                let all: Vec<usize> = (0..m).collect();
                from_permutations(&[cycle(m, &all)])
            }
            _ => return Err(Error::UnknownGroup(name.to_string())),
        },
    };
    Ok(group.with_name(key))
}

fn symmetric(k: usize) -> FiniteGroup {
    let all: Vec<usize> = (0..k).collect();
    from_permutations(&[cycle(k, &all), cycle(k, &[0, 1])])
}

fn cycle(degree: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for w in 0..points.len() {
        p[points[w]] = points[(w + 1) % points.len()];
    }
    p
}

/// `(a ∘ b)(x) = a(b(x))`
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

/// Quaternion units encoded as `sign * 4 + unit`, unit 0..4 = 1, i, j, k.
fn quaternion_mul(x: usize, y: usize) -> usize {
    // unit products: row * column = (sign, unit)
    const TABLE: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (sx, ux) = (x / 4, x % 4);
    let (sy, uy) = (y / 4, y % 4);
    let (s, u) = TABLE[ux][uy];
    ((sx + sy + s) % 2) * 4 + u
}

fn quaternion_left(unit: usize) -> Vec<usize> {
    (0..8).map(|x| quaternion_mul(unit, x)).collect()
}

/// Closes the generators under composition and tabulates the result.
fn from_permutations(gens: &[Vec<usize>]) -> FiniteGroup {
    let degree = gens[0].len();
    let identity: Vec<usize> = (0..degree).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = compose(&p, g);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    // lexicographic order puts the identity first
    let elements: Vec<Vec<usize>> = seen.into_iter().collect();
    let index: HashMap<&[usize], usize> =
        elements.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let order = elements.len();
    let mut mul = Vec::with_capacity(order * order);
    for a in &elements {
        for b in &elements {
            mul.push(index[compose(a, b).as_slice()]);
        }
    }
    FiniteGroup::from_flat("perm", order, mul).expect("permutation closure is a group")
}
