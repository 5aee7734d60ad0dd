//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use csf_core::{Gluing, Graph, StarConnectionSpec};
use rand::Rng;

/// Decodes a Prüfer sequence over `0..n` into an edge list.
pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    if n == 1 {
        return vec![];
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Calls `f` on every labelled tree on `n` vertices (`n^(n-2)` of them).
pub fn for_each_labelled_tree(n: usize, mut f: impl FnMut(&[(usize, usize)])) {
    if n <= 2 {
        f(&prufer_edges(&[], n));
        return;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        f(&prufer_edges(&seq, n));
        let mut i = 0;
        while i < len {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            return;
        }
    }
}

fn rooted_form(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&u| u != parent).map(|&u| rooted_form(adj, u, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism-class key: the smallest rooted encoding over every root.
pub fn oracle_form(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n).map(|r| rooted_form(&adj, r, usize::MAX)).min().unwrap()
}

/// Number of isomorphism classes of trees on `n` vertices, via Prüfer codes.
pub fn prufer_class_count(n: usize) -> usize {
    let mut classes = BTreeSet::new();
    for_each_labelled_tree(n, |e| {
        classes.insert(oracle_form(n, e));
    });
    classes.len()
}

fn proper(g: &Graph, colour: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colour[u] != colour[v])
}

/// Counts proper colourings with `k` colours by trying all `k^n` maps.
pub fn count_proper_colourings(g: &Graph, k: usize) -> u128 {
    let n = g.vertex_count();
    if k == 0 {
        return u128::from(n == 0);
    }
    let mut colour = vec![0usize; n];
    let mut count = 0;
    loop {
        if proper(g, &colour) {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            colour[i] += 1;
            if colour[i] < k {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
    }
}

/// Monomial coefficients of the chromatic symmetric function: the number
/// of proper colourings with exactly `λ_i` vertices of colour `i`.
pub fn colouring_coefficients(g: &Graph) -> BTreeMap<Vec<u32>, i128> {
    let n = g.vertex_count();
    let mut out = BTreeMap::new();
    let mut colour = vec![0usize; n];
    loop {
        if proper(g, &colour) {
            let mut sizes = vec![0u32; n];
            for &c in &colour {
                sizes[c] += 1;
            }
            // Only the colourings whose class sizes are already sorted
            // descending count towards x^λ for a partition λ.
            let used: Vec<u32> = sizes.iter().copied().take_while(|&s| s > 0).collect();
            if sizes[used.len()..].iter().all(|&s| s == 0) && used.windows(2).all(|w| w[0] >= w[1]) {
                *out.entry(used).or_insert(0) += 1;
            }
        }
        let mut i = 0;
        while i < n {
            colour[i] += 1;
            if colour[i] < n {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}

/// Power-sum expansion straight from the subset formula.
pub fn subset_powersum(g: &Graph) -> BTreeMap<Vec<u32>, i128> {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut out = BTreeMap::new();
    for mask in 0u64..(1 << edges.len()) {
        let mut label: Vec<usize> = (0..n).collect();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (label[u], label[v]);
                for l in label.iter_mut() {
                    if *l == b {
                        *l = a;
                    }
                }
            }
        }
        let mut sizes: BTreeMap<usize, u32> = BTreeMap::new();
        for &l in &label {
            *sizes.entry(l).or_insert(0) += 1;
        }
        let mut lambda: Vec<u32> = sizes.into_values().collect();
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *out.entry(lambda).or_insert(0) += sign;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// A random valid star connection with at most `max_vertices` vertices.
pub fn random_star_spec(rng: &mut impl Rng, max_vertices: usize) -> StarConnectionSpec {
    loop {
        let r = rng.gen_range(2..=5);
        let mut gluings: Vec<Vec<usize>> = Vec::new();
        for k in 1..r {
            let parent = rng.gen_range(0..k);
            let shared: Vec<usize> = (0..gluings.len()).filter(|&g| gluings[g].contains(&parent)).collect();
            if !shared.is_empty() && rng.gen_bool(0.3) {
                let g = shared[rng.gen_range(0..shared.len())];
                gluings[g].push(k);
            } else {
                gluings.push(vec![parent, k]);
            }
        }
        let mut sizes: Vec<usize> = (0..r)
            .map(|k| {
                let involvement = gluings.iter().filter(|g| g.contains(&k)).count();
                (involvement + 1).max(3) + rng.gen_range(0..3)
            })
            .collect();
        let total = |s: &[usize]| s.iter().sum::<usize>() + 1 - r;
        while total(&sizes) > max_vertices {
            let k = rng.gen_range(0..r);
            let involvement = gluings.iter().filter(|g| g.contains(&k)).count();
            if sizes[k] > (involvement + 1).max(3) {
                sizes[k] -= 1;
            } else if sizes
                .iter()
                .enumerate()
                .all(|(j, &s)| s <= (gluings.iter().filter(|g| g.contains(&j)).count() + 1).max(3))
            {
                break;
            }
        }
        if total(&sizes) <= max_vertices {
            return StarConnectionSpec::new(sizes, gluings.into_iter().map(Gluing::new).collect());
        }
    }
}
