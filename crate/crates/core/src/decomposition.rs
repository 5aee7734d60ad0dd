//! Leaf decomposition of trees and maximum independent blocks.
//!
//! A level of the decomposition records the leaves of the current forest
//! and every vertex adjacent to a leaf; both sets are then deleted and the
//! process repeats until the remaining forest has maximum degree at most one.
//! That terminal forest becomes the final level: isolated vertices count as
//! leaves and each remaining edge contributes one leaf and one neighbour.

use serde::{Deserialize, Serialize};

use crate::error::{CsfError, Result};
use crate::graph::{Graph, Tree};

/// One level `(b_i, η_i)` with the vertices behind both counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub leaf_vertices: Vec<usize>,
    pub neighbor_vertices: Vec<usize>,
}

impl Level {
    pub fn b(&self) -> usize {
        self.leaf_vertices.len()
    }

    pub fn eta(&self) -> usize {
        self.neighbor_vertices.len()
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.b(), self.eta())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafDecomposition {
    pub levels: Vec<Level>,
    /// Number of degree-one vertices in the terminal forest.
    pub terminal_alpha: usize,
}

#[derive(Serialize, Deserialize)]
struct LevelJson {
    b: usize,
    eta: usize,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    levels: Vec<LevelJson>,
    alpha_correction: usize,
}

impl LeafDecomposition {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn counts(&self) -> Vec<(usize, usize)> {
        self.levels.iter().map(Level::counts).collect()
    }

    pub fn b_sequence(&self) -> Vec<usize> {
        self.levels.iter().map(Level::b).collect()
    }

    /// `b_1 ≥ η_1 ≥ b_2 ≥ η_2 ≥ …`
    pub fn chain_holds(&self) -> bool {
        let flat: Vec<usize> = self.levels.iter().flat_map(|l| [l.b(), l.eta()]).collect();
        flat.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_json(&self) -> String {
        let raw = DecompositionJson {
            levels: self.levels.iter().map(|l| LevelJson { b: l.b(), eta: l.eta() }).collect(),
            alpha_correction: self.terminal_alpha,
        };
        serde_json::to_string(&raw).expect("serializable")
    }
}

pub fn leaf_decomposition(t: &Tree) -> LeafDecomposition {
    decompose_forest(t.graph())
}

pub(crate) fn decompose_forest(g: &Graph) -> LeafDecomposition {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut levels = Vec::new();
    let alive_neighbor = |alive: &[bool], v: usize| g.neighbors(v).iter().copied().find(|&w| alive[w]);
    loop {
        let remaining: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        if remaining.is_empty() {
            return LeafDecomposition { levels, terminal_alpha: 0 };
        }
        if remaining.iter().all(|&v| deg[v] <= 1) {
            let mut level = Level { leaf_vertices: Vec::new(), neighbor_vertices: Vec::new() };
            let mut alpha = 0;
            for &v in &remaining {
                match deg[v] {
                    0 => level.leaf_vertices.push(v),
                    _ => {
                        alpha += 1;
                        let w = alive_neighbor(&alive, v).expect("degree-one vertex has a neighbour");
                        if v < w {
                            level.leaf_vertices.push(v);
                        } else {
                            level.neighbor_vertices.push(v);
                        }
                    }
                }
            }
            levels.push(level);
            return LeafDecomposition { levels, terminal_alpha: alpha };
        }
        let mut is_leaf = vec![false; n];
        let mut is_neighbor = vec![false; n];
        for &v in &remaining {
            if deg[v] != 1 {
                continue;
            }
            let w = alive_neighbor(&alive, v).expect("degree-one vertex has a neighbour");
            if deg[w] == 1 {
                // Isolated edge inside a larger forest: split it like a terminal edge.
                is_leaf[v.min(w)] = true;
                is_neighbor[v.max(w)] = true;
            } else {
                is_leaf[v] = true;
                is_neighbor[w] = true;
            }
        }
        let level = Level {
            leaf_vertices: remaining.iter().copied().filter(|&v| is_leaf[v]).collect(),
            neighbor_vertices: remaining.iter().copied().filter(|&v| is_neighbor[v]).collect(),
        };
        for &v in level.leaf_vertices.iter().chain(&level.neighbor_vertices) {
            alive[v] = false;
            for &w in g.neighbors(v) {
                if alive[w] {
                    deg[w] -= 1;
                }
            }
        }
        levels.push(level);
    }
}

/// `(b_i, η_i)` per level.
pub type LevelCounts = Vec<(usize, usize)>;

/// Pads both level sequences with `(0, 0)` to the longer depth.
pub fn padded_levels(d1: &[(usize, usize)], d2: &[(usize, usize)]) -> (LevelCounts, LevelCounts) {
    let r = d1.len().max(d2.len());
    let pad = |d: &[(usize, usize)]| {
        let mut v = d.to_vec();
        v.resize(r, (0, 0));
        v
    };
    (pad(d1), pad(d2))
}

/// `ρ = n − b_1 − η_1` with the vertices that are neither leaves nor
/// leaf neighbours of the tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RhoData {
    pub rho: usize,
    pub rho_vertices: Vec<usize>,
    pub is_path: bool,
}

pub fn rho_data(t: &Tree) -> RhoData {
    let d = leaf_decomposition(t);
    let first = &d.levels[0];
    let n = t.vertex_count();
    let mut removed = vec![false; n];
    for &v in first.leaf_vertices.iter().chain(&first.neighbor_vertices) {
        removed[v] = true;
    }
    let rho_vertices: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let induced = t.induced(&rho_vertices);
    let is_path = rho_vertices.len() <= 1
        || (induced.is_connected() && (0..induced.vertex_count()).all(|v| induced.degree(v) <= 2));
    RhoData { rho: rho_vertices.len(), rho_vertices, is_path }
}

/// Independence number of a forest by include/exclude dynamic programming.
pub fn alpha_mis(g: &Graph) -> Result<usize> {
    if !g.is_forest() {
        return Err(CsfError::HasCycle);
    }
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    // (best with v excluded, best with v included)
    let mut dp = vec![(0usize, 1usize); n];
    let mut total = 0;
    for root in 0..n {
        if visited[root] {
            continue;
        }
        let mut order = Vec::new();
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        for &u in order.iter().rev() {
            if u != root {
                let (ex, inc) = dp[u];
                let p = &mut dp[parent[u]];
                p.0 += ex.max(inc);
                p.1 += ex;
            }
        }
        total += dp[root].0.max(dp[root].1);
    }
    Ok(total)
}

/// Exhaustive independence number over all `2^n` vertex subsets.
pub fn alpha_exhaustive(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    const CAP: usize = 26;
    if n > CAP {
        return Err(CsfError::CapExceeded { what: "vertex count", value: n, cap: CAP });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w))).collect();
    let mut best = 0;
    for set in 0u32..(1u32 << n) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut rest = set;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & set != 0 {
                independent = false;
                break;
            }
        }
        if independent {
            best = size;
        }
    }
    Ok(best)
}

/// Independent set built from the decomposition: every level's leaf set.
pub fn max_block_greedy(t: &Tree) -> (usize, Vec<usize>) {
    let d = leaf_decomposition(t);
    let mut witness: Vec<usize> = d.levels.iter().flat_map(|l| l.leaf_vertices.iter().copied()).collect();
    witness.sort_unstable();
    (witness.len(), witness)
}

pub fn alpha_from_decomposition(d: &LeafDecomposition) -> usize {
    d.levels.iter().map(Level::b).sum()
}

/// `Σ b_i` over plain `(b, η)` counts.
pub fn alpha_from_counts(levels: &[(usize, usize)]) -> usize {
    levels.iter().map(|&(b, _)| b).sum()
}
