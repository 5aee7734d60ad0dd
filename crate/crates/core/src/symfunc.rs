//! Chromatic symmetric functions at finite weight.
//!
//! A [`SymmetricFunction`] is a sparse map from integer partitions of `n` to
//! exact integer coefficients in one of three bases. The monomial expansion
//! of `X_G` is computed from stable partitions: every stable partition with
//! block-size type `λ` contributes one augmented monomial `m̃_λ`. The
//! power-sum expansion uses the signed edge-subset sum and serves as an
//! independent route to the same function.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CsfError, Result};
use crate::graph::{Graph, Tree};
use crate::partition::IntegerPartition;

/// Exact coefficient type. Arithmetic is checked; overflow is an error.
pub type Coeff = i128;

/// Largest vertex count accepted by the stable-partition expansion.
pub const MAX_CSF_N: usize = 14;
/// Largest edge count accepted by the edge-subset expansion.
pub const MAX_POWERSUM_EDGES: usize = 24;
/// Largest vertex count accepted by [`stable_partitions`].
pub const MAX_STABLE_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "am")]
    AugmentedMonomial,
    #[serde(rename = "p")]
    PowerSum,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::AugmentedMonomial => "am",
            Basis::PowerSum => "p",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricFunction {
    n: usize,
    basis: Basis,
    terms: BTreeMap<IntegerPartition, Coeff>,
}

impl SymmetricFunction {
    pub fn zero(n: usize, basis: Basis) -> Self {
        SymmetricFunction { n, basis, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        n: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (IntegerPartition, Coeff)>,
    ) -> Result<Self> {
        let mut f = Self::zero(n, basis);
        for (p, c) in terms {
            f.add_term(p, c)?;
        }
        Ok(f)
    }

    /// Adds `c` to the coefficient of `p`, dropping the term if it cancels.
    pub fn add_term(&mut self, p: IntegerPartition, c: Coeff) -> Result<()> {
        if p.weight() != self.n {
            return Err(CsfError::InvalidSymmetricFunction(format!("partition {p} does not have weight {}", self.n)));
        }
        if c == 0 {
            return Ok(());
        }
        let sum = self.coeff(&p).checked_add(c).ok_or(CsfError::Overflow("coefficient sum"))?;
        if sum == 0 {
            self.terms.remove(&p);
        } else {
            self.terms.insert(p, sum);
        }
        Ok(())
    }

    pub fn weight(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, p: &IntegerPartition) -> Coeff {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Terms in canonical order (lexicographically larger partitions first).
    pub fn terms(&self) -> impl Iterator<Item = (&IntegerPartition, Coeff)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SymmetricFunctionJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SymmetricFunctionJson =
            serde_json::from_str(text).map_err(|e| CsfError::InvalidSymmetricFunction(e.to_string()))?;
        raw.try_into()
    }
}

/// `m[2,1] + 6*m[1,1,1]`; the zero function prints as `0`.
impl fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (i, (p, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{sym}{p}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: IntegerPartition,
    coeff: Coeff,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct SymmetricFunctionJson {
    n: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl From<&SymmetricFunction> for SymmetricFunctionJson {
    fn from(f: &SymmetricFunction) -> Self {
        SymmetricFunctionJson {
            n: f.n,
            basis: f.basis,
            terms: f.terms().map(|(p, c)| TermJson { partition: p.clone(), coeff: c }).collect(),
        }
    }
}

impl TryFrom<SymmetricFunctionJson> for SymmetricFunction {
    type Error = CsfError;
    fn try_from(raw: SymmetricFunctionJson) -> Result<Self> {
        let mut f = SymmetricFunction::zero(raw.n, raw.basis);
        for t in raw.terms {
            if f.terms.contains_key(&t.partition) {
                return Err(CsfError::InvalidSymmetricFunction(format!("partition {} listed twice", t.partition)));
            }
            f.add_term(t.partition, t.coeff)?;
        }
        Ok(f)
    }
}

impl Serialize for SymmetricFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymmetricFunctionJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymmetricFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SymmetricFunctionJson::deserialize(d)?;
        raw.try_into().map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Stable partitions

/// Depth-first walk over restricted-growth strings where a vertex may only
/// join a block containing none of its neighbours.
struct StableWalker {
    n: usize,
    adj: Vec<u64>,
    assign: Vec<usize>,
    masks: Vec<u64>,
    sizes: Vec<u32>,
    blocks: usize,
    started: bool,
    done: bool,
}

impl StableWalker {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_STABLE_N {
            return Err(CsfError::CapExceeded { what: "vertex count", value: n, cap: MAX_STABLE_N });
        }
        let adj = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w))).collect();
        Ok(StableWalker {
            n,
            adj,
            assign: vec![0; n],
            masks: vec![0; n],
            sizes: vec![0; n],
            blocks: 0,
            started: false,
            done: false,
        })
    }

    fn place(&mut self, v: usize, b: usize) {
        if b == self.blocks {
            self.blocks += 1;
            self.masks[b] = 0;
            self.sizes[b] = 0;
        }
        self.assign[v] = b;
        self.masks[b] |= 1 << v;
        self.sizes[b] += 1;
    }

    fn unplace(&mut self, v: usize) -> usize {
        let b = self.assign[v];
        self.masks[b] &= !(1 << v);
        self.sizes[b] -= 1;
        if self.sizes[b] == 0 {
            debug_assert_eq!(b + 1, self.blocks);
            self.blocks -= 1;
        }
        b
    }

    fn try_place(&mut self, v: usize, start: usize) -> bool {
        for b in start..=self.blocks {
            if b == self.blocks || self.masks[b] & self.adj[v] == 0 {
                self.place(v, b);
                return true;
            }
        }
        false
    }

    /// Moves to the next stable partition; false once exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.n == 0 {
            self.done = self.started;
            self.started = true;
            return !self.done;
        }
        let (mut v, mut start) = if self.started {
            let v = self.n - 1;
            (v, self.unplace(v) + 1)
        } else {
            self.started = true;
            (0, 0)
        };
        loop {
            if self.try_place(v, start) {
                if v + 1 == self.n {
                    return true;
                }
                v += 1;
                start = 0;
            } else if v == 0 {
                self.done = true;
                return false;
            } else {
                v -= 1;
                start = self.unplace(v) + 1;
            }
        }
    }

    fn block_sizes(&self) -> &[u32] {
        &self.sizes[..self.blocks]
    }

    fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for v in 0..self.n {
            out[self.assign[v]].push(v);
        }
        out
    }
}

/// Iterator over all partitions of the vertex set into independent blocks.
/// Blocks are sorted and ordered by their smallest vertex.
pub struct StablePartitions(StableWalker);

impl Iterator for StablePartitions {
    type Item = Vec<Vec<usize>>;
    fn next(&mut self) -> Option<Self::Item> {
        self.0.advance().then(|| self.0.blocks())
    }
}

pub fn stable_partitions(g: &Graph) -> Result<StablePartitions> {
    Ok(StablePartitions(StableWalker::new(g)?))
}

// ---------------------------------------------------------------------------
// Expansions

fn factorial(k: usize) -> Result<Coeff> {
    (1..=k as Coeff).try_fold(1 as Coeff, |acc, i| acc.checked_mul(i)).ok_or(CsfError::Overflow("factorial"))
}

fn multiplicity_factor(p: &IntegerPartition) -> Result<Coeff> {
    p.multiplicities().into_iter().try_fold(1 as Coeff, |acc, (_, m)| {
        acc.checked_mul(factorial(m)?).ok_or(CsfError::Overflow("multiplicity factor"))
    })
}

/// Packs non-increasing block sizes (each < 16, at most 16 of them) into a key.
fn pack_sizes(sorted: &[u32]) -> u64 {
    sorted.iter().fold(0u64, |k, &s| (k << 4) | s as u64)
}

fn unpack_sizes(mut key: u64) -> Vec<u32> {
    let mut parts = Vec::new();
    while key != 0 {
        parts.push((key & 0xf) as u32);
        key >>= 4;
    }
    parts.reverse();
    parts
}

/// Number of stable partitions per block-size type, in the augmented
/// monomial basis.
pub fn csf_augmented(g: &Graph) -> Result<SymmetricFunction> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(CsfError::Empty);
    }
    if n > MAX_CSF_N {
        return Err(CsfError::CapExceeded { what: "vertex count", value: n, cap: MAX_CSF_N });
    }
    let mut walker = StableWalker::new(g)?;
    let mut counts: HashMap<u64, u64> = HashMap::new();
    let mut scratch = Vec::with_capacity(n);
    while walker.advance() {
        scratch.clear();
        scratch.extend_from_slice(walker.block_sizes());
        scratch.sort_unstable_by(|a, b| b.cmp(a));
        *counts.entry(pack_sizes(&scratch)).or_insert(0) += 1;
    }
    let terms = counts.into_iter().map(|(k, c)| (IntegerPartition::from_sorted_unchecked(unpack_sizes(k)), c as Coeff));
    SymmetricFunction::from_terms(n, Basis::AugmentedMonomial, terms)
}

/// `X_G` in the monomial basis.
pub fn csf_monomial(g: &Graph) -> Result<SymmetricFunction> {
    to_monomial(&csf_augmented(g)?)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn component_type(
    n: usize,
    edges: &[(usize, usize)],
    subset: u64,
    parent: &mut Vec<usize>,
    size: &mut Vec<u32>,
) -> Vec<u32> {
    parent.clear();
    parent.extend(0..n);
    size.clear();
    size.resize(n, 1);
    let mut bits = subset;
    while bits != 0 {
        let e = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (a, b) = (find(parent, edges[e].0), find(parent, edges[e].1));
        if a != b {
            let (big, small) = if size[a] >= size[b] { (a, b) } else { (b, a) };
            parent[small] = big;
            size[big] += size[small];
        }
    }
    let mut parts: Vec<u32> = (0..n).filter(|&v| parent[v] == v).map(|v| size[v]).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// `X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}` where `λ(S)` lists the component
/// sizes of the spanning subgraph `(V, S)`.
pub fn csf_powersum(g: &Graph) -> Result<SymmetricFunction> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m > MAX_POWERSUM_EDGES {
        return Err(CsfError::CapExceeded { what: "edge count", value: m, cap: MAX_POWERSUM_EDGES });
    }
    let edges = g.edges();
    let total: u64 = 1 << m;
    const CHUNK: u64 = 1 << 12;
    let chunks = total.div_ceil(CHUNK);
    let merged: HashMap<Vec<u32>, i64> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local: HashMap<Vec<u32>, i64> = HashMap::new();
            let (mut parent, mut size) = (Vec::new(), Vec::new());
            for s in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
                *local.entry(component_type(n, edges, s, &mut parent, &mut size)).or_insert(0) += sign;
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let terms = merged.into_iter().map(|(k, c)| (IntegerPartition::from_sorted_unchecked(k), c as Coeff));
    SymmetricFunction::from_terms(n, Basis::PowerSum, terms)
}

/// Counts maps from the parts of `lambda` onto the positions of `mu` whose
/// fibres sum to the corresponding parts of `mu`. Positions with equal
/// remaining capacity are interchangeable, so the memo key sorts them.
struct TransitionCounter<'a> {
    parts: &'a [u32],
    memo: HashMap<(usize, Vec<u32>), Coeff>,
}

impl TransitionCounter<'_> {
    fn count(&mut self, i: usize, remaining: Vec<u32>) -> Result<Coeff> {
        if i == self.parts.len() {
            return Ok(if remaining.iter().all(|&r| r == 0) { 1 } else { 0 });
        }
        if let Some(&c) = self.memo.get(&(i, remaining.clone())) {
            return Ok(c);
        }
        let part = self.parts[i];
        let mut total: Coeff = 0;
        let mut j = 0;
        while j < remaining.len() {
            let value = remaining[j];
            let run = remaining[j..].iter().take_while(|&&r| r == value).count();
            if value >= part {
                let mut next = remaining.clone();
                next[j] = value - part;
                next.sort_unstable_by(|a, b| b.cmp(a));
                let ways = self.count(i + 1, next)?;
                total = ways
                    .checked_mul(run as Coeff)
                    .and_then(|w| total.checked_add(w))
                    .ok_or(CsfError::Overflow("power-sum transition"))?;
            }
            j += run;
        }
        self.memo.insert((i, remaining), total);
        Ok(total)
    }
}

/// Exact change of basis to the monomial basis at fixed weight.
pub fn to_monomial(f: &SymmetricFunction) -> Result<SymmetricFunction> {
    let n = f.weight();
    match f.basis() {
        Basis::Monomial => Ok(f.clone()),
        Basis::AugmentedMonomial => {
            let mut out = SymmetricFunction::zero(n, Basis::Monomial);
            for (p, c) in f.terms() {
                let c = c.checked_mul(multiplicity_factor(p)?).ok_or(CsfError::Overflow("augmented monomial"))?;
                out.add_term(p.clone(), c)?;
            }
            Ok(out)
        }
        Basis::PowerSum => {
            if n > MAX_CSF_N {
                return Err(CsfError::CapExceeded { what: "weight", value: n, cap: MAX_CSF_N });
            }
            let targets = IntegerPartition::all(n);
            let mut out = SymmetricFunction::zero(n, Basis::Monomial);
            for (lambda, c) in f.terms() {
                let mut counter = TransitionCounter { parts: lambda.parts(), memo: HashMap::new() };
                for mu in targets.iter().filter(|mu| mu.len() <= lambda.len()) {
                    let k = counter.count(0, mu.parts().to_vec())?;
                    if k != 0 {
                        let term = k.checked_mul(c).ok_or(CsfError::Overflow("power-sum expansion"))?;
                        out.add_term(mu.clone(), term)?;
                    }
                }
            }
            Ok(out)
        }
    }
}

pub fn csf_equal(a: &Tree, b: &Tree) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() {
        return Ok(false);
    }
    Ok(csf_monomial(a)? == csf_monomial(b)?)
}

/// Largest first part over the support of a monomial-basis function.
pub fn max_block_from_csf(f: &SymmetricFunction) -> Result<usize> {
    if f.basis() != Basis::Monomial {
        return Err(CsfError::UnsupportedBasis(f.basis().symbol()));
    }
    f.terms()
        .filter_map(|(p, _)| p.largest())
        .max()
        .map(|m| m as usize)
        .ok_or_else(|| CsfError::InvalidSymmetricFunction("empty function".into()))
}

fn falling(r: u64, k: usize) -> Result<Coeff> {
    if k as u64 > r {
        return Ok(0);
    }
    (0..k as u64)
        .try_fold(1 as Coeff, |acc, i| acc.checked_mul((r - i) as Coeff))
        .ok_or(CsfError::Overflow("falling factorial"))
}

/// Specialises `x_1 = … = x_r = 1` and all other variables to zero.
pub fn evaluate_ones(f: &SymmetricFunction, r: u64) -> Result<Coeff> {
    let mut total: Coeff = 0;
    for (p, c) in f.terms() {
        let value = match f.basis() {
            Basis::Monomial => falling(r, p.len())? / multiplicity_factor(p)?,
            Basis::AugmentedMonomial => falling(r, p.len())?,
            Basis::PowerSum => {
                (r as Coeff).checked_pow(p.len() as u32).ok_or(CsfError::Overflow("power-sum evaluation"))?
            }
        };
        total = value.checked_mul(c).and_then(|v| total.checked_add(v)).ok_or(CsfError::Overflow("evaluation"))?;
    }
    Ok(total)
}
