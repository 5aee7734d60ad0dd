//! Constructors for paths, stars, spiders and star connections, plus
//! exhaustive enumeration of free trees up to isomorphism.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{CsfError, Result};
use crate::graph::{as_tree, Graph, Tree};

/// Default upper bound on `n` for [`enumerate_free_trees`].
pub const MAX_ENUMERATE_N: usize = 16;

pub fn gen_path(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(CsfError::TooSmall { what: "path order", value: 0, min: 1 });
    }
    as_tree(Graph::new(n, (1..n).map(|i| (i - 1, i)))?)
}

/// Star `S_n`: vertex 0 is the center, `1..n` are the leaves.
pub fn gen_star(n: usize) -> Result<Tree> {
    if n < 2 {
        return Err(CsfError::TooSmall { what: "star order", value: n, min: 2 });
    }
    as_tree(Graph::new(n, (1..n).map(|i| (0, i)))?)
}

/// Leg lengths of a spider, measured in edges from each leaf to the center.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpiderSpec {
    pub legs: Vec<usize>,
}

impl SpiderSpec {
    pub fn new(legs: Vec<usize>) -> Result<Self> {
        let spec = SpiderSpec { legs };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.legs.len() < 3 {
            return Err(CsfError::InvalidSpider(format!("a spider needs at least 3 legs, got {}", self.legs.len())));
        }
        if self.legs.contains(&0) {
            return Err(CsfError::InvalidSpider("leg lengths must be positive".into()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.legs.iter().sum::<usize>()
    }

    /// Number of even legs and number of odd legs.
    pub fn parity_split(&self) -> (usize, usize) {
        let even = self.legs.iter().filter(|&&l| l % 2 == 0).count();
        (even, self.legs.len() - even)
    }
}

/// Center is vertex 0; each leg follows in spec order, numbered outwards.
pub fn gen_spider(spec: &SpiderSpec) -> Result<Tree> {
    spec.validate()?;
    let n = spec.vertex_count();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in &spec.legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    as_tree(Graph::new(n, edges)?)
}

/// One connection vertex: a non-center vertex shared by the listed stars.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gluing {
    pub stars: Vec<usize>,
    /// Leaf slot consumed in each listed star; auto-assigned when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slots: Option<Vec<usize>>,
}

impl Gluing {
    pub fn new(stars: Vec<usize>) -> Self {
        Gluing { stars, slots: None }
    }
}

/// Stars `S_{n_1}, ..., S_{n_r}` glued at shared leaf vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarConnectionSpec {
    #[serde(rename = "stars")]
    pub star_sizes: Vec<usize>,
    pub gluings: Vec<Gluing>,
}

/// A star connection resolved to concrete (star, slot) assignments.
#[derive(Clone, Debug)]
struct ResolvedGluings {
    /// `slots[g][j]` is the slot of `gluings[g].stars[j]`.
    slots: Vec<Vec<usize>>,
}

impl StarConnectionSpec {
    pub fn new(star_sizes: Vec<usize>, gluings: Vec<Gluing>) -> Self {
        StarConnectionSpec { star_sizes, gluings }
    }

    pub fn star_count(&self) -> usize {
        self.star_sizes.len()
    }

    pub fn connection_count(&self) -> usize {
        self.gluings.len()
    }

    /// Degree in the glued tree of each connection vertex.
    pub fn connection_degrees(&self) -> Vec<usize> {
        self.gluings.iter().map(|g| g.stars.len()).collect()
    }

    fn invalid(msg: impl Into<String>) -> CsfError {
        CsfError::InvalidStarConnection(msg.into())
    }

    fn resolve(&self) -> Result<ResolvedGluings> {
        let r = self.star_sizes.len();
        if r < 2 {
            return Err(Self::invalid(format!("need at least 2 stars, got {r}")));
        }
        if let Some((k, &sz)) = self.star_sizes.iter().enumerate().find(|(_, &s)| s < 3) {
            return Err(Self::invalid(format!("star {k} has size {sz}; every star needs at least 3 vertices")));
        }
        let mut used: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); r];
        let mut pairs = BTreeSet::new();
        let mut resolved = Vec::with_capacity(self.gluings.len());
        for (gi, g) in self.gluings.iter().enumerate() {
            if g.stars.len() < 2 {
                return Err(Self::invalid(format!("gluing {gi} joins fewer than 2 stars")));
            }
            let distinct: BTreeSet<_> = g.stars.iter().collect();
            if distinct.len() != g.stars.len() {
                return Err(Self::invalid(format!("gluing {gi} lists a star twice")));
            }
            if let Some(&k) = g.stars.iter().find(|&&k| k >= r) {
                return Err(Self::invalid(format!("gluing {gi} names star {k}, only {r} stars")));
            }
            if let Some(slots) = &g.slots {
                if slots.len() != g.stars.len() {
                    return Err(Self::invalid(format!(
                        "gluing {gi} has {} slots for {} stars",
                        slots.len(),
                        g.stars.len()
                    )));
                }
            }
            for (a, &i) in g.stars.iter().enumerate() {
                for &j in &g.stars[a + 1..] {
                    if !pairs.insert((i.min(j), i.max(j))) {
                        return Err(Self::invalid(format!("stars {i} and {j} share more than one vertex")));
                    }
                }
            }
            let mut slots = Vec::with_capacity(g.stars.len());
            for (j, &k) in g.stars.iter().enumerate() {
                let leaf_slots = self.star_sizes[k] - 1;
                let slot = match &g.slots {
                    Some(s) => s[j],
                    None => (0..leaf_slots)
                        .find(|s| !used[k].contains(s))
                        .ok_or_else(|| Self::invalid(format!("star {k} has no free leaf slot")))?,
                };
                if slot >= leaf_slots {
                    return Err(Self::invalid(format!("slot {slot} out of range for star {k}")));
                }
                if !used[k].insert(slot) {
                    return Err(Self::invalid(format!("slot {slot} of star {k} is used twice")));
                }
                slots.push(slot);
            }
            resolved.push(slots);
        }
        Ok(ResolvedGluings { slots: resolved })
    }

    /// Predicted vertex count `sum n_k - (r - 1)`.
    pub fn predicted_vertex_count(&self) -> usize {
        let r = self.star_sizes.len();
        self.star_sizes.iter().sum::<usize>() + 1 - r.max(1)
    }
}

/// A built star connection with the roles of its vertices.
#[derive(Clone, Debug)]
pub struct StarConnection {
    pub tree: Tree,
    /// Center of each star, in spec order.
    pub centers: Vec<usize>,
    /// Vertex realising each gluing, in spec order.
    pub connection_vertices: Vec<usize>,
}

/// Builds the star connection. Stars are laid out in spec order, each
/// center first followed by its not-yet-numbered leaf slots.
pub fn gen_star_connection(spec: &StarConnectionSpec) -> Result<Tree> {
    build_star_connection(spec).map(|sc| sc.tree)
}

pub fn build_star_connection(spec: &StarConnectionSpec) -> Result<StarConnection> {
    let resolved = spec.resolve()?;
    let mut glued: HashMap<(usize, usize), usize> = HashMap::new();
    for (gi, g) in spec.gluings.iter().enumerate() {
        for (&k, &slot) in g.stars.iter().zip(&resolved.slots[gi]) {
            glued.insert((k, slot), gi);
        }
    }
    let mut gluing_vertex: Vec<Option<usize>> = vec![None; spec.gluings.len()];
    let mut edges = Vec::new();
    let mut centers = Vec::with_capacity(spec.star_sizes.len());
    let mut next = 0;
    for (k, &size) in spec.star_sizes.iter().enumerate() {
        let center = next;
        centers.push(center);
        next += 1;
        for slot in 0..size - 1 {
            let v = match glued.get(&(k, slot)) {
                Some(&gi) => *gluing_vertex[gi].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                }),
                None => {
                    next += 1;
                    next - 1
                }
            };
            edges.push((center, v));
        }
    }
    let g = Graph::new(next, edges)?;
    let connection_vertices = gluing_vertex.into_iter().map(|v| v.expect("every gluing is numbered")).collect();
    match as_tree(g) {
        Ok(tree) => Ok(StarConnection { tree, centers, connection_vertices }),
        Err(CsfError::HasCycle) => Err(StarConnectionSpec::invalid("gluings create a cycle")),
        Err(CsfError::NotConnected) => Err(StarConnectionSpec::invalid("gluings leave the stars disconnected")),
        Err(e) => Err(e),
    }
}

/// Reads the leg lengths of `t` if it has exactly one vertex of degree > 2.
pub fn recognize_spider(t: &Tree) -> Option<SpiderSpec> {
    let mut hubs = (0..t.vertex_count()).filter(|&v| t.degree(v) > 2);
    let center = hubs.next()?;
    if hubs.next().is_some() {
        return None;
    }
    let mut legs: Vec<usize> = t
        .neighbors(center)
        .iter()
        .map(|&first| {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            while t.degree(cur) == 2 {
                let nxt = t.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap_or(cur);
                prev = cur;
                cur = nxt;
                len += 1;
            }
            len
        })
        .collect();
    legs.sort_unstable_by(|a, b| b.cmp(a));
    Some(SpiderSpec { legs })
}

/// Recovers a star-connection description of `t` when one side of its
/// bipartition contains no leaves (those vertices are the star centers).
pub fn recognize_star_connection(t: &Tree) -> Option<StarConnectionSpec> {
    let n = t.vertex_count();
    if n < 3 {
        return None;
    }
    let mut side = vec![usize::MAX; n];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &w in t.neighbors(u) {
            if side[w] == usize::MAX {
                side[w] = 1 - side[u];
                stack.push(w);
            }
        }
    }
    let center_side = (0..2).find(|&s| (0..n).all(|v| side[v] != s || t.degree(v) >= 2))?;
    let centers: Vec<usize> = (0..n).filter(|&v| side[v] == center_side).collect();
    if centers.len() < 2 {
        return None;
    }
    let star_of: BTreeMap<usize, usize> = centers.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let star_sizes = centers.iter().map(|&c| t.degree(c) + 1).collect();
    let gluings = (0..n)
        .filter(|&v| side[v] != center_side && t.degree(v) >= 2)
        .map(|v| {
            let stars: Vec<usize> = t.neighbors(v).iter().map(|c| star_of[c]).collect();
            let slots =
                t.neighbors(v).iter().map(|c| t.neighbors(*c).iter().position(|&w| w == v).unwrap_or(0)).collect();
            Gluing { stars, slots: Some(slots) }
        })
        .collect();
    Some(StarConnectionSpec { star_sizes, gluings })
}

// Free-tree enumeration over level sequences of center-rooted trees
// (Wright, Richmond, Odlyzko and McKay, 1986).

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits a level sequence into the first principal subtree (levels
/// shifted down by one) and the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().filter(|(_, &l)| l == 1).nth(1).map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn next_tree(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split_tree(&candidate);
        let left_height = left.iter().copied().max().unwrap_or(0);
        let rest_height = rest.iter().copied().max().unwrap_or(0);
        let valid = rest_height > left_height
            || (rest_height == left_height && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
        if valid {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted_tree(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split_tree(&next);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (slot, level) in next[len - (h + 1)..].iter_mut().zip(1..) {
                *slot = level;
            }
        }
        candidate = next;
    }
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut last_at_level: Vec<usize> = Vec::new();
    for (v, &level) in layout.iter().enumerate() {
        if level > 0 {
            edges.push((last_at_level[level - 1], v));
        }
        last_at_level.truncate(level);
        last_at_level.push(v);
    }
    as_tree(Graph::new(layout.len(), edges).expect("level sequence yields a simple graph"))
        .expect("level sequence yields a tree")
}

/// Streams one representative per isomorphism class of trees on `n`
/// vertices, in a fixed order.
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
    first: bool,
}

impl FreeTrees {
    fn new(n: usize) -> Self {
        let layout = (n >= 2).then(|| (0..=n / 2).chain(1..n.div_ceil(2)).collect());
        FreeTrees { n, layout, first: true }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.n == 1 {
            if self.first {
                self.first = false;
                return Some(as_tree(Graph::empty(1)).expect("single vertex"));
            }
            return None;
        }
        let current = self.layout.take()?;
        let current = if self.first {
            self.first = false;
            current
        } else {
            next_rooted_tree(&current, None)?
        };
        let accepted = next_tree(current)?;
        let tree = layout_to_tree(&accepted);
        self.layout = Some(accepted);
        Some(tree)
    }
}

pub fn enumerate_free_trees(n: usize) -> Result<Vec<Tree>> {
    enumerate_free_trees_with_cap(n, MAX_ENUMERATE_N)
}

pub fn enumerate_free_trees_with_cap(n: usize, cap: usize) -> Result<Vec<Tree>> {
    Ok(free_trees(n, cap)?.collect())
}

pub fn free_trees(n: usize, cap: usize) -> Result<FreeTrees> {
    if n == 0 {
        return Err(CsfError::TooSmall { what: "tree order", value: 0, min: 1 });
    }
    if n > cap {
        return Err(CsfError::CapExceeded { what: "tree order", value: n, cap });
    }
    Ok(FreeTrees::new(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_code, trees_isomorphic};

    #[test]
    fn paths_and_stars() {
        assert_eq!(gen_path(1).unwrap().vertex_count(), 1);
        assert_eq!(gen_path(2).unwrap().edge_count(), 1);
        let p4 = gen_path(4).unwrap();
        assert_eq!(p4.leaves().len(), 2);
        assert!(gen_path(0).is_err());

        let s4 = gen_star(4).unwrap();
        assert_eq!(s4.leaves(), vec![1, 2, 3]);
        assert_eq!(gen_star(2).unwrap().edges(), &[(0, 1)]);
        assert!(matches!(gen_star(1), Err(CsfError::TooSmall { .. })));
    }

    #[test]
    fn spiders() {
        let s = gen_spider(&SpiderSpec::new(vec![1, 1, 1]).unwrap()).unwrap();
        assert!(trees_isomorphic(&s, &gen_star(4).unwrap()));
        let s = gen_spider(&SpiderSpec { legs: vec![2, 2, 2] }).unwrap();
        assert_eq!(s.vertex_count(), 7);
        assert_eq!(s.degree(0), 3);
        assert_eq!((0..7).filter(|&v| s.degree(v) > 2).count(), 1);
        assert!(SpiderSpec::new(vec![1, 1]).is_err());
        assert!(SpiderSpec::new(vec![1, 0, 2]).is_err());
        assert_eq!(SpiderSpec { legs: vec![4, 2, 1] }.parity_split(), (2, 1));
    }

    #[test]
    fn spider_recognition_roundtrip() {
        let spec = SpiderSpec { legs: vec![3, 1, 2, 2] };
        let t = gen_spider(&spec).unwrap();
        assert_eq!(recognize_spider(&t).unwrap().legs, vec![3, 2, 2, 1]);
        assert!(recognize_spider(&gen_path(5).unwrap()).is_none());
    }

    fn example_chain() -> StarConnectionSpec {
        StarConnectionSpec::new(
            vec![4, 5, 3, 4],
            vec![Gluing::new(vec![0, 1]), Gluing::new(vec![1, 2]), Gluing::new(vec![2, 3])],
        )
    }

    #[test]
    fn star_connection_chain() {
        let t = gen_star_connection(&example_chain()).unwrap();
        assert_eq!(t.vertex_count(), 13);
        assert_eq!(example_chain().predicted_vertex_count(), 13);
        let two_s3 = StarConnectionSpec::new(vec![3, 3], vec![Gluing::new(vec![0, 1])]);
        let t = gen_star_connection(&two_s3).unwrap();
        assert_eq!(t.vertex_count(), 5);
        assert!(trees_isomorphic(&t, &gen_path(5).unwrap()));
    }

    #[test]
    fn star_connection_three_way_vertex() {
        let spec = StarConnectionSpec::new(vec![3, 4, 3], vec![Gluing::new(vec![0, 1, 2])]);
        let t = gen_star_connection(&spec).unwrap();
        assert_eq!(t.vertex_count(), 8);
        assert_eq!((0..8).filter(|&v| t.degree(v) == 3).count(), 2);
    }

    #[test]
    fn star_connection_errors() {
        let small = StarConnectionSpec::new(vec![2, 3], vec![Gluing::new(vec![0, 1])]);
        assert!(gen_star_connection(&small).is_err());
        let single = StarConnectionSpec::new(vec![4], vec![]);
        assert!(gen_star_connection(&single).is_err());
        let disconnected = StarConnectionSpec::new(vec![3, 3, 3], vec![Gluing::new(vec![0, 1])]);
        assert!(
            matches!(gen_star_connection(&disconnected), Err(CsfError::InvalidStarConnection(m)) if m.contains("disconnected"))
        );
        let overlap = StarConnectionSpec::new(vec![4, 4], vec![Gluing::new(vec![0, 1]), Gluing::new(vec![1, 0])]);
        assert!(
            matches!(gen_star_connection(&overlap), Err(CsfError::InvalidStarConnection(m)) if m.contains("more than one"))
        );
        let cycle = StarConnectionSpec::new(
            vec![3, 3, 3],
            vec![Gluing::new(vec![0, 1]), Gluing::new(vec![1, 2]), Gluing::new(vec![2, 0])],
        );
        assert!(matches!(gen_star_connection(&cycle), Err(CsfError::InvalidStarConnection(m)) if m.contains("cycle")));
        let reused = StarConnectionSpec::new(
            vec![3, 3, 3],
            vec![
                Gluing { stars: vec![0, 1], slots: Some(vec![0, 0]) },
                Gluing { stars: vec![0, 2], slots: Some(vec![0, 0]) },
            ],
        );
        assert!(gen_star_connection(&reused).is_err());
        let exhausted = StarConnectionSpec::new(
            vec![3, 3, 3, 3],
            vec![Gluing::new(vec![0, 1]), Gluing::new(vec![0, 2]), Gluing::new(vec![0, 3])],
        );
        assert!(gen_star_connection(&exhausted).is_err());
    }

    #[test]
    fn star_connection_json_form() {
        let json = r#"{"stars":[4,5,3,4],"gluings":[{"stars":[0,1]},{"stars":[1,2]},{"stars":[2,3]}]}"#;
        let spec: StarConnectionSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec, example_chain());
        assert_eq!(serde_json::to_string(&spec).unwrap(), json);
        let spider: SpiderSpec = serde_json::from_str(r#"{"legs":[2,2,2]}"#).unwrap();
        assert_eq!(spider.legs, vec![2, 2, 2]);
    }

    #[test]
    fn star_connection_recognition_roundtrip() {
        let t = gen_star_connection(&example_chain()).unwrap();
        let spec = recognize_star_connection(&t).unwrap();
        assert_eq!(spec.star_count(), 4);
        let rebuilt = gen_star_connection(&spec).unwrap();
        assert!(trees_isomorphic(&t, &rebuilt));
        // P4 has a leaf on each side of its bipartition.
        assert!(recognize_star_connection(&gen_path(4).unwrap()).is_none());
        // A single star has only one center.
        assert!(recognize_star_connection(&gen_star(5).unwrap()).is_none());
    }

    #[test]
    fn free_tree_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| enumerate_free_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_free_trees(17).is_err());
        assert_eq!(free_trees(17, 17).unwrap().take(3).count(), 3);
    }

    #[test]
    fn free_trees_are_pairwise_distinct() {
        for n in 1..=11 {
            let trees = enumerate_free_trees(n).unwrap();
            let codes: BTreeSet<_> = trees.iter().map(canonical_code).collect();
            assert_eq!(codes.len(), trees.len(), "duplicate class at n = {n}");
            assert!(trees.iter().all(|t| t.vertex_count() == n));
        }
    }

    #[test]
    fn free_tree_order_is_deterministic() {
        let a: Vec<_> = enumerate_free_trees(9).unwrap();
        let b: Vec<_> = enumerate_free_trees(9).unwrap();
        assert_eq!(a, b);
    }
}
