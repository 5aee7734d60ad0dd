//! Checkers for the distinguishing criteria and the closed-form block
//! maxima of star connections and spiders.
//!
//! Every checker returns a [`TheoremVerdict`]. An applicable verdict claims
//! that the two trees have different chromatic symmetric functions because
//! their maximum independent blocks satisfy `m1 > m2`; the survey checks
//! those claims against the exact expansion.

use std::fmt;

use serde::Serialize;

use crate::decomposition::{alpha_exhaustive, alpha_mis, leaf_decomposition, padded_levels, rho_data, RhoData};
use crate::error::{CsfError, Result};
use crate::generators::{build_star_connection, gen_spider, SpiderSpec, StarConnectionSpec};
use crate::graph::{canonical_code, CanonicalCode, Tree};
use crate::partition::IntegerPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "LEAVES_RHO")]
    LeavesRho,
    #[serde(rename = "COMPONENTWISE")]
    Componentwise,
    #[serde(rename = "SUMMED")]
    Summed,
    #[serde(rename = "STAR_COUNT")]
    StarCount,
    #[serde(rename = "SPIDER_FORMULA")]
    SpiderFormula,
}

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::LeavesRho => "LEAVES_RHO",
            TheoremId::Componentwise => "COMPONENTWISE",
            TheoremId::Summed => "SUMMED",
            TheoremId::StarCount => "STAR_COUNT",
            TheoremId::SpiderFormula => "SPIDER_FORMULA",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictStatus {
    NotApplicable,
    Applicable,
}

/// How the `ρ_1 < ρ_2` family hypothesis evaluates under each reading of
/// its quantifier over `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Case4Readings {
    /// Every `k ∈ ℕ, k ≠ 2` must satisfy both the range and the ceiling bound.
    pub universal: bool,
    /// Only `k ≥ 3` inside the range are constrained; the set must be nonempty.
    pub constrained_k3: bool,
    /// As `constrained_k3` with the ceiling taken of `(ρ_1 − ρ_2)/k`.
    pub statement_sign: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub status: VerdictStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case_id: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m2: Option<usize>,
    /// True when the checker treated the second input as the first tree.
    pub swapped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case4: Option<Case4Readings>,
    pub detail: String,
}

impl TheoremVerdict {
    fn not_applicable(theorem: TheoremId, swapped: bool, detail: impl Into<String>) -> Self {
        TheoremVerdict {
            theorem,
            status: VerdictStatus::NotApplicable,
            case_id: None,
            m1: None,
            m2: None,
            swapped,
            case4: None,
            detail: detail.into(),
        }
    }

    fn applicable(theorem: TheoremId, swapped: bool, m1: usize, m2: usize, detail: impl Into<String>) -> Self {
        debug_assert!(m1 > m2, "{theorem}: applicable verdict with m1 = {m1} <= m2 = {m2}");
        TheoremVerdict {
            theorem,
            status: VerdictStatus::Applicable,
            case_id: None,
            m1: Some(m1),
            m2: Some(m2),
            swapped,
            case4: None,
            detail: detail.into(),
        }
    }

    pub fn is_applicable(&self) -> bool {
        self.status == VerdictStatus::Applicable
    }
}

/// Per-tree data shared by the pairwise checkers.
#[derive(Clone, Debug)]
pub struct TreeProfile {
    pub n: usize,
    pub code: CanonicalCode,
    pub levels: Vec<(usize, usize)>,
    pub rho: RhoData,
}

impl TreeProfile {
    pub fn new(t: &Tree) -> Self {
        TreeProfile {
            n: t.vertex_count(),
            code: canonical_code(t),
            levels: leaf_decomposition(t).counts(),
            rho: rho_data(t),
        }
    }

    /// Number of leaves of the tree (first-level `b`).
    pub fn leaves(&self) -> usize {
        self.levels[0].0
    }
}

fn check_pair(a: &TreeProfile, b: &TreeProfile) -> Result<()> {
    if a.n != b.n {
        return Err(CsfError::SizeMismatch(a.n, b.n));
    }
    if a.code == b.code {
        return Err(CsfError::Isomorphic);
    }
    Ok(())
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Evaluates the family hypothesis for `d = b_1 − b_2 ≥ 1` and
/// `gap = ρ_2 − ρ_1 ≥ 1`.
///
/// For `k ≥ max(4, gap + 1)` range membership and `⌈gap/k⌉ = 1` no longer
/// change with `k`, so a finite window decides the infinite quantifier.
pub fn case4_readings(d: usize, gap: usize) -> Case4Readings {
    let in_range = |k: usize| k * (gap.saturating_sub(1)) >= 2 * gap && gap < k * d;
    let window = 3..=(gap + 4);
    let mut any_member = false;
    let mut members_pass = true;
    for k in window.clone() {
        if in_range(k) {
            any_member = true;
            members_pass &= d > ceil_div(gap, k);
        }
    }
    // k = 1: k/(k-2) = -1 is always below gap, and both the range bound
    // and the ceiling bound reduce to gap < d.
    let k1_ok = d > gap;
    let universal = k1_ok && window.clone().all(|k| in_range(k) && d > ceil_div(gap, k));
    // ⌈-gap/k⌉ ≤ 0 < d, so only membership matters for the statement sign.
    let statement_sign = any_member;
    Case4Readings { universal, constrained_k3: any_member && members_pass, statement_sign }
}

/// Leaf-count criterion with the four `ρ` cases.
pub fn thm_leaves_check(t1: &Tree, t2: &Tree) -> Result<TheoremVerdict> {
    leaves_rho_verdict(&TreeProfile::new(t1), &TreeProfile::new(t2))
}

pub fn leaves_rho_verdict(p1: &TreeProfile, p2: &TreeProfile) -> Result<TheoremVerdict> {
    check_pair(p1, p2)?;
    let id = TheoremId::LeavesRho;
    if p1.n < 4 {
        return Ok(TheoremVerdict::not_applicable(id, false, "requires n >= 4"));
    }
    if p1.leaves() == p2.leaves() {
        return Ok(TheoremVerdict::not_applicable(id, false, format!("equal leaf counts b = {}", p1.leaves())));
    }
    let swapped = p1.leaves() < p2.leaves();
    let (x, y) = if swapped { (p2, p1) } else { (p1, p2) };
    let orient = if swapped { "inputs swapped so that b1 > b2; " } else { "" };
    let (b1, b2) = (x.leaves(), y.leaves());
    let (r1, r2) = (x.rho.rho, y.rho.rho);
    if !x.rho.is_path || !y.rho.is_path {
        return Ok(TheoremVerdict::not_applicable(
            id,
            swapped,
            format!("{orient}rho-induced subgraph is not a path (first: {}, second: {})", x.rho.is_path, y.rho.is_path),
        ));
    }
    let m1 = b1 + ceil_div(r1, 2);
    let m2 = b2 + ceil_div(r2, 2);
    let d = b1 - b2;
    let summary = format!("{orient}b = ({b1}, {b2}), rho = ({r1}, {r2})");
    let (case, readings) = if r1 == r2 {
        (Some(1), None)
    } else if r1 > r2 {
        (Some(2), None)
    } else {
        let gap = r2 - r1;
        let readings = case4_readings(d, gap);
        if d > ceil_div(gap, 2) {
            (Some(3), Some(readings))
        } else if readings.universal {
            (Some(4), Some(readings))
        } else {
            (None, Some(readings))
        }
    };
    let mut verdict = match case {
        Some(c) => {
            let mut v = TheoremVerdict::applicable(id, swapped, m1, m2, format!("{summary}; case {c}"));
            v.case_id = Some(c);
            v
        }
        None => TheoremVerdict::not_applicable(id, swapped, format!("{summary}; no case hypothesis holds")),
    };
    if let Some(r) = readings {
        if r.universal != r.constrained_k3 || r.universal != r.statement_sign {
            verdict.detail.push_str(&format!(
                "; family readings diverge (universal {}, k>=3 {}, statement sign {})",
                r.universal, r.constrained_k3, r.statement_sign
            ));
        }
    }
    verdict.case4 = readings;
    Ok(verdict)
}

/// Componentwise comparison of padded level sequences.
pub fn thm_componentwise_check(t1: &Tree, t2: &Tree) -> Result<TheoremVerdict> {
    componentwise_verdict(&TreeProfile::new(t1), &TreeProfile::new(t2))
}

pub fn componentwise_verdict(p1: &TreeProfile, p2: &TreeProfile) -> Result<TheoremVerdict> {
    check_pair(p1, p2)?;
    let id = TheoremId::Componentwise;
    let (a, b) = padded_levels(&p1.levels, &p2.levels);
    if a == b {
        return Ok(TheoremVerdict::not_applicable(id, false, "identical level sequences"));
    }
    let dominates =
        |x: &[(usize, usize)], y: &[(usize, usize)]| x.iter().zip(y).all(|(&(bx, ex), &(by, ey))| bx >= by && ex <= ey);
    let sum_b = |x: &[(usize, usize)]| x.iter().map(|l| l.0).sum::<usize>();
    for (swapped, x, y) in [(false, &a, &b), (true, &b, &a)] {
        if dominates(x, y) {
            let orient = if swapped { "inputs swapped; " } else { "" };
            return Ok(TheoremVerdict::applicable(
                id,
                swapped,
                sum_b(x),
                sum_b(y),
                format!("{orient}levels {x:?} dominate {y:?}"),
            ));
        }
    }
    Ok(TheoremVerdict::not_applicable(id, false, format!("neither of {a:?} and {b:?} dominates the other")))
}

/// Summed comparison: the levels where the first tree has no more leaves
/// than the second are outweighed by the levels where it has strictly more.
pub fn thm_sum_check(t1: &Tree, t2: &Tree) -> Result<TheoremVerdict> {
    summed_verdict(&TreeProfile::new(t1), &TreeProfile::new(t2))
}

pub fn summed_verdict(p1: &TreeProfile, p2: &TreeProfile) -> Result<TheoremVerdict> {
    check_pair(p1, p2)?;
    let (a, b) = padded_levels(&p1.levels, &p2.levels);
    let ba: Vec<usize> = a.iter().map(|l| l.0).collect();
    let bb: Vec<usize> = b.iter().map(|l| l.0).collect();
    Ok(summed_verdict_from_b(&ba, &bb))
}

/// The summed criterion on padded leaf-count sequences of equal length.
pub fn summed_verdict_from_b(ba: &[usize], bb: &[usize]) -> TheoremVerdict {
    let id = TheoremId::Summed;
    let r = ba.len();
    for (swapped, x, y) in [(false, ba, bb), (true, bb, ba)] {
        let reversed: Vec<usize> = (0..r).filter(|&i| x[i] <= y[i]).collect();
        if reversed.is_empty() || reversed.len() > r.saturating_sub(1) {
            continue;
        }
        let lost: usize = reversed.iter().map(|&i| y[i] - x[i]).sum();
        let gained: usize = (0..r).filter(|i| !reversed.contains(i)).map(|i| x[i] - y[i]).sum();
        if lost < gained {
            let m1: usize = x.iter().sum();
            let m2: usize = y.iter().sum();
            let orient = if swapped { "inputs swapped; " } else { "" };
            return TheoremVerdict::applicable(
                id,
                swapped,
                m1,
                m2,
                format!("{orient}b = {x:?} vs {y:?}; reversed levels {reversed:?} lose {lost} < {gained}"),
            );
        }
    }
    TheoremVerdict::not_applicable(
        id,
        false,
        format!("b = {ba:?} vs {bb:?}; no orientation satisfies the summed inequality"),
    )
}

/// `Σ (n_k − 1) − Σ (deg(v_i) − 1)`.
#[allow(non_snake_case)]
pub fn star_connection_M(spec: &StarConnectionSpec) -> Result<usize> {
    build_star_connection(spec)?;
    let stars: usize = spec.star_sizes.iter().map(|&s| s - 1).sum();
    let excess: usize = spec.connection_degrees().iter().map(|&d| d - 1).sum();
    Ok(stars - excess)
}

/// `(Σ n_k − (r − 1), r − 1)`, each checked against the built tree.
pub fn star_connection_counts(spec: &StarConnectionSpec) -> Result<(usize, usize)> {
    let built = build_star_connection(spec)?;
    let r = spec.star_count();
    let vertices = spec.star_sizes.iter().sum::<usize>() - (r - 1);
    let excess = r - 1;
    let measured_vertices = built.tree.vertex_count();
    let measured_excess: usize = built.connection_vertices.iter().map(|&v| built.tree.degree(v) - 1).sum();
    if (measured_vertices, measured_excess) != (vertices, excess) {
        return Err(CsfError::InvalidStarConnection(format!(
            "built tree has ({measured_vertices}, {measured_excess}), expected ({vertices}, {excess})"
        )));
    }
    Ok((vertices, excess))
}

/// Star connections of equal order with different star counts.
pub fn star_connection_distinct(a: &StarConnectionSpec, b: &StarConnectionSpec) -> Result<TheoremVerdict> {
    let (na, _) = star_connection_counts(a)?;
    let (nb, _) = star_connection_counts(b)?;
    if na != nb {
        return Err(CsfError::SizeMismatch(na, nb));
    }
    let id = TheoremId::StarCount;
    let (r, s) = (a.star_count(), b.star_count());
    if r == s {
        return Ok(TheoremVerdict::not_applicable(id, false, format!("equal star counts r = s = {r}")));
    }
    let swapped = r > s;
    let (x, y) = if swapped { (b, a) } else { (a, b) };
    let (m1, m2) = (star_connection_M(x)?, star_connection_M(y)?);
    let orient = if swapped { "inputs swapped; " } else { "" };
    Ok(TheoremVerdict::applicable(
        id,
        swapped,
        m1,
        m2,
        format!("{orient}{} stars vs {} stars on {na} vertices", x.star_count(), y.star_count()),
    ))
}

/// Closed-form block maximum for a spider, evaluated literally by the
/// parity of its legs. Agreement with the true maximum is not implied;
/// see [`spider_audit`].
#[allow(non_snake_case)]
pub fn spider_M_formula(spec: &SpiderSpec) -> Result<usize> {
    spec.validate()?;
    let (even, odd) = spec.parity_split();
    let half_even: usize = spec.legs.iter().filter(|&&l| l % 2 == 0).map(|&l| l / 2).sum();
    let half_odd: usize = spec.legs.iter().filter(|&&l| l % 2 == 1).map(|&l| (l - 1) / 2).sum();
    Ok(match (even, odd) {
        (_, 0) => half_even,
        (0, _) => half_odd + 1,
        _ => half_even + half_odd,
    })
}

/// Largest spider accepted by the audit.
pub const MAX_AUDIT_VERTICES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpiderAuditRow {
    pub legs: Vec<usize>,
    pub vertices: usize,
    pub formula: usize,
    pub oracle: usize,
    pub agrees: bool,
    /// For disagreeing rows: whether exhaustive subset search reproduces `oracle`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub confirmed: Option<bool>,
}

pub fn spider_audit(spec: &SpiderSpec) -> Result<SpiderAuditRow> {
    spec.validate()?;
    let vertices = spec.vertex_count();
    if vertices > MAX_AUDIT_VERTICES {
        return Err(CsfError::CapExceeded { what: "spider vertex count", value: vertices, cap: MAX_AUDIT_VERTICES });
    }
    let tree = gen_spider(spec)?;
    let formula = spider_M_formula(spec)?;
    let oracle = alpha_mis(&tree)?;
    let agrees = formula == oracle;
    let confirmed = if agrees { None } else { Some(alpha_exhaustive(&tree)? == oracle) };
    Ok(SpiderAuditRow { legs: spec.legs.clone(), vertices, formula, oracle, agrees, confirmed })
}

/// Audits every spider (legs in non-increasing order) with at most
/// `max_vertices` vertices, smallest first.
pub fn spider_audit_all(max_vertices: usize) -> Result<Vec<SpiderAuditRow>> {
    if max_vertices > MAX_AUDIT_VERTICES {
        return Err(CsfError::CapExceeded {
            what: "spider vertex count",
            value: max_vertices,
            cap: MAX_AUDIT_VERTICES,
        });
    }
    let mut rows = Vec::new();
    for total in 3..max_vertices {
        for p in IntegerPartition::all(total).into_iter().filter(|p| p.len() >= 3) {
            let legs = p.parts().iter().map(|&l| l as usize).collect();
            rows.push(spider_audit(&SpiderSpec { legs })?);
        }
    }
    Ok(rows)
}
