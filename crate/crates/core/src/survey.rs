//! Exhaustive pairwise survey of all trees on `n` vertices.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::{alpha_mis, leaf_decomposition};
use crate::error::{CsfError, Result};
use crate::generators::StarConnectionSpec;
use crate::generators::{build_star_connection, enumerate_free_trees, recognize_spider, recognize_star_connection};
use crate::graph::Tree;
use crate::symfunc::{csf_monomial, max_block_from_csf, SymmetricFunction};
use crate::theorems::{
    componentwise_verdict, leaves_rho_verdict, spider_audit, star_connection_M, star_connection_counts,
    star_connection_distinct, summed_verdict, SpiderAuditRow, TheoremId, TheoremVerdict, TreeProfile,
};

pub const MIN_SURVEY_N: usize = 3;
pub const MAX_SURVEY_N: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoundnessViolation {
    pub code_a: String,
    pub code_b: String,
    pub theorem: TheoremId,
    pub claimed: (usize, usize),
    pub actual: (usize, usize),
    pub x_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainViolation {
    pub code: String,
    pub levels: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarAuditRow {
    pub spec: StarConnectionSpec,
    pub formula: usize,
    pub oracle: usize,
    pub agrees: bool,
    pub counts_hold: bool,
}

/// Firing and failure counts for one reading of the `ρ_1 < ρ_2` family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReadingTally {
    pub fires: usize,
    /// Firings where the ceiling-bound case does not already apply.
    pub fires_beyond_case3: usize,
    /// Firings where the true maxima do not satisfy `m1 > m2`.
    pub unsound: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Case4Audit {
    /// Pairs that reach the `ρ_1 < ρ_2` branch with both path hypotheses.
    pub rho_gap_pairs: usize,
    pub universal: ReadingTally,
    pub constrained_k3: ReadingTally,
    pub statement_sign: ReadingTally,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub a: usize,
    pub b: usize,
    pub x_equal: bool,
    pub m_a: usize,
    pub m_b: usize,
    pub verdicts: Vec<TheoremVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub n: usize,
    pub num_trees: usize,
    pub pairs: usize,
    pub skipped_isomorphic_pairs: usize,
    pub x_equal_pairs: usize,
    pub soundness_violations: Vec<SoundnessViolation>,
    pub verdict_counts: BTreeMap<TheoremId, BTreeMap<String, usize>>,
    pub chain_audit_violations: Vec<ChainViolation>,
    pub spider_audit: Vec<SpiderAuditRow>,
    pub star_audit: Vec<StarAuditRow>,
    pub case4_audit: Case4Audit,
    #[serde(skip)]
    pub codes: Vec<String>,
    #[serde(skip)]
    pub records: Vec<PairRecord>,
}

impl SurveyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("survey report serializes")
    }

    /// One line per pair, trees identified by their canonical codes.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("code_a,code_b,x_equal,m_a,m_b,leaves_rho,componentwise,summed,star_count\n");
        for r in &self.records {
            let _ = write!(out, "{},{},{},{},{}", self.codes[r.a], self.codes[r.b], r.x_equal, r.m_a, r.m_b);
            for id in [TheoremId::LeavesRho, TheoremId::Componentwise, TheoremId::Summed, TheoremId::StarCount] {
                let cell = r.verdicts.iter().find(|v| v.theorem == id).map_or("skipped".to_string(), verdict_label);
                let _ = write!(out, ",{cell}");
            }
            out.push('\n');
        }
        out
    }
}

fn verdict_label(v: &TheoremVerdict) -> String {
    match (v.is_applicable(), v.case_id) {
        (false, _) => "not_applicable".into(),
        (true, Some(c)) => format!("case{c}"),
        (true, None) => "applicable".into(),
    }
}

struct TreeData {
    tree: Tree,
    profile: TreeProfile,
    csf: SymmetricFunction,
    alpha: usize,
    star: Option<StarConnectionSpec>,
}

fn tree_data(tree: Tree) -> Result<TreeData> {
    let profile = TreeProfile::new(&tree);
    let csf = csf_monomial(&tree)?;
    let alpha = max_block_from_csf(&csf)?;
    let star = recognize_star_connection(&tree);
    Ok(TreeData { tree, profile, csf, alpha, star })
}

fn pair_verdicts(x: &TreeData, y: &TreeData) -> Result<Vec<TheoremVerdict>> {
    let mut out = vec![
        leaves_rho_verdict(&x.profile, &y.profile)?,
        componentwise_verdict(&x.profile, &y.profile)?,
        summed_verdict(&x.profile, &y.profile)?,
    ];
    if let (Some(a), Some(b)) = (&x.star, &y.star) {
        out.push(star_connection_distinct(a, b)?);
    }
    Ok(out)
}

/// Runs the survey with `jobs` worker threads (all cores when `None`).
/// The report does not depend on the thread count.
pub fn survey(n: usize, jobs: Option<usize>) -> Result<SurveyReport> {
    if !(MIN_SURVEY_N..=MAX_SURVEY_N).contains(&n) {
        return Err(CsfError::InvalidArgument(format!(
            "survey requires {MIN_SURVEY_N} <= n <= {MAX_SURVEY_N}, got {n}"
        )));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| CsfError::InvalidArgument(e.to_string()))?;
    pool.install(|| survey_in_pool(n))
}

fn survey_in_pool(n: usize) -> Result<SurveyReport> {
    let mut data: Vec<TreeData> = enumerate_free_trees(n)?.into_par_iter().map(tree_data).collect::<Result<_>>()?;
    data.sort_by(|a, b| a.profile.code.cmp(&b.profile.code));

    let index_pairs: Vec<(usize, usize)> =
        (0..data.len()).flat_map(|i| (i + 1..data.len()).map(move |j| (i, j))).collect();
    let outcomes: Vec<Option<PairRecord>> = index_pairs
        .par_iter()
        .map(|&(i, j)| {
            let (x, y) = (&data[i], &data[j]);
            match pair_verdicts(x, y) {
                Err(CsfError::Isomorphic) => Ok(None),
                Err(e) => Err(e),
                Ok(verdicts) => {
                    Ok(Some(PairRecord { a: i, b: j, x_equal: x.csf == y.csf, m_a: x.alpha, m_b: y.alpha, verdicts }))
                }
            }
        })
        .collect::<Result<_>>()?;

    let mut report = SurveyReport {
        n,
        num_trees: data.len(),
        pairs: 0,
        skipped_isomorphic_pairs: 0,
        x_equal_pairs: 0,
        soundness_violations: Vec::new(),
        verdict_counts: BTreeMap::new(),
        chain_audit_violations: Vec::new(),
        spider_audit: Vec::new(),
        star_audit: Vec::new(),
        case4_audit: Case4Audit::default(),
        codes: data.iter().map(|d| d.profile.code.to_string()).collect(),
        records: Vec::new(),
    };
    for id in [TheoremId::LeavesRho, TheoremId::Componentwise, TheoremId::Summed, TheoremId::StarCount] {
        report.verdict_counts.insert(id, BTreeMap::new());
    }

    for outcome in outcomes {
        let Some(record) = outcome else {
            report.skipped_isomorphic_pairs += 1;
            continue;
        };
        report.pairs += 1;
        if record.x_equal {
            report.x_equal_pairs += 1;
        }
        for v in &record.verdicts {
            *report.verdict_counts.get_mut(&v.theorem).unwrap().entry(verdict_label(v)).or_insert(0) += 1;
            if v.is_applicable() {
                check_soundness(&mut report, &record, v);
            }
            if let Some(readings) = v.case4 {
                tally_case4(&mut report.case4_audit, &record, v, readings);
            }
        }
        report.records.push(record);
    }
    if let Some(counts) = report.verdict_counts.get_mut(&TheoremId::StarCount) {
        let skipped = report.pairs - counts.values().sum::<usize>();
        counts.insert("skipped".into(), skipped);
    }

    for d in &data {
        let decomposition = leaf_decomposition(&d.tree);
        if !decomposition.chain_holds() {
            report
                .chain_audit_violations
                .push(ChainViolation { code: d.profile.code.to_string(), levels: decomposition.counts() });
        }
        if let Some(spec) = recognize_spider(&d.tree) {
            report.spider_audit.push(spider_audit(&spec)?);
        }
        if let Some(spec) = &d.star {
            let formula = star_connection_M(spec)?;
            let oracle = alpha_mis(&build_star_connection(spec)?.tree)?;
            let counts_hold = star_connection_counts(spec).is_ok();
            report.star_audit.push(StarAuditRow {
                spec: spec.clone(),
                formula,
                oracle,
                agrees: formula == oracle,
                counts_hold,
            });
        }
    }
    Ok(report)
}

/// True maxima for the verdict's (first, second) trees.
fn actual_pair(record: &PairRecord, v: &TheoremVerdict) -> (usize, usize) {
    if v.swapped {
        (record.m_b, record.m_a)
    } else {
        (record.m_a, record.m_b)
    }
}

fn check_soundness(report: &mut SurveyReport, record: &PairRecord, v: &TheoremVerdict) {
    let claimed = (v.m1.unwrap_or(0), v.m2.unwrap_or(0));
    let actual = actual_pair(record, v);
    if record.x_equal || claimed != actual || claimed.0 <= claimed.1 {
        report.soundness_violations.push(SoundnessViolation {
            code_a: report.codes[record.a].clone(),
            code_b: report.codes[record.b].clone(),
            theorem: v.theorem,
            claimed,
            actual,
            x_equal: record.x_equal,
        });
    }
}

fn tally_case4(audit: &mut Case4Audit, record: &PairRecord, v: &TheoremVerdict, r: crate::theorems::Case4Readings) {
    audit.rho_gap_pairs += 1;
    let case3 = v.case_id == Some(3);
    let (first, second) = actual_pair(record, v);
    let sound = first > second && !record.x_equal;
    for (fires, tally) in [
        (r.universal, &mut audit.universal),
        (r.constrained_k3, &mut audit.constrained_k3),
        (r.statement_sign, &mut audit.statement_sign),
    ] {
        if fires {
            tally.fires += 1;
            if !case3 {
                tally.fires_beyond_case3 += 1;
            }
            if !sound {
                tally.unsound += 1;
            }
        }
    }
}
