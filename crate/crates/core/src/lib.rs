//! Chromatic symmetric functions of trees, leaf decompositions, and
//! mechanical checkers for criteria that separate non-isomorphic trees.

pub mod cli;
pub mod decomposition;
pub mod error;
pub mod generators;
pub mod graph;
pub mod partition;
pub mod survey;
pub mod symfunc;
pub mod theorems;

pub use cli::compare_report;
pub use decomposition::{
    alpha_exhaustive, alpha_from_counts, alpha_from_decomposition, alpha_mis, leaf_decomposition, max_block_greedy,
    padded_levels, rho_data, LeafDecomposition, Level, RhoData,
};
pub use error::{CsfError, Result};
pub use generators::{
    build_star_connection, enumerate_free_trees, enumerate_free_trees_with_cap, free_trees, gen_path, gen_spider,
    gen_star, gen_star_connection, recognize_spider, recognize_star_connection, FreeTrees, Gluing, SpiderSpec,
    StarConnection, StarConnectionSpec, MAX_ENUMERATE_N,
};
pub use graph::{as_tree, canonical_code, parse_edge_list, trees_isomorphic, CanonicalCode, Graph, Tree};
pub use partition::IntegerPartition;
pub use survey::{survey, SurveyReport};
pub use symfunc::{
    csf_augmented, csf_equal, csf_monomial, csf_powersum, evaluate_ones, max_block_from_csf, stable_partitions,
    to_monomial, Basis, Coeff, SymmetricFunction, MAX_CSF_N,
};
pub use theorems::{
    case4_readings, spider_M_formula, spider_audit, spider_audit_all, star_connection_M, star_connection_counts,
    star_connection_distinct, thm_componentwise_check, thm_leaves_check, thm_sum_check, Case4Readings, SpiderAuditRow,
    TheoremId, TheoremVerdict, TreeProfile, VerdictStatus,
};
