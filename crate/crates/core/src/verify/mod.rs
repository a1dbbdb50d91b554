//! Exhaustive and family-based verification suites producing
//! [`VerificationReport`]s.

mod enumerate;
mod lemmas;
mod report;
mod scan;
mod theorems;

pub use enumerate::{
    enumerate_connected, enumerate_connected_balanced_bipartite, enumerate_graphs, load_graph6_file, parse_graph6_lines,
    BIPARTITE_ENUMERATION_CAP, ENUMERATION_CAP,
};
pub use lemmas::{
    compositions, minimizing_parts, random_connected_noncomplete, verify_lemma_bh, verify_lemma_bh_sweep,
    verify_lemma_pf, MONOTONE_DROP,
};
pub use report::{Failure, Minimizer, VerificationReport};
pub use scan::{bipartite_alignment, part_values, scan_s_range_bipartite, scan_s_range_general, PART_TOL};
pub use theorems::{
    rows_to_csv, verify_theorem1, verify_theorem1_on, verify_theorem2, verify_theorem2_on, verify_theorem3,
    verify_theorem3_on, GraphRecord, GraphSource, TheoremOutcome,
};
