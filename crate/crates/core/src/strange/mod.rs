//! Strange pairs `g = g^e ⊕ h`: verification, explicit complements, searches,
//! sheet sampling and orbit classification.

mod classify;
mod flags;
mod pair;
mod search;
mod sheet;
mod witness;

pub use flags::{
    flag_stabilizer, three_part_partition, two_part_partition, witness_flag_three_part,
    witness_flag_two_part, FlagSpec,
};
pub use pair::{ab_invariants, check_pair, check_pair_at, PairReport};
pub use search::{
    random_conjugate_search, random_invertible, root_candidates, root_subalgebra_search,
    RootCandidate, RootSearchHit, SearchHit,
};
pub use witness::{
    power_frame, regular_power, to_jordan_frame, witness_fig1, witness_solvable_spherical,
};
pub use classify::{
    classify_orbit, minimal_frobenius_target, named_witness, numerology, partition_rng, survey,
    Checks, ClassificationVerdict, ClassifyConfig, Numerology, Status, StatusCounts, SurveyReport,
    Witness, WitnessKind,
};
pub use sheet::{complements_at, meets_trivially, is_regular_semisimple, principal_slice_point, sheet_check, SheetReport};
