//! Campaigns over DFA space and named witness automata.

mod campaign;
mod enumerate;
pub mod witness;

pub use campaign::{
    check_full_instance, find_converse_counterexamples, read_jsonl, sample_full_dfas, verify_prop1,
    verify_prop2, verify_theorem3, AtomComplexities, AtomEntry, CampaignConfig, CampaignKind,
    CampaignLine, CampaignRecord, CampaignReport, CampaignSummary, Check, ComplexityCount, Mode,
    Tally,
};
pub use enumerate::{map_at, DfaSampler, DfaSpace, EnumerationCaps};
pub use witness::{example1, witness_max_semigroup};
