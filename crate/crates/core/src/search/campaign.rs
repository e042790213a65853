//! Verification and counterexample campaigns over DFA space.
//!
//! Every campaign walks an exhaustive [`DfaSpace`] (sharded by the first
//! letter's map) or a seeded sample, folds per-DFA outcomes into a [`Tally`]
//! and merges shard tallies in shard order, so results do not depend on the
//! number of workers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atoms::Atomaton;
use crate::automata::{determinize, minimize, quotient_complexity, Dfa};
use crate::bounds::maximality;
use crate::error::{Error, Result};
use crate::intervals::{type_reachability, FullDfa};
use crate::semigroup::{full_size, ClosureConfig, TransitionSemigroup};
use crate::stateset::StateSet;
use crate::text::{parse_dfa, serialize_dfa};

use super::enumerate::{DfaSampler, DfaSpace, EnumerationCaps};
use super::witness::witness_max_semigroup;

const SAMPLE_CHUNK: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum Mode {
    Exhaustive,
    Sample { samples: u64, seed: u64 },
}

impl Mode {
    pub fn seed(&self) -> Option<u64> {
        match self {
            Mode::Exhaustive => None,
            Mode::Sample { seed, .. } => Some(*seed),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => f.write_str("exhaustive"),
            Mode::Sample { samples, seed } => write!(f, "sample{samples}-seed{seed}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CampaignKind {
    Theorem3,
    Converse,
    Prop1,
    Prop2,
}

impl fmt::Display for CampaignKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CampaignKind::Theorem3 => "theorem3",
            CampaignKind::Converse => "converse",
            CampaignKind::Prop1 => "prop1",
            CampaignKind::Prop2 => "prop2",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub closure: ClosureConfig,
    pub caps: EnumerationCaps,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Stamped on every record; left out for reproducible output.
    pub timestamp: Option<u64>,
    /// Run the interval-calculus checks on every full-semigroup instance.
    pub interval_checks: bool,
    /// Keep at most this many records.
    pub record_limit: Option<usize>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            closure: ClosureConfig {
                keep_witnesses: false,
                ..ClosureConfig::default()
            },
            caps: EnumerationCaps::default(),
            workers: None,
            timestamp: None,
            interval_checks: true,
            record_limit: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomEntry {
    pub label: String,
    pub r: usize,
    pub complexity: u64,
    pub bound: u64,
}

/// One analyzed DFA, as written to a campaign log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignRecord {
    pub campaign: String,
    pub finding: String,
    /// The DFA as enumerated, in the text format.
    pub dfa: String,
    pub n: usize,
    pub alphabet_size: usize,
    pub minimal_size: usize,
    pub syntactic_complexity: u64,
    pub atom_count: usize,
    pub atom_complexities: Vec<AtomEntry>,
    pub is_maximal_atoms: bool,
    pub seed: Option<u64>,
    pub timestamp: Option<u64>,
}

impl CampaignRecord {
    pub fn analyze(
        d: &Dfa,
        campaign: &str,
        finding: &str,
        seed: Option<u64>,
        timestamp: Option<u64>,
        closure: &ClosureConfig,
    ) -> Result<CampaignRecord> {
        let atomaton = Atomaton::new(d);
        let minimal = atomaton.minimal_dfa();
        let semigroup = TransitionSemigroup::of_dfa(minimal, closure)?;
        let report = maximality(&atomaton)?;
        Ok(CampaignRecord {
            campaign: campaign.to_string(),
            finding: finding.to_string(),
            dfa: serialize_dfa(d),
            n: d.state_count(),
            alphabet_size: d.alphabet().len(),
            minimal_size: minimal.state_count(),
            syntactic_complexity: semigroup.len() as u64,
            atom_count: report.atom_count,
            atom_complexities: report
                .atoms
                .iter()
                .map(|a| AtomEntry {
                    label: a.label.compact(),
                    r: a.r,
                    complexity: a.complexity,
                    bound: a.bound,
                })
                .collect(),
            is_maximal_atoms: report.is_maximal,
            seed,
            timestamp,
        })
    }

    /// Decodes the stored DFA and recomputes every metric.
    pub fn recompute(&self, closure: &ClosureConfig) -> Result<CampaignRecord> {
        let d = parse_dfa(&self.dfa)?;
        Self::analyze(
            &d,
            &self.campaign,
            &self.finding,
            self.seed,
            self.timestamp,
            closure,
        )
    }

    pub fn dfa(&self) -> Result<Dfa> {
        parse_dfa(&self.dfa)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub checked: u64,
    pub failed: u64,
}

impl Check {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        self.failed += u64::from(!ok);
    }
}

/// Counters accumulated over a campaign.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub examined: u64,
    /// DFAs that were already minimal.
    pub minimal: u64,
    /// Minimal DFAs with a full transition semigroup.
    pub full: u64,
    /// Syntactic complexity histogram over the campaign's population
    /// (minimal DFAs, or findings for the converse campaign).
    pub syntactic_complexities: BTreeMap<u64, u64>,
    /// Observed atom complexities per number of complemented quotients.
    pub complexities_by_r: BTreeMap<usize, BTreeSet<u64>>,
    pub checks: BTreeMap<String, Check>,
    pub findings: u64,
    pub records: Vec<CampaignRecord>,
}

impl Tally {
    fn check(&mut self, name: &str, ok: bool) {
        self.checks.entry(name.to_string()).or_default().record(ok);
    }

    fn merge(&mut self, other: Tally) {
        self.examined += other.examined;
        self.minimal += other.minimal;
        self.full += other.full;
        for (k, v) in other.syntactic_complexities {
            *self.syntactic_complexities.entry(k).or_default() += v;
        }
        for (r, set) in other.complexities_by_r {
            self.complexities_by_r.entry(r).or_default().extend(set);
        }
        for (name, c) in other.checks {
            let e = self.checks.entry(name).or_default();
            e.checked += c.checked;
            e.failed += c.failed;
        }
        self.findings += other.findings;
        self.records.extend(other.records);
    }

    pub fn failures(&self) -> u64 {
        self.checks.values().map(|c| c.failed).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub kind: CampaignKind,
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub tally: Tally,
}

/// Trailing line of a campaign log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub campaign: String,
    pub kind: CampaignKind,
    pub n: usize,
    pub k: usize,
    #[serde(flatten)]
    pub mode: Mode,
    pub examined: u64,
    pub minimal: u64,
    pub full: u64,
    pub findings: u64,
    pub violations: u64,
    pub records: usize,
    pub syntactic_complexities: Vec<ComplexityCount>,
    pub complexities_by_r: Vec<AtomComplexities>,
    pub checks: BTreeMap<String, Check>,
    pub timestamp: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityCount {
    pub complexity: u64,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomComplexities {
    pub r: usize,
    pub complexities: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CampaignLine {
    Record(CampaignRecord),
    Summary(CampaignSummary),
}

impl CampaignReport {
    pub fn violations(&self) -> u64 {
        self.tally.failures()
    }

    pub fn summary(&self, timestamp: Option<u64>) -> CampaignSummary {
        CampaignSummary {
            campaign: self.campaign.clone(),
            kind: self.kind,
            n: self.n,
            k: self.k,
            mode: self.mode,
            examined: self.tally.examined,
            minimal: self.tally.minimal,
            full: self.tally.full,
            findings: self.tally.findings,
            violations: self.violations(),
            records: self.tally.records.len(),
            syntactic_complexities: self
                .tally
                .syntactic_complexities
                .iter()
                .map(|(&complexity, &count)| ComplexityCount { complexity, count })
                .collect(),
            complexities_by_r: self
                .tally
                .complexities_by_r
                .iter()
                .map(|(&r, set)| AtomComplexities {
                    r,
                    complexities: set.iter().copied().collect(),
                })
                .collect(),
            checks: self.tally.checks.clone(),
            timestamp,
        }
    }

    /// Records one per line, then the summary line.
    pub fn to_jsonl(&self, timestamp: Option<u64>) -> String {
        let mut out = String::new();
        for r in &self.tally.records {
            out.push_str(&serde_json::to_string(&CampaignLine::Record(r.clone())).unwrap());
            out.push('\n');
        }
        out.push_str(
            &serde_json::to_string(&CampaignLine::Summary(self.summary(timestamp))).unwrap(),
        );
        out.push('\n');
        out
    }
}

/// Parses a campaign log back into its lines.
pub fn read_jsonl(text: &str) -> Result<Vec<CampaignLine>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Record(e.to_string())))
        .collect()
}

fn campaign_id(kind: CampaignKind, n: usize, k: usize, mode: &Mode) -> String {
    format!("{kind}-n{n}-k{k}-{mode}")
}

struct Context<'a> {
    id: String,
    config: &'a CampaignConfig,
    seed: Option<u64>,
}

impl Context<'_> {
    fn record(&self, d: &Dfa, finding: &str) -> Result<CampaignRecord> {
        CampaignRecord::analyze(
            d,
            &self.id,
            finding,
            self.seed,
            self.config.timestamp,
            &self.config.closure,
        )
    }
}

/// Folds `visit` over the DFAs of a campaign, in parallel, merging tallies in
/// a fixed order.
fn drive<F>(n: usize, k: usize, mode: &Mode, config: &CampaignConfig, visit: F) -> Result<Tally>
where
    F: Fn(&Dfa, &mut Tally) -> Result<()> + Sync,
{
    let run = || -> Result<Vec<Tally>> {
        match mode {
            Mode::Exhaustive => {
                let space = DfaSpace::new(n, k, &config.caps)?;
                (0..space.shard_count())
                    .into_par_iter()
                    .map(|shard| {
                        let mut t = Tally::default();
                        for d in space.shard(shard) {
                            t.examined += 1;
                            visit(&d, &mut t)?;
                        }
                        Ok(t)
                    })
                    .collect()
            }
            Mode::Sample { samples, seed } => {
                if n == 0 || n > 64 || k == 0 || k > 26 {
                    return Err(Error::InvalidArgument(format!(
                        "cannot sample DFAs with n = {n}, k = {k}"
                    )));
                }
                let mut sampler = DfaSampler::new(*seed);
                let dfas: Vec<Dfa> = (0..*samples).map(|_| sampler.sample(n, k)).collect();
                dfas.par_chunks(SAMPLE_CHUNK)
                    .map(|chunk| {
                        let mut t = Tally::default();
                        for d in chunk {
                            t.examined += 1;
                            visit(d, &mut t)?;
                        }
                        Ok(t)
                    })
                    .collect()
            }
        }
    };
    let parts = match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let mut total = Tally::default();
    for p in parts {
        total.merge(p);
    }
    if let Some(limit) = config.record_limit {
        total.records.truncate(limit);
    }
    Ok(total)
}

/// Minimal DFA's closure, or `None` when the DFA is not minimal.
fn minimal_semigroup(d: &Dfa, config: &CampaignConfig) -> Result<Option<TransitionSemigroup>> {
    if minimize(d).state_count() != d.state_count() {
        return Ok(None);
    }
    Ok(Some(TransitionSemigroup::of_dfa(d, &config.closure)?))
}

/// Runs every check on a minimal DFA with full transition semigroup: atom
/// count and maximality, the closed-form átomaton transitions against the
/// átomaton itself and against brute force, the singular-times-permutation
/// factorization of a letter, interval counting, reachable types,
/// same-type connectivity, the empty-collection rule and reversal
/// complexity. Returns the names of failed checks.
pub fn check_full_instance(
    d: &Dfa,
    interval_checks: bool,
    tally: &mut Tally,
) -> Result<Vec<String>> {
    let n = d.state_count();
    let mut failed = Vec::new();
    let mut check = |tally: &mut Tally, name: &str, ok: bool| {
        tally.check(name, ok);
        if !ok && !failed.iter().any(|f| f == name) {
            failed.push(name.to_string());
        }
    };

    let atomaton = Atomaton::new(d);
    let report = maximality(&atomaton)?;
    check(tally, "atoms.all_present", report.all_atoms_present);
    check(tally, "atoms.maximal", report.is_maximal);
    for a in &report.atoms {
        tally
            .complexities_by_r
            .entry(a.r)
            .or_default()
            .insert(a.complexity);
    }
    let reverse_qc = quotient_complexity(&determinize(&d.reverse()).dfa);
    check(tally, "reversal.quotients", n < 64 && reverse_qc == 1 << n);

    if !interval_checks || !report.all_atoms_present {
        return Ok(failed);
    }

    let full = FullDfa::new(d, &ClosureConfig::default())?;
    let k = d.alphabet().len();
    let subsets: Vec<StateSet> = (0..1u64 << n).map(|m| StateSet::from_mask(n, m)).collect();

    for s in &subsets {
        for a in 0..k {
            let mut closed = full.eta_letter(s, a)?.members();
            closed.sort();
            let actual = atomaton.eta_labels(s, a)?;
            let t = d.delta(a);
            let mut brute: Vec<StateSet> = subsets
                .iter()
                .filter(|cand| t.preimage_of_set(cand) == *s)
                .cloned()
                .collect();
            brute.sort();
            check(tally, "eta.closed_form", closed == actual);
            check(tally, "eta.brute_force", brute == actual);
        }
    }

    if n >= 2 {
        let ok = (0..k)
            .find(|&a| d.delta(a).rank() == n - 1)
            .and_then(|a| {
                let (alpha, pi) = d.delta(a).decompose_singular_perm().ok()?;
                let composed = alpha.compose(&pi).ok()?;
                let singular =
                    alpha.rank() == n - 1 && (0..n).filter(|&q| alpha.apply(q) != q).count() == 1;
                let inverse = pi.inverse()?;
                let word = full.semigroup().word_for(&inverse)?;
                Some(
                    composed == *d.delta(a)
                        && singular
                        && pi.is_permutation()
                        && d.transformation_of(&word).ok()? == inverse,
                )
            })
            .unwrap_or(false);
        check(tally, "factorization", ok);
    }

    for (s, atom) in subsets.iter().zip(sorted_by_mask(&report.atoms, n)) {
        let r = n - s.len();
        match full.interval_reach(s) {
            Ok(reach) => {
                check(tally, "intervals.count", reach.count() as u64 == atom);
                check(
                    tally,
                    "intervals.types",
                    reach.types() == type_reachability(n, s.len())?,
                );
                check(
                    tally,
                    "intervals.same_type_connected",
                    reach.same_type_disconnected().is_empty(),
                );
                check(
                    tally,
                    "intervals.empty_collection",
                    reach.sink_reached() == (r > 0 && r < n),
                );
            }
            Err(Error::NotAnInterval(_)) => check(tally, "intervals.count", false),
            Err(e) => return Err(e),
        }
    }
    Ok(failed)
}

/// Atom complexities indexed by the label's bitmask.
fn sorted_by_mask(atoms: &[crate::atoms::AtomReport], n: usize) -> Vec<u64> {
    let mut by_mask = vec![0; 1 << n];
    for a in atoms {
        by_mask[a.label.to_mask() as usize] = a.complexity;
    }
    by_mask
}

/// Over all (or sampled) minimal DFAs with full transition semigroup, checks
/// that all `2^n` atoms are present and meet their bounds, plus the
/// interval-calculus checks when enabled. Violations become records.
pub fn verify_theorem3(
    n: usize,
    k: usize,
    mode: Mode,
    config: &CampaignConfig,
) -> Result<CampaignReport> {
    let ctx = Context {
        id: campaign_id(CampaignKind::Theorem3, n, k, &mode),
        config,
        seed: mode.seed(),
    };
    let tally = drive(n, k, &mode, config, |d, t| {
        let Some(sg) = minimal_semigroup(d, config)? else {
            return Ok(());
        };
        t.minimal += 1;
        *t.syntactic_complexities.entry(sg.len() as u64).or_default() += 1;
        if !sg.is_full() {
            return Ok(());
        }
        t.full += 1;
        let failed = check_full_instance(d, config.interval_checks, t)?;
        if !failed.is_empty() {
            t.records.push(ctx.record(d, &failed.join(","))?);
        }
        Ok(())
    })?;
    Ok(CampaignReport {
        campaign: ctx.id,
        kind: CampaignKind::Theorem3,
        n,
        k,
        mode,
        tally,
    })
}

/// Minimal DFAs whose atoms are all present and maximal although the
/// transition semigroup is not full. The histogram counts the syntactic
/// complexities of these findings.
pub fn find_converse_counterexamples(
    n: usize,
    k: usize,
    mode: Mode,
    config: &CampaignConfig,
) -> Result<CampaignReport> {
    let ctx = Context {
        id: campaign_id(CampaignKind::Converse, n, k, &mode),
        config,
        seed: mode.seed(),
    };
    let all_atoms = 1usize.checked_shl(n as u32).unwrap_or(0);
    let tally = drive(n, k, &mode, config, |d, t| {
        let Some(sg) = minimal_semigroup(d, config)? else {
            return Ok(());
        };
        t.minimal += 1;
        if sg.is_full() {
            t.full += 1;
            return Ok(());
        }
        let reversed = determinize(&d.reverse());
        if reversed.dfa.state_count() != all_atoms {
            return Ok(());
        }
        let atomaton = Atomaton::new(d);
        let report = maximality(&atomaton)?;
        if report.is_maximal {
            t.findings += 1;
            *t.syntactic_complexities.entry(sg.len() as u64).or_default() += 1;
            for a in &report.atoms {
                t.complexities_by_r
                    .entry(a.r)
                    .or_default()
                    .insert(a.complexity);
            }
            if config.record_limit.is_none_or(|l| t.records.len() < l) {
                t.records.push(ctx.record(d, "counterexample")?);
            }
        }
        Ok(())
    })?;
    Ok(CampaignReport {
        campaign: ctx.id,
        kind: CampaignKind::Converse,
        n,
        k,
        mode,
        tally,
    })
}

/// Full transition semigroup forces the reversal to have `2^n` quotients.
/// Checked on the standard witness for `n` and on every minimal
/// full-semigroup DFA of the campaign.
pub fn verify_prop1(
    n: usize,
    k: usize,
    mode: Mode,
    config: &CampaignConfig,
) -> Result<CampaignReport> {
    let ctx = Context {
        id: campaign_id(CampaignKind::Prop1, n, k, &mode),
        config,
        seed: mode.seed(),
    };
    let reverse_ok = |d: &Dfa| {
        let qc = quotient_complexity(&determinize(&d.reverse()).dfa);
        n < 64 && qc == 1 << n
    };
    let mut tally = drive(n, k, &mode, config, |d, t| {
        let Some(sg) = minimal_semigroup(d, config)? else {
            return Ok(());
        };
        t.minimal += 1;
        *t.syntactic_complexities.entry(sg.len() as u64).or_default() += 1;
        if !sg.is_full() {
            return Ok(());
        }
        t.full += 1;
        let ok = reverse_ok(d);
        t.check("reversal.quotients", ok);
        if !ok {
            t.records.push(ctx.record(d, "reversal.quotients")?);
        }
        Ok(())
    })?;
    let w = witness_max_semigroup(n, &config.closure)?;
    let ok = reverse_ok(&w);
    tally.check("reversal.witness", ok);
    if !ok {
        tally.records.push(ctx.record(&w, "reversal.witness")?);
    }
    Ok(CampaignReport {
        campaign: ctx.id,
        kind: CampaignKind::Prop1,
        n,
        k,
        mode,
        tally,
    })
}

/// The number of atoms equals the quotient complexity of the reversal, for
/// every DFA of the campaign (minimal or not).
pub fn verify_prop2(
    n: usize,
    k: usize,
    mode: Mode,
    config: &CampaignConfig,
) -> Result<CampaignReport> {
    let ctx = Context {
        id: campaign_id(CampaignKind::Prop2, n, k, &mode),
        config,
        seed: mode.seed(),
    };
    let tally = drive(n, k, &mode, config, |d, t| {
        if minimize(d).state_count() == d.state_count() {
            t.minimal += 1;
        }
        let atoms = Atomaton::new(d).atom_count();
        let reverse_qc = quotient_complexity(&determinize(&d.reverse()).dfa);
        let ok = atoms == reverse_qc;
        t.check("atoms.reversal_count", ok);
        if !ok {
            t.records.push(ctx.record(d, "atoms.reversal_count")?);
        }
        Ok(())
    })?;
    Ok(CampaignReport {
        campaign: ctx.id,
        kind: CampaignKind::Prop2,
        n,
        k,
        mode,
        tally,
    })
}

/// Draws seeded random DFAs until `count` minimal ones with full transition
/// semigroup are found, giving up after `max_tries` draws.
pub fn sample_full_dfas(
    n: usize,
    k: usize,
    count: usize,
    seed: u64,
    max_tries: u64,
    closure: &ClosureConfig,
) -> Result<Vec<Dfa>> {
    let mut sampler = DfaSampler::new(seed);
    let mut out = Vec::with_capacity(count);
    let expected = full_size(n).ok_or(Error::Overflow("n^n"))?;
    for _ in 0..max_tries {
        if out.len() == count {
            break;
        }
        let d = sampler.sample(n, k);
        if minimize(&d).state_count() != n {
            continue;
        }
        if TransitionSemigroup::of_dfa(&d, closure)?.len() as u64 == expected {
            out.push(d);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::witness::example1;

    fn small() -> CampaignConfig {
        CampaignConfig::default()
    }

    #[test]
    fn two_state_theorem3_exhaustive() {
        let rep = verify_theorem3(2, 2, Mode::Exhaustive, &small()).unwrap();
        assert_eq!(rep.tally.examined, 64);
        assert!(rep.tally.full > 0);
        assert_eq!(rep.violations(), 0, "{:?}", rep.tally.checks);
        assert_eq!(
            rep.tally.complexities_by_r,
            BTreeMap::from([
                (0, BTreeSet::from([3])),
                (1, BTreeSet::from([3])),
                (2, BTreeSet::from([3])),
            ])
        );
    }

    #[test]
    fn example1_passes_every_check() {
        let mut t = Tally::default();
        let failed = check_full_instance(&example1(), true, &mut t).unwrap();
        assert!(failed.is_empty(), "{failed:?}");
        assert!(t.checks["eta.brute_force"].checked == 32);
        assert_eq!(
            t.complexities_by_r,
            BTreeMap::from([
                (0, BTreeSet::from([7])),
                (1, BTreeSet::from([10])),
                (2, BTreeSet::from([10])),
                (3, BTreeSet::from([7])),
            ])
        );
    }

    #[test]
    fn converse_trivial_cases() {
        let rep = find_converse_counterexamples(1, 2, Mode::Exhaustive, &small()).unwrap();
        assert_eq!(rep.tally.findings, 0);
        let rep = find_converse_counterexamples(3, 1, Mode::Exhaustive, &small()).unwrap();
        assert_eq!(rep.tally.examined, 216);
        assert_eq!(rep.tally.findings, 0);
    }

    #[test]
    fn records_round_trip_through_jsonl() {
        let cfg = CampaignConfig {
            timestamp: Some(1_700_000_000),
            ..small()
        };
        let rep = find_converse_counterexamples(2, 2, Mode::Exhaustive, &cfg).unwrap();
        let text = rep.to_jsonl(cfg.timestamp);
        let lines = read_jsonl(&text).unwrap();
        assert_eq!(lines.len(), rep.tally.records.len() + 1);
        for line in &lines {
            match line {
                CampaignLine::Record(r) => assert_eq!(&r.recompute(&cfg.closure).unwrap(), r),
                CampaignLine::Summary(s) => assert_eq!(s, &rep.summary(cfg.timestamp)),
            }
        }
    }

    #[test]
    fn reruns_are_identical() {
        let mode = Mode::Sample {
            samples: 300,
            seed: 11,
        };
        let a = verify_prop2(3, 2, mode, &small()).unwrap();
        let one = CampaignConfig {
            workers: Some(1),
            ..small()
        };
        let b = verify_prop2(3, 2, mode, &one).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.tally.examined, 300);
        assert_eq!(a.violations(), 0);
    }
}
