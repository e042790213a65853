//! Command results. Each one serializes to JSON and renders the same fields
//! as a plain-text table.

use std::fmt::Write;

use anyhow::{anyhow, bail, Result};
use serde::Serialize;

use atomic::atoms::{AtomReport, Atomaton};
use atomic::automata::{determinize, quotient_complexity};
use atomic::bounds::{max_atom_complexity, max_over_r};
use atomic::intervals::{FullDfa, ReachState};
use atomic::search::CampaignSummary;
use atomic::semigroup::{ClosureConfig, SemigroupSummary, TransitionSemigroup};
use atomic::text::serialize_dfa;
use atomic::{Dfa, StateSet};

pub trait Render: Serialize {
    fn table(&self) -> String;
}

fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

#[derive(Serialize)]
pub struct AtomRow {
    pub label: String,
    pub r: usize,
    pub complexity: u64,
    pub bound: u64,
    pub maximal: bool,
    pub negative: bool,
    pub initial: bool,
    #[serde(rename = "final")]
    pub is_final: bool,
}

impl From<&AtomReport> for AtomRow {
    fn from(a: &AtomReport) -> Self {
        AtomRow {
            label: a.label.compact(),
            r: a.r,
            complexity: a.complexity,
            bound: a.bound,
            maximal: a.is_maximal,
            negative: a.is_negative,
            initial: a.is_initial,
            is_final: a.is_final,
        }
    }
}

fn atom_grid(atoms: &[AtomRow]) -> String {
    let rows: Vec<Vec<String>> = atoms
        .iter()
        .map(|a| {
            let mut kind = Vec::new();
            if a.negative {
                kind.push("negative");
            }
            if a.initial {
                kind.push("initial");
            }
            if a.is_final {
                kind.push("final");
            }
            vec![
                a.label.clone(),
                a.r.to_string(),
                a.complexity.to_string(),
                a.bound.to_string(),
                yes(a.maximal),
                kind.join(","),
            ]
        })
        .collect();
    grid(
        &["atom", "r", "complexity", "bound", "maximal", "kind"],
        &rows,
    )
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub states: usize,
    pub minimal: bool,
    pub minimal_states: usize,
    pub syntactic_complexity: u64,
    pub full: bool,
    pub atom_count: usize,
    pub maximal_atoms: bool,
    pub reverse_quotient_complexity: usize,
    pub atoms_match_reversal: bool,
    pub atoms: Vec<AtomRow>,
}

pub fn analyze(d: &Dfa, closure: &ClosureConfig) -> Result<AnalyzeReport> {
    let at = Atomaton::new(d);
    let m = at.minimal_dfa();
    let sg = TransitionSemigroup::of_dfa(
        m,
        &ClosureConfig {
            keep_witnesses: false,
            ..*closure
        },
    )?;
    let atoms: Vec<AtomRow> = at.reports()?.iter().map(AtomRow::from).collect();
    let reverse_qc = quotient_complexity(&determinize(&d.reverse()).dfa);
    let all = m.state_count() < 64 && atoms.len() == 1 << m.state_count();
    Ok(AnalyzeReport {
        states: d.state_count(),
        minimal: !at.was_minimized(),
        minimal_states: m.state_count(),
        syntactic_complexity: sg.len() as u64,
        full: sg.is_full(),
        atom_count: atoms.len(),
        maximal_atoms: all && atoms.iter().all(|a| a.maximal),
        reverse_quotient_complexity: reverse_qc,
        atoms_match_reversal: reverse_qc == atoms.len(),
        atoms,
    })
}

impl Render for AnalyzeReport {
    fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "states                {}", self.states);
        let _ = writeln!(
            out,
            "minimal               {}",
            if self.minimal {
                "yes".to_string()
            } else {
                format!("no ({} states after minimization)", self.minimal_states)
            }
        );
        let _ = writeln!(
            out,
            "syntactic complexity  {}{}",
            self.syntactic_complexity,
            if self.full { " (full)" } else { "" }
        );
        let _ = writeln!(out, "atoms                 {}", self.atom_count);
        let _ = writeln!(out, "maximal atoms         {}", yes(self.maximal_atoms));
        let _ = writeln!(
            out,
            "reversal quotients    {} ({})",
            self.reverse_quotient_complexity,
            if self.atoms_match_reversal {
                "equals atom count"
            } else {
                "differs from atom count"
            }
        );
        out.push('\n');
        out.push_str(&atom_grid(&self.atoms));
        out
    }
}

#[derive(Serialize)]
pub struct WitnessRow {
    pub map: Vec<usize>,
    pub notation: Option<String>,
    pub word: String,
}

#[derive(Serialize)]
pub struct SemigroupReport {
    #[serde(flatten)]
    pub summary: SemigroupSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessRow>>,
}

pub fn semigroup(d: &Dfa, closure: &ClosureConfig, witnesses: bool) -> Result<SemigroupReport> {
    let cfg = ClosureConfig {
        keep_witnesses: witnesses,
        ..*closure
    };
    let sg = TransitionSemigroup::of_dfa(d, &cfg)?;
    let witnesses = witnesses.then(|| {
        sg.witnesses()
            .into_iter()
            .map(|w| WitnessRow {
                map: w.transformation.map().to_vec(),
                notation: w.transformation.notation(),
                word: d.alphabet().render_word(&w.word),
            })
            .collect()
    });
    Ok(SemigroupReport {
        summary: sg.summary(),
        witnesses,
    })
}

impl Render for SemigroupReport {
    fn table(&self) -> String {
        let s = &self.summary;
        let mut out = String::new();
        let _ = writeln!(out, "states      {}", s.n);
        let _ = writeln!(out, "generators  {}", s.generator_count);
        let _ = writeln!(
            out,
            "size        {}{}",
            s.size,
            if s.is_full { " (full)" } else { "" }
        );
        let rows: Vec<Vec<String>> = s
            .rank_histogram
            .iter()
            .enumerate()
            .map(|(r, c)| vec![r.to_string(), c.to_string()])
            .collect();
        out.push('\n');
        out.push_str(&grid(&["rank", "elements"], &rows));
        if let Some(ws) = &self.witnesses {
            let rows: Vec<Vec<String>> = ws
                .iter()
                .map(|w| {
                    let map: Vec<String> = w.map.iter().map(usize::to_string).collect();
                    vec![
                        map.join(" "),
                        w.notation.clone().unwrap_or_default(),
                        w.word.clone(),
                    ]
                })
                .collect();
            out.push('\n');
            out.push_str(&grid(&["map", "notation", "word"], &rows));
        }
        out
    }
}

#[derive(Serialize)]
pub struct AtomsReport {
    pub states: usize,
    pub atoms: Vec<AtomRow>,
}

pub fn atoms(d: &Dfa) -> Result<AtomsReport> {
    let at = Atomaton::new(d);
    Ok(AtomsReport {
        states: at.minimal_dfa().state_count(),
        atoms: at.reports()?.iter().map(AtomRow::from).collect(),
    })
}

impl Render for AtomsReport {
    fn table(&self) -> String {
        atom_grid(&self.atoms)
    }
}

#[derive(Serialize)]
pub struct AtomDfaReport {
    pub label: String,
    pub complexity: usize,
    pub dfa: String,
}

impl Render for AtomDfaReport {
    fn table(&self) -> String {
        self.dfa.clone()
    }
}

fn parse_label(n: usize, text: &str) -> Result<StateSet> {
    StateSet::parse(n, text)
        .ok_or_else(|| anyhow!("`{text}` is not a set of states of the {n}-state minimal DFA"))
}

pub fn atom_dfa(d: &Dfa, label: &str) -> Result<AtomDfaReport> {
    let at = Atomaton::new(d);
    let s = parse_label(at.minimal_dfa().state_count(), label)?;
    let atom = at.atom_dfa(&s)?;
    Ok(AtomDfaReport {
        label: s.compact(),
        complexity: atom.complexity(),
        dfa: serialize_dfa(&atom.dfa),
    })
}

#[derive(Serialize)]
pub struct AtomatonRow {
    pub label: String,
    pub initial: bool,
    #[serde(rename = "final")]
    pub is_final: bool,
    /// Per letter, the labels of the successor atoms.
    pub transitions: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct AtomatonReport {
    pub alphabet: Vec<String>,
    pub rows: Vec<AtomatonRow>,
}

pub fn atomaton(d: &Dfa) -> Result<AtomatonReport> {
    let at = Atomaton::new(d);
    let k = d.alphabet().len();
    let initials = at.initial_labels();
    let finals = at.final_labels();
    let rows = at
        .sorted_labels()
        .into_iter()
        .map(|s| {
            let transitions = (0..k)
                .map(|a| {
                    Ok(at
                        .eta_labels(&s, a)?
                        .iter()
                        .map(StateSet::compact)
                        .collect())
                })
                .collect::<Result<Vec<Vec<String>>>>()?;
            Ok(AtomatonRow {
                label: s.compact(),
                initial: initials.contains(&s),
                is_final: finals.contains(&s),
                transitions,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AtomatonReport {
        alphabet: d.alphabet().names().to_vec(),
        rows,
    })
}

impl Render for AtomatonReport {
    fn table(&self) -> String {
        let mut header = vec!["", "η"];
        header.extend(self.alphabet.iter().map(String::as_str));
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                let marker = match (r.initial, r.is_final) {
                    (true, true) => "↔",
                    (true, false) => "→",
                    (false, true) => "←",
                    (false, false) => "",
                };
                let mut row = vec![marker.to_string(), r.label.clone()];
                row.extend(r.transitions.iter().map(|t| {
                    if t.is_empty() {
                        "∅".to_string()
                    } else {
                        t.join(",")
                    }
                }));
                row
            })
            .collect();
        grid(&header, &rows)
    }
}

#[derive(Serialize)]
pub struct BoundRow {
    pub r: usize,
    pub bound: u64,
}

#[derive(Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub rows: Vec<BoundRow>,
    pub max_r: usize,
    pub max: u64,
}

pub fn bounds(n: usize) -> Result<BoundsReport> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    let rows = (0..=n)
        .map(|r| {
            Ok(BoundRow {
                r,
                bound: max_atom_complexity(n, r)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (max_r, max) = max_over_r(n)?;
    Ok(BoundsReport {
        n,
        rows,
        max_r,
        max,
    })
}

impl Render for BoundsReport {
    fn table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|b| vec![b.r.to_string(), b.bound.to_string()])
            .collect();
        let mut out = grid(&["r", "bound"], &rows);
        let _ = writeln!(out, "\nmax {} at r = {}", self.max, self.max_r);
        out
    }
}

#[derive(Serialize)]
pub struct IntervalsReport {
    pub atom: String,
    pub r: usize,
    pub count: usize,
    pub sink_reached: bool,
    /// `(|V|, |U|)` for every reached interval `[V, U]`.
    pub types: Vec<(usize, usize)>,
    pub states: Vec<String>,
}

pub fn intervals(d: &Dfa, label: &str, closure: &ClosureConfig) -> Result<IntervalsReport> {
    let full = FullDfa::new(
        d,
        &ClosureConfig {
            keep_witnesses: false,
            ..*closure
        },
    )?;
    let n = d.state_count();
    let s = parse_label(n, label)?;
    let reach = full.interval_reach(&s)?;
    Ok(IntervalsReport {
        atom: s.compact(),
        r: n - s.len(),
        count: reach.count(),
        sink_reached: reach.sink_reached(),
        types: reach.types().into_iter().collect(),
        states: reach
            .states
            .iter()
            .map(|st| match st {
                ReachState::Sink => "∅".to_string(),
                ReachState::Interval(iv) => iv.to_string(),
            })
            .collect(),
    })
}

impl Render for IntervalsReport {
    fn table(&self) -> String {
        let mut out = String::new();
        let types: Vec<String> = self
            .types
            .iter()
            .map(|(v, u)| format!("({v},{u})"))
            .collect();
        let _ = writeln!(out, "atom          {}", self.atom);
        let _ = writeln!(out, "r             {}", self.r);
        let _ = writeln!(out, "reached       {}", self.count);
        let _ = writeln!(out, "empty reached {}", yes(self.sink_reached));
        let _ = writeln!(out, "types         {}", types.join(" "));
        let _ = writeln!(out, "states        {}", self.states.join(" "));
        out
    }
}

impl Render for CampaignSummary {
    fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "campaign   {}", self.campaign);
        let _ = writeln!(out, "examined   {}", self.examined);
        let _ = writeln!(out, "minimal    {}", self.minimal);
        let _ = writeln!(out, "full       {}", self.full);
        let _ = writeln!(out, "findings   {}", self.findings);
        let _ = writeln!(out, "violations {}", self.violations);
        let _ = writeln!(out, "records    {}", self.records);
        if !self.checks.is_empty() {
            let rows: Vec<Vec<String>> = self
                .checks
                .iter()
                .map(|(name, c)| vec![name.clone(), c.checked.to_string(), c.failed.to_string()])
                .collect();
            out.push('\n');
            out.push_str(&grid(&["check", "checked", "failed"], &rows));
        }
        if !self.syntactic_complexities.is_empty() {
            let rows: Vec<Vec<String>> = self
                .syntactic_complexities
                .iter()
                .map(|c| vec![c.complexity.to_string(), c.count.to_string()])
                .collect();
            out.push('\n');
            out.push_str(&grid(&["syntactic complexity", "count"], &rows));
        }
        if !self.complexities_by_r.is_empty() {
            let rows: Vec<Vec<String>> = self
                .complexities_by_r
                .iter()
                .map(|a| {
                    let v: Vec<String> = a.complexities.iter().map(u64::to_string).collect();
                    vec![a.r.to_string(), v.join(" ")]
                })
                .collect();
            out.push('\n');
            out.push_str(&grid(&["r", "atom complexities"], &rows));
        }
        out
    }
}
