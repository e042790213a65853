//! The running example: the four-letter DFA with full transition semigroup on three
//! states, its reversal, the determinized reversal and the átomaton.

use atomic::atoms::Atomaton;
use atomic::automata::{determinize, is_minimal};
use atomic::bounds::max_atom_complexity;
use atomic::semigroup::{syntactic_complexity, ClosureConfig};
use atomic::text::{parse_dfa, serialize_dfa};
use atomic::witness::example1;
use atomic::StateSet;

mod common;

use common::*;

#[test]
fn dfa_transitions() {
    let d = example1();
    assert_eq!(d.state_count(), 3);
    assert_eq!(d.initial(), 0);
    assert_eq!(d.finals(), &set("2"));
    for row in TABLE_D {
        let q: usize = row[0].parse().unwrap();
        for a in 0..4 {
            assert_eq!(
                d.step(q, a),
                row[a + 1].parse::<usize>().unwrap(),
                "δ({q}, {a})"
            );
        }
    }
    assert!(is_minimal(&d));
    assert_eq!(
        syntactic_complexity(&d, &ClosureConfig::default()).unwrap(),
        27
    );
}

#[test]
fn fixture_text_round_trip() {
    let fixture = "states: 3\nalphabet: a b c d\ninitial: 0\nfinal: 2\na: 1 0 2\nb: 0 2 1\nc: 0 1 0\nd: 1 1 1\n";
    assert_eq!(serialize_dfa(&example1()), fixture);
    assert_eq!(parse_dfa(fixture).unwrap(), example1());
}

#[test]
fn reversal_transitions() {
    let r = example1().reverse();
    assert_eq!(r.initials(), &set("2"));
    assert_eq!(r.finals(), &set("0"));
    for row in TABLE_DR {
        let q: usize = row[0].parse().unwrap();
        for a in 0..4 {
            let expected = if row[a + 1] == "∅" {
                StateSet::empty(N)
            } else {
                set(row[a + 1])
            };
            assert_eq!(r.eta(a, q), &expected, "η^R({q}, {a})");
        }
    }
}

#[test]
fn determinized_reversal_transitions() {
    let rd = determinize(&example1().reverse());
    assert_eq!(rd.dfa.state_count(), 8);
    assert_eq!(rd.subsets[rd.dfa.initial()], set("2"));
    let mut finals: Vec<StateSet> = rd
        .dfa
        .finals()
        .iter()
        .map(|s| rd.subsets[s].clone())
        .collect();
    finals.sort();
    assert_eq!(finals, collection("0,01,02,012"));
    for row in TABLE_DRD {
        let from = rd.state_of(&set(row[0])).unwrap();
        for a in 0..4 {
            let to = rd.dfa.step(from, a);
            assert_eq!(rd.subsets[to], set(row[a + 1]), "δ^RD({}, {a})", row[0]);
        }
    }
}

#[test]
fn atomaton_transitions() {
    let at = Atomaton::new(&example1());
    assert_eq!(at.atom_count(), 8);
    assert_eq!(at.initial_labels(), collection("0,01,02,012"));
    assert_eq!(at.final_labels(), collection("2"));
    for row in TABLE_ATOMATON {
        for a in 0..4 {
            assert_eq!(
                at.eta_labels(&set(row[0]), a).unwrap(),
                collection(row[a + 1]),
                "η({}, {a})",
                row[0]
            );
        }
    }
}

#[test]
fn no_table_mismatches() {
    assert_eq!(table_mismatches(), Vec::<String>::new());
}

#[test]
fn every_atom_is_maximal() {
    let at = Atomaton::new(&example1());
    let reports = at.reports().unwrap();
    assert_eq!(reports.len(), 8);
    for r in &reports {
        assert_eq!(r.bound, max_atom_complexity(N, r.r).unwrap());
        assert_eq!(r.complexity, r.bound, "atom {}", r.label);
        assert_eq!(r.complexity, if r.r == 0 || r.r == N { 7 } else { 10 });
    }
    let negative: Vec<_> = reports.iter().filter(|r| r.is_negative).collect();
    assert_eq!(negative.len(), 1);
    assert!(negative[0].label.is_empty());
}
