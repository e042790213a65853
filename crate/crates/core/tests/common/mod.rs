//! Transition tables of the running example, one row per state: the row label, then the
//! entries under `a b c d`.

#![allow(dead_code)]

use atomic::atoms::Atomaton;
use atomic::automata::determinize;
use atomic::witness::example1;
use atomic::StateSet;

pub const N: usize = 3;

pub fn set(text: &str) -> StateSet {
    StateSet::parse(N, text).unwrap()
}

pub fn collection(text: &str) -> Vec<StateSet> {
    if text == "∅" {
        return Vec::new();
    }
    let mut v: Vec<StateSet> = text.split(',').map(set).collect();
    v.sort();
    v
}

// Rows: state, then successors under a b c d.
pub const TABLE_D: [[&str; 5]; 3] = [
    ["0", "1", "0", "0", "1"],
    ["1", "0", "2", "1", "1"],
    ["2", "2", "1", "0", "1"],
];

pub const TABLE_DR: [[&str; 5]; 3] = [
    ["0", "1", "0", "02", "∅"],
    ["1", "0", "2", "1", "012"],
    ["2", "2", "1", "∅", "∅"],
];

pub const TABLE_DRD: [[&str; 5]; 8] = [
    ["Φ", "Φ", "Φ", "Φ", "Φ"],
    ["0", "1", "0", "02", "Φ"],
    ["1", "0", "2", "1", "012"],
    ["2", "2", "1", "Φ", "Φ"],
    ["01", "01", "02", "012", "012"],
    ["02", "12", "01", "02", "Φ"],
    ["12", "02", "12", "1", "012"],
    ["012", "012", "012", "012", "012"],
];

pub const TABLE_ATOMATON: [[&str; 5]; 8] = [
    ["Φ", "Φ", "Φ", "Φ,2", "Φ,0,2,02"],
    ["0", "1", "0", "∅", "∅"],
    ["1", "0", "2", "1,12", "∅"],
    ["2", "2", "1", "∅", "∅"],
    ["01", "01", "02", "∅", "∅"],
    ["02", "12", "01", "0,02", "∅"],
    ["12", "02", "12", "∅", "∅"],
    ["012", "012", "012", "01,012", "1,01,12,012"],
];

/// Cells of the computed tables that differ from the printed ones.
pub fn table_mismatches() -> Vec<String> {
    let d = example1();
    let mut bad = Vec::new();
    for row in TABLE_D {
        let q: usize = row[0].parse().unwrap();
        for a in 0..4 {
            if d.step(q, a).to_string() != row[a + 1] {
                bad.push(format!("D({q},{a})"));
            }
        }
    }
    let r = d.reverse();
    for row in TABLE_DR {
        let q: usize = row[0].parse().unwrap();
        for a in 0..4 {
            let expected = if row[a + 1] == "∅" {
                StateSet::empty(N)
            } else {
                set(row[a + 1])
            };
            if r.eta(a, q) != &expected {
                bad.push(format!("DR({q},{a})"));
            }
        }
    }
    let rd = determinize(&r);
    for row in TABLE_DRD {
        match rd.state_of(&set(row[0])) {
            None => bad.push(format!("DRD row {}", row[0])),
            Some(from) => {
                for a in 0..4 {
                    if rd.subsets[rd.dfa.step(from, a)] != set(row[a + 1]) {
                        bad.push(format!("DRD({},{a})", row[0]));
                    }
                }
            }
        }
    }
    let at = Atomaton::new(&d);
    for row in TABLE_ATOMATON {
        for a in 0..4 {
            if at.eta_labels(&set(row[0]), a).ok() != Some(collection(row[a + 1])) {
                bad.push(format!("A({},{a})", row[0]));
            }
        }
    }
    if rd.dfa.state_count() != 8 || at.atom_count() != 8 {
        bad.push("state counts".to_string());
    }
    bad
}
