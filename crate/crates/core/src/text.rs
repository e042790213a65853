//! Line-oriented text format for DFAs.
//!
//! ```text
//! # comment
//! states: 3
//! alphabet: a b c d
//! initial: 0
//! final: 2
//! a: 1 0 2
//! b: 0 2 1
//! c: 0 1 0
//! d: 1 1 1
//! ```
//!
//! Each letter row lists `δ(0), δ(1), ..` for that letter. The `final:`
//! section may be empty. [`serialize_dfa`] emits exactly this layout.

use crate::automata::{Alphabet, Dfa};
use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::transformation::Transformation;

const SECTIONS: [&str; 4] = ["states", "alphabet", "initial", "final"];

pub fn serialize_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    out.push_str(&format!("states: {}\n", d.state_count()));
    out.push_str(&format!("alphabet: {}\n", d.alphabet().names().join(" ")));
    out.push_str(&format!("initial: {}\n", d.initial()));
    let finals: Vec<String> = d.finals().iter().map(|q| q.to_string()).collect();
    if finals.is_empty() {
        out.push_str("final:\n");
    } else {
        out.push_str(&format!("final: {}\n", finals.join(" ")));
    }
    for (a, name) in d.alphabet().names().iter().enumerate() {
        let row: Vec<String> = d.delta(a).map().iter().map(|q| q.to_string()).collect();
        out.push_str(&format!("{name}: {}\n", row.join(" ")));
    }
    out
}

/// A whitespace-separated token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: offset + line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: offset + line[..s].chars().count() + 1,
        });
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Default)]
struct Draft<'a> {
    states: Option<(usize, usize)>,
    alphabet: Option<(Vec<String>, usize)>,
    initial: Option<(Token<'a>, usize)>,
    finals: Option<(Vec<Token<'a>>, usize)>,
    rows: Vec<(String, Vec<Token<'a>>, usize, usize)>,
}

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut draft = Draft::default();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            let col = line.len() - line.trim_start().len() + 1;
            return Err(err(line_no, col, "expected `key: values`"));
        };
        let key = line[..colon].trim();
        let key_col = line[..colon].len() - line[..colon].trim_start().len() + 1;
        let value_offset = line[..=colon].chars().count();
        let values = tokens(&line[colon + 1..], value_offset);
        if key.is_empty() {
            return Err(err(line_no, key_col, "missing key before `:`"));
        }
        let duplicate = || err(line_no, key_col, format!("duplicate section `{key}`"));
        match key {
            "states" => {
                if draft.states.is_some() {
                    return Err(duplicate());
                }
                let [tok] = values.as_slice() else {
                    return Err(err(line_no, key_col, "`states` takes one number"));
                };
                let n: usize = tok.text.parse().map_err(|_| {
                    err(
                        line_no,
                        tok.column,
                        format!("bad state count `{}`", tok.text),
                    )
                })?;
                if n == 0 {
                    return Err(err(line_no, tok.column, "a DFA needs at least one state"));
                }
                draft.states = Some((n, line_no));
            }
            "alphabet" => {
                if draft.alphabet.is_some() {
                    return Err(duplicate());
                }
                if values.is_empty() {
                    return Err(err(line_no, key_col, "alphabet is empty"));
                }
                let mut names: Vec<String> = Vec::new();
                for tok in &values {
                    if SECTIONS.contains(&tok.text) || tok.text.contains(':') {
                        return Err(err(
                            line_no,
                            tok.column,
                            format!("reserved letter name `{}`", tok.text),
                        ));
                    }
                    if names.iter().any(|n| n == tok.text) {
                        return Err(err(
                            line_no,
                            tok.column,
                            format!("duplicate letter `{}`", tok.text),
                        ));
                    }
                    names.push(tok.text.to_string());
                }
                draft.alphabet = Some((names, line_no));
            }
            "initial" => {
                if draft.initial.is_some() {
                    return Err(duplicate());
                }
                let mut it = values.into_iter();
                match (it.next(), it.next()) {
                    (Some(tok), None) => draft.initial = Some((tok, line_no)),
                    _ => return Err(err(line_no, key_col, "`initial` takes one state")),
                }
            }
            "final" => {
                if draft.finals.is_some() {
                    return Err(duplicate());
                }
                draft.finals = Some((values, line_no));
            }
            letter => {
                let Some((names, _)) = &draft.alphabet else {
                    return Err(err(line_no, key_col, "transition row before `alphabet`"));
                };
                if !names.iter().any(|n| n == letter) {
                    return Err(err(line_no, key_col, format!("unknown letter `{letter}`")));
                }
                if draft.rows.iter().any(|(l, ..)| l == letter) {
                    return Err(err(
                        line_no,
                        key_col,
                        format!("duplicate section `{letter}`"),
                    ));
                }
                draft
                    .rows
                    .push((letter.to_string(), values, line_no, key_col));
            }
        }
    }

    let end = last_line + 1;
    let (n, _) = draft
        .states
        .ok_or_else(|| err(end, 1, "missing `states` section"))?;
    let (names, _) = draft
        .alphabet
        .ok_or_else(|| err(end, 1, "missing `alphabet` section"))?;
    let state = |tok: &Token<'_>, line: usize| -> Result<usize> {
        let q: usize = tok
            .text
            .parse()
            .map_err(|_| err(line, tok.column, format!("bad state `{}`", tok.text)))?;
        if q >= n {
            return Err(err(
                line,
                tok.column,
                format!("state out of range: {q} (states: {n})"),
            ));
        }
        Ok(q)
    };
    let (init_tok, init_line) = draft
        .initial
        .ok_or_else(|| err(end, 1, "missing `initial` section"))?;
    let initial = state(&init_tok, init_line)?;
    let (final_toks, final_line) = draft
        .finals
        .ok_or_else(|| err(end, 1, "missing `final` section"))?;
    let mut finals = StateSet::empty(n);
    for tok in &final_toks {
        finals.insert(state(tok, final_line)?);
    }

    let mut delta = Vec::with_capacity(names.len());
    for name in &names {
        let Some((_, values, line, key_col)) = draft.rows.iter().find(|(l, ..)| l == name) else {
            return Err(err(end, 1, format!("missing row for letter `{name}`")));
        };
        if values.len() != n {
            return Err(err(
                *line,
                *key_col,
                format!("row `{name}` has {} entries, expected {n}", values.len()),
            ));
        }
        let map = values
            .iter()
            .map(|tok| state(tok, *line))
            .collect::<Result<Vec<_>>>()?;
        delta.push(Transformation::from_map(map)?);
    }
    Dfa::new(Alphabet::new(names)?, delta, initial, finals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::example1;

    const FIXTURE: &str = "states: 3\nalphabet: a b c d\ninitial: 0\nfinal: 2\na: 1 0 2\nb: 0 2 1\nc: 0 1 0\nd: 1 1 1\n";

    #[test]
    fn example1_fixture() {
        assert_eq!(parse_dfa(FIXTURE).unwrap(), example1());
        assert_eq!(serialize_dfa(&example1()), FIXTURE);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# example\n\nstates: 2   # two\nalphabet: x\ninitial: 1\nfinal:\nx: 1 0\n";
        let d = parse_dfa(text).unwrap();
        assert_eq!(d.initial(), 1);
        assert!(d.finals().is_empty());
        assert_eq!(
            serialize_dfa(&d),
            "states: 2\nalphabet: x\ninitial: 1\nfinal:\nx: 1 0\n"
        );
    }

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_dfa(text) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => (line, column, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_state() {
        let text = FIXTURE.replace("a: 1 0 2", "a: 1 0 3");
        let (line, column, message) = parse_err(&text);
        assert_eq!((line, column), (5, 8));
        assert!(message.contains("state out of range"), "{message}");
    }

    #[test]
    fn unknown_letter() {
        let text = FIXTURE.replace("d: 1 1 1", "e: 1 1 1");
        let (line, _, message) = parse_err(&text);
        assert_eq!(line, 8);
        assert!(message.contains("unknown letter"));
    }

    #[test]
    fn missing_row() {
        let text = FIXTURE.replace("d: 1 1 1\n", "");
        let (_, _, message) = parse_err(&text);
        assert!(message.contains("missing row for letter `d`"));
    }

    #[test]
    fn duplicate_section() {
        let text = format!("{FIXTURE}initial: 1\n");
        let (line, column, message) = parse_err(&text);
        assert_eq!((line, column), (9, 1));
        assert!(message.contains("duplicate section"));
        let text = format!("{FIXTURE}a: 0 0 0\n");
        assert!(parse_err(&text).2.contains("duplicate section"));
    }

    #[test]
    fn short_row_and_bad_numbers() {
        assert!(parse_err(&FIXTURE.replace("b: 0 2 1", "b: 0 2"))
            .2
            .contains("2 entries"));
        assert!(parse_err(&FIXTURE.replace("states: 3", "states: x"))
            .2
            .contains("bad state count"));
        assert!(parse_err("alphabet: a\n").2.contains("missing `states`"));
        assert!(parse_err("states: 1\na: 0\n")
            .2
            .contains("before `alphabet`"));
    }
}
