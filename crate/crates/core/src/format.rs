//! Line-oriented text formats.
//!
//! Network files:
//!
//! ```text
//! network <name>
//! oprops O1 O2 ...                      # objection atoms
//! node <name> [parents <p> ...]
//! objection <node> [| <cond>] : <Φ_A(node)> ; <Φ_A(!node)>
//! prob <node> [| <cond>] : <P(node | A)> [; <P(!node | A)>]
//! ```
//!
//! State files list the objection of every world:
//!
//! ```text
//! state <name>
//! lprops a b
//! oprops x
//! world a & !b : x | !x
//! ```
//!
//! `#` starts a comment. A condition is a conjunction of literals naming
//! every parent exactly once; roots take no condition.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::belief::ObjectionState;
use crate::error::{Error, Result};
use crate::logic::{parse_sentence, Language, Sentence, Vocabulary, World};
use crate::network::{CausalNetwork, ObjectionRow, OcnQuantification};
use crate::pcn::{PcnQuantification, ProbRow};

#[derive(Debug, Clone)]
pub struct NetworkFile {
    pub network: CausalNetwork,
    /// Present when the file declares `oprops`.
    pub ocn: Option<OcnQuantification>,
    /// Present when the file has at least one `prob` row.
    pub pcn: Option<PcnQuantification>,
}

#[derive(Debug, Clone)]
pub struct StateFile {
    pub name: String,
    pub state: ObjectionState,
}

#[derive(Debug, Clone)]
pub enum Document {
    Network(NetworkFile),
    State(StateFile),
}

struct Line<'a> {
    number: usize,
    keyword: &'a str,
    rest: &'a str,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            return None;
        }
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .unwrap_or((content, ""));
        Some(Line {
            number: i + 1,
            keyword,
            rest: rest.trim(),
        })
    })
}

fn at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::File { .. } => e,
        other => Error::File {
            line,
            message: other.to_string(),
        },
    })
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::File {
        line,
        message: message.into(),
    })
}

/// Detects the kind of file by its first directive.
pub fn parse_document(text: &str) -> Result<Document> {
    match lines(text).next() {
        Some(l) if l.keyword == "network" => parse_network(text).map(Document::Network),
        Some(l) if l.keyword == "state" => parse_state(text).map(Document::State),
        Some(l) => fail(
            l.number,
            format!("expected `network` or `state`, found `{}`", l.keyword),
        ),
        None => fail(1, "empty file"),
    }
}

fn single_name(l: &Line<'_>) -> Result<String> {
    let mut words = l.rest.split_whitespace();
    match (words.next(), words.next()) {
        (Some(name), None) => Ok(name.to_string()),
        _ => fail(l.number, format!("`{}` takes exactly one name", l.keyword)),
    }
}

/// Splits `<node> [| <cond>] : <body>`.
fn split_row<'a>(l: &Line<'a>) -> Result<(&'a str, Option<&'a str>, &'a str)> {
    let Some((head, body)) = l.rest.split_once(':') else {
        return fail(l.number, "expected `:`");
    };
    let (target, condition) = match head.split_once('|') {
        Some((t, c)) => (t.trim(), Some(c.trim())),
        None => (head.trim(), None),
    };
    Ok((target, condition, body.trim()))
}

pub fn parse_network(text: &str) -> Result<NetworkFile> {
    let mut name = None;
    let mut oprops: Option<(usize, Vec<String>)> = None;
    let mut nodes: Vec<(String, Vec<String>)> = Vec::new();
    let mut rows = Vec::new();
    for l in lines(text) {
        match l.keyword {
            "network" => {
                if name.is_some() {
                    return fail(l.number, "duplicate `network` line");
                }
                name = Some(single_name(&l)?);
            }
            "oprops" => {
                if oprops.is_some() {
                    return fail(l.number, "duplicate `oprops` line");
                }
                oprops = Some((
                    l.number,
                    l.rest.split_whitespace().map(String::from).collect(),
                ));
            }
            "node" => {
                let mut words = l.rest.split_whitespace();
                let Some(node) = words.next() else {
                    return fail(l.number, "`node` needs a name");
                };
                let parents: Vec<String> = match words.next() {
                    None => Vec::new(),
                    Some("parents") => words.map(String::from).collect(),
                    Some(other) => {
                        return fail(l.number, format!("expected `parents`, found `{other}`"))
                    }
                };
                nodes.push((node.to_string(), parents));
            }
            "objection" | "prob" => rows.push(l),
            other => return fail(l.number, format!("unknown directive `{other}`")),
        }
    }
    let Some(name) = name else {
        return fail(1, "missing `network` line");
    };
    let network = at(1, CausalNetwork::new(name, nodes))?;
    let mut ocn = match oprops {
        Some((line, names)) => {
            let vocab = at(line, Vocabulary::new(Language::Objection, names))?;
            Some(at(line, OcnQuantification::new(&network, vocab))?)
        }
        None => None,
    };
    let mut pcn: Option<PcnQuantification> = None;
    let mut seen = HashSet::new();
    for l in rows {
        let (target, condition, body) = split_row(&l)?;
        let Some(node) = network.node_index(target) else {
            return fail(l.number, format!("unknown node `{target}`"));
        };
        let condition = match condition {
            Some(c) => at(l.number, parse_sentence(c, network.vocabulary()))?,
            None => Sentence::Const(true),
        };
        let inst = at(
            l.number,
            network.instantiation_from_condition(node, &condition),
        )?;
        if !seen.insert((l.keyword, node, inst.index())) {
            return fail(l.number, format!("duplicate `{}` row", l.keyword));
        }
        let parts: Vec<&str> = body.split(';').map(str::trim).collect();
        if l.keyword == "objection" {
            let Some(q) = ocn.as_mut() else {
                return fail(l.number, "`objection` rows need an `oprops` line");
            };
            let [pos, neg] = parts[..] else {
                return fail(l.number, "expected `<objection> ; <objection>`");
            };
            let o = q.objection_vocabulary();
            let row = ObjectionRow::new(
                at(l.number, parse_sentence(pos, o))?,
                at(l.number, parse_sentence(neg, o))?,
            );
            q.set(&inst, row);
        } else {
            let number = |s: &str| -> Result<f64> {
                s.parse::<f64>()
                    .or_else(|_| fail(l.number, format!("`{s}` is not a number")))
            };
            let row = match parts[..] {
                [p] => ProbRow::new(number(p)?),
                [p, n] => ProbRow::with_negative(number(p)?, number(n)?),
                _ => return fail(l.number, "expected `<probability> [; <probability>]`"),
            };
            pcn.get_or_insert_with(|| PcnQuantification::new(&network))
                .set(&inst, row);
        }
    }
    Ok(NetworkFile { network, ocn, pcn })
}

pub fn parse_state(text: &str) -> Result<StateFile> {
    let mut name = None;
    let mut lprops = None;
    let mut oprops = None;
    let mut worlds = Vec::new();
    for l in lines(text) {
        match l.keyword {
            "state" => {
                if name.is_some() {
                    return fail(l.number, "duplicate `state` line");
                }
                name = Some(single_name(&l)?);
            }
            "lprops" | "oprops" => {
                let (slot, language) = if l.keyword == "lprops" {
                    (&mut lprops, Language::Domain)
                } else {
                    (&mut oprops, Language::Objection)
                };
                if slot.is_some() {
                    return fail(l.number, format!("duplicate `{}` line", l.keyword));
                }
                let names: Vec<&str> = l.rest.split_whitespace().collect();
                *slot = Some(at(l.number, Vocabulary::new(language, names))?);
            }
            "world" => worlds.push(l),
            other => return fail(l.number, format!("unknown directive `{other}`")),
        }
    }
    let Some(name) = name else {
        return fail(1, "missing `state` line");
    };
    let (Some(lv), Some(ov)) = (lprops, oprops) else {
        return fail(1, "a state needs `lprops` and `oprops` lines");
    };
    let mut entries = Vec::with_capacity(worlds.len());
    for l in worlds {
        let Some((head, body)) = l.rest.split_once(':') else {
            return fail(l.number, "expected `:`");
        };
        let conj = at(l.number, parse_sentence(head.trim(), &lv))?;
        let world = at(l.number, world_from_conjunction(&conj, &lv))?;
        let objection = at(l.number, parse_sentence(body.trim(), &ov))?;
        entries.push((world, objection));
    }
    let state = ObjectionState::from_world_table(&lv, &ov, entries)?;
    Ok(StateFile { name, state })
}

fn world_from_conjunction(conj: &Sentence, vocab: &Vocabulary) -> Result<World> {
    let lits = conj.as_literal_conjunction().ok_or_else(|| {
        Error::VocabularyMismatch(format!("`{conj}` is not a conjunction of literals"))
    })?;
    let mut values: Vec<Option<bool>> = vec![None; vocab.len()];
    for (name, sign) in lits {
        let i = vocab
            .position(&name)
            .ok_or(Error::UnknownAtom(name.clone()))?;
        if values[i].replace(sign).is_some() {
            return Err(Error::VocabularyMismatch(format!("`{name}` appears twice")));
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                Error::VocabularyMismatch(format!("`{conj}` does not mention `{}`", vocab.name(i)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    World::from_values(vocab, &values)
}

/// Writes a state in the state file format, objections in canonical form.
pub fn write_state(name: &str, state: &ObjectionState) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "state {name}");
    let _ = writeln!(
        out,
        "lprops {}",
        state.domain_vocabulary().names().join(" ")
    );
    let _ = writeln!(
        out,
        "oprops {}",
        state.objection_vocabulary().names().join(" ")
    );
    for (w, o) in state.worlds() {
        let _ = writeln!(out, "world {w} : {o}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
network tiny   # comment
oprops O1 O2
node A
node B parents A
objection A : false ; false
objection B | A : O1 ; !O1
objection B | !A : true ; false
prob A : 0.5
prob B | A : 0.9 ; 0.1
prob B | !A : 0
";

    #[test]
    fn parses_a_small_network() {
        let f = parse_network(SMALL).unwrap();
        assert_eq!(f.network.name(), "tiny");
        assert_eq!(f.network.len(), 2);
        let ocn = f.ocn.unwrap();
        let inst = f.network.instantiations(1).nth(1).unwrap();
        assert_eq!(ocn.row(&inst).unwrap().positive, Sentence::Const(true));
        let pcn = f.pcn.unwrap();
        let inst = f.network.instantiations(1).next().unwrap();
        assert_eq!(pcn.row(&inst).unwrap().negative, Some(0.1));
    }

    #[test]
    fn reports_line_numbers() {
        let cases = [
            (
                "network n\nnode A\nobjection A : false ; false\n",
                3,
                "oprops",
            ),
            (
                "network n\noprops O\nnode A\nobjection A : O9 ; false\n",
                4,
                "O9",
            ),
            (
                "network n\noprops O\nnode A\nobjection A : O ; false\nobjection A : O ; false\n",
                5,
                "duplicate",
            ),
            (
                "network n\nnode A\nnode B parents A\nprob B | A & A : 0.5\n",
                4,
                "twice",
            ),
            ("network n\nnode A\nprob A : half\n", 3, "not a number"),
            ("network n\nnode A\nfrob A\n", 3, "unknown directive"),
            ("network n\nnode A\nprob Z : 0.5\n", 3, "unknown node"),
            ("network n\nnode A\nprob A 0.5\n", 3, "`:`"),
            (
                "network n\noprops O\nnode A\nobjection A : O\n",
                4,
                "expected",
            ),
        ];
        for (text, line, fragment) in cases {
            match parse_network(text) {
                Err(Error::File { line: got, message }) => {
                    assert_eq!(got, line, "{text}");
                    assert!(message.contains(fragment), "{message} / {fragment}");
                }
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn state_files_round_trip() {
        let text = "\
state birdfly
lprops bird fly
oprops normal
world bird & fly : !normal
world bird & !fly : normal
world !bird & fly : true
world !bird & !fly : false
";
        let s = parse_state(text).unwrap();
        let dumped = write_state(&s.name, &s.state);
        let back = parse_state(&dumped).unwrap();
        assert_eq!(back.state, s.state);
        assert!(matches!(parse_document(text).unwrap(), Document::State(_)));
        let missing = text.replace("world !bird & !fly : false\n", "");
        assert!(matches!(parse_state(&missing), Err(Error::MissingWorld(_))));
        let partial = text.replace("world bird & fly", "world bird");
        assert!(matches!(
            parse_state(&partial),
            Err(Error::File { line: 4, .. })
        ));
    }

    #[test]
    fn document_kind() {
        assert!(matches!(
            parse_document(SMALL).unwrap(),
            Document::Network(_)
        ));
        assert!(matches!(
            parse_document("# nothing\n"),
            Err(Error::File { .. })
        ));
        assert!(matches!(
            parse_document("node A\n"),
            Err(Error::File { line: 1, .. })
        ));
    }
}
