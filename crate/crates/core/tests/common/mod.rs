#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use seqlogic::{Atom, Language, Term};

/// Runs `t` against a fixed sequence of atom replies, recording every query.
/// Returns `None` when the replies run out before a value is reached.
fn run(t: &Term, replies: &[bool], pos: &mut usize, log: &mut Vec<(Atom, bool)>) -> Option<bool> {
    match t {
        Term::T => Some(true),
        Term::F => Some(false),
        Term::Atom(a) => {
            let v = *replies.get(*pos)?;
            *pos += 1;
            log.push((a.clone(), v));
            Some(v)
        }
        Term::Var(_) => panic!("open term"),
        Term::Not(p) => run(p, replies, pos, log).map(|v| !v),
        Term::AndFull(p, q) => {
            let a = run(p, replies, pos, log)?;
            let b = run(q, replies, pos, log)?;
            Some(a && b)
        }
        Term::OrFull(p, q) => {
            let a = run(p, replies, pos, log)?;
            let b = run(q, replies, pos, log)?;
            Some(a || b)
        }
        Term::AndSc(p, q) => {
            if run(p, replies, pos, log)? {
                run(q, replies, pos, log)
            } else {
                Some(false)
            }
        }
        Term::OrSc(p, q) => {
            if run(p, replies, pos, log)? {
                Some(true)
            } else {
                run(q, replies, pos, log)
            }
        }
        Term::Cond { then, cond, els } => {
            if run(cond, replies, pos, log)? {
                run(then, replies, pos, log)
            } else {
                run(els, replies, pos, log)
            }
        }
    }
}

/// Traces of `t` by exhaustive simulation, rendered like the library does.
pub fn oracle_traces(t: &Term) -> BTreeSet<String> {
    fn explore(t: &Term, replies: &mut Vec<bool>, out: &mut BTreeSet<String>) {
        let mut pos = 0;
        let mut log = Vec::new();
        match run(t, replies, &mut pos, &mut log) {
            Some(v) => {
                let mut s: Vec<String> = log
                    .iter()
                    .map(|(a, b)| format!("{a}{}", if *b { 'T' } else { 'F' }))
                    .collect();
                if s.is_empty() {
                    s.push("ε".into());
                }
                out.insert(format!("{} -> {}", s.join(" "), if v { 'T' } else { 'F' }));
            }
            None => {
                for b in [true, false] {
                    replies.push(b);
                    explore(t, replies, out);
                    replies.pop();
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    explore(t, &mut Vec::new(), &mut out);
    out
}

pub fn atom_strategy(alphabet: usize) -> impl Strategy<Value = Term> {
    (0..alphabet).prop_map(|i| Term::Atom(Atom::nth(i)))
}

/// Random terms of a language with a bounded number of atom occurrences.
pub fn term_strategy(lang: Language, max_atoms: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        3 => atom_strategy(3),
        1 => Just(Term::T),
        1 => Just(Term::F),
    ];
    leaf.prop_recursive(5, 24, 3, move |inner| {
        let bin = (inner.clone(), inner.clone());
        match lang {
            Language::Ft => prop_oneof![
                inner.clone().prop_map(Term::not),
                bin.clone().prop_map(|(p, q)| Term::and_f(p, q)),
                bin.prop_map(|(p, q)| Term::or_f(p, q)),
            ]
            .boxed(),
            Language::St => prop_oneof![
                inner.clone().prop_map(Term::not),
                bin.clone().prop_map(|(p, q)| Term::and_sc(p, q)),
                bin.prop_map(|(p, q)| Term::or_sc(p, q)),
            ]
            .boxed(),
            Language::Ct => (inner.clone(), inner.clone(), inner)
                .prop_map(|(t, c, e)| Term::cond(t, c, e))
                .boxed(),
            Language::Mixed => prop_oneof![
                inner.clone().prop_map(Term::not),
                bin.clone().prop_map(|(p, q)| Term::and_f(p, q)),
                bin.clone().prop_map(|(p, q)| Term::or_f(p, q)),
                bin.clone().prop_map(|(p, q)| Term::and_sc(p, q)),
                bin.prop_map(|(p, q)| Term::or_sc(p, q)),
                (inner.clone(), inner.clone(), inner).prop_map(|(t, c, e)| Term::cond(t, c, e)),
            ]
            .boxed(),
        }
    })
    .prop_filter("too many atoms", move |t| t.atom_count() <= max_atoms)
}
