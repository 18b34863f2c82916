//! Propositional terms over atoms, their concrete syntax and language membership.
//!
//! Syntax, loosest binding first: `p ? q : r` (condition `p`, then `q`, else
//! `r`), `||`, `&&`, `|` (full disjunction), `&` (full conjunction), `!`.
//! Binary operators associate to the left, `?:` to the right. Atoms are
//! lowercase identifiers, schema variables uppercase ones other than `T`/`F`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::ParseError;

/// A propositional atom. Names match `[a-z][A-Za-z0-9_]*`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Self, ParseError> {
        let mut chars = name.char_indices();
        match chars.next() {
            None => return Err(ParseError::Empty),
            Some((_, c)) if c.is_ascii_lowercase() => {}
            Some((offset, ch)) => return Err(ParseError::UnknownChar { offset, ch }),
        }
        if let Some((offset, ch)) = chars.find(|&(_, c)| !is_ident_char(c)) {
            return Err(ParseError::UnknownChar { offset, ch });
        }
        if name == "true" || name == "false" {
            return Err(ParseError::Unexpected {
                offset: 0,
                found: format!("keyword {name}"),
                expected: vec!["atom"],
            });
        }
        Ok(Atom(name.into()))
    }

    /// The `i`-th atom of the default alphabet: `a`..`z`, then `x26`, `x27`, ...
    pub fn nth(i: usize) -> Self {
        if i < 26 {
            Atom(((b'a' + i as u8) as char).to_string().into())
        } else {
            Atom(format!("x{i}").into())
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    T,
    F,
    Atom(Atom),
    /// Schema variable, only meaningful inside equation schemas.
    Var(Arc<str>),
    Not(Box<Term>),
    AndSc(Box<Term>, Box<Term>),
    OrSc(Box<Term>, Box<Term>),
    AndFull(Box<Term>, Box<Term>),
    OrFull(Box<Term>, Box<Term>),
    /// `then ◁ cond ▷ els`
    Cond {
        then: Box<Term>,
        cond: Box<Term>,
        els: Box<Term>,
    },
}

impl Term {
    pub fn atom(name: &str) -> Self {
        Term::Atom(Atom::new(name).expect("invalid atom name"))
    }

    pub fn var(name: &str) -> Self {
        Term::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(p: Term) -> Self {
        Term::Not(Box::new(p))
    }

    pub fn and_sc(p: Term, q: Term) -> Self {
        Term::AndSc(Box::new(p), Box::new(q))
    }

    pub fn or_sc(p: Term, q: Term) -> Self {
        Term::OrSc(Box::new(p), Box::new(q))
    }

    pub fn and_f(p: Term, q: Term) -> Self {
        Term::AndFull(Box::new(p), Box::new(q))
    }

    pub fn or_f(p: Term, q: Term) -> Self {
        Term::OrFull(Box::new(p), Box::new(q))
    }

    pub fn cond(then: Term, cond: Term, els: Term) -> Self {
        Term::Cond {
            then: Box::new(then),
            cond: Box::new(cond),
            els: Box::new(els),
        }
    }

    /// Number of atom occurrences.
    pub fn atom_count(&self) -> usize {
        match self {
            Term::Atom(_) => 1,
            Term::T | Term::F | Term::Var(_) => 0,
            Term::Not(p) => p.atom_count(),
            Term::AndSc(p, q) | Term::OrSc(p, q) | Term::AndFull(p, q) | Term::OrFull(p, q) => {
                p.atom_count() + q.atom_count()
            }
            Term::Cond { then, cond, els } => {
                then.atom_count() + cond.atom_count() + els.atom_count()
            }
        }
    }

    /// Number of constructors, leaves included.
    pub fn size(&self) -> usize {
        match self {
            Term::T | Term::F | Term::Atom(_) | Term::Var(_) => 1,
            Term::Not(p) => 1 + p.size(),
            Term::AndSc(p, q) | Term::OrSc(p, q) | Term::AndFull(p, q) | Term::OrFull(p, q) => {
                1 + p.size() + q.size()
            }
            Term::Cond { then, cond, els } => 1 + then.size() + cond.size() + els.size(),
        }
    }

    pub fn variables(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::T | Term::F | Term::Atom(_) => {}
            Term::Not(p) => p.collect_vars(out),
            Term::AndSc(p, q) | Term::OrSc(p, q) | Term::AndFull(p, q) | Term::OrFull(p, q) => {
                p.collect_vars(out);
                q.collect_vars(out);
            }
            Term::Cond { then, cond, els } => {
                then.collect_vars(out);
                cond.collect_vars(out);
                els.collect_vars(out);
            }
        }
    }

    /// Replaces every variable by the term `sub` returns for it; variables
    /// for which `sub` returns `None` are kept.
    pub fn substitute(&self, sub: &dyn Fn(&str) -> Option<Term>) -> Term {
        let go = |t: &Term| Box::new(t.substitute(sub));
        match self {
            Term::Var(v) => sub(v).unwrap_or_else(|| self.clone()),
            Term::T | Term::F | Term::Atom(_) => self.clone(),
            Term::Not(p) => Term::Not(go(p)),
            Term::AndSc(p, q) => Term::AndSc(go(p), go(q)),
            Term::OrSc(p, q) => Term::OrSc(go(p), go(q)),
            Term::AndFull(p, q) => Term::AndFull(go(p), go(q)),
            Term::OrFull(p, q) => Term::OrFull(go(p), go(q)),
            Term::Cond { then, cond, els } => Term::Cond {
                then: go(then),
                cond: go(cond),
                els: go(els),
            },
        }
    }

    pub fn languages(&self) -> Languages {
        classify_language(self)
    }

    fn prec(&self) -> u8 {
        match self {
            Term::Cond { .. } => 0,
            Term::OrSc(..) => 1,
            Term::AndSc(..) => 2,
            Term::OrFull(..) => 3,
            Term::AndFull(..) => 4,
            Term::Not(_) => 5,
            _ => 6,
        }
    }
}

/// The term languages a term belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Language {
    /// Atoms, constants, `!`, `&&`, `||`.
    St,
    /// Atoms, constants, `!`, `&`, `|`.
    Ft,
    /// Atoms, constants and the conditional.
    Ct,
    /// Everything.
    Mixed,
}

impl Language {
    pub fn name(self) -> &'static str {
        match self {
            Language::St => "ST",
            Language::Ft => "FT",
            Language::Ct => "CT",
            Language::Mixed => "MIXED",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Languages {
    pub st: bool,
    pub ft: bool,
    pub ct: bool,
}

impl Languages {
    pub fn contains(self, lang: Language) -> bool {
        match lang {
            Language::St => self.st,
            Language::Ft => self.ft,
            Language::Ct => self.ct,
            Language::Mixed => true,
        }
    }

    fn meet(self, o: Languages) -> Languages {
        Languages {
            st: self.st && o.st,
            ft: self.ft && o.ft,
            ct: self.ct && o.ct,
        }
    }
}

pub fn classify_language(t: &Term) -> Languages {
    const ALL: Languages = Languages {
        st: true,
        ft: true,
        ct: true,
    };
    match t {
        Term::T | Term::F | Term::Atom(_) | Term::Var(_) => ALL,
        Term::Not(p) => classify_language(p).meet(Languages { ct: false, ..ALL }),
        Term::AndSc(p, q) | Term::OrSc(p, q) => classify_language(p)
            .meet(classify_language(q))
            .meet(Languages {
                st: true,
                ft: false,
                ct: false,
            }),
        Term::AndFull(p, q) | Term::OrFull(p, q) => classify_language(p)
            .meet(classify_language(q))
            .meet(Languages {
                st: false,
                ft: true,
                ct: false,
            }),
        Term::Cond { then, cond, els } => classify_language(then)
            .meet(classify_language(cond))
            .meet(classify_language(els))
            .meet(Languages {
                st: false,
                ft: false,
                ct: true,
            }),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, t: &Term, paren: bool| {
            if paren {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        };
        match self {
            Term::T => f.write_str("T"),
            Term::F => f.write_str("F"),
            Term::Atom(a) => write!(f, "{a}"),
            Term::Var(v) => f.write_str(v),
            Term::Not(p) => {
                f.write_str("!")?;
                wrap(f, p, p.prec() < 5)
            }
            Term::AndSc(p, q) | Term::OrSc(p, q) | Term::AndFull(p, q) | Term::OrFull(p, q) => {
                let op = match self {
                    Term::AndSc(..) => "&&",
                    Term::OrSc(..) => "||",
                    Term::AndFull(..) => "&",
                    _ => "|",
                };
                let k = self.prec();
                wrap(f, p, p.prec() < k)?;
                write!(f, " {op} ")?;
                wrap(f, q, q.prec() <= k)
            }
            Term::Cond { then, cond, els } => {
                wrap(f, cond, cond.prec() == 0)?;
                write!(f, " ? {then} : {els}")
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    AndAnd,
    Or,
    OrOr,
    Quest,
    Colon,
    LParen,
    RParen,
    Ident(String),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Not => "'!'".into(),
            Tok::And => "'&'".into(),
            Tok::AndAnd => "'&&'".into(),
            Tok::Or => "'|'".into(),
            Tok::OrOr => "'||'".into(),
            Tok::Quest => "'?'".into(),
            Tok::Colon => "':'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let two = |next: u8| bytes.get(i + 1) == Some(&next);
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' => Tok::Not,
            b'&' if two(b'&') => {
                i += 1;
                Tok::AndAnd
            }
            b'&' => Tok::And,
            b'|' if two(b'|') => {
                i += 1;
                Tok::OrOr
            }
            b'|' => Tok::Or,
            b'?' => Tok::Quest,
            b':' => Tok::Colon,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            c if c.is_ascii_alphabetic() => {
                while i + 1 < bytes.len() && is_ident_char(bytes[i + 1] as char) {
                    i += 1;
                }
                Tok::Ident(src[start..=i].to_string())
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('\u{fffd}');
                return Err(ParseError::UnknownChar { offset: start, ch });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: Vec<&'static str>) -> Result<T, ParseError> {
        let (offset, tok) = &self.toks[self.pos];
        Err(ParseError::Unexpected {
            offset: *offset,
            found: tok.describe(),
            expected,
        })
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(vec![name])
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let c = self.orsc()?;
        if *self.peek() == Tok::Quest {
            self.bump();
            let then = self.term()?;
            self.expect(Tok::Colon, "':'")?;
            let els = self.term()?;
            Ok(Term::cond(then, c, els))
        } else {
            Ok(c)
        }
    }

    fn chain(
        &mut self,
        op: Tok,
        next: fn(&mut Self) -> Result<Term, ParseError>,
        build: fn(Term, Term) -> Term,
    ) -> Result<Term, ParseError> {
        let mut acc = next(self)?;
        while *self.peek() == op {
            self.bump();
            let rhs = next(self)?;
            acc = build(acc, rhs);
        }
        Ok(acc)
    }

    fn orsc(&mut self) -> Result<Term, ParseError> {
        self.chain(Tok::OrOr, Self::andsc, Term::or_sc)
    }

    fn andsc(&mut self) -> Result<Term, ParseError> {
        self.chain(Tok::AndAnd, Self::orf, Term::and_sc)
    }

    fn orf(&mut self) -> Result<Term, ParseError> {
        self.chain(Tok::Or, Self::andf, Term::or_f)
    }

    fn andf(&mut self) -> Result<Term, ParseError> {
        self.chain(Tok::And, Self::unary, Term::and_f)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Term::not(self.unary()?))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(match name.as_str() {
                    "T" | "true" => Term::T,
                    "F" | "false" => Term::F,
                    _ if name.as_bytes()[0].is_ascii_lowercase() => {
                        Term::Atom(Atom(name.as_str().into()))
                    }
                    _ => Term::Var(name.as_str().into()),
                })
            }
            _ => self.fail(vec!["'!'", "'('", "T", "F", "atom", "variable"]),
        }
    }
}

/// Parses a term in the concrete syntax described at the module level.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let toks = lex(src)?;
    if toks.len() == 1 {
        return Err(ParseError::Empty);
    }
    let mut p = Parser { toks, pos: 0 };
    let t = p.term()?;
    match p.peek() {
        Tok::End => Ok(t),
        Tok::Quest | Tok::Colon => p.fail(vec!["end of input"]),
        _ => p.fail(vec!["'&'", "'|'", "'&&'", "'||'", "'?'", "end of input"]),
    }
}

impl std::str::FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}
