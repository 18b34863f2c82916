//! Evaluation trees and the three evaluators.
//!
//! A tree is a binary decision structure: an inner node is labelled by an atom,
//! its left branch is followed when the atom yields true. Leaves are the truth
//! values `T`, `F` or one of the holes `□`, `□₁`, `□₂` used by decompositions.
//! Children are reference counted so that leaf replacement shares the
//! substituted subtrees instead of copying them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, ParseError, Result};
use crate::terms::{Atom, Language, Term};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    T,
    F,
    Hole,
    Hole1,
    Hole2,
    Node(Atom, Arc<Tree>, Arc<Tree>),
}

/// Alias used where a tree is expected to contain holes.
pub type HoleTree = Tree;

impl Tree {
    pub fn node(a: Atom, left: Tree, right: Tree) -> Tree {
        Tree::Node(a, Arc::new(left), Arc::new(right))
    }

    /// `Y ⊴ a ⊵ Z` with shared children.
    pub fn node_arc(a: Atom, left: Arc<Tree>, right: Arc<Tree>) -> Tree {
        Tree::Node(a, left, right)
    }

    /// The single-node tree `T ⊴ a ⊵ F`.
    pub fn atom(a: Atom) -> Tree {
        Tree::node(a, Tree::T, Tree::F)
    }

    pub fn is_leaf(&self) -> bool {
        !matches!(self, Tree::Node(..))
    }

    pub fn depth(&self) -> usize {
        match self {
            Tree::Node(_, l, r) => 1 + l.depth().max(r.depth()),
            _ => 0,
        }
    }

    /// Number of leaves, counting shared subtrees once per occurrence.
    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Node(_, l, r) => l.leaf_count() + r.leaf_count(),
            _ => 1,
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Tree::Node(_, l, r) => 1 + l.node_count() + r.node_count(),
            _ => 0,
        }
    }

    /// True if some leaf satisfies `p`.
    pub fn any_leaf(&self, p: &dyn Fn(&Tree) -> bool) -> bool {
        match self {
            Tree::Node(_, l, r) => l.any_leaf(p) || r.any_leaf(p),
            leaf => p(leaf),
        }
    }

    pub fn all_leaves(&self, p: &dyn Fn(&Tree) -> bool) -> bool {
        !self.any_leaf(&|l| !p(l))
    }

    pub fn has_t(&self) -> bool {
        self.any_leaf(&|l| *l == Tree::T)
    }

    pub fn has_f(&self) -> bool {
        self.any_leaf(&|l| *l == Tree::F)
    }

    pub fn only_t(&self) -> bool {
        self.all_leaves(&|l| *l == Tree::T)
    }

    pub fn only_f(&self) -> bool {
        self.all_leaves(&|l| *l == Tree::F)
    }

    /// True if the tree has no holes.
    pub fn is_closed(&self) -> bool {
        self.all_leaves(&|l| matches!(l, Tree::T | Tree::F))
    }

    /// Simultaneous leaf replacement. `map` is consulted for every leaf and
    /// leaves it maps to `None` are kept.
    pub fn replace(&self, map: &dyn Fn(&Tree) -> Option<Arc<Tree>>) -> Tree {
        match self {
            Tree::Node(a, l, r) => Tree::Node(a.clone(), replace_arc(l, map), replace_arc(r, map)),
            leaf => map(leaf).map_or_else(|| leaf.clone(), |t| (*t).clone()),
        }
    }

    /// `X[T ↦ t, F ↦ f]`.
    pub fn replace_tf(&self, t: &Tree, f: &Tree) -> Tree {
        let (t, f) = (Arc::new(t.clone()), Arc::new(f.clone()));
        self.replace(&|leaf| match leaf {
            Tree::T => Some(t.clone()),
            Tree::F => Some(f.clone()),
            _ => None,
        })
    }

    /// Replaces every leaf equal to `from` by `to`.
    pub fn replace_leaf(&self, from: &Tree, to: &Tree) -> Tree {
        let to = Arc::new(to.clone());
        self.replace(&|leaf| (leaf == from).then(|| to.clone()))
    }

    /// The subtree reached by following `path` from the root, if every step
    /// names the atom of the node it is taken at.
    pub fn follow(&self, path: &[(Atom, bool)]) -> Option<&Tree> {
        let mut cur = self;
        for (atom, v) in path {
            match cur {
                Tree::Node(a, l, r) if a == atom => cur = if *v { l } else { r },
                _ => return None,
            }
        }
        Some(cur)
    }

    /// Graphviz rendering; edges are labelled `T` (left) and `F` (right).
    pub fn to_dot(&self) -> String {
        fn walk(t: &Tree, next: &mut usize, out: &mut String) -> usize {
            let id = *next;
            *next += 1;
            match t {
                Tree::Node(a, l, r) => {
                    out.push_str(&format!("  n{id} [label=\"{a}\"];\n"));
                    let li = walk(l, next, out);
                    let ri = walk(r, next, out);
                    out.push_str(&format!("  n{id} -> n{li} [label=\"T\"];\n"));
                    out.push_str(&format!("  n{id} -> n{ri} [label=\"F\"];\n"));
                }
                leaf => {
                    out.push_str(&format!("  n{id} [label=\"{leaf}\", shape=box];\n"));
                }
            }
            id
        }
        let mut out = String::from("digraph tree {\n");
        walk(self, &mut 0, &mut out);
        out.push_str("}\n");
        out
    }
}

fn replace_arc(t: &Arc<Tree>, map: &dyn Fn(&Tree) -> Option<Arc<Tree>>) -> Arc<Tree> {
    match &**t {
        Tree::Node(a, l, r) => {
            let (nl, nr) = (replace_arc(l, map), replace_arc(r, map));
            if Arc::ptr_eq(&nl, l) && Arc::ptr_eq(&nr, r) {
                t.clone()
            } else {
                Arc::new(Tree::Node(a.clone(), nl, nr))
            }
        }
        leaf => map(leaf).unwrap_or_else(|| t.clone()),
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::T => f.write_str("T"),
            Tree::F => f.write_str("F"),
            Tree::Hole => f.write_str("[]"),
            Tree::Hole1 => f.write_str("[1]"),
            Tree::Hole2 => f.write_str("[2]"),
            Tree::Node(a, l, r) => write!(f, "({l} <| {a} |> {r})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Reads the text format produced by `Display`.
pub fn parse_tree(src: &str) -> std::result::Result<Tree, ParseError> {
    struct P<'a> {
        s: &'a [u8],
        src: &'a str,
        i: usize,
    }
    impl P<'_> {
        fn ws(&mut self) {
            while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
                self.i += 1;
            }
        }
        fn eat(&mut self, lit: &str) -> bool {
            self.ws();
            if self.src[self.i..].starts_with(lit) {
                self.i += lit.len();
                true
            } else {
                false
            }
        }
        fn fail<T>(&self, expected: Vec<&'static str>) -> std::result::Result<T, ParseError> {
            let found = match self.src[self.i..].chars().next() {
                None => "end of input".to_string(),
                Some(c) => format!("{c:?}"),
            };
            Err(ParseError::Unexpected {
                offset: self.i,
                found,
                expected,
            })
        }
        fn tree(&mut self) -> std::result::Result<Tree, ParseError> {
            self.ws();
            if self.eat("[1]") {
                return Ok(Tree::Hole1);
            }
            if self.eat("[2]") {
                return Ok(Tree::Hole2);
            }
            if self.eat("[]") {
                return Ok(Tree::Hole);
            }
            if self.eat("(") {
                let l = self.tree()?;
                if !self.eat("<|") {
                    return self.fail(vec!["'<|'"]);
                }
                self.ws();
                let start = self.i;
                while self.i < self.s.len() && (self.s[self.i] as char).is_ascii_alphanumeric()
                    || self.i < self.s.len() && self.s[self.i] == b'_'
                {
                    self.i += 1;
                }
                let atom =
                    Atom::new(&self.src[start..self.i]).map_err(|_| ParseError::Unexpected {
                        offset: start,
                        found: format!("{:?}", &self.src[start..self.i]),
                        expected: vec!["atom"],
                    })?;
                if !self.eat("|>") {
                    return self.fail(vec!["'|>'"]);
                }
                let r = self.tree()?;
                if !self.eat(")") {
                    return self.fail(vec!["')'"]);
                }
                return Ok(Tree::node(atom, l, r));
            }
            // T and F must not be followed by identifier characters.
            for (lit, leaf) in [("T", Tree::T), ("F", Tree::F)] {
                let next = self.s.get(self.i + 1).copied();
                if self.src[self.i..].starts_with(lit)
                    && !next.is_some_and(|c| (c as char).is_ascii_alphanumeric() || c == b'_')
                {
                    self.i += 1;
                    return Ok(leaf);
                }
            }
            self.fail(vec!["T", "F", "[]", "[1]", "[2]", "'('"])
        }
    }
    if src.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = P {
        s: src.as_bytes(),
        src,
        i: 0,
    };
    let t = p.tree()?;
    p.ws();
    if p.i != src.len() {
        return p.fail(vec!["end of input"]);
    }
    Ok(t)
}

impl std::str::FromStr for Tree {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_tree(s)
    }
}

fn eval(t: &Term, lang: Language, op: &'static str) -> Result<Arc<Tree>> {
    let ok = t.languages().contains(lang);
    if !ok {
        return Err(Error::WrongLanguage {
            op,
            expected: lang.name(),
        });
    }
    eval_unchecked(t)
}

fn leaf(t: Tree) -> Arc<Tree> {
    Arc::new(t)
}

fn eval_unchecked(t: &Term) -> Result<Arc<Tree>> {
    let map = |x: &Arc<Tree>, on_t: Option<Arc<Tree>>, on_f: Option<Arc<Tree>>| {
        replace_arc(x, &|l| match l {
            Tree::T => on_t.clone(),
            Tree::F => on_f.clone(),
            _ => None,
        })
    };
    Ok(match t {
        Term::T => leaf(Tree::T),
        Term::F => leaf(Tree::F),
        Term::Atom(a) => leaf(Tree::atom(a.clone())),
        Term::Var(v) => return Err(Error::UnboundVariable(v.to_string())),
        Term::Not(p) => map(
            &eval_unchecked(p)?,
            Some(leaf(Tree::F)),
            Some(leaf(Tree::T)),
        ),
        Term::AndFull(p, q) => {
            let (p, q) = (eval_unchecked(p)?, eval_unchecked(q)?);
            let q_false = map(&q, Some(leaf(Tree::F)), None);
            map(&p, Some(q), Some(q_false))
        }
        Term::OrFull(p, q) => {
            let (p, q) = (eval_unchecked(p)?, eval_unchecked(q)?);
            let q_true = map(&q, None, Some(leaf(Tree::T)));
            map(&p, Some(q_true), Some(q))
        }
        Term::AndSc(p, q) => map(&eval_unchecked(p)?, Some(eval_unchecked(q)?), None),
        Term::OrSc(p, q) => map(&eval_unchecked(p)?, None, Some(eval_unchecked(q)?)),
        Term::Cond { then, cond, els } => map(
            &eval_unchecked(cond)?,
            Some(eval_unchecked(then)?),
            Some(eval_unchecked(els)?),
        ),
    })
}

/// Full evaluation of an FT-term.
pub fn fe(t: &Term) -> Result<Tree> {
    eval(t, Language::Ft, "fe").map(Arc::unwrap_or_clone)
}

/// Short-circuit evaluation of an ST-term.
pub fn se(t: &Term) -> Result<Tree> {
    eval(t, Language::St, "se").map(Arc::unwrap_or_clone)
}

/// Conditional evaluation of any closed term: full connectives use the full
/// clauses, short-circuit ones the short-circuit clauses.
pub fn ce(t: &Term) -> Result<Tree> {
    eval(t, Language::Mixed, "ce").map(Arc::unwrap_or_clone)
}

/// One root-to-leaf path: the atoms met with the values they yielded, and the
/// value at the leaf.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Trace {
    pub path: Vec<(Atom, bool)>,
    pub value: bool,
}

fn tv(b: bool) -> char {
    if b {
        'T'
    } else {
        'F'
    }
}

impl Trace {
    fn key(&self) -> (Vec<(&Atom, bool)>, bool) {
        (
            self.path.iter().map(|(a, v)| (a, !v)).collect(),
            !self.value,
        )
    }
}

impl Ord for Trace {
    /// Lexicographic by path, with `T` ordered before `F`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Trace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            f.write_str("ε")?;
        }
        for (i, (a, v)) in self.path.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}{}", tv(*v))?;
        }
        write!(f, " -> {}", tv(self.value))
    }
}

impl fmt::Debug for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All traces of a closed tree, sorted. Hole leaves contribute no trace.
pub fn traces(t: &Tree) -> Vec<Trace> {
    fn walk(t: &Tree, path: &mut Vec<(Atom, bool)>, out: &mut Vec<Trace>) {
        match t {
            Tree::T | Tree::F => out.push(Trace {
                path: path.clone(),
                value: *t == Tree::T,
            }),
            Tree::Node(a, l, r) => {
                path.push((a.clone(), true));
                walk(l, path, out);
                path.last_mut().expect("pushed").1 = false;
                walk(r, path, out);
                path.pop();
            }
            _ => {}
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Rebuilds the tree whose traces are exactly `ts`.
pub fn from_traces(ts: &[Trace]) -> Result<Tree> {
    fn build(ts: &[&Trace], depth: usize) -> Result<Tree> {
        let Some(first) = ts.first() else {
            return Err(Error::BadTraces("some branch has no trace".into()));
        };
        if first.path.len() == depth {
            if ts.len() != 1 {
                return Err(Error::BadTraces("a trace is a prefix of another".into()));
            }
            return Ok(if first.value { Tree::T } else { Tree::F });
        }
        let atom = &first.path[depth].0;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for t in ts {
            match t.path.get(depth) {
                Some((a, v)) if a == atom => {
                    if *v {
                        left.push(*t)
                    } else {
                        right.push(*t)
                    }
                }
                Some(_) => return Err(Error::BadTraces("atoms disagree at a node".into())),
                None => return Err(Error::BadTraces("a trace is a prefix of another".into())),
            }
        }
        Ok(Tree::node(
            atom.clone(),
            build(&left, depth + 1)?,
            build(&right, depth + 1)?,
        ))
    }
    let refs: Vec<&Trace> = ts.iter().collect();
    build(&refs, 0)
}

/// Collapses branches that re-query an atom already answered on the path:
/// a node `a` met below an earlier `a` keeps only the branch consistent with
/// the earlier answer, duplicated on both sides.
pub fn memorize(t: &Tree) -> Tree {
    fn walk(t: &Tree, held: &mut Vec<(Atom, bool)>) -> Tree {
        match t {
            Tree::Node(a, l, r) => match held.iter().find(|(b, _)| b == a) {
                Some(&(_, v)) => {
                    let kept = walk(if v { l } else { r }, held);
                    let kept = Arc::new(kept);
                    Tree::Node(a.clone(), kept.clone(), kept)
                }
                None => {
                    held.push((a.clone(), true));
                    let nl = walk(l, held);
                    held.last_mut().expect("pushed").1 = false;
                    let nr = walk(r, held);
                    held.pop();
                    Tree::node(a.clone(), nl, nr)
                }
            },
            leaf => leaf.clone(),
        }
    }
    walk(t, &mut Vec::new())
}
