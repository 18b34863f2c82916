//! Tree decompositions and the inverse of evaluation on normal forms.
//!
//! A decomposition splits a closed tree `X` into a context `Y` with hole
//! leaves and a core `Z` such that filling the holes rebuilds `X`:
//!
//! * full evaluation, conjunction: `X = Y[□₁ ↦ Z, □₂ ↦ Z[T ↦ F]]`
//! * full evaluation, disjunction: `X = Y[□₁ ↦ Z[F ↦ T], □₂ ↦ Z]`
//! * short-circuit, conjunction: `X = Y[□ ↦ Z]`, `Y` has `F` leaves but no `T`
//! * short-circuit, disjunction: `X = Y[□ ↦ Z]`, `Y` has `T` leaves but no `F`
//! * T-star split (both logics): `X = Y[□ ↦ Z]`, `Y` has no `T`/`F` leaves
//!   and `Z` admits no such split itself
//!
//! In every case the core contains both `T` and `F`, and among the valid
//! cores the one of least depth is chosen. Ties are broken by the text
//! rendering of the core.
//!
//! Subtrees are interned first so that equality tests are integer
//! comparisons and every search is linear in the number of distinct subtrees.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::evaltree::{fe, se, Tree};
use crate::terms::{Atom, Term};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Shape {
    T,
    F,
    Node(Atom, usize, usize),
}

/// Hash-consed view of one tree.
struct Dag {
    shapes: Vec<Shape>,
    index: HashMap<Shape, usize>,
    depth: Vec<usize>,
    has_t: Vec<bool>,
    has_f: Vec<bool>,
    root: usize,
}

impl Dag {
    fn new(x: &Tree) -> Option<Dag> {
        let mut dag = Dag {
            shapes: Vec::new(),
            index: HashMap::new(),
            depth: Vec::new(),
            has_t: Vec::new(),
            has_f: Vec::new(),
            root: 0,
        };
        let mut seen: HashMap<*const Tree, usize> = HashMap::new();
        dag.root = dag.intern(x, &mut seen)?;
        Some(dag)
    }

    fn add(&mut self, s: Shape) -> usize {
        if let Some(&id) = self.index.get(&s) {
            return id;
        }
        let id = self.shapes.len();
        let (d, t, f) = match &s {
            Shape::T => (0, true, false),
            Shape::F => (0, false, true),
            Shape::Node(_, l, r) => (
                1 + self.depth[*l].max(self.depth[*r]),
                self.has_t[*l] || self.has_t[*r],
                self.has_f[*l] || self.has_f[*r],
            ),
        };
        self.shapes.push(s.clone());
        self.index.insert(s, id);
        self.depth.push(d);
        self.has_t.push(t);
        self.has_f.push(f);
        id
    }

    /// `None` if the tree has holes.
    fn intern(&mut self, t: &Tree, seen: &mut HashMap<*const Tree, usize>) -> Option<usize> {
        let shape = match t {
            Tree::T => Shape::T,
            Tree::F => Shape::F,
            Tree::Node(a, l, r) => {
                let mut child = |c: &Arc<Tree>| -> Option<usize> {
                    let key = Arc::as_ptr(c);
                    if let Some(&id) = seen.get(&key) {
                        return Some(id);
                    }
                    let id = self.intern(c, seen)?;
                    seen.insert(key, id);
                    Some(id)
                };
                let (li, ri) = (child(l)?, child(r)?);
                Shape::Node(a.clone(), li, ri)
            }
            _ => return None,
        };
        Some(self.add(shape))
    }

    fn lookup(&self, s: &Shape) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Id of the subtree `id` with leaf `from` replaced by `to`, if that tree
    /// occurs in the dag.
    fn swapped(&self, id: usize, from: &Shape, to: &Shape) -> Option<usize> {
        fn go(
            dag: &Dag,
            id: usize,
            from: &Shape,
            to: &Shape,
            memo: &mut HashMap<usize, Option<usize>>,
        ) -> Option<usize> {
            if let Some(&r) = memo.get(&id) {
                return r;
            }
            let r = match &dag.shapes[id] {
                s if s == from => dag.lookup(to),
                Shape::Node(a, l, r) => {
                    let l2 = go(dag, *l, from, to, memo);
                    let r2 = go(dag, *r, from, to, memo);
                    match (l2, r2) {
                        (Some(l2), Some(r2)) => dag.lookup(&Shape::Node(a.clone(), l2, r2)),
                        _ => None,
                    }
                }
                _ => Some(id),
            };
            memo.insert(id, r);
            r
        }
        go(self, id, from, to, &mut HashMap::new())
    }

    fn tree(&self, id: usize, memo: &mut HashMap<usize, Arc<Tree>>) -> Arc<Tree> {
        if let Some(t) = memo.get(&id) {
            return t.clone();
        }
        let t = Arc::new(match &self.shapes[id] {
            Shape::T => Tree::T,
            Shape::F => Tree::F,
            Shape::Node(a, l, r) => Tree::Node(a.clone(), self.tree(*l, memo), self.tree(*r, memo)),
        });
        memo.insert(id, t.clone());
        t
    }

    fn to_tree(&self, id: usize) -> Tree {
        (*self.tree(id, &mut HashMap::new())).clone()
    }

    /// Subtrees holding both `T` and `F`, least depth first, ties broken by
    /// their text rendering.
    fn mixed_subtrees(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.shapes.len())
            .filter(|&i| self.has_t[i] && self.has_f[i])
            .collect();
        ids.sort_by_key(|&i| self.depth[i]);
        let mut memo = HashMap::new();
        let mut out = Vec::with_capacity(ids.len());
        for group in ids.chunk_by(|&a, &b| self.depth[a] == self.depth[b]) {
            let mut group = group.to_vec();
            if group.len() > 1 {
                group.sort_by_cached_key(|&i| self.tree(i, &mut memo).to_string());
            }
            out.extend(group);
        }
        out
    }

    /// Builds the context for a core: every occurrence of a `cores` entry is
    /// replaced by its hole, everything else copied.
    fn context(&self, id: usize, cores: &[(usize, Tree)]) -> Tree {
        if let Some((_, hole)) = cores.iter().find(|(c, _)| *c == id) {
            return hole.clone();
        }
        match &self.shapes[id] {
            Shape::T => Tree::T,
            Shape::F => Tree::F,
            Shape::Node(a, l, r) => {
                Tree::node(a.clone(), self.context(*l, cores), self.context(*r, cores))
            }
        }
    }

    /// Checks the context obtained by cutting at `cores`: every remaining
    /// leaf must pass `leaf_ok`. Returns the set of cores and leaves seen,
    /// as a bitmask (bit i for core i, bit 8 for `T`, bit 9 for `F`).
    fn scan(&self, cores: &[usize], leaf_ok: &dyn Fn(&Shape) -> bool) -> Option<u16> {
        fn go(
            dag: &Dag,
            id: usize,
            cores: &[usize],
            leaf_ok: &dyn Fn(&Shape) -> bool,
            memo: &mut [Option<Option<u16>>],
        ) -> Option<u16> {
            if let Some(r) = memo[id] {
                return r;
            }
            let r = if let Some(i) = cores.iter().position(|&c| c == id) {
                Some(1u16 << i)
            } else {
                match &dag.shapes[id] {
                    Shape::Node(_, l, r) => {
                        let lm = go(dag, *l, cores, leaf_ok, memo);
                        match lm {
                            None => None,
                            Some(lm) => go(dag, *r, cores, leaf_ok, memo).map(|rm| lm | rm),
                        }
                    }
                    s if leaf_ok(s) => Some(if *s == Shape::T { 1 << 8 } else { 1 << 9 }),
                    _ => None,
                }
            };
            memo[id] = Some(r);
            r
        }
        let mut memo = vec![None; self.shapes.len()];
        go(self, self.root, cores, leaf_ok, &mut memo)
    }

    /// For every subtree, the cores `Z` it splits into with a hole-only
    /// context.
    fn cut_candidates(&self) -> Vec<BTreeSet<usize>> {
        let mut cands: Vec<BTreeSet<usize>> = Vec::with_capacity(self.shapes.len());
        // Children are always interned before their parents.
        for (id, s) in self.shapes.iter().enumerate() {
            let mut set = match s {
                Shape::Node(_, l, r) => cands[*l].intersection(&cands[*r]).copied().collect(),
                _ => BTreeSet::new(),
            };
            set.insert(id);
            cands.push(set);
        }
        cands
    }
}

/// Result of a decomposition: `(context, core)`.
pub type Decomposition = (Tree, Tree);

fn fel_split(x: &Tree, conj: bool) -> Option<Decomposition> {
    let dag = Dag::new(x)?;
    for z in dag.mixed_subtrees() {
        // For a conjunction the core sits under □₁ and its all-false variant
        // under □₂; for a disjunction the all-true variant sits under □₁.
        let other = if conj {
            dag.swapped(z, &Shape::T, &Shape::F)
        } else {
            dag.swapped(z, &Shape::F, &Shape::T)
        };
        let Some(other) = other else { continue };
        let (h1, h2) = if conj { (z, other) } else { (other, z) };
        if dag.scan(&[h1, h2], &|_| false) == Some(0b11) {
            let y = dag.context(dag.root, &[(h1, Tree::Hole1), (h2, Tree::Hole2)]);
            return Some((y, dag.to_tree(z)));
        }
    }
    None
}

/// Conjunction decomposition for full evaluation.
pub fn fel_cd(x: &Tree) -> Option<Decomposition> {
    fel_split(x, true)
}

/// Disjunction decomposition for full evaluation.
pub fn fel_dd(x: &Tree) -> Option<Decomposition> {
    fel_split(x, false)
}

fn scl_split(x: &Tree, conj: bool) -> Option<Decomposition> {
    let dag = Dag::new(x)?;
    let (allowed, needed) = if conj {
        (Shape::F, 1 << 9)
    } else {
        (Shape::T, 1 << 8)
    };
    for z in dag.mixed_subtrees() {
        match dag.scan(&[z], &|s| *s == allowed) {
            Some(m) if m & 1 != 0 && m & needed != 0 => {
                let y = dag.context(dag.root, &[(z, Tree::Hole)]);
                return Some((y, dag.to_tree(z)));
            }
            _ => {}
        }
    }
    None
}

/// Conjunction decomposition for short-circuit evaluation.
pub fn scl_cd(x: &Tree) -> Option<Decomposition> {
    scl_split(x, true)
}

/// Disjunction decomposition for short-circuit evaluation.
pub fn scl_dd(x: &Tree) -> Option<Decomposition> {
    scl_split(x, false)
}

fn tstar_split(x: &Tree) -> Option<Decomposition> {
    let dag = Dag::new(x)?;
    let cands = dag.cut_candidates();
    let top = &cands[dag.root];
    let z = dag
        .mixed_subtrees()
        .into_iter()
        .find(|z| top.contains(z) && cands[*z].len() == 1)?;
    let y = dag.context(dag.root, &[(z, Tree::Hole)]);
    Some((y, dag.to_tree(z)))
}

/// T-star split for full evaluation.
pub fn fel_tsd(x: &Tree) -> Option<Decomposition> {
    tstar_split(x)
}

/// T-star split for short-circuit evaluation.
pub fn scl_tsd(x: &Tree) -> Option<Decomposition> {
    tstar_split(x)
}

fn not_in_image(what: &str, x: &Tree) -> Error {
    Error::NotInImage(format!("{what}: {x}"))
}

fn node_parts(x: &Tree) -> Option<(Term, &Tree, &Tree)> {
    match x {
        Tree::Node(a, l, r) => Some((Term::Atom(a.clone()), l, r)),
        _ => None,
    }
}

fn fel_gt(x: &Tree) -> Result<Term> {
    match x {
        Tree::T => Ok(Term::T),
        _ => {
            let (a, l, _) = node_parts(x).ok_or_else(|| not_in_image("T-term", x))?;
            Ok(Term::or_f(a, fel_gt(l)?))
        }
    }
}

fn fel_gf(x: &Tree) -> Result<Term> {
    match x {
        Tree::F => Ok(Term::F),
        _ => {
            let (a, _, r) = node_parts(x).ok_or_else(|| not_in_image("F-term", x))?;
            Ok(Term::and_f(a, fel_gf(r)?))
        }
    }
}

fn fel_gl(x: &Tree) -> Result<Term> {
    let (a, l, r) = node_parts(x).ok_or_else(|| not_in_image("l-term", x))?;
    if l.only_t() {
        Ok(Term::and_f(a, fel_gt(l)?))
    } else if r.only_t() {
        Ok(Term::and_f(Term::not(a), fel_gt(r)?))
    } else {
        Err(not_in_image("l-term", x))
    }
}

fn fel_gstar(x: &Tree) -> Result<Term> {
    if let Some((y, z)) = fel_cd(x) {
        let y = y
            .replace_leaf(&Tree::Hole1, &Tree::T)
            .replace_leaf(&Tree::Hole2, &Tree::F);
        return Ok(Term::and_f(fel_gstar(&y)?, fel_gstar(&z)?));
    }
    if let Some((y, z)) = fel_dd(x) {
        let y = y
            .replace_leaf(&Tree::Hole1, &Tree::T)
            .replace_leaf(&Tree::Hole2, &Tree::F);
        return Ok(Term::or_f(fel_gstar(&y)?, fel_gstar(&z)?));
    }
    fel_gl(x)
}

/// Inverse of full evaluation: the normal form whose tree is `x`.
pub fn fel_g(x: &Tree) -> Result<Term> {
    if !x.is_closed() {
        return Err(not_in_image("tree has holes", x));
    }
    let t = if x.only_t() {
        fel_gt(x)?
    } else if x.only_f() {
        fel_gf(x)?
    } else {
        let (y, z) = fel_tsd(x).ok_or_else(|| not_in_image("no T-star split", x))?;
        Term::and_f(
            fel_gt(&y.replace_leaf(&Tree::Hole, &Tree::T))?,
            fel_gstar(&z)?,
        )
    };
    if fe(&t)? != *x {
        return Err(not_in_image("reconstruction differs", x));
    }
    Ok(t)
}

fn scl_gt(x: &Tree) -> Result<Term> {
    match x {
        Tree::T => Ok(Term::T),
        _ => {
            let (a, l, r) = node_parts(x).ok_or_else(|| not_in_image("T-term", x))?;
            Ok(Term::or_sc(Term::and_sc(a, scl_gt(l)?), scl_gt(r)?))
        }
    }
}

fn scl_gf(x: &Tree) -> Result<Term> {
    match x {
        Tree::F => Ok(Term::F),
        _ => {
            let (a, l, r) = node_parts(x).ok_or_else(|| not_in_image("F-term", x))?;
            Ok(Term::and_sc(Term::or_sc(a, scl_gf(r)?), scl_gf(l)?))
        }
    }
}

fn scl_gl(x: &Tree) -> Result<Term> {
    let (a, l, r) = node_parts(x).ok_or_else(|| not_in_image("l-term", x))?;
    if l.only_t() {
        Ok(Term::or_sc(Term::and_sc(a, scl_gt(l)?), scl_gf(r)?))
    } else if r.only_t() {
        Ok(Term::or_sc(
            Term::and_sc(Term::not(a), scl_gt(r)?),
            scl_gf(l)?,
        ))
    } else {
        Err(not_in_image("l-term", x))
    }
}

fn scl_gstar(x: &Tree) -> Result<Term> {
    if let Some((y, z)) = scl_cd(x) {
        let y = y.replace_leaf(&Tree::Hole, &Tree::T);
        return Ok(Term::and_sc(scl_gstar(&y)?, scl_gstar(&z)?));
    }
    if let Some((y, z)) = scl_dd(x) {
        let y = y.replace_leaf(&Tree::Hole, &Tree::F);
        return Ok(Term::or_sc(scl_gstar(&y)?, scl_gstar(&z)?));
    }
    scl_gl(x)
}

/// Inverse of short-circuit evaluation: the normal form whose tree is `x`.
pub fn scl_g(x: &Tree) -> Result<Term> {
    if !x.is_closed() {
        return Err(not_in_image("tree has holes", x));
    }
    let t = if x.only_t() {
        scl_gt(x)?
    } else if x.only_f() {
        scl_gf(x)?
    } else {
        let (y, z) = scl_tsd(x).ok_or_else(|| not_in_image("no T-star split", x))?;
        Term::and_sc(
            scl_gt(&y.replace_leaf(&Tree::Hole, &Tree::T))?,
            scl_gstar(&z)?,
        )
    };
    if se(&t)? != *x {
        return Err(not_in_image("reconstruction differs", x));
    }
    Ok(t)
}
