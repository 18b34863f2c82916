//! Equality decisions, the full-to-short-circuit translation and randomized
//! checking of equation schemas.

mod catalog;
pub mod gen;

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use catalog::{catalog, catalogs, export_table, Catalog, EquationSchema, SchemaLogic};
pub use gen::{gen_term, NormalGen, TermGen};

use crate::error::{Error, Result};
use crate::evaltree::{ce, fe, se, Trace, Tree};
use crate::normalize::{fel_normalize, scl_normalize};
use crate::terms::{Atom, Language, Term};

/// Default bound on atom occurrences per compared term.
pub const DEFAULT_MAX_ATOMS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivResult {
    pub equal: bool,
    /// A trace of the left tree that the right tree lacks.
    pub witness: Option<Trace>,
    pub lhs_size: usize,
    pub rhs_size: usize,
}

/// A trace present in `l` but not in `r`, if the trees differ.
pub fn find_witness(l: &Tree, r: &Tree) -> Option<Trace> {
    fn leftmost(t: &Tree, path: &mut Vec<(Atom, bool)>) -> Option<bool> {
        match t {
            Tree::T => Some(true),
            Tree::F => Some(false),
            Tree::Node(a, l, r) => {
                path.push((a.clone(), true));
                if let Some(v) = leftmost(l, path) {
                    return Some(v);
                }
                path.last_mut().expect("pushed").1 = false;
                if let Some(v) = leftmost(r, path) {
                    return Some(v);
                }
                path.pop();
                None
            }
            _ => None,
        }
    }
    fn go(l: &Tree, r: &Tree, path: &mut Vec<(Atom, bool)>) -> Option<Trace> {
        match (l, r) {
            (Tree::Node(a, l1, l2), Tree::Node(b, r1, r2)) if a == b => {
                if Arc::ptr_eq(l1, r1) && Arc::ptr_eq(l2, r2) {
                    return None;
                }
                path.push((a.clone(), true));
                if let Some(w) = go(l1, r1, path) {
                    return Some(w);
                }
                path.last_mut().expect("pushed").1 = false;
                if let Some(w) = go(l2, r2, path) {
                    return Some(w);
                }
                path.pop();
                None
            }
            _ if l == r => None,
            _ => {
                let mut p = path.clone();
                let value = leftmost(l, &mut p)?;
                Some(Trace { path: p, value })
            }
        }
    }
    go(l, r, &mut Vec::new())
}

fn guard(t: &Term, max_atoms: usize) -> Result<()> {
    let atoms = t.atom_count();
    if atoms > max_atoms {
        return Err(Error::GuardExceeded {
            atoms,
            limit: max_atoms,
        });
    }
    Ok(())
}

fn compare(l: Tree, r: Tree) -> EquivResult {
    let witness = find_witness(&l, &r);
    EquivResult {
        equal: witness.is_none(),
        witness,
        lhs_size: l.leaf_count(),
        rhs_size: r.leaf_count(),
    }
}

fn cross_check(res: &EquivResult, nl: Term, nr: Term, what: &str) -> Result<()> {
    if res.equal != (nl == nr) {
        return Err(Error::Internal(format!(
            "{what}: tree equality {} but normal forms {nl} and {nr}",
            res.equal
        )));
    }
    Ok(())
}

/// Equality of two FT-terms in free full-evaluation logic. The tree verdict
/// is cross-checked against identity of normal forms.
pub fn equal_ffel(p: &Term, q: &Term, max_atoms: usize) -> Result<EquivResult> {
    guard(p, max_atoms)?;
    guard(q, max_atoms)?;
    let res = compare(fe(p)?, fe(q)?);
    cross_check(&res, fel_normalize(p)?, fel_normalize(q)?, "equal_ffel")?;
    Ok(res)
}

/// Equality of two ST-terms in free short-circuit logic, cross-checked
/// against normal forms.
pub fn equal_fscl(p: &Term, q: &Term, max_atoms: usize) -> Result<EquivResult> {
    guard(p, max_atoms)?;
    guard(q, max_atoms)?;
    let res = compare(se(p)?, se(q)?);
    cross_check(&res, scl_normalize(p)?, scl_normalize(q)?, "equal_fscl")?;
    Ok(res)
}

/// Equality of two arbitrary closed terms under conditional evaluation.
pub fn equal_mixed(p: &Term, q: &Term, max_atoms: usize) -> Result<EquivResult> {
    guard(p, max_atoms)?;
    guard(q, max_atoms)?;
    Ok(compare(ce(p)?, ce(q)?))
}

/// Rewrites full connectives into short-circuit ones:
/// `P & Q` becomes `(P || (Q && F)) && Q` and `P | Q` becomes
/// `(P && (Q || T)) || Q`. Short-circuit evaluation of the result equals full
/// evaluation of the input.
pub fn translate_h(t: &Term) -> Result<Term> {
    let out = h(t)?;
    debug_assert!(
        t.atom_count() > 12 || se(&out).ok() == fe(t).ok(),
        "translation changed the tree of {t}"
    );
    Ok(out)
}

fn h(t: &Term) -> Result<Term> {
    Ok(match t {
        Term::T | Term::F | Term::Atom(_) => t.clone(),
        Term::Not(p) => Term::not(h(p)?),
        Term::AndFull(p, q) => {
            let (p, q) = (h(p)?, h(q)?);
            Term::and_sc(Term::or_sc(p, Term::and_sc(q.clone(), Term::F)), q)
        }
        Term::OrFull(p, q) => {
            let (p, q) = (h(p)?, h(q)?);
            Term::or_sc(Term::and_sc(p, Term::or_sc(q.clone(), Term::T)), q)
        }
        Term::Var(v) => return Err(Error::UnboundVariable(v.to_string())),
        _ => {
            return Err(Error::WrongLanguage {
                op: "translate_h",
                expected: "FT",
            })
        }
    })
}

/// Settings for [`check_schema`].
#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub trials: usize,
    /// Atom bound for each term substituted for a variable.
    pub max_atoms: usize,
    pub alphabet: usize,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            trials: 200,
            max_atoms: 6,
            alphabet: 3,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub substitution: Vec<(String, Term)>,
    pub lhs: Term,
    pub rhs: Term,
    pub witness: Trace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaReport {
    pub name: &'static str,
    pub trials: usize,
    pub counterexample: Option<Counterexample>,
}

impl SchemaReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn name_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a, so that every schema draws its own stream.
    name.bytes().fold(0xcbf2_9ce4_8422_2325 ^ seed, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Instantiates the schema `cfg.trials` times with random terms of the
/// schema's language and compares the trees of both sides.
pub fn check_schema(s: &EquationSchema, cfg: &CheckConfig) -> Result<SchemaReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(name_seed(cfg.seed, s.name));
    let lang: Language = s.logic.language();
    let g = TermGen::new(lang, cfg.max_atoms, cfg.alphabet);
    let mut vars = s.lhs.variables();
    vars.extend(s.rhs.variables());
    for trial in 0..cfg.trials {
        let substitution: Vec<(String, Term)> = vars
            .iter()
            .map(|v| (v.to_string(), g.generate(&mut rng)))
            .collect();
        let sub = |name: &str| {
            substitution
                .iter()
                .find(|(v, _)| v == name)
                .map(|(_, t)| t.clone())
        };
        let (lhs, rhs) = (s.lhs.substitute(&sub), s.rhs.substitute(&sub));
        let (lt, rt) = (s.logic.eval(&lhs)?, s.logic.eval(&rhs)?);
        if let Some(witness) = find_witness(&lt, &rt) {
            return Ok(SchemaReport {
                name: s.name,
                trials: trial + 1,
                counterexample: Some(Counterexample {
                    substitution,
                    lhs,
                    rhs,
                    witness,
                }),
            });
        }
    }
    Ok(SchemaReport {
        name: s.name,
        trials: cfg.trials,
        counterexample: None,
    })
}
