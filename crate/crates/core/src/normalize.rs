//! Normal forms and the normalization functions of both logics.
//!
//! Normal forms are T-terms, F-terms and T-*-terms (a T-term conjoined with a
//! *-term). *-terms are built from ℓ-terms by alternating conjunction and
//! disjunction. Chains are kept exactly as the grammar nests them.
//!
//! Full-evaluation grammar (operators quoted):
//!
//! ```text
//! P^T ::= T | a "|" P^T          P^F ::= F | a "&" P^F
//! P^l ::= a "&" P^T | "!"a "&" P^T
//! P^c ::= P^l | P* "&" P^d       P^d ::= P^l | P* "|" P^c
//! ```
//!
//! Short-circuit grammar:
//!
//! ```text
//! P^T ::= T | (a "&&" P^T) "||" P^T      P^F ::= F | (a "||" P^F) "&&" P^F
//! P^l ::= (a "&&" P^T) "||" P^F | ("!"a "&&" P^T) "||" P^F
//! ```
//!
//! with `P^c`, `P^d` as above. Every dispatch below goes through
//! [`classify_fnf`] / [`classify_snf`].

use crate::error::{Error, Result};
use crate::terms::{Atom, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Logic {
    /// Free full-evaluation logic.
    Fel,
    /// Free short-circuit logic.
    Scl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarKind {
    Conjunction,
    Disjunction,
}

/// Grammar category of a term. Exactly one applies; ℓ-terms are reported as
/// [`NormalCategory::LTerm`] even though they are also *-terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormalCategory {
    TTerm,
    FTerm,
    LTerm(Polarity),
    StarTerm(StarKind),
    TStarTerm,
    NotNormal,
}

impl NormalCategory {
    /// True for the three categories that make up the normal form proper.
    pub fn is_normal_form(self) -> bool {
        matches!(
            self,
            NormalCategory::TTerm | NormalCategory::FTerm | NormalCategory::TStarTerm
        )
    }

    fn is_star(self) -> bool {
        matches!(self, NormalCategory::LTerm(_) | NormalCategory::StarTerm(_))
    }

    pub fn name(self) -> &'static str {
        match self {
            NormalCategory::TTerm => "T-term",
            NormalCategory::FTerm => "F-term",
            NormalCategory::LTerm(Polarity::Positive) => "l-term (positive)",
            NormalCategory::LTerm(Polarity::Negative) => "l-term (negative)",
            NormalCategory::StarTerm(StarKind::Conjunction) => "*-term (conjunction)",
            NormalCategory::StarTerm(StarKind::Disjunction) => "*-term (disjunction)",
            NormalCategory::TStarTerm => "T-*-term",
            NormalCategory::NotNormal => "not normal",
        }
    }
}

fn literal(t: &Term) -> Option<(Polarity, &Atom)> {
    match t {
        Term::Atom(a) => Some((Polarity::Positive, a)),
        Term::Not(p) => match &**p {
            Term::Atom(a) => Some((Polarity::Negative, a)),
            _ => None,
        },
        _ => None,
    }
}

fn is_atom(t: &Term) -> bool {
    matches!(t, Term::Atom(_))
}

// ---- full evaluation -------------------------------------------------------

fn fel_is_t(t: &Term) -> bool {
    match t {
        Term::T => true,
        Term::OrFull(a, p) => is_atom(a) && fel_is_t(p),
        _ => false,
    }
}

fn fel_is_f(t: &Term) -> bool {
    match t {
        Term::F => true,
        Term::AndFull(a, p) => is_atom(a) && fel_is_f(p),
        _ => false,
    }
}

fn fel_star(t: &Term) -> NormalCategory {
    let lit = match t {
        Term::AndFull(l, p) => literal(l).filter(|_| fel_is_t(p)),
        _ => None,
    };
    if let Some((pol, _)) = lit {
        return NormalCategory::LTerm(pol);
    }
    match t {
        Term::AndFull(p, q) if fel_star(p).is_star() && fel_is_disj(q) => {
            NormalCategory::StarTerm(StarKind::Conjunction)
        }
        Term::OrFull(p, q) if fel_star(p).is_star() && fel_is_conj(q) => {
            NormalCategory::StarTerm(StarKind::Disjunction)
        }
        _ => NormalCategory::NotNormal,
    }
}

fn fel_is_conj(t: &Term) -> bool {
    matches!(
        fel_star(t),
        NormalCategory::LTerm(_) | NormalCategory::StarTerm(StarKind::Conjunction)
    )
}

fn fel_is_disj(t: &Term) -> bool {
    matches!(
        fel_star(t),
        NormalCategory::LTerm(_) | NormalCategory::StarTerm(StarKind::Disjunction)
    )
}

/// Grammar category of `t` with respect to the full-evaluation normal form.
pub fn classify_fnf(t: &Term) -> NormalCategory {
    if fel_is_t(t) {
        return NormalCategory::TTerm;
    }
    if fel_is_f(t) {
        return NormalCategory::FTerm;
    }
    if let Term::AndFull(p, q) = t {
        if fel_is_t(p) && fel_star(q).is_star() {
            return NormalCategory::TStarTerm;
        }
    }
    fel_star(t)
}

pub fn is_fnf(t: &Term) -> bool {
    classify_fnf(t).is_normal_form()
}

fn shape(op: &'static str) -> Error {
    Error::Internal(format!("{op}: unexpected term shape"))
}

fn require(ok: bool, op: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::NotNormal { op })
    }
}

/// Negation on full-evaluation normal forms.
pub fn fel_fn(t: &Term) -> Result<Term> {
    require(is_fnf(t), "fel_fn")?;
    fel_neg(t)
}

fn fel_neg(t: &Term) -> Result<Term> {
    Ok(match (classify_fnf(t), t) {
        (NormalCategory::TTerm, Term::T) => Term::F,
        (NormalCategory::TTerm, Term::OrFull(a, p)) => Term::and_f((**a).clone(), fel_neg(p)?),
        (NormalCategory::FTerm, Term::F) => Term::T,
        (NormalCategory::FTerm, Term::AndFull(a, p)) => Term::or_f((**a).clone(), fel_neg(p)?),
        (NormalCategory::TStarTerm, Term::AndFull(p, q)) => {
            Term::and_f((**p).clone(), fel_neg_star(q)?)
        }
        _ => return Err(shape("fel_fn")),
    })
}

fn fel_neg_star(t: &Term) -> Result<Term> {
    Ok(match (fel_star(t), t) {
        (NormalCategory::LTerm(Polarity::Positive), Term::AndFull(a, p)) => {
            Term::and_f(Term::Not(a.clone()), (**p).clone())
        }
        (NormalCategory::LTerm(Polarity::Negative), Term::AndFull(na, p)) => {
            let Term::Not(a) = &**na else {
                return Err(shape("fel_fn"));
            };
            Term::and_f((**a).clone(), (**p).clone())
        }
        (NormalCategory::StarTerm(StarKind::Conjunction), Term::AndFull(p, q)) => {
            Term::or_f(fel_neg_star(p)?, fel_neg_star(q)?)
        }
        (NormalCategory::StarTerm(StarKind::Disjunction), Term::OrFull(p, q)) => {
            Term::and_f(fel_neg_star(p)?, fel_neg_star(q)?)
        }
        _ => return Err(shape("fel_fn")),
    })
}

/// Conjunction of two full-evaluation normal forms.
pub fn fel_fc(p: &Term, q: &Term) -> Result<Term> {
    require(is_fnf(p) && is_fnf(q), "fel_fc")?;
    fel_conj(p, q)
}

fn fel_conj(p: &Term, q: &Term) -> Result<Term> {
    use NormalCategory::*;
    let (cp, cq) = (classify_fnf(p), classify_fnf(q));
    Ok(match (cp, p) {
        (TTerm, Term::T) => q.clone(),
        (TTerm, Term::OrFull(a, pt)) => match (cq, q) {
            (TTerm, _) => Term::or_f((**a).clone(), fel_conj(pt, q)?),
            (FTerm, _) => Term::and_f((**a).clone(), fel_conj(pt, q)?),
            (TStarTerm, Term::AndFull(qt, r)) => Term::and_f(fel_conj(p, qt)?, (**r).clone()),
            _ => return Err(shape("fel_fc")),
        },
        (FTerm, Term::F) => match cq {
            TTerm => fel_neg(q)?,
            FTerm => q.clone(),
            TStarTerm => fel_conj(q, p)?,
            _ => return Err(shape("fel_fc")),
        },
        (FTerm, Term::AndFull(a, pf)) => Term::and_f((**a).clone(), fel_conj(pf, q)?),
        (TStarTerm, Term::AndFull(pt, qs)) => match cq {
            TTerm => Term::and_f((**pt).clone(), fel_conj1(qs, q)?),
            FTerm => fel_conj(pt, &fel_conj2(qs, q)?)?,
            TStarTerm => Term::and_f((**pt).clone(), fel_conj3(qs, q)?),
            _ => return Err(shape("fel_fc")),
        },
        _ => return Err(shape("fel_fc")),
    })
}

/// *-term conjoined with a T-term.
fn fel_conj1(s: &Term, rt: &Term) -> Result<Term> {
    Ok(match (fel_star(s), s) {
        (NormalCategory::LTerm(_), Term::AndFull(l, pt)) => {
            Term::and_f((**l).clone(), fel_conj(pt, rt)?)
        }
        (NormalCategory::StarTerm(StarKind::Conjunction), Term::AndFull(p, qd)) => {
            Term::and_f((**p).clone(), fel_conj1(qd, rt)?)
        }
        (NormalCategory::StarTerm(StarKind::Disjunction), Term::OrFull(p, qc)) => {
            Term::or_f((**p).clone(), fel_conj1(qc, rt)?)
        }
        _ => return Err(shape("fel_fc")),
    })
}

/// *-term conjoined with an F-term.
fn fel_conj2(s: &Term, rf: &Term) -> Result<Term> {
    Ok(match (fel_star(s), s) {
        (NormalCategory::LTerm(_), Term::AndFull(l, pt)) => {
            let (_, a) = literal(l).ok_or_else(|| shape("fel_fc"))?;
            Term::and_f(Term::Atom(a.clone()), fel_conj(pt, rf)?)
        }
        (NormalCategory::StarTerm(_), Term::AndFull(p, q) | Term::OrFull(p, q)) => {
            fel_conj2(p, &fel_conj2(q, rf)?)?
        }
        _ => return Err(shape("fel_fc")),
    })
}

/// *-term conjoined with a T-*-term.
fn fel_conj3(s: &Term, q: &Term) -> Result<Term> {
    let Term::AndFull(qt, r) = q else {
        return Err(shape("fel_fc"));
    };
    Ok(match (fel_star(r), &**r) {
        (NormalCategory::StarTerm(StarKind::Conjunction), Term::AndFull(rs, sd)) => Term::and_f(
            fel_conj3(s, &Term::AndFull(qt.clone(), rs.clone()))?,
            (**sd).clone(),
        ),
        (NormalCategory::LTerm(_) | NormalCategory::StarTerm(StarKind::Disjunction), _) => {
            Term::and_f(fel_conj1(s, qt)?, (**r).clone())
        }
        _ => return Err(shape("fel_fc")),
    })
}

/// Normal form of an FT-term. The result has the same full-evaluation tree.
pub fn fel_normalize(t: &Term) -> Result<Term> {
    Ok(match t {
        Term::T => Term::T,
        Term::F => Term::F,
        Term::Atom(_) => Term::and_f(Term::T, Term::and_f(t.clone(), Term::T)),
        Term::Not(p) => fel_neg(&fel_normalize(p)?)?,
        Term::AndFull(p, q) => fel_conj(&fel_normalize(p)?, &fel_normalize(q)?)?,
        Term::OrFull(p, q) => {
            let np = fel_neg(&fel_normalize(p)?)?;
            let nq = fel_neg(&fel_normalize(q)?)?;
            fel_neg(&fel_conj(&np, &nq)?)?
        }
        Term::Var(v) => return Err(Error::UnboundVariable(v.to_string())),
        _ => {
            return Err(Error::WrongLanguage {
                op: "fel_normalize",
                expected: "FT",
            })
        }
    })
}

// ---- short-circuit evaluation ---------------------------------------------

fn scl_is_t(t: &Term) -> bool {
    match t {
        Term::T => true,
        Term::OrSc(l, q) => match &**l {
            Term::AndSc(a, p) => is_atom(a) && scl_is_t(p) && scl_is_t(q),
            _ => false,
        },
        _ => false,
    }
}

fn scl_is_f(t: &Term) -> bool {
    match t {
        Term::F => true,
        Term::AndSc(l, q) => match &**l {
            Term::OrSc(a, p) => is_atom(a) && scl_is_f(p) && scl_is_f(q),
            _ => false,
        },
        _ => false,
    }
}

/// Splits `(l && pt) || qf` into its parts.
fn scl_lit_parts(t: &Term) -> Option<(&Term, &Term, &Term)> {
    let Term::OrSc(l, qf) = t else { return None };
    let Term::AndSc(a, pt) = &**l else {
        return None;
    };
    Some((a, pt, qf))
}

fn scl_star(t: &Term) -> NormalCategory {
    if let Some((l, pt, qf)) = scl_lit_parts(t) {
        if let Some((pol, _)) = literal(l).filter(|_| scl_is_t(pt) && scl_is_f(qf)) {
            return NormalCategory::LTerm(pol);
        }
    }
    match t {
        Term::AndSc(p, q) if scl_star(p).is_star() && scl_is_disj(q) => {
            NormalCategory::StarTerm(StarKind::Conjunction)
        }
        Term::OrSc(p, q) if scl_star(p).is_star() && scl_is_conj(q) => {
            NormalCategory::StarTerm(StarKind::Disjunction)
        }
        _ => NormalCategory::NotNormal,
    }
}

fn scl_is_conj(t: &Term) -> bool {
    matches!(
        scl_star(t),
        NormalCategory::LTerm(_) | NormalCategory::StarTerm(StarKind::Conjunction)
    )
}

fn scl_is_disj(t: &Term) -> bool {
    matches!(
        scl_star(t),
        NormalCategory::LTerm(_) | NormalCategory::StarTerm(StarKind::Disjunction)
    )
}

/// Grammar category of `t` with respect to the short-circuit normal form.
pub fn classify_snf(t: &Term) -> NormalCategory {
    if scl_is_t(t) {
        return NormalCategory::TTerm;
    }
    if scl_is_f(t) {
        return NormalCategory::FTerm;
    }
    if let Term::AndSc(p, q) = t {
        if scl_is_t(p) && scl_star(q).is_star() {
            return NormalCategory::TStarTerm;
        }
    }
    scl_star(t)
}

pub fn is_snf(t: &Term) -> bool {
    classify_snf(t).is_normal_form()
}

/// Negation on short-circuit normal forms.
pub fn scl_fn(t: &Term) -> Result<Term> {
    require(is_snf(t), "scl_fn")?;
    scl_neg(t)
}

fn scl_neg(t: &Term) -> Result<Term> {
    Ok(match (classify_snf(t), t) {
        (NormalCategory::TTerm, Term::T) => Term::F,
        (NormalCategory::TTerm, Term::OrSc(l, qt)) => {
            let Term::AndSc(a, pt) = &**l else {
                return Err(shape("scl_fn"));
            };
            Term::and_sc(Term::or_sc((**a).clone(), scl_neg(qt)?), scl_neg(pt)?)
        }
        (NormalCategory::FTerm, Term::F) => Term::T,
        (NormalCategory::FTerm, Term::AndSc(l, qf)) => {
            let Term::OrSc(a, pf) = &**l else {
                return Err(shape("scl_fn"));
            };
            Term::or_sc(Term::and_sc((**a).clone(), scl_neg(qf)?), scl_neg(pf)?)
        }
        (NormalCategory::TStarTerm, Term::AndSc(pt, qs)) => {
            Term::and_sc((**pt).clone(), scl_neg_star(qs)?)
        }
        _ => return Err(shape("scl_fn")),
    })
}

fn scl_neg_star(t: &Term) -> Result<Term> {
    Ok(match scl_star(t) {
        NormalCategory::LTerm(pol) => {
            let (l, pt, qf) = scl_lit_parts(t).ok_or_else(|| shape("scl_fn"))?;
            let (_, a) = literal(l).ok_or_else(|| shape("scl_fn"))?;
            let a = Term::Atom(a.clone());
            let flipped = match pol {
                Polarity::Positive => Term::not(a),
                Polarity::Negative => a,
            };
            Term::or_sc(Term::and_sc(flipped, scl_neg(qf)?), scl_neg(pt)?)
        }
        NormalCategory::StarTerm(StarKind::Conjunction) => {
            let Term::AndSc(p, q) = t else {
                return Err(shape("scl_fn"));
            };
            Term::or_sc(scl_neg_star(p)?, scl_neg_star(q)?)
        }
        NormalCategory::StarTerm(StarKind::Disjunction) => {
            let Term::OrSc(p, q) = t else {
                return Err(shape("scl_fn"));
            };
            Term::and_sc(scl_neg_star(p)?, scl_neg_star(q)?)
        }
        _ => return Err(shape("scl_fn")),
    })
}

/// Conjunction of two short-circuit normal forms.
pub fn scl_fc(p: &Term, q: &Term) -> Result<Term> {
    require(is_snf(p) && is_snf(q), "scl_fc")?;
    scl_conj(p, q)
}

fn scl_conj(p: &Term, q: &Term) -> Result<Term> {
    use NormalCategory::*;
    let (cp, cq) = (classify_snf(p), classify_snf(q));
    Ok(match (cp, p) {
        (TTerm, Term::T) => q.clone(),
        (TTerm, Term::OrSc(l, qt)) => {
            let Term::AndSc(a, pt) = &**l else {
                return Err(shape("scl_fc"));
            };
            let a = (**a).clone();
            match (cq, q) {
                (TTerm, _) => Term::or_sc(Term::and_sc(a, scl_conj(pt, q)?), scl_conj(qt, q)?),
                (FTerm, _) => Term::and_sc(Term::or_sc(a, scl_conj(qt, q)?), scl_conj(pt, q)?),
                (TStarTerm, Term::AndSc(rt, s)) => Term::and_sc(scl_conj(p, rt)?, (**s).clone()),
                _ => return Err(shape("scl_fc")),
            }
        }
        (FTerm, _) => p.clone(),
        (TStarTerm, Term::AndSc(pt, qs)) => match cq {
            TTerm => Term::and_sc((**pt).clone(), scl_conj1(qs, q)?),
            FTerm => scl_conj(pt, &scl_conj2(qs, q)?)?,
            TStarTerm => Term::and_sc((**pt).clone(), scl_conj3(qs, q)?),
            _ => return Err(shape("scl_fc")),
        },
        _ => return Err(shape("scl_fc")),
    })
}

/// *-term conjoined with a T-term.
fn scl_conj1(s: &Term, rt: &Term) -> Result<Term> {
    Ok(match scl_star(s) {
        NormalCategory::LTerm(_) => {
            let (l, pt, qf) = scl_lit_parts(s).ok_or_else(|| shape("scl_fc"))?;
            Term::or_sc(Term::and_sc(l.clone(), scl_conj(pt, rt)?), qf.clone())
        }
        NormalCategory::StarTerm(StarKind::Conjunction) => {
            let Term::AndSc(p, qd) = s else {
                return Err(shape("scl_fc"));
            };
            Term::and_sc((**p).clone(), scl_conj1(qd, rt)?)
        }
        NormalCategory::StarTerm(StarKind::Disjunction) => {
            let Term::OrSc(p, qc) = s else {
                return Err(shape("scl_fc"));
            };
            Term::or_sc(scl_conj1(p, rt)?, scl_conj1(qc, rt)?)
        }
        _ => return Err(shape("scl_fc")),
    })
}

/// *-term conjoined with an F-term.
fn scl_conj2(s: &Term, rf: &Term) -> Result<Term> {
    Ok(match scl_star(s) {
        NormalCategory::LTerm(pol) => {
            let (l, pt, qf) = scl_lit_parts(s).ok_or_else(|| shape("scl_fc"))?;
            let (_, a) = literal(l).ok_or_else(|| shape("scl_fc"))?;
            let a = Term::Atom(a.clone());
            match pol {
                Polarity::Positive => Term::and_sc(Term::or_sc(a, qf.clone()), scl_conj(pt, rf)?),
                Polarity::Negative => Term::and_sc(Term::or_sc(a, scl_conj(pt, rf)?), qf.clone()),
            }
        }
        NormalCategory::StarTerm(StarKind::Conjunction) => {
            let Term::AndSc(p, qd) = s else {
                return Err(shape("scl_fc"));
            };
            scl_conj2(p, &scl_conj2(qd, rf)?)?
        }
        NormalCategory::StarTerm(StarKind::Disjunction) => {
            let Term::OrSc(p, qc) = s else {
                return Err(shape("scl_fc"));
            };
            // The left disjunct is rewritten to "P fails, or R is evaluated
            // and fails", which is again a *-term.
            let guard = scl_neg_star(&scl_conj1(p, &scl_neg(rf)?)?)?;
            scl_conj2(&guard, &scl_conj2(qc, rf)?)?
        }
        _ => return Err(shape("scl_fc")),
    })
}

/// *-term conjoined with a T-*-term.
fn scl_conj3(s: &Term, q: &Term) -> Result<Term> {
    let Term::AndSc(qt, r) = q else {
        return Err(shape("scl_fc"));
    };
    Ok(match (scl_star(r), &**r) {
        (NormalCategory::StarTerm(StarKind::Conjunction), Term::AndSc(rs, sd)) => Term::and_sc(
            scl_conj3(s, &Term::AndSc(qt.clone(), rs.clone()))?,
            (**sd).clone(),
        ),
        (NormalCategory::LTerm(_) | NormalCategory::StarTerm(StarKind::Disjunction), _) => {
            Term::and_sc(scl_conj1(s, qt)?, (**r).clone())
        }
        _ => return Err(shape("scl_fc")),
    })
}

/// Normal form of an ST-term. The result has the same short-circuit tree.
pub fn scl_normalize(t: &Term) -> Result<Term> {
    Ok(match t {
        Term::T => Term::T,
        Term::F => Term::F,
        Term::Atom(_) => Term::and_sc(
            Term::T,
            Term::or_sc(Term::and_sc(t.clone(), Term::T), Term::F),
        ),
        Term::Not(p) => scl_neg(&scl_normalize(p)?)?,
        Term::AndSc(p, q) => scl_conj(&scl_normalize(p)?, &scl_normalize(q)?)?,
        Term::OrSc(p, q) => {
            let np = scl_neg(&scl_normalize(p)?)?;
            let nq = scl_neg(&scl_normalize(q)?)?;
            scl_neg(&scl_conj(&np, &nq)?)?
        }
        Term::Var(v) => return Err(Error::UnboundVariable(v.to_string())),
        _ => {
            return Err(Error::WrongLanguage {
                op: "scl_normalize",
                expected: "ST",
            })
        }
    })
}

/// Normalizes in the given logic.
pub fn normalize(logic: Logic, t: &Term) -> Result<Term> {
    match logic {
        Logic::Fel => fel_normalize(t),
        Logic::Scl => scl_normalize(t),
    }
}

pub fn classify(logic: Logic, t: &Term) -> NormalCategory {
    match logic {
        Logic::Fel => classify_fnf(t),
        Logic::Scl => classify_snf(t),
    }
}
