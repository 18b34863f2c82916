//! Random terms for property checks and schema instantiation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::normalize::Logic;
use crate::terms::{Atom, Language, Term};

/// Shape parameters for random terms.
#[derive(Debug, Clone, Copy)]
pub struct TermGen {
    pub language: Language,
    /// Upper bound on atom occurrences.
    pub max_atoms: usize,
    /// Atoms are drawn from the first `alphabet` letters.
    pub alphabet: usize,
    pub max_depth: usize,
}

impl TermGen {
    pub fn new(language: Language, max_atoms: usize, alphabet: usize) -> Self {
        TermGen {
            language,
            max_atoms,
            alphabet: alphabet.max(1),
            max_depth: 6,
        }
    }

    pub fn generate<R: Rng>(&self, rng: &mut R) -> Term {
        let mut budget = self.max_atoms;
        self.go(0, &mut budget, rng)
    }

    fn leaf<R: Rng>(&self, budget: &mut usize, rng: &mut R) -> Term {
        // Constants get a fixed share of the leaves so that absorption and
        // unit laws are exercised.
        if *budget > 0 && rng.random_bool(0.7) {
            *budget -= 1;
            Term::Atom(Atom::nth(rng.random_range(0..self.alphabet)))
        } else if rng.random_bool(0.5) {
            Term::T
        } else {
            Term::F
        }
    }

    fn go<R: Rng>(&self, depth: usize, budget: &mut usize, rng: &mut R) -> Term {
        // Inner nodes become rarer with depth.
        let p_inner = if depth >= self.max_depth || *budget == 0 {
            0.0
        } else {
            0.9 * 0.85f64.powi(depth as i32)
        };
        if !rng.random_bool(p_inner) {
            return self.leaf(budget, rng);
        }
        let ops: &[u8] = match self.language {
            Language::Ft => b"naO",
            Language::St => b"n&|",
            Language::Ct => b"?",
            Language::Mixed => b"naO&|?",
        };
        let op = ops[rng.random_range(0..ops.len())];
        let d = depth + 1;
        match op {
            b'n' => Term::not(self.go(d, budget, rng)),
            b'?' => {
                let c = self.go(d, budget, rng);
                let t = self.go(d, budget, rng);
                let e = self.go(d, budget, rng);
                Term::cond(t, c, e)
            }
            _ => {
                let p = self.go(d, budget, rng);
                let q = self.go(d, budget, rng);
                match op {
                    b'a' => Term::and_f(p, q),
                    b'O' => Term::or_f(p, q),
                    b'&' => Term::and_sc(p, q),
                    _ => Term::or_sc(p, q),
                }
            }
        }
    }
}

/// One random term from a fixed seed.
pub fn gen_term(language: Language, max_atoms: usize, alphabet: usize, seed: u64) -> Term {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    TermGen::new(language, max_atoms, alphabet).generate(&mut rng)
}

/// Random pieces of normal forms, built directly from the grammar.
#[derive(Debug, Clone, Copy)]
pub struct NormalGen {
    pub logic: Logic,
    pub alphabet: usize,
    /// Nesting depth of conjunctions and disjunctions in *-terms.
    pub max_depth: usize,
}

impl NormalGen {
    pub fn new(logic: Logic, alphabet: usize, max_depth: usize) -> Self {
        NormalGen {
            logic,
            alphabet: alphabet.max(1),
            max_depth,
        }
    }

    fn atom<R: Rng>(&self, rng: &mut R) -> Term {
        Term::Atom(Atom::nth(rng.random_range(0..self.alphabet)))
    }

    /// A T-term with at most `len` atoms.
    pub fn t_term<R: Rng>(&self, len: usize, rng: &mut R) -> Term {
        if len == 0 || rng.random_bool(0.5) {
            return Term::T;
        }
        let a = self.atom(rng);
        match self.logic {
            Logic::Fel => Term::or_f(a, self.t_term(len - 1, rng)),
            Logic::Scl => {
                let p = self.t_term(len / 2, rng);
                let q = self.t_term(len / 2, rng);
                Term::or_sc(Term::and_sc(a, p), q)
            }
        }
    }

    /// An F-term with at most `len` atoms.
    pub fn f_term<R: Rng>(&self, len: usize, rng: &mut R) -> Term {
        if len == 0 || rng.random_bool(0.5) {
            return Term::F;
        }
        let a = self.atom(rng);
        match self.logic {
            Logic::Fel => Term::and_f(a, self.f_term(len - 1, rng)),
            Logic::Scl => {
                let p = self.f_term(len / 2, rng);
                let q = self.f_term(len / 2, rng);
                Term::and_sc(Term::or_sc(a, p), q)
            }
        }
    }

    pub fn l_term<R: Rng>(&self, rng: &mut R) -> Term {
        let mut lit = self.atom(rng);
        if rng.random_bool(0.5) {
            lit = Term::not(lit);
        }
        match self.logic {
            Logic::Fel => Term::and_f(lit, self.t_term(1, rng)),
            Logic::Scl => Term::or_sc(Term::and_sc(lit, self.t_term(1, rng)), self.f_term(1, rng)),
        }
    }

    /// A *-term whose top connective is a conjunction (`conj`) or a
    /// disjunction, or an ℓ-term when `depth` runs out.
    pub fn star<R: Rng>(&self, depth: usize, conj: bool, rng: &mut R) -> Term {
        if depth == 0 {
            return self.l_term(rng);
        }
        let left_conj = rng.random_bool(0.5);
        let left = if rng.random_bool(0.6) {
            self.star(depth - 1, left_conj, rng)
        } else {
            self.l_term(rng)
        };
        let right = if rng.random_bool(0.5) {
            self.star(depth - 1, !conj, rng)
        } else {
            self.l_term(rng)
        };
        self.join(conj, left, right)
    }

    /// `p ∧ q` or `p ∨ q` in the connectives of the logic.
    pub fn join(&self, conj: bool, p: Term, q: Term) -> Term {
        match (self.logic, conj) {
            (Logic::Fel, true) => Term::and_f(p, q),
            (Logic::Fel, false) => Term::or_f(p, q),
            (Logic::Scl, true) => Term::and_sc(p, q),
            (Logic::Scl, false) => Term::or_sc(p, q),
        }
    }

    /// A complete normal form.
    pub fn normal_form<R: Rng>(&self, rng: &mut R) -> Term {
        match rng.random_range(0..5) {
            0 => self.t_term(3, rng),
            1 => self.f_term(3, rng),
            _ => {
                let conj = rng.random_bool(0.5);
                let s = self.star(self.max_depth, conj, rng);
                let t = self.t_term(2, rng);
                self.join(true, t, s)
            }
        }
    }
}
