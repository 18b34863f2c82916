//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seqlogic::decompose::{fel_cd, fel_dd, fel_g, scl_cd, scl_dd, scl_g};
use seqlogic::equiv::{
    catalogs, check_schema, equal_ffel, equal_fscl, gen_term, translate_h, CheckConfig, NormalGen,
    TermGen,
};
use seqlogic::normalize::{fel_normalize, is_fnf, is_snf, scl_normalize, Logic};
use seqlogic::{fe, parse_term, parse_tree, se, traces, Language, Term, Tree};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn term(s: &str) -> Term {
    parse_term(s).expect("fixture parses")
}

fn tree(s: &str) -> Tree {
    parse_tree(s).expect("fixture parses")
}

fn same(what: &str, got: &Tree, want: &Tree) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, want {want}"))
    }
}

fn golden_figures() -> Outcome {
    same(
        "fe((a & b) | c)",
        &fe(&term("a & b | c")).map_err(|e| e.to_string())?,
        &tree(
            "(((T <| c |> T) <| b |> (T <| c |> F)) <| a |> \
              ((T <| c |> F) <| b |> (T <| c |> F)))",
        ),
    )?;
    same(
        "fe((a | b) & c)",
        &fe(&term("(a | b) & c")).map_err(|e| e.to_string())?,
        &tree(
            "(((T <| c |> F) <| b |> (T <| c |> F)) <| a |> \
              ((T <| c |> F) <| b |> (F <| c |> F)))",
        ),
    )?;
    same(
        "se((a && b) || c)",
        &se(&term("a && b || c")).map_err(|e| e.to_string())?,
        &tree("((T <| b |> (T <| c |> F)) <| a |> (T <| c |> F))"),
    )?;
    same(
        "se((a || b) && c)",
        &se(&term("(a || b) && c")).map_err(|e| e.to_string())?,
        &tree("((T <| c |> F) <| a |> ((T <| c |> F) <| b |> F))"),
    )
}

fn golden_traces() -> Outcome {
    let want = [
        "aT bT cT -> T",
        "aT bT cF -> T",
        "aT bF cT -> T",
        "aT bF cF -> F",
        "aF bT cT -> T",
        "aF bT cF -> F",
        "aF bF cT -> T",
        "aF bF cF -> F",
    ];
    let x = fe(&term("a & b | c")).map_err(|e| e.to_string())?;
    let got: Vec<String> = traces(&x).iter().map(|t| t.to_string()).collect();
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}"))
    }
}

fn worked_examples() -> Outcome {
    same(
        "fe(a | b)",
        &fe(&term("a | b")).map_err(|e| e.to_string())?,
        &tree("((T <| b |> T) <| a |> (T <| b |> F))"),
    )?;
    same(
        "se(a || b)",
        &se(&term("a || b")).map_err(|e| e.to_string())?,
        &tree("(T <| a |> (T <| b |> F))"),
    )
}

fn catalogs_hold() -> Outcome {
    let cfg = CheckConfig {
        trials: 200,
        max_atoms: 6,
        alphabet: 3,
        seed: 0x5eed,
    };
    let mut count = 0;
    for c in catalogs() {
        for s in &c.schemas {
            let r = check_schema(s, &cfg).map_err(|e| format!("{}: {e}", s.name))?;
            if let Some(cx) = r.counterexample {
                return Err(format!(
                    "{} {} fails: {} vs {} at {}",
                    c.name, s.name, cx.lhs, cx.rhs, cx.witness
                ));
            }
            count += 1;
        }
    }
    if count == 44 {
        Ok(())
    } else {
        Err(format!("expected 44 equations, found {count}"))
    }
}

const CORPUS: u64 = 1000;
const MAX_ATOMS: usize = 12;

/// Deeper than the default generator so the corpus reaches the atom bound.
fn corpus(lang: Language, base: u64, n: u64) -> impl Iterator<Item = Term> {
    let mut g = TermGen::new(lang, MAX_ATOMS, 3);
    g.max_depth = 9;
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    (0..n).map(move |_| g.generate(&mut rng))
}

fn normalization() -> Outcome {
    let sizes: Vec<usize> = corpus(Language::Ft, 10_000, CORPUS)
        .map(|t| t.atom_count())
        .collect();
    if sizes.iter().max() != Some(&MAX_ATOMS) {
        return Err("corpus never reaches the atom bound".into());
    }
    for t in corpus(Language::Ft, 10_000, CORPUS) {
        let n = fel_normalize(&t).map_err(|e| format!("{t}: {e}"))?;
        if !is_fnf(&n) || fe(&n).ok() != fe(&t).ok() {
            return Err(format!("full: {t} -> {n}"));
        }
    }
    for t in corpus(Language::St, 20_000, CORPUS) {
        let n = scl_normalize(&t).map_err(|e| format!("{t}: {e}"))?;
        if !is_snf(&n) || se(&n).ok() != se(&t).ok() {
            return Err(format!("short-circuit: {t} -> {n}"));
        }
    }
    Ok(())
}

fn inversion() -> Outcome {
    for t in corpus(Language::Ft, 10_000, CORPUS) {
        let n = fel_normalize(&t).map_err(|e| e.to_string())?;
        let x = fe(&n).map_err(|e| e.to_string())?;
        let g = fel_g(&x).map_err(|e| format!("{t}: {e}"))?;
        if g != n {
            return Err(format!("full: {t}: g gives {g}, normal form {n}"));
        }
    }
    for t in corpus(Language::St, 20_000, CORPUS) {
        let n = scl_normalize(&t).map_err(|e| e.to_string())?;
        let x = se(&n).map_err(|e| e.to_string())?;
        let g = scl_g(&x).map_err(|e| format!("{t}: {e}"))?;
        if g != n {
            return Err(format!("short-circuit: {t}: g gives {g}, normal form {n}"));
        }
    }
    Ok(())
}

fn decision_agreement() -> Outcome {
    let mut equal_pairs = 0;
    for i in 0..500u64 {
        // A small alphabet and few atoms so that equal pairs actually occur.
        let (p, q) = (
            gen_term(Language::Ft, 4, 2, 2 * i),
            gen_term(Language::Ft, 4, 2, 2 * i + 1),
        );
        let by_tree = fe(&p).ok() == fe(&q).ok();
        let by_nf = fel_normalize(&p).ok() == fel_normalize(&q).ok();
        if by_tree != by_nf {
            return Err(format!("full: {p} vs {q}"));
        }
        equal_ffel(&p, &q, 20).map_err(|e| e.to_string())?;
        equal_pairs += by_tree as usize;
        let (p, q) = (
            gen_term(Language::St, 4, 2, 5000 + 2 * i),
            gen_term(Language::St, 4, 2, 5001 + 2 * i),
        );
        let by_tree = se(&p).ok() == se(&q).ok();
        let by_nf = scl_normalize(&p).ok() == scl_normalize(&q).ok();
        if by_tree != by_nf {
            return Err(format!("short-circuit: {p} vs {q}"));
        }
        equal_fscl(&p, &q, 20).map_err(|e| e.to_string())?;
        equal_pairs += by_tree as usize;
    }
    if equal_pairs == 0 {
        return Err("corpus produced no equal pairs".into());
    }
    Ok(())
}

fn star_decompositions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for logic in [Logic::Fel, Logic::Scl] {
        let g = NormalGen::new(logic, 3, 2);
        for i in 0..200 {
            let conj = i % 2 == 0;
            let left_conj = rng.random_bool(0.5);
            let p = g.star(2, left_conj, &mut rng);
            let q = g.star(2, !conj, &mut rng);
            let t = g.join(conj, p.clone(), q.clone());
            let err = |m: &str| format!("{logic:?} {t}: {m}");
            match logic {
                Logic::Fel => {
                    let x = fe(&t).map_err(|e| e.to_string())?;
                    let (cd, dd) = (fel_cd(&x), fel_dd(&x));
                    let (found, other) = if conj { (cd, dd) } else { (dd, cd) };
                    if other.is_some() {
                        return Err(err("decomposition of the wrong kind exists"));
                    }
                    let (y, z) = found.ok_or_else(|| err("no decomposition"))?;
                    let want_y = fe(&p)
                        .map_err(|e| e.to_string())?
                        .replace_tf(&Tree::Hole1, &Tree::Hole2);
                    if y != want_y || z != fe(&q).map_err(|e| e.to_string())? {
                        return Err(err("pair differs from the constructive one"));
                    }
                    let (h1, h2) = if conj {
                        (z.clone(), z.replace_leaf(&Tree::T, &Tree::F))
                    } else {
                        (z.replace_leaf(&Tree::F, &Tree::T), z.clone())
                    };
                    if y.replace_leaf(&Tree::Hole1, &h1)
                        .replace_leaf(&Tree::Hole2, &h2)
                        != x
                    {
                        return Err(err("recomposition fails"));
                    }
                }
                Logic::Scl => {
                    let x = se(&t).map_err(|e| e.to_string())?;
                    let (cd, dd) = (scl_cd(&x), scl_dd(&x));
                    let (found, other) = if conj { (cd, dd) } else { (dd, cd) };
                    if other.is_some() {
                        return Err(err("decomposition of the wrong kind exists"));
                    }
                    let (y, z) = found.ok_or_else(|| err("no decomposition"))?;
                    let cut = if conj { Tree::T } else { Tree::F };
                    let want_y = se(&p)
                        .map_err(|e| e.to_string())?
                        .replace_leaf(&cut, &Tree::Hole);
                    if y != want_y || z != se(&q).map_err(|e| e.to_string())? {
                        return Err(err("pair differs from the constructive one"));
                    }
                    if y.replace_leaf(&Tree::Hole, &z) != x {
                        return Err(err("recomposition fails"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn translation() -> Outcome {
    for t in corpus(Language::Ft, 30_000, 500) {
        let h = translate_h(&t).map_err(|e| e.to_string())?;
        if se(&h).ok() != fe(&t).ok() {
            return Err(format!("{t} -> {h}"));
        }
    }
    Ok(())
}

fn negative_controls() -> Outcome {
    let r = equal_fscl(&term("a && b"), &term("b && a"), 20).map_err(|e| e.to_string())?;
    if r.equal || r.witness.is_none() {
        return Err("a && b and b && a reported equal".into());
    }
    let r = equal_fscl(&term("a && F"), &term("F"), 20).map_err(|e| e.to_string())?;
    if r.equal || r.witness.is_none() {
        return Err("a && F and F reported equal".into());
    }
    let r = equal_ffel(&term("a & F"), &term("F & a"), 20).map_err(|e| e.to_string())?;
    if !r.equal {
        return Err("a & F and F & a reported different".into());
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("golden evaluation trees", golden_figures),
        ("golden trace set", golden_traces),
        ("worked examples", worked_examples),
        ("equation catalogs hold", catalogs_hold),
        (
            "normalization terminates, is normal, keeps trees",
            normalization,
        ),
        ("inversion round-trips", inversion),
        (
            "tree equality agrees with normal-form identity",
            decision_agreement,
        ),
        (
            "conjunction/disjunction decompositions",
            star_decompositions,
        ),
        ("translation to short-circuit keeps trees", translation),
        ("negative controls", negative_controls),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS {:>2} {name} ({:.2?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
