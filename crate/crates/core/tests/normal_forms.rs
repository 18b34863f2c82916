mod common;

use common::term_strategy;
use proptest::prelude::*;
use seqlogic::decompose::{fel_g, scl_g};
use seqlogic::normalize::{
    classify_fnf, classify_snf, fel_fc, fel_fn, fel_normalize, is_fnf, is_snf, scl_fc, scl_fn,
    scl_normalize, NormalCategory,
};
use seqlogic::{fe, se, Language, Term};

proptest! {
    #[test]
    fn fel_normal_form_is_normal_and_keeps_tree(t in term_strategy(Language::Ft, 8)) {
        let n = fel_normalize(&t).unwrap();
        prop_assert!(is_fnf(&n), "{} -> {}", t, n);
        prop_assert_eq!(fe(&n).unwrap(), fe(&t).unwrap());
        prop_assert_eq!(fel_normalize(&n).unwrap(), n);
    }

    #[test]
    fn scl_normal_form_is_normal_and_keeps_tree(t in term_strategy(Language::St, 8)) {
        let n = scl_normalize(&t).unwrap();
        prop_assert!(is_snf(&n), "{} -> {}", t, n);
        prop_assert_eq!(se(&n).unwrap(), se(&t).unwrap());
        prop_assert_eq!(scl_normalize(&n).unwrap(), n);
    }

    #[test]
    fn fel_negation_and_conjunction(p in term_strategy(Language::Ft, 5), q in term_strategy(Language::Ft, 5)) {
        let (np, nq) = (fel_normalize(&p).unwrap(), fel_normalize(&q).unwrap());
        let neg = fel_fn(&np).unwrap();
        prop_assert!(is_fnf(&neg));
        prop_assert_eq!(fe(&neg).unwrap(), fe(&Term::not(p.clone())).unwrap());
        let conj = fel_fc(&np, &nq).unwrap();
        prop_assert!(is_fnf(&conj));
        prop_assert_eq!(fe(&conj).unwrap(), fe(&Term::and_f(p, q)).unwrap());
    }

    #[test]
    fn scl_negation_and_conjunction(p in term_strategy(Language::St, 5), q in term_strategy(Language::St, 5)) {
        let (np, nq) = (scl_normalize(&p).unwrap(), scl_normalize(&q).unwrap());
        let neg = scl_fn(&np).unwrap();
        prop_assert!(is_snf(&neg));
        prop_assert_eq!(se(&neg).unwrap(), se(&Term::not(p.clone())).unwrap());
        let conj = scl_fc(&np, &nq).unwrap();
        prop_assert!(is_snf(&conj));
        prop_assert_eq!(se(&conj).unwrap(), se(&Term::and_sc(p, q)).unwrap());
    }

    #[test]
    fn categories_of_negation(t in term_strategy(Language::Ft, 6), u in term_strategy(Language::St, 6)) {
        use NormalCategory::*;
        let flip = |c| match c { TTerm => FTerm, FTerm => TTerm, c => c };
        let n = fel_normalize(&t).unwrap();
        prop_assert_eq!(classify_fnf(&fel_fn(&n).unwrap()), flip(classify_fnf(&n)));
        let n = scl_normalize(&u).unwrap();
        prop_assert_eq!(classify_snf(&scl_fn(&n).unwrap()), flip(classify_snf(&n)));
    }

    #[test]
    fn categories_of_conjunction(p in term_strategy(Language::St, 4), q in term_strategy(Language::St, 4)) {
        use NormalCategory::*;
        let (np, nq) = (scl_normalize(&p).unwrap(), scl_normalize(&q).unwrap());
        let (cp, cq) = (classify_snf(&np), classify_snf(&nq));
        let expected = match (cp, cq) {
            (TTerm, c) => c,
            (FTerm, _) => FTerm,
            (TStarTerm, FTerm) => FTerm,
            (TStarTerm, _) => TStarTerm,
            _ => unreachable!(),
        };
        prop_assert_eq!(classify_snf(&scl_fc(&np, &nq).unwrap()), expected);
    }

    #[test]
    fn inverse_recovers_normal_forms(t in term_strategy(Language::Ft, 7), u in term_strategy(Language::St, 7)) {
        let n = fel_normalize(&t).unwrap();
        prop_assert_eq!(fel_g(&fe(&t).unwrap()).unwrap(), n);
        let n = scl_normalize(&u).unwrap();
        prop_assert_eq!(scl_g(&se(&u).unwrap()).unwrap(), n);
    }

    #[test]
    fn fel_equality_is_normal_form_identity(p in term_strategy(Language::Ft, 5), q in term_strategy(Language::Ft, 5)) {
        let same_tree = fe(&p).unwrap() == fe(&q).unwrap();
        prop_assert_eq!(same_tree, fel_normalize(&p).unwrap() == fel_normalize(&q).unwrap());
    }

    #[test]
    fn scl_equality_is_normal_form_identity(p in term_strategy(Language::St, 5), q in term_strategy(Language::St, 5)) {
        let same_tree = se(&p).unwrap() == se(&q).unwrap();
        prop_assert_eq!(same_tree, scl_normalize(&p).unwrap() == scl_normalize(&q).unwrap());
    }
}

#[test]
fn fel_normal_forms_of_small_terms() {
    let cases = [
        ("T", "T"),
        ("F", "F"),
        ("!a", "T & (!a & T)"),
        ("a & F", "a & F"),
        ("a | T", "a | T"),
        ("a & b", "T & (a & T & (b & T))"),
        ("a | b", "T & (a & T | b & T)"),
        ("!(a & b)", "T & (!a & T | !b & T)"),
    ];
    for (src, want) in cases {
        let t: Term = src.parse().unwrap();
        assert_eq!(fel_normalize(&t).unwrap().to_string(), want, "{src}");
    }
}

#[test]
fn scl_normal_forms_of_small_terms() {
    let cases = [
        ("!a", "T && (!a && T || F)"),
        ("a && F", "(a || F) && F"),
        ("a || T", "a && T || T"),
        ("a && b", "T && ((a && T || F) && (b && T || F))"),
        ("a || b", "T && (a && T || F || (b && T || F))"),
    ];
    for (src, want) in cases {
        let t: Term = src.parse().unwrap();
        assert_eq!(scl_normalize(&t).unwrap().to_string(), want, "{src}");
    }
}
