mod common;

use common::term_strategy;
use proptest::prelude::*;
use seqlogic::equiv::{
    catalogs, check_schema, equal_ffel, equal_fscl, equal_mixed, translate_h, CheckConfig,
};
use seqlogic::{fe, se, traces, Language};

#[test]
fn every_catalog_holds() {
    let cfg = CheckConfig::default();
    for c in catalogs() {
        for s in &c.schemas {
            let r = check_schema(s, &cfg).unwrap();
            assert!(r.passed(), "{} {}: {:?}", c.name, s.name, r.counterexample);
            assert_eq!(r.trials, cfg.trials);
        }
    }
}

#[test]
fn catalogs_do_not_transfer_across_logics() {
    // Short-circuit evaluation does not validate full commutation with F.
    let s = seqlogic::equiv::EquationSchema {
        name: "swap",
        lhs: "X && F".parse().unwrap(),
        rhs: "F && X".parse().unwrap(),
        logic: seqlogic::equiv::SchemaLogic::Fscl,
    };
    assert!(!check_schema(&s, &CheckConfig::default()).unwrap().passed());
}

proptest! {
    #[test]
    fn translation_preserves_trees(t in term_strategy(Language::Ft, 8)) {
        let h = translate_h(&t).unwrap();
        prop_assert!(h.languages().st);
        prop_assert_eq!(se(&h).unwrap(), fe(&t).unwrap());
    }

    #[test]
    fn witnesses_separate_trees(p in term_strategy(Language::St, 5), q in term_strategy(Language::St, 5)) {
        let r = equal_fscl(&p, &q, 20).unwrap();
        let (lp, lq) = (traces(&se(&p).unwrap()), traces(&se(&q).unwrap()));
        match r.witness {
            None => prop_assert!(r.equal && lp == lq),
            Some(w) => {
                prop_assert!(!r.equal);
                prop_assert!(lp.contains(&w) && !lq.contains(&w));
            }
        }
    }

    #[test]
    fn equality_is_symmetric(p in term_strategy(Language::Ft, 5), q in term_strategy(Language::Ft, 5)) {
        let a = equal_ffel(&p, &q, 20).unwrap().equal;
        prop_assert_eq!(a, equal_ffel(&q, &p, 20).unwrap().equal);
    }

    #[test]
    fn mixed_equality_refines_both(p in term_strategy(Language::Mixed, 5)) {
        prop_assert!(equal_mixed(&p, &p, 20).unwrap().equal);
    }
}
