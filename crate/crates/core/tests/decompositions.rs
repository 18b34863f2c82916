use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seqlogic::decompose::{fel_cd, fel_dd, fel_tsd, scl_cd, scl_dd, scl_tsd};
use seqlogic::equiv::NormalGen;
use seqlogic::normalize::Logic;
use seqlogic::{fe, se, Term, Tree};

type Eval = fn(&Term) -> seqlogic::Result<Tree>;
type Split = fn(&Tree) -> Option<(Tree, Tree)>;

proptest! {
    #[test]
    fn fel_star_decompositions(seed in any::<u64>(), conj in any::<bool>()) {
        let g = NormalGen::new(Logic::Fel, 3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, q) = (g.star(2, rng.random_bool(0.5), &mut rng), g.star(2, !conj, &mut rng));
        let t = g.join(conj, p.clone(), q.clone());
        let x = fe(&t).unwrap();
        let want = (fe(&p).unwrap().replace_tf(&Tree::Hole1, &Tree::Hole2), fe(&q).unwrap());
        let (cd, dd) = (fel_cd(&x), fel_dd(&x));
        if conj {
            prop_assert!(dd.is_none());
            let (y, z) = cd.unwrap();
            prop_assert_eq!(&(y.clone(), z.clone()), &want);
            let zf = z.replace_leaf(&Tree::T, &Tree::F);
            prop_assert_eq!(y.replace_leaf(&Tree::Hole1, &z).replace_leaf(&Tree::Hole2, &zf), x);
        } else {
            prop_assert!(cd.is_none());
            let (y, z) = dd.unwrap();
            prop_assert_eq!(&(y.clone(), z.clone()), &want);
            let zt = z.replace_leaf(&Tree::F, &Tree::T);
            prop_assert_eq!(y.replace_leaf(&Tree::Hole1, &zt).replace_leaf(&Tree::Hole2, &z), x);
        }
    }

    #[test]
    fn scl_star_decompositions(seed in any::<u64>(), conj in any::<bool>()) {
        let g = NormalGen::new(Logic::Scl, 3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, q) = (g.star(2, rng.random_bool(0.5), &mut rng), g.star(2, !conj, &mut rng));
        let t = g.join(conj, p.clone(), q.clone());
        let x = se(&t).unwrap();
        let px = se(&p).unwrap();
        let (cd, dd) = (scl_cd(&x), scl_dd(&x));
        if conj {
            prop_assert!(dd.is_none());
            let want = (px.replace_leaf(&Tree::T, &Tree::Hole), se(&q).unwrap());
            let (y, z) = cd.unwrap();
            prop_assert_eq!(y.replace_leaf(&Tree::Hole, &z), x);
            prop_assert_eq!((y, z), want);
        } else {
            prop_assert!(cd.is_none());
            let want = (px.replace_leaf(&Tree::F, &Tree::Hole), se(&q).unwrap());
            let (y, z) = dd.unwrap();
            prop_assert_eq!(y.replace_leaf(&Tree::Hole, &z), x);
            prop_assert_eq!((y, z), want);
        }
    }

    #[test]
    fn tstar_splits(seed in any::<u64>(), scl in any::<bool>()) {
        let logic = if scl { Logic::Scl } else { Logic::Fel };
        let g = NormalGen::new(logic, 3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pt = g.t_term(3, &mut rng);
        let conj = rng.random_bool(0.5);
        let qs = g.star(2, conj, &mut rng);
        let t = g.join(true, pt.clone(), qs.clone());
        let (eval, tsd): (Eval, Split) =
            if scl { (se, scl_tsd) } else { (fe, fel_tsd) };
        let (y, z) = tsd(&eval(&t).unwrap()).unwrap();
        prop_assert_eq!(y, eval(&pt).unwrap().replace_leaf(&Tree::T, &Tree::Hole));
        prop_assert_eq!(z, eval(&qs).unwrap());
    }
}
