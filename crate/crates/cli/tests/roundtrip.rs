use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use tarski_cli::encode;
use tarski_cli::parse::{self, Node};
use tarski_core::actions::{Action, Partition, Universe};
use tarski_core::config::Refinement;
use tarski_core::equations::Rational;
use tarski_core::groups::{FreeWord, GroupElement, Letter, Permutation};
use tarski_core::paradox::{CyclicTableau, ParadoxPattern, ParadoxicalDecomposition, PingPongChain, SubgroupSpec};
use tarski_core::sets::{FiniteSet, PointSet, SymbolicSet};

fn word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    FreeWord::reduce(rank, (0..len).map(|_| Letter::new(rng.gen_range(0..rank), rng.gen()))).unwrap()
}

fn perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

fn symbolic(rng: &mut ChaCha8Rng, rank: usize, depth: usize) -> SymbolicSet {
    if depth == 0 || rng.gen_bool(0.3) {
        let w = word(rng, rank, 3);
        return if rng.gen() {
            SymbolicSet::cone(rank, &w).unwrap()
        } else {
            SymbolicSet::singleton(rank, &w).unwrap()
        };
    }
    let a = symbolic(rng, rank, depth - 1);
    match rng.gen_range(0..4) {
        0 => a.union(&symbolic(rng, rank, depth - 1)).unwrap(),
        1 => a.intersection(&symbolic(rng, rank, depth - 1)).unwrap(),
        2 => a.difference(&symbolic(rng, rank, depth - 1)).unwrap(),
        _ => a.complement(),
    }
}

fn finite(rng: &mut ChaCha8Rng, n: usize) -> FiniteSet {
    FiniteSet::from_points(n, (0..n).filter(|_| rng.gen())).unwrap()
}

fn reparse<T>(v: Value, f: impl Fn(Node<'_>) -> tarski_cli::error::Result<T>) -> T {
    f(Node::root(&v)).unwrap_or_else(|e| panic!("{e}: {v}"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rank = rng.gen_range(1..=10);
        let w = word(&mut rng, rank, 8);
        prop_assert_eq!(&reparse(encode::word(&w), parse::word), &w);
        let degree = rng.gen_range(1..8);
        let p = perm(&mut rng, degree);
        prop_assert_eq!(&reparse(encode::permutation(&p), parse::permutation), &p);
        for g in [GroupElement::Word(w), GroupElement::Perm(p)] {
            prop_assert_eq!(&reparse(encode::element(&g), parse::element), &g);
        }
        let r = Rational::new(BigInt::from(rng.gen::<i64>()), BigInt::from(rng.gen_range(1..i64::MAX)));
        prop_assert_eq!(&reparse(encode::rational(&r), parse::rational), &r);
    }

    #[test]
    fn sets_and_partitions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rank = rng.gen_range(1..=3);
        let free = Action::free(rank).unwrap();
        let s = PointSet::Symbolic(symbolic(&mut rng, rank, 3));
        prop_assert_eq!(&reparse(encode::set(&s), |n| parse::set(&free, n)), &s);
        let cut = PointSet::Symbolic(symbolic(&mut rng, rank, 2));
        if !cut.is_empty() && !cut.complement().is_empty() {
            let p = Partition::new(&free, vec![cut.clone(), cut.complement()]).unwrap();
            prop_assert_eq!(&reparse(encode::partition(&p), |n| parse::partition(&free, n)), &p);
        }

        let n = rng.gen_range(1..8);
        let act = Action::permutation(n, vec![perm(&mut rng, n)]).unwrap();
        let f = PointSet::Finite(finite(&mut rng, n));
        prop_assert_eq!(&reparse(encode::set(&f), |x| parse::set(&act, x)), &f);
    }

    #[test]
    fn actions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..6);
        let k = rng.gen_range(0..3);
        let gens: Vec<Permutation> = (0..k).map(|_| perm(&mut rng, n)).collect();
        let all = [
            Action::permutation(n, gens.clone()).unwrap(),
            Action::regular(n, gens).unwrap(),
            Action::free(rng.gen_range(0..=10)).unwrap(),
            Action::trivial(Universe::Finite(n)).unwrap(),
            Action::trivial(Universe::FreeWords(rng.gen_range(0..4))).unwrap(),
        ];
        for a in all {
            prop_assert_eq!(&reparse(encode::action(&a), parse::action), &a);
        }
    }

    #[test]
    fn compound_values(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let free = Action::free(2).unwrap();
        let mut sets = |k: usize| -> Vec<PointSet> { (0..k).map(|_| PointSet::Symbolic(symbolic(&mut rng, 2, 2))).collect() };
        let (a_sets, b_sets, extra) = (sets(2), sets(2), sets(3));
        let mut words = |k: usize| -> Vec<GroupElement> { (0..k).map(|_| GroupElement::Word(word(&mut rng, 2, 4))).collect() };
        let (e1, e2, e3) = (words(2), words(2), words(3));

        let dec = ParadoxicalDecomposition {
            a_pieces: a_sets.clone(),
            a_translators: e1.clone(),
            b_pieces: b_sets.clone(),
            b_translators: e2.clone(),
        };
        prop_assert_eq!(&reparse(encode::decomposition(&dec), |n| parse::decomposition(&free, n)), &dec);

        let chain = PingPongChain { sets: extra.clone(), elements: e3.clone() };
        prop_assert_eq!(&reparse(encode::chain(&chain), |n| parse::chain(&free, n)), &chain);

        let t = CyclicTableau { a_sets, b_sets, elements: e1.clone() };
        prop_assert_eq!(&reparse(encode::tableau(&t), |n| parse::tableau(&free, n)), &t);

        let pattern = ParadoxPattern {
            first: (0..rng.gen_range(1..4)).map(|_| (rng.gen_range(0..3), rng.gen_range(1..6))).collect(),
            second: (0..rng.gen_range(1..4)).map(|_| (rng.gen_range(0..3), rng.gen_range(1..6))).collect(),
        };
        prop_assert_eq!(&reparse(encode::pattern(&pattern), parse::pattern), &pattern);

        for spec in [SubgroupSpec::Elements(e2), SubgroupSpec::Cyclic { generator: e3[0].clone(), bound: rng.gen_range(1..20) }] {
            prop_assert_eq!(&reparse(encode::subgroup(&spec), |n| parse::subgroup(&free, n, 1)), &spec);
        }

        for mode in [Refinement::Partition, Refinement::String, Refinement::Composite] {
            prop_assert_eq!(reparse(encode::refinement(mode), parse::refinement), mode);
        }
    }
}

#[test]
fn expression_kinds_evaluate_like_the_library() {
    let free = Action::free(2).unwrap();
    let doc: Value = serde_json::from_str(
        r#"{"kind": "difference", "of": [
              {"kind": "union", "of": [{"kind": "cone", "word": "a"}, {"kind": "singleton", "word": "e"}]},
              {"kind": "intersection", "of": [{"kind": "full"}, {"kind": "cone", "word": "ab"}]}
           ]}"#,
    )
    .unwrap();
    let got = parse::set(&free, Node::root(&doc)).unwrap();
    let cone = |s: &str| SymbolicSet::cone(2, &s.parse().unwrap()).unwrap();
    let e = SymbolicSet::singleton(2, &FreeWord::identity()).unwrap();
    let expected = PointSet::Symbolic(cone("a").union(&e).unwrap().difference(&cone("ab")).unwrap());
    assert_eq!(got, expected);

    let empty: Value = serde_json::json!({"kind": "complement", "of": {"kind": "full"}});
    assert!(parse::set(&free, Node::root(&empty)).unwrap().is_empty());
}

#[test]
fn singleton_element_on_regular_action() {
    let s3 = Action::regular(3, vec![Permutation::new(vec![1, 0, 2]).unwrap()]).unwrap();
    let doc = serde_json::json!({"kind": "singleton", "element": [1, 0, 2]});
    assert_eq!(parse::set(&s3, Node::root(&doc)).unwrap().finite_len(), Some(1));
    let outside = serde_json::json!({"kind": "singleton", "element": [0, 2, 1]});
    assert!(parse::set(&s3, Node::root(&outside)).is_err());
}
