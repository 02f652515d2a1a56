mod support;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tarski_core::actions::{Action, Partition};
use tarski_core::config::{
    coarsen_solution, compute_configurations, project_configuration, ConfigurationPair, ConfigurationSet, Refinement,
};
use tarski_core::equations::{
    build_equations, counting_solution, solve_feasibility, verify_certificate, verify_solution, FeasibilityResult,
};
use tarski_core::groups::{FreeWord, GroupElement};
use tarski_core::paradox::{pattern_check, ParadoxPattern};
use tarski_core::sets::{Point, PointSet, SymbolicSet};

use support::*;

fn cs_for(action: &Action, tuple: Vec<GroupElement>, partition: Partition) -> ConfigurationSet {
    let pair = ConfigurationPair::new(action, tuple, partition).unwrap();
    compute_configurations(action, &pair).unwrap()
}

fn cone(w: &str) -> PointSet {
    PointSet::Symbolic(SymbolicSet::cone(2, &w.parse().unwrap()).unwrap())
}

fn five_blocks(free: &Action) -> Partition {
    let e = PointSet::Symbolic(SymbolicSet::singleton(2, &FreeWord::identity()).unwrap());
    Partition::new(free, vec![e, cone("a"), cone("A"), cone("b"), cone("B")]).unwrap()
}

// Cones over a random prefix-closed cut of depth at most 2, plus {e}.
fn random_free_partition(rng: &mut ChaCha8Rng, free: &Action) -> Partition {
    let mut blocks = vec![PointSet::Symbolic(SymbolicSet::singleton(2, &FreeWord::identity()).unwrap())];
    for first in ["a", "A", "b", "B"] {
        if rng.gen_bool(0.5) {
            blocks.push(cone(first));
        } else {
            let w: FreeWord = first.parse().unwrap();
            blocks.push(PointSet::Symbolic(SymbolicSet::singleton(2, &w).unwrap()));
            for next in ["a", "A", "b", "B"] {
                let word: FreeWord = format!("{first}{next}").parse().unwrap();
                if word.len() == 2 {
                    blocks.push(PointSet::Symbolic(SymbolicSet::cone(2, &word).unwrap()));
                }
            }
        }
    }
    // merge some blocks so the count stays small
    while blocks.len() > 6 {
        let b = blocks.pop().unwrap();
        let k = rng.gen_range(0..blocks.len());
        blocks[k] = blocks[k].union(&b).unwrap();
    }
    Partition::new(free, blocks).unwrap()
}

fn random_finite_cs(rng: &mut ChaCha8Rng) -> ConfigurationSet {
    let action = random_action(rng, 6, 2);
    let part = random_partition(rng, &action, 3);
    let len = rng.gen_range(1..=2);
    let tuple = random_tuple(rng, action.generator_count(), len);
    cs_for(&action, tuple, part)
}

fn check_result(system: &tarski_core::equations::LinearSystem) -> bool {
    match solve_feasibility(system) {
        FeasibilityResult::Solution(f) => {
            assert_eq!(verify_solution(system, &f), Ok(()));
            true
        }
        FeasibilityResult::Infeasible(y) => {
            assert_eq!(verify_certificate(system, &y), Ok(()));
            false
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Exactly one of a verified solution or a verified certificate, and the
    // outcome matches the elimination oracle, including on systems whose
    // configuration list was thinned out.
    #[test]
    fn solver_dichotomy(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cs = random_finite_cs(&mut rng);
        let keep: Vec<bool> = (0..cs.len()).map(|_| rng.gen_bool(0.7)).collect();
        let mut k = 0;
        cs.retain(|_| { k += 1; keep[k - 1] });
        let system = build_equations(&cs);
        prop_assert_eq!(check_result(&system), fm_feasible(&system));
    }

    #[test]
    fn free_solver_dichotomy(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let free = Action::free(2).unwrap();
        let part = random_free_partition(&mut rng, &free);
        let tuple = random_tuple(&mut rng, 2, 1);
        let cs = cs_for(&free, tuple, part);
        let system = build_equations(&cs);
        prop_assert_eq!(check_result(&system), fm_feasible(&system));
    }

    #[test]
    fn counting_solution_verifies(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cs = random_finite_cs(&mut rng);
        let f = counting_solution(&cs).unwrap();
        prop_assert_eq!(verify_solution(&build_equations(&cs), &f), Ok(()));
    }

    // Any verified solution of a longer tuple coarsens to a verified one.
    #[test]
    fn coarsening_preserves_solutions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let action = random_action(&mut rng, 6, 2);
        let part = random_partition(&mut rng, &action, 3);
        let rank = action.generator_count();
        let short = random_tuple(&mut rng, rank, 1);
        let long = [short.clone(), random_tuple(&mut rng, rank, 1)].concat();
        let fine = cs_for(&action, long, part.clone());
        let coarse = cs_for(&action, short, part);
        if let FeasibilityResult::Solution(z) = solve_feasibility(&build_equations(&fine)) {
            let out = coarsen_solution(Refinement::String, &fine, &coarse, &z).unwrap();
            prop_assert_eq!(verify_solution(&build_equations(&coarse), &out), Ok(()));
        }
    }

    // Configurations read off individual words agree with the symbolic
    // computation, and every configuration is realized by a short word.
    #[test]
    fn free_configurations_are_sound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let free = Action::free(2).unwrap();
        let part = random_free_partition(&mut rng, &free);
        let len = rng.gen_range(1..=2);
        let tuple = random_tuple(&mut rng, 2, len);
        let cs = cs_for(&free, tuple.clone(), part.clone());
        let mut seen = std::collections::BTreeSet::new();
        for x in FreeWord::all_up_to(2, 5) {
            let x = GroupElement::Word(x);
            let config: Vec<usize> = std::iter::once(x.clone())
                .chain(tuple.iter().map(|g| free.multiply(g, &x).unwrap()))
                .map(|y| part.block_of(&Point::Word(y.as_word().unwrap().clone())).unwrap())
                .collect();
            prop_assert!(cs.contains(&config), "{:?} missing", config);
            seen.insert(config);
        }
        for c in cs.configurations() {
            prop_assert!(!cs.base_cell(c).unwrap().is_empty());
        }
        // the tuple words have length at most 3 and blocks are fixed beyond
        // depth 2, so words of length 5 reach every configuration
        prop_assert_eq!(seen.len(), cs.len());
    }

    #[test]
    fn projection_is_onto(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let action = random_action(&mut rng, 6, 2);
        let n = action.degree().unwrap();
        let m = rng.gen_range(1..=n.min(3));
        let coarse_labels = random_labels(&mut rng, n, m);
        let coarse = partition_from_labels(&action, &coarse_labels);
        let fine = partition_from_labels(&action, &(0..n).collect::<Vec<_>>());
        let rank = action.generator_count();
        let short = random_tuple(&mut rng, rank, 1);
        let long = [short.clone(), random_tuple(&mut rng, rank, 1)].concat();
        let fine_cs = cs_for(&action, long, fine);
        let coarse_cs = cs_for(&action, short, coarse);
        let mut image: Vec<Vec<usize>> = fine_cs
            .configurations()
            .iter()
            .map(|c| project_configuration(Refinement::Composite, fine_cs.pair(), coarse_cs.pair(), c).unwrap())
            .collect();
        image.sort();
        image.dedup();
        prop_assert_eq!(image.as_slice(), coarse_cs.configurations());
    }

    // A pattern that holds rules out every solution; on finite actions no
    // pattern holds at all.
    #[test]
    fn pattern_implies_infeasible(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let free = Action::free(2).unwrap();
        let tuple = random_tuple(&mut rng, 2, 2);
        let cs = cs_for(&free, tuple, five_blocks(&free));
        let feasible = matches!(solve_feasibility(&build_equations(&cs)), FeasibilityResult::Solution(_));
        let finite = random_finite_cs(&mut rng);
        let (n, m) = (finite.pair().n(), finite.pair().m());
        for _ in 0..50 {
            let mut pick = |n: usize, m: usize| -> Vec<(usize, usize)> {
                (0..rng.gen_range(1..=2)).map(|_| (rng.gen_range(0..=n), rng.gen_range(1..=m))).collect()
            };
            let p = ParadoxPattern { first: pick(2, 5), second: pick(2, 5) };
            if pattern_check(&cs, &p).unwrap().is_ok() {
                prop_assert!(!feasible);
            }
            let q = ParadoxPattern { first: pick(n, m), second: pick(n, m) };
            prop_assert!(pattern_check(&finite, &q).unwrap().is_err());
        }
    }

    #[test]
    fn computations_are_deterministic(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cs = random_finite_cs(&mut rng);
        let again = compute_configurations(cs.action(), cs.pair()).unwrap();
        prop_assert_eq!(cs.configurations(), again.configurations());
        let system = build_equations(&cs);
        prop_assert_eq!(solve_feasibility(&system), solve_feasibility(&build_equations(&again)));
    }
}
