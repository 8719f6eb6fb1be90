mod common;

use common::*;
use demazure_crystals::demazure::{
    character, demazure_paths, search_schedules, Engine, Kappa, SearchConfig,
};
use demazure_crystals::{
    AffineType, Budget, ClassicalWeight, CoordinateCrystal, Crystal, Exec, PathSpace,
};
use proptest::prelude::*;

fn chain_checks<C: Crystal>(e: &Engine<C>) {
    let c = e.crystal();
    for j in 1..=3 {
        let sets = e.subsets(j).unwrap();
        let chain = e.extremal_chain(j);
        for a in 0..=e.d() {
            assert!(sets[a].binary_search(&chain[a]).is_ok(), "b_{a}^({j}) ∉ B_{a}");
            let w = c.weight(&chain[a]);
            let same = sets[a].iter().filter(|b| c.weight(b) == w).count();
            assert_eq!(same, 1, "weight of b_{a}^({j}) is not simple in B_{a}");
        }
    }
}

#[test]
fn extremal_elements_are_members_of_simple_weight() {
    for (t, l, i, v) in coord_configs(&smallest_coord_ranks(), &[1, 2]) {
        chain_checks(&coord_engine(t, l, i, v, Exec::Sequential));
    }
    chain_checks(&type_a_engine(3, 2, 1, "intro", Exec::Sequential));
    chain_checks(&type_a_engine(3, 2, 2, "formula", Exec::Sequential));
}

/// The maximal `f`-strings along the word reach `⋯⊗b̄_{j+1}⊗(b_a^(j))^{⊗j}`,
/// and the next index sees `ε = 0`, `φ = ⟨wt, h⟩ > 0`.
fn extremal_paths<C: Crystal>(e: &Engine<C>) {
    let space = &e.space;
    let mut p = space.ground_path();
    for k in 1..=3 * e.d() {
        let i = e.schedule.reflection(k);
        while let Some(q) = space.f(i, &p) {
            p = q;
        }
        let (j, a) = e.schedule.position(k);
        let b = e.extremal_chain(j)[a].clone();
        let expected: Vec<_> = std::iter::repeat_n(b, j).collect();
        assert_eq!(p, space.path(expected), "k = {k}");
        let next = e.schedule.reflection(k + 1);
        let (eps, phi) = space.epsilon_phi(&p, next);
        assert_eq!(eps, 0);
        assert!(phi > 0);
        assert_eq!(space.weight(&p).pairing(next), phi as i64);
    }
}

#[test]
fn extremal_paths_have_the_product_form() {
    for (t, _, i, v) in coord_configs(&smallest_coord_ranks(), &[1]) {
        extremal_paths(&coord_engine(t, 1, i, v, Exec::Sequential));
    }
    extremal_paths(&type_a_engine(3, 2, 1, "intro", Exec::Sequential));
    extremal_paths(&type_a_engine(2, 1, 2, "formula", Exec::Sequential));
}

#[test]
fn lambda0_mixed_sets_fill_b_squared() {
    for t in smallest_coord_ranks() {
        let e = coord_engine(t, 1, 0, "default", Exec::Parallel);
        let size = e.crystal().size();
        let mixed = e.mixed_subsets(1).unwrap();
        assert_eq!(mixed[0].len(), e.subset(1, e.d()).unwrap().len());
        assert_eq!(mixed[e.d()].len(), size * size, "{t}");
    }
}

#[test]
fn kappa_forms_agree_when_both_apply() {
    let e = coord_engine(AffineType::B1(3), 1, 0, "default", Exec::Parallel);
    for k in [1, 5, 6, 9, 12] {
        let one = demazure_paths(&e, k, Kappa::One).unwrap();
        let two = demazure_paths(&e, k, Kappa::Two).unwrap();
        assert_eq!(one, two, "k = {k}");
        assert_eq!(character(&e.space, &one).cardinality(), one.len());
    }
}

#[test]
fn c1_first_fundamental_needs_kappa_two() {
    let c = CoordinateCrystal::new(AffineType::C1(2), 1).unwrap();
    let lam = ClassicalWeight(vec![0, 1, 0]);
    let cfg = SearchConfig { d_max: 4, period: 1, j_max: 3, budget: Budget::default(), exec: Exec::Parallel };
    let one = search_schedules(&c, &lam, Kappa::One, cfg).unwrap();
    assert!(one.found.is_empty());
    assert!(one.candidates_checked + one.prefixes_pruned > 0);
    let two = search_schedules(&c, &lam, Kappa::Two, cfg).unwrap();
    let table = two.found[0].clone();
    let space = PathSpace::new(c, lam).unwrap();
    let sched = demazure_crystals::Schedule::new(table, "found").unwrap();
    let e = Engine::new(space, sched, Budget::default(), Exec::Parallel).unwrap();
    let size = c.size();
    let left = e.subset(2, e.d()).unwrap().len();
    assert_eq!(e.mixed_subsets(1).unwrap()[e.d()].len(), left * size);
    assert!(demazure_paths(&e, 2 * e.d(), Kappa::Two).is_ok());
    assert!(demazure_paths(&e, 2 * e.d(), Kappa::One).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// (II′) and (III) on random `(family, λ)` at level 2 with the
    /// `2Λ_0` schedule.
    #[test]
    fn mixed_conditions_hold_at_level_two(fam in 0usize..2, pick in any::<usize>()) {
        let t = [AffineType::B1(3), AffineType::A2Even(2)][fam];
        let base = coord_engine(t, 2, 0, "default", Exec::Sequential);
        let weights = t.dominant_weights_of_level(2);
        let lambda = weights[pick % weights.len()].clone();
        let space = PathSpace::new(*base.crystal(), lambda).unwrap();
        let e = Engine::new(space, base.schedule.clone(), Budget::default(), Exec::Sequential).unwrap();
        let r = demazure_crystals::demazure::check_conditions(&e, 2, true).unwrap();
        prop_assert!(r.kappa_two(), "{}", r.to_json());
    }

    /// Window normalization: a path is unchanged by appending ground elements,
    /// and `e_i f_i p = p` along random walks.
    #[test]
    fn random_walks_are_reversible(steps in prop::collection::vec(0usize..8, 0..12)) {
        let e = type_a_engine(3, 2, 1, "formula", Exec::Sequential);
        let space = &e.space;
        let mut p = space.ground_path();
        for s in steps {
            let i = s % 4;
            if let Some(q) = space.f(i, &p) {
                prop_assert_eq!(space.e(i, &q), Some(p.clone()));
                let (eq, fq) = space.epsilon_phi(&q, i);
                let (ep, fp) = space.epsilon_phi(&p, i);
                prop_assert_eq!((eq, fq + 1), (ep + 1, fp));
                p = q;
            }
            let mut longer = p.window.clone();
            for j in p.len() + 1..=p.len() + 3 {
                longer.push(space.ground_bar(j).clone());
            }
            prop_assert_eq!(space.path(longer), p.clone());
        }
    }
}
