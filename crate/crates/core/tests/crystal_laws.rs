mod common;

use common::*;
use demazure_crystals::crystal::{
    reduce_signature, tensor_apply, tensor_epsilon_phi, Sign, Signed, SignedSequence,
};
use demazure_crystals::{Crystal, CoordinateCrystal, Op, TableauCrystal};
use proptest::prelude::*;

/// e/f inverse, string lengths, weight from φ − ε, all checked on every
/// element.
fn check_laws<C: Crystal>(c: &C) {
    let all = c.elements();
    assert_eq!(all.len(), c.size());
    for b in &all {
        assert!(c.contains(b));
        assert_eq!(c.decode(&c.encode(b)).unwrap(), *b);
        for i in c.affine_type().indices() {
            if let Some(x) = c.f(i, b) {
                assert_eq!(c.e(i, &x).as_ref(), Some(b), "e f ≠ id at {}", c.encode(b));
                assert_eq!(c.epsilon(i, &x), c.epsilon(i, b) + 1);
                assert_eq!(c.phi(i, &x) + 1, c.phi(i, b));
            }
            if let Some(x) = c.e(i, b) {
                assert_eq!(c.f(i, &x).as_ref(), Some(b), "f e ≠ id at {}", c.encode(b));
            }
            let mut up = 0;
            let mut cur = c.e(i, b);
            while let Some(x) = cur {
                up += 1;
                cur = c.e(i, &x);
            }
            let mut down = 0;
            let mut cur = c.f(i, b);
            while let Some(x) = cur {
                down += 1;
                cur = c.f(i, &x);
            }
            assert_eq!((up, down), (c.epsilon(i, b), c.phi(i, b)), "{} at {i}", c.encode(b));
        }
    }
}

#[test]
fn coordinate_families_obey_crystal_laws() {
    for t in two_smallest_coord_ranks() {
        for l in 1..=2 {
            check_laws(&CoordinateCrystal::new(t, l).unwrap());
        }
    }
}

#[test]
fn tableau_crystals_obey_crystal_laws() {
    for n in 1..=3 {
        for k in 1..=n {
            for l in 1..=2 {
                check_laws(&TableauCrystal::new(n, k, l).unwrap());
            }
        }
    }
}

/// Deletes the leftmost adjacent `+−` until none is left.
fn reduce_naive(s: &SignedSequence) -> SignedSequence {
    let mut v = s.entries.clone();
    while let Some(p) = v
        .windows(2)
        .position(|w| w[0].sign == Sign::Plus && w[1].sign == Sign::Minus)
    {
        v.drain(p..p + 2);
    }
    SignedSequence { entries: v }
}

/// Deletes the rightmost adjacent `+−` until none is left.
fn reduce_from_right(s: &SignedSequence) -> SignedSequence {
    let mut v = s.entries.clone();
    while let Some(p) = v
        .windows(2)
        .rposition(|w| w[0].sign == Sign::Plus && w[1].sign == Sign::Minus)
    {
        v.drain(p..p + 2);
    }
    SignedSequence { entries: v }
}

fn signs() -> impl Strategy<Value = SignedSequence> {
    prop::collection::vec(any::<bool>(), 0..24).prop_map(|bits| SignedSequence {
        entries: bits
            .into_iter()
            .enumerate()
            .map(|(p, plus)| Signed { sign: if plus { Sign::Plus } else { Sign::Minus }, origin: p })
            .collect(),
    })
}

fn pick<T: Clone>(v: &[T], r: usize) -> T {
    v[r % v.len()].clone()
}

proptest! {
    #[test]
    fn reduction_does_not_depend_on_cancellation_order(s in signs()) {
        let r = reduce_signature(&s);
        prop_assert_eq!(&r, &reduce_naive(&s));
        prop_assert_eq!(&r, &reduce_from_right(&s));
        let first_plus = r.entries.iter().position(|x| x.sign == Sign::Plus).unwrap_or(r.len());
        prop_assert!(r.entries[first_plus..].iter().all(|x| x.sign == Sign::Plus));
    }

    #[test]
    fn tensor_e_inverts_f(tag in 0usize..6, l in 1u32..=2, picks in prop::collection::vec(any::<usize>(), 1..5), i in 0usize..8) {
        let t = small_ranks(COORD_TAGS[tag])[0];
        let c = CoordinateCrystal::new(t, l).unwrap();
        let all = c.elements();
        let factors: Vec<_> = picks.iter().map(|&r| pick(&all, r)).collect();
        let i = i % t.index_count();
        let (eps, phi) = tensor_epsilon_phi(&c, i, &factors);
        if let Some(x) = tensor_apply(&c, Op::F, i, &factors) {
            prop_assert_eq!(tensor_apply(&c, Op::E, i, &x), Some(factors.clone()));
            prop_assert_eq!(tensor_epsilon_phi(&c, i, &x), (eps + 1, phi - 1));
        } else {
            prop_assert_eq!(phi, 0);
        }
        let wt: i64 = factors.iter().map(|b| c.weight(b).pairing(i)).sum();
        prop_assert_eq!(wt, phi as i64 - eps as i64);
    }
}
