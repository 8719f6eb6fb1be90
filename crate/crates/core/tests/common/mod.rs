#![allow(dead_code)]

use demazure_crystals::demazure::Engine;
use demazure_crystals::schedule::{builtin, configurations};
use demazure_crystals::{
    AffineType, Budget, ClassicalWeight, CoordinateCrystal, Exec, PathSpace, TableauCrystal,
};

pub const COORD_TAGS: [&str; 6] = ["B1", "D1", "A2odd", "A2even", "D2", "C1"];

pub fn ty(tag: &str, n: usize) -> AffineType {
    AffineType::new(tag, n).unwrap()
}

/// The two smallest ranks of a family.
pub fn small_ranks(tag: &str) -> [AffineType; 2] {
    let m = ty(tag, 8).min_rank();
    [ty(tag, m), ty(tag, m + 1)]
}

pub fn lam(ty: AffineType, i: usize, l: u32) -> ClassicalWeight {
    ClassicalWeight::fundamental(ty.index_count(), i).scaled(l as i64)
}

pub fn coord_engine(
    ty: AffineType,
    l: u32,
    i: usize,
    variant: &str,
    exec: Exec,
) -> Engine<CoordinateCrystal> {
    let c = CoordinateCrystal::new(ty, l).unwrap();
    let lambda = lam(ty, i, l);
    let sched = builtin(ty, 0, &lambda, variant).unwrap();
    Engine::new(PathSpace::new(c, lambda).unwrap(), sched, Budget::default(), exec).unwrap()
}

pub fn type_a_engine(n: usize, k: usize, l: u32, variant: &str, exec: Exec) -> Engine<TableauCrystal> {
    let c = TableauCrystal::new(n, k, l as usize).unwrap();
    let ty = AffineType::A1(n);
    let lambda = lam(ty, 0, l);
    let sched = builtin(ty, k, &lambda, variant).unwrap();
    Engine::new(PathSpace::new(c, lambda).unwrap(), sched, Budget::default(), exec).unwrap()
}

/// Every builtin coordinate configuration `(type, l, i, variant)` at the
/// given ranks and levels.
pub fn coord_configs(ranks: &[AffineType], levels: &[u32]) -> Vec<(AffineType, u32, usize, &'static str)> {
    let mut out = Vec::new();
    for &t in ranks {
        for &l in levels {
            for (i, v) in configurations(t) {
                out.push((t, l, i, v));
            }
        }
    }
    out
}

pub fn smallest_coord_ranks() -> Vec<AffineType> {
    COORD_TAGS.iter().map(|t| small_ranks(t)[0]).collect()
}

pub fn two_smallest_coord_ranks() -> Vec<AffineType> {
    COORD_TAGS.iter().flat_map(|t| small_ranks(t)).collect()
}
