//! Independent oracles and seeded randomized suites shared by the property
//! tests and the acceptance runner.
//!
//! The oracles here deliberately avoid the code paths they check: partitions
//! come from raw compositions, torsion points from exhaustive denominators
//! with ring multiplication, and good configurations from an explicit norm
//! formula.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use toroidal::lattices::{self, IntMat2, Rational};
use toroidal::rings::{OrderKind, QuadInt};
use toroidal::surfaces::{self, Configuration, MobiusMap, Slope};

pub const RANDOM_CASES: usize = 1000;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn element(order: OrderKind, a: i64, b: i64) -> QuadInt {
    QuadInt::new(order, a, if order == OrderKind::Rational { 0 } else { b }).unwrap()
}

pub fn random_element(r: &mut StdRng, order: OrderKind, bound: i64) -> QuadInt {
    element(order, r.gen_range(-bound..=bound), r.gen_range(-bound..=bound))
}

/// a² + abT + b²N written out by hand.
pub fn norm_by_hand(x: &QuadInt) -> i64 {
    let (a, b) = (x.a(), x.b());
    match x.order() {
        OrderKind::Rational => a * a,
        OrderKind::Gaussian => a * a + b * b,
        OrderKind::Eisenstein6 => a * a + a * b + b * b,
    }
}

/// Every element of norm ≤ `max_norm`.
pub fn elements_up_to_norm(order: OrderKind, max_norm: i64) -> Vec<QuadInt> {
    let bound = 2 * max_norm + 2;
    let b_range = if order == OrderKind::Rational { 0..=0 } else { -bound..=bound };
    let mut out: Vec<QuadInt> = (-bound..=bound)
        .flat_map(|a| b_range.clone().map(move |b| (a, b)))
        .map(|(a, b)| element(order, a, b))
        .filter(|x| norm_by_hand(x) <= max_norm)
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------- partitions

/// Multisets of negative integers summing to −total, from all compositions.
pub fn brute_force_partitions(total: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        let sum: i64 = prefix.iter().sum();
        if sum == -total && !prefix.is_empty() {
            let mut sorted = prefix.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            out.insert(sorted);
            continue;
        }
        for d in 1..=(total + sum) {
            let mut next = prefix.clone();
            next.push(-d);
            stack.push(next);
        }
    }
    out
}

// ------------------------------------------------------------------ torsion

/// Points (x/n, y/n) of ℂ/Λ with γ·z ∈ Λ, found by trying every numerator
/// and multiplying in the ring.
pub fn brute_force_torsion(gamma: &QuadInt) -> BTreeSet<(Rational, Rational)> {
    let n = norm_by_hand(gamma);
    let order = gamma.order();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            // z·n = x + y·g; the rational order still has the second basis
            // vector, on which integers act diagonally.
            let killed = if order == OrderKind::Rational {
                let m = gamma.a();
                (m * x) % n == 0 && (m * y) % n == 0
            } else {
                let prod = gamma.checked_mul(&element(order, x, y)).unwrap();
                prod.a() % n == 0 && prod.b() % n == 0
            };
            if killed {
                out.insert((Rational::new(x, n), Rational::new(y, n)));
            }
        }
    }
    out
}

pub fn torsion_oracle_agreement(max_norm: i64) -> Result<usize, String> {
    let mut checked = 0;
    for order in OrderKind::ALL {
        for gamma in elements_up_to_norm(order, max_norm) {
            if gamma.is_zero() {
                continue;
            }
            let group = lattices::quotient_reps(&gamma).map_err(|e| e.to_string())?;
            let reps: BTreeSet<_> = group.reps().iter().copied().collect();
            let oracle = brute_force_torsion(&gamma);
            if reps != oracle {
                return Err(format!("{order} {gamma}: {reps:?} vs oracle {oracle:?}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

pub fn torsion_group_laws(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for _ in 0..RANDOM_CASES {
        let order = *OrderKind::ALL.choose(&mut r).unwrap();
        let gamma = random_element(&mut r, order, 9);
        if gamma.is_zero() {
            continue;
        }
        let group = lattices::quotient_reps(&gamma).map_err(|e| e.to_string())?;
        if group.len() as i64 != norm_by_hand(&gamma) {
            return Err(format!("{gamma}: {} reps, norm {}", group.len(), norm_by_hand(&gamma)));
        }
        for p in group.reps() {
            if !lattices::kills(&gamma, p).unwrap() {
                return Err(format!("{gamma} does not kill {p:?}"));
            }
        }
        // closure on a sample of pairs
        for _ in 0..4 {
            let p = group.reps().choose(&mut r).unwrap();
            let q = group.reps().choose(&mut r).unwrap();
            let sum = lattices::TorsionGroup::add(p, q);
            if !group.contains(&sum) {
                return Err(format!("{gamma}: {p:?} + {q:?} = {sum:?} not a rep"));
            }
        }
    }
    Ok(())
}

// -------------------------------------------------------------- rings / SNF

pub fn norm_multiplicativity(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for order in OrderKind::ALL {
        for _ in 0..RANDOM_CASES {
            let x = random_element(&mut r, order, 1000);
            let y = random_element(&mut r, order, 1000);
            let xy = x.checked_mul(&y).map_err(|e| e.to_string())?;
            let (nx, ny, nxy) = (x.norm().unwrap(), y.norm().unwrap(), xy.norm().unwrap());
            if nxy != nx * ny || nx != norm_by_hand(&x) {
                return Err(format!("{order}: N({x}·{y}) = {nxy} != {nx}·{ny}"));
            }
        }
    }
    Ok(())
}

pub fn snf_validity(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for i in 0..RANDOM_CASES {
        let bound = if i % 2 == 0 { 6 } else { 60 };
        let m = IntMat2::new(
            r.gen_range(-bound..=bound),
            r.gen_range(-bound..=bound),
            r.gen_range(-bound..=bound),
            r.gen_range(-bound..=bound),
        );
        let snf = lattices::smith_normal_form(&m).map_err(|e| e.to_string())?;
        let (d1, d2) = snf.invariant_factors();
        let product = snf.u.checked_mul(&m).unwrap().checked_mul(&snf.v).unwrap();
        let ok = product == snf.d
            && snf.u.is_unimodular()
            && snf.v.is_unimodular()
            && snf.d.is_diagonal()
            && d1 >= 0
            && d2 >= 0
            && (if d1 == 0 { d2 == 0 } else { d2 % d1 == 0 })
            && (d1 as i128) * (d2 as i128) == m.det().abs();
        if !ok {
            return Err(format!("{m}: {snf:?}"));
        }
    }
    Ok(())
}

pub fn det_equals_norm(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for order in OrderKind::ALL {
        for _ in 0..RANDOM_CASES {
            let g = random_element(&mut r, order, 10_000);
            let m = lattices::mult_matrix(&g).map_err(|e| e.to_string())?;
            if m.det() != norm_by_hand(&g) as i128 {
                return Err(format!("{order} {g}: det {} vs norm {}", m.det(), norm_by_hand(&g)));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- surfaces

/// Random word in shears, unit scalings and inversions about `anchors`
/// (slopes whose pairwise differences are units), applied to `anchors`.
fn random_safe_word(r: &mut StdRng, order: OrderKind, anchors: &[Slope]) -> MobiusMap {
    let mut m = MobiusMap::identity(order);
    let mut images: Vec<Slope> = anchors.to_vec();
    let units = QuadInt::units(order);
    for _ in 0..r.gen_range(1..=6) {
        let step = match r.gen_range(0..4) {
            0 => MobiusMap::shear(&random_element(r, order, 5)).unwrap(),
            1 => MobiusMap::scale(units.choose(r).unwrap()).unwrap(),
            2 => MobiusMap::swap(order),
            _ => match images.choose(r).unwrap() {
                Slope::Finite(a) => MobiusMap::inversion(a).unwrap(),
                Slope::Infinity => MobiusMap::swap(order),
            },
        };
        let moved: Result<Vec<Slope>, _> = images.iter().map(|s| step.apply(s)).collect();
        // the swap may leave O ∪ {∞} when some image is neither 0, ∞ nor a unit
        if let Ok(moved) = moved {
            images = moved;
            m = step.compose(&m).unwrap();
        }
    }
    m
}

pub fn mobius_invariance(seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    let mut exercised = 0;
    for order in [OrderKind::Eisenstein6, OrderKind::Gaussian, OrderKind::Rational] {
        let units = QuadInt::units(order);
        for _ in 0..RANDOM_CASES {
            // pairs with unit difference, plus arbitrary pairs under shears/scalings
            let s1 = if r.gen_bool(0.1) {
                Slope::Infinity
            } else {
                Slope::Finite(random_element(&mut r, order, 6))
            };
            let s2 = match s1 {
                Slope::Finite(a) if r.gen_bool(0.5) => {
                    Slope::Finite(a.checked_add(units.choose(&mut r).unwrap()).unwrap())
                }
                _ => Slope::Finite(random_element(&mut r, order, 6)),
            };
            if s1 == s2 {
                continue;
            }
            let unit_pair = surfaces::intersection_number(&s1, &s2).unwrap() == 1;
            let m = if unit_pair {
                random_safe_word(&mut r, order, &[s1, s2])
            } else {
                let shear = MobiusMap::shear(&random_element(&mut r, order, 6)).unwrap();
                let scale = MobiusMap::scale(units.choose(&mut r).unwrap()).unwrap();
                shear.compose(&scale).unwrap()
            };
            if !m.det().unwrap().is_unit() {
                return Err("word left the unit-determinant group".into());
            }
            let (t1, t2) = (m.apply(&s1).map_err(|e| e.to_string())?, m.apply(&s2).map_err(|e| e.to_string())?);
            let before = surfaces::intersection_number(&s1, &s2).unwrap();
            let after = surfaces::intersection_number(&t1, &t2).unwrap();
            if before != after {
                return Err(format!("{order}: ({s1}, {s2}) -> ({t1}, {t2}) changes {before} to {after}"));
            }
            exercised += 1;
        }
    }
    Ok(exercised)
}

pub fn canonical_orbit_constancy(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let order = OrderKind::Eisenstein6;
    let base = Configuration::new(
        order,
        vec![
            Slope::Infinity,
            Slope::Finite(element(order, 0, 0)),
            Slope::Finite(element(order, 1, 0)),
            Slope::Finite(element(order, 0, 1)),
        ],
    )
    .unwrap();
    let canonical = surfaces::canonicalize(&base).map_err(|e| e.to_string())?;
    if canonical != base {
        return Err(format!("base normalizes to {canonical}"));
    }
    for _ in 0..RANDOM_CASES {
        let m = random_safe_word(&mut r, order, base.slopes());
        let mut moved = base.transform(&m).map_err(|e| e.to_string())?;
        let mut shuffled = moved.slopes().to_vec();
        shuffled.shuffle(&mut r);
        moved = Configuration::new(order, shuffled).unwrap();
        if !surfaces::is_good_configuration(&moved).unwrap() {
            return Err(format!("{moved} lost goodness"));
        }
        let c = surfaces::canonicalize(&moved).map_err(|e| e.to_string())?;
        if c != canonical {
            return Err(format!("{moved} normalizes to {c}"));
        }
        if surfaces::canonicalize(&c).unwrap() != c {
            return Err(format!("canonicalize not idempotent on {c}"));
        }
    }
    Ok(())
}

/// Canonical classes among all 4-subsets of {∞} ∪ {α : N(α) ≤ max_norm}.
pub fn brute_force_good_classes(order: OrderKind, max_norm: i64) -> BTreeSet<Configuration> {
    let mut slopes = vec![Slope::Infinity];
    slopes.extend(elements_up_to_norm(order, max_norm).into_iter().map(Slope::Finite));
    let meets_once = |s: &Slope, t: &Slope| match (s, t) {
        (Slope::Finite(a), Slope::Finite(b)) => norm_by_hand(&a.checked_sub(b).unwrap()) == 1,
        _ => true,
    };
    let n = slopes.len();
    let mut classes = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if !meets_once(&slopes[i], &slopes[j]) {
                continue;
            }
            for k in j + 1..n {
                if !meets_once(&slopes[i], &slopes[k]) || !meets_once(&slopes[j], &slopes[k]) {
                    continue;
                }
                for l in k + 1..n {
                    if [i, j, k].iter().all(|&x| meets_once(&slopes[x], &slopes[l])) {
                        let cfg =
                            Configuration::new(order, vec![slopes[i], slopes[j], slopes[k], slopes[l]]).unwrap();
                        assert!(surfaces::is_good_configuration(&cfg).unwrap());
                        classes.insert(surfaces::canonicalize(&cfg).unwrap());
                    }
                }
            }
        }
    }
    classes
}
