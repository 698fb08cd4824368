mod common;

use std::collections::{BTreeMap, BTreeSet};

use krtl::bounds::{b1, b2, b3, cone_bound, Bound, ZonePattern};
use krtl::braid::{parse_braid, parse_spec, ColoredBraid, InfiniteBraidSpec, Level};
use krtl::census::{census_poincare, crossing_complex, resolve_nondiagonals};
use krtl::diagonal::{decompose, find_diagonals};
use krtl::homfly::{homfly_with, HomflyPoly, MarkovTrace};
use krtl::poly::{Exps, GradingShift, LaurentPoly};
use krtl::quantum::{balanced_binomial, quantum_factorial};
use krtl::shift::*;
use krtl::stable::an_truncated_dims;
use krtl::web::{eval_closed_web, eval_closed_web_balanced, eval_trace, sl2_bracket, ClosedWeb, Rung};
use proptest::prelude::*;

use common::{brute_force_an, kauffman_bracket};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..4, -6i32..7, -2i32..3, -9i64..10), 0..6).prop_map(|ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|(t, q, a, c)| (Exps::new(t, q, a), c))).unwrap()
    })
}

fn level() -> impl Strategy<Value = Level> {
    prop_oneof![Just(Level::Infinite), (1u32..7).prop_map(Level::Finite)]
}

fn word(n: usize, max: usize, positive: bool) -> impl Strategy<Value = Vec<i64>> {
    let g = (1..n.max(2) as i64, any::<bool>())
        .prop_map(move |(g, s)| if positive || s { g } else { -g });
    prop::collection::vec(g, 0..=if n < 2 { 0 } else { max })
}

fn signed_braid(max_n: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (1..=max_n).prop_flat_map(move |n| (Just(n), word(n, max_len, false)))
}

fn positive_braid(max_n: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (2..=max_n).prop_flat_map(move |n| (Just(n), word(n, max_len, true)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(x in poly(), y in poly(), z in poly()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &LaurentPoly::one(), x.clone());
    }

    #[test]
    fn poly_text_round_trip(x in poly()) {
        let back: LaurentPoly = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn shift_composition(x in poly(), s in (-5i32..5, -5i32..5, -5i32..5), r in (-5i32..5, -5i32..5, -5i32..5)) {
        let s = GradingShift::new(s.0, s.1, s.2);
        let r = GradingShift::new(r.0, r.1, r.2);
        prop_assert_eq!(x.shifted(s).shifted(r), x.shifted(s * r));
        prop_assert_eq!(x.shifted(s), &x * &s.to_poly());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn braid_file_round_trip((n, w) in signed_braid(6, 20), m in 1u32..4, lv in level()) {
        prop_assume!(lv.admits(m));
        let b = ColoredBraid::from_signed(n, &w, m, lv).unwrap();
        prop_assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn spec_round_trip((n, prefix) in signed_braid(5, 10), tail in prop::collection::vec(1i64..5, 1..6)) {
        prop_assume!(n >= 2);
        let tail: Vec<i64> = tail.into_iter().map(|g| (g - 1) % (n as i64 - 1) + 1).collect();
        let s = InfiniteBraidSpec::from_signed(n, 1, Level::Finite(2), &prefix, &tail).unwrap();
        prop_assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn diagonal_structure((n, w) in positive_braid(6, 40)) {
        let gens: Vec<usize> = w.iter().map(|&g| g as usize).collect();
        let d = decompose(n, &gens);
        let mut seen = BTreeSet::new();
        for diag in &d.diagonals {
            prop_assert_eq!(diag.len(), n - 1);
            for (j, &p) in diag.iter().enumerate() {
                prop_assert_eq!(gens[p - 1], j + 1);
                prop_assert!(seen.insert(p));
            }
        }
        let census = d.zone_census();
        prop_assert_eq!(census.len(), d.used + 1);
        prop_assert_eq!(census.values().sum::<usize>(), d.zone_of.len());
        // each diagonal owns a distinct σ1
        let full: usize = (0..gens.len()).filter(|&i| gens[i] == 1).count();
        prop_assert!(d.y <= full);
    }

    #[test]
    fn census_is_multiplicative((n, u) in signed_braid(4, 8), v in word(4, 8, false), m in 1u32..4, lv in level()) {
        prop_assume!(lv.admits(m));
        let v: Vec<i64> = if n < 2 { vec![] } else {
            v.into_iter().map(|g| g.signum() * ((g.abs() - 1) % (n as i64 - 1) + 1)).collect()
        };
        let bu = ColoredBraid::from_signed(n, &u, m, lv).unwrap();
        let bv = ColoredBraid::from_signed(n, &v, m, lv).unwrap();
        let uv = bu.concat(&bv).unwrap();
        prop_assert_eq!(census_poincare(&uv), &census_poincare(&bu) * &census_poincare(&bv));
    }

    #[test]
    fn surviving_terms(m in 1u32..8, extra in 0u32..8, positive in any::<bool>()) {
        let n_level = m + extra;
        let terms = crossing_complex(m, m, positive, Level::Finite(n_level));
        prop_assert_eq!(terms.len() as u32, m.min(n_level - m) + 1);
        prop_assert_eq!(crossing_complex(m, m, positive, Level::Infinite).len() as u32, m + 1);
    }

    #[test]
    fn one_colored_crossings_have_two_terms((n, w) in signed_braid(4, 10)) {
        let b = ColoredBraid::from_signed(n, &w, 1, Level::Infinite).unwrap();
        let tq: LaurentPoly = "1 + t*q".parse().unwrap();
        prop_assert_eq!(census_poincare(&b), tq.pow(w.len() as u32));
    }

    #[test]
    fn pattern_counts_match_enumeration((n, w) in positive_braid(4, 10), m in 1u32..3, lv in level()) {
        prop_assume!(lv.admits(m));
        let b = ColoredBraid::from_signed(n, &w, m, lv).unwrap();
        let d = find_diagonals(&b).unwrap();
        let table = resolve_nondiagonals(&b, &d, 1 << 20).unwrap();
        // enumerate resolutions crossing by crossing
        let rungs: Vec<u32> = crossing_complex(m, m, true, lv).iter().map(|t| t.rung).collect();
        let crossings: Vec<(usize, usize)> = d.zone_of.iter().map(|(&p, &z)| (p, z)).collect();
        let mut counts: BTreeMap<Vec<usize>, u128> = BTreeMap::new();
        let total = rungs.len().pow(crossings.len() as u32);
        for mut idx in 0..total {
            let mut nonempty = BTreeSet::new();
            for &(_, z) in &crossings {
                if rungs[idx % rungs.len()] > 0 {
                    nonempty.insert(z);
                }
                idx /= rungs.len();
            }
            *counts.entry(nonempty.into_iter().collect()).or_insert(0) += 1;
        }
        let nonzero: BTreeMap<_, _> = table.patterns.into_iter().filter(|(_, c)| *c > 0).collect();
        prop_assert_eq!(nonzero, counts);
        prop_assert_eq!(table.resolutions, total as u128);
    }

    #[test]
    fn cone_bound_is_monotone(n in 2usize..5, nz_mult in 0usize..4, zs in prop::collection::btree_set(0usize..16, 0..8), extra in 0usize..16) {
        let nz = n * nz_mult;
        let small: BTreeSet<usize> = zs.into_iter().filter(|&z| z <= nz).collect();
        let mut big = small.clone();
        if extra <= nz {
            big.insert(extra);
        }
        let a = cone_bound(n, nz, &small).unwrap();
        let b = cone_bound(n, nz, &big).unwrap();
        prop_assert!(b <= a);
        if small.iter().any(|&z| z != 0) {
            prop_assert!(a >= Bound::Finite(1));
        }
    }

    #[test]
    fn pattern_value_positive_off_zone_zero(n in 2usize..5, nz_mult in 1usize..4, zs in prop::collection::btree_set(0usize..16, 1..6)) {
        let nz = n * nz_mult;
        let zs: BTreeSet<usize> = zs.into_iter().filter(|&z| z <= nz).collect();
        prop_assume!(zs.iter().any(|&z| z != 0));
        let p = ZonePattern { nz, nonempty: zs };
        let w = 2 * (n as u64 - 1);
        prop_assert!(b1(&p).max(w * b2(&p, n)).max(w * b3(&p, n)) >= 1);
    }

    #[test]
    fn shift_exponents_match_alpha(i in 0u32..9, j in 0u32..9, k in 0u32..9) {
        let s = fork_slide_shift(i, j, k, ForkSlide::T1).unwrap();
        let mc = fork_slide_crossings(i, j, k);
        prop_assert_eq!(s.t as i64, isotopy_alpha(&mc.before, &mc.after));
        prop_assert!(s.t >= 0);
        if i == j && j == k && i > 0 {
            prop_assert!(s.t > 0);
        }
        let t = fork_twist_shift(i, j, ForkTwist::T3).unwrap();
        let mc = fork_twist_crossings(i, j);
        prop_assert_eq!(t.t as i64, isotopy_alpha(&mc.before, &mc.after));
    }
}

fn random_ladder() -> impl Strategy<Value = (usize, u32, u32, Vec<(usize, u32)>)> {
    (2usize..4, 1u32..3).prop_flat_map(|(n, m)| {
        (
            Just(n),
            Just(m),
            m + 1..m + 3,
            prop::collection::vec((0..n - 1, 1..=m), 0..5),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn local_rules_agree_with_trace((n, m, level, squares) in random_ladder()) {
        let w = ClosedWeb::ladder_closure(n, m, &squares).unwrap();
        let lv = Level::Finite(level);
        let full = eval_closed_web_balanced(&w, lv).unwrap();
        prop_assert_eq!(eval_trace(&w, lv, 1 << 16).unwrap(), full.clone());
        prop_assert_eq!(full.bar_q(), full.clone());
        // nonnegative after normalization
        prop_assert!(eval_closed_web(&w, lv).unwrap().terms().all(|(_, c)| c >= 0));
    }

    #[test]
    fn circles_at_q_one(count in 0usize..5, n_level in 1u32..6) {
        let v = eval_closed_web(&ClosedWeb::circles(count, 1), Level::Finite(n_level)).unwrap();
        prop_assert_eq!(v.at_q_one().as_constant(), Some((n_level as i64).pow(count as u32)));
    }

    #[test]
    fn commutator_of_rungs(a in 1u32..4, b in 1u32..4, extra in 0u32..3) {
        let n_level = a.max(b) + extra;
        let lv = Level::Finite(n_level);
        let fe = ClosedWeb::new(vec![a, b], vec![Rung::right(0, 1), Rung::left(0, 1)]).unwrap();
        let ef = ClosedWeb::new(vec![a, b], vec![Rung::left(0, 1), Rung::right(0, 1)]).unwrap();
        let diff = &eval_trace(&fe, lv, 1 << 16).unwrap() - &eval_trace(&ef, lv, 1 << 16).unwrap();
        // [E, F] acts as [h] with h = a - b, here with F applied first
        let h = a as i64 - b as i64;
        let qint = balanced_binomial(h.unsigned_abs() as u32, 1);
        let qint = if h < 0 { -&qint } else { qint };
        let circles = &balanced_binomial(n_level, a as i64) * &balanced_binomial(n_level, b as i64);
        prop_assert_eq!(diff, &qint * &circles);
    }

    #[test]
    fn divided_powers(a in 1u32..4, r in 1u32..4, extra in 0u32..3) {
        prop_assume!(r <= a);
        let lv = Level::Finite(a + r + extra);
        let singles: Vec<Rung> = (0..r).map(|_| Rung::right(0, 1)).chain((0..r).map(|_| Rung::left(0, 1))).collect();
        let ones = ClosedWeb::new(vec![a, 0], singles).unwrap();
        let whole = ClosedWeb::new(vec![a, 0], vec![Rung::right(0, r), Rung::left(0, r)]).unwrap();
        let fact = quantum_factorial(r);
        let fact = fact.shifted(GradingShift::new(0, -((r * (r - 1) / 2) as i32), 0));
        let lhs = eval_trace(&ones, lv, 1 << 16).unwrap();
        let rhs = &(&fact * &fact) * &eval_trace(&whole, lv, 1 << 16).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_matches_state_sum((n, w) in signed_braid(3, 6)) {
        let b = ColoredBraid::from_signed(n, &w, 1, Level::Finite(2)).unwrap();
        prop_assert_eq!(sl2_bracket(&b).unwrap().at_t_sign(-1), kauffman_bracket(n, &w));
    }

    #[test]
    fn bracket_multiplies_under_disjoint_union((n1, u) in signed_braid(2, 4), (n2, v) in signed_braid(2, 4)) {
        let shifted: Vec<i64> = v.iter().map(|&g| g.signum() * (g.abs() + n1 as i64)).collect();
        let joined: Vec<i64> = u.iter().copied().chain(shifted).collect();
        let lv = Level::Finite(2);
        let whole = sl2_bracket(&ColoredBraid::from_signed(n1 + n2, &joined, 1, lv).unwrap()).unwrap();
        let left = sl2_bracket(&ColoredBraid::from_signed(n1, &u, 1, lv).unwrap()).unwrap();
        let right = sl2_bracket(&ColoredBraid::from_signed(n2, &v, 1, lv).unwrap()).unwrap();
        prop_assert_eq!(whole, &left * &right);
    }

    #[test]
    fn truncations_match_brute_force(n in 1u32..5, y in 0u32..11, q_min in -14i32..2) {
        let t = an_truncated_dims(n, y, q_min);
        prop_assert_eq!(&t.dims, &brute_force_an(n, y as i32, q_min));
        prop_assert!(t.dims.keys().all(|&(deg, _, a)| deg % 2 == 0 && deg >= 0 && (0..=n as i32).contains(&a)));
        if 2 * n >= y {
            prop_assert_eq!(t.dims, an_truncated_dims(n + 1, y, q_min).dims);
        }
    }
}

#[test]
fn second_reidemeister_shift() {
    let lv = Level::Finite(2);
    let r2 = sl2_bracket(&ColoredBraid::from_signed(2, &[1, -1], 1, lv).unwrap()).unwrap();
    let id = sl2_bracket(&ColoredBraid::from_signed(2, &[], 1, lv).unwrap()).unwrap();
    let minus_q: LaurentPoly = "-q".parse().unwrap();
    assert_eq!(r2.at_t_sign(-1), &minus_q * &id.at_t_sign(-1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn homfly_skein_and_markov((n, w) in signed_braid(4, 8)) {
        let mut tr = MarkovTrace::new();
        let mut hp = |n: usize, w: &[i64]| {
            homfly_with(&mut tr, &ColoredBraid::from_signed(n, w, 1, Level::Infinite).unwrap()).unwrap()
        };
        let (ainv, a, z) = (HomflyPoly::a(-1), HomflyPoly::a(1), HomflyPoly::z(1));
        for pos in 0..w.len() {
            let g = w[pos].abs();
            let mut plus = w.clone();
            plus[pos] = g;
            let mut minus = w.clone();
            minus[pos] = -g;
            let mut zero = w.clone();
            zero.remove(pos);
            let lhs = &(&ainv * &hp(n, &plus)) - &(&a * &hp(n, &minus));
            prop_assert_eq!(lhs, &z * &hp(n, &zero));
        }
        let base = hp(n, &w);
        let mut up = w.clone();
        up.push(n as i64);
        prop_assert_eq!(hp(n + 1, &up), base.clone());
        let mut down = w.clone();
        down.push(-(n as i64));
        prop_assert_eq!(hp(n + 1, &down), base.clone());
        if !w.is_empty() {
            let mut rot = w.clone();
            rot.rotate_right(1);
            prop_assert_eq!(hp(n, &rot), base);
        }
    }
}
