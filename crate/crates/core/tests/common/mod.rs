//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use krtl::braid::{ColoredBraid, Level};
use krtl::poly::LaurentPoly;
use rand::Rng;

/// Unnormalized Kauffman bracket of a braid closure: sum over smoothings
/// of `(-q)^r (q + q^-1)^loops`, `r` counting non-oriented smoothings of
/// positive crossings and oriented ones of negative crossings.
pub fn kauffman_bracket(n: usize, word: &[i64]) -> LaurentPoly {
    let len = word.len();
    let node = |level: usize, strand: usize| (level % (len + 1).max(1)) * n + strand;
    let total_nodes = (len + 1) * n;
    let loop_poly: LaurentPoly = "q^-1 + q".parse().unwrap();
    let minus_q: LaurentPoly = "-q".parse().unwrap();
    let mut sum = LaurentPoly::zero();
    for state in 0u64..1 << len {
        let mut parent: Vec<usize> = (0..total_nodes).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let join = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            p[ra] = rb;
        };
        let mut r = 0;
        for (h, &x) in word.iter().enumerate() {
            let g = x.unsigned_abs() as usize;
            let one = state >> h & 1 == 1;
            if one {
                r += 1;
            }
            // positive crossings smooth vertically in state 0
            let vertical = (x > 0) != one;
            for s in 0..n {
                if s + 1 == g || s == g {
                    continue;
                }
                join(&mut parent, node(h, s), node(h + 1, s));
            }
            if vertical {
                join(&mut parent, node(h, g - 1), node(h + 1, g - 1));
                join(&mut parent, node(h, g), node(h + 1, g));
            } else {
                join(&mut parent, node(h, g - 1), node(h, g));
                join(&mut parent, node(h + 1, g - 1), node(h + 1, g));
            }
        }
        // close up: top level is the bottom level
        for s in 0..n {
            join(&mut parent, node(len, s), s);
        }
        let mut roots: Vec<usize> = (0..total_nodes).map(|x| find(&mut parent, x)).collect();
        roots.sort_unstable();
        roots.dedup();
        sum += &(&minus_q.pow(r) * &loop_poly.pow(roots.len() as u32));
    }
    sum
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize, positive: bool) -> Vec<i64> {
    if n < 2 {
        return Vec::new();
    }
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n) as i64;
            if positive || rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect()
}

pub fn braid(n: usize, word: &[i64], m: u32, level: Level) -> ColoredBraid {
    ColoredBraid::from_signed(n, word, m, level).unwrap()
}

/// Truncated stable algebra by exhaustive search over an exponent box.
pub fn brute_force_an(n: u32, y: i32, q_min: i32) -> BTreeMap<(i32, i32, i32), u64> {
    let mut out = BTreeMap::new();
    // u_1 alone lowers q by 2 per power; ξ's raise q by at most 2
    let cap1 = ((2 - q_min) / 2).max(0) as u32 + 1;
    let caps: Vec<u32> = (1..=n)
        .map(|k| if k == 1 { cap1 } else { (y.max(0) as u32) / (2 * k - 2) + 1 })
        .collect();
    let mut exps = vec![0u32; n as usize];
    loop {
        for odd in 0u32..1 << n {
            let (mut t, mut q, mut a) = (0i32, 0i32, 0i32);
            for k in 1..=n as i32 {
                let e = exps[(k - 1) as usize] as i32;
                let b = (odd >> (k - 1) & 1) as i32;
                t += (2 * k - 2) * (e + b);
                q += -2 * k * e + (4 - 2 * k) * b;
                a += b;
            }
            if t < y && q >= q_min {
                *out.entry((t, q, a)).or_insert(0) += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == exps.len() {
                return out;
            }
            exps[i] += 1;
            if exps[i] <= caps[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}
