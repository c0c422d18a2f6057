//! Library results against brute-force computations written from scratch here.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigUint;
use sgsmooth_core::arith::chevalley_steinberg_order;
use sgsmooth_core::rootsys::{build_root_system, DynkinType, RootSystem};

fn rs(s: &str) -> RootSystem {
    build_root_system(s.parse::<DynkinType>().unwrap()).unwrap()
}

fn det_mod(m: &[Vec<i64>], p: i64) -> i64 {
    // Cofactor expansion; sizes here are at most 4.
    let n = m.len();
    if n == 1 {
        return m[0][0].rem_euclid(p);
    }
    let mut total = 0;
    for c in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][c] * det_mod(&minor, p);
    }
    total.rem_euclid(p)
}

fn all_matrices(n: usize, p: i64) -> impl Iterator<Item = Vec<Vec<i64>>> {
    let total = (p as u64).pow((n * n) as u32);
    (0..total).map(move |mut idx| {
        let mut m = vec![vec![0; n]; n];
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x = (idx % p as u64) as i64;
                idx /= p as u64;
            }
        }
        m
    })
}

fn count_gl(n: usize, p: i64) -> u64 {
    all_matrices(n, p).filter(|m| det_mod(m, p) != 0).count() as u64
}

fn count_sl(n: usize, p: i64) -> u64 {
    all_matrices(n, p).filter(|m| det_mod(m, p) == 1).count() as u64
}

/// `gᵀ J g = J` for the standard alternating form on `F_p^4`.
fn count_sp4(p: i64) -> u64 {
    let j = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]];
    all_matrices(4, p)
        .filter(|g| {
            (0..4).all(|a| {
                (0..4).all(|b| {
                    let mut s = 0;
                    for k in 0..4 {
                        for l in 0..4 {
                            s += g[k][a] * j[k][l] * g[l][b];
                        }
                    }
                    (s - j[a][b]).rem_euclid(p) == 0
                })
            })
        })
        .count() as u64
}

#[test]
fn finite_group_orders_match_counts() {
    let cases = [
        ("GL2", count_gl(2, 5), 480u64),
        ("A1", count_sl(2, 3), 24),
        ("GL2", count_gl(2, 2), 6),
        ("GL2", count_gl(2, 3), 48),
    ];
    let qs = [5u64, 3, 2, 3];
    for ((group, counted, expected), q) in cases.into_iter().zip(qs) {
        assert_eq!(counted, expected);
        assert_eq!(chevalley_steinberg_order(&rs(group), q), BigUint::from(counted), "{group} q={q}");
    }
    assert_eq!(chevalley_steinberg_order(&rs("A2"), 2), BigUint::from(count_sl(3, 2)));
    assert_eq!(chevalley_steinberg_order(&rs("C2"), 2), BigUint::from(count_sp4(2)));
}

#[test]
fn sp6_and_so7_share_the_order_polynomial() {
    for q in [2u64, 3, 4, 5, 7] {
        let qb = BigUint::from(q);
        let one = BigUint::from(1u32);
        let expected = qb.pow(9) * (qb.pow(2) - &one) * (qb.pow(4) - &one) * (qb.pow(6) - &one);
        assert_eq!(chevalley_steinberg_order(&rs("C3"), q), expected);
        assert_eq!(chevalley_steinberg_order(&rs("B3"), q), expected);
    }
    assert_eq!(chevalley_steinberg_order(&rs("C3"), 3), BigUint::from(9_170_703_360u64));
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflect(v: &[i64], a: &[i64]) -> Vec<i64> {
    let k = 2 * dot(v, a) / dot(a, a);
    v.iter().zip(a).map(|(x, y)| x - k * y).collect()
}

/// Close the simple roots under their reflections.
fn closure(simple: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for a in simple {
            let w = reflect(&v, a);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen
}

const TYPES: [&str; 16] = [
    "A1", "A2", "A3", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2",
];

#[test]
fn root_sets_agree_with_reflection_closure() {
    for t in TYPES {
        let r = rs(t);
        let closed = closure(&r.simple_roots);
        let mut library: HashSet<Vec<i64>> = r.positive_roots.iter().cloned().collect();
        library.extend(r.positive_roots.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        assert_eq!(closed, library, "{t}");
        assert_eq!(r.num_roots(), closed.len());
    }
}

#[test]
fn classical_root_counts() {
    for n in 1..=7usize {
        assert_eq!(rs(&format!("A{n}")).num_roots(), n * (n + 1));
    }
    for n in 2..=7usize {
        assert_eq!(rs(&format!("B{n}")).num_roots(), 2 * n * n);
        assert_eq!(rs(&format!("C{n}")).num_roots(), 2 * n * n);
    }
    for n in 4..=7usize {
        assert_eq!(rs(&format!("D{n}")).num_roots(), 2 * n * (n - 1));
    }
}

/// `|W|` as the orbit size of a regular vector: `ρ`'s orbit is free.
fn weyl_orbit_size(simple: &[Vec<i64>]) -> u64 {
    // 2ρ is regular, so its stabilizer is trivial.
    let r = closure(simple);
    let dim = simple[0].len();
    // A generic linear functional splits the roots into positive and negative halves.
    let weights: Vec<i64> = (0..dim as u32).map(|i| 97i64.pow(dim as u32 - 1 - i) + i as i64).collect();
    let positive = |v: &Vec<i64>| dot(v, &weights) > 0;
    assert!(r.iter().all(|v| dot(v, &weights) != 0));
    let mut rho2 = vec![0i64; dim];
    for v in r.iter().filter(|v| positive(v)) {
        for (x, y) in rho2.iter_mut().zip(v) {
            *x += y;
        }
    }
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::from([rho2.clone()]);
    let mut queue = VecDeque::from([rho2]);
    while let Some(v) = queue.pop_front() {
        for a in simple {
            let w = reflect(&v, a);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen.len() as u64
}

#[test]
fn weyl_orders_match_degree_products() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "D5", "F4", "G2", "E6"] {
        let r = rs(t);
        let product: u64 = r.fundamental_degrees.iter().map(|&d| d as u64).product();
        let orbit = weyl_orbit_size(&r.simple_roots);
        assert_eq!(orbit, product, "{t}");
        assert_eq!(r.weyl_order, BigUint::from(orbit), "{t}");
        // Sum of (d_i - 1) counts positive roots.
        let exps: u64 = r.fundamental_degrees.iter().map(|&d| d as u64 - 1).sum();
        assert_eq!(exps as usize, r.num_positive_roots());
    }
}

#[test]
fn coxeter_number_from_root_count() {
    for t in TYPES {
        let r = rs(t);
        assert_eq!(r.coxeter_number as usize * r.rank(), r.num_roots(), "{t}");
    }
}
