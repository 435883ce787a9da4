//! Brute-force enumeration of the combinatorial objects behind the 1-point
//! invariants, for small sizes. Genus always comes from an Euler
//! characteristic, never from the symmetric-function side.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::rational::{factorial, Rational};
use crate::error::OracleError;

/// `g ↦ n_g(d)` for one `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingCount {
    pub d: i64,
    pub genus_histogram: BTreeMap<i64, Rational>,
}

impl GluingCount {
    fn from_counts(d: i64, counts: BTreeMap<i64, BigInt>) -> Self {
        GluingCount {
            d,
            genus_histogram: counts
                .into_iter()
                .map(|(g, c)| (g, Rational::from_integer(c)))
                .collect(),
        }
    }

    pub fn get(&self, g: i64) -> Rational {
        self.genus_histogram.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total(&self) -> Rational {
        self.genus_histogram.values().fold(Rational::zero(), |a, b| a + b)
    }
}

fn out_of_range(kind: &'static str, range: &'static str, got: String) -> OracleError {
    OracleError::OutOfRange { kind, range, got }
}

type Perm = Vec<usize>;

fn compose(a: &[usize], b: &[usize]) -> Perm {
    // (a ∘ b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn inverse(a: &[usize]) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

fn cycle_count(a: &[usize]) -> usize {
    let mut seen = vec![false; a.len()];
    let mut k = 0;
    for s in 0..a.len() {
        if seen[s] {
            continue;
        }
        k += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = a[x];
        }
    }
    k
}

fn long_cycle(d: usize) -> Perm {
    (0..d).map(|i| (i + 1) % d).collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

fn matchings(free: &[usize], pairs: &mut Vec<(usize, usize)>, visit: &mut impl FnMut(&[(usize, usize)])) {
    let Some(&first) = free.first() else {
        visit(pairs);
        return;
    };
    for k in 1..free.len() {
        let other = free[k];
        let rest: Vec<usize> = free.iter().copied().filter(|&x| x != first && x != other).collect();
        pairs.push((first, other));
        matchings(&rest, pairs, visit);
        pairs.pop();
    }
}

/// Orientable gluings of the sides of a `2d`-gon, by genus.
pub fn ribbon_gluings(d: i64) -> Result<GluingCount, OracleError> {
    if !(1..=6).contains(&d) {
        return Err(out_of_range("ribbon", "1 <= d <= 6", d.to_string()));
    }
    let n = 2 * d as usize;
    let mut counts: BTreeMap<i64, BigInt> = BTreeMap::new();
    let free: Vec<usize> = (0..n).collect();
    matchings(&free, &mut Vec::new(), &mut |pairs| {
        // side i runs from corner i to corner i+1
        let mut uf = UnionFind((0..n).collect());
        for &(i, j) in pairs {
            uf.union(i, (j + 1) % n);
            uf.union((i + 1) % n, j);
        }
        let v = (0..n).filter(|&x| uf.find(x) == x).count() as i64;
        // V - d + 1 = 2 - 2g
        let g = (d + 1 - v) / 2;
        *counts.entry(g).or_default() += 1;
    });
    Ok(GluingCount::from_counts(d, counts))
}

/// Tuples `(σ_1, …, σ_m)` with `σ_1 ∘ ⋯ ∘ σ_m` equal to a fixed `d`-cycle,
/// by genus; this count is the 1-point invariant `d·B_{g,1}(d)`.
fn product_tuples(m: usize, d: usize) -> BTreeMap<i64, BigInt> {
    let c0 = long_cycle(d);
    let perms: Vec<Perm> = (0..d).permutations(d).collect();
    let mut counts: BTreeMap<i64, BigInt> = BTreeMap::new();
    let free = m - 1;
    let mut record = |defect: usize| {
        // Σ (d - k(σ_i)) = 2g - 1 + d
        let two_g = defect as i64 + 1 - d as i64;
        if two_g >= 0 && two_g % 2 == 0 {
            *counts.entry(two_g / 2).or_default() += 1;
        }
    };
    let mut stack: Vec<(Perm, usize, usize)> = vec![((0..d).collect(), 0, 0)];
    while let Some((prefix, depth, defect)) = stack.pop() {
        if depth == free {
            let last = compose(&inverse(&prefix), &c0);
            record(defect + d - cycle_count(&last));
            continue;
        }
        for p in &perms {
            stack.push((compose(&prefix, p), depth + 1, defect + d - cycle_count(p)));
        }
    }
    counts
}

/// Dessins d'enfant with one face of degree `d`, by genus.
pub fn dessin_counts(d: i64) -> Result<GluingCount, OracleError> {
    if !(1..=5).contains(&d) {
        return Err(out_of_range("dessin", "1 <= d <= 5", d.to_string()));
    }
    Ok(GluingCount::from_counts(d, product_tuples(2, d as usize)))
}

/// `m`-BMS numbers `b^m_g(d)`, by genus.
pub fn bms_counts(m: i64, d: i64) -> Result<GluingCount, OracleError> {
    if !(1..=3).contains(&m) || !(1..=4).contains(&d) {
        return Err(out_of_range("bms", "1 <= m <= 3, 1 <= d <= 4", format!("m={m}, d={d}")));
    }
    Ok(GluingCount::from_counts(d, product_tuples(m as usize, d as usize)))
}

fn transposition(a: usize, b: usize, d: usize) -> Perm {
    let mut p: Perm = (0..d).collect();
    p.swap(a, b);
    p
}

fn is_long_cycle(p: &[usize]) -> bool {
    cycle_count(p) == 1
}

/// Monotone Hurwitz number `m_g(d)`.
pub fn monotone_factorizations(d: i64, g: i64) -> Result<Rational, OracleError> {
    if !(1..=5).contains(&d) || !(0..=2).contains(&g) {
        return Err(out_of_range(
            "monotone",
            "1 <= d <= 5, 0 <= g <= 2",
            format!("d={d}, g={g}"),
        ));
    }
    let (du, m) = (d as usize, 2 * g + d - 1);
    let ts: Vec<(usize, Perm)> = (1..du)
        .flat_map(|b| (0..b).map(move |a| (b, a)))
        .map(|(b, a)| (b, transposition(a, b, du)))
        .collect();
    fn go(ts: &[(usize, Perm)], min_b: usize, left: i64, acc: &Perm, count: &mut u64) {
        if left == 0 {
            if is_long_cycle(acc) {
                *count += 1;
            }
            return;
        }
        for (b, t) in ts.iter().filter(|(b, _)| *b >= min_b) {
            go(ts, *b, left - 1, &compose(acc, t), count);
        }
    }
    let mut count = 0u64;
    go(&ts, 1, m, &(0..du).collect(), &mut count);
    Ok(Rational::new(BigInt::from(d) * count, factorial(d as u64)))
}

/// Simple Hurwitz number `h_g(d)`: ordered tuples of `2g-1+d`
/// transpositions with product a `d`-cycle, weighted by `d / (d! m!)`.
pub fn hurwitz_factorizations(d: i64, g: i64) -> Result<Rational, OracleError> {
    if !(1..=4).contains(&d) || !(0..=2).contains(&g) {
        return Err(out_of_range(
            "hurwitz",
            "1 <= d <= 4, 0 <= g <= 2",
            format!("d={d}, g={g}"),
        ));
    }
    let (du, m) = (d as usize, (2 * g + d - 1) as usize);
    let ts: Vec<Perm> = (0..du)
        .tuple_combinations()
        .map(|(a, b)| transposition(a, b, du))
        .collect();
    let mut layer: BTreeMap<Perm, u64> = BTreeMap::from([((0..du).collect(), 1)]);
    for _ in 0..m {
        let mut next: BTreeMap<Perm, u64> = BTreeMap::new();
        for (p, c) in &layer {
            for t in &ts {
                *next.entry(compose(p, t)).or_default() += c;
            }
        }
        layer = next;
    }
    let count: u64 = layer.iter().filter(|(p, _)| is_long_cycle(p)).map(|(_, c)| c).sum();
    Ok(Rational::new(
        BigInt::from(d) * count,
        factorial(d as u64) * factorial(m as u64),
    ))
}
