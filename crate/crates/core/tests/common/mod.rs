//! Brute-force reference implementations. Everything here works on raw
//! exponent vectors and never calls the library's ideal algorithms, so the
//! tests compare two independent computations.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Exps = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Membership of `f` in the ideal generated by `gens` (any generating set).
pub fn member(gens: &[Exps], f: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, f))
}

/// Minimal elements under divisibility, as a set.
pub fn minimal(gens: &[Exps]) -> BTreeSet<Exps> {
    gens.iter()
        .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
        .cloned()
        .collect()
}

/// Every exponent vector with entries in `0..=bound[i]`.
pub fn box_points(bound: &[u32]) -> Vec<Exps> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// Every exponent vector of total degree at most `d` in `n` variables.
pub fn up_to_degree(n: usize, d: u32) -> Vec<Exps> {
    box_points(&vec![d; n])
        .into_iter()
        .filter(|p| p.iter().sum::<u32>() <= d)
        .collect()
}

pub fn product_gens(a: &[Exps], b: &[Exps]) -> Vec<Exps> {
    a.iter()
        .flat_map(|x| {
            b.iter()
                .map(move |y| x.iter().zip(y).map(|(p, q)| p + q).collect())
        })
        .collect()
}

pub fn power_gens(gens: &[Exps], s: u32) -> Vec<Exps> {
    let mut acc = gens.to_vec();
    for _ in 1..s {
        acc = minimal(&product_gens(&acc, gens)).into_iter().collect();
    }
    acc
}

/// Generators of `(I : f)` before minimalization: `g / gcd(g, f)`.
pub fn colon_gens(gens: &[Exps], f: &[u32]) -> Vec<Exps> {
    gens.iter()
        .map(|g| g.iter().zip(f).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect()
}

/// Associated primes by definition: variable sets `p` with `(I : f) = p` for
/// some monomial `f`. Colons stabilise once every exponent of `f` reaches
/// the lcm of the generators, so scanning that box finds every prime.
pub fn ass_by_definition(gens: &[Exps]) -> BTreeSet<Vec<usize>> {
    let n = gens[0].len();
    let bound: Exps = (0..n)
        .map(|i| gens.iter().map(|g| g[i]).max().unwrap())
        .collect();
    let mut out = BTreeSet::new();
    for f in box_points(&bound) {
        if member(gens, &f) {
            continue;
        }
        let colon = minimal(&colon_gens(gens, &f));
        if colon.iter().all(|g| g.iter().sum::<u32>() == 1) {
            let vars: Vec<usize> = colon
                .iter()
                .map(|g| g.iter().position(|&e| e == 1).unwrap())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            out.insert(vars);
        }
    }
    out
}

/// Corner elements by definition: `f ∉ I`, `x_i f ∈ I` for all `i`.
pub fn corners_by_definition(gens: &[Exps]) -> BTreeSet<Exps> {
    let n = gens[0].len();
    let bound: Exps = (0..n)
        .map(|i| gens.iter().map(|g| g[i]).max().unwrap())
        .collect();
    box_points(&bound)
        .into_iter()
        .filter(|f| {
            !member(gens, f)
                && (0..n).all(|i| {
                    let mut g = f.clone();
                    g[i] += 1;
                    member(gens, &g)
                })
        })
        .collect()
}

/// Minimal vertex covers of a graph on `1..=n`, as 0-based index sets.
pub fn minimal_vertex_covers(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let covers: Vec<BTreeSet<usize>> = (0u32..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|v| mask >> v & 1 == 1)
                .collect::<BTreeSet<_>>()
        })
        .filter(|c| {
            edges
                .iter()
                .all(|&(u, v)| c.contains(&(u - 1)) || c.contains(&(v - 1)))
        })
        .collect();
    covers
        .iter()
        .filter(|c| !covers.iter().any(|d| d != *c && d.is_subset(c)))
        .cloned()
        .collect()
}

pub fn indicator(n: usize, set: &BTreeSet<usize>) -> Exps {
    (0..n).map(|i| u32::from(set.contains(&i))).collect()
}
