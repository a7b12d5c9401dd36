//! Oracles for the integration suite, written against the raw matrix and
//! the defining graphs rather than the crate's rank machinery, so the two
//! routes to each answer stay independent.

// each integration test binary compiles this module separately and uses
// a different slice of it
#![allow(dead_code)]

use matroid_core::LinearMatroid;

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Rank of the selected columns by plain Gaussian elimination with
/// Fermat inverses, no memoization, no reuse of the crate's tables.
fn rank_of_columns(p: u64, columns: &[Vec<u64>], mask: u32) -> usize {
    let cols: Vec<&Vec<u64>> = (0..columns.len())
        .filter(|&j| mask & (1 << j) != 0)
        .map(|j| &columns[j])
        .collect();
    if cols.is_empty() {
        return 0;
    }
    let dim = cols[0].len();
    let mut work: Vec<Vec<u64>> = cols.iter().map(|c| (*c).clone()).collect();
    let mut rank = 0;
    for row in 0..dim {
        let Some(pivot) = (rank..work.len()).find(|&j| work[j][row] % p != 0) else {
            continue;
        };
        work.swap(rank, pivot);
        let inv = inv_mod(work[rank][row] % p, p);
        for r in 0..dim {
            work[rank][r] = work[rank][r] % p * inv % p;
        }
        for j in 0..work.len() {
            if j != rank && work[j][row] % p != 0 {
                let factor = work[j][row] % p;
                for r in 0..dim {
                    work[j][r] = (work[j][r] + (p - factor) * work[rank][r]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn raw_columns(m: &LinearMatroid) -> (u64, Vec<Vec<u64>>) {
    let mx = m.matrix();
    let p = u64::from(mx.p());
    let columns = (0..mx.cols())
        .map(|j| (0..mx.rows()).map(|i| u64::from(mx.entry(i, j))).collect())
        .collect();
    (p, columns)
}

/// Cocircuits by the dual route: the minimal sets that intersect every
/// basis, with bases found by brute-force column rank. Only sensible for
/// small ground sets.
pub fn oracle_cocircuits(m: &LinearMatroid) -> Vec<u32> {
    let n = m.n();
    assert!(n <= 16, "oracle is exponential in the ground set");
    let (p, columns) = raw_columns(m);
    let full_rank = rank_of_columns(p, &columns, (1u32 << n) - 1);
    let bases: Vec<u32> = (0u32..1 << n)
        .filter(|&b| b.count_ones() as usize == full_rank)
        .filter(|&b| rank_of_columns(p, &columns, b) == full_rank)
        .collect();
    let mut transversals: Vec<u32> = (1u32..1 << n)
        .filter(|&s| bases.iter().all(|&b| b & s != 0))
        .collect();
    transversals.sort_by_key(|s| (s.count_ones(), *s));
    let mut minimal: Vec<u32> = Vec::new();
    for &s in &transversals {
        if !minimal.iter().any(|&t| t & s == t) {
            minimal.push(s);
        }
    }
    minimal.sort_unstable();
    minimal
}

/// Edge subsets of a graph that form a single cycle: every touched vertex
/// has degree two and the touched subgraph is connected.
pub fn graph_cycles(edges: &[(usize, usize)]) -> Vec<u32> {
    let n = edges.len();
    assert!(n <= 16);
    let vertices = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let mut cycles = Vec::new();
    'subset: for mask in 1u32..1 << n {
        let mut degree = vec![0usize; vertices];
        for (j, &(u, v)) in edges.iter().enumerate() {
            if mask & (1 << j) != 0 {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
        let touched: Vec<usize> = (0..vertices).filter(|&v| degree[v] > 0).collect();
        for &v in &touched {
            if degree[v] != 2 {
                continue 'subset;
            }
        }
        // walk out from one touched vertex over the chosen edges
        let mut seen = vec![false; vertices];
        let mut stack = vec![touched[0]];
        seen[touched[0]] = true;
        while let Some(v) = stack.pop() {
            for (j, &(a, b)) in edges.iter().enumerate() {
                if mask & (1 << j) == 0 {
                    continue;
                }
                for w in [a, b] {
                    if (a == v || b == v) && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        if touched.iter().all(|&v| seen[v]) {
            cycles.push(mask);
        }
    }
    cycles.sort_unstable();
    cycles
}

/// Cut-set vertex connectivity: the graph stays connected after deleting
/// any vertex set smaller than k. Complete graphs pass for every k, which
/// matches infinite vertical connectivity of their cycle matroids.
pub fn graph_k_connected_cut_only(edges: &[(usize, usize)], k: usize) -> bool {
    let vertices = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    assert!(vertices <= 16);
    for cut in 0u32..1 << vertices {
        if cut.count_ones() as usize >= k {
            continue;
        }
        let alive: Vec<usize> = (0..vertices).filter(|&v| cut & (1 << v) == 0).collect();
        if alive.len() <= 1 {
            continue;
        }
        let mut seen = vec![false; vertices];
        let mut stack = vec![alive[0]];
        seen[alive[0]] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in edges {
                if cut & (1 << a) != 0 || cut & (1 << b) != 0 {
                    continue;
                }
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if !alive.iter().all(|&v| seen[v]) {
            return false;
        }
    }
    true
}

pub const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub const K5_EDGES: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

pub const K33_EDGES: [(usize, usize); 9] = [
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
];

pub const PRISM_EDGES: [(usize, usize); 9] = [
    (0, 1),
    (0, 2),
    (1, 2),
    (3, 4),
    (3, 5),
    (4, 5),
    (0, 3),
    (1, 4),
    (2, 5),
];

pub const WHEEL4_EDGES: [(usize, usize); 8] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 1),
];
