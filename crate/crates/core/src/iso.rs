//! Rank-preserving bijections between small matroids.
//!
//! Two matroids are isomorphic when some bijection of ground sets preserves
//! the rank of every subset. The search below is a straightforward
//! backtracking over element assignments, driven by per-element invariants
//! (how many circuits and cocircuits of each size contain the element) and
//! pruned by rank comparisons on small subsets of the assigned prefix.
//! Pruning is allowed to be incomplete in either direction only one way:
//! it may admit false candidates, never reject true ones, because every
//! completed bijection is verified against the full rank tables of both
//! matroids before it is returned. Matroids are compared purely through
//! their rank functions, so representations over different fields compare
//! fine.
//!
//! The ground-set cap keeps the 2^n verification and the search tree at
//! desk scale; callers needing more should reach for canonical-form tools.

use crate::error::MatroidError;
use crate::matroid::LinearMatroid;

/// Largest ground set the search accepts.
pub const MAX_ISO_ELEMENTS: usize = 12;

/// Per-element invariant: counts of circuits and cocircuits of each size
/// through the element, plus the element's rank (0 for loops).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct ElementSignature {
    rank: u8,
    circuit_degrees: Vec<u32>,
    cocircuit_degrees: Vec<u32>,
}

fn signatures(m: &LinearMatroid) -> Vec<ElementSignature> {
    let n = m.n();
    let max_size = n + 1;
    let circuits = m.circuits();
    let cocircuits = m.cocircuits();
    let mut out = Vec::with_capacity(n);
    for e in 0..n {
        let mut cd = vec![0u32; max_size];
        for c in circuits.iter() {
            if c.contains(e) {
                cd[c.len()] += 1;
            }
        }
        let mut dd = vec![0u32; max_size];
        for c in cocircuits.iter() {
            if c.contains(e) {
                dd[c.len()] += 1;
            }
        }
        out.push(ElementSignature {
            rank: m.rank_bits(1 << e) as u8,
            circuit_degrees: cd,
            cocircuit_degrees: dd,
        });
    }
    out
}

/// Histogram of (subset size, rank) over the whole power set; a cheap
/// whole-matroid invariant that rules most pairs out before any search.
fn rank_spectrum(m: &LinearMatroid) -> Vec<u32> {
    let n = m.n();
    let r = m.full_rank() as usize;
    let mut counts = vec![0u32; (n + 1) * (r + 1)];
    for bits in 0u32..(1 << n) {
        let k = bits.count_ones() as usize;
        let rk = m.rank_bits(bits) as usize;
        counts[k * (r + 1) + rk] += 1;
    }
    counts
}

struct Search<'a> {
    a: &'a LinearMatroid,
    b: &'a LinearMatroid,
    n: usize,
    /// order in which a's elements get assigned
    order: Vec<usize>,
    /// candidate images in b for each a-element, by signature class
    candidates: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Extends the partial map `perm` (usize::MAX = unassigned) at `depth`.
    fn extend(&self, perm: &mut Vec<usize>, used: &mut Vec<bool>, depth: usize) -> bool {
        if depth == self.n {
            return self.verify(perm);
        }
        let x = self.order[depth];
        'cand: for &y in &self.candidates[x] {
            if used[y] {
                continue;
            }
            perm[x] = y;
            // prune: every subset of size <= 4 of the assigned prefix that
            // contains x must keep its rank under the partial map
            let assigned: Vec<usize> = self.order[..depth].to_vec();
            let mut amask = 1u32 << x;
            let mut bmask = 1u32 << y;
            for &e in &assigned {
                amask |= 1 << e;
                bmask |= 1 << perm[e];
            }
            if self.a.rank_bits(amask) != self.b.rank_bits(bmask) {
                perm[x] = usize::MAX;
                continue 'cand;
            }
            if !self.small_subsets_ok(&assigned, perm, x) {
                perm[x] = usize::MAX;
                continue 'cand;
            }
            used[y] = true;
            if self.extend(perm, used, depth + 1) {
                return true;
            }
            used[y] = false;
            perm[x] = usize::MAX;
        }
        false
    }

    fn small_subsets_ok(&self, assigned: &[usize], perm: &[usize], x: usize) -> bool {
        let t = assigned.len();
        let map = |s: &[usize]| -> (u32, u32) {
            let mut am = 1u32 << x;
            let mut bm = 1u32 << perm[x];
            for &e in s {
                am |= 1 << e;
                bm |= 1 << perm[e];
            }
            (am, bm)
        };
        for i in 0..t {
            let (am, bm) = map(&[assigned[i]]);
            if self.a.rank_bits(am) != self.b.rank_bits(bm) {
                return false;
            }
            for j in i + 1..t {
                let (am, bm) = map(&[assigned[i], assigned[j]]);
                if self.a.rank_bits(am) != self.b.rank_bits(bm) {
                    return false;
                }
                for k in j + 1..t {
                    let (am, bm) = map(&[assigned[i], assigned[j], assigned[k]]);
                    if self.a.rank_bits(am) != self.b.rank_bits(bm) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Full check of a completed bijection against both rank tables.
    fn verify(&self, perm: &[usize]) -> bool {
        for bits in 0u32..(1 << self.n) {
            let mut image = 0u32;
            for e in 0..self.n {
                if bits & (1 << e) != 0 {
                    image |= 1 << perm[e];
                }
            }
            if self.a.rank_bits(bits) != self.b.rank_bits(image) {
                return false;
            }
        }
        true
    }
}

/// A rank-preserving bijection from `a`'s elements onto `b`'s, with some
/// images fixed in advance, or `None` when no such bijection exists.
/// `forced` pairs are (element of a, element of b); use an empty slice for
/// a plain isomorphism test. Returned permutations are fully verified
/// against both rank tables.
pub fn isomorphism_forcing(
    a: &LinearMatroid,
    b: &LinearMatroid,
    forced: &[(usize, usize)],
) -> Result<Option<Vec<usize>>, MatroidError> {
    let n = a.n();
    if n > MAX_ISO_ELEMENTS || b.n() > MAX_ISO_ELEMENTS {
        return Err(MatroidError::IsomorphismTooLarge(n.max(b.n())));
    }
    if n != b.n() || a.full_rank() != b.full_rank() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if rank_spectrum(a) != rank_spectrum(b) {
        return Ok(None);
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for sa in &sig_a {
        let c: Vec<usize> = (0..n).filter(|&y| sig_b[y] == *sa).collect();
        if c.is_empty() {
            return Ok(None);
        }
        candidates.push(c);
    }
    for &(x, y) in forced {
        if x >= n {
            return Err(MatroidError::ElementOutOfRange(x, n));
        }
        if y >= n {
            return Err(MatroidError::ElementOutOfRange(y, n));
        }
        if !candidates[x].contains(&y) {
            return Ok(None);
        }
        candidates[x] = vec![y];
    }
    // assign the most constrained elements first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (candidates[x].len(), x));
    let search = Search {
        a,
        b,
        n,
        order,
        candidates,
    };
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search.extend(&mut perm, &mut used, 0) {
        debug_assert!(!perm.contains(&usize::MAX));
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}

/// A verified rank-preserving bijection, or `None`.
pub fn isomorphism(
    a: &LinearMatroid,
    b: &LinearMatroid,
) -> Result<Option<Vec<usize>>, MatroidError> {
    isomorphism_forcing(a, b, &[])
}

pub fn are_isomorphic(a: &LinearMatroid, b: &LinearMatroid) -> Result<bool, MatroidError> {
    Ok(isomorphism(a, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::FieldMatrix;
    use crate::mask::SubsetMask;

    #[test]
    fn identity_isomorphism() {
        let m = catalog::mk4();
        let perm = isomorphism(&m, &m).unwrap().unwrap();
        assert_eq!(perm.len(), 6);
        // any automorphism is fine, but there must be one
        let mut sorted = perm.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn column_permutation_is_isomorphic() {
        let m = catalog::whirl3();
        let perm_cols: Vec<usize> = vec![5, 3, 0, 1, 4, 2];
        let rows: Vec<Vec<i64>> = (0..m.matrix().rows())
            .map(|i| {
                perm_cols
                    .iter()
                    .map(|&j| i64::from(m.matrix().entry(i, j)))
                    .collect()
            })
            .collect();
        let shuffled = LinearMatroid::with_default_labels(
            "shuffled",
            FieldMatrix::from_rows(3, &rows).unwrap(),
        )
        .unwrap();
        assert!(are_isomorphic(&m, &shuffled).unwrap());
    }

    #[test]
    fn different_triangle_counts_are_not_isomorphic() {
        // same rank, size, and field; distinguished by circuit structure
        let mk4 = catalog::mk4();
        let w = catalog::whirl3();
        assert!(!are_isomorphic(&mk4, &w).unwrap());
    }

    #[test]
    fn cross_field_uniform_lines() {
        let a = catalog::uniform_over(2, 4, 5).unwrap();
        let b = catalog::uniform_over(2, 4, 7).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn size_and_rank_mismatches_are_none_not_errors() {
        let a = catalog::uniform(2, 4).unwrap();
        let b = catalog::uniform(2, 5).unwrap();
        assert!(isomorphism(&a, &b).unwrap().is_none());
        let c = catalog::uniform(3, 4).unwrap();
        assert!(isomorphism(&a, &c).unwrap().is_none());
    }

    #[test]
    fn too_many_elements_is_an_error() {
        let a = catalog::uniform(2, 13).unwrap();
        assert!(matches!(
            isomorphism(&a, &a),
            Err(MatroidError::IsomorphismTooLarge(13))
        ));
    }

    #[test]
    fn forced_pairs_respect_automorphisms() {
        // M(K4) is edge-transitive, so element 0 can map anywhere
        let m = catalog::mk4();
        for target in 0..6 {
            let perm = isomorphism_forcing(&m, &m, &[(0, target)])
                .unwrap()
                .expect("edge-transitive");
            assert_eq!(perm[0], target);
        }
    }

    #[test]
    fn forced_pair_can_be_impossible() {
        // P6 has exactly one triangle; a triangle element cannot map to a
        // non-triangle element under any automorphism
        let m = catalog::p6();
        let tri = m.triangles();
        assert_eq!(tri.len(), 1);
        let inside = tri[0].min_element().unwrap();
        let outside = tri[0].complement().min_element().unwrap();
        assert!(isomorphism_forcing(&m, &m, &[(inside, outside)])
            .unwrap()
            .is_none());
    }

    #[test]
    fn permutation_really_preserves_ranks() {
        let a = catalog::q6();
        let b = catalog::q6();
        let perm = isomorphism(&a, &b).unwrap().unwrap();
        for bits in 0..(1u32 << 6) {
            let x = SubsetMask::from_bits(bits, 6);
            let mut img = 0u32;
            for e in x.elements() {
                img |= 1 << perm[e];
            }
            assert_eq!(a.rank(x), b.rank_bits(img));
        }
    }

    #[test]
    fn dual_pair_detection() {
        // U_{2,5} and U_{3,5} are dual, not isomorphic
        let a = catalog::uniform(2, 5).unwrap();
        let b = catalog::uniform(3, 5).unwrap();
        assert!(!are_isomorphic(&a, &b).unwrap());
        assert!(are_isomorphic(&a.dual(), &b).unwrap());
    }
}
