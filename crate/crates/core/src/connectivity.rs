//! The connectivity function and the two separation notions built on it.
//!
//! For a subset X of the ground set, lambda(X) = r(X) + r(E-X) - r(M).
//! A partition (X, Y) is a vertical j-separation when lambda(X) < j and
//! both sides have rank at least j; it is a Tutte j-separation when
//! lambda(X) < j and both sides have at least j elements. A separation is
//! exact when lambda(X) = j - 1.
//!
//! The connectivity values are the least j for which a j-separation of the
//! respective kind exists, or infinite when none does (small uniform
//! matroids really have none, so the infinite case is ordinary, not an
//! error). "Vertically k-connected" and "k-connected" mean no j-separation
//! of the respective kind exists for any j < k; for k <= 1 both hold
//! trivially.
//!
//! Everything here takes the ground set as a bitmask universe, so deletions
//! of a parent matroid can be analyzed against the parent's memoized rank
//! table without building minors. Partitions are scanned with X the side
//! containing the lowest element of the universe, ordered by size and then
//! by numeric mask, which fixes the witness every search returns.

use crate::mask::{k_subsets_of, SubsetMask};
use crate::matroid::LinearMatroid;

/// A connectivity value: least order of a separation, or none at all.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Conn {
    Finite(u32),
    Infinite,
}

impl Conn {
    pub fn at_least(self, k: u32) -> bool {
        match self {
            Conn::Finite(v) => v >= k,
            Conn::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Conn::Finite(v) => Some(v),
            Conn::Infinite => None,
        }
    }
}

impl std::fmt::Display for Conn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Conn::Finite(v) => write!(f, "{v}"),
            Conn::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SepKind {
    Vertical,
    Tutte,
}

/// A certified j-separation. `x` is the scanned side (contains the lowest
/// universe element); `y` is its complement within the universe.
#[derive(Clone, Debug)]
pub struct Separation {
    pub x: SubsetMask,
    pub y: SubsetMask,
    pub order: u32,
    pub lambda: u32,
    pub kind: SepKind,
}

impl Separation {
    pub fn is_exact(&self) -> bool {
        self.lambda + 1 == self.order
    }
}

/// lambda within the full ground set.
pub fn lambda(m: &LinearMatroid, x: SubsetMask) -> u32 {
    lambda_in(m, m.full_mask().bits(), x.bits())
}

/// lambda within a sub-universe (a deletion of the parent matroid).
pub fn lambda_in(m: &LinearMatroid, universe: u32, x: u32) -> u32 {
    debug_assert_eq!(x & !universe, 0, "x must lie inside the universe");
    m.rank_bits(x) + m.rank_bits(universe & !x) - m.rank_bits(universe)
}

/// Proper partitions of `universe`, presented as the side containing its
/// lowest element, by (size, numeric mask).
fn anchored_sides(universe: u32) -> impl Iterator<Item = u32> {
    let anchor = universe & universe.wrapping_neg();
    let rest = universe & !anchor;
    let total = universe.count_ones() as usize;
    (1..total).flat_map(move |size| k_subsets_of(rest, size - 1).map(move |s| s | anchor))
}

fn sweep(m: &LinearMatroid, universe: u32) -> (Option<u32>, Option<u32>) {
    let ru = m.rank_bits(universe);
    let mut vertical: Option<u32> = None;
    let mut tutte: Option<u32> = None;
    for x in anchored_sides(universe) {
        let y = universe & !x;
        let rx = m.rank_bits(x);
        let ry = m.rank_bits(y);
        let lam = rx + ry - ru;
        if rx > lam && ry > lam {
            vertical = Some(vertical.map_or(lam + 1, |v| v.min(lam + 1)));
        }
        if x.count_ones() > lam && y.count_ones() > lam {
            tutte = Some(tutte.map_or(lam + 1, |t| t.min(lam + 1)));
        }
        if vertical == Some(1) && tutte == Some(1) {
            break;
        }
    }
    (vertical, tutte)
}

/// Vertical and Tutte connectivity of the restriction to `universe`,
/// computed in one pass.
pub fn connectivities_in(m: &LinearMatroid, universe: u32) -> (Conn, Conn) {
    let (v, t) = sweep(m, universe);
    (
        v.map_or(Conn::Infinite, Conn::Finite),
        t.map_or(Conn::Infinite, Conn::Finite),
    )
}

pub fn vertical_connectivity(m: &LinearMatroid) -> Conn {
    connectivities_in(m, m.full_mask().bits()).0
}

pub fn tutte_connectivity(m: &LinearMatroid) -> Conn {
    connectivities_in(m, m.full_mask().bits()).1
}

/// No vertical j-separation for any j < k. A j-separation with j < k exists
/// exactly when some partition has lambda <= k - 2 with both ranks above
/// lambda, which is what the scan tests.
pub fn is_vertically_k_connected_in(m: &LinearMatroid, universe: u32, k: u32) -> bool {
    if k <= 1 {
        return true;
    }
    let ru = m.rank_bits(universe);
    for x in anchored_sides(universe) {
        let y = universe & !x;
        let rx = m.rank_bits(x);
        let ry = m.rank_bits(y);
        let lam = rx + ry - ru;
        if lam + 1 < k && rx > lam && ry > lam {
            return false;
        }
    }
    true
}

pub fn is_vertically_k_connected(m: &LinearMatroid, k: u32) -> bool {
    is_vertically_k_connected_in(m, m.full_mask().bits(), k)
}

/// No Tutte j-separation for any j < k.
pub fn is_k_connected_in(m: &LinearMatroid, universe: u32, k: u32) -> bool {
    if k <= 1 {
        return true;
    }
    let ru = m.rank_bits(universe);
    for x in anchored_sides(universe) {
        let y = universe & !x;
        let lam = m.rank_bits(x) + m.rank_bits(y) - ru;
        if lam + 1 < k && x.count_ones() > lam && y.count_ones() > lam {
            return false;
        }
    }
    true
}

pub fn is_k_connected(m: &LinearMatroid, k: u32) -> bool {
    is_k_connected_in(m, m.full_mask().bits(), k)
}

/// Up to `limit` vertical j-separations of the restriction to `universe`,
/// in scan order. `exact_only` keeps only those with lambda = j - 1.
pub fn vertical_separations_in(
    m: &LinearMatroid,
    universe: u32,
    j: u32,
    exact_only: bool,
    limit: usize,
) -> Vec<Separation> {
    let n = m.n();
    let ru = m.rank_bits(universe);
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    for x in anchored_sides(universe) {
        let y = universe & !x;
        let rx = m.rank_bits(x);
        let ry = m.rank_bits(y);
        let lam = rx + ry - ru;
        if lam >= j || rx < j || ry < j {
            continue;
        }
        if exact_only && lam != j - 1 {
            continue;
        }
        out.push(Separation {
            x: SubsetMask::from_bits(x, n),
            y: SubsetMask::from_bits(y, n),
            order: j,
            lambda: lam,
            kind: SepKind::Vertical,
        });
        if out.len() == limit {
            break;
        }
    }
    out
}

/// First vertical j-separation in scan order, if any.
pub fn find_vertical_separation_in(m: &LinearMatroid, universe: u32, j: u32) -> Option<Separation> {
    vertical_separations_in(m, universe, j, false, 1).into_iter().next()
}

pub fn find_vertical_separation(m: &LinearMatroid, j: u32) -> Option<Separation> {
    find_vertical_separation_in(m, m.full_mask().bits(), j)
}

/// First Tutte j-separation in scan order, if any.
pub fn find_tutte_separation_in(m: &LinearMatroid, universe: u32, j: u32) -> Option<Separation> {
    let n = m.n();
    let ru = m.rank_bits(universe);
    for x in anchored_sides(universe) {
        let y = universe & !x;
        if x.count_ones() < j || y.count_ones() < j {
            continue;
        }
        let lam = m.rank_bits(x) + m.rank_bits(y) - ru;
        if lam < j {
            return Some(Separation {
                x: SubsetMask::from_bits(x, n),
                y: SubsetMask::from_bits(y, n),
                order: j,
                lambda: lam,
                kind: SepKind::Tutte,
            });
        }
    }
    None
}

pub fn find_tutte_separation(m: &LinearMatroid, j: u32) -> Option<Separation> {
    find_tutte_separation_in(m, m.full_mask().bits(), j)
}

/// Vertical and Tutte connectivity plus the vertical connectivity of every
/// single-element deletion, all against the parent's rank table.
#[derive(Clone, Debug)]
pub struct ConnectivityProfile {
    pub vertical: Conn,
    pub tutte: Conn,
    pub deletion_vertical: Vec<Conn>,
}

impl ConnectivityProfile {
    /// Vertically k-connected, and every single-element deletion is not.
    pub fn minimally_vertical(&self, k: u32) -> bool {
        self.vertical.at_least(k) && self.deletion_vertical.iter().all(|c| !c.at_least(k))
    }
}

pub fn profile(m: &LinearMatroid) -> ConnectivityProfile {
    let full = m.full_mask().bits();
    let (vertical, tutte) = connectivities_in(m, full);
    let deletion_vertical = (0..m.n())
        .map(|e| connectivities_in(m, full & !(1 << e)).0)
        .collect();
    ConnectivityProfile {
        vertical,
        tutte,
        deletion_vertical,
    }
}

/// Per-element record of what a deletion does to vertical k-connectivity.
#[derive(Clone, Debug)]
pub struct MinimalityReport {
    pub k: u32,
    /// the matroid itself is vertically k-connected
    pub connected: bool,
    /// vertical connectivity of each single-element deletion
    pub deletions: Vec<(usize, Conn)>,
    /// elements whose deletion is still vertically k-connected
    pub keepers: Vec<usize>,
    pub minimal: bool,
}

/// Minimally vertically k-connected means vertically k-connected while no
/// single-element deletion is.
pub fn minimality_report(m: &LinearMatroid, k: u32) -> MinimalityReport {
    let full = m.full_mask().bits();
    let connected = is_vertically_k_connected_in(m, full, k);
    let mut deletions = Vec::with_capacity(m.n());
    let mut keepers = Vec::new();
    for e in 0..m.n() {
        let (v, _) = connectivities_in(m, full & !(1 << e));
        if v.at_least(k) {
            keepers.push(e);
        }
        deletions.push((e, v));
    }
    let minimal = connected && keepers.is_empty();
    MinimalityReport {
        k,
        connected,
        deletions,
        keepers,
        minimal,
    }
}

pub fn is_minimally_vertically_k_connected(m: &LinearMatroid, k: u32) -> bool {
    minimality_report(m, k).minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn conn_ordering_and_display() {
        assert!(Conn::Finite(3) < Conn::Finite(4));
        assert!(Conn::Finite(100) < Conn::Infinite);
        assert!(Conn::Infinite.at_least(999));
        assert!(Conn::Finite(3).at_least(3));
        assert!(!Conn::Finite(3).at_least(4));
        assert_eq!(Conn::Finite(3).to_string(), "3");
        assert_eq!(Conn::Infinite.to_string(), "inf");
    }

    #[test]
    fn lambda_is_symmetric() {
        let m = catalog::mk4();
        for bits in 0..(1u32 << m.n()) {
            let x = SubsetMask::from_bits(bits, m.n());
            assert_eq!(lambda(&m, x), lambda(&m, x.complement()));
        }
    }

    #[test]
    fn small_uniform_matroids_have_no_separations() {
        for m in [
            catalog::uniform(2, 4).unwrap(),
            catalog::uniform(2, 5).unwrap(),
        ] {
            assert_eq!(vertical_connectivity(&m), Conn::Infinite);
            assert_eq!(tutte_connectivity(&m), Conn::Infinite);
            for j in 1..=4 {
                assert!(find_vertical_separation(&m, j).is_none());
                assert!(find_tutte_separation(&m, j).is_none());
            }
        }
    }

    #[test]
    fn mk4_connectivities() {
        let m = catalog::mk4();
        // a triangle against its complementary vertex star is the least
        // Tutte separation; no partition gets lambda below both side ranks
        assert_eq!(tutte_connectivity(&m), Conn::Finite(3));
        assert_eq!(vertical_connectivity(&m), Conn::Infinite);
        let sep = find_tutte_separation(&m, 3).unwrap();
        assert_eq!(sep.order, 3);
        assert_eq!(sep.lambda, 2);
        assert!(sep.is_exact());
        assert!(sep.x.contains(0));
        assert_eq!(sep.x.union(sep.y), m.full_mask());
        assert!(sep.x.intersect(sep.y).is_empty());
    }

    #[test]
    fn bipartite_k33_has_vertical_three_separation() {
        let m = catalog::mk33();
        assert_eq!(vertical_connectivity(&m), Conn::Finite(3));
        assert_eq!(tutte_connectivity(&m), Conn::Finite(3));
        assert!(is_vertically_k_connected(&m, 3));
        assert!(!is_vertically_k_connected(&m, 4));
        let sep = find_vertical_separation(&m, 3).unwrap();
        assert!(sep.is_exact());
        assert!(m.rank(sep.x) >= 3 && m.rank(sep.y) >= 3);
        assert_eq!(lambda(&m, sep.x), 2);
    }

    #[test]
    fn prism_and_whirl() {
        let prism = catalog::prism();
        assert_eq!(vertical_connectivity(&prism), Conn::Finite(3));
        assert_eq!(tutte_connectivity(&prism), Conn::Finite(3));
        let w = catalog::whirl3();
        assert_eq!(tutte_connectivity(&w), Conn::Finite(3));
        assert_eq!(vertical_connectivity(&w), Conn::Infinite);
    }

    #[test]
    fn trivial_k_and_tiny_universes() {
        let m = catalog::mk4();
        assert!(is_vertically_k_connected(&m, 0));
        assert!(is_vertically_k_connected(&m, 1));
        assert!(is_k_connected(&m, 1));
        // one or zero elements: no partitions at all
        let (v, t) = connectivities_in(&m, 0b1);
        assert_eq!((v, t), (Conn::Infinite, Conn::Infinite));
        let (v, t) = connectivities_in(&m, 0);
        assert_eq!((v, t), (Conn::Infinite, Conn::Infinite));
    }

    #[test]
    fn deletion_universe_matches_materialized_deletion() {
        let m = catalog::mk33();
        let full = m.full_mask().bits();
        for e in 0..m.n() {
            let d = m.delete(SubsetMask::singleton(e, m.n()));
            let got = connectivities_in(&m, full & !(1 << e));
            let want = connectivities_in(&d, d.full_mask().bits());
            assert_eq!(got, want, "deleting element {e}");
        }
    }

    #[test]
    fn mk4_is_minimally_vertically_three_connected() {
        let rep = minimality_report(&catalog::mk4(), 3);
        assert!(rep.connected);
        assert!(rep.keepers.is_empty());
        assert!(rep.minimal);
        assert_eq!(rep.deletions.len(), 6);
        for (_, v) in &rep.deletions {
            assert!(!v.at_least(3));
        }
    }

    #[test]
    fn u36_is_not_minimal() {
        // deleting a point of U_{3,6} leaves U_{3,5}, still vertically
        // 3-connected, so U_{3,6} is 3-connected but not minimally so
        let m = catalog::uniform(3, 6).unwrap();
        let rep = minimality_report(&m, 3);
        assert!(rep.connected);
        assert!(!rep.minimal);
        assert_eq!(rep.keepers.len(), 6);
    }

    #[test]
    fn separation_scan_order_is_smallest_anchor_side_first() {
        let m = catalog::mk33();
        let seps = vertical_separations_in(&m, m.full_mask().bits(), 3, false, 50);
        assert!(!seps.is_empty());
        for w in seps.windows(2) {
            assert!(w[0].x <= w[1].x, "witnesses must come out in canonical order");
        }
        for s in &seps {
            assert!(s.x.contains(0));
            assert!(s.lambda < 3);
        }
        let exact = vertical_separations_in(&m, m.full_mask().bits(), 3, true, 50);
        assert!(exact.iter().all(|s| s.is_exact()));
        assert!(exact.len() <= seps.len());
    }

    #[test]
    fn profile_collects_deletion_connectivities() {
        let m = catalog::mk4();
        let p = profile(&m);
        assert_eq!(p.vertical, Conn::Infinite);
        assert_eq!(p.tutte, Conn::Finite(3));
        assert_eq!(p.deletion_vertical.len(), 6);
        assert!(p.minimally_vertical(3));
        assert!(!p.minimally_vertical(2));
    }
}
