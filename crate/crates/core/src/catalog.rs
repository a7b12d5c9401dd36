//! Constructors for the named matroids the library ships with: the
//! nine-element ternary matroid N9 and its companions P8, AG(2,3) and
//! AG(2,3) minus a point, the rank-3 sextet M(K4), W3 (the rank-3 whirl),
//! Q6, P6, U_{3,6}, uniform matroids, and graphic matroids of small graphs.
//!
//! Matrix constants for the classical matroids follow the standard
//! representations from the matroid literature. Each constructor is pure;
//! identity checks (triangle counts, self-duality, line structure) live in
//! the test suite so a transcription error in a constant cannot hide.

use crate::connectivity::Conn;
use crate::error::MatroidError;
use crate::linalg::{is_prime, FieldMatrix};
use crate::matroid::LinearMatroid;

/// The 9-element rank-4 ternary matroid with a transitive automorphism
/// group whose every deletion is P8 and every contraction is AG(2,3) minus
/// a point. Entries -1 are stored as 2.
pub fn n9() -> LinearMatroid {
    let m = FieldMatrix::new(
        3,
        4,
        9,
        &[
            1, 0, 0, 0, 0, 1, 1, -1, 1, //
            0, 1, 0, 0, 1, 0, 1, 1, -1, //
            0, 0, 1, 0, 1, 1, 0, 1, 1, //
            0, 0, 0, 1, -1, 1, 1, 0, -1,
        ],
    )
    .expect("valid constant");
    LinearMatroid::with_default_labels("N9", m).expect("valid constant")
}

/// The self-dual 8-element rank-4 ternary matroid P8, as an identity block
/// next to the standard zero-diagonal block.
pub fn p8() -> LinearMatroid {
    let m = FieldMatrix::new(
        3,
        4,
        8,
        &[
            1, 0, 0, 0, 0, 1, 1, -1, //
            0, 1, 0, 0, 1, 0, 1, 1, //
            0, 0, 1, 0, 1, 1, 0, 1, //
            0, 0, 0, 1, -1, 1, 1, 0,
        ],
    )
    .expect("valid constant");
    LinearMatroid::with_default_labels("P8", m).expect("valid constant")
}

/// The ternary affine plane: all nine points (1, x, y), ordered by (x, y).
pub fn ag23() -> LinearMatroid {
    let mut entries = Vec::with_capacity(27);
    let mut cols = Vec::new();
    for x in 0..3 {
        for y in 0..3 {
            cols.push((x, y));
        }
    }
    for row in 0..3 {
        for &(x, y) in &cols {
            entries.push(match row {
                0 => 1,
                1 => x,
                _ => y,
            });
        }
    }
    let m = FieldMatrix::new(3, 3, 9, &entries).expect("valid constant");
    LinearMatroid::with_default_labels("AG23", m).expect("valid constant")
}

/// AG(2,3) with its last point (x, y) = (2, 2) removed; point-transitivity
/// of the plane makes the choice immaterial.
pub fn ag23_minus_e() -> LinearMatroid {
    let full = ag23();
    let mut d = full.delete(crate::mask::SubsetMask::singleton(8, 9));
    d.set_name("AG23_e");
    d
}

/// The rank-3 whirl: a basis plus the three pairwise sums, giving exactly
/// three triangles arranged in a cycle.
pub fn whirl3() -> LinearMatroid {
    let m = FieldMatrix::new(
        3,
        3,
        6,
        &[
            1, 0, 0, 1, 0, 1, //
            0, 1, 0, 1, 1, 0, //
            0, 0, 1, 0, 1, 1,
        ],
    )
    .expect("valid constant");
    LinearMatroid::with_default_labels("whirl3", m).expect("valid constant")
}

/// Q6: six points in rank 3 with exactly two triangles, sharing a point.
/// Needs five elements on a line-free frame, hence GF(5).
pub fn q6() -> LinearMatroid {
    let m = FieldMatrix::new(
        5,
        3,
        6,
        &[
            1, 0, 1, 0, 1, 1, //
            0, 1, 1, 0, 1, 2, //
            0, 0, 0, 1, 1, 3,
        ],
    )
    .expect("valid constant");
    LinearMatroid::with_default_labels("Q6", m).expect("valid constant")
}

/// P6: six points in rank 3 with exactly one triangle.
pub fn p6() -> LinearMatroid {
    let m = FieldMatrix::new(
        5,
        3,
        6,
        &[
            1, 0, 1, 0, 1, 2, //
            0, 1, 1, 0, 2, 1, //
            0, 0, 0, 1, 1, 1,
        ],
    )
    .expect("valid constant");
    LinearMatroid::with_default_labels("P6", m).expect("valid constant")
}

pub(crate) fn smallest_prime_at_least(n: u32) -> u32 {
    let mut p = n.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// U_{r,n} over an explicit prime field; needs p >= n so that n distinct
/// evaluation points exist for the Vandermonde columns.
pub fn uniform_over(r: u32, n: u32, p: u32) -> Result<LinearMatroid, MatroidError> {
    if r > n || n > crate::mask::MAX_ELEMENTS as u32 {
        return Err(MatroidError::InvalidUniform(r, n));
    }
    if u64::from(p) < u64::from(n) {
        return Err(MatroidError::FieldTooSmall(p as u8, n));
    }
    let mut entries = Vec::with_capacity((r * n) as usize);
    for row in 0..r {
        for x in 0..n {
            // x^row mod p; the columns are Vandermonde on distinct points
            let mut v = 1u64;
            for _ in 0..row {
                v = v * u64::from(x) % u64::from(p);
            }
            entries.push(v as i64);
        }
    }
    let m = FieldMatrix::new(p, r as usize, n as usize, &entries)?;
    LinearMatroid::with_default_labels(format!("U_{r}_{n}"), m)
}

/// U_{r,n} over the smallest prime admitting n distinct points.
pub fn uniform(r: u32, n: u32) -> Result<LinearMatroid, MatroidError> {
    uniform_over(r, n, smallest_prime_at_least(n))
}

/// Cycle matroid of a graph given by its edge list, over GF(2): one
/// incidence column per edge with the last vertex row dropped. Self-loops
/// become matroid loops; parallel edges become parallel elements.
pub fn graphic(name: &str, edges: &[(usize, usize)]) -> Result<LinearMatroid, MatroidError> {
    if edges.len() > crate::mask::MAX_ELEMENTS {
        return Err(MatroidError::TooManyElements(edges.len()));
    }
    let vertices = edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let rows = vertices.saturating_sub(1);
    if rows > 32 {
        return Err(MatroidError::InvalidDimensions(format!(
            "{vertices} vertices need {rows} incidence rows"
        )));
    }
    let n = edges.len();
    let mut entries = vec![0i64; rows * n];
    for (j, &(u, v)) in edges.iter().enumerate() {
        for i in [u, v] {
            if i < rows {
                // a self-loop hits the same cell twice and cancels mod 2
                entries[i * n + j] = (entries[i * n + j] + 1) % 2;
            }
        }
    }
    let m = FieldMatrix::new(2, rows, n, &entries)?.reduced();
    LinearMatroid::with_default_labels(name, m)
}

pub fn mk4() -> LinearMatroid {
    graphic("M_K4", &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("valid constant")
}

pub fn mk5() -> LinearMatroid {
    graphic(
        "M_K5",
        &[
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
        ],
    )
    .expect("valid constant")
}

pub fn mk33() -> LinearMatroid {
    graphic(
        "M_K33",
        &[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
        ],
    )
    .expect("valid constant")
}

/// Two triangles joined by a perfect matching.
pub fn prism() -> LinearMatroid {
    graphic(
        "M_prism",
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 5),
            (4, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("valid constant")
}

/// The rank-4 wheel: hub 0, rim cycle 1-2-3-4.
pub fn wheel4() -> LinearMatroid {
    graphic(
        "W4",
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
        ],
    )
    .expect("valid constant")
}

/// Expected invariants of a catalog entry, recomputed and checked by the
/// test suite on every run.
#[derive(Clone, Debug)]
pub struct Expected {
    pub field: u8,
    pub rank: u32,
    pub n: usize,
    pub simple: bool,
    pub vertical: Conn,
    pub tutte: Conn,
    pub minimally_vertical_4: bool,
    /// cocircuit counts for sizes 3, 4, 5, 6
    pub cocircuits_by_size: [usize; 4],
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub build: fn() -> LinearMatroid,
    pub expected: Expected,
}

fn u24() -> LinearMatroid {
    uniform(2, 4).expect("valid constant")
}

fn u36() -> LinearMatroid {
    uniform(3, 6).expect("valid constant")
}

/// The fixed catalog, in display order.
pub fn entries() -> Vec<CatalogEntry> {
    use Conn::{Finite, Infinite};
    let e = |name,
             build,
             field,
             rank,
             n,
             simple,
             vertical,
             tutte,
             minimally_vertical_4,
             cocircuits_by_size| CatalogEntry {
        name,
        build,
        expected: Expected {
            field,
            rank,
            n,
            simple,
            vertical,
            tutte,
            minimally_vertical_4,
            cocircuits_by_size,
        },
    };
    vec![
        e("N9", n9 as fn() -> LinearMatroid, 3, 4, 9, true, Infinite, Finite(4), true, [0, 0, 18, 12]),
        e("P8", p8, 3, 4, 8, true, Finite(3), Finite(3), false, [0, 10, 16, 0]),
        e("AG23", ag23, 3, 3, 9, true, Infinite, Finite(3), false, [0, 0, 0, 12]),
        e("AG23_e", ag23_minus_e, 3, 3, 8, true, Infinite, Finite(3), false, [0, 0, 8, 4]),
        e("M_K4", mk4, 2, 3, 6, true, Infinite, Finite(3), true, [4, 3, 0, 0]),
        e("M_K5", mk5, 2, 4, 10, true, Infinite, Finite(3), true, [0, 5, 0, 10]),
        e("M_K33", mk33, 2, 5, 9, true, Finite(3), Finite(3), false, [6, 9, 9, 0]),
        e("M_prism", prism, 2, 5, 9, true, Finite(3), Finite(3), false, [7, 9, 6, 0]),
        e("W4", wheel4, 2, 4, 8, true, Finite(3), Finite(3), false, [4, 5, 4, 0]),
        e("whirl3", whirl3, 3, 3, 6, true, Infinite, Finite(3), true, [3, 6, 0, 0]),
        e("Q6", q6, 5, 3, 6, true, Infinite, Finite(3), false, [2, 9, 0, 0]),
        e("P6", p6, 5, 3, 6, true, Infinite, Finite(3), false, [1, 12, 0, 0]),
        e("U_2_4", u24, 5, 2, 4, true, Infinite, Infinite, false, [4, 0, 0, 0]),
        e("U_3_6", u36, 7, 3, 6, true, Infinite, Infinite, false, [0, 15, 0, 0]),
    ]
}

/// Looks a matroid up by catalog name; also accepts the pattern U_r_n for
/// arbitrary uniform matroids, e.g. "U_2_5".
pub fn by_name(name: &str) -> Option<LinearMatroid> {
    for entry in entries() {
        if entry.name == name {
            return Some((entry.build)());
        }
    }
    let parts: Vec<&str> = name.split('_').collect();
    if let ["U", r, n] = parts.as_slice() {
        if let (Ok(r), Ok(n)) = (r.parse(), n.parse()) {
            return uniform(r, n).ok();
        }
    }
    None
}
