//! Exact linear algebra over prime fields GF(p), p <= 251.
//!
//! Matrices store one byte per entry, always reduced into [0, p). Rank
//! queries address column subsets by bitmask, so the kernels are sized for
//! at most 32 rows and 32 columns; the matroid layer above caps ground sets
//! at 24 elements, well inside that.
//!
//! Two elimination kernels back the rank queries:
//!
//! * p = 2: every column is packed into a machine word at construction and
//!   rank runs by XOR elimination against a per-row pivot array.
//! * odd p: byte Gaussian elimination on the selected columns, with a
//!   dedicated GF(3) inner loop (the only odd field hot enough to matter;
//!   a - 2b = a + b mod 3, so elimination needs no multiplies there).
//!
//! Row reduction (`row_reduce`) produces the reduced row echelon form and
//! preserves the row space; rank and all column dependencies are invariant
//! under it.

use crate::error::MatroidError;

/// Largest modulus a matrix may carry.
pub const MAX_MODULUS: u32 = 251;

/// Kernel width cap: rank queries index columns by `u32` bitmask.
pub const MAX_DIM: usize = 32;

/// Trial-division primality check, adequate for moduli up to 251.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduces an arbitrary signed integer into [0, p), so `-1` becomes `p - 1`.
pub fn reduce_mod(v: i64, p: u8) -> u8 {
    let p = i64::from(p);
    (((v % p) + p) % p) as u8
}

/// Modular inverse by Fermat's little theorem. Pre: p prime, a nonzero mod p.
fn inv_mod(a: u8, p: u8) -> u8 {
    debug_assert!(a != 0 && a < p);
    let m = u32::from(p);
    let (mut base, mut e, mut acc) = (u32::from(a), m - 2, 1u32);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u8
}

// x + y and x - y mod 3, indexed [x][y].
const ADD3: [[u8; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
const SUB3: [[u8; 3]; 3] = [[0, 2, 1], [1, 0, 2], [2, 1, 0]];

/// A dense matrix over GF(p) with byte entries.
///
/// Dimensions and modulus are fixed at construction. All entries satisfy
/// `entry < p`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    p: u8,
    rows: usize,
    cols: usize,
    data: Vec<u8>,     // row-major
    gf2_cols: Vec<u32>, // column words when p == 2 (bit i = row i), else empty
}

impl FieldMatrix {
    /// Builds a rows x cols matrix from row-major signed entries, reducing
    /// each one mod p. Rejects non-prime or oversized moduli and dimensions
    /// beyond the kernel caps.
    pub fn new(p: u32, rows: usize, cols: usize, entries: &[i64]) -> Result<Self, MatroidError> {
        if !is_prime(p) || p > MAX_MODULUS {
            return Err(MatroidError::InvalidModulus(p));
        }
        if rows > MAX_DIM || cols > MAX_DIM {
            return Err(MatroidError::InvalidDimensions(format!(
                "{rows}x{cols} exceeds the {MAX_DIM}x{MAX_DIM} kernel cap"
            )));
        }
        if entries.len() != rows * cols {
            return Err(MatroidError::InvalidDimensions(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let p8 = p as u8;
        let data = entries.iter().map(|&v| reduce_mod(v, p8)).collect();
        Ok(Self::from_reduced(p8, rows, cols, data))
    }

    /// Builds from rows of signed entries; all rows must have equal length.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self, MatroidError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatroidError::InvalidDimensions(
                "rows have unequal lengths".into(),
            ));
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::new(p, rows.len(), cols, &flat)
    }

    /// Internal constructor for entries already reduced into [0, p).
    pub(crate) fn from_reduced(p: u8, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        debug_assert!(data.iter().all(|&v| v < p));
        let mut m = FieldMatrix { p, rows, cols, data, gf2_cols: Vec::new() };
        m.rebuild_gf2();
        m
    }

    pub fn identity(p: u32, n: usize) -> Result<Self, MatroidError> {
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self::new(p, n, n, &entries)
    }

    fn rebuild_gf2(&mut self) {
        self.gf2_cols.clear();
        if self.p == 2 {
            for c in 0..self.cols {
                let mut w = 0u32;
                for i in 0..self.rows {
                    if self.data[i * self.cols + c] != 0 {
                        w |= 1 << i;
                    }
                }
                self.gf2_cols.push(w);
            }
        }
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    /// Rank of the whole matrix.
    pub fn rank(&self) -> u32 {
        let mask = if self.cols == 32 { u32::MAX } else { (1u32 << self.cols) - 1 };
        self.rank_of_columns(mask)
    }

    /// Rank of the submatrix formed by the columns selected by `mask`
    /// (bit j set = column j included).
    pub fn rank_of_columns(&self, mask: u32) -> u32 {
        debug_assert!(self.cols == 32 || mask < (1u32 << self.cols));
        if self.p == 2 {
            self.rank_gf2(mask)
        } else {
            self.rank_bytes(mask)
        }
    }

    fn rank_gf2(&self, mask: u32) -> u32 {
        let mut piv = [0u32; MAX_DIM]; // indexed by lowest set bit
        let mut rank = 0;
        let mut m = mask;
        while m != 0 {
            let c = m.trailing_zeros() as usize;
            m &= m - 1;
            let mut w = self.gf2_cols[c];
            while w != 0 {
                let l = w.trailing_zeros() as usize;
                if piv[l] == 0 {
                    piv[l] = w;
                    rank += 1;
                    break;
                }
                w ^= piv[l];
            }
        }
        rank
    }

    fn rank_bytes(&self, mask: u32) -> u32 {
        let p = self.p;
        let r = self.rows;
        // piv[l] holds a column with first nonzero entry 1 at row l.
        let mut piv = [[0u8; MAX_DIM]; MAX_DIM];
        let mut present = 0u32;
        let mut rank = 0u32;
        let mut buf = [0u8; MAX_DIM];
        let mut m = mask;
        while m != 0 {
            let c = m.trailing_zeros() as usize;
            m &= m - 1;
            for i in 0..r {
                buf[i] = self.data[i * self.cols + c];
            }
            for l in 0..r {
                let f = buf[l];
                if f == 0 {
                    continue;
                }
                if present & (1 << l) == 0 {
                    let s = inv_mod(f, p);
                    if s != 1 {
                        for i in l..r {
                            buf[i] = (u32::from(buf[i]) * u32::from(s) % u32::from(p)) as u8;
                        }
                    }
                    piv[l][l..r].copy_from_slice(&buf[l..r]);
                    present |= 1 << l;
                    rank += 1;
                    break;
                }
                // buf -= f * piv[l], which zeroes buf[l]
                if p == 3 {
                    let pv = &piv[l];
                    if f == 1 {
                        for i in l..r {
                            buf[i] = SUB3[buf[i] as usize][pv[i] as usize];
                        }
                    } else {
                        for i in l..r {
                            buf[i] = ADD3[buf[i] as usize][pv[i] as usize];
                        }
                    }
                } else {
                    let g = u32::from(p - f);
                    let pm = u32::from(p);
                    for i in l..r {
                        let s = u32::from(buf[i]) + g * u32::from(piv[l][i]) % pm;
                        buf[i] = if s >= pm { (s - pm) as u8 } else { s as u8 };
                    }
                }
            }
        }
        rank
    }

    /// Reduced row echelon form. Same dimensions; zero rows stay in place at
    /// the bottom. The row space (hence rank and every column dependency) is
    /// preserved.
    pub fn row_reduce(&self) -> FieldMatrix {
        self.rref_with_pivots().0
    }

    /// RREF plus the list of pivot column indices, in order.
    pub(crate) fn rref_with_pivots(&self) -> (FieldMatrix, Vec<usize>) {
        let (r, c, p) = (self.rows, self.cols, self.p);
        let mut a = self.data.clone();
        let mut piv_cols = Vec::new();
        let mut pr = 0usize;
        for col in 0..c {
            let Some(i) = (pr..r).find(|&i| a[i * c + col] != 0) else {
                continue;
            };
            if i != pr {
                for j in 0..c {
                    a.swap(i * c + j, pr * c + j);
                }
            }
            let s = inv_mod(a[pr * c + col], p);
            if s != 1 {
                for j in 0..c {
                    a[pr * c + j] = (u32::from(a[pr * c + j]) * u32::from(s) % u32::from(p)) as u8;
                }
            }
            for i2 in 0..r {
                if i2 == pr {
                    continue;
                }
                let f = a[i2 * c + col];
                if f == 0 {
                    continue;
                }
                let g = u32::from(p - f);
                let pm = u32::from(p);
                for j in 0..c {
                    let s = u32::from(a[i2 * c + j]) + g * u32::from(a[pr * c + j]) % pm;
                    a[i2 * c + j] = if s >= pm { (s - pm) as u8 } else { s as u8 };
                }
            }
            piv_cols.push(col);
            pr += 1;
            if pr == r {
                break;
            }
        }
        (FieldMatrix::from_reduced(p, r, c, a), piv_cols)
    }

    /// RREF with the all-zero rows dropped: a full-row-rank matrix with the
    /// same column dependencies.
    pub(crate) fn reduced(&self) -> FieldMatrix {
        let (m, pivots) = self.rref_with_pivots();
        let keep = pivots.len();
        let data = m.data[..keep * m.cols].to_vec();
        FieldMatrix::from_reduced(m.p, keep, m.cols, data)
    }

    /// Keeps the selected columns (ascending index order).
    pub(crate) fn select_columns(&self, mask: u32) -> FieldMatrix {
        let kept: Vec<usize> = (0..self.cols).filter(|&j| mask & (1 << j) != 0).collect();
        let mut data = Vec::with_capacity(self.rows * kept.len());
        for i in 0..self.rows {
            for &j in &kept {
                data.push(self.data[i * self.cols + j]);
            }
        }
        FieldMatrix::from_reduced(self.p, self.rows, kept.len(), data)
    }

    /// Row-swap and row-operation transform making column `col` the unit
    /// vector with its 1 at `target_row`. Pre: column `col` is nonzero.
    pub(crate) fn with_unit_column(&self, col: usize, target_row: usize) -> FieldMatrix {
        let (r, c, p) = (self.rows, self.cols, self.p);
        let mut a = self.data.clone();
        // pivot in place when the target row already works; swapping the
        // first nonzero row up could disturb rows a caller still relies on
        let i = if a[target_row * c + col] != 0 {
            target_row
        } else {
            (0..r)
                .find(|&i| a[i * c + col] != 0)
                .expect("with_unit_column requires a nonzero column")
        };
        if i != target_row {
            for j in 0..c {
                a.swap(i * c + j, target_row * c + j);
            }
        }
        let s = inv_mod(a[target_row * c + col], p);
        if s != 1 {
            for j in 0..c {
                a[target_row * c + j] =
                    (u32::from(a[target_row * c + j]) * u32::from(s) % u32::from(p)) as u8;
            }
        }
        for i2 in 0..r {
            if i2 == target_row {
                continue;
            }
            let f = a[i2 * c + col];
            if f == 0 {
                continue;
            }
            let g = u32::from(p - f);
            let pm = u32::from(p);
            for j in 0..c {
                let s = u32::from(a[i2 * c + j]) + g * u32::from(a[target_row * c + j]) % pm;
                a[i2 * c + j] = if s >= pm { (s - pm) as u8 } else { s as u8 };
            }
        }
        FieldMatrix::from_reduced(p, r, c, a)
    }
}

impl std::fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FieldMatrix GF({}) {}x{}", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}
