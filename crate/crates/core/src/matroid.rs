//! Matroids represented by matrices over prime fields.
//!
//! A `LinearMatroid` is a labeled matrix whose columns are the ground set;
//! the rank of a subset is the rank of its columns. Everything else here is
//! derived from the rank function: closure, circuits, cocircuits,
//! hyperplanes and flats, minors, duality, direct and 2-sums, and the
//! simple/uniform predicates.
//!
//! Rank queries are memoized in a full 2^n byte table built lazily on first
//! use (for n <= 16; larger ground sets fall back to direct elimination per
//! query). The table is a pure cache behind a `OnceLock`: concurrent
//! initializers race only to write identical values, so `LinearMatroid` is
//! freely shared across threads.
//!
//! Deletions never materialize a new matrix in the hot paths: a deletion is
//! a subset of the parent's ground set, and all connectivity machinery
//! accepts a universe mask. The `delete`/`contract`/`restrict` constructors
//! exist for when a standalone minor is genuinely needed (duals, reports,
//! serialization).

use std::sync::OnceLock;

use crate::error::MatroidError;
use crate::linalg::FieldMatrix;
use crate::mask::{k_subsets_of, SetFamily, SubsetMask, MAX_ELEMENTS};

/// Largest ground set that gets a full 2^n rank table.
const MEMO_MAX: usize = 16;

/// A matroid given by a matrix over GF(p), with one column per element.
pub struct LinearMatroid {
    name: String,
    matrix: FieldMatrix,
    labels: Vec<String>,
    full_rank: u32,
    table: OnceLock<Box<[u8]>>,
}

impl LinearMatroid {
    /// Wraps a matrix as a matroid with the given element labels.
    /// Labels must be distinct and match the column count.
    pub fn new(
        name: impl Into<String>,
        matrix: FieldMatrix,
        labels: Vec<String>,
    ) -> Result<Self, MatroidError> {
        let n = matrix.cols();
        if n > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(n));
        }
        if labels.len() != n {
            return Err(MatroidError::InvalidLabels(format!(
                "{} labels for {} elements",
                labels.len(),
                n
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[i + 1..].contains(a) {
                return Err(MatroidError::InvalidLabels(format!("duplicate label '{a}'")));
            }
        }
        let full_rank = matrix.rank();
        Ok(LinearMatroid {
            name: name.into(),
            matrix,
            labels,
            full_rank,
            table: OnceLock::new(),
        })
    }

    /// Wraps a matrix with default positional labels "1".."n".
    pub fn with_default_labels(
        name: impl Into<String>,
        matrix: FieldMatrix,
    ) -> Result<Self, MatroidError> {
        let labels = (1..=matrix.cols()).map(|i| i.to_string()).collect();
        Self::new(name, matrix, labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    /// Index of the element with the given label.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Renders a subset as its sorted label list, e.g. "{1,4,7}".
    pub fn label_set(&self, s: SubsetMask) -> String {
        let mut names: Vec<&str> = s.elements().map(|e| self.label(e)).collect();
        names.sort();
        format!("{{{}}}", names.join(","))
    }

    /// Ground set size.
    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    /// Field modulus.
    pub fn field(&self) -> u8 {
        self.matrix.p()
    }

    /// Rank of the whole matroid.
    pub fn full_rank(&self) -> u32 {
        self.full_rank
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.n())
    }

    /// Rank of a subset of the ground set.
    pub fn rank(&self, x: SubsetMask) -> u32 {
        debug_assert_eq!(x.universe(), self.n());
        self.rank_bits(x.bits())
    }

    /// Rank by raw bitmask; the workhorse for sweeps.
    pub fn rank_bits(&self, bits: u32) -> u32 {
        if self.n() <= MEMO_MAX {
            u32::from(self.table()[bits as usize])
        } else {
            self.matrix.rank_of_columns(bits)
        }
    }

    fn table(&self) -> &[u8] {
        self.table.get_or_init(|| {
            let n = self.n();
            (0u32..(1 << n))
                .map(|m| self.matrix.rank_of_columns(m) as u8)
                .collect()
        })
    }

    /// Closure: all elements whose addition does not raise the rank.
    pub fn closure(&self, x: SubsetMask) -> SubsetMask {
        let rx = self.rank_bits(x.bits());
        let mut out = x.bits();
        for e in 0..self.n() {
            if out & (1 << e) == 0 && self.rank_bits(x.bits() | (1 << e)) == rx {
                out |= 1 << e;
            }
        }
        SubsetMask::from_bits(out, self.n())
    }

    /// The set of loops (elements of rank zero).
    pub fn loops(&self) -> SubsetMask {
        self.closure(SubsetMask::empty(self.n()))
    }

    /// True when `x` is a circuit: minimally dependent.
    pub fn is_circuit(&self, x: SubsetMask) -> bool {
        let k = x.len() as u32;
        if k == 0 || self.rank_bits(x.bits()) != k - 1 {
            return false;
        }
        x.elements()
            .all(|e| self.rank_bits(x.bits() & !(1 << e)) == k - 1)
    }

    /// All circuits with at most `max_size` elements, canonically ordered.
    pub fn circuits_up_to(&self, max_size: usize) -> SetFamily {
        let n = self.n();
        let mut found = Vec::new();
        for size in 1..=max_size.min(n) {
            for bits in k_subsets_of(SubsetMask::full(n).bits(), size) {
                let m = SubsetMask::from_bits(bits, n);
                if self.is_circuit(m) {
                    found.push(m);
                }
            }
        }
        SetFamily::new(found)
    }

    /// Every circuit (circuits never exceed rank + 1 elements).
    pub fn circuits(&self) -> SetFamily {
        self.circuits_up_to(self.full_rank as usize + 1)
    }

    /// Circuits of size exactly three.
    pub fn triangles(&self) -> Vec<SubsetMask> {
        self.circuits_up_to(3)
            .iter()
            .filter(|c| c.len() == 3)
            .collect()
    }

    /// Flats of the given rank, as closures of independent k-subsets.
    /// Every rank-k flat arises this way.
    pub fn flats_of_rank(&self, k: u32) -> SetFamily {
        let n = self.n();
        if k > self.full_rank {
            return SetFamily::empty();
        }
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for bits in k_subsets_of(SubsetMask::full(n).bits(), k as usize) {
            if self.rank_bits(bits) == k {
                let cl = self.closure(SubsetMask::from_bits(bits, n));
                if seen.insert(cl.bits()) {
                    out.push(cl);
                }
            }
        }
        SetFamily::new(out)
    }

    /// Hyperplanes: flats of rank r(M) - 1. Pre: rank >= 1.
    pub fn hyperplanes(&self) -> SetFamily {
        assert!(self.full_rank >= 1, "hyperplanes need rank >= 1");
        self.flats_of_rank(self.full_rank - 1)
    }

    /// Cocircuits: complements of hyperplanes.
    pub fn cocircuits(&self) -> SetFamily {
        SetFamily::new(self.hyperplanes().iter().map(|h| h.complement()).collect())
    }

    /// True when the complement of `x` is a hyperplane.
    pub fn is_cocircuit(&self, x: SubsetMask) -> bool {
        if self.full_rank == 0 || x.is_empty() {
            return false;
        }
        let h = x.complement();
        if self.rank_bits(h.bits()) != self.full_rank - 1 {
            return false;
        }
        // h must be closed: no element of x may fall in its closure
        x.elements()
            .all(|e| self.rank_bits(h.bits() | (1 << e)) == self.full_rank)
    }

    /// All cocircuits of size exactly k, by direct complement-flat testing
    /// (cheaper than full hyperplane enumeration for small k).
    pub fn cocircuits_of_size(&self, k: usize) -> SetFamily {
        let n = self.n();
        let mut out = Vec::new();
        for bits in k_subsets_of(SubsetMask::full(n).bits(), k) {
            let m = SubsetMask::from_bits(bits, n);
            if self.is_cocircuit(m) {
                out.push(m);
            }
        }
        SetFamily::new(out)
    }

    /// No loops and no two-element circuits.
    pub fn is_simple(&self) -> bool {
        let n = self.n();
        for e in 0..n {
            if self.rank_bits(1 << e) != 1 {
                return false;
            }
        }
        for bits in k_subsets_of(SubsetMask::full(n).bits(), 2) {
            if self.rank_bits(bits) != 2 {
                return false;
            }
        }
        true
    }

    /// True when every r(M)-subset is a basis.
    pub fn is_uniform(&self) -> bool {
        let r = self.full_rank;
        k_subsets_of(self.full_mask().bits(), r as usize).all(|bits| self.rank_bits(bits) == r)
    }

    /// Deletes the elements of `x`. The remaining columns keep their labels;
    /// rows are left untouched (the rank may drop).
    pub fn delete(&self, x: SubsetMask) -> LinearMatroid {
        let keep = x.complement();
        let matrix = self.matrix.select_columns(keep.bits());
        let labels = keep.elements().map(|e| self.labels[e].clone()).collect();
        let name = format!("{}\\{}", self.name, self.label_set(x));
        LinearMatroid::new(name, matrix, labels).expect("deletion of a valid matroid is valid")
    }

    /// Restricts to the elements of `x`.
    pub fn restrict(&self, x: SubsetMask) -> LinearMatroid {
        let mut m = self.delete(x.complement());
        m.name = format!("{}|{}", self.name, self.label_set(x));
        m
    }

    /// Contracts the elements of `x`: pivots on a maximal independent subset
    /// of x's columns, removes the pivot rows and x's columns, and returns
    /// the remainder in reduced form (zero rows dropped).
    ///
    /// Satisfies r_{M/X}(Y) = r_M(Y u X) - r_M(X).
    pub fn contract(&self, x: SubsetMask) -> LinearMatroid {
        let mut work = self.matrix.clone();
        let mut pivot_rows: Vec<usize> = Vec::new();
        for col in x.elements() {
            // find a row not yet used as a pivot with a nonzero entry
            let hit = (0..work.rows())
                .find(|&i| !pivot_rows.contains(&i) && work.entry(i, col) != 0);
            let Some(row) = hit else { continue };
            work = work.with_unit_column(col, row);
            pivot_rows.push(row);
        }
        let keep_cols = x.complement();
        let kept_rows: Vec<usize> =
            (0..work.rows()).filter(|i| !pivot_rows.contains(i)).collect();
        let kept_col_idx: Vec<usize> = keep_cols.elements().collect();
        let mut entries: Vec<i64> = Vec::with_capacity(kept_rows.len() * kept_col_idx.len());
        for &i in &kept_rows {
            for &j in &kept_col_idx {
                entries.push(i64::from(work.entry(i, j)));
            }
        }
        let raw = FieldMatrix::new(
            u32::from(self.field()),
            kept_rows.len(),
            kept_col_idx.len(),
            &entries,
        )
        .expect("contraction dimensions are valid");
        let matrix = raw.reduced();
        let labels = keep_cols.elements().map(|e| self.labels[e].clone()).collect();
        let name = format!("{}/{}", self.name, self.label_set(x));
        LinearMatroid::new(name, matrix, labels).expect("contraction of a valid matroid is valid")
    }

    /// The dual matroid, built from the standard-form identity: if a row
    /// reduction exhibits M as [I | D] on its pivot columns, the dual is
    /// [-D^T | I] arranged on the complementary columns. Satisfies
    /// r*(X) = |X| - r(M) + r(E - X).
    pub fn dual(&self) -> LinearMatroid {
        let n = self.n();
        let (rref, pivots) = self.matrix.rref_with_pivots();
        let r = pivots.len();
        let nonpivots: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let dr = n - r;
        let mut entries = vec![0i64; dr * n];
        for (l, &q) in nonpivots.iter().enumerate() {
            entries[l * n + q] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                entries[l * n + pc] = -i64::from(rref.entry(i, q));
            }
        }
        let matrix = FieldMatrix::new(u32::from(self.field()), dr, n, &entries)
            .expect("dual dimensions are valid");
        LinearMatroid::new(format!("{}*", self.name), matrix, self.labels.clone())
            .expect("dual of a valid matroid is valid")
    }

    /// Direct sum: block-diagonal representation, fresh positional labels.
    pub fn direct_sum(&self, other: &LinearMatroid) -> Result<LinearMatroid, MatroidError> {
        if self.field() != other.field() {
            return Err(MatroidError::FieldMismatch(self.field(), other.field()));
        }
        let n = self.n() + other.n();
        if n > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(n));
        }
        let a = self.matrix.reduced();
        let b = other.matrix.reduced();
        let rows = a.rows() + b.rows();
        let mut entries = vec![0i64; rows * n];
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                entries[i * n + j] = i64::from(a.entry(i, j));
            }
        }
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                entries[(a.rows() + i) * n + self.n() + j] = i64::from(b.entry(i, j));
            }
        }
        let matrix = FieldMatrix::new(u32::from(self.field()), rows, n, &entries)?;
        LinearMatroid::with_default_labels(format!("sum({},{})", self.name, other.name), matrix)
    }

    /// 2-sum along basepoints pa (here) and pb (there): glues the two
    /// matroids so the basepoints coincide, then deletes them. Defined only
    /// when each basepoint is neither a loop nor a coloop of its matroid.
    /// The result has n1 + n2 - 2 elements and rank r1 + r2 - 1.
    pub fn two_sum(
        &self,
        pa: usize,
        other: &LinearMatroid,
        pb: usize,
    ) -> Result<LinearMatroid, MatroidError> {
        if self.field() != other.field() {
            return Err(MatroidError::FieldMismatch(self.field(), other.field()));
        }
        let n = self.n() + other.n() - 2;
        if n > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(n));
        }
        for (m, p) in [(self, pa), (other, pb)] {
            if p >= m.n() {
                return Err(MatroidError::ElementOutOfRange(p, m.n()));
            }
            let is_loop = m.rank_bits(1 << p) == 0;
            let full = m.full_mask();
            let is_coloop = m.rank_bits(full.bits() & !(1 << p)) == m.full_rank() - 1;
            if is_loop || is_coloop {
                return Err(MatroidError::InvalidBasepoint(m.label(p).to_string()));
            }
        }
        let r1 = self.full_rank() as usize;
        let r2 = other.full_rank() as usize;
        // basepoint column of A becomes e_{r1-1}, basepoint of B becomes e_0;
        // the glued representation overlaps those rows.
        let a = self.matrix.reduced().with_unit_column(pa, r1 - 1);
        let b = other.matrix.reduced().with_unit_column(pb, 0);
        let rows = r1 + r2 - 1;
        let mut entries = vec![0i64; rows * n];
        let a_cols: Vec<usize> = (0..self.n()).filter(|&j| j != pa).collect();
        let b_cols: Vec<usize> = (0..other.n()).filter(|&j| j != pb).collect();
        for (jj, &j) in a_cols.iter().enumerate() {
            for i in 0..r1 {
                entries[i * n + jj] = i64::from(a.entry(i, j));
            }
        }
        for (jj, &j) in b_cols.iter().enumerate() {
            for i in 0..r2 {
                entries[(r1 - 1 + i) * n + a_cols.len() + jj] = i64::from(b.entry(i, j));
            }
        }
        let matrix = FieldMatrix::new(u32::from(self.field()), rows, n, &entries)?;
        let out = LinearMatroid::with_default_labels(
            format!("twosum({},{})", self.name, other.name),
            matrix,
        )?;
        debug_assert_eq!(out.full_rank() as usize, r1 + r2 - 1);
        Ok(out)
    }

    /// True when some minor of M is the four-point line U_{2,4}.
    ///
    /// Every minor is (M/C)|X for disjoint C, X, and contracting any set
    /// equals contracting an independent subset of it, so the search runs
    /// over independent C with |C| <= r - 2 and four-element X. The test
    /// uses only rank queries: r(C u X) = r(C) + 2 and every pair of X adds
    /// exactly 2 to r(C).
    pub fn has_minor_u24(&self) -> bool {
        let n = self.n();
        let r = self.full_rank;
        if r < 2 || n < 4 {
            return false;
        }
        let full = self.full_mask().bits();
        for csize in 0..=(r as usize - 2) {
            for c in k_subsets_of(full, csize) {
                let rc = self.rank_bits(c);
                if rc != csize as u32 {
                    continue; // only independent contraction sets matter
                }
                let rest = full & !c;
                'xloop: for x in k_subsets_of(rest, 4) {
                    if self.rank_bits(c | x) != rc + 2 {
                        continue;
                    }
                    for pair in k_subsets_of(x, 2) {
                        if self.rank_bits(c | pair) != rc + 2 {
                            continue 'xloop;
                        }
                    }
                    return true;
                }
            }
        }
        false
    }

    /// Restriction of `x` is a four-point line: rank 2, four elements, and
    /// every pair has rank 2.
    pub fn is_u24_restriction(&self, x: SubsetMask) -> bool {
        x.len() == 4
            && self.rank_bits(x.bits()) == 2
            && k_subsets_of(x.bits(), 2).all(|pair| self.rank_bits(pair) == 2)
    }
}

impl std::fmt::Debug for LinearMatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LinearMatroid({}, GF({}), rank {}, {} elements)",
            self.name,
            self.field(),
            self.full_rank,
            self.n()
        )
    }
}
