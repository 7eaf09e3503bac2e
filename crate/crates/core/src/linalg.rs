//! Exact integer linear algebra: Hermite and Smith normal forms, integer kernels and
//! invariants of lattice quotients.
//!
//! Lattices are always given by their generators as the *columns* of an [`IntMatrix`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small integer rows. All rows must have equal length.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix::new(rows.len(), cols, entries)
    }

    /// Builds a `rows × columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let cols = columns.len();
        let mut m = IntMatrix::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length must equal row count");
            for (i, x) in c.iter().enumerate() {
                m.entries[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.entries[idx] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    /// Concatenates the columns of `self` and `rhs`.
    pub fn hconcat(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, rhs.rows, "row count mismatch in concatenation");
        let mut cols = self.columns();
        cols.extend(rhs.columns());
        IntMatrix::from_columns(self.rows, &cols)
    }

    pub fn scaled(&self, k: &BigInt) -> IntMatrix {
        IntMatrix::new(self.rows, self.cols, self.entries.iter().map(|x| x * k).collect())
    }

    /// gcd of all entries (0 for the zero matrix).
    pub fn content(&self) -> BigInt {
        self.entries.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Exact division of every entry. Panics if some entry is not divisible.
    pub fn div_exact(&self, k: &BigInt) -> IntMatrix {
        IntMatrix::new(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(k);
                    assert!(r.is_zero(), "inexact matrix division");
                    q
                })
                .collect(),
        )
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// A finitely generated abelian group `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with `d₁ | d₂ | …`, all `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Builds the cokernel invariants from a Smith diagonal. `ambient` is the rank of the
    /// free module being divided; diagonal positions beyond its length count as free.
    pub fn from_smith_diagonal(ambient: usize, diagonal: &[BigInt]) -> Self {
        let nonzero: Vec<BigInt> = diagonal.iter().filter(|d| !d.is_zero()).map(|d| d.abs()).collect();
        let free_rank = ambient - nonzero.len();
        let torsion = nonzero.into_iter().filter(|d| !d.is_one()).collect();
        AbelianGroupInvariants { free_rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, or `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Checks `d₁ | d₂ | …` and `dᵢ ≥ 2`.
    pub fn is_well_formed(&self) -> bool {
        let two = BigInt::from(2);
        self.torsion.iter().all(|d| *d >= two) && self.torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        if self.free_rank > 0 {
            if self.free_rank == 1 {
                f.write_str("Z")?;
            } else {
                write!(f, "Z^{}", self.free_rank)?;
            }
            first = false;
        }
        for d in &self.torsion {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        Ok(())
    }
}

/// Result of a Smith normal form computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Non-negative diagonal, `d₁ | d₂ | …`, zeros last. Length `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    /// Invariants of the cokernel `Z^rows / image`.
    pub cokernel: AbelianGroupInvariants,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, cols);
        for (i, d) in self.diagonal.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }
}

/// `(g, s, t)` with `s·x + t·y = g = gcd(x, y) ≥ 0`.
fn xgcd(x: &BigInt, y: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = x.extended_gcd(y);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

fn axpy(dst: &mut [BigInt], k: &BigInt, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += k * s;
    }
}

/// Replaces columns `p` and `q` by a unimodular combination that puts
/// `gcd(cols[p][row], cols[q][row])` in column `p` and zero in column `q`.
fn gcd_combine(cols: &mut [Vec<BigInt>], p: usize, q: usize, row: usize) {
    let x = cols[p][row].clone();
    let y = cols[q][row].clone();
    if y.is_zero() {
        return;
    }
    let (g, s, t) = xgcd(&x, &y);
    let xg = &x / &g;
    let yg = &y / &g;
    let cp = cols[p].clone();
    let cq = cols[q].clone();
    for i in 0..cp.len() {
        cols[p][i] = &s * &cp[i] + &t * &cq[i];
        cols[q][i] = &xg * &cq[i] - &yg * &cp[i];
    }
}

/// Column-style Hermite normal form `H = m·U`.
///
/// Pivots are chosen from the bottom row upwards, so the output is in upper echelon form:
/// each column's pivot is its last nonzero entry, pivot rows increase with the column index,
/// pivots are positive and every entry to the right of a pivot in the pivot's row lies in
/// `[0, pivot)`. Zero columns are dropped, so the column count equals the rank.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let rows = m.rows();
    let mut cols = m.columns();
    let n = cols.len();
    let mut k = n;
    for i in (0..rows).rev() {
        if k == 0 {
            break;
        }
        let p = k - 1;
        for j in 0..p {
            gcd_combine(&mut cols, p, j, i);
        }
        if cols[p][i].is_zero() {
            continue;
        }
        if cols[p][i].is_negative() {
            for x in cols[p].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
        let pivot = cols[p][i].clone();
        let pivot_col = cols[p].clone();
        for col in cols.iter_mut().skip(k) {
            let q = col[i].div_floor(&pivot);
            if !q.is_zero() {
                axpy(col, &-q, &pivot_col);
            }
        }
        k -= 1;
    }
    IntMatrix::from_columns(rows, &cols[k..])
}

/// Smith normal form of `m`; the cokernel invariants describe `Z^rows / m·Z^cols`.
pub fn snf(m: &IntMatrix) -> SmithForm {
    let r = m.rows();
    let c = m.cols();
    let mut a: Vec<Vec<BigInt>> = (0..r).map(|i| m.row(i).to_vec()).collect();
    let size = r.min(c);
    for t in 0..size {
        // Bring the smallest nonzero entry of the trailing block to (t, t).
        let Some((pi, pj)) = min_abs_position(&a, t..r, t..c) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    let src = a[t].clone();
                    axpy(&mut a[i], &-q, &src);
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for row in a.iter_mut() {
                        let s = row[t].clone();
                        row[j] -= &q * s;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // A smaller remainder appeared in row or column t; make it the pivot.
                let mut best = (t, t);
                for i in t + 1..r {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..c {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
                continue;
            }
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    let src = a[i].clone();
                    axpy(&mut a[t], &BigInt::one(), &src);
                }
                None => break,
            }
        }
    }
    let diagonal: Vec<BigInt> = (0..size).map(|i| a[i][i].abs()).collect();
    let cokernel = AbelianGroupInvariants::from_smith_diagonal(r, &diagonal);
    SmithForm { diagonal, cokernel }
}

fn min_abs_position(
    a: &[Vec<BigInt>],
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Basis of the integer kernel `{v ∈ Z^cols : m·v = 0}` as the columns of a
/// `cols × k` matrix in Hermite normal form. The basis is saturated.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let r = m.rows();
    let n = m.cols();
    // Each working column is (m-part of length r) ++ (transform part of length n).
    let mut cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut c = m.column(j);
            c.extend((0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }));
            c
        })
        .collect();
    let mut p = 0;
    for i in 0..r {
        if p == n {
            break;
        }
        for j in p + 1..n {
            gcd_combine(&mut cols, p, j, i);
        }
        if !cols[p][i].is_zero() {
            p += 1;
        }
    }
    let kernel: Vec<Vec<BigInt>> = cols[p..].iter().map(|c| c[r..].to_vec()).collect();
    hnf(&IntMatrix::from_columns(n, &kernel))
}

/// Coordinates of `v` in the lattice spanned by the columns of `basis`, which must
/// already be in Hermite normal form (as returned by [`hnf`]). `None` if `v` is not in the lattice.
pub fn lattice_coordinates(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.rows(), v.len(), "vector length mismatch");
    let mut rest = v.to_vec();
    let mut coords = vec![BigInt::zero(); basis.cols()];
    for j in (0..basis.cols()).rev() {
        let pivot_row = (0..basis.rows()).rev().find(|&i| !basis.get(i, j).is_zero())?;
        let (q, rem) = rest[pivot_row].div_rem(basis.get(pivot_row, j));
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (i, x) in rest.iter_mut().enumerate() {
                *x -= &q * basis.get(i, j);
            }
        }
        coords[j] = q;
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

/// True iff every column of `sub` lies in the lattice spanned by the columns of `lattice`.
pub fn lattice_contains(lattice: &IntMatrix, sub: &IntMatrix) -> bool {
    let h = hnf(lattice);
    sub.columns().iter().all(|c| lattice_coordinates(&h, c).is_some())
}

/// Invariants of the quotient `L(outer) / L(inner)` of the lattices spanned by the columns.
///
/// Fails with [`Error::ContainmentViolation`] unless `L(inner) ⊆ L(outer)`.
pub fn lattice_quotient_invariants(outer: &IntMatrix, inner: &IntMatrix) -> Result<AbelianGroupInvariants> {
    if outer.rows() != inner.rows() {
        return Err(Error::InvalidArgument(alloc::format!(
            "lattices live in Z^{} and Z^{}",
            outer.rows(),
            inner.rows()
        )));
    }
    let ho = hnf(outer);
    let hi = hnf(inner);
    let coords = hi
        .columns()
        .iter()
        .map(|c| lattice_coordinates(&ho, c).ok_or(Error::ContainmentViolation))
        .collect::<Result<Vec<_>>>()?;
    let c = IntMatrix::from_columns(ho.cols(), &coords);
    Ok(snf(&c).cokernel)
}

/// Absolute determinant of a square matrix via its Hermite form (0 when singular).
pub fn abs_det(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let h = hnf(m);
    if h.cols() < m.rows() {
        return BigInt::zero();
    }
    (0..h.cols()).map(|j| h.get(j, j).clone()).product()
}
