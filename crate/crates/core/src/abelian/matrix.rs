//! Dense integer matrices with unbounded entries and the exact normal forms
//! everything else is built on: Smith normal form with unimodular transforms
//! (and their inverses), column Hermite form for lattice comparison, integral
//! system solving, kernels and saturations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense matrix over the integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Diagonal matrix of the given size; entries beyond the diagonal list are zero.
    pub fn diagonal(rows: usize, cols: usize, entries: &[BigInt]) -> Self {
        let mut m = IntMatrix::zero(rows, cols);
        for (i, e) in entries.iter().enumerate().take(rows.min(cols)) {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Test helper: build from explicit i64 rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*x));
            }
        }
        m
    }

    /// Build from columns given as vectors in the ambient space of dimension `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = IntMatrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
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
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut s = BigInt::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x[j].is_zero() {
                        s += a * &x[j];
                    }
                }
                s
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = IntMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product with the identity of size `k`: index `(i, t) -> i*k + t`.
    pub fn kron_identity(&self, k: usize) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows * k, self.cols * k);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() {
                    for t in 0..k {
                        out.set(i * k + t, j * k + t, a.clone());
                    }
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = -std::mem::take(x);
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination. Panics on non-square input.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            let x = a.get(k, j).clone();
                            let y = a.get(i, j).clone();
                            a.set(k, j, y);
                            a.set(i, j, x);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                    a.set(i, j, num / &prev);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        let d = a.get(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Smith decomposition `u * m * v = d` with `u`, `v` unimodular and `d`
/// diagonal satisfying the divisibility chain `d1 | d2 | ...`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Smith {
    pub fn diagonal_entry(&self, i: usize) -> &BigInt {
        self.d.get(i, i)
    }
}

struct SmithWork {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SmithWork {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.u] {
            for c in 0..m.cols {
                m.data.swap(i * m.cols + c, j * m.cols + c);
            }
        }
        let m = &mut self.u_inv;
        for r in 0..m.rows {
            m.data.swap(r * m.cols + i, r * m.cols + j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for r in 0..m.rows {
                m.data.swap(r * m.cols + i, r * m.cols + j);
            }
        }
        let m = &mut self.v_inv;
        for c in 0..m.cols {
            m.data.swap(i * m.cols + c, j * m.cols + c);
        }
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.u] {
            for col in 0..m.cols {
                let x = m.get(j, col).clone();
                if !x.is_zero() {
                    let cur = m.get(i, col) + c * x;
                    m.set(i, col, cur);
                }
            }
        }
        // inverse tracking: col_j -= c * col_i
        let m = &mut self.u_inv;
        for row in 0..m.rows {
            let x = m.get(row, i).clone();
            if !x.is_zero() {
                let cur = m.get(row, j) - c * x;
                m.set(row, j, cur);
            }
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for row in 0..m.rows {
                let x = m.get(row, j).clone();
                if !x.is_zero() {
                    let cur = m.get(row, i) + c * x;
                    m.set(row, i, cur);
                }
            }
        }
        // inverse tracking: row_j -= c * row_i
        let m = &mut self.v_inv;
        for col in 0..m.cols {
            let x = m.get(i, col).clone();
            if !x.is_zero() {
                let cur = m.get(j, col) - c * x;
                m.set(j, col, cur);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for col in 0..m.cols {
                let x = -m.get(i, col).clone();
                m.set(i, col, x);
            }
        }
        let m = &mut self.u_inv;
        for row in 0..m.rows {
            let x = -m.get(row, i).clone();
            m.set(row, i, x);
        }
    }
}

/// Smith normal form. Total on all integer matrices, including empty ones.
/// Pivot choice is the smallest nonzero magnitude in the working submatrix.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let rows = m.rows();
    let cols = m.cols();
    let mut w = SmithWork {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let bound = rows.min(cols);
    let mut rank = 0;
    'outer: for k in 0..bound {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    let x = w.a.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    match &pivot {
                        Some((pi, pj)) if w.a.get(*pi, *pj).abs() <= x.abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'outer;
            };
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);

            let mut dirty = false;
            for i in k + 1..rows {
                if !w.a.get(i, k).is_zero() {
                    let q = -(w.a.get(i, k) / w.a.get(k, k));
                    w.add_row(i, k, &q);
                    if !w.a.get(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..cols {
                if !w.a.get(k, j).is_zero() {
                    let q = -(w.a.get(k, j) / w.a.get(k, k));
                    w.add_col(j, k, &q);
                    if !w.a.get(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide every remaining entry for the divisibility chain
            let mut offending = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(w.a.get(i, j) % w.a.get(k, k)).is_zero() {
                        offending = Some(i);
                        break 'scan;
                    }
                }
            }
            match offending {
                Some(i) => {
                    w.add_row(k, i, &BigInt::one());
                }
                None => {
                    rank += 1;
                    break;
                }
            }
        }
    }
    for k in 0..bound {
        if w.a.get(k, k).is_negative() {
            w.negate_row(k);
        }
    }
    Smith {
        u: w.u,
        d: w.a,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
        rank,
    }
}

/// Rank of the matrix over the rationals (number of nonzero invariant factors).
pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank
}

/// Basis of the integer kernel `{x : m x = 0}` as columns. The kernel of a map
/// into a free module is saturated, and these columns are a basis of it.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    if m.rows() == 0 {
        return IntMatrix::identity(m.cols());
    }
    let s = smith_normal_form(m);
    let mut cols = Vec::new();
    for j in 0..m.cols() {
        let zero_col = j >= m.rows().min(m.cols()) || s.d.get(j, j).is_zero();
        if zero_col {
            cols.push(s.v.column(j));
        }
    }
    IntMatrix::from_columns(m.cols(), &cols)
}

/// One integral solution of `m x = b`, or `None` when none exists.
pub fn solve(s: &Smith, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let rows = s.d.rows();
    let cols = s.d.cols();
    assert_eq!(b.len(), rows, "rhs length mismatch");
    let w = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); cols];
    for i in 0..rows {
        if i < cols {
            let d = s.d.get(i, i);
            if d.is_zero() {
                if !w[i].is_zero() {
                    return None;
                }
            } else {
                let (q, r) = w[i].div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
        } else if !w[i].is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Basis of the saturation of the column lattice of `m`: the set of ambient
/// vectors some nonzero multiple of which lies in the lattice.
pub fn saturation_basis(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let cols: Vec<Vec<BigInt>> = (0..s.rank).map(|i| s.u_inv.column(i)).collect();
    IntMatrix::from_columns(m.rows(), &cols)
}

/// Canonical column Hermite normal form of the column lattice of `m`.
/// Two matrices span the same lattice iff their canonical forms are equal.
pub fn hnf_columns(m: &IntMatrix) -> IntMatrix {
    let rows = m.rows();
    let mut a = m.clone();
    let cols = a.cols();
    let mut r = 0usize;
    for row in 0..rows {
        if r == cols {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in r..cols {
                let x = a.get(row, j);
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if a.get(row, b).abs() <= x.abs() => {}
                    _ => best = Some(j),
                }
            }
            let Some(b) = best else {
                break;
            };
            // swap best into position r
            if b != r {
                for i in 0..rows {
                    let x = a.get(i, r).clone();
                    let y = a.get(i, b).clone();
                    a.set(i, r, y);
                    a.set(i, b, x);
                }
            }
            let mut dirty = false;
            for j in r + 1..cols {
                if !a.get(row, j).is_zero() {
                    let q = a.get(row, j) / a.get(row, r);
                    for i in 0..rows {
                        let x = a.get(i, j) - &q * a.get(i, r);
                        a.set(i, j, x);
                    }
                    if !a.get(row, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if a.get(row, r).is_zero() {
            continue;
        }
        if a.get(row, r).is_negative() {
            for i in 0..rows {
                let x = -a.get(i, r).clone();
                a.set(i, r, x);
            }
        }
        // reduce earlier columns at this pivot row into [0, pivot)
        for j in 0..r {
            let q = a.get(row, j).div_floor(a.get(row, r));
            if !q.is_zero() {
                for i in 0..rows {
                    let x = a.get(i, j) - &q * a.get(i, r);
                    a.set(i, j, x);
                }
            }
        }
        r += 1;
    }
    let cols: Vec<Vec<BigInt>> = (0..r).map(|j| a.column(j)).collect();
    IntMatrix::from_columns(rows, &cols)
}

/// Whether the column lattices of `a` and `b` are equal.
pub fn same_column_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    assert_eq!(a.rows(), b.rows(), "ambient dimension mismatch");
    hnf_columns(a) == hnf_columns(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) -> Smith {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "u*m*v != d");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        let bound = m.rows().min(m.cols());
        for i in 0..bound {
            for j in 0..bound {
                if i != j {
                    assert!(s.d.get(i, j).is_zero(), "off-diagonal nonzero");
                }
            }
        }
        for i in 1..bound {
            let prev = s.d.get(i - 1, i - 1);
            let cur = s.d.get(i, i);
            if prev.is_zero() {
                assert!(cur.is_zero(), "zero before nonzero on diagonal");
            } else {
                assert!((cur % prev).is_zero(), "divisibility chain broken");
            }
        }
        s
    }

    #[test]
    fn identity_2x2() {
        let s = check_snf(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn snf_2468() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = check_snf(&m);
        assert_eq!(*s.diagonal_entry(0), BigInt::from(2));
        assert_eq!(*s.diagonal_entry(1), BigInt::from(4));
    }

    #[test]
    fn zero_3x2() {
        let m = IntMatrix::zero(3, 2);
        let s = check_snf(&m);
        assert!(s.d.is_zero());
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn empty_matrices() {
        check_snf(&IntMatrix::zero(0, 3));
        check_snf(&IntMatrix::zero(3, 0));
        check_snf(&IntMatrix::zero(0, 0));
    }

    #[test]
    fn divisibility_fixup() {
        let m = IntMatrix::from_rows(&[vec![6, 0], vec![0, 4]]);
        let s = check_snf(&m);
        assert_eq!(*s.diagonal_entry(0), BigInt::from(2));
        assert_eq!(*s.diagonal_entry(1), BigInt::from(12));
    }

    #[test]
    fn kernel_of_projection() {
        let m = IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn kernel_of_empty_rows() {
        let m = IntMatrix::zero(0, 4);
        assert_eq!(kernel_basis(&m), IntMatrix::identity(4));
    }

    #[test]
    fn solve_diagonal() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&m);
        let b = vec![BigInt::from(4), BigInt::from(9)];
        let x = solve(&s, &b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(solve(&s, &[BigInt::from(1), BigInt::from(0)]).is_none());
    }

    #[test]
    fn hnf_detects_equal_lattices() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        let b = IntMatrix::from_rows(&[vec![2, 2], vec![0, 2]]);
        assert!(same_column_lattice(&a, &b));
        let c = IntMatrix::from_rows(&[vec![2, 1], vec![0, 2]]);
        assert!(!same_column_lattice(&a, &c));
    }

    #[test]
    fn saturation_of_doubled_lattice() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]);
        let s = saturation_basis(&m);
        assert!(same_column_lattice(&s, &IntMatrix::identity(2)));
    }

    #[test]
    fn det_small() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.det(), BigInt::from(-2));
        let m = IntMatrix::from_rows(&[vec![2, 0, 1], vec![1, 1, 0], vec![0, 3, 1]]);
        assert_eq!(m.det(), BigInt::from(5));
        assert_eq!(IntMatrix::zero(0, 0).det(), BigInt::one());
    }
}
