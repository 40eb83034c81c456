//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers. The central
//! routine is the Smith normal form, computed with elementary row and column
//! operations that are replayed on identity matrices to record `U` and `V`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix stored in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(IntegerMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.entries[i * size + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone().into());
        }
        m
    }

    /// Builds a matrix from machine-integer rows. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let entries = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<BigInt>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
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

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, col).clone()).collect()
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes for product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product. Panics on a length mismatch.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "incompatible vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let s = &self.entries[source * self.cols + j];
            if !s.is_zero() {
                let delta = s * factor;
                self.entries[target * self.cols + j] += delta;
            }
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let s = &self.entries[i * self.cols + source];
            if !s.is_zero() {
                let delta = s * factor;
                self.entries[i * self.cols + target] += delta;
            }
        }
    }

    fn negate_row(&mut self, row: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[row * self.cols + j];
            *e = -std::mem::take(e);
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `U * M * V = D` with `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfDecomposition {
    /// The full diagonal of `D`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_r`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().take_while(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// The working matrix plus both transforms, updated in lockstep by every
/// elementary operation.
struct Reducer {
    a: IntegerMatrix,
    u: IntegerMatrix,
    v: IntegerMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.a.add_row_multiple(target, source, factor);
        self.u.add_row_multiple(target, source, factor);
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.a.add_col_multiple(target, source, factor);
        self.v.add_col_multiple(target, source, factor);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
    }

    /// Pivot for step `t`: a nonzero entry of least magnitude in the trailing
    /// submatrix. Among those, the one with the fewest other nonzeros in its
    /// row and column wins (least fill-in), then the lowest `(row, col)`.
    fn choose_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let (rows, cols) = (self.a.rows, self.a.cols);
        let mut least: Option<&BigUint> = None;
        let mut row_nnz = vec![0usize; rows];
        let mut col_nnz = vec![0usize; cols];
        for i in t..rows {
            for j in t..cols {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                row_nnz[i] += 1;
                col_nnz[j] += 1;
                if least.is_none_or(|m| x.magnitude() < m) {
                    least = Some(x.magnitude());
                }
            }
        }
        let least = least?;
        let mut best: Option<((usize, usize), usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if self.a.get(i, j).magnitude() != least {
                    continue;
                }
                let fill = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                if best.is_none_or(|(_, f)| fill < f) {
                    best = Some(((i, j), fill));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    /// Clears row and column `t` by division with remainder against the
    /// pivot. Returns false if some remainder stayed nonzero.
    fn clear_cross(&mut self, t: usize) -> bool {
        let pivot = self.a.get(t, t).clone();
        let mut clean = true;
        for i in t + 1..self.a.rows {
            let x = self.a.get(i, t);
            if x.is_zero() {
                continue;
            }
            let q = x.div_floor(&pivot);
            self.add_row_multiple(i, t, &-q);
            if !self.a.get(i, t).is_zero() {
                clean = false;
            }
        }
        for j in t + 1..self.a.cols {
            let x = self.a.get(t, j);
            if x.is_zero() {
                continue;
            }
            let q = x.div_floor(&pivot);
            self.add_col_multiple(j, t, &-q);
            if !self.a.get(t, j).is_zero() {
                clean = false;
            }
        }
        clean
    }

    /// First row below `t` holding an entry not divisible by the pivot.
    fn indivisible_row(&self, t: usize) -> Option<usize> {
        let pivot = self.a.get(t, t);
        (t + 1..self.a.rows).find(|&i| {
            (t + 1..self.a.cols).any(|j| !self.a.get(i, j).is_multiple_of(pivot))
        })
    }
}

/// Smith normal form by gcd reduction, pivoting on a least-magnitude entry
/// with the least fill-in.
///
/// The output is deterministic for a fixed input and the diagonal of `D` is
/// nonnegative with `d_1 | d_2 | ... | d_r` followed by zeros.
pub fn snf(m: &IntegerMatrix) -> Result<SnfDecomposition> {
    if m.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let (rows, cols) = (m.rows, m.cols);
    let mut r = Reducer {
        a: m.clone(),
        u: IntegerMatrix::identity(rows),
        v: IntegerMatrix::identity(cols),
    };

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = r.choose_pivot(t) else {
            break;
        };
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        loop {
            if !r.clear_cross(t) {
                // A remainder is now smaller than the pivot; pivot on it.
                let (pi, pj) = r.choose_pivot(t).expect("nonzero remainder exists");
                r.swap_rows(t, pi);
                r.swap_cols(t, pj);
                continue;
            }
            match r.indivisible_row(t) {
                Some(i) => r.add_row_multiple(t, i, &BigInt::one()),
                None => break,
            }
        }
        if r.a.get(t, t).is_negative() {
            r.negate_row(t);
        }
    }

    Ok(SnfDecomposition {
        u: r.u,
        d: r.a,
        v: r.v,
    })
}

/// Product of the invariant factors of a square relation matrix, i.e. the
/// index `[Z^k : M Z^k]`. Fails when the index is infinite.
pub fn abs_det_of_full_rank_kernel(decomposition: &SnfDecomposition) -> Result<BigUint> {
    let diag = decomposition.diagonal();
    let dim = decomposition.d.rows();
    if diag.len() < dim || diag.iter().any(Zero::is_zero) {
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        return Err(Error::RankDeficient { rank, dim });
    }
    Ok(diag.iter().map(|d| d.magnitude().clone()).product())
}

/// Exact binomial coefficient, zero when `k > m`.
pub fn binomial(m: u64, k: u64) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (m - i) is divisible by (i + 1) at every step
        acc *= m - i;
        acc /= i + 1;
    }
    acc
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Inverse of `a` modulo `n` when it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(n));
    if !e.gcd.is_one() {
        return None;
    }
    let x = e.x.mod_floor(&BigInt::from(n));
    Some(u64::try_from(x).expect("residue fits"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diag_of(m: &IntegerMatrix) -> Vec<i64> {
        let d = snf(m).unwrap();
        d.diagonal().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    fn unimodular(m: &IntegerMatrix) -> bool {
        let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        crate::oracle::cofactor_det(&rows).magnitude().is_one()
    }

    fn check_decomposition(m: &IntegerMatrix, d: &SnfDecomposition) {
        assert_eq!(d.u.mul(m).mul(&d.v), d.d);
        assert!(unimodular(&d.u) && unimodular(&d.v));
        assert!(d.d.is_diagonal());
        let diag = d.diagonal();
        let r = d.rank();
        assert!(diag[r..].iter().all(Zero::is_zero));
        for w in diag[..r].windows(2) {
            assert!(w[0].is_positive());
            assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn identity_is_fixed() {
        assert_eq!(diag_of(&IntegerMatrix::identity(2)), vec![1, 1]);
    }

    #[test]
    fn diag_two_three() {
        assert_eq!(diag_of(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]])), vec![1, 6]);
    }

    #[test]
    fn two_four_six_eight() {
        let m = IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let d = snf(&m).unwrap();
        check_decomposition(&m, &d);
        assert_eq!(diag_of(&m), vec![2, 4]);
    }

    #[test]
    fn rectangular_and_zero() {
        let m = IntegerMatrix::from_rows(&[vec![4, 6, 10]]);
        let d = snf(&m).unwrap();
        check_decomposition(&m, &d);
        assert_eq!(d.invariant_factors(), vec![BigInt::from(2)]);

        let z = IntegerMatrix::zeros(2, 3);
        let d = snf(&z).unwrap();
        check_decomposition(&z, &d);
        assert_eq!(d.rank(), 0);
    }

    #[test]
    fn empty_matrix_rejected() {
        assert_eq!(snf(&IntegerMatrix::zeros(0, 3)), Err(Error::EmptyMatrix));
    }

    #[test]
    fn deterministic() {
        let m = IntegerMatrix::from_rows(&[vec![3, -7, 2], vec![5, 1, -4], vec![0, 6, 9]]);
        assert_eq!(snf(&m).unwrap(), snf(&m).unwrap());
    }

    #[test]
    fn abs_det_examples() {
        let prod = |rows: &[Vec<i64>]| abs_det_of_full_rank_kernel(&snf(&IntegerMatrix::from_rows(rows)).unwrap());
        assert_eq!(prod(&[vec![1, 0], vec![0, 6]]).unwrap(), BigUint::from(6u32));
        assert_eq!(prod(&[vec![1, 0], vec![0, 1]]).unwrap(), BigUint::from(1u32));
        assert_eq!(prod(&[vec![2, 4], vec![6, 8]]).unwrap(), BigUint::from(8u32));
        assert!(matches!(
            prod(&[vec![1, 2], vec![2, 4]]),
            Err(Error::RankDeficient { rank: 1, dim: 2 })
        ));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(17, 0), BigUint::one());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(3, 4), BigUint::zero());
        // monomials of degree 3 in 3 variables
        assert_eq!(binomial(3 + 3 - 1, 3 - 1), BigUint::from(10u32));
        // past 64 bits
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn pascal_identity() {
        for m in 1..=30 {
            for k in 1..=m {
                assert_eq!(binomial(m, k), binomial(m - 1, k - 1) + binomial(m - 1, k));
            }
        }
    }

    #[test]
    fn inverse_mod() {
        assert_eq!(mod_inverse(2, 5), Some(3));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(1, 2), Some(1));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)
        })
    }

    proptest! {
        #[test]
        fn snf_invariants(rows in small_matrix()) {
            let m = IntegerMatrix::from_rows(&rows);
            let d = snf(&m).unwrap();
            check_decomposition(&m, &d);
        }

        #[test]
        fn square_product_matches_cofactor_det(n in 1usize..=4, seed in prop::collection::vec(-9i64..=9, 16)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
            let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let det = crate::oracle::cofactor_det(&big);
            let d = snf(&IntegerMatrix::from_rows(&rows)).unwrap();
            let prod: BigInt = d.diagonal().iter().product();
            prop_assert_eq!(prod, det.abs());
        }
    }
}
