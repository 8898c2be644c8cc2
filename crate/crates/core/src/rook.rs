//! Rooks (partial permutation matrices) in one-line notation.
//!
//! A rook of size `n` is stored as the sequence `(x_1, ..., x_n)` where `x_j`
//! is the row of the nonzero cell in column `j`, or `0` when column `j` is
//! empty. Products, powers and decompositions all work on this form directly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest size representable by the compact one-line storage.
pub const MAX_SIZE: usize = u8::MAX as usize;

/// A partial injection on `{1, ..., n}`, column-indexed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rook {
    one_line: Vec<u8>,
}

impl Rook {
    /// Builds a rook from its one-line sequence, checking range and injectivity.
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let entries: Vec<usize> = entries.into_iter().collect();
        let n = entries.len();
        if n == 0 {
            return Err(Error::EmptySize);
        }
        if n > MAX_SIZE {
            return Err(Error::Resource {
                what: "rook size",
                size: n,
                bound: MAX_SIZE,
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v > n {
                return Err(Error::OutOfRange { value: v, n });
            }
            if v != 0 {
                if seen[v] {
                    return Err(Error::Duplicate(v));
                }
                seen[v] = true;
            }
        }
        Ok(Self {
            one_line: entries.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub(crate) fn from_raw(one_line: Vec<u8>) -> Self {
        debug_assert!(Self::new(one_line.iter().map(|&v| v as usize)).is_ok());
        Self { one_line }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            one_line: vec![0; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            one_line: (1..=n).map(|v| v as u8).collect(),
        }
    }

    /// Diagonal idempotent with `x_j = j` exactly for `j` in `support`.
    pub fn diagonal_idempotent<I>(n: usize, support: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        let mut one_line = vec![0u8; n];
        for j in support {
            if j == 0 || j > n {
                return Err(Error::OutOfRange { value: j, n });
            }
            one_line[j - 1] = j as u8;
        }
        Ok(Self { one_line })
    }

    /// The idempotent `e_k = E_11 + ... + E_kk`.
    pub fn leading_idempotent(n: usize, k: usize) -> Self {
        let mut one_line = vec![0u8; n];
        for (j, v) in one_line.iter_mut().take(k).enumerate() {
            *v = (j + 1) as u8;
        }
        Self { one_line }
    }

    /// `id(k) = (0, ..., 0, 1, 2, ..., k)`, rows `1..k` in the last `k` columns.
    pub fn trailing_identity(n: usize, k: usize) -> Self {
        let k = k.min(n);
        let mut one_line = vec![0u8; n];
        for i in 1..=k {
            one_line[n - k + i - 1] = i as u8;
        }
        Self { one_line }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn raw(&self) -> &[u8] {
        &self.one_line
    }

    /// Entry `x_j` for a 1-based column `j`.
    pub fn get(&self, j: usize) -> usize {
        self.one_line[j - 1] as usize
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.one_line.iter().map(|&v| v as usize)
    }

    /// Nonzero cells as 1-based `(row, col)` pairs, ordered by column.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.one_line
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(j, &v)| (v as usize, j + 1))
    }

    pub fn rank(&self) -> usize {
        self.one_line.iter().filter(|&&v| v != 0).count()
    }

    /// Columns holding a nonzero cell, increasing.
    pub fn domain(&self) -> Vec<usize> {
        self.cells().map(|(_, c)| c).collect()
    }

    /// Rows holding a nonzero cell, increasing.
    pub fn range(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.cells().map(|(r, _)| r).collect();
        rows.sort_unstable();
        rows
    }

    pub fn is_zero(&self) -> bool {
        self.one_line.iter().all(|&v| v == 0)
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.n()
    }

    pub fn is_idempotent_diagonal(&self) -> bool {
        self.one_line
            .iter()
            .enumerate()
            .all(|(j, &v)| v == 0 || v as usize == j + 1)
    }

    /// All nonzero cells on or above the main diagonal.
    pub fn is_upper_triangular(&self) -> bool {
        self.cells().all(|(r, c)| r <= c)
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        self.cells().all(|(r, c)| r < c)
    }

    /// Matrix product `self * other`: `(xy)_j = x_{y_j}`.
    pub fn multiply(&self, other: &Rook) -> Result<Rook> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Rook) -> Rook {
        let one_line = other
            .one_line
            .iter()
            .map(|&y| {
                if y == 0 {
                    0
                } else {
                    self.one_line[y as usize - 1]
                }
            })
            .collect();
        Rook { one_line }
    }

    /// Transpose, which is the semigroup inverse of a partial injection.
    pub fn transpose(&self) -> Rook {
        let mut one_line = vec![0u8; self.n()];
        for (r, c) in self.cells() {
            one_line[r - 1] = c as u8;
        }
        Rook { one_line }
    }

    pub fn pow(&self, m: u32) -> Rook {
        let mut acc = Rook::identity(self.n());
        for _ in 0..m {
            acc = self.mul_unchecked(&acc);
        }
        acc
    }

    /// True iff some power of the rook vanishes.
    ///
    /// Follows each column along `j -> x_j`; the rook is nilpotent exactly
    /// when no such walk closes into a cycle.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.n();
        // 0 = unvisited, 1 = on current walk, 2 = finished
        let mut state = vec![0u8; n + 1];
        for start in 1..=n {
            if state[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut j = start;
            loop {
                if j == 0 || state[j] == 2 {
                    break;
                }
                if state[j] == 1 {
                    return false;
                }
                state[j] = 1;
                path.push(j);
                j = self.get(j);
            }
            for p in path {
                state[p] = 2;
            }
        }
        true
    }

    /// Splits into strictly lower, diagonal and strictly upper parts.
    pub fn triangular_decompose(&self) -> TriangularParts {
        let n = self.n();
        let mut lower = vec![0u8; n];
        let mut diag = vec![0u8; n];
        let mut upper = vec![0u8; n];
        for (j, &v) in self.one_line.iter().enumerate() {
            let col = j + 1;
            match (v as usize).cmp(&col) {
                _ if v == 0 => {}
                std::cmp::Ordering::Greater => lower[j] = v,
                std::cmp::Ordering::Equal => diag[j] = v,
                std::cmp::Ordering::Less => upper[j] = v,
            }
        }
        TriangularParts {
            lower: Rook { one_line: lower },
            diag: Rook { one_line: diag },
            upper: Rook { one_line: upper },
        }
    }

    /// The 0/1 matrix of the rook over the rationals.
    pub fn to_matrix(&self) -> RationalMatrix {
        let n = self.n();
        let mut m = RationalMatrix::zero(n);
        for (r, c) in self.cells() {
            m.entries[r - 1][c - 1] = BigRational::one();
        }
        m
    }
}

/// Parses `"(x1,x2,...,xn)"` and checks that it has exactly `n` entries.
pub fn parse_one_line(text: &str, n: usize) -> Result<Rook> {
    let rook: Rook = text.parse()?;
    if rook.n() != n {
        return Err(Error::Length {
            expected: n,
            found: rook.n(),
        });
    }
    Ok(rook)
}

impl FromStr for Rook {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Malformed(text.to_string()))?;
        let entries = inner
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Malformed(text.to_string()))?;
        Rook::new(entries)
    }
}

impl fmt::Display for Rook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Rook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Strictly lower, diagonal and strictly upper parts of a rook.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularParts {
    pub lower: Rook,
    pub diag: Rook,
    pub upper: Rook,
}

impl TriangularParts {
    /// `(rank lower, rank diag, rank upper)`.
    pub fn ranks(&self) -> (usize, usize, usize) {
        (self.lower.rank(), self.diag.rank(), self.upper.rank())
    }

    /// Entrywise sum of the three parts.
    pub fn recombine(&self) -> Rook {
        let one_line = (0..self.lower.n())
            .map(|j| self.lower.one_line[j] + self.diag.one_line[j] + self.upper.one_line[j])
            .collect();
        Rook { one_line }
    }
}

/// Square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            entries: vec![vec![BigRational::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i][i] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptySize);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch(n, bad.len()));
        }
        Ok(Self { entries: rows })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| BigRational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row][col]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
            .collect();
        Self { entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n();
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|v| v * c).collect())
                .collect(),
        }
    }

    /// The skew form `J = [[0, J_l], [-J_l, 0]]` with `J_l` the antidiagonal
    /// permutation matrix of size `l = n/2`.
    pub fn symplectic_form(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        if !n.is_multiple_of(2) {
            return Err(Error::OddSize(n));
        }
        let l = n / 2;
        let mut m = Self::zero(n);
        for i in 0..l {
            m.entries[i][n - 1 - i] = BigRational::one();
            m.entries[l + i][l - 1 - i] = -BigRational::one();
        }
        Ok(m)
    }
}

/// Returns `c` when `A^T J A = A J A^T = c J`, and `None` otherwise.
pub fn msp_membership(a: &RationalMatrix) -> Result<Option<BigRational>> {
    let n = a.n();
    let j = RationalMatrix::symplectic_form(n)?;
    let at = a.transpose();
    let left = at.mul(&j).mul(a);
    let right = a.mul(&j).mul(&at);
    // J has a 1 in the top-right corner, so that cell pins down c.
    let c = left.get(0, n - 1).clone();
    let target = j.scale(&c);
    Ok((left == target && right == target).then_some(c))
}
