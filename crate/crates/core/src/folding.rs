//! Folding symplectic rooks in half and unfolding them again.
//!
//! `F_TB` reflects the top half of the rows onto the bottom half, `F_LR` does
//! the same with the left half of the columns. Cell `(r, c)` with `r <= h`
//! lands on row `h + 1 - r`; a cell below the fold keeps its offset `r - h`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rook::Rook;
use crate::symplectic::{enum_family, Family, FamilySpec};

pub use crate::counting::preimage_count;

/// Rectangular 0/1 matrix with at most one cell per row and per column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<(usize, usize)>,
}

impl PartialMatrix {
    /// Cells are 1-based `(row, col)` pairs.
    pub fn new(rows: usize, cols: usize, mut cells: Vec<(usize, usize)>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptySize);
        }
        cells.sort_unstable();
        for &(r, c) in &cells {
            if r == 0 || r > rows || c == 0 || c > cols {
                return Err(Error::Invalid(format!(
                    "cell ({r},{c}) outside a {rows}x{cols} matrix"
                )));
            }
        }
        check_no_collision(&cells)?;
        Ok(Self { rows, cols, cells })
    }

    pub fn from_rook(x: &Rook) -> Self {
        let mut cells: Vec<_> = x.cells().collect();
        cells.sort_unstable();
        Self {
            rows: x.n(),
            cols: x.n(),
            cells,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Sorted by row, then column.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// Converts a square partial matrix back to a rook.
    pub fn to_rook(&self) -> Result<Rook> {
        if self.rows != self.cols {
            return Err(Error::Invalid(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        let mut v = vec![0usize; self.cols];
        for &(r, c) in &self.cells {
            v[c - 1] = r;
        }
        Rook::new(v)
    }

    /// `F_TB`: fold the rows top to bottom.
    pub fn fold_tb(&self) -> Result<Self> {
        if !self.rows.is_multiple_of(2) {
            return Err(Error::OddSize(self.rows));
        }
        let h = self.rows / 2;
        let cells = self
            .cells
            .iter()
            .map(|&(r, c)| (reflect(r, h), c))
            .collect();
        Self::folded(h, self.cols, cells)
    }

    /// `F_LR`: fold the columns left to right.
    pub fn fold_lr(&self) -> Result<Self> {
        if !self.cols.is_multiple_of(2) {
            return Err(Error::OddSize(self.cols));
        }
        let w = self.cols / 2;
        let cells = self
            .cells
            .iter()
            .map(|&(r, c)| (r, reflect(c, w)))
            .collect();
        Self::folded(self.rows, w, cells)
    }

    pub fn fold(&self, direction: Direction) -> Result<Self> {
        match direction {
            Direction::TopBottom => self.fold_tb(),
            Direction::LeftRight => self.fold_lr(),
            Direction::Both => self.fold_tb()?.fold_lr(),
        }
    }

    fn folded(rows: usize, cols: usize, mut cells: Vec<(usize, usize)>) -> Result<Self> {
        cells.sort_unstable();
        check_no_collision(&cells)?;
        Ok(Self { rows, cols, cells })
    }
}

fn reflect(i: usize, half: usize) -> usize {
    if i > half {
        i - half
    } else {
        half + 1 - i
    }
}

fn check_no_collision(cells: &[(usize, usize)]) -> Result<()> {
    let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
    let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
    rows.sort_unstable();
    cols.sort_unstable();
    if rows.windows(2).any(|w| w[0] == w[1]) || cols.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Invalid("folded cells collide".into()));
    }
    Ok(())
}

impl fmt::Display for PartialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {};", self.rows, self.cols)?;
        for (r, c) in &self.cells {
            write!(f, " {r},{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    TopBottom,
    LeftRight,
    Both,
}

/// The folding map `F = F_LR F_TB` on a square rook of even size.
pub fn fold_rook(x: &Rook) -> Result<Rook> {
    PartialMatrix::from_rook(x).fold(Direction::Both)?.to_rook()
}

/// All `x` in the symplectic Borel submonoid of size `2l` with `F(x) = a`,
/// found by filtering the whole family.
pub fn unfold_preimages(a: &Rook) -> Result<Vec<Rook>> {
    let n = 2 * a.n();
    let candidates = enum_family(&FamilySpec::new(n, Family::BorelSp, Some(a.rank()))?)?;
    Ok(candidates
        .into_iter()
        .filter(|x| fold_rook(x).is_ok_and(|y| y == *a))
        .collect())
}

/// The same preimages built cell by cell: each cell of `a` unfolds to the
/// upper-triangular choices among its four reflections.
pub fn unfold_constructive(a: &Rook) -> Vec<Rook> {
    let l = a.n();
    let options: Vec<Vec<(usize, usize)>> = a
        .cells()
        .map(|(r, c)| {
            let rows = [l + 1 - r, l + r];
            let cols = [l + 1 - c, l + c];
            rows.iter()
                .flat_map(|&rr| cols.iter().map(move |&cc| (rr, cc)))
                .filter(|&(rr, cc)| rr <= cc)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; options.len()];
    loop {
        let mut v = vec![0usize; 2 * l];
        for (opts, &k) in options.iter().zip(&choice) {
            let (r, c) = opts[k];
            v[c - 1] = r;
        }
        out.push(Rook::new(v).expect("distinct reflected rows and columns"));
        // odometer increment
        let mut i = 0;
        loop {
            if i == options.len() {
                out.sort();
                return out;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Cross-checks the filtered and constructive unfoldings of `a`, returning
/// the common preimage count.
pub fn checked_preimage_count(a: &Rook) -> Result<BigUint> {
    let filtered = unfold_preimages(a)?;
    let built = unfold_constructive(a);
    if filtered != built {
        return Err(Error::Internal(format!(
            "unfoldings of {a} disagree: {} vs {}",
            filtered.len(),
            built.len()
        )));
    }
    Ok(BigUint::from(filtered.len()))
}
