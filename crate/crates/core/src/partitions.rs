//! Set partitions and their arc diagrams.
//!
//! An arc `(i, j)` joins consecutive elements `i < j` of a block. Reading arcs
//! as cells (row `i`, column `j`) turns a partition of `{1..m}` into a strictly
//! upper-triangular rook of size `m`, and back.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rook::{Rook, MAX_SIZE};

/// A partition of `{1, ..., n}` in standard form: blocks sorted internally
/// and ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 || e > n {
                    return Err(Error::OutOfRange { value: e, n });
                }
                if seen[e] {
                    return Err(Error::Duplicate(e));
                }
                seen[e] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(Error::Invalid(format!("element {missing} is in no block")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    pub fn singletons(n: usize) -> Result<Self> {
        Self::new(n, (1..=n).map(|e| vec![e]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Consecutive pairs within each block, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<_> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    /// Restricted growth string: entry `i` is the 0-based index of the block
    /// holding `i + 1`.
    pub fn growth_string(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (k, block) in self.blocks.iter().enumerate() {
            for &e in block {
                out[e - 1] = k;
            }
        }
        out
    }

    fn from_growth_string(rgs: &[usize]) -> Self {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        Self {
            n: rgs.len(),
            blocks,
        }
    }
}

/// Blocks joined by `|`; elements are concatenated when `n <= 9` and
/// comma-separated otherwise.
pub fn partition_standard_string(p: &SetPartition) -> String {
    let sep = if p.n <= 9 { "" } else { "," };
    p.blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(sep)
        })
        .collect::<Vec<_>>()
        .join("|")
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&partition_standard_string(self))
    }
}

/// Parses the standard string form. Without commas each digit is one element,
/// unless that reading is invalid and every block is a single number.
pub fn parse_partition(text: &str) -> Result<SetPartition> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Malformed(text.into()));
    }
    let tokens: Vec<&str> = text.split('|').map(str::trim).collect();
    let number = |s: &str| -> Result<usize> {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::Malformed(text.into()))
    };
    let build = |blocks: Vec<Vec<usize>>| -> Result<SetPartition> {
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::new(n, blocks)
    };
    if text.contains(',') {
        let blocks = tokens
            .iter()
            .map(|t| t.split(',').map(number).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        return build(blocks);
    }
    let digits = tokens
        .iter()
        .map(|t| {
            if t.is_empty() {
                return Err(Error::Malformed(text.into()));
            }
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Malformed(text.into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    match build(digits) {
        Ok(p) => Ok(p),
        Err(first) => {
            let singles = tokens
                .iter()
                .map(|t| number(t).map(|e| vec![e]))
                .collect::<Result<Vec<_>>>();
            match singles.and_then(build) {
                Ok(p) => Ok(p),
                Err(_) => Err(first),
            }
        }
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// All partitions of `{1..m}` in lexicographic order of growth strings.
pub fn enum_partitions(m: usize) -> Result<Vec<SetPartition>> {
    if m == 0 {
        return Err(Error::EmptySize);
    }
    const BOUND: usize = 12;
    if m > BOUND {
        return Err(Error::Resource {
            what: "set partitions",
            size: m,
            bound: BOUND,
        });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; m];
    // prefix maxima, so each position may open at most one new block
    let mut maxes = vec![0usize; m];
    loop {
        out.push(SetPartition::from_growth_string(&rgs));
        let Some(i) = (1..m).rev().find(|&i| rgs[i] <= maxes[i - 1]) else {
            return Ok(out);
        };
        rgs[i] += 1;
        maxes[i] = maxes[i - 1].max(rgs[i]);
        for j in i + 1..m {
            rgs[j] = 0;
            maxes[j] = maxes[i];
        }
    }
}

/// Reads the arcs of a strictly upper-triangular rook as a set partition.
pub fn rook_to_partition(x: &Rook) -> Result<SetPartition> {
    if !x.is_strictly_upper_triangular() {
        return Err(Error::Invalid(format!(
            "{x} is not strictly upper triangular"
        )));
    }
    let m = x.n();
    let mut next = vec![0usize; m + 1];
    for (r, c) in x.cells() {
        next[r] = c;
    }
    let blocks = (1..=m)
        .filter(|&j| x.get(j) == 0)
        .map(|start| {
            let mut block = vec![start];
            let mut e = start;
            while next[e] != 0 {
                e = next[e];
                block.push(e);
            }
            block
        })
        .collect();
    SetPartition::new(m, blocks)
}

/// Places a cell at (row `i`, column `j`) for every arc `(i, j)`.
pub fn partition_to_rook(p: &SetPartition) -> Result<Rook> {
    let mut v = vec![0usize; p.n];
    for (i, j) in p.arcs() {
        v[j - 1] = i;
    }
    Rook::new(v)
}

/// Shifts every cell of an upper-triangular rook one column right, giving a
/// nilpotent rook one size up.
pub fn embed_nilpotent(a: &Rook) -> Result<Rook> {
    if !a.is_upper_triangular() {
        return Err(Error::Invalid(format!("{a} is not upper triangular")));
    }
    if a.n() + 1 > MAX_SIZE {
        return Err(Error::Resource {
            what: "rook size",
            size: a.n() + 1,
            bound: MAX_SIZE,
        });
    }
    Rook::new(std::iter::once(0).chain(a.entries()))
}

/// Inverse of [`embed_nilpotent`]: drops the first column and the last row.
pub fn restrict_nilpotent(x: &Rook) -> Result<Rook> {
    if !x.is_strictly_upper_triangular() || x.n() < 2 {
        return Err(Error::Invalid(format!(
            "{x} is not a strictly upper-triangular rook of size at least 2"
        )));
    }
    Rook::new(x.entries().skip(1))
}
