//! The symmetric group `S_n` and the symplectic Weyl group `W_G` inside it.
//!
//! Groups are small at the sizes this crate handles, so every group is
//! materialized by breadth-first closure over its simple generators. Lengths
//! are Cayley-graph distances and the Bruhat order is built intrinsically from
//! the reflections of each group.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::rook::Rook;

/// Largest group the Bruhat table is built for.
pub const BRUHAT_TABLE_BOUND: usize = 5040;

/// A total bijection of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Rook);

impl Permutation {
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        Self::from_rook(Rook::new(entries)?)
    }

    pub fn from_rook(rook: Rook) -> Result<Self> {
        if !rook.is_permutation() {
            return Err(Error::Invalid(format!("{rook} is not a permutation")));
        }
        Ok(Self(rook))
    }

    pub fn identity(n: usize) -> Self {
        Self(Rook::identity(n))
    }

    /// The simple transposition `r_j = (j, j+1)`.
    pub fn simple_transposition(n: usize, j: usize) -> Self {
        assert!(j >= 1 && j < n, "r_{j} needs 1 <= j < {n}");
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(j - 1, j);
        Self(Rook::new(v).expect("transposition is a permutation"))
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn as_rook(&self) -> &Rook {
        &self.0
    }

    pub fn into_rook(self) -> Rook {
        self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0.get(i)
    }

    /// Product `self * other` as matrices, `(uv)(j) = u(v(j))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.mul_unchecked(&other.0))
    }

    pub fn inverse(&self) -> Permutation {
        Permutation(self.0.transpose())
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Rook::identity(self.n())
    }

    pub fn inversions(&self) -> usize {
        let v = self.0.raw();
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `θ(w) = (n+1-w_n, ..., n+1-w_1)`.
pub fn theta_perm(w: &Permutation) -> Result<Permutation> {
    theta_rook(w.as_rook()).map(Permutation)
}

/// The same involution on an arbitrary rook; zero columns stay zero.
pub fn theta_rook(x: &Rook) -> Result<Rook> {
    let n = x.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    let v: Vec<usize> = (1..=n)
        .rev()
        .map(|j| match x.get(j) {
            0 => 0,
            v => n + 1 - v,
        })
        .collect();
    Rook::new(v)
}

/// `[s_1, ..., s_l]` with `s_j = r_j r_{n-j}` for `j < l` and `s_l = r_l`.
pub fn symplectic_generators(l: usize) -> Vec<Permutation> {
    let n = 2 * l;
    (1..=l)
        .map(|j| {
            let rj = Permutation::simple_transposition(n, j);
            if j < l {
                rj.compose(&Permutation::simple_transposition(n, n - j))
            } else {
                rj
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Symmetric,
    Symplectic,
}

/// A finite Coxeter group given by simple generators, fully materialized.
pub struct GroupContext {
    kind: GroupKind,
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    lengths: Vec<usize>,
    bruhat: OnceLock<Vec<Vec<u64>>>,
}

impl fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupContext")
            .field("kind", &self.kind)
            .field("n", &self.n)
            .field("order", &self.elements.len())
            .finish()
    }
}

impl GroupContext {
    /// `S_n` with generators `r_1, ..., r_{n-1}`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        if n > 8 {
            return Err(Error::Resource {
                what: "symmetric group degree",
                size: n,
                bound: 8,
            });
        }
        let gens = (1..n)
            .map(|j| Permutation::simple_transposition(n, j))
            .collect();
        Ok(Self::build(GroupKind::Symmetric, n, gens))
    }

    /// `W_G` for `n = 2l` with generators `s_1, ..., s_l`.
    pub fn symplectic(l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::EmptySize);
        }
        if l > 4 {
            return Err(Error::Resource {
                what: "symplectic rank l",
                size: l,
                bound: 4,
            });
        }
        Ok(Self::build(
            GroupKind::Symplectic,
            2 * l,
            symplectic_generators(l),
        ))
    }

    /// The group whose Renner monoid has size-`n` rooks of the given kind.
    pub fn for_kind(kind: GroupKind, n: usize) -> Result<Self> {
        match kind {
            GroupKind::Symmetric => Self::symmetric(n),
            GroupKind::Symplectic if n.is_multiple_of(2) => Self::symplectic(n / 2),
            GroupKind::Symplectic => Err(Error::OddSize(n)),
        }
    }

    fn build(kind: GroupKind, n: usize, generators: Vec<Permutation>) -> Self {
        // Breadth-first search from the identity gives Cayley distances.
        let id = Permutation::identity(n);
        let mut dist: HashMap<Permutation, usize> = HashMap::new();
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for s in &generators {
                let ws = w.compose(s);
                if !dist.contains_key(&ws) {
                    dist.insert(ws.clone(), d + 1);
                    queue.push_back(ws);
                }
            }
        }
        let mut elements: Vec<Permutation> = dist.keys().cloned().collect();
        elements.sort();
        let lengths = elements.iter().map(|w| dist[w]).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Self {
            kind,
            n,
            generators,
            elements,
            index,
            lengths,
            bruhat: OnceLock::new(),
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// `"r_j"` or `"s_j"` for the 0-based generator index.
    pub fn generator_name(&self, i: usize) -> String {
        match self.kind {
            GroupKind::Symmetric => format!("r_{}", i + 1),
            GroupKind::Symplectic => format!("s_{}", i + 1),
        }
    }

    /// All group elements in lexicographic order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.index.contains_key(w)
    }

    fn checked_index(&self, w: &Permutation) -> Result<usize> {
        self.index_of(w)
            .ok_or_else(|| Error::Invalid(format!("{w} is not in the group")))
    }

    /// Minimal number of simple generators whose product is `w`.
    pub fn coxeter_length(&self, w: &Permutation) -> Result<usize> {
        let i = self.checked_index(w)?;
        Ok(match self.kind {
            GroupKind::Symmetric => w.inversions(),
            GroupKind::Symplectic => self.lengths[i],
        })
    }

    /// The subgroup `W_I` generated by the listed generator indices, sorted.
    pub fn generated_subgroup(&self, subset: &[usize]) -> Result<Vec<Permutation>> {
        let gens = self.subset_generators(subset)?;
        let id = Permutation::identity(self.n);
        let mut seen = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let ws = w.compose(s);
                if seen.insert(ws.clone()) {
                    queue.push_back(ws);
                }
            }
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    fn subset_generators(&self, subset: &[usize]) -> Result<Vec<Permutation>> {
        subset
            .iter()
            .map(|&i| {
                self.generators.get(i).cloned().ok_or_else(|| {
                    Error::Invalid(format!("generator index {i} is not in the group"))
                })
            })
            .collect()
    }

    /// The cross-section lattice: `e_0, ..., e_n` for `S_n`, and
    /// `e_0, ..., e_l, e_n` for `W_G`.
    pub fn cross_section(&self) -> Vec<Rook> {
        let top = match self.kind {
            GroupKind::Symmetric => self.n,
            GroupKind::Symplectic => self.n / 2,
        };
        let mut out: Vec<Rook> = (0..=top)
            .map(|k| Rook::leading_idempotent(self.n, k))
            .collect();
        if top != self.n {
            out.push(Rook::identity(self.n));
        }
        out
    }

    /// Centralizer and stabilizer data for a cross-section idempotent.
    pub fn parabolic_data(&self, e: &Rook) -> Result<ParabolicData> {
        if e.n() != self.n {
            return Err(Error::SizeMismatch(e.n(), self.n));
        }
        if !self.cross_section().contains(e) {
            return Err(Error::Invalid(format!(
                "{e} is not in the cross-section lattice"
            )));
        }
        let commutes =
            |w: &Permutation| w.as_rook().mul_unchecked(e) == e.mul_unchecked(w.as_rook());
        let fixes = |w: &Permutation| {
            w.as_rook().mul_unchecked(e) == *e && e.mul_unchecked(w.as_rook()) == *e
        };
        let commuting_generators = (0..self.generators.len())
            .filter(|&i| commutes(&self.generators[i]))
            .collect();
        let stabilizer_generators = (0..self.generators.len())
            .filter(|&i| fixes(&self.generators[i]))
            .collect();
        let centralizer = self
            .elements
            .iter()
            .filter(|w| commutes(w))
            .cloned()
            .collect();
        let stabilizer = self.elements.iter().filter(|w| fixes(w)).cloned().collect();
        Ok(ParabolicData {
            commuting_generators,
            centralizer,
            stabilizer_generators,
            stabilizer,
        })
    }

    /// Minimal-length representatives of the left cosets `x W_I`.
    pub fn min_coset_reps(&self, subset: &[usize]) -> Result<Vec<Permutation>> {
        let sub = self.generated_subgroup(subset)?;
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for (i, x) in self.elements.iter().enumerate() {
            if covered[i] {
                continue;
            }
            let mut best: Option<(usize, usize)> = None;
            let mut tie = false;
            for w in &sub {
                let j = self.index[&x.compose(w)];
                covered[j] = true;
                let len = self.lengths[j];
                match best {
                    Some((b, _)) if len > b => {}
                    Some((b, _)) if len == b => tie = true,
                    _ => {
                        best = Some((len, j));
                        tie = false;
                    }
                }
            }
            if tie {
                return Err(Error::Internal(format!(
                    "coset of {x} has no unique shortest element"
                )));
            }
            let (_, j) = best.expect("cosets are nonempty");
            reps.push(self.elements[j].clone());
        }
        reps.sort();
        Ok(reps)
    }

    /// Bruhat order of the group itself, from its reflections and lengths.
    pub fn bruhat_le(&self, u: &Permutation, v: &Permutation) -> Result<bool> {
        let i = self.checked_index(u)?;
        let j = self.checked_index(v)?;
        Ok(self.bruhat_le_at(i, j))
    }

    pub(crate) fn bruhat_le_at(&self, i: usize, j: usize) -> bool {
        let table = self.bruhat.get_or_init(|| self.build_bruhat());
        table[i][j / 64] >> (j % 64) & 1 == 1
    }

    fn build_bruhat(&self) -> Vec<Vec<u64>> {
        let order = self.order();
        assert!(
            order <= BRUHAT_TABLE_BOUND,
            "Bruhat table requested for a group of order {order}"
        );
        let mut reflections: Vec<Permutation> = self
            .elements
            .iter()
            .flat_map(|w| {
                let winv = w.inverse();
                self.generators
                    .iter()
                    .map(move |s| w.compose(s).compose(&winv))
            })
            .collect();
        reflections.sort();
        reflections.dedup();

        let words = order.div_ceil(64);
        let mut up = vec![vec![0u64; words]; order];
        let mut by_length: Vec<usize> = (0..order).collect();
        by_length.sort_by_key(|&i| std::cmp::Reverse(self.lengths[i]));
        for &i in &by_length {
            let mut row = vec![0u64; words];
            row[i / 64] |= 1 << (i % 64);
            for t in &reflections {
                let k = self.index[&self.elements[i].compose(t)];
                if self.lengths[k] > self.lengths[i] {
                    for (a, b) in row.iter_mut().zip(&up[k]) {
                        *a |= *b;
                    }
                }
            }
            up[i] = row;
        }
        up
    }
}

/// Centralizer `W(e)` and stabilizer `W_*(e)` of an idempotent, with the
/// simple generators lying in each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicData {
    /// Indices of simple generators `s` with `se = es`.
    pub commuting_generators: Vec<usize>,
    /// `{a : ae = ea}`.
    pub centralizer: Vec<Permutation>,
    /// Indices of simple generators `s` with `se = es = e`.
    pub stabilizer_generators: Vec<usize>,
    /// `{a : ae = ea = e}`.
    pub stabilizer: Vec<Permutation>,
}
