//! The Bruhat-Chevalley-Renner order.
//!
//! Two independent deciders are provided. [`bcr_le`] compares sorted prefixes
//! of one-line sequences. [`PprOrder`] factors both rooks in standard form
//! `a e b^{-1}` and searches for a witness `w` in `W(f) W(e)`, using the
//! intrinsic Bruhat order of the Weyl group.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rook::Rook;
use crate::symplectic::is_symplectic_rook;
use crate::weyl::{GroupContext, GroupKind, Permutation};

/// Upper bound on poset sizes handled by [`build_poset`].
pub const POSET_BOUND: usize = 4096;

/// Componentwise comparison of decreasing rearrangements of every prefix.
fn prefix_dominated(x: &[u8], y: &[u8]) -> bool {
    let mut px: Vec<u8> = Vec::with_capacity(x.len());
    let mut py: Vec<u8> = Vec::with_capacity(y.len());
    for (&a, &b) in x.iter().zip(y) {
        let pos = px.partition_point(|&v| v > a);
        px.insert(pos, a);
        let pos = py.partition_point(|&v| v > b);
        py.insert(pos, b);
        if px.iter().zip(&py).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

/// Bruhat order on `S_n` by the prefix dominance criterion.
pub fn ehresmann_le(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch(u.n(), v.n()));
    }
    Ok(prefix_dominated(u.as_rook().raw(), v.as_rook().raw()))
}

/// `x <= y` iff for every `i` the decreasing rearrangement of the multiset
/// `{x_1, ..., x_i}` is componentwise at most that of `{y_1, ..., y_i}`.
/// Zeros take part as values.
pub fn bcr_le(x: &Rook, y: &Rook) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch(x.n(), y.n()));
    }
    Ok(prefix_dominated(x.raw(), y.raw()))
}

/// `x = a e b^{-1}` with `a ∈ D_*(e)` and `b ∈ D(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub a: Permutation,
    pub e: Rook,
    pub b: Permutation,
}

impl StandardForm {
    pub fn recompose(&self) -> Rook {
        self.a
            .as_rook()
            .mul_unchecked(&self.e)
            .mul_unchecked(self.b.inverse().as_rook())
    }
}

/// Standard form of `x` in the Renner monoid of `ctx`.
pub fn standard_form(x: &Rook, ctx: &GroupContext) -> Result<StandardForm> {
    PprOrder::new(ctx)?.standard_form(x)
}

/// One-shot comparison by the standard-form criterion.
pub fn bcr_le_ppr(x: &Rook, y: &Rook, ctx: &GroupContext) -> Result<bool> {
    PprOrder::new(ctx)?.le(x, y)
}

struct Level {
    e: Rook,
    rank: usize,
    centralizer: Vec<usize>,
    reps: Vec<usize>,
    star_reps: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
struct FormIdx {
    a: usize,
    level: usize,
    b: usize,
}

/// Standard-form comparator with per-idempotent data computed once.
pub struct PprOrder<'g> {
    ctx: &'g GroupContext,
    levels: Vec<Level>,
    inverse: Vec<usize>,
    products: Vec<OnceLock<Vec<usize>>>,
}

impl<'g> PprOrder<'g> {
    pub fn new(ctx: &'g GroupContext) -> Result<Self> {
        if ctx.order() > crate::weyl::BRUHAT_TABLE_BOUND {
            return Err(Error::Resource {
                what: "Weyl group order for standard forms",
                size: ctx.order(),
                bound: crate::weyl::BRUHAT_TABLE_BOUND,
            });
        }
        let lattice = ctx.cross_section();
        let mut data = Vec::with_capacity(lattice.len());
        for e in &lattice {
            data.push(ctx.parabolic_data(e)?);
        }
        let mut levels = Vec::with_capacity(lattice.len());
        for (i, e) in lattice.iter().enumerate() {
            // λ_*(e) is the intersection of λ(f) over f <= e in the chain.
            let star: Vec<usize> = data[i]
                .commuting_generators
                .iter()
                .copied()
                .filter(|g| {
                    data[..=i]
                        .iter()
                        .all(|d| d.commuting_generators.contains(g))
                })
                .collect();
            let idx = |ws: Vec<Permutation>| -> Vec<usize> {
                ws.iter()
                    .map(|w| ctx.index_of(w).expect("group element"))
                    .collect()
            };
            levels.push(Level {
                e: e.clone(),
                rank: e.rank(),
                centralizer: idx(data[i].centralizer.clone()),
                reps: idx(ctx.min_coset_reps(&data[i].commuting_generators)?),
                star_reps: idx(ctx.min_coset_reps(&star)?),
            });
        }
        let inverse = ctx
            .elements()
            .iter()
            .map(|w| ctx.index_of(&w.inverse()).expect("closed under inverse"))
            .collect();
        let products = (0..levels.len() * levels.len())
            .map(|_| OnceLock::new())
            .collect();
        Ok(Self {
            ctx,
            levels,
            inverse,
            products,
        })
    }

    pub fn context(&self) -> &GroupContext {
        self.ctx
    }

    fn mul(&self, i: usize, j: usize) -> usize {
        let els = self.ctx.elements();
        self.ctx
            .index_of(&els[i].compose(&els[j]))
            .expect("closed under products")
    }

    fn check_member(&self, x: &Rook) -> Result<()> {
        if x.n() != self.ctx.n() {
            return Err(Error::SizeMismatch(x.n(), self.ctx.n()));
        }
        if self.ctx.kind() == GroupKind::Symplectic && !is_symplectic_rook(x)? {
            return Err(Error::Invalid(format!(
                "{x} is not in the symplectic Renner monoid"
            )));
        }
        Ok(())
    }

    fn form_idx(&self, x: &Rook) -> Result<FormIdx> {
        self.check_member(x)?;
        let level = self
            .levels
            .iter()
            .position(|lv| lv.rank == x.rank())
            .ok_or_else(|| Error::Invalid(format!("{x} has no idempotent of its rank")))?;
        let lv = &self.levels[level];
        let els = self.ctx.elements();
        let mut found: Option<FormIdx> = None;
        for &b in &lv.reps {
            let eb = lv.e.mul_unchecked(els[self.inverse[b]].as_rook());
            for &a in &lv.star_reps {
                if els[a].as_rook().mul_unchecked(&eb) == *x {
                    if found.is_some() {
                        return Err(Error::Internal(format!(
                            "standard form of {x} is not unique"
                        )));
                    }
                    found = Some(FormIdx { a, level, b });
                }
            }
        }
        found.ok_or_else(|| Error::Invalid(format!("{x} has no standard form")))
    }

    pub fn standard_form(&self, x: &Rook) -> Result<StandardForm> {
        let f = self.form_idx(x)?;
        let els = self.ctx.elements();
        Ok(StandardForm {
            a: els[f.a].clone(),
            e: self.levels[f.level].e.clone(),
            b: els[f.b].clone(),
        })
    }

    /// `W(f) W(e)` as group indices.
    fn product_set(&self, e: usize, f: usize) -> &[usize] {
        self.products[e * self.levels.len() + f].get_or_init(|| {
            let mut hit = vec![false; self.ctx.order()];
            for &p in &self.levels[f].centralizer {
                for &q in &self.levels[e].centralizer {
                    hit[self.mul(p, q)] = true;
                }
            }
            (0..hit.len()).filter(|&i| hit[i]).collect()
        })
    }

    fn le_forms(&self, x: FormIdx, y: FormIdx) -> bool {
        if self.levels[x.level].rank > self.levels[y.level].rank {
            return false;
        }
        let b_inv = self.inverse[x.b];
        let d_inv = self.inverse[y.b];
        self.product_set(x.level, y.level).iter().any(|&w| {
            self.ctx.bruhat_le_at(x.a, self.mul(y.a, w))
                && self
                    .ctx
                    .bruhat_le_at(self.mul(self.inverse[w], d_inv), b_inv)
        })
    }

    pub fn le(&self, x: &Rook, y: &Rook) -> Result<bool> {
        Ok(self.le_forms(self.form_idx(x)?, self.form_idx(y)?))
    }
}

/// Which decider [`build_poset`] uses.
#[derive(Debug, Clone, Copy)]
pub enum Comparator<'g> {
    OneLine,
    Ppr(&'g GroupContext),
}

/// Covers, longest-chain ranks and extrema of a finite set of rooks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    /// Lexicographically sorted.
    pub elements: Vec<Rook>,
    /// `(lower, upper)` index pairs, sorted.
    pub covers: Vec<(usize, usize)>,
    /// Longest chain down to a minimal element.
    pub rank_of: Vec<usize>,
    pub minimals: Vec<usize>,
    pub maximals: Vec<usize>,
    /// Every cover raises `rank_of` by exactly one.
    pub graded: bool,
    below: Vec<Vec<u64>>,
}

impl HasseDiagram {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &Rook) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    /// `elements[i] <= elements[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.below[j][i / 64] >> (i % 64) & 1 == 1
    }

    pub fn unique_minimum(&self) -> Option<&Rook> {
        match self.minimals.as_slice() {
            [i] => Some(&self.elements[*i]),
            _ => None,
        }
    }

    pub fn unique_maximum(&self) -> Option<&Rook> {
        match self.maximals.as_slice() {
            [i] => Some(&self.elements[*i]),
            _ => None,
        }
    }

    pub fn maximal_elements(&self) -> Vec<Rook> {
        self.maximals
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect()
    }

    /// Length of the longest chain from `lo` up to `hi`, if `lo <= hi`.
    pub fn longest_chain(&self, lo: usize, hi: usize) -> Option<usize> {
        if !self.le(lo, hi) {
            return None;
        }
        let mut order: Vec<usize> = (0..self.len())
            .filter(|&k| self.le(lo, k) && self.le(k, hi))
            .collect();
        order.sort_by_key(|&k| self.rank_of[k]);
        let mut best = vec![None; self.len()];
        best[lo] = Some(0usize);
        for &k in &order {
            if let Some(d) = best[k] {
                for &(a, b) in &self.covers {
                    if a == k && self.le(b, hi) {
                        best[b] = Some(best[b].map_or(d + 1, |v: usize| v.max(d + 1)));
                    }
                }
            }
        }
        best[hi]
    }
}

/// Builds the Hasse diagram of `elements` under the chosen comparator.
pub fn build_poset(elements: &[Rook], comparator: Comparator<'_>) -> Result<HasseDiagram> {
    build_poset_with(elements, comparator, Exec::default())
}

pub fn build_poset_with(
    elements: &[Rook],
    comparator: Comparator<'_>,
    exec: Exec,
) -> Result<HasseDiagram> {
    let mut elements = elements.to_vec();
    elements.sort();
    if elements.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Invalid("duplicate elements in poset".into()));
    }
    let m = elements.len();
    if m > POSET_BOUND {
        return Err(Error::Resource {
            what: "poset size",
            size: m,
            bound: POSET_BOUND,
        });
    }
    if let Some(x) = elements.iter().find(|x| x.n() != elements[0].n()) {
        return Err(Error::SizeMismatch(x.n(), elements[0].n()));
    }
    let words = m.div_ceil(64).max(1);

    // below[j] holds every i with elements[i] <= elements[j].
    let below: Vec<Vec<u64>> = match comparator {
        Comparator::OneLine => exec.map_range(m, |j| {
            let mut row = vec![0u64; words];
            for i in 0..m {
                if prefix_dominated(elements[i].raw(), elements[j].raw()) {
                    row[i / 64] |= 1 << (i % 64);
                }
            }
            row
        }),
        Comparator::Ppr(ctx) => {
            let ppr = PprOrder::new(ctx)?;
            let forms = elements
                .iter()
                .map(|x| ppr.form_idx(x))
                .collect::<Result<Vec<_>>>()?;
            exec.map_range(m, |j| {
                let mut row = vec![0u64; words];
                for i in 0..m {
                    if ppr.le_forms(forms[i], forms[j]) {
                        row[i / 64] |= 1 << (i % 64);
                    }
                }
                row
            })
        }
    };
    let le = |i: usize, j: usize| below[j][i / 64] >> (i % 64) & 1 == 1;
    for i in 0..m {
        if !le(i, i) {
            return Err(Error::Internal(format!("{} is not <= itself", elements[i])));
        }
        for j in i + 1..m {
            if le(i, j) && le(j, i) {
                return Err(Error::Internal(format!(
                    "{} and {} are mutually <=",
                    elements[i], elements[j]
                )));
            }
        }
    }
    let mut above = vec![vec![0u64; words]; m];
    for j in 0..m {
        for (i, row) in above.iter_mut().enumerate() {
            if i != j && le(i, j) {
                row[j / 64] |= 1 << (j % 64);
            }
        }
    }

    // i < j is a cover when nothing lies strictly between them.
    let cover_rows: Vec<Vec<(usize, usize)>> = exec.map_range(m, |i| {
        let mut out = Vec::new();
        for (j, below_j) in below.iter().enumerate() {
            if i == j || !le(i, j) {
                continue;
            }
            let between = above[i].iter().zip(below_j).enumerate().any(|(w, (a, b))| {
                let mut bits = a & b;
                if w == j / 64 {
                    bits &= !(1u64 << (j % 64));
                }
                bits != 0
            });
            if !between {
                out.push((i, j));
            }
        }
        out
    });
    let covers: Vec<(usize, usize)> = cover_rows.into_iter().flatten().collect();

    let down_count: Vec<u32> = below
        .iter()
        .map(|row| row.iter().map(|w| w.count_ones()).sum())
        .collect();
    let mut topo: Vec<usize> = (0..m).collect();
    topo.sort_by_key(|&i| down_count[i]);
    let mut lower_covers = vec![Vec::new(); m];
    for &(a, b) in &covers {
        lower_covers[b].push(a);
    }
    let mut rank_of = vec![0usize; m];
    for &j in &topo {
        rank_of[j] = lower_covers[j]
            .iter()
            .map(|&i| rank_of[i] + 1)
            .max()
            .unwrap_or(0);
    }
    let graded = covers.iter().all(|&(a, b)| rank_of[b] == rank_of[a] + 1);
    let minimals = (0..m).filter(|&i| lower_covers[i].is_empty()).collect();
    let maximals = (0..m)
        .filter(|&i| !covers.iter().any(|&(a, _)| a == i))
        .collect();
    Ok(HasseDiagram {
        elements,
        covers,
        rank_of,
        minimals,
        maximals,
        graded,
        below,
    })
}
