//! Admissible subsets, the symplectic Renner monoid and the Borel families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rook::Rook;
use crate::weyl::theta_rook;

/// Largest size accepted by the full enumerations.
pub const DESK_BOUND: usize = 8;

/// `θ(i) = n + 1 - i`.
pub fn theta_index(n: usize, i: usize) -> usize {
    n + 1 - i
}

/// True iff no member `i` of `set` has `θ(i)` in `set`.
pub fn is_admissible(set: &[usize], n: usize) -> Result<bool> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    let mut seen = vec![false; n + 1];
    for &i in set {
        if i == 0 || i > n {
            return Err(Error::OutOfRange { value: i, n });
        }
        seen[i] = true;
    }
    Ok(set.iter().all(|&i| !seen[theta_index(n, i)]))
}

/// A subset `S` of `{1, ..., n}` with `θ(S) ∩ S = ∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSet {
    n: usize,
    members: Vec<usize>,
}

impl AdmissibleSet {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if !is_admissible(&members, n)? {
            return Err(Error::Invalid(format!("{members:?} is not admissible")));
        }
        Ok(Self { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// All admissible `k`-subsets of `{1, ..., n}`, lexicographically.
pub fn enum_admissible(n: usize, k: usize) -> Result<Vec<AdmissibleSet>> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    if k > n {
        return Err(Error::OutOfRange { value: k, n });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    combinations(n, k, 1, &mut current, &mut |c| {
        if is_admissible(c, n).unwrap_or(false) {
            out.push(AdmissibleSet {
                n,
                members: c.to_vec(),
            });
        }
    });
    Ok(out)
}

fn combinations(
    n: usize,
    k: usize,
    start: usize,
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if current.len() == k {
        visit(current);
        return;
    }
    let need = k - current.len();
    for i in start..=n {
        if n + 1 - i < need {
            break;
        }
        current.push(i);
        combinations(n, k, i + 1, current, visit);
        current.pop();
    }
}

/// Membership in the symplectic Renner monoid: singular with admissible
/// domain and range, or a θ-fixed permutation.
pub fn is_symplectic_rook(x: &Rook) -> Result<bool> {
    let n = x.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    if x.is_permutation() {
        return Ok(theta_rook(x)? == *x);
    }
    Ok(is_admissible(&x.domain(), n)? && is_admissible(&x.range(), n)?)
}

/// The six named rook families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `R_n`
    Rook,
    /// `B_n`
    Borel,
    /// `B_n^nil`
    BorelNil,
    /// `R_G`
    RennerSp,
    /// `B_G`
    BorelSp,
    /// `B_G^nil`
    BorelSpNil,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Rook,
        Family::Borel,
        Family::BorelNil,
        Family::RennerSp,
        Family::BorelSp,
        Family::BorelSpNil,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Rook => "rook",
            Family::Borel => "borel",
            Family::BorelNil => "borel-nil",
            Family::RennerSp => "renner-sp",
            Family::BorelSp => "borel-sp",
            Family::BorelSpNil => "borel-sp-nil",
        }
    }

    pub fn is_symplectic(self) -> bool {
        matches!(
            self,
            Family::RennerSp | Family::BorelSp | Family::BorelSpNil
        )
    }

    pub fn is_nil(self) -> bool {
        matches!(self, Family::BorelNil | Family::BorelSpNil)
    }

    /// Membership test for a single rook, without size checks.
    pub fn contains(self, x: &Rook) -> bool {
        let shape = match self {
            Family::Rook | Family::RennerSp => true,
            Family::Borel | Family::BorelSp => x.is_upper_triangular(),
            Family::BorelNil | Family::BorelSpNil => x.is_strictly_upper_triangular(),
        };
        shape && (!self.is_symplectic() || is_symplectic_rook(x).unwrap_or(false))
    }

    fn allows(self, col: usize, value: usize) -> bool {
        match self {
            Family::Rook | Family::RennerSp => true,
            Family::Borel | Family::BorelSp => value <= col,
            Family::BorelNil | Family::BorelSpNil => value < col,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown family {s:?}")))
    }
}

/// A family at a given size, optionally restricted to one rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub n: usize,
    pub family: Family,
    pub rank: Option<usize>,
}

impl FamilySpec {
    pub fn new(n: usize, family: Family, rank: Option<usize>) -> Result<Self> {
        let spec = Self { n, family, rank };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptySize);
        }
        if self.family.is_symplectic() && !self.n.is_multiple_of(2) {
            return Err(Error::OddSize(self.n));
        }
        if let Some(k) = self.rank {
            if k > self.n {
                return Err(Error::OutOfRange {
                    value: k,
                    n: self.n,
                });
            }
        }
        Ok(())
    }

    pub fn contains(&self, x: &Rook) -> bool {
        x.n() == self.n && self.rank.is_none_or(|k| x.rank() == k) && self.family.contains(x)
    }
}

/// All members of the family in lexicographic one-line order.
pub fn enum_family(spec: &FamilySpec) -> Result<Vec<Rook>> {
    enum_family_with(spec, Exec::default())
}

/// [`enum_family`] with an explicit schedule; the output does not depend on it.
pub fn enum_family_with(spec: &FamilySpec, exec: Exec) -> Result<Vec<Rook>> {
    spec.validate()?;
    let n = spec.n;
    if n > DESK_BOUND {
        return Err(Error::Resource {
            what: "enumeration size n",
            size: n,
            bound: DESK_BOUND,
        });
    }
    // Split on the first entry; each branch is filled in lexicographic order.
    let firsts: Vec<usize> = (0..=n).filter(|&v| spec.family.allows(1, v)).collect();
    let out = exec.flat_map(&firsts, |&first| {
        let mut prefix = Vec::with_capacity(n);
        prefix.push(first as u8);
        let mut used = vec![false; n + 1];
        if first != 0 {
            used[first] = true;
        }
        let mut branch = Vec::new();
        extend(
            spec,
            &mut prefix,
            &mut used,
            usize::from(first != 0),
            &mut branch,
        );
        branch
    });
    Ok(out)
}

fn extend(
    spec: &FamilySpec,
    prefix: &mut Vec<u8>,
    used: &mut [bool],
    rank: usize,
    out: &mut Vec<Rook>,
) {
    let n = spec.n;
    let col = prefix.len();
    if let Some(k) = spec.rank {
        if rank > k || rank + (n - col) < k {
            return;
        }
    }
    if col == n {
        let x = Rook::from_raw(prefix.clone());
        if !spec.family.is_symplectic() || is_symplectic_rook(&x).unwrap_or(false) {
            out.push(x);
        }
        return;
    }
    for v in 0..=n {
        if (v != 0 && used[v]) || !spec.family.allows(col + 1, v) {
            continue;
        }
        prefix.push(v as u8);
        if v != 0 {
            used[v] = true;
        }
        extend(spec, prefix, used, rank + usize::from(v != 0), out);
        if v != 0 {
            used[v] = false;
        }
        prefix.pop();
    }
}

/// `Λ_G = {e_0, e_1, ..., e_l, e_n}` as diagonal idempotents.
pub fn cross_section_lattice(n: usize) -> Result<Vec<Rook>> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    if !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    let mut out: Vec<Rook> = (0..=n / 2)
        .map(|k| Rook::leading_idempotent(n, k))
        .collect();
    out.push(Rook::identity(n));
    Ok(out)
}
