//! Nilpotent subsemigroups of Borel submonoids.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::order::{build_poset_with, Comparator};
use crate::rook::Rook;
use crate::symplectic::{enum_family_with, FamilySpec};

/// Summary of the nilpotent elements of one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentReport {
    pub family: FamilySpec,
    pub count: usize,
    pub maximals: Vec<Rook>,
    pub unique_max: bool,
    pub closed_under_product: bool,
    /// Longest chain from zero to any maximal element.
    pub longest_chain: usize,
}

impl NilpotentReport {
    pub fn to_json(&self) -> Value {
        json!({
            "label": "nilpotent",
            "family": self.family.family.name(),
            "parameters": { "n": self.family.n },
            "count": self.count,
            "maximals": self.maximals.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "unique_max": self.unique_max,
            "closed_under_product": self.closed_under_product,
            "longest_chain": self.longest_chain,
        })
    }
}

impl fmt::Display for NilpotentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let maximals: Vec<String> = self.maximals.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "{:<36} n={:<14} count={} maximals={} unique_max={} closed={} longest_chain={}",
            self.family.family.name(),
            self.family.n,
            self.count,
            maximals.join(" "),
            self.unique_max,
            self.closed_under_product,
            self.longest_chain
        )
    }
}

pub fn nilpotent_analysis(spec: &FamilySpec) -> Result<NilpotentReport> {
    nilpotent_analysis_with(spec, Exec::default())
}

pub fn nilpotent_analysis_with(spec: &FamilySpec, exec: Exec) -> Result<NilpotentReport> {
    if !spec.family.is_nil() {
        return Err(Error::Invalid(format!(
            "{} is not a nilpotent family",
            spec.family
        )));
    }
    if spec.rank.is_some() {
        return Err(Error::Invalid(
            "nilpotent analysis runs on the whole family, not a rank slice".into(),
        ));
    }
    let elements = enum_family_with(spec, exec)?;
    if elements.iter().any(|x| !x.is_nilpotent()) {
        return Err(Error::Internal(
            "nil family holds a non-nilpotent rook".into(),
        ));
    }
    let len = elements.len();
    let closed = exec.all_range(len * len, |k| {
        let p = elements[k / len]
            .multiply(&elements[k % len])
            .expect("members share one size");
        elements.binary_search(&p).is_ok()
    });
    let poset = build_poset_with(&elements, Comparator::OneLine, exec)?;
    let zero = poset
        .index_of(&Rook::zero(spec.n))
        .ok_or_else(|| Error::Internal("zero is missing from a nil family".into()))?;
    let mut longest = 0;
    for &m in &poset.maximals {
        let d = poset
            .longest_chain(zero, m)
            .ok_or_else(|| Error::Internal("zero is not below a maximal element".into()))?;
        longest = longest.max(d);
    }
    let maximals = poset.maximal_elements();
    Ok(NilpotentReport {
        family: *spec,
        count: len,
        unique_max: maximals.len() == 1,
        maximals,
        closed_under_product: closed,
        longest_chain: longest,
    })
}

/// `r_0 = (0, 1, ..., n-1)`, the top nilpotent rook of size `n`.
pub fn top_nilpotent(n: usize) -> Result<Rook> {
    Rook::new(0..n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::Family;

    fn spec(n: usize, family: Family) -> FamilySpec {
        FamilySpec::new(n, family, None).unwrap()
    }

    #[test]
    fn rook_family_examples() {
        let rep = nilpotent_analysis(&spec(4, Family::BorelNil)).unwrap();
        assert!(rep.unique_max);
        assert_eq!(rep.maximals, vec![top_nilpotent(4).unwrap()]);
        assert_eq!(rep.longest_chain, 6);
        assert!(rep.closed_under_product);

        let small = nilpotent_analysis(&spec(2, Family::BorelNil)).unwrap();
        assert_eq!(small.maximals, vec!["(0,1)".parse().unwrap()]);
        assert!(small.unique_max);
    }

    #[test]
    fn symplectic_example() {
        let rep = nilpotent_analysis(&spec(4, Family::BorelSpNil)).unwrap();
        assert_eq!(rep.count, 12);
        let shown: Vec<String> = rep.maximals.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["(0,0,2,1)", "(0,1,0,3)"]);
        assert!(!rep.unique_max);
        assert!(rep.closed_under_product);
        assert_eq!(rep.to_json()["count"], 12);
    }

    #[test]
    fn rejects_other_families() {
        assert!(nilpotent_analysis(&spec(4, Family::Borel)).is_err());
        let sliced = FamilySpec::new(4, Family::BorelNil, Some(1)).unwrap();
        assert!(nilpotent_analysis(&sliced).is_err());
    }
}
