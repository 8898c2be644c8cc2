//! Exact counts, each paired with a brute-force enumeration oracle.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::rook::Rook;
use crate::symplectic::{enum_family, Family, FamilySpec, DESK_BOUND};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Stirling numbers of the second kind by `S(m+1, k) = S(m, k-1) + k S(m, k)`.
///
/// Negative or out-of-range arguments give zero.
pub fn stirling2(m: i64, k: i64) -> BigUint {
    if m < 0 || k < 0 || m < k {
        return BigUint::zero();
    }
    if m == 0 {
        return BigUint::one();
    }
    if k == 0 {
        return BigUint::zero();
    }
    let (m, k) = (m as usize, k as usize);
    // row[j] = S(i, j) for the current i
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for i in 1..=m {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j - 1] + &row[j] * j;
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

/// `S(m, k) = (1/k!) Σ_{i=0}^{k} (-1)^i C(k, i) (k - i)^m`.
pub fn stirling2_explicit(m: u32, k: u32) -> BigUint {
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let term = BigInt::from(binomial(k as u64, i as u64)) * BigInt::from(k - i).pow(m);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let acc = acc / BigInt::from(factorial(k as u64));
    debug_assert!(!acc.is_negative());
    acc.to_biguint().unwrap_or_default()
}

/// Bell number `b_m = Σ_k S(m, k)`.
pub fn bell(m: u32) -> BigUint {
    (0..=m as i64).map(|k| stirling2(m as i64, k)).sum()
}

/// Number of admissible `k`-subsets of `{1, ..., n}`: `C(l, k) 2^k`.
pub fn admissible_count(n: usize, k: usize) -> Result<BigUint> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    Ok(binomial((n / 2) as u64, k as u64) << k)
}

/// Number of rank-`k` rooks of size `n`: `C(n, k) n! / (n-k)!`.
pub fn rank_count_rook(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::OutOfRange { value: k, n });
    }
    let falling = factorial(n as u64) / factorial((n - k) as u64);
    Ok(binomial(n as u64, k as u64) * falling)
}

/// One row of an audit: an enumerated value next to derived closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub label: String,
    pub parameters: Vec<(String, i64)>,
    pub oracle: BigUint,
    pub proof_form: Option<BigUint>,
    pub paper_form: Option<BigUint>,
}

impl CountReport {
    pub fn new(label: impl Into<String>, parameters: &[(&str, i64)], oracle: BigUint) -> Self {
        Self {
            label: label.into(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            oracle,
            proof_form: None,
            paper_form: None,
        }
    }

    pub fn with_proof(mut self, value: BigUint) -> Self {
        self.proof_form = Some(value);
        self
    }

    pub fn with_paper(mut self, value: BigUint) -> Self {
        self.paper_form = Some(value);
        self
    }

    pub fn agree_oracle_proof(&self) -> Option<bool> {
        self.proof_form.as_ref().map(|p| *p == self.oracle)
    }

    pub fn agree_oracle_paper(&self) -> Option<bool> {
        self.paper_form.as_ref().map(|p| *p == self.oracle)
    }

    pub fn parameter(&self, name: &str) -> Option<i64> {
        self.parameters
            .iter()
            .find(|(k, _)| k == name)
            .map(|&(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        json!({
            "label": self.label,
            "parameters": params,
            "oracle": big_json(&self.oracle),
            "proof_form": self.proof_form.as_ref().map(big_json),
            "paper_form": self.paper_form.as_ref().map(big_json),
            "agree_oracle_proof": self.agree_oracle_proof(),
            "agree_oracle_paper": self.agree_oracle_paper(),
        })
    }
}

/// Exact JSON number for an unbounded integer.
pub(crate) fn big_json(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(small) => Value::from(small),
        None => Value::Number(
            v.to_string()
                .parse::<Number>()
                .expect("decimal digits form a JSON number"),
        ),
    }
}

impl fmt::Display for CountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{:<36} {:<16} oracle={}",
            self.label,
            params.join(" "),
            self.oracle
        )?;
        if let Some(p) = &self.proof_form {
            let mark = if *p == self.oracle { "ok" } else { "MISMATCH" };
            write!(f, " proof={p} [{mark}]")?;
        }
        if let Some(p) = &self.paper_form {
            if *p == self.oracle {
                write!(f, " paper={p} [ok]")?;
            } else {
                let delta = BigInt::from(p.clone()) - BigInt::from(self.oracle.clone());
                write!(f, " paper={p} [delta {delta:+}]")?;
            }
        }
        Ok(())
    }
}

/// Renders reports as one line each.
pub fn report_table(reports: &[CountReport]) -> String {
    reports.iter().map(|r| format!("{r}\n")).collect()
}

/// Census of rooks of size `n` by triangular rank triple `(a, b, c)`, one
/// report per triple with `a + b + c <= n`, ordered by `k = a + b + c` and
/// then lexicographically.
///
/// `paper_form` is `C(n, b) S(n+1, n+1-a) S(n+1, n+1-c)`.
pub fn triangular_census(n: usize) -> Result<Vec<CountReport>> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    if n > DESK_BOUND {
        return Err(Error::Resource {
            what: "census size n",
            size: n,
            bound: DESK_BOUND,
        });
    }
    let rooks = enum_family(&FamilySpec::new(n, Family::Rook, None)?)?;
    let mut tally: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
    for x in &rooks {
        *tally.entry(x.triangular_decompose().ranks()).or_default() += 1;
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for a in 0..=k {
            for b in 0..=k - a {
                let c = k - a - b;
                let oracle = BigUint::from(tally.get(&(a, b, c)).copied().unwrap_or(0));
                let paper = census_paper_form(n, a, b, c);
                out.push(
                    CountReport::new(
                        "triangular S_abc",
                        &[
                            ("n", n as i64),
                            ("a", a as i64),
                            ("b", b as i64),
                            ("c", c as i64),
                        ],
                        oracle,
                    )
                    .with_paper(paper),
                );
            }
        }
    }
    Ok(out)
}

fn census_paper_form(n: usize, a: usize, b: usize, c: usize) -> BigUint {
    let s = |j: usize| stirling2(n as i64 + 1, n as i64 + 1 - j as i64);
    binomial(n as u64, b as u64) * s(a) * s(c)
}

/// Per-rank totals of a census: oracle sums the census rows, proof_form is
/// `C(n,k) n!/(n-k)!`, paper_form sums the printed per-triple forms.
pub fn census_rank_totals(n: usize, census: &[CountReport]) -> Result<Vec<CountReport>> {
    let mut out = Vec::new();
    for k in 0..=n {
        let rows = census.iter().filter(|r| {
            let get = |name| r.parameter(name).unwrap_or(0);
            get("n") == n as i64 && get("a") + get("b") + get("c") == k as i64
        });
        let (mut oracle, mut paper) = (BigUint::zero(), BigUint::zero());
        for r in rows {
            oracle += &r.oracle;
            paper += r.paper_form.clone().unwrap_or_default();
        }
        out.push(
            CountReport::new("rank total", &[("n", n as i64), ("k", k as i64)], oracle)
                .with_proof(rank_count_rook(n, k)?)
                .with_paper(paper),
        );
    }
    Ok(out)
}

/// Number of preimages of `a` under the restricted folding map,
/// `2^(a+c) 3^b` for triangular ranks `(a, b, c)`.
pub fn preimage_count(a: &Rook) -> BigUint {
    let (lo, d, up) = a.triangular_decompose().ranks();
    (BigUint::one() << (lo + up)) * BigUint::from(3u32).pow(d as u32)
}

/// Rank-`k` elements of the symplectic Borel submonoid for `n = 2l`.
pub fn borel_sp_rank_count(l: usize, k: usize) -> Result<CountReport> {
    if l == 0 || l > 4 {
        return Err(Error::Resource {
            what: "symplectic rank l",
            size: l,
            bound: 4,
        });
    }
    if k > l {
        return Err(Error::OutOfRange { value: k, n: l });
    }
    let oracle = enum_family(&FamilySpec::new(2 * l, Family::BorelSp, Some(k))?)?.len();
    let proof: BigUint = enum_family(&FamilySpec::new(l, Family::Rook, Some(k))?)?
        .iter()
        .map(preimage_count)
        .sum();
    Ok(CountReport::new(
        "borel-sp rank count",
        &[("l", l as i64), ("k", k as i64)],
        oracle.into(),
    )
    .with_proof(proof)
    .with_paper(borel_sp_paper_form(l, k)))
}

/// `Σ_{a+b+c=k} 2^(a+c) 3^b C(l, b) S(l+1, l+1-a) S(l+1, l+1-c)`.
pub fn borel_sp_paper_form(l: usize, k: usize) -> BigUint {
    let s = |j: usize| stirling2(l as i64 + 1, l as i64 + 1 - j as i64);
    let mut total = BigUint::zero();
    for a in 0..=k {
        for b in 0..=k - a {
            let c = k - a - b;
            total += (BigUint::one() << (a + c))
                * BigUint::from(3u32).pow(b as u32)
                * binomial(l as u64, b as u64)
                * s(a)
                * s(c);
        }
    }
    total
}

/// Same sum with `S(l, l-a)` and `S(l, l-c)`, the strictly triangular counts.
pub fn borel_sp_shifted_form(l: usize, k: usize) -> BigUint {
    let s = |j: usize| stirling2(l as i64, l as i64 - j as i64);
    let mut total = BigUint::zero();
    for a in 0..=k {
        for b in 0..=k - a {
            let c = k - a - b;
            total += (BigUint::one() << (a + c))
                * BigUint::from(3u32).pow(b as u32)
                * binomial(l as u64, b as u64)
                * s(a)
                * s(c);
        }
    }
    total
}
