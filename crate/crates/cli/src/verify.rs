//! The `verify` subcommand: property suites printed as audit tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigUint;
use renner::counting::{
    admissible_count, binomial, borel_sp_rank_count, borel_sp_shifted_form, census_rank_totals,
    preimage_count, rank_count_rook, stirling2, stirling2_explicit, triangular_census, CountReport,
};
use renner::folding::{fold_rook, unfold_constructive, Direction, PartialMatrix};
use renner::nilpotent::{nilpotent_analysis, top_nilpotent, NilpotentReport};
use renner::order::{bcr_le, build_poset, standard_form, Comparator, PprOrder};
use renner::symplectic::{enum_admissible, enum_family, is_admissible, Family, FamilySpec};
use renner::weyl::GroupContext;
use renner::{Error, Exec, Rook};
use serde_json::{json, Value};

use crate::{Failure, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    All,
    Admissible,
    RankCounts,
    StirlingBorel,
    Inrsn,
    Maxelements,
    Triangular,
    Formula,
    Folding,
    Nilpotent,
    Parabolic,
    StandardForm,
}

impl Check {
    pub const EACH: [Check; 11] = [
        Check::Admissible,
        Check::RankCounts,
        Check::StirlingBorel,
        Check::Inrsn,
        Check::Maxelements,
        Check::Triangular,
        Check::Formula,
        Check::Folding,
        Check::Nilpotent,
        Check::Parabolic,
        Check::StandardForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::All => "all",
            Check::Admissible => "admissible",
            Check::RankCounts => "rank-counts",
            Check::StirlingBorel => "stirling-borel",
            Check::Inrsn => "inrsn",
            Check::Maxelements => "maxelements",
            Check::Triangular => "triangular",
            Check::Formula => "formula",
            Check::Folding => "folding",
            Check::Nilpotent => "nilpotent",
            Check::Parabolic => "parabolic",
            Check::StandardForm => "standard-form",
        }
    }
}

enum Row {
    Count(CountReport),
    Nil(NilpotentReport),
}

impl Row {
    fn mismatch(&self) -> bool {
        match self {
            Row::Count(r) => r.agree_oracle_proof() == Some(false),
            Row::Nil(_) => false,
        }
    }

    fn paper_delta(&self) -> bool {
        match self {
            Row::Count(r) => r.agree_oracle_paper() == Some(false),
            Row::Nil(_) => false,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Row::Count(r) => r.to_json(),
            Row::Nil(r) => r.to_json(),
        }
    }
}

impl std::fmt::Display for Row {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Row::Count(r) => r.fmt(f),
            Row::Nil(r) => r.fmt(f),
        }
    }
}

fn count(
    label: &str,
    params: &[(&str, i64)],
    oracle: impl Into<BigUint>,
    proof: impl Into<BigUint>,
) -> Row {
    Row::Count(CountReport::new(label, params, oracle.into()).with_proof(proof.into()))
}

fn holds(label: &str, params: &[(&str, i64)], ok: bool) -> Row {
    count(label, params, u32::from(ok), 1u32)
}

/// Reads a sweep limit, falling back to `default` and rejecting values
/// above `max`.
fn limit(
    value: Option<usize>,
    default: usize,
    max: usize,
    what: &'static str,
) -> Result<usize, Failure> {
    let v = value.unwrap_or(default);
    if v == 0 {
        return Err(Error::EmptySize.into());
    }
    if v > max {
        return Err(Error::Resource {
            what,
            size: v,
            bound: max,
        }
        .into());
    }
    Ok(v)
}

fn family(n: usize, f: Family, rank: Option<usize>) -> Result<Vec<Rook>, Failure> {
    Ok(enum_family(&FamilySpec::new(n, f, rank)?)?)
}

pub(crate) fn run_checks(
    check: Check,
    n: Option<usize>,
    l: Option<usize>,
    format: Format,
) -> Result<String, Failure> {
    let checks: Vec<Check> = match check {
        Check::All => Check::EACH.to_vec(),
        one => vec![one],
    };
    let mut sections = Vec::new();
    for c in checks {
        sections.push((c, rows_for(c, n, l)?));
    }
    let mismatches: usize = sections
        .iter()
        .flat_map(|(_, r)| r)
        .filter(|r| r.mismatch())
        .count();
    let deltas: usize = sections
        .iter()
        .flat_map(|(_, r)| r)
        .filter(|r| r.paper_delta())
        .count();
    let status = if mismatches == 0 { "ok" } else { "mismatch" };
    let text = if format == Format::Json {
        let checks: Vec<Value> = sections
            .iter()
            .map(|(c, rows)| {
                json!({
                    "check": c.name(),
                    "reports": rows.iter().map(Row::to_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&json!({
            "checks": checks,
            "mismatches": mismatches,
            "paper_deltas": deltas,
            "status": status,
        }))
        .expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for (c, rows) in &sections {
            let _ = writeln!(s, "# {}", c.name());
            for r in rows {
                let _ = writeln!(s, "{r}");
            }
        }
        let _ = writeln!(
            s,
            "status {status}: {mismatches} oracle/proof mismatches, {deltas} paper-form deltas"
        );
        s
    };
    if mismatches > 0 {
        Err(Failure::Mismatch(text))
    } else {
        Ok(text)
    }
}

fn rows_for(check: Check, n: Option<usize>, l: Option<usize>) -> Result<Vec<Row>, Failure> {
    match check {
        Check::All => unreachable!("expanded by the caller"),
        Check::Admissible => admissible(limit(l, 4, 4, "symplectic rank l")?),
        Check::RankCounts => rank_counts(limit(n, 6, 8, "rook size n")?),
        Check::StirlingBorel => stirling_borel(limit(n, 6, 7, "Borel size n")?),
        Check::Inrsn => inrsn(
            limit(n, 4, 5, "rook size n")?,
            limit(l, 2, 3, "symplectic rank l")?,
        ),
        Check::Maxelements => maxelements(limit(l, 3, 4, "symplectic rank l")?),
        Check::Triangular => triangular(limit(n, 4, 8, "census size n")?),
        Check::Formula => formula(limit(l, 4, 4, "symplectic rank l")?),
        Check::Folding => folding(limit(l, 2, 4, "symplectic rank l")?),
        Check::Nilpotent => nilpotent(
            limit(n, 5, 6, "rook size n")?,
            limit(l, 2, 3, "symplectic rank l")?,
        ),
        Check::Parabolic => parabolic(limit(l, 3, 4, "symplectic rank l")?),
        Check::StandardForm => standard_forms(limit(n, 4, 5, "rook size n")?),
    }
}

fn admissible(l_max: usize) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for l in 1..=l_max {
        let n = 2 * l;
        let mut total = 0usize;
        for k in 0..=l {
            let found = enum_admissible(n, k)?.len();
            total += found;
            rows.push(count(
                "admissible sets",
                &[("l", l as i64), ("k", k as i64)],
                found,
                admissible_count(n, k)?,
            ));
        }
        rows.push(count(
            "admissible total",
            &[("l", l as i64)],
            total,
            BigUint::from(3u32).pow(l as u32),
        ));
    }
    Ok(rows)
}

fn rank_tally(xs: &[Rook], n: usize) -> Vec<usize> {
    let mut tally = vec![0usize; n + 1];
    for x in xs {
        tally[x.rank()] += 1;
    }
    tally
}

fn rank_counts(n_max: usize) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let tally = rank_tally(&family(n, Family::Rook, None)?, n);
        for (k, &found) in tally.iter().enumerate() {
            rows.push(count(
                "rook rank count",
                &[("n", n as i64), ("k", k as i64)],
                found,
                rank_count_rook(n, k)?,
            ));
        }
    }
    Ok(rows)
}

fn stirling_borel(n_max: usize) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let tally = rank_tally(&family(n, Family::Borel, None)?, n);
        for k in 1..=n + 1 {
            let found = tally[n + 1 - k];
            let (m, kk) = (n as i64 + 1, k as i64);
            rows.push(Row::Count(
                CountReport::new(
                    "borel rank n+1-k",
                    &[("n", n as i64), ("k", kk)],
                    found.into(),
                )
                .with_proof(stirling2(m, kk))
                .with_paper(stirling2_explicit(m as u32, k as u32)),
            ));
        }
    }
    Ok(rows)
}

fn agreeing_pairs(xs: &[Rook], ppr: &PprOrder<'_>) -> Result<usize, Failure> {
    let per_row: Vec<Result<usize, Error>> = Exec::default().map(xs, |x| {
        let mut agree = 0;
        for y in xs {
            if bcr_le(x, y)? == ppr.le(x, y)? {
                agree += 1;
            }
        }
        Ok(agree)
    });
    let mut total = 0;
    for r in per_row {
        total += r?;
    }
    Ok(total)
}

fn inrsn(n_max: usize, l_max: usize) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let xs = family(n, Family::Rook, None)?;
        let ctx = GroupContext::symmetric(n)?;
        let ppr = PprOrder::new(&ctx)?;
        let agree = agreeing_pairs(&xs, &ppr)?;
        rows.push(count(
            "one-line = ppr pairs",
            &[("n", n as i64)],
            agree,
            xs.len() * xs.len(),
        ));
    }
    for l in 1..=l_max {
        let xs = family(2 * l, Family::RennerSp, None)?;
        let ctx = GroupContext::symplectic(l)?;
        let ppr = PprOrder::new(&ctx)?;
        let agree = agreeing_pairs(&xs, &ppr)?;
        rows.push(count(
            "symplectic one-line = ppr",
            &[("l", l as i64)],
            agree,
            xs.len() * xs.len(),
        ));
    }
    Ok(rows)
}

fn maxelements(l_max: usize) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for l in 1..=l_max {
        let n = 2 * l;
        for k in 1..=l {
            let params = [("l", l as i64), ("k", k as i64)];
            let h = build_poset(&family(n, Family::BorelSp, Some(k))?, Comparator::OneLine)?;
            let tops = h.maximal_elements();
            rows.push(count(
                "maximal elements",
                &params,
                tops.len(),
                admissible_count(n, k)?,
            ));
            let diagonal = tops.iter().all(|e| {
                e.is_idempotent_diagonal() && is_admissible(&e.domain(), n).unwrap_or(false)
            });
            rows.push(holds(
                "maximals are admissible idempotents",
                &params,
                diagonal,
            ));
            rows.push(holds("graded", &params, h.graded));
            let min_ok = h.unique_minimum() == Some(&Rook::trailing_identity(n, k));
            rows.push(holds("unique minimum id(k)", &params, min_ok));
        }
    }
    Ok(rows)
}

fn triangular(n: usize) -> Result<Vec<Row>, Failure> {
    let census = triangular_census(n)?;
    let totals = census_rank_totals(n, &census)?;
    Ok(census.into_iter().chain(totals).map(Row::Count).collect())
}

fn formula(l_max: usize) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for l in 1..=l_max {
        let mut proof_total = BigUint::from(1u32);
        for k in 0..=l {
            let report = borel_sp_rank_count(l, k)?;
            proof_total += report.proof_form.clone().unwrap_or_default();
            rows.push(Row::Count(
                CountReport::new(
                    "borel-sp shifted form",
                    &[("l", l as i64), ("k", k as i64)],
                    report.oracle.clone(),
                )
                .with_paper(borel_sp_shifted_form(l, k)),
            ));
            rows.push(Row::Count(report));
        }
        let all = family(2 * l, Family::BorelSp, None)?.len();
        rows.push(count(
            "borel-sp total",
            &[("l", l as i64)],
            all,
            proof_total,
        ));
    }
    Ok(rows)
}

fn folding(l: usize) -> Result<Vec<Row>, Failure> {
    let n = 2 * l;
    let mut rows = Vec::new();
    // the two 8x8 examples
    let x: Rook = "(1,0,5,0,2,0,6,0)".parse()?;
    let m = PartialMatrix::from_rook(&x);
    rows.push(holds(
        "example top-bottom fold",
        &[],
        m.fold(Direction::TopBottom)?.cells() == [(1, 3), (2, 7), (3, 5), (4, 1)],
    ));
    rows.push(holds(
        "example left-right fold",
        &[],
        m.fold(Direction::LeftRight)?.cells() == [(1, 4), (2, 1), (5, 2), (6, 3)],
    ));

    let renner_sp = family(n, Family::RennerSp, None)?;
    let commuting = renner_sp
        .iter()
        .filter(|x| {
            let m = PartialMatrix::from_rook(x);
            let a = m.fold_tb().and_then(|t| t.fold_lr());
            let b = m.fold_lr().and_then(|t| t.fold_tb());
            a == b
        })
        .count();
    rows.push(count(
        "folds commute",
        &[("l", l as i64)],
        commuting,
        renner_sp.len(),
    ));

    let borel_sp = family(n, Family::BorelSp, None)?;
    let mut buckets: BTreeMap<Rook, Vec<Rook>> = BTreeMap::new();
    for x in &borel_sp {
        if let Ok(a) = fold_rook(x) {
            buckets.entry(a).or_default().push(x.clone());
        }
    }
    let targets = family(l, Family::Rook, None)?;
    let mut covered = 0usize;
    let mut constructive_ok = 0usize;
    for a in &targets {
        let pre = buckets.get(a).cloned().unwrap_or_default();
        covered += pre.len();
        if unfold_constructive(a) == pre {
            constructive_ok += 1;
        }
        rows.push(Row::Count(
            CountReport::new(
                format!("preimages of {a}"),
                &[("l", l as i64)],
                pre.len().into(),
            )
            .with_proof(preimage_count(a)),
        ));
    }
    rows.push(count(
        "constructive unfolding agrees",
        &[("l", l as i64)],
        constructive_ok,
        targets.len(),
    ));
    rows.push(count(
        "preimages cover B_G minus identity",
        &[("l", l as i64)],
        covered,
        borel_sp.len() - 1,
    ));
    Ok(rows)
}

fn nilpotent(n_max: usize, l_max: usize) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for n in 2..=n_max.max(2) {
        let rep = nilpotent_analysis(&FamilySpec::new(n, Family::BorelNil, None)?)?;
        let params = [("n", n as i64)];
        rows.push(holds(
            "borel-nil closed under product",
            &params,
            rep.closed_under_product,
        ));
        rows.push(holds(
            "borel-nil maximum is r_0",
            &params,
            rep.maximals == [top_nilpotent(n)?],
        ));
        rows.push(count(
            "borel-nil longest chain",
            &params,
            rep.longest_chain,
            binomial(n as u64, 2),
        ));
        rows.push(Row::Nil(rep));
    }
    for l in 1..=l_max {
        let rep = nilpotent_analysis(&FamilySpec::new(2 * l, Family::BorelSpNil, None)?)?;
        let params = [("l", l as i64)];
        rows.push(holds(
            "borel-sp-nil closed under product",
            &params,
            rep.closed_under_product,
        ));
        rows.push(Row::Count(CountReport::new(
            "borel-sp-nil maximal elements",
            &params,
            rep.maximals.len().into(),
        )));
        rows.push(Row::Nil(rep));
    }
    Ok(rows)
}

fn parabolic(l_max: usize) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for l in 1..=l_max {
        let ctx = GroupContext::symplectic(l)?;
        for d in 1..=l {
            let params = [("l", l as i64), ("d", d as i64)];
            let data = ctx.parabolic_data(&Rook::leading_idempotent(2 * l, d))?;
            // generator index j stands for s_{j+1}
            let off_d: Vec<usize> = (0..l).filter(|&j| j + 1 != d).collect();
            let tail: Vec<usize> = (d..l).collect();
            rows.push(holds(
                "commuting generators are s_j, j != d",
                &params,
                data.commuting_generators == off_d,
            ));
            rows.push(holds(
                "centralizer is <s_j : j != d>",
                &params,
                data.centralizer == ctx.generated_subgroup(&off_d)?,
            ));
            rows.push(holds(
                "fixing generators are s_j, j > d",
                &params,
                data.stabilizer_generators == tail,
            ));
            rows.push(holds(
                "stabilizer is <s_j : j > d>",
                &params,
                data.stabilizer == ctx.generated_subgroup(&tail)?,
            ));
        }
    }
    Ok(rows)
}

fn standard_forms(n_max: usize) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let ctx = GroupContext::symmetric(n)?;
        let xs = family(n, Family::Rook, None)?;
        let results: Vec<Result<(bool, bool), Error>> = Exec::default().map(&xs, |x| {
            let sf = standard_form(x, &ctx)?;
            let a_le_b = ctx.bruhat_le(&sf.a, &sf.b)?;
            Ok((sf.recompose() == *x, x.is_upper_triangular() == a_le_b))
        });
        let (mut unique, mut triangular) = (0usize, 0usize);
        for r in results {
            let (u, t) = r?;
            unique += usize::from(u);
            triangular += usize::from(t);
        }
        let params = [("n", n as i64)];
        rows.push(count("unique standard forms", &params, unique, xs.len()));
        rows.push(count(
            "upper triangular iff a <= b",
            &params,
            triangular,
            xs.len(),
        ));
    }
    Ok(rows)
}
