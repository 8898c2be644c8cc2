use num_bigint::BigUint;
use renner::counting::{
    admissible_count, bell, binomial, borel_sp_rank_count, census_rank_totals, factorial,
    rank_count_rook, stirling2, stirling2_explicit, triangular_census,
};
use renner::order::bcr_le;
use renner::symplectic::{
    enum_admissible, enum_family, is_admissible, is_symplectic_rook, Family, FamilySpec,
};
use renner::weyl::theta_rook;
use renner::{Exec, Rook};

fn family(n: usize, f: Family) -> Vec<Rook> {
    enum_family(&FamilySpec::new(n, f, None).unwrap()).unwrap()
}

#[test]
fn admissible_counts() {
    for l in 1..=6usize {
        let n = 2 * l;
        let mut total = BigUint::from(0u32);
        for k in 0..=n {
            let sets = enum_admissible(n, k).unwrap();
            let expected = if k <= l {
                binomial(l as u64, k as u64) << k
            } else {
                BigUint::from(0u32)
            };
            assert_eq!(BigUint::from(sets.len()), expected, "l={l} k={k}");
            assert_eq!(admissible_count(n, k).unwrap(), expected);
            total += expected;
        }
        assert_eq!(total, BigUint::from(3u32).pow(l as u32));
    }
}

#[test]
fn symplectic_borel_is_below_identity() {
    let borel_sp = family(4, Family::BorelSp);
    for x in family(4, Family::Rook) {
        let expected = is_symplectic_rook(&x).unwrap() && bcr_le(&x, &Rook::identity(4)).unwrap();
        assert_eq!(borel_sp.binary_search(&x).is_ok(), expected, "{x}");
    }
}

#[test]
fn symplectic_renner_monoid_shape() {
    for n in [4, 6] {
        for x in family(n, Family::RennerSp) {
            if x.rank() < n {
                assert!(is_admissible(&x.domain(), n).unwrap(), "{x}");
                assert!(is_admissible(&x.range(), n).unwrap(), "{x}");
            } else {
                assert_eq!(theta_rook(&x).unwrap(), x);
            }
        }
    }
}

#[test]
fn symplectic_renner_monoid_is_closed() {
    let xs = family(4, Family::RennerSp);
    assert_eq!(xs.len(), 57);
    for x in &xs {
        for y in &xs {
            assert!(xs.binary_search(&x.multiply(y).unwrap()).is_ok());
        }
    }
}

#[test]
fn enumeration_does_not_depend_on_schedule() {
    for f in Family::ALL {
        let spec = FamilySpec::new(6, f, None).unwrap();
        let seq = renner::symplectic::enum_family_with(&spec, Exec::Sequential).unwrap();
        let par = renner::symplectic::enum_family_with(&spec, Exec::Parallel).unwrap();
        assert_eq!(seq, par, "{f}");
        assert!(seq.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn borel_rank_slices_are_stirling_numbers() {
    for n in 1..=6usize {
        let xs = family(n, Family::Borel);
        for k in 1..=n + 1 {
            let count = xs.iter().filter(|x| x.rank() == n + 1 - k).count();
            assert_eq!(
                BigUint::from(count),
                stirling2(n as i64 + 1, k as i64),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn stirling_forms_agree() {
    for m in 0..=12u32 {
        for k in 0..=m {
            assert_eq!(
                stirling2(m as i64, k as i64),
                stirling2_explicit(m, k),
                "m={m} k={k}"
            );
        }
    }
    let bells: Vec<BigUint> = (0..=7).map(bell).collect();
    assert_eq!(bells, [1u32, 1, 2, 5, 15, 52, 203, 877].map(BigUint::from));
}

#[test]
fn rook_rank_counts_match_enumeration() {
    for n in 1..=6usize {
        let xs = family(n, Family::Rook);
        for k in 0..=n {
            let count = xs.iter().filter(|x| x.rank() == k).count();
            assert_eq!(BigUint::from(count), rank_count_rook(n, k).unwrap());
            let formula =
                binomial(n as u64, k as u64) * factorial(n as u64) / factorial((n - k) as u64);
            assert_eq!(rank_count_rook(n, k).unwrap(), formula);
        }
    }
}

#[test]
fn census_sums_to_rank_counts() {
    for n in 1..=5 {
        let census = triangular_census(n).unwrap();
        for row in census_rank_totals(n, &census).unwrap() {
            assert_eq!(row.agree_oracle_proof(), Some(true), "{row}");
        }
    }
}

#[test]
fn borel_sp_oracle_matches_proof() {
    for l in 1..=4usize {
        // the identity, rank 2l, is the one element outside every slice
        let mut total = BigUint::from(1u32);
        for k in 0..=l {
            let report = borel_sp_rank_count(l, k).unwrap();
            assert_eq!(report.agree_oracle_proof(), Some(true), "{report}");
            total += &report.oracle;
        }
        let all = family(2 * l, Family::BorelSp).len();
        assert_eq!(total, BigUint::from(all), "l={l}");
    }
    let small: Vec<BigUint> = (0..=2)
        .map(|k| borel_sp_rank_count(2, k).unwrap().oracle)
        .collect();
    assert_eq!(small, [1u32, 10, 13].map(BigUint::from));
}
