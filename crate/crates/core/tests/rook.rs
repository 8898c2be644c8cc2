use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use renner::rook::{msp_membership, parse_one_line};
use renner::symplectic::{enum_family, Family, FamilySpec};
use renner::Rook;

fn all_rooks(n: usize) -> Vec<Rook> {
    enum_family(&FamilySpec::new(n, Family::Rook, None).unwrap()).unwrap()
}

fn rook_strategy(max_n: usize) -> impl Strategy<Value = Rook> {
    (1..=max_n).prop_flat_map(rook_of_size)
}

fn rook_of_size(n: usize) -> impl Strategy<Value = Rook> {
    (
        Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
        proptest::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(perm, keep)| {
            Rook::new(
                perm.into_iter()
                    .zip(keep)
                    .map(|(p, k)| if k { p } else { 0 }),
            )
            .unwrap()
        })
}

proptest! {
    #[test]
    fn one_line_round_trip(x in rook_strategy(8)) {
        prop_assert_eq!(parse_one_line(&x.to_string(), x.n()).unwrap(), x.clone());
        prop_assert_eq!(x.to_string().parse::<Rook>().unwrap(), x);
    }

    #[test]
    fn multiply_is_associative(
        (x, y, z) in (1..=6usize).prop_flat_map(|n| (rook_of_size(n), rook_of_size(n), rook_of_size(n)))
    ) {
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiply_matches_matrices(
        (x, y) in (1..=5usize).prop_flat_map(|n| (rook_of_size(n), rook_of_size(n)))
    ) {
        prop_assert_eq!(x.multiply(&y).unwrap().to_matrix(), x.to_matrix().mul(&y.to_matrix()));
    }
}

#[test]
fn multiply_is_associative_exhaustively() {
    for n in 1..=3 {
        let xs = all_rooks(n);
        for x in &xs {
            for y in &xs {
                let xy = x.multiply(y).unwrap();
                for z in &xs {
                    assert_eq!(
                        xy.multiply(z).unwrap(),
                        x.multiply(&y.multiply(z).unwrap()).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn triangular_parts_recombine() {
    for n in 1..=4 {
        for x in all_rooks(n) {
            let parts = x.triangular_decompose();
            assert_eq!(parts.recombine(), x);
            assert!(parts.upper.is_strictly_upper_triangular());
            assert!(parts.diag.is_idempotent_diagonal());
            assert!(parts.lower.transpose().is_strictly_upper_triangular());
            let (a, b, c) = parts.ranks();
            assert_eq!(a + b + c, x.rank());
        }
    }
}

#[test]
fn nilpotency_matches_powers() {
    for n in 1..=4 {
        for x in all_rooks(n) {
            assert_eq!(x.is_nilpotent(), x.pow(n as u32).is_zero(), "{x}");
        }
    }
}

#[test]
fn singular_symplectic_rooks_satisfy_membership_with_zero() {
    for x in enum_family(&FamilySpec::new(4, Family::RennerSp, None).unwrap()).unwrap() {
        if x.rank() < 4 {
            let c = msp_membership(&x.to_matrix()).unwrap();
            assert_eq!(c, Some(BigRational::zero()), "{x}");
        }
    }
}
