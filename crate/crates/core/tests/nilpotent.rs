use renner::counting::binomial;
use renner::nilpotent::{nilpotent_analysis, top_nilpotent};
use renner::order::{build_poset, Comparator};
use renner::symplectic::{enum_family, Family, FamilySpec};
use renner::Rook;

fn spec(n: usize, f: Family) -> FamilySpec {
    FamilySpec::new(n, f, None).unwrap()
}

#[test]
fn rook_nilpotents_have_a_top_element() {
    for n in 3..=5usize {
        let rep = nilpotent_analysis(&spec(n, Family::BorelNil)).unwrap();
        assert!(rep.closed_under_product);
        assert_eq!(rep.maximals, vec![top_nilpotent(n).unwrap()]);
        assert_eq!(
            num_bigint::BigUint::from(rep.longest_chain),
            binomial(n as u64, 2)
        );
    }
}

#[test]
fn every_nilpotent_is_below_the_top() {
    for n in 1..=5usize {
        let xs = enum_family(&spec(n, Family::BorelNil)).unwrap();
        let h = build_poset(&xs, Comparator::OneLine).unwrap();
        let top = h.index_of(&top_nilpotent(n).unwrap()).unwrap();
        assert!((0..h.len()).all(|i| h.le(i, top)));
    }
}

#[test]
fn symplectic_nilpotents() {
    for n in [4, 6] {
        let rep = nilpotent_analysis(&spec(n, Family::BorelSpNil)).unwrap();
        assert!(rep.closed_under_product, "n={n}");
        assert!(!rep.unique_max, "n={n}");
    }
    let two = nilpotent_analysis(&spec(2, Family::BorelSpNil)).unwrap();
    assert!(two.unique_max);
}

#[test]
fn products_with_upper_triangular_rooks_stay_nilpotent() {
    for n in 1..=4 {
        let borel = enum_family(&spec(n, Family::Borel)).unwrap();
        let nil: Vec<Rook> = enum_family(&spec(n, Family::BorelNil)).unwrap();
        for b in &borel {
            for r in &nil {
                assert!(b.multiply(r).unwrap().is_nilpotent());
                assert!(r.multiply(b).unwrap().is_nilpotent());
            }
        }
    }
}
