use num_bigint::BigUint;
use renner::counting::stirling2;
use renner::partitions::{
    embed_nilpotent, enum_partitions, parse_partition, partition_standard_string,
    partition_to_rook, restrict_nilpotent, rook_to_partition,
};
use renner::symplectic::{enum_family, Family, FamilySpec};
use renner::Rook;

fn family(n: usize, f: Family) -> Vec<Rook> {
    enum_family(&FamilySpec::new(n, f, None).unwrap()).unwrap()
}

#[test]
fn embedding_is_a_bijection_onto_nilpotents() {
    for n in 1..=5 {
        let mut image: Vec<Rook> = family(n, Family::Borel)
            .iter()
            .map(|a| {
                let e = embed_nilpotent(a).unwrap();
                assert_eq!(e.rank(), a.rank());
                assert_eq!(restrict_nilpotent(&e).unwrap(), *a);
                e
            })
            .collect();
        image.sort();
        assert_eq!(image, family(n + 1, Family::BorelNil), "n={n}");
    }
}

#[test]
fn embedding_realizes_stirling_counts() {
    for n in 1..=6usize {
        let borel = family(n, Family::Borel);
        for k in 1..=n + 1 {
            let count = borel
                .iter()
                .filter(|a| {
                    let p = rook_to_partition(&embed_nilpotent(a).unwrap()).unwrap();
                    p.block_count() == k
                })
                .count();
            assert_eq!(BigUint::from(count), stirling2(n as i64 + 1, k as i64));
        }
    }
}

#[test]
fn partition_bijection_round_trips() {
    for m in 1..=7 {
        let parts = enum_partitions(m).unwrap();
        for p in &parts {
            let x = partition_to_rook(p).unwrap();
            assert!(x.is_strictly_upper_triangular());
            assert_eq!(rook_to_partition(&x).unwrap(), *p);
            assert_eq!(p.block_count() + x.rank(), m);
            assert_eq!(parse_partition(&partition_standard_string(p)).unwrap(), *p);
        }
        let nil = family(m, Family::BorelNil);
        assert_eq!(nil.len(), parts.len());
        for x in &nil {
            let p = rook_to_partition(x).unwrap();
            assert_eq!(partition_to_rook(&p).unwrap(), *x);
            assert_eq!(p.block_count() + x.rank(), m);
        }
    }
    assert_eq!(enum_partitions(7).unwrap().len(), 877);
}
