use std::collections::BTreeSet;

use renner::symplectic::{enum_family, Family, FamilySpec};
use renner::weyl::{theta_perm, GroupContext, Permutation};
use renner::Rook;

#[test]
fn theta_is_an_involution() {
    for n in [2, 4, 6] {
        for w in GroupContext::symmetric(n).unwrap().elements() {
            assert_eq!(theta_perm(&theta_perm(w).unwrap()).unwrap(), *w);
        }
    }
    let odd = GroupContext::symmetric(3).unwrap();
    assert!(theta_perm(&odd.elements()[0]).is_err());
}

#[test]
fn symplectic_group_is_the_theta_fixed_set() {
    for l in 1..=3 {
        let wg = GroupContext::symplectic(l).unwrap();
        let fixed: Vec<Permutation> = GroupContext::symmetric(2 * l)
            .unwrap()
            .elements()
            .iter()
            .filter(|w| theta_perm(w).unwrap() == **w)
            .cloned()
            .collect();
        assert_eq!(wg.elements(), fixed.as_slice());
        let expected: usize = (1..=l).product::<usize>() << l;
        assert_eq!(wg.order(), expected);
    }
}

#[test]
fn parabolic_subgroups_of_cross_section_idempotents() {
    for l in 2..=3 {
        let ctx = GroupContext::symplectic(l).unwrap();
        for d in 1..=l {
            let e = Rook::leading_idempotent(2 * l, d);
            let data = ctx.parabolic_data(&e).unwrap();
            // generator j (0-based) is s_{j+1}
            let off_d: Vec<usize> = (0..l).filter(|&j| j + 1 != d).collect();
            let tail: Vec<usize> = (d..l).collect();
            assert_eq!(
                data.centralizer,
                ctx.generated_subgroup(&off_d).unwrap(),
                "l={l} d={d}"
            );
            assert_eq!(
                data.stabilizer,
                ctx.generated_subgroup(&tail).unwrap(),
                "l={l} d={d}"
            );
            assert!(data.stabilizer.iter().all(|w| data.centralizer.contains(w)));
        }
    }
}

fn check_cosets(ctx: &GroupContext, subset: &[usize]) {
    let sub = ctx.generated_subgroup(subset).unwrap();
    let reps = ctx.min_coset_reps(subset).unwrap();
    assert_eq!(reps.len() * sub.len(), ctx.order());
    let mut seen = BTreeSet::new();
    for x in &reps {
        let lx = ctx.coxeter_length(x).unwrap();
        for w in &sub {
            let y = x.compose(w);
            assert!(seen.insert(y.clone()), "cosets overlap");
            if y != *x {
                assert!(ctx.coxeter_length(&y).unwrap() > lx);
            }
        }
    }
}

#[test]
fn coset_representatives_partition_the_group() {
    for n in 1..=5 {
        let ctx = GroupContext::symmetric(n).unwrap();
        let gens = ctx.generators().len();
        for mask in 0..1u32 << gens {
            let subset: Vec<usize> = (0..gens).filter(|i| mask >> i & 1 == 1).collect();
            check_cosets(&ctx, &subset);
        }
    }
    for l in 1..=3 {
        let ctx = GroupContext::symplectic(l).unwrap();
        for mask in 0..1u32 << l {
            let subset: Vec<usize> = (0..l).filter(|i| mask >> i & 1 == 1).collect();
            check_cosets(&ctx, &subset);
        }
    }
}

#[test]
fn symplectic_renner_monoid_is_the_union_of_double_cosets() {
    let ctx = GroupContext::symplectic(2).unwrap();
    let mut orbit = BTreeSet::new();
    for e in ctx.cross_section() {
        for a in ctx.elements() {
            for b in ctx.elements() {
                orbit.insert(
                    a.as_rook()
                        .multiply(&e)
                        .unwrap()
                        .multiply(b.as_rook())
                        .unwrap(),
                );
            }
        }
    }
    let filtered = enum_family(&FamilySpec::new(4, Family::RennerSp, None).unwrap()).unwrap();
    assert_eq!(orbit.into_iter().collect::<Vec<_>>(), filtered);
}
