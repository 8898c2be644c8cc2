use renner::order::{bcr_le, build_poset, ehresmann_le, standard_form, Comparator, PprOrder};
use renner::symplectic::{enum_family, Family, FamilySpec};
use renner::weyl::{GroupContext, Permutation};
use renner::Rook;

fn family(n: usize, family: Family) -> Vec<Rook> {
    enum_family(&FamilySpec::new(n, family, None).unwrap()).unwrap()
}

fn disagreements(elements: &[Rook], ppr: &PprOrder<'_>) -> usize {
    let mut bad = 0;
    for x in elements {
        for y in elements {
            if bcr_le(x, y).unwrap() != ppr.le(x, y).unwrap() {
                bad += 1;
            }
        }
    }
    bad
}

#[test]
fn comparators_agree_on_rook_monoids() {
    for n in 1..=4 {
        let ctx = GroupContext::symmetric(n).unwrap();
        let ppr = PprOrder::new(&ctx).unwrap();
        assert_eq!(disagreements(&family(n, Family::Rook), &ppr), 0, "n={n}");
    }
}

#[test]
fn comparators_agree_on_symplectic_renner_monoid() {
    let elements = family(4, Family::RennerSp);
    assert_eq!(elements.len(), 57);
    let ctx = GroupContext::symplectic(2).unwrap();
    let ppr = PprOrder::new(&ctx).unwrap();
    assert_eq!(disagreements(&elements, &ppr), 0);
}

#[test]
fn one_line_order_is_a_partial_order() {
    for n in 1..=3 {
        let xs = family(n, Family::Rook);
        for x in &xs {
            assert!(bcr_le(x, x).unwrap());
            for y in &xs {
                if x != y && bcr_le(x, y).unwrap() {
                    assert!(!bcr_le(y, x).unwrap());
                }
                for z in &xs {
                    if bcr_le(x, y).unwrap() && bcr_le(y, z).unwrap() {
                        assert!(bcr_le(x, z).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn restricts_to_bruhat_order_on_permutations() {
    for n in 1..=5 {
        let ctx = GroupContext::symmetric(n).unwrap();
        for u in ctx.elements() {
            for v in ctx.elements() {
                let want = ctx.bruhat_le(u, v).unwrap();
                assert_eq!(ehresmann_le(u, v).unwrap(), want);
                assert_eq!(bcr_le(u.as_rook(), v.as_rook()).unwrap(), want);
            }
        }
    }
}

#[test]
fn symplectic_bruhat_order_is_induced_from_symmetric() {
    for l in 1..=3 {
        let ctx = GroupContext::symplectic(l).unwrap();
        for u in ctx.elements() {
            for v in ctx.elements() {
                assert_eq!(ctx.bruhat_le(u, v).unwrap(), ehresmann_le(u, v).unwrap());
            }
        }
    }
}

#[test]
fn standard_forms_are_unique_and_recompose() {
    let ctx = GroupContext::symmetric(4).unwrap();
    for x in family(4, Family::Rook) {
        let sf = standard_form(&x, &ctx).unwrap();
        assert_eq!(sf.recompose(), x);
        assert!(sf.e.is_idempotent_diagonal());
    }
}

#[test]
fn upper_triangular_iff_a_below_b() {
    let ctx = GroupContext::symmetric(4).unwrap();
    for x in family(4, Family::Rook) {
        let sf = standard_form(&x, &ctx).unwrap();
        let a_le_b = ctx.bruhat_le(&sf.a, &sf.b).unwrap();
        assert_eq!(x.is_upper_triangular(), a_le_b, "{x}");
    }
}

#[test]
fn symplectic_figure_poset() {
    let elements = family(4, Family::BorelSp);
    let one_line = build_poset(&elements, Comparator::OneLine).unwrap();
    let ctx = GroupContext::symplectic(2).unwrap();
    let ppr = build_poset(&elements, Comparator::Ppr(&ctx)).unwrap();
    assert_eq!(one_line.len(), 25);
    assert_eq!(one_line.covers.len(), 49);
    assert_eq!(one_line.covers, ppr.covers);
    assert_eq!(one_line.unique_minimum(), Some(&Rook::zero(4)));
    assert_eq!(one_line.unique_maximum(), Some(&Rook::identity(4)));

    let nil = build_poset(&family(4, Family::BorelSpNil), Comparator::OneLine).unwrap();
    assert_eq!(nil.len(), 12);
    let tops: Vec<String> = nil
        .maximal_elements()
        .iter()
        .map(|x| x.to_string())
        .collect();
    assert_eq!(tops, ["(0,0,2,1)", "(0,1,0,3)"]);
}

#[test]
fn symplectic_stirling_posets() {
    for l in 2..=3usize {
        let n = 2 * l;
        for k in 1..=l {
            let elements =
                enum_family(&FamilySpec::new(n, Family::BorelSp, Some(k)).unwrap()).unwrap();
            let h = build_poset(&elements, Comparator::OneLine).unwrap();
            assert!(h.graded, "l={l} k={k}");
            assert_eq!(h.unique_minimum(), Some(&Rook::trailing_identity(n, k)));
            let tops = h.maximal_elements();
            let expected = renner::counting::admissible_count(n, k).unwrap();
            assert_eq!(num_bigint::BigUint::from(tops.len()), expected);
            assert!(tops.iter().all(Rook::is_idempotent_diagonal));
        }
    }
}

#[test]
fn permutation_inputs_are_rooks() {
    let p = Permutation::new([2usize, 1]).unwrap();
    assert_eq!(p.as_rook().to_string(), "(2,1)");
}
