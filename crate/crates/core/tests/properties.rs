use hss_rigidity::diagram::{catalog, k_diagrammatic, k_invariant, MarkedDiagram};
use hss_rigidity::root_system::{Family, Root, RootSystem};
use hss_rigidity::schur::{kostka, Partition};
use hss_rigidity::weyl;
use proptest::prelude::*;

fn any_type() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (1usize..=6).prop_map(|n| (Family::A, n)),
        (2usize..=6).prop_map(|n| (Family::B, n)),
        (2usize..=6).prop_map(|n| (Family::C, n)),
        (3usize..=6).prop_map(|n| (Family::D, n)),
        (6usize..=7).prop_map(|n| (Family::E, n)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_act_by_isometries((f, n) in any_type(), word in prop::collection::vec(0usize..7, 0..12), a in 0usize..64, b in 0usize..64) {
        let rs = RootSystem::build(f, n).unwrap();
        let word: Vec<usize> = word.into_iter().map(|j| j % n).collect();
        let pos = rs.positive_roots();
        let (x, y) = (&pos[a % pos.len()], &pos[b % pos.len()]);
        let (wx, wy) = (weyl::apply(&rs, &word, x), weyl::apply(&rs, &word, y));
        prop_assert!(rs.is_root(wx.coeffs()));
        prop_assert_eq!(rs.inner(wx.coeffs(), wy.coeffs()), rs.inner(x.coeffs(), y.coeffs()));
    }

    #[test]
    fn reduced_words_have_inversion_sets((f, n) in any_type(), word in prop::collection::vec(0usize..7, 0..10)) {
        let rs = RootSystem::build(f, n).unwrap();
        let mut reduced: Vec<usize> = Vec::new();
        for j in word.into_iter().map(|j| j % n) {
            reduced.push(j);
            if weyl::inversion_set(&rs, &reduced).is_err() {
                reduced.pop();
            }
        }
        let inv = weyl::inversion_set(&rs, &reduced).unwrap();
        prop_assert_eq!(inv.len(), reduced.len());
        let inverse: Vec<usize> = reduced.iter().rev().copied().collect();
        for r in &inv {
            prop_assert!(!weyl::apply(&rs, &inverse, r).is_positive());
        }
    }

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(0u32..6, 0..6)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let a = Partition::new(parts).unwrap();
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.conjugate().size(), a.size());
    }

    #[test]
    fn kostka_is_symmetric_in_content(parts in prop::collection::vec(1u32..4, 1..4), perm_seed in 0usize..24) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let a = Partition::new(parts).unwrap();
        let size = a.size();
        let mut content = vec![0u32; 4];
        for i in 0..size as usize {
            content[(i * 7 + perm_seed) % 4] += 1;
        }
        let base = kostka(&a, &content).unwrap();
        let mut rotated = content.clone();
        rotated.rotate_left(perm_seed % 4);
        prop_assert_eq!(kostka(&a, &rotated).unwrap(), base);
        let mut reversed = content;
        reversed.reverse();
        prop_assert_eq!(kostka(&a, &reversed).unwrap(), base);
    }
}

#[test]
fn branch_distance_gives_k() {
    for md in catalog(7) {
        if let Some(k) = k_diagrammatic(&md) {
            assert_eq!(k, k_invariant(&md).unwrap(), "{md}");
        }
    }
}

#[test]
fn simple_reflections_fix_the_rest_of_the_basis() {
    let rs = RootSystem::build(Family::E, 7).unwrap();
    for j in 0..7 {
        let a = Root::simple(7, j);
        assert_eq!(rs.reflect(&a, j), a.neg());
        for i in (0..7).filter(|&i| rs.edge(i, j) == 0 && i != j) {
            assert_eq!(rs.reflect(&Root::simple(7, i), j), Root::simple(7, i));
        }
    }
}

#[test]
fn cominuscule_nodes() {
    let hermitian: Vec<String> = [
        (Family::E, 6),
        (Family::E, 7),
        (Family::D, 5),
        (Family::B, 4),
    ]
    .iter()
    .flat_map(|&(f, n)| (0..n).map(move |g| MarkedDiagram::new(f, n, g).unwrap()))
    .filter(|md| md.hermitian)
    .map(|md| md.to_string())
    .collect();
    assert_eq!(
        hermitian,
        ["E6:1", "E6:6", "E7:7", "D5:1", "D5:4", "D5:5", "B4:1"]
    );
}
