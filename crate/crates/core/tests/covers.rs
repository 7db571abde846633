use std::sync::Arc;

use proptest::prelude::*;
use softtop::catalog::space_b;
use softtop::covers::{
    exact_subcover, greedy_subcover, has_fip, is_cover, minimal_subcover, restrict_cover, Cover,
    Strategy,
};
use softtop::{Signature, SoftSet, Witness};

fn union_of(members: &[u64], pick: u32) -> u64 {
    (0..members.len())
        .filter(|i| pick >> i & 1 == 1)
        .fold(0, |a, i| a | members[i])
}

fn brute_min(target: u64, members: &[u64]) -> u32 {
    (0u32..1 << members.len())
        .filter(|&p| target & !union_of(members, p) == 0)
        .map(u32::count_ones)
        .min()
        .unwrap()
}

proptest! {
    #[test]
    fn exact_is_minimum_and_covers(members in proptest::collection::vec(0u64..1 << 10, 1..10), t in any::<u64>()) {
        let target = t & members.iter().fold(0, |a, &m| a | m);
        let exact = exact_subcover(target, &members).unwrap();
        let greedy = greedy_subcover(target, &members).unwrap();
        let cover_of = |idx: &[usize]| idx.iter().fold(0, |a, &i| a | members[i]);
        prop_assert_eq!(target & !cover_of(&exact), 0);
        prop_assert_eq!(target & !cover_of(&greedy), 0);
        prop_assert_eq!(exact.len() as u32, brute_min(target, &members));
        prop_assert!(greedy.len() >= exact.len());
    }

    #[test]
    fn non_covers_are_detected(members in proptest::collection::vec(0u64..1 << 8, 0..6)) {
        let u = members.iter().fold(0, |a, &m| a | m);
        prop_assume!(u != 0xff);
        prop_assert!(exact_subcover(0xff, &members).is_none());
        prop_assert!(greedy_subcover(0xff, &members).is_none());
    }

    #[test]
    fn fip_matches_subfamily_brute_force(cells in proptest::collection::vec(0u64..1 << 6, 1..8)) {
        let sig = Arc::new(Signature::anonymous(2, 3).unwrap());
        let family: Vec<SoftSet> = cells.iter().map(|&c| SoftSet::from_cells(&sig, c)).collect();
        let brute = (1u32..1 << cells.len()).all(|p| {
            (0..cells.len()).filter(|i| p >> i & 1 == 1).fold(0x3f, |a, i| a & cells[i]) != 0
        });
        let v = has_fip(&family).unwrap();
        prop_assert_eq!(v.holds, brute);
        if let Witness::Family(null) = &v.witness {
            let meet = null.iter().fold(SoftSet::absolute(&sig), |a, s| a.intersection(s).unwrap());
            prop_assert!(meet.is_null());
        }
    }
}

#[test]
fn subcover_of_space_b() {
    let (b, [f1, f2, f3]) = space_b();
    let sig = b.signature();
    let cover = Cover::new(
        SoftSet::absolute(sig),
        vec![f3.clone(), f1.clone(), f2.clone()],
    )
    .unwrap();
    assert!(cover.is_open_in(&b));
    let exact = minimal_subcover(&cover, Strategy::Exact);
    assert_eq!(exact.members.len(), 2);
    assert!(is_cover(&exact.members, &SoftSet::absolute(sig)).unwrap());
    assert!(Cover::new(SoftSet::absolute(sig), vec![f1, f3]).is_err());
}

#[test]
fn restricted_covers_pull_back() {
    let sig = Arc::new(Signature::new(["a", "b", "c"], ["e1", "e2"]).unwrap());
    let seeds: Vec<SoftSet> = [0b000011u64, 0b010010, 0b100100]
        .iter()
        .map(|&c| SoftSet::from_cells(&sig, c))
        .collect();
    let t = softtop::topology::generate(&sig, &seeds).unwrap();
    let target = SoftSet::constant(&sig, &["b", "c"]).unwrap();
    let members: Vec<SoftSet> = t
        .members()
        .into_iter()
        .filter(|m| !m.is_absolute())
        .collect();
    assert!(is_cover(&members, &target).unwrap());
    let cover = Cover::new(target.clone(), members).unwrap();
    let r = restrict_cover(&cover, &t, &["b", "c"]).unwrap();
    let sub = minimal_subcover(&r.cover, Strategy::Exact);
    let back = r.pull_back(&cover, &sub.indices);
    assert!(is_cover(&back, &target).unwrap());
}
