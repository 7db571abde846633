//! Soft-set operations against a section-by-section model built from
//! `BTreeSet`s.

use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use softtop::{Signature, SoftSet};

type Model = Vec<BTreeSet<usize>>;
type SectionOp = dyn Fn(&BTreeSet<usize>, &BTreeSet<usize>) -> BTreeSet<usize>;

fn model(s: &SoftSet) -> Model {
    let sig = s.signature();
    (0..sig.n_params())
        .map(|e| {
            s.section_names(e)
                .into_iter()
                .map(|n| sig.point_index(n).unwrap())
                .collect()
        })
        .collect()
}

fn universe(n: usize) -> BTreeSet<usize> {
    (0..n).collect()
}

fn sig_and_sets(k: usize) -> impl Strategy<Value = (Arc<Signature>, Vec<SoftSet>)> {
    (1usize..=4, 1usize..=4).prop_flat_map(move |(p, e)| {
        let sig = Arc::new(Signature::anonymous(p, e).unwrap());
        let full = sig.full_mask();
        proptest::collection::vec(any::<u64>(), k).prop_map(move |raw| {
            let sets = raw
                .iter()
                .map(|&r| SoftSet::from_cells(&sig, r & full))
                .collect();
            (sig.clone(), sets)
        })
    })
}

proptest! {
    #[test]
    fn operations_match_the_model((sig, sets) in sig_and_sets(2)) {
        let (a, b) = (&sets[0], &sets[1]);
        let (ma, mb) = (model(a), model(b));
        let u = universe(sig.n_points());
        let zip = |f: &SectionOp| -> Model {
            ma.iter().zip(&mb).map(|(x, y)| f(x, y)).collect()
        };
        prop_assert_eq!(model(&a.union(b).unwrap()), zip(&|x, y| x | y));
        prop_assert_eq!(model(&a.intersection(b).unwrap()), zip(&|x, y| x & y));
        prop_assert_eq!(model(&a.difference(b).unwrap()), zip(&|x, y| x - y));
        let comp: Model = ma.iter().map(|x| &u - x).collect();
        prop_assert_eq!(model(&a.complement()), comp);
        let subset = ma.iter().zip(&mb).all(|(x, y)| x.is_subset(y));
        prop_assert_eq!(a.is_subset(b).unwrap(), subset);
        for x in 0..sig.n_points() {
            prop_assert_eq!(a.member_at(x), ma.iter().all(|s| s.contains(&x)));
            prop_assert_eq!(a.point_disjoint_at(x), ma.iter().all(|s| !s.contains(&x)));
        }
    }

    #[test]
    fn lattice_laws((_sig, sets) in sig_and_sets(3)) {
        let (a, b, c) = (&sets[0], &sets[1], &sets[2]);
        let ab = a.union(b).unwrap();
        prop_assert_eq!(&ab, &b.union(a).unwrap());
        prop_assert_eq!(a.union(&b.union(c).unwrap()).unwrap(), ab.union(c).unwrap());
        prop_assert_eq!(
            a.intersection(&b.union(c).unwrap()).unwrap(),
            a.intersection(b).unwrap().union(&a.intersection(c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.union(&a.intersection(b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert!(a.is_subset(&ab).unwrap());
    }

    #[test]
    fn restriction_is_sectionwise((sig, sets) in sig_and_sets(1), pick in 1u64..16) {
        let keep = pick & sig.point_mask();
        prop_assume!(keep != 0);
        let names: Vec<&str> = (0..sig.n_points())
            .filter(|x| keep >> x & 1 == 1)
            .map(|x| sig.points()[x].as_str())
            .collect();
        let r = sets[0].restrict(&names).unwrap();
        let rsig = r.signature();
        for e in 0..sig.n_params() {
            let want: Vec<&str> = sets[0]
                .section_names(e)
                .into_iter()
                .filter(|n| names.contains(n))
                .collect();
            prop_assert_eq!(r.section_names(e), want);
        }
        prop_assert_eq!(rsig.n_points(), names.len());
    }
}

#[test]
fn operations_reject_mixed_signatures() {
    let a = SoftSet::null(&Arc::new(Signature::anonymous(1, 2).unwrap()));
    let b = SoftSet::null(&Arc::new(Signature::anonymous(2, 1).unwrap()));
    assert!(a.union(&b).is_err());
    assert!(a.is_subset(&b).is_err());
}
