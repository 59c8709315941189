//! HOMFLY of a closure is unchanged by the word moves used in the search.

use proptest::prelude::*;

use linkbound::braid::BraidWord;
use linkbound::diagram::PDDiagram;
use linkbound::homfly::{homfly_braid, homfly_pd};

fn word() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec((1..n as i32, any::<bool>()), 0..=10)
            .prop_map(move |v| BraidWord::new(n, v.into_iter().map(|(g, s)| if s { g } else { -g }).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn moves_keep_homfly(w in word(), k in 0usize..10) {
        let p = homfly_braid(&w).unwrap();
        prop_assert_eq!(&homfly_braid(&w.reduce_word()).unwrap(), &p);
        prop_assert_eq!(&homfly_braid(&w.free_reduce()).unwrap(), &p);
        prop_assert_eq!(&homfly_braid(&w.rotate(k)).unwrap(), &p);
        if let Some(d) = w.destabilize_isolated() {
            prop_assert_eq!(&homfly_braid(&d).unwrap(), &p);
        }
    }

    #[test]
    fn mirror_rule(w in word()) {
        let p = homfly_braid(&w).unwrap();
        prop_assert_eq!(homfly_braid(&w.mirror()).unwrap(), p.mirror());
        prop_assert_eq!(homfly_pd(&PDDiagram::from_braid_closure(&w).mirror()).unwrap(), p.mirror());
    }

    #[test]
    fn sums_multiply(a in word(), b in word()) {
        let (pa, pb) = (homfly_braid(&a).unwrap(), homfly_braid(&b).unwrap());
        prop_assert_eq!(homfly_braid(&a.connected_sum(&b)).unwrap(), &pa * &pb);
        let split = &(&pa * &pb) * &linkbound::poly::LaurentPoly2::delta();
        prop_assert_eq!(homfly_braid(&a.split_union(&b)).unwrap(), split);
    }
}
