use cubical_toric::cubical::{adin_h_from_f, f_from_h, FVector};
use cubical_toric::ncpart::{enumerate_families, IntervalFamily, NcPartition};
use cubical_toric::poly::ratio;
use cubical_toric::toric::{toric_f_cubical, toric_f_from_adin};
use proptest::prelude::*;

/// A random noncrossing partition of 1..=d built by repeatedly closing blocks
/// on a stack, which can only produce nested (noncrossing) arcs.
fn nc_partition(max_d: usize) -> impl Strategy<Value = NcPartition> {
    (1..=max_d).prop_flat_map(|d| {
        proptest::collection::vec(any::<bool>(), d).prop_map(move |coins| {
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            let mut open: Vec<usize> = Vec::new();
            for (e, &join) in (1..=d).zip(&coins) {
                match open.last() {
                    Some(&top) if join => blocks[top].push(e),
                    _ => {
                        blocks.push(vec![e]);
                        open.push(blocks.len() - 1);
                    }
                }
                if e % 3 == 0 && open.len() > 1 {
                    open.pop();
                }
            }
            NcPartition::from_blocks(d, &blocks).expect("stack discipline keeps blocks noncrossing")
        })
    })
}

proptest! {
    #[test]
    fn alpha_is_an_involution(pi in nc_partition(30)) {
        let a = pi.alpha();
        prop_assert_eq!(a.alpha(), pi.clone());
        prop_assert_eq!(a.num_blocks() + pi.num_blocks(), pi.d() + 1);
    }

    #[test]
    fn partition_text_round_trips(pi in nc_partition(30)) {
        prop_assert_eq!(NcPartition::parse(&pi.to_string()).unwrap(), pi);
    }

    #[test]
    fn f_h_round_trip(counts in proptest::collection::vec(0u32..5000, 1..9)) {
        let fv = FVector::new(counts.iter().map(|&c| c as i64)).unwrap();
        let h = adin_h_from_f(&fv).unwrap();
        prop_assert_eq!(h.normalized[0].clone(), ratio(1, 1));
        prop_assert_eq!(f_from_h(&h.normalized).unwrap(), fv.clone());
        prop_assert_eq!(toric_f_from_adin(&h.normalized).unwrap(), toric_f_cubical(&fv));
    }

    #[test]
    fn family_text_round_trips(d in 1usize..=7, pick in any::<prop::sample::Index>()) {
        let all = enumerate_families(d, 8).unwrap();
        let s = pick.get(&all);
        prop_assert_eq!(&IntervalFamily::parse(d, &s.to_string()).unwrap(), s);
        prop_assert_eq!(&s.beta().beta(), s);
    }
}
