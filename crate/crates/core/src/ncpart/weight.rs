use rayon::prelude::*;

use super::{IntervalFamily, NcPartition};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Exponent `e` with `wt_S(π) = x^e`.
///
/// Each nonsingleton block contributes one; so does each singleton covered
/// by `S`, and each antisingleton `k` whose pair `{k, k+1}` sits inside one
/// interval of `S` (for `k = d` that means the last interval wraps).
pub fn weight_exponent(pi: &NcPartition, family: &IntervalFamily) -> Result<usize> {
    if pi.d() != family.d() {
        return Err(Error::DimensionMismatch {
            left: pi.d(),
            right: family.d(),
        });
    }
    let stats = pi.stats();
    Ok(stats.block_count
        + stats.singletons.intersection(family.covered()).len()
        + stats
            .antisingletons
            .intersection(family.internal_pairs())
            .len())
}

/// The family behind `wt_k`: `[1,d]*` for `k = 0`, `[k,d]` for `1 <= k <= d`,
/// and the empty family for `k = d + 1`.
pub fn weight_k_family(d: usize, k: usize) -> Result<IntervalFamily> {
    match k {
        0 => Ok(IntervalFamily::star(d)),
        k if k <= d => IntervalFamily::tail(d, k),
        k if k == d + 1 => Ok(IntervalFamily::empty(d)),
        k => Err(Error::OutOfRange {
            what: "weight index k",
            value: k as i64,
            allowed: format!("0..={}", d + 1),
        }),
    }
}

pub fn weight_k_exponent(pi: &NcPartition, k: usize) -> Result<usize> {
    weight_exponent(pi, &weight_k_family(pi.d(), k)?)
}

/// `Σ_π wt_S(π)` over the supplied partitions (normally all of `NC(d)`).
pub fn family_weight_sum(partitions: &[NcPartition], family: &IntervalFamily) -> Result<Poly> {
    let d = family.d();
    let tally = partitions
        .par_iter()
        .map(|pi| {
            let mut t = vec![0u64; d + 2];
            t[weight_exponent(pi, family)?] += 1;
            Ok::<_, crate::error::Error>(t)
        })
        .try_reduce(
            || vec![0u64; d + 2],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    Ok(Poly::from_ints(tally))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpart::enumerate_nc;

    fn nc(s: &str) -> NcPartition {
        NcPartition::parse(s).unwrap()
    }

    #[test]
    fn definition_examples() {
        let pi = nc("(136)(2)(4)(5)");
        let s = IntervalFamily::parse(6, "{[2,3],[4],[6,1]}").unwrap();
        assert_eq!(weight_exponent(&pi, &s).unwrap(), 4);
        assert_eq!(weight_k_exponent(&pi, 7).unwrap(), 1);
        assert_eq!(weight_k_exponent(&pi, 0).unwrap(), 5);
        assert_eq!(weight_k_exponent(&nc("(12)"), 1).unwrap(), 2);
        assert_eq!(weight_k_exponent(&nc("(1)(2)"), 1).unwrap(), 2);
    }

    #[test]
    fn closed_form_matches_definition() {
        // block(π) + sing_S(π) + sing_{[1,d]-S'}(α(π))
        for d in 1..=6 {
            let parts = enumerate_nc(d).unwrap();
            for s in crate::ncpart::enumerate_families(d, 8).unwrap() {
                let dual_gaps = s.beta().complement().covered();
                for pi in &parts {
                    let st = pi.stats();
                    let alpha_singletons = pi.alpha().stats().singletons;
                    let closed = st.block_count
                        + st.singletons.intersection(s.covered()).len()
                        + alpha_singletons.intersection(dual_gaps).len();
                    assert_eq!(
                        weight_exponent(pi, &s).unwrap(),
                        closed,
                        "d={d} π={pi} S={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn special_families() {
        for d in 1..=7 {
            for pi in enumerate_nc(d).unwrap() {
                let st = pi.stats();
                assert_eq!(
                    weight_exponent(&pi, &IntervalFamily::empty(d)).unwrap(),
                    st.block_count
                );
                let expect = st.total_blocks() + pi.alpha().stats().singletons.len();
                assert_eq!(
                    weight_exponent(&pi, &IntervalFamily::star(d)).unwrap(),
                    expect
                );
            }
        }
    }

    #[test]
    fn errors() {
        let pi = nc("(12)");
        assert!(matches!(
            weight_exponent(&pi, &IntervalFamily::empty(3)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(weight_k_exponent(&pi, 4).is_err());
    }

    #[test]
    fn weight_sum_small() {
        let parts = enumerate_nc(2).unwrap();
        let s = IntervalFamily::parse(2, "{[1,2]}").unwrap();
        assert_eq!(
            family_weight_sum(&parts, &s).unwrap(),
            Poly::from_ints([0, 0, 2])
        );
    }
}
