//! Weight exponents and the weighted sums that produce Q and C.

use cubical_toric::ncpart::{
    enumerate_nc, family_weight_sum, weight_exponent, weight_k_exponent, IntervalFamily,
    NcPartition,
};
use cubical_toric::toric::{c_poly, c_poly_nc};

fn main() -> cubical_toric::Result<()> {
    let pi = NcPartition::parse("(136)(2)(4)(5)")?;
    let s = IntervalFamily::parse(6, "{[2,3],[4],[6,1]}")?;
    println!("wt_S({pi}) = x^{}", weight_exponent(&pi, &s)?);
    for k in 0..=7 {
        println!("wt_{k}({pi}) = x^{}", weight_k_exponent(&pi, k)?);
    }

    let parts = enumerate_nc(6)?;
    println!(
        "\nsum over NC(6) of wt_S = {}",
        family_weight_sum(&parts, &s)?
    );
    println!("C(6,3,1) by enumeration = {}", c_poly_nc(&s)?);
    println!("C(6,3,1) by formula     = {}", c_poly(6, 3, 1)?);
    Ok(())
}
