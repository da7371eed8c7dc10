//! The toric f-polynomial of cubes and cube boundaries by three routes.

use cubical_toric::cubical::{adin_h_from_f, FVector};
use cubical_toric::toric::{toric_f_cubical, toric_f_from_adin, FaceComplex};

fn main() -> cubical_toric::Result<()> {
    for n in 1..=5 {
        let complex = FaceComplex::cube_boundary(n)?;
        let fv = FVector::cube_boundary(n)?;
        let h = adin_h_from_f(&fv)?;
        println!("boundary of the {n}-cube, f = ({fv})");
        println!("  face poset : {}", complex.toric_f()?);
        println!("  f-vector   : {}", toric_f_cubical(&fv));
        println!("  Adin h     : {}", toric_f_from_adin(&h.normalized)?);
        println!("  toric g    : {}", complex.toric_g()?);
    }
    println!("solid 3-cube: {}", FaceComplex::cube(3)?.toric_f()?);
    Ok(())
}
