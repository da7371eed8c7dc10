//! Shelling components: Adin's contributions, the h-vector from a c-vector,
//! and the toric f-polynomial assembled from C_{d,i,j}.

use cubical_toric::cubical::{delta_h, h_from_cvector, CVector, ShellingType};
use cubical_toric::toric::{c_poly, toric_f_from_adin, toric_f_from_shelling};

fn main() -> cubical_toric::Result<()> {
    // Boundary of the 3-cube: bottom, front, back, left, right, top.
    let types = [(0, 0), (1, 0), (1, 0), (1, 1), (1, 1), (0, 2)];
    let c = CVector::from_types(2, &types)?;
    for &(i, j) in &types {
        println!(
            "type ({i},{j}): delta h = {}",
            delta_h(ShellingType::new(2, i, j)?, 2)?
        );
    }
    let h: Vec<String> = h_from_cvector(&c).iter().map(ToString::to_string).collect();
    println!("h = ({})", h.join(","));
    println!(
        "C(2,1,0) = {}, C(2,1,1) = {}",
        c_poly(2, 1, 0)?,
        c_poly(2, 1, 1)?
    );
    println!("f from shelling = {}", toric_f_from_shelling(&c)?);
    println!(
        "f from h        = {}",
        toric_f_from_adin(&h_from_cvector(&c))?
    );

    let file = "# square boundary\nd 1\n1 0 2\n0 1 1\n";
    println!(
        "square: {}",
        toric_f_from_shelling(&CVector::parse(file, None)?)?
    );
    Ok(())
}
