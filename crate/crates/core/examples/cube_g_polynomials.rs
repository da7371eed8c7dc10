//! g-polynomials of the cube face lattices by every available route.

use cubical_toric::toric::{g_cube, FaceComplex, GMethod};

fn main() -> cubical_toric::Result<()> {
    println!("d | recursion | gessel | nc | poset");
    for d in 0..=6 {
        let poset = FaceComplex::cube_boundary(d)?.toric_g()?;
        let routes: Vec<String> = GMethod::ALL
            .iter()
            .map(|&m| g_cube(d, m).map(|g| g.to_string()))
            .collect::<cubical_toric::Result<_>>()?;
        println!("{d} | {} | {poset}", routes.join(" | "));
    }
    Ok(())
}
