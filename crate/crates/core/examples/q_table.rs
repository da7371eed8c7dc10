//! Rows of Q_{d,k}: closed formula, Pascal form and the enumeration model.

use cubical_toric::toric::{q_poly_pascal, QTable};

fn main() -> cubical_toric::Result<()> {
    for d in 0..=4 {
        print!("{}", QTable::compute(d));
    }

    let d = 6;
    let formula = QTable::compute(d);
    let model = QTable::compute_nc(d, 12)?;
    println!(
        "\nd = {d}: enumeration matches formula: {}",
        formula == model
    );
    println!("Q_(6,3) = {} = {}", formula.get(3), q_poly_pascal(6, 3)?);
    println!("json: {}", formula.to_json());
    Ok(())
}
