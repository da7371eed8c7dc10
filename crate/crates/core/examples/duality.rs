//! Coefficient mirror symmetries of Q and C.

use cubical_toric::toric::QTable;

fn main() -> cubical_toric::Result<()> {
    let d = 5;
    let row = QTable::compute(d);
    for k in 0..=d + 1 {
        let mirrored = row.get(d + 1 - k).mirror(d + 1)?;
        println!(
            "Q_({d},{k}) = {:<28} mirror of Q_({d},{}) = {mirrored}",
            row.get(k).to_string(),
            d + 1 - k
        );
    }
    for (i, j) in [(1, 0), (2, 1), (3, 0)] {
        let c = row.c_poly(i, j)?;
        let dual = row.c_poly(i, d - i - j)?.mirror(d + 1)?;
        println!(
            "C({d},{i},{j}) = {c}; mirrored C({d},{i},{}) = {dual}",
            d - i - j
        );
    }
    Ok(())
}
