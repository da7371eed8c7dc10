//! Short, long and normalized Adin h-vectors, and the inverse map.

use std::fmt::Display;

use cubical_toric::cubical::{adin_h_from_f, f_from_h, FVector};

fn show<T: Display>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn main() -> cubical_toric::Result<()> {
    for text in ["8,12,6", "4,4", "8,12,6,1", "16,32,24,8"] {
        let fv = FVector::parse(text)?;
        let h = adin_h_from_f(&fv)?;
        h.verify_euler(&fv)?;
        println!("f = ({fv})");
        println!("  short h      = ({})", show(&h.short_h));
        println!("  long h       = ({})", show(&h.long_h));
        println!("  normalized h = ({})", show(&h.normalized));
        println!("  back to f    = ({})", f_from_h(&h.normalized)?);
    }
    Ok(())
}
