//! NC(d), partition statistics and the involution alpha.

use cubical_toric::ncpart::{enumerate_nc, NcPartition};

fn main() -> cubical_toric::Result<()> {
    for d in 1..=8 {
        println!("|NC({d})| = {}", enumerate_nc(d)?.len());
    }

    let pi = NcPartition::parse("(136)(2)(4)(5)")?;
    let stats = pi.stats();
    println!("\npi = {pi}");
    println!("alpha(pi) = {}", pi.alpha());
    println!("nonsingleton blocks: {}", stats.block_count);
    println!("singletons: {:?}", stats.singletons);
    println!("antisingletons: {:?}", stats.antisingletons);

    println!("\nNC(4) with alpha:");
    for pi in enumerate_nc(4)? {
        println!("  {pi:<10} -> {}", pi.alpha());
    }
    Ok(())
}
