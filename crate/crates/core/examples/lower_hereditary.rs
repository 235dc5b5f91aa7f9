//! The five lower hereditary conditions; LADDER has (3) without (5).

use zdt::topology::lemma_lh_conditions;
use zdt::{fixtures, SubsetSystem};

fn main() -> zdt::Result<()> {
    for p in [
        fixtures::ladder(3, 2),
        fixtures::fan3(),
        fixtures::diamond(),
    ] {
        for z in [SubsetSystem::Chains, SubsetSystem::Finite] {
            let c = lemma_lh_conditions(&p, z)?;
            let bits: Vec<u8> = c.as_array().iter().map(|&b| u8::from(b)).collect();
            println!(
                "{:<8} {z:<8} conditions {bits:?} pattern {}",
                p.name(),
                c.pattern_holds()
            );
        }
    }
    Ok(())
}
