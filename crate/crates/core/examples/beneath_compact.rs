//! The beneath relation, compact elements, and the two properties built on
//! them.

use zdt::continuity::Beneath;
use zdt::{fixtures, SubsetSystem};

fn main() -> zdt::Result<()> {
    for p in [fixtures::vee(), fixtures::fan3(), fixtures::diamond()] {
        for z in [SubsetSystem::Directed, SubsetSystem::Finite] {
            let b = Beneath::of(&p, z)?;
            let pairs: Vec<String> = b
                .pairs()
                .iter()
                .map(|&(x, y)| format!("{}-<{}", p.label(x), p.label(y)))
                .collect();
            println!("{} under {z}: {}", p.name(), pairs.join(" "));
            println!(
                "  compacts {}, delta-continuous {}, prealgebraic {}",
                p.fmt_set(&b.compacts()),
                b.delta_continuity().keyword(),
                b.prealgebraicity().keyword()
            );
        }
    }
    Ok(())
}
