//! The Z-way-below relation and the continuity properties built on it.

use zdt::continuity::{quasicontinuity, s_continuity, weak_s_continuity, WayBelow};
use zdt::{fixtures, SubsetSystem};

fn main() -> zdt::Result<()> {
    for p in [fixtures::diamond(), fixtures::fan3()] {
        for z in [SubsetSystem::Directed, SubsetSystem::Finite] {
            let wb = WayBelow::of(&p, z)?;
            let pairs: Vec<String> = (0..p.len())
                .flat_map(|x| (0..p.len()).map(move |y| (x, y)))
                .filter(|&(x, y)| wb.below(x, y))
                .map(|(x, y)| format!("{}<<{}", p.label(x), p.label(y)))
                .collect();
            println!("{} under {z}: {}", p.name(), pairs.join(" "));
            println!(
                "  weakly continuous {}, continuous {}, quasicontinuous {}",
                weak_s_continuity(&wb).keyword(),
                s_continuity(&wb).keyword(),
                quasicontinuity(&wb)?.keyword()
            );
        }
    }
    Ok(())
}
