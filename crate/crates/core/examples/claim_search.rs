//! Exhaustive search over small posets for two registered claims, one that
//! holds and one that does not for the finite system.

use zdt::claims::{run_claim, sizes_up_to};
use zdt::enumerate::EnumMode;
use zdt::report::render_all;
use zdt::SubsetSystem;

fn main() -> zdt::Result<()> {
    let systems = [SubsetSystem::Finite, SubsetSystem::Directed];
    for id in ["lemma-wmc", "thm-local-wmc"] {
        let reports = run_claim(id, &sizes_up_to(3), EnumMode::UpToIso, &systems, 4)?;
        print!("{}", render_all(&reports));
    }
    Ok(())
}
