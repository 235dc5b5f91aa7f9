//! Members of each built-in subset system on the diamond.

use zdt::{fixtures, SubsetSystem};

fn main() -> zdt::Result<()> {
    let p = fixtures::diamond();
    for z in SubsetSystem::ALL {
        let members = z.members(&p)?;
        let gens: Vec<String> = z.generators(&p)?.iter().map(|g| p.fmt_set(g)).collect();
        println!(
            "{:<10} {:>2} members, generators {}",
            z.name(),
            members.len(),
            gens.join(" ")
        );
    }
    Ok(())
}
