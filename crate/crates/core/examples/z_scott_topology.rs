//! Closed and open sets of the Z-Scott topology on VEE, for two systems.

use zdt::topology::ZScott;
use zdt::{fixtures, SubsetSystem};

fn main() -> zdt::Result<()> {
    let p = fixtures::vee();
    for z in [SubsetSystem::Directed, SubsetSystem::Finite] {
        let zs = ZScott::new(&p, z)?;
        println!("Z = {z}");
        print!("closed:\n{}", zs.gamma()?.render(&p));
        print!("open:\n{}", zs.sigma()?.render(&p));
        let ab = p.set_of(&["a", "b"])?;
        println!("closure of {{a,b}}: {}\n", p.fmt_set(&zs.closure(&ab)));
    }
    Ok(())
}
