//! δ(P) for a small poset, its unit, and the monad and algebra checks.

use zdt::lattice::DeltaObject;
use zdt::monad::{em_theorem, is_delta_cpo, monad_laws};
use zdt::{fixtures, SubsetSystem};

fn main() -> zdt::Result<()> {
    let z = SubsetSystem::Directed;
    for p in [fixtures::vee(), fixtures::lambda(), fixtures::diamond()] {
        let d = DeltaObject::new(&p, z)?;
        let elems: Vec<String> = d.elements().iter().map(|a| p.fmt_set(a)).collect();
        println!("{}: delta = {}", p.name(), elems.join(" "));
        println!("  unit: {}", d.eta()?.describe());
        println!(
            "  monad laws {}, algebra theorem {}, delta cpo {}",
            monad_laws(&p, z)?.keyword(),
            em_theorem(&p, z)?.keyword(),
            is_delta_cpo(&p, z)?
        );
    }
    Ok(())
}
