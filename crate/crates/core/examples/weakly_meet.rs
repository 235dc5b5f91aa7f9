//! FAN3 stops being weakly meet once every finite set counts, and the
//! three point antichain is locally weakly meet without being weakly meet.

use zdt::continuity::{is_locally_weakly_meet, weakly_meet};
use zdt::report::Outcome;
use zdt::topology::ZScott;
use zdt::{fixtures, SubsetSystem};

fn main() -> zdt::Result<()> {
    let p = fixtures::fan3();
    for z in [SubsetSystem::Directed, SubsetSystem::Finite] {
        match weakly_meet(&ZScott::new(&p, z)?) {
            Outcome::Fails(w) => print!("FAN3 under {z}: not weakly meet\n{}", w.render()),
            o => println!("FAN3 under {z}: {}", o.keyword()),
        }
    }

    let a3 = fixtures::antichain(3);
    let zs = ZScott::new(&a3, SubsetSystem::Finite)?;
    println!(
        "\nANTI3 under finite: weakly meet {}, locally weakly meet {}, lower hereditary {}",
        weakly_meet(&zs).holds(),
        is_locally_weakly_meet(&a3, SubsetSystem::Finite)?,
        zs.is_lower_hereditary()?
    );
    Ok(())
}
