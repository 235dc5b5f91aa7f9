//! Graphviz for DIAMOND with the finite beneath relation drawn dashed.
//! Pipe into `dot -Tsvg` to render.

use zdt::dot::{export_dot, Overlay};
use zdt::{fixtures, SubsetSystem};

fn main() -> zdt::Result<()> {
    print!(
        "{}",
        export_dot(&fixtures::diamond(), Overlay::Beneath, SubsetSystem::Finite)?
    );
    Ok(())
}
