//! Galois connections from the diamond to a three element chain, and how
//! each one fares against cuts, closed sets and the beneath relation.

use zdt::galois::{galois_connections, galois_lemma_suite};
use zdt::{fixtures, SubsetSystem};

fn main() -> zdt::Result<()> {
    let (t, s) = (fixtures::diamond(), fixtures::chain3());
    for gc in galois_connections(&t, &s)? {
        let suite = galois_lemma_suite(&gc, SubsetSystem::Directed)?;
        println!(
            "d: {:<26} g: {:<18} cuts {} closed {} beneath {}{}",
            gc.lower().describe(),
            gc.upper().describe(),
            suite.cuts.keyword(),
            suite.closed.keyword(),
            suite.beneath.keyword(),
            if suite.empty_set_breaks_cuts {
                "  (g breaks the cut of the empty set)"
            } else {
                ""
            }
        );
    }
    Ok(())
}
