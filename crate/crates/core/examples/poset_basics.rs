//! Parse a poset, look at bounds and cuts, and write it back out.

use zdt::io::{parse_poset, write_poset};

fn main() -> zdt::Result<()> {
    let p = parse_poset(
        "poset W\n\
         elements a b c d\n\
         order a<c b<c b<d\n\
         end\n",
    )?;
    let ab = p.set_of(&["a", "b"])?;
    println!(
        "upper bounds of {{a,b}}: {}",
        p.fmt_set(&p.upper_bounds(&ab))
    );
    println!("cut of {{a,b}}:          {}", p.fmt_set(&p.cut(&ab)));
    println!(
        "sup of {{a,b}}:          {:?}",
        p.sup_of(&ab).map(|i| p.label(i))
    );

    let bd = p.set_of(&["b", "d"])?;
    println!("cut of {{b,d}}:          {}", p.fmt_set(&p.cut(&bd)));
    print!("\n{}", write_poset(&p));
    Ok(())
}
