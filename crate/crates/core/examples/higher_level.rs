//! Canonical basis vectors of a level-two Fock space at e = 2.
//!
//! `cargo run --example higher_level`

use higher_llt::{CanonicalBasis, Charge, Multipartition, Result};

pub fn run() -> Result<()> {
    let s = Charge::new(2, [0, 0])?;
    let engine = CanonicalBasis::new(2)?;

    for text in ["2,1|1", "4|-"] {
        let mu: Multipartition = text.parse()?;
        let g = engine.canonical_vector(&mu, &s)?;
        println!("G({mu}), {} terms", g.vector().len());
        print!("{}", g.vector());
    }

    // everything up to size 6, memoised in the same engine
    let all = engine.basis_up_to(6, &s)?;
    let terms: usize = all.iter().map(|g| g.vector().len()).sum();
    println!(
        "\n{} vectors of size <= 6, {terms} terms in total",
        all.len()
    );
    println!("{} labels cached", engine.cached());
    Ok(())
}

fn main() -> Result<()> {
    run()
}
