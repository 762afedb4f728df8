//! The limit e = ∞, taken at a modulus too large to matter.
//!
//! `cargo run --example e_infinity`

use higher_llt::canonical::{canonical_basis_up_to_einf, einf_modulus};
use higher_llt::{canonical_vector_einf, Multipartition, Result};

pub fn run() -> Result<()> {
    let s = [0, 1, 0];
    let mu: Multipartition = "2,1|-|1".parse()?;
    let g = canonical_vector_einf(&mu, &s, mu.size())?;
    println!(
        "G({mu}) for s = {s:?}, computed at e = {} and e = {}",
        einf_modulus(&s, mu.size()),
        einf_modulus(&s, mu.size()) + 1
    );
    print!("{}", g.vector());

    let all = canonical_basis_up_to_einf(3, &[0, 2])?;
    println!("\ns = (0, 2), size <= 3: {} vectors", all.len());
    for entry in &all {
        println!("  G({}) has {} terms", entry.label(), entry.vector().len());
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
