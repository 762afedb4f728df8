//! The classical LLT algorithm for a single Fock space.
//!
//! `cargo run --example level_one_llt`

use higher_llt::{llt_canonical, Partition, Result};

pub fn run() -> Result<()> {
    let e = 2;
    for n in 0..=5 {
        for mu in Partition::all(n) {
            if !mu.is_regular(e) {
                continue;
            }
            let g = llt_canonical(&mu, e, 0)?;
            println!("G({mu})");
            print!("{g}");
        }
    }

    // a larger modulus
    let mu = Partition::new(vec![3, 2, 1])?;
    println!("\ne = 3, G({mu})");
    print!("{}", llt_canonical(&mu, 3, 0)?);
    Ok(())
}

fn main() -> Result<()> {
    run()
}
