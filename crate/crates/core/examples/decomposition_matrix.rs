//! Graded decomposition matrices, whole or one block at a time.
//!
//! `cargo run --example decomposition_matrix`

use higher_llt::fock::weight_of;
use higher_llt::{canonical_basis_up_to, decomposition_matrix, Charge, Multipartition, Result};

pub fn run() -> Result<()> {
    let s = Charge::new(2, [0, 1])?;
    let entries = canonical_basis_up_to(3, &s)?;
    print!("{}", decomposition_matrix(&entries, None)?);

    let s = Charge::new(3, [0, 0])?;
    let entries = canonical_basis_up_to(4, &s)?;
    let block: Multipartition = "3|1".parse()?;
    let w = weight_of(&block, &s);
    let m = decomposition_matrix(&entries, Some(&w))?;
    println!(
        "\ne = 3, block of {block}: {} columns, {} rows",
        m.cols.len(),
        m.rows.len()
    );
    print!("{m}");

    // specialising q = 1 gives ungraded multiplicities
    let col = &m.cols[0];
    let total: i64 = m
        .rows
        .iter()
        .filter_map(|row| m.get(row, col))
        .map(|d| i64::try_from(d.at_one()).unwrap_or(i64::MAX))
        .sum();
    println!("column {col} at q = 1 sums to {total}");
    Ok(())
}

fn main() -> Result<()> {
    run()
}
