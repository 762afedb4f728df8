//! Bar involution from semi-infinite wedges, and the canonical basis it
//! defines, compared against the fast recursion.
//!
//! `cargo run --example wedge_oracle`

use higher_llt::wedge::{encode, minimal_length, Schedule, Straightener};
use higher_llt::{
    canonical_vector, Charge, FockVector, Multicharge, Multipartition, Result, WedgeOracle,
};

pub fn run() -> Result<()> {
    // a single straightening relation
    let mut st = Straightener::new(2, 2);
    println!("u_1 ∧ u_7 = {}", st.pair(1, 7));
    println!(
        "u_3 ∧ u_1 ∧ u_5 = {}",
        st.straighten(&[3, 1, 5], Schedule::Insertion)
    );

    let s = Charge::new(2, [0, 0])?;
    let mc = Multicharge::well_spaced(&s, 3);
    let mu: Multipartition = "2,1|-".parse()?;
    let l = minimal_length(&mu, &mc)?;
    println!(
        "\nmulticharge {mc}: {mu} ↦ {:?}",
        encode(&mu, &mc, l)?.entries
    );

    let oracle = WedgeOracle::new(mc);
    println!("\nbar(s_{mu}):");
    for (la, b) in oracle.bar_column(&mu)?.iter() {
        println!("  {la} : {b}");
    }

    let g = canonical_vector(&mu, &s)?;
    let twisted = oracle.canonical_basis_twisted(&mu)?;
    println!("\nG({mu}) from wedges:");
    print!("{twisted}");
    println!("agrees with the recursion: {}", &twisted == g.vector());

    let barred: FockVector = oracle.bar(g.vector())?;
    println!("bar-invariant: {}", &barred == g.vector());
    Ok(())
}

fn main() -> Result<()> {
    run()
}
