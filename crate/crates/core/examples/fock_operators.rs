//! The Chevalley operators on the Fock space.
//!
//! `cargo run --example fock_operators`

use higher_llt::fock::h_pairing;
use higher_llt::{Charge, FockVector, LaurentPoly, Multipartition, Result};

pub fn run() -> Result<()> {
    let s = Charge::new(3, [0, 2])?;
    let vac = FockVector::vacuum(s.clone());

    let v = vac.apply_f(0).apply_f(2).apply_f(1);
    println!("f_1 f_2 f_0 |∅> =");
    print!("{v}");

    let w = vac.apply_f(0).apply_f(0);
    let d = vac.apply_f_divided(0, 2)?;
    println!(
        "\nf_0^2 |∅> = [2] f_0^(2) |∅>: {}",
        w == d.scaled(&LaurentPoly::quantum_int(2))
    );

    // [e_i, f_i] acts on s_la by [<h_i, wt(la)>]
    let la: Multipartition = "2|1".parse()?;
    let x = FockVector::basis(s.clone(), la.clone())?;
    for i in 0..3 {
        let mut comm = x.apply_f(i).apply_e(i);
        comm.add_scaled(&x.apply_e(i).apply_f(i), &-&LaurentPoly::one())?;
        let h = h_pairing(&la, i, &s);
        let expected = x.scaled(&LaurentPoly::quantum_int_signed(h));
        println!(
            "i = {i}: h = {h:2}, [e_i, f_i] s_{la} = [h] s_{la}: {}",
            comm == expected
        );
    }

    println!("\ncoefficients of the first vector under q ↦ q^-1:");
    print!("{}", v.bar_coefficients());
    Ok(())
}

fn main() -> Result<()> {
    run()
}
