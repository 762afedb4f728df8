//! Driving the command-line front end in-process and reading its JSON.
//!
//! `cargo run --example json_report`

use higher_llt::cli::{self, Report};
use higher_llt::{canonical_vector, Charge, Result};

pub fn run() -> Result<()> {
    let argv = [
        "higher-llt",
        "--e",
        "2",
        "--charge",
        "0,0",
        "--mu",
        "2,1|1",
        "--format",
        "json",
    ];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = cli::run(argv, &mut out, &mut err);
    println!("exit status {status}");
    let text = String::from_utf8_lossy(&out);
    println!("{text}");

    let report: Report =
        serde_json::from_str(&text).map_err(|e| higher_llt::Error::Parse(e.to_string()))?;
    let entry = &report.entries[0];
    let g = canonical_vector(&entry.label()?, &Charge::new(2, [0, 0])?)?;
    let same = entry.terms()?.iter().eq(g.vector().iter());
    println!("report matches the library: {same}");

    let status = cli::run(
        ["higher-llt", "--e", "2", "--charge", "0,0", "--mu", "1,1|-"],
        &mut out,
        &mut err,
    );
    println!(
        "non-regular label: exit status {status}, {}",
        String::from_utf8_lossy(&err).trim()
    );
    Ok(())
}

fn main() -> Result<()> {
    run()
}
