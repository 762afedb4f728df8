//! Configuration, report rendering and the JSON schema of the `higher-llt`
//! binary.
//!
//! ```text
//! higher-llt --e 2 --charge 0,0 --mu "2,1|1"
//! higher-llt --e inf --charge 0,1,0 --mu "2,1|-|1" --format json
//! higher-llt --e 2 --charge 0,0 --size 4 --matrix --block "4|-"
//! higher-llt --e 2 --charge 0,0 --size 5 --oracle
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::canonical::{
    canonical_basis_up_to, canonical_basis_up_to_einf, canonical_vector, canonical_vector_einf,
    decomposition_matrix, einf_modulus, CanonicalBasisEntry, DecompositionMatrix,
};
use crate::combinat::{Charge, Multipartition};
use crate::error::{Error, Result};
use crate::fock::{weight_of, FockVector};
use crate::laurent::LaurentPoly;
use crate::wedge::{Multicharge, WedgeOracle};

/// `e`, either a modulus `>= 2` or `inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulus {
    Finite(u32),
    Infinite,
}

impl FromStr for Modulus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Modulus::Infinite);
        }
        match s.parse::<u32>() {
            Ok(e) if e >= 2 => Ok(Modulus::Finite(e)),
            _ => Err(Error::Parse(format!(
                "expected an integer >= 2 or `inf` for e, got {s:?}"
            ))),
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(e) => write!(f, "{e}"),
            Modulus::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "higher-llt",
    version,
    about = "Canonical basis vectors G(mu) of tensor products of level-one Fock spaces"
)]
pub struct Args {
    /// Modulus e (an integer >= 2) or `inf`.
    #[arg(long)]
    pub e: String,

    /// Comma-separated charge; residues for finite e, integers for `inf`.
    #[arg(long, allow_hyphen_values = true)]
    pub charge: String,

    /// A single label, e.g. "2,1|-|1" (`|` between components, `-` for empty).
    #[arg(long, conflicts_with = "size")]
    pub mu: Option<String>,

    /// Every e-multiregular label of size at most this bound.
    #[arg(long)]
    pub size: Option<u32>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Cross-check against the wedge oracle for labels up to this size.
    #[arg(long, num_args = 0..=1, default_missing_value = "4", value_name = "CAP")]
    pub oracle: Option<u32>,

    /// Print the decomposition matrix instead of the vectors.
    #[arg(long)]
    pub matrix: bool,

    /// Keep only labels in the weight space of this label.
    #[arg(long)]
    pub block: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Label(Multipartition),
    UpTo(u32),
}

/// A validated run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub e: Modulus,
    pub charge: Vec<i64>,
    pub target: Target,
    pub format: Format,
    pub oracle_cap: Option<u32>,
    pub matrix: bool,
    pub block: Option<Multipartition>,
}

pub fn parse_multipartition(text: &str) -> Result<Multipartition> {
    text.parse()
}

fn parse_charge(text: &str) -> Result<Vec<i64>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("malformed charge {text:?}")));
    }
    parts
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| Error::Parse(format!("bad charge entry {p:?}")))
        })
        .collect()
}

impl RunConfig {
    pub fn from_args(args: &Args) -> Result<RunConfig> {
        let e: Modulus = args.e.parse()?;
        let charge = parse_charge(&args.charge)?;
        let target = match (&args.mu, args.size) {
            (Some(mu), None) => Target::Label(parse_multipartition(mu)?),
            (None, Some(n)) => Target::UpTo(n),
            _ => {
                return Err(Error::Parse(
                    "exactly one of --mu and --size is required".into(),
                ))
            }
        };
        let block = args
            .block
            .as_deref()
            .map(parse_multipartition)
            .transpose()?;
        let config = RunConfig {
            e,
            charge,
            target,
            format: args.format,
            oracle_cap: args.oracle,
            matrix: args.matrix,
            block,
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<()> {
        let r = self.charge.len();
        let labels = match &self.target {
            Target::Label(mu) => vec![mu],
            Target::UpTo(_) => vec![],
        };
        for mu in labels.into_iter().chain(self.block.as_ref()) {
            if mu.rank() != r {
                return Err(Error::RankMismatch {
                    expected: r,
                    found: mu.rank(),
                });
            }
        }
        if let (Modulus::Finite(e), Target::Label(mu)) = (self.e, &self.target) {
            if !mu.is_multiregular(e) {
                return Err(Error::NotRegular {
                    label: mu.to_string(),
                    e,
                });
            }
        }
        Ok(())
    }

    fn size_cap(&self) -> u32 {
        match &self.target {
            Target::Label(mu) => mu.size(),
            Target::UpTo(n) => *n,
        }
    }

    /// The charge the computation actually runs with.
    pub fn finite_charge(&self) -> Result<Charge> {
        let e = match self.e {
            Modulus::Finite(e) => e,
            Modulus::Infinite => einf_modulus(&self.charge, self.size_cap()),
        };
        Charge::new(e, self.charge.iter().copied())
    }
}

/// `{"e": 2 | "inf", "charge": [...], "entries": [...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub e: ModulusJson,
    pub charge: Vec<i64>,
    pub entries: Vec<ReportEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub oracle: Vec<OracleCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModulusJson {
    Finite(u32),
    Token(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub mu: Vec<Vec<u32>>,
    pub vector: Vec<ReportTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportTerm {
    pub la: Vec<Vec<u32>>,
    pub coeff: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: Vec<Vec<Vec<u32>>>,
    pub cols: Vec<Vec<Vec<u32>>>,
    pub cells: Vec<Vec<LaurentPoly>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub mu: Vec<Vec<u32>>,
    pub pass: bool,
}

impl ReportEntry {
    pub fn from_entry(entry: &CanonicalBasisEntry) -> Self {
        ReportEntry {
            mu: entry.label().to_nested(),
            vector: entry
                .vector()
                .iter()
                .rev()
                .map(|(la, c)| ReportTerm {
                    la: la.to_nested(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    pub fn label(&self) -> Result<Multipartition> {
        Multipartition::from_parts(self.mu.clone())
    }

    /// The coefficients as a map, for comparison with a computed vector.
    pub fn terms(&self) -> Result<BTreeMap<Multipartition, LaurentPoly>> {
        self.vector
            .iter()
            .map(|t| Ok((Multipartition::from_parts(t.la.clone())?, t.coeff.clone())))
            .collect()
    }
}

impl MatrixJson {
    fn from_matrix(m: &DecompositionMatrix) -> Self {
        MatrixJson {
            rows: m.rows.iter().map(Multipartition::to_nested).collect(),
            cols: m.cols.iter().map(Multipartition::to_nested).collect(),
            cells: m.cells.clone(),
        }
    }
}

/// What a run produced, before rendering.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub config: RunConfig,
    pub entries: Vec<CanonicalBasisEntry>,
    pub matrix: Option<DecompositionMatrix>,
    pub checks: Vec<(Multipartition, std::result::Result<(), FockVector>)>,
}

impl Outcome {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, r)| r.is_ok())
    }

    pub fn report(&self) -> Report {
        Report {
            e: match self.config.e {
                Modulus::Finite(e) => ModulusJson::Finite(e),
                Modulus::Infinite => ModulusJson::Token("inf".into()),
            },
            charge: self.config.charge.clone(),
            entries: self.entries.iter().map(ReportEntry::from_entry).collect(),
            matrix: self.matrix.as_ref().map(MatrixJson::from_matrix),
            oracle: self
                .checks
                .iter()
                .map(|(mu, r)| OracleCheck {
                    mu: mu.to_nested(),
                    pass: r.is_ok(),
                })
                .collect(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let charge: Vec<String> = c.charge.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("# e = {}, charge = ({})\n", c.e, charge.join(",")));
        if let Some(m) = &self.matrix {
            out.push_str(&m.to_string());
        } else {
            for entry in &self.entries {
                out.push_str(&format!("\nG({})\n", entry.label()));
                out.push_str(&entry.vector().to_string());
            }
        }
        if !self.checks.is_empty() {
            out.push('\n');
            for (mu, r) in &self.checks {
                let verdict = if r.is_ok() { "PASS" } else { "FAIL" };
                out.push_str(&format!("oracle {verdict} {mu}\n"));
            }
        }
        out
    }
}

/// Runs a validated configuration.
pub fn execute(config: &RunConfig) -> Result<Outcome> {
    let mut entries = match (&config.e, &config.target) {
        (Modulus::Finite(_), Target::Label(mu)) => {
            vec![canonical_vector(mu, &config.finite_charge()?)?]
        }
        (Modulus::Finite(_), Target::UpTo(n)) => {
            canonical_basis_up_to(*n, &config.finite_charge()?)?
        }
        (Modulus::Infinite, Target::Label(mu)) => {
            vec![canonical_vector_einf(mu, &config.charge, mu.size())?]
        }
        (Modulus::Infinite, Target::UpTo(n)) => canonical_basis_up_to_einf(*n, &config.charge)?,
    };
    if let Some(block) = &config.block {
        let s = config.finite_charge()?;
        let w = weight_of(block, &s);
        entries.retain(|x| x.weight() == w);
    }
    let matrix = if config.matrix {
        Some(decomposition_matrix(&entries, None)?)
    } else {
        None
    };
    let mut checks = Vec::new();
    if let Some(cap) = config.oracle_cap {
        for entry in entries.iter().filter(|x| x.label().size() <= cap) {
            let mc = Multicharge::well_spaced(entry.charge(), entry.label().size());
            let expected = WedgeOracle::new(mc).canonical_basis_twisted(entry.label())?;
            let verdict = if &expected == entry.vector() {
                Ok(())
            } else {
                Err(expected)
            };
            checks.push((entry.label().clone(), verdict));
        }
    }
    Ok(Outcome {
        config: config.clone(),
        entries,
        matrix,
        checks,
    })
}

/// Entry point of the binary: parse `argv`, run, write the report to `out`
/// and diagnostics to `err`. Returns the process exit status: 0 on
/// success, 1 on a failed computation or oracle mismatch, 2 on bad input.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    let config = match RunConfig::from_args(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let outcome = match execute(&config) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let written = match config.format {
        Format::Text => out.write_all(outcome.render_text().as_bytes()),
        Format::Json => serde_json::to_writer_pretty(&mut *out, &outcome.report())
            .map_err(std::io::Error::from)
            .and_then(|_| writeln!(out)),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    let mut status = 0;
    for (mu, r) in &outcome.checks {
        if let Err(expected) = r {
            let got = outcome
                .entries
                .iter()
                .find(|x| x.label() == mu)
                .expect("checked entries come from the run");
            let _ = writeln!(
                err,
                "oracle mismatch at {mu}\nalgorithm:\n{}oracle:\n{}",
                got.vector(),
                expected
            );
            status = 1;
        }
    }
    status
}
