//! Text and JSON serialisation.
//!
//! Numbers are printed with 12 significant digits. Components below `1e-14`
//! of a complex number's modulus are printed as zero, and `-0.0` as `0.0`,
//! so repeated runs produce identical bytes.
//!
//! Eigenpair file:
//!
//! ```text
//! # comments allowed anywhere
//! k n_total
//! lambda_re lambda_im
//! re im        (n_total lines, one per hypergraph vertex)
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::eigen::ComplexScalar;
use crate::error::{Error, Result};
use crate::hypergraph::TensorEigenpair;
use crate::spectrum::{Provenance, SpectrumEntry, SpectrumReport};

const RELATIVE_SNAP: f64 = 1e-14;

/// Rounds to 12 significant digits and normalises `-0.0`.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Snaps negligible components and rounds both parts.
pub fn clean_complex(z: ComplexScalar) -> ComplexScalar {
    let scale = z.norm();
    let snap = |v: f64| {
        if v.abs() <= RELATIVE_SNAP * scale {
            0.0
        } else {
            round_sig(v)
        }
    };
    Complex64::new(snap(z.re), snap(z.im))
}

pub fn fmt_num(x: f64) -> String {
    let r = round_sig(x);
    format!("{r:?}")
}

pub fn fmt_complex(z: ComplexScalar) -> String {
    let c = clean_complex(z);
    format!("{} {}", fmt_num(c.re), fmt_num(c.im))
}

pub fn write_eigenpair(k: usize, pair: &TensorEigenpair) -> String {
    let mut out = format!("{k} {}\n{}\n", pair.x.len(), fmt_complex(pair.lambda));
    for c in &pair.x {
        out.push_str(&fmt_complex(*c));
        out.push('\n');
    }
    out
}

fn parse_f64(line: usize, token: &str) -> Result<f64> {
    let v: f64 = token
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid number '{token}'")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, format!("non-finite number '{token}'")));
    }
    Ok(v)
}

fn parse_pair_line(line: usize, tokens: &[&str]) -> Result<ComplexScalar> {
    if tokens.len() != 2 {
        return Err(Error::parse(line, "expected 're im'"));
    }
    Ok(Complex64::new(
        parse_f64(line, tokens[0])?,
        parse_f64(line, tokens[1])?,
    ))
}

/// Returns `(k, pair)`.
pub fn parse_eigenpair(text: &str) -> Result<(usize, TensorEigenpair)> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    });
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty eigenpair file"))?;
    if header.len() != 2 {
        return Err(Error::parse(hl, "header must be 'k n_total'"));
    }
    let k: usize = header[0]
        .parse()
        .map_err(|_| Error::parse(hl, format!("invalid k '{}'", header[0])))?;
    let total: usize = header[1]
        .parse()
        .map_err(|_| Error::parse(hl, format!("invalid vertex count '{}'", header[1])))?;
    let (ll, lambda_tokens) = lines
        .next()
        .ok_or_else(|| Error::parse(hl, "missing eigenvalue line"))?;
    let lambda = parse_pair_line(ll, &lambda_tokens)?;
    let mut x = Vec::with_capacity(total);
    let mut last = ll;
    for (line, tokens) in lines {
        last = line;
        if x.len() == total {
            return Err(Error::parse(line, format!("more than {total} coordinates")));
        }
        x.push(parse_pair_line(line, &tokens)?);
    }
    if x.len() != total {
        return Err(Error::parse(
            last,
            format!("expected {total} coordinates, found {}", x.len()),
        ));
    }
    Ok((k, TensorEigenpair { lambda, x }))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonProvenance {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize, i8)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonEntry {
    pub lambda: JsonComplex,
    pub canonical: bool,
    pub beta: f64,
    pub residual: f64,
    pub provenance: JsonProvenance,
    #[serde(rename = "statement1Only")]
    pub statement1_only: bool,
}

/// Wire form of a [`SpectrumReport`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "totalVertices")]
    pub total_vertices: usize,
    pub entries: Vec<JsonEntry>,
}

impl From<&SpectrumEntry> for JsonEntry {
    fn from(e: &SpectrumEntry) -> Self {
        let l = clean_complex(e.lambda);
        JsonEntry {
            lambda: JsonComplex { re: l.re, im: l.im },
            canonical: e.canonical,
            beta: round_sig(e.beta),
            residual: round_sig(e.residual),
            provenance: JsonProvenance {
                vertices: e.provenance.vertices.clone(),
                edges: e.provenance.edges.clone(),
            },
            statement1_only: e.statement1_only,
        }
    }
}

impl From<&SpectrumReport> for JsonReport {
    fn from(r: &SpectrumReport) -> Self {
        JsonReport {
            k: r.k,
            n: r.n,
            m: r.m,
            total_vertices: r.total_vertices,
            entries: r.entries.iter().map(JsonEntry::from).collect(),
        }
    }
}

impl JsonProvenance {
    pub fn to_provenance(&self) -> Provenance {
        Provenance {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
        }
    }
}

pub fn report_json(report: &SpectrumReport) -> String {
    let mut s = serde_json::to_string_pretty(&JsonReport::from(report)).expect("report serialises");
    s.push('\n');
    s
}

pub fn report_text(report: &SpectrumReport) -> String {
    let mut out = format!(
        "k {}\nn {}\nm {}\ntotal_vertices {}\nentries {}\ncanonical {}\n",
        report.k,
        report.n,
        report.m,
        report.total_vertices,
        report.entries.len(),
        report.canonical_count()
    );
    out.push_str("# lambda_re lambda_im canonical beta residual statement1_only provenance\n");
    for e in &report.entries {
        out.push_str(&format!(
            "{} {} {} {} {} {}\n",
            fmt_complex(e.lambda),
            e.canonical,
            fmt_num(e.beta),
            fmt_num(e.residual),
            e.statement1_only,
            e.provenance.describe()
        ));
    }
    out
}
