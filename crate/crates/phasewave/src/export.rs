//! Field files.
//!
//! CSV: `#`-prefixed `key=value` lines carrying the parameter block and the
//! grid, then the header `rho,phi,x,p,W` and one row per node, ρ-major.
//! Numbers are written with 17 significant digits so every double survives
//! the round trip.
//!
//! JSON: `{"metadata": {...}, "grid": {...}, "values": [[ring 0], [ring 1], ...]}`.

use std::fs;
use std::io::Write;
use std::path::Path;

use phasewave_core::{Field2D, GridSpec, OscillatorParams};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Parameter block written alongside every field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldMetadata {
    pub n: u32,
    pub ell: u32,
    #[serde(rename = "A")]
    pub amplitude: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub m: f64,
    pub omega: f64,
    pub hbar: f64,
    pub alpha: f64,
    pub t: f64,
}

impl FieldMetadata {
    pub fn params(&self) -> Result<OscillatorParams> {
        Ok(OscillatorParams::new(self.m, self.omega, self.hbar, self.alpha)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct GridBlock {
    rho_max: f64,
    n_rho: usize,
    n_phi: usize,
    dt: f64,
}

impl From<&GridSpec> for GridBlock {
    fn from(g: &GridSpec) -> Self {
        GridBlock {
            rho_max: g.rho_max,
            n_rho: g.n_rho,
            n_phi: g.n_phi,
            dt: g.dt,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonField {
    metadata: FieldMetadata,
    grid: GridBlock,
    rho: Vec<f64>,
    phi: Vec<f64>,
    values: Vec<Vec<f64>>,
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn to_csv(field: &Field2D, meta: &FieldMetadata) -> Result<String> {
    let params = meta.params()?;
    let grid = field.grid();
    let mut out = Vec::new();
    let block = [
        ("n", meta.n.to_string()),
        ("ell", meta.ell.to_string()),
        ("A", num(meta.amplitude)),
        ("C", num(meta.c)),
        ("m", num(meta.m)),
        ("omega", num(meta.omega)),
        ("hbar", num(meta.hbar)),
        ("alpha", num(meta.alpha)),
        ("t", num(meta.t)),
        ("rho_max", num(grid.rho_max)),
        ("n_rho", grid.n_rho.to_string()),
        ("n_phi", grid.n_phi.to_string()),
        ("dt", num(grid.dt)),
    ];
    for (k, v) in block {
        writeln!(out, "# {k}={v}").expect("writing to a Vec");
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rho", "phi", "x", "p", "W"])?;
    for i in 0..grid.n_rho {
        for j in 0..grid.n_phi {
            let node = grid.node(i, j);
            let pt = params.from_polar(node);
            w.write_record([
                num(node.rho()),
                num(node.phi()),
                num(pt.x),
                num(pt.p),
                num(field.get(i, j)),
            ])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::parse("csv", e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("ASCII output"))
}

pub fn parse_csv(text: &str) -> Result<(FieldMetadata, Field2D)> {
    let mut kv = std::collections::HashMap::new();
    let mut body_start = 0;
    for line in text.lines() {
        let Some(rest) = line.strip_prefix('#') else { break };
        body_start += line.len() + 1;
        let (k, v) = rest
            .trim()
            .split_once('=')
            .ok_or_else(|| Error::parse("csv", format!("bad metadata line `{line}`")))?;
        kv.insert(k.trim().to_string(), v.trim().to_string());
    }
    let get = |k: &str| -> Result<&String> {
        kv.get(k).ok_or_else(|| Error::parse("csv", format!("missing `{k}`")))
    };
    let f = |k: &str| -> Result<f64> {
        get(k)?.parse().map_err(|_| Error::parse("csv", format!("bad number for `{k}`")))
    };
    let u = |k: &str| -> Result<usize> {
        get(k)?.parse().map_err(|_| Error::parse("csv", format!("bad integer for `{k}`")))
    };
    let meta = FieldMetadata {
        n: u("n")? as u32,
        ell: u("ell")? as u32,
        amplitude: f("A")?,
        c: f("C")?,
        m: f("m")?,
        omega: f("omega")?,
        hbar: f("hbar")?,
        alpha: f("alpha")?,
        t: f("t")?,
    };
    let grid = GridSpec::new(f("rho_max")?, u("n_rho")?, u("n_phi")?, f("dt")?)?;

    let body = text.get(body_start.min(text.len())..).unwrap_or("");
    let mut reader = csv::Reader::from_reader(body.as_bytes());
    let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    if header != ["rho", "phi", "x", "p", "W"] {
        return Err(Error::parse("csv", format!("unexpected header {header:?}")));
    }
    let mut values = Vec::with_capacity(grid.len());
    for rec in reader.records() {
        let rec = rec?;
        let w = rec
            .get(4)
            .and_then(|s| s.parse::<f64>().ok())
            .ok_or_else(|| Error::parse("csv", format!("bad row {}", values.len() + 1)))?;
        values.push(w);
    }
    if values.len() != grid.len() {
        return Err(Error::parse(
            "csv",
            format!("expected {} rows, found {}", grid.len(), values.len()),
        ));
    }
    Ok((meta, Field2D::new(grid, values, meta.t)?))
}

pub fn to_json(field: &Field2D, meta: &FieldMetadata) -> Result<String> {
    let grid = field.grid();
    let doc = JsonField {
        metadata: *meta,
        grid: grid.into(),
        rho: (0..grid.n_rho).map(|i| grid.rho(i)).collect(),
        phi: (0..grid.n_phi).map(|j| grid.phi(j)).collect(),
        values: field.rings().map(<[f64]>::to_vec).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(s)
}

pub fn parse_json(text: &str) -> Result<(FieldMetadata, Field2D)> {
    let doc: JsonField = serde_json::from_str(text)?;
    let g = doc.grid;
    let grid = GridSpec::new(g.rho_max, g.n_rho, g.n_phi, g.dt)?;
    if doc.values.len() != grid.n_rho || doc.values.iter().any(|r| r.len() != grid.n_phi) {
        return Err(Error::parse("json", "value array does not match the grid"));
    }
    let values = doc.values.into_iter().flatten().collect();
    Ok((doc.metadata, Field2D::new(grid, values, doc.metadata.t)?))
}

pub fn render(field: &Field2D, meta: &FieldMetadata, format: Format) -> Result<String> {
    match format {
        Format::Csv => to_csv(field, meta),
        Format::Json => to_json(field, meta),
    }
}

pub fn export(field: &Field2D, meta: &FieldMetadata, format: Format, path: &Path) -> Result<()> {
    let text = render(field, meta, format)?;
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Read a file written by [`export`]; the format follows the extension.
pub fn import(path: &Path) -> Result<(FieldMetadata, Field2D)> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => parse_json(&text),
        _ => parse_csv(&text),
    }
}
