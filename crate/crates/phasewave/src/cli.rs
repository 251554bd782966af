use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use phasewave_core::{
    antinode_angles, node_angles, sample_field, wigner_stationary, GridSpec, OscillatorParams,
    PhasePoint, StandingWave, StandingWaveSpec, StateIndex, WignerField,
};
use serde::Serialize;

use crate::checks::{self, CheckContext};
use crate::export::{self, FieldMetadata, Format};
use crate::report::VerificationReport;
use crate::time::parse_times;
use crate::{Error, Result};

/// Environment variable naming the default output directory of `figures`.
pub const OUT_DIR_ENV: &str = "PHASEWAVE_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Evaluate the standing-wave and stationary functions at one phase point.
    Eval,
    /// Sample the standing wave on a polar grid.
    Grid,
    /// Run verification suites and write a report.
    Check,
    /// Advance the t = 0 snapshot with the upwind solver.
    Evolve,
    /// Print node and antinode angles.
    Nodes,
    /// Write the six reference grids (n in {0,5}, t in {0, T/4, T/2}).
    Figures,
}

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "phasewave", version, about = "Extended Wigner functions of the harmonic oscillator")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// State index n.
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    /// Standing-wave index ℓ.
    #[arg(long, default_value_t = 3)]
    pub ell: u32,
    /// Standing-wave amplitude A.
    #[arg(long = "A", default_value_t = 2.0, allow_negative_numbers = true)]
    pub amplitude: f64,
    /// Constant offset C.
    #[arg(long = "C", default_value_t = 5.0)]
    pub c: f64,
    #[arg(long, default_value_t = 1.0)]
    pub m: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Outer grid radius ρ_max (default: 4·√(ħω/m)).
    #[arg(long)]
    pub rho_max: Option<f64>,
    #[arg(long, default_value_t = 101)]
    pub n_rho: usize,
    #[arg(long, default_value_t = 256)]
    pub n_phi: usize,
    /// Comma-separated times; `T` is the standing-wave period (`0,T/4,3T/4`).
    #[arg(long = "t", default_value = "0", allow_hyphen_values = true)]
    pub times: String,
    /// Position for `eval`.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x: f64,
    /// Momentum for `eval`.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub p: f64,
    /// CFL number ω·dt/Δφ of the upwind solver.
    #[arg(long, default_value_t = 0.5)]
    pub cfl: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (one time) or directory (several times, `figures`).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Override the tolerance of every tolerance-based check.
    #[arg(long)]
    pub tol: Option<f64>,
    /// `all` or a comma-separated list of suites.
    #[arg(long, default_value = "all")]
    pub suite: String,
}

impl RunConfig {
    /// Defaults for `command`, as if no flags were given.
    pub fn new(command: Command) -> Self {
        let name = command
            .to_possible_value()
            .expect("commands are not hidden")
            .get_name()
            .to_string();
        RunConfig::parse_from(["phasewave", name.as_str()])
    }

    pub fn params(&self) -> Result<OscillatorParams> {
        Ok(OscillatorParams::new(self.m, self.omega, self.hbar, self.alpha)?)
    }

    pub fn standing_spec(&self) -> Result<StandingWaveSpec> {
        Ok(StandingWaveSpec::new(self.ell, self.amplitude, self.c)?)
    }

    pub fn state(&self) -> Result<StateIndex> {
        Ok(StateIndex::new(self.n)?)
    }

    pub fn grid(&self, params: &OscillatorParams) -> Result<GridSpec> {
        let rho_max = self.rho_max.unwrap_or(4.0 * params.rho_scale());
        if !(rho_max > 0.0) || !rho_max.is_finite() {
            return Err(Error::Usage(format!("--rho-max must be positive, got {rho_max}")));
        }
        if self.n_rho < 2 || self.n_phi < 2 {
            return Err(Error::Usage("--n-rho and --n-phi must be at least 2".into()));
        }
        Ok(GridSpec::with_cfl(params, rho_max, self.n_rho, self.n_phi, self.cfl)?)
    }

    pub fn resolved_times(&self, period: f64) -> Result<Vec<f64>> {
        let ts = parse_times(&self.times, period)?;
        if ts.is_empty() {
            return Err(Error::Usage("--t needs at least one time".into()));
        }
        Ok(ts)
    }

    fn metadata(&self, params: &OscillatorParams, n: u32, t: f64) -> FieldMetadata {
        FieldMetadata {
            n,
            ell: self.ell,
            amplitude: self.amplitude,
            c: self.c,
            m: params.m(),
            omega: params.omega(),
            hbar: params.hbar(),
            alpha: params.alpha(),
            t,
        }
    }
}

/// Everything a run produced.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub files: Vec<PathBuf>,
    pub report: Option<VerificationReport>,
    /// 0 on success, 1 when a requested check failed.
    pub status: i32,
}

pub fn run(cfg: &RunConfig) -> Result<RunOutput> {
    let params = cfg.params()?;
    let spec = cfg.standing_spec()?;
    let n = cfg.state()?;
    if let Some(tol) = cfg.tol {
        if !(tol >= 0.0) || !tol.is_finite() {
            return Err(Error::Usage(format!("--tol must be finite and non-negative, got {tol}")));
        }
    }
    match cfg.command {
        Command::Eval => eval(cfg, &params, &spec, n),
        Command::Grid => grid(cfg, &params, &spec, n),
        Command::Check => check(cfg, &params),
        Command::Evolve => evolve(cfg, &params, &spec, n),
        Command::Nodes => nodes(cfg, &spec),
        Command::Figures => figures(cfg, &params, &spec),
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// `--out` as a file for a single output, as a directory for several.
fn destinations(cfg: &RunConfig, count: usize, stem: &str) -> Result<Option<Vec<PathBuf>>> {
    let ext = cfg.format.extension();
    match (&cfg.out, count) {
        (None, 1) => Ok(None),
        (None, _) => Err(Error::Usage("several times need --out DIR".into())),
        (Some(p), 1) => Ok(Some(vec![p.clone()])),
        (Some(dir), k) => Ok(Some(
            (0..k).map(|i| dir.join(format!("{stem}_t{i}.{ext}"))).collect(),
        )),
    }
}

#[derive(Serialize)]
struct EvalRow {
    t: f64,
    x: f64,
    p: f64,
    w_stationary: f64,
    w: f64,
}

fn eval(cfg: &RunConfig, params: &OscillatorParams, spec: &StandingWaveSpec, n: StateIndex) -> Result<RunOutput> {
    let w = StandingWave::new(*params, n, *spec);
    let pt = PhasePoint::new(cfg.x, cfg.p);
    if !pt.x.is_finite() || !pt.p.is_finite() {
        return Err(Error::Usage("--x and --p must be finite".into()));
    }
    let rows: Vec<EvalRow> = cfg
        .resolved_times(w.period())?
        .into_iter()
        .map(|t| EvalRow {
            t,
            x: pt.x,
            p: pt.p,
            w_stationary: wigner_stationary(params, n, pt),
            w: w.value(pt, t),
        })
        .collect();
    let text = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Csv => {
            let mut s = String::from("t,x,p,W_n,W\n");
            for r in &rows {
                writeln!(s, "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}", r.t, r.x, r.p, r.w_stationary, r.w)
                    .expect("writing to a String");
            }
            s
        }
    };
    emit(cfg, text)
}

fn emit(cfg: &RunConfig, text: String) -> Result<RunOutput> {
    match &cfg.out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(RunOutput {
                files: vec![path.clone()],
                ..Default::default()
            })
        }
        None => Ok(RunOutput {
            stdout: text,
            ..Default::default()
        }),
    }
}

fn grid(cfg: &RunConfig, params: &OscillatorParams, spec: &StandingWaveSpec, n: StateIndex) -> Result<RunOutput> {
    let w = StandingWave::new(*params, n, *spec);
    let grid = cfg.grid(params)?;
    let times = cfg.resolved_times(w.period())?;
    let dest = destinations(cfg, times.len(), &format!("grid_n{}", n.get()))?;
    let mut out = RunOutput::default();
    for (i, &t) in times.iter().enumerate() {
        let field = sample_field(&w, &grid, t)?;
        let text = export::render(&field, &cfg.metadata(params, n.get(), t), cfg.format)?;
        match &dest {
            None => out.stdout = text,
            Some(paths) => {
                write_file(&paths[i], &text)?;
                out.files.push(paths[i].clone());
            }
        }
    }
    Ok(out)
}

fn evolve(cfg: &RunConfig, params: &OscillatorParams, spec: &StandingWaveSpec, n: StateIndex) -> Result<RunOutput> {
    let w = StandingWave::new(*params, n, *spec);
    let grid = cfg.grid(params)?;
    let times = cfg.resolved_times(w.period())?;
    let dest = match &cfg.out {
        Some(_) => destinations(cfg, times.len(), &format!("evolve_n{}", n.get()))?,
        None => None,
    };
    let mut out = RunOutput::default();
    out.stdout.push_str("t,steps,max_abs_error\n");
    for (i, &t) in times.iter().enumerate() {
        if t < 0.0 {
            return Err(Error::Usage(format!("evolve needs non-negative times, got {t}")));
        }
        let (fd, exact) = checks::evolve_pair(&w, &grid, t)?;
        let steps = if t == 0.0 { 0 } else { (t / grid.dt - 1e-9).ceil() as usize };
        writeln!(out.stdout, "{:.16e},{},{:.16e}", t, steps, fd.max_abs_diff(&exact)?)
            .expect("writing to a String");
        if let Some(paths) = &dest {
            let text = export::render(&fd, &cfg.metadata(params, n.get(), t), cfg.format)?;
            write_file(&paths[i], &text)?;
            out.files.push(paths[i].clone());
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct Angles {
    ell: u32,
    nodes: Vec<f64>,
    antinodes: Vec<f64>,
}

fn nodes(cfg: &RunConfig, spec: &StandingWaveSpec) -> Result<RunOutput> {
    let a = Angles {
        ell: spec.ell(),
        nodes: node_angles(spec),
        antinodes: antinode_angles(spec),
    };
    let text = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&a)? + "\n",
        Format::Csv => {
            let join = |v: &[f64]| v.iter().map(|x| format!("{x:.16e}")).collect::<Vec<_>>().join(",");
            format!("nodes,{}\nantinodes,{}\n", join(&a.nodes), join(&a.antinodes))
        }
    };
    emit(cfg, text)
}

fn figures(cfg: &RunConfig, params: &OscillatorParams, spec: &StandingWaveSpec) -> Result<RunOutput> {
    let dir = match &cfg.out {
        Some(d) => d.clone(),
        None => std::env::var_os(OUT_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("figures")),
    };
    let grid = cfg.grid(params)?;
    let period = spec.period(params.omega());
    let mut out = RunOutput::default();
    for n in [0u32, 5] {
        let w = StandingWave::new(*params, StateIndex::new(n)?, *spec);
        for (label, t) in [("0", 0.0), ("T4", 0.25 * period), ("T2", 0.5 * period)] {
            let field = sample_field(&w, &grid, t)?;
            let text = export::render(&field, &cfg.metadata(params, n, t), cfg.format)?;
            let path = dir.join(format!("figure_n{n}_t{label}.{}", cfg.format.extension()));
            write_file(&path, &text)?;
            writeln!(out.stdout, "{}", path.display()).expect("writing to a String");
            out.files.push(path);
        }
    }
    Ok(out)
}

fn check(cfg: &RunConfig, params: &OscillatorParams) -> Result<RunOutput> {
    let ctx = CheckContext {
        params: *params,
        tol: cfg.tol,
    };
    let report = checks::run_suites(&cfg.suite, &ctx)?;
    let mut out = emit(cfg, report.to_json())?;
    out.stderr = report.summary();
    out.status = if report.passed { 0 } else { 1 };
    out.report = Some(report);
    Ok(out)
}
