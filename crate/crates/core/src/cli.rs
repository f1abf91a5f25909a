//! Command-line front end. `run` parses arguments, dispatches and returns the
//! process exit code: 0 on success, 2 on usage errors, 1 on computation errors.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::helicoid::{mirror_pair_check, FdForms, Helicity, Helicoid, HelicoidParams, SINGULAR_GUARD};
use crate::invariants::{self, Invariants, SpatialClass, SpatialKind};
use crate::mesh;
use crate::sine_gordon::{self, PotentialParams};
use crate::solver::{self, SolveRequest};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(name = "pshelicoid", version, about = "Pseudospherical helicoids: synthesis, classification and inverse design")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find (mu, r) from helicity, parity, wave number and aspect ratio.
    Solve {
        #[arg(long, allow_negative_numbers = true)]
        parity: i32,
        #[arg(long, allow_negative_numbers = true, default_value_t = -1)]
        helicity: i64,
        #[arg(long)]
        wave_number: f64,
        #[arg(long)]
        aspect_ratio: f64,
        #[arg(long)]
        json: bool,
    },
    /// Type, invariants and spatial class of a helicoid.
    Classify {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = invariants::DEFAULT_CLASS_TOL)]
        tol: f64,
        #[arg(long, default_value_t = invariants::DEFAULT_MAX_DENOMINATOR)]
        max_den: u64,
        #[arg(long)]
        json: bool,
    },
    /// Sample the planar profile as CSV.
    Profile {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 1)]
        periods: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the surface as an OBJ triangle mesh.
    Surface {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 1)]
        u_periods: usize,
        #[arg(long, default_value_t = 1.0)]
        v_turns: f64,
        #[arg(long, default_value_t = 100)]
        res_u: usize,
        #[arg(long, default_value_t = 100)]
        res_v: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numerical self-check of curvature, fundamental forms, the sine-Gordon
    /// potential and the mirror identities.
    Verify {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1e-4)]
        h: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Solutions for wave numbers 1..=max-n at fixed parity and aspect ratio.
    Table {
        #[arg(long, allow_negative_numbers = true)]
        parity: i32,
        #[arg(long)]
        aspect_ratio: f64,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct SurfaceArgs {
    #[arg(long, allow_negative_numbers = true)]
    mu: f64,
    #[arg(long, allow_negative_numbers = true)]
    r: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = -1)]
    helicity: i64,
}

impl SurfaceArgs {
    fn params(&self) -> Result<HelicoidParams> {
        HelicoidParams::new(self.mu, self.r, Helicity::from_sign(self.helicity)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Serialize)]
struct ClassReport {
    kind: &'static str,
    numerator: Option<i64>,
    denominator: Option<u64>,
}

impl From<SpatialClass> for ClassReport {
    fn from(c: SpatialClass) -> Self {
        ClassReport {
            kind: match c.kind {
                SpatialKind::DenseInShell => "dense_in_shell",
                SpatialKind::ImmersedCylinder => "immersed_cylinder",
                SpatialKind::TwistedColumn => "twisted_column",
            },
            numerator: c.rational_approx.map(|pq| pq.0),
            denominator: c.rational_approx.map(|pq| pq.1),
        }
    }
}

#[derive(Debug, Serialize)]
struct Report {
    mu: f64,
    r: f64,
    m: f64,
    #[serde(rename = "type")]
    kind: &'static str,
    helicity: i32,
    parity: i32,
    pitch: f64,
    wavelength: f64,
    wave_number: f64,
    inner_radius: f64,
    outer_radius: f64,
    aspect_ratio: f64,
    spatial_class: ClassReport,
    residuals: BTreeMap<&'static str, f64>,
}

impl Report {
    fn new(p: &HelicoidParams, inv: &Invariants, class: SpatialClass) -> Self {
        Report {
            mu: p.mu,
            r: p.r,
            m: p.m(),
            kind: if inv.parity < 0 { "magnetic" } else { "electric" },
            helicity: p.helicity.sign(),
            parity: inv.parity,
            pitch: inv.pitch,
            wavelength: inv.wavelength,
            wave_number: inv.wave_number,
            inner_radius: inv.inner_radius,
            outer_radius: inv.outer_radius,
            aspect_ratio: inv.aspect_ratio,
            spatial_class: class.into(),
            residuals: BTreeMap::new(),
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> Result<()> {
        writeln!(out, "mu            {}", self.mu)?;
        writeln!(out, "r             {}", self.r)?;
        writeln!(out, "m             {}", self.m)?;
        writeln!(out, "type          {}", self.kind)?;
        writeln!(out, "helicity      {}", self.helicity)?;
        writeln!(out, "parity        {}", self.parity)?;
        writeln!(out, "pitch         {}", self.pitch)?;
        writeln!(out, "wavelength    {}", self.wavelength)?;
        writeln!(out, "wave_number   {}", self.wave_number)?;
        writeln!(out, "inner_radius  {}", self.inner_radius)?;
        writeln!(out, "outer_radius  {}", self.outer_radius)?;
        writeln!(out, "aspect_ratio  {}", self.aspect_ratio)?;
        let c = &self.spatial_class;
        match (c.numerator, c.denominator) {
            (Some(p), Some(q)) => writeln!(out, "spatial_class {} ({p}/{q})", c.kind)?,
            _ => writeln!(out, "spatial_class {}", c.kind)?,
        }
        for (k, v) in &self.residuals {
            writeln!(out, "residual.{k:<14}{v:e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Serialize)]
struct MirrorStatus {
    passed: bool,
    part1_max_deviation: Option<f64>,
    part2_max_deviation: Option<f64>,
    message: Option<String>,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    mu: f64,
    r: f64,
    h: f64,
    samples: usize,
    seed: u64,
    max_curvature_error_fd: f64,
    max_curvature_error_closed: f64,
    max_form_deviation: f64,
    max_sine_gordon_residual: f64,
    mirror: MirrorStatus,
    passed: bool,
}

const VERIFY_K_FD: f64 = 1e-4;
const VERIFY_K_CLOSED: f64 = 1e-10;
const VERIFY_FORMS: f64 = 1e-6;
const VERIFY_SG: f64 = 1e-6;

fn verify(p: &HelicoidParams, samples: usize, h: f64, seed: u64) -> Result<VerifyReport> {
    if samples < 1 {
        return Err(Error::domain("samples", samples as f64, "at least 1 sample"));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain("h", h, "step must be positive"));
    }
    let hc = Helicoid::new(*p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut k_fd, mut k_closed, mut forms) = (0.0f64, 0.0f64, 0.0f64);
    let mut taken = 0;
    while taken < samples {
        let u = rng.gen_range(0.0..hc.period());
        if hc.singular_distance(u) <= SINGULAR_GUARD {
            continue;
        }
        let v = rng.gen_range(0.0..1.0);
        let closed = hc.closed_forms(u);
        k_closed = k_closed.max((closed.gauss_curvature() + 1.0).abs());
        k_fd = k_fd.max((hc.gauss_curvature(u, v, h)? + 1.0).abs());
        match hc.fd_forms(u, v, h)? {
            FdForms::Regular(f) => forms = forms.max(f.max_deviation(&closed)),
            FdForms::Singular { .. } => return Err(Error::UnreliableEstimate { u, distance: hc.singular_distance(u) }),
        }
        taken += 1;
    }
    let pot = PotentialParams::new(p.mu, p.r)?;
    let mut sg = 0.0f64;
    for _ in 0..samples {
        let s = rng.gen_range(-2.0..2.0);
        let t = rng.gen_range(-2.0..2.0);
        sg = sg.max(sine_gordon::sg_residual(pot, s, t, sine_gordon::DEFAULT_STEP)?.abs());
    }
    let mirror = match mirror_pair_check(p.mu, p.r, samples, seed) {
        Ok(rep) => MirrorStatus {
            passed: true,
            part1_max_deviation: rep.part1.map(|x| x.max_deviation),
            part2_max_deviation: Some(rep.part2.max_deviation),
            message: None,
        },
        Err(e @ Error::MirrorMismatch { .. }) => MirrorStatus {
            passed: false,
            part1_max_deviation: None,
            part2_max_deviation: None,
            message: Some(e.to_string()),
        },
        Err(e) => return Err(e),
    };
    let passed = k_fd < VERIFY_K_FD
        && k_closed < VERIFY_K_CLOSED
        && forms < VERIFY_FORMS
        && sg < VERIFY_SG
        && mirror.passed;
    Ok(VerifyReport {
        mu: p.mu,
        r: p.r,
        h,
        samples,
        seed,
        max_curvature_error_fd: k_fd,
        max_curvature_error_closed: k_closed,
        max_form_deviation: forms,
        max_sine_gordon_residual: sg,
        mirror,
        passed,
    })
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// Runs `f` on the file at `path`, or on `out` when no path is given.
fn with_sink(path: &Option<PathBuf>, out: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match path {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => f(out),
    }
}

fn class_of(hc: &Helicoid, tol: f64, max_den: u64) -> Result<(Invariants, SpatialClass)> {
    let inv = Invariants::of(hc)?;
    Ok((inv, invariants::classify_wave_number(inv.wave_number, tol, max_den)))
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Solve {
            parity,
            helicity,
            wave_number,
            aspect_ratio,
            json,
        } => {
            let req = SolveRequest::new(Helicity::from_sign(helicity)?, parity, wave_number, aspect_ratio)?;
            let s = solver::solve(&req)?;
            let hc = Helicoid::new(s.params)?;
            let (inv, class) = class_of(&hc, invariants::DEFAULT_CLASS_TOL, invariants::DEFAULT_MAX_DENOMINATOR)?;
            let mut rep = Report::new(&s.params, &inv, class);
            rep.residuals.insert("h", s.residual);
            rep.residuals.insert("wave_number", (inv.wave_number - wave_number).abs());
            rep.residuals.insert("aspect_ratio", (inv.aspect_ratio - aspect_ratio).abs());
            if json {
                write_json(out, &rep)?;
            } else {
                rep.write_text(out)?;
            }
        }
        Command::Classify {
            surface,
            tol,
            max_den,
            json,
        } => {
            if !(tol >= 0.0) {
                return Err(Error::domain("tol", tol, "tolerance must be non-negative"));
            }
            let p = surface.params()?;
            let (inv, class) = class_of(&Helicoid::new(p)?, tol, max_den)?;
            let rep = Report::new(&p, &inv, class);
            if json {
                write_json(out, &rep)?;
            } else {
                rep.write_text(out)?;
            }
        }
        Command::Profile {
            surface,
            periods,
            samples,
            out: path,
        } => {
            let prof = mesh::sample_profile(&surface.params()?, periods, samples)?;
            with_sink(&path, out, |w| mesh::write_profile_csv(&prof, w))?;
        }
        Command::Surface {
            surface,
            u_periods,
            v_turns,
            res_u,
            res_v,
            out: path,
        } => {
            let m = mesh::sample_surface(&surface.params()?, u_periods, v_turns, res_u, res_v)?;
            with_sink(&path, out, |w| mesh::write_obj(&m, w))?;
        }
        Command::Verify {
            surface,
            samples,
            h,
            seed,
            json,
        } => {
            let rep = verify(&surface.params()?, samples, h, seed)?;
            if json {
                write_json(out, &rep)?;
            } else {
                writeln!(out, "max |K+1| (finite differences)  {:e}", rep.max_curvature_error_fd)?;
                writeln!(out, "max |K+1| (closed forms)        {:e}", rep.max_curvature_error_closed)?;
                writeln!(out, "max form deviation              {:e}", rep.max_form_deviation)?;
                writeln!(out, "max sine-Gordon residual        {:e}", rep.max_sine_gordon_residual)?;
                match &rep.mirror.message {
                    None => writeln!(out, "mirror identities               pass")?,
                    Some(m) => writeln!(out, "mirror identities               FAIL: {m}")?,
                }
                writeln!(out, "{}", if rep.passed { "PASS" } else { "FAIL" })?;
            }
            if !rep.passed {
                writeln!(err, "verification failed")?;
                return Ok(1);
            }
        }
        Command::Table {
            parity,
            aspect_ratio,
            max_n,
            format,
            out: path,
        } => {
            let rows = solver::series_table(parity, aspect_ratio, max_n)?;
            with_sink(&path, out, |w| {
                match format {
                    TableFormat::Csv => {
                        writeln!(w, "n,mu,r,pitch,wavelength")?;
                        for row in &rows {
                            writeln!(
                                w,
                                "{},{},{},{},{}",
                                row.n,
                                mesh::format_f64(row.mu),
                                mesh::format_f64(row.r),
                                mesh::format_f64(row.pitch),
                                mesh::format_f64(row.wavelength)
                            )?;
                        }
                    }
                    TableFormat::Json => {
                        #[derive(Serialize)]
                        struct Row {
                            n: u32,
                            mu: f64,
                            r: f64,
                            pitch: f64,
                            wavelength: f64,
                        }
                        let rows: Vec<Row> = rows
                            .iter()
                            .map(|t| Row {
                                n: t.n,
                                mu: t.mu,
                                r: t.r,
                                pitch: t.pitch,
                                wavelength: t.wavelength,
                            })
                            .collect();
                        write_json(w, &rows)?;
                    }
                }
                Ok(())
            })?;
        }
    }
    Ok(0)
}

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

