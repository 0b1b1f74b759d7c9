use std::io;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use casimir_core::modesum::kirchhoff_report;
use casimir_core::physical::{report, PlateConfig};
use casimir_core::regular::{
    g_p_deriv_form, g_p_exact, g_p_numeric, richardson_limit, CutoffParam, P_MAX,
};
use casimir_core::thermo::curve;
use casimir_core::{DimlessTemp, SeriesControl};

use crate::output::{self, Format, OutputSpec, Table, Value};
use crate::svg;

/// Largest `|extrapolated − exact|` accepted by `gp`.
pub const GP_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "casimir",
    version,
    about = "Thermodynamics of the Casimir effect between parallel plates"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Absolute tolerance for series truncation
    #[arg(long, global = true, default_value_t = SeriesControl::DEFAULT_TOL)]
    pub tol: f64,
    /// Term cap for every series
    #[arg(long, global = true, default_value_t = SeriesControl::DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (standard output when absent)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Prefix the output with a provenance line
    #[arg(long, global = true)]
    pub provenance: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy, free energy and entropy against reduced temperature
    Figure1 {
        #[arg(long, allow_negative_numbers = true, default_value_t = 3.0)]
        t_max: f64,
        #[arg(long, default_value_t = 301)]
        steps: usize,
        /// Also draw the three curves as SVG
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// SI observables for one plate configuration
    Physical {
        /// Plate separation, m
        #[arg(long, allow_negative_numbers = true)]
        d: f64,
        /// Plate edge length, m
        #[arg(long, allow_negative_numbers = true)]
        plate_size: f64,
        /// Temperature, K
        #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
        temp: f64,
    },
    /// Zero-temperature energy recovered from high-temperature mode sums
    Kirchhoff {
        #[arg(long, allow_negative_numbers = true, default_value_t = 5.0)]
        t: f64,
    },
    /// Cutoff-regularized mode-sum moments and their limits
    Gp {
        #[arg(long, default_value_t = 8)]
        p_max: u32,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0.5,0.25,0.125",
            allow_negative_numbers = true
        )]
        alphas: Vec<f64>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(casimir_core::Error),
    #[error("{0}")]
    Violation(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Violation(_) => 4,
        }
    }
}

impl From<casimir_core::Error> for CliError {
    fn from(e: casimir_core::Error) -> Self {
        use casimir_core::Error::*;
        match e {
            Domain { .. } | Config(_) => CliError::Usage(e.to_string()),
            NotConverged { .. } | Cancellation { .. } => CliError::Numeric(e),
        }
    }
}

fn control(common: &Common) -> Result<SeriesControl, CliError> {
    Ok(SeriesControl::new(common.tol, common.max_terms)?)
}

fn with_control(table: &mut Table, command: &str, ctl: SeriesControl) {
    table
        .meta("command", command)
        .meta("tol", ctl.tol())
        .meta("max_terms", ctl.max_terms() as i64);
}

pub fn figure1_table(t_max: f64, steps: usize, ctl: SeriesControl) -> Result<Table, CliError> {
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(CliError::Usage(format!(
            "--t-max must be positive, got {t_max}"
        )));
    }
    if steps < 2 {
        return Err(CliError::Usage(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    let points = curve(0.0, t_max, steps, ctl)?;
    let mut table = Table::new(["t", "eps_c", "phi_c", "neg_sigma_c"]);
    with_control(&mut table, "figure1", ctl);
    table.meta("t_max", t_max).meta("steps", steps as i64);
    for p in points {
        table.push(vec![
            p.t.get().into(),
            p.eps_c.into(),
            p.phi_c.into(),
            (-p.sigma_c).into(),
        ]);
    }
    Ok(table)
}

pub fn figure1_svg(table: &Table) -> String {
    let col = |name: &str| table.column(name).expect("figure1 column");
    let real = |v: &Value| match v {
        Value::Real(x) => *x,
        _ => unreachable!("figure1 holds reals"),
    };
    let t = col("t");
    let series = [
        ("eps_c", "ε_c(t)"),
        ("phi_c", "φ_c(t)"),
        ("neg_sigma_c", "−σ_c(t)"),
    ]
    .map(|(name, label)| {
        let c = col(name);
        svg::Series {
            label,
            points: table
                .rows
                .iter()
                .map(|r| (real(&r[t]), real(&r[c])))
                .collect(),
        }
    });
    svg::line_chart(
        "Casimir energy, free energy and entropy",
        "t = πT/T_c",
        "dimensionless",
        &series,
    )
}

pub fn physical_table(
    d: f64,
    plate_size: f64,
    temp: f64,
    ctl: SeriesControl,
) -> Result<(Table, bool), CliError> {
    let cfg = PlateConfig::new(d, plate_size, temp)?;
    let r = report(&cfg, ctl)?;
    let mut table = Table::new([
        "t_c",
        "t",
        "energy_density",
        "e_c",
        "f_c",
        "s_c",
        "pressure",
    ]);
    with_control(&mut table, "physical", ctl);
    table
        .meta("d", d)
        .meta("plate_size", plate_size)
        .meta("temp", temp);
    table.push(vec![
        r.t_c.into(),
        r.t.into(),
        r.energy_density.into(),
        r.energy.into(),
        r.free_energy.into(),
        r.entropy.into(),
        r.pressure.into(),
    ]);
    Ok((table, cfg.is_thin_slab()))
}

pub fn kirchhoff_table(t: f64, ctl: SeriesControl) -> Result<Table, CliError> {
    let min = casimir_core::modesum::KIRCHHOFF_MIN_T;
    if !(t >= min && t.is_finite()) {
        return Err(CliError::Usage(format!(
            "--t must be at least {min}, got {t}"
        )));
    }
    let r = kirchhoff_report(DimlessTemp::new(t)?, ctl)?;
    let mut table = Table::new(["t", "estimate", "reference", "difference", "residual_bound"]);
    with_control(&mut table, "kirchhoff", ctl);
    table.push(vec![
        r.t.into(),
        r.estimate.into(),
        r.reference.into(),
        r.difference.into(),
        r.residual_bound.into(),
    ]);
    Ok(table)
}

/// The table and the orders `p` whose extrapolation missed the exact value.
pub fn gp_table(
    p_max: u32,
    alphas: &[f64],
    ctl: SeriesControl,
) -> Result<(Table, Vec<u32>), CliError> {
    if p_max > P_MAX {
        return Err(CliError::Usage(format!(
            "--p-max must be at most {P_MAX}, got {p_max}"
        )));
    }
    if alphas.len() < 2 {
        return Err(CliError::Usage("--alphas needs at least two values".into()));
    }
    let cut: Vec<CutoffParam> = alphas
        .iter()
        .map(|&a| CutoffParam::new(a))
        .collect::<Result<_, _>>()?;
    let k = cut.len();
    let mut columns = vec!["p".to_owned(), "exact".to_owned()];
    columns.extend((1..=k).map(|i| format!("g_num_{i}")));
    columns.extend((1..=k).map(|i| format!("g_deriv_{i}")));
    columns.extend(["extrapolated".to_owned(), "status".to_owned()]);
    let mut table = Table::new(columns);
    with_control(&mut table, "gp", ctl);
    let list: Vec<String> = alphas.iter().map(|a| a.to_string()).collect();
    table
        .meta("p_max", p_max as i64)
        .meta("alphas", list.join(","));

    let mut failing = Vec::new();
    for p in 0..=p_max {
        let exact = g_p_exact(p);
        let mut row: Vec<Value> = vec![(p as i64).into(), exact.to_string().into()];
        for &a in &cut {
            row.push(g_p_numeric(p, a, ctl)?.into());
        }
        for &a in &cut {
            row.push(g_p_deriv_form(p, a)?.into());
        }
        let limit = richardson_limit(p, &cut, ctl)?;
        let ok = (limit - exact.to_f64()).abs() <= GP_TOLERANCE;
        if !ok {
            failing.push(p);
        }
        row.push(limit.into());
        row.push(if ok { "ok" } else { "FAIL" }.into());
        table.push(row);
    }
    Ok((table, failing))
}

fn provenance(table: &Table) -> String {
    let mut s = format!("casimir {}", env!("CARGO_PKG_VERSION"));
    for (k, v) in &table.meta {
        s.push_str(&format!(" {k}={}", v.render()));
    }
    s
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let common = &cli.common;
    let ctl = control(common)?;
    let mut spec = OutputSpec {
        format: common.format,
        path: common.out.clone(),
        ..OutputSpec::default()
    };
    let mut violation = None;

    let table = match &cli.command {
        Command::Figure1 { t_max, steps, svg } => {
            spec.svg_path = svg.clone();
            figure1_table(*t_max, *steps, ctl)?
        }
        Command::Physical {
            d,
            plate_size,
            temp,
        } => {
            let (table, thin) = physical_table(*d, *plate_size, *temp, ctl)?;
            if !thin {
                eprintln!(
                    "casimir: warning: plate size below 10·d, edge effects are not negligible"
                );
            }
            table
        }
        Command::Kirchhoff { t } => kirchhoff_table(*t, ctl)?,
        Command::Gp { p_max, alphas } => {
            let (table, failing) = gp_table(*p_max, alphas, ctl)?;
            if !failing.is_empty() {
                violation = Some(format!(
                    "g_p extrapolation off by more than {GP_TOLERANCE:e} for p = {failing:?}"
                ));
            }
            table
        }
    };

    if common.provenance {
        spec.provenance = Some(provenance(&table));
    }
    output::write(&table, &spec)?;
    if let Some(path) = &spec.svg_path {
        std::fs::write(path, figure1_svg(&table))?;
    }
    match violation {
        Some(msg) => Err(CliError::Violation(msg)),
        None => Ok(()),
    }
}
