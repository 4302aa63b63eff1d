//! Command-line front end: argument parsing, command dispatch and artifact
//! writing. The `dirac-well` binary is a thin wrapper around [`main`].

use std::f64::consts::PI;
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::field::{DiracField, Normalization, Region};
use crate::limits::{convergence_report, LimitReport};
use crate::output::{
    manifest_path, resolve_output, state_row, state_table, to_json_string, write_atomic, Cell,
    Format, RunManifest, StateSummary, Table, STATE_COLUMNS,
};
use crate::solver::{find_eigenstates, EigenState};
use crate::table1::{reproduce_with, Table1Report};
use crate::units::{PhysicalConstants, Well, WellConfig};

pub const DEFAULT_SWEEP: [f64; 4] = [0.01, 0.1, 1.0, 10.0];

#[derive(Debug, Parser)]
#[command(
    name = "dirac-well",
    version,
    about = "Dirac electron bound states in a finite cylindrical well"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound-state energies and wave numbers for one well.
    Solve(SolveArgs),
    /// Ground states of the 10 nm well at four depths against reference values.
    Table1(Table1Args),
    /// Spinor, current and charge density on a polar grid.
    Field(FieldArgs),
    /// Ground-state convergence toward the hard-wall limit over several depths.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormalizeArg {
    Raw,
    UnitCharge,
}

impl From<NormalizeArg> for Normalization {
    fn from(n: NormalizeArg) -> Self {
        match n {
            NormalizeArg::Raw => Normalization::Raw,
            NormalizeArg::UnitCharge => Normalization::UnitCharge,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    /// Data file; the manifest goes next to it. Without it, data goes to
    /// stdout and the manifest to stderr.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[arg(long, default_value_t = 10.0)]
    pub radius_nm: f64,
    #[arg(long)]
    pub potential_ev: f64,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Defaults to every bound state.
    #[arg(long)]
    pub max_states: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct Table1Args {
    #[command(flatten)]
    pub out: OutputArgs,
    /// Multiplies ħc before solving (negative control for the comparison).
    #[arg(long, hide = true, default_value_t = 1.0)]
    pub perturb_hbar_c: f64,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[arg(long, default_value_t = 10.0)]
    pub radius_nm: f64,
    #[arg(long)]
    pub potential_ev: f64,
    /// State selector such as `l0n1`.
    #[arg(long, default_value = "l0n1")]
    pub state: StateSelector,
    #[arg(long, default_value_t = 30.0)]
    pub rmax_nm: f64,
    /// Radial points on [0, rmax].
    #[arg(long, default_value_t = 301)]
    pub samples: usize,
    /// Azimuthal points on [0, 2π).
    #[arg(long, default_value_t = 1)]
    pub phi_samples: usize,
    #[arg(long, value_enum, default_value = "raw")]
    pub normalize: NormalizeArg,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 10.0)]
    pub radius_nm: f64,
    /// Comma-separated depths in eV; sorted ascending before use.
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_SWEEP)]
    pub potentials: Vec<f64>,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// `l<int>n<int>`, with n counted from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateSelector {
    pub l: u32,
    pub n: u32,
}

impl FromStr for StateSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("state selector must look like l0n1, got {s:?}");
        let rest = s.strip_prefix('l').ok_or_else(bad)?;
        let (l, n) = rest.split_once('n').ok_or_else(bad)?;
        let l: u32 = l.parse().map_err(|_| bad())?;
        let n: u32 = n.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok(Self { l, n })
    }
}

impl fmt::Display for StateSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l{}n{}", self.l, self.n)
    }
}

/// Failure classes, mapped onto exit codes 2 and 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidConfig(_) | Error::UnknownState { .. } => CliError::Usage(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Compute(m) => write!(f, "error: {m}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produced: the data to emit, plus whether it counts as a
/// success for the exit code.
struct Outcome {
    data: String,
    extra_files: Vec<(PathBuf, String)>,
    manifest: RunManifest,
    success: bool,
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Runs a parsed command line; `Ok(false)` means the command completed but
/// reported a failed check.
pub fn run(cli: &Cli) -> CliResult<bool> {
    let (outcome, out) = match &cli.command {
        Command::Solve(a) => (solve(a)?, &a.out),
        Command::Table1(a) => (table1(a)?, &a.out),
        Command::Field(a) => (field(a)?, &a.out),
        Command::Sweep(a) => (sweep(a)?, &a.out),
    };
    emit(outcome, out)
}

fn emit(mut outcome: Outcome, out: &OutputArgs) -> CliResult<bool> {
    let io = |e: Error| CliError::Compute(e.to_string());
    match &out.output {
        Some(path) => {
            let path = resolve_output(path);
            write_atomic(&path, &outcome.data).map_err(io)?;
            outcome
                .manifest
                .output_paths
                .push(path.display().to_string());
            for (suffix, contents) in &outcome.extra_files {
                let mut name = path.clone().into_os_string();
                name.push(suffix);
                let extra = PathBuf::from(name);
                write_atomic(&extra, contents).map_err(io)?;
                outcome
                    .manifest
                    .output_paths
                    .push(extra.display().to_string());
            }
            let mpath = manifest_path(&path);
            outcome
                .manifest
                .output_paths
                .push(mpath.display().to_string());
            write_atomic(&mpath, &to_json_string(&outcome.manifest).map_err(io)?).map_err(io)?;
        }
        None => {
            print!("{}", outcome.data);
            for (_, contents) in &outcome.extra_files {
                println!();
                print!("{contents}");
            }
            eprint!("{}", to_json_string(&outcome.manifest).map_err(io)?);
        }
    }
    Ok(outcome.success)
}

fn finite_positive(name: &str, v: f64) -> CliResult<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{name} must be positive and finite, got {v}"
        )))
    }
}

fn solve(a: &SolveArgs) -> CliResult<Outcome> {
    let config = WellConfig::new(a.radius_nm, a.potential_ev, a.l);
    let well = config.to_internal()?;
    let states = find_eigenstates(&well, a.max_states.unwrap_or(usize::MAX))?;
    let mut manifest = RunManifest::new("solve", *well.constants());
    manifest.config = Some(config);
    manifest.states_solved = states
        .iter()
        .map(|s| StateSummary::new(a.potential_ev, s))
        .collect();
    if states.is_empty() {
        manifest
            .notes
            .push("no bound state found in the window".into());
    }
    Ok(Outcome {
        data: state_table(&states).render(a.out.format.into())?,
        extra_files: Vec::new(),
        manifest,
        success: true,
    })
}

pub const TABLE1_COLUMNS: [&str; 14] = [
    "potential_ev",
    "reference_E_kin_meV",
    "E_kin_meV",
    "E_kin_abs_delta_meV",
    "reference_zeta_per_m",
    "zeta_per_m",
    "zeta_rel_delta",
    "reference_xi_per_m",
    "xi_per_m",
    "xi_rel_delta",
    "reference_log10_kappa",
    "log10_kappa",
    "log10_kappa_abs_delta",
    "pass",
];

pub fn table1_table(report: &Table1Report) -> Table {
    let mut t = Table::new(TABLE1_COLUMNS.to_vec());
    for r in &report.rows {
        t.push(vec![
            r.reference.potential_ev.into(),
            r.reference.kinetic_mev.into(),
            r.state.energy_kinetic_mev().into(),
            r.kinetic_abs_delta_mev.into(),
            r.reference.zeta_per_m.into(),
            r.state.wave_numbers.zeta_per_m().into(),
            r.zeta_rel_delta.into(),
            r.reference.xi_per_m.into(),
            r.state.wave_numbers.xi_per_m().into(),
            r.xi_rel_delta.into(),
            r.reference_log10_kappa().into(),
            r.state.log10_kappa().into(),
            r.log10_kappa_abs_delta.into(),
            r.pass.into(),
        ]);
    }
    t
}

fn table1(a: &Table1Args) -> CliResult<Outcome> {
    finite_positive("--perturb-hbar-c", a.perturb_hbar_c)?;
    let mut constants = PhysicalConstants::CODATA_2018;
    constants.hbar_c *= a.perturb_hbar_c;
    let report = reproduce_with(constants)?;
    let mut manifest = RunManifest::new("table1", constants);
    manifest.states_solved = report
        .rows
        .iter()
        .map(|r| StateSummary::new(r.reference.potential_ev, &r.state))
        .collect();
    if a.perturb_hbar_c != 1.0 {
        manifest.notes.push(format!(
            "hbar_c scaled by {} before solving",
            a.perturb_hbar_c
        ));
    }
    let failed = report.rows.iter().filter(|r| !r.pass).count();
    manifest.notes.push(if failed == 0 {
        "all rows within tolerance".to_string()
    } else {
        format!("{failed} of {} rows outside tolerance", report.rows.len())
    });
    Ok(Outcome {
        data: table1_table(&report).render(a.out.format.into())?,
        extra_files: Vec::new(),
        manifest,
        success: report.all_pass(),
    })
}

pub const FIELD_COLUMNS: [&str; 11] = [
    "rho_nm",
    "phi_rad",
    "re_psi1",
    "im_psi1",
    "re_psi4",
    "im_psi4",
    "j_rho",
    "j_phi",
    "j_z",
    "charge_density",
    "region",
];

/// Field map, φ-major then ρ. ρ runs over `samples` evenly spaced points of
/// [0, rmax]; φ over `phi_samples` points of [0, 2π).
pub fn field_table(
    well: &Well,
    state: &EigenState,
    normalization: Normalization,
    rmax_nm: f64,
    samples: usize,
    phi_samples: usize,
) -> crate::Result<Table> {
    if samples == 0 || phi_samples == 0 {
        return Err(Error::InvalidConfig(
            "sample counts must be at least 1".into(),
        ));
    }
    if !(rmax_nm.is_finite() && rmax_nm >= 0.0) {
        return Err(Error::InvalidConfig(format!(
            "rmax must be non-negative and finite, got {rmax_nm}"
        )));
    }
    let field = DiracField::with_normalization(well, state, normalization)?;
    let mut t = Table::new(FIELD_COLUMNS.to_vec());
    for j in 0..phi_samples {
        let phi = 2.0 * PI * j as f64 / phi_samples as f64;
        for i in 0..samples {
            let rho = if samples == 1 {
                0.0
            } else {
                rmax_nm * i as f64 / (samples - 1) as f64
            };
            let region = Region::of(well, rho);
            let sp = field.spinor_in(rho, phi, region)?;
            let f = field.field_from_spinor(&sp);
            t.push(vec![
                rho.into(),
                phi.into(),
                sp.psi[0].re.into(),
                sp.psi[0].im.into(),
                sp.psi[3].re.into(),
                sp.psi[3].im.into(),
                f.j_rho.into(),
                f.j_phi.into(),
                f.j_z.into(),
                f.charge_density.into(),
                region.as_str().into(),
            ]);
        }
    }
    Ok(t)
}

fn field(a: &FieldArgs) -> CliResult<Outcome> {
    if a.samples == 0 || a.phi_samples == 0 {
        return Err(CliError::Usage(
            "--samples and --phi-samples must be at least 1".into(),
        ));
    }
    let config = WellConfig::new(a.radius_nm, a.potential_ev, a.state.l);
    let well = config.to_internal()?;
    let states = find_eigenstates(&well, usize::MAX)?;
    let state = states
        .iter()
        .find(|s| s.radial_n == a.state.n)
        .ok_or_else(|| Error::UnknownState {
            requested: a.state.to_string(),
            available: states
                .iter()
                .map(|s| s.label())
                .collect::<Vec<_>>()
                .join(", "),
        })?;
    let normalization: Normalization = a.normalize.into();
    let table = field_table(
        &well,
        state,
        normalization,
        a.rmax_nm,
        a.samples,
        a.phi_samples,
    )?;
    let mut manifest = RunManifest::new("field", *well.constants());
    manifest.config = Some(config);
    manifest.states_solved = vec![StateSummary::new(a.potential_ev, state)];
    manifest
        .notes
        .push(format!("normalization: {}", normalization.as_str()));
    Ok(Outcome {
        data: table.render(a.out.format.into())?,
        extra_files: Vec::new(),
        manifest,
        success: true,
    })
}

pub const SWEEP_COLUMNS: [&str; 8] = [
    "potential_ev",
    "E_kin_meV",
    "zeta_per_m",
    "zeta_infinite_per_m",
    "zeta_relative_gap",
    "skin_depth_nm",
    "outside_fraction",
    "log10_kappa",
];

pub fn sweep_table(report: &LimitReport) -> Table {
    let mut t = Table::new(SWEEP_COLUMNS.to_vec());
    let zinf = crate::units::per_nm_to_per_m(report.zeta_infinite);
    for (i, u) in report.potential_grid.iter().enumerate() {
        let s = &report.ground_states[i];
        t.push(vec![
            (*u).into(),
            s.energy_kinetic_mev().into(),
            s.wave_numbers.zeta_per_m().into(),
            zinf.into(),
            (1.0 - report.zeta_ground[i] / report.zeta_infinite).into(),
            report.skin_depths[i].into(),
            report.outside_fractions[i].into(),
            s.log10_kappa().into(),
        ]);
    }
    t
}

/// Every bound state of each well, prefixed with its depth.
fn sweep_states_table(potentials: &[f64], states: &[Vec<EigenState>]) -> Table {
    let mut columns = vec!["potential_ev"];
    columns.extend(STATE_COLUMNS);
    let mut t = Table::new(columns);
    for (u, list) in potentials.iter().zip(states) {
        for s in list {
            let mut row: Vec<Cell> = vec![(*u).into()];
            row.extend(state_row(s));
            t.push(row);
        }
    }
    t
}

/// Sorts ascending and drops repeated depths; returns notes on any change.
pub fn canonical_potentials(input: &[f64]) -> CliResult<(Vec<f64>, Vec<String>)> {
    if input.is_empty() {
        return Err(CliError::Usage("at least one potential is required".into()));
    }
    for &u in input {
        finite_positive("potential", u)?;
    }
    let mut notes = Vec::new();
    let mut sorted = input.to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted != input {
        notes.push("potentials were sorted into ascending order".to_string());
    }
    let before = sorted.len();
    sorted.dedup();
    if sorted.len() != before {
        notes.push("repeated potentials were dropped".to_string());
    }
    Ok((sorted, notes))
}

fn sweep(a: &SweepArgs) -> CliResult<Outcome> {
    let (potentials, notes) = canonical_potentials(&a.potentials)?;
    let wells = potentials
        .iter()
        .map(|&u| Well::new(a.radius_nm, u, 0))
        .collect::<crate::Result<Vec<_>>>()?;
    let report = convergence_report(a.radius_nm, &potentials)?;
    let states: Vec<crate::Result<Vec<EigenState>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = wells
            .iter()
            .map(|w| scope.spawn(move || find_eigenstates(w, usize::MAX)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver thread panicked"))
            .collect()
    });
    let states = states.into_iter().collect::<crate::Result<Vec<_>>>()?;

    let mut manifest = RunManifest::new("sweep", *wells[0].constants());
    manifest.config = Some(WellConfig::new(a.radius_nm, potentials[0], 0));
    manifest.notes = notes;
    manifest.notes.push(format!(
        "config lists the first depth; all depths: {potentials:?}"
    ));
    manifest.states_solved = potentials
        .iter()
        .zip(&states)
        .flat_map(|(u, list)| list.iter().map(move |s| StateSummary::new(*u, s)))
        .collect();

    let format: Format = a.out.format.into();
    let summary = sweep_table(&report);
    let detail = sweep_states_table(&potentials, &states);
    let (data, extra_files) = match format {
        Format::Csv => (
            summary.to_csv()?,
            vec![(PathBuf::from(".states.csv"), detail.to_csv()?)],
        ),
        Format::Json => (
            to_json_string(&json!({
                "radius_nm": a.radius_nm,
                "report": summary.to_json_value(),
                "states": detail.to_json_value(),
            }))?,
            Vec::new(),
        ),
    };
    Ok(Outcome {
        data,
        extra_files,
        manifest,
        success: true,
    })
}
