use std::fmt;

use serde_json::{json, Value};
use unsharp::channels::{catalog, mueller_matrix, validate_cptp, ChannelFamily, ChannelSpec, KrausChannel, TimeFamily};
use unsharp::energycost::{
    ad_energy_trajectory, energy_cost_in, triangle_sweep, EnergyReport, EntropyUnit, MeasurementModel,
};
use unsharp::markovianity::{
    bias_trajectory, detect_revivals, linspace, sharpness_trajectory, trace_distance_trajectory,
    ONE_WAY_NOTE,
};
use unsharp::povm::{compare_with_table, evolve};
use unsharp::qubit::{observable_from_angles, BlochVector, DensityMatrix};
use unsharp::selftest;

use crate::args::*;
use crate::output::{num, pretty, Report, Table};

/// A failure with its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn physics(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<unsharp::Error> for CliError {
    fn from(e: unsharp::Error) -> Self {
        let code = if e.is_physics() { 3 } else { 2 };
        Self { code, message: e.to_string() }
    }
}

/// Rendered output, plus an error to report after it has been written.
pub struct Outcome {
    pub text: String,
    pub failure: Option<CliError>,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Self { text, failure: None }
    }
}

type CmdResult = Result<Outcome, CliError>;

pub fn run(cli: &Cli) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::Channel(ChannelCmd::Show(a)) => channel_show(a, format),
        Command::Povm(PovmCmd::Evolve(a)) => povm_evolve(a, format),
        Command::Markov(MarkovCmd::Scan(a)) => markov_scan(a, format),
        Command::Energy(EnergyCmd::Point(a)) => energy_point(a, format),
        Command::Energy(EnergyCmd::Sweep(a)) => energy_sweep(a, format),
        Command::Energy(EnergyCmd::AdTrajectory(a)) => ad_trajectory(a, format),
        Command::Selftest(a) => run_selftest(a, format),
    }
}

fn load_spec(arg: &str) -> Result<ChannelSpec, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::usage(format!("cannot read spec {arg}: {e}")))?
    };
    Ok(ChannelSpec::from_json(&text)?)
}

fn load_family(a: &SpecArgs) -> Result<ChannelFamily, CliError> {
    Ok(catalog(load_spec(&a.spec)?)?)
}

fn channel_at(family: &ChannelFamily, raw: bool, t: f64) -> Result<KrausChannel, CliError> {
    Ok(if raw { family.printed_at(t)? } else { family.at(t)? })
}

fn spec_json(spec: &ChannelSpec) -> Value {
    serde_json::from_str(&spec.to_json()).expect("spec json")
}

fn channel_show(a: &ChannelArgs, format: Format) -> CmdResult {
    let family = load_family(&a.spec)?;
    let ch = channel_at(&family, a.spec.raw_kraus, a.time)?;
    let d = validate_cptp(&ch);
    let m = mueller_matrix(&ch);

    let text = match format {
        Format::Csv => {
            let mut r = Report::default();
            r.push("kind", family.kind().name()).push("time", a.time);
            for (name, v) in family.spec().params() {
                r.push(format!("param_{name}"), v);
            }
            for (k, op) in ch.ops().iter().enumerate() {
                for i in 0..2 {
                    for j in 0..2 {
                        r.push(format!("kraus{k}_{i}{j}_re"), op[(i, j)].re);
                        r.push(format!("kraus{k}_{i}{j}_im"), op[(i, j)].im);
                    }
                }
            }
            for i in 0..4 {
                for j in 0..4 {
                    r.push(format!("mueller_{i}{j}"), m.matrix()[(i, j)]);
                }
            }
            r.push("complete", d.complete)
                .push("trace_preserving", d.trace_preserving)
                .push("unital", d.unital)
                .push("cptp", d.is_cptp())
                .push("choi_min_eig", d.choi_min_eig)
                .push("completeness_residual", d.completeness_residual)
                .push("unitality_residual", d.unitality_residual);
            r.csv()
        }
        Format::Json => {
            let kraus: Vec<Value> = ch
                .ops()
                .iter()
                .map(|op| {
                    json!((0..2)
                        .map(|i| (0..2).map(|j| json!([num(op[(i, j)].re), num(op[(i, j)].im)])).collect::<Vec<_>>())
                        .collect::<Vec<_>>())
                })
                .collect();
            let mueller: Vec<Vec<Value>> =
                (0..4).map(|i| (0..4).map(|j| num(m.matrix()[(i, j)])).collect()).collect();
            pretty(&json!({
                "spec": spec_json(family.spec()),
                "time": num(a.time),
                "kraus": kraus,
                "mueller": mueller,
                "diagnosis": {
                    "complete": d.complete,
                    "trace_preserving": d.trace_preserving,
                    "unital": d.unital,
                    "cptp": d.is_cptp(),
                    "choi_min_eig": num(d.choi_min_eig),
                    "completeness_residual": num(d.completeness_residual),
                    "unitality_residual": num(d.unitality_residual),
                },
            }))
        }
    };
    let failure = ch.ensure_cptp().err().map(CliError::from);
    Ok(Outcome { text, failure })
}

fn povm_evolve(a: &PovmArgs, format: Format) -> CmdResult {
    let family = load_family(&a.spec)?;
    let ch = channel_at(&family, a.spec.raw_kraus, a.time)?;
    let (theta, phi) = (a.angles.theta, a.angles.phi);
    let bs = evolve(&ch, theta, phi)?;

    let mut r = Report::default();
    r.push("kind", family.kind().name())
        .push("theta", theta)
        .push("phi", phi)
        .push("time", a.time)
        .push("bias", bs.x)
        .push("m_x", bs.m.x)
        .push("m_y", bs.m.y)
        .push("m_z", bs.m.z)
        .push("sharpness", bs.sharpness);
    if a.table_check {
        let c = compare_with_table(family.spec(), theta, phi, a.time)?;
        r.push("printed_bias", c.printed.bias)
            .push("printed_sharpness", c.printed.sharpness)
            .push("bias_deviation", c.bias_deviation)
            .push("sharpness_deviation", c.sharpness_deviation)
            .push("bias_status", c.printed.bias_status.as_str())
            .push("sharpness_status", c.printed.sharpness_status.as_str())
            .push("phi_spread", c.phi_spread);
    }
    Ok(match format {
        Format::Csv => r.csv(),
        Format::Json => pretty(&r.json()),
    }
    .into())
}

fn markov_scan(a: &MarkovArgs, format: Format) -> CmdResult {
    if a.steps < 2 {
        return Err(CliError::usage("--steps must be at least 2"));
    }
    let family = load_family(&a.spec)?;
    let grid = linspace(0.0, a.t_max, a.steps)?;

    // the witness family, possibly with the tabulated Kraus operators
    struct Raw<'a>(&'a ChannelFamily);
    impl TimeFamily for Raw<'_> {
        fn channel_at(&self, t: f64) -> unsharp::Result<KrausChannel> {
            self.0.printed_at(t)
        }
    }
    let fam: &dyn TimeFamily = if a.spec.raw_kraus { &Raw(&family) } else { &family };

    let sharpness = sharpness_trajectory(fam, a.theta, a.phi, &grid)?;
    let bias = bias_trajectory(fam, a.theta, a.phi, &grid)?;
    let n = observable_from_angles(a.theta, a.phi).direction();
    let rho1 = DensityMatrix::from_bloch(&BlochVector::new(n)?);
    let rho2 = DensityMatrix::maximally_mixed(2)?;
    let distance = trace_distance_trajectory(fam, &rho1, &rho2, &grid)?;
    let verdict = detect_revivals(&sharpness, a.tol);

    let mut table = Table::new(&["t", "sharpness", "bias", "trace_distance"]);
    for (i, &t) in grid.iter().enumerate() {
        table.push(vec![
            t.into(),
            sharpness.values()[i].into(),
            bias.values()[i].into(),
            distance.values()[i].into(),
        ]);
    }
    Ok(match format {
        Format::Csv => {
            let mut out = table.csv();
            if verdict.monotone {
                out.push_str("verdict=monotone\n");
            } else {
                out.push_str(&format!(
                    "verdict=revivals:{},max_rise={}\n",
                    verdict.revivals.len(),
                    crate::output::fmt_g(verdict.max_rise)
                ));
            }
            out
        }
        Format::Json => pretty(&json!({
            "spec": spec_json(family.spec()),
            "theta": num(a.theta),
            "phi": num(a.phi),
            "rows": table.json(),
            "verdict": {
                "monotone": verdict.monotone,
                "revivals": verdict.revivals.iter().map(|r| json!({
                    "t_start": num(r.t_start),
                    "t_end": num(r.t_end),
                    "rise": num(r.rise),
                })).collect::<Vec<_>>(),
                "max_rise": num(verdict.max_rise),
                "note": ONE_WAY_NOTE,
            },
        })),
    }
    .into())
}

fn unit(t: &Thermal) -> EntropyUnit {
    if t.nats {
        EntropyUnit::Nats
    } else {
        EntropyUnit::Bits
    }
}

fn unit_name(u: EntropyUnit) -> &'static str {
    match u {
        EntropyUnit::Bits => "bits",
        EntropyUnit::Nats => "nats",
    }
}

fn energy_point(a: &EnergyPointArgs, format: Format) -> CmdResult {
    let model = MeasurementModel::new(a.x, a.lambda)
        .with_angles(a.angles.theta, a.angles.phi)
        .with_thermal(a.thermal.omega, a.thermal.beta);
    let rep: EnergyReport = energy_cost_in(&model, unit(&a.thermal))?;
    let mut r = Report::default();
    r.push("x", model.x)
        .push("lambda", model.lambda)
        .push("theta", model.theta)
        .push("phi", model.phi)
        .push("omega_s", model.omega_s)
        .push("beta", model.beta)
        .push("entropy_unit", unit_name(rep.unit))
        .push("delta_e_s", rep.delta_e_s)
        .push("delta_s_m", rep.delta_s_m)
        .push("e_cost", rep.e_cost)
        .push("p_plus", rep.p_plus)
        .push("p_minus", rep.p_minus);
    for (i, e) in rep.memory_eigenvalues.iter().enumerate() {
        r.push(format!("memory_eigenvalue_{}", i + 1), *e);
    }
    Ok(match format {
        Format::Csv => r.csv(),
        Format::Json => pretty(&r.json()),
    }
    .into())
}

fn energy_sweep(a: &EnergySweepArgs, format: Format) -> CmdResult {
    let template = MeasurementModel::new(0.0, 0.0)
        .with_angles(a.angles.theta, a.angles.phi)
        .with_thermal(a.thermal.omega, a.thermal.beta);
    let rows = triangle_sweep(a.grid, &template, unit(&a.thermal))?;
    let mut table = Table::new(&["x", "lambda", "delta_e_s", "delta_s_m", "e_cost"]);
    for row in &rows {
        table.push(vec![
            row.x.into(),
            row.lambda.into(),
            row.report.delta_e_s.into(),
            row.report.delta_s_m.into(),
            row.report.e_cost.into(),
        ]);
    }
    Ok(match format {
        Format::Csv => table.csv(),
        Format::Json => pretty(&table.json()),
    }
    .into())
}

fn ad_trajectory(a: &AdTrajectoryArgs, format: Format) -> CmdResult {
    if a.thermal.nats {
        return Err(CliError::usage("--nats is not supported for ad-trajectory"));
    }
    let grid = linspace(0.0, a.t_max, a.steps)?;
    let rows = ad_energy_trajectory(a.coupling, a.thermal.beta, a.thermal.omega, &grid)?;
    let mut table = Table::new(&["tau", "G", "x", "lambda", "e_cost"]);
    for r in &rows {
        table.push(vec![r.tau.into(), r.g.into(), r.x.into(), r.lambda.into(), r.e_cost.into()]);
    }
    Ok(match format {
        Format::Csv => table.csv(),
        Format::Json => pretty(&table.json()),
    }
    .into())
}

fn run_selftest(a: &SelftestArgs, format: Format) -> CmdResult {
    if a.samples == 0 {
        return Err(CliError::usage("--samples must be positive"));
    }
    let outcomes = selftest::run(a.seed, a.samples)?;
    let mut table = Table::new(&["check", "samples", "worst", "tolerance", "status"]);
    for o in &outcomes {
        table.push(vec![
            o.name.into(),
            (o.samples as f64).into(),
            o.worst.into(),
            o.tolerance.into(),
            if o.passed() { "pass" } else { "fail" }.into(),
        ]);
    }
    let text = match format {
        Format::Csv => table.csv(),
        Format::Json => pretty(&table.json()),
    };
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    let failure = (failed > 0).then(|| CliError::physics(format!("{failed} self-test check(s) failed")));
    Ok(Outcome { text, failure })
}
