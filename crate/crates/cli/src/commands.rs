use serde_json::{json, Value};

use sqc_core::algebra::{deformation_factor, deformation_sweep, h_curve, ChainConfig};
use sqc_core::crossover::{crossover_point, find_stationary_points};
use sqc_core::oracle::sector_spectrum;
use sqc_core::spectrum::{
    coefficients_closed, coefficients_recursive, reduced_energies, resonant_energies,
    solve_dressed, subspace, weak_coupling_energies, DressedState, ExcitationSubspace,
    LadderParams, Normalization,
};
use sqc_core::{Error, Execution, HalfInt};

use crate::table::{nums, Cell, Table};

/// What a command produced; the caller picks the rendering.
pub struct Report {
    pub table: Table,
    pub json: Value,
}

impl Report {
    fn rows(table: Table) -> Self {
        let json = table.to_json_rows();
        Report { table, json }
    }
}

pub type CmdResult = Result<Report, Error>;

pub fn deform(n: usize, l: f64) -> CmdResult {
    let r = deformation_factor(n, l)?.value;
    let mut table = Table::new(["n", "l", "R"]);
    table.push(vec![n.into(), l.into(), r.into()]);
    Ok(Report {
        table,
        json: json!({ "n": n, "l": l, "R": r }),
    })
}

pub fn deform_sweep(n: usize, l_start: f64, l_end: f64, steps: usize) -> CmdResult {
    let mut table = Table::new(["l", "R"]);
    for (l, r) in deformation_sweep(n, l_start, l_end, steps, Execution::default())? {
        table.push(vec![l.into(), r.into()]);
    }
    Ok(Report::rows(table))
}

pub fn hcurve(deformation: f64, m_min: f64, m_max: f64, steps: usize) -> CmdResult {
    let mut table = Table::new(["m", "h"]);
    for (m, h) in h_curve(deformation, m_min, m_max, steps)? {
        table.push(vec![m.into(), h.into()]);
    }
    Ok(Report::rows(table))
}

/// Sector check shared by the spectrum and oracle commands: a parity
/// mismatch between `u` and `N/2` means the sector holds no states.
fn collective_ladder(config: &ChainConfig, u: HalfInt) -> Result<ExcitationSubspace, Error> {
    let r = config.collective_spin();
    if (u.doubled() - r.doubled()) % 2 != 0 {
        return Err(Error::EmptySector(u.to_string()));
    }
    subspace(u, r)
}

fn ladder_params(config: &ChainConfig) -> Result<LadderParams, Error> {
    LadderParams::new(
        config.deformation().value,
        config.detuning(),
        config.coupling,
    )
}

pub struct SpectrumArgs {
    pub config: ChainConfig,
    pub u: HalfInt,
}

fn state_json(index: usize, s: &DressedState, c0: Option<&DressedState>) -> Value {
    json!({
        "index": index,
        "v": s.interaction_eigenvalue,
        "E": s.total_energy,
        "n_min": s.n_min,
        "c_unit": nums(&s.coefficients),
        "c_c0": c0.map(|c| nums(&c.coefficients)),
    })
}

pub fn spectrum(args: &SpectrumArgs) -> CmdResult {
    let config = &args.config;
    let sub = collective_ladder(config, args.u)?;
    let params = ladder_params(config)?;
    let r = params.deformation;
    let states = solve_dressed(&sub, &params, config.qubit_freq)?;

    let mut header: Vec<String> = ["kind", "R", "index", "v", "E", "n_min"]
        .map(String::from)
        .into();
    header.extend((0..sub.dim()).map(|k| format!("c_{k}")));
    let mut table = Table::new(header);
    let state_row = |kind: &str, i: usize, s: &DressedState| {
        let mut row: Vec<Cell> = vec![
            kind.into(),
            r.into(),
            i.into(),
            s.interaction_eigenvalue.into(),
            s.total_energy.into(),
            s.n_min.into(),
        ];
        row.extend(s.coefficients.iter().map(|&c| Cell::from(c)));
        row
    };

    let mut states_json = Vec::new();
    let c0: Vec<Option<DressedState>> = states
        .iter()
        .map(|s| s.with_normalization(Normalization::C0IsOne).ok())
        .collect();
    for (i, s) in states.iter().enumerate() {
        table.push(state_row("state_unit", i, s));
        states_json.push(state_json(i, s, c0[i].as_ref()));
    }
    for (i, s) in c0.iter().enumerate() {
        if let Some(s) = s {
            table.push(state_row("state_c0", i, s));
        }
    }

    let four_qubit = config.n_qubits == 4 && args.u == HalfInt::from_int(1);
    let mut weak_json = Value::Null;
    let mut resonant_json = Value::Null;
    let level_row = |kind: &str, i: usize, v: f64| -> Vec<Cell> {
        vec![
            kind.into(),
            r.into(),
            i.into(),
            v.into(),
            (config.qubit_freq + v).into(),
        ]
    };
    if four_qubit && params.detuning != 0.0 {
        if let Ok(levels) =
            weak_coupling_energies(r, params.detuning, params.coupling, config.qubit_freq)
        {
            let vs: Vec<f64> = levels.iter().map(|e| e - config.qubit_freq).collect();
            for (i, &v) in vs.iter().enumerate() {
                table.push(level_row("weak_coupling", i, v));
            }
            weak_json = json!({ "v": nums(&vs), "E": nums(&levels) });
        }
    }
    if four_qubit && params.detuning == 0.0 {
        let cmp = resonant_energies(r, params.coupling)?;
        for (i, &v) in cmp.canonical.iter().enumerate() {
            table.push(level_row("resonant_canonical", i, v));
        }
        for (i, &v) in cmp.printed.iter().enumerate() {
            table.push(level_row("resonant_printed", i, v));
        }
        resonant_json = json!({
            "canonical": nums(&cmp.canonical),
            "printed": nums(&cmp.printed),
        });
    }

    Ok(Report {
        table,
        json: json!({
            "n": config.n_qubits,
            "l": config.spacing,
            "u": args.u.value(),
            "r": sub.total_spin.value(),
            "R": r,
            "states": states_json,
            "weak_coupling": weak_json,
            "resonant": resonant_json,
        }),
    })
}

fn nearest(x: f64, among: &[f64]) -> f64 {
    among
        .iter()
        .copied()
        .min_by(|a, b| (a - x).abs().total_cmp(&(b - x).abs()))
        .unwrap_or(f64::NAN)
}

pub fn oracle_compare(args: &SpectrumArgs) -> CmdResult {
    let config = &args.config;
    let oracle = sector_spectrum(config, args.u)?;
    let sub = collective_ladder(config, args.u)?;
    let params = ladder_params(config)?;
    let collective: Vec<f64> = solve_dressed(&sub, &params, config.qubit_freq)?
        .iter()
        .map(|s| s.total_energy)
        .collect();

    let mut table = Table::new(["kind", "index", "energy", "nearest", "deviation"]);
    let mut side = |kind: &str, levels: &[f64], other: &[f64]| -> (Vec<Value>, f64) {
        let mut rows = Vec::new();
        let mut worst: f64 = 0.0;
        for (i, &e) in levels.iter().enumerate() {
            let m = nearest(e, other);
            let dev = (e - m).abs();
            worst = worst.max(dev);
            table.push(vec![kind.into(), i.into(), e.into(), m.into(), dev.into()]);
            rows.push(json!({ "index": i, "energy": e, "nearest": m, "deviation": dev }));
        }
        (rows, worst)
    };
    let (collective_json, max_dev) = side("collective", &collective, &oracle);
    let (oracle_json, _) = side("oracle", &oracle, &collective);
    table.push(vec![
        "max_deviation".into(),
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        max_dev.into(),
    ]);

    Ok(Report {
        table,
        json: json!({
            "n": config.n_qubits,
            "l": config.spacing,
            "u": args.u.value(),
            "R": params.deformation,
            "collective": collective_json,
            "oracle": oracle_json,
            "max_deviation": max_dev,
        }),
    })
}

/// The table entries as printed, and `c_3` with `sqrt 6` on both summands of
/// its second term.
fn table_formulas(vt: &[f64], r: f64) -> ([f64; 4], f64) {
    let s2 = 2f64.sqrt();
    let s6 = 6f64.sqrt();
    let lead3 = vt[0] * vt[1] * vt[2] / (12.0 * s6 * r.powf(1.5));
    (
        [
            1.0,
            vt[0] / (6.0 * r).sqrt(),
            vt[0] * vt[1] / (6.0 * s2 * r) - 1.0 / s2,
            lead3 - (vt[2] + 2.0 * s6 * vt[0]) / (12.0 * r.sqrt()),
        ],
        lead3 - (s6 * vt[2] + 2.0 * s6 * vt[0]) / (12.0 * r.sqrt()),
    )
}

pub struct Table1Args {
    pub spacing: f64,
    pub qubit_freq: f64,
    pub photon_freq: f64,
    pub coupling: f64,
}

pub fn table1(args: &Table1Args) -> CmdResult {
    let config = ChainConfig::new(
        4,
        args.spacing,
        args.qubit_freq,
        args.photon_freq,
        args.coupling,
    )?;
    let sub = subspace(HalfInt::from_int(1), HalfInt::from_int(2))?;
    let params = ladder_params(&config)?;
    let undeformed = LadderParams {
        deformation: 1.0,
        ..params
    };
    let states = solve_dressed(&sub, &params, config.qubit_freq)?;
    let reference = solve_dressed(&sub, &undeformed, config.qubit_freq)?;

    let mut table = Table::new([
        "index",
        "v",
        "n",
        "R",
        "recursive",
        "closed",
        "table_printed",
        "table_rederived",
        "eigenvector",
        "undeformed",
        "ratio",
    ]);
    for (i, (s, s_ref)) in states.iter().zip(&reference).enumerate() {
        let v = s.interaction_eigenvalue;
        let rec = coefficients_recursive(v, &sub, &params)?;
        let closed = coefficients_closed(v, &sub, &params).ok();
        let (printed, c3) = table_formulas(&reduced_energies(v, &sub, &params), params.deformation);
        let eig = s.with_normalization(Normalization::C0IsOne).ok();
        let base = s_ref.with_normalization(Normalization::C0IsOne).ok();
        for n in 0..sub.dim() {
            let rederived = if n == 3 { c3 } else { printed[n] };
            let e = eig.as_ref().map(|x| x.coefficients[n]);
            let b = base.as_ref().map(|x| x.coefficients[n]);
            let ratio = e.zip(b).map(|(e, b)| e.abs() / b.abs());
            table.push(vec![
                i.into(),
                v.into(),
                n.into(),
                params.deformation.into(),
                rec[n].into(),
                closed.as_ref().map(|c| c[n]).into(),
                printed[n].into(),
                rederived.into(),
                e.into(),
                b.into(),
                ratio.into(),
            ]);
        }
    }
    Ok(Report::rows(table))
}

pub fn crossover(n: usize) -> CmdResult {
    let rep = crossover_point(n)?;
    let margin = 0.1 / (2 * n - 1) as f64;
    let unit = find_stationary_points(n, margin, 1.0 - margin)?.len();
    let half = rep.stationary_points.len();
    let joined = rep
        .stationary_points
        .iter()
        .map(|&l| crate::table::fmt_float(l))
        .collect::<Vec<_>>()
        .join(";");
    let mut table = Table::new([
        "n",
        "crossover_l",
        "R_at_crossover",
        "spins_per_wavelength",
        "extrema_half",
        "extrema_unit",
        "stationary_points",
    ]);
    table.push(vec![
        n.into(),
        rep.crossover_spacing.into(),
        rep.deformation_at_crossover.into(),
        rep.spins_per_wavelength.into(),
        half.into(),
        unit.into(),
        Cell::Text(joined),
    ]);
    Ok(Report {
        table,
        json: json!({
            "n": n,
            "crossover_l": rep.crossover_spacing,
            "R_at_crossover": rep.deformation_at_crossover,
            "spins_per_wavelength": rep.spins_per_wavelength,
            "stationary_points": nums(&rep.stationary_points),
            "extrema_counts": { "half": half, "unit": unit },
        }),
    })
}
