use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use spinshift::cli::{format_sig9, sweep_rows, write_sweep_csv, SweepConfig};
use spinshift::shift::{
    shift_full, shift_nrl, shift_oracle, PotentialAverages, ShiftResult, TreatmentMode,
};
use spinshift::spinor::FourMomentum;
use spinshift::state::ElectronState;
use spinshift::units::{
    elementary_charge_natural, scenario_estimate, Scenario, ELECTRON_MASS_MEV,
};
use spinshift::verify::{run_verification, Tolerances};

#[derive(Parser)]
#[command(
    name = "spinshift",
    version,
    about = "Energy shifts of free electron states in averaged electromagnetic potentials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    Nrl,
}

#[derive(Clone, Copy, ValueEnum)]
enum CouplingArg {
    /// |e| = 1 (normalized sweeps)
    Unit,
    /// |e| = sqrt(4 pi alpha)
    Natural,
}

impl CouplingArg {
    fn value(self) -> f64 {
        match self {
            CouplingArg::Unit => 1.0,
            CouplingArg::Natural => elementary_charge_natural(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run all verification suites and report per-suite pass counts
    Verify {
        /// Override every suite tolerance with one value
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Energy shift for one state: oracle and closed form side by side
    #[command(allow_negative_numbers = true)]
    Shift {
        /// Momentum along z (MeV)
        #[arg(long, default_value_t = 0.0)]
        k: f64,
        /// Spin-up coefficient as RE,IM
        #[arg(long, value_parser = parse_complex, default_value = "1,0")]
        lambda_plus: Complex64,
        /// Spin-down coefficient as RE,IM
        #[arg(long, value_parser = parse_complex, default_value = "0,0")]
        lambda_minus: Complex64,
        #[arg(long, default_value_t = 0.0)]
        a0: f64,
        #[arg(long, default_value_t = 0.0)]
        a1: f64,
        #[arg(long, default_value_t = 0.0)]
        a2: f64,
        #[arg(long, default_value_t = 0.0)]
        a3: f64,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "unit")]
        coupling: CouplingArg,
        /// Particle mass (MeV)
        #[arg(long, default_value_t = ELECTRON_MASS_MEV)]
        mass: f64,
    },
    /// Momentum sweep of the normalized shift curves to CSV
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long, default_value_t = 0.0)]
        k_min: f64,
        #[arg(long, default_value_t = 3.0)]
        k_max: f64,
        #[arg(long, default_value_t = 61)]
        steps: usize,
        #[arg(long, default_value_t = ELECTRON_MASS_MEV)]
        mass: f64,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Field/apparatus estimates for a weak-magnet benchmark
    #[command(allow_negative_numbers = true)]
    Scenario {
        #[arg(long, default_value_t = 3e-4)]
        b_tesla: f64,
        #[arg(long, default_value_t = 1.0)]
        d_meters: f64,
        #[arg(long, default_value_t = 1.001)]
        gamma: f64,
    },
}

fn parse_complex(raw: &str) -> Result<Complex64, String> {
    let (re, im) = raw
        .split_once(',')
        .ok_or_else(|| format!("expected RE,IM, got '{raw}'"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|e| format!("bad real part '{re}': {e}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|e| format!("bad imaginary part '{im}': {e}"))?;
    Ok(Complex64::new(re, im))
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn runtime_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(1)
}

fn print_shift_table(closed: &ShiftResult, oracle: &ShiftResult) {
    println!(
        "{:<10} {:>16} {:>16} {:>12}",
        "component", "closed-form", "oracle", "|deviation|"
    );
    let labels = ["A0", "A1", "A2", "A3"];
    for (mu, label) in labels.iter().enumerate() {
        let c = closed.by_component[mu];
        let o = oracle.by_component[mu];
        println!(
            "{:<10} {:>16} {:>16} {:>12.3e}",
            label,
            format_sig9(c),
            format_sig9(o),
            (c - o).abs()
        );
    }
    println!(
        "{:<10} {:>16} {:>16} {:>12.3e}",
        "total",
        format_sig9(closed.total),
        format_sig9(oracle.total),
        (closed.total - oracle.total).abs()
    );
}

fn run_shift(
    k: f64,
    lambda_plus: Complex64,
    lambda_minus: Complex64,
    potentials: PotentialAverages,
    mode: ModeArg,
    coupling: f64,
    mass: f64,
) -> Result<(), String> {
    let p = FourMomentum::z_aligned(mass, k).map_err(|e| e.to_string())?;
    let state = ElectronState::new(p, lambda_plus, lambda_minus).map_err(|e| e.to_string())?;
    let (mode, closed) = match mode {
        ModeArg::Full => (TreatmentMode::Full, shift_full(&state, &potentials, coupling)),
        ModeArg::Nrl => (TreatmentMode::Nrl, shift_nrl(&state, &potentials, coupling)),
    };
    let oracle = shift_oracle(&state, &potentials, mode, coupling).map_err(|e| e.to_string())?;
    println!(
        "mode {}   |e| = {}   k = {} MeV   E = {} MeV",
        mode,
        format_sig9(coupling),
        format_sig9(k),
        format_sig9(p.energy())
    );
    print_shift_table(&closed, &oracle);
    Ok(())
}

fn run_scenario(b_tesla: f64, d_meters: f64, gamma: f64) -> Result<(), String> {
    let scenario = Scenario {
        b_field_tesla: b_tesla,
        apparatus_scale_m: d_meters,
        lorentz_gamma: gamma,
    };
    let report = scenario_estimate(&scenario).map_err(|e| e.to_string())?;
    let fmt_ratio = |r: f64| {
        if r.is_nan() {
            "undefined".to_string()
        } else if r.is_infinite() {
            "infinite".to_string()
        } else {
            format_sig9(r)
        }
    };
    println!("B = {b_tesla} T, d = {d_meters} m, gamma = {gamma}");
    println!(
        "|e|<A3> estimate          : {} MeV",
        format_sig9(report.a3_natural_mev)
    );
    println!(
        "shift, ultrarelativistic  : {} MeV",
        format_sig9(report.shift_ultrarelativistic_mev)
    );
    println!(
        "shift at gamma            : {} MeV",
        format_sig9(report.shift_at_gamma_mev)
    );
    println!("ratio ultra/slow          : {}", fmt_ratio(report.ratio));
    println!(
        "reference estimate        : {} MeV (ratio to computed: {})",
        format_sig9(report.reference_shift_mev),
        fmt_ratio(report.reference_shift_mev / report.shift_ultrarelativistic_mev)
    );
    println!(
        "Zeeman comparison         : {} eV",
        format_sig9(report.zeeman_ev)
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { tolerance } => {
            let tolerances = match tolerance {
                Some(t) if t.is_finite() && t > 0.0 => Tolerances::uniform(t),
                Some(t) => return usage_error(&format!("tolerance must be > 0, got {t}")),
                None => Tolerances::default(),
            };
            let report = run_verification(&tolerances);
            print!("{report}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Shift {
            k,
            lambda_plus,
            lambda_minus,
            a0,
            a1,
            a2,
            a3,
            mode,
            coupling,
            mass,
        } => {
            let potentials = PotentialAverages::new(a0, a1, a2, a3);
            match run_shift(
                k,
                lambda_plus,
                lambda_minus,
                potentials,
                mode,
                coupling.value(),
                mass,
            ) {
                Ok(()) => ExitCode::SUCCESS,
                Err(message) => usage_error(&message),
            }
        }
        Command::Sweep {
            k_min,
            k_max,
            steps,
            mass,
            out,
        } => {
            let config = SweepConfig {
                k_min,
                k_max,
                steps,
                mass,
            };
            if let Err(e) = config.validate() {
                return usage_error(&e.to_string());
            }
            let rows = match sweep_rows(&config) {
                Ok(rows) => rows,
                Err(e) => return runtime_error(&e.to_string()),
            };
            let file = match File::create(&out) {
                Ok(f) => f,
                Err(e) => return runtime_error(&format!("cannot write {}: {e}", out.display())),
            };
            let mut writer = BufWriter::new(file);
            if let Err(e) = write_sweep_csv(&rows, &mut writer) {
                return runtime_error(&format!("cannot write {}: {e}", out.display()));
            }
            println!("wrote {} rows to {}", rows.len(), out.display());
            ExitCode::SUCCESS
        }
        Command::Scenario {
            b_tesla,
            d_meters,
            gamma,
        } => match run_scenario(b_tesla, d_meters, gamma) {
            Ok(()) => ExitCode::SUCCESS,
            Err(message) => usage_error(&message),
        },
    }
}
