//! Command-line front end: certified values of beta, zeta, and the Euler
//! numbers, exact pi-forms, and the identity verification harness.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure,
//! 3 no known closed form.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_traits::ToPrimitive;
use std::process::ExitCode;

use betaforge::identities::{
    beta_odd_exact, beta_via_polygamma, euler_recurrence, euler_via_beta, verify_all_with_options,
    zeta_even_exact, zeta_via_polygamma, IdentityId, IdentityReport,
};
use betaforge::numeric_core::BallReal;
use betaforge::report::MachineRecord;
use betaforge::series_eval::{beta_series, zeta_series};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_NO_CLOSED_FORM: u8 = 3;

#[derive(Parser)]
#[command(
    name = "betaforge",
    version,
    about = "Certified special values of the Dirichlet beta function, Riemann zeta function, and Euler numbers",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dirichlet beta function at a positive integer argument
    Beta {
        s: u32,
        /// Working precision in bits (32..=4096)
        #[arg(long = "prec", env = "BETAFORGE_PREC", default_value_t = 128)]
        prec: u32,
        /// Print the exact pi-form (odd s only)
        #[arg(long)]
        exact: bool,
        /// Machine-readable dual-route record
        #[arg(long)]
        json: bool,
    },
    /// Riemann zeta function at an integer argument >= 2
    Zeta {
        s: u32,
        #[arg(long = "prec", env = "BETAFORGE_PREC", default_value_t = 128)]
        prec: u32,
        /// Print the exact pi-form (even s only)
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Even-indexed Euler number E_n for even n
    Euler {
        two_s: u64,
        #[arg(long)]
        json: bool,
    },
    /// Cross-validate every identity up to an argument bound
    Verify {
        #[arg(long = "max-s", default_value_t = 8)]
        max_s: u32,
        #[arg(long = "prec", env = "BETAFORGE_PREC", default_value_t = 128)]
        prec: u32,
        #[arg(long)]
        json: bool,
        /// Negative-control hook: use the literal (sign-uncorrected)
        /// even-zeta closed form, which must fail verification.
        #[arg(long, hide = true)]
        uncorrected_eq17: bool,
    },
    /// The table of beta(1)..beta(5) constants
    Constants {
        #[arg(long = "prec", env = "BETAFORGE_PREC", default_value_t = 128)]
        prec: u32,
    },
}

fn check_precision(prec: u32) -> Result<(), String> {
    if !(32..=4096).contains(&prec) {
        return Err(format!("precision must be in [32, 4096], got {prec}"));
    }
    Ok(())
}

/// Truncated decimal with the radius-justified digit count.
fn render_decimal(ball: &BallReal, prec: u32) -> String {
    let requested = ((prec as f64) * std::f64::consts::LOG10_2) as usize - 4;
    let digits = ball.justified_digits(requested);
    format!("{} (+/- 10^-{})", ball.decimal_truncated(digits), digits)
}

fn dual_route_record(
    identity: IdentityId,
    s: u32,
    prec: u32,
    left: BallReal,
    right: BallReal,
) -> MachineRecord {
    let pass = left.intersects(&right);
    let residual_bound = left.residual_bound(&right);
    MachineRecord::from_report(&IdentityReport {
        identity,
        s,
        precision: prec,
        left,
        right,
        residual_bound,
        pass,
    })
}

fn cmd_beta(s: u32, prec: u32, exact: bool, json: bool) -> Result<u8, String> {
    check_precision(prec)?;
    if s < 1 {
        return Err("beta requires s >= 1".into());
    }
    if exact {
        if s % 2 == 0 {
            eprintln!("no known closed form for beta at even arguments");
            return Ok(EXIT_NO_CLOSED_FORM);
        }
        println!("{}", beta_odd_exact((s - 1) / 2));
        return Ok(0);
    }
    let left = beta_via_polygamma(s, prec).map_err(|e| e.to_string())?;
    if json {
        let right = beta_series(s, prec).map_err(|e| e.to_string())?;
        let record = dual_route_record(IdentityId::BetaViaPolygamma, s, prec, left, right);
        println!("{}", record.to_json_line());
        return Ok(0);
    }
    println!("{}", render_decimal(&left, prec));
    Ok(0)
}

fn cmd_zeta(s: u32, prec: u32, exact: bool, json: bool) -> Result<u8, String> {
    check_precision(prec)?;
    if s < 2 {
        return Err("zeta requires s >= 2 (the series diverges at s = 1)".into());
    }
    if exact {
        if s % 2 == 1 {
            eprintln!("no known closed form for zeta at odd arguments");
            return Ok(EXIT_NO_CLOSED_FORM);
        }
        println!("{}", zeta_even_exact(s / 2));
        return Ok(0);
    }
    let left = zeta_via_polygamma(s, prec).map_err(|e| e.to_string())?;
    if json {
        let right = zeta_series(s, prec).map_err(|e| e.to_string())?;
        let record = dual_route_record(IdentityId::ZetaViaPolygamma, s, prec, left, right);
        println!("{}", record.to_json_line());
        return Ok(0);
    }
    println!("{}", render_decimal(&left, prec));
    Ok(0)
}

fn cmd_euler(two_s: u64, json: bool) -> Result<u8, String> {
    if two_s % 2 != 0 {
        return Err(format!("euler requires an even index, got {two_s}"));
    }
    if two_s > 1000 {
        return Err(format!("euler index must be at most 1000, got {two_s}"));
    }
    let via_beta = euler_via_beta(two_s).map_err(|e| e.to_string())?;
    if json {
        let recurrence = euler_recurrence(two_s).map_err(|e| e.to_string())?;
        let left = BallReal::new(via_beta.value.clone(), 0u32.into(), 0);
        let right = BallReal::new(recurrence.value.clone(), 0u32.into(), 0);
        let record =
            dual_route_record(IdentityId::EulerClosedForm, two_s as u32, 0, left, right);
        println!("{}", record.to_json_line());
        return Ok(if record.pass { 0 } else { EXIT_VERIFY_FAILED });
    }
    println!("{}", via_beta.value);
    Ok(0)
}

fn cmd_verify(max_s: u32, prec: u32, json: bool, uncorrected: bool) -> Result<u8, String> {
    check_precision(prec)?;
    if max_s < 1 {
        return Err("verify requires --max-s >= 1".into());
    }
    let reports = verify_all_with_options(max_s, prec, uncorrected);
    let mut all_pass = true;
    for report in &reports {
        all_pass &= report.pass;
        if json {
            println!("{}", MachineRecord::from_report(report).to_json_line());
        } else {
            println!(
                "{} {:<28} s={:<3} prec={} residual<={:.3e}",
                if report.pass { "PASS" } else { "FAIL" },
                report.identity.as_str(),
                report.s,
                report.precision,
                report.residual_bound.to_f64().unwrap_or(f64::NAN),
            );
        }
    }
    if !json {
        println!(
            "{} identities checked, {}",
            reports.len(),
            if all_pass { "all passed" } else { "FAILURES PRESENT" }
        );
    }
    Ok(if all_pass { 0 } else { EXIT_VERIFY_FAILED })
}

fn cmd_constants(prec: u32) -> Result<u8, String> {
    check_precision(prec)?;
    let digits = 12usize;
    for s in 1..=5u32 {
        let ball = beta_via_polygamma(s, prec).map_err(|e| e.to_string())?;
        let d = ball.justified_digits(digits);
        let value = ball.decimal_truncated(d);
        match s {
            1 => println!("beta(1) = pi/4 = {value}"),
            2 => println!("beta(2) = G = {value}"),
            _ => println!("beta({s}) = {value}"),
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let outcome = match cli.command {
        Command::Beta { s, prec, exact, json } => cmd_beta(s, prec, exact, json),
        Command::Zeta { s, prec, exact, json } => cmd_zeta(s, prec, exact, json),
        Command::Euler { two_s, json } => cmd_euler(two_s, json),
        Command::Verify {
            max_s,
            prec,
            json,
            uncorrected_eq17,
        } => cmd_verify(max_s, prec, json, uncorrected_eq17),
        Command::Constants { prec } => cmd_constants(prec),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
