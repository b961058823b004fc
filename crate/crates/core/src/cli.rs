//! Command-line front end. Exit codes: 0 success or matches found, 1 no result
//! or failed verification, 2 usage or guard error.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::Registry;
use crate::error::Error;
use crate::matcher::{solve_cy4_reduced, solve_cy4_system, CY4Solution, Matcher};
use crate::rangespec::parse_side;
use crate::ratpoly::{RatPoly, Rational};
use crate::verify;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO_RESULT: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cyflat",
    version,
    about = "Hilbert polynomials of polarized families and flat-family matches"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert polynomial of one family member
    Compute {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Pairs of members sharing a Hilbert polynomial, e.g.
    /// `match enriques:m=1..10 blownup-plane:p=3..6,k=1..35`
    Match {
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Solutions of the fourfold system
    Solve {
        #[arg(long)]
        p_max: Option<i64>,
        #[arg(long)]
        r_max: Option<i64>,
        #[arg(long)]
        xyz_max: Option<i64>,
        /// Restrict to y = 2x, z = x
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        x_max: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Check the published identities
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a polynomial at a rational point
    Eval {
        /// Canonical key, e.g. "1,0,2"
        #[arg(long, conflicts_with = "family")]
        poly: Option<String>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(short = 'p', allow_hyphen_values = true)]
    pub p: Option<i64>,
    #[arg(short = 'k', allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(short = 'm', allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(short = 'r', allow_hyphen_values = true)]
    pub r: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub deg: Option<i64>,
    #[arg(short = 'x', allow_hyphen_values = true)]
    pub x: Option<i64>,
    #[arg(short = 'y', allow_hyphen_values = true)]
    pub y: Option<i64>,
    #[arg(short = 'z', allow_hyphen_values = true)]
    pub z: Option<i64>,
}

impl FamilyArgs {
    fn named(&self) -> Vec<(String, i64)> {
        [
            ("p", self.p),
            ("k", self.k),
            ("m", self.m),
            ("r", self.r),
            ("deg", self.deg),
            ("x", self.x),
            ("y", self.y),
            ("z", self.z),
        ]
        .into_iter()
        .filter_map(|(n, v)| v.map(|v| (n.to_string(), v)))
        .collect()
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Output failures on stdout/stderr are ignored, as with `println!` into a closed pipe.
macro_rules! say {
    ($w:expr, $($arg:tt)*) => {{ let _ = writeln!($w, $($arg)*); }};
}

fn usage(io: &mut Io, e: impl std::fmt::Display) -> u8 {
    say!(io.err, "error: {e}");
    EXIT_USAGE
}

fn print_json(io: &mut Io, v: &Value) {
    say!(
        io.out,
        "{}",
        serde_json::to_string(v).expect("json values serialize")
    );
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(&Registry::builtin(), args, out, err)
}

pub fn run_with<I, T>(reg: &Registry, args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(io.err, "{rendered}");
            } else {
                let _ = write!(io.out, "{rendered}");
            }
            return code;
        }
    };
    match cli.command {
        Command::Compute { family, json } => compute(reg, &mut io, &family, json),
        Command::Match { left, right, json } => match_cmd(reg, &mut io, &left, &right, json),
        Command::Solve {
            p_max,
            r_max,
            xyz_max,
            reduced,
            x_max,
            json,
        } => solve(&mut io, p_max, r_max, xyz_max, reduced, x_max, json),
        Command::VerifyPaper { json } => verify_paper(reg, &mut io, json),
        Command::Eval {
            poly,
            family,
            at,
            json,
        } => eval(reg, &mut io, poly, &family, &at, json),
    }
}

fn build_family(
    reg: &Registry,
    args: &FamilyArgs,
) -> Result<(crate::FamilyDescriptor, RatPoly), Error> {
    let name = args
        .family
        .as_deref()
        .ok_or_else(|| Error::Parse("--family is required".into()))?;
    reg.get(name)?.build_named(&args.named())
}

fn compute(reg: &Registry, io: &mut Io, args: &FamilyArgs, json: bool) -> u8 {
    let (desc, poly) = match build_family(reg, args) {
        Ok(v) => v,
        Err(e) => return usage(io, e),
    };
    if json {
        print_json(
            io,
            &json!({
                "polynomial": poly.key(),
                "text": poly.to_text(),
                "coefficients": poly,
                "descriptor": desc.to_json(),
            }),
        );
    } else {
        say!(io.out, "{}", poly.to_text());
        say!(io.out, "family: {}", desc.label());
        for a in &desc.assumptions {
            say!(io.out, "assumes: {a}");
        }
    }
    EXIT_OK
}

fn match_cmd(reg: &Registry, io: &mut Io, left: &str, right: &str, json: bool) -> u8 {
    let sides = parse_side(reg, left).and_then(|l| Ok((l, parse_side(reg, right)?)));
    let (l, r) = match sides {
        Ok(v) => v,
        Err(e) => return usage(io, e),
    };
    let matches = match Matcher::new(reg.clone()).match_sides(&l, &r) {
        Ok(m) => m,
        Err(e) => return usage(io, e),
    };
    if json {
        print_json(
            io,
            &json!({ "matches": matches.iter().map(|m| m.to_json()).collect::<Vec<_>>() }),
        );
    } else if matches.is_empty() {
        say!(io.out, "no matches");
    } else {
        for m in &matches {
            say!(
                io.out,
                "{} <-> {} : {}",
                m.left.label(),
                m.right.label(),
                m.polynomial.to_text()
            );
        }
        say!(
            io.err,
            "{} match(es); {}",
            matches.len(),
            crate::matcher::INTERPRETATION
        );
    }
    if matches.is_empty() {
        EXIT_NO_RESULT
    } else {
        EXIT_OK
    }
}

fn solve(
    io: &mut Io,
    p_max: Option<i64>,
    r_max: Option<i64>,
    xyz_max: Option<i64>,
    reduced: bool,
    x_max: Option<i64>,
    json: bool,
) -> u8 {
    let result: Result<Vec<CY4Solution>, Error> = if reduced {
        if p_max.is_some() || r_max.is_some() || xyz_max.is_some() {
            return usage(io, "--reduced takes only --x-max");
        }
        match x_max {
            Some(x) => solve_cy4_reduced(x),
            None => return usage(io, "--reduced requires --x-max"),
        }
    } else {
        if x_max.is_some() {
            return usage(io, "--x-max requires --reduced");
        }
        match (p_max, r_max, xyz_max) {
            (Some(p), Some(r), Some(xyz)) => solve_cy4_system(p, r, xyz),
            _ => return usage(io, "--p-max, --r-max and --xyz-max are required"),
        }
    };
    let sols = match result {
        Ok(s) => s,
        Err(e) => return usage(io, e),
    };
    if json {
        print_json(io, &json!({ "solutions": sols }));
    } else if sols.is_empty() {
        say!(io.out, "no solutions");
    } else {
        for s in &sols {
            say!(io.out, "p={} r={} x={} y={} z={}", s.p, s.r, s.x, s.y, s.z);
        }
    }
    EXIT_OK
}

fn verify_paper(reg: &Registry, io: &mut Io, json: bool) -> u8 {
    let report = verify::run(reg);
    if json {
        print_json(
            io,
            &serde_json::to_value(&report).expect("report serializes"),
        );
    } else {
        for c in &report.checks {
            say!(
                io.out,
                "{} {}: {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
    }
    match report.first_failure() {
        None => EXIT_OK,
        Some(c) => {
            say!(io.err, "verification failed: {}", c.name);
            EXIT_NO_RESULT
        }
    }
}

fn parse_point(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("bad point {s:?}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&d) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

fn eval(
    reg: &Registry,
    io: &mut Io,
    poly: Option<String>,
    family: &FamilyArgs,
    at: &str,
    json: bool,
) -> u8 {
    let p = match poly {
        Some(key) => RatPoly::from_key(&key),
        None => build_family(reg, family).map(|(_, p)| p),
    };
    let (p, t) = match p.and_then(|p| Ok((p, parse_point(at)?))) {
        Ok(v) => v,
        Err(e) => return usage(io, e),
    };
    let value = RatPoly::constant(p.eval(&t)).key();
    let value = if value.is_empty() {
        "0".to_string()
    } else {
        value
    };
    if json {
        print_json(
            io,
            &json!({ "polynomial": p.key(), "at": RatPoly::constant(t).to_text(), "value": value }),
        );
    } else {
        say!(io.out, "{value}");
    }
    EXIT_OK
}
