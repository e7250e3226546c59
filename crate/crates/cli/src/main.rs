use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qcasimir::basis_change::{certificate_report, triangular_solve, CertificateReport};
use qcasimir::casimir::{eigenvalue_direct, eigenvalue_via_hc, CasimirImage, Engine};
use qcasimir::exact_arith::Rational;
use qcasimir::root_data::{build_root_system, LieType, RootSystem, RootSystemJson, Weight};
use qcasimir::verify::{self, Suite};
use qcasimir::Error;

/// Exact Harish-Chandra images of higher-order quantum Casimir elements.
#[derive(Parser, Debug)]
#[command(name = "qcasimir", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Antisym,
    Hooks,
}

#[derive(clap::Args, Debug, Clone)]
struct System {
    #[arg(long = "type", value_parser = parse_type)]
    lie_type: LieType,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root system data: ρ, positive and simple roots, fundamental weights.
    Roots(System),
    /// Weyl character χ(λ).
    Char {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Ch G_{n,k} in the group algebra.
    Gnk {
        #[command(flatten)]
        sys: System,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "antisym")]
        route: Route,
    },
    /// The image C⁰_{n,ℓ}; exits 1 when (q⁻¹−q)^ℓ does not divide.
    Hc {
        #[command(flatten)]
        sys: System,
        #[arg(long)]
        ell: u32,
        /// Print numerator and denominator instead of dividing.
        #[arg(long)]
        fraction: bool,
    },
    /// Eigenvalue of C_{n,ℓ} on L(λ) at q = s⁴, by both routes.
    Eig {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value = "2")]
        s: String,
    },
    /// The hook expansion of Ch G_{n,k}: coefficients and highest weights.
    Hook {
        #[command(flatten)]
        sys: System,
        #[arg(long)]
        k: u32,
    },
    /// Triangular change of basis e_k ↔ G_{n,k} and the generation certificate.
    SolveBasis(System),
    /// Run a verification suite; exits 1 if any case fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "type", value_parser = parse_type)]
        lie_type: Option<LieType>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 10)]
        weights: usize,
        #[arg(long)]
        max_rank: Option<usize>,
    },
}

fn parse_type(s: &str) -> Result<LieType, String> {
    s.parse::<LieType>().map_err(|e| e.to_string())
}

/// Errors split into configuration problems (exit 2) and failed
/// verifications (exit 1).
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDivisible(_) | Error::CertificateFailed(_) | Error::SingularLeadingCoefficient(_) => {
                Failure::Verification(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn system(sys: &System) -> Result<RootSystem, Failure> {
    Ok(build_root_system(sys.lie_type, sys.rank)?)
}

fn pretty<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn cmd_roots(sys: &System) -> Outcome {
    let rs = system(sys)?;
    Ok(match sys.format {
        Format::Json => pretty(&RootSystemJson::from(&rs)),
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{c}\n\\hline\n\\Phi^+ \\\\\n\\hline\n");
            for a in &rs.positive_roots {
                s.push_str(&format!("${}$ \\\\\n", latex_weight(a)));
            }
            s.push_str(&format!("\\hline\n\\rho = {} \\\\\n\\end{{tabular}}", latex_weight(&rs.rho)));
            s
        }
        Format::Text => {
            let roots: Vec<String> = rs.positive_roots.iter().map(Weight::to_string).collect();
            format!(
                "{}{}\nrho = {}\nc_n = {}\npositive roots ({}): {}",
                rs.lie_type,
                rs.rank,
                rs.rho,
                rs.c_n,
                roots.len(),
                roots.join(" ")
            )
        }
    })
}

fn latex_weight(w: &Weight) -> String {
    let mut parts = Vec::new();
    for (i, &d) in w.doubled().iter().enumerate() {
        if d == 0 {
            continue;
        }
        let c = Rational::new(d as i64, 2).expect("nonzero denominator");
        let coeff = if c.is_one() {
            String::new()
        } else if c == Rational::from_integer(-1) {
            "-".into()
        } else if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", c.numer(), c.denom())
        };
        parts.push(format!("{coeff}\\varepsilon_{{{}}}", i + 1));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn parse_lambda(rs: &RootSystem, s: &str) -> Result<Weight, Failure> {
    let w: Weight = s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    if w.rank() != rs.rank {
        return Err(Error::RankMismatch {
            left: w.rank(),
            right: rs.rank,
        }
        .into());
    }
    Ok(w)
}

fn render_image(img: &CasimirImage, format: Format) -> String {
    match format {
        Format::Json => pretty(img),
        Format::Latex => match &img.denominator {
            None => img.body.to_latex(),
            Some(d) => format!("\\frac{{{}}}{{{}}}", img.body.to_latex(), d.to_latex()),
        },
        Format::Text => match &img.denominator {
            None => img.body.to_string(),
            Some(d) => format!("({}) / ({d})", img.body),
        },
    }
}

fn cmd_char(sys: &System, lambda: &str) -> Outcome {
    let rs = system(sys)?;
    let lam = parse_lambda(&rs, lambda)?;
    let chi = qcasimir::weyl_charring::weyl_character(&rs, &lam)?;
    Ok(match sys.format {
        Format::Json => pretty(&json!({"type": rs.lie_type, "rank": rs.rank, "lambda": lam, "character": chi})),
        Format::Latex => chi.to_latex(),
        Format::Text => chi.to_string(),
    })
}

fn cmd_gnk(sys: &System, k: u32, route: Route) -> Outcome {
    let engine = Engine::new(&system(sys)?)?;
    let img = match route {
        Route::Antisym => engine.ch_g_via_antisym(k)?,
        Route::Hooks => engine.ch_g_via_hooks(k)?,
    };
    Ok(render_image(&img, sys.format))
}

fn cmd_hc(sys: &System, ell: u32, fraction: bool) -> Outcome {
    let engine = Engine::new(&system(sys)?)?;
    let img = if fraction {
        engine.hc_image_fraction(ell)?
    } else {
        engine.hc_image(ell)?
    };
    Ok(render_image(&img, sys.format))
}

fn cmd_eig(sys: &System, lambda: &str, ell: u32, s: &str) -> Outcome {
    let rs = system(sys)?;
    let lam = parse_lambda(&rs, lambda)?;
    let s: Rational = s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let engine = Engine::new(&rs)?;
    let direct = eigenvalue_direct(&rs, &lam, ell, &s)?;
    let via_image = eigenvalue_via_hc(&engine, &lam, ell, &s)?;
    let out = match sys.format {
        Format::Json => pretty(&json!({
            "type": rs.lie_type, "rank": rs.rank, "lambda": lam, "ell": ell, "s": s,
            "direct": direct, "via_image": via_image, "agree": direct == via_image,
        })),
        Format::Latex => format!("\\omega_{{{lam}}}(C_{{{},{ell}}}) = {}", rs.rank, latex_rational(&direct)),
        Format::Text => format!("direct    = {direct}\nvia image = {via_image}"),
    };
    if direct != via_image {
        return Err(Failure::Verification(format!("eigenvalue routes disagree:\n{out}")));
    }
    Ok(out)
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn cmd_hook(sys: &System, k: u32) -> Outcome {
    let engine = Engine::new(&system(sys)?)?;
    let terms = engine.hook_terms(k)?;
    Ok(match sys.format {
        Format::Json => pretty(
            &terms
                .iter()
                .map(|(c, w)| json!({"coeff": c, "weight": w}))
                .collect::<Vec<_>>(),
        ),
        Format::Latex => terms
            .iter()
            .map(|(c, w)| {
                if w.is_zero() {
                    format!("({})", c.to_latex())
                } else {
                    format!("({})\\,\\chi({})", c.to_latex(), latex_weight(w))
                }
            })
            .collect::<Vec<_>>()
            .join(" + "),
        Format::Text => terms
            .iter()
            .map(|(c, w)| if w.is_zero() { format!("({c})") } else { format!("({c}) chi({w})") })
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn cmd_solve_basis(sys: &System) -> Outcome {
    let engine = Engine::new(&system(sys)?)?;
    let sol = triangular_solve(&engine)?;
    let cert: CertificateReport = certificate_report(&engine)?;
    let out = match sys.format {
        Format::Json => pretty(&json!({"solution": sol, "certificate": cert})),
        Format::Latex | Format::Text => {
            let mut s = String::new();
            for step in &sol.steps {
                s.push_str(&format!(
                    "g_{k} = {g}\n  ({den}) E_{k} = {num}\n",
                    k = step.k,
                    g = step.g,
                    den = step.den,
                    num = step.num.to_string().replace('E', "G"),
                ));
            }
            let extra: Vec<String> = cert.extra_generators.iter().map(|g| format!("chi({})", g.weight)).collect();
            s.push_str(&format!(
                "solved range: 1..={}\nextra generators: {}\ncertificate: {}",
                cert.solved_range,
                if extra.is_empty() { "none".into() } else { extra.join(", ") },
                if cert.passed() { "pass" } else { "FAIL" }
            ));
            s
        }
    };
    if let Some(c) = cert.first_failure() {
        return Err(Failure::Verification(format!("{out}\nfirst failing check: {}", c.name)));
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    lie_type: Option<LieType>,
    rank: Option<usize>,
    seed: u64,
    points: usize,
    weights: usize,
    max_rank: Option<usize>,
) -> Outcome {
    let suite: Suite = suite.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let systems = match (lie_type, rank) {
        (Some(t), Some(n)) => {
            build_root_system(t, n)?;
            Some(vec![(t, n)])
        }
        (Some(t), None) => Some(verify::DESK_SYSTEMS.iter().copied().filter(|(u, _)| *u == t).collect()),
        (None, Some(_)) => return Err(Failure::Usage("--rank requires --type".into())),
        (None, None) => None,
    };
    let mut opts = verify::Options {
        systems,
        seed,
        points,
        weights,
        ..verify::Options::default()
    };
    if let Some(m) = max_rank {
        opts.max_rank = m;
        opts.max_rank_d = m;
    }
    let report = verify::run(suite, &opts)?;
    let out = pretty(&report);
    if !report.passed() {
        for c in report.failures() {
            eprintln!("FAIL {}: {}", c.id, c.detail);
        }
        return Err(Failure::Verification(out));
    }
    Ok(out)
}

/// Writes to stdout, tolerating a closed pipe (e.g. `| head`).
fn emit(out: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{out}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Roots(sys) => cmd_roots(sys),
        Command::Char { sys, lambda } => cmd_char(sys, lambda),
        Command::Gnk { sys, k, route } => cmd_gnk(sys, *k, *route),
        Command::Hc { sys, ell, fraction } => cmd_hc(sys, *ell, *fraction),
        Command::Eig { sys, lambda, ell, s } => cmd_eig(sys, lambda, *ell, s),
        Command::Hook { sys, k } => cmd_hook(sys, *k),
        Command::SolveBasis(sys) => cmd_solve_basis(sys),
        Command::Verify {
            suite,
            lie_type,
            rank,
            seed,
            points,
            weights,
            max_rank,
        } => cmd_verify(suite, *lie_type, *rank, *seed, *points, *weights, *max_rank),
    };
    match result {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(msg)) => {
            // reports go to stdout even on failure; diagnostics to stderr
            if msg.starts_with('{') {
                emit(&msg);
            } else {
                eprintln!("verification failed: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
